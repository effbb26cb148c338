//! TU-games, a priori unions and the transformations between them.

mod classify;
mod coalition;
mod explicit;
mod partition;
mod summary;
mod transform;

pub use classify::{
    classify_pair, classify_player, is_dummifying, is_dummifying_union, is_nullifying, PlayerClass,
};
pub use coalition::{Coalition, Members, PlayerId, Subsets};
pub use explicit::ExplicitGame;
pub use partition::Partition;
pub use summary::{Allocation, GameSummary};
pub use transform::{
    add_games, additive_part, dirac_compose, dirac_decompose, quotient_game, restrict, scale_game,
    scaled_dirac, sub_games, summary_from_explicit, union_floor_game, zero_normalize,
};

/// Largest player count for a dense characteristic function.
pub const MAX_EXPLICIT_PLAYERS: usize = 24;
