//! Egalitarian allocation values for cooperative games with a priori unions.
//!
//! The crate computes equal division and equal surplus division values, and
//! their extensions to games whose players are grouped into unions, from
//! either a full characteristic function ([`ExplicitGame`]) or the handful
//! of worths those values actually read ([`GameSummary`]). Around the values
//! it provides an axiom checker with random and exhaustive game generators,
//! the independence counterexample catalog, and an elevator cost-sharing
//! scenario builder.
//!
//! Everything numeric is generic over [`Scalar`]: `f64`/`f32` compare with
//! a relative tolerance of `1e-9`, rationals compare exactly.

pub mod axioms;
pub mod error;
pub mod game;
pub mod io;
pub mod scalar;
pub mod scenarios;
pub mod values;

pub use error::{Error, Result};
pub use game::{Allocation, Coalition, ExplicitGame, GameSummary, Partition, PlayerId};
pub use scalar::Scalar;
pub use values::{ValueKind, ValueSpec, VariantId};

pub use num_rational::{BigRational, Rational64};

/// Floating-point game.
pub type Game = ExplicitGame<f64>;
/// Exact game over 64-bit rationals.
pub type ExactGame = ExplicitGame<Rational64>;
pub type Summary = GameSummary<f64>;
pub type ExactSummary = GameSummary<Rational64>;
pub type Shares = Allocation<f64>;
pub type ExactShares = Allocation<Rational64>;
