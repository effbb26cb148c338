use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("player count {0} outside supported range 1..={max}", max = crate::game::MAX_EXPLICIT_PLAYERS)]
    PlayerCount(usize),

    #[error("worth vector has {got} entries, expected {expected}")]
    WorthLength { expected: usize, got: usize },

    #[error("the empty coalition must have worth 0")]
    EmptyWorth,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partition covers {partition} players but the game has {game}")]
    PartitionMismatch { game: usize, partition: usize },

    #[error("degenerate coalition: {0}")]
    DegenerateCoalition(String),

    #[error("games have different player counts ({0} vs {1})")]
    SizeMismatch(usize, usize),

    #[error("player {player} out of range for {n} players")]
    PlayerOutOfRange { player: usize, n: usize },

    #[error("summary is inconsistent: {0}")]
    InvalidSummary(String),

    #[error("variant {variant} is undefined here: {reason}")]
    VariantDomain { variant: String, reason: String },

    #[error("unknown value identifier `{0}`")]
    UnknownValue(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("building spec error: {0}")]
    Spec(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
