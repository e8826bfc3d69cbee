use thiserror::Error;

use crate::coalition::Coalition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("player {player} is outside 1..={n}")]
    PlayerOutOfRange { player: usize, n: usize },
    #[error("games are limited to {max} players, got {n}")]
    TooManyPlayers { n: usize, max: usize },
    #[error("expected {expected} coalition values, got {found}")]
    ValueCount { expected: usize, found: usize },
    #[error("the empty coalition must have value 0")]
    NonzeroEmptyValue,
    #[error("coalition {coalition} is not contained in the carrier {carrier}")]
    OutsideCarrier { coalition: Coalition, carrier: Coalition },
    #[error("player {player} already belongs to {coalition}")]
    PlayerInCoalition { player: usize, coalition: Coalition },
    #[error("player {player} is not in {coalition}")]
    PlayerNotInCoalition { player: usize, coalition: Coalition },
    #[error("coalition must be nonempty")]
    EmptyCoalition,
    #[error("operation requires exactly {expected} players, game has {found}")]
    PlayerCount { expected: usize, found: usize },
    #[error("{operation} enumerates permutations and is capped at {cap} players (game has {n}){hint}")]
    PermutationCap { operation: &'static str, n: usize, cap: usize, hint: &'static str },
    #[error("{operation} is capped at {cap} players (game has {n})")]
    SizeCap { operation: &'static str, n: usize, cap: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("game is not convex: {0}")]
    ConvexityViolation(String),
    #[error("game is not super-additive: {0}")]
    NotSuperadditive(String),
    #[error("game has an empty core")]
    EmptyCore,
    #[error("tau is undefined: M = V but T != V")]
    DegenerateTau,
    #[error("allocation carrier {found} does not match game carrier {expected}")]
    CarrierMismatch { expected: Coalition, found: Coalition },
    #[error("allocation scheme has no entry for {0}")]
    IncompleteScheme(Coalition),
    #[error("invalid weighting: {0}")]
    InvalidWeighting(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("generator gave up after {attempts} attempts")]
    GeneratorExhausted { attempts: u64 },
    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = GameError> = std::result::Result<T, E>;
