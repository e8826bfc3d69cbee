//! Exact solvers for cooperative transferable-utility games.
//!
//! Games store a value for every coalition of up to 16 players. All
//! arithmetic is exact: every routine is generic over a [`Scalar`] (an exact
//! ordered field), and the crate root fixes the usual choice through the
//! [`Game`] and [`Rational`] aliases.
//!
//! ```
//! use tugames::{fixtures, solutions, Rational};
//!
//! let game = fixtures::table1::<Rational>();
//! let (tau, _) = solutions::tau(&game).unwrap();
//! assert_eq!(tau.to_string(), "1=18/11 2=18/11 3=18/11 4=12/11");
//! ```

pub mod analysis;
pub mod coalition;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod game;
pub mod generators;
pub mod permutation;
pub mod predicates;
pub mod scalar;
pub mod solutions;

pub use coalition::{Coalition, PlayerId, MAX_PLAYERS};
pub use error::{GameError, Result};
pub use game::{Allocation, GameAggregates, TuGame};
pub use permutation::PermutationOrder;
pub use scalar::Scalar;
pub use solutions::SolutionMethod;

/// Arbitrary-precision exact rational.
pub type Rational = num_rational::BigRational;
/// 64-bit exact rational; faster, but intermediate values may overflow.
pub type Rational64 = num_rational::Rational64;

pub type Game = TuGame<Rational>;
pub type Game64 = TuGame<Rational64>;
pub type RationalAllocation = Allocation<Rational>;
