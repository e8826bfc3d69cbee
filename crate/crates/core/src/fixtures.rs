//! Small named games used throughout the test suites and shipped as `.tug`
//! files under `fixtures/`.

use crate::coalition::Coalition;
use crate::game::TuGame;
use crate::scalar::Scalar;

/// The convex 4-player game whose τ-value fails to encourage the grand
/// coalition.
pub fn table1<S: Scalar>() -> TuGame<S> {
    TuGame::from_fn(4, |a| {
        let v = match a.mask() {
            0b0011 | 0b0101 => 2,
            0b0110 | 0b1010 | 0b1100 => 1,
            0b0111 => 4,
            0b1011 | 0b1101 | 0b1110 => 3,
            0b1111 => 6,
            // singletons and {1,4}
            _ => 0,
        };
        S::from_i64(v)
    })
    .expect("fixture is well formed")
}

/// [`table1`] restricted to `ids`, labels preserved.
pub fn table1_restricted<S: Scalar>(ids: &[usize]) -> TuGame<S> {
    let coalition = Coalition::from_ids(ids.iter().copied()).expect("valid ids");
    table1::<S>().subgame(coalition).expect("ids inside {1,2,3,4}")
}

/// Symmetric 3-player game with `v_i = 0`, `v_ij = pair`, `v_N = grand`.
pub fn symmetric3<S: Scalar>(pair: S, grand: S) -> TuGame<S> {
    TuGame::from_fn(3, |a| match a.len() {
        2 => pair.clone(),
        3 => grand.clone(),
        _ => S::zero(),
    })
    .expect("fixture is well formed")
}

/// Super-additive and non-convex, yet its core is nonempty.
pub fn superadditive_nonconvex<S: Scalar>() -> TuGame<S> {
    symmetric3(S::one(), S::from_frac(3, 2))
}

/// Super-additive with an empty core (`S = 1 < 3/2`).
pub fn empty_core3<S: Scalar>() -> TuGame<S> {
    symmetric3(S::one(), S::one())
}

/// A 3-player game whose pair surpluses violate the triangle inequality
/// (`M_12 = 4 > M_13 + M_23 = 2`).
pub fn broken_triangle<S: Scalar>() -> TuGame<S> {
    TuGame::from_fn(3, |a| {
        S::from_i64(match a.mask() {
            0b011 => 4,
            0b101 | 0b110 => 1,
            0b111 => 5,
            _ => 0,
        })
    })
    .expect("fixture is well formed")
}
