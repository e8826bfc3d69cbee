//! Closed forms for super-additive 3-player games.
//!
//! With pair surpluses `M_ij = v_ij − v_i − v_j` and total surplus
//! `S = v(N) − v_1 − v_2 − v_3`, a super-additive game has a nonempty core
//! iff `S ≥ ½(M_12 + M_13 + M_23)` and is convex iff `S` is at least every
//! sum of two pair surpluses.

use std::fmt;

use crate::coalition::{Coalition, PlayerId};
use crate::error::{GameError, Result};
use crate::game::{Allocation, TuGame};
use crate::predicates::{is_superadditive, three_players};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreePlayerStats<S> {
    /// The carrier's players in ascending order, playing roles 1, 2, 3.
    pub players: [PlayerId; 3],
    pub m12: S,
    pub m13: S,
    pub m23: S,
    pub surplus: S,
}

impl<S: Scalar> ThreePlayerStats<S> {
    fn pair_sum(&self) -> S {
        self.m12.clone() + self.m13.clone() + self.m23.clone()
    }
}

pub fn three_player_stats<S: Scalar>(game: &TuGame<S>) -> Result<ThreePlayerStats<S>> {
    let players = three_players(game)?;
    let single = |k: usize| game.singleton_value(players[k]).clone();
    let pair = |i: usize, j: usize| {
        game.v(Coalition::singleton(players[i]).with(players[j])).clone() - single(i) - single(j)
    };
    Ok(ThreePlayerStats {
        players,
        m12: pair(0, 1),
        m13: pair(0, 2),
        m23: pair(1, 2),
        surplus: game.v(game.carrier()).clone() - single(0) - single(1) - single(2),
    })
}

fn superadditive_stats<S: Scalar>(game: &TuGame<S>) -> Result<ThreePlayerStats<S>> {
    let stats = three_player_stats(game)?;
    if let Some(witness) = is_superadditive(game).witness {
        return Err(GameError::NotSuperadditive(witness.to_string()));
    }
    Ok(stats)
}

/// `S ≥ ½(M_12 + M_13 + M_23)`.
pub fn core_nonempty_3p<S: Scalar>(game: &TuGame<S>) -> Result<bool> {
    let stats = superadditive_stats(game)?;
    Ok(stats.surplus >= stats.pair_sum().half())
}

/// `S ≥ max{M_12 + M_13, M_12 + M_23, M_13 + M_23}`.
pub fn is_convex_3p_closed_form<S: Scalar>(game: &TuGame<S>) -> Result<bool> {
    let stats = superadditive_stats(game)?;
    let ThreePlayerStats { m12, m13, m23, surplus, .. } = &stats;
    let largest = [m12.clone() + m13.clone(), m12.clone() + m23.clone(), m13.clone() + m23.clone()]
        .into_iter()
        .max()
        .expect("three sums");
    Ok(*surplus >= largest)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructionCase<S> {
    /// Every pair surplus is at most the sum of the other two:
    /// `x_i = v_i + a_i + t`.
    Triangle { a: [S; 3], t: S },
    /// `M_ij > M_ik + M_jk` for the pair `dominant = (i, j)`:
    /// `x_i = v_i + M_ik + t`, `x_j = v_j + M_jk + t`, `x_k = v_k`.
    BrokenTriangle { dominant: (PlayerId, PlayerId), t: S },
}

impl<S> ConstructionCase<S> {
    pub fn name(&self) -> &'static str {
        match self {
            ConstructionCase::Triangle { .. } => "triangle",
            ConstructionCase::BrokenTriangle { .. } => "broken-triangle",
        }
    }
}

impl<S> fmt::Display for ConstructionCase<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreConstruction3p<S> {
    pub allocation: Allocation<S>,
    pub case: ConstructionCase<S>,
}

/// Explicit core element of a super-additive 3-player game with nonempty core.
pub fn construct_core_element_3p<S: Scalar>(game: &TuGame<S>) -> Result<CoreConstruction3p<S>> {
    let stats = superadditive_stats(game)?;
    if stats.surplus < stats.pair_sum().half() {
        return Err(GameError::EmptyCore);
    }
    let players = stats.players;
    let single = |k: usize| game.singleton_value(players[k]).clone();
    // Pair surplus indexed by roles.
    let pair = |i: usize, j: usize| match (i.min(j), i.max(j)) {
        (0, 1) => stats.m12.clone(),
        (0, 2) => stats.m13.clone(),
        _ => stats.m23.clone(),
    };

    let broken = [(0, 1, 2), (0, 2, 1), (1, 2, 0)]
        .into_iter()
        .find(|&(i, j, k)| pair(i, j) > pair(i, k) + pair(j, k));

    let mut payoffs = vec![S::zero(); 3];
    let case = match broken {
        None => {
            let half_sum = stats.pair_sum().half();
            let t = (stats.surplus.clone() - half_sum) / S::from_i64(3);
            let a = [
                (stats.m12.clone() + stats.m13.clone() - stats.m23.clone()).half(),
                (stats.m12.clone() + stats.m23.clone() - stats.m13.clone()).half(),
                (stats.m13.clone() + stats.m23.clone() - stats.m12.clone()).half(),
            ];
            for k in 0..3 {
                payoffs[k] = single(k) + a[k].clone() + t.clone();
            }
            ConstructionCase::Triangle { a, t }
        }
        Some((i, j, k)) => {
            let t = (stats.surplus.clone() - pair(i, k) - pair(j, k)).half();
            payoffs[i] = single(i) + pair(i, k) + t.clone();
            payoffs[j] = single(j) + pair(j, k) + t.clone();
            payoffs[k] = single(k);
            ConstructionCase::BrokenTriangle { dominant: (players[i], players[j]), t }
        }
    };
    Ok(CoreConstruction3p { allocation: Allocation::new(game.carrier(), payoffs), case })
}
