//! Structural predicates: super-additivity, convexity and the 3-player
//! convexity inequalities.

use std::fmt;

use crate::coalition::{Coalition, PlayerId};
use crate::error::{GameError, Result};
use crate::game::TuGame;
use crate::scalar::Scalar;

/// Outcome of a predicate check: passes unless a witness was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict<W> {
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    pub fn pass() -> Self {
        Verdict { witness: None }
    }

    pub fn fail(witness: W) -> Self {
        Verdict { witness: Some(witness) }
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Disjoint nonempty `A`, `B` with `v(A) + v(B) > v(A ∪ B)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuperadditivityWitness {
    pub left: Coalition,
    pub right: Coalition,
}

impl fmt::Display for SuperadditivityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({}) + v({}) > v({})", self.left, self.right, self.left.union(self.right))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConvexityWitness {
    /// `v(A) + v(B) > v(A ∪ B) + v(A ∩ B)`.
    Pair { left: Coalition, right: Coalition },
    /// `A ⊆ B ⊆ N∖{i}` with `m_i(A) > m_i(B)`.
    Marginal { player: PlayerId, smaller: Coalition, larger: Coalition },
}

impl fmt::Display for ConvexityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConvexityWitness::Pair { left, right } => write!(
                f,
                "v({left}) + v({right}) > v({}) + v({})",
                left.union(*right),
                left.intersection(*right)
            ),
            ConvexityWitness::Marginal { player, smaller, larger } => {
                write!(f, "m_{player}({smaller}) > m_{player}({larger})")
            }
        }
    }
}

/// Which algorithm [`is_convex_with`] runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConvexityCheck {
    /// `m_i(A) ≤ m_i(A ∪ {j})` for every `i`, `j` and `A`; `O(n² 2ⁿ)`.
    #[default]
    AdjacentMarginals,
    /// `m_i(A) ≤ m_i(B)` for every `i` and `A ⊆ B ⊆ N∖{i}`; `O(n 3ⁿ)`.
    Marginals,
    /// `v(A) + v(B) ≤ v(A ∪ B) + v(A ∩ B)` for every pair; `O(4ⁿ)`.
    Pairwise,
    /// Runs `Pairwise` and `AdjacentMarginals` and panics if they disagree.
    CrossChecked,
}

/// `v(A) + v(B) ≤ v(A ∪ B)` for all disjoint nonempty `A`, `B`.
pub fn is_superadditive<S: Scalar>(game: &TuGame<S>) -> Verdict<SuperadditivityWitness> {
    let carrier = game.carrier();
    for left in carrier.nonempty_subsets() {
        // Each unordered pair once: every member of `right` lies above the
        // lowest member of `left`.
        let lowest = left.mask() & left.mask().wrapping_neg();
        let above = Coalition::from_mask(!(lowest | (lowest - 1)));
        let rest = carrier.difference(left).intersection(above);
        for right in rest.nonempty_subsets() {
            let joint = left.union(right);
            if game.v(left).clone() + game.v(right).clone() > *game.v(joint) {
                return Verdict::fail(SuperadditivityWitness { left, right });
            }
        }
    }
    Verdict::pass()
}

pub fn is_convex<S: Scalar>(game: &TuGame<S>) -> Verdict<ConvexityWitness> {
    is_convex_with(game, ConvexityCheck::default())
}

pub fn is_convex_with<S: Scalar>(
    game: &TuGame<S>,
    check: ConvexityCheck,
) -> Verdict<ConvexityWitness> {
    match check {
        ConvexityCheck::AdjacentMarginals => adjacent_marginals(game),
        ConvexityCheck::Marginals => marginal_monotonicity(game),
        ConvexityCheck::Pairwise => pairwise(game),
        ConvexityCheck::CrossChecked => {
            let fast = adjacent_marginals(game);
            let slow = pairwise(game);
            assert_eq!(
                fast.passed(),
                slow.passed(),
                "convexity algorithms disagree: {:?} vs {:?}",
                fast.witness,
                slow.witness
            );
            fast
        }
    }
}

fn adjacent_marginals<S: Scalar>(game: &TuGame<S>) -> Verdict<ConvexityWitness> {
    let carrier = game.carrier();
    for smaller in carrier.subsets() {
        let outside: Vec<PlayerId> = carrier.difference(smaller).players().collect();
        for (k, &player) in outside.iter().enumerate() {
            let gain = game.marginal(player, smaller);
            for &other in &outside[k + 1..] {
                let larger = smaller.with(other);
                if gain > game.marginal(player, larger) {
                    return Verdict::fail(ConvexityWitness::Marginal { player, smaller, larger });
                }
            }
        }
    }
    Verdict::pass()
}

fn marginal_monotonicity<S: Scalar>(game: &TuGame<S>) -> Verdict<ConvexityWitness> {
    let carrier = game.carrier();
    for player in carrier.players() {
        let others = carrier.without(player);
        for larger in others.subsets() {
            let top = game.marginal(player, larger);
            for smaller in larger.subsets() {
                if game.marginal(player, smaller) > top {
                    return Verdict::fail(ConvexityWitness::Marginal { player, smaller, larger });
                }
            }
        }
    }
    Verdict::pass()
}

fn pairwise<S: Scalar>(game: &TuGame<S>) -> Verdict<ConvexityWitness> {
    let carrier = game.carrier();
    for left in carrier.subsets() {
        for right in carrier.subsets().filter(|r| r.mask() > left.mask()) {
            let lhs = game.v(left).clone() + game.v(right).clone();
            let rhs = game.v(left.union(right)).clone() + game.v(left.intersection(right)).clone();
            if lhs > rhs {
                return Verdict::fail(ConvexityWitness::Pair { left, right });
            }
        }
    }
    Verdict::pass()
}

/// `v_i + v_j + m_k ≤ T ≤ m_i + m_j + v_k` for every ordering `(i, j, k)` of a
/// 3-player carrier.
pub fn is_convex_3p_inequalities<S: Scalar>(game: &TuGame<S>) -> Result<bool> {
    let players = three_players(game)?;
    let agg = game.aggregates();
    let grand = &agg.grand_value;
    let single = |p: PlayerId| game.singleton_value(p).clone();
    let top = |p: PlayerId| agg.top_marginals.payoff(p).clone();
    for (i, j, k) in orderings(players) {
        let lower = single(i) + single(j) + top(k);
        let upper = top(i) + top(j) + single(k);
        if lower > *grand || *grand > upper {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn three_players<S: Scalar>(game: &TuGame<S>) -> Result<[PlayerId; 3]> {
    let players: Vec<PlayerId> = game.players().collect();
    players
        .try_into()
        .map_err(|p: Vec<PlayerId>| GameError::PlayerCount { expected: 3, found: p.len() })
}

fn orderings([a, b, c]: [PlayerId; 3]) -> [(PlayerId, PlayerId, PlayerId); 6] {
    [(a, b, c), (a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)]
}
