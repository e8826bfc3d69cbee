//! Population monotone allocation schemes.

use std::collections::BTreeMap;

use crate::coalition::{Coalition, PlayerId};
use crate::error::{GameError, Result};
use crate::game::{Allocation, TuGame};
use crate::predicates::is_convex;
use crate::scalar::Scalar;
use crate::solutions::{solve_subgames, SolutionMethod};

/// One allocation per nonempty coalition, each carried by that coalition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AllocationScheme<S> {
    carrier: Coalition,
    entries: BTreeMap<Coalition, Allocation<S>>,
}

impl<S: Scalar> AllocationScheme<S> {
    /// Each allocation must be carried by the coalition it is keyed under;
    /// completeness is checked by [`is_pmas`].
    pub fn new(carrier: Coalition, entries: impl IntoIterator<Item = (Coalition, Allocation<S>)>) -> Result<Self> {
        let entries: BTreeMap<_, _> = entries.into_iter().collect();
        for (&coalition, x) in &entries {
            if !coalition.is_subset_of(carrier) {
                return Err(GameError::OutsideCarrier { coalition, carrier });
            }
            if x.carrier() != coalition {
                return Err(GameError::CarrierMismatch { expected: coalition, found: x.carrier() });
            }
        }
        Ok(AllocationScheme { carrier, entries })
    }

    pub fn carrier(&self) -> Coalition {
        self.carrier
    }

    pub fn get(&self, coalition: Coalition) -> Option<&Allocation<S>> {
        self.entries.get(&coalition)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Coalition, &Allocation<S>)> {
        self.entries.iter().map(|(a, x)| (*a, x))
    }

    /// Every entry distributes exactly `v(A)`.
    pub fn is_efficient_for(&self, game: &TuGame<S>) -> bool {
        self.entries.iter().all(|(a, x)| game.value(*a).is_ok_and(|v| x.total() == *v))
    }

    fn entry(&self, coalition: Coalition) -> Result<&Allocation<S>> {
        self.entries.get(&coalition).ok_or(GameError::IncompleteScheme(coalition))
    }
}

/// `scheme(A) = solve(subgame(A), method)` for every nonempty `A`.
pub fn induced_scheme<S: Scalar>(game: &TuGame<S>, method: SolutionMethod) -> Result<AllocationScheme<S>> {
    if let Some(witness) = is_convex(game).witness {
        return Err(GameError::ConvexityViolation(witness.to_string()));
    }
    AllocationScheme::new(game.carrier(), solve_subgames(game, method)?)
}

/// `i ∈ A ⊆ B` with `x_i^A > x_i^B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmasViolation<S> {
    pub player: PlayerId,
    pub smaller: Coalition,
    pub larger: Coalition,
    pub smaller_payoff: S,
    pub larger_payoff: S,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmasReport<S> {
    pub monotone: bool,
    /// First violation ordered by smaller coalition, larger coalition, player.
    pub violation: Option<PmasViolation<S>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PmasCheck {
    /// Only `B = A ∪ {j}`; sufficient by transitivity.
    #[default]
    Adjacent,
    AllPairs,
}

pub fn is_pmas<S: Scalar>(scheme: &AllocationScheme<S>) -> Result<PmasReport<S>> {
    is_pmas_with(scheme, PmasCheck::default())
}

pub fn is_pmas_with<S: Scalar>(scheme: &AllocationScheme<S>, check: PmasCheck) -> Result<PmasReport<S>> {
    let carrier = scheme.carrier();
    for coalition in carrier.nonempty_subsets() {
        scheme.entry(coalition)?;
    }
    for smaller in carrier.nonempty_subsets() {
        let small = scheme.entry(smaller)?;
        let outside = carrier.difference(smaller);
        let mut supersets: Vec<Coalition> = match check {
            PmasCheck::Adjacent => outside.players().map(|j| smaller.with(j)).collect(),
            PmasCheck::AllPairs => outside.nonempty_subsets().map(|extra| smaller.union(extra)).collect(),
        };
        supersets.sort();
        for larger in supersets {
            let large = scheme.entry(larger)?;
            for (player, smaller_payoff) in small.iter() {
                let larger_payoff = large.payoff(player);
                if smaller_payoff > larger_payoff {
                    return Ok(PmasReport {
                        monotone: false,
                        violation: Some(PmasViolation {
                            player,
                            smaller,
                            larger,
                            smaller_payoff: smaller_payoff.clone(),
                            larger_payoff: larger_payoff.clone(),
                        }),
                    });
                }
            }
        }
    }
    Ok(PmasReport { monotone: true, violation: None })
}
