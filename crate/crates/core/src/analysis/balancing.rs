//! Weighted coalition families and the balancing inequality
//! `Σ λ_ℓ v(A_ℓ) ≤ v(N)`.

use crate::coalition::Coalition;
use crate::error::{GameError, Result};
use crate::game::TuGame;
use crate::scalar::Scalar;

/// Nonempty coalitions `A_ℓ` with positive weights `λ_ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedWeighting<S> {
    sets: Vec<Coalition>,
    weights: Vec<S>,
}

impl<S: Scalar> BalancedWeighting<S> {
    pub fn new(sets: Vec<Coalition>, weights: Vec<S>) -> Result<Self> {
        if sets.len() != weights.len() {
            return Err(GameError::InvalidWeighting(format!(
                "{} sets but {} weights",
                sets.len(),
                weights.len()
            )));
        }
        if let Some(empty) = sets.iter().position(|a| a.is_empty()) {
            return Err(GameError::InvalidWeighting(format!("set #{} is empty", empty + 1)));
        }
        if let Some(bad) = weights.iter().find(|w| !w.is_positive()) {
            return Err(GameError::InvalidWeighting(format!("weight {bad} is not positive")));
        }
        Ok(BalancedWeighting { sets, weights })
    }

    pub fn iter(&self) -> impl Iterator<Item = (Coalition, &S)> {
        self.sets.iter().copied().zip(&self.weights)
    }

    /// `Σ λ_ℓ χ_{A_ℓ}` at every carrier player, ascending by id.
    pub fn coverage(&self, carrier: Coalition) -> Vec<S> {
        carrier
            .players()
            .map(|p| {
                self.iter()
                    .filter(|(a, _)| a.contains(p))
                    .fold(S::zero(), |acc, (_, w)| acc + w.clone())
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalancingCheck {
    /// `Σ λ_ℓ χ_{A_ℓ} ≤ χ_N` coordinatewise.
    pub pointwise_ok: bool,
    /// `Σ λ_ℓ v(A_ℓ) ≤ v(N)`.
    pub inequality_holds: bool,
}

pub fn check_balancing_inequality<S: Scalar>(game: &TuGame<S>, weighting: &BalancedWeighting<S>) -> Result<BalancingCheck> {
    let mut weighted_value = S::zero();
    for (a, w) in weighting.iter() {
        weighted_value = weighted_value + w.clone() * game.value(a)?.clone();
    }
    let pointwise_ok = weighting.coverage(game.carrier()).iter().all(|c| *c <= S::one());
    Ok(BalancingCheck { pointwise_ok, inequality_holds: weighted_value <= *game.v(game.carrier()) })
}
