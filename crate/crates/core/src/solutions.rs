//! Solution functions: marginal vectors, the Shapley value (by permutations and
//! by subset weights), the τ-value and the max-marginal-average rule.

use std::fmt;
use std::str::FromStr;

use crate::coalition::Coalition;
use crate::error::{GameError, Result};
use crate::game::{Allocation, TuGame};
use crate::permutation::{permutations, PermutationOrder};
use crate::predicates::is_convex;
use crate::scalar::Scalar;

/// Largest carrier for routines that enumerate all `n!` join orders.
pub const PERMUTATION_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SolutionMethod {
    Shapley,
    Tau,
    MaxMarginalAverage,
}

impl SolutionMethod {
    pub const ALL: [SolutionMethod; 3] =
        [SolutionMethod::Shapley, SolutionMethod::Tau, SolutionMethod::MaxMarginalAverage];

    pub fn name(self) -> &'static str {
        match self {
            SolutionMethod::Shapley => "shapley",
            SolutionMethod::Tau => "tau",
            SolutionMethod::MaxMarginalAverage => "mma",
        }
    }
}

impl fmt::Display for SolutionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SolutionMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "shapley" => Ok(SolutionMethod::Shapley),
            "tau" => Ok(SolutionMethod::Tau),
            "mma" | "max-marginal-average" => Ok(SolutionMethod::MaxMarginalAverage),
            other => Err(format!("unknown method {other:?} (expected shapley, tau or mma)")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauDiagnostics<S> {
    /// Weight on the singleton values; `(M − T)/(M − V)` when essential, 1
    /// otherwise.
    pub lambda: S,
    pub essential: bool,
    /// False when computed through [`tau_unchecked`] without a convexity check.
    pub convexity_checked: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MmaDiagnostics<S> {
    /// Orders whose marginal vector has maximal squared Euclidean norm,
    /// lexicographically sorted.
    pub maximizers: Vec<PermutationOrder>,
    pub max_squared_norm: S,
}

/// Payoff of each player is its marginal contribution to its predecessors.
pub fn marginal_vector<S: Scalar>(game: &TuGame<S>, order: &PermutationOrder) -> Result<Allocation<S>> {
    if order.carrier() != game.carrier() || order.len() != game.player_count() {
        return Err(GameError::InvalidPermutation(format!(
            "{order} is not an ordering of {}",
            game.carrier()
        )));
    }
    Ok(marginal_vector_unchecked(game, order))
}

fn marginal_vector_unchecked<S: Scalar>(game: &TuGame<S>, order: &PermutationOrder) -> Allocation<S> {
    let mut x = Allocation::zeros(game.carrier());
    for (player, before) in order.prefixes() {
        *x.get_mut(player) = game.marginal(player, before);
    }
    x
}

fn permutation_cap(operation: &'static str, n: usize, hint: &'static str) -> Result<()> {
    if n > PERMUTATION_CAP {
        return Err(GameError::PermutationCap { operation, n, cap: PERMUTATION_CAP, hint });
    }
    Ok(())
}

fn factorial<S: Scalar>(n: usize) -> S {
    (1..=n).fold(S::one(), |acc, k| acc * S::from_usize(k))
}

/// Average of the marginal vectors over every join order.
pub fn shapley_by_permutations<S: Scalar>(game: &TuGame<S>) -> Result<Allocation<S>> {
    let n = game.player_count();
    permutation_cap("shapley_by_permutations", n, "; use shapley_by_subsets")?;
    let mut total = Allocation::zeros(game.carrier());
    for order in permutations(game.carrier()) {
        total.add_assign(&marginal_vector_unchecked(game, &order));
    }
    Ok(total.scale(&(S::one() / factorial::<S>(n))))
}

/// `s_i = Σ_{A ∌ i} |A|!(n−1−|A|)!/n! · m_i(A)`.
pub fn shapley_by_subsets<S: Scalar>(game: &TuGame<S>) -> Allocation<S> {
    let n = game.player_count();
    let n_fact = factorial::<S>(n);
    let weights: Vec<S> = (0..n)
        .map(|size| factorial::<S>(size) * factorial::<S>(n - 1 - size) / n_fact.clone())
        .collect();
    let carrier = game.carrier();
    let payoffs = carrier
        .players()
        .map(|player| {
            carrier.without(player).subsets().fold(S::zero(), |acc, a| {
                acc + weights[a.len()].clone() * game.marginal(player, a)
            })
        })
        .collect();
    Allocation::new(carrier, payoffs)
}

/// τ-value of a convex game. Non-convex games are rejected.
pub fn tau<S: Scalar>(game: &TuGame<S>) -> Result<(Allocation<S>, TauDiagnostics<S>)> {
    if let Some(witness) = is_convex(game).witness {
        return Err(GameError::ConvexityViolation(witness.to_string()));
    }
    let (x, mut diag) = tau_unchecked(game)?;
    diag.convexity_checked = true;
    Ok((x, diag))
}

/// τ formula without the convexity check.
///
/// Uses `λ·v_i + (1−λ)·m_i` whenever `M ≠ V`; falls back to `x_i = v_i` when
/// `M = V = T`, and fails when `M = V ≠ T`.
pub fn tau_unchecked<S: Scalar>(game: &TuGame<S>) -> Result<(Allocation<S>, TauDiagnostics<S>)> {
    let agg = game.aggregates();
    let (big_m, t, big_v) = (&agg.total_top_marginals, &agg.grand_value, &agg.total_singletons);
    let essential = t > big_v;
    let carrier = game.carrier();
    if !essential && t == big_v {
        // Inessential: the unique efficient, individually rational allocation.
        let x = Allocation::new(carrier, carrier.players().map(|p| game.singleton_value(p).clone()).collect());
        return Ok((x, TauDiagnostics { lambda: S::one(), essential, convexity_checked: false }));
    }
    if big_m == big_v {
        return Err(GameError::DegenerateTau);
    }
    let spread = big_m.clone() - big_v.clone();
    let lambda = (big_m.clone() - t.clone()) / spread.clone();
    let mu = (t.clone() - big_v.clone()) / spread;
    let payoffs = carrier
        .players()
        .map(|p| {
            lambda.clone() * game.singleton_value(p).clone()
                + mu.clone() * agg.top_marginals.payoff(p).clone()
        })
        .collect();
    Ok((Allocation::new(carrier, payoffs), TauDiagnostics { lambda, essential, convexity_checked: false }))
}

/// Average of the marginal vectors of largest squared Euclidean norm.
pub fn max_marginal_average<S: Scalar>(game: &TuGame<S>) -> Result<(Allocation<S>, MmaDiagnostics<S>)> {
    permutation_cap("max_marginal_average", game.player_count(), "")?;
    let mut best: Option<S> = None;
    let mut maximizers = Vec::new();
    let mut total = Allocation::zeros(game.carrier());
    for order in permutations(game.carrier()) {
        let x = marginal_vector_unchecked(game, &order);
        let norm = x.values().iter().fold(S::zero(), |acc, m| acc + m.clone() * m.clone());
        match best.as_ref().map(|b| norm.cmp(b)) {
            Some(std::cmp::Ordering::Less) => continue,
            Some(std::cmp::Ordering::Equal) => {}
            _ => {
                best = Some(norm);
                maximizers.clear();
                total = Allocation::zeros(game.carrier());
            }
        }
        total.add_assign(&x);
        maximizers.push(order);
    }
    let count = S::from_usize(maximizers.len());
    let x = total.scale(&(S::one() / count));
    let max_squared_norm = best.expect("at least one ordering");
    Ok((x, MmaDiagnostics { maximizers, max_squared_norm }))
}

/// Dispatches to the routine for `method`; Shapley uses subset weights.
pub fn solve<S: Scalar>(game: &TuGame<S>, method: SolutionMethod) -> Result<Allocation<S>> {
    match method {
        SolutionMethod::Shapley => Ok(shapley_by_subsets(game)),
        SolutionMethod::Tau => tau(game).map(|(x, _)| x),
        SolutionMethod::MaxMarginalAverage => max_marginal_average(game).map(|(x, _)| x),
    }
}

/// Solves every nonempty subgame of `game`, ascending by coalition mask.
pub(crate) fn solve_subgames<S: Scalar>(
    game: &TuGame<S>,
    method: SolutionMethod,
) -> Result<Vec<(Coalition, Allocation<S>)>> {
    game.carrier()
        .nonempty_subsets()
        .map(|a| Ok((a, solve(&game.subgame(a)?, method)?)))
        .collect()
}
