//! Core membership and exact core non-emptiness.

use crate::analysis::elimination::{find_feasible_point, Inequality};
use crate::coalition::Coalition;
use crate::error::{GameError, Result};
use crate::game::{Allocation, TuGame};
use crate::permutation::PermutationOrder;
use crate::predicates::is_convex;
use crate::scalar::Scalar;
use crate::solutions::marginal_vector;

/// Largest carrier [`core_nonempty`] accepts.
pub const CORE_ELIMINATION_CAP: usize = 5;

/// A coalition that receives less than it can secure on its own.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreViolation<S> {
    pub coalition: Coalition,
    /// `x(A)`
    pub allocated: S,
    /// `v(A)`
    pub value: S,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreReport<S> {
    pub member: bool,
    pub efficient: bool,
    /// First blocking coalition in ascending mask order.
    pub violation: Option<CoreViolation<S>>,
}

pub fn in_core<S: Scalar>(game: &TuGame<S>, x: &Allocation<S>) -> Result<CoreReport<S>> {
    if x.carrier() != game.carrier() {
        return Err(GameError::CarrierMismatch { expected: game.carrier(), found: x.carrier() });
    }
    let efficient = x.total() == *game.v(game.carrier());
    let violation = game.carrier().nonempty_subsets().find_map(|a| {
        let allocated = x.sum_over(a);
        let value = game.v(a);
        (allocated < *value).then(|| CoreViolation { coalition: a, allocated, value: value.clone() })
    });
    Ok(CoreReport { member: efficient && violation.is_none(), efficient, violation })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreCertificateSource {
    /// Convex game: the marginal vector along the identity order.
    ConvexMarginalVector,
    /// Back substitution after exact variable elimination.
    Elimination,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreNonemptiness<S> {
    pub nonempty: bool,
    /// A core element whenever `nonempty`.
    pub certificate: Option<Allocation<S>>,
    pub source: Option<CoreCertificateSource>,
}

/// Decides whether `{x(N) = v(N), x(A) ≥ v(A) for all A}` is feasible.
pub fn core_nonempty<S: Scalar>(game: &TuGame<S>) -> Result<CoreNonemptiness<S>> {
    let n = game.player_count();
    if n > CORE_ELIMINATION_CAP {
        return Err(GameError::SizeCap { operation: "core_nonempty", n, cap: CORE_ELIMINATION_CAP });
    }
    if is_convex(game).passed() {
        let x = marginal_vector(game, &PermutationOrder::identity(game.carrier()))?;
        return Ok(found(x, CoreCertificateSource::ConvexMarginalVector));
    }
    let (certificate, _) = core_by_elimination(game);
    Ok(match certificate {
        Some(x) => found(x, CoreCertificateSource::Elimination),
        None => CoreNonemptiness { nonempty: false, certificate: None, source: None },
    })
}

fn found<S>(x: Allocation<S>, source: CoreCertificateSource) -> CoreNonemptiness<S> {
    CoreNonemptiness { nonempty: true, certificate: Some(x), source: Some(source) }
}

/// Core feasibility by elimination alone, skipping the convex shortcut.
///
/// The efficiency equality is used to substitute out the last player, leaving
/// `n − 1` unknowns constrained by one inequality per nonempty coalition.
/// Also returns the number of inequalities handed to the eliminator.
pub fn core_by_elimination<S: Scalar>(game: &TuGame<S>) -> (Option<Allocation<S>>, usize) {
    let carrier = game.carrier();
    let players: Vec<_> = carrier.players().collect();
    let (&last, free) = players.split_last().expect("games are nonempty");
    let grand = game.v(carrier).clone();

    let inequalities: Vec<Inequality<S>> = carrier
        .nonempty_subsets()
        .filter(|&a| a != carrier)
        .map(|a| {
            if a.contains(last) {
                // x(A) = v(N) − x(N∖A), so x(A) ≥ v(A) ⇔ −x(N∖A) ≥ v(A) − v(N).
                let coeffs = free
                    .iter()
                    .map(|&p| if a.contains(p) { S::zero() } else { -S::one() })
                    .collect();
                Inequality::new(coeffs, game.v(a).clone() - grand.clone())
            } else {
                let coeffs = free.iter().map(|&p| if a.contains(p) { S::one() } else { S::zero() }).collect();
                Inequality::new(coeffs, game.v(a).clone())
            }
        })
        .collect();
    let count = inequalities.len();
    let point = find_feasible_point(free.len(), &inequalities);
    let allocation = point.map(|mut xs| {
        let rest = grand - xs.iter().fold(S::zero(), |acc, x| acc + x.clone());
        xs.push(rest);
        Allocation::new(carrier, xs)
    });
    (allocation, count)
}
