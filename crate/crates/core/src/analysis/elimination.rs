//! Exact Fourier–Motzkin elimination for small systems of linear inequalities.

use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// `Σ coeffs[j]·x_j ≥ rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Inequality<S> {
    pub coeffs: Vec<S>,
    pub rhs: S,
}

impl<S: Scalar> Inequality<S> {
    pub fn new(coeffs: Vec<S>, rhs: S) -> Self {
        Inequality { coeffs, rhs }
    }

    fn lhs_at(&self, point: &[S]) -> S {
        self.coeffs.iter().zip(point).fold(S::zero(), |acc, (a, x)| acc + a.clone() * x.clone())
    }

    pub fn holds_at(&self, point: &[S]) -> bool {
        self.lhs_at(point) >= self.rhs
    }
}

/// Rows keyed by direction, scaled so the first nonzero coefficient is ±1;
/// only the tightest right-hand side per direction is kept.
#[derive(Debug)]
struct System<S: Scalar> {
    rows: BTreeMap<Vec<S>, S>,
    /// Set once a constant row `0 ≥ b` with `b > 0` shows up.
    contradiction: bool,
}

impl<S: Scalar> System<S> {
    fn new() -> Self {
        System { rows: BTreeMap::new(), contradiction: false }
    }

    fn insert(&mut self, mut coeffs: Vec<S>, mut rhs: S) {
        let Some(lead) = coeffs.iter().find(|a| !a.is_zero()).map(|a| a.abs()) else {
            if rhs.is_positive() {
                self.contradiction = true;
            }
            return;
        };
        if !lead.is_one() {
            for a in &mut coeffs {
                *a = a.clone() / lead.clone();
            }
            rhs = rhs / lead;
        }
        match self.rows.get_mut(&coeffs) {
            Some(existing) if *existing >= rhs => {}
            Some(existing) => *existing = rhs,
            None => {
                self.rows.insert(coeffs, rhs);
            }
        }
    }

    fn rows(&self) -> impl Iterator<Item = (&Vec<S>, &S)> {
        self.rows.iter()
    }
}

/// Finds a point satisfying every inequality over `vars` unknowns, or `None`
/// if the system is infeasible.
///
/// Variables are eliminated last-to-first; the intermediate systems are kept
/// so a witness can be rebuilt by back substitution, choosing for each
/// variable its tightest lower bound (or upper bound, or 0 if unbounded).
pub fn find_feasible_point<S: Scalar>(vars: usize, inequalities: &[Inequality<S>]) -> Option<Vec<S>> {
    let mut initial = System::new();
    for ineq in inequalities {
        assert_eq!(ineq.coeffs.len(), vars, "inequality arity");
        initial.insert(ineq.coeffs.clone(), ineq.rhs.clone());
    }
    if initial.contradiction {
        return None;
    }

    // stages[s] involves variables 0..vars-s only.
    let mut stages = vec![initial];
    for var in (0..vars).rev() {
        let current = stages.last().expect("at least one stage");
        let mut next = System::new();
        let mut lower = Vec::new();
        let mut upper = Vec::new();
        for (coeffs, rhs) in current.rows() {
            let a = &coeffs[var];
            if a.is_zero() {
                next.insert(coeffs[..var].to_vec(), rhs.clone());
            } else if a.is_positive() {
                lower.push(scaled(coeffs, rhs, var));
            } else {
                upper.push(scaled(coeffs, rhs, var));
            }
        }
        // `x_var + p·x ≥ rp` and `−x_var + q·x ≥ rq` sum to `(p + q)·x ≥ rp + rq`.
        for (p, rp) in &lower {
            for (q, rq) in &upper {
                let coeffs = p.iter().zip(q).map(|(a, b)| a.clone() + b.clone()).collect();
                next.insert(coeffs, rp.clone() + rq.clone());
            }
        }
        if next.contradiction {
            return None;
        }
        stages.push(next);
    }

    let mut point: Vec<S> = Vec::with_capacity(vars);
    for var in 0..vars {
        // The stage in which `var` is the highest remaining variable.
        let stage = &stages[vars - var - 1];
        let mut low: Option<S> = None;
        let mut high: Option<S> = None;
        for (coeffs, rhs) in stage.rows() {
            let a = &coeffs[var];
            if a.is_zero() {
                continue;
            }
            let rest = coeffs[..var].iter().zip(&point).fold(S::zero(), |acc, (c, x)| acc + c.clone() * x.clone());
            let bound = (rhs.clone() - rest) / a.clone();
            if a.is_positive() {
                if low.as_ref().is_none_or(|l| bound > *l) {
                    low = Some(bound);
                }
            } else if high.as_ref().is_none_or(|h| bound < *h) {
                high = Some(bound);
            }
        }
        if let (Some(l), Some(h)) = (&low, &high) {
            debug_assert!(l <= h, "back substitution left an empty interval");
        }
        point.push(low.or(high).unwrap_or_else(S::zero));
    }
    debug_assert!(inequalities.iter().all(|i| i.holds_at(&point)));
    Some(point)
}

/// Divides a row by its (nonzero) coefficient on `var` in absolute value and
/// drops that coefficient: returns `(coeffs[..var]/|a|, rhs/|a|)`.
fn scaled<S: Scalar>(coeffs: &[S], rhs: &S, var: usize) -> (Vec<S>, S) {
    let scale = coeffs[var].abs();
    (
        coeffs[..var].iter().map(|c| c.clone() / scale.clone()).collect(),
        rhs.clone() / scale,
    )
}
