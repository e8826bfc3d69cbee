//! The exact scalar abstraction every game value and payoff is expressed in.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

/// An ordered field with exact arithmetic.
///
/// Division never rounds, so sums of marginal contributions, convex
/// combinations and elimination steps are all exact. Implemented for
/// [`Ratio<T>`] over any signed integer that can absorb an `i64`; the crate
/// root exports [`Rational`](crate::Rational) (arbitrary precision) and
/// [`Rational64`](crate::Rational64) (fixed width, faster, may overflow).
pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Num + Signed + FromStr + Send + Sync + 'static
{
    fn from_i64(value: i64) -> Self;

    fn from_frac(numer: i64, denom: i64) -> Self {
        Self::from_i64(numer) / Self::from_i64(denom)
    }

    fn from_usize(value: usize) -> Self {
        Self::from_i64(i64::try_from(value).expect("count fits in i64"))
    }

    /// Parses `p` or `p/q`; a zero denominator is rejected.
    fn parse_literal(text: &str) -> Option<Self> {
        let text = text.trim();
        if text.is_empty() {
            return None;
        }
        if let Some((_, denom)) = text.split_once('/') {
            if denom.trim().trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
                return None;
            }
        }
        text.parse().ok()
    }

    fn half(&self) -> Self {
        self.clone() / Self::from_i64(2)
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + Hash + Debug + Display + FromStr + From<i64> + Send + Sync + 'static,
{
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(T::from(value))
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Ratio::new(T::from(numer), T::from(denom))
    }
}

/// Sums an iterator of scalars, starting from zero.
pub fn sum<'a, S: Scalar>(values: impl IntoIterator<Item = &'a S>) -> S {
    values.into_iter().fold(S::zero(), |acc, v| acc + v.clone())
}
