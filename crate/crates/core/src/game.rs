//! Games, allocations and the basic quantities derived from them.

use std::fmt;

use crate::coalition::{Coalition, PlayerId, MAX_PLAYERS};
use crate::error::{GameError, Result};
use crate::scalar::{self, Scalar};

/// A transferable-utility game: a value for every subset of the carrier.
///
/// The carrier is the set of players the game is played by. A game built from
/// scratch has carrier `{1, ..., n}`; a subgame keeps the labels of the game
/// it was restricted from, so its carrier may be any nonempty set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TuGame<S> {
    carrier: Coalition,
    /// Indexed by the rank of a coalition among the carrier's subsets.
    values: Vec<S>,
}

impl<S: Scalar> TuGame<S> {
    /// Builds a game on `{1, ..., n}` from values indexed by coalition mask.
    pub fn from_values(n: usize, values: Vec<S>) -> Result<Self> {
        check_player_count(n)?;
        let expected = 1usize << n;
        if values.len() != expected {
            return Err(GameError::ValueCount { expected, found: values.len() });
        }
        if !values[0].is_zero() {
            return Err(GameError::NonzeroEmptyValue);
        }
        Ok(TuGame { carrier: Coalition::grand(n), values })
    }

    /// Builds a game on `{1, ..., n}` by evaluating `f` on every nonempty
    /// coalition; `∅` is fixed at 0.
    pub fn from_fn(n: usize, mut f: impl FnMut(Coalition) -> S) -> Result<Self> {
        check_player_count(n)?;
        let values = Coalition::grand(n)
            .subsets()
            .map(|a| if a.is_empty() { S::zero() } else { f(a) })
            .collect();
        Ok(TuGame { carrier: Coalition::grand(n), values })
    }

    /// The additive game `v(A) = Σ_{i∈A} c_i`.
    pub fn additive(weights: &[S]) -> Result<Self> {
        Self::from_fn(weights.len(), |a| {
            scalar::sum(a.players().map(|p| &weights[p.get() - 1]))
        })
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::from_fn(n, |_| S::zero())
    }

    pub fn carrier(&self) -> Coalition {
        self.carrier
    }

    /// Number of players in the carrier.
    pub fn player_count(&self) -> usize {
        self.carrier.len()
    }

    pub fn players(&self) -> impl ExactSizeIterator<Item = PlayerId> {
        self.carrier.players()
    }

    /// Checked lookup of `v(A)`.
    pub fn value(&self, coalition: Coalition) -> Result<&S> {
        if !coalition.is_subset_of(self.carrier) {
            return Err(GameError::OutsideCarrier { coalition, carrier: self.carrier });
        }
        Ok(self.v(coalition))
    }

    /// `v(A)` for a coalition already known to lie inside the carrier.
    #[inline]
    pub(crate) fn v(&self, coalition: Coalition) -> &S {
        debug_assert!(coalition.is_subset_of(self.carrier));
        if self.carrier.mask() & (self.carrier.mask() + 1) == 0 {
            &self.values[coalition.mask() as usize]
        } else {
            &self.values[coalition.rank_in(self.carrier)]
        }
    }

    /// `v({i})`.
    pub fn singleton_value(&self, player: PlayerId) -> &S {
        self.v(Coalition::singleton(player))
    }

    /// `v(A ∪ {i}) − v(A)`; `i` must be a carrier player outside `A`.
    pub fn marginal_contribution(&self, player: PlayerId, coalition: Coalition) -> Result<S> {
        if !self.carrier.contains(player) {
            return Err(GameError::PlayerNotInCoalition {
                player: player.get(),
                coalition: self.carrier,
            });
        }
        if coalition.contains(player) {
            return Err(GameError::PlayerInCoalition { player: player.get(), coalition });
        }
        self.value(coalition)?;
        Ok(self.marginal(player, coalition))
    }

    #[inline]
    pub(crate) fn marginal(&self, player: PlayerId, coalition: Coalition) -> S {
        self.v(coalition.with(player)).clone() - self.v(coalition).clone()
    }

    /// Top marginals `m_i = v(N) − v(N∖{i})` and the totals `M`, `T`, `V`.
    pub fn aggregates(&self) -> GameAggregates<S> {
        let grand = self.carrier;
        let top: Vec<S> = grand.players().map(|p| self.marginal(p, grand.without(p))).collect();
        let top_marginals = Allocation::new(grand, top);
        GameAggregates {
            total_top_marginals: top_marginals.total(),
            grand_value: self.v(grand).clone(),
            total_singletons: scalar::sum(grand.players().map(|p| self.singleton_value(p))),
            top_marginals,
        }
    }

    /// `T > V`.
    pub fn is_essential(&self) -> bool {
        let agg = self.aggregates();
        agg.grand_value > agg.total_singletons
    }

    /// Restriction to the subsets of `coalition`; player labels are kept.
    pub fn subgame(&self, coalition: Coalition) -> Result<Self> {
        if coalition.is_empty() {
            return Err(GameError::EmptyCoalition);
        }
        if !coalition.is_subset_of(self.carrier) {
            return Err(GameError::OutsideCarrier { coalition, carrier: self.carrier });
        }
        let values = coalition.subsets().map(|a| self.v(a).clone()).collect();
        Ok(TuGame { carrier: coalition, values })
    }

    /// Every `(A, v(A))` with `A ⊆ carrier`, ascending by mask.
    pub fn iter(&self) -> impl Iterator<Item = (Coalition, &S)> {
        self.carrier.subsets().zip(self.values.iter())
    }

    /// Applies `f` to the value of every coalition.
    pub fn map_values<F: FnMut(Coalition, &S) -> S>(&self, mut f: F) -> Self {
        let values = self.iter().map(|(a, v)| if a.is_empty() { S::zero() } else { f(a, v) }).collect();
        TuGame { carrier: self.carrier, values }
    }

    /// Rebuilds the game with players renamed by `relabel` (a bijection on the
    /// carrier given as `old id -> new id`).
    pub fn relabel(&self, relabel: impl Fn(PlayerId) -> PlayerId) -> Result<Self> {
        let rename = |a: Coalition| a.players().map(&relabel).collect::<Coalition>();
        let carrier = rename(self.carrier);
        if carrier.len() != self.carrier.len() {
            return Err(GameError::InvalidPermutation("relabeling is not injective".into()));
        }
        let mut values = vec![S::zero(); self.values.len()];
        for (a, v) in self.iter() {
            values[rename(a).rank_in(carrier)] = v.clone();
        }
        Ok(TuGame { carrier, values })
    }
}

fn check_player_count(n: usize) -> Result<()> {
    if n == 0 {
        return Err(GameError::EmptyCoalition);
    }
    if n > MAX_PLAYERS {
        return Err(GameError::TooManyPlayers { n, max: MAX_PLAYERS });
    }
    Ok(())
}

/// `m_1..m_n` together with `M = Σ m_i`, `T = v(N)` and `V = Σ v_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameAggregates<S> {
    pub top_marginals: Allocation<S>,
    /// `M`
    pub total_top_marginals: S,
    /// `T`
    pub grand_value: S,
    /// `V`
    pub total_singletons: S,
}

/// A payoff for every member of a carrier coalition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Allocation<S> {
    carrier: Coalition,
    /// Ascending by player id.
    payoffs: Vec<S>,
}

impl<S: Scalar> Allocation<S> {
    /// `payoffs` are listed in ascending player order.
    pub fn new(carrier: Coalition, payoffs: Vec<S>) -> Self {
        assert_eq!(carrier.len(), payoffs.len(), "one payoff per carrier player");
        Allocation { carrier, payoffs }
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (PlayerId, S)>) -> Result<Self> {
        let mut pairs: Vec<(PlayerId, S)> = pairs.into_iter().collect();
        pairs.sort_by_key(|(p, _)| *p);
        let mut carrier = Coalition::EMPTY;
        for (p, _) in &pairs {
            if carrier.contains(*p) {
                return Err(GameError::InvalidPermutation(format!("player {p} listed twice")));
            }
            carrier = carrier.with(*p);
        }
        Ok(Allocation { carrier, payoffs: pairs.into_iter().map(|(_, x)| x).collect() })
    }

    pub fn zeros(carrier: Coalition) -> Self {
        Allocation { carrier, payoffs: vec![S::zero(); carrier.len()] }
    }

    pub fn carrier(&self) -> Coalition {
        self.carrier
    }

    pub fn get(&self, player: PlayerId) -> Option<&S> {
        if !self.carrier.contains(player) {
            return None;
        }
        let below = self.carrier.mask() & ((1u32 << (player.get() - 1)) - 1);
        Some(&self.payoffs[below.count_ones() as usize])
    }

    pub(crate) fn get_mut(&mut self, player: PlayerId) -> &mut S {
        let below = self.carrier.mask() & ((1u32 << (player.get() - 1)) - 1);
        &mut self.payoffs[below.count_ones() as usize]
    }

    /// Payoff of a carrier player; panics for players outside the carrier.
    pub fn payoff(&self, player: PlayerId) -> &S {
        self.get(player)
            .unwrap_or_else(|| panic!("player {player} is not in {}", self.carrier))
    }

    pub fn iter(&self) -> impl Iterator<Item = (PlayerId, &S)> {
        self.carrier.players().zip(self.payoffs.iter())
    }

    pub fn values(&self) -> &[S] {
        &self.payoffs
    }

    /// `x(N)` over the carrier.
    pub fn total(&self) -> S {
        scalar::sum(&self.payoffs)
    }

    /// `x(A)`, summing over the members of `A` that lie in the carrier.
    pub fn sum_over(&self, coalition: Coalition) -> S {
        scalar::sum(self.iter().filter(|(p, _)| coalition.contains(*p)).map(|(_, x)| x))
    }

    /// Componentwise sum with another allocation on the same carrier.
    pub(crate) fn add_assign(&mut self, other: &Allocation<S>) {
        debug_assert_eq!(self.carrier, other.carrier);
        for (a, b) in self.payoffs.iter_mut().zip(&other.payoffs) {
            *a = a.clone() + b.clone();
        }
    }

    pub fn scale(&self, factor: &S) -> Self {
        Allocation {
            carrier: self.carrier,
            payoffs: self.payoffs.iter().map(|x| x.clone() * factor.clone()).collect(),
        }
    }
}

/// `1=5/3 2=5/3 3=5/3 4=1`
impl<S: Scalar> fmt::Display for Allocation<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (p, x)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}={x}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::Rational;

    fn c(ids: &[usize]) -> Coalition {
        Coalition::from_ids(ids.iter().copied()).unwrap()
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::from_frac(n, d)
    }

    fn p(id: usize) -> PlayerId {
        PlayerId::new(id).unwrap()
    }

    #[test]
    fn table_values() {
        let g = fixtures::table1::<Rational>();
        assert_eq!(g.value(c(&[1, 2, 3])).unwrap(), &r(4, 1));
        assert_eq!(g.value(c(&[1, 4])).unwrap(), &r(0, 1));
        assert_eq!(g.value(Coalition::EMPTY).unwrap(), &r(0, 1));
    }

    #[test]
    fn value_outside_carrier_is_an_error() {
        let g = fixtures::table1::<Rational>();
        assert!(matches!(g.value(c(&[5])), Err(GameError::OutsideCarrier { .. })));
        let sub = g.subgame(c(&[1, 2])).unwrap();
        assert!(sub.value(c(&[3])).is_err());
    }

    #[test]
    fn construction_rejects_bad_input() {
        let bad = vec![r(1, 1), r(0, 1)];
        assert_eq!(TuGame::from_values(1, bad), Err(GameError::NonzeroEmptyValue));
        assert!(matches!(
            TuGame::<Rational>::from_values(2, vec![r(0, 1); 3]),
            Err(GameError::ValueCount { expected: 4, found: 3 })
        ));
        assert!(matches!(TuGame::<Rational>::zero(17), Err(GameError::TooManyPlayers { .. })));
    }

    #[test]
    fn marginal_contributions() {
        let g = fixtures::table1::<Rational>();
        assert_eq!(g.marginal_contribution(p(2), c(&[1, 3])).unwrap(), r(2, 1));
        assert_eq!(g.marginal_contribution(p(4), c(&[1, 2, 3])).unwrap(), r(2, 1));
        for i in 1..=4 {
            assert_eq!(
                &g.marginal_contribution(p(i), Coalition::EMPTY).unwrap(),
                g.singleton_value(p(i))
            );
        }
        assert!(matches!(
            g.marginal_contribution(p(1), c(&[1, 2])),
            Err(GameError::PlayerInCoalition { player: 1, .. })
        ));
    }

    #[test]
    fn table_aggregates() {
        let g = fixtures::table1::<Rational>();
        let agg = g.aggregates();
        let three = r(3, 1);
        assert_eq!(agg.top_marginals.values(), &[three.clone(), three.clone(), three, r(2, 1)]);
        assert_eq!(agg.total_top_marginals, r(11, 1));
        assert_eq!(agg.grand_value, r(6, 1));
        assert_eq!(agg.total_singletons, r(0, 1));

        let sub = g.subgame(c(&[1, 2, 3])).unwrap().aggregates();
        assert_eq!(
            (sub.total_top_marginals, sub.grand_value, sub.total_singletons),
            (r(7, 1), r(4, 1), r(0, 1))
        );

        let zero = TuGame::<Rational>::zero(3).unwrap().aggregates();
        assert!(zero.top_marginals.values().iter().all(|m| m == &r(0, 1)));
        assert_eq!(zero.total_top_marginals, r(0, 1));
    }

    #[test]
    fn essentiality() {
        assert!(fixtures::table1::<Rational>().is_essential());
        let additive = TuGame::additive(&[r(1, 1), r(-2, 1), r(5, 3)]).unwrap();
        assert!(!additive.is_essential());
        let g = TuGame::from_values(2, vec![r(0, 1), r(1, 1), r(3, 1), r(10, 1)]).unwrap();
        assert!(g.is_essential());
    }

    #[test]
    fn subgames_keep_labels() {
        let g = fixtures::table1::<Rational>();
        let sub = g.subgame(c(&[1, 2])).unwrap();
        assert_eq!(sub.carrier(), c(&[1, 2]));
        assert_eq!(sub.value(c(&[1])).unwrap(), &r(0, 1));
        assert_eq!(sub.value(c(&[2])).unwrap(), &r(0, 1));
        assert_eq!(sub.value(c(&[1, 2])).unwrap(), &r(2, 1));
        assert_eq!(g.subgame(g.carrier()).unwrap(), g);
        assert_eq!(g.subgame(Coalition::EMPTY), Err(GameError::EmptyCoalition));

        let sparse = g.subgame(c(&[2, 4])).unwrap();
        assert_eq!(sparse.value(c(&[2, 4])).unwrap(), &r(1, 1));
        let nested = g.subgame(c(&[1, 3, 4])).unwrap().subgame(c(&[3, 4])).unwrap();
        assert_eq!(nested, sparse.relabel(|q| if q == p(2) { p(3) } else { q }).unwrap());
    }

    #[test]
    fn allocation_lookup_and_display() {
        let x = Allocation::new(c(&[2, 5]), vec![r(1, 2), r(3, 1)]);
        assert_eq!(x.get(p(5)), Some(&r(3, 1)));
        assert_eq!(x.get(p(1)), None);
        assert_eq!(x.total(), r(7, 2));
        assert_eq!(x.sum_over(c(&[1, 2])), r(1, 2));
        assert_eq!(x.to_string(), "2=1/2 5=3");
    }
}
