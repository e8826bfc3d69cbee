//! Join orders of players, written in one-line notation (leftmost joins first).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::coalition::{Coalition, PlayerId};
use crate::error::{GameError, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermutationOrder {
    order: Vec<PlayerId>,
}

impl PermutationOrder {
    /// Fails if a player repeats.
    pub fn new(order: Vec<PlayerId>) -> Result<Self> {
        let mut seen = Coalition::EMPTY;
        for &p in &order {
            if seen.contains(p) {
                return Err(GameError::InvalidPermutation(format!("player {p} appears twice")));
            }
            seen = seen.with(p);
        }
        Ok(PermutationOrder { order })
    }

    pub fn from_ids(ids: &[usize]) -> Result<Self> {
        Self::new(ids.iter().map(|&i| PlayerId::new(i)).collect::<Result<_>>()?)
    }

    /// Ascending order of the carrier's players.
    pub fn identity(carrier: Coalition) -> Self {
        PermutationOrder { order: carrier.players().collect() }
    }

    /// The set of players the order is a permutation of.
    pub fn carrier(&self) -> Coalition {
        self.order.iter().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn as_slice(&self) -> &[PlayerId] {
        &self.order
    }

    /// Players strictly before `player`.
    pub fn predecessors(&self, player: PlayerId) -> Result<Coalition> {
        let position = self.order.iter().position(|&p| p == player).ok_or_else(|| {
            GameError::PlayerNotInCoalition { player: player.get(), coalition: self.carrier() }
        })?;
        Ok(self.order[..position].iter().copied().collect())
    }

    /// Deletes every player outside `keep`, preserving the relative order of
    /// the rest.
    pub fn flatten(&self, keep: Coalition) -> Result<Self> {
        let carrier = self.carrier();
        if !keep.is_subset_of(carrier) {
            return Err(GameError::OutsideCarrier { coalition: keep, carrier });
        }
        Ok(PermutationOrder { order: self.order.iter().copied().filter(|&p| keep.contains(p)).collect() })
    }

    /// Yields `(player, predecessors)` along the order.
    pub fn prefixes(&self) -> impl Iterator<Item = (PlayerId, Coalition)> + '_ {
        self.order.iter().scan(Coalition::EMPTY, |joined, &p| {
            let before = *joined;
            *joined = joined.with(p);
            Some((p, before))
        })
    }
}

/// All orders of `carrier` in lexicographic order.
pub fn permutations(carrier: Coalition) -> impl Iterator<Item = PermutationOrder> {
    let players: Vec<PlayerId> = carrier.players().collect();
    let k = players.len();
    players.into_iter().permutations(k).map(|order| PermutationOrder { order })
}

/// Digits run together when every id is a single digit (`142536`),
/// otherwise ids are space separated.
impl fmt::Display for PermutationOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.order.iter().all(|p| p.get() < 10) { "" } else { " " };
        write!(f, "{}", self.order.iter().join(sep))
    }
}

impl FromStr for PermutationOrder {
    type Err = GameError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |what: &str| GameError::InvalidPermutation(format!("{what} in {s:?}"));
        let ids: Vec<usize> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| bad("bad player id")))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("bad digit")))
                .collect::<Result<_>>()?
        };
        Self::from_ids(&ids)
    }
}
