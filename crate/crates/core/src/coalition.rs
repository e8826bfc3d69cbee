//! Players and coalitions.
//!
//! Player `i` occupies bit `i - 1` of a coalition mask. Iteration over players
//! is ascending by id and iteration over coalitions is ascending by mask, so
//! every report built on top of these types is deterministic.

use std::fmt;

use crate::error::GameError;

/// Largest player count a game may have.
pub const MAX_PLAYERS: usize = 16;

/// A player label in `1..=MAX_PLAYERS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlayerId(u8);

impl PlayerId {
    pub fn new(id: usize) -> Result<Self, GameError> {
        if (1..=MAX_PLAYERS).contains(&id) {
            Ok(PlayerId(id as u8))
        } else {
            Err(GameError::PlayerOutOfRange { player: id, n: MAX_PLAYERS })
        }
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }

    fn bit(self) -> u32 {
        1 << (self.0 - 1)
    }
}

impl fmt::Display for PlayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A set of players stored as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_mask(mask: u32) -> Self {
        Coalition(mask)
    }

    /// The grand coalition `{1, ..., n}`.
    pub fn grand(n: usize) -> Self {
        assert!(n <= MAX_PLAYERS, "at most {MAX_PLAYERS} players");
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(player: PlayerId) -> Self {
        Coalition(player.bit())
    }

    /// Builds a coalition from raw player ids.
    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Result<Self, GameError> {
        ids.into_iter()
            .try_fold(Coalition::EMPTY, |acc, id| Ok(acc.with(PlayerId::new(id)?)))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, player: PlayerId) -> bool {
        self.0 & player.bit() != 0
    }

    pub fn with(self, player: PlayerId) -> Self {
        Coalition(self.0 | player.bit())
    }

    pub fn without(self, player: PlayerId) -> Self {
        Coalition(self.0 & !player.bit())
    }

    pub fn union(self, other: Coalition) -> Self {
        Coalition(self.0 | other.0)
    }

    pub fn intersection(self, other: Coalition) -> Self {
        Coalition(self.0 & other.0)
    }

    pub fn difference(self, other: Coalition) -> Self {
        Coalition(self.0 & !other.0)
    }

    /// Complement relative to `universe`.
    pub fn complement_in(self, universe: Coalition) -> Self {
        universe.difference(self)
    }

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    /// Highest player id present, or 0 for the empty coalition.
    pub fn max_id(self) -> usize {
        (u32::BITS - self.0.leading_zeros()) as usize
    }

    /// Members in ascending order.
    pub fn players(self) -> Players {
        Players(self.0)
    }

    /// 0/1 membership vector over players `1..=n`.
    pub fn indicator(self, n: usize) -> Vec<u8> {
        (0..n).map(|bit| ((self.0 >> bit) & 1) as u8).collect()
    }

    /// Every subset of `self`, ascending by mask, including `∅` and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets { universe: self.0, next: Some(0) }
    }

    /// Nonempty subsets of `self`, ascending by mask.
    pub fn nonempty_subsets(self) -> impl Iterator<Item = Coalition> {
        self.subsets().skip(1)
    }

    /// Position of `self` among the subsets of `carrier` when those are
    /// listed in ascending mask order.
    pub(crate) fn rank_in(self, carrier: Coalition) -> usize {
        carrier
            .players()
            .enumerate()
            .filter(|&(_, player)| self.contains(player))
            .fold(0usize, |index, (bit, _)| index | 1 << bit)
    }
}

impl fmt::Display for Coalition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, player) in self.players().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{player}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<PlayerId> for Coalition {
    fn from_iter<I: IntoIterator<Item = PlayerId>>(iter: I) -> Self {
        iter.into_iter().fold(Coalition::EMPTY, Coalition::with)
    }
}

/// Ascending iterator over the members of a coalition.
#[derive(Debug, Clone)]
pub struct Players(u32);

impl Iterator for Players {
    type Item = PlayerId;

    fn next(&mut self) -> Option<PlayerId> {
        if self.0 == 0 {
            return None;
        }
        let bit = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(PlayerId(bit as u8 + 1))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Players {}

/// Ascending submask enumeration.
#[derive(Debug, Clone)]
pub struct Subsets {
    universe: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let current = self.next?;
        self.next = if current == self.universe {
            None
        } else {
            // Next larger submask: increment within the holes of `universe`.
            Some(((current | !self.universe).wrapping_add(1)) & self.universe)
        };
        Some(Coalition(current))
    }
}
