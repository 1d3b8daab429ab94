//! Players and coalitions.
//!
//! A [`Coalition`] is a bit mask over at most [`MAX_PLAYERS`] players. Player
//! ids are 1-based everywhere outside this module: bit `i - 1` holds player
//! `i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard cap on the number of players.
pub const MAX_PLAYERS: usize = 32;

/// A 1-based player id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PlayerId(u32);

impl PlayerId {
    pub fn new(id: usize) -> Result<Self> {
        if id == 0 || id > MAX_PLAYERS {
            return Err(Error::PlayerOutOfRange { id, n: MAX_PLAYERS });
        }
        Ok(PlayerId(id as u32))
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

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Coalition(u32);

impl Coalition {
    pub const EMPTY: Coalition = Coalition(0);

    pub fn from_bits(bits: u32) -> Self {
        Coalition(bits)
    }

    /// The grand coalition `{1..n}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_PLAYERS);
        Coalition(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(p: PlayerId) -> Self {
        Coalition(p.bit())
    }

    /// Builds a coalition from 1-based ids. Duplicates are ignored.
    pub fn from_ids<I: IntoIterator<Item = usize>>(ids: I) -> Result<Self> {
        ids.into_iter()
            .try_fold(Coalition::EMPTY, |c, id| Ok(c.with(PlayerId::new(id)?)))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, p: PlayerId) -> bool {
        self.0 & p.bit() != 0
    }

    pub fn with(self, p: PlayerId) -> Self {
        Coalition(self.0 | p.bit())
    }

    pub fn without(self, p: PlayerId) -> Self {
        Coalition(self.0 & !p.bit())
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

    pub fn is_subset_of(self, other: Coalition) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Coalition) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn min_player(self) -> Option<PlayerId> {
        (self.0 != 0).then(|| PlayerId(self.0.trailing_zeros() + 1))
    }

    /// Highest player id, 0 for the empty coalition.
    pub fn max_id(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }

    /// Members in increasing id order.
    pub fn players(self) -> impl Iterator<Item = PlayerId> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let low = rest.trailing_zeros();
            rest &= rest - 1;
            Some(PlayerId(low + 1))
        })
    }

    pub fn ids(self) -> Vec<usize> {
        self.players().map(PlayerId::get).collect()
    }

    /// All subsets of `self`, in increasing bit-pattern order, starting
    /// with the empty set and ending with `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Order by size, then by lexicographic member order.
    pub fn cmp_size_lex(&self, other: &Coalition) -> std::cmp::Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.ids().cmp(&other.ids()))
    }
}

impl fmt::Display for Coalition {
    /// Comma-separated 1-based ids, `{}` for the empty coalition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let mut first = true;
        for p in self.players() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Coalition {
    type Err = Error;

    /// Parses comma-separated 1-based ids, no spaces; `{}` is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        if s == "{}" {
            return Ok(Coalition::EMPTY);
        }
        let ids = s
            .split(',')
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("invalid player id `{tok}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Coalition::from_ids(ids)
    }
}

impl PartialOrd for Coalition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Coalition {
    /// Bit-pattern order.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(&other.0)
    }
}

impl Serialize for Coalition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.ids().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Coalition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<usize>::deserialize(d)?;
        Coalition::from_ids(ids).map_err(serde::de::Error::custom)
    }
}

/// Submask iterator, see [`Coalition::subsets`].
#[derive(Debug, Clone)]
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Coalition;

    fn next(&mut self) -> Option<Coalition> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur | !self.mask).wrapping_add(1) & self.mask)
        };
        Some(Coalition(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(ids: &[usize]) -> Coalition {
        Coalition::from_ids(ids.iter().copied()).unwrap()
    }

    #[test]
    fn subsets_are_complete_and_ascending() {
        let s = c(&[2, 4, 5]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|x| x.is_subset_of(s)));
        assert_eq!(Coalition::EMPTY.subsets().count(), 1);
        assert_eq!(Coalition::full(32).subsets().take(3).count(), 3);
    }

    #[test]
    fn parse_and_display() {
        let s: Coalition = "3,1,2".parse().unwrap();
        assert_eq!(s, c(&[1, 2, 3]));
        assert_eq!(s.to_string(), "1,2,3");
        assert_eq!(Coalition::EMPTY.to_string(), "{}");
        assert!("1, 2".parse::<Coalition>().is_err());
        assert!("0".parse::<Coalition>().is_err());
        assert!("33".parse::<Coalition>().is_err());
        assert_eq!("32".parse::<Coalition>().unwrap().max_id(), 32);
    }

    #[test]
    fn full_coalition_edges() {
        assert_eq!(Coalition::full(0), Coalition::EMPTY);
        assert_eq!(Coalition::full(32).len(), 32);
        assert_eq!(Coalition::full(5).ids(), vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn size_lex_order() {
        let mut v = vec![c(&[2, 3, 4]), c(&[1, 4]), c(&[1, 2]), c(&[1, 3])];
        v.sort_by(Coalition::cmp_size_lex);
        assert_eq!(v, vec![c(&[1, 2]), c(&[1, 3]), c(&[1, 4]), c(&[2, 3, 4])]);
    }
}
