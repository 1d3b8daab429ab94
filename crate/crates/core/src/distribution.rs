//! Two-block partitions of a coalition and the probability distributions the
//! coopetition family is parameterized by.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::rational::{factorial, pow2, Rational};

/// An unordered non-trivial split `{first, second}` of a coalition. The
/// `first` block always holds the smallest member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition2 {
    first: Coalition,
    second: Coalition,
}

impl Partition2 {
    pub fn new(a: Coalition, b: Coalition) -> Result<Self> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        if !a.is_disjoint(b) {
            return Err(Error::Overlap(a.to_string(), b.to_string()));
        }
        Ok(Self::canonical(a, b))
    }

    fn canonical(a: Coalition, b: Coalition) -> Self {
        if a.bits().trailing_zeros() < b.bits().trailing_zeros() {
            Partition2 {
                first: a,
                second: b,
            }
        } else {
            Partition2 {
                first: b,
                second: a,
            }
        }
    }

    pub fn first(&self) -> Coalition {
        self.first
    }

    pub fn second(&self) -> Coalition {
        self.second
    }

    /// The coalition being split.
    pub fn union(&self) -> Coalition {
        self.first.union(self.second)
    }
}

impl fmt::Display for Partition2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}|{}}}", self.first, self.second)
    }
}

/// Every unordered non-trivial 2-partition of `s`, each exactly once, ordered
/// by the bit pattern of the block holding `min(s)`. Yields `2^{s-1} - 1`
/// items.
pub fn partitions2(s: Coalition) -> Result<impl Iterator<Item = Partition2>> {
    if s.len() < 2 {
        return Err(Error::CoalitionTooSmall {
            coalition: s.to_string(),
            size: s.len(),
        });
    }
    let low = Coalition::singleton(s.min_player().expect("nonempty"));
    let rest = s.difference(low);
    Ok(rest
        .subsets()
        .filter(move |&sub| sub != rest)
        .map(move |sub| {
            let first = sub.union(low);
            Partition2 {
                first,
                second: s.difference(first),
            }
        }))
}

/// `1 / (2^{s-1} - 1)`
pub fn banzhaf_partition_weight(s: usize) -> Rational {
    Rational::new(BigInt::from(1), pow2(s as u32 - 1) - 1)
}

/// `2 q! (s-q)! / ((s-1) s!)` for a block of size `q`.
pub fn shapley_owen_partition_weight(s: usize, q: usize) -> Rational {
    let (s, q) = (s as u32, q as u32);
    Rational::new(factorial(q) * factorial(s - q) * 2, factorial(s) * (s - 1))
}

/// `2^{s-n}`
pub fn banzhaf_outside_weight(n: usize, s: usize) -> Rational {
    Rational::new(BigInt::from(1), pow2((n - s) as u32))
}

/// `t! (n-s-t)! / (n-s+1)!`
pub fn shapley_owen_outside_weight(n: usize, s: usize, t: usize) -> Rational {
    let (n, s, t) = (n as u32, s as u32, t as u32);
    Rational::new(factorial(t) * factorial(n - s - t), factorial(n - s + 1))
}

/// A probability distribution `p_S` over the 2-partitions of `S`.
#[derive(Debug, Clone, PartialEq)]
pub enum PartitionDistribution {
    BanzhafUniform,
    ShapleyOwen,
    /// Unlisted partitions get weight zero.
    Explicit(BTreeMap<Partition2, Rational>),
}

impl PartitionDistribution {
    pub fn is_explicit(&self) -> bool {
        matches!(self, PartitionDistribution::Explicit(_))
    }

    /// Weight of `pi`, a partition of a coalition of size `pi.union().len()`.
    pub fn weight(&self, pi: &Partition2) -> Rational {
        let s = pi.union().len();
        match self {
            PartitionDistribution::BanzhafUniform => banzhaf_partition_weight(s),
            PartitionDistribution::ShapleyOwen => {
                shapley_owen_partition_weight(s, pi.first().len())
            }
            PartitionDistribution::Explicit(map) => {
                map.get(pi).cloned().unwrap_or_else(Rational::zero)
            }
        }
    }

    /// Closed forms are valid by construction. Explicit weights must be
    /// nonnegative, supported on `Π₂(S)` and sum to exactly one.
    pub fn validate_for(&self, s: Coalition) -> Result<()> {
        let PartitionDistribution::Explicit(map) = self else {
            return Ok(());
        };
        let mut total = Rational::zero();
        for (pi, w) in map {
            if pi.union() != s {
                return Err(Error::InvalidDistribution(format!(
                    "partition {pi} does not split coalition {s}"
                )));
            }
            if w.is_negative() {
                return Err(Error::InvalidDistribution(format!(
                    "negative weight on {pi}"
                )));
            }
            total += w;
        }
        if total != Rational::from_integer(1.into()) {
            return Err(Error::InvalidDistribution(format!(
                "partition weights for {s} sum to {total}, not 1"
            )));
        }
        Ok(())
    }
}

/// A probability distribution `q_S` over the coalitions `T ⊆ N \ S`.
#[derive(Debug, Clone, PartialEq)]
pub enum OutsideDistribution {
    BanzhafUniform,
    ShapleyOwen,
    /// Unlisted coalitions get weight zero.
    Explicit(BTreeMap<Coalition, Rational>),
}

impl OutsideDistribution {
    pub fn is_explicit(&self) -> bool {
        matches!(self, OutsideDistribution::Explicit(_))
    }

    pub fn weight(&self, n: usize, s: Coalition, t: Coalition) -> Rational {
        match self {
            OutsideDistribution::BanzhafUniform => banzhaf_outside_weight(n, s.len()),
            OutsideDistribution::ShapleyOwen => shapley_owen_outside_weight(n, s.len(), t.len()),
            OutsideDistribution::Explicit(map) => {
                map.get(&t).cloned().unwrap_or_else(Rational::zero)
            }
        }
    }

    pub fn validate_for(&self, n: usize, s: Coalition) -> Result<()> {
        let OutsideDistribution::Explicit(map) = self else {
            return Ok(());
        };
        let outside = Coalition::full(n).difference(s);
        let mut total = Rational::zero();
        for (t, w) in map {
            if !t.is_subset_of(outside) {
                return Err(Error::InvalidDistribution(format!(
                    "coalition {t} is not outside {s}"
                )));
            }
            if w.is_negative() {
                return Err(Error::InvalidDistribution(format!(
                    "negative weight on {t}"
                )));
            }
            total += w;
        }
        if total != Rational::from_integer(1.into()) {
            return Err(Error::InvalidDistribution(format!(
                "outside weights for {s} sum to {total}, not 1"
            )));
        }
        Ok(())
    }
}

/// The two standard instantiations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Banzhaf,
    ShapleyOwen,
}

impl Model {
    pub fn partition(self) -> PartitionDistribution {
        match self {
            Model::Banzhaf => PartitionDistribution::BanzhafUniform,
            Model::ShapleyOwen => PartitionDistribution::ShapleyOwen,
        }
    }

    pub fn outside(self) -> OutsideDistribution {
        match self {
            Model::Banzhaf => OutsideDistribution::BanzhafUniform,
            Model::ShapleyOwen => OutsideDistribution::ShapleyOwen,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Model::Banzhaf => "banzhaf",
            Model::ShapleyOwen => "shapley-owen",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "banzhaf" => Ok(Model::Banzhaf),
            "shapley-owen" => Ok(Model::ShapleyOwen),
            other => Err(Error::Parse(format!("unknown model `{other}`"))),
        }
    }
}
