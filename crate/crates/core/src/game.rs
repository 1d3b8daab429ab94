//! Simple monotone games and their primitive predicates.

use std::fmt;

use crate::coalition::{Coalition, PlayerId, MAX_PLAYERS};
use crate::error::{Error, Result};

/// Games with at most this many players get a precomputed truth table.
pub const TABLE_MAX_PLAYERS: usize = 20;

/// How the characteristic function is described.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Representation {
    /// Every winning coalition, listed.
    ExplicitWinning(Vec<Coalition>),
    /// The minimal winning coalitions; the game is their upward closure.
    MinimalWinning(Vec<Coalition>),
    /// Wins iff the members' weights sum to at least `quota`.
    Weighted { weights: Vec<u64>, quota: u64 },
    /// Wins iff the apex and somebody else are in, or everybody but the apex.
    Apex(PlayerId),
    /// Wins iff at least `quota` players are in.
    Majority(usize),
}

impl Representation {
    fn wins(&self, n: usize, s: u32) -> bool {
        match self {
            Representation::ExplicitWinning(list) => {
                list.binary_search(&Coalition::from_bits(s)).is_ok()
            }
            Representation::MinimalWinning(list) => list.iter().any(|w| w.bits() & s == w.bits()),
            Representation::Weighted { weights, quota } => {
                let total: u64 = Coalition::from_bits(s)
                    .players()
                    .map(|p| weights.get(p.get() - 1).copied().unwrap_or(0))
                    .sum();
                total >= *quota
            }
            Representation::Apex(a) => {
                let s = Coalition::from_bits(s);
                let full = Coalition::full(n);
                (s.contains(*a) && s.len() >= 2) || s == full.without(*a)
            }
            Representation::Majority(k) => s.count_ones() as usize >= *k,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Representation::ExplicitWinning(_) => "winning",
            Representation::MinimalWinning(_) => "mwc",
            Representation::Weighted { .. } => "weighted",
            Representation::Apex(_) => "apex",
            Representation::Majority(_) => "majority",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ValidationOptions {
    /// Accept majority quotas with `k <= n/2`.
    pub allow_weak_quota: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    TooManyPlayers(usize),
    PlayerOutOfRange {
        id: usize,
    },
    EmptyCoalitionWins,
    GrandCoalitionLoses,
    NotMonotone {
        winning: Coalition,
        losing: Coalition,
    },
    NotAntichain {
        contained: Coalition,
        container: Coalition,
    },
    WeightCount {
        expected: usize,
        found: usize,
    },
    ZeroQuota,
    MajorityQuota {
        quota: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TooManyPlayers(n) => {
                write!(f, "too many players: {n} (at most {MAX_PLAYERS})")
            }
            Violation::PlayerOutOfRange { id } => write!(f, "player id {id} out of range"),
            Violation::EmptyCoalitionWins => f.write_str("empty coalition wins: v({}) must be 0"),
            Violation::GrandCoalitionLoses => f.write_str("grand coalition loses: v(N) must be 1"),
            Violation::NotMonotone { winning, losing } => {
                write!(
                    f,
                    "monotonicity violation: {{{winning}}} wins but superset {{{losing}}} loses"
                )
            }
            Violation::NotAntichain {
                contained,
                container,
            } => {
                write!(
                    f,
                    "antichain violation: {{{contained}}} is contained in {{{container}}}"
                )
            }
            Violation::WeightCount { expected, found } => {
                write!(f, "expected {expected} weights, found {found}")
            }
            Violation::ZeroQuota => f.write_str("quota must be positive"),
            Violation::MajorityQuota { quota } => {
                write!(f, "majority quota {quota} violates n/2 < k <= n")
            }
        }
    }
}

/// Outcome of [`validate`]; empty means valid.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks a candidate game description without constructing it.
pub fn validate(n: usize, repr: &Representation, opts: ValidationOptions) -> ValidationReport {
    let mut out = Vec::new();
    if n > MAX_PLAYERS {
        out.push(Violation::TooManyPlayers(n));
        return ValidationReport { violations: out };
    }
    let full = Coalition::full(n);
    let check_range = |c: &Coalition, out: &mut Vec<Violation>| {
        if !c.is_subset_of(full) {
            out.push(Violation::PlayerOutOfRange { id: c.max_id() });
        }
    };
    match repr {
        Representation::ExplicitWinning(list) => {
            list.iter().for_each(|c| check_range(c, &mut out));
            if out.is_empty() {
                for &w in list {
                    for p in full.difference(w).players() {
                        let up = w.with(p);
                        if !repr.wins(n, up.bits()) {
                            out.push(Violation::NotMonotone {
                                winning: w,
                                losing: up,
                            });
                        }
                    }
                }
            }
        }
        Representation::MinimalWinning(list) => {
            list.iter().for_each(|c| check_range(c, &mut out));
            for (i, &a) in list.iter().enumerate() {
                for &b in &list[i + 1..] {
                    if a.is_subset_of(b) {
                        out.push(Violation::NotAntichain {
                            contained: a,
                            container: b,
                        });
                    } else if b.is_subset_of(a) {
                        out.push(Violation::NotAntichain {
                            contained: b,
                            container: a,
                        });
                    }
                }
            }
        }
        Representation::Weighted { weights, quota } => {
            if weights.len() != n {
                out.push(Violation::WeightCount {
                    expected: n,
                    found: weights.len(),
                });
            }
            if *quota == 0 {
                out.push(Violation::ZeroQuota);
            }
        }
        Representation::Apex(a) => {
            if a.get() > n {
                out.push(Violation::PlayerOutOfRange { id: a.get() });
            }
        }
        Representation::Majority(k) => {
            let strict = 2 * k > n && *k <= n;
            if !strict && !(opts.allow_weak_quota && *k >= 1 && *k <= n) {
                out.push(Violation::MajorityQuota { quota: *k });
            }
        }
    }
    if out.is_empty() {
        if repr.wins(n, 0) {
            out.push(Violation::EmptyCoalitionWins);
        }
        if !repr.wins(n, full.bits()) {
            out.push(Violation::GrandCoalitionLoses);
        }
    }
    ValidationReport { violations: out }
}

/// A validated simple monotone game. Immutable after construction.
#[derive(Debug, Clone)]
pub struct SimpleGame {
    n: usize,
    repr: Representation,
    table: Option<Vec<bool>>,
}

impl PartialEq for SimpleGame {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.repr == other.repr
    }
}

impl SimpleGame {
    pub fn new(n: usize, repr: Representation) -> Result<Self> {
        Self::with_options(n, repr, ValidationOptions::default())
    }

    pub fn with_options(n: usize, repr: Representation, opts: ValidationOptions) -> Result<Self> {
        if n > MAX_PLAYERS {
            return Err(Error::TooManyPlayers(n));
        }
        let repr = match repr {
            Representation::ExplicitWinning(mut list) => {
                list.sort();
                list.dedup();
                Representation::ExplicitWinning(list)
            }
            Representation::MinimalWinning(mut list) => {
                list.sort_by(Coalition::cmp_size_lex);
                list.dedup();
                Representation::MinimalWinning(list)
            }
            other => other,
        };
        let report = validate(n, &repr, opts);
        if !report.is_valid() {
            return Err(Error::InvalidGame(report));
        }
        let table =
            (n <= TABLE_MAX_PLAYERS).then(|| (0..1u32 << n).map(|s| repr.wins(n, s)).collect());
        Ok(SimpleGame { n, repr, table })
    }

    pub fn from_minimal_winning(n: usize, mwc: Vec<Coalition>) -> Result<Self> {
        Self::new(n, Representation::MinimalWinning(mwc))
    }

    /// Convenience for literal 1-based id lists.
    pub fn from_mwc_ids(n: usize, mwc: &[&[usize]]) -> Result<Self> {
        let list = mwc
            .iter()
            .map(|ids| Coalition::from_ids(ids.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        Self::from_minimal_winning(n, list)
    }

    pub fn from_winning(n: usize, winning: Vec<Coalition>) -> Result<Self> {
        Self::new(n, Representation::ExplicitWinning(winning))
    }

    pub fn weighted(weights: Vec<u64>, quota: u64) -> Result<Self> {
        Self::new(weights.len(), Representation::Weighted { weights, quota })
    }

    pub fn apex(n: usize, apex: PlayerId) -> Result<Self> {
        Self::new(n, Representation::Apex(apex))
    }

    /// Symmetric majority game; requires `n/2 < quota <= n`.
    pub fn majority(n: usize, quota: usize) -> Result<Self> {
        Self::new(n, Representation::Majority(quota)).map_err(|e| match e {
            Error::InvalidGame(r)
                if r.violations
                    .iter()
                    .any(|v| matches!(v, Violation::MajorityQuota { .. })) =>
            {
                Error::MajorityQuota { n, quota }
            }
            e => e,
        })
    }

    /// Symmetric majority game with only `1 <= quota <= n` enforced.
    pub fn majority_relaxed(n: usize, quota: usize) -> Result<Self> {
        Self::with_options(
            n,
            Representation::Majority(quota),
            ValidationOptions {
                allow_weak_quota: true,
            },
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn representation(&self) -> &Representation {
        &self.repr
    }

    pub fn grand_coalition(&self) -> Coalition {
        Coalition::full(self.n)
    }

    pub fn check_coalition(&self, s: Coalition) -> Result<()> {
        if s.is_subset_of(self.grand_coalition()) {
            Ok(())
        } else {
            Err(Error::PlayerOutOfRange {
                id: s.max_id(),
                n: self.n,
            })
        }
    }

    pub fn check_player(&self, p: PlayerId) -> Result<()> {
        if p.get() <= self.n {
            Ok(())
        } else {
            Err(Error::PlayerOutOfRange {
                id: p.get(),
                n: self.n,
            })
        }
    }

    pub(crate) fn check_disjoint(&self, s: Coalition, t: Coalition) -> Result<()> {
        self.check_coalition(s)?;
        self.check_coalition(t)?;
        if s.is_disjoint(t) {
            Ok(())
        } else {
            Err(Error::Overlap(s.to_string(), t.to_string()))
        }
    }

    /// Unchecked evaluation on a raw mask; callers guarantee range.
    #[inline]
    pub(crate) fn v(&self, s: u32) -> i32 {
        debug_assert!(Coalition::from_bits(s).is_subset_of(self.grand_coalition()));
        match &self.table {
            Some(t) => t[s as usize] as i32,
            None => self.repr.wins(self.n, s) as i32,
        }
    }

    /// True iff `s` wins. `s` must lie within the player set.
    pub fn wins(&self, s: Coalition) -> bool {
        self.v(s.bits()) == 1
    }

    pub fn evaluate(&self, s: Coalition) -> Result<u8> {
        self.check_coalition(s)?;
        Ok(self.v(s.bits()) as u8)
    }

    /// `v(S ∪ T) - v(T)` for disjoint `S`, `T`.
    pub fn derivative(&self, s: Coalition, t: Coalition) -> Result<u8> {
        self.check_disjoint(s, t)?;
        Ok((self.v(s.union(t).bits()) - self.v(t.bits())) as u8)
    }

    pub fn is_critical(&self, s: Coalition, t: Coalition) -> Result<bool> {
        if s.is_empty() {
            return Err(Error::EmptyCoalition);
        }
        Ok(self.derivative(s, t)? == 1)
    }

    /// Critical, and no proper nonempty subset is. By monotonicity only the
    /// subsets of size `|S| - 1` need checking.
    pub fn is_essential_critical(&self, s: Coalition, t: Coalition) -> Result<bool> {
        if !self.is_critical(s, t)? {
            return Ok(false);
        }
        let tb = t.bits();
        Ok(s.len() == 1
            || s.players().all(|p| {
                let rest = s.without(p);
                self.v(rest.bits() | tb) == self.v(tb)
            }))
    }

    /// Null by full enumeration of `T ⊆ N \ {i}`.
    pub fn is_null_player(&self, i: PlayerId) -> Result<bool> {
        self.check_player(i)?;
        let others = self.grand_coalition().without(i);
        let me = Coalition::singleton(i).bits();
        Ok(others
            .subsets()
            .all(|t| self.v(t.bits() | me) == self.v(t.bits())))
    }

    /// Null iff absent from every minimal winning coalition.
    pub fn is_null_player_by_mwc(&self, i: PlayerId) -> Result<bool> {
        self.check_player(i)?;
        Ok(self
            .minimal_winning_coalitions()
            .iter()
            .all(|w| !w.contains(i)))
    }

    /// Winning coalitions with no winning one-player-removed subset, sorted by
    /// size then lexicographically.
    pub fn minimal_winning_coalitions(&self) -> Vec<Coalition> {
        if let Representation::MinimalWinning(list) = &self.repr {
            return list.clone();
        }
        let mut out: Vec<Coalition> = self
            .grand_coalition()
            .subsets()
            .filter(|&s| self.wins(s) && s.players().all(|p| !self.wins(s.without(p))))
            .collect();
        out.sort_by(Coalition::cmp_size_lex);
        out
    }

    pub fn validate(&self) -> ValidationReport {
        validate(
            self.n,
            &self.repr,
            ValidationOptions {
                allow_weak_quota: true,
            },
        )
    }
}
