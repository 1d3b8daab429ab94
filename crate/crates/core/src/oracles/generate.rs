//! Game and distribution generators for randomized and exhaustive checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::Rng;

use crate::coalition::{Coalition, PlayerId};
use crate::distribution::{partitions2, OutsideDistribution, PartitionDistribution};
use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::rational::Rational;

/// Keeps the inclusion-minimal sets.
pub fn prune_to_antichain(mut sets: Vec<Coalition>) -> Vec<Coalition> {
    sets.sort_by(Coalition::cmp_size_lex);
    sets.dedup();
    let mut out: Vec<Coalition> = Vec::new();
    for s in sets {
        if !out.iter().any(|w| w.is_subset_of(s)) {
            out.push(s);
        }
    }
    out
}

fn random_nonempty_subset<R: Rng>(rng: &mut R, within: Coalition) -> Coalition {
    loop {
        let c = Coalition::from_bits(rng.gen::<u32>()).intersection(within);
        if !c.is_empty() {
            return c;
        }
    }
}

/// Samples `k` nonempty subsets uniformly, prunes them to an antichain and
/// uses it as the minimal winning coalitions.
pub fn random_monotone_game<R: Rng>(rng: &mut R, n: usize, k: usize) -> SimpleGame {
    random_game_on(rng, n, Coalition::full(n), k)
}

/// Like [`random_monotone_game`] but only players in `support` can appear
/// in a minimal winning coalition; the rest are null.
pub fn random_game_on<R: Rng>(rng: &mut R, n: usize, support: Coalition, k: usize) -> SimpleGame {
    let sets: Vec<Coalition> = (0..k)
        .map(|_| random_nonempty_subset(rng, support))
        .collect();
    let mut mwc = prune_to_antichain(sets);
    if mwc.is_empty() {
        mwc.push(support);
    }
    SimpleGame::from_minimal_winning(n, mwc).expect("antichain of nonempty sets")
}

/// Every monotone `{0,1}` function on `n` players with `v(∅) = 0` and
/// `v(N) = 1`, as games. Limited to `n <= 5` (7579 games at `n = 5`).
pub fn all_monotone_games(n: usize) -> Result<Vec<SimpleGame>> {
    if n > 5 {
        return Err(Error::SizeGuard(format!(
            "exhaustive enumeration needs n <= 5, got {n}"
        )));
    }
    // Truth tables indexed by coalition bits; bit n-1 splits a table into
    // the halves without and with player n, which must be nested.
    let mut tables: Vec<u64> = vec![0, 1];
    for k in 1..=n {
        let half = 1u32 << (k - 1);
        let mut next = Vec::new();
        for &lo in &tables {
            for &hi in &tables {
                if lo & !hi == 0 {
                    next.push(lo | (hi << half));
                }
            }
        }
        tables = next;
    }
    let size = 1u32 << n;
    Ok(tables
        .into_iter()
        .filter(|t| t & 1 == 0 && (t >> (size - 1)) & 1 == 1)
        .map(|t| {
            let winning = (0..size)
                .filter(|s| (t >> s) & 1 == 1)
                .map(Coalition::from_bits)
                .collect();
            SimpleGame::from_winning(n, winning).expect("monotone by construction")
        })
        .collect())
}

/// The same game with an extra null player `n + 1`.
pub fn with_null_player(game: &SimpleGame) -> Result<SimpleGame> {
    SimpleGame::from_minimal_winning(game.n() + 1, game.minimal_winning_coalitions())
}

/// Strictly positive random weights on `Π₂(S)`, summing to one.
pub fn random_positive_partition<R: Rng>(rng: &mut R, s: Coalition) -> PartitionDistribution {
    let raw: Vec<_> = partitions2(s)
        .expect("|S| >= 2")
        .map(|pi| (pi, rng.gen_range(1..=12i64)))
        .collect();
    let total: i64 = raw.iter().map(|(_, w)| w).sum();
    PartitionDistribution::Explicit(
        raw.into_iter()
            .map(|(pi, w)| (pi, Rational::new(BigInt::from(w), BigInt::from(total))))
            .collect(),
    )
}

/// Strictly positive random weights on all `T ⊆ N \ S`, summing to one.
pub fn random_positive_outside<R: Rng>(rng: &mut R, n: usize, s: Coalition) -> OutsideDistribution {
    let raw: Vec<_> = Coalition::full(n)
        .difference(s)
        .subsets()
        .map(|t| (t, rng.gen_range(1..=12i64)))
        .collect();
    let total: i64 = raw.iter().map(|(_, w)| w).sum();
    OutsideDistribution::Explicit(
        raw.into_iter()
            .map(|(t, w)| (t, Rational::new(BigInt::from(w), BigInt::from(total))))
            .collect::<BTreeMap<_, _>>(),
    )
}

/// Random weights on all `T ⊆ N \ S` where some entries may be zero.
pub fn random_outside<R: Rng>(rng: &mut R, n: usize, s: Coalition) -> OutsideDistribution {
    loop {
        let raw: Vec<_> = Coalition::full(n)
            .difference(s)
            .subsets()
            .map(|t| (t, rng.gen_range(0..=6i64)))
            .collect();
        let total: i64 = raw.iter().map(|(_, w)| w).sum();
        if total == 0 {
            continue;
        }
        return OutsideDistribution::Explicit(
            raw.into_iter()
                .filter(|(_, w)| *w != 0)
                .map(|(t, w)| (t, Rational::new(BigInt::from(w), BigInt::from(total))))
                .collect(),
        );
    }
}

/// Three games whose minimal winning coalitions differ only in how one set
/// `W` is split: `W` itself, then two overlapping covers `W₁ ∪ W₂ = W`, then
/// disjoint `Ŵ₁ ⊆ W₁`, `Ŵ₂ ⊆ W₂` with `Ŵ₁ ∪ Ŵ₂ = W`.
#[derive(Debug, Clone)]
pub struct SplitTriple {
    pub whole: Coalition,
    pub v: SimpleGame,
    pub w: SimpleGame,
    pub u: SimpleGame,
}

fn is_antichain(sets: &[Coalition]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets.iter()
            .enumerate()
            .all(|(j, b)| i == j || !a.is_subset_of(*b))
    })
}

/// Rejection-samples a [`SplitTriple`] on `n >= 3` players in which all three
/// set families are antichains.
pub fn random_split_triple<R: Rng>(rng: &mut R, n: usize) -> SplitTriple {
    assert!(n >= 3, "a split needs |W| >= 3");
    let full = Coalition::full(n);
    loop {
        let whole = random_nonempty_subset(rng, full);
        if whole.len() < 3 {
            continue;
        }
        let w1 = random_nonempty_subset(rng, whole);
        let w2 = random_nonempty_subset(rng, whole).union(whole.difference(w1));
        if w1 == whole || w2 == whole || w1.is_disjoint(w2) {
            continue;
        }
        let shared = w1.intersection(w2);
        let to_first = Coalition::from_bits(rng.gen::<u32>()).intersection(shared);
        let h1 = w1.difference(shared).union(to_first);
        let h2 = w2.difference(shared).union(shared.difference(to_first));
        if h1.is_empty() || h2.is_empty() {
            continue;
        }
        let others: Vec<Coalition> = (0..rng.gen_range(0..=3))
            .map(|_| random_nonempty_subset(rng, full))
            .collect();
        let fam = |extra: &[Coalition]| {
            let mut f = others.clone();
            f.extend_from_slice(extra);
            f
        };
        let (fv, fw, fu) = (fam(&[whole]), fam(&[w1, w2]), fam(&[h1, h2]));
        if ![&fv, &fw, &fu].iter().all(|f| is_antichain(f)) {
            continue;
        }
        let mk = |f: Vec<Coalition>| SimpleGame::from_minimal_winning(n, f).expect("antichain");
        return SplitTriple {
            whole,
            v: mk(fv),
            w: mk(fw),
            u: mk(fu),
        };
    }
}

/// A random player of `within`.
pub fn random_player<R: Rng>(rng: &mut R, within: Coalition) -> PlayerId {
    let ps: Vec<_> = within.players().collect();
    ps[rng.gen_range(0..ps.len())]
}
