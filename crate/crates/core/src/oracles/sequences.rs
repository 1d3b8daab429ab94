//! Shapley-Owen coopetition by explicit enumeration of entry orders.
//!
//! Deliberately naive: every ordering of the players in which `S` arrives
//! as a contiguous block is generated and scored. Nothing here uses the
//! closed-form coefficients.

use itertools::Itertools;
use num_bigint::BigInt;

use crate::coalition::{Coalition, PlayerId};
use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::rational::Rational;

/// Largest player count the enumeration accepts.
pub const SEQUENCE_MAX_PLAYERS: usize = 10;

/// An entry order in which the block `S` occupies consecutive positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntrySequence {
    order: Vec<PlayerId>,
    block_start: usize,
    block_len: usize,
}

impl EntrySequence {
    pub fn order(&self) -> &[PlayerId] {
        &self.order
    }

    /// The first `q` block members to arrive.
    pub fn first(&self, q: usize) -> Coalition {
        collect(&self.order[self.block_start..self.block_start + q])
    }

    /// The last `s - q` block members to arrive.
    pub fn last(&self, q: usize) -> Coalition {
        collect(&self.order[self.block_start + q..self.block_start + self.block_len])
    }

    /// Players that arrive before the block.
    pub fn predecessors(&self) -> Coalition {
        collect(&self.order[..self.block_start])
    }
}

fn collect(ps: &[PlayerId]) -> Coalition {
    ps.iter().fold(Coalition::EMPTY, |c, &p| c.with(p))
}

/// All of `Σ_S(N)`, `(n-s+1)! s!` sequences.
pub fn entry_sequences(n: usize, s: Coalition) -> Result<Vec<EntrySequence>> {
    if n > SEQUENCE_MAX_PLAYERS {
        return Err(Error::SizeGuard(format!(
            "sequence enumeration needs n <= {SEQUENCE_MAX_PLAYERS}, got {n}"
        )));
    }
    let members: Vec<PlayerId> = s.players().collect();
    let outsiders: Vec<Option<PlayerId>> = Coalition::full(n)
        .difference(s)
        .players()
        .map(Some)
        .chain(std::iter::once(None))
        .collect();
    let units = outsiders.len();
    let mut out = Vec::new();
    for arrangement in outsiders.into_iter().permutations(units) {
        let block_start = arrangement
            .iter()
            .position(Option::is_none)
            .expect("block marker");
        for inner in members.iter().copied().permutations(members.len()) {
            let mut order = Vec::with_capacity(n);
            for unit in &arrangement {
                match unit {
                    Some(p) => order.push(*p),
                    None => order.extend(inner.iter().copied()),
                }
            }
            out.push(EntrySequence {
                order,
                block_start,
                block_len: members.len(),
            });
        }
    }
    Ok(out)
}

fn block_value(game: &SimpleGame, a: Coalition, b: Coalition, pre: Coalition) -> i64 {
    let v = |c: Coalition| game.wins(c) as i64;
    v(a.union(b).union(pre)) - v(a.union(pre)) - v(b.union(pre)) + v(pre)
}

/// `Σ_{q=1}^{s-1} BI({F, L}, Pre)`, i.e. `(s-1)` times the sequential attitude.
fn sequential_total(game: &SimpleGame, seq: &EntrySequence) -> i64 {
    let pre = seq.predecessors();
    (1..seq.block_len)
        .map(|q| block_value(game, seq.first(q), seq.last(q), pre))
        .sum()
}

fn check(game: &SimpleGame, s: Coalition) -> Result<()> {
    game.check_coalition(s)?;
    if s.len() < 2 {
        return Err(Error::CoalitionTooSmall {
            coalition: s.to_string(),
            size: s.len(),
        });
    }
    Ok(())
}

/// Average of the sequential attitude over every sequence in `Σ_S(N)`.
pub fn so_coopetition_by_sequences(game: &SimpleGame, s: Coalition) -> Result<Rational> {
    check(game, s)?;
    let seqs = entry_sequences(game.n(), s)?;
    let total: i64 = seqs.iter().map(|seq| sequential_total(game, seq)).sum();
    let denom = BigInt::from(seqs.len()) * BigInt::from(s.len() - 1);
    Ok(Rational::new(BigInt::from(total), denom))
}

/// Average of the sequential attitude over the sequences whose
/// predecessors are exactly `T`.
pub fn so_attitude_by_sequences(game: &SimpleGame, s: Coalition, t: Coalition) -> Result<Rational> {
    check(game, s)?;
    game.check_coalition(t)?;
    if !s.is_disjoint(t) {
        return Err(Error::Overlap(s.to_string(), t.to_string()));
    }
    let seqs: Vec<_> = entry_sequences(game.n(), s)?
        .into_iter()
        .filter(|seq| seq.predecessors() == t)
        .collect();
    let total: i64 = seqs.iter().map(|seq| sequential_total(game, seq)).sum();
    let denom = BigInt::from(seqs.len()) * BigInt::from(s.len() - 1);
    Ok(Rational::new(BigInt::from(total), denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{factorial, int, ratio};

    fn c(ids: &[usize]) -> Coalition {
        Coalition::from_ids(ids.iter().copied()).unwrap()
    }

    #[test]
    fn sequence_counts() {
        for n in 2..=6usize {
            for s in Coalition::full(n).subsets().filter(|s| s.len() >= 2) {
                let seqs = entry_sequences(n, s).unwrap();
                let k = s.len() as u32;
                assert_eq!(
                    BigInt::from(seqs.len()),
                    factorial(n as u32 - k + 1) * factorial(k)
                );
                for seq in &seqs {
                    let pos: Vec<_> = seq
                        .order()
                        .iter()
                        .enumerate()
                        .filter(|(_, p)| s.contains(**p))
                        .map(|(i, _)| i)
                        .collect();
                    assert!(pos.windows(2).all(|w| w[1] == w[0] + 1));
                }
            }
        }
        assert!(matches!(
            entry_sequences(11, c(&[1, 2])),
            Err(Error::SizeGuard(_))
        ));
    }

    #[test]
    fn reproduces_known_values() {
        let v = SimpleGame::from_mwc_ids(5, &[&[1, 2, 3, 4], &[1, 4, 5]]).unwrap();
        assert_eq!(
            so_coopetition_by_sequences(&v, c(&[1, 2, 3, 4])).unwrap(),
            ratio(7, 9)
        );
        assert_eq!(
            so_attitude_by_sequences(&v, c(&[1, 2, 3, 4]), c(&[5])).unwrap(),
            ratio(5, 9)
        );
        let apex = SimpleGame::apex(5, PlayerId::new(1).unwrap()).unwrap();
        for s in apex.grand_coalition().subsets().filter(|s| s.len() >= 2) {
            assert_eq!(so_coopetition_by_sequences(&apex, s).unwrap(), int(0));
        }
    }

    #[test]
    fn table_three_disputed_cells() {
        let g = SimpleGame::majority(8, 7).unwrap();
        assert_eq!(
            so_coopetition_by_sequences(&g, Coalition::full(4)).unwrap(),
            ratio(4, 15)
        );
        let g = SimpleGame::majority(8, 8).unwrap();
        assert_eq!(
            so_coopetition_by_sequences(&g, Coalition::full(4)).unwrap(),
            ratio(1, 5)
        );
    }
}
