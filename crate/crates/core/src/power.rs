//! Classical coalition-level indices: generalized Shapley value, the
//! profitability index and the Shapley interaction index.

use num_bigint::BigInt;

use crate::coalition::Coalition;
use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::rational::{factorial, Rational};

/// `(n-s-t)! t! / (n-s+1)!`
fn coefficient(n: usize, s: usize, t: usize) -> Rational {
    let (n, s, t) = (n as u32, s as u32, t as u32);
    Rational::new(factorial(n - s - t) * factorial(t), factorial(n - s + 1))
}

/// Sums `coefficient(n, s, t) * counts[t]`.
fn combine(n: usize, s: usize, counts: &[i64]) -> Rational {
    counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(t, &c)| coefficient(n, s, t) * BigInt::from(c))
        .sum()
}

fn nonempty(game: &SimpleGame, s: Coalition) -> Result<()> {
    game.check_coalition(s)?;
    if s.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    Ok(())
}

/// Generalized Shapley value of `S`; the classical Shapley value for a
/// singleton.
pub fn generalized_shapley(game: &SimpleGame, s: Coalition) -> Result<Rational> {
    nonempty(game, s)?;
    let n = game.n();
    let outside = game.grand_coalition().difference(s);
    let mut counts = vec![0i64; outside.len() + 1];
    for t in outside.subsets() {
        counts[t.len()] += (game.v(s.union(t).bits()) - game.v(t.bits())) as i64;
    }
    Ok(combine(n, s.len(), &counts))
}

/// `Φ(S) - Σ_{i∈S} Φ(i)`.
pub fn profitability(game: &SimpleGame, s: Coalition) -> Result<Rational> {
    let joint = generalized_shapley(game, s)?;
    s.players().try_fold(joint, |acc, p| {
        Ok(acc - generalized_shapley(game, Coalition::singleton(p))?)
    })
}

/// `Σ_{L⊆S} (-1)^{|S|-|L|} v(L ∪ T)`.
pub fn interaction_indicator(game: &SimpleGame, s: Coalition, t: Coalition) -> Result<i64> {
    nonempty(game, s)?;
    game.check_disjoint(s, t)?;
    Ok(indicator(game, s, t))
}

fn indicator(game: &SimpleGame, s: Coalition, t: Coalition) -> i64 {
    let size = s.len();
    s.subsets()
        .map(|l| {
            let v = game.v(l.bits() | t.bits()) as i64;
            if (size - l.len()).is_multiple_of(2) {
                v
            } else {
                -v
            }
        })
        .sum()
}

/// Shapley interaction index of `S`.
pub fn shapley_interaction(game: &SimpleGame, s: Coalition) -> Result<Rational> {
    nonempty(game, s)?;
    let outside = game.grand_coalition().difference(s);
    let mut counts = vec![0i64; outside.len() + 1];
    for t in outside.subsets() {
        counts[t.len()] += indicator(game, s, t);
    }
    Ok(combine(game.n(), s.len(), &counts))
}
