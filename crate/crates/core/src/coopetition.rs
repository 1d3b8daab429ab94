//! Block interaction, attitude and coopetition indices.
//!
//! For the two closed-form models the hot loop only counts block
//! interaction values per `(|T|, |first block|)` class; weights are applied
//! once at the end. Explicit distributions take the general rational path.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::coalition::Coalition;
use crate::distribution::{
    partitions2, Model, OutsideDistribution, Partition2, PartitionDistribution,
};
use crate::error::{Error, Result};
use crate::game::SimpleGame;
use crate::rational::Rational;

/// Positive and negative parts of a weighted block interaction sum.
#[derive(Debug, Clone, PartialEq, Default)]
pub(crate) struct SignedSums {
    pub pos: Rational,
    pub neg: Rational,
}

/// `v(S₁∪S₂∪T) - v(S₁∪T) - v(S₂∪T) + v(T)`.
pub fn block_interaction(game: &SimpleGame, pi: &Partition2, t: Coalition) -> Result<i32> {
    game.check_disjoint(pi.union(), t)?;
    Ok(bi(game, pi.first().bits(), pi.second().bits(), t.bits()))
}

#[inline]
pub(crate) fn bi(game: &SimpleGame, a: u32, b: u32, t: u32) -> i32 {
    game.v(a | b | t) - game.v(a | t) - game.v(b | t) + game.v(t)
}

pub(crate) fn require_pair(game: &SimpleGame, s: Coalition) -> Result<()> {
    game.check_coalition(s)?;
    if s.len() < 2 {
        return Err(Error::CoalitionTooSmall {
            coalition: s.to_string(),
            size: s.len(),
        });
    }
    Ok(())
}

fn split_list(s: Coalition) -> Vec<(u32, u32, usize)> {
    partitions2(s)
        .expect("size checked")
        .map(|p| (p.first().bits(), p.second().bits(), p.first().len()))
        .collect()
}

/// Weighted sums over `π ∈ Π₂(S)` for a single `T`.
pub(crate) fn attitude_sums(
    game: &SimpleGame,
    s: Coalition,
    t: Coalition,
    p: &PartitionDistribution,
) -> Result<SignedSums> {
    require_pair(game, s)?;
    game.check_disjoint(s, t)?;
    p.validate_for(s)?;
    let mut out = SignedSums::default();
    for pi in partitions2(s)? {
        let x = bi(game, pi.first().bits(), pi.second().bits(), t.bits());
        if x != 0 {
            let w = p.weight(&pi);
            if x > 0 {
                out.pos += w;
            } else {
                out.neg += w;
            }
        }
    }
    Ok(out)
}

/// Weighted sums over `T ⊆ N \ S` and `π ∈ Π₂(S)`.
pub(crate) fn coopetition_sums(
    game: &SimpleGame,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> Result<SignedSums> {
    require_pair(game, s)?;
    p.validate_for(s)?;
    q.validate_for(game.n(), s)?;
    if p.is_explicit() || q.is_explicit() {
        Ok(general_sums(game, s, p, q))
    } else {
        Ok(class_sums(game, s, p, q))
    }
}

fn general_sums(
    game: &SimpleGame,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> SignedSums {
    let n = game.n();
    let parts: Vec<Partition2> = partitions2(s).expect("size checked").collect();
    let pw: Vec<Rational> = parts.iter().map(|pi| p.weight(pi)).collect();
    let mut out = SignedSums::default();
    for t in game.grand_coalition().difference(s).subsets() {
        let qw = q.weight(n, s, t);
        if qw.is_zero() {
            continue;
        }
        let mut pos = Rational::zero();
        let mut neg = Rational::zero();
        for (pi, w) in parts.iter().zip(&pw) {
            match bi(game, pi.first().bits(), pi.second().bits(), t.bits()) {
                1 => pos += w,
                -1 => neg += w,
                _ => {}
            }
        }
        out.pos += &qw * pos;
        out.neg += qw * neg;
    }
    out
}

fn class_sums(
    game: &SimpleGame,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> SignedSums {
    let n = game.n();
    let size = s.len();
    let outside = game.grand_coalition().difference(s);
    let splits = split_list(s);
    // counts[t][a] for |T| = t and first-block size a.
    let mut pos = vec![vec![0i64; size]; outside.len() + 1];
    let mut neg = vec![vec![0i64; size]; outside.len() + 1];
    let sb = s.bits();
    for t in outside.subsets() {
        let tb = t.bits();
        let vt = game.v(tb);
        let vst = game.v(sb | tb);
        // By monotonicity every block term equals v(T) when T wins, and 0
        // when S ∪ T loses.
        if vt == 1 || vst == 0 {
            continue;
        }
        let tl = t.len();
        for &(a, b, k) in &splits {
            let x = vst - game.v(a | tb) - game.v(b | tb) + vt;
            if x > 0 {
                pos[tl][k] += x as i64;
            } else if x < 0 {
                neg[tl][k] += (-x) as i64;
            }
        }
    }
    // Closed forms depend only on |T| and the block sizes, so any
    // representative of the class will do.
    let weight = |tl: usize, k: usize| {
        let whole = Coalition::full(size);
        let pi = Partition2::new(Coalition::full(k), whole.difference(Coalition::full(k)))
            .expect("nonempty blocks");
        q.weight(n, whole, Coalition::full(tl)) * p.weight(&pi)
    };
    let mut out = SignedSums::default();
    for tl in 0..=outside.len() {
        for k in 1..size {
            let (cp, cn) = (pos[tl][k], neg[tl][k]);
            if cp == 0 && cn == 0 {
                continue;
            }
            let w = weight(tl, k);
            if cp != 0 {
                out.pos += &w * BigInt::from(cp);
            }
            if cn != 0 {
                out.neg += w * BigInt::from(cn);
            }
        }
    }
    out
}

/// `Σ_{π∈Π₂(S)} p_S(π) BI(π, T)`.
pub fn attitude(
    game: &SimpleGame,
    s: Coalition,
    t: Coalition,
    p: &PartitionDistribution,
) -> Result<Rational> {
    let sums = attitude_sums(game, s, t, p)?;
    Ok(sums.pos - sums.neg)
}

/// `Σ_{T⊆N\S} q_S(T) A_p(S, T)`.
pub fn coopetition(
    game: &SimpleGame,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> Result<Rational> {
    let sums = coopetition_sums(game, s, p, q)?;
    Ok(sums.pos - sums.neg)
}

pub fn model_coopetition(game: &SimpleGame, s: Coalition, model: Model) -> Result<Rational> {
    coopetition(game, s, &model.partition(), &model.outside())
}

pub fn banzhaf_coopetition(game: &SimpleGame, s: Coalition) -> Result<Rational> {
    model_coopetition(game, s, Model::Banzhaf)
}

pub fn shapley_owen_coopetition(game: &SimpleGame, s: Coalition) -> Result<Rational> {
    model_coopetition(game, s, Model::ShapleyOwen)
}

pub fn banzhaf_attitude(game: &SimpleGame, s: Coalition, t: Coalition) -> Result<Rational> {
    attitude(game, s, t, &PartitionDistribution::BanzhafUniform)
}

pub fn shapley_owen_attitude(game: &SimpleGame, s: Coalition, t: Coalition) -> Result<Rational> {
    attitude(game, s, t, &PartitionDistribution::ShapleyOwen)
}
