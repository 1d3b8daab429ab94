//! Cooperative/competitive split of the coopetition index and the
//! decisiveness index.

use crate::coalition::Coalition;
use crate::coopetition::{block_interaction, coopetition_sums};
use crate::distribution::{Model, OutsideDistribution, Partition2, PartitionDistribution};
use crate::error::Result;
use crate::game::SimpleGame;
use crate::rational::Rational;

/// `max(0, BI)`
pub fn block_cooperation(game: &SimpleGame, pi: &Partition2, t: Coalition) -> Result<u8> {
    Ok(block_interaction(game, pi, t)?.max(0) as u8)
}

/// `-min(0, BI)`
pub fn block_competition(game: &SimpleGame, pi: &Partition2, t: Coalition) -> Result<u8> {
    Ok((-block_interaction(game, pi, t)?.min(0)) as u8)
}

/// All four coalition-level values from one pass over `(T, π)`.
///
/// `coopetition = cooperative - competitive` and
/// `decisiveness = cooperative + competitive` hold exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexBundle {
    pub cooperative: Rational,
    pub competitive: Rational,
    pub coopetition: Rational,
    pub decisiveness: Rational,
}

pub fn index_bundle(
    game: &SimpleGame,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> Result<IndexBundle> {
    let sums = coopetition_sums(game, s, p, q)?;
    let coopetition = &sums.pos - &sums.neg;
    let decisiveness = &sums.pos + &sums.neg;
    debug_assert!(coopetition.clone() <= decisiveness);
    Ok(IndexBundle {
        cooperative: sums.pos,
        competitive: sums.neg,
        coopetition,
        decisiveness,
    })
}

pub fn model_bundle(game: &SimpleGame, s: Coalition, model: Model) -> Result<IndexBundle> {
    index_bundle(game, s, &model.partition(), &model.outside())
}

pub fn cooperative_index(
    game: &SimpleGame,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> Result<Rational> {
    Ok(coopetition_sums(game, s, p, q)?.pos)
}

pub fn competitive_index(
    game: &SimpleGame,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> Result<Rational> {
    Ok(coopetition_sums(game, s, p, q)?.neg)
}

/// `Σ_T q_S(T) Σ_π p_S(π) |BI(π, T)|`.
pub fn decisiveness(
    game: &SimpleGame,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> Result<Rational> {
    let sums = coopetition_sums(game, s, p, q)?;
    Ok(sums.pos + sums.neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::PlayerId;
    use crate::rational::{int, ratio};

    fn c(ids: &[usize]) -> Coalition {
        Coalition::from_ids(ids.iter().copied()).unwrap()
    }

    fn apex(n: usize) -> SimpleGame {
        SimpleGame::apex(n, PlayerId::new(1).unwrap()).unwrap()
    }

    #[test]
    fn block_parts() {
        let g = apex(5);
        let split = Partition2::new(c(&[1]), c(&[2, 3])).unwrap();
        assert_eq!(block_cooperation(&g, &split, Coalition::EMPTY).unwrap(), 1);
        assert_eq!(block_competition(&g, &split, Coalition::EMPTY).unwrap(), 0);
        assert_eq!(block_cooperation(&g, &split, c(&[4, 5])).unwrap(), 0);
        assert_eq!(block_competition(&g, &split, c(&[4, 5])).unwrap(), 1);
    }

    #[test]
    fn apex_banzhaf_decisiveness() {
        let b = model_bundle(&apex(5), c(&[2, 3]), Model::Banzhaf).unwrap();
        assert_eq!(b.coopetition, int(0));
        assert_eq!(b.decisiveness, ratio(1, 4));
        assert_eq!(b.cooperative, ratio(1, 8));
        let d = decisiveness(
            &apex(6),
            c(&[2, 3]),
            &PartitionDistribution::BanzhafUniform,
            &OutsideDistribution::BanzhafUniform,
        )
        .unwrap();
        assert_eq!(d, ratio(1, 8));
        for model in [Model::Banzhaf, Model::ShapleyOwen] {
            let full = model_bundle(&apex(5), Coalition::full(5), model).unwrap();
            assert_eq!(full.decisiveness, int(0));
        }
    }

    #[test]
    fn majority_cells() {
        let g = SimpleGame::majority(9, 5).unwrap();
        let b = model_bundle(&g, Coalition::full(9), Model::ShapleyOwen).unwrap();
        assert_eq!((b.coopetition, b.decisiveness), (int(0), int(0)));
        let g = SimpleGame::majority(8, 5).unwrap();
        let b = model_bundle(&g, Coalition::full(5), Model::ShapleyOwen).unwrap();
        assert_eq!((b.coopetition, b.decisiveness), (ratio(1, 4), ratio(1, 2)));
        let g = SimpleGame::majority(9, 7).unwrap();
        let b = model_bundle(&g, Coalition::full(4), Model::ShapleyOwen).unwrap();
        assert_eq!((b.coopetition, b.decisiveness), (ratio(1, 6), ratio(5, 18)));
    }

    #[test]
    fn single_mwc_is_fully_cooperative() {
        let g = SimpleGame::from_mwc_ids(5, &[&[2, 3, 5]]).unwrap();
        for model in [Model::Banzhaf, Model::ShapleyOwen] {
            let b = model_bundle(&g, c(&[2, 3, 5]), model).unwrap();
            assert_eq!((b.coopetition, b.decisiveness), (int(1), int(1)));
        }
    }

    #[test]
    fn separate_entry_points_agree_with_bundle() {
        let g = SimpleGame::weighted(vec![50, 50, 50, 24, 23, 1], 102).unwrap();
        let (p, q) = (
            PartitionDistribution::ShapleyOwen,
            OutsideDistribution::ShapleyOwen,
        );
        for s in g.grand_coalition().subsets().filter(|s| s.len() >= 2) {
            let b = index_bundle(&g, s, &p, &q).unwrap();
            assert_eq!(cooperative_index(&g, s, &p, &q).unwrap(), b.cooperative);
            assert_eq!(competitive_index(&g, s, &p, &q).unwrap(), b.competitive);
            assert_eq!(decisiveness(&g, s, &p, &q).unwrap(), b.decisiveness);
            assert_eq!(&b.cooperative - &b.competitive, b.coopetition);
        }
    }
}
