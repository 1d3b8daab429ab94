//! Case-split closed forms for the apex game, for comparison against
//! enumeration.

use num_traits::Zero;

use crate::coalition::{Coalition, PlayerId};
use crate::distribution::{OutsideDistribution, Partition2, PartitionDistribution};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// `(coopetition, decisiveness)` of `S` in the apex game on `n` players with
/// apex `a`, for arbitrary distributions.
pub fn apex_closed_forms(
    n: usize,
    a: PlayerId,
    s: Coalition,
    p: &PartitionDistribution,
    q: &OutsideDistribution,
) -> Result<(Rational, Rational)> {
    let full = Coalition::full(n);
    if !s.is_subset_of(full) || a.get() > n {
        return Err(Error::PlayerOutOfRange {
            id: s.max_id().max(a.get()),
            n,
        });
    }
    if s.len() < 2 {
        return Err(Error::CoalitionTooSmall {
            coalition: s.to_string(),
            size: s.len(),
        });
    }
    p.validate_for(s)?;
    q.validate_for(n, s)?;
    if s == full {
        return Ok((Rational::zero(), Rational::zero()));
    }
    let apex = Coalition::singleton(a);
    if !s.contains(a) {
        let rest = q.weight(n, s, full.difference(s.union(apex)));
        let with_apex = q.weight(n, s, apex);
        Ok((&rest - &with_apex, rest + with_apex))
    } else {
        let pi = Partition2::new(apex, s.without(a))?;
        let pw = p.weight(&pi);
        let alone = q.weight(n, s, Coalition::EMPTY);
        let everyone = q.weight(n, s, full.difference(s));
        Ok(((&alone - &everyone) * &pw, (alone + everyone) * pw))
    }
}
