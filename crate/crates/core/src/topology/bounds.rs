//! Cardinality bounds for operator monoids.

use alloc::format;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use super::operator::generate_monoid;
use super::{FiniteTopology, PolySpace};
use crate::counting::kuratowski_number;
use crate::error::{Error, Result};

/// Observed monoid size against a bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub size: usize,
    pub bound: u128,
}

impl BoundReport {
    pub fn holds(&self) -> bool {
        self.size as u128 <= self.bound
    }

    /// `bound - size`, negative when the bound fails.
    pub fn margin(&self) -> i128 {
        self.bound as i128 - self.size as i128
    }
}

/// Compares the monoid size with `K(n)`, or `2 K(n)` with complement, where
/// `n` is the length of the chain.
pub fn verify_upper_bound(
    space: &PolySpace,
    with_complement: bool,
    max_size: usize,
) -> Result<BoundReport> {
    let n = space.chain().len();
    let k = kuratowski_number(n, n)
        .to_u128()
        .ok_or_else(|| Error::OutOfRange {
            what: "chain length",
            detail: format!("K({n}) does not fit in 128 bits"),
        })?;
    let bound = if with_complement { 2 * k } else { k };
    let size = generate_monoid(space, with_complement, max_size)?.len();
    Ok(BoundReport { size, bound })
}

/// True iff every nonempty open set of each topology of the chain has
/// nonempty interior in every other topology of the chain.
pub fn is_saturated(space: &PolySpace) -> bool {
    let chain = space.chain();
    chain.iter().all(|s| {
        chain
            .iter()
            .all(|t| s.opens().iter().all(|&u| u == 0 || t.interior(u) != 0))
    })
}

fn distinct_topologies(chain: &[FiniteTopology]) -> usize {
    let mut seen: Vec<&FiniteTopology> = Vec::new();
    for t in chain {
        if !seen.contains(&t) {
            seen.push(t);
        }
    }
    seen.len()
}

/// Compares the monoid size of a saturated space with `1 + 6 m`, where `m`
/// is the number of distinct topologies in its chain.
pub fn verify_saturated_bound(space: &PolySpace, max_size: usize) -> Result<BoundReport> {
    if !is_saturated(space) {
        return Err(Error::Precondition("the space is not saturated".into()));
    }
    let bound = 1 + 6 * distinct_topologies(space.chain()) as u128;
    let size = generate_monoid(space, false, max_size)?.len();
    Ok(BoundReport { size, bound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{validate_topology, GroundSet};

    fn space(size: usize, chain: &[&[u32]]) -> PolySpace {
        PolySpace::new(
            GroundSet::new(size).unwrap(),
            chain
                .iter()
                .map(|o| validate_topology(size, o).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn saturation_examples() {
        assert!(is_saturated(&space(2, &[&[0, 1, 3], &[0, 1, 3]])));
        assert!(!is_saturated(&space(2, &[&[0, 3], &[0, 1, 3]])));
        let s = space(3, &[&[0, 1, 7], &[0, 1, 3, 7]]);
        assert!(is_saturated(&s));
        let r = verify_saturated_bound(&s, 1000).unwrap();
        assert!(r.holds() && r.bound == 13);
        let dup = space(2, &[&[0, 3], &[0, 3]]);
        assert_eq!(verify_saturated_bound(&dup, 1000).unwrap().bound, 7);
        assert!(matches!(
            verify_saturated_bound(&space(2, &[&[0, 3], &[0, 1, 3]]), 1000),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn upper_bound_examples() {
        let s = space(2, &[&[0, 3], &[0, 1, 2, 3]]);
        let r = verify_upper_bound(&s, false, 1000).unwrap();
        assert_eq!(r.bound, 63);
        assert!(r.size <= 7);
        let r = verify_upper_bound(&s, true, 1000).unwrap();
        assert_eq!(r.bound, 126);
        assert!(r.holds());
        assert_eq!(BoundReport { size: 3, bound: 2 }.margin(), -1);
    }
}
