//! Exhaustive enumeration of small topologies and orbit searches.

use alloc::vec::Vec;

use rand::Rng;

use super::operator::{orbit_under, SetOperator};
use super::{check_ground, full_mask, validate_topology, FiniteTopology, SubsetMask};
use crate::error::{Error, Result};
use crate::Limits;

/// Largest ground set accepted by [`enumerate_topologies`].
pub const MAX_ENUMERATION: usize = 4;

/// Every labeled topology on `size` points, in increasing order of the
/// bitmask of optional open sets.
pub fn enumerate_topologies(size: usize) -> Result<Vec<FiniteTopology>> {
    if size == 0 || size > MAX_ENUMERATION {
        return Err(Error::LimitExceeded {
            what: "enumerated ground set size",
            cap: MAX_ENUMERATION,
            requested: size,
        });
    }
    let full = full_mask(size);
    let middle: Vec<SubsetMask> = (1..full).collect();
    let mut out = Vec::new();
    let mut opens = Vec::with_capacity(1 << size);
    for choice in 0u64..1 << middle.len() {
        opens.clear();
        opens.push(0);
        opens.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| choice >> i & 1 == 1)
                .map(|(_, &u)| u),
        );
        opens.push(full);
        if let Ok(t) = validate_topology(size, &opens) {
            out.push(t);
        }
    }
    Ok(out)
}

/// Index pairs `(i, j)` with `topologies[i] ⊆ topologies[j]`, equal pairs included.
pub fn comparable_pairs(topologies: &[FiniteTopology]) -> Vec<(usize, usize)> {
    let n = topologies.len();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| topologies[i].is_coarser_than(&topologies[j]))
        .collect()
}

/// Best starting set found for a pair of incomparable topologies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub first: FiniteTopology,
    pub second: FiniteTopology,
    pub set: SubsetMask,
    /// Orbit size of `set` under the two closure operators.
    pub orbit_size: usize,
    pub candidates: usize,
    pub exhaustive: bool,
}

struct Best {
    outcome: Option<SearchOutcome>,
    candidates: usize,
}

impl Best {
    fn offer(
        &mut self,
        s: &FiniteTopology,
        t: &FiniteTopology,
        a: SubsetMask,
        ops: &[SetOperator],
    ) {
        self.candidates += 1;
        let size = orbit_under(ops, a).len();
        if !matches!(&self.outcome, Some(o) if size <= o.orbit_size) {
            self.outcome = Some(SearchOutcome {
                first: s.clone(),
                second: t.clone(),
                set: a,
                orbit_size: size,
                candidates: 0,
                exhaustive: false,
            });
        }
    }
}

fn random_topology<R: Rng + ?Sized>(size: usize, rng: &mut R) -> FiniteTopology {
    let full = full_mask(size);
    let mut opens: Vec<SubsetMask> = (0..rng.gen_range(1..=size + 1))
        .map(|_| rng.gen_range(0..=full))
        .collect();
    opens.push(0);
    opens.push(full);
    loop {
        let before = opens.len();
        let snapshot = opens.clone();
        for (i, &u) in snapshot.iter().enumerate() {
            for &v in &snapshot[i + 1..] {
                for w in [u | v, u & v] {
                    if !opens.contains(&w) {
                        opens.push(w);
                    }
                }
            }
        }
        if opens.len() == before {
            break;
        }
    }
    validate_topology(size, &opens).expect("closed under unions and intersections")
}

/// Searches pairs of incomparable topologies and starting sets for the
/// largest orbit under the two closure operators.
///
/// Ground sets of at most three points are searched exhaustively in
/// enumeration order; larger ones by `budget` random samples. Ties keep the
/// first maximizer. Returns `None` if no incomparable pair was seen.
pub fn search_incomparable<R: Rng + ?Sized>(
    ground_size: usize,
    budget: usize,
    limits: &Limits,
    rng: &mut R,
) -> Result<Option<SearchOutcome>> {
    check_ground(ground_size, limits)?;
    if ground_size == 0 {
        return Err(Error::InvalidSpace("ground set must be nonempty".into()));
    }
    let mut best = Best {
        outcome: None,
        candidates: 0,
    };
    let exhaustive = ground_size <= 3;
    if exhaustive {
        let tops = enumerate_topologies(ground_size)?;
        for (i, s) in tops.iter().enumerate() {
            for t in &tops[i + 1..] {
                if s.comparable_with(t) {
                    continue;
                }
                let ops = [SetOperator::closure_of(s), SetOperator::closure_of(t)];
                for a in 0..=full_mask(ground_size) {
                    best.offer(s, t, a, &ops);
                }
            }
        }
    } else {
        for _ in 0..budget {
            let s = random_topology(ground_size, rng);
            let t = random_topology(ground_size, rng);
            if s.comparable_with(&t) {
                continue;
            }
            let ops = [SetOperator::closure_of(&s), SetOperator::closure_of(&t)];
            let a = rng.gen_range(0..=full_mask(ground_size));
            best.offer(&s, &t, a, &ops);
        }
    }
    Ok(best.outcome.map(|mut o| {
        o.candidates = best.candidates;
        o.exhaustive = exhaustive;
        o
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::mock::StepRng;

    #[test]
    fn labeled_topology_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_topologies(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 4, 29, 355]);
        assert!(enumerate_topologies(5).is_err());
    }

    #[test]
    fn comparable_pairs_include_equal_ones() {
        let tops = enumerate_topologies(2).unwrap();
        let pairs = comparable_pairs(&tops);
        assert!(pairs.iter().any(|&(i, j)| i == j));
        // 4 equal pairs, 5 strict containments
        assert_eq!(pairs.len(), 9);
    }

    #[test]
    fn two_point_search() {
        let mut rng = StepRng::new(0, 1);
        let out = search_incomparable(2, 0, &Limits::default(), &mut rng)
            .unwrap()
            .unwrap();
        assert!(out.exhaustive);
        assert!(!out.first.comparable_with(&out.second));
        assert_eq!(out.candidates, 4);
        assert!(search_incomparable(1, 0, &Limits::default(), &mut rng)
            .unwrap()
            .is_none());
    }
}
