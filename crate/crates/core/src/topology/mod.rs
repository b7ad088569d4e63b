//! Finite topologies and polytopological spaces over small ground sets.
//!
//! Subsets of an `n`-point ground set are bitmasks; point `i` is bit `i`.

mod bounds;
mod operator;
mod sweep;

pub use bounds::{is_saturated, verify_saturated_bound, verify_upper_bound, BoundReport};
pub use operator::{generate_monoid, orbit, GeneratedMonoid, Generator, SetOperator};
pub use sweep::{
    comparable_pairs, enumerate_topologies, search_incomparable, SearchOutcome, MAX_ENUMERATION,
};

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::alphabet::Letter;
use crate::error::{Error, Result};
use crate::words::FullWord;
use crate::Limits;

pub type SubsetMask = u32;

/// Largest ground set representable at all (operator tables have `2^n` entries).
pub const MAX_GROUND_BITS: usize = 16;

const DEFAULT_NAMES: [&str; 6] = ["x", "y", "z", "u", "v", "w"];

/// The points of a space, with display names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroundSet {
    names: Vec<String>,
}

impl GroundSet {
    /// Points named `x, y, z, u, v, w`, then `p6, p7, …`.
    pub fn new(size: usize) -> Result<Self> {
        let names = (0..size)
            .map(|i| match DEFAULT_NAMES.get(i) {
                Some(n) => n.to_string(),
                None => format!("p{i}"),
            })
            .collect();
        Self::named(names)
    }

    pub fn named(names: Vec<String>) -> Result<Self> {
        if names.is_empty() || names.len() > MAX_GROUND_BITS {
            return Err(Error::InvalidSpace(format!(
                "ground set must have 1 to {MAX_GROUND_BITS} points, got {}",
                names.len()
            )));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidSpace(format!("duplicate point name `{n}`")));
            }
        }
        Ok(Self { names })
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn full(&self) -> SubsetMask {
        full_mask(self.size())
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Names of the points in `mask`, in point order.
    pub fn describe(&self, mask: SubsetMask) -> Vec<&str> {
        (0..self.size())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| self.names[i].as_str())
            .collect()
    }
}

/// Rejects ground sets larger than the configured cap.
pub fn check_ground(size: usize, limits: &Limits) -> Result<()> {
    if size > limits.max_ground {
        return Err(Error::LimitExceeded {
            what: "ground set size",
            cap: limits.max_ground,
            requested: size,
        });
    }
    Ok(())
}

pub fn full_mask(size: usize) -> SubsetMask {
    if size >= 32 {
        u32::MAX
    } else {
        (1u32 << size) - 1
    }
}

pub fn complement(size: usize, a: SubsetMask) -> SubsetMask {
    !a & full_mask(size)
}

/// A topology on `{0, …, size-1}` with its interior operator tabulated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteTopology {
    size: usize,
    opens: Vec<SubsetMask>,
    interior: Vec<SubsetMask>,
}

/// Checks the topology axioms on `opens` and builds the topology.
pub fn validate_topology(size: usize, opens: &[SubsetMask]) -> Result<FiniteTopology> {
    if size == 0 || size > MAX_GROUND_BITS {
        return Err(Error::InvalidTopology(format!(
            "ground set must have 1 to {MAX_GROUND_BITS} points, got {size}"
        )));
    }
    let full = full_mask(size);
    let mut sorted: Vec<SubsetMask> = opens.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if let Some(&bad) = sorted.iter().find(|&&u| u & !full != 0) {
        return Err(Error::InvalidTopology(format!(
            "set {bad:#b} has points outside a {size}-point ground set"
        )));
    }
    if sorted.first() != Some(&0) {
        return Err(Error::InvalidTopology("the empty set is not open".into()));
    }
    if sorted.last() != Some(&full) {
        return Err(Error::InvalidTopology("the whole space is not open".into()));
    }
    let mut is_open = alloc::vec![false; 1 << size];
    for &u in &sorted {
        is_open[u as usize] = true;
    }
    for (i, &u) in sorted.iter().enumerate() {
        for &v in &sorted[i + 1..] {
            if !is_open[(u | v) as usize] {
                return Err(Error::InvalidTopology(format!(
                    "union of {u:#b} and {v:#b} is not open"
                )));
            }
            if !is_open[(u & v) as usize] {
                return Err(Error::InvalidTopology(format!(
                    "intersection of {u:#b} and {v:#b} is not open"
                )));
            }
        }
    }
    Ok(FiniteTopology::from_valid(size, sorted))
}

impl FiniteTopology {
    fn from_valid(size: usize, opens: Vec<SubsetMask>) -> Self {
        let interior = (0..1u32 << size)
            .map(|a| {
                opens
                    .iter()
                    .filter(|&&u| u & !a == 0)
                    .fold(0, |acc, &u| acc | u)
            })
            .collect();
        Self {
            size,
            opens,
            interior,
        }
    }

    pub fn discrete(size: usize) -> Self {
        Self::from_valid(size, (0..1u32 << size).collect())
    }

    pub fn antidiscrete(size: usize) -> Self {
        Self::from_valid(size, alloc::vec![0, full_mask(size)])
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Open sets in increasing mask order.
    pub fn opens(&self) -> &[SubsetMask] {
        &self.opens
    }

    pub fn is_open(&self, a: SubsetMask) -> bool {
        self.opens.binary_search(&a).is_ok()
    }

    /// Largest open subset of `a`.
    pub fn interior(&self, a: SubsetMask) -> SubsetMask {
        self.interior[a as usize]
    }

    /// Smallest closed superset of `a`.
    pub fn closure(&self, a: SubsetMask) -> SubsetMask {
        complement(self.size, self.interior(complement(self.size, a)))
    }

    /// True iff every open set of `self` is open in `other`.
    pub fn is_coarser_than(&self, other: &FiniteTopology) -> bool {
        self.size == other.size && self.opens.iter().all(|&u| other.is_open(u))
    }

    pub fn comparable_with(&self, other: &FiniteTopology) -> bool {
        self.is_coarser_than(other) || other.is_coarser_than(self)
    }
}

/// A ground set with a chain of topologies, coarsest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpace {
    ground: GroundSet,
    chain: Vec<FiniteTopology>,
}

impl PolySpace {
    /// Builds a space, checking that each topology refines the previous one.
    pub fn new(ground: GroundSet, chain: Vec<FiniteTopology>) -> Result<Self> {
        if chain.is_empty() {
            return Err(Error::InvalidSpace(
                "a space needs at least one topology".into(),
            ));
        }
        if let Some(t) = chain.iter().find(|t| t.size() != ground.size()) {
            return Err(Error::InvalidSpace(format!(
                "topology on {} points over a {}-point ground set",
                t.size(),
                ground.size()
            )));
        }
        for (i, pair) in chain.windows(2).enumerate() {
            if !pair[0].is_coarser_than(&pair[1]) {
                return Err(Error::InvalidSpace(format!(
                    "topology {i} is not contained in topology {}",
                    i + 1
                )));
            }
        }
        Ok(Self { ground, chain })
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn chain(&self) -> &[FiniteTopology] {
        &self.chain
    }

    pub fn size(&self) -> usize {
        self.ground.size()
    }

    /// Operator assigned to a letter: `Neg(i)` is the interior and `Pos(i)`
    /// the closure of topology `i`.
    pub fn letter_operator(&self, letter: Letter) -> Result<SetOperator> {
        let topology = |i: u8| {
            self.chain.get(i as usize).ok_or(Error::ForeignLetter {
                letter,
                n_neg: self.chain.len(),
                n_pos: self.chain.len(),
            })
        };
        Ok(match letter {
            Letter::Neg(i) => SetOperator::interior_of(topology(i)?),
            Letter::One => SetOperator::identity(self.size()),
            Letter::Pos(i) => SetOperator::closure_of(topology(i)?),
        })
    }

    /// The operator denoted by a full word.
    pub fn operator_of(&self, w: &FullWord) -> Result<SetOperator> {
        let ops = w
            .word
            .letters()
            .iter()
            .map(|&l| self.letter_operator(l))
            .collect::<Result<Vec<_>>>()?;
        let mut op = SetOperator::word(self.size(), ops.iter());
        if w.complemented {
            op = SetOperator::complement(self.size()).after(&op);
        }
        Ok(op)
    }

    pub fn eval(&self, w: &FullWord, a: SubsetMask) -> Result<SubsetMask> {
        Ok(self.operator_of(w)?.apply(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_reports() {
        assert!(validate_topology(2, &[0, 1, 3]).is_ok());
        let err = validate_topology(2, &[0, 1, 2]).unwrap_err();
        assert!(matches!(err, Error::InvalidTopology(ref m) if m.contains("whole space")));
        let err = validate_topology(2, &[0, 1, 2, 3]).map(|_| ());
        assert!(err.is_ok());
        let err = validate_topology(3, &[0, 1, 2, 7]).unwrap_err();
        assert!(matches!(err, Error::InvalidTopology(ref m) if m.contains("union")));
        assert!(validate_topology(3, &[0, 1, 4, 6, 5, 7]).is_ok());
        assert!(validate_topology(2, &[1, 3]).is_err());
        assert!(validate_topology(2, &[0, 3, 4]).is_err());
    }

    #[test]
    fn closure_and_interior() {
        let sierpinski = validate_topology(2, &[0, 1, 3]).unwrap();
        assert_eq!(sierpinski.closure(1), 3);
        assert_eq!(sierpinski.interior(2), 0);
        let d = FiniteTopology::discrete(3);
        for a in 0..8 {
            assert_eq!(d.closure(a), a);
            assert_eq!(d.interior(a), a);
        }
        assert_eq!(FiniteTopology::antidiscrete(2).closure(1), 3);
    }

    #[test]
    fn chains_must_refine() {
        let g = GroundSet::new(2).unwrap();
        let a = FiniteTopology::antidiscrete(2);
        let x = validate_topology(2, &[0, 1, 3]).unwrap();
        let y = validate_topology(2, &[0, 2, 3]).unwrap();
        assert!(PolySpace::new(g.clone(), alloc::vec![a.clone(), x.clone()]).is_ok());
        assert!(PolySpace::new(g.clone(), alloc::vec![x.clone(), a]).is_err());
        assert!(PolySpace::new(g, alloc::vec![x, y]).is_err());
    }

    #[test]
    fn ground_names() {
        let g = GroundSet::new(7).unwrap();
        assert_eq!(g.names()[0], "x");
        assert_eq!(g.names()[6], "p6");
        assert_eq!(g.describe(0b101), alloc::vec!["x", "z"]);
        assert!(GroundSet::new(0).is_err());
        assert!(GroundSet::named(alloc::vec!["a".into(), "a".into()]).is_err());
        assert!(check_ground(7, &Limits::default()).is_err());
    }
}
