//! Operators on the powerset and the monoids they generate.

use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use hashbrown::{HashMap, HashSet};

use super::{complement, full_mask, FiniteTopology, PolySpace, SubsetMask};
use crate::error::{Error, Result};

/// A self-map of the powerset, stored as the image of every subset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetOperator {
    table: Vec<SubsetMask>,
}

impl SetOperator {
    pub fn from_table(table: Vec<SubsetMask>) -> Result<Self> {
        let n = table.len();
        if !n.is_power_of_two() {
            return Err(Error::InvalidSpace(alloc::format!(
                "operator table of length {n} is not a power of two"
            )));
        }
        let full = (n - 1) as SubsetMask;
        if table.iter().any(|&a| a & !full != 0) {
            return Err(Error::InvalidSpace(
                "operator image outside the ground set".into(),
            ));
        }
        Ok(Self { table })
    }

    pub fn identity(size: usize) -> Self {
        Self {
            table: (0..1u32 << size).collect(),
        }
    }

    pub fn complement(size: usize) -> Self {
        Self {
            table: (0..1u32 << size).map(|a| complement(size, a)).collect(),
        }
    }

    pub fn interior_of(t: &FiniteTopology) -> Self {
        Self {
            table: (0..1u32 << t.size()).map(|a| t.interior(a)).collect(),
        }
    }

    pub fn closure_of(t: &FiniteTopology) -> Self {
        Self {
            table: (0..1u32 << t.size()).map(|a| t.closure(a)).collect(),
        }
    }

    /// Composition `ops[0] ∘ ops[1] ∘ …`; the identity for an empty list.
    pub fn word<'a>(size: usize, ops: impl DoubleEndedIterator<Item = &'a SetOperator>) -> Self {
        let mut acc = Self::identity(size);
        for op in ops.rev() {
            acc = op.after(&acc);
        }
        acc
    }

    pub fn size(&self) -> usize {
        self.table.len().trailing_zeros() as usize
    }

    pub fn table(&self) -> &[SubsetMask] {
        &self.table
    }

    pub fn apply(&self, a: SubsetMask) -> SubsetMask {
        self.table[a as usize]
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &SetOperator) -> SetOperator {
        SetOperator {
            table: inner
                .table
                .iter()
                .map(|&a| self.table[a as usize])
                .collect(),
        }
    }

    /// `self(A) ⊆ other(A)` for every subset `A`.
    pub fn is_below(&self, other: &SetOperator) -> bool {
        self.table
            .iter()
            .zip(&other.table)
            .all(|(&a, &b)| a & !b == 0)
    }

    /// `c ∘ self ∘ c`.
    pub fn conjugate(&self) -> SetOperator {
        let c = SetOperator::complement(self.size());
        c.after(self).after(&c)
    }
}

/// A generator of an operator monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Interior(usize),
    Closure(usize),
    Complement,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Interior(i) => write!(f, "i{i}"),
            Generator::Closure(i) => write!(f, "k{i}"),
            Generator::Complement => f.write_str("c"),
        }
    }
}

/// The operators reachable from the identity by composing generators.
#[derive(Debug, Clone)]
pub struct GeneratedMonoid {
    pub generators: Vec<Generator>,
    /// Elements in breadth-first discovery order; the identity comes first.
    pub elements: Vec<SetOperator>,
    /// A shortest generator word for each element; empty for the identity.
    pub witnesses: Vec<Vec<Generator>>,
}

impl GeneratedMonoid {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn witness_text(&self, i: usize) -> String {
        use core::fmt::Write;
        let w = &self.witnesses[i];
        if w.is_empty() {
            return "1".into();
        }
        let mut s = String::new();
        for (k, g) in w.iter().enumerate() {
            if k > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{g}");
        }
        s
    }

    pub fn index_of(&self, op: &SetOperator) -> Option<usize> {
        self.elements.iter().position(|e| e == op)
    }

    /// `mult[i][j]` is the index of `elements[i] ∘ elements[j]`.
    pub fn mult_table(&self) -> Vec<Vec<usize>> {
        let index: HashMap<&SetOperator, usize> = self.elements.iter().zip(0..).collect();
        self.elements
            .iter()
            .map(|f| self.elements.iter().map(|g| index[&f.after(g)]).collect())
            .collect()
    }

    /// Pairs `(i, j)` with `elements[i] ≤ elements[j]` pointwise.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.elements[i].is_below(&self.elements[j]))
            .collect()
    }
}

pub(crate) fn generators_of(
    space: &PolySpace,
    with_complement: bool,
) -> Vec<(Generator, SetOperator)> {
    let mut gens = Vec::new();
    for (i, t) in space.chain().iter().enumerate() {
        gens.push((Generator::Interior(i), SetOperator::interior_of(t)));
        gens.push((Generator::Closure(i), SetOperator::closure_of(t)));
    }
    if with_complement {
        gens.push((Generator::Complement, SetOperator::complement(space.size())));
    }
    gens
}

/// Breadth-first closure of `generators` under composition.
pub(crate) fn generate_from(
    size: usize,
    generators: &[(Generator, SetOperator)],
    max_size: usize,
) -> Result<GeneratedMonoid> {
    let identity = SetOperator::identity(size);
    let mut seen: HashSet<SetOperator> = HashSet::new();
    seen.insert(identity.clone());
    let mut elements = vec![identity];
    let mut witnesses: Vec<Vec<Generator>> = vec![Vec::new()];
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (g, op) in generators {
            let next = op.after(&elements[i]);
            if seen.contains(&next) {
                continue;
            }
            if elements.len() == max_size {
                return Err(Error::LimitExceeded {
                    what: "operator monoid size",
                    cap: max_size,
                    requested: elements.len() + queue.len() + 1,
                });
            }
            seen.insert(next.clone());
            let mut w = vec![*g];
            w.extend_from_slice(&witnesses[i]);
            witnesses.push(w);
            elements.push(next);
            queue.push_back(elements.len() - 1);
        }
    }
    Ok(GeneratedMonoid {
        generators: generators.iter().map(|(g, _)| *g).collect(),
        elements,
        witnesses,
    })
}

/// The operator monoid of `space`, with complement if requested.
pub fn generate_monoid(
    space: &PolySpace,
    with_complement: bool,
    max_size: usize,
) -> Result<GeneratedMonoid> {
    generate_from(
        space.size(),
        &generators_of(space, with_complement),
        max_size,
    )
}

/// Images of `a` under every operator of the monoid, sorted.
pub fn orbit(space: &PolySpace, a: SubsetMask, with_complement: bool) -> Result<Vec<SubsetMask>> {
    if a & !full_mask(space.size()) != 0 {
        return Err(Error::InvalidSpace(alloc::format!(
            "set {a:#b} has points outside the ground set"
        )));
    }
    let ops: Vec<SetOperator> = generators_of(space, with_complement)
        .into_iter()
        .map(|(_, op)| op)
        .collect();
    Ok(orbit_under(&ops, a))
}

pub(crate) fn orbit_under(ops: &[SetOperator], a: SubsetMask) -> Vec<SubsetMask> {
    let mut seen: HashSet<SubsetMask> = HashSet::new();
    seen.insert(a);
    let mut stack = vec![a];
    while let Some(s) = stack.pop() {
        for op in ops {
            let t = op.apply(s);
            if seen.insert(t) {
                stack.push(t);
            }
        }
    }
    let mut out: Vec<SubsetMask> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::{validate_topology, GroundSet};

    fn single(opens: &[SubsetMask], size: usize) -> PolySpace {
        PolySpace::new(
            GroundSet::new(size).unwrap(),
            vec![validate_topology(size, opens).unwrap()],
        )
        .unwrap()
    }

    #[test]
    fn small_monoids() {
        let sierpinski = single(&[0, 1, 3], 2);
        assert_eq!(generate_monoid(&sierpinski, false, 100).unwrap().len(), 4);
        // int∘cl = cl and cl∘int = int when the only open sets are ∅ and X
        let anti = single(&[0, 3], 2);
        assert_eq!(generate_monoid(&anti, false, 100).unwrap().len(), 3);
        assert_eq!(generate_monoid(&anti, true, 100).unwrap().len(), 6);
        let discrete = single(&[0, 1, 2, 3], 2);
        assert_eq!(generate_monoid(&discrete, true, 100).unwrap().len(), 2);
    }

    #[test]
    fn witnesses_denote_their_elements() {
        let space = single(&[0, 1, 3], 2);
        let m = generate_monoid(&space, true, 100).unwrap();
        let gens = generators_of(&space, true);
        for (op, w) in m.elements.iter().zip(&m.witnesses) {
            let ops: Vec<&SetOperator> = w
                .iter()
                .map(|g| &gens.iter().find(|(h, _)| h == g).unwrap().1)
                .collect();
            assert_eq!(&SetOperator::word(2, ops.into_iter()), op);
        }
        assert_eq!(m.witness_text(0), "1");
    }

    #[test]
    fn cap_reports_frontier() {
        let anti = single(&[0, 3], 2);
        let err = generate_monoid(&anti, false, 2).unwrap_err();
        assert!(matches!(err, Error::LimitExceeded { cap: 2, .. }));
    }

    #[test]
    fn orbits() {
        let sierpinski = single(&[0, 1, 3], 2);
        assert_eq!(orbit(&sierpinski, 1, false).unwrap(), vec![1, 3]);
        assert_eq!(orbit(&sierpinski, 1, true).unwrap().len(), 4);
        let discrete = single(&[0, 1, 2, 3], 2);
        assert_eq!(orbit(&discrete, 2, false).unwrap(), vec![2]);
    }

    #[test]
    fn duality_of_tables() {
        let t = validate_topology(3, &[0, 1, 4, 5, 6, 7]).unwrap();
        let int = SetOperator::interior_of(&t);
        let cl = SetOperator::closure_of(&t);
        assert_eq!(cl.conjugate(), int);
        assert!(int.is_below(&SetOperator::identity(3)));
        assert!(SetOperator::identity(3).is_below(&cl));
    }
}
