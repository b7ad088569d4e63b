//! Free Kuratowski monoids with their multiplication table and order.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::{induced_hom, normalize_letters};
use crate::alphabet::{make_chain, ChainMorphism, PointedChain};
use crate::error::{Error, Result};
use crate::words::{enumerate_kuratowski_with, Word};
use crate::Limits;

/// Square bit matrix used for the order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let stride = n.div_ceil(64);
        Self {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.stride + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.stride + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.stride..(i + 1) * self.stride]
    }

    /// Warshall's algorithm on rows.
    fn close_transitively(&mut self) {
        for k in 0..self.n {
            let row_k: Vec<u64> = self.row(k).to_vec();
            for i in 0..self.n {
                if self.get(i, k) {
                    let base = i * self.stride;
                    for (dst, src) in self.bits[base..base + self.stride].iter_mut().zip(&row_k) {
                        *dst |= src;
                    }
                }
            }
        }
    }
}

/// The free Kuratowski monoid over a chain, materialized as tables.
#[derive(Debug, Clone)]
pub struct FreeKuratowskiMonoid {
    chain: PointedChain,
    elements: Vec<Word>,
    index: HashMap<Word, usize>,
    mult: Vec<u32>,
    order: BitMatrix,
}

impl FreeKuratowskiMonoid {
    pub fn chain(&self) -> &PointedChain {
        &self.chain
    }

    /// Normal forms in canonical order.
    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Index of the element equal to `w` in the monoid.
    pub fn index_of(&self, w: &Word) -> Result<usize> {
        w.check(&self.chain)?;
        let nf = normalize_letters(w.letters());
        self.index.get(&nf).copied().ok_or_else(|| {
            Error::Inconsistency(format!("normal form `{nf}` missing from the element list"))
        })
    }

    pub fn unit(&self) -> usize {
        self.index[&Word::unit()]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.mult[i * self.len() + j] as usize
    }

    pub fn mult_row(&self, i: usize) -> &[u32] {
        &self.mult[i * self.len()..(i + 1) * self.len()]
    }

    /// `elements[i] ≤ elements[j]`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.order.get(i, j)
    }

    /// All pairs `(i, j)` with `i ≤ j`, in lexicographic order.
    pub fn order_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.leq(i, j))
            .collect()
    }
}

pub fn build_free_monoid(chain: &PointedChain) -> Result<FreeKuratowskiMonoid> {
    build_free_monoid_with(chain, &Limits::default())
}

/// Builds the elements, the multiplication table and the order of the free
/// Kuratowski monoid over `chain`.
///
/// The order is generated by `w1 a w2 ≤ w1 b w2` for neighbouring letters
/// `a < b` and elements `w1`, `w2` (the unit standing for the empty
/// context), then closed reflexively and transitively.
pub fn build_free_monoid_with(
    chain: &PointedChain,
    limits: &Limits,
) -> Result<FreeKuratowskiMonoid> {
    let expected = crate::counting::kuratowski_number(chain.n_neg(), chain.n_pos());
    let cap = limits.max_free_monoid;
    if expected > num_bigint::BigUint::from(cap) {
        return Err(Error::LimitExceeded {
            what: "free monoid size",
            cap,
            requested: usize::try_from(&expected).unwrap_or(usize::MAX),
        });
    }
    let elements = enumerate_kuratowski_with(chain, limits)?;
    let n = elements.len();
    let index: HashMap<Word, usize> = elements.iter().cloned().zip(0..).collect();

    let mut mult = vec![0u32; n * n];
    let mut buf = Vec::new();
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            buf.clear();
            buf.extend_from_slice(a.letters());
            buf.extend_from_slice(b.letters());
            let nf = normalize_letters(&buf);
            let k = *index.get(&nf).ok_or_else(|| {
                Error::Inconsistency(format!("product `{a}`·`{b}` = `{nf}` is not enumerated"))
            })?;
            mult[i * n + j] = k as u32;
        }
    }

    let mut order = BitMatrix::new(n);
    let letters: Vec<usize> = chain.letters().map(|l| index[&Word::letter(l)]).collect();
    for i in 0..n {
        order.set(i, i);
    }
    for pair in letters.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        for i in 0..n {
            let (ia, ib) = (mult[i * n + a] as usize, mult[i * n + b] as usize);
            for j in 0..n {
                order.set(mult[ia * n + j] as usize, mult[ib * n + j] as usize);
            }
        }
    }
    order.close_transitively();
    for i in 0..n {
        for j in i + 1..n {
            if order.get(i, j) && order.get(j, i) {
                return Err(Error::Inconsistency(format!(
                    "order is not antisymmetric on `{}` and `{}`",
                    elements[i], elements[j]
                )));
            }
        }
    }

    Ok(FreeKuratowskiMonoid {
        chain: *chain,
        elements,
        index,
        mult,
        order,
    })
}

/// Covering pairs `(lower, upper)` of the order, sorted by index.
pub fn hasse_edges(m: &FreeKuratowskiMonoid) -> Vec<(usize, usize)> {
    let n = m.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !m.leq(i, j) {
                continue;
            }
            let covered = (0..n).any(|k| k != i && k != j && m.leq(i, k) && m.leq(k, j));
            if !covered {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// True iff every element is idempotent.
pub fn check_idempotency(m: &FreeKuratowskiMonoid) -> bool {
    (0..m.len()).all(|i| m.mul(i, i) == i)
}

/// The four surjections of the `(2,2)` chain that collapse one pair of
/// neighbouring letters, labelled by the ranks (counted from 1) they merge.
pub fn separating_morphisms() -> [(&'static str, ChainMorphism); 4] {
    let c22 = make_chain(2, 2);
    let merge = |r| ChainMorphism::merge_adjacent(c22, r).expect("rank is in range");
    [
        ("h12", merge(0)),
        ("h45", merge(3)),
        ("h23", merge(1)),
        ("h34", merge(2)),
    ]
}

/// Images of every element of the free monoid over `(2,2)` under the four
/// [`separating_morphisms`].
#[derive(Debug, Clone)]
pub struct QuadrupleReport {
    pub elements: Vec<Word>,
    /// `images[e][k]` is the image of element `e` under morphism `k`.
    pub images: Vec<[Word; 4]>,
    pub distinct_quadruples: usize,
    /// Distinct `(h12, h45)` pairs.
    pub distinct_first_pairs: usize,
    /// Distinct `(h23, h34)` pairs.
    pub distinct_second_pairs: usize,
    /// Distinct images under `h12` alone.
    pub distinct_first_images: usize,
}

impl QuadrupleReport {
    pub fn separates(&self) -> bool {
        self.distinct_quadruples == self.elements.len()
    }
}

fn count_distinct<T: Ord + Clone>(items: impl Iterator<Item = T>) -> usize {
    let mut v: Vec<T> = items.collect();
    v.sort();
    v.dedup();
    v.len()
}

pub fn quadruple_separation_check() -> Result<QuadrupleReport> {
    let elements = enumerate_kuratowski_with(&make_chain(2, 2), &Limits::default())?;
    let morphisms = separating_morphisms();
    let images = elements
        .iter()
        .map(|w| -> Result<[Word; 4]> {
            Ok([
                induced_hom(&morphisms[0].1, w)?,
                induced_hom(&morphisms[1].1, w)?,
                induced_hom(&morphisms[2].1, w)?,
                induced_hom(&morphisms[3].1, w)?,
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(QuadrupleReport {
        distinct_quadruples: count_distinct(images.iter().cloned()),
        distinct_first_pairs: count_distinct(images.iter().map(|q| (q[0].clone(), q[1].clone()))),
        distinct_second_pairs: count_distinct(images.iter().map(|q| (q[2].clone(), q[3].clone()))),
        distinct_first_images: count_distinct(images.iter().map(|q| q[0].clone())),
        elements,
        images,
    })
}
