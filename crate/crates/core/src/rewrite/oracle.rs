//! Brute-force congruence closure, independent of the rewriting strategy.
//!
//! All words up to a length bound are numbered; every instance of a
//! generating pair of the Kuratowski congruence found inside one of them is
//! merged with its shortened counterpart by union-find. The generating pairs
//! are, for `x1 ≤ x2 ≤ 1 ≤ y1 ≤ y2` and any letter `x`:
//!
//! ```text
//! x 1 ~ x      1 x ~ x      x x ~ x
//! x1 y1 x2 y2 ~ x1 y2      y2 x2 y1 x1 ~ y2 x1
//! ```
//!
//! Derivations may pass through longer words than the ones compared, so the
//! closure is computed over a window two letters longer than requested and
//! then restricted.

use alloc::vec;
use alloc::vec::Vec;

use crate::alphabet::{Letter, PointedChain};
use crate::error::{Error, Result};
use crate::words::Word;
use crate::Limits;

const PADDING: usize = 2;

/// Equivalence classes of all words of length `1..=max_len`.
#[derive(Debug, Clone)]
pub struct Partition {
    /// Words in canonical order.
    pub words: Vec<Word>,
    /// Class label of each word; labels are numbered by first occurrence.
    pub class_of: Vec<usize>,
    pub class_count: usize,
}

struct Numbering {
    base: usize,
    offsets: Vec<usize>,
}

impl Numbering {
    fn new(base: usize, max_len: usize) -> Self {
        let mut offsets = vec![0, 0];
        let mut block = 1;
        for _ in 1..=max_len {
            block *= base;
            offsets.push(offsets[offsets.len() - 1] + block);
        }
        Self { base, offsets }
    }

    fn total(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    fn encode(&self, ranks: &[usize]) -> usize {
        let local = ranks.iter().fold(0, |acc, &r| acc * self.base + r);
        self.offsets[ranks.len()] + local
    }

    fn decode(&self, id: usize, out: &mut Vec<usize>) {
        let len = self.offsets.iter().rposition(|&o| o <= id).unwrap();
        let mut local = id - self.offsets[len];
        out.clear();
        out.resize(len, 0);
        for slot in out.iter_mut().rev() {
            *slot = local % self.base;
            local /= self.base;
        }
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

pub fn congruence_closure_oracle(chain: &PointedChain, max_len: usize) -> Result<Partition> {
    congruence_closure_oracle_with(chain, max_len, &Limits::default())
}

pub fn congruence_closure_oracle_with(
    chain: &PointedChain,
    max_len: usize,
    limits: &Limits,
) -> Result<Partition> {
    let window = max_len + PADDING;
    let base = chain.len();
    let requested = (1..=window as u32)
        .try_fold(0usize, |acc, k| acc.checked_add(base.checked_pow(k)?))
        .unwrap_or(usize::MAX);
    if requested > limits.max_oracle_words {
        return Err(Error::LimitExceeded {
            what: "oracle word count",
            cap: limits.max_oracle_words,
            requested,
        });
    }
    let numbering = Numbering::new(base, window);
    let letters: Vec<Letter> = chain.letters().collect();
    let unit = chain.rank(Letter::One);
    let mut parent: Vec<usize> = (0..numbering.total()).collect();
    let mut ranks = Vec::new();
    let mut shorter = Vec::new();
    for id in numbering.offsets[1]..numbering.total() {
        numbering.decode(id, &mut ranks);
        let len = ranks.len();
        let mut link = |skip_from: usize, skip_len: usize, parent: &mut [usize]| {
            shorter.clear();
            shorter.extend_from_slice(&ranks[..skip_from]);
            shorter.extend_from_slice(&ranks[skip_from + skip_len..]);
            union(parent, id, numbering.encode(&shorter));
        };
        for p in 0..len {
            if len > 1 && ranks[p] == unit {
                link(p, 1, &mut parent);
            }
            if p + 1 < len && ranks[p] == ranks[p + 1] {
                link(p, 1, &mut parent);
            }
            if p + 3 < len {
                let (a, b, c, d) = (ranks[p], ranks[p + 1], ranks[p + 2], ranks[p + 3]);
                // x1 y1 x2 y2 with x1 ≤ x2 ≤ 1 ≤ y1 ≤ y2
                let forward = a <= c && c <= unit && unit <= b && b <= d;
                // y2 x2 y1 x1 with x1 ≤ x2 ≤ 1 ≤ y1 ≤ y2
                let backward = d <= b && b <= unit && unit <= c && c <= a;
                if forward || backward {
                    link(p + 1, 2, &mut parent);
                }
            }
        }
    }

    let restricted_end = numbering.offsets[max_len + 1];
    let mut entries: Vec<(Word, usize)> = (numbering.offsets[1]..restricted_end)
        .map(|id| {
            numbering.decode(id, &mut ranks);
            let w = Word::new(ranks.iter().map(|&r| letters[r]).collect())
                .expect("numbered words are nonempty");
            (w, find(&mut parent, id))
        })
        .collect();
    entries.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let mut labels = hashbrown::HashMap::new();
    let mut class_of = Vec::with_capacity(entries.len());
    for (_, root) in &entries {
        let next = labels.len();
        class_of.push(*labels.entry(*root).or_insert(next));
    }
    Ok(Partition {
        class_count: labels.len(),
        words: entries.into_iter().map(|(w, _)| w).collect(),
        class_of,
    })
}
