//! Small spaces separating distinct Kuratowski words.
//!
//! For every ordered pair of distinct full Kuratowski words over a star chain
//! there is a two- or three-point bitopological space, a star-morphism from
//! the chain into its operators, and a test set on which the two words act
//! differently. The disjoint union of these components is a space whose
//! operator monoid has exactly `K(n)` elements, or `2 K(n)` with complement.

mod cases;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{ChainMorphism, Letter, PointedChain, StarChain};
use crate::error::{Error, Result};
use crate::topology::{
    validate_topology, FiniteTopology, GroundSet, PolySpace, SetOperator, SubsetMask,
};
use crate::words::{classify, enumerate_full_with, FullWord, Word};
use crate::Limits;

use cases::{separate_plain, Plan, Sides, POINT_X};

/// The bitopological spaces used as components.
///
/// Points are `x`, `y` (and `z`), bits 0, 1 (and 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogPair {
    /// Antidiscrete below discrete, on `{x, y}`.
    AntiDiscrete,
    /// Antidiscrete below `{∅, {x}, X}`.
    AntiX,
    /// Antidiscrete below `{∅, {y}, X}`.
    AntiY,
    /// `{x}, {z}` generated, below the same plus `{y, z}`; on `{x, y, z}`.
    XzYz,
    /// `{x}, {z}` generated, below the same plus `{x, y}`.
    XzXy,
}

impl CatalogPair {
    pub const ALL: [CatalogPair; 5] = [
        CatalogPair::AntiDiscrete,
        CatalogPair::AntiX,
        CatalogPair::AntiY,
        CatalogPair::XzYz,
        CatalogPair::XzXy,
    ];

    pub fn ground_size(self) -> usize {
        match self {
            CatalogPair::XzYz | CatalogPair::XzXy => 3,
            _ => 2,
        }
    }

    fn full(self) -> SubsetMask {
        (1 << self.ground_size()) - 1
    }

    /// Open sets of the coarse and the fine topology.
    pub fn opens(self) -> (&'static [SubsetMask], &'static [SubsetMask]) {
        match self {
            CatalogPair::AntiDiscrete => (&[0, 3], &[0, 1, 2, 3]),
            CatalogPair::AntiX => (&[0, 3], &[0, 1, 3]),
            CatalogPair::AntiY => (&[0, 3], &[0, 2, 3]),
            CatalogPair::XzYz => (&[0, 1, 4, 5, 7], &[0, 1, 4, 5, 6, 7]),
            CatalogPair::XzXy => (&[0, 1, 4, 5, 7], &[0, 1, 3, 4, 5, 7]),
        }
    }

    pub fn topologies(self) -> [FiniteTopology; 2] {
        let (coarse, fine) = self.opens();
        let size = self.ground_size();
        [coarse, fine].map(|o| validate_topology(size, o).expect("catalog topology"))
    }

    pub fn name(self) -> &'static str {
        match self {
            CatalogPair::AntiDiscrete => "a<d",
            CatalogPair::AntiX => "a<x",
            CatalogPair::AntiY => "a<y",
            CatalogPair::XzYz => "xz<xz,yz",
            CatalogPair::XzXy => "xz<xz,xy",
        }
    }
}

/// Where a negative letter is sent: interior of the coarse topology, of the
/// fine one, or the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Coarse,
    Fine,
    Identity,
}

impl Level {
    fn index(self) -> usize {
        self as usize
    }
}

/// A monotone assignment of levels to negative letters, given by thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Assignment {
    /// `Neg(i)` with `i` at most this goes to the coarse level.
    pub coarse_upto: Option<u8>,
    /// Remaining `Neg(i)` with `i` at most this go to the fine level.
    pub fine_upto: Option<u8>,
}

impl Assignment {
    pub const IDENTITY: Assignment = Assignment {
        coarse_upto: None,
        fine_upto: None,
    };

    pub fn level(&self, i: u8) -> Level {
        if self.coarse_upto.is_some_and(|c| i <= c) {
            Level::Coarse
        } else if self.fine_upto.is_some_and(|f| i <= f) {
            Level::Fine
        } else {
            Level::Identity
        }
    }

    pub fn levels(&self, n: usize) -> Vec<Level> {
        (0..n).map(|i| self.level(i as u8)).collect()
    }
}

/// Steps of the case analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Case {
    One,
    Two,
    Aa,
    Ab,
    Ac,
    Ad,
    Ae,
    Baaa,
    Baab,
    Bab,
    Bac,
    Bba,
    Bbb,
}

impl Case {
    pub fn name(self) -> &'static str {
        match self {
            Case::One => "1",
            Case::Two => "2",
            Case::Aa => "3aa",
            Case::Ab => "3ab",
            Case::Ac => "3ac",
            Case::Ad => "3ad",
            Case::Ae => "3ae",
            Case::Baaa => "3baaa",
            Case::Baab => "3baab",
            Case::Bab => "3bab",
            Case::Bac => "3bac",
            Case::Bba => "3bba",
            Case::Bbb => "3bbb",
        }
    }
}

/// The route a pair took through the case analysis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CaseLabel {
    /// Both words carry the complement prefix.
    pub complemented: bool,
    /// Reduced to the dual words because the shared letter is negative.
    pub dual: bool,
    pub leaf: Case,
    /// The planned component failed verification and was replaced.
    pub fallback: bool,
}

impl CaseLabel {
    pub fn leaf(leaf: Case) -> Self {
        Self {
            complemented: false,
            dual: false,
            leaf,
            fallback: false,
        }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.fallback {
            f.write_str("fallback:")?;
        }
        if self.complemented {
            f.write_str("4/")?;
        }
        if self.dual {
            f.write_str("dual/")?;
        }
        f.write_str(self.leaf.name())
    }
}

/// One separating component: a catalog pair, a star-morphism into its
/// operators and a test set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessComponent {
    pair: CatalogPair,
    assignment: Assignment,
    test_set: SubsetMask,
    label: CaseLabel,
    /// Interior tables per level, then closure tables per level.
    tables: [[u8; 8]; 6],
}

fn interior_table(size: usize, opens: &[SubsetMask]) -> [u8; 8] {
    let mut t = [0u8; 8];
    for (a, slot) in t.iter_mut().enumerate().take(1 << size) {
        *slot = opens
            .iter()
            .filter(|&&u| u & !(a as u32) == 0)
            .fold(0, |acc, &u| acc | u) as u8;
    }
    t
}

impl WitnessComponent {
    fn from_plan(plan: Plan) -> Self {
        let size = plan.pair.ground_size();
        let full = plan.pair.full() as u8;
        let (coarse, fine) = plan.pair.opens();
        let mut identity = [0u8; 8];
        for (a, slot) in identity.iter_mut().enumerate() {
            *slot = a as u8;
        }
        let ints = [
            interior_table(size, coarse),
            interior_table(size, fine),
            identity,
        ];
        let mut tables = [[0u8; 8]; 6];
        for (lvl, int) in ints.iter().enumerate() {
            tables[lvl] = *int;
            for a in 0..1usize << size {
                tables[3 + lvl][a] = !int[!a as u8 as usize & full as usize] & full;
            }
        }
        Self {
            pair: plan.pair,
            assignment: plan.assignment,
            test_set: plan.test_set,
            label: plan.label,
            tables,
        }
    }

    pub fn pair(&self) -> CatalogPair {
        self.pair
    }

    pub fn ground_size(&self) -> usize {
        self.pair.ground_size()
    }

    pub fn assignment(&self) -> Assignment {
        self.assignment
    }

    pub fn test_set(&self) -> SubsetMask {
        self.test_set
    }

    pub fn label(&self) -> CaseLabel {
        self.label
    }

    fn table(&self, letter: Letter) -> Option<&[u8; 8]> {
        match letter {
            Letter::One => None,
            Letter::Neg(i) => Some(&self.tables[self.assignment.level(i).index()]),
            Letter::Pos(i) => Some(&self.tables[3 + self.assignment.level(i).index()]),
        }
    }

    /// The operator assigned to `letter`.
    pub fn operator(&self, letter: Letter) -> SetOperator {
        let size = self.ground_size();
        match self.table(letter) {
            None => SetOperator::identity(size),
            Some(t) => SetOperator::from_table(t[..1 << size].iter().map(|&b| b as u32).collect())
                .expect("catalog table"),
        }
    }

    /// Image of `a` under the operator of `w`.
    pub fn eval_at(&self, w: &FullWord, a: SubsetMask) -> SubsetMask {
        let mut s = a as u8;
        for &l in w.word.letters().iter().rev() {
            if let Some(t) = self.table(l) {
                s = t[s as usize];
            }
        }
        if w.complemented {
            s = !s & self.pair.full() as u8;
        }
        s as SubsetMask
    }

    /// Image of the test set under the operator of `w`.
    pub fn eval(&self, w: &FullWord) -> SubsetMask {
        self.eval_at(w, self.test_set)
    }

    /// The component as a space with the chain `(coarse, fine)`.
    pub fn space(&self) -> PolySpace {
        PolySpace::new(
            GroundSet::new(self.ground_size()).expect("catalog ground"),
            self.pair.topologies().to_vec(),
        )
        .expect("catalog chain")
    }

    /// The assignment as a morphism from the star chain of size `n` to the
    /// star chain of size 2, whose letters `i0`, `i1` name the interiors of
    /// [`space`](Self::space).
    pub fn morphism(&self, n: usize) -> ChainMorphism {
        let a = self.assignment;
        ChainMorphism::from_fn(
            PointedChain::new(n, n),
            PointedChain::new(2, 2),
            move |l| match l {
                Letter::One => Letter::One,
                Letter::Neg(i) | Letter::Pos(i) => {
                    let image = match a.level(i) {
                        Level::Coarse => Letter::Neg(0),
                        Level::Fine => Letter::Neg(1),
                        Level::Identity => Letter::One,
                    };
                    if l.is_pos() {
                        image.star()
                    } else {
                        image
                    }
                }
            },
        )
    }

    fn separates(&self, u: &FullWord, v: &FullWord) -> bool {
        self.eval(u) != self.eval(v)
    }
}

fn starred(w: &Word) -> Vec<Letter> {
    w.letters().iter().map(|l| l.star()).collect()
}

fn plan_for(u: &FullWord, us: &[Letter], v: &FullWord, vs: &[Letter]) -> Plan {
    match (u.complemented, v.complemented) {
        (false, true) => plan_whole(Case::One),
        (true, false) => plan_whole(Case::Two),
        (c, _) => {
            let mut plan = separate_plain(
                Sides {
                    letters: u.word.letters(),
                    starred: us,
                },
                Sides {
                    letters: v.word.letters(),
                    starred: vs,
                },
            );
            plan.label.complemented = c;
            plan
        }
    }
}

fn plan_whole(case: Case) -> Plan {
    Plan {
        pair: CatalogPair::AntiDiscrete,
        assignment: Assignment::IDENTITY,
        test_set: POINT_X,
        label: CaseLabel::leaf(case),
    }
}

/// Every component of the catalog, over all monotone assignments for a
/// chain with `n` negative letters and all test sets.
fn exhaustive_search(
    u: &FullWord,
    v: &FullWord,
    n: usize,
    label: CaseLabel,
) -> Option<WitnessComponent> {
    let thresholds: Vec<Option<u8>> = core::iter::once(None)
        .chain((0..n as u8).map(Some))
        .collect();
    for pair in CatalogPair::ALL {
        for &coarse in &thresholds {
            for &fine in &thresholds {
                for test_set in 0..=pair.full() {
                    let c = WitnessComponent::from_plan(Plan {
                        pair,
                        assignment: Assignment {
                            coarse_upto: coarse,
                            fine_upto: fine,
                        },
                        test_set,
                        label: CaseLabel {
                            fallback: true,
                            ..label
                        },
                    });
                    if c.separates(u, v) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

fn checked_component(
    u: &FullWord,
    us: &[Letter],
    v: &FullWord,
    vs: &[Letter],
    n: usize,
) -> Result<WitnessComponent> {
    let plan = plan_for(u, us, v, vs);
    let c = WitnessComponent::from_plan(plan);
    if c.separates(u, v) {
        return Ok(c);
    }
    log::warn!(
        "case {} does not separate `{u}` and `{v}`; searching the catalog",
        plan.label
    );
    exhaustive_search(u, v, n, plan.label).ok_or_else(|| {
        Error::Inconsistency(format!(
            "no catalog component separates `{u}` and `{v}` (case {})",
            plan.label
        ))
    })
}

fn check_full_word(w: &FullWord, chain: &StarChain) -> Result<()> {
    w.word.check(chain.chain())?;
    if classify(&w.word, chain.chain()).is_none() {
        return Err(Error::Precondition(format!(
            "`{w}` is not a Kuratowski word"
        )));
    }
    Ok(())
}

/// A verified component on which `u` and `v` act differently.
pub fn separating_component(
    u: &FullWord,
    v: &FullWord,
    chain: &StarChain,
) -> Result<WitnessComponent> {
    check_full_word(u, chain)?;
    check_full_word(v, chain)?;
    if u == v {
        return Err(Error::Precondition(format!("`{u}` is given twice")));
    }
    checked_component(u, &starred(&u.word), v, &starred(&v.word), chain.n())
}

/// One component per ordered pair of distinct full Kuratowski words.
#[derive(Debug, Clone)]
pub struct WitnessSpace {
    chain: StarChain,
    words: Vec<FullWord>,
    components: Vec<((usize, usize), WitnessComponent)>,
}

impl WitnessSpace {
    pub fn chain(&self) -> &StarChain {
        &self.chain
    }

    /// The full Kuratowski words, in enumeration order.
    pub fn words(&self) -> &[FullWord] {
        &self.words
    }

    /// Components with the indices of the pair they separate.
    pub fn components(&self) -> &[((usize, usize), WitnessComponent)] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// Number of points of the disjoint union.
    pub fn point_count(&self) -> usize {
        self.components.iter().map(|(_, c)| c.ground_size()).sum()
    }

    pub fn histogram(&self) -> BTreeMap<String, usize> {
        let mut h = BTreeMap::new();
        for (_, c) in &self.components {
            *h.entry(c.label().to_string()).or_insert(0) += 1;
        }
        h
    }
}

fn prepared(chain: &StarChain, limits: &Limits) -> Result<(Vec<FullWord>, Vec<Vec<Letter>>)> {
    let words = enumerate_full_with(chain.chain(), limits)?;
    let stars = words.iter().map(|w| starred(&w.word)).collect();
    Ok((words, stars))
}

/// Builds the verified component of every ordered pair of distinct full
/// Kuratowski words.
pub fn build_witness(chain: &StarChain, limits: &Limits) -> Result<WitnessSpace> {
    let (words, stars) = prepared(chain, limits)?;
    let m = words.len();
    let pairs = m * (m - 1);
    if pairs > limits.max_witness_pairs {
        return Err(Error::LimitExceeded {
            what: "witness components",
            cap: limits.max_witness_pairs,
            requested: pairs,
        });
    }
    let mut components = Vec::with_capacity(pairs);
    for i in 0..m {
        for j in 0..m {
            if i != j {
                let c = checked_component(&words[i], &stars[i], &words[j], &stars[j], chain.n())?;
                components.push(((i, j), c));
            }
        }
    }
    Ok(WitnessSpace {
        chain: *chain,
        words,
        components,
    })
}

/// Image of the test set of component `index` under the operator of `w`.
pub fn eval_on_witness(w: &FullWord, space: &WitnessSpace, index: usize) -> Result<SubsetMask> {
    w.word.check(space.chain.chain())?;
    let (_, c) = space
        .components
        .get(index)
        .ok_or_else(|| Error::OutOfRange {
            what: "component index",
            detail: format!("{index} of {}", space.components.len()),
        })?;
    Ok(c.eval(w))
}

/// Result of checking every pair of full Kuratowski words on its component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certification {
    pub n: usize,
    pub kuratowski_count: usize,
    pub full_count: usize,
    pub pairs_checked: usize,
    pub case_histogram: BTreeMap<String, usize>,
}

impl Certification {
    pub fn fallbacks(&self) -> usize {
        self.case_histogram
            .iter()
            .filter(|(k, _)| k.starts_with("fallback"))
            .map(|(_, v)| v)
            .sum()
    }
}

/// Separates every ordered pair of distinct full Kuratowski words of the star
/// chain of size `n`, one pair at a time, and counts the words.
pub fn certify_exactness(n: usize, limits: &Limits) -> Result<Certification> {
    if n > limits.max_certify_side {
        return Err(Error::LimitExceeded {
            what: "certified chain size",
            cap: limits.max_certify_side,
            requested: n,
        });
    }
    let chain = StarChain::new(n);
    let (words, stars) = prepared(&chain, limits)?;
    let mut case_histogram = BTreeMap::new();
    let mut pairs_checked = 0;
    let mut labels: Vec<(CaseLabel, usize)> = Vec::new();
    for i in 0..words.len() {
        for j in 0..words.len() {
            if i == j {
                continue;
            }
            let c = checked_component(&words[i], &stars[i], &words[j], &stars[j], n)?;
            pairs_checked += 1;
            match labels.iter_mut().find(|(l, _)| *l == c.label) {
                Some((_, count)) => *count += 1,
                None => labels.push((c.label, 1)),
            }
        }
    }
    for (label, count) in labels {
        *case_histogram.entry(label.to_string()).or_insert(0) += count;
    }
    let kuratowski_count = words.iter().filter(|w| !w.complemented).count();
    Ok(Certification {
        n,
        kuratowski_count,
        full_count: words.len(),
        pairs_checked,
        case_histogram,
    })
}
