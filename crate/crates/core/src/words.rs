//! Words over a pointed chain and the families of Kuratowski words.
//!
//! A word `x0 x1 … xn` denotes the composition `x0 ∘ x1 ∘ … ∘ xn`, so the
//! last letter acts first. A Kuratowski word is a single letter or an
//! alternating word whose negative letters form a valley and whose positive
//! letters form a peak, with the two extrema next to each other:
//!
//! * `Vmp(m)`: unique negative minimum at `m`, unique positive maximum at `m+1`;
//! * `Vpm(m)`: unique positive maximum at `m`, unique negative minimum at `m+1`;
//! * `Wminus(m)`: the negative minimum occurs twice, at `m-1` and `m+1`, and the
//!   positive maximum sits between them at `m`;
//! * `Wplus(m)`: the positive maximum occurs twice, at `m-1` and `m+1`, and the
//!   negative minimum sits at `m`.
//!
//! "Valley" means strictly increasing moving away from the minimum in both
//! directions; "peak" means strictly decreasing moving away from the maximum.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::alphabet::{parse_symbols, Letter, PointedChain, Symbol};
use crate::error::{Error, Result};
use crate::Limits;

/// A nonempty word over a chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if letters.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Ok(Self(letters))
        }
    }

    pub fn unit() -> Self {
        Self(alloc::vec![Letter::One])
    }

    pub fn letter(l: Letter) -> Self {
        Self(alloc::vec![l])
    }

    /// Parses whitespace-separated tokens, checking membership in `chain`.
    pub fn parse(text: &str, chain: &PointedChain) -> Result<Self> {
        Self::new(chain.parse_letters(text)?)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Letter-wise image under the involution.
    pub fn star(&self) -> Word {
        Word(self.0.iter().map(|l| l.star()).collect())
    }

    pub fn check(&self, chain: &PointedChain) -> Result<()> {
        self.0.iter().try_for_each(|&l| chain.check(l).map(|_| ()))
    }

    /// Canonical order: length first, then lexicographic by letter rank.
    pub fn canonical_cmp(&self, other: &Word) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tokens(f, self.0.iter())
    }
}

fn write_tokens<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    tokens: impl Iterator<Item = T>,
) -> fmt::Result {
    for (i, t) in tokens.enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        t.fmt(f)?;
    }
    Ok(())
}

/// A word with an optional leading complement.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullWord {
    pub complemented: bool,
    pub word: Word,
}

impl FullWord {
    pub fn plain(word: Word) -> Self {
        Self {
            complemented: false,
            word,
        }
    }

    pub fn complement(word: Word) -> Self {
        Self {
            complemented: true,
            word,
        }
    }

    /// Parses tokens where `c` may appear only in front.
    pub fn parse(text: &str, chain: &PointedChain) -> Result<Self> {
        let symbols = parse_symbols(text)?;
        let complemented = symbols.first() == Some(&Symbol::Complement);
        let rest = &symbols[usize::from(complemented)..];
        let letters = rest
            .iter()
            .map(|s| match *s {
                Symbol::Letter(l) => chain.check(l),
                Symbol::Complement => Err(Error::MisplacedComplement),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            complemented,
            word: Word::new(letters)?,
        })
    }

    pub fn canonical_cmp(&self, other: &FullWord) -> Ordering {
        self.complemented
            .cmp(&other.complemented)
            .then_with(|| self.word.canonical_cmp(&other.word))
    }
}

impl fmt::Display for FullWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.complemented {
            f.write_str("c ")?;
        }
        self.word.fmt(f)
    }
}

/// The family a Kuratowski word belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    Single,
    Vmp,
    Vpm,
    Wminus,
    Wplus,
}

impl ClassTag {
    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Single => "single",
            ClassTag::Vmp => "vmp",
            ClassTag::Vpm => "vpm",
            ClassTag::Wminus => "wminus",
            ClassTag::Wplus => "wplus",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct WordClass {
    pub tag: ClassTag,
    /// `None` exactly for single letters.
    pub pivot: Option<usize>,
}

impl WordClass {
    fn at(tag: ClassTag, m: usize) -> Self {
        Self {
            tag,
            pivot: Some(m),
        }
    }
}

/// True iff every pair of neighbours has one negative and one positive letter.
pub fn is_alternating(w: &Word) -> bool {
    w.letters()
        .windows(2)
        .all(|p| (p[0].is_neg() && p[1].is_pos()) || (p[0].is_pos() && p[1].is_neg()))
}

/// Where the extremum of one sign sits among positions of that sign.
enum Extremum {
    Unique(usize),
    /// Two equal extremal letters at positions `i` and `i + 2`.
    Double(usize),
}

/// Checks that `values` (listed in word order at positions
/// `first, first+2, …`) strictly rise towards a single top or towards two
/// equal neighbouring tops, and strictly fall after it.
fn peak_of(values: &[usize], first: usize) -> Option<Extremum> {
    let top = *values.iter().max()?;
    let at = values.iter().position(|&v| v == top)?;
    let rising = values[..=at].windows(2).all(|p| p[0] < p[1]);
    let (ext, rest) = if values.get(at + 1) == Some(&top) {
        (Extremum::Double(first + 2 * at), at + 1)
    } else {
        (Extremum::Unique(first + 2 * at), at)
    };
    let falling = values[rest..].windows(2).all(|p| p[0] > p[1]);
    (rising && falling).then_some(ext)
}

/// Determines the family of `w`, or `None` if `w` is not a Kuratowski word.
///
/// The pivot is determined uniquely by the shape of the word.
pub fn classify(w: &Word, chain: &PointedChain) -> Option<WordClass> {
    let letters = w.letters();
    if letters.iter().any(|&l| !chain.contains(l)) {
        return None;
    }
    if letters.len() == 1 {
        return Some(WordClass {
            tag: ClassTag::Single,
            pivot: None,
        });
    }
    if !is_alternating(w) {
        return None;
    }
    let neg_first = usize::from(!letters[0].is_neg());
    let pos_first = 1 - neg_first;
    // Negative valleys become peaks once ranks are flipped.
    let flip = chain.len();
    let negs: Vec<usize> = letters[neg_first..]
        .iter()
        .step_by(2)
        .map(|&l| flip - chain.rank(l))
        .collect();
    let poss: Vec<usize> = letters[pos_first..]
        .iter()
        .step_by(2)
        .map(|&l| chain.rank(l))
        .collect();
    let valley = peak_of(&negs, neg_first)?;
    let peak = peak_of(&poss, pos_first)?;
    match (valley, peak) {
        (Extremum::Unique(a), Extremum::Unique(b)) if b == a + 1 => {
            Some(WordClass::at(ClassTag::Vmp, a))
        }
        (Extremum::Unique(a), Extremum::Unique(b)) if a == b + 1 => {
            Some(WordClass::at(ClassTag::Vpm, b))
        }
        (Extremum::Double(a), Extremum::Unique(b)) if b == a + 1 => {
            Some(WordClass::at(ClassTag::Wminus, b))
        }
        (Extremum::Unique(a), Extremum::Double(b)) if a == b + 1 => {
            Some(WordClass::at(ClassTag::Wplus, a))
        }
        _ => None,
    }
}

pub fn is_kuratowski(w: &Word, chain: &PointedChain) -> bool {
    classify(w, chain).is_some()
}

fn check_chain_limit(chain: &PointedChain, limits: &Limits) -> Result<()> {
    let requested = chain.n_neg().max(chain.n_pos());
    if requested > limits.max_chain_side {
        return Err(Error::LimitExceeded {
            what: "chain side",
            cap: limits.max_chain_side,
            requested,
        });
    }
    Ok(())
}

/// Appends to `out` every arm that can follow a core with negative
/// extremum `v` and positive extremum `w`, starting with a letter of sign
/// `neg_next`. Arms are listed moving away from the core: negatives rise
/// strictly above `v`, positives fall strictly below `w`, signs alternate.
fn arms(
    chain: &PointedChain,
    neg_next: bool,
    last_neg: usize,
    last_pos: usize,
    prefix: &mut Vec<Letter>,
    out: &mut Vec<Vec<Letter>>,
) {
    out.push(prefix.clone());
    let unit = chain.n_neg();
    let candidates = if neg_next {
        last_neg + 1..unit
    } else {
        unit + 1..last_pos
    };
    for r in candidates {
        prefix.push(chain.at_rank(r));
        let (ln, lp) = if neg_next {
            (r, last_pos)
        } else {
            (last_neg, r)
        };
        arms(chain, !neg_next, ln, lp, prefix, out);
        prefix.pop();
    }
}

/// All Kuratowski words over `chain`, sorted by length and then by rank.
pub fn enumerate_kuratowski(chain: &PointedChain) -> Result<Vec<Word>> {
    enumerate_kuratowski_with(chain, &Limits::default())
}

pub fn enumerate_kuratowski_with(chain: &PointedChain, limits: &Limits) -> Result<Vec<Word>> {
    check_chain_limit(chain, limits)?;
    let mut words: Vec<Word> = chain.letters().map(Word::letter).collect();
    for v in chain.negatives() {
        for w in chain.positives() {
            let (rv, rw) = (chain.rank(v), chain.rank(w));
            let cores: [&[Letter]; 4] = [&[v, w], &[w, v], &[v, w, v], &[w, v, w]];
            for core in cores {
                let mut left = Vec::new();
                arms(chain, core[0].is_pos(), rv, rw, &mut Vec::new(), &mut left);
                let mut right = Vec::new();
                let last = core[core.len() - 1];
                arms(chain, last.is_pos(), rv, rw, &mut Vec::new(), &mut right);
                for l in &left {
                    for r in &right {
                        let mut letters: Vec<Letter> = l.iter().rev().copied().collect();
                        letters.extend_from_slice(core);
                        letters.extend_from_slice(r);
                        words.push(Word(letters));
                    }
                }
            }
        }
    }
    sort_canonical(&mut words);
    words.dedup();
    Ok(words)
}

/// Sorts by length, then lexicographically by letter order.
pub fn sort_canonical(words: &mut [Word]) {
    words.sort_by(Word::canonical_cmp);
}

/// Kuratowski words followed by their complemented copies.
pub fn enumerate_full(chain: &PointedChain) -> Result<Vec<FullWord>> {
    enumerate_full_with(chain, &Limits::default())
}

pub fn enumerate_full_with(chain: &PointedChain, limits: &Limits) -> Result<Vec<FullWord>> {
    let words = enumerate_kuratowski_with(chain, limits)?;
    let mut full: Vec<FullWord> = words.iter().cloned().map(FullWord::plain).collect();
    full.extend(words.into_iter().map(FullWord::complement));
    Ok(full)
}

/// Space-separated rendering of a sequence of words, one per line.
pub fn render_lines<T: fmt::Display>(items: &[T]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    for item in items {
        let _ = writeln!(s, "{item}");
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::make_chain;
    use alloc::string::ToString;
    use alloc::vec;

    fn w(text: &str, chain: &PointedChain) -> Word {
        Word::parse(text, chain).unwrap()
    }

    #[test]
    fn alternation() {
        let c = make_chain(2, 2);
        assert!(is_alternating(&w("i0", &c)));
        assert!(is_alternating(&w("1", &c)));
        assert!(is_alternating(&w("i0 k0 i1", &c)));
        assert!(!is_alternating(&w("i0 i1", &c)));
        assert!(!is_alternating(&w("i0 1", &c)));
    }

    #[test]
    fn classification_examples() {
        let c = make_chain(1, 1);
        assert_eq!(
            classify(&w("i0 k0", &c), &c),
            Some(WordClass::at(ClassTag::Vmp, 0))
        );
        assert_eq!(
            classify(&w("k0 i0", &c), &c),
            Some(WordClass::at(ClassTag::Vpm, 0))
        );
        assert_eq!(
            classify(&w("i0 k0 i0", &c), &c),
            Some(WordClass::at(ClassTag::Wminus, 1))
        );
        assert_eq!(
            classify(&w("k0 i0 k0", &c), &c),
            Some(WordClass::at(ClassTag::Wplus, 1))
        );
        assert_eq!(classify(&w("i0 i0", &c), &c), None);
        assert_eq!(classify(&w("i0 k0 i0 k0", &c), &c), None);
        assert_eq!(
            classify(&w("1", &c), &c).map(|k| k.tag),
            Some(ClassTag::Single)
        );

        let c = make_chain(2, 1);
        assert_eq!(
            classify(&w("i1 k0 i0 k0 i1", &c), &c),
            Some(WordClass::at(ClassTag::Wplus, 2))
        );
        assert_eq!(classify(&w("i0 k0 i1 k0 i0", &c), &c), None);
        assert_eq!(
            classify(&w("i1 k0 i0 k0", &c), &c),
            Some(WordClass::at(ClassTag::Wplus, 2))
        );
        assert_eq!(
            classify(&w("i1 k0 i0", &c), &c),
            Some(WordClass::at(ClassTag::Vpm, 1))
        );
    }

    #[test]
    fn small_enumerations() {
        let c = make_chain(1, 1);
        let words: Vec<String> = enumerate_kuratowski(&c)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(
            words,
            vec!["i0", "1", "k0", "i0 k0", "k0 i0", "i0 k0 i0", "k0 i0 k0"]
        );
        assert_eq!(
            enumerate_kuratowski(&make_chain(0, 0)).unwrap(),
            vec![Word::unit()]
        );
        assert_eq!(enumerate_kuratowski(&make_chain(2, 1)).unwrap().len(), 17);
        assert_eq!(enumerate_kuratowski(&make_chain(2, 2)).unwrap().len(), 63);
        assert_eq!(enumerate_full(&make_chain(0, 0)).unwrap().len(), 2);
        assert_eq!(enumerate_full(&make_chain(1, 1)).unwrap().len(), 14);
    }

    #[test]
    fn degenerate_chains_have_only_letters() {
        for p in 0..4 {
            let c = make_chain(0, p);
            assert_eq!(enumerate_kuratowski(&c).unwrap().len(), p + 1);
        }
    }

    #[test]
    fn limit_is_enforced() {
        let limits = Limits {
            max_chain_side: 2,
            ..Limits::default()
        };
        assert!(matches!(
            enumerate_kuratowski_with(&make_chain(3, 1), &limits),
            Err(Error::LimitExceeded { cap: 2, .. })
        ));
    }

    #[test]
    fn full_word_parsing() {
        let c = make_chain(1, 1);
        let f = FullWord::parse("c k0 i0", &c).unwrap();
        assert!(f.complemented);
        assert_eq!(f.to_string(), "c k0 i0");
        assert!(matches!(
            FullWord::parse("k0 c", &c),
            Err(Error::MisplacedComplement)
        ));
        assert!(matches!(FullWord::parse("c", &c), Err(Error::EmptyWord)));
        assert!(matches!(Word::parse("", &c), Err(Error::EmptyWord)));
    }
}
