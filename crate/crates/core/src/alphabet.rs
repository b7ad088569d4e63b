//! Pointed and star-involutive linearly ordered generator alphabets.
//!
//! A chain of type `(n, p)` has `n` negative letters (interiors), the unit,
//! and `p` positive letters (closures). Letters are indexed by the topology
//! they come from rather than by rank: `Neg(i)` is the interior of the `i`-th
//! topology and `Pos(i)` its closure, so for a chain of topologies
//! `t0 ⊂ t1 ⊂ …` the total order reads
//!
//! ```text
//! Neg(0) < Neg(1) < … < One < … < Pos(1) < Pos(0)
//! ```
//!
//! Text syntax: `i<j>` is `Neg(j)`, `k<j>` is `Pos(j)`, `1` is the unit and
//! `c` the complement (only meaningful as a prefix of a full word).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::error::{Error, Result};

/// A generator letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    Neg(u8),
    One,
    Pos(u8),
}

impl Letter {
    pub fn is_neg(self) -> bool {
        matches!(self, Letter::Neg(_))
    }

    pub fn is_pos(self) -> bool {
        matches!(self, Letter::Pos(_))
    }

    pub fn is_one(self) -> bool {
        matches!(self, Letter::One)
    }

    /// The order-reversing involution pairing each interior with its closure.
    pub fn star(self) -> Letter {
        match self {
            Letter::Neg(i) => Letter::Pos(i),
            Letter::One => Letter::One,
            Letter::Pos(i) => Letter::Neg(i),
        }
    }

    fn class(self) -> u8 {
        match self {
            Letter::Neg(_) => 0,
            Letter::One => 1,
            Letter::Pos(_) => 2,
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        match (*self, *other) {
            (Letter::Neg(a), Letter::Neg(b)) => a.cmp(&b),
            (Letter::Pos(a), Letter::Pos(b)) => b.cmp(&a),
            (a, b) => a.class().cmp(&b.class()),
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Neg(i) => write!(f, "i{i}"),
            Letter::One => f.write_str("1"),
            Letter::Pos(i) => write!(f, "k{i}"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedToken(String::from(s));
        if s == "1" {
            return Ok(Letter::One);
        }
        let (head, tail) = s.split_at(s.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?);
        if tail.is_empty() || !tail.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let index: u8 = tail.parse().map_err(|_| bad())?;
        match head {
            "i" => Ok(Letter::Neg(index)),
            "k" => Ok(Letter::Pos(index)),
            _ => Err(bad()),
        }
    }
}

/// One token of the word syntax: a letter or the complement operator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symbol {
    Letter(Letter),
    Complement,
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Symbol::Letter(l) => l.fmt(f),
            Symbol::Complement => f.write_str("c"),
        }
    }
}

impl FromStr for Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "c" {
            Ok(Symbol::Complement)
        } else {
            s.parse().map(Symbol::Letter)
        }
    }
}

/// Splits whitespace-separated tokens into symbols.
pub fn parse_symbols(text: &str) -> Result<Vec<Symbol>> {
    text.split_whitespace().map(str::parse).collect()
}

/// A pointed linearly ordered set with `n_neg` negative and `n_pos` positive letters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointedChain {
    n_neg: usize,
    n_pos: usize,
}

impl PointedChain {
    /// Largest per-side size representable by a `u8` letter index.
    pub const MAX_SIDE: usize = u8::MAX as usize + 1;

    pub fn new(n_neg: usize, n_pos: usize) -> Self {
        assert!(
            n_neg <= Self::MAX_SIDE && n_pos <= Self::MAX_SIDE,
            "chain side exceeds {}",
            Self::MAX_SIDE
        );
        Self { n_neg, n_pos }
    }

    pub fn n_neg(&self) -> usize {
        self.n_neg
    }

    pub fn n_pos(&self) -> usize {
        self.n_pos
    }

    pub fn len(&self) -> usize {
        self.n_neg + 1 + self.n_pos
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter {
            Letter::Neg(i) => (i as usize) < self.n_neg,
            Letter::One => true,
            Letter::Pos(i) => (i as usize) < self.n_pos,
        }
    }

    pub fn check(&self, letter: Letter) -> Result<Letter> {
        if self.contains(letter) {
            Ok(letter)
        } else {
            Err(Error::ForeignLetter {
                letter,
                n_neg: self.n_neg,
                n_pos: self.n_pos,
            })
        }
    }

    /// Position of `letter` in the ascending enumeration of the chain.
    pub fn rank(&self, letter: Letter) -> usize {
        debug_assert!(self.contains(letter));
        match letter {
            Letter::Neg(i) => i as usize,
            Letter::One => self.n_neg,
            Letter::Pos(i) => self.n_neg + self.n_pos - i as usize,
        }
    }

    pub fn at_rank(&self, rank: usize) -> Letter {
        assert!(
            rank < self.len(),
            "rank {rank} outside chain of {} letters",
            self.len()
        );
        match rank.cmp(&self.n_neg) {
            Ordering::Less => Letter::Neg(rank as u8),
            Ordering::Equal => Letter::One,
            Ordering::Greater => Letter::Pos((self.n_neg + self.n_pos - rank) as u8),
        }
    }

    /// All letters in ascending order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |r| self.at_rank(r))
    }

    /// Negative letters in ascending order.
    pub fn negatives(&self) -> impl Iterator<Item = Letter> {
        (0..self.n_neg).map(|i| Letter::Neg(i as u8))
    }

    /// Positive letters in ascending order (`Pos(p-1)` first).
    pub fn positives(&self) -> impl Iterator<Item = Letter> {
        (0..self.n_pos).rev().map(|i| Letter::Pos(i as u8))
    }

    /// Parses a whitespace-separated letter word and checks membership.
    pub fn parse_letters(&self, text: &str) -> Result<Vec<Letter>> {
        parse_symbols(text)?
            .into_iter()
            .map(|s| match s {
                Symbol::Letter(l) => self.check(l),
                Symbol::Complement => Err(Error::MisplacedComplement),
            })
            .collect()
    }
}

impl fmt::Display for PointedChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n_neg, self.n_pos)
    }
}

/// Creates the chain of type `(n_neg, n_pos)`.
pub fn make_chain(n_neg: usize, n_pos: usize) -> PointedChain {
    PointedChain::new(n_neg, n_pos)
}

/// A pointed chain with the order-reversing involution `Neg(i) ↔ Pos(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StarChain {
    base: PointedChain,
}

impl StarChain {
    pub fn new(n: usize) -> Self {
        Self {
            base: PointedChain::new(n, n),
        }
    }

    pub fn from_chain(chain: PointedChain) -> Result<Self> {
        if chain.n_neg != chain.n_pos {
            return Err(Error::Precondition(format!(
                "star chains need n_neg = n_pos, got {chain}"
            )));
        }
        Ok(Self { base: chain })
    }

    pub fn n(&self) -> usize {
        self.base.n_neg
    }

    pub fn chain(&self) -> &PointedChain {
        &self.base
    }

    pub fn star(&self, letter: Letter) -> Letter {
        letter.star()
    }
}

/// The first pair of letters (in ascending source order) breaking a morphism law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismViolation {
    UnitNotPreserved { image: Letter },
    NotMonotone { lower: Letter, upper: Letter },
    ForeignImage { letter: Letter, image: Letter },
    NotStarCompatible { letter: Letter },
}

impl fmt::Display for MorphismViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorphismViolation::UnitNotPreserved { image } => {
                write!(f, "unit is sent to {image}, not to 1")
            }
            MorphismViolation::NotMonotone { lower, upper } => {
                write!(f, "{lower} < {upper} but their images are reversed")
            }
            MorphismViolation::ForeignImage { letter, image } => {
                write!(f, "{letter} is sent to {image}, outside the target chain")
            }
            MorphismViolation::NotStarCompatible { letter } => {
                write!(
                    f,
                    "image of {letter}* is not the star of the image of {letter}"
                )
            }
        }
    }
}

/// A total map between two pointed chains.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMorphism {
    src: PointedChain,
    dst: PointedChain,
    /// Image of each source letter, indexed by source rank.
    images: Vec<Letter>,
}

impl ChainMorphism {
    pub fn from_fn(src: PointedChain, dst: PointedChain, f: impl Fn(Letter) -> Letter) -> Self {
        let images = src.letters().map(f).collect();
        Self { src, dst, images }
    }

    /// Builds a morphism from explicit images listed in ascending source order.
    pub fn from_images(src: PointedChain, dst: PointedChain, images: Vec<Letter>) -> Result<Self> {
        if images.len() != src.len() {
            return Err(Error::InvalidMorphism(format!(
                "expected {} images, got {}",
                src.len(),
                images.len()
            )));
        }
        Ok(Self { src, dst, images })
    }

    pub fn identity(chain: PointedChain) -> Self {
        Self::from_fn(chain, chain, |l| l)
    }

    /// The surjection collapsing the letters of rank `lower_rank` and
    /// `lower_rank + 1` into a single letter.
    pub fn merge_adjacent(src: PointedChain, lower_rank: usize) -> Result<Self> {
        if lower_rank + 1 >= src.len() {
            return Err(Error::OutOfRange {
                what: "merge rank",
                detail: format!("{lower_rank} in chain {src}"),
            });
        }
        let dst = if lower_rank < src.n_neg {
            PointedChain::new(src.n_neg - 1, src.n_pos)
        } else {
            PointedChain::new(src.n_neg, src.n_pos - 1)
        };
        let images = (0..src.len())
            .map(|r| dst.at_rank(if r > lower_rank { r - 1 } else { r }))
            .collect();
        Ok(Self { src, dst, images })
    }

    pub fn src(&self) -> &PointedChain {
        &self.src
    }

    pub fn dst(&self) -> &PointedChain {
        &self.dst
    }

    pub fn apply(&self, letter: Letter) -> Letter {
        self.images[self.src.rank(letter)]
    }

    /// Returns the first violation of unit preservation or monotonicity.
    pub fn validate(&self) -> Option<MorphismViolation> {
        for (letter, &image) in self.src.letters().zip(&self.images) {
            if !self.dst.contains(image) {
                return Some(MorphismViolation::ForeignImage { letter, image });
            }
        }
        let unit_image = self.apply(Letter::One);
        if unit_image != Letter::One {
            return Some(MorphismViolation::UnitNotPreserved { image: unit_image });
        }
        let letters: Vec<Letter> = self.src.letters().collect();
        for (i, &lower) in letters.iter().enumerate() {
            for &upper in &letters[i + 1..] {
                if self.apply(lower) > self.apply(upper) {
                    return Some(MorphismViolation::NotMonotone { lower, upper });
                }
            }
        }
        None
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_none()
    }

    /// Validation plus compatibility with the involution on both sides.
    pub fn validate_star(&self) -> Option<MorphismViolation> {
        if let Some(v) = self.validate() {
            return Some(v);
        }
        if self.src.n_neg != self.src.n_pos || self.dst.n_neg != self.dst.n_pos {
            return Some(MorphismViolation::NotStarCompatible {
                letter: Letter::One,
            });
        }
        self.src
            .letters()
            .find(|&l| self.apply(l.star()) != self.apply(l).star())
            .map(|letter| MorphismViolation::NotStarCompatible { letter })
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMorphism) -> Result<ChainMorphism> {
        if self.dst != other.src {
            return Err(Error::InvalidMorphism(format!(
                "cannot compose: target {} differs from source {}",
                self.dst, other.src
            )));
        }
        Ok(Self::from_fn(self.src, other.dst, |l| {
            other.apply(self.apply(l))
        }))
    }
}

/// Checks a morphism, returning `Ok(())` or the violation wrapped as an error.
pub fn validate_morphism(m: &ChainMorphism) -> Result<()> {
    match m.validate() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidMorphism(format!("{v}"))),
    }
}
