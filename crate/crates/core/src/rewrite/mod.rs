//! Length-reducing rewriting to Kuratowski normal form.
//!
//! Five rules generate the equalities that hold in every Kuratowski monoid:
//!
//! | rule              | redex             | result    | condition                                  |
//! |-------------------|-------------------|-----------|--------------------------------------------|
//! | `UnitDrop`        | `… 1 …`           | `… …`     | word is not just `1`                       |
//! | `IdemMergeNeg`    | `x y`             | `min(x,y)`| `x, y ≤ 1`                                 |
//! | `IdemMergePos`    | `x y`             | `max(x,y)`| `x, y ≥ 1`                                 |
//! | `FourBlockNegPos` | `x1 x2 x3 x4`     | `x1 x4`   | `x1 ≤ x3` negative, `x2 ≤ x4` positive     |
//! | `FourBlockPosNeg` | `x1 x2 x3 x4`     | `x1 x4`   | `x1 ≥ x3` positive, `x2 ≥ x4` negative     |
//!
//! Words with no redex are exactly the Kuratowski words.

mod free;
mod oracle;

pub use free::{
    build_free_monoid, build_free_monoid_with, check_idempotency, hasse_edges,
    quadruple_separation_check, separating_morphisms, FreeKuratowskiMonoid, QuadrupleReport,
};
pub use oracle::{congruence_closure_oracle, congruence_closure_oracle_with, Partition};

use alloc::vec::Vec;
use core::fmt;

use crate::alphabet::{ChainMorphism, Letter, PointedChain};
use crate::error::{Error, Result};
use crate::words::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RewriteRule {
    UnitDrop,
    IdemMergeNeg,
    IdemMergePos,
    FourBlockNegPos,
    FourBlockPosNeg,
}

impl fmt::Display for RewriteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RewriteRule::UnitDrop => "unit-drop",
            RewriteRule::IdemMergeNeg => "merge-neg",
            RewriteRule::IdemMergePos => "merge-pos",
            RewriteRule::FourBlockNegPos => "four-block-neg-pos",
            RewriteRule::FourBlockPosNeg => "four-block-pos-neg",
        })
    }
}

/// A rule together with the index of the first letter of its redex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RewriteRuleApplication {
    pub rule: RewriteRule,
    pub position: usize,
}

fn four_block(x: &[Letter]) -> Option<RewriteRule> {
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    if x1.is_neg() && x3.is_neg() && x2.is_pos() && x4.is_pos() && x1 <= x3 && x2 <= x4 {
        Some(RewriteRule::FourBlockNegPos)
    } else if x1.is_pos() && x3.is_pos() && x2.is_neg() && x4.is_neg() && x1 >= x3 && x2 >= x4 {
        Some(RewriteRule::FourBlockPosNeg)
    } else {
        None
    }
}

/// Every rule application available on `w`, ordered by position then rule.
pub fn applicable(w: &Word) -> Vec<RewriteRuleApplication> {
    let x = w.letters();
    let mut out = Vec::new();
    for p in 0..x.len() {
        let mut push = |rule| out.push(RewriteRuleApplication { rule, position: p });
        if x[p].is_one() && x.len() > 1 {
            push(RewriteRule::UnitDrop);
        }
        if p + 1 < x.len() {
            if x[p] <= Letter::One && x[p + 1] <= Letter::One {
                push(RewriteRule::IdemMergeNeg);
            }
            if x[p] >= Letter::One && x[p + 1] >= Letter::One {
                push(RewriteRule::IdemMergePos);
            }
        }
        if p + 3 < x.len() {
            if let Some(rule) = four_block(&x[p..p + 4]) {
                push(rule);
            }
        }
    }
    out
}

/// Applies one rule application, checking that its redex is present.
pub fn apply(w: &Word, app: RewriteRuleApplication) -> Result<Word> {
    let x = w.letters();
    let p = app.position;
    let missing = || {
        Error::Precondition(alloc::format!(
            "{} does not apply at position {p} of `{w}`",
            app.rule
        ))
    };
    let mut out: Vec<Letter> = x.to_vec();
    match app.rule {
        RewriteRule::UnitDrop => {
            if p >= x.len() || !x[p].is_one() || x.len() == 1 {
                return Err(missing());
            }
            out.remove(p);
        }
        RewriteRule::IdemMergeNeg | RewriteRule::IdemMergePos => {
            if p + 1 >= x.len() {
                return Err(missing());
            }
            let (a, b) = (x[p], x[p + 1]);
            let merged = if app.rule == RewriteRule::IdemMergeNeg {
                (a <= Letter::One && b <= Letter::One).then(|| a.min(b))
            } else {
                (a >= Letter::One && b >= Letter::One).then(|| a.max(b))
            };
            out[p] = merged.ok_or_else(missing)?;
            out.remove(p + 1);
        }
        RewriteRule::FourBlockNegPos | RewriteRule::FourBlockPosNeg => {
            if p + 3 >= x.len() || four_block(&x[p..p + 4]) != Some(app.rule) {
                return Err(missing());
            }
            out.drain(p + 1..p + 3);
        }
    }
    Word::new(out)
}

/// Rewrites `w` to its Kuratowski normal form.
///
/// Units and same-sign neighbours are removed in one stack pass; the
/// remaining alternating word is then shortened by the leftmost four-block
/// rule until none applies.
pub fn normalize(w: &Word, chain: &PointedChain) -> Result<Word> {
    w.check(chain)?;
    Ok(normalize_letters(w.letters()))
}

pub(crate) fn normalize_letters(letters: &[Letter]) -> Word {
    let mut stack: Vec<Letter> = Vec::with_capacity(letters.len());
    for &l in letters {
        if l.is_one() {
            continue;
        }
        match stack.last_mut() {
            Some(top) if top.is_neg() == l.is_neg() => {
                *top = if l.is_neg() {
                    (*top).min(l)
                } else {
                    (*top).max(l)
                };
            }
            _ => stack.push(l),
        }
    }
    if stack.is_empty() {
        return Word::unit();
    }
    let mut p = 0;
    while p + 3 < stack.len() {
        if four_block(&stack[p..p + 4]).is_some() {
            stack.drain(p + 1..p + 3);
            p = p.saturating_sub(3);
        } else {
            p += 1;
        }
    }
    Word::new(stack).expect("normal form is nonempty")
}

/// Rewrites `w` until no rule applies, letting `choose` pick among the
/// available applications at every step.
pub fn normalize_with(
    w: &Word,
    chain: &PointedChain,
    mut choose: impl FnMut(&[RewriteRuleApplication]) -> usize,
) -> Result<Word> {
    w.check(chain)?;
    let mut current = w.clone();
    loop {
        let apps = applicable(&current);
        if apps.is_empty() {
            return Ok(current);
        }
        let pick = choose(&apps);
        let app = *apps.get(pick).ok_or_else(|| Error::OutOfRange {
            what: "strategy choice",
            detail: alloc::format!("{pick} of {} applications", apps.len()),
        })?;
        current = apply(&current, app)?;
    }
}

pub fn words_equal(u: &Word, v: &Word, chain: &PointedChain) -> Result<bool> {
    Ok(normalize(u, chain)? == normalize(v, chain)?)
}

/// Product in the free Kuratowski monoid.
pub fn multiply(u: &Word, v: &Word, chain: &PointedChain) -> Result<Word> {
    normalize(&u.concat(v), chain)
}

/// Image of `w` under the monoid homomorphism induced by a chain morphism.
pub fn induced_hom(m: &ChainMorphism, w: &Word) -> Result<Word> {
    crate::alphabet::validate_morphism(m)?;
    w.check(m.src())?;
    let image: Vec<Letter> = w.letters().iter().map(|&l| m.apply(l)).collect();
    Ok(normalize_letters(&image))
}
