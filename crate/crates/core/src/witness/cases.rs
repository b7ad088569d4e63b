//! The case analysis choosing a catalog component for two distinct words.
//!
//! Positions count from the end: `at(0)` is the last letter, the one acting
//! first, and positions outside the word read as the unit.

use super::{Assignment, Case, CaseLabel, CatalogPair};
use crate::alphabet::Letter;
use crate::topology::SubsetMask;

/// The point `x` of the catalog spaces.
pub(super) const POINT_X: SubsetMask = 0b001;

/// A word together with its starred letters.
#[derive(Debug, Clone, Copy)]
pub(super) struct Sides<'a> {
    pub letters: &'a [Letter],
    pub starred: &'a [Letter],
}

impl Sides<'_> {
    fn at(&self, i: isize) -> Letter {
        if i < 0 || i as usize >= self.letters.len() {
            return Letter::One;
        }
        self.letters[self.letters.len() - 1 - i as usize]
    }

    fn dual(&self) -> Self {
        Sides {
            letters: self.starred,
            starred: self.letters,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(super) struct Plan {
    pub pair: CatalogPair,
    pub assignment: Assignment,
    pub test_set: SubsetMask,
    pub label: CaseLabel,
}

impl Plan {
    fn leaf(pair: CatalogPair, coarse: Option<u8>, fine: Option<u8>, case: Case) -> Self {
        Plan {
            pair,
            assignment: Assignment {
                coarse_upto: coarse,
                fine_upto: fine,
            },
            test_set: POINT_X,
            label: CaseLabel::leaf(case),
        }
    }

    /// The plan for the starred words, read back for the original ones.
    fn complemented_test_set(mut self) -> Self {
        self.test_set ^= self.pair.full();
        self
    }
}

fn neg_index(l: Letter) -> u8 {
    match l {
        Letter::Neg(i) => i,
        other => unreachable!("{other} is not a negative letter"),
    }
}

/// Chooses a plan for two distinct Kuratowski words without complement.
pub(super) fn separate_plain(u: Sides<'_>, v: Sides<'_>) -> Plan {
    let (u0, v0) = (u.at(0), v.at(0));
    if u0 != v0 {
        return last_letters_differ(u, v);
    }
    let mut k: isize = 1;
    while u.at(k) == v.at(k) {
        k += 1;
    }
    if u.at(k - 1).is_neg() {
        let mut plan = shared_positive_suffix(u.dual(), v.dual(), k).complemented_test_set();
        plan.label.dual = true;
        return plan;
    }
    shared_positive_suffix(u, v, k)
}

fn last_letters_differ(u: Sides<'_>, v: Sides<'_>) -> Plan {
    let (u, v) = if u.at(0) < v.at(0) { (u, v) } else { (v, u) };
    match (u.at(0), v.at(0)) {
        (Letter::One, _) => Plan::leaf(CatalogPair::AntiDiscrete, Some(u8::MAX), None, Case::Aa),
        (_, Letter::One) => Plan::leaf(CatalogPair::AntiDiscrete, Some(u8::MAX), None, Case::Ab),
        (Letter::Neg(_), Letter::Pos(_)) => {
            Plan::leaf(CatalogPair::AntiDiscrete, Some(u8::MAX), None, Case::Ac)
        }
        (Letter::Neg(i), Letter::Neg(_)) => {
            Plan::leaf(CatalogPair::AntiX, Some(i), Some(u8::MAX), Case::Ad)
        }
        _ => {
            let mut plan = last_letters_differ(u.dual(), v.dual()).complemented_test_set();
            plan.label.leaf = Case::Ae;
            plan
        }
    }
}

/// Both words end alike, first differ at position `k`, and share the
/// positive letter at `k - 1`.
fn shared_positive_suffix(u: Sides<'_>, v: Sides<'_>, k: isize) -> Plan {
    let (u, v) = if u.at(k) < v.at(k) { (u, v) } else { (v, u) };
    let uk = u.at(k);
    let ui = neg_index(uk);
    if uk < u.at(k - 2) {
        let next = v.at(k + 1);
        if next > v.at(k - 1) {
            let s = next.star();
            let si = neg_index(s);
            if s <= uk {
                Plan::leaf(CatalogPair::AntiY, Some(si), Some(ui), Case::Baaa)
            } else {
                Plan::leaf(CatalogPair::AntiX, Some(ui), Some(si), Case::Baab)
            }
        } else if next == v.at(k - 1) {
            Plan::leaf(CatalogPair::AntiY, None, Some(ui), Case::Bab)
        } else {
            Plan::leaf(CatalogPair::AntiY, None, Some(ui), Case::Bac)
        }
    } else {
        let t = u.at(k - 1).star();
        let ti = neg_index(t);
        if t <= uk {
            Plan::leaf(CatalogPair::XzYz, Some(ti), Some(ui), Case::Bba)
        } else {
            Plan::leaf(CatalogPair::XzXy, Some(ui), Some(ti), Case::Bbb)
        }
    }
}
