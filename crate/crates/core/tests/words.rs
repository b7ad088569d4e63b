use std::collections::BTreeSet;

use kurlab_core::counting::{family_counts, kuratowski_number};
use kurlab_core::words::{
    classify, enumerate_full, enumerate_kuratowski, is_alternating, ClassTag, WordClass,
};
use kurlab_core::{make_chain, Letter, PointedChain, Word};
use num_bigint::BigUint;

/// Direct transcription of the four family definitions: for a pivot `m`,
/// each listed arm must lie in the stated half and be strictly monotone
/// moving away from the pivot.
fn literal_class(x: &[Letter], chain: &PointedChain) -> Option<WordClass> {
    let len = x.len();
    if len == 1 {
        return Some(WordClass {
            tag: ClassTag::Single,
            pivot: None,
        });
    }
    let rank = |l: Letter| chain.rank(l) as i64;
    // Positions start, start ± 2, … in direction `step`, while in range.
    let arm = |start: i64, step: i64| -> Vec<Letter> {
        let mut out = Vec::new();
        let mut i = start;
        while i >= 0 && (i as usize) < len {
            out.push(x[i as usize]);
            i += step;
        }
        out
    };
    let rising_neg = |s: &[Letter]| {
        s.iter().all(|l| l.is_neg()) && s.windows(2).all(|p| rank(p[0]) < rank(p[1]))
    };
    let falling_pos = |s: &[Letter]| {
        s.iter().all(|l| l.is_pos()) && s.windows(2).all(|p| rank(p[0]) > rank(p[1]))
    };
    let n = len as i64 - 1;
    for m in 0..n {
        let (even_r, even_l) = (arm(m, 2), arm(m, -2));
        let (odd_r, odd_l) = (arm(m + 1, 2), arm(m + 1, -2));
        if rising_neg(&even_r) && rising_neg(&even_l) && falling_pos(&odd_r) && falling_pos(&odd_l)
        {
            return Some(WordClass {
                tag: ClassTag::Vmp,
                pivot: Some(m as usize),
            });
        }
        if falling_pos(&even_r) && falling_pos(&even_l) && rising_neg(&odd_r) && rising_neg(&odd_l)
        {
            return Some(WordClass {
                tag: ClassTag::Vpm,
                pivot: Some(m as usize),
            });
        }
        if m >= 1 {
            let (a, b) = (x[m as usize - 1], x[m as usize + 1]);
            let (side_r, side_l) = (arm(m + 1, 2), arm(m - 1, -2));
            if a == b
                && a.is_neg()
                && rising_neg(&side_r)
                && rising_neg(&side_l)
                && falling_pos(&even_r)
                && falling_pos(&even_l)
            {
                return Some(WordClass {
                    tag: ClassTag::Wminus,
                    pivot: Some(m as usize),
                });
            }
            if a == b
                && a.is_pos()
                && falling_pos(&side_r)
                && falling_pos(&side_l)
                && rising_neg(&even_r)
                && rising_neg(&even_l)
            {
                return Some(WordClass {
                    tag: ClassTag::Wplus,
                    pivot: Some(m as usize),
                });
            }
        }
    }
    None
}

fn all_words(chain: &PointedChain, max_len: usize) -> Vec<Vec<Letter>> {
    let letters: Vec<Letter> = chain.letters().collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |&l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn word(letters: &[Letter]) -> Word {
    Word::new(letters.to_vec()).unwrap()
}

#[test]
fn classify_agrees_with_the_definitions_on_all_short_words() {
    for (n, p, max_len) in [(1, 1, 6), (2, 1, 6), (1, 2, 6), (2, 2, 7)] {
        let chain = make_chain(n, p);
        for w in all_words(&chain, max_len) {
            let expected = literal_class(&w, &chain);
            let got = classify(&word(&w), &chain);
            assert_eq!(got, expected, "{:?} over ({n},{p})", word(&w).to_string());
            if got.is_some() {
                assert!(is_alternating(&word(&w)));
            }
        }
    }
}

#[test]
fn enumeration_matches_the_brute_force_filter() {
    for n in 0..=2 {
        for p in 0..=2 {
            let chain = make_chain(n, p);
            let enumerated: BTreeSet<Vec<Letter>> = enumerate_kuratowski(&chain)
                .unwrap()
                .into_iter()
                .map(|w| w.into_letters())
                .collect();
            let longest = enumerated.iter().map(Vec::len).max().unwrap();
            // one past the longest to see that nothing longer qualifies
            let filtered: BTreeSet<Vec<Letter>> = all_words(&chain, longest + 1)
                .into_iter()
                .filter(|w| literal_class(w, &chain).is_some())
                .collect();
            assert_eq!(enumerated, filtered, "({n},{p})");
        }
    }
}

#[test]
fn enumeration_counts_match_the_formulas() {
    for n in 0..=4 {
        for p in 0..=4 {
            let chain = make_chain(n, p);
            let words = enumerate_kuratowski(&chain).unwrap();
            assert_eq!(
                BigUint::from(words.len()),
                kuratowski_number(n, p),
                "({n},{p})"
            );
            let mut tally = [0usize; 5];
            for w in &words {
                let tag = classify(w, &chain).unwrap().tag;
                tally[tag as usize] += 1;
            }
            let f = family_counts(n, p);
            assert_eq!(tally[ClassTag::Single as usize], 1 + n + p);
            assert_eq!(BigUint::from(tally[ClassTag::Vmp as usize]), f.vmp);
            assert_eq!(BigUint::from(tally[ClassTag::Vpm as usize]), f.vpm);
            assert_eq!(BigUint::from(tally[ClassTag::Wminus as usize]), f.wminus);
            assert_eq!(BigUint::from(tally[ClassTag::Wplus as usize]), f.wplus);
        }
    }
}

#[test]
fn enumeration_is_sorted_and_distinct() {
    let words = enumerate_kuratowski(&make_chain(3, 2)).unwrap();
    for pair in words.windows(2) {
        assert_eq!(pair[0].canonical_cmp(&pair[1]), std::cmp::Ordering::Less);
    }
}

#[test]
fn longest_words_on_symmetric_chains() {
    for n in 1..=3 {
        let words = enumerate_kuratowski(&make_chain(n, n)).unwrap();
        assert_eq!(words.iter().map(Word::len).max().unwrap(), 4 * n - 1);
    }
}

#[test]
fn smallest_chain_words() {
    let text: Vec<String> = enumerate_kuratowski(&make_chain(1, 1))
        .unwrap()
        .iter()
        .map(|w| w.to_string())
        .collect();
    assert_eq!(
        text,
        ["i0", "1", "k0", "i0 k0", "k0 i0", "i0 k0 i0", "k0 i0 k0"]
    );
    assert_eq!(enumerate_full(&make_chain(1, 1)).unwrap().len(), 14);
    assert_eq!(enumerate_full(&make_chain(2, 2)).unwrap().len(), 126);
    let unit = enumerate_full(&make_chain(0, 0)).unwrap();
    assert_eq!(
        unit.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        ["1", "c 1"]
    );
}

#[test]
fn two_two_words_match_the_published_list() {
    let chain = make_chain(2, 2);
    let listed: BTreeSet<Vec<Letter>> = include_str!("data/fk22_words.txt")
        .lines()
        .map(|l| Word::parse(l, &chain).unwrap().into_letters())
        .collect();
    let enumerated: BTreeSet<Vec<Letter>> = enumerate_kuratowski(&chain)
        .unwrap()
        .into_iter()
        .map(|w| w.into_letters())
        .collect();
    assert_eq!(listed, enumerated);
}
