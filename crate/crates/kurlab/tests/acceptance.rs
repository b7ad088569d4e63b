//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use kurlab_core::counting::{
    family_counts, k_ratio, kuratowski_number, pi_bounds, stirling_ratio, verify_sup_bound,
};
use kurlab_core::rewrite::{
    build_free_monoid, check_idempotency, congruence_closure_oracle, hasse_edges, normalize,
    normalize_with, quadruple_separation_check, FreeKuratowskiMonoid,
};
use kurlab_core::topology::{
    comparable_pairs, enumerate_topologies, generate_monoid, is_saturated, FiniteTopology,
    GroundSet, PolySpace,
};
use kurlab_core::witness::certify_exactness;
use kurlab_core::words::{classify, enumerate_kuratowski, ClassTag};
use kurlab_core::{make_chain, FullWord, Letter, Limits, PointedChain, Word};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Check = fn() -> Outcome;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const CAP: usize = 100_000;

fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

fn space(chain: Vec<FiniteTopology>) -> PolySpace {
    let size = chain[0].size();
    PolySpace::new(GroundSet::new(size).unwrap(), chain).unwrap()
}

/// All words of length `1..=len` over the letters of `chain`.
fn all_words(chain: &PointedChain, len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = chain.letters().collect();
    let mut out = Vec::new();
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..len {
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
        out.extend(layer.iter().map(|w| Word::new(w.clone()).unwrap()));
    }
    out
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let spent = start.elapsed();
    ensure!(spent <= budget, "took {spent:.1?}, budget {budget:?}");
    Ok(())
}

fn counting_tables() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_kurlab"))
        .args(["count", "--grid", "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    let spent = start.elapsed();
    ensure!(out.status.success(), "exit {:?}", out.status.code());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let table: Vec<Vec<String>> = include_str!("data/k_table.txt")
        .lines()
        .map(|l| l.split_whitespace().map(String::from).collect())
        .collect();
    let grid: Vec<Vec<String>> =
        serde_json::from_value(v["grid"].clone()).map_err(|e| e.to_string())?;
    ensure!(grid == table, "grid differs from the published table");
    let diagonal: [u64; 10] = [
        1, 7, 63, 697, 8549, 111033, 1495677, 20667463, 291020283, 4157865643,
    ];
    let want: Vec<String> = diagonal.iter().map(u64::to_string).collect();
    let doubled: Vec<String> = diagonal.iter().map(|k| (2 * k).to_string()).collect();
    ensure!(v["diagonal"] == serde_json::json!(want), "K(n) row differs");
    ensure!(
        v["doubled"] == serde_json::json!(doubled),
        "2K(n) row differs"
    );
    ensure!(spent < Duration::from_secs(1), "took {spent:.1?}");
    Ok(())
}

fn enumeration_matches_formula() -> Outcome {
    let start = Instant::now();
    for n in 0..=4 {
        for p in 0..=4 {
            let chain = make_chain(n, p);
            let words = enumerate_kuratowski(&chain).map_err(|e| e.to_string())?;
            ensure!(
                BigUint::from(words.len()) == kuratowski_number(n, p),
                "({n},{p}): {} words",
                words.len()
            );
            let mut tags: HashMap<ClassTag, usize> = HashMap::new();
            for w in &words {
                let class = classify(w, &chain).ok_or_else(|| format!("`{w}` unclassified"))?;
                *tags.entry(class.tag).or_default() += 1;
            }
            let f = family_counts(n, p);
            let count = |t| BigUint::from(tags.get(&t).copied().unwrap_or(0));
            ensure!(count(ClassTag::Vmp) == f.vmp, "({n},{p}) vmp");
            ensure!(count(ClassTag::Vpm) == f.vpm, "({n},{p}) vpm");
            ensure!(count(ClassTag::Wplus) == f.wplus, "({n},{p}) wplus");
            ensure!(count(ClassTag::Wminus) == f.wminus, "({n},{p}) wminus");
        }
    }
    within(start, Duration::from_secs(30))
}

fn normal_forms() -> Outcome {
    let start = Instant::now();
    let chain = make_chain(2, 2);
    let words = all_words(&chain, 8);
    ensure!(
        words.len() == (1..=8).map(|k| 5usize.pow(k)).sum::<usize>(),
        "word count"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut sampled = 0;
    for w in &words {
        let nf = normalize(w, &chain).map_err(|e| e.to_string())?;
        ensure!(
            normalize(&nf, &chain).as_ref() == Ok(&nf),
            "`{w}` not idempotent"
        );
        ensure!(
            classify(&nf, &chain).is_some(),
            "`{w}` -> `{nf}` unclassified"
        );
        if rng.next_u32() % 100 != 0 {
            continue;
        }
        sampled += 1;
        for _ in 0..100 {
            let other = normalize_with(w, &chain, |apps| rng.next_u32() as usize % apps.len())
                .map_err(|e| e.to_string())?;
            ensure!(other == nf, "`{w}`: `{other}` vs `{nf}`");
        }
    }
    ensure!(sampled * 200 > words.len(), "only {sampled} words sampled");
    within(start, Duration::from_secs(300))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    for (n, p) in [(1, 1), (2, 1)] {
        let chain = make_chain(n, p);
        let part = congruence_closure_oracle(&chain, 6).map_err(|e| e.to_string())?;
        let mut class_to_nf: HashMap<usize, Word> = HashMap::new();
        let mut nf_to_class: HashMap<Word, usize> = HashMap::new();
        for (w, &class) in part.words.iter().zip(&part.class_of) {
            let nf = normalize(w, &chain).map_err(|e| e.to_string())?;
            ensure!(
                class_to_nf.entry(class).or_insert_with(|| nf.clone()) == &nf,
                "({n},{p}) `{w}` merged too much"
            );
            ensure!(
                *nf_to_class.entry(nf).or_insert(class) == class,
                "({n},{p}) `{w}` split"
            );
        }
    }
    within(start, Duration::from_secs(120))
}

/// Letters of the diagrams: `a`, `b` are `i0`, `i1` and `x` is `k0`.
fn expand(compact: &str) -> String {
    if compact == "1" {
        return "1".into();
    }
    let tokens: Vec<&str> = compact
        .chars()
        .map(|c| match c {
            'a' => "i0",
            'b' => "i1",
            _ => "k0",
        })
        .collect();
    tokens.join(" ")
}

fn edges(m: &FreeKuratowskiMonoid) -> Vec<(String, String)> {
    let mut e: Vec<_> = hasse_edges(m)
        .into_iter()
        .map(|(i, j)| (m.elements()[i].to_string(), m.elements()[j].to_string()))
        .collect();
    e.sort();
    e
}

fn expected(list: &[(&str, &str)]) -> Vec<(String, String)> {
    let mut e: Vec<_> = list.iter().map(|(a, b)| (expand(a), expand(b))).collect();
    e.sort();
    e
}

fn free_monoids() -> Outcome {
    let fk11 = build_free_monoid(&make_chain(1, 1)).map_err(|e| e.to_string())?;
    ensure!(fk11.len() == 7, "|FK(1,1)| = {}", fk11.len());
    let want11 = expected(&[
        ("a", "axa"),
        ("axa", "ax"),
        ("axa", "xa"),
        ("ax", "xax"),
        ("xa", "xax"),
        ("xax", "x"),
        ("a", "1"),
        ("1", "x"),
    ]);
    ensure!(edges(&fk11) == want11, "FK(1,1) diagram differs");
    let fk21 = build_free_monoid(&make_chain(2, 1)).map_err(|e| e.to_string())?;
    ensure!(fk21.len() == 17, "|FK(2,1)| = {}", fk21.len());
    let want21 = expected(&[
        ("ax", "bxax"),
        ("bxax", "bx"),
        ("bxax", "xax"),
        ("axb", "bxaxb"),
        ("axb", "ax"),
        ("bx", "xbx"),
        ("axa", "axb"),
        ("axa", "bxa"),
        ("bxaxb", "bxb"),
        ("bxaxb", "bxax"),
        ("bxaxb", "xaxb"),
        ("bxb", "bx"),
        ("bxb", "xb"),
        ("xbx", "x"),
        ("xax", "xbx"),
        ("bxa", "bxaxb"),
        ("bxa", "xa"),
        ("xb", "xbx"),
        ("xa", "xaxb"),
        ("xaxb", "xb"),
        ("xaxb", "xax"),
        ("a", "axa"),
        ("a", "b"),
        ("b", "bxb"),
        ("1", "x"),
        ("b", "1"),
    ]);
    ensure!(edges(&fk21) == want21, "FK(2,1) diagram differs");
    for n in 0..=2 {
        for p in 0..=2 {
            let m = build_free_monoid(&make_chain(n, p)).map_err(|e| e.to_string())?;
            ensure!(check_idempotency(&m), "FK({n},{p}) not idempotent");
        }
    }
    let r = quadruple_separation_check().map_err(|e| e.to_string())?;
    ensure!(
        r.separates() && r.distinct_quadruples == 63,
        "{} quadruples",
        r.distinct_quadruples
    );
    Ok(())
}

fn bound_sweep() -> Outcome {
    let start = Instant::now();
    for size in 1..=3 {
        let tops = enumerate_topologies(size).map_err(|e| e.to_string())?;
        for t in &tops {
            let s = space(vec![t.clone()]);
            let k = generate_monoid(&s, false, CAP)
                .map_err(|e| e.to_string())?
                .len();
            let k2 = generate_monoid(&s, true, CAP)
                .map_err(|e| e.to_string())?
                .len();
            ensure!(k <= 7 && k2 <= 14, "single topology: {k}, {k2}");
        }
        for (i, j) in comparable_pairs(&tops) {
            let s = space(vec![tops[i].clone(), tops[j].clone()]);
            let k = generate_monoid(&s, false, CAP)
                .map_err(|e| e.to_string())?
                .len();
            let k2 = generate_monoid(&s, true, CAP)
                .map_err(|e| e.to_string())?
                .len();
            ensure!(k <= 63 && k2 <= 126, "pair ({i},{j}) on {size}: {k}, {k2}");
        }
    }
    within(start, Duration::from_secs(120))
}

fn saturated_bound() -> Outcome {
    let mut seen = 0;
    for size in 1..=3 {
        let tops = enumerate_topologies(size).map_err(|e| e.to_string())?;
        for (i, j) in comparable_pairs(&tops) {
            let s = space(vec![tops[i].clone(), tops[j].clone()]);
            if !is_saturated(&s) {
                continue;
            }
            seen += 1;
            let k = generate_monoid(&s, false, CAP)
                .map_err(|e| e.to_string())?
                .len();
            ensure!(k <= 13, "saturated pair ({i},{j}) on {size}: {k}");
        }
    }
    ensure!(seen > 0, "no saturated chains");
    Ok(())
}

fn certification() -> Outcome {
    let start = Instant::now();
    for (n, k, k2) in [(1, 7, 14), (2, 63, 126), (3, 697, 1394)] {
        let c = certify_exactness(n, &Limits::default()).map_err(|e| e.to_string())?;
        ensure!(
            (c.kuratowski_count, c.full_count) == (k, k2),
            "n={n}: ({}, {})",
            c.kuratowski_count,
            c.full_count
        );
        ensure!(
            c.pairs_checked == k2 * (k2 - 1),
            "n={n}: {} pairs",
            c.pairs_checked
        );
    }
    within(start, Duration::from_secs(60))
}

fn asymptotics() -> Outcome {
    let start = Instant::now();
    let sup = verify_sup_bound(500);
    ensure!(sup.holds() && sup.checked_up_to == 500, "{sup:?}");
    ensure!(k_ratio(1) == q(7, 4), "k(1)");
    ensure!(k_ratio(3) == q(697, 400), "k(3)");
    ensure!(k_ratio(4) == q(8549, 4900), "k(4)");
    let (lo, hi) = pi_bounds();
    let s9 = stirling_ratio(9).map_err(|e| e.to_string())?;
    let s50 = stirling_ratio(50).map_err(|e| e.to_string())?;
    ensure!(&s9 * &lo >= q(90, 100) && &s9 * &hi <= q(100, 100), "n=9");
    ensure!(
        &s50 * &lo >= q(97, 100) && &s50 * &hi <= q(101, 100),
        "n=50"
    );
    within(start, Duration::from_secs(120))
}

fn semantics_soundness() -> Outcome {
    let start = Instant::now();
    let chain = make_chain(2, 2);
    let words: Vec<(FullWord, FullWord)> = all_words(&chain, 6)
        .into_iter()
        .map(|w| {
            let nf = normalize(&w, &chain).unwrap();
            (FullWord::plain(w), FullWord::plain(nf))
        })
        .collect();
    let tops = enumerate_topologies(3).map_err(|e| e.to_string())?;
    for (i, j) in comparable_pairs(&tops) {
        let s = space(vec![tops[i].clone(), tops[j].clone()]);
        for (w, nf) in &words {
            let a = s.operator_of(w).map_err(|e| e.to_string())?;
            let b = s.operator_of(nf).map_err(|e| e.to_string())?;
            ensure!(a == b, "`{}` vs `{}` on pair ({i},{j})", w, nf);
        }
    }
    within(start, Duration::from_secs(300))
}

fn exploratory_search() -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_kurlab"))
        .args([
            "search", "--ground", "3", "--budget", "1000", "--format", "json",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(out.status.success(), "exit {:?}", out.status.code());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    ensure!(
        v["found"] == true && v["orbit_size"].as_u64().is_some(),
        "no maximizer reported"
    );
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 11] = [
        ("1", counting_tables),
        ("2", enumeration_matches_formula),
        ("3", normal_forms),
        ("4", oracle_equivalence),
        ("5", free_monoids),
        ("6", bound_sweep),
        ("7", saturated_bound),
        ("8", certification),
        ("9", asymptotics),
        ("10", semantics_soundness),
        ("search", exploratory_search),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let spent = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {name}: PASS ({spent:.2?})"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({spent:.2?}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
