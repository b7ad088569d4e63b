use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use kurlab_core::counting::{
    k_ratios, kuratowski_grid, kuratowski_number, pi_bounds, stirling_ratios, verify_sup_bound,
};
use kurlab_core::rewrite::{
    build_free_monoid_with, check_idempotency, hasse_edges, normalize, quadruple_separation_check,
    separating_morphisms,
};
use kurlab_core::topology::{
    generate_monoid, search_incomparable, verify_saturated_bound, verify_upper_bound,
    FiniteTopology, GeneratedMonoid, GroundSet,
};
use kurlab_core::witness::{build_witness, certify_exactness, separating_component, Level};
use kurlab_core::words::{classify, enumerate_full_with, enumerate_kuratowski_with};
use kurlab_core::{make_chain, Error, FullWord, Limits, PointedChain, StarChain, Word};
use num_bigint::BigUint;
use num_rational::BigRational;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cli::{ChainArgs, Cli, Command, Format};
use crate::render::{decimal, grid_csv, grid_text, hasse_dot};
use crate::space::{self, names, SpaceFile};
use crate::{write_out, CliError, Status};

const MAX_COUNT_SIDE: usize = 1000;
const MAX_GRID_SIDE: usize = 100;
const MAX_ASYMPT: usize = 500;
const DIGITS: usize = 12;

/// One command's output in every format it supports.
struct Report {
    text: String,
    json: Value,
    csv: Option<String>,
    dot: Option<String>,
    status: Status,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Self {
            text,
            json,
            csv: None,
            dot: None,
            status: Status::Verified,
        }
    }

    fn render(self, format: Format) -> Result<(String, Status), CliError> {
        let body = match format {
            Format::Text => Some(self.text),
            Format::Json => Some(serde_json::to_string_pretty(&self.json)? + "\n"),
            Format::Csv => self.csv,
            Format::Dot => self.dot,
        };
        let body = body.ok_or_else(|| {
            CliError::Usage(format!("this command has no {format:?} output").to_lowercase())
        })?;
        Ok((body, self.status))
    }
}

/// Executes a parsed command line, writing the report to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Status, CliError> {
    let limits = cli.caps.limits();
    let report = match &cli.command {
        Command::Count { n, p, grid } => count(*n, *p, *grid)?,
        Command::Enumerate { chain, full } => enumerate(chain, *full, &limits)?,
        Command::Normalize { chain, word } => normalize_cmd(chain, word)?,
        Command::Equal {
            chain,
            first,
            second,
        } => equal(chain, first, second)?,
        Command::Free {
            chain,
            hasse,
            check_idempotent,
        } => free(chain, hasse.as_deref(), *check_idempotent, &limits)?,
        Command::Monoid {
            space,
            complement,
            max_size,
        } => monoid(
            space,
            *complement,
            max_size.unwrap_or(limits.max_monoid),
            &limits,
        )?,
        Command::VerifyBound { space } => verify_bound(space, &limits)?,
        Command::Saturated { space } => saturated(space, &limits)?,
        Command::Witness {
            n,
            certify,
            separate,
        } => match separate {
            Some(pair) => separate_cmd(*n, &pair[0], &pair[1])?,
            None if *certify => certify_cmd(*n, &limits)?,
            None => witness_summary(*n, &limits)?,
        },
        Command::Asympt { max, stirling } => asympt(*max, *stirling)?,
        Command::Search {
            ground,
            budget,
            seed,
        } => search(*ground, *budget, *seed, &limits)?,
        Command::Quadruples => quadruples()?,
    };
    let (body, status) = report.render(cli.format)?;
    write_out(out, &body)?;
    Ok(status)
}

fn check_side(value: usize, cap: usize, what: &'static str) -> Result<(), CliError> {
    if value > cap {
        return Err(Error::LimitExceeded {
            what,
            cap,
            requested: value,
        }
        .into());
    }
    Ok(())
}

/// A word given as tokens, or as a JSON array of tokens.
fn word_text(raw: &str) -> Result<String, CliError> {
    if raw.trim_start().starts_with('[') {
        let tokens: Vec<String> = serde_json::from_str(raw)?;
        return Ok(tokens.join(" "));
    }
    Ok(raw.to_string())
}

fn parse_word(raw: &str, chain: &PointedChain) -> Result<Word, CliError> {
    Ok(Word::parse(&word_text(raw)?, chain)?)
}

fn parse_full(raw: &str, chain: &PointedChain) -> Result<FullWord, CliError> {
    Ok(FullWord::parse(&word_text(raw)?, chain)?)
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn lines<T: ToString>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string() + "\n").collect()
}

fn fraction(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

fn count(n: Option<usize>, p: Option<usize>, grid: bool) -> Result<Report, CliError> {
    if grid {
        let rows = n.unwrap_or(9);
        let cols = p.unwrap_or(9);
        check_side(rows.max(cols), MAX_GRID_SIDE, "grid side")?;
        let full = kuratowski_grid(rows.max(cols));
        let table: Vec<Vec<BigUint>> = full[..=rows].iter().map(|r| r[..=cols].to_vec()).collect();
        let diagonal: Vec<BigUint> = (0..=rows.min(cols)).map(|i| full[i][i].clone()).collect();
        let doubled: Vec<BigUint> = diagonal.iter().map(|k| k * 2u8).collect();
        let mut text = grid_text(&table);
        let _ = writeln!(text, "\nK(n)  {}", strings(&diagonal).join(" "));
        let _ = writeln!(text, "2K(n) {}", strings(&doubled).join(" "));
        let json = json!({
            "grid": table.iter().map(|r| strings(r)).collect::<Vec<_>>(),
            "diagonal": strings(&diagonal),
            "doubled": strings(&doubled),
        });
        let mut report = Report::new(text, json);
        report.csv = Some(grid_csv(&table));
        return Ok(report);
    }
    let (n, p) = (n.unwrap_or(0), p.unwrap_or(0));
    check_side(n.max(p), MAX_COUNT_SIDE, "chain side")?;
    let k = kuratowski_number(n, p);
    let mut report = Report::new(
        format!("{k}\n"),
        json!({"n": n, "p": p, "k": k.to_string()}),
    );
    report.csv = Some(format!("n,p,k\n{n},{p},{k}\n"));
    Ok(report)
}

fn enumerate(chain: &ChainArgs, full: bool, limits: &Limits) -> Result<Report, CliError> {
    let c = make_chain(chain.n, chain.p);
    let words = if full {
        strings(&enumerate_full_with(&c, limits)?)
    } else {
        strings(&enumerate_kuratowski_with(&c, limits)?)
    };
    let json =
        json!({"n": chain.n, "p": chain.p, "full": full, "count": words.len(), "words": words});
    let mut report = Report::new(lines(&words), json);
    report.csv = Some(format!("index,word\n{}", {
        let mut s = String::new();
        for (i, w) in words.iter().enumerate() {
            let _ = writeln!(s, "{i},{w}");
        }
        s
    }));
    Ok(report)
}

fn normalize_cmd(chain: &ChainArgs, word: &str) -> Result<Report, CliError> {
    let c = make_chain(chain.n, chain.p);
    let w = parse_word(word, &c)?;
    let nf = normalize(&w, &c)?;
    let class = classify(&nf, &c).ok_or_else(|| {
        Error::Inconsistency(format!("normal form `{nf}` is not a Kuratowski word"))
    })?;
    let json = json!({
        "input": w.to_string(),
        "normal_form": nf.to_string(),
        "class": class.tag.name(),
        "pivot": class.pivot,
    });
    Ok(Report::new(format!("{nf}\n"), json))
}

fn equal(chain: &ChainArgs, first: &str, second: &str) -> Result<Report, CliError> {
    let c = make_chain(chain.n, chain.p);
    let u = normalize(&parse_word(first, &c)?, &c)?;
    let v = normalize(&parse_word(second, &c)?, &c)?;
    let same = u == v;
    let verdict = if same { "equal" } else { "different" };
    let json = json!({"first": u.to_string(), "second": v.to_string(), "equal": same});
    let mut report = Report::new(format!("{verdict}\n{u}\n{v}\n"), json);
    report.status = Status::from_bool(same);
    Ok(report)
}

fn free(
    chain: &ChainArgs,
    hasse: Option<&Path>,
    check_idempotent: bool,
    limits: &Limits,
) -> Result<Report, CliError> {
    let m = build_free_monoid_with(&make_chain(chain.n, chain.p), limits)?;
    let dot = hasse_dot(&m);
    if let Some(path) = hasse {
        std::fs::write(path, &dot).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            source: e,
        })?;
    }
    let elements = strings(m.elements());
    let edges = hasse_edges(&m);
    let mut text = format!(
        "FK({},{}): {} elements, {} covering pairs\n",
        chain.n,
        chain.p,
        m.len(),
        edges.len()
    );
    for &(i, j) in &edges {
        let _ = writeln!(text, "{} < {}", elements[i], elements[j]);
    }
    let mult_table: Vec<Vec<u32>> = (0..m.len()).map(|i| m.mult_row(i).to_vec()).collect();
    let mut json = json!({
        "elements": elements,
        "mult_table": mult_table,
        "order_pairs": m.order_pairs(),
    });
    let mut status = Status::Verified;
    if check_idempotent {
        let idempotent = check_idempotency(&m);
        let _ = writeln!(
            text,
            "idempotent: {}",
            if idempotent { "yes" } else { "no" }
        );
        json["idempotent"] = json!(idempotent);
        status = Status::from_bool(idempotent);
    }
    let mut report = Report::new(text, json);
    report.dot = Some(dot);
    report.status = status;
    Ok(report)
}

fn monoid_json(m: &GeneratedMonoid) -> Value {
    json!({
        "size": m.len(),
        "generators": strings(&m.generators),
        "elements": (0..m.len()).map(|i| m.witness_text(i)).collect::<Vec<_>>(),
        "tables": m.elements.iter().map(|e| e.table().to_vec()).collect::<Vec<_>>(),
        "mult_table": m.mult_table(),
        "order_pairs": m.order_pairs(),
    })
}

fn monoid(
    path: &Path,
    complement: bool,
    max_size: usize,
    limits: &Limits,
) -> Result<Report, CliError> {
    let space = space::load(path, limits)?;
    let m = generate_monoid(&space, complement, max_size)?;
    let mut text = format!("{} elements\n", m.len());
    for i in 0..m.len() {
        let _ = writeln!(text, "{}", m.witness_text(i));
    }
    Ok(Report::new(text, monoid_json(&m)))
}

fn verify_bound(path: &Path, limits: &Limits) -> Result<Report, CliError> {
    let space = space::load(path, limits)?;
    let plain = verify_upper_bound(&space, false, limits.max_monoid)?;
    let full = verify_upper_bound(&space, true, limits.max_monoid)?;
    let verdict = |ok: bool| if ok { "holds" } else { "FAILS" };
    let text = format!(
        "K:  {} <= {} {}\nK2: {} <= {} {}\n",
        plain.size,
        plain.bound,
        verdict(plain.holds()),
        full.size,
        full.bound,
        verdict(full.holds()),
    );
    let json = json!({
        "chain_length": space.chain().len(),
        "monoid": {"size": plain.size, "bound": plain.bound.to_string(), "holds": plain.holds()},
        "with_complement": {"size": full.size, "bound": full.bound.to_string(), "holds": full.holds()},
    });
    let mut report = Report::new(text, json);
    report.status = Status::from_bool(plain.holds() && full.holds());
    Ok(report)
}

fn saturated(path: &Path, limits: &Limits) -> Result<Report, CliError> {
    let space = space::load(path, limits)?;
    let r = verify_saturated_bound(&space, limits.max_monoid)?;
    let text = format!(
        "saturated; K: {} <= {} {}\n",
        r.size,
        r.bound,
        if r.holds() { "holds" } else { "FAILS" }
    );
    let json = json!({"saturated": true, "size": r.size, "bound": r.bound.to_string(), "holds": r.holds()});
    let mut report = Report::new(text, json);
    report.status = Status::from_bool(r.holds());
    Ok(report)
}

fn histogram_text(h: &BTreeMap<String, usize>) -> String {
    h.iter().map(|(k, v)| format!("  {k} {v}\n")).collect()
}

fn certify_cmd(n: usize, limits: &Limits) -> Result<Report, CliError> {
    let c = certify_exactness(n, limits)?;
    let k = kuratowski_number(n, n);
    let ok = BigUint::from(c.kuratowski_count) == k
        && BigUint::from(c.full_count) == &k * 2u8
        && c.pairs_checked == c.full_count * c.full_count.saturating_sub(1);
    let mut text = format!(
        "{} {}\nkuratowski words: {}\nfull words: {}\npairs checked: {}\nfallbacks: {}\ncases:\n",
        c.kuratowski_count,
        c.full_count,
        c.kuratowski_count,
        c.full_count,
        c.pairs_checked,
        c.fallbacks()
    );
    text += &histogram_text(&c.case_histogram);
    if !ok {
        let _ = writeln!(text, "MISMATCH: expected {k} and {}", &k * 2u8);
    }
    let json = json!({
        "n": c.n,
        "kuratowski_count": c.kuratowski_count,
        "full_count": c.full_count,
        "pairs_checked": c.pairs_checked,
        "case_histogram": c.case_histogram,
    });
    let mut report = Report::new(text, json);
    report.status = Status::from_bool(ok);
    Ok(report)
}

fn witness_summary(n: usize, limits: &Limits) -> Result<Report, CliError> {
    let w = build_witness(&StarChain::new(n), limits)?;
    let h = w.histogram();
    let text = format!(
        "{} full words\n{} components\n{} points\ncases:\n{}",
        w.words().len(),
        w.len(),
        w.point_count(),
        histogram_text(&h)
    );
    let json = json!({
        "n": n,
        "full_count": w.words().len(),
        "components": w.len(),
        "points": w.point_count(),
        "case_histogram": h,
    });
    Ok(Report::new(text, json))
}

fn level_name(l: Level) -> &'static str {
    match l {
        Level::Coarse => "coarse",
        Level::Fine => "fine",
        Level::Identity => "identity",
    }
}

fn separate_cmd(n: usize, u: &str, v: &str) -> Result<Report, CliError> {
    let chain = StarChain::new(n);
    let u = parse_full(u, chain.chain())?;
    let v = parse_full(v, chain.chain())?;
    let c = separating_component(&u, &v, &chain)?;
    let space = c.space();
    let ground = space.ground();
    let file = SpaceFile::from_space(&space);
    let levels: Vec<&str> = c
        .assignment()
        .levels(n)
        .into_iter()
        .map(level_name)
        .collect();
    let test_set = names(ground, c.test_set());
    let (eu, ev) = (names(ground, c.eval(&u)), names(ground, c.eval(&v)));
    let text = format!(
        "case {}\npair {}\nlevels {}\ntest set {{{}}}\n{u}: {{{}}}\n{v}: {{{}}}\n",
        c.label(),
        c.pair().name(),
        levels.join(" "),
        test_set.join(", "),
        eu.join(", "),
        ev.join(", "),
    );
    let json = json!({
        "case": c.label().to_string(),
        "pair": c.pair().name(),
        "levels": levels,
        "space": file,
        "test_set": test_set,
        "images": {u.to_string(): eu, v.to_string(): ev},
    });
    Ok(Report::new(text, json))
}

fn asympt(max: usize, stirling: bool) -> Result<Report, CliError> {
    check_side(max, MAX_ASYMPT, "asymptotic range")?;
    let sup = verify_sup_bound(max);
    let ks = k_ratios(max);
    let ss = if stirling {
        stirling_ratios(max)
    } else {
        Vec::new()
    };
    let (lo, hi) = pi_bounds();
    let mut text = String::from("n k(n)\n");
    let mut rows = Vec::new();
    for (i, k) in ks.iter().enumerate() {
        let n = i + 1;
        let _ = write!(text, "{n} {}", decimal(k, DIGITS));
        let mut row = json!({"n": n, "k": fraction(k), "k_decimal": decimal(k, DIGITS)});
        if let Some(s) = ss.get(i) {
            let (a, b) = (decimal(&(s * &lo), DIGITS), decimal(&(s * &hi), DIGITS));
            let _ = write!(text, " pi*s(n) in [{a}, {b}]");
            row["pi_stirling"] = json!([a, b]);
        }
        text.push('\n');
        rows.push(row);
    }
    let _ = writeln!(
        text,
        "9 K(n) <= 16 C(2n,n)^2 for n <= {}: {}",
        sup.checked_up_to,
        if sup.holds() { "holds" } else { "FAILS" }
    );
    let json = json!({
        "max": max,
        "sup_bound_holds": sup.holds(),
        "first_violation": sup.first_violation,
        "rows": rows,
    });
    let mut report = Report::new(text, json);
    report.status = Status::from_bool(sup.holds());
    Ok(report)
}

fn opens_of(ground: &GroundSet, t: &FiniteTopology) -> Vec<Vec<String>> {
    t.opens().iter().map(|&u| names(ground, u)).collect()
}

fn braces(sets: &[Vec<String>]) -> String {
    let inner: Vec<String> = sets
        .iter()
        .map(|s| format!("{{{}}}", s.join(",")))
        .collect();
    inner.join(" ")
}

fn search(ground: usize, budget: usize, seed: u64, limits: &Limits) -> Result<Report, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = search_incomparable(ground, budget, limits, &mut rng)?;
    let Some(o) = outcome else {
        let json = json!({"ground": ground, "found": false});
        return Ok(Report::new("no incomparable pair\n".into(), json));
    };
    let g = GroundSet::new(ground)?;
    let (first, second) = (opens_of(&g, &o.first), opens_of(&g, &o.second));
    let set = names(&g, o.set);
    let text = format!(
        "orbit size {}\nset {{{}}}\nfirst {}\nsecond {}\ncandidates {}{}\n",
        o.orbit_size,
        set.join(","),
        braces(&first),
        braces(&second),
        o.candidates,
        if o.exhaustive { " (exhaustive)" } else { "" },
    );
    let json = json!({
        "ground": ground,
        "found": true,
        "orbit_size": o.orbit_size,
        "set": set,
        "first": first,
        "second": second,
        "candidates": o.candidates,
        "exhaustive": o.exhaustive,
    });
    Ok(Report::new(text, json))
}

fn quadruples() -> Result<Report, CliError> {
    let r = quadruple_separation_check()?;
    let names: Vec<&str> = separating_morphisms().iter().map(|(n, _)| *n).collect();
    let mut text = format!("word | {}\n", names.join(" | "));
    let mut rows = Vec::new();
    for (w, images) in r.elements.iter().zip(&r.images) {
        let images = strings(images);
        let _ = writeln!(text, "{w} | {}", images.join(" | "));
        rows.push(json!({"word": w.to_string(), "images": images}));
    }
    let _ = writeln!(
        text,
        "{} elements, {} distinct quadruples, {} distinct (h12,h45), {} distinct (h23,h34), {} distinct h12",
        r.elements.len(),
        r.distinct_quadruples,
        r.distinct_first_pairs,
        r.distinct_second_pairs,
        r.distinct_first_images
    );
    let json = json!({
        "morphisms": names,
        "elements": rows,
        "distinct_quadruples": r.distinct_quadruples,
        "distinct_first_pairs": r.distinct_first_pairs,
        "distinct_second_pairs": r.distinct_second_pairs,
        "distinct_first_images": r.distinct_first_images,
        "separates": r.separates(),
    });
    let mut report = Report::new(text, json);
    report.status = Status::from_bool(r.separates());
    Ok(report)
}
