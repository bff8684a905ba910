//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;

use hypercover::construct::{strong_probability, strong_transversal_trials, tt_2uniform, tt_kuniform};
use hypercover::format::parse_hypergraph;
use hypercover::graph::Graph;
use hypercover::search::{
    asymptotic_sweep, is_isomorphic, random_graph, random_hypergraph, random_linear_two_regular, verify_all,
    OrderEnumerator, SweepConfig, TheoremId,
};
use hypercover::solve::predicates::is_total_transversal;
use hypercover::solve::{brute_force_oracle, ec_t, gamma_t, solve, tau, tau_t, Invariant, Target, ORACLE_CAP};
use hypercover::transform::{dual, family_fk, family_fk_star, onh, two_section};
use hypercover::{Error, Hypergraph};

const EXACT_VALUE_LIMIT: Duration = Duration::from_millis(1);
const B2_LIMIT: Duration = Duration::from_secs(10);
const B3_LIMIT: Duration = Duration::from_secs(60);
const SUITE_LIMIT: Duration = Duration::from_secs(600);
const STRONG_LIMIT: Duration = Duration::from_secs(300);
const SE_MULTIPLIER: f64 = 3.0;
const BRACKET_FACTOR: f64 = 3.0;
const RANDOM_PER_K: usize = 1000;
const TOTAL_DOMINATION_COUNT: usize = 500;
const DUAL_COUNT: usize = 200;
const ORACLE_COUNT: usize = 1000;
const STRONG_TRIALS: u64 = 2000;

struct Line {
    id: usize,
    name: &'static str,
    pass: bool,
    detail: String,
}

fn line(id: usize, name: &'static str, pass: bool, detail: String) -> Line {
    let l = Line { id, name, pass, detail };
    println!(
        "criterion {:>2} [{}] {}: {}",
        l.id,
        if l.pass { "PASS" } else { "FAIL" },
        l.name,
        l.detail
    );
    l
}

fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
}

fn cli(args: &[&str]) -> (Value, i32, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_hypercover"))
        .args(args)
        .arg("--no-timestamp")
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (v, out.status.code().unwrap_or(-1), elapsed)
}

fn c1_exact_values() -> Line {
    let cases = [
        ("C5", Graph::cycle(5).to_hypergraph(), 4),
        ("P3", Graph::path(3).to_hypergraph(), 2),
    ];
    let mut pass = true;
    let mut parts = Vec::new();
    for (name, h, expected) in cases {
        let start = Instant::now();
        let v = tau_t(&h).map(|r| r.value);
        let t = start.elapsed();
        pass &= v == Ok(expected) && t < EXACT_VALUE_LIMIT;
        parts.push(format!("tau_t({name}) = {v:?} (expected {expected}) in {t:?}"));
    }
    line(1, "exact values", pass, format!("{}; limit {EXACT_VALUE_LIMIT:?} each", parts.join(", ")))
}

fn witness_of(v: &Value) -> Option<Hypergraph> {
    parse_hypergraph(v["result"]["witness_instance"].as_str()?).ok()
}

fn c2_b2() -> Line {
    let (v, code, t) = cli(&["search", "--k", "2", "--n-max", "5"]);
    let ratio = v["result"]["best_ratio"].as_str().unwrap_or("?").to_string();
    let witness = witness_of(&v);
    let iso = witness.as_ref().is_some_and(|w| {
        is_isomorphic(w, &Graph::path(3).to_hypergraph()).unwrap_or(false)
            || is_isomorphic(w, &Graph::cycle(5).to_hypergraph()).unwrap_or(false)
    });
    let pass = code == 0 && ratio == "2/5" && iso && t < B2_LIMIT;
    line(
        2,
        "b_2 rediscovery",
        pass,
        format!("best_ratio {ratio}, witness isomorphic to P3 or C5: {iso}, exit {code}, {t:?} (limit {B2_LIMIT:?})"),
    )
}

fn c3_b3() -> Line {
    let (v, code, t) = cli(&["search", "--k", "3", "--n-max", "6", "--m-max", "4"]);
    let ratio = v["result"]["best_ratio"].as_str().unwrap_or("?").to_string();
    let twins = hg(4, &[&[0, 1, 2], &[1, 2, 3]]);
    let iso = witness_of(&v).is_some_and(|w| is_isomorphic(&w, &twins).unwrap_or(false));
    let pass = code == 0 && ratio == "1/3" && iso && t < B3_LIMIT;
    line(
        3,
        "b_3 rediscovery",
        pass,
        format!("best_ratio {ratio}, witness is two triples sharing two vertices: {iso}, exit {code}, {t:?} (limit {B3_LIMIT:?})"),
    )
}

/// Construction checks for criterion 9, accumulated over criteria 4 and 5.
#[derive(Default)]
struct ConstructionTally {
    instances: u64,
    failures: u64,
    first_failure: Option<String>,
}

impl ConstructionTally {
    fn check(&mut self, h: &Hypergraph, k: usize, tau_t: usize) {
        self.instances += 1;
        let r = if k == 2 { tt_2uniform(h) } else { tt_kuniform(h) };
        let ok = match &r {
            Ok(r) => is_total_transversal(h, &r.set) && r.within_guarantee() && r.set.len() >= tau_t,
            Err(_) => false,
        };
        if !ok {
            self.failures += 1;
            self.first_failure.get_or_insert_with(|| format!("{:?} on {:?}", r.map(|r| r.set), h.edges()));
        }
    }
}

#[derive(Default)]
struct RowTally {
    instances: u64,
    rows: u64,
    violations: u64,
    errors: u64,
    first_problem: Option<String>,
}

impl RowTally {
    fn check(&mut self, h: &Hypergraph, required: &[TheoremId]) -> Option<usize> {
        self.instances += 1;
        match verify_all(h) {
            Ok(report) => {
                self.rows += report.rows.len() as u64;
                let bad = report.violations().count() as u64;
                let missing = required.iter().filter(|&&t| report.row(t).is_none()).count() as u64;
                self.violations += bad + missing;
                if bad + missing > 0 {
                    self.first_problem
                        .get_or_insert_with(|| format!("{} rows failing or missing on {:?}", bad + missing, h.edges()));
                }
                report.values.tau_t
            }
            Err(e) => {
                self.errors += 1;
                self.first_problem.get_or_insert_with(|| format!("{e} on {:?}", h.edges()));
                None
            }
        }
    }
}

fn c4_enumerated(tally: &mut ConstructionTally) -> Line {
    use TheoremId::*;
    let start = Instant::now();
    let mut rows = RowTally::default();
    let mut build = Duration::ZERO;
    let mut orders: Vec<(usize, usize, usize)> = (3..=8).map(|n| (2, n, 12 - n)).collect();
    orders.extend((4..=7).map(|n| (3, n, n * (n - 1) * (n - 2) / 6)));
    let mut counts = Vec::new();
    for (k, n, m_max) in orders {
        let required: &[TheoremId] = if k == 2 {
            &[TB2, TMain2, O2Order, O2Size, O2MaxDegree, O2Deficiency, ChainTauTauT, ChainTauTTauS]
        } else {
            &[TK3, TMain2, O2Order, O2Size, O2MaxDegree, O2Deficiency, ChainTauTauT, ChainTauTTauS]
        };
        let before = rows.instances;
        for h in OrderEnumerator::new(k, n, m_max).unwrap() {
            let h = h.unwrap();
            let t = rows.check(&h, required);
            let s = Instant::now();
            tally.check(&h, k, t.unwrap_or(usize::MAX));
            build += s.elapsed();
        }
        counts.push(format!("k={k},n={n}: {}", rows.instances - before));
    }
    let t = start.elapsed() - build;
    let pass = rows.violations == 0 && rows.errors == 0 && t < SUITE_LIMIT;
    line(
        4,
        "theorem suite on enumerated instances",
        pass,
        format!(
            "{} instances ({}), {} rows, {} violations, {} errors{}, {t:?} (limit {SUITE_LIMIT:?})",
            rows.instances,
            counts.join("; "),
            rows.rows,
            rows.violations,
            rows.errors,
            rows.first_problem.map(|p| format!(", first: {p}")).unwrap_or_default()
        ),
    )
}

fn c5_random(tally: &mut ConstructionTally) -> Line {
    use TheoremId::*;
    let mut rows = RowTally::default();
    let mut per_k = Vec::new();
    let mut short = false;
    for k in 4..=6usize {
        let required: &[TheoremId] = match k {
            4 => &[TK3, TK4, TMain2],
            _ => &[TK3, TK4, TK5, TMain2],
        };
        let mut found = 0;
        let mut star = 0;
        let mut seed = 0u64;
        while found < RANDOM_PER_K && seed < 200 * RANDOM_PER_K as u64 {
            let n = k + 1 + (seed as usize % (12 - k));
            let m_lo = n.div_ceil(k).max(2);
            let m = m_lo + (seed as usize / 7) % (2 * k);
            seed += 1;
            let Ok(h) = random_hypergraph(k, n, m, seed * 7919 + k as u64, true) else {
                continue;
            };
            found += 1;
            let class = h.class_check();
            let mut needed = required.to_vec();
            if class.in_hk_star {
                star += 1;
                needed.push(TMain3);
            }
            let t = rows.check(&h, &needed);
            tally.check(&h, k, t.unwrap_or(usize::MAX));
        }
        short |= found < RANDOM_PER_K;
        per_k.push(format!("k={k}: {found} ({star} in the starred class)"));
    }
    let pass = !short && rows.violations == 0 && rows.errors == 0;
    line(
        5,
        "theorem suite on random instances",
        pass,
        format!(
            "{}, {} rows, {} violations, {} errors{}",
            per_k.join("; "),
            rows.rows,
            rows.violations,
            rows.errors,
            rows.first_problem.map(|p| format!(", first: {p}")).unwrap_or_default()
        ),
    )
}

fn c6_total_domination_views() -> Line {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut seed = 0u64;
    while checked < TOTAL_DOMINATION_COUNT {
        seed += 1;
        let k = 2 + (seed as usize % 3);
        let n = k + 1 + (seed as usize / 3) % (10 - k);
        let m = 2 + (seed as usize / 5) % 7;
        let Ok(h) = random_hypergraph(k, n, m.min(binomial(n, k)), seed, false) else { continue };
        let h = h.edge_induced(0..h.m());
        checked += 1;
        let a = gamma_t(&h).map(|r| r.value);
        let b = onh(&h).and_then(|o| tau(&o)).map(|r| r.value);
        let c = gamma_t(&two_section(&h).to_hypergraph()).map(|r| r.value);
        if !(a.is_ok() && a == b && a == c) {
            mismatches.push(format!("{a:?}/{b:?}/{c:?} on {:?}", h.edges()));
        }
    }
    line(
        6,
        "gamma_t = tau(onh) = gamma_t(2-section)",
        mismatches.is_empty(),
        format!("{checked} instances with k in 2..=4 and n <= 10, {} mismatches{}", mismatches.len(), first(&mismatches)),
    )
}

fn binomial(n: usize, k: usize) -> usize {
    hypercover::search::binomial(n, k) as usize
}

fn first(v: &[String]) -> String {
    v.first().map(|s| format!(", first: {s}")).unwrap_or_default()
}

fn c7_dual() -> Line {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut seed = 0u64;
    while checked < DUAL_COUNT {
        seed += 1;
        let k = 3 + (seed as usize % 2);
        let m = if k == 3 { [4, 6, 8][(seed as usize / 2) % 3] } else { 5 + (seed as usize / 2) % 4 };
        let Ok(h) = random_linear_two_regular(k, m, seed) else { continue };
        checked += 1;
        let a = tau_t(&h).map(|r| r.value);
        let b = dual(&h).and_then(|g| ec_t(&g)).map(|r| r.value);
        if !(a.is_ok() && a == b) {
            mismatches.push(format!("{a:?} vs {b:?} on {:?}", h.edges()));
        }
    }
    line(
        7,
        "tau_t = ec_t(dual)",
        mismatches.is_empty(),
        format!("{checked} linear 2-regular instances, k in {{3,4}}, m <= 8, {} mismatches{}", mismatches.len(), first(&mismatches)),
    )
}

fn c8_families() -> Line {
    let mut fk = 0;
    let mut fk_star = 0;
    let mut problems = Vec::new();
    let mut seed = 0u64;
    while fk < 20 && seed < 10_000 {
        seed += 1;
        let k = 2 + (seed as usize % 3);
        let n = k + 1 + (seed as usize / 3) % 3;
        let Ok(base) = random_hypergraph(k, n, n.div_ceil(k).max(2) + (seed as usize / 9) % 2, seed, true) else {
            continue;
        };
        let f = family_fk(&base, k).unwrap();
        fk += 1;
        let g = gamma_t(&f.hypergraph).map(|r| r.value);
        if g.clone().map(|g| g * (k + 1)) != Ok(2 * f.hypergraph.n()) {
            problems.push(format!("F_{k}: gamma_t {g:?}, n {}", f.hypergraph.n()));
        }
    }
    seed = 0;
    while fk_star < 10 && seed < 100_000 {
        seed += 1;
        let k = 3 + (seed as usize % 2);
        let n = k + 2 + (seed as usize / 2) % 3;
        let Ok(base) = random_hypergraph(k, n, 2 + (seed as usize / 6) % 3, seed, true) else { continue };
        if !base.class_check().in_hk_star {
            continue;
        }
        let f = family_fk_star(&base, k).unwrap();
        fk_star += 1;
        let g = gamma_t(&f.hypergraph).map(|r| r.value);
        if g.clone().map(|g| g * (k + 2)) != Ok(2 * f.hypergraph.n()) {
            problems.push(format!("F*_{k}: gamma_t {g:?}, n {}", f.hypergraph.n()));
        }
    }
    let pass = fk == 20 && fk_star == 10 && problems.is_empty();
    line(
        8,
        "family tightness",
        pass,
        format!(
            "{fk} F_k instances (k in 2..=4) with gamma_t = 2n/(k+1), {fk_star} F*_k instances (k in {{3,4}}) with gamma_t = 2n/(k+2), {} failures{}",
            problems.len(),
            first(&problems)
        ),
    )
}

fn c9_constructions(tally: &ConstructionTally) -> Line {
    line(
        9,
        "constructive guarantees",
        tally.instances > 0 && tally.failures == 0,
        format!(
            "{} instances from criteria 4 and 5, {} failures (validity, guarantee, size >= tau_t){}",
            tally.instances,
            tally.failures,
            tally.first_failure.as_ref().map(|p| format!(", first: {p}")).unwrap_or_default()
        ),
    )
}

fn c10_strong() -> Line {
    let start = Instant::now();
    let mut pass = true;
    let mut parts = Vec::new();
    for (k, n, seed) in [(20usize, 400usize, 20u64), (50, 1000, 50)] {
        let c = 2.0f64;
        let h = random_hypergraph(k, n, n, seed, false).unwrap();
        let r = strong_transversal_trials(&h, c, STRONG_TRIALS, seed).unwrap();
        let p: f64 = strong_probability(k, c).unwrap();
        let x1_gap = (r.mean_x1 - p * n as f64).abs();
        let ok = r.all_valid && r.mean_size <= r.bound && x1_gap <= SE_MULTIPLIER * r.std_err_x1;
        pass &= ok;
        parts.push(format!(
            "k={k}, n=m={n}: all strong {}, mean {:.3} <= bound {:.3}, |mean X1 - pn| = {x1_gap:.3} vs {SE_MULTIPLIER} SE = {:.3}",
            r.all_valid,
            r.mean_size,
            r.bound,
            SE_MULTIPLIER * r.std_err_x1
        ));
    }
    let t = start.elapsed();
    pass &= t < STRONG_LIMIT;
    line(
        10,
        "randomized strong transversal",
        pass,
        format!("{} trials each; {}; {t:?} (limit {STRONG_LIMIT:?})", STRONG_TRIALS, parts.join("; ")),
    )
}

fn c11_sweep() -> Line {
    let rows = asymptotic_sweep(&SweepConfig::new(vec![10, 20, 50], 0)).unwrap();
    let mut pass = true;
    let mut parts = Vec::new();
    for r in &rows {
        let bracket = |x: f64| x >= r.reference / BRACKET_FACTOR && x <= BRACKET_FACTOR * r.reference;
        let ok = r.mc_all_valid && r.mc_mean_per_nm >= r.best_ratio_f64 && bracket(r.mc_mean_per_nm) && bracket(r.best_ratio_f64);
        pass &= ok;
        parts.push(format!(
            "k={}: MC {:.4} >= search {} ({:.4}), ln(k)/k {:.4}",
            r.k, r.mc_mean_per_nm, r.best_ratio, r.best_ratio_f64, r.reference
        ));
    }
    line(11, "desk-scale asymptotics", pass, parts.join("; "))
}

fn agree(a: &Result<usize, Error>, b: &Result<usize, Error>) -> bool {
    match (a, b) {
        (Ok(x), Ok(y)) => x == y,
        (Err(Error::Infeasible(_)), Err(Error::Infeasible(_))) => true,
        _ => false,
    }
}

fn c12_oracle() -> Line {
    let mut disagreements = Vec::new();
    let mut comparisons = 0;
    let vertex = [Invariant::Tau, Invariant::TauT, Invariant::TauStrong, Invariant::Gamma, Invariant::GammaT];
    for i in 0..ORACLE_COUNT as u64 {
        let k = 2 + (i as usize % 3);
        let n = k + 1 + (i as usize / 3) % (12 - k);
        let m = (2 + (i as usize / 7) % 10).min(binomial(n, k));
        let h = random_hypergraph(k, n, m, i, false).unwrap();
        for inv in vertex {
            let a = solve(&h, inv).map(|r| r.value);
            let b = brute_force_oracle(Target::Hyper(&h), inv, ORACLE_CAP).map(|r| r.value);
            comparisons += 1;
            if !agree(&a, &b) {
                disagreements.push(format!("{inv}: {a:?} vs {b:?} on {:?}", h.edges()));
            }
        }
        let mut g = random_graph(3 + (i as usize % 7), 0.2 + 0.1 * (i % 5) as f64, i).unwrap();
        let mut s = 0;
        while g.m() > 18 {
            s += 1;
            g = random_graph(3 + (i as usize % 7), 0.3, i + 1_000_000 * s).unwrap();
        }
        let a = ec_t(&g).map(|r| r.value);
        let b = brute_force_oracle(Target::Graph(&g), Invariant::EcT, ORACLE_CAP).map(|r| r.value);
        comparisons += 1;
        if !agree(&a, &b) {
            disagreements.push(format!("ec_t: {a:?} vs {b:?} on {:?}", g.edges()));
        }
    }
    line(
        12,
        "oracle equivalence",
        disagreements.is_empty(),
        format!(
            "{ORACLE_COUNT} instances, {comparisons} comparisons over six invariants, {} disagreements{}",
            disagreements.len(),
            first(&disagreements)
        ),
    )
}

fn main() {
    let mut tally = ConstructionTally::default();
    let lines = [
        c1_exact_values(),
        c2_b2(),
        c3_b3(),
        c4_enumerated(&mut tally),
        c5_random(&mut tally),
        c6_total_domination_views(),
        c7_dual(),
        c8_families(),
        c9_constructions(&tally),
        c10_strong(),
        c11_sweep(),
        c12_oracle(),
    ];
    let failed: Vec<String> = lines.iter().filter(|l| !l.pass).map(|l| format!("{} ({})", l.id, l.name)).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", lines.len());
    } else {
        println!("acceptance: failing criteria: {}", failed.join(", "));
        std::process::exit(1);
    }
}
