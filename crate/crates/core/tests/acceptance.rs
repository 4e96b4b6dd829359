//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Run with `cargo test -p dgas-core --test acceptance -- --nocapture`.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::kernels::{cofactor_det, exhaustive_solvable, rank_by_elimination};
use common::{graph_from_bits, ALPHAS};
use dgas_core::alpha::{
    build_ac, criterion_check, structure_check, walk_matrix, AlphaParam, CriterionOptions,
    CriterionReport, Verdict,
};
use dgas_core::graph::{complement, enumerate_graphs, parse_edge_list, parse_graph6, Graph};
use dgas_core::linalg::{
    congruence_solvable, det_bareiss, rank_mod_p, smith_normal_form, BigIntMatrix,
};
use dgas_core::oracle::{verify_theorem, VerificationReport, VerifyOptions};
use dgas_core::par::Execution;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_611;

/// Criteria that cannot pass as literally stated. Each is explained in the
/// line it prints; the run still fails if any other criterion fails.
const RECORDED_DEVIATIONS: &[u32] = &[2];

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
}

fn outcome(id: u32, pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        id,
        pass,
        detail: detail.into(),
    }
}

fn fixture(stem: &str) -> Graph {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let read = |ext: &str| std::fs::read_to_string(dir.join(format!("{stem}.{ext}"))).unwrap();
    let g = parse_edge_list(&read("edges")).unwrap();
    assert_eq!(g, parse_graph6(read("g6").trim()).unwrap());
    g
}

fn product(factors: &[&str], two_exp: u32) -> BigUint {
    factors
        .iter()
        .fold(BigUint::from(1u8) << two_exp, |acc, p| acc * p.parse::<BigUint>().unwrap())
}

fn alpha(s: &str) -> AlphaParam {
    s.parse().unwrap()
}

fn opts() -> CriterionOptions {
    CriterionOptions::default()
}

struct GoldenRun {
    report: CriterionReport,
    elapsed: Duration,
}

fn golden(g: &Graph, a: &str) -> GoldenRun {
    let t = Instant::now();
    let report = criterion_check(g, alpha(a), &opts());
    GoldenRun {
        report,
        elapsed: t.elapsed(),
    }
}

fn golden_line(
    id: u32,
    g: &Graph,
    cases: &[(&str, BigUint)],
    extra: impl Fn(&str) -> Option<String>,
) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for (a, expected) in cases {
        let run = golden(g, a);
        let det = run.report.det_walk.abs().to_biguint().unwrap();
        let det_ok = det == *expected;
        let verdict_ok = run.report.verdict == Verdict::CertifiedDgas;
        let time_ok = run.elapsed < Duration::from_secs(5);
        pass &= det_ok && verdict_ok && time_ok;
        let mut part = format!(
            "alpha={a}: det {} verdict {} in {:.2?}",
            if det_ok { "exact" } else { "MISMATCH" },
            run.report.verdict,
            run.elapsed
        );
        if !det_ok {
            let ratio = num_rational::BigRational::new(BigInt::from(det), BigInt::from(expected.clone()));
            part.push_str(&format!(" (computed/stated = {ratio})"));
        }
        if let Some(e) = extra(a) {
            pass &= !e.contains("FAIL");
            part.push_str(&format!(", {e}"));
        }
        parts.push(part);
    }
    outcome(id, pass, parts.join("; "))
}

fn criterion_1() -> Outcome {
    let g = fixture("example1");
    let cases = [
        (
            "3/4",
            product(&["5", "331", "143807", "545912603", "30283875584713", "778268539694081846899"], 7),
        ),
        (
            "5/6",
            product(
                &["13", "31", "37", "327773499972443320387744582054393134299875049186710656493725761"],
                7,
            ),
        ),
    ];
    golden_line(1, &g, &cases, |a| {
        (a == "5/6").then(|| {
            let r = rank_mod_p(&walk_matrix(&g, alpha(a)), 3).unwrap();
            format!("rank_3 = {r}{}", if r == 14 { "" } else { " FAIL" })
        })
    })
}

fn criterion_2() -> Outcome {
    let g = fixture("example2");
    let cases = [
        (
            "2/3",
            product(&["5", "97", "1367", "10067", "118189", "132430201", "145112609"], 6),
        ),
        (
            "10/11",
            product(
                &["3", "2567", "3251", "18593", "110574553", "19912837250380292202346041446775471026303813"],
                6,
            ),
        ),
    ];
    let mut o = golden_line(2, &g, &cases, |_| None);
    if !o.pass {
        o.detail.push_str(
            "; stated factor 2567 = 17*151 is composite, the computed determinant has the prime 2657 \
             in its place (digit transposition) and matches every other factor",
        );
    }
    o
}

/// 500 random graphs on 2..=10 vertices, each checked at every alpha.
fn random_corpus() -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..500)
        .map(|_| {
            let n = rng.gen_range(2..=10);
            let density: f64 = rng.gen_range(0.15..0.85);
            let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(density)).collect();
            graph_from_bits(n, &bits)
        })
        .collect()
}

fn criterion_3(corpus: &[Graph]) -> Outcome {
    let mut checks = 0usize;
    let mut bad = Vec::new();
    for g in corpus {
        for a in ALPHAS {
            let a = alpha(a);
            let ac = build_ac(g, a);
            let c = BigInt::from(a.c_alpha());
            let mut v = vec![BigInt::from(1); g.order()];
            for k in 1..=2 * g.order() {
                v = ac.mul_vec(&v);
                let s: BigInt = v.iter().sum();
                let modulus = if k == 1 { &c * 2 } else { &c * &c * 2 };
                checks += 1;
                if !s.is_multiple_of(&modulus) {
                    bad.push(format!("{g:?} alpha={a} k={k}"));
                }
            }
        }
    }
    outcome(
        3,
        bad.is_empty(),
        format!("{} graphs x {} alphas, {checks} congruences, {} violations", corpus.len(), ALPHAS.len(), bad.len()),
    )
}

fn criterion_4(corpus: &[Graph]) -> Outcome {
    let mut bad = 0;
    for g in corpus {
        for a in ALPHAS {
            let r = rank_mod_p(&walk_matrix(g, alpha(a)), 2).unwrap();
            if r > g.order().div_ceil(2) {
                bad += 1;
            }
        }
    }
    outcome(4, bad == 0, format!("{} (graph, alpha) pairs, {bad} violations", corpus.len() * ALPHAS.len()))
}

fn structure_violations(g: &Graph, a: AlphaParam) -> Vec<String> {
    let r = criterion_check(g, a, &opts());
    structure_check(g, a)
        .map(|s| s.violations(r.square_free == Some(true)))
        .unwrap_or_else(|| vec!["structure check unavailable".into()])
}

fn criterion_5(corpus: &[Graph], scans: &[(usize, &str, VerificationReport)]) -> Outcome {
    let mut certified = 0usize;
    let mut violations = Vec::new();
    for (stem, alphas) in [("example1", ["3/4", "5/6"]), ("example2", ["2/3", "10/11"])] {
        let g = fixture(stem);
        for a in alphas {
            certified += 1;
            violations.extend(structure_violations(&g, alpha(a)));
        }
    }
    for g in corpus {
        for a in ALPHAS {
            let a = alpha(a);
            if criterion_check(g, a, &opts()).certified() {
                certified += 1;
                violations.extend(structure_violations(g, a));
            }
        }
    }
    for (_, _, r) in scans {
        certified += r.certified.len();
        violations.extend(r.violations.iter().filter(|v| !v.contains("certificate")).cloned());
    }
    outcome(
        5,
        violations.is_empty(),
        format!("{certified} certified (graph, alpha) instances checked, {} violations", violations.len()),
    )
}

fn scans() -> (Vec<(usize, &'static str, VerificationReport)>, Duration) {
    let t = Instant::now();
    let mut out = Vec::new();
    for n in 5..=7 {
        let gs = enumerate_graphs(n, false, Execution::Parallel).unwrap();
        for a in ["0", "1/2"] {
            out.push((n, a, verify_theorem(&gs, alpha(a), &VerifyOptions::default()).unwrap()));
        }
    }
    (out, t.elapsed())
}

fn criterion_6(scans: &[(usize, &str, VerificationReport)], elapsed: Duration) -> Outcome {
    let cex: usize = scans.iter().map(|(_, _, r)| r.counterexamples.len()).sum();
    let parts: Vec<String> = scans
        .iter()
        .map(|(n, a, r)| {
            format!(
                "n={n} alpha={a}: {} graphs, {} certified, {} mate classes",
                r.graphs,
                r.certified.len(),
                r.mate_classes.len()
            )
        })
        .collect();
    outcome(
        6,
        cex == 0 && elapsed < Duration::from_secs(600),
        format!("{cex} counterexamples in {elapsed:.2?}; {}", parts.join("; ")),
    )
}

fn certificate_summary(reports: &[&VerificationReport]) -> (usize, usize, Vec<String>) {
    let mut total = 0;
    let mut parity_checked = 0;
    let mut failures = Vec::new();
    for r in reports {
        for c in &r.certificates {
            total += 1;
            if c.level_odd_required.is_some() {
                parity_checked += 1;
            }
            if !c.passed() {
                failures.push(format!("{} -> {}", c.certificate.source, c.certificate.target));
            }
        }
        failures.extend(r.counterexamples.iter().cloned());
    }
    (total, parity_checked, failures)
}

fn criterion_7(scans: &[(usize, &str, VerificationReport)]) -> Outcome {
    let mut extra = Vec::new();
    for n in 5..=7 {
        let gs = enumerate_graphs(n, false, Execution::Parallel).unwrap();
        for a in ALPHAS.iter().filter(|a| !["0", "1/2"].contains(a)) {
            extra.push(verify_theorem(&gs, alpha(a), &VerifyOptions::default()).unwrap());
        }
    }
    let small: Vec<&VerificationReport> = scans.iter().map(|(_, _, r)| r).chain(extra.iter()).collect();
    let (total, parity, failures) = certificate_summary(&small);

    let gs8 = enumerate_graphs(8, false, Execution::Parallel).unwrap();
    let eight: Vec<VerificationReport> = ["0", "1/2"]
        .iter()
        .map(|a| verify_theorem(&gs8, alpha(a), &VerifyOptions::default()).unwrap())
        .collect();
    let (total8, parity8, failures8) = certificate_summary(&eight.iter().collect::<Vec<_>>());

    let head = if total == 0 {
        "n <= 7: no non-isomorphic mate pair with nonsingular walk matrices at any tested alpha, \
         suite passes vacuously"
            .to_string()
    } else {
        format!("n <= 7: {total} certificates, {parity} under the parity hypotheses, {} failures", failures.len())
    };
    outcome(
        7,
        failures.is_empty() && failures8.is_empty(),
        format!(
            "{head}; extension n = 8 (alpha 0, 1/2): {total8} certificates, {parity8} under the parity \
             hypotheses, {} failures",
            failures8.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let mut bad = 0;
    for _ in 0..1000 {
        let n = rng.gen_range(1..=10);
        let bits: Vec<bool> = (0..n * (n - 1) / 2).map(|_| rng.gen_bool(0.5)).collect();
        let g = graph_from_bits(n, &bits);
        let a = alpha(ALPHAS[rng.gen_range(0..ALPHAS.len())]);
        let (aa, bb) = (BigInt::from(a.a()), BigInt::from(a.b()));
        let expected = BigIntMatrix::from_fn(n, n, |i, j| {
            let base = if i == j { &aa * (n as i64 - 1) } else { bb.clone() };
            base - &build_ac(&g, a)[(i, j)]
        });
        if build_ac(&complement(&g), a) != expected {
            bad += 1;
        }
    }
    outcome(8, bad == 0, format!("1000 random (graph, alpha) pairs, {bad} violations"))
}

fn random_rows(rng: &mut ChaCha8Rng, r: usize, c: usize, bound: i64) -> Vec<Vec<i64>> {
    (0..r)
        .map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 9);
    let mut bad = [0usize; 4];
    for _ in 0..200 {
        let n = rng.gen_range(1..=5);
        let m = random_rows(&mut rng, n, n, 9);
        if det_bareiss(&BigIntMatrix::from_rows(&m)).unwrap() != BigInt::from(cofactor_det(&m)) {
            bad[0] += 1;
        }
    }
    for _ in 0..200 {
        let a = BigIntMatrix::from_rows(&random_rows(&mut rng, 4, 4, 20));
        let s = smith_normal_form(&a);
        let chain = s.divisors.windows(2).all(|w| {
            if w[0].is_zero() {
                w[1].is_zero()
            } else {
                (&w[1] % &w[0]).is_zero()
            }
        });
        let unimodular = det_bareiss(&s.left).unwrap().abs() == BigInt::from(1)
            && det_bareiss(&s.right).unwrap().abs() == BigInt::from(1);
        if s.recompose() != a || !chain || !unimodular {
            bad[1] += 1;
        }
    }
    for _ in 0..200 {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let m = random_rows(&mut rng, r, c, 6);
        let p = [2u64, 3, 5, 7, 11][rng.gen_range(0..5)];
        if rank_mod_p(&BigIntMatrix::from_rows(&m), p).unwrap() != rank_by_elimination(&m, p as i64) {
            bad[2] += 1;
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(1..=3);
        let m = random_rows(&mut rng, n, n, 8);
        let p = [2u64, 3][rng.gen_range(0..2)];
        if congruence_solvable(&BigIntMatrix::from_rows(&m), p).unwrap() != exhaustive_solvable(&m, p as i64) {
            bad[3] += 1;
        }
    }
    outcome(
        9,
        bad.iter().all(|&b| b == 0),
        format!(
            "mismatches: det vs cofactor {}/200, SNF recomposition {}/200, rank vs elimination {}/200, \
             congruence vs exhaustive search {}/200",
            bad[0], bad[1], bad[2], bad[3]
        ),
    )
}

/// The specialized criterion for `c_α ∈ {1, 2}`: no odd-prime rank clause
/// and no excluded case.
fn specialized_verdict(r: &CriterionReport) -> Verdict {
    if r.det_walk.is_zero() {
        Verdict::SingularWalkMatrix
    } else if r.n < 5 {
        Verdict::SmallOrder
    } else if r.reduced_odd && r.square_free == Some(true) {
        Verdict::CertifiedDgas
    } else {
        Verdict::FailsArithmetic
    }
}

fn criterion_10() -> Outcome {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for n in 1..=7 {
        let gs = enumerate_graphs(n, false, Execution::Parallel).unwrap();
        for a in ["0", "1/2"] {
            for g in &gs {
                let r = criterion_check(g, alpha(a), &opts());
                checked += 1;
                let odd_reduced = r.reduced_integral && r.reduced_det.numer().is_odd();
                let expected = specialized_verdict(&r);
                if r.verdict != expected || odd_reduced != r.reduced_odd {
                    bad.push(format!("{} alpha={a}", r.graph6));
                }
            }
        }
    }
    outcome(10, bad.is_empty(), format!("{checked} (graph, alpha) pairs on n <= 7, {} disagreements", bad.len()))
}

#[test]
fn acceptance() {
    let corpus = random_corpus();
    let (scans, scan_time) = scans();
    let results = vec![
        criterion_1(),
        criterion_2(),
        criterion_3(&corpus),
        criterion_4(&corpus),
        criterion_5(&corpus, &scans),
        criterion_6(&scans, scan_time),
        criterion_7(&scans),
        criterion_8(),
        criterion_9(),
        criterion_10(),
    ];
    for o in &results {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && RECORDED_DEVIATIONS.contains(&o.id) {
            " [recorded deviation]"
        } else {
            ""
        };
        println!("criterion {:>2}: {tag}{note} | {}", o.id, o.detail);
    }
    let unexpected: Vec<u32> = results
        .iter()
        .filter(|o| !o.pass && !RECORDED_DEVIATIONS.contains(&o.id))
        .map(|o| o.id)
        .collect();
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
