use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{build_u, check_orders, group_indices, OracleError, OrthogonalCertificate};
use crate::alpha::{
    criterion_check, spectrum_key, structure_check, walk_matrix, AlphaParam, CriterionOptions,
    CriterionReport, Verdict,
};
use crate::graph::{canonical_form, Graph};
use crate::linalg::{rank_mod_p, smith_normal_form};
use crate::ntheory::{factorize_with, FactorConfig};
use crate::par::{self, Execution};
use crate::serde_util::display;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    pub exec: Execution,
    pub criterion: CriterionOptions,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MemberRecord {
    pub graph6: String,
    pub verdict: Verdict,
    #[serde(serialize_with = "display")]
    pub det_walk: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub members: Vec<MemberRecord>,
    /// Some member is certified even though the class has other members.
    pub counterexample: bool,
}

/// Checks on the level `l` of one certificate between mates `G` and `H`.
///
/// The odd-prime check asks, for every odd prime `p | l`, that `p` fail the
/// local hypotheses at both `G` and `H`: for `p ∤ c_α` that `p² | det W̃`,
/// for `p | c_α` that `rank_p(W̃) < n`. The parity check applies when
/// `n >= 5`, `c_α ∈ {1, 2}` and the reduced determinant of `G` is an odd
/// integer, additionally square-free when `c_α = 2`; it then requires `l`
/// to be odd.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub certificate: OrthogonalCertificate,
    #[serde(serialize_with = "display")]
    pub last_divisor: BigInt,
    pub level_above_one: bool,
    pub level_divides_last_divisor: bool,
    /// Odd primes dividing the level that satisfy the local hypotheses.
    pub odd_prime_violations: Vec<u64>,
    /// `None` when the parity hypotheses do not hold.
    pub level_odd_required: Option<bool>,
}

impl CertificateRecord {
    pub fn passed(&self) -> bool {
        self.level_above_one
            && self.level_divides_last_divisor
            && self.odd_prime_violations.is_empty()
            && self.level_odd_required != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub alpha: AlphaParam,
    pub order: Option<usize>,
    pub graphs: usize,
    pub isomorphism_classes: usize,
    pub verdict_counts: BTreeMap<Verdict, usize>,
    /// Certified graphs; each has a singleton class unless listed as a
    /// counterexample.
    pub certified: Vec<String>,
    pub mate_classes: Vec<ClassRecord>,
    pub certificates: Vec<CertificateRecord>,
    /// Pairs with equal `A_c(G)` spectra but different complement spectra.
    pub plain_cospectral_only: Vec<Vec<String>>,
    pub counterexamples: Vec<String>,
    /// Failed structure or certificate checks.
    pub violations: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty() && self.violations.is_empty()
    }
}

struct Record {
    key: crate::alpha::SpectrumKey,
    form: Vec<u8>,
    report: CriterionReport,
    rank2_walk: usize,
    structure_violations: Vec<String>,
}

fn analyse(g: &Graph, alpha: AlphaParam, opts: &CriterionOptions) -> Record {
    let report = criterion_check(g, alpha, opts);
    let n = g.order();
    let rank2_walk = rank_mod_p(&walk_matrix(g, alpha), 2).expect("2 is prime");
    let mut structure_violations = Vec::new();
    if rank2_walk > n.div_ceil(2) {
        structure_violations.push(format!("rank_2(W~) = {rank2_walk} exceeds {}", n.div_ceil(2)));
    }
    if report.certified() {
        if let Some(s) = structure_check(g, alpha) {
            structure_violations.extend(s.violations(report.square_free == Some(true)));
        }
    }
    Record {
        key: spectrum_key(g, alpha),
        form: canonical_form(g).expect("order checked"),
        report,
        rank2_walk,
        structure_violations,
    }
}

fn odd_primes_of(x: &BigUint, cfg: &FactorConfig) -> Vec<u64> {
    if x.is_zero() || x.is_one() {
        return Vec::new();
    }
    let f = factorize_with(x, cfg).expect("levels are small");
    f.factors
        .iter()
        .filter_map(|(p, _)| u64::try_from(p).ok())
        .filter(|p| *p != 2)
        .collect()
}

/// Whether odd `p` meets the local hypotheses at a graph with walk
/// determinant `det` and walk matrix rank `rank_p` over `F_p`.
fn local_hypotheses(p: u64, c: u64, n: usize, det: &BigInt, rank_p: usize) -> bool {
    if c.is_multiple_of(p) {
        rank_p == n
    } else {
        let p2 = BigInt::from(p) * BigInt::from(p);
        !(det % p2).is_zero()
    }
}

fn parity_applies(r: &CriterionReport) -> bool {
    r.n >= 5
        && r.reduced_odd
        && match r.c_alpha {
            1 => true,
            2 => r.square_free == Some(true),
            _ => false,
        }
}

fn certificate_record(
    g: &Graph,
    h: &Graph,
    rg: &CriterionReport,
    rh: &CriterionReport,
    alpha: AlphaParam,
    cfg: &FactorConfig,
) -> Result<CertificateRecord, OracleError> {
    let cert = build_u(g, h, alpha)?;
    let wg = walk_matrix(g, alpha);
    let wh = walk_matrix(h, alpha);
    let last = smith_normal_form(&wg)
        .last_divisor()
        .cloned()
        .unwrap_or_default();
    let level = BigInt::from(cert.level.clone());
    let n = g.order();
    let c = alpha.c_alpha();
    let odd_prime_violations = odd_primes_of(&cert.level, cfg)
        .into_iter()
        .filter(|&p| {
            let at = |w, det| local_hypotheses(p, c, n, det, rank_mod_p(w, p).expect("prime"));
            at(&wg, &rg.det_walk) || at(&wh, &rh.det_walk)
        })
        .collect();
    let level_odd_required = (parity_applies(rg) || parity_applies(rh)).then(|| level.is_odd());
    Ok(CertificateRecord {
        level_above_one: !cert.level.is_one(),
        level_divides_last_divisor: !last.is_zero() && (&last % &level).is_zero(),
        last_divisor: last.abs(),
        odd_prime_violations,
        level_odd_required,
        certificate: cert,
    })
}

/// Runs the criterion on every graph, groups graphs into generalized
/// cospectral classes, and cross-checks the two.
pub fn verify_theorem(
    graphs: &[Graph],
    alpha: AlphaParam,
    opts: &VerifyOptions,
) -> Result<VerificationReport, OracleError> {
    check_orders(graphs)?;
    let records = par::map(graphs, opts.exec, |g| analyse(g, alpha, &opts.criterion));
    let keys: Vec<_> = records.iter().map(|r| r.key.clone()).collect();
    let forms: Vec<_> = records.iter().map(|r| r.form.clone()).collect();
    let classes = group_indices(&keys, &forms);

    let mut report = VerificationReport {
        schema: 1,
        alpha,
        order: graphs.first().map(Graph::order),
        graphs: graphs.len(),
        isomorphism_classes: classes.iter().map(Vec::len).sum(),
        verdict_counts: BTreeMap::new(),
        certified: Vec::new(),
        mate_classes: Vec::new(),
        certificates: Vec::new(),
        plain_cospectral_only: Vec::new(),
        counterexamples: Vec::new(),
        violations: Vec::new(),
    };

    for class in &classes {
        for &i in class {
            let r = &records[i];
            *report.verdict_counts.entry(r.report.verdict).or_default() += 1;
            if r.report.certified() {
                report.certified.push(r.report.graph6.clone());
            }
            for v in &r.structure_violations {
                report.violations.push(format!("{}: {v}", r.report.graph6));
            }
            debug_assert!(r.rank2_walk <= r.report.n);
        }
        if class.len() < 2 {
            continue;
        }
        let members: Vec<MemberRecord> = class
            .iter()
            .map(|&i| MemberRecord {
                graph6: records[i].report.graph6.clone(),
                verdict: records[i].report.verdict,
                det_walk: records[i].report.det_walk.clone(),
            })
            .collect();
        let bad: Vec<String> = class
            .iter()
            .filter(|&&i| records[i].report.certified())
            .map(|&i| records[i].report.graph6.clone())
            .collect();
        report.counterexamples.extend(bad.iter().cloned());
        report.mate_classes.push(ClassRecord {
            members,
            counterexample: !bad.is_empty(),
        });
    }

    let pairs: Vec<(usize, usize)> = classes
        .iter()
        .flat_map(|class| {
            class
                .iter()
                .enumerate()
                .flat_map(move |(k, &i)| class[k + 1..].iter().map(move |&j| (i, j)))
        })
        .filter(|&(i, j)| !records[i].report.det_walk.is_zero() && !records[j].report.det_walk.is_zero())
        .collect();
    let built = par::map(&pairs, opts.exec, |&(i, j)| {
        certificate_record(
            &graphs[i],
            &graphs[j],
            &records[i].report,
            &records[j].report,
            alpha,
            &opts.criterion.factor,
        )
    });
    for rec in built {
        let rec = rec?;
        if !rec.passed() {
            report.violations.push(format!(
                "certificate {} -> {} (level {}) failed its checks",
                rec.certificate.source, rec.certificate.target, rec.certificate.level
            ));
        }
        report.certificates.push(rec);
    }

    let plain: Vec<_> = records.iter().map(|r| r.key.graph.clone()).collect();
    let iso_reps: Vec<usize> = classes.iter().flatten().copied().collect();
    let mut plain_groups: BTreeMap<_, Vec<usize>> = BTreeMap::new();
    for &i in &iso_reps {
        plain_groups.entry(plain[i].clone()).or_default().push(i);
    }
    for group in plain_groups.values() {
        for (k, &i) in group.iter().enumerate() {
            for &j in &group[k + 1..] {
                if keys[i] != keys[j] {
                    report.plain_cospectral_only.push(vec![
                        records[i].report.graph6.clone(),
                        records[j].report.graph6.clone(),
                    ]);
                }
            }
        }
    }
    Ok(report)
}
