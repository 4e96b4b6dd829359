use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use dgas_core::alpha::{
    criterion_check, snf_shape_b, spectrum_key, walk_matrix, AlphaParam, CriterionOptions,
    CriterionReport, Verdict,
};
use dgas_core::graph::{encode_graph6, parse_graph6, Graph};
use dgas_core::linalg::smith_normal_form;
use dgas_core::ntheory::{is_square_free, FactorConfig};
use dgas_core::oracle::{find_mate_classes, verify_theorem, VerifyOptions};
use dgas_core::par::{self, Execution};
use serde::Serialize;
use serde_json::json;

use crate::args::{CorpusInput, GraphInput, OutputFormat};
use crate::input::{corpus, graph6_lines, read_text, single_graph};
use crate::{Context, Failure};

/// Exit status for a single-graph verdict.
pub fn verdict_exit(v: Verdict) -> i32 {
    match v {
        Verdict::CertifiedDgas => 0,
        Verdict::FailsArithmetic | Verdict::SingularWalkMatrix => 1,
        Verdict::ExcludedCase | Verdict::SmallOrder | Verdict::UndecidedFactorization => 2,
    }
}

fn json_line<T: Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("serializable") + "\n"
}

fn json_pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

fn criterion_table(r: &CriterionReport) -> String {
    let factors = match (&r.factorization, &r.unfactored) {
        (Some(f), _) if f.factors.is_empty() => "1".to_string(),
        (Some(f), _) => f
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect::<Vec<_>>()
            .join(" * "),
        (None, Some(u)) => format!("incomplete, cofactor {u}"),
        (None, None) => "-".to_string(),
    };
    let ranks = if r.prime_ranks.is_empty() {
        "-".to_string()
    } else {
        r.prime_ranks
            .iter()
            .map(|x| format!("p={}: {}", x.p, x.rank))
            .collect::<Vec<_>>()
            .join(", ")
    };
    table(&[
        ("graph6", r.graph6.clone()),
        ("n", r.n.to_string()),
        ("alpha", format!("{} (c = {})", r.alpha, r.c_alpha)),
        ("connected", r.connected.to_string()),
        ("det W~", r.det_walk.to_string()),
        ("reduced det", r.reduced_det.to_string()),
        ("factorization", factors),
        ("ranks mod p", ranks),
        ("verdict", r.verdict.to_string()),
        ("reason", r.reason.clone()),
    ])
}

pub fn check(ctx: &Context, src: &GraphInput) -> Result<(String, i32), Failure> {
    let g = single_graph(src, ctx.format)?;
    let r = criterion_check(&g, ctx.alpha, &ctx.criterion);
    let out = match ctx.output {
        OutputFormat::Json => json_pretty(&r),
        OutputFormat::Table => criterion_table(&r),
    };
    Ok((out, verdict_exit(r.verdict)))
}

#[derive(Serialize)]
struct ErrorRecord {
    schema: u32,
    line: usize,
    error: String,
}

#[derive(Serialize)]
struct Summary<'a> {
    schema: u32,
    summary: SummaryBody<'a>,
}

#[derive(Serialize)]
struct SummaryBody<'a> {
    alpha: &'a AlphaParam,
    graphs: usize,
    errors: usize,
    verdicts: BTreeMap<Verdict, usize>,
}

pub fn batch(ctx: &Context, path: &Path) -> Result<(String, i32), Failure> {
    let text = read_text(path)?;
    let lines: Vec<(usize, &str)> = graph6_lines(&text).collect();
    let results: Vec<Result<CriterionReport, ErrorRecord>> = par::map(&lines, ctx.exec, |&(line, s)| {
        parse_graph6(s)
            .map(|g| criterion_check(&g, ctx.alpha, &ctx.criterion))
            .map_err(|e| ErrorRecord {
                schema: 1,
                line,
                error: e.to_string(),
            })
    });
    let mut out = String::new();
    let mut verdicts = BTreeMap::new();
    let mut errors = 0;
    for (r, &(line, _)) in results.iter().zip(&lines) {
        match r {
            Ok(rep) => {
                *verdicts.entry(rep.verdict).or_insert(0) += 1;
                match ctx.output {
                    OutputFormat::Json => out.push_str(&json_line(rep)),
                    OutputFormat::Table => {
                        let _ = writeln!(out, "{line:>6}  {:<24}  n={:<3} {}", rep.graph6, rep.n, rep.verdict);
                    }
                }
            }
            Err(e) => {
                errors += 1;
                match ctx.output {
                    OutputFormat::Json => out.push_str(&json_line(e)),
                    OutputFormat::Table => {
                        let _ = writeln!(out, "{line:>6}  error: {}", e.error);
                    }
                }
            }
        }
    }
    let summary = Summary {
        schema: 1,
        summary: SummaryBody {
            alpha: &ctx.alpha,
            graphs: results.len() - errors,
            errors,
            verdicts,
        },
    };
    match ctx.output {
        OutputFormat::Json => out.push_str(&json_line(&summary)),
        OutputFormat::Table => {
            let counts: Vec<String> = summary
                .summary
                .verdicts
                .iter()
                .map(|(v, c)| format!("{v}={c}"))
                .collect();
            let _ = writeln!(
                out,
                "summary: {} graphs, {errors} errors; {}",
                summary.summary.graphs,
                counts.join(" ")
            );
        }
    }
    Ok((out, if errors > 0 { crate::EXIT_INPUT } else { 0 }))
}

#[derive(Serialize)]
struct SnfReport {
    schema: u32,
    graph6: String,
    n: usize,
    alpha: AlphaParam,
    divisors: Vec<String>,
    singular: bool,
    shape_holds: bool,
    b: Option<String>,
    b_square_free: Option<bool>,
}

pub fn snf(ctx: &Context, src: &GraphInput) -> Result<(String, i32), Failure> {
    let g = single_graph(src, ctx.format)?;
    let snf = smith_normal_form(&walk_matrix(&g, ctx.alpha));
    let singular = snf.divisors.iter().any(|d| d.bits() == 0);
    let b = snf_shape_b(&snf.divisors);
    let b_square_free = match &b {
        Some(b) => Some(
            is_square_free(b.magnitude(), &ctx.criterion.factor)
                .map(|(free, _)| free)
                .map_err(|e| Failure::input(e.to_string()))?,
        ),
        None => None,
    };
    let report = SnfReport {
        schema: 1,
        graph6: encode_graph6(&g),
        n: g.order(),
        alpha: ctx.alpha,
        divisors: snf.divisors.iter().map(|d| d.to_string()).collect(),
        singular,
        shape_holds: b.is_some() && b_square_free == Some(true),
        b: b.map(|x| x.to_string()),
        b_square_free,
    };
    let out = match ctx.output {
        OutputFormat::Json => json_pretty(&report),
        OutputFormat::Table => table(&[
            ("graph6", report.graph6.clone()),
            ("alpha", report.alpha.to_string()),
            ("divisors", report.divisors.join(" ")),
            (
                "shape",
                if report.singular {
                    "singular walk matrix".to_string()
                } else if report.shape_holds {
                    format!("holds, B = {}", report.b.as_deref().unwrap_or("?"))
                } else {
                    "does not hold".to_string()
                },
            ),
        ]),
    };
    Ok((out, 0))
}

pub fn spectrum(ctx: &Context, src: &GraphInput) -> Result<(String, i32), Failure> {
    let g = single_graph(src, ctx.format)?;
    let key = spectrum_key(&g, ctx.alpha);
    let out = match ctx.output {
        OutputFormat::Json => json_pretty(&json!({
            "schema": 1,
            "graph6": encode_graph6(&g),
            "alpha": ctx.alpha,
            "graph": key.graph,
            "complement": key.complement,
        })),
        OutputFormat::Table => table(&[
            ("graph6", encode_graph6(&g)),
            ("alpha", ctx.alpha.to_string()),
            ("graph", key.graph.to_string()),
            ("complement", key.complement.to_string()),
        ]),
    };
    Ok((out, 0))
}

pub fn mates(ctx: &Context, src: &CorpusInput) -> Result<(String, i32), Failure> {
    let graphs = corpus(src, ctx.format, ctx.exec)?;
    let classes = find_mate_classes(&graphs, ctx.alpha, ctx.exec).map_err(|e| Failure::input(e.to_string()))?;
    let mates: Vec<Vec<String>> = classes
        .iter()
        .filter(|c| !c.is_singleton())
        .map(|c| c.members.iter().map(encode_graph6).collect())
        .collect();
    let singletons = classes.len() - mates.len();
    let out = match ctx.output {
        OutputFormat::Json => json_pretty(&json!({
            "schema": 1,
            "alpha": ctx.alpha,
            "order": graphs.first().map(Graph::order),
            "graphs": graphs.len(),
            "classes": classes.len(),
            "singleton_classes": singletons,
            "mate_classes": mates,
        })),
        OutputFormat::Table => {
            let mut s = format!(
                "{} graphs, {} classes, {singletons} singletons, {} mate classes\n",
                graphs.len(),
                classes.len(),
                mates.len()
            );
            for m in &mates {
                let _ = writeln!(s, "  {}", m.join(" "));
            }
            s
        }
    };
    Ok((out, 0))
}

pub fn verify(ctx: &Context, src: &CorpusInput) -> Result<(String, i32), Failure> {
    let graphs = corpus(src, ctx.format, ctx.exec)?;
    let opts = VerifyOptions {
        exec: ctx.exec,
        criterion: ctx.criterion,
    };
    let r = verify_theorem(&graphs, ctx.alpha, &opts).map_err(|e| Failure::input(e.to_string()))?;
    let code = if r.passed() { 0 } else { 1 };
    let out = match ctx.output {
        OutputFormat::Json => json_pretty(&r),
        OutputFormat::Table => {
            let counts: Vec<String> = r.verdict_counts.iter().map(|(v, c)| format!("{v}={c}")).collect();
            let mut s = table(&[
                ("alpha", r.alpha.to_string()),
                ("graphs", r.graphs.to_string()),
                ("verdicts", counts.join(" ")),
                ("mate classes", r.mate_classes.len().to_string()),
                ("certificates", r.certificates.len().to_string()),
                ("plain-only pairs", r.plain_cospectral_only.len().to_string()),
                ("counterexamples", r.counterexamples.len().to_string()),
                ("violations", r.violations.len().to_string()),
                ("result", if r.passed() { "passed" } else { "FAILED" }.to_string()),
            ]);
            for c in &r.certificates {
                let _ = writeln!(
                    s,
                    "  {} -> {}  level {}",
                    c.certificate.source, c.certificate.target, c.certificate.level
                );
            }
            for v in r.counterexamples.iter().chain(&r.violations) {
                let _ = writeln!(s, "  ! {v}");
            }
            s
        }
    };
    Ok((out, code))
}

pub fn options(seed: u64, effort: u64) -> CriterionOptions {
    CriterionOptions {
        factor: FactorConfig {
            max_rho_iterations: effort,
            seed,
        },
    }
}

pub fn execution(threads: usize) -> Execution {
    if threads > 1 {
        Execution::Parallel
    } else {
        Execution::Sequential
    }
}
