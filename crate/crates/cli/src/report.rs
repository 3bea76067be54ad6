//! Per-instance evaluation shared by the single-shot commands and the
//! experiment driver.

use std::time::Instant;

use dd2_core::approx::{approx_max_dd2, approx_min_dd2, approx_min_dd2_cubic, approx_min_to_dd2};
use dd2_core::oracle::{
    exact_has_dd2_pair, exact_max_minimal_spanning_dd2, exact_min_edge_addition,
    exact_min_spanning_dd2, OracleBudget,
};
use dd2_core::{find_dd2_pair, is_dd2, Graph};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// Algorithms a report can be produced for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Algorithm {
    Recognize,
    Pair,
    SolveMin,
    SolveMinCubic,
    SolveMax,
    SolveMinTo,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Recognize => "recognize",
            Algorithm::Pair => "pair",
            Algorithm::SolveMin => "solve-min",
            Algorithm::SolveMinCubic => "solve-min-cubic",
            Algorithm::SolveMax => "solve-max",
            Algorithm::SolveMinTo => "solve-min-to",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            Algorithm::Recognize,
            Algorithm::Pair,
            Algorithm::SolveMin,
            Algorithm::SolveMinCubic,
            Algorithm::SolveMax,
            Algorithm::SolveMinTo,
        ]
        .into_iter()
        .find(|a| a.name() == s)
    }
}

/// Certified bounds on the value returned by an algorithm.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lower: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub upper: Option<u64>,
    /// Approximation factor the realized ratio must not exceed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor: Option<f64>,
}

/// One instance, one algorithm.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub family: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub n: usize,
    pub m: usize,
    pub algorithm: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    pub bounds: Bounds,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub within_factor: Option<bool>,
    /// Recognition/pair commands: agreement with exhaustive pair search.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solution: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<f64>,
}

/// Extra payload of a successful evaluation, kept apart from the record so
/// experiments can drop it.
pub struct Evaluation {
    pub record: ReportRecord,
    /// Text rendering of the solution for the single-shot commands.
    pub text: String,
}

fn ceil_two_thirds(n: usize) -> u64 {
    (2 * n as u64).div_ceil(3)
}

fn ratio(num: u64, den: u64) -> f64 {
    if den == 0 {
        if num == 0 {
            1.0
        } else {
            f64::INFINITY
        }
    } else {
        num as f64 / den as f64
    }
}

fn finish(record: &mut ReportRecord, oracle: Option<u64>, minimize: bool) {
    let (Some(value), Some(opt)) = (record.value, oracle) else {
        return;
    };
    let r = if minimize {
        ratio(value, opt)
    } else {
        ratio(opt, value)
    };
    record.oracle = Some(opt);
    record.ratio = Some(r);
    record.within_factor = record.bounds.factor.map(|f| r <= f + 1e-12);
}

fn edge_list(kept: &[(usize, usize)], n: usize) -> String {
    let mut out = format!("{n} {}\n", kept.len());
    for (u, v) in kept {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Runs `alg` on `g`, cross-checking against the exhaustive oracle when a
/// budget is given. Precondition and budget failures are returned as errors.
pub fn evaluate(
    alg: Algorithm,
    g: &Graph,
    oracle: Option<&OracleBudget>,
    timing: bool,
) -> Result<Evaluation, dd2_core::Error> {
    let start = Instant::now();
    let n = g.n();
    let mut record = ReportRecord {
        n,
        m: g.m(),
        algorithm: alg.name().to_string(),
        ..ReportRecord::default()
    };
    let text;
    match alg {
        Algorithm::Recognize => {
            let report = is_dd2(g);
            record.value = Some(u64::from(report.is_dd2));
            record.solution = Some(json!(report));
            if let Some(budget) = oracle {
                record.agreement = Some(exact_has_dd2_pair(g, budget)?.is_some() == report.is_dd2);
            }
            text = match report.witness {
                None => "DD2".to_string(),
                Some(dd2_core::Witness::WeakSupport(v)) => {
                    format!("non-DD2; witness weak support {v}")
                }
                Some(dd2_core::Witness::Isolated(v)) => {
                    format!("non-DD2; witness isolated vertex {v}")
                }
            };
        }
        Algorithm::Pair => {
            let pair = find_dd2_pair(g)?;
            record.value = Some(pair.a.len() as u64);
            record.solution = Some(json!(pair));
            if let Some(budget) = oracle {
                record.agreement = Some(exact_has_dd2_pair(g, budget)?.is_some());
            }
            text = pair.to_text();
        }
        Algorithm::SolveMin | Algorithm::SolveMinCubic | Algorithm::SolveMax => {
            let (kept, trace) = match alg {
                Algorithm::SolveMin => (approx_min_dd2(g)?.kept().to_vec(), None),
                Algorithm::SolveMax => (approx_max_dd2(g)?.kept().to_vec(), None),
                _ => {
                    let (h, trace) = approx_min_dd2_cubic(g)?;
                    (h.kept().to_vec(), Some(json!(trace)))
                }
            };
            record.value = Some(kept.len() as u64);
            record.bounds = match alg {
                Algorithm::SolveMin => Bounds {
                    lower: Some(ceil_two_thirds(n)),
                    upper: Some(2 * (n as u64).saturating_sub(2)),
                    factor: Some(3.0),
                },
                Algorithm::SolveMinCubic => Bounds {
                    lower: Some(ceil_two_thirds(n)),
                    upper: Some(6 * n as u64 / 5),
                    factor: Some(1.8),
                },
                _ => Bounds {
                    lower: Some(ceil_two_thirds(n)),
                    upper: Some((2 * n as u64).saturating_sub(1)),
                    factor: Some(if g.is_regular(3) { 1.5 } else { 3.0 }),
                },
            };
            record.solution = Some(json!(kept));
            record.trace = trace;
            let opt = match (alg, oracle) {
                (_, None) => None,
                (Algorithm::SolveMax, Some(b)) => Some(exact_max_minimal_spanning_dd2(g, b)?.value),
                (_, Some(b)) => Some(exact_min_spanning_dd2(g, b)?.value),
            };
            finish(&mut record, opt, alg != Algorithm::SolveMax);
            text = edge_list(&kept, n);
        }
        Algorithm::SolveMinTo => {
            let (plan, trace) = approx_min_to_dd2(g)?;
            record.value = Some(plan.len() as u64);
            let w = trace.support_weight;
            record.bounds = Bounds {
                lower: Some(1),
                upper: (!trace.fallback_used).then_some(w.div_ceil(2)),
                factor: Some(1.0 + (n as f64).ln()),
            };
            record.solution = Some(json!(plan));
            record.trace = Some(json!(trace));
            let opt = oracle
                .map(|b| exact_min_edge_addition(g, b).map(|r| r.value))
                .transpose()?;
            finish(&mut record, opt, true);
            text = plan.to_text();
        }
    }
    if timing {
        record.wall_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(Evaluation { record, text })
}
