//! Batch experiments driven by a JSON manifest.

use std::collections::BTreeMap;

use dd2_core::generate::{
    gen_corona_subdivision, gen_named, gen_non_dd2, gen_random_corona_spec, gen_random_cubic,
    gen_random_graph, NamedGraph,
};
use dd2_core::oracle::OracleBudget;
use dd2_core::Graph;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::report::{evaluate, Algorithm, ReportRecord};
use crate::CliError;

/// Seeds as an explicit list or as a `{start, count}` range.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Seeds {
    List(Vec<u64>),
    Range {
        #[serde(default)]
        start: u64,
        count: u64,
    },
}

impl Default for Seeds {
    fn default() -> Self {
        Seeds::List(Vec::new())
    }
}

impl Seeds {
    pub fn to_vec(&self) -> Vec<u64> {
        match self {
            Seeds::List(v) => v.clone(),
            Seeds::Range { start, count } => (*start..start + count).collect(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleConfig {
    #[serde(default)]
    pub enabled: bool,
    /// `"vertices,edges,subsets"`; defaults to the standard budget.
    #[serde(default)]
    pub budget: Option<String>,
}

/// Families × sizes × seeds × algorithms.
///
/// Family names: `cubic`, `random:<p>`, `non-dd2:<p>` (random base with a
/// pendant on every vertex), `corona` (size is the core vertex count) and
/// `named:<name>` where the size fills in the parameter (`named:cycle` with
/// size 5 is `cycle:5`; `named:petersen` ignores the size).
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    #[serde(default)]
    pub families: Vec<String>,
    #[serde(default)]
    pub sizes: Vec<usize>,
    #[serde(default)]
    pub seeds: Seeds,
    #[serde(default)]
    pub algorithms: Vec<String>,
    #[serde(default)]
    pub oracle: OracleConfig,
}

/// Per (family, algorithm) aggregate.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub family: String,
    pub algorithm: String,
    pub instances: usize,
    pub errors: usize,
    pub with_oracle: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mean_ratio: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_within_factor: Option<bool>,
    /// Fraction of instances agreeing with exhaustive pair search.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub records: Vec<ReportRecord>,
    pub summary: Vec<Summary>,
}

impl ExperimentReport {
    /// Pretty JSON with object keys sorted, so equal reports are byte-identical.
    pub fn to_json(&self) -> String {
        let value: Value = serde_json::to_value(self).expect("reports serialize");
        let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
        out.push('\n');
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{:<16} {:<16} {:>9} {:>6} {:>6} {:>9} {:>9} {:>9}\n",
            "family", "algorithm", "instances", "errors", "oracle", "max", "mean", "agree"
        );
        let opt = |x: Option<f64>| x.map_or_else(|| "-".to_string(), |r| format!("{r:.4}"));
        for s in &self.summary {
            out.push_str(&format!(
                "{:<16} {:<16} {:>9} {:>6} {:>6} {:>9} {:>9} {:>9}\n",
                s.family,
                s.algorithm,
                s.instances,
                s.errors,
                s.with_oracle,
                opt(s.max_ratio),
                opt(s.mean_ratio),
                opt(s.agreement)
            ));
        }
        out
    }
}

/// Builds the instance for one family/size/seed cell.
pub fn instance(family: &str, n: usize, seed: u64) -> Result<Graph, CliError> {
    let (head, param) = match family.split_once(':') {
        Some((h, p)) => (h, Some(p)),
        None => (family, None),
    };
    let prob = || -> Result<f64, CliError> {
        param
            .ok_or_else(|| CliError::Usage(format!("family `{family}` needs `:<p>`")))?
            .parse()
            .map_err(|_| CliError::Usage(format!("bad probability in `{family}`")))
    };
    let g = match (head, param) {
        ("cubic", None) => gen_random_cubic(n, seed)?,
        ("random", Some(_)) => gen_random_graph(n, prob()?, seed)?,
        ("non-dd2", Some(_)) => gen_non_dd2(&gen_random_graph(n, prob()?, seed)?)?,
        ("corona", None) => gen_corona_subdivision(&gen_random_corona_spec(n, seed)?)?,
        ("named", Some("petersen")) => gen_named(NamedGraph::Petersen)?,
        ("named", Some(name)) => gen_named(format!("{name}:{n}").parse()?)?,
        _ => return Err(CliError::Usage(format!("unknown family `{family}`"))),
    };
    Ok(g)
}

fn summarize(records: &[ReportRecord]) -> Vec<Summary> {
    let mut groups: BTreeMap<(&str, &str), Vec<&ReportRecord>> = BTreeMap::new();
    for r in records {
        groups.entry((&r.family, &r.algorithm)).or_default().push(r);
    }
    groups
        .into_iter()
        .map(|((family, algorithm), rs)| {
            let ratios: Vec<f64> = rs.iter().filter_map(|r| r.ratio).collect();
            let within: Vec<bool> = rs.iter().filter_map(|r| r.within_factor).collect();
            let agree: Vec<bool> = rs.iter().filter_map(|r| r.agreement).collect();
            Summary {
                family: family.to_string(),
                algorithm: algorithm.to_string(),
                instances: rs.len(),
                errors: rs.iter().filter(|r| r.error.is_some()).count(),
                with_oracle: rs
                    .iter()
                    .filter(|r| r.oracle.is_some() || r.agreement.is_some())
                    .count(),
                max_ratio: ratios.iter().copied().reduce(f64::max),
                mean_ratio: (!ratios.is_empty())
                    .then(|| ratios.iter().sum::<f64>() / ratios.len() as f64),
                all_within_factor: (!within.is_empty()).then(|| within.iter().all(|&w| w)),
                agreement: (!agree.is_empty())
                    .then(|| agree.iter().filter(|&&a| a).count() as f64 / agree.len() as f64),
            }
        })
        .collect()
}

/// Runs every cell in parallel. Instance generation and algorithm failures
/// become records with `error` set; only a malformed manifest is fatal.
pub fn run_experiment(manifest: &Manifest, timing: bool) -> Result<ExperimentReport, CliError> {
    let algorithms = manifest
        .algorithms
        .iter()
        .map(|a| {
            Algorithm::parse(a).ok_or_else(|| CliError::Usage(format!("unknown algorithm `{a}`")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let budget = match (&manifest.oracle.enabled, &manifest.oracle.budget) {
        (false, _) => None,
        (true, None) => Some(OracleBudget::default()),
        (true, Some(s)) => Some(s.parse::<OracleBudget>()?),
    };
    for family in &manifest.families {
        // Reject unknown families up front rather than per cell.
        if let Err(CliError::Usage(msg)) = instance(family, 0, 0) {
            return Err(CliError::Usage(msg));
        }
    }
    let seeds = manifest.seeds.to_vec();
    let mut cells = Vec::new();
    for family in &manifest.families {
        for &n in &manifest.sizes {
            for &seed in &seeds {
                cells.push((family.as_str(), n, seed));
            }
        }
    }
    let mut records: Vec<ReportRecord> = cells
        .par_iter()
        .flat_map_iter(|&(family, n, seed)| {
            let graph = instance(family, n, seed);
            algorithms
                .iter()
                .map(move |&alg| {
                    let mut record = match &graph {
                        Err(e) => ReportRecord {
                            n,
                            algorithm: alg.name().to_string(),
                            error: Some(e.to_string()),
                            ..ReportRecord::default()
                        },
                        Ok(g) => match evaluate(alg, g, budget.as_ref(), timing) {
                            Ok(e) => ReportRecord {
                                solution: None,
                                trace: None,
                                ..e.record
                            },
                            Err(e) => ReportRecord {
                                n: g.n(),
                                m: g.m(),
                                algorithm: alg.name().to_string(),
                                error: Some(e.to_string()),
                                ..ReportRecord::default()
                            },
                        },
                    };
                    record.family = family.to_string();
                    record.seed = Some(seed);
                    record
                })
                .collect::<Vec<_>>()
        })
        .collect();
    records.sort_by(|a, b| {
        (&a.family, a.n, a.seed, &a.algorithm).cmp(&(&b.family, b.n, b.seed, &b.algorithm))
    });
    let summary = summarize(&records);
    Ok(ExperimentReport { records, summary })
}
