//! The `dd2` command-line tool.
//!
//! Everything goes through [`run`], which takes its arguments and streams
//! explicitly and returns the process exit code:
//!
//! | code | meaning                                             |
//! |------|-----------------------------------------------------|
//! | 0    | success                                             |
//! | 1    | usage, I/O or parse error                           |
//! | 2    | precondition failure, infeasible input, or a solution that does not verify |
//! | 3    | exhaustive oracle budget exceeded                   |

pub mod experiment;
pub mod report;

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use dd2_core::approx::EdgeAdditionPlan;
use dd2_core::generate::{
    check_gadget_l_reductions, gen_corona_subdivision, gen_maxis_gadget, gen_maxmin_gadget,
    gen_minvc_gadget, gen_named, gen_non_dd2, gen_random_corona_spec, gen_random_cubic,
    gen_random_graph, GadgetMap, NamedGraph,
};
use dd2_core::oracle::{
    exact_gamma, exact_gamma2, exact_has_dd2_pair, exact_max_independent_set,
    exact_max_min_vertex_cover, exact_max_minimal_spanning_dd2, exact_min_edge_addition,
    exact_min_spanning_dd2, exact_min_vertex_cover, OracleBudget,
};
use dd2_core::{
    classify_minimal_component, is_minimal_by_deletion, minimalize, parse_edge_list, verify_pair,
    Dd2Pair, DeletionOrder, Graph, SpanningSubgraph,
};
use serde_json::json;

use experiment::{run_experiment, Manifest};
use report::{evaluate, Algorithm};

/// Environment variable holding a default oracle budget as `v,e,s`.
pub const BUDGET_ENV: &str = "DD2_ORACLE_BUDGET";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(#[from] dd2_core::Error),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// A checked solution failed verification.
    #[error("invalid: {0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } | CliError::Json(_) => 1,
            CliError::Core(e) if e.is_budget() => 3,
            CliError::Core(dd2_core::Error::Parse(_) | dd2_core::Error::InvalidParameter(_)) => 1,
            CliError::Core(_) | CliError::Invalid(_) => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Lexicographic,
    LowDegreeFirst,
    HighDegreeFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleProblem {
    /// Fewest edges in a spanning DD2 subgraph.
    MinDd2,
    /// Most edges in a minimal spanning DD2 subgraph.
    MaxDd2,
    /// Fewest added edges making the graph DD2.
    MinToDd2,
    /// Exhaustive DD2-pair search.
    Dd2Pair,
    MinVc,
    MaxMinVc,
    MaxIs,
    Gamma,
    Gamma2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    /// `--solution` is a DD2-pair (`A` line then `B` line).
    Pair,
    /// `--solution` is an edge list of kept edges; checks minimal spanning DD2.
    Subgraph,
    /// `--solution` is an edge-addition plan; checks that it makes the input DD2.
    Plan,
    /// Input is a cubic source graph; checks both gadget L-reductions.
    LReduction,
}

#[derive(Debug, Parser)]
#[command(
    name = "dd2",
    version,
    about = "Disjoint dominating / 2-dominating set toolkit"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Cross-check against the exhaustive oracle.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Oracle budget `vertices,edges,subsets` (overrides DD2_ORACLE_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<String>,
    /// Report wall-clock time.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, clap::Args)]
pub struct InputArg {
    /// Edge-list file; `-` or absent reads stdin.
    pub input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the graph is a DD2-graph.
    Recognize(InputArg),
    /// Print a DD2-pair (A, B).
    Pair(InputArg),
    /// Greedily delete edges down to a minimal spanning DD2 subgraph.
    Minimalize {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Lexicographic)]
        order: OrderArg,
    },
    /// 3-approximation of the minimum spanning DD2 subgraph.
    SolveMin(InputArg),
    /// 1.8-approximation of the minimum spanning DD2 subgraph on cubic graphs.
    SolveMinCubic(InputArg),
    /// Minimal spanning DD2 subgraph with a large edge count.
    SolveMax(InputArg),
    /// Edge additions that make a non-DD2 graph DD2.
    SolveMinTo(InputArg),
    /// Generate an instance.
    Gen(GenArgs),
    /// Run an exhaustive solver.
    Oracle {
        #[arg(value_enum)]
        problem: OracleProblem,
        #[command(flatten)]
        input: InputArg,
    },
    /// Check a solution against an instance.
    Verify {
        #[arg(value_enum)]
        kind: VerifyKind,
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        solution: Option<PathBuf>,
    },
    /// Run a JSON experiment manifest.
    Experiment {
        manifest: PathBuf,
        /// Write the report here instead of stdout.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, clap::Args)]
pub struct GenArgs {
    /// `cubic`, `random`, `corona`, `non-dd2`, `minvc-gadget`,
    /// `maxis-gadget`, `maxmin-gadget`, or a named graph such as `path:4`,
    /// `complete_bipartite:3,3` or `petersen`.
    pub family: String,
    /// Vertex count (core size for `corona`).
    #[arg(short)]
    pub n: Option<usize>,
    /// Edge probability for `random`.
    #[arg(short)]
    pub p: Option<f64>,
    /// Required by the random families.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Source graph for `non-dd2` and the gadgets; `-` or absent reads stdin.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Write the gadget correspondence tables as JSON.
    #[arg(long)]
    pub map: Option<PathBuf>,
}

struct Ctx<'a> {
    format: Format,
    oracle: bool,
    budget: Option<String>,
    timing: bool,
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
}

impl Ctx<'_> {
    /// `--budget`, then the environment, then `fallback`.
    fn budget_or(&self, fallback: OracleBudget) -> Result<OracleBudget, CliError> {
        match &self.budget {
            Some(s) => Ok(s.parse()?),
            None => match std::env::var(BUDGET_ENV) {
                Ok(s) => Ok(s.parse()?),
                Err(_) => Ok(fallback),
            },
        }
    }

    fn read_text(&mut self, path: Option<&Path>) -> Result<String, CliError> {
        match path {
            Some(p) if p != Path::new("-") => read_file(p),
            _ => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|source| CliError::Io {
                        path: "<stdin>".into(),
                        source,
                    })?;
                Ok(s)
            }
        }
    }

    fn read_graph(&mut self, path: Option<&Path>) -> Result<Graph, CliError> {
        Ok(parse_edge_list(&self.read_text(path)?)?)
    }

    fn emit(&mut self, text: &str) -> Result<(), CliError> {
        self.out
            .write_all(text.as_bytes())
            .and_then(|_| {
                if text.ends_with('\n') {
                    Ok(())
                } else {
                    self.out.write_all(b"\n")
                }
            })
            .map_err(|source| CliError::Io {
                path: "<stdout>".into(),
                source,
            })
    }

    fn emit_json(&mut self, value: &serde_json::Value) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(value)?;
        self.emit(&text)
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Parses `args` (including the program name) and executes the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let mut ctx = Ctx {
        format: cli.format,
        oracle: cli.oracle,
        budget: cli.budget,
        timing: cli.timing,
        stdin,
        out,
    };
    match execute(cli.command, &mut ctx) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, ctx: &mut Ctx<'_>) -> Result<(), CliError> {
    let algorithm = match &command {
        Command::Recognize(_) => Some(Algorithm::Recognize),
        Command::Pair(_) => Some(Algorithm::Pair),
        Command::SolveMin(_) => Some(Algorithm::SolveMin),
        Command::SolveMinCubic(_) => Some(Algorithm::SolveMinCubic),
        Command::SolveMax(_) => Some(Algorithm::SolveMax),
        Command::SolveMinTo(_) => Some(Algorithm::SolveMinTo),
        _ => None,
    };
    match command {
        Command::Recognize(i)
        | Command::Pair(i)
        | Command::SolveMin(i)
        | Command::SolveMinCubic(i)
        | Command::SolveMax(i)
        | Command::SolveMinTo(i) => {
            let alg = algorithm.expect("algorithm commands");
            run_algorithm(ctx, alg, i.input.as_deref())
        }
        Command::Minimalize { input, order } => run_minimalize(ctx, input.input.as_deref(), order),
        Command::Gen(args) => run_gen(ctx, args),
        Command::Oracle { problem, input } => run_oracle(ctx, problem, input.input.as_deref()),
        Command::Verify {
            kind,
            input,
            solution,
        } => run_verify(ctx, kind, input.input.as_deref(), solution.as_deref()),
        Command::Experiment { manifest, output } => {
            let manifest: Manifest = serde_json::from_str(&read_file(&manifest)?)?;
            let report = run_experiment(&manifest, ctx.timing)?;
            let text = match ctx.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            match output {
                Some(path) => write_file(&path, &text),
                None => ctx.emit(&text),
            }
        }
    }
}

fn run_algorithm(ctx: &mut Ctx<'_>, alg: Algorithm, input: Option<&Path>) -> Result<(), CliError> {
    let g = ctx.read_graph(input)?;
    let budget = if ctx.oracle {
        Some(ctx.budget_or(OracleBudget::default())?)
    } else {
        None
    };
    let eval = evaluate(alg, &g, budget.as_ref(), ctx.timing)?;
    let mut record = eval.record;
    record.family = input
        .filter(|p| *p != Path::new("-"))
        .map_or_else(|| "stdin".to_string(), |p| p.display().to_string());
    match ctx.format {
        Format::Json => ctx.emit_json(&serde_json::to_value(&record)?),
        Format::Text => {
            let mut text = String::new();
            if !matches!(alg, Algorithm::Recognize | Algorithm::Pair) {
                text.push_str(&summary_lines(&record));
            }
            text.push_str(&eval.text);
            if let Some(agree) = record.agreement {
                text.push_str(&format!(
                    "\n# exhaustive pair search {}",
                    if agree { "agrees" } else { "DISAGREES" }
                ));
            }
            if let (Some(ms), true) = (
                record.wall_ms,
                matches!(alg, Algorithm::Recognize | Algorithm::Pair),
            ) {
                text.push_str(&format!("\n# wall_ms: {ms:.3}"));
            }
            ctx.emit(&text)
        }
    }
}

/// `#`-prefixed summary, so text output stays a valid edge list or plan.
fn summary_lines(r: &report::ReportRecord) -> String {
    let mut s = format!("# algorithm: {}\n# n: {} m: {}\n", r.algorithm, r.n, r.m);
    if let Some(v) = r.value {
        s.push_str(&format!("# value: {v}\n"));
    }
    let b = &r.bounds;
    let show = |x: Option<u64>| x.map_or_else(|| "-".to_string(), |x| x.to_string());
    s.push_str(&format!("# bounds: [{}, {}]", show(b.lower), show(b.upper)));
    if let Some(f) = b.factor {
        s.push_str(&format!(" factor {f:.4}"));
    }
    s.push('\n');
    if let (Some(o), Some(ratio)) = (r.oracle, r.ratio) {
        s.push_str(&format!("# oracle: {o}\n# ratio: {ratio:.4}\n"));
    }
    if let Some(ms) = r.wall_ms {
        s.push_str(&format!("# wall_ms: {ms:.3}\n"));
    }
    s
}

fn run_minimalize(
    ctx: &mut Ctx<'_>,
    input: Option<&Path>,
    order: OrderArg,
) -> Result<(), CliError> {
    let g = ctx.read_graph(input)?;
    let order = match order {
        OrderArg::Lexicographic => DeletionOrder::Lexicographic,
        OrderArg::LowDegreeFirst => DeletionOrder::LowDegreeFirst,
        OrderArg::HighDegreeFirst => DeletionOrder::HighDegreeFirst,
    };
    let h = minimalize(&g, &order)?;
    let kept = h.to_graph();
    match ctx.format {
        Format::Json => {
            let kinds = kept
                .components()
                .iter()
                .map(|c| classify_minimal_component(&kept, c))
                .collect::<Result<Vec<_>, _>>()?;
            ctx.emit_json(&json!({
                "n": g.n(),
                "m": g.m(),
                "order": order,
                "kept": h.kept(),
                "components": kinds,
            }))
        }
        Format::Text => {
            let text = kept.to_edge_list(&[("minimalize", format!("{order:?}"))]);
            ctx.emit(&text)
        }
    }
}

fn run_gen(ctx: &mut Ctx<'_>, args: GenArgs) -> Result<(), CliError> {
    let need_n = || {
        args.n
            .ok_or_else(|| CliError::Usage(format!("`{}` needs -n", args.family)))
    };
    let need_seed = || {
        args.seed
            .ok_or_else(|| CliError::Usage(format!("`{}` is random and needs --seed", args.family)))
    };
    let mut provenance = vec![("generator", args.family.clone())];
    let mut gadget: Option<GadgetMap> = None;
    let g = match args.family.as_str() {
        "cubic" => {
            let (n, seed) = (need_n()?, need_seed()?);
            provenance.push(("params", format!("n={n}")));
            provenance.push(("seed", seed.to_string()));
            gen_random_cubic(n, seed)?
        }
        "random" => {
            let (n, seed) = (need_n()?, need_seed()?);
            let p = args
                .p
                .ok_or_else(|| CliError::Usage("`random` needs -p".into()))?;
            provenance.push(("params", format!("n={n} p={p}")));
            provenance.push(("seed", seed.to_string()));
            gen_random_graph(n, p, seed)?
        }
        "corona" => {
            let (n, seed) = (need_n()?, need_seed()?);
            provenance.push(("params", format!("core={n}")));
            provenance.push(("seed", seed.to_string()));
            gen_corona_subdivision(&gen_random_corona_spec(n, seed)?)?
        }
        "non-dd2" => gen_non_dd2(&ctx.read_graph(args.input.as_deref())?)?,
        "minvc-gadget" | "maxis-gadget" | "maxmin-gadget" => {
            let source = ctx.read_graph(args.input.as_deref())?;
            let map = match args.family.as_str() {
                "minvc-gadget" => gen_minvc_gadget(&source)?,
                "maxis-gadget" => gen_maxis_gadget(&source)?,
                _ => gen_maxmin_gadget(&source)?,
            };
            if let Some(path) = &args.map {
                write_file(path, &map.to_json())?;
            }
            let g = map.target.clone();
            gadget = Some(map);
            g
        }
        named => {
            let spec: NamedGraph = named
                .parse()
                .map_err(|_| CliError::Usage(format!("unknown family `{named}`")))?;
            gen_named(spec)?
        }
    };
    match ctx.format {
        Format::Json => match gadget {
            Some(map) => ctx.emit_json(&serde_json::to_value(&map)?),
            None => ctx.emit_json(&json!({
                "provenance": provenance.iter().map(|(k, v)| (k.to_string(), v.clone())).collect::<std::collections::BTreeMap<_, _>>(),
                "graph": g,
            })),
        },
        Format::Text => {
            let text = g.to_edge_list(&provenance);
            ctx.emit(&text)
        }
    }
}

fn vertices_text(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn run_oracle(
    ctx: &mut Ctx<'_>,
    problem: OracleProblem,
    input: Option<&Path>,
) -> Result<(), CliError> {
    let g = ctx.read_graph(input)?;
    let budget = ctx.budget_or(OracleBudget::default())?;
    let start = std::time::Instant::now();
    // (value, explored, witness as text, witness as json)
    let (value, explored, text, witness) = match problem {
        OracleProblem::MinDd2 | OracleProblem::MaxDd2 => {
            let r = if problem == OracleProblem::MinDd2 {
                exact_min_spanning_dd2(&g, &budget)?
            } else {
                exact_max_minimal_spanning_dd2(&g, &budget)?
            };
            let h = Graph::from_edges(g.n(), r.witness.iter().copied())?;
            (
                Some(r.value),
                r.explored,
                h.to_edge_list(&[]),
                json!(r.witness),
            )
        }
        OracleProblem::MinToDd2 => {
            let r = exact_min_edge_addition(&g, &budget)?;
            (
                Some(r.value),
                r.explored,
                r.witness.to_text(),
                json!(r.witness),
            )
        }
        OracleProblem::Dd2Pair => match exact_has_dd2_pair(&g, &budget)? {
            Some(p) => (None, 0, p.to_text(), json!(p)),
            None => (None, 0, "no DD2-pair".to_string(), json!(null)),
        },
        _ => {
            let solver = match problem {
                OracleProblem::MinVc => exact_min_vertex_cover,
                OracleProblem::MaxMinVc => exact_max_min_vertex_cover,
                OracleProblem::MaxIs => exact_max_independent_set,
                OracleProblem::Gamma => exact_gamma,
                _ => exact_gamma2,
            };
            let r = solver(&g, &budget)?;
            (
                Some(r.value),
                r.explored,
                vertices_text(&r.witness),
                json!(r.witness),
            )
        }
    };
    let problem_name = problem
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let wall_ms = ctx.timing.then(|| start.elapsed().as_secs_f64() * 1e3);
    match ctx.format {
        Format::Json => {
            let mut doc = json!({ "problem": problem_name, "witness": witness });
            if let Some(v) = value {
                doc["value"] = json!(v);
                doc["explored"] = json!(explored);
            }
            if let Some(ms) = wall_ms {
                doc["wall_ms"] = json!(ms);
            }
            ctx.emit_json(&doc)
        }
        Format::Text => {
            let mut s = format!("# problem: {problem_name}\n");
            if let Some(v) = value {
                s.push_str(&format!("# value: {v}\n# explored: {explored}\n"));
            }
            if let Some(ms) = wall_ms {
                s.push_str(&format!("# wall_ms: {ms:.3}\n"));
            }
            s.push_str(&text);
            ctx.emit(&s)
        }
    }
}

fn run_verify(
    ctx: &mut Ctx<'_>,
    kind: VerifyKind,
    input: Option<&Path>,
    solution: Option<&Path>,
) -> Result<(), CliError> {
    let g = ctx.read_graph(input)?;
    let solution = || -> Result<String, CliError> {
        read_file(solution.ok_or_else(|| CliError::Usage("this check needs --solution".into()))?)
    };
    let verdict: Result<String, String> = match kind {
        VerifyKind::Pair => {
            let p = Dd2Pair::parse(&solution()?)?;
            if verify_pair(&g, &p) {
                Ok(format!(
                    "valid DD2-pair with |A| = {}, |B| = {}",
                    p.a.len(),
                    p.b.len()
                ))
            } else {
                Err("not a partition into a dominating and a 2-dominating set".into())
            }
        }
        VerifyKind::Subgraph => {
            let kept = parse_edge_list(&solution()?)?;
            if kept.n() != g.n() {
                Err(format!(
                    "solution has {} vertices, instance has {}",
                    kept.n(),
                    g.n()
                ))
            } else {
                let h = SpanningSubgraph::new(&g, kept.edges().iter().copied())?;
                if is_minimal_by_deletion(&h) {
                    Ok(format!(
                        "valid minimal spanning DD2 subgraph with {} edges",
                        h.len()
                    ))
                } else if dd2_core::is_dd2(&kept).is_dd2 {
                    Err("spanning DD2 subgraph, but not minimal".into())
                } else {
                    Err("kept edges do not form a DD2-graph".into())
                }
            }
        }
        VerifyKind::Plan => {
            let plan = EdgeAdditionPlan::parse(&solution()?)?;
            let extended = plan.apply(&g)?;
            if dd2_core::is_dd2(&extended).is_dd2 {
                Ok(format!("valid plan with {} additions", plan.len()))
            } else {
                Err("graph is still not DD2 after the additions".into())
            }
        }
        VerifyKind::LReduction => {
            let budget = ctx.budget_or(OracleBudget::large())?;
            let (minvc, maxis) = check_gadget_l_reductions(&g, &budget)?;
            let line = format!("minvc-gadget: {minvc}, maxis-gadget: {maxis}");
            if minvc && maxis {
                Ok(line)
            } else {
                Err(line)
            }
        }
    };
    let valid = verdict.is_ok();
    let message = match &verdict {
        Ok(m) | Err(m) => m.clone(),
    };
    match ctx.format {
        Format::Json => ctx.emit_json(&json!({ "valid": valid, "message": message }))?,
        Format::Text => ctx.emit(&if valid {
            message.clone()
        } else {
            format!("invalid: {message}")
        })?,
    }
    verdict.map(|_| ()).map_err(CliError::Invalid)
}
