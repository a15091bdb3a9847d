//! The five subcommands: construct, check, copnumber, simulate, table.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, ValueEnum};
use meyniel_core::cayley::CayleyGraph;
use meyniel_core::certify::{certify, CopCertificate, SolverEvidence};
use meyniel_core::constructions::{build_gamma1, build_gamma2, build_gamma3, greedy_generating_set};
use meyniel_core::copgame::{
    cop_strategy, k_cop_win, robber_strategy, simulate, GameVerdict, SolveBudget, SolveOutcome,
};
use meyniel_core::error::{Error, Result};
use meyniel_core::freeness::{report_for_cayley, report_for_graph, FreenessReport};
use meyniel_core::graph::{to_edge_list, to_graph6};
use meyniel_core::groups::AbelianGroup;
use serde::Serialize;

use crate::instance::{Family, InputArgs, Loaded};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Edges,
    Graph6,
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct BudgetArgs {
    /// State-space ceiling for one solver run.
    #[arg(long, default_value_t = 5_000_000)]
    pub max_states: u64,

    /// Wall-clock ceiling in seconds for one solver run.
    #[arg(long, default_value_t = 300)]
    pub max_seconds: u64,
}

impl BudgetArgs {
    fn budget(&self) -> SolveBudget {
        SolveBudget {
            max_states: self.max_states,
            max_millis: self.max_seconds.saturating_mul(1000),
        }
    }
}

fn write_or_print(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => {
            if let Some(dir) = path.parent() {
                if !dir.as_os_str().is_empty() {
                    std::fs::create_dir_all(dir)?;
                }
            }
            std::fs::write(path, content)?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

fn pretty_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Output directory for the graph and metadata files.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,

    /// Graph serialization: `edges` always written, `graph6` adds a .g6 file.
    #[arg(long, value_enum, default_value_t = OutputFormat::Edges)]
    pub format: OutputFormat,
}

#[derive(Serialize)]
struct ConstructMeta {
    family: String,
    params: BTreeMap<String, u64>,
    n: u64,
    s_size: u64,
    generators: Vec<Vec<u64>>,
}

pub fn cmd_construct(args: &ConstructArgs) -> Result<()> {
    if args.input.input.is_some() {
        return Err(Error::Domain(
            "construct builds family instances; --input is not accepted".into(),
        ));
    }
    match args.format {
        OutputFormat::Edges | OutputFormat::Graph6 => {}
        other => {
            return Err(Error::Domain(format!(
                "construct supports --format edges|graph6, got {other:?}"
            )))
        }
    }
    let loaded = args.input.resolve()?;
    let Some(cayley) = loaded.cayley() else {
        unreachable!("construct always builds a family instance");
    };
    std::fs::create_dir_all(&args.out)?;
    let slug = loaded.slug();

    let edges_path = args.out.join(format!("{slug}.edges"));
    std::fs::write(&edges_path, to_edge_list(cayley.graph()))?;
    println!("{}", edges_path.display());

    if args.format == OutputFormat::Graph6 {
        let mut g6 = to_graph6(cayley.graph())?;
        g6.push(b'\n');
        let g6_path = args.out.join(format!("{slug}.g6"));
        std::fs::write(&g6_path, g6)?;
        println!("{}", g6_path.display());
    }

    let meta = ConstructMeta {
        family: loaded.family_name().into(),
        params: loaded.params(),
        n: cayley.n() as u64,
        s_size: cayley.generators().len() as u64,
        generators: cayley
            .generators()
            .elements()
            .iter()
            .map(|e| e.coords().to_vec())
            .collect(),
    };
    let meta_path = args.out.join(format!("{slug}.meta.json"));
    std::fs::write(&meta_path, pretty_json(&meta))?;
    println!("{}", meta_path.display());
    Ok(())
}

// ---------------------------------------------------------------------------
// check
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// K_{2,t} sizes to test (repeatable); defaults to the family's natural t.
    #[arg(long = "t", value_name = "T")]
    pub ts: Vec<u32>,

    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn freeness_for(loaded: &Loaded, ts: &[u32]) -> Result<FreenessReport> {
    match loaded.cayley() {
        Some(cayley) => report_for_cayley(cayley, ts),
        None => report_for_graph(loaded.plain(), ts),
    }
}

pub fn cmd_check(args: &CheckArgs) -> Result<()> {
    let loaded = args.input.resolve()?;
    let ts = if args.ts.is_empty() {
        loaded.default_ts()
    } else {
        args.ts.clone()
    };
    let report = freeness_for(&loaded, &ts)?;
    write_or_print(&args.out, &pretty_json(&report))
}

// ---------------------------------------------------------------------------
// copnumber
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct CopnumberArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[command(flatten)]
    pub budget: BudgetArgs,

    /// K_{2,t} sizes for the freeness premises (repeatable).
    #[arg(long = "t", value_name = "T")]
    pub ts: Vec<u32>,

    /// Largest cop count the exact search may try.
    #[arg(long, default_value_t = 8)]
    pub k_max: u32,

    /// Write the certificate here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs the deciding games under the budget: first verify the formula lower
/// bound by solving one cop below it, then close the remaining gap upward.
fn gather_solver_evidence(
    graph: &meyniel_core::graph::Graph,
    lower: u64,
    upper: Option<u64>,
    k_max: u32,
    budget: &SolveBudget,
) -> Result<Vec<SolveOutcome>> {
    let mut outcomes: Vec<SolveOutcome> = Vec::new();
    let mut lo = lower;
    let start = lower.saturating_sub(1).max(1) as u32;
    let mut k = start;
    while k as u64 <= k_max as u64 {
        if let Some(h) = upper {
            if k as u64 >= h {
                break; // the bracket top already decides everything above
            }
            if lo >= h && k as u64 >= lo {
                break; // pinned
            }
        }
        let out = k_cop_win(graph, k, budget)?;
        let verdict = out.verdict;
        outcomes.push(out);
        match verdict {
            GameVerdict::CopsWin => break,
            GameVerdict::RobberWins => lo = lo.max(k as u64 + 1),
            GameVerdict::Inconclusive => break,
        }
        k += 1;
    }
    Ok(outcomes)
}

pub fn certificate_for(
    loaded: &Loaded,
    ts: &[u32],
    k_max: u32,
    budget: &SolveBudget,
) -> Result<CopCertificate> {
    let report = freeness_for(loaded, ts)?;
    // formula-only pass fixes the bracket the solver needs to close
    let formula = certify(
        loaded.graph_meta(),
        &report,
        loaded.s_size(),
        loaded.cayley().map(|g| g.is_connected()).unwrap_or(false),
        None,
        loaded.theorem_target(),
    )?;
    let lower = formula.bounds.lower.map(|b| b.value).unwrap_or(1);
    let upper = formula.bounds.upper.map(|b| b.value);
    let outcomes = gather_solver_evidence(loaded.plain(), lower, upper, k_max, budget)?;
    let evidence = SolverEvidence::from_outcomes(&outcomes);
    certify(
        loaded.graph_meta(),
        &report,
        loaded.s_size(),
        loaded.cayley().map(|g| g.is_connected()).unwrap_or(false),
        Some(&evidence),
        loaded.theorem_target(),
    )
}

pub fn cmd_copnumber(args: &CopnumberArgs) -> Result<()> {
    let loaded = args.input.resolve()?;
    let ts = if args.ts.is_empty() {
        loaded.default_ts()
    } else {
        args.ts.clone()
    };
    let cert = certificate_for(&loaded, &ts, args.k_max, &args.budget.budget())?;
    write_or_print(&args.out, &pretty_json(&cert))
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[command(flatten)]
    pub budget: BudgetArgs,

    /// Number of cops.
    #[arg(long, default_value_t = 1)]
    pub cops: u32,

    /// Cop strategy: random | greedy-distance | optimal.
    #[arg(long, default_value = "random")]
    pub cop_strategy: String,

    /// Robber strategy: evader | stay | random | optimal.
    #[arg(long, default_value = "evader")]
    pub robber_strategy: String,

    /// Round limit.
    #[arg(long, default_value_t = 1000)]
    pub rounds: u32,

    /// Seed for the strategy randomness.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Write the transcript here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<()> {
    let loaded = args.input.resolve()?;
    let graph = loaded.plain();
    let needs_solve = args.cop_strategy == "optimal" || args.robber_strategy == "optimal";
    let solved = if needs_solve {
        let out = k_cop_win(graph, args.cops, &args.budget.budget())?;
        match out.solved {
            Some(s) => Some(Arc::new(s)),
            None => {
                return Err(Error::Domain(
                    "optimal strategies need a completed solve; the budget was exhausted".into(),
                ))
            }
        }
    } else {
        None
    };
    let mut cops = cop_strategy(&args.cop_strategy, solved.clone())?;
    let mut robber = robber_strategy(&args.robber_strategy, solved)?;
    let transcript = simulate(
        graph,
        args.cops,
        cops.as_mut(),
        robber.as_mut(),
        args.rounds,
        args.seed,
    )?;
    write_or_print(&args.out, &transcript.to_jsonl())
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Restrict the table to one family.
    #[arg(long, value_enum)]
    pub family: Option<Family>,

    /// Stdout format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Csv)]
    pub format: OutputFormat,

    /// Basename for file output; writes <out>.csv and <out>.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Serialize)]
pub struct TableRow {
    family: String,
    params: String,
    n: u64,
    s_size: u64,
    delta: u64,
    lower: u64,
    lower_rule: String,
    upper: Option<u64>,
    upper_rule: Option<String>,
    exact: Option<u64>,
    target: f64,
    achieved: f64,
    satisfied: bool,
}

pub const CSV_HEADER: &str =
    "family,params,n,s_size,delta,lower,lower_rule,upper,upper_rule,exact,target,achieved,satisfied";

impl TableRow {
    fn csv_line(&self) -> String {
        let opt = |v: &Option<u64>| v.map(|x| x.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{:.4},{},{}",
            self.family,
            self.params,
            self.n,
            self.s_size,
            self.delta,
            self.lower,
            self.lower_rule,
            opt(&self.upper),
            self.upper_rule.clone().unwrap_or_default(),
            opt(&self.exact),
            self.target,
            self.achieved,
            self.satisfied
        )
    }
}

fn rule_tag(rule: meyniel_core::certify::BoundRule) -> String {
    serde_json::to_value(rule)
        .expect("serializable")
        .as_str()
        .expect("string tag")
        .to_string()
}

/// The built-in instance list the table reproduces.
fn table_instances(filter: Option<Family>) -> Vec<(Family, BTreeMap<&'static str, u64>)> {
    let mut rows: Vec<(Family, BTreeMap<&'static str, u64>)> = Vec::new();
    for n in [200u64, 250, 1000] {
        rows.push((Family::Gamma1, BTreeMap::from([("n", n)])));
    }
    for (p, k) in [(3u64, 2u64), (5, 2), (7, 2), (3, 4)] {
        rows.push((Family::Gamma2, BTreeMap::from([("p", p), ("k", k)])));
    }
    for p in [3u64, 5, 7, 11] {
        rows.push((Family::Gamma3, BTreeMap::from([("p", p)])));
    }
    for n in [175u64, 245, 1001] {
        rows.push((Family::Greedy, BTreeMap::from([("n", n)])));
    }
    rows.retain(|(f, _)| filter.map(|want| *f == want).unwrap_or(true));
    rows
}

pub fn table_rows(filter: Option<Family>) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    for (family, params) in table_instances(filter) {
        let set = match family {
            Family::Gamma1 => build_gamma1(params["n"])?.0,
            Family::Gamma2 => build_gamma2(params["p"], params["k"] as usize)?,
            Family::Gamma3 => build_gamma3(params["p"])?,
            Family::Greedy => {
                greedy_generating_set(&AbelianGroup::make_cyclic(params["n"])?)?
            }
        };
        let graph = CayleyGraph::build(set)?;
        let loaded = Loaded::Cayley {
            family,
            params: params
                .iter()
                .map(|(k, v)| (k.to_string(), *v))
                .collect(),
            graph,
        };
        let report = freeness_for(&loaded, &loaded.default_ts())?;
        let cert = certify(
            loaded.graph_meta(),
            &report,
            loaded.s_size(),
            loaded.cayley().map(|g| g.is_connected()).unwrap_or(false),
            None,
            loaded.theorem_target(),
        )?;
        let lower = cert.bounds.lower.expect("family rows always have a bound");
        let theorem = cert.theorem.expect("family rows always have a target");
        rows.push(TableRow {
            family: family.name().into(),
            params: params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(" "),
            n: cert.graph.n,
            s_size: loaded.s_size().unwrap_or(0),
            delta: cert.graph.delta,
            lower: lower.value,
            lower_rule: rule_tag(lower.rule),
            upper: cert.bounds.upper.map(|b| b.value),
            upper_rule: cert.bounds.upper.map(|b| rule_tag(b.rule)),
            exact: cert.bounds.exact,
            target: theorem.target_value,
            achieved: theorem.achieved,
            satisfied: theorem.satisfied,
        });
    }
    Ok(rows)
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&row.csv_line());
        out.push('\n');
    }
    out
}

pub fn cmd_table(args: &TableArgs) -> Result<()> {
    match args.format {
        OutputFormat::Csv | OutputFormat::Json => {}
        other => {
            return Err(Error::Domain(format!(
                "table supports --format csv|json, got {other:?}"
            )))
        }
    }
    let rows = table_rows(args.family)?;
    let csv = render_csv(&rows);
    let json = pretty_json(&rows);
    if let Some(base) = &args.out {
        if let Some(dir) = base.parent() {
            if !dir.as_os_str().is_empty() {
                std::fs::create_dir_all(dir)?;
            }
        }
        let mut csv_path = base.clone().into_os_string();
        csv_path.push(".csv");
        std::fs::write(PathBuf::from(&csv_path), &csv)?;
        let mut json_path = base.clone().into_os_string();
        json_path.push(".json");
        std::fs::write(PathBuf::from(&json_path), &json)?;
        println!("{}", Path::new(&csv_path).display());
        println!("{}", Path::new(&json_path).display());
    } else {
        let mut stdout = std::io::stdout().lock();
        match args.format {
            OutputFormat::Csv => stdout.write_all(csv.as_bytes())?,
            _ => stdout.write_all(json.as_bytes())?,
        }
    }
    Ok(())
}
