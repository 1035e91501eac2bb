//! The `spantree` command line.
//!
//! Exit codes: 0 success, 1 other failures (e.g. no closed form applies),
//! 2 unreadable or invalid input, 3 a size guard was hit, 4 an exactness
//! check failed (including an oracle mismatch under `--verify`).

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::count::{
    count_complete, count_ferrers, count_multipartite, count_spanning_trees, oracle_count_with,
    CountConfig, CountOutcome, FormulaFamily, Method, ORACLE_EDGE_LIMIT,
};
use crate::error::Error;
use crate::graph::{Graph, PartitionShape, Vertex};
use crate::recognition::{
    classify, forbidden_subgraph_check, Family, FerrersStructure, SearchConfig,
};
use crate::weighted::{
    weighted_cayley_prufer, weighted_count_ferrers, weighted_enumerator, weighted_oracle_with,
};

/// Environment variable overriding the oracle's edge limit.
pub const ORACLE_LIMIT_VAR: &str = "SPANTREE_ORACLE_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "spantree",
    version,
    about = "Exact spanning tree counts and graph family recognition"
)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the U-search and the oracle.
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report threshold, Ferrers and special 2-threshold membership.
    Classify {
        /// Edge-list file (`-` for stdin).
        file: PathBuf,
    },
    /// Count spanning trees.
    Count {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Cross-check against the brute-force oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Compute the weighted enumerator with weights x_i x_j.
    Weighted {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Cross-check against the brute-force weighted oracle.
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Edge-list file (`-` for stdin).
    #[arg(required_unless_present_any = ["ferrers", "complete", "multipartite"])]
    file: Option<PathBuf>,
    /// Ferrers graph of a partition, e.g. 3,2,2,1.
    #[arg(long, value_name = "PARTS", conflicts_with_all = ["file", "complete", "multipartite"])]
    ferrers: Option<String>,
    /// Complete graph K_n.
    #[arg(long, value_name = "N", conflicts_with_all = ["file", "multipartite"])]
    complete: Option<usize>,
    /// Complete multipartite graph, e.g. 2,3.
    #[arg(long, value_name = "SIZES", conflicts_with = "file")]
    multipartite: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Auto,
    Formula,
    MatrixTree,
    Perturbation,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::Formula => Method::Formula,
            MethodArg::MatrixTree => Method::MatrixTree,
            MethodArg::Perturbation => Method::Perturbation,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoVertices
            | Error::VertexOutOfRange { .. }
            | Error::Loop(_)
            | Error::DuplicateEdge(..)
            | Error::InvalidPartition(_)
            | Error::Parse { .. } => 2,
            Error::CapabilityExceeded { .. } => 3,
            Error::InexactDivision(_) | Error::NotTriangular { .. } => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_failure(message: String) -> Failure {
    Failure { code: 2, message }
}

/// A graph plus what the user asked for, when it came from a family flag.
enum Input {
    File { name: String, graph: Graph },
    Ferrers(PartitionShape),
    Complete(usize),
    Multipartite(Vec<usize>),
}

impl Input {
    fn describe(&self) -> String {
        match self {
            Input::File { name, .. } => name.clone(),
            Input::Ferrers(s) => format!("ferrers {s}"),
            Input::Complete(n) => format!("complete {n}"),
            Input::Multipartite(s) => {
                let parts: Vec<String> = s.iter().map(ToString::to_string).collect();
                format!("multipartite {}", parts.join(","))
            }
        }
    }

    fn graph(&self) -> Result<Graph, Failure> {
        Ok(match self {
            Input::File { graph, .. } => graph.clone(),
            Input::Ferrers(s) => s.ferrers_graph().graph,
            Input::Complete(n) => Graph::complete(*n)?,
            Input::Multipartite(s) => Graph::complete_multipartite(s)?,
        })
    }
}

fn read_graph(path: &PathBuf) -> Result<(String, Graph), Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| input_failure(format!("cannot read stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path)
            .map_err(|e| input_failure(format!("cannot read {}: {e}", path.display())))?
    };
    let graph = Graph::parse_edge_list(&text)
        .map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
    Ok((path.display().to_string(), graph))
}

fn parse_sizes(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| input_failure(format!("`{}` is not a size", p.trim())))
        })
        .collect()
}

fn resolve_input(args: &InputArgs) -> Result<Input, Failure> {
    if let Some(f) = &args.ferrers {
        return Ok(Input::Ferrers(f.parse::<PartitionShape>()?));
    }
    if let Some(n) = args.complete {
        if n == 0 {
            return Err(Error::NoVertices.into());
        }
        return Ok(Input::Complete(n));
    }
    if let Some(m) = &args.multipartite {
        let sizes = parse_sizes(m)?;
        if sizes.contains(&0) {
            return Err(Error::InvalidPartition("sizes must be positive".into()).into());
        }
        return Ok(Input::Multipartite(sizes));
    }
    let path = args.file.as_ref().expect("clap requires an input");
    let (name, graph) = read_graph(path)?;
    Ok(Input::File { name, graph })
}

fn oracle_limit() -> Result<usize, Failure> {
    match std::env::var(ORACLE_LIMIT_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| input_failure(format!("{ORACLE_LIMIT_VAR}={v:?} is not a number"))),
        Err(_) => Ok(ORACLE_EDGE_LIMIT),
    }
}

fn input_json(input: &Input, g: &Graph) -> Value {
    json!({
        "source": input.describe(),
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
    })
}

fn set_str(vs: &[Vertex]) -> String {
    let parts: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

fn run_classify(
    path: &PathBuf,
    config: &CountConfig,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let (name, g) = read_graph(path)?;
    let c = classify(&g, config.search)?;
    let ferrers_witness = if c.ferrers.is_none() && g.is_connected() && g.bipartition().is_some() {
        forbidden_subgraph_check(&g, Family::Ferrers)?
    } else {
        None
    };
    let order = c.threshold.as_ref().or(c.special_2_threshold.as_ref());

    if as_json {
        let mut witnesses = Vec::new();
        for (family, w) in [
            (Family::Threshold, &c.threshold_witness),
            (Family::Ferrers, &ferrers_witness),
            (Family::Special2Threshold, &c.special_2_threshold_witness),
        ] {
            if let Some(w) = w {
                witnesses
                    .push(json!({"family": family, "pattern": w.pattern, "vertices": w.vertices}));
            }
        }
        let doc = json!({
            "input": {"source": name, "vertices": g.vertex_count(), "edges": g.edge_count()},
            "classification": {
                "threshold": c.is_threshold(),
                "ferrers": c.ferrers,
                "special_2_threshold": c.is_special_2_threshold(),
                "u": c.special_2_threshold.as_ref().map(|co| co.u_set()),
            },
            "method": Value::Null,
            "witnesses": witnesses,
            "construction_order": order,
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )
        .ok();
        return Ok(());
    }

    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let mut lines = vec![format!(
        "graph: {name} ({} vertices, {} edges)",
        g.vertex_count(),
        g.edge_count()
    )];
    lines.push(match &c.threshold_witness {
        Some(w) => format!("threshold: no, induced {w}"),
        None => format!("threshold: {}", yes_no(c.is_threshold())),
    });
    lines.push(match (&c.ferrers, &ferrers_witness) {
        (Some(fs), _) => format!(
            "ferrers: yes, shape {}, rows {}, columns {}, traversal {:?}",
            fs.shape,
            set_str(&fs.rows),
            set_str(&fs.cols),
            fs.traversal
        ),
        (None, Some(w)) => format!("ferrers: no, induced {w}"),
        (None, None) => "ferrers: no".to_string(),
    });
    lines.push(
        match (&c.special_2_threshold, &c.special_2_threshold_witness) {
            (Some(co), _) => format!("special 2-threshold: yes, U = {}", set_str(co.u_set())),
            (None, Some(w)) => format!("special 2-threshold: no, induced {w}"),
            (None, None) => "special 2-threshold: no".to_string(),
        },
    );
    if let Some(co) = order {
        lines.push(format!("construction order: {co}"));
    }
    for l in lines {
        writeln!(out, "{l}").ok();
    }
    Ok(())
}

/// Counts for family flags go straight to the closed forms.
fn family_count(input: &Input) -> Result<Option<CountOutcome>, Failure> {
    let formula = |count| {
        Some(CountOutcome {
            count,
            method: Method::Formula,
            formula: None,
        })
    };
    Ok(match input {
        Input::File { .. } => None,
        Input::Complete(n) => formula(count_complete(*n)?),
        Input::Multipartite(s) => formula(count_multipartite(s)?),
        Input::Ferrers(shape) => Some(CountOutcome {
            count: count_ferrers(&FerrersStructure::from_shape(shape))?,
            method: Method::Formula,
            formula: Some(FormulaFamily::Ferrers),
        }),
    })
}

fn verify_json(oracle: &Option<(String, bool)>) -> Value {
    match oracle {
        Some((value, agrees)) => json!({"oracle": value, "agrees": agrees}),
        None => Value::Null,
    }
}

fn run_count(
    args: &InputArgs,
    method: Method,
    verify: bool,
    config: &CountConfig,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let input = resolve_input(args)?;
    let g = input.graph()?;
    let outcome = match (method, family_count(&input)?) {
        (Method::Auto | Method::Formula, Some(o)) => o,
        _ => count_spanning_trees(&g, method, config)?,
    };
    let oracle = if verify {
        let o: BigInt = oracle_count_with(&g, config.oracle_edge_limit)?;
        let agrees = o == outcome.count;
        Some((o.to_string(), agrees))
    } else {
        None
    };
    if as_json {
        let doc = json!({
            "input": input_json(&input, &g),
            "classification": Value::Null,
            "method": outcome.method,
            "formula": outcome.formula,
            "count": outcome.count.to_string(),
            "witnesses": [],
            "construction_order": Value::Null,
            "verify": verify_json(&oracle),
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )
        .ok();
    } else {
        writeln!(out, "spanning trees: {}", outcome.count).ok();
        match outcome.formula {
            Some(f) => writeln!(out, "method: {} ({f})", outcome.method).ok(),
            None => writeln!(out, "method: {}", outcome.method).ok(),
        };
        if let Some((o, agrees)) = &oracle {
            writeln!(
                out,
                "oracle: {o} ({})",
                if *agrees { "agrees" } else { "MISMATCH" }
            )
            .ok();
        }
    }
    check_agreement(&oracle)
}

fn check_agreement(oracle: &Option<(String, bool)>) -> Result<(), Failure> {
    match oracle {
        Some((o, false)) => Err(Failure {
            code: 4,
            message: format!("oracle disagrees (oracle gives {o})"),
        }),
        _ => Ok(()),
    }
}

fn run_weighted(
    args: &InputArgs,
    method: Method,
    verify: bool,
    config: &CountConfig,
    as_json: bool,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let input = resolve_input(args)?;
    let g = input.graph()?;
    let direct = match (&input, method) {
        (Input::Complete(n), Method::Auto | Method::Formula) => {
            Some((weighted_cayley_prufer(*n)?, None))
        }
        (Input::Ferrers(shape), Method::Auto | Method::Formula) => Some((
            weighted_count_ferrers(&FerrersStructure::from_shape(shape)),
            Some(FormulaFamily::Ferrers),
        )),
        _ => None,
    };
    let (poly, used, formula) = match direct {
        Some((p, f)) => (p, Method::Formula, f),
        None => {
            let o = weighted_enumerator(&g, method, config)?;
            (o.polynomial, o.method, o.formula)
        }
    };
    let oracle = if verify {
        let o = weighted_oracle_with(&g, config.oracle_edge_limit)?;
        let agrees = o == poly;
        Some((o.to_string(), agrees))
    } else {
        None
    };
    if as_json {
        let doc = json!({
            "input": input_json(&input, &g),
            "classification": Value::Null,
            "method": used,
            "formula": formula,
            "polynomial": poly.to_string(),
            "count": poly.substitute_all_ones().to_string(),
            "witnesses": [],
            "construction_order": Value::Null,
            "verify": verify_json(&oracle),
        });
        writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        )
        .ok();
    } else {
        writeln!(out, "enumerator: {poly}").ok();
        writeln!(out, "at x = 1: {}", poly.substitute_all_ones()).ok();
        match formula {
            Some(f) => writeln!(out, "method: {used} ({f})").ok(),
            None => writeln!(out, "method: {used}").ok(),
        };
        if let Some((_, agrees)) = &oracle {
            writeln!(
                out,
                "oracle: {}",
                if *agrees { "agrees" } else { "MISMATCH" }
            )
            .ok();
        }
    }
    check_agreement(&oracle)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let config = CountConfig {
        search: SearchConfig {
            jobs: cli.jobs,
            ..SearchConfig::default()
        },
        oracle_edge_limit: oracle_limit()?,
    };
    match &cli.command {
        Command::Classify { file } => run_classify(file, &config, cli.json, out),
        Command::Count {
            input,
            method,
            verify,
        } => run_count(input, (*method).into(), *verify, &config, cli.json, out),
        Command::Weighted {
            input,
            method,
            verify,
        } => run_weighted(input, (*method).into(), *verify, &config, cli.json, out),
    }
}

/// Runs the command line on `args` (including the program name), writing
/// to the given streams, and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if code == 0 {
                write!(out, "{rendered}").ok();
            } else {
                write!(err, "{rendered}").ok();
            }
            return code;
        }
    };
    let result = match cli.jobs {
        Some(j) if j > 0 => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => {
                let mut buf = Vec::new();
                let r = pool.install(|| dispatch(&cli, &mut buf));
                out.write_all(&buf).ok();
                r
            }
            Err(e) => Err(Failure {
                code: 1,
                message: format!("cannot start worker pool: {e}"),
            }),
        },
        Some(_) => Err(input_failure("--jobs must be positive".into())),
        None => dispatch(&cli, out),
    };
    match result {
        Ok(()) => 0,
        Err(f) => {
            if cli.json {
                writeln!(out, "{}", json!({"error": f.message, "exit_code": f.code})).ok();
            }
            writeln!(err, "error: {}", f.message).ok();
            f.code
        }
    }
}

/// Runs on the process arguments and standard streams.
pub fn run() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
