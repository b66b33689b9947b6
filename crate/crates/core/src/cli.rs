//! The `matchcover` command line.
//!
//! Machine output (JSON, graphs) goes to stdout and diagnostics to stderr.
//! Exit codes: 0 ok, 1 a check failed, 2 unreadable or unparsable input,
//! 3 a size bound was exceeded, 4 invalid construction parameters, 5 a
//! precondition of the requested check does not hold.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::constructions::{
    chain_spanners, make_diamond_spanner, make_propeller, make_spanner, make_theorem1_graph,
    ChainSpec, DiamondSpannerSpec, SpannerSpec,
};
use crate::cover::{greedy_two_cover, lambda_mu, params_report, ParamsReport};
use crate::graph::{parse_edge_list, parse_graph6_lines, serialize_edge_list, serialize_graph6, to_dot, DotLayer};
use crate::harness::{random_connected, run_suite, Check, CheckSuite, Source};
use crate::structure::{check_augpaths, check_new_edge_lemma, max_intersection_triple, verify_theorem2};
use crate::{Error, Graph, Limits, Result};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_BOUND: i32 = 3;
pub const EXIT_INVALID_CONSTRUCTION: i32 = 4;
pub const EXIT_PRECONDITION: i32 = 5;

/// Exit code for an error surfaced by the library.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Graph6(_)
        | Error::LoopEdge(_)
        | Error::VertexOutOfRange { .. }
        | Error::Io(_) => EXIT_PARSE,
        Error::BoundExceeded { .. } => EXIT_BOUND,
        Error::InvalidSpec(_) | Error::InvalidRatio { .. } => EXIT_INVALID_CONSTRUCTION,
        Error::Disconnected | Error::Precondition(_) | Error::UndefinedRatio => EXIT_PRECONDITION,
    }
}

#[derive(Parser, Debug)]
#[command(name = "matchcover", version, about = "Disjoint-matchings parameters of small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// nu, lambda, mu, mu' and optionally nu_3, nu_4 of the input graph(s).
    Compute(ComputeArgs),
    /// Build a graph family member.
    Construct(ConstructArgs),
    /// Run one structural check on the input graph(s).
    Verify(VerifyArgs),
    /// Run a check suite over generated or supplied graphs.
    Enumerate(EnumerateArgs),
    /// Compare the greedy two-matching cover with lambda.
    Greedy(InputArgs),
}

#[derive(Args, Debug)]
pub struct InputArgs {
    /// Graph file; stdin when absent or `-`.
    pub input: Option<PathBuf>,
    /// Input format; detected from the content by default.
    #[arg(long, value_enum, default_value_t = InputFormat::Auto)]
    pub input_format: InputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    /// Edge list (`u v` per line, optional `n <count>` header).
    El,
    G6,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Param {
    Nu,
    Lambda,
    Mu,
    Nu3,
    Nu4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Args, Debug)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Parameters to compute; nu, lambda and mu are always included.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub params: Vec<Param>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    pub format: ReportFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Spanner,
    Diamond,
    Propeller,
    Theorem1,
    Chain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    El,
    G6,
    Dot,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub family: Family,
    /// Extra legs of a spanner.
    #[arg(long)]
    pub k: Option<usize>,
    /// How many of the extra legs sit on the left central vertex.
    #[arg(long)]
    pub left: Option<usize>,
    /// Diamonds between the central vertices.
    #[arg(long)]
    pub d: Option<usize>,
    /// Target mu (theorem1).
    #[arg(long)]
    pub m: Option<usize>,
    /// Target nu (theorem1) or blade count (propeller).
    #[arg(long)]
    pub n: Option<usize>,
    /// Chain members as `k` or `k:left`, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub spanners: Vec<String>,
    #[arg(long, value_enum, default_value_t = GraphFormat::El)]
    pub format: GraphFormat,
    /// Compute the parameters and compare them with the family's values.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyCheck {
    Theorem2,
    Augpaths,
    NewEdge,
    Bounds,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum)]
    pub check: VerifyCheck,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Every labeled connected graph on 1..=N vertices.
    #[arg(long, conflicts_with_all = ["g6", "random"])]
    pub n: Option<usize>,
    /// With --n: one graph per isomorphism class instead.
    #[arg(long, requires = "n")]
    pub classes: bool,
    /// graph6 file, one graph per line.
    #[arg(long, conflicts_with = "random")]
    pub g6: Option<PathBuf>,
    /// Random connected graphs as `n,edges,count`.
    #[arg(long, value_parser = parse_random_spec)]
    pub random: Option<[usize; 3]>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Checks to run, comma separated, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "bounds,theorem2")]
    pub check: Vec<String>,
    /// Run on one thread.
    #[arg(long)]
    pub serial: bool,
    /// Leave wall-clock timings out of the report.
    #[arg(long)]
    pub no_timing: bool,
}

fn parse_random_spec(s: &str) -> std::result::Result<[usize; 3], String> {
    let parts: Vec<usize> = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|e| format!("'{p}': {e}")))
        .collect::<std::result::Result<_, _>>()?;
    <[usize; 3]>::try_from(parts).map_err(|_| "expected n,edges,count".to_string())
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    limits: Limits,
}

/// Parses `args` (program name first) and runs the command; returns the exit
/// code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    let mut io = Io { stdin, out, err, limits: Limits::from_env() };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.err, "error: {e}");
            if let Error::BoundExceeded { what: "internal generator vertex", .. } = e {
                let _ = writeln!(io.err, "hint: pass larger graphs with --g6 <file>");
            }
            exit_code(&e)
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32> {
    match command {
        Command::Compute(a) => compute(a, io),
        Command::Construct(a) => construct(a, io),
        Command::Verify(a) => verify(a, io),
        Command::Enumerate(a) => enumerate(a, io),
        Command::Greedy(a) => greedy(a, io),
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Io(e.to_string())
}

fn emit_json(io: &mut Io<'_>, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v).expect("json values serialize");
    writeln!(io.out, "{text}").map_err(io_err)
}

/// One JSON value per graph: the value itself for a single graph, an array
/// otherwise.
fn emit_all(io: &mut Io<'_>, mut values: Vec<Value>) -> Result<()> {
    let v = if values.len() == 1 { values.pop().unwrap() } else { Value::Array(values) };
    emit_json(io, &v)
}

/// Edge list when the first meaningful line is `n <count>` or starts with a
/// digit (graph6 never uses digits); graph6 otherwise.
pub fn detect_format(text: &str) -> InputFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.starts_with(|c: char| c.is_ascii_digit()) => InputFormat::El,
        Some(l) if l.split_whitespace().next() == Some("n") && l.contains(char::is_whitespace) => InputFormat::El,
        _ => InputFormat::G6,
    }
}

/// Parses graphs from `text`; an edge list holds one graph, a graph6 text
/// one per line.
pub fn parse_graphs(text: &str, format: InputFormat) -> Result<Vec<Graph>> {
    let format = if format == InputFormat::Auto { detect_format(text) } else { format };
    match format {
        InputFormat::El => Ok(vec![parse_edge_list(text)?]),
        _ => {
            let body: String = text
                .lines()
                .filter(|l| !l.starts_with(">>graph6<<"))
                .map(|l| format!("{l}\n"))
                .collect();
            let graphs = parse_graph6_lines(&body)?;
            if graphs.is_empty() {
                return Err(Error::Parse {
                    line: 1,
                    kind: crate::ParseErrorKind::Malformed("no graph in input".into()),
                });
            }
            Ok(graphs)
        }
    }
}

fn read_graphs(args: &InputArgs, io: &mut Io<'_>) -> Result<Vec<Graph>> {
    let mut text = String::new();
    match &args.input {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        }
        _ => {
            io.stdin.read_to_string(&mut text).map_err(io_err)?;
        }
    }
    parse_graphs(&text, args.input_format)
}

fn text_report(r: &ParamsReport) -> String {
    let ratio = match r.ratio() {
        Ok((p, q)) => format!("{p}/{q}"),
        Err(_) => "undefined".into(),
    };
    let mut line = format!(
        "n={} m={} nu={} lambda={} mu={} mu'={} ratio={}",
        r.n, r.m, r.nu, r.lambda, r.mu, r.mu_prime, ratio
    );
    for (k, v) in &r.nu_k {
        if *k > 2 {
            line.push_str(&format!(" nu{k}={v}"));
        }
    }
    line
}

fn compute(a: ComputeArgs, io: &mut Io<'_>) -> Result<i32> {
    let graphs = read_graphs(&a.input, io)?;
    let ks: Vec<usize> = a
        .params
        .iter()
        .filter_map(|p| match p {
            Param::Nu3 => Some(3),
            Param::Nu4 => Some(4),
            _ => None,
        })
        .collect();
    let reports = graphs
        .iter()
        .map(|g| params_report(g, &ks, &io.limits))
        .collect::<Result<Vec<_>>>()?;
    match a.format {
        ReportFormat::Json => {
            let values = reports.iter().map(|r| serde_json::to_value(r).unwrap()).collect();
            emit_all(io, values)?;
        }
        ReportFormat::Text => {
            for r in &reports {
                writeln!(io.out, "{}", text_report(r)).map_err(io_err)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn need(v: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    v.ok_or_else(|| Error::InvalidSpec(format!("{family} needs --{flag}")))
}

fn parse_chain_member(s: &str) -> Result<SpannerSpec> {
    let bad = || Error::InvalidSpec(format!("chain member '{s}' is not k or k:left"));
    let mut parts = s.trim().split(':');
    let k = parts.next().and_then(|p| p.parse().ok()).ok_or_else(bad)?;
    let left = match parts.next() {
        Some(p) => p.parse().map_err(|_| bad())?,
        None => k,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(SpannerSpec::new(k, left))
}

/// `(nu, lambda, mu)` of a spanner with `k` extra legs.
fn spanner_values(k: usize) -> (usize, usize, usize) {
    (k + 5, k + 8, k + 4)
}

/// Rejects flags the chosen family does not read.
fn check_flags(a: &ConstructArgs) -> Result<()> {
    let given = [
        ("k", a.k.is_some()),
        ("left", a.left.is_some()),
        ("d", a.d.is_some()),
        ("m", a.m.is_some()),
        ("n", a.n.is_some()),
        ("spanners", !a.spanners.is_empty()),
    ];
    let allowed: &[&str] = match a.family {
        Family::Spanner => &["k", "left"],
        Family::Diamond => &["d"],
        Family::Propeller => &["n"],
        Family::Theorem1 => &["m", "n"],
        Family::Chain => &["spanners"],
    };
    match given.iter().find(|(f, on)| *on && !allowed.contains(f)) {
        Some((f, _)) => Err(Error::InvalidSpec(format!("--{f} does not apply to {:?}", a.family).to_lowercase())),
        None => Ok(()),
    }
}

fn construct(a: ConstructArgs, io: &mut Io<'_>) -> Result<i32> {
    check_flags(&a)?;
    // Expected (nu, lambda, mu); lambda is None when only the ratio is fixed.
    let (graph, highlight, expected): (Graph, Vec<crate::Edge>, (usize, Option<usize>, usize)) = match a.family {
        Family::Spanner => {
            let k = a.k.unwrap_or(0);
            let s = make_spanner(SpannerSpec::new(k, a.left.unwrap_or(k)))?;
            let (nu, lambda, mu) = spanner_values(k);
            (s.graph.clone(), s.perfect_matching(), (nu, Some(lambda), mu))
        }
        Family::Diamond => {
            let d = a.d.unwrap_or(0);
            let g = make_diamond_spanner(DiamondSpannerSpec::new(d))?;
            (g, Vec::new(), (5 + 2 * d, Some(8 + 4 * d), 4 + 2 * d))
        }
        Family::Propeller => {
            let n = need(a.n, "n", "propeller")?;
            let g = make_propeller(n)?;
            let lambda = if n >= 2 { n + 2 } else { 2 };
            (g, Vec::new(), (n, Some(lambda), n))
        }
        Family::Theorem1 => {
            let (m, n) = (need(a.m, "m", "theorem1")?, need(a.n, "n", "theorem1")?);
            let c = make_theorem1_graph(m, n)?;
            (c.graph, c.joins, (n, None, m))
        }
        Family::Chain => {
            if a.spanners.is_empty() {
                return Err(Error::InvalidSpec("chain needs --spanners".into()));
            }
            let specs = a.spanners.iter().map(|s| parse_chain_member(s)).collect::<Result<Vec<_>>>()?;
            let c = chain_spanners(&ChainSpec { spanners: specs.clone() })?;
            let sum = specs.iter().map(|s| spanner_values(s.k)).fold((0, 0, 0), |acc, v| {
                (acc.0 + v.0, acc.1 + v.1, acc.2 + v.2)
            });
            (c.graph, c.joins, (sum.0, Some(sum.1), sum.2))
        }
    };
    let text = match a.format {
        GraphFormat::El => serialize_edge_list(&graph),
        GraphFormat::G6 => format!("{}\n", serialize_graph6(&graph)),
        GraphFormat::Dot => to_dot(&graph, &[DotLayer { edges: &highlight, color: "red" }]),
    };
    io.out.write_all(text.as_bytes()).map_err(io_err)?;
    if !a.verify {
        return Ok(EXIT_OK);
    }
    let r = lambda_mu(&graph, &io.limits)?;
    let (nu, lambda, mu) = expected;
    let ok = r.nu == nu && r.mu == mu && lambda.is_none_or(|l| l == r.lambda);
    let lambda_note = lambda.map_or(String::new(), |l| format!(" lambda={l}"));
    let _ = writeln!(
        io.err,
        "verify: computed nu={} lambda={} mu={}; expected nu={nu}{lambda_note} mu={mu}: {}",
        r.nu,
        r.lambda,
        r.mu,
        if ok { "ok" } else { "MISMATCH" }
    );
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn bounds_report(g: &Graph, limits: &Limits) -> Result<(Value, bool)> {
    if g.edge_count() == 0 {
        return Ok((json!({"check": "bounds", "applicable": false, "passed": true}), true));
    }
    let r = lambda_mu(g, limits)?;
    let passed = 4 * r.nu <= 5 * r.mu && r.mu <= r.nu;
    let v = json!({
        "check": "bounds",
        "applicable": true,
        "nu": r.nu,
        "mu": r.mu,
        "ratio": r.ratio().ok().map(|(p, q)| [p, q]),
        "passed": passed,
    });
    Ok((v, passed))
}

fn verify(a: VerifyArgs, io: &mut Io<'_>) -> Result<i32> {
    let graphs = read_graphs(&a.input, io)?;
    let limits = io.limits;
    let mut values = Vec::new();
    let mut all_ok = true;
    for g in &graphs {
        let (v, ok) = match a.check {
            VerifyCheck::Theorem2 => {
                let v = verify_theorem2(g, &limits)?;
                (serde_json::to_value(&v).unwrap(), v.consistent)
            }
            VerifyCheck::Augpaths => {
                let t = max_intersection_triple(g, &limits)?;
                let r = check_augpaths(g, &t);
                (serde_json::to_value(&r).unwrap(), r.passed || !r.applicable)
            }
            VerifyCheck::NewEdge => {
                let r = check_new_edge_lemma(g, &limits)?;
                (serde_json::to_value(&r).unwrap(), r.passed)
            }
            VerifyCheck::Bounds => bounds_report(g, &limits)?,
        };
        all_ok &= ok;
        values.push(v);
    }
    emit_all(io, values)?;
    Ok(if all_ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn enumerate(a: EnumerateArgs, io: &mut Io<'_>) -> Result<i32> {
    let checks = if a.check.iter().any(|c| c == "all") {
        Check::ALL.to_vec()
    } else {
        a.check.iter().map(|c| c.parse::<Check>()).collect::<Result<Vec<_>>>()?
    };
    let mut suite = CheckSuite::new(checks).with_limits(io.limits);
    suite.seed = a.seed;
    suite.parallel = !a.serial;
    let source = if let Some(n) = a.n {
        if a.classes {
            Source::ConnectedClasses { max_n: n }
        } else {
            Source::Connected { max_n: n }
        }
    } else if let Some(path) = &a.g6 {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Source::Graphs(parse_graphs(&text, InputFormat::G6).or_else(|e| {
            // An empty corpus is an empty run, not a parse error.
            if text.trim().is_empty() {
                Ok(Vec::new())
            } else {
                Err(e)
            }
        })?)
    } else if let Some(r) = &a.random {
        Source::Graphs(random_connected(r[0], r[1], a.seed, r[2])?)
    } else {
        return Err(Error::Precondition("enumerate needs one of --n, --g6, --random".into()));
    };
    let report = run_suite(source, &suite)?;
    emit_json(io, &report.to_json(!a.no_timing))?;
    let _ = writeln!(
        io.err,
        "{} graphs, {} failures",
        report.graphs,
        report.failures.len()
    );
    Ok(if report.passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn greedy(a: InputArgs, io: &mut Io<'_>) -> Result<i32> {
    let graphs = read_graphs(&a, io)?;
    let mut values = Vec::new();
    for g in &graphs {
        let r = lambda_mu(g, &io.limits)?;
        let (total, _) = greedy_two_cover(g);
        values.push(json!({"greedy_total": total, "lambda": r.lambda, "gap": r.lambda - total}));
    }
    emit_all(io, values)?;
    Ok(EXIT_OK)
}

/// Entry point for the binary.
pub fn main_from_env() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = stdin.as_bytes();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let mut full = vec!["matchcover"];
        full.extend_from_slice(args);
        let code = run(full, &mut input, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    const SPANNER0: &str = "0 1\n0 2\n2 3\n0 4\n4 5\n1 6\n6 7\n1 8\n8 9\n";

    #[test]
    fn format_detection() {
        assert_eq!(detect_format("0 1\n"), InputFormat::El);
        assert_eq!(detect_format("# c\nn 4\n0 1\n"), InputFormat::El);
        assert_eq!(detect_format("C~\n"), InputFormat::G6);
        assert_eq!(detect_format("n?????\n"), InputFormat::G6);
    }

    #[test]
    fn compute_spanner_and_edge() {
        let (code, out, _) = call(&["compute"], SPANNER0);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["nu"].as_u64(), v["lambda"].as_u64(), v["mu"].as_u64()), (Some(5), Some(8), Some(4)));
        assert_eq!(v["ratio"], json!([4, 5]));
        let (_, out, _) = call(&["compute", "--format", "text"], "0 1\n");
        assert_eq!(out.trim(), "n=2 m=1 nu=1 lambda=1 mu=1 mu'=0 ratio=1/1");
        let (_, out, _) = call(&["compute", "--params", "nu3"], "C~\n");
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["nu_k"]["3"], 6);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["compute"], "0 0\n").0, EXIT_PARSE);
        assert_eq!(call(&["compute"], "0 x\n").0, EXIT_PARSE);
        assert_eq!(call(&["construct", "theorem1", "--m", "1", "--n", "2"], "").0, EXIT_INVALID_CONSTRUCTION);
        assert_eq!(call(&["verify", "--check", "theorem2"], "0 1\n2 3\n").0, EXIT_PRECONDITION);
        assert_eq!(call(&["enumerate", "--n", "9"], "").0, EXIT_BOUND);
        assert_eq!(call(&["compute", "--bogus"], "").0, EXIT_PARSE);
        assert_eq!(call(&["enumerate", "--n", "3", "--g6", "x"], "").0, EXIT_PARSE);
    }

    #[test]
    fn construct_and_verify() {
        let (code, out, err) = call(&["construct", "spanner", "--k", "0", "--verify"], "");
        assert_eq!(code, 0, "{err}");
        assert_eq!(parse_edge_list(&out).unwrap().edge_count(), 9);
        let (code, _, err) = call(&["construct", "chain", "--spanners", "0,1:0", "--verify", "--format", "g6"], "");
        assert_eq!(code, 0, "{err}");
        let (code, out, _) = call(&["construct", "diamond", "--d", "1", "--format", "dot"], "");
        assert_eq!(code, 0);
        assert!(out.starts_with("graph G {"));
        let (code, _, err) = call(&["construct", "propeller", "--n", "3", "--verify"], "");
        assert_eq!(code, 0, "{err}");
        assert_eq!(call(&["construct", "chain", "--spanners", "0:5"], "").0, EXIT_INVALID_CONSTRUCTION);
        assert_eq!(call(&["construct", "spanner", "--d", "1"], "").0, EXIT_INVALID_CONSTRUCTION);
    }

    #[test]
    fn verify_and_greedy() {
        let (code, out, _) = call(&["verify", "--check", "new-edge"], "0 1\n1 2\n0 2\n");
        assert_eq!(code, 0);
        assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["non_edges"], 0);
        assert_eq!(call(&["verify", "--check", "bounds"], SPANNER0).0, 0);
        assert_eq!(call(&["verify", "--check", "augpaths"], SPANNER0).0, 0);
        let (_, out, _) = call(&["greedy"], SPANNER0);
        assert_eq!(serde_json::from_str::<Value>(&out).unwrap(), json!({"greedy_total": 7, "lambda": 8, "gap": 1}));
    }

    #[test]
    fn enumerate_reports() {
        let (code, out, _) = call(&["enumerate", "--n", "0", "--no-timing"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["graphs"], 0);
        assert!(v.get("timing_ms").is_none());
        let (code, out, _) = call(&["enumerate", "--random", "8,9,20", "--seed", "3", "--check", "bounds,new-edge"], "");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["checks"]["new_edge"]["processed"], 20);
    }
}
