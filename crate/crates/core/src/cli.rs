//! The `eqtree` command-line interface.
//!
//! Exit codes: 0 success or feasible, 1 infeasible or invalid, 2 search
//! budget exceeded, 64 malformed input, 65 violated precondition, 66 no
//! reducible configuration found.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bipartite::{self, BipartiteError, Variant};
use crate::bound::Bound;
use crate::coloring::{verify, Certificate, Params, TreeColoring};
use crate::edgelist;
use crate::generators;
use crate::graph::Graph;
use crate::oracle::{self, SearchBudget, SearchOutcome};
use crate::sparse::{self, SparseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_MALFORMED: i32 = 64;
pub const EXIT_PRECONDITION: i32 = 65;
pub const EXIT_NO_CONFIGURATION: i32 = 66;

#[derive(Debug, Parser)]
#[command(name = "eqtree", version, about = "Equitable (t,k,d)-tree-colorings")]
struct Cli {
    /// Machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a generated graph as an edge list.
    Gen(GenArgs),
    /// Build a coloring and print its certificate.
    Construct(ConstructArgs),
    /// Check a certificate against a graph.
    Verify(VerifyArgs),
    /// Decide whether K_{n,n} has an equitable coloring with q classes.
    Feasible(FeasibleArgs),
    /// Strong equitable vertex arboricity of K_{n,n}.
    ExactVa(ExactVaArgs),
    /// Exhaustive search on a small graph.
    Search(SearchArgs),
    /// Compare the K_{n,n} feasibility tests with exhaustive search.
    CrossCheck(CrossCheckArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Knn,
    Cycle,
    Path,
    Dodecahedron,
    Hexgrid,
    Outerplanar,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Size parameter (side length, cycle length, hexagon rows, ...).
    #[arg(long)]
    n: Option<usize>,
    /// Hexagon columns for `hexgrid` (defaults to `n`).
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Even,
    Odd11,
    Classcounts,
    Girth5,
    Girth6,
    Outerplanar,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value = "inf")]
    k: Bound,
    #[arg(long, default_value = "inf")]
    d: Bound,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
    /// Also write the colored graph in DOT format.
    #[arg(long)]
    emit_dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    cert: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    #[value(name = "11")]
    OneOne,
    #[value(name = "inf2")]
    InfTwo,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::OneOne => Variant::OneOne,
            VariantArg::InfTwo => Variant::InfTwo,
        }
    }
}

#[derive(Debug, Args)]
struct FeasibleArgs {
    #[arg(long)]
    knn: usize,
    #[arg(long)]
    q: usize,
    #[arg(long, value_enum)]
    variant: VariantArg,
}

#[derive(Debug, Args)]
struct ExactVaArgs {
    #[arg(long)]
    knn: usize,
    #[arg(long, value_enum)]
    variant: VariantArg,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    graph: PathBuf,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value = "inf")]
    k: Bound,
    #[arg(long, default_value = "inf")]
    d: Bound,
    #[arg(long, default_value_t = 100_000_000)]
    max_nodes: u64,
    /// Time limit in seconds.
    #[arg(long, default_value_t = 60.0)]
    time_cap: f64,
    #[arg(long)]
    emit_dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CrossCheckArgs {
    #[arg(long, default_value_t = 4)]
    nmax: usize,
    #[arg(long, default_value_t = 8)]
    qmax: usize,
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl From<SparseError> for Failure {
    fn from(e: SparseError) -> Self {
        let code = match e {
            SparseError::ConfigurationNotFound { .. } | SparseError::NoLowDegreeVertex { .. } => {
                EXIT_NO_CONFIGURATION
            }
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

impl From<BipartiteError> for Failure {
    fn from(e: BipartiteError) -> Self {
        let code = match e {
            BipartiteError::Infeasible { .. } => EXIT_INFEASIBLE,
            _ => EXIT_PRECONDITION,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<(i32, String), Failure>;

/// Runs one command. Output meant for stdout and stderr is written to the
/// given sinks; the return value is the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                EXIT_MALFORMED
            } else {
                let _ = write!(stdout, "{rendered}");
                EXIT_OK
            };
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Gen(a) => gen(&a),
        Command::Construct(a) => construct(&a),
        Command::Verify(a) => verify_cmd(&a, json),
        Command::Feasible(a) => feasible(&a, json),
        Command::ExactVa(a) => exact_va(&a, json),
        Command::Search(a) => search(&a, json),
        Command::CrossCheck(a) => cross_check(&a, json),
    };
    match result {
        Ok((code, out)) => {
            let _ = stdout.write_all(out.as_bytes());
            code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|s| text = s)
    };
    res.map_err(|e| Failure::new(EXIT_MALFORMED, format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn load_graph(path: &Path) -> Result<edgelist::EdgeList, Failure> {
    let text = read_input(path)?;
    edgelist::parse(&text).map_err(|e| Failure::new(EXIT_MALFORMED, format!("{}: {e}", path.display())))
}

fn gen(a: &GenArgs) -> Outcome {
    let need_n = || a.n.ok_or_else(|| Failure::new(EXIT_PRECONDITION, "--n is required for this family"));
    let degenerate = |e: crate::GraphError| Failure::new(EXIT_PRECONDITION, e.to_string());
    let (g, label) = match a.family {
        Family::Knn => {
            let n = need_n()?;
            (generators::complete_bipartite(n).map_err(degenerate)?.0, format!("knn n={n}"))
        }
        Family::Cycle => {
            let n = need_n()?;
            (generators::cycle(n).map_err(degenerate)?, format!("cycle n={n}"))
        }
        Family::Path => {
            let n = need_n()?;
            (generators::path(n).map_err(degenerate)?, format!("path n={n}"))
        }
        Family::Dodecahedron => (generators::dodecahedron(), "dodecahedron".to_string()),
        Family::Hexgrid => {
            let rows = need_n()?;
            let cols = a.cols.unwrap_or(rows);
            (generators::hex_grid(rows, cols).map_err(degenerate)?, format!("hexgrid rows={rows} cols={cols}"))
        }
        Family::Outerplanar => {
            let n = need_n()?;
            let g = generators::maximal_outerplanar_random(n, a.seed).map_err(degenerate)?;
            (g, format!("outerplanar n={n} seed={}", a.seed))
        }
    };
    Ok((EXIT_OK, edgelist::write(&g, &[format!("family {label}")])))
}

fn family_hint(comments: &[String]) -> Option<&str> {
    comments
        .iter()
        .find_map(|c| c.strip_prefix("family "))
        .and_then(|rest| rest.split_whitespace().next())
}

fn knn_side(g: &Graph, method: Method) -> Result<usize, Failure> {
    generators::as_complete_bipartite(g).ok_or_else(|| {
        Failure::new(
            EXIT_PRECONDITION,
            format!("method {method:?} needs K_{{n,n}} with sides 0..n and n..2n"),
        )
    })
}

fn construct_knn(n: usize, t: usize) -> Result<TreeColoring, Failure> {
    if t.is_multiple_of(2) {
        return Ok(bipartite::even_t_coloring(n, t)?);
    }
    match bipartite::witness(n, t, Variant::OneOne) {
        Ok(c) => Ok(c),
        Err(BipartiteError::Infeasible { .. }) => Ok(bipartite::witness(n, t, Variant::InfTwo)?),
        Err(e) => Err(e.into()),
    }
}

fn construct_sparse(g: &Graph, t: usize, hint: Option<&str>) -> Result<TreeColoring, Failure> {
    if t == 1 && g.is_forest() {
        return Ok(TreeColoring::new(1, vec![1; g.vertex_count()]).expect("t = 1"));
    }
    if hint == Some("outerplanar") {
        return Ok(sparse::color_outerplanar(g, t)?);
    }
    let girth = g.girth();
    if girth >= Bound::Finite(6) && t >= 2 {
        return Ok(sparse::color_girth6(g, t)?);
    }
    if girth >= Bound::Finite(5) && t >= 3 {
        return Ok(sparse::color_girth5(g, t)?);
    }
    Ok(sparse::color_outerplanar(g, t)?)
}

fn construct(a: &ConstructArgs) -> Outcome {
    let input = load_graph(&a.graph)?;
    let g = &input.graph;
    let params = Params::new(a.t, a.k, a.d).map_err(|e| Failure::new(EXIT_PRECONDITION, e.to_string()))?;
    let t = a.t;
    let coloring = match a.method {
        Method::Auto => match generators::as_complete_bipartite(g) {
            Some(n) => construct_knn(n, t)?,
            None => construct_sparse(g, t, family_hint(&input.comments))?,
        },
        Method::Even => bipartite::even_t_coloring(knn_side(g, a.method)?, t)?,
        Method::Odd11 => bipartite::odd_q_11_coloring(knn_side(g, a.method)?, t)?,
        Method::Classcounts => {
            let n = knn_side(g, a.method)?;
            let counts = bipartite::feasible_inf2(n, t)
                .ok_or(BipartiteError::Infeasible { n, q: t, variant: Variant::InfTwo })?;
            bipartite::realize_class_counts(n, t, &counts)?
        }
        Method::Girth5 => sparse::color_girth5(g, t)?,
        Method::Girth6 => sparse::color_girth6(g, t)?,
        Method::Outerplanar => sparse::color_outerplanar(g, t)?,
    };
    let report = verify(g, &coloring, &params).map_err(|e| Failure::new(EXIT_PRECONDITION, e.to_string()))?;
    if !report.verdict {
        return Err(Failure::new(
            EXIT_PRECONDITION,
            format!(
                "constructed coloring does not meet (t,k,d) = ({t},{},{}): {}",
                a.k,
                a.d,
                report.first_violation
            ),
        ));
    }
    if let Some(path) = &a.emit_dot {
        write_dot(path, g, &coloring)?;
    }
    let cert = Certificate::new(&coloring, &params);
    Ok((EXIT_OK, format!("{}\n", cert.to_json())))
}

fn verify_cmd(a: &VerifyArgs, json: bool) -> Outcome {
    let input = load_graph(&a.graph)?;
    let text = read_input(&a.cert)?;
    let malformed = |e: String| Failure::new(EXIT_MALFORMED, format!("{}: {e}", a.cert.display()));
    let cert = Certificate::from_json(&text).map_err(|e| malformed(e.to_string()))?;
    let params = cert.params().map_err(|e| malformed(e.to_string()))?;
    let coloring = cert.coloring().map_err(|e| malformed(e.to_string()))?;
    let report = verify(&input.graph, &coloring, &params)
        .map_err(|e| Failure::new(EXIT_PRECONDITION, e.to_string()))?;
    let code = if report.verdict { EXIT_OK } else { EXIT_INFEASIBLE };
    if json {
        return Ok((code, format!("{}\n", serde_json::to_string(&report).expect("serializable"))));
    }
    let mut out = String::new();
    let sizes: Vec<usize> = report.classes.iter().map(|c| c.size).collect();
    let _ = writeln!(out, "class sizes: {sizes:?}");
    let _ = writeln!(out, "equitable: {}", report.equitable);
    if report.verdict {
        out.push_str("valid\n");
    } else {
        let _ = writeln!(out, "invalid: {}", report.first_violation);
    }
    Ok((code, out))
}

fn feasible(a: &FeasibleArgs, json: bool) -> Outcome {
    if a.knn == 0 || a.q == 0 {
        return Err(Failure::new(EXIT_PRECONDITION, "--knn and --q must be at least 1"));
    }
    let variant = Variant::from(a.variant);
    let (ok, witness) = match variant {
        Variant::OneOne => {
            let w = bipartite::witness_11(a.knn, a.q);
            (w.is_some(), w.map(|c| json!({ "class_sizes": c.class_sizes() })))
        }
        Variant::InfTwo => {
            let w = bipartite::feasible_inf2(a.knn, a.q);
            (w.is_some(), w.map(|v| serde_json::to_value(v).expect("serializable")))
        }
    };
    let code = if ok { EXIT_OK } else { EXIT_INFEASIBLE };
    let verdict = if ok { "feasible" } else { "infeasible" };
    if json {
        let value = json!({ "n": a.knn, "q": a.q, "variant": variant, "feasible": ok, "witness": witness });
        return Ok((code, format!("{value}\n")));
    }
    let mut out = format!("{verdict}\n");
    if variant == Variant::InfTwo {
        if let Some(v) = bipartite::feasible_inf2(a.knn, a.q) {
            let _ = writeln!(out, "{v}");
        }
    } else if let Some(w) = witness {
        let _ = writeln!(out, "class sizes: {}", w["class_sizes"]);
    }
    Ok((code, out))
}

fn exact_va(a: &ExactVaArgs, json: bool) -> Outcome {
    if a.knn == 0 {
        return Err(Failure::new(EXIT_PRECONDITION, "--knn must be at least 1"));
    }
    let variant = Variant::from(a.variant);
    let value = match variant {
        Variant::OneOne => bipartite::exact_va11(a.knn),
        Variant::InfTwo => bipartite::exact_vainf2(a.knn),
    };
    if json {
        return Ok((EXIT_OK, format!("{}\n", json!({ "n": a.knn, "variant": variant, "value": value }))));
    }
    Ok((EXIT_OK, format!("{value}\n")))
}

fn search(a: &SearchArgs, json: bool) -> Outcome {
    let input = load_graph(&a.graph)?;
    let g = &input.graph;
    let params = Params::new(a.t, a.k, a.d).map_err(|e| Failure::new(EXIT_PRECONDITION, e.to_string()))?;
    if !(a.time_cap.is_finite() && a.time_cap > 0.0) {
        return Err(Failure::new(EXIT_PRECONDITION, "--time-cap must be a positive number of seconds"));
    }
    let budget = SearchBudget { max_nodes: a.max_nodes, time_cap: Duration::from_secs_f64(a.time_cap) };
    let outcome = oracle::brute_force_search(g, &params, budget)
        .map_err(|e| Failure::new(EXIT_PRECONDITION, e.to_string()))?;
    let (code, label) = match &outcome {
        SearchOutcome::Feasible(_) => (EXIT_OK, "feasible"),
        SearchOutcome::Infeasible => (EXIT_INFEASIBLE, "infeasible"),
        SearchOutcome::BudgetExceeded => (EXIT_BUDGET, "budget-exceeded"),
    };
    if let SearchOutcome::Feasible(c) = &outcome {
        if let Some(path) = &a.emit_dot {
            write_dot(path, g, c)?;
        }
        return Ok((code, format!("{}\n", Certificate::new(c, &params).to_json())));
    }
    if json {
        return Ok((code, format!("{}\n", json!({ "outcome": label }))));
    }
    Ok((code, format!("{label}\n")))
}

fn cross_check(a: &CrossCheckArgs, json: bool) -> Outcome {
    let report = oracle::cross_check_bipartite(a.nmax, a.qmax, SearchBudget::default())
        .map_err(|e| Failure::new(EXIT_PRECONDITION, e.to_string()))?;
    let code = if report.is_clean() { EXIT_OK } else { EXIT_INFEASIBLE };
    if json {
        return Ok((code, format!("{}\n", serde_json::to_string(&report).expect("serializable"))));
    }
    let mut out = format!("checked {} instances, {} disagreements\n", report.checked, report.disagreements.len());
    for d in &report.disagreements {
        let _ = writeln!(out, "n={} q={} {}: exact={} oracle={}", d.n, d.q, d.variant, d.exact, d.oracle);
    }
    Ok((code, out))
}

/// DOT rendering with one fill color per class (cycling through 12).
pub fn to_dot(g: &Graph, c: &TreeColoring) -> String {
    let mut out = String::from("graph coloring {\n  node [style=filled, colorscheme=set312];\n");
    for v in g.vertices() {
        let color = c.color(v);
        let _ = writeln!(out, "  {v} [fillcolor={}, label=\"{v}:{color}\"];", (color - 1) % 12 + 1);
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

fn write_dot(path: &Path, g: &Graph, c: &TreeColoring) -> Result<(), Failure> {
    std::fs::write(path, to_dot(g, c))
        .map_err(|e| Failure::new(EXIT_PRECONDITION, format!("{}: {e}", path.display())))
}
