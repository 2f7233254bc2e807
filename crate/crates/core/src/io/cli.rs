//! `mpn-radio` command line. Exit codes: 0 success, 1 semantic failure
//! (violation, disagreement, unproven), 2 usage or parse error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::document::{GraphDocument, GraphRef, LabelingDocument, LabelingKind};
use super::dot::to_dot;
use super::table::{result_row, write_csv, ExactColumn};
use crate::construction::{lower_bound_mpn, rn_mpn_formula, MpnConstruction};
use crate::graph::{all_pairs_distances, DistanceMatrix, Graph};
use crate::labeling::{is_l21_labeling, is_radio_labeling, span, Violation};
use crate::solver::{exact_lambda_parallel, exact_radio_number_parallel, SolverBudget};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "mpn-radio", version, about = "Radio labelings of middle graphs of paths")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write M(P_n) and its optimal radio labeling.
    Construct {
        #[arg(long)]
        n: usize,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a labeling against the radio or L(2,1) condition.
    Verify {
        /// Graph document; defaults to the graph referenced by the labeling.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        labeling: PathBuf,
        /// Overrides the kind declared in the labeling document.
        #[arg(long)]
        kind: Option<VerifyKind>,
    },
    /// Compute rn(G) or λ(G) exactly.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = SolveKind::Radio)]
        kind: SolveKind,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Where to write the witness labeling.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tabulate bound, construction, and formula for a range of n.
    Table {
        /// Inclusive range, e.g. `2..10`.
        #[arg(long)]
        range: String,
        /// Add an exact-solver column.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        /// CSV path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a graph document as Graphviz DOT.
    Export {
        #[arg(long)]
        graph: PathBuf,
        /// DOT path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyKind {
    Radio,
    #[value(alias = "L21", alias = "lambda")]
    L21,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SolveKind {
    Radio,
    #[value(alias = "l21")]
    Lambda,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl BudgetArgs {
    fn budget(&self) -> SolverBudget {
        SolverBudget {
            max_nodes: self.budget_nodes,
            max_seconds: self.budget_seconds,
        }
    }
}

/// Runs the CLI with process stdout/stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            if e.use_stderr() {
                let _ = write!(err, "{e}");
            } else {
                let _ = write!(out, "{e}");
            }
            return code;
        }
    };
    let result = match cli.command {
        Command::Construct { n, out: dir } => cmd_construct(n, &dir, out),
        Command::Verify {
            graph,
            labeling,
            kind,
        } => cmd_verify(graph.as_deref(), &labeling, kind, out),
        Command::Solve {
            graph,
            kind,
            budget,
            out: witness,
        } => cmd_solve(&graph, kind, &budget, witness.as_deref(), out),
        Command::Table {
            range,
            exact,
            budget,
            out: path,
        } => cmd_table(&range, exact, &budget, path.as_deref(), out),
        Command::Export { graph, out: path } => cmd_export(&graph, path.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// A usage or input error; always exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<(Graph, DistanceMatrix), Failure> {
    let g = GraphDocument::read(path)?.to_graph()?;
    let d = all_pairs_distances(&g)?;
    Ok((g, d))
}

fn cmd_construct(n: usize, dir: &Path, out: &mut dyn Write) -> CmdResult {
    if n < 2 {
        return Err(Failure(format!("n must be at least 2, got {n}")));
    }
    let c = MpnConstruction::build(n)?;
    std::fs::create_dir_all(dir).map_err(|e| Failure(format!("{}: {e}", dir.display())))?;
    let graph_name = format!("m_p{n}.graph");
    let graph_path = dir.join(&graph_name);
    let labeling_path = dir.join(format!("m_p{n}.radio"));
    write_file(&graph_path, &GraphDocument::from_graph(&c.graph).emit())?;
    let doc = LabelingDocument::from_labeling(
        &c.graph,
        &c.labeling,
        LabelingKind::Radio,
        GraphRef::Path(PathBuf::from(graph_name)),
    );
    write_file(&labeling_path, &doc.emit())?;

    let s = span(&c.labeling);
    let formula = rn_mpn_formula(n)?;
    let bound = lower_bound_mpn(&c.graph, &c.distances, &c.levels)?;
    let violations = is_radio_labeling(&c.graph, &c.distances, &c.labeling)?.len();
    writeln!(
        out,
        "n={n} span={s} formula={formula} lower_bound={bound} violations={violations}"
    )?;
    writeln!(out, "wrote {}", graph_path.display())?;
    writeln!(out, "wrote {}", labeling_path.display())?;
    Ok(if s == formula && s == bound && violations == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn report(g: &Graph, violations: &[Violation], out: &mut dyn Write) -> std::io::Result<()> {
    for v in violations {
        writeln!(
            out,
            "violation {} {}: distance {} required gap {} actual gap {}",
            g.name(v.u),
            g.name(v.v),
            v.distance,
            v.required,
            v.actual
        )?;
    }
    Ok(())
}

fn cmd_verify(
    graph: Option<&Path>,
    labeling: &Path,
    kind: Option<VerifyKind>,
    out: &mut dyn Write,
) -> CmdResult {
    let doc = LabelingDocument::read(labeling)?;
    let g = match graph {
        Some(path) => GraphDocument::read(path)?.to_graph()?,
        None => {
            let base = labeling.parent().unwrap_or(Path::new("."));
            doc.load_graph(base)?
                .ok_or_else(|| Failure("no graph given and the labeling references none".into()))?
        }
    };
    let d = all_pairs_distances(&g)?;
    let lab = doc.to_labeling(&g)?;
    let kind = match kind {
        Some(VerifyKind::Radio) => LabelingKind::Radio,
        Some(VerifyKind::L21) => LabelingKind::L21,
        None => doc.kind,
    };
    let violations = match kind {
        LabelingKind::Radio => is_radio_labeling(&g, &d, &lab)?,
        LabelingKind::L21 => is_l21_labeling(&g, &d, &lab)?,
    };
    report(&g, &violations, out)?;
    writeln!(
        out,
        "kind={} span={} violations={}",
        kind.as_str(),
        span(&lab),
        violations.len()
    )?;
    Ok(if violations.is_empty() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

fn cmd_solve(
    graph: &Path,
    kind: SolveKind,
    budget: &BudgetArgs,
    witness: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let (g, d) = load_graph(graph)?;
    let result = match kind {
        SolveKind::Radio => {
            exact_radio_number_parallel(&g, &d, budget.budget(), None, budget.threads)?
        }
        SolveKind::Lambda => exact_lambda_parallel(&g, &d, budget.budget(), budget.threads)?,
    };
    writeln!(
        out,
        "optimum={} proven={} nodes={}",
        result.optimum, result.proven_optimal, result.nodes_explored
    )?;
    if let Some(path) = witness {
        let graph_ref = std::fs::canonicalize(graph).unwrap_or_else(|_| graph.to_path_buf());
        let doc_kind = match kind {
            SolveKind::Radio => LabelingKind::Radio,
            SolveKind::Lambda => LabelingKind::L21,
        };
        let doc =
            LabelingDocument::from_labeling(&g, &result.witness, doc_kind, GraphRef::Path(graph_ref));
        write_file(path, &doc.emit())?;
        writeln!(out, "witness {}", path.display())?;
    }
    Ok(if result.proven_optimal {
        EXIT_OK
    } else {
        EXIT_FAILURE
    })
}

/// Parses `a..b` or `a..=b` (both inclusive) with `2 <= a <= b`.
pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("range `{s}` should look like 2..10"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| format!("bad range start `{lo}`"))?;
    let hi: usize = hi.trim().parse().map_err(|_| format!("bad range end `{hi}`"))?;
    if lo < 2 {
        return Err(format!("range must start at n >= 2, got {lo}"));
    }
    if hi < lo {
        return Err(format!("range `{s}` is empty"));
    }
    Ok((lo, hi))
}

fn cmd_table(
    range: &str,
    exact: bool,
    budget: &BudgetArgs,
    path: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let (lo, hi) = parse_range(range).map_err(Failure)?;
    let opts = exact.then(|| ExactColumn {
        budget: budget.budget(),
        threads: budget.threads,
    });
    let rows = (lo..=hi)
        .map(|n| result_row(n, opts))
        .collect::<Result<Vec<_>, _>>()?;
    match path {
        Some(p) => {
            let file = std::fs::File::create(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?;
            write_csv(&rows, file)?;
        }
        None => write_csv(&rows, &mut *out)?,
    }
    let disagreements: Vec<usize> = rows.iter().filter(|r| !r.agreement).map(|r| r.n).collect();
    if exact {
        let unproven = rows.iter().filter(|r| r.exact_value.is_none()).count();
        if unproven > 0 {
            eprintln!("note: exact value not proven within budget for {unproven} row(s)");
        }
    }
    if disagreements.is_empty() {
        Ok(EXIT_OK)
    } else {
        eprintln!("disagreement at n = {disagreements:?}");
        Ok(EXIT_FAILURE)
    }
}

fn cmd_export(graph: &Path, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let g = GraphDocument::read(graph)?.to_graph()?;
    let dot = to_dot(&g);
    match path {
        Some(p) => write_file(p, &dot)?,
        None => out.write_all(dot.as_bytes())?,
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2..10"), Ok((2, 10)));
        assert_eq!(parse_range("3..=3"), Ok((3, 3)));
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("1..4").is_err());
        assert!(parse_range("x..4").is_err());
        assert!(parse_range("4").is_err());
    }
}
