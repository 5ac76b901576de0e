//! Command-line front end for the `xtrees` binary.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use crate::canon::canonical_code;
use crate::enumerate::{family_census, free_trees};
use crate::error::Error;
use crate::extremal::{construct_extremal, FamilyConstraint, FamilyKind, Theorem};
use crate::indices::Index;
use crate::structure::squeeze;
use crate::transforms::{observed_delta, predicted_delta, TransformKind};
use crate::tree::{parse_tree, Tree};
use crate::verify::{cells_to_csv, default_a_grid, default_alpha_grid, full_report, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "xtrees",
    version,
    about = "Extremal trees for the general Randic and sum exdeg indices"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an index on a tree
    Index {
        /// Edge-list file, `-` for stdin
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        index: IndexArg,
    },
    /// Evaluate a closed-form extremal bound
    Bound {
        #[command(flatten)]
        selector: Selector,
        #[command(flatten)]
        index: IndexArg,
    },
    /// Build the extremal tree of a theorem
    Construct {
        #[command(flatten)]
        selector: Selector,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List every free tree of an order, optionally restricted to a family
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "param")]
        family: Option<FamilyKind>,
        #[arg(long, requires = "family")]
        param: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print only the number of trees
        #[arg(long, conflicts_with_all = ["out", "census"])]
        count: bool,
        /// Print tree counts per family parameter
        #[arg(long, conflicts_with_all = ["out", "family"])]
        census: bool,
    },
    /// Apply one edge move to a tree
    Transform {
        #[arg(long)]
        lemma: TransformKind,
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        index: OptionalIndexArg,
    },
    /// Contract every degree-2 vertex
    Squeeze {
        #[arg(long)]
        input: PathBuf,
    },
    /// Check theorems and moves against exhaustive enumeration
    Verify {
        /// Comma-separated theorem names, or `all`
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Inclusive order range `LO..HI`
        #[arg(long, value_parser = parse_range)]
        n: (usize, usize),
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        alpha_grid: Option<Vec<f64>>,
        #[arg(long, value_delimiter = ',')]
        a_grid: Option<Vec<f64>>,
        #[arg(long)]
        report: PathBuf,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Record wall-clock timings in the report
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct IndexArg {
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
}

#[derive(Debug, Args)]
#[group(required = false, multiple = false)]
struct OptionalIndexArg {
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    #[arg(long)]
    a: Option<f64>,
}

#[derive(Debug, Args)]
struct Selector {
    #[arg(long)]
    theorem: Theorem,
    #[arg(long)]
    n: usize,
    #[arg(long, conflicts_with_all = ["k", "b"])]
    n1: Option<usize>,
    #[arg(long, conflicts_with = "b")]
    k: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
}

fn to_index(alpha: Option<f64>, a: Option<f64>) -> Result<Option<Index>, Error> {
    match (alpha, a) {
        (Some(x), None) => Index::r0(x).map(Some),
        (None, Some(a)) => Index::sei(a).map(Some),
        _ => Ok(None),
    }
}

impl IndexArg {
    fn resolve(&self) -> Result<Index, Error> {
        Ok(to_index(self.alpha, self.a)?.expect("clap enforces one of --alpha/--a"))
    }
}

impl Selector {
    /// The family parameter, checked against the theorem's family.
    fn resolve(&self) -> Result<Option<usize>, Error> {
        let given = [
            (FamilyKind::Pendent, self.n1),
            (FamilyKind::Segment, self.k),
            (FamilyKind::Branching, self.b),
        ]
        .into_iter()
        .find_map(|(kind, v)| v.map(|v| (kind, v)));
        match (self.theorem.family_kind(), given) {
            (None, None) => Ok(None),
            (None, Some((kind, _))) => Err(Error::Constraint(format!(
                "{} takes no family parameter, got --{}",
                self.theorem.cli_name(),
                kind.param_name()
            ))),
            (Some(kind), None) => Err(Error::Constraint(format!(
                "{} needs --{}",
                self.theorem.cli_name(),
                kind.param_name()
            ))),
            (Some(kind), Some((got, v))) if kind == got => Ok(Some(v)),
            (Some(kind), Some((got, _))) => Err(Error::Constraint(format!(
                "{} needs --{}, got --{}",
                self.theorem.cli_name(),
                kind.param_name(),
                got.param_name()
            ))),
        }
    }
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected LO..HI, got {s:?}"))?;
    let lo: usize = lo.trim().parse().map_err(|e| format!("bad lower end: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("bad upper end: {e}"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn parse_theorems(s: &str) -> Result<Vec<Theorem>, Error> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(Theorem::ALL.to_vec());
    }
    s.split(',')
        .map(|name| {
            name.trim()
                .parse()
                .map_err(|_| Error::Constraint(format!("unknown theorem {name:?}")))
        })
        .collect()
}

/// Failure of a subcommand after argument parsing.
#[derive(Debug)]
enum Failure {
    Invalid(Error),
    Io(PathBuf, io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e)
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::Io(path.to_path_buf(), e))?;
        return Ok(text);
    }
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_tree(path: &Path) -> Result<Tree, Failure> {
    Ok(parse_tree(&read_input(path)?)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes")
}

/// Parses `argv` (including the program name), runs the command and writes
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let result = execute(&cli, out);
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Invalid(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
        Err(Failure::Io(path, e)) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            EXIT_INVALID
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .and_then(|_| {
            if text.ends_with('\n') {
                Ok(())
            } else {
                out.write_all(b"\n")
            }
        })
        .map_err(|e| Failure::Io(PathBuf::from("<stdout>"), e))
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Index { input, index } => {
            let index = index.resolve()?;
            let tree = read_tree(input)?;
            let value = index.of_tree(&tree);
            if json {
                emit(
                    out,
                    &to_json(&json!({
                        "n": tree.n(),
                        "index": index.kind(),
                        "index_param": index.param(),
                        "value": value,
                    })),
                )
            } else {
                emit(out, &value.to_string())
            }
        }
        Command::Bound { selector, index } => {
            let index = index.resolve()?;
            let param = selector.resolve()?;
            let bound = selector.theorem.bound(selector.n, param, &index)?;
            if json {
                emit(
                    out,
                    &to_json(&json!({
                        "theorem": selector.theorem,
                        "n": selector.n,
                        "param": param,
                        "index": index.kind(),
                        "index_param": index.param(),
                        "direction": bound.direction,
                        "bound": bound.value,
                        "equality_degseq": bound.equality_degseq,
                    })),
                )
            } else {
                emit(
                    out,
                    &format!("{}\n{} at {}", bound.value, bound.direction, bound.equality_degseq),
                )
            }
        }
        Command::Construct { selector, out: path } => {
            let param = selector.resolve()?;
            let tree = construct_extremal(selector.theorem, selector.n, param)?;
            let text = if json {
                to_json(&json!({
                    "theorem": selector.theorem,
                    "n": selector.n,
                    "param": param,
                    "degrees": tree.degree_sequence(),
                    "code": canonical_code(&tree),
                    "edges": tree.to_edge_list(),
                }))
            } else {
                tree.to_edge_list()
            };
            match path {
                Some(p) => write_file(p, &format!("{text}\n")),
                None => emit(out, &text),
            }
        }
        Command::Enumerate {
            n,
            family,
            param,
            out: path,
            count,
            census,
        } => {
            if *census {
                let c = family_census(*n)?;
                let text = if json {
                    to_json(&c)
                } else {
                    let mut s = format!("n {}\ntotal {}\n", c.n, c.total);
                    for kind in [FamilyKind::Pendent, FamilyKind::Segment, FamilyKind::Branching] {
                        for (p, k) in c.marginal(kind) {
                            s.push_str(&format!("{} {} {}\n", kind, p, k));
                        }
                    }
                    s
                };
                return emit(out, &text);
            }
            let constraint = match (family, param) {
                (Some(kind), Some(p)) => Some(FamilyConstraint::new(*kind, *n, *p)?),
                _ => None,
            };
            let trees: Vec<Tree> = free_trees(*n)?
                .filter(|t| constraint.is_none_or(|c| c.contains(&t.degree_sequence())))
                .collect();
            if *count {
                let text = if json {
                    to_json(&json!({ "n": n, "count": trees.len() }))
                } else {
                    trees.len().to_string()
                };
                return emit(out, &text);
            }
            let text = if json {
                let items: Vec<_> = trees
                    .iter()
                    .map(|t| {
                        json!({
                            "code": canonical_code(t),
                            "degrees": t.degree_sequence(),
                            "edges": t.to_edge_list(),
                        })
                    })
                    .collect();
                to_json(&items)
            } else {
                trees
                    .iter()
                    .map(|t| format!("{}\n", t.to_edge_list()))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            match path {
                Some(p) => write_file(p, &text),
                None => emit(out, &text),
            }
        }
        Command::Transform { lemma, input, index } => {
            let tree = read_tree(input)?;
            let index = to_index(index.alpha, index.a)?;
            let record = lemma.apply(&tree)?;
            let deltas = index.map(|i| (i, predicted_delta(&record, &i), observed_delta(&record, &i)));
            if json {
                let mut value = serde_json::to_value(&record).expect("move record serializes");
                if let Some((i, p, o)) = deltas {
                    value["index"] = json!(i.kind());
                    value["index_param"] = json!(i.param());
                    value["predicted_delta"] = json!(p);
                    value["observed_delta"] = json!(o);
                    value["claimed_sign"] = json!(lemma.claimed_sign(&i));
                }
                emit(out, &to_json(&value))
            } else {
                let mut s = format!("# {lemma}\n");
                if record.normalized {
                    s.push_str("# input replaced by its caterpillar realization\n");
                }
                for (u, v) in &record.removed_edges {
                    s.push_str(&format!("# - {u} {v}\n"));
                }
                for (u, v) in &record.added_edges {
                    s.push_str(&format!("# + {u} {v}\n"));
                }
                if let Some((i, p, o)) = deltas {
                    s.push_str(&format!("# {i} predicted delta {p}\n# {i} observed delta {o}\n"));
                }
                s.push_str(&record.after.to_edge_list());
                emit(out, &s)
            }
        }
        Command::Squeeze { input } => {
            let tree = read_tree(input)?;
            let s = squeeze(&tree)?;
            let text = if json {
                to_json(&json!({
                    "n": s.n(),
                    "degrees": s.degree_sequence(),
                    "edges": s.to_edge_list(),
                }))
            } else {
                s.to_edge_list()
            };
            emit(out, &text)
        }
        Command::Verify {
            theorems,
            n,
            alpha_grid,
            a_grid,
            report,
            csv,
            timings,
        } => {
            let config = VerifyConfig {
                theorems: parse_theorems(theorems)?,
                n_lo: n.0,
                n_hi: n.1,
                alpha_grid: alpha_grid.clone().unwrap_or_else(default_alpha_grid),
                a_grid: a_grid.clone().unwrap_or_else(default_a_grid),
                include_timings: *timings,
                ..VerifyConfig::default()
            };
            let doc = full_report(&config)?;
            write_file(report, &format!("{}\n", doc.to_json()))?;
            if let Some(path) = csv {
                write_file(path, &cells_to_csv(&doc.cells)?)?;
            }
            let s = &doc.summary;
            if json {
                emit(out, &to_json(s))
            } else {
                emit(
                    out,
                    &format!(
                        "{} cells: {} confirmed, {} refuted\nmonotonicity: {} asserted rows, {} failing\nbalanced counts: printed formula fails on {} cells",
                        s.cells,
                        s.confirmed,
                        s.refuted,
                        s.asserted_monotonicity_rows,
                        s.asserted_monotonicity_failures,
                        s.balanced_printed_formula_failures
                    ),
                )
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("xtrees").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bound_example() {
        let (code, out, _) = run_args(&["bound", "--theorem", "bt-small", "--n", "8", "--b", "1", "--a", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out, "62\nmin at (3,2,2,2,2,1,1,1)\n");
    }

    #[test]
    fn negative_alpha() {
        let (code, out, _) = run_args(&["bound", "--theorem", "star", "--n", "5", "--alpha", "-1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("4.25"));
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&[]).0, 1);
        assert_eq!(run_args(&["bound", "--theorem", "star", "--n", "5"]).0, 1);
        assert_eq!(
            run_args(&["bound", "--theorem", "star", "--n", "5", "--alpha", "2", "--a", "2"]).0,
            1
        );
        assert_eq!(run_args(&["verify", "--n", "9..6", "--report", "x"]).0, 1);
        assert_eq!(run_args(&["--help"]).0, 0);
    }

    #[test]
    fn validation_errors() {
        assert_eq!(
            run_args(&[
                "bound",
                "--theorem",
                "pt-spider",
                "--n",
                "8",
                "--n1",
                "9",
                "--alpha",
                "2"
            ])
            .0,
            2
        );
        assert_eq!(
            run_args(&[
                "bound",
                "--theorem",
                "pt-spider",
                "--n",
                "8",
                "--k",
                "3",
                "--alpha",
                "2"
            ])
            .0,
            2
        );
        assert_eq!(
            run_args(&["bound", "--theorem", "star", "--n", "8", "--alpha", "1"]).0,
            2
        );
        assert_eq!(
            run_args(&["bound", "--theorem", "st-star", "--n", "8", "--k", "3", "--a", "0.5"]).0,
            2
        );
        assert_eq!(
            run_args(&["index", "--input", "/nonexistent/tree", "--alpha", "2"]).0,
            2
        );
    }

    #[test]
    fn range_syntax() {
        assert_eq!(parse_range("6..14"), Ok((6, 14)));
        assert_eq!(parse_range("7..7"), Ok((7, 7)));
        assert!(parse_range("6-14").is_err());
    }

    #[test]
    fn theorem_lists() {
        assert_eq!(parse_theorems("all").unwrap().len(), Theorem::ALL.len());
        assert_eq!(
            parse_theorems("pt-spider,star").unwrap(),
            vec![Theorem::PtSpider, Theorem::StarGlobal]
        );
        assert!(parse_theorems("pt-spider,nope").is_err());
    }
}
