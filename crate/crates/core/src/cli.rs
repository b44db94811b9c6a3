//! Command-line front end. Exit codes: 0 success or positive answer,
//! 1 negative answer (invalid input object, incompatible pair, failed
//! check), 2 usage or I/O error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::compat::{incompatibility_witness, is_compatible_oracle};
use crate::error::FormatError;
use crate::graph::{BipartiteGraph, Edge, Vertex};
use crate::io;
use crate::lattice::{points_pg, points_pg_minus, points_pg_pm, Point};
use crate::search::{
    enumerate_triangulations, enumerate_trianguloids, EnumerationReport, LimitPolicy, Method,
    SearchOptions,
};
use crate::tiling::{render_svg, Layers, Style};
use crate::triangulation::{flip, phi, reconstruct, validate, CollectionKind};
use crate::trianguloid::{
    check_axioms, decode_coloring, encode_coloring, from_triangulation, to_triangulation,
    Trianguloid,
};

#[derive(Parser, Debug)]
#[command(
    name = "trianguloid",
    version,
    about = "Triangulations of root polytopes and trianguloids"
)]
struct Cli {
    /// Output format for structured results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Polytope {
    Pg,
    Pgminus,
    Pgpm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Trees,
    Rsm,
    Lsm,
    Pm,
}

impl From<Kind> for CollectionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Trees => CollectionKind::Trees,
            Kind::Rsm => CollectionKind::Rsm,
            Kind::Lsm => CollectionKind::Lsm,
            Kind::Pm => CollectionKind::Pm,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ObjectKind {
    Triangulation,
    Trianguloid,
    Coloring,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SearchMethod {
    Trees,
    Axioms,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CompatMethod {
    Cycle,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Layer {
    Tiling,
    Pseudolines,
    Trianguloid,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the lattice points of a polytope, one per line.
    LatticePoints {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        polytope: Polytope,
    },
    /// Test two forests for compatibility.
    Compat {
        #[arg(long)]
        graph: PathBuf,
        /// Forest file; pass exactly twice.
        #[arg(long, num_args = 1, required = true)]
        forest: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = CompatMethod::Cycle)]
        method: CompatMethod,
    },
    /// Validate a triangulation file.
    Validate {
        #[arg(long)]
        triangulation: PathBuf,
    },
    /// Print the map b -> RD⁻(T_b) of a triangulation.
    Phi {
        #[arg(long)]
        triangulation: PathBuf,
    },
    /// Rebuild a triangulation from a collection of forests.
    Reconstruct {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        collection: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert between triangulations, trianguloids and edge colorings.
    Convert {
        #[arg(long, value_enum)]
        from: ObjectKind,
        #[arg(long, value_enum)]
        to: ObjectKind,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report which trianguloid axioms a map satisfies.
    Check {
        #[arg(long)]
        trianguloid: PathBuf,
    },
    /// Enumerate all triangulations and/or trianguloids of a graph.
    Enumerate {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = SearchMethod::Both)]
        method: SearchMethod,
        #[arg(long)]
        limit: Option<usize>,
        /// Keep the first results instead of failing when the limit is hit.
        #[arg(long, requires = "limit")]
        truncate: bool,
        /// Directory to write each result to as a canonical file.
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..))]
        jobs: u16,
    },
    /// Draw a trianguloid with three left vertices as SVG.
    Render {
        #[arg(long)]
        trianguloid: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, value_delimiter = ',')]
        layers: Option<Vec<Layer>>,
    },
    /// Flip a replaceable edge of the tree at a point.
    Flip {
        #[arg(long)]
        triangulation: PathBuf,
        /// Lattice point such as 1,0,2.
        #[arg(long)]
        point: String,
        /// Edge as i,j (1-based).
        #[arg(long)]
        edge: String,
    },
}

/// A failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn negative(message: impl Into<String>) -> Failure {
    Failure {
        code: 1,
        message: message.into(),
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        // A closed pipe downstream is not an error of ours.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: 0,
                message: String::new(),
            };
        }
        usage(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, target: Option<&Path>, text: &str) -> Result<(), Failure> {
    match target {
        Some(path) => write_file(path, text),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn json_line(out: &mut dyn Write, value: &serde_json::Value) -> Result<(), Failure> {
    out.write_all(io::to_canonical_string(value).as_bytes())?;
    Ok(())
}

fn parse_ints(text: &str, what: &str) -> Result<Vec<u32>, Failure> {
    text.split(',')
        .map(|s| s.trim().parse::<u32>())
        .collect::<Result<_, _>>()
        .map_err(|_| usage(format!("cannot parse {what} {text:?}")))
}

fn cycle_string(cycle: &[Vertex]) -> String {
    cycle
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let Format::Json = cli.format;
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "error: {}", f.message);
            }
            f.code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::LatticePoints { graph, polytope } => {
            let g = io::read_graph(&read(&graph)?)?;
            let set = match polytope {
                Polytope::Pg => points_pg(&g),
                Polytope::Pgminus => points_pg_minus(&g),
                Polytope::Pgpm => points_pg_pm(&g),
            };
            for p in set.iter() {
                writeln!(out, "{}", io::point_to_string(p))?;
            }
            Ok(0)
        }
        Command::Compat {
            graph,
            forest,
            method,
        } => compat_cmd(&graph, &forest, method, out),
        Command::Validate { triangulation } => {
            let (g, trees) = io::read_triangulation(&read(&triangulation)?)?;
            match validate(&g, trees) {
                Ok(tau) => {
                    json_line(out, &serde_json::json!({"valid": true, "trees": tau.len()}))?;
                    Ok(0)
                }
                Err(e) => {
                    json_line(
                        out,
                        &serde_json::json!({"valid": false, "error": e.to_string()}),
                    )?;
                    Ok(1)
                }
            }
        }
        Command::Phi { triangulation } => {
            let (g, trees) = io::read_triangulation(&read(&triangulation)?)?;
            let tau = validate(&g, trees).map_err(|e| negative(e.to_string()))?;
            for (b, c) in phi(&tau).entries {
                writeln!(
                    out,
                    "{} -> {}",
                    io::point_to_string(&b),
                    io::point_to_string(&c)
                )?;
            }
            Ok(0)
        }
        Command::Reconstruct {
            graph,
            collection,
            kind,
            out: target,
        } => {
            let g = io::read_graph(&read(&graph)?)?;
            let members = io::read_forests(&g, &read(&collection)?)?;
            let tau =
                reconstruct(&g, &members, kind.into()).map_err(|e| negative(e.to_string()))?;
            emit(out, target.as_deref(), &io::write_triangulation(&tau))?;
            Ok(0)
        }
        Command::Convert {
            from,
            to,
            input,
            out: target,
        } => convert_cmd(from, to, &input, target.as_deref(), out),
        Command::Check { trianguloid } => {
            let t = io::read_trianguloid(&read(&trianguloid)?)?;
            let report = check_axioms(&t);
            let value =
                serde_json::to_value(io::axiom_report_to_json(&report)).expect("plain data");
            json_line(out, &value)?;
            Ok(if report.is_trianguloid { 0 } else { 1 })
        }
        Command::Enumerate {
            graph,
            method,
            limit,
            truncate,
            emit: dir,
            jobs,
        } => {
            let g = io::read_graph(&read(&graph)?)?;
            let opts = SearchOptions {
                limit,
                policy: if truncate {
                    LimitPolicy::Truncate
                } else {
                    LimitPolicy::Error
                },
                jobs: jobs as usize,
            };
            enumerate_cmd(&g, method, &opts, dir.as_deref(), out, err)
        }
        Command::Render {
            trianguloid,
            out: target,
            layers,
        } => {
            let t = io::read_trianguloid(&read(&trianguloid)?)?;
            let mut style = Style::default();
            if let Some(list) = layers {
                style.layers = Layers {
                    tiling: list.contains(&Layer::Tiling),
                    pseudolines: list.contains(&Layer::Pseudolines),
                    trianguloid: list.contains(&Layer::Trianguloid),
                };
            }
            let svg = render_svg(&t, &style).map_err(|e| negative(e.to_string()))?;
            emit(out, target.as_deref(), &svg)?;
            Ok(0)
        }
        Command::Flip {
            triangulation,
            point,
            edge,
        } => {
            let (g, trees) = io::read_triangulation(&read(&triangulation)?)?;
            let tau = validate(&g, trees).map_err(|e| negative(e.to_string()))?;
            let b = parse_ints(&point, "point")?;
            let pair = parse_ints(&edge, "edge")?;
            let [i, j] = pair[..] else {
                return Err(usage(format!("edge must be i,j (got {edge:?})")));
            };
            if i == 0 || j == 0 || i as usize > g.m() || j as usize > g.n() {
                return Err(usage(format!("edge {edge:?} out of range")));
            }
            let e = Edge::new(i as usize - 1, j as usize - 1);
            let b2 = flip(&tau, &b, e).map_err(|e| negative(e.to_string()))?;
            writeln!(out, "{}", io::point_to_string(&b2))?;
            Ok(0)
        }
    }
}

fn compat_cmd(
    graph: &Path,
    forests: &[PathBuf],
    method: CompatMethod,
    out: &mut dyn Write,
) -> Outcome {
    let [a, b] = forests else {
        return Err(usage(format!(
            "--forest must be given exactly twice (got {})",
            forests.len()
        )));
    };
    let g = io::read_graph(&read(graph)?)?;
    let f = io::read_subgraph(&g, &read(a)?)?;
    let f2 = io::read_subgraph(&g, &read(b)?)?;
    let witness = incompatibility_witness(&f, &f2).map_err(|e| usage(e.to_string()))?;
    if method == CompatMethod::Oracle {
        let ok = is_compatible_oracle(&f, &f2).map_err(|e| usage(e.to_string()))?;
        writeln!(out, "{}", if ok { "compatible" } else { "incompatible" })?;
        return Ok(if ok { 0 } else { 1 });
    }
    match witness {
        None => {
            writeln!(out, "compatible")?;
            Ok(0)
        }
        Some(cycle) => {
            writeln!(out, "incompatible")?;
            writeln!(out, "{}", cycle_string(&cycle))?;
            Ok(1)
        }
    }
}

fn load_as_trianguloid(from: ObjectKind, text: &str) -> Result<Trianguloid, Failure> {
    match from {
        ObjectKind::Triangulation => {
            let (g, trees) = io::read_triangulation(text)?;
            let tau = validate(&g, trees).map_err(|e| negative(e.to_string()))?;
            Ok(from_triangulation(&tau))
        }
        ObjectKind::Trianguloid => Ok(io::read_trianguloid(text)?),
        ObjectKind::Coloring => {
            let c = io::read_coloring(text)?;
            decode_coloring(&c.graph, &c).map_err(|e| negative(e.to_string()))
        }
    }
}

fn convert_cmd(
    from: ObjectKind,
    to: ObjectKind,
    input: &Path,
    target: Option<&Path>,
    out: &mut dyn Write,
) -> Outcome {
    let t = load_as_trianguloid(from, &read(input)?)?;
    let text = match to {
        ObjectKind::Triangulation => {
            let tau = to_triangulation(&t).map_err(|e| negative(e.to_string()))?;
            io::write_triangulation(&tau)
        }
        ObjectKind::Trianguloid => io::write_trianguloid(&t),
        ObjectKind::Coloring => {
            let c = encode_coloring(&t).map_err(|e| negative(e.to_string()))?;
            io::write_coloring(&c)
        }
    };
    emit(out, target, &text)?;
    Ok(0)
}

fn emit_all(dir: &Path, prefix: &str, texts: impl Iterator<Item = String>) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    for (k, text) in texts.enumerate() {
        write_file(&dir.join(format!("{prefix}-{:05}.json", k + 1)), &text)?;
    }
    Ok(())
}

fn enumerate_cmd(
    g: &BipartiteGraph,
    method: SearchMethod,
    opts: &SearchOptions,
    dir: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Outcome {
    let failed = |e: crate::error::SearchError| negative(e.to_string());
    let mut reports = serde_json::Map::new();
    let mut image: Option<Vec<Vec<(Point, usize, u32)>>> = None;
    let mut direct: Option<Vec<Vec<(Point, usize, u32)>>> = None;
    if matches!(method, SearchMethod::Trees | SearchMethod::Both) {
        let outcome = enumerate_triangulations(g, opts).map_err(failed)?;
        if let Some(d) = dir {
            emit_all(
                d,
                "triangulation",
                outcome.items.iter().map(io::write_triangulation),
            )?;
        }
        let mut keys: Vec<_> = outcome
            .items
            .iter()
            .map(|t| from_triangulation(t).entries())
            .collect();
        keys.sort();
        image = Some(keys);
        let report = EnumerationReport::new(g, Method::TreeSearch, &outcome);
        reports.insert(
            "trees".into(),
            serde_json::to_value(report).expect("plain data"),
        );
    }
    if matches!(method, SearchMethod::Axioms | SearchMethod::Both) {
        let outcome = enumerate_trianguloids(g, opts).map_err(failed)?;
        if let Some(d) = dir {
            emit_all(
                d,
                "trianguloid",
                outcome.items.iter().map(io::write_trianguloid),
            )?;
        }
        let mut keys: Vec<_> = outcome.items.iter().map(|t| t.entries()).collect();
        keys.sort();
        direct = Some(keys);
        let report = EnumerationReport::new(g, Method::AxiomSearch, &outcome);
        reports.insert(
            "axioms".into(),
            serde_json::to_value(report).expect("plain data"),
        );
    }
    let mut code = 0;
    if let (Some(a), Some(b)) = (&image, &direct) {
        let counts_agree = a.len() == b.len();
        let truncated = reports
            .values()
            .any(|r| r["truncated"] == serde_json::Value::Bool(true));
        let sets_agree = a == b;
        reports.insert("counts_agree".into(), counts_agree.into());
        reports.insert("sets_agree".into(), sets_agree.into());
        if !truncated && !sets_agree {
            let _ = writeln!(err, "tree search and axiom search disagree");
            code = 1;
        }
    }
    json_line(out, &serde_json::Value::Object(reports))?;
    Ok(code)
}
