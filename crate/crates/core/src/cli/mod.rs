//! The `frieze` command line.
//!
//! Exit status: 0 on success, 2 when the input does not parse, 3 when it
//! parses but the operation is not defined for it (including an invalid
//! frieze in `generate`, whose rows are printed up to the failure).

mod render;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use crate::annulus::{annulus_from_quiddity, star_triangulation, DiskArc, PuncturedDiskTriangulation};
use crate::classify::classify;
use crate::cluster::{cluster_frieze, det_symbolic, symbolic_matrix};
use crate::grid::{generate, Classification};
use crate::growth::{growth_rate, growth_sequence};
use crate::polygon::{det_int, frieze_matrix, matchings, triangulation_from_quiddity, Diagonal, PolygonTriangulation};
use crate::quiddity::QuidditySequence;

pub use render::{big, render_grid, LIST_MODE_WIDTH};

pub const SCHEMA_VERSION: &str = "1";
pub const DEFAULT_MAX_ROWS: usize = 64;
pub const MAX_ROWS_VAR: &str = "FRIEZE_MAX_ROWS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "frieze", version, about = "Conway-Coxeter frieze patterns")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Args)]
struct QuiddityArg {
    /// Comma-separated positive integers, or `-` to read them from stdin.
    #[arg(long, allow_hyphen_values = true)]
    quiddity: String,
}

#[derive(Debug, Args)]
struct PolygonArgs {
    /// Number of polygon vertices.
    #[arg(long)]
    n: usize,
    /// Diagonals as `1-3,1-4,1-5`.
    #[arg(long, default_value = "")]
    diagonals: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate rows by the diamond rule.
    Generate {
        #[command(flatten)]
        q: QuiddityArg,
        /// Number of rows counting the quiddity row; defaults to the cap.
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Closed (with order), infinite, or invalid.
    Classify {
        #[command(flatten)]
        q: QuiddityArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Quiddity sequence of a polygon triangulation.
    FromPolygon {
        #[command(flatten)]
        polygon: PolygonArgs,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Triangulation realising a closed quiddity sequence.
    ToPolygon {
        #[command(flatten)]
        q: QuiddityArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Matchings between the vertices strictly between i and j and the triangles.
    Matchings {
        #[command(flatten)]
        polygon: PolygonArgs,
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Determinant of the frieze matrix.
    Det {
        #[command(flatten)]
        polygon: PolygonArgs,
        /// Use cluster variables instead of integers.
        #[arg(long)]
        symbolic: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Growth coefficients s_0..s_K.
    Growth {
        #[command(flatten)]
        q: QuiddityArg,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Annulus (or punctured disk) triangulation of an infinite frieze.
    Annulus {
        #[command(flatten)]
        q: QuiddityArg,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Quiddity sequence of a punctured disk triangulation.
    Disk {
        #[arg(long)]
        n: usize,
        /// Arcs as `1-p,3-p,1-3`; `i-j` cuts off i+1..j-1. Defaults to the star.
        #[arg(long)]
        arcs: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

/// Failure of a command, with the exit status it maps to.
#[derive(Debug)]
enum Failure {
    Parse(String),
    Domain(String),
}

impl Failure {
    fn domain(e: impl std::fmt::Display) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// What a successful (or partially successful) command prints.
struct Output {
    text: String,
    result: Value,
    extra: Map<String, Value>,
    status: i32,
    message: Option<String>,
}

impl Output {
    fn new(text: String, result: Value) -> Self {
        Self {
            text,
            result,
            extra: Map::new(),
            status: EXIT_OK,
            message: None,
        }
    }

    fn with(mut self, key: &str, value: Value) -> Self {
        self.extra.insert(key.to_string(), value);
        self
    }
}

/// Run the command line on `args` (including the program name) and return
/// the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    let max_rows = match std::env::var(MAX_ROWS_VAR) {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => n,
            _ => {
                let _ = writeln!(stderr, "error: {MAX_ROWS_VAR} must be a positive integer, got {v:?}");
                return EXIT_PARSE;
            }
        },
        Err(_) => DEFAULT_MAX_ROWS,
    };
    let format = cli.command.format();
    let name = cli.command.name();
    match execute(cli.command, stdin, max_rows) {
        Ok(out) => {
            let printed = match format {
                Format::Text => out.text.clone(),
                Format::Json => envelope(name, out.result, out.extra),
            };
            let _ = stdout.write_all(printed.as_bytes());
            if !printed.ends_with('\n') {
                let _ = stdout.write_all(b"\n");
            }
            if let Some(message) = out.message {
                let _ = writeln!(stderr, "{message}");
            }
            out.status
        }
        Err(Failure::Parse(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_PARSE
        }
        Err(Failure::Domain(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_DOMAIN
        }
    }
}

/// `{"command", "result", "schema_version", ...}` with sorted keys.
pub fn envelope(command: &str, result: Value, extra: Map<String, Value>) -> String {
    let mut map = extra;
    map.insert("command".into(), json!(command));
    map.insert("result".into(), result);
    map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    let mut text = serde_json::to_string_pretty(&Value::Object(map)).expect("values serialise");
    text.push('\n');
    text
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Generate { .. } => "generate",
            Command::Classify { .. } => "classify",
            Command::FromPolygon { .. } => "from-polygon",
            Command::ToPolygon { .. } => "to-polygon",
            Command::Matchings { .. } => "matchings",
            Command::Det { .. } => "det",
            Command::Growth { .. } => "growth",
            Command::Annulus { .. } => "annulus",
            Command::Disk { .. } => "disk",
        }
    }

    fn format(&self) -> Format {
        match self {
            Command::Generate { format, .. }
            | Command::Classify { format, .. }
            | Command::FromPolygon { format, .. }
            | Command::ToPolygon { format, .. }
            | Command::Matchings { format, .. }
            | Command::Det { format, .. }
            | Command::Growth { format, .. }
            | Command::Annulus { format, .. }
            | Command::Disk { format, .. } => *format,
        }
    }
}

fn read_quiddity(arg: &QuiddityArg, stdin: &mut dyn Read) -> Result<QuidditySequence, Failure> {
    let text = if arg.quiddity.trim() == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Parse(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        arg.quiddity.clone()
    };
    text.trim()
        .parse()
        .map_err(|e: crate::quiddity::QuiddityError| Failure::Parse(e.to_string()))
}

fn parse_pair(part: &str) -> Result<(&str, &str), Failure> {
    part.split_once('-')
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| Failure::Parse(format!("expected `i-j`, got {part:?}")))
}

fn parse_vertex(s: &str) -> Result<usize, Failure> {
    s.parse()
        .map_err(|_| Failure::Parse(format!("expected a vertex number, got {s:?}")))
}

fn parse_diagonals(text: &str) -> Result<Vec<Diagonal>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|part| {
            let (a, b) = parse_pair(part)?;
            Ok((parse_vertex(a)?, parse_vertex(b)?))
        })
        .collect()
}

fn parse_disk_arcs(text: &str) -> Result<Vec<DiskArc>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|part| {
            let (a, b) = parse_pair(part)?;
            Ok(match (a, b) {
                ("p", v) | (v, "p") => DiskArc::Puncture(parse_vertex(v)?),
                (i, j) => DiskArc::Boundary(parse_vertex(i)?, parse_vertex(j)?),
            })
        })
        .collect()
}

fn polygon(args: &PolygonArgs) -> Result<PolygonTriangulation, Failure> {
    let diagonals = parse_diagonals(&args.diagonals)?;
    PolygonTriangulation::new(args.n, diagonals).map_err(Failure::domain)
}

fn quiddity_json(q: &QuidditySequence) -> Value {
    Value::Array(q.entries().iter().map(big).collect())
}

fn classification_fields(out: Output, c: &Classification, q: &QuidditySequence) -> Output {
    let out = out
        .with("classification", json!(c.label()))
        .with("min_period", json!(q.minimal_period()));
    match c.order() {
        Some(order) => out.with("order", json!(order)),
        None => out,
    }
}

fn invalid_reason(c: &Classification) -> Option<String> {
    match c {
        Classification::Invalid(why) => Some(why.to_string()),
        _ => None,
    }
}

fn execute(command: Command, stdin: &mut dyn Read, max_rows: usize) -> Result<Output, Failure> {
    match command {
        Command::Generate { q, rows, .. } => {
            let q = read_quiddity(&q, stdin)?;
            let grid = generate(&q, rows.unwrap_or(max_rows).min(max_rows));
            let c = grid.classification().clone();
            let result = json!({
                "quiddity": quiddity_json(&q),
                "rows": grid.rows().iter().map(|r| r.iter().map(big).collect()).collect::<Vec<Vec<Value>>>(),
            });
            let mut out = classification_fields(Output::new(render_grid(&grid), result), &c, &q);
            if let Some(reason) = invalid_reason(&c) {
                out = out.with("reason", json!(reason));
                out.status = EXIT_DOMAIN;
                out.message = Some(format!("invalid frieze: {reason}"));
            }
            Ok(out)
        }
        Command::Classify { q, .. } => {
            let q = read_quiddity(&q, stdin)?;
            let c = classify(&q);
            let text = format!("{c}\n");
            let mut result = json!({ "classification": c.label(), "quiddity": quiddity_json(&q) });
            if let Some(reason) = invalid_reason(&c) {
                result["reason"] = json!(reason);
            }
            Ok(classification_fields(Output::new(text, result), &c, &q))
        }
        Command::FromPolygon { polygon: args, .. } => {
            let t = polygon(&args)?;
            let q = t.quiddity();
            let result = json!({ "n": t.n(), "quiddity": quiddity_json(&q) });
            Ok(classification_fields(Output::new(format!("{q}\n"), result), &classify(&q), &q))
        }
        Command::ToPolygon { q, .. } => {
            let q = read_quiddity(&q, stdin)?;
            let t = triangulation_from_quiddity(&q).map_err(Failure::domain)?;
            let listed: Vec<String> = t.diagonals().iter().map(|(a, b)| format!("{a}-{b}")).collect();
            let text = format!("n = {}\ndiagonals = {}\n", t.n(), listed.join(","));
            let result = serde_json::to_value(&t).expect("triangulations serialise");
            Ok(classification_fields(Output::new(text, result), &classify(&q), &q))
        }
        Command::Matchings { polygon: args, i, j, .. } => {
            let t = polygon(&args)?;
            let set = matchings(&t, i, j).map_err(Failure::domain)?;
            let mut text = format!("|M({i},{j})| = {}\n", set.len());
            for m in &set.matchings {
                let pairs: Vec<String> = set
                    .vertices
                    .iter()
                    .zip(m)
                    .map(|(v, &k)| {
                        let [a, b, c] = t.triangles()[k];
                        format!("{v}->{a}{b}{c}")
                    })
                    .collect();
                text.push_str(&pairs.join(" "));
                text.push('\n');
            }
            let result = json!({
                "count": set.len(),
                "i": i,
                "j": j,
                "matchings": set.matchings,
                "triangles": t.triangles(),
                "vertices": set.vertices,
            });
            Ok(Output::new(text, result))
        }
        Command::Det {
            polygon: args, symbolic, ..
        } => {
            let t = polygon(&args)?;
            if symbolic {
                let det = det_symbolic(&symbolic_matrix(&cluster_frieze(&t))).map_err(Failure::domain)?;
                let text = format!("{det}\n");
                Ok(Output::new(text, json!({ "det": det.to_string(), "n": t.n(), "symbolic": true })))
            } else {
                let det = det_int(&frieze_matrix(&t));
                Ok(Output::new(
                    format!("{det}\n"),
                    json!({ "det": big(&det), "n": t.n(), "symbolic": false }),
                ))
            }
        }
        Command::Growth { q, k, .. } => {
            let q = read_quiddity(&q, stdin)?;
            let g = growth_sequence(&q, k).map_err(Failure::domain)?;
            let listed: Vec<String> = g.s_values.iter().map(ToString::to_string).collect();
            let mut text = format!("s = [{}]\n", listed.join(", "));
            let mut result = json!({
                "n0": g.n0,
                "s_values": g.s_values.iter().map(big).collect::<Vec<_>>(),
            });
            if let Some(s) = g.s() {
                if let Ok(rate) = growth_rate(s) {
                    let decimal = rate.to_decimal(12);
                    text.push_str(&format!("rate = {decimal}\n"));
                    result["rate"] = json!(decimal);
                }
            }
            Ok(classification_fields(Output::new(text, result), &classify(&q), &q))
        }
        Command::Annulus { q, .. } => {
            let q = read_quiddity(&q, stdin)?;
            let (a, trace) = annulus_from_quiddity(&q).map_err(Failure::domain)?;
            let inner = a.inner_quiddity().ok();
            let arcs: Vec<String> = a.arcs().iter().map(|(x, y)| format!("{x}-{y}")).collect();
            let mut text = format!("outer = {}\ninner = {}\nspiral = {}\n", a.n_outer(), a.n_inner(), a.is_spiral());
            text.push_str(&format!("arcs = {}\n", arcs.join(",")));
            text.push_str(&format!("outer quiddity = {}\n", a.outer_quiddity()));
            if let Some(inner) = &inner {
                text.push_str(&format!("inner quiddity = {inner}\n"));
            }
            let result = json!({
                "annulus": serde_json::to_value(&a).expect("annuli serialise"),
                "cuts": trace.cuts,
                "inner_quiddity": inner.as_ref().map(quiddity_json),
                "outer_quiddity": quiddity_json(&a.outer_quiddity()),
                "reduced": trace.reduced.iter().map(big).collect::<Vec<_>>(),
                "rotation": trace.rotation,
            });
            Ok(classification_fields(Output::new(text, result), &classify(&q), &q))
        }
        Command::Disk { n, arcs, .. } => {
            let t = match arcs {
                None => star_triangulation(n),
                Some(text) => PuncturedDiskTriangulation::new(n, parse_disk_arcs(&text)?),
            }
            .map_err(Failure::domain)?;
            let q = t.quiddity();
            let result = json!({
                "disk": serde_json::to_value(&t).expect("disks serialise"),
                "quiddity": quiddity_json(&q),
            });
            Ok(classification_fields(Output::new(format!("{q}\n"), result), &classify(&q), &q))
        }
    }
}
