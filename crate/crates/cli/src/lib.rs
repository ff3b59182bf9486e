//! `projkit` command-line front end. [`run`] is the whole program; `main`
//! only wires it to the process streams.

mod output;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use projkit::coords::{
    goldman_to_bd, sweep, BoundaryData, BoundaryKind, GoldmanRecord, PantsGoldman, TorusGoldman,
};
use projkit::hilbert::{chord, hilbert_distance, triangle_area_experiment, AreaOptions, ConvexDomain, Vec2};
use projkit::invariants::{double_ratios_with_tol, triple_ratio_with_tol, DEFAULT_GENERIC_TOL};
use projkit::isometry::{
    bulge_flags, bulging_configuration, classify, goldman_lengths, shear_shift, ClassifyTol,
    IsometryClass, SL3Matrix,
};
use projkit::{Flag, ProjLine, ProjPoint};

pub use output::fmt17;
use output::Record;

#[derive(Parser, Debug)]
#[command(name = "projkit", version, about = "Flag invariants, Hilbert geometry and structure coordinates")]
struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Tolerance override: genericity for `invariants`, rank for `classify`.
    #[arg(long, global = true, env = "PROJKIT_TOL")]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Inline JSON, a file path, or `-` for stdin.
    #[arg(long)]
    input: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Triple ratio of 3 flags, or double ratios of 4 flags, and their logs.
    Invariants(InputArgs),
    /// Isometry class of a row-major 3x3 matrix of determinant 1.
    Classify {
        #[command(flatten)]
        input: InputArgs,
        /// Relative gap under which eigenvalues count as repeated.
        #[arg(long)]
        cluster_tol: Option<f64>,
        /// Rescale the matrix to determinant 1 first.
        #[arg(long)]
        normalize: bool,
    },
    /// Hilbert distance between two points of a convex domain.
    Distance(InputArgs),
    /// Truncated area of the inscribed triangle inside the tangent triangle.
    Area {
        #[arg(long, value_delimiter = ',', default_values_t = [0.5, 0.25, 0.1, 0.05, 0.01])]
        alpha: Vec<f64>,
        #[arg(long, default_value_t = 5.0)]
        truncation: f64,
        #[arg(long, default_value_t = 0.002)]
        cellsize: f64,
        #[arg(long, default_value_t = 256)]
        directions: usize,
        #[arg(long)]
        parallel: bool,
    },
    /// Goldman parameters to Bonahon-Dreyer coordinates.
    Convert(InputArgs),
    /// Coordinates along a path pinching one boundary to a cusp.
    Sweep {
        #[command(flatten)]
        input: InputArgs,
        /// 1-based boundary index (the torus only has boundary 1).
        #[arg(long, default_value_t = 1)]
        boundary: usize,
        #[arg(long, default_value_t = 10)]
        steps: usize,
    },
    /// Shears after a bulging deformation by `v`.
    Bulge {
        #[arg(long = "v", allow_hyphen_values = true)]
        v: f64,
        /// Shear pair `s1,s2` to shift directly.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["input", "vertex"])]
        shears: Option<Vec<f64>>,
        /// Four flags `E, F, G, L` in the adapted basis of the leaf.
        #[arg(long, conflicts_with = "vertex")]
        input: Option<String>,
        /// Standard configuration with right vertex `(1, y, x)`.
        #[arg(long, value_delimiter = ',', default_value = "1,1")]
        vertex: Vec<f64>,
    },
}

enum Failure {
    /// Exit 2: unparsable or schema-violating input, bad flags.
    Malformed(String),
    /// Exit 1: input rejected by the library.
    Domain(projkit::Error),
}

impl From<projkit::Error> for Failure {
    fn from(e: projkit::Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn malformed(msg: impl std::fmt::Display) -> Failure {
    Failure::Malformed(msg.to_string())
}

/// Runs the program on `args` (including the program name). Returns the exit
/// code: 0 on success, 1 on a domain error, 2 on malformed input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(&cli) {
        Ok(text) => {
            if out.write_all(text.as_bytes()).is_err() {
                return 1;
            }
            0
        }
        Err(Failure::Malformed(msg)) => {
            let _ = writeln!(err, "error: MalformedInput: {msg}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            1
        }
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    if let Some(t) = cli.tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(malformed(format!("tolerance must be positive, got {t}")));
        }
    }
    match &cli.command {
        Command::Invariants(a) => invariants(cli, &read_input(&a.input)?),
        Command::Classify { input, cluster_tol, normalize } => {
            classify_cmd(cli, &read_input(&input.input)?, *cluster_tol, *normalize)
        }
        Command::Distance(a) => distance(cli, &read_input(&a.input)?),
        Command::Area { alpha, truncation, cellsize, directions, parallel } => {
            let opts = AreaOptions { cellsize: *cellsize, directions: *directions, parallel: *parallel };
            area(cli, alpha, *truncation, &opts)
        }
        Command::Convert(a) => convert(cli, &read_input(&a.input)?),
        Command::Sweep { input, boundary, steps } => sweep_cmd(cli, &read_input(&input.input)?, *boundary, *steps),
        Command::Bulge { v, shears, input, vertex } => bulge(cli, *v, shears.as_deref(), input.as_deref(), vertex),
    }
}

fn read_input(source: &str) -> Result<String, Failure> {
    let trimmed = source.trim_start();
    if trimmed.starts_with('{') || trimmed.starts_with('[') {
        return Ok(source.to_string());
    }
    if source == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| malformed(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(source).map_err(|e| malformed(format!("{source}: {e}")))
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| malformed(format!("invalid input JSON: {e}")))
}

fn render(record: &Record, format: Format) -> String {
    match format {
        Format::Table => record.table(),
        Format::Json => output::json(&record.to_json()),
        Format::Csv => record.csv_header() + &record.csv_row(),
    }
}

fn render_rows(rows: &[Record], format: Format, comment: Option<&str>) -> String {
    match format {
        Format::Json => output::json(&Value::Array(rows.iter().map(Record::to_json).collect())),
        Format::Table | Format::Csv => {
            let mut s = String::new();
            if let Some(c) = comment {
                s.push_str(&format!("# {c}\n"));
            }
            if let Some(first) = rows.first() {
                s.push_str(&first.csv_header());
            }
            for r in rows {
                s.push_str(&r.csv_row());
            }
            s
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFlag {
    point: [f64; 3],
    line: [[f64; 3]; 2],
}

fn build_flag(raw: &RawFlag) -> projkit::Result<Flag> {
    Flag::new(ProjPoint::new(raw.point)?, ProjLine::new(raw.line[0], raw.line[1])?)
}

fn parse_flags(text: &str) -> Result<Vec<Flag>, Failure> {
    let raw: Vec<RawFlag> = parse(text)?;
    Ok(raw.iter().map(build_flag).collect::<projkit::Result<_>>()?)
}

fn invariants(cli: &Cli, text: &str) -> Outcome {
    let flags = parse_flags(text)?;
    let tol = cli.tol.unwrap_or(DEFAULT_GENERIC_TOL);
    let record = match flags.as_slice() {
        [e, f, g] => {
            let t = triple_ratio_with_tol(e, f, g, tol)?;
            Record::default().num("T", t.value).num("tau111", t.ln()?)
        }
        [e, f, g, l] => {
            let d = double_ratios_with_tol(e, f, g, l, tol)?;
            let ln = |x: f64| {
                if x > 0.0 {
                    Ok(x.ln())
                } else {
                    Err(projkit::Error::NonPositiveRatio { value: x })
                }
            };
            Record::default()
                .num("D1", d.d1)
                .num("D2", d.d2)
                .num("sigma1", ln(d.d1)?)
                .num("sigma2", ln(d.d2)?)
        }
        other => return Err(malformed(format!("expected 3 or 4 flags, got {}", other.len()))),
    };
    Ok(render(&record, cli.format.unwrap_or(Format::Table)))
}

fn classify_cmd(cli: &Cli, text: &str, cluster: Option<f64>, normalize: bool) -> Outcome {
    let entries: [f64; 9] = parse(text)?;
    let m = if normalize {
        SL3Matrix::normalized(nalgebra_matrix(&entries))?
    } else {
        SL3Matrix::from_row_slice(&entries)?
    };
    let mut tol = ClassifyTol::default();
    if let Some(r) = cli.tol {
        tol.rank = r;
    }
    if let Some(c) = cluster {
        if !(c > 0.0 && c.is_finite()) {
            return Err(malformed(format!("cluster tolerance must be positive, got {c}")));
        }
        tol.cluster = c;
    }
    let class = classify(&m, &tol);
    let mut record = Record::default().text("kind", class.kind_name());
    match class {
        IsometryClass::Hyperbolic { eigenvalues: [a, b, c] } => {
            let g = goldman_lengths(&class)?;
            record = record
                .num("lambda1", a)
                .num("lambda2", b)
                .num("lambda3", c)
                .num("l1", g.l1)
                .num("l2", g.l2)
                .num("hilbert_length", g.hilbert_length);
        }
        IsometryClass::QuasiHyperbolic { mu, nu, jordan_block } => {
            let placement = serde_json::to_value(jordan_block).expect("serializable");
            record = record
                .num("mu", mu)
                .num("nu", nu)
                .text("jordan_block", placement.as_str().unwrap_or_default());
        }
        IsometryClass::Parabolic | IsometryClass::Other => {}
    }
    if let Ok(b) = BoundaryData::from_class(&class) {
        record = record.num("goldman_lambda", b.lambda).num("goldman_tau", b.tau);
    }
    Ok(render(&record, cli.format.unwrap_or(Format::Table)))
}

fn nalgebra_matrix(e: &[f64; 9]) -> projkit::nalgebra::Matrix3<f64> {
    projkit::nalgebra::Matrix3::from_row_slice(e)
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
enum RawDomain {
    Polygon(Vec<[f64; 2]>),
    Conic([f64; 6]),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDistance {
    domain: RawDomain,
    x: [f64; 2],
    y: [f64; 2],
}

fn distance(cli: &Cli, text: &str) -> Outcome {
    let raw: RawDistance = parse(text)?;
    let dom = match &raw.domain {
        RawDomain::Polygon(v) => ConvexDomain::polygon(v)?,
        RawDomain::Conic(c) => ConvexDomain::conic(*c)?,
    };
    let (x, y) = (Vec2::new(raw.x[0], raw.x[1]), Vec2::new(raw.y[0], raw.y[1]));
    let d = hilbert_distance(&dom, &x, &y)?;
    let mut record = Record::default().num("distance", d);
    if x != y {
        let c = chord(&dom, &x, &y)?;
        record = record.num("p_x", c.p.x).num("p_y", c.p.y).num("q_x", c.q.x).num("q_y", c.q.y);
    }
    Ok(render(&record, cli.format.unwrap_or(Format::Table)))
}

fn area(cli: &Cli, alphas: &[f64], truncation: f64, opts: &AreaOptions) -> Outcome {
    let mut rows = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let a = triangle_area_experiment(alpha, truncation, opts)?;
        rows.push(
            Record::default()
                .num("alpha", alpha)
                .num("truncation", truncation)
                .num("cellsize", opts.cellsize)
                .num("area", a),
        );
    }
    Ok(render_rows(&rows, cli.format.unwrap_or(Format::Csv), None))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBoundary {
    lambda: f64,
    tau: f64,
    kind: BoundaryKind,
}

#[derive(Deserialize)]
#[serde(rename_all = "lowercase")]
enum Surface {
    Pants,
    Torus,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGoldman {
    surface: Surface,
    boundaries: Vec<RawBoundary>,
    s: f64,
    t: f64,
    u: Option<f64>,
    v: Option<f64>,
}

fn parse_goldman(text: &str) -> Result<GoldmanRecord, Failure> {
    let raw: RawGoldman = parse(text)?;
    let boundaries = raw
        .boundaries
        .iter()
        .map(|b| BoundaryData::new(b.lambda, b.tau, b.kind))
        .collect::<projkit::Result<Vec<_>>>()?;
    match raw.surface {
        Surface::Pants => {
            let b: [BoundaryData; 3] = boundaries
                .try_into()
                .map_err(|v: Vec<_>| malformed(format!("pants needs 3 boundaries, got {}", v.len())))?;
            if raw.u.is_some() || raw.v.is_some() {
                return Err(malformed("gluing parameters u, v only apply to the torus"));
            }
            Ok(GoldmanRecord::Pants(PantsGoldman::new(b, raw.s, raw.t)?))
        }
        Surface::Torus => {
            let [b, c]: [BoundaryData; 2] = boundaries.try_into().map_err(|v: Vec<_>| {
                malformed(format!("torus needs 2 boundaries (B, then C), got {}", v.len()))
            })?;
            let (u, v) = (raw.u.unwrap_or(0.0), raw.v.unwrap_or(0.0));
            Ok(GoldmanRecord::Torus(TorusGoldman::new(b, c, raw.s, raw.t, u, v)?))
        }
    }
}

fn convert(cli: &Cli, text: &str) -> Outcome {
    let g = parse_goldman(text)?;
    let bd = goldman_to_bd(&g)?;
    match cli.format.unwrap_or(Format::Json) {
        Format::Json => {
            let mut v = serde_json::to_value(bd).expect("serializable");
            if let Some(obj) = v.as_object_mut() {
                obj.insert(
                    "mu".into(),
                    json!(g_boundaries(&g)
                        .iter()
                        .map(|b| projkit::coords::middle_eigenvalue(b))
                        .collect::<projkit::Result<Vec<_>>>()?),
                );
            }
            Ok(output::json(&v))
        }
        f => {
            let mut record = Record::default();
            for (name, value) in bd.named_values() {
                record = record.num(&name, value);
            }
            Ok(render(&record, f))
        }
    }
}

fn g_boundaries(g: &GoldmanRecord) -> Vec<BoundaryData> {
    match g {
        GoldmanRecord::Pants(p) => p.boundaries.to_vec(),
        GoldmanRecord::Torus(t) => vec![t.b, t.c],
    }
}

fn sweep_cmd(cli: &Cli, text: &str, boundary: usize, steps: usize) -> Outcome {
    if steps == 0 {
        return Err(malformed("steps must be at least 1"));
    }
    if boundary == 0 {
        return Err(malformed("boundary index is 1-based"));
    }
    let g = parse_goldman(text)?;
    let rows = sweep(&g, boundary - 1, steps)?;
    let records: Vec<Record> = rows
        .iter()
        .map(|r| {
            let kind = serde_json::to_value(r.boundary.kind).expect("serializable");
            let mut rec = Record::default()
                .int("step", r.step as i64)
                .num("lambda", r.boundary.lambda)
                .num("tau", r.boundary.tau)
                .text("kind", kind.as_str().unwrap_or_default());
            for (name, value) in r.bd.named_values() {
                rec = rec.num(&name, value);
            }
            rec
        })
        .collect();
    let compact: Value = serde_json::from_str(text).map_err(malformed)?;
    let comment = format!("projkit sweep boundary={boundary} steps={steps} input={compact}");
    Ok(render_rows(&records, cli.format.unwrap_or(Format::Csv), Some(&comment)))
}

fn bulge(cli: &Cli, v: f64, shears: Option<&[f64]>, input: Option<&str>, vertex: &[f64]) -> Outcome {
    if !v.is_finite() {
        return Err(malformed(format!("bulging parameter must be finite, got {v}")));
    }
    let format = cli.format.unwrap_or(Format::Table);
    if let Some(s) = shears {
        let [s1, s2] = s else {
            return Err(malformed(format!("--shears takes 2 values, got {}", s.len())));
        };
        let (a, b) = shear_shift(*s1, *s2, v);
        let record = Record::default().num("v", v).num("sigma1", a).num("sigma2", b);
        return Ok(render(&record, format));
    }
    let flags: [Flag; 4] = match input {
        Some(source) => parse_flags(&read_input(source)?)?
            .try_into()
            .map_err(|f: Vec<_>| malformed(format!("expected 4 flags, got {}", f.len())))?,
        None => {
            let [y, x] = vertex else {
                return Err(malformed(format!("--vertex takes 2 values, got {}", vertex.len())));
            };
            bulging_configuration(*y, *x)?
        }
    };
    let tol = cli.tol.unwrap_or(DEFAULT_GENERIC_TOL);
    let log_pair = |f: &[Flag; 4]| -> projkit::Result<(f64, f64)> {
        let d = double_ratios_with_tol(&f[0], &f[1], &f[2], &f[3], tol)?;
        for x in [d.d1, d.d2] {
            if !(x > 0.0) {
                return Err(projkit::Error::NonPositiveRatio { value: x });
            }
        }
        Ok((d.d1.ln(), d.d2.ln()))
    };
    let (b1, b2) = log_pair(&flags)?;
    let (a1, a2) = log_pair(&bulge_flags(&flags, v)?)?;
    let record = Record::default()
        .num("v", v)
        .num("sigma1_before", b1)
        .num("sigma2_before", b2)
        .num("sigma1_after", a1)
        .num("sigma2_after", a2)
        .num("shift1", a1 - b1)
        .num("shift2", a2 - b2);
    Ok(render(&record, format))
}
