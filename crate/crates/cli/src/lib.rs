//! Command-line front end for `ratbez`: reads curve files, runs the dual-basis
//! approximation or one of the two baselines, and writes curves, error
//! reports, comparison tables and SVG overlays.

pub mod document;
pub mod error;
pub mod svg;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ratbez::baselines::LuNodes;
use ratbez::chebyshev::{QuadratureConfig, DEFAULT_MAX_ORDER};
use ratbez::metrics::{ErrorReport, DEFAULT_SAMPLES};
use ratbez::{
    approximate_composite, huang_approximation, lu_iterate, BezierCurve, CompositeCurve, ConstraintSpec, JacobiWeight,
    RationalBezierCurve, SegmentSettings, Subdivision,
};

pub use crate::document::{CurveDocument, SegmentData};
pub use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Dual,
    Huang,
    Lu,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Dual => "dual",
            Method::Huang => "huang",
            Method::Lu => "lu",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NodesArg {
    Uniform,
    Chebyshev,
}

impl From<NodesArg> for LuNodes {
    fn from(n: NodesArg) -> Self {
        match n {
            NodesArg::Uniform => LuNodes::Uniform,
            NodesArg::Chebyshev => LuNodes::Chebyshev,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ratbez", version, about = "Polynomial approximation of rational Bézier curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Approximate every segment of a curve file.
    Run(RunArgs),
    /// Tabulate errors of several methods on one or more curve files.
    Compare(CompareArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Target degree; one value for all pieces or one per piece.
    #[arg(long, value_delimiter = ',', required = true)]
    pub degree: Vec<usize>,
    /// Derivatives interpolated at t = 0.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Derivatives interpolated at t = 1.
    #[arg(long, default_value_t = 1)]
    pub l: usize,
    #[arg(long, default_value_t = 0.0, env = "RATBEZ_ALPHA", allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, env = "RATBEZ_BETA", allow_negative_numbers = true)]
    pub beta: f64,
    /// Chebyshev tail tolerance.
    #[arg(long, default_value_t = ratbez::DEFAULT_EPS, env = "RATBEZ_EPS")]
    pub eps: f64,
    /// Split every segment at these parameters first (bare flag: 0.5).
    #[arg(long, value_delimiter = ',', num_args = 0..=1, default_missing_value = "0.5")]
    pub subdivide: Option<Vec<f64>>,
    #[arg(long, default_value_t = 1.0, env = "RATBEZ_LU_LAMBDA")]
    pub lu_lambda: f64,
    #[arg(long, value_enum, default_value_t = NodesArg::Uniform, env = "RATBEZ_LU_NODES")]
    pub lu_nodes: NodesArg,
    /// Uniform samples for the maximum error.
    #[arg(long, default_value_t = DEFAULT_SAMPLES, env = "RATBEZ_SAMPLES")]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Dual, env = "RATBEZ_METHOD")]
    pub method: Method,
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 100, env = "RATBEZ_LU_ITERS")]
    pub lu_iters: usize,
    /// Write an SVG overlay here.
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// Write the approximant curve file here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Table,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct CompareArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    /// Methods to run; a bare `--methods` gives an empty table.
    #[arg(long, value_enum, value_delimiter = ',', num_args = 0..=1, default_value = "dual,huang,lu")]
    pub methods: Vec<Method>,
    #[command(flatten)]
    pub common: CommonArgs,
    /// Iteration counts reported for the Lu method.
    #[arg(long, value_delimiter = ',', default_value = "25,50,75,100", env = "RATBEZ_LU_ITERS")]
    pub lu_iters: Vec<usize>,
    #[arg(long, value_enum, default_value_t = TableFormat::Table)]
    pub format: TableFormat,
    /// Write the table here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Everything one approximation run needs.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub method: Method,
    pub degrees: Vec<usize>,
    pub constraints: ConstraintSpec,
    pub alpha: f64,
    pub beta: f64,
    pub eps: f64,
    pub subdivide: Option<Vec<f64>>,
    pub lu_lambda: f64,
    pub lu_iters: usize,
    pub lu_nodes: NodesArg,
    pub samples: usize,
}

impl RunConfig {
    pub fn new(method: Method, common: &CommonArgs, lu_iters: usize) -> Self {
        RunConfig {
            method,
            degrees: common.degree.clone(),
            constraints: ConstraintSpec::new(common.k, common.l),
            alpha: common.alpha,
            beta: common.beta,
            eps: common.eps,
            subdivide: common.subdivide.clone(),
            lu_lambda: common.lu_lambda,
            lu_iters,
            lu_nodes: common.lu_nodes,
            samples: common.samples,
        }
    }

    /// Dual method with `k = l = 1`, `α = β = 0` and default tolerances.
    pub fn dual(degree: usize) -> Self {
        RunConfig {
            method: Method::Dual,
            degrees: vec![degree],
            constraints: ConstraintSpec::new(1, 1),
            alpha: 0.0,
            beta: 0.0,
            eps: ratbez::DEFAULT_EPS,
            subdivide: None,
            lu_lambda: 1.0,
            lu_iters: 100,
            lu_nodes: NodesArg::Uniform,
            samples: DEFAULT_SAMPLES,
        }
    }

    fn weight(&self) -> Result<JacobiWeight<f64>, CliError> {
        Ok(JacobiWeight::new(self.alpha, self.beta)?)
    }

    fn quadrature(&self) -> QuadratureConfig<f64> {
        QuadratureConfig { eps: self.eps, max_order: DEFAULT_MAX_ORDER }
    }

    fn degree_for(&self, piece: usize, count: usize) -> Result<usize, CliError> {
        match self.degrees.len() {
            1 => Ok(self.degrees[0]),
            n if n == count => Ok(self.degrees[piece]),
            n => Err(CliError::validation(format!("{n} degrees given for {count} pieces"))),
        }
    }
}

/// Result for one (possibly subdivided) piece.
#[derive(Debug, Clone, PartialEq)]
pub struct PieceOutcome {
    pub input: RationalBezierCurve<f64>,
    pub output: BezierCurve<f64>,
    pub errors: ErrorReport<f64>,
    /// Chebyshev order used for the moments (dual method only).
    pub chebyshev_order: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub pieces: Vec<PieceOutcome>,
    pub seconds: f64,
}

impl RunOutput {
    pub fn document(&self, continuity: usize) -> CurveDocument {
        CurveDocument {
            continuity,
            segments: self.pieces.iter().map(|p| SegmentData::from_polynomial(&p.output)).collect(),
        }
    }

    /// Key/value report; the timing sits alone on the last line.
    pub fn report(&self, config: &RunConfig) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "method: {}", config.method.name());
        let _ = writeln!(out, "pieces: {}", self.pieces.len());
        for (i, p) in self.pieces.iter().enumerate() {
            let _ = write!(
                out,
                "piece {i}: degree={} e_inf={:.6e} e_2={:.6e} argmax_t={:.6}",
                p.output.degree(),
                p.errors.e_inf,
                p.errors.e_2,
                p.errors.argmax_t
            );
            if let Some(m) = p.chebyshev_order {
                let _ = write!(out, " chebyshev_order={m}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "time_s: {:.6}", self.seconds);
        out
    }

    pub fn svg(&self) -> String {
        let inputs: Vec<_> = self.pieces.iter().map(|p| svg::polyline(|t| p.input.eval(t))).collect();
        let outputs: Vec<_> = self.pieces.iter().map(|p| svg::polyline(|t| p.output.eval(t))).collect();
        svg::render(&inputs, &outputs)
    }
}

fn composite(doc: &CurveDocument) -> Result<CompositeCurve<RationalBezierCurve<f64>>, CliError> {
    let segments = doc.segments.iter().map(SegmentData::to_rational).collect::<Result<Vec<_>, _>>()?;
    Ok(CompositeCurve::new(segments, doc.continuity)?)
}

fn subdivision(config: &RunConfig) -> Subdivision<f64> {
    match &config.subdivide {
        Some(params) => Subdivision::Every(params.clone()),
        None => Subdivision::None,
    }
}

/// Approximates every piece of `doc` as `config` says.
pub fn run(config: &RunConfig, doc: &CurveDocument) -> Result<RunOutput, CliError> {
    let curve = composite(doc)?;
    let weight = config.weight()?;
    let quadrature = config.quadrature();
    let split = subdivision(config);
    let start = Instant::now();

    let (inputs, outputs, orders): (Vec<_>, Vec<_>, Vec<Option<usize>>) = match config.method {
        Method::Dual => {
            let base = SegmentSettings { degree: 0, constraints: config.constraints, weight, quadrature };
            // count the pieces first so per-piece degrees can be checked
            let count = pieces(&curve, &split)?.len();
            let settings: Vec<_> = (0..count)
                .map(|i| Ok(SegmentSettings { degree: config.degree_for(i, count)?, ..base }))
                .collect::<Result<_, CliError>>()?;
            let out = approximate_composite(&curve, &settings, &split)?;
            let orders = out.results.iter().map(|r| Some(r.diagnostics.chebyshev_order)).collect();
            (out.pieces, out.curve.into_segments(), orders)
        }
        Method::Huang | Method::Lu => {
            let pieces = pieces(&curve, &split)?;
            let count = pieces.len();
            let mut outputs = Vec::with_capacity(count);
            for (i, piece) in pieces.iter().enumerate() {
                let m = config.degree_for(i, count)?;
                outputs.push(baseline(config, piece, m)?);
            }
            (pieces, outputs, vec![None; count])
        }
    };
    let seconds = start.elapsed().as_secs_f64();

    let pieces = inputs
        .into_iter()
        .zip(outputs)
        .zip(orders)
        .map(|((input, output), chebyshev_order)| {
            let errors = ErrorReport::compute(&input, &output, weight, config.samples, quadrature)?;
            Ok(PieceOutcome { input, output, errors, chebyshev_order })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(RunOutput { pieces, seconds })
}

fn pieces(
    curve: &CompositeCurve<RationalBezierCurve<f64>>,
    split: &Subdivision<f64>,
) -> Result<Vec<RationalBezierCurve<f64>>, CliError> {
    let params: &[f64] = match split {
        Subdivision::Every(p) => p,
        _ => &[],
    };
    let mut out = Vec::new();
    for seg in curve.segments() {
        out.extend(seg.split_at(params)?);
    }
    Ok(out)
}

fn baseline(config: &RunConfig, piece: &RationalBezierCurve<f64>, m: usize) -> Result<BezierCurve<f64>, CliError> {
    match config.method {
        Method::Huang => {
            let n = piece.degree();
            if m < n {
                return Err(CliError::validation(format!("huang needs degree >= {n} (the input degree), got {m}")));
            }
            Ok(huang_approximation(piece, m - n))
        }
        Method::Lu => {
            let nodes = LuNodes::from(config.lu_nodes).nodes(m);
            Ok(lu_iterate(piece, nodes, config.lu_lambda, config.lu_iters)?.curve)
        }
        Method::Dual => unreachable!("handled by the composite driver"),
    }
}

/// One row of a comparison table.
#[derive(Debug, Clone, PartialEq)]
pub struct CompareRow {
    pub input: String,
    pub piece: usize,
    pub method: Method,
    pub degree: usize,
    pub lu_iters: Option<usize>,
    pub lu_lambda: Option<f64>,
    pub lu_nodes: Option<NodesArg>,
    pub e_inf: f64,
    pub e_2: f64,
    pub seconds: f64,
}

/// Runs every config on every input. All configs must share the degree list.
pub fn compare(configs: &[RunConfig], inputs: &[(String, CurveDocument)]) -> Result<Vec<CompareRow>, CliError> {
    if let Some(first) = configs.first() {
        if configs.iter().any(|c| c.degrees != first.degrees) {
            return Err(CliError::validation("all compared configurations must target the same degree"));
        }
    }
    let mut rows = Vec::new();
    for (name, doc) in inputs {
        for config in configs {
            let out = run(config, doc)?;
            let lu = config.method == Method::Lu;
            for (piece, p) in out.pieces.iter().enumerate() {
                rows.push(CompareRow {
                    input: name.clone(),
                    piece,
                    method: config.method,
                    degree: p.output.degree(),
                    lu_iters: lu.then_some(config.lu_iters),
                    lu_lambda: lu.then_some(config.lu_lambda),
                    lu_nodes: lu.then_some(config.lu_nodes),
                    e_inf: p.errors.e_inf,
                    e_2: p.errors.e_2,
                    seconds: out.seconds,
                });
            }
        }
    }
    Ok(rows)
}

const CSV_HEADER: &str = "input,piece,method,degree,lu_iters,lu_lambda,lu_nodes,e_inf,e_2,time_s";

fn nodes_name(n: NodesArg) -> &'static str {
    match n {
        NodesArg::Uniform => "uniform",
        NodesArg::Chebyshev => "chebyshev",
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Machine-readable form; timing is the last column.
pub fn render_csv(rows: &[CompareRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{:.16e},{:.16e},{:.6}",
            r.input,
            r.piece,
            r.method.name(),
            r.degree,
            opt(r.lu_iters),
            opt(r.lu_lambda),
            r.lu_nodes.map(nodes_name).unwrap_or_default(),
            r.e_inf,
            r.e_2,
            r.seconds
        );
    }
    out
}

/// Human-readable form with three significant digits.
pub fn render_table(rows: &[CompareRow]) -> String {
    let mut out = format!(
        "{:<24} {:>5} {:<6} {:>6} {:>5} {:>6} {:<9} {:>10} {:>10} {:>9}\n",
        "input", "piece", "method", "degree", "iter", "lambda", "nodes", "e_inf", "e_2", "time[s]"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<24} {:>5} {:<6} {:>6} {:>5} {:>6} {:<9} {:>10} {:>10} {:>9.4}",
            r.input,
            r.piece,
            r.method.name(),
            r.degree,
            opt(r.lu_iters),
            opt(r.lu_lambda),
            r.lu_nodes.map(nodes_name).unwrap_or_default(),
            sig3(r.e_inf),
            sig3(r.e_2),
            r.seconds
        );
    }
    out
}

fn sig3(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let digits = (2 - v.abs().log10().floor() as i32).max(0) as usize;
    if digits > 8 {
        format!("{v:.2e}")
    } else {
        format!("{v:.digits$}")
    }
}

fn read_document(path: &PathBuf) -> Result<CurveDocument, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path.display().to_string(), e))?;
    CurveDocument::parse(&text)
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::io(path.display().to_string(), e))
}

/// Executes a parsed command line, returning what goes to stdout.
pub fn execute(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Run(args) => {
            let doc = read_document(&args.input)?;
            let config = RunConfig::new(args.method, &args.common, args.lu_iters);
            let out = run(&config, &doc)?;
            let curve_text = out.document(doc.continuity).render();
            if let Some(path) = &args.svg {
                write_file(path, &out.svg())?;
            }
            let mut stdout = out.report(&config);
            match &args.out {
                Some(path) => write_file(path, &curve_text)?,
                None => {
                    stdout.push('\n');
                    stdout.push_str(&curve_text);
                }
            }
            Ok(stdout)
        }
        Command::Compare(args) => {
            let inputs = args
                .inputs
                .iter()
                .map(|p| Ok((p.display().to_string(), read_document(p)?)))
                .collect::<Result<Vec<_>, CliError>>()?;
            let mut configs = Vec::new();
            for &method in &args.methods {
                if method == Method::Lu {
                    configs.extend(args.lu_iters.iter().map(|&it| RunConfig::new(method, &args.common, it)));
                } else {
                    configs.push(RunConfig::new(method, &args.common, 0));
                }
            }
            let rows = compare(&configs, &inputs)?;
            let text = match args.format {
                TableFormat::Table => render_table(&rows),
                TableFormat::Csv => render_csv(&rows),
            };
            match &args.out {
                Some(path) => {
                    write_file(path, &text)?;
                    Ok(String::new())
                }
                None => Ok(text),
            }
        }
    }
}
