//! Command dispatch for the `inverf` binary.
//!
//! CSV output has one header line and fixed column order; binary64 values are
//! written as `{:.16e}` (17 significant digits). JSON uses serde_json's
//! shortest round-trip formatting. Both are byte-stable for fixed inputs.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use inverf_core::carlitz::build_pn;
use inverf_core::reproduce::{
    figure_dn_ratio, figure_p10, figure_taylor_ratio, figure_taylor_ratio_zoom, table_rows, REFERENCE_ROWS,
};
use inverf_core::scalar::rational_to_f64;
use inverf_core::{build_table, Error as CoreError, EvalConfig, EvaluatorF64, Method, TailEnd, TailForm};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Domain(_) => EXIT_DOMAIN,
            CliError::Io(_) => EXIT_IO,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Domain { .. } | CoreError::LogArgument(_) | CoreError::NonConvergence { .. } => {
                CliError::Domain(e.to_string())
            }
            _ => CliError::Usage(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "inverf", version, about = "Inverse error function: exact coefficients, asymptotics and evaluation")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: Format,

    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureKind {
    P10,
    #[value(name = "dn_ratio", alias = "dn-ratio")]
    DnRatio,
    #[value(name = "taylor_ratio", alias = "taylor-ratio")]
    TaylorRatio,
    #[value(name = "taylor_ratio_zoom", alias = "taylor-ratio-zoom")]
    TaylorRatioZoom,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Taylor,
    Lambert,
    Newton,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TailFormArg {
    PerTerm,
    PrintedN,
}

impl From<TailFormArg> for TailForm {
    fn from(f: TailFormArg) -> Self {
        match f {
            TailFormArg::PerTerm => TailForm::PerTerm,
            TailFormArg::PrintedN => TailForm::PrintedN,
        }
    }
}

fn parse_tail(s: &str) -> Result<TailEnd, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(TailEnd::Auto);
    }
    s.parse::<usize>()
        .map(TailEnd::Fixed)
        .map_err(|_| format!("expected a non-negative integer or 'auto', got '{s}'"))
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact derivatives at 0. Columns: n,numerator,denominator,d_n,d_n_over_n_factorial
    Coeffs {
        #[arg(long)]
        max_n: usize,
    },
    /// Coefficients of P_n. Columns: power,coefficient
    Poly {
        #[arg(long)]
        n: usize,
    },
    /// The six reference rows. Columns: x,n,oracle,printed_inverf,oracle_deviation,head_tail,printed_head_tail,head_tail_deviation
    Table {
        #[arg(long, value_enum, default_value = "per-term")]
        tail_form: TailFormArg,
    },
    /// Figure data. p10: x,exact,asymptotic; dn_ratio: n,exact,asymptotic,ratio;
    /// taylor_ratio and taylor_ratio_zoom: x,head,head_tail_10,head_tail_20
    Figure {
        #[arg(value_enum)]
        which: FigureKind,
    },
    /// Evaluate inverf(x). Columns: x,value,method,terms_used,newton_iterations,residual
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
        #[arg(long, default_value_t = 9)]
        order: usize,
        /// Last tail index N, or 'auto'.
        #[arg(long, default_value = "auto", value_parser = parse_tail)]
        tail: TailEnd,
        #[arg(long, default_value_t = 0.95)]
        switch: f64,
        #[arg(long)]
        no_polish: bool,
        #[arg(long, value_enum, default_value = "auto")]
        method: MethodArg,
    },
}

/// Rows ready for either writer.
struct Output {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    json: Value,
}

fn f(v: f64) -> String {
    format!("{v:.16e}")
}

fn cmd_coeffs(max_n: usize) -> Result<Output, CliError> {
    let table = build_table(max_n)?;
    let pi = std::f64::consts::PI;
    let mut rows = Vec::with_capacity(max_n);
    let mut json_rows = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        let r = table.ratio(n)?;
        let dn = table.dn_float(n)?;
        let a = table.taylor_coefficient(n, pi)?;
        rows.push(vec![n.to_string(), r.numer().to_string(), r.denom().to_string(), f(dn), f(a)]);
        json_rows.push(json!({
            "n": n,
            "numerator": r.numer().to_string(),
            "denominator": r.denom().to_string(),
            "d_n": dn,
            "d_n_over_n_factorial": a,
            "r_n": rational_to_f64(r),
        }));
    }
    Ok(Output {
        header: vec!["n", "numerator", "denominator", "d_n", "d_n_over_n_factorial"],
        rows,
        json: Value::Array(json_rows),
    })
}

fn cmd_poly(n: usize) -> Output {
    let p = build_pn(n).pop().expect("build_pn returns P_0..=P_n");
    let export = p.export();
    let rows = export
        .coefficients
        .iter()
        .map(|c| vec![c.power.to_string(), c.value.clone()])
        .collect();
    Output {
        header: vec!["power", "coefficient"],
        rows,
        json: serde_json::to_value(&export).expect("plain struct serializes"),
    }
}

fn cmd_table(form: TailForm) -> Result<Output, CliError> {
    let rows = table_rows(form)?;
    let mut csv = Vec::new();
    let mut js = Vec::new();
    for (r, p) in rows.iter().zip(REFERENCE_ROWS.iter()) {
        csv.push(vec![
            r.x.to_string(),
            r.n.to_string(),
            f(r.oracle),
            p.inverf.to_string(),
            f(r.oracle_deviation),
            f(r.head_tail),
            p.head_tail.to_string(),
            f(r.head_tail_deviation),
        ]);
        js.push(json!({
            "x": r.x,
            "n": r.n,
            "oracle": r.oracle,
            "printed_inverf": p.inverf,
            "oracle_deviation": r.oracle_deviation,
            "head_tail": r.head_tail,
            "printed_head_tail": p.head_tail,
            "head_tail_deviation": r.head_tail_deviation,
        }));
    }
    Ok(Output {
        header: vec![
            "x",
            "n",
            "oracle",
            "printed_inverf",
            "oracle_deviation",
            "head_tail",
            "printed_head_tail",
            "head_tail_deviation",
        ],
        rows: csv,
        json: Value::Array(js),
    })
}

fn cmd_figure(which: FigureKind) -> Result<Output, CliError> {
    let out = match which {
        FigureKind::P10 => {
            let pts = figure_p10()?;
            Output {
                header: vec!["x", "exact", "asymptotic"],
                rows: pts.iter().map(|p| vec![f(p.x), f(p.exact), f(p.asymptotic)]).collect(),
                json: serde_json::to_value(&pts).expect("plain struct serializes"),
            }
        }
        FigureKind::DnRatio => {
            let table = build_table(inverf_core::coeffs::DEFAULT_MAX_N)?;
            let pts = figure_dn_ratio(&table, inverf_core::coeffs::DEFAULT_MAX_N)?;
            Output {
                header: vec!["n", "exact", "asymptotic", "ratio"],
                rows: pts
                    .iter()
                    .map(|p| vec![p.n.to_string(), f(p.exact), f(p.asymptotic), f(p.ratio)])
                    .collect(),
                json: serde_json::to_value(&pts).expect("plain struct serializes"),
            }
        }
        FigureKind::TaylorRatio | FigureKind::TaylorRatioZoom => {
            let pts = if which == FigureKind::TaylorRatio {
                figure_taylor_ratio()?
            } else {
                figure_taylor_ratio_zoom()?
            };
            Output {
                header: vec!["x", "head", "head_tail_10", "head_tail_20"],
                rows: pts
                    .iter()
                    .map(|p| vec![f(p.x), f(p.head), f(p.head_tail_10), f(p.head_tail_20)])
                    .collect(),
                json: serde_json::to_value(&pts).expect("plain struct serializes"),
            }
        }
    };
    Ok(out)
}

fn cmd_eval(x: f64, order: usize, tail: TailEnd, switch: f64, polish: bool, method: MethodArg) -> Result<Output, CliError> {
    let config = EvalConfig {
        taylor_order: order,
        tail_end: tail,
        switch_point: switch,
        polish,
        method: match method {
            MethodArg::Auto => Method::Auto,
            MethodArg::Taylor => Method::Taylor,
            MethodArg::Lambert => Method::Lambert,
            MethodArg::Newton => Method::Newton,
        },
        tail_form: TailForm::PerTerm,
    };
    let report = EvaluatorF64::with_config(config)?.inverf(x)?;
    Ok(Output {
        header: vec!["x", "value", "method", "terms_used", "newton_iterations", "residual"],
        rows: vec![vec![
            f(report.x),
            f(report.value),
            report.method.to_string(),
            report.terms_used.to_string(),
            report.newton_iterations.to_string(),
            f(report.residual),
        ]],
        json: serde_json::to_value(report).expect("plain struct serializes"),
    })
}

fn write_output(out: &Output, format: Format, sink: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            w.write_record(&out.header).map_err(csv_error)?;
            for row in &out.rows {
                w.write_record(row).map_err(csv_error)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *sink, &out.json).map_err(io::Error::from)?;
            sink.write_all(b"\n")?;
            sink.flush()?;
        }
    }
    Ok(())
}

fn csv_error(e: csv::Error) -> CliError {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => CliError::Io(io),
        other => CliError::Io(io::Error::other(format!("{other:?}"))),
    }
}

/// Runs a parsed command, writing to `--out` or to `stdout`.
pub fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let output = match &cli.command {
        Command::Coeffs { max_n } => cmd_coeffs(*max_n)?,
        Command::Poly { n } => cmd_poly(*n),
        Command::Table { tail_form } => cmd_table((*tail_form).into())?,
        Command::Figure { which } => cmd_figure(*which)?,
        Command::Eval { x, order, tail, switch, no_polish, method } => {
            cmd_eval(*x, *order, *tail, *switch, !*no_polish, *method)?
        }
    };
    match &cli.out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
            let mut w = BufWriter::new(file);
            write_output(&output, cli.format, &mut w)
        }
        None => write_output(&output, cli.format, stdout),
    }
}

/// Parses `args` (program name first) and runs; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
