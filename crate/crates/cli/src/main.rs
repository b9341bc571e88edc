mod config;
mod functions;
mod grid;

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use whittaker_ext::{
    laplace_closed_form, laplace_corollary_2f1, laplace_numeric, mellin_closed_form, mellin_numeric, EvalResult, Form,
    LaplaceQuery, MellinQuery, QuadratureSpec, WhittakerParams,
};
use whittaker_ext_verify::{self as verify, report, RunConfig};

use config::CliConfig;
use functions::Method;

/// Extended Whittaker, confluent hypergeometric and beta functions.
#[derive(Debug, Parser)]
#[command(name = "whittaker-ext", version)]
struct Cli {
    /// `key = value` file with defaults (rel_tol, abs_tol, max_level, max_nodes, format, seed, output).
    #[arg(long, global = true, env = "WHITTAKER_EXT_CONFIG")]
    config: Option<PathBuf>,
    /// Relative tolerance of every quadrature.
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// Step halvings allowed per quadrature.
    #[arg(long, global = true)]
    max_level: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

/// Named parameters. Each takes a number; `table` also accepts `start:stop:count`.
#[derive(Debug, Args)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    v: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    rho: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    z: Option<String>,
    /// Order of `bessel_k`.
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// Argument of `bessel_k`.
    #[arg(long, allow_hyphen_values = true)]
    x: Option<String>,
}

impl Params {
    fn get(&self, name: &str) -> Option<&str> {
        match name {
            "a" => self.a.as_deref(),
            "b" => self.b.as_deref(),
            "c" => self.c.as_deref(),
            "p" => self.p.as_deref(),
            "q" => self.q.as_deref(),
            "v" => self.v.as_deref(),
            "lambda" => self.lambda.as_deref(),
            "rho" => self.rho.as_deref(),
            "z" => self.z.as_deref(),
            "nu" => self.nu.as_deref(),
            "x" => self.x.as_deref(),
            _ => None,
        }
    }

    const NAMES: [&'static str; 11] = ["a", "b", "c", "p", "q", "v", "lambda", "rho", "z", "nu", "x"];

    /// Axes of `function` in its parameter order; rejects missing and stray flags.
    fn axes(&self, function: &str) -> Result<Vec<(&'static str, Vec<f64>)>, Failure> {
        let names = functions::parameters(function).ok_or_else(|| {
            let known: Vec<&str> = functions::FUNCTIONS.iter().map(|(f, _)| *f).collect();
            Failure::usage(format!(
                "unknown function `{function}`; expected one of {}",
                known.join(", ")
            ))
        })?;
        if let Some(stray) = Self::NAMES.iter().find(|n| !names.contains(n) && self.get(n).is_some()) {
            return Err(Failure::usage(format!("{function} does not take --{stray}")));
        }
        names
            .iter()
            .map(|n| {
                let raw = self
                    .get(n)
                    .ok_or_else(|| Failure::usage(format!("{function} needs --{n}")))?;
                let axis = grid::parse_axis(raw).map_err(|e| Failure::usage(format!("--{n}: {e}")))?;
                Ok((*n, axis))
            })
            .collect()
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function at one point.
    Eval {
        function: String,
        #[command(flatten)]
        params: Params,
        /// Series or Euler-integral path for phi_p, phi_pq, phi_pv, f_p, f_pq, f_pv.
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Run one verification suite, or `all`.
    Verify {
        suite: String,
        /// Samples per suite (default: each suite's own count).
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Compare the Mellin transform with its closed form exactly as printed.
        #[arg(long)]
        paper_literal: bool,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Record wall-clock runtime in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Tabulate a function over a grid; any parameter may be `start:stop:count`.
    Table {
        function: String,
        #[command(flatten)]
        params: Params,
        #[arg(long, value_enum, default_value_t)]
        method: Method,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Mellin transform in p: quadrature against both closed forms.
    Mellin {
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true)]
        r: f64,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// Laplace-type integral in x: quadrature against the closed form.
    Laplace {
        #[arg(long, allow_hyphen_values = true)]
        p: f64,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, allow_hyphen_values = true)]
        delta: f64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: f64,
        #[arg(long, allow_hyphen_values = true)]
        mu: f64,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
}

/// Exit status with an optional message for stderr.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: Some(message.into()),
        }
    }

    fn silent(code: u8) -> Self {
        Self { code, message: None }
    }
}

impl From<whittaker_ext::Error> for Failure {
    fn from(e: whittaker_ext::Error) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<verify::Error> for Failure {
    fn from(e: verify::Error) -> Self {
        Self::usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Self::usage(e.to_string())
    }
}

const NOT_CONVERGED: u8 = 3;

fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn sink(output: Option<&PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match output {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn spec(cli: &Cli, cfg: &CliConfig) -> Result<QuadratureSpec<f64>, Failure> {
    let mut spec = QuadratureSpec::default();
    if let Some(t) = cli.rel_tol.or(cfg.rel_tol) {
        spec = spec.with_rel_tol(t);
    }
    if let Some(l) = cli.max_level.or(cfg.max_level) {
        spec = spec.with_max_level(l);
    }
    if let Some(t) = cfg.abs_tol {
        spec.abs_tol = t;
    }
    if let Some(n) = cfg.max_nodes {
        spec = spec.with_max_nodes(n);
    }
    spec.validate()?;
    Ok(spec)
}

fn format_of(flag: Option<Format>, cfg: &CliConfig, fallback: Format) -> Result<Format, Failure> {
    if let Some(f) = flag {
        return Ok(f);
    }
    match cfg.format.as_deref() {
        None => Ok(fallback),
        Some(s) => Format::from_str(s, true).map_err(|_| Failure::usage(format!("config: unknown format `{s}`"))),
    }
}

fn eval(
    function: &str,
    params: &Params,
    method: Method,
    format: Format,
    spec: &QuadratureSpec<f64>,
) -> Result<(), Failure> {
    let axes = params.axes(function)?;
    let mut args = BTreeMap::new();
    for (name, axis) in &axes {
        match axis.as_slice() {
            [x] => {
                args.insert(*name, *x);
            }
            _ => {
                return Err(Failure::usage(format!(
                    "--{name}: eval takes a single value; use `table` for grids"
                )))
            }
        }
    }
    let r = functions::evaluate(function, &args, method, spec)?;
    let mut out = sink(None)?;
    match format {
        Format::Json => {
            let parameters: serde_json::Map<String, Value> = axes
                .iter()
                .map(|(n, _)| ((*n).to_owned(), Value::from(args[n])))
                .collect();
            let doc = json!({
                "function": function,
                "parameters": parameters,
                "value": r.value,
                "abs_error_estimate": r.abs_error_estimate,
                "work": r.work,
                "converged": r.converged,
            });
            serde_json::to_writer_pretty(&mut out, &doc)?;
            writeln!(out)?;
        }
        Format::Plain | Format::Csv => {
            let sep = if format == Format::Csv { "," } else { " " };
            if format == Format::Csv {
                writeln!(out, "value,abs_error_estimate,work,converged")?;
                writeln!(
                    out,
                    "{}{sep}{}{sep}{}{sep}{}",
                    num(r.value),
                    num(r.abs_error_estimate),
                    r.work,
                    r.converged
                )?;
            } else {
                writeln!(out, "value              {}", num(r.value))?;
                writeln!(out, "abs_error_estimate {}", num(r.abs_error_estimate))?;
                writeln!(out, "work               {}", r.work)?;
                writeln!(out, "converged          {}", r.converged)?;
            }
        }
    }
    out.flush()?;
    converged(&[r])
}

fn converged(results: &[EvalResult<f64>]) -> Result<(), Failure> {
    if results.iter().all(|r| r.converged) {
        Ok(())
    } else {
        Err(Failure {
            code: NOT_CONVERGED,
            message: Some("warning: result did not converge to the requested tolerance".into()),
        })
    }
}

fn table(
    function: &str,
    params: &Params,
    method: Method,
    format: Format,
    output: Option<&PathBuf>,
    spec: &QuadratureSpec<f64>,
) -> Result<(), Failure> {
    let axes = params.axes(function)?;
    let names: Vec<&str> = axes.iter().map(|(n, _)| *n).collect();
    let points = grid::product(&axes.iter().map(|(_, a)| a.clone()).collect::<Vec<_>>());
    let mut results = Vec::with_capacity(points.len());
    for point in &points {
        let args: BTreeMap<&str, f64> = names.iter().copied().zip(point.iter().copied()).collect();
        let r = functions::evaluate(function, &args, method, spec).map_err(|e| {
            let at: Vec<String> = args.iter().map(|(k, v)| format!("{k}={v}")).collect();
            Failure::usage(format!("at {}: {e}", at.join(", ")))
        })?;
        results.push(r);
    }
    let mut out = sink(output)?;
    match format {
        Format::Json => {
            let rows: Vec<Value> = points
                .iter()
                .zip(&results)
                .map(|(pt, r)| {
                    let mut row: serde_json::Map<String, Value> = names
                        .iter()
                        .zip(pt)
                        .map(|(n, x)| ((*n).to_owned(), Value::from(*x)))
                        .collect();
                    row.insert("value".into(), Value::from(r.value));
                    row.insert("abs_error_estimate".into(), Value::from(r.abs_error_estimate));
                    row.insert("converged".into(), Value::from(r.converged));
                    Value::Object(row)
                })
                .collect();
            serde_json::to_writer_pretty(&mut out, &rows)?;
            writeln!(out)?;
        }
        Format::Csv | Format::Plain => {
            let sep = if format == Format::Csv { "," } else { " " };
            writeln!(
                out,
                "{}{sep}value{sep}abs_error_estimate{sep}converged",
                names.join(sep)
            )?;
            for (pt, r) in points.iter().zip(&results) {
                let mut fields: Vec<String> = pt.iter().map(|x| num(*x)).collect();
                fields.extend([num(r.value), num(r.abs_error_estimate), r.converged.to_string()]);
                writeln!(out, "{}", fields.join(sep))?;
            }
        }
    }
    out.flush()?;
    converged(&results)
}

/// Prints three values and their pairwise relative deviations.
fn comparison(labels: [&str; 3], values: [EvalResult<f64>; 3], format: Format) -> Result<(), Failure> {
    let dev = |i: usize, j: usize| report::rel_dev(values[i].value, values[j].value);
    let pairs = [(0, 1), (0, 2), (1, 2)];
    let mut out = sink(None)?;
    match format {
        Format::Json => {
            let mut doc = serde_json::Map::new();
            for (l, v) in labels.iter().zip(&values) {
                doc.insert((*l).to_owned(), Value::from(v.value));
            }
            for (i, j) in pairs {
                doc.insert(
                    format!("rel_dev_{}_{}", labels[i], labels[j]),
                    dev(i, j).map_or(Value::Null, Value::from),
                );
            }
            doc.insert("converged".into(), Value::from(values.iter().all(|v| v.converged)));
            serde_json::to_writer_pretty(&mut out, &Value::Object(doc))?;
            writeln!(out)?;
        }
        Format::Plain | Format::Csv => {
            for (l, v) in labels.iter().zip(&values) {
                writeln!(out, "{l:<34} {}", num(v.value))?;
            }
            for (i, j) in pairs {
                let d = dev(i, j).map_or("nan".to_owned(), |d| format!("{d:.3e}"));
                writeln!(out, "{:<34} {d}", format!("rel_dev({}, {})", labels[i], labels[j]))?;
            }
        }
    }
    out.flush()?;
    converged(&values)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let cfg = match &cli.config {
        Some(path) => CliConfig::load(path).map_err(Failure::usage)?,
        None => CliConfig::default(),
    };
    let spec = spec(cli, &cfg)?;
    match &cli.command {
        Command::Eval {
            function,
            params,
            method,
            format,
        } => eval(
            function,
            params,
            *method,
            format_of(*format, &cfg, Format::Plain)?,
            &spec,
        ),
        Command::Table {
            function,
            params,
            method,
            format,
            output,
        } => {
            let output = output.clone().or(cfg.output.as_ref().map(PathBuf::from));
            let format = format_of(*format, &cfg, Format::Csv)?;
            table(function, params, *method, format, output.as_ref(), &spec)
        }
        Command::Verify {
            suite,
            samples,
            seed,
            paper_literal,
            format,
            output,
            timing,
        } => {
            let run = RunConfig {
                spec,
                paper_literal: *paper_literal,
                timing: *timing,
            };
            let seed = seed.or(cfg.seed).unwrap_or(1);
            let reports = if suite == "all" {
                verify::run_all_with(seed, *samples, &run)
            } else {
                let info = verify::lookup(suite).ok_or_else(|| {
                    let known: Vec<&str> = verify::CATALOGUE.iter().map(|s| s.id).collect();
                    Failure::usage(format!(
                        "unknown suite `{suite}`; expected `all` or one of {}",
                        known.join(", ")
                    ))
                })?;
                vec![verify::run_suite(
                    suite,
                    samples.unwrap_or(info.default_samples),
                    seed,
                    &run,
                )?]
            };
            let output = output.clone().or(cfg.output.as_ref().map(PathBuf::from));
            let mut out = sink(output.as_ref())?;
            match format_of(*format, &cfg, Format::Json)? {
                Format::Json => verify::write_json(&reports, &mut out)?,
                Format::Csv => verify::write_csv(&reports, &mut out)?,
                Format::Plain => verify::write_plain(&reports, &mut out)?,
            }
            out.flush()?;
            if output.is_some() {
                verify::write_plain(&reports, io::stderr().lock())?;
            }
            if reports.iter().all(|r| r.passed) {
                Ok(())
            } else {
                Err(Failure::silent(1))
            }
        }
        Command::Mellin {
            v,
            lambda,
            rho,
            r,
            z,
            format,
        } => {
            let query = MellinQuery::new(WhittakerParams::new(0.0, *v, *lambda, *rho)?, *r, *z)?;
            let numeric = mellin_numeric(&query, &spec)?;
            let corrected = mellin_closed_form(&query, Form::Corrected)?;
            let literal = mellin_closed_form(&query, Form::AsPrinted)?;
            comparison(
                ["numeric", "corrected", "paper_literal"],
                [numeric, corrected, literal],
                format_of(*format, &cfg, Format::Plain)?,
            )
        }
        Command::Laplace {
            p,
            v,
            lambda,
            rho,
            delta,
            alpha,
            mu,
            format,
        } => {
            let params = WhittakerParams::new(*p, *v, *lambda, *rho)?;
            let query = LaplaceQuery::new(params, *delta, *alpha, *mu)?;
            let numeric = laplace_numeric(&query, &spec)?;
            let literal = laplace_closed_form(&query, &spec)?;
            // At p = v = 0 the extended function is the Gauss one; use its own evaluator.
            let closed = if *p == 0.0 && *v == 0.0 {
                laplace_corollary_2f1(*lambda, *rho, *delta, *alpha, *mu)?
            } else {
                literal
            };
            comparison(
                ["numeric", "corrected", "paper_literal"],
                [numeric, closed, literal],
                format_of(*format, &cfg, Format::Plain)?,
            )
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(m) = f.message {
                eprintln!("{m}");
            }
            ExitCode::from(f.code)
        }
    }
}
