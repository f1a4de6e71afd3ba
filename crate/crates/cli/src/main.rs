//! `kstruve` command-line front end.
//!
//! Exit codes: 0 success, 2 invalid flags or parameters, 3 evaluation
//! error, 4 a verification case ended in `FAIL`.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::{json, Map, Value};

use kstruve::foxwright::{eval_fox_wright, FoxWrightSpec};
use kstruve::identities::{verify, CaseId, Grid, GridKind, Status};
use kstruve::kstruve::{eval_k_struve, trig_closed_form, KStruveParams, TrigFunction, TrigKind};
use kstruve::pathway::{pathway_integral, pathway_power_closed, Fallible, PathwayParams};
use kstruve::{Error, EvalResult};

#[derive(Parser)]
#[command(name = "kstruve", version, about = "k-Struve, Fox-Wright and pathway integral evaluation")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RecordFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Family {
    Power,
    Struve,
    Cos1m,
    Cosh1m,
    Sin,
    Sinh,
}

#[derive(Clone, Copy, ValueEnum)]
enum GridArg {
    Default,
    Dense,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the k-Struve function S^k_{ν,c}(x).
    #[command(allow_negative_numbers = true)]
    EvalStruve {
        #[arg(long)]
        k: f64,
        #[arg(long)]
        nu: f64,
        #[arg(long)]
        c: f64,
        #[arg(long)]
        x: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: RecordFormat,
    },
    /// Evaluate a Fox-Wright function from a JSON parameter spec.
    #[command(allow_negative_numbers = true)]
    EvalWright {
        /// `{"upper":[[a,α],...],"lower":[[b,β],...]}`
        #[arg(long)]
        spec: String,
        #[arg(long)]
        z: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: RecordFormat,
    },
    /// Apply the pathway fractional integral to an integrand family.
    #[command(allow_negative_numbers = true)]
    Pathway {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        eta: f64,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        x: f64,
        /// Exponent of the power family t^{β-1}.
        #[arg(long, required_if_eq("family", "power"))]
        beta: Option<f64>,
        #[arg(long)]
        k: Option<f64>,
        #[arg(long)]
        nu: Option<f64>,
        #[arg(long)]
        c: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        /// Power t^{ρ-1} multiplying the k-Struve and elementary families.
        #[arg(long, default_value_t = 1.0)]
        rho: f64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: RecordFormat,
    },
    /// Verify the closed-form pathway images over a parameter grid.
    Verify {
        /// th1..th5, cor1..cor5 or all.
        #[arg(long)]
        case: String,
        #[arg(long, value_enum, default_value = "default")]
        grid: GridArg,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Also write the JSON reports to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
}

enum Failure {
    Usage(String),
    Eval(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParams(_) | Error::EmptyGrid => Failure::Usage(e.to_string()),
            _ => Failure::Eval(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Writes every float with 17 significant digits.
struct Digits17<F>(F);

macro_rules! delegate {
    ($($name:ident),*) => {
        $(
            fn $name<W: ?Sized + Write>(&mut self, w: &mut W) -> io::Result<()> {
                self.0.$name(w)
            }
        )*
    };
}

impl<F: Formatter> Formatter for Digits17<F> {
    fn write_f64<W: ?Sized + Write>(&mut self, w: &mut W, value: f64) -> io::Result<()> {
        write!(w, "{value:.16e}")
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(w, first)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(w, first)
    }

    delegate!(begin_array, end_array, end_array_value, begin_object, end_object, begin_object_value, end_object_value);
}

fn to_json<T: Serialize>(value: &T, pretty: bool) -> String {
    let mut buf = Vec::new();
    let result = if pretty {
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17(PrettyFormatter::new()));
        value.serialize(&mut ser)
    } else {
        let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17(serde_json::ser::CompactFormatter));
        value.serialize(&mut ser)
    };
    result.expect("in-memory JSON serialization");
    String::from_utf8(buf).expect("JSON is UTF-8")
}

fn fmt17(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        String::new()
    }
}

/// One output row: command echo, inputs, then the result columns.
struct Record {
    command: &'static str,
    params: Vec<(&'static str, Value)>,
    result: EvalResult,
    extra: Vec<(&'static str, f64)>,
    wall_time_ms: f64,
}

impl Record {
    fn emit(&self, format: RecordFormat) -> String {
        match format {
            RecordFormat::Json => {
                let mut map = Map::new();
                map.insert("command".into(), json!(self.command));
                for (k, v) in &self.params {
                    map.insert((*k).into(), v.clone());
                }
                map.insert("value".into(), json!(self.result.value));
                map.insert("err_estimate".into(), json!(self.result.err_estimate));
                map.insert("work".into(), json!(self.result.work));
                for (k, v) in &self.extra {
                    map.insert((*k).into(), json!(v));
                }
                map.insert("wall_time_ms".into(), json!(self.wall_time_ms));
                to_json(&Value::Object(map), false) + "\n"
            }
            RecordFormat::Csv => {
                let mut header = vec!["command".to_string()];
                let mut row = vec![self.command.to_string()];
                for (k, v) in &self.params {
                    header.push((*k).into());
                    row.push(match v {
                        Value::Number(n) => fmt17(n.as_f64().unwrap_or(f64::NAN)),
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    });
                }
                header.extend(["value", "err_estimate", "work"].map(String::from));
                row.push(fmt17(self.result.value));
                row.push(fmt17(self.result.err_estimate));
                row.push(self.result.work.to_string());
                for (k, v) in &self.extra {
                    header.push((*k).into());
                    row.push(fmt17(*v));
                }
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&header).expect("in-memory CSV");
                w.write_record(&row).expect("in-memory CSV");
                String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("CSV is UTF-8")
            }
        }
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn need(name: &str, v: Option<f64>) -> Result<f64, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("--{name} is required for this family")))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Power => "power",
        Family::Struve => "struve",
        Family::Cos1m => "cos1m",
        Family::Cosh1m => "cosh1m",
        Family::Sin => "sin",
        Family::Sinh => "sinh",
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    let start = Instant::now();
    let mut out = io::stdout().lock();
    match command {
        Command::EvalStruve { k, nu, c, x, tol, format } => {
            let params = KStruveParams::new(k, nu, c)?;
            let result = eval_k_struve(&params, x, tol)?;
            let record = Record {
                command: "eval-struve",
                params: vec![
                    ("k", json!(k)),
                    ("nu", json!(nu)),
                    ("c", json!(c)),
                    ("x", json!(x)),
                    ("tol", json!(tol)),
                ],
                result,
                extra: Vec::new(),
                wall_time_ms: elapsed_ms(start),
            };
            out.write_all(record.emit(format).as_bytes())?;
        }
        Command::EvalWright { spec, z, tol, format } => {
            let parsed: FoxWrightSpec =
                serde_json::from_str(&spec).map_err(|e| Failure::Usage(format!("invalid --spec: {e}")))?;
            let parsed = FoxWrightSpec::new(parsed.upper, parsed.lower)?;
            let result = eval_fox_wright(&parsed, z, tol)?;
            let record = Record {
                command: "eval-wright",
                params: vec![
                    ("spec", serde_json::to_value(&parsed).expect("spec serializes")),
                    ("z", json!(z)),
                    ("tol", json!(tol)),
                ],
                result,
                extra: Vec::new(),
                wall_time_ms: elapsed_ms(start),
            };
            out.write_all(record.emit(format).as_bytes())?;
        }
        Command::Pathway {
            family,
            eta,
            alpha,
            a,
            x,
            beta,
            k,
            nu,
            c,
            gamma,
            rho,
            tol,
            format,
        } => {
            let pw = PathwayParams::new(eta, alpha, a)?;
            let mut params = vec![
                ("family", json!(family_name(family))),
                ("eta", json!(eta)),
                ("alpha", json!(alpha)),
                ("a", json!(a)),
                ("x", json!(x)),
            ];
            let mut extra = Vec::new();
            if family != Family::Power && !(rho > 0.0) {
                return Err(Failure::Usage(format!("rho must be positive, got {rho}")));
            }
            let result = match family {
                Family::Power => {
                    let beta = need("beta", beta)?;
                    if !(beta > 0.0) {
                        return Err(Failure::Usage(format!("beta must be positive, got {beta}")));
                    }
                    params.push(("beta", json!(beta)));
                    let result = pathway_integral(&pw, &move |t: f64| t.powf(beta - 1.0), x, tol)?;
                    let closed = pathway_power_closed(&pw, beta, x)?;
                    extra.push(("closed_form", closed));
                    extra.push(("rel_gap", (result.value - closed).abs() / closed.abs().max(1.0)));
                    result
                }
                Family::Struve => {
                    let (k, nu, c) = (need("k", k)?, need("nu", nu)?, need("c", c)?);
                    let s = KStruveParams::new(k, nu, c)?;
                    if !(rho + s.leading_power() > 0.0) {
                        return Err(Failure::Usage("rho + nu/k + 1 must be positive".into()));
                    }
                    params.extend([("k", json!(k)), ("nu", json!(nu)), ("c", json!(c)), ("rho", json!(rho))]);
                    let series_tol = tol * 0.1;
                    let f = Fallible(move |t: f64| Ok(t.powf(rho - 1.0) * eval_k_struve(&s, t, series_tol)?.value));
                    pathway_integral(&pw, &f, x, tol)?
                }
                Family::Cos1m | Family::Cosh1m | Family::Sin | Family::Sinh => {
                    let (k, g) = (need("k", k)?, need("gamma", gamma)?);
                    if !(k > 0.0) {
                        return Err(Failure::Usage(format!("k must be positive, got {k}")));
                    }
                    let kind = match family {
                        Family::Cos1m => TrigKind::OneMinusCos,
                        Family::Cosh1m => TrigKind::CoshMinusOne,
                        Family::Sin => TrigKind::Sin,
                        _ => TrigKind::Sinh,
                    };
                    params.extend([("k", json!(k)), ("gamma", json!(g)), ("rho", json!(rho))]);
                    let trig = TrigFunction::new(kind, g);
                    let f = move |t: f64| t.powf(rho - 1.0) * trig_closed_form(&trig, k, t);
                    pathway_integral(&pw, &f, x, tol)?
                }
            };
            params.push(("tol", json!(tol)));
            let record = Record {
                command: "pathway",
                params,
                result,
                extra,
                wall_time_ms: elapsed_ms(start),
            };
            out.write_all(record.emit(format).as_bytes())?;
        }
        Command::Verify {
            case,
            grid,
            tol,
            out: out_path,
            format,
        } => {
            let cases: Vec<CaseId> = if case.eq_ignore_ascii_case("all") {
                CaseId::ALL.to_vec()
            } else {
                vec![case.parse()?]
            };
            let kind = match grid {
                GridArg::Default => GridKind::Default,
                GridArg::Dense => GridKind::Dense,
            };
            let mut entries = Vec::new();
            let mut any_failed = false;
            for id in cases {
                let started = Instant::now();
                let report = verify(id, &Grid::for_case(id, kind), tol)?;
                any_failed |= report.status == Status::Failed;
                let mut entry = serde_json::to_value(&report).expect("report serializes");
                entry
                    .as_object_mut()
                    .expect("report is an object")
                    .insert("wall_time_ms".into(), json!(elapsed_ms(started)));
                entries.push(entry);
            }
            let payload = Value::Array(entries);
            if let Some(path) = out_path {
                std::fs::write(&path, to_json(&payload, true) + "\n")?;
            }
            match format {
                ReportFormat::Json => out.write_all((to_json(&payload, true) + "\n").as_bytes())?,
                ReportFormat::Table => out.write_all(table(&payload).as_bytes())?,
            }
            if any_failed {
                return Ok(4);
            }
        }
    }
    Ok(0)
}

fn table(payload: &Value) -> String {
    let mut s = format!(
        "{:<6} {:>6} {:>17} {:>24} {:>24}  {}\n",
        "case", "points", "status", "max_rel_err_corrected", "max_rel_err_printed", "worst_point"
    );
    let num = |v: &Value| v.as_f64().map_or("-".to_string(), |x| format!("{x:.3e}"));
    for e in payload.as_array().into_iter().flatten() {
        s += &format!(
            "{:<6} {:>6} {:>17} {:>24} {:>24}  {}\n",
            e["case"].as_str().unwrap_or("?"),
            e["points"],
            e["status"].as_str().unwrap_or("?"),
            num(&e["max_rel_err_corrected"]),
            num(&e["max_rel_err_printed"]),
            e["worst_point"],
        );
        if let Some(f) = e["failures"].as_array().filter(|f| !f.is_empty()) {
            s += &format!("       {} point(s) failed to evaluate; first: {}\n", f.len(), f[0]);
        }
    }
    s
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Eval(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
