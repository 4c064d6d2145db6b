//! srkit command line: single-shot JSON requests against the library.
//!
//! Every subcommand reads a JSON payload (file or stdin), dispatches to the
//! library under the chosen scalar backend and writes exactly one JSON
//! response. `run` accepts a full request object {"command", "payload",
//! "backend"?, "tolerances"?} or an array of them (batch mode; output order
//! matches input order). Exit codes: 0 ok, 1 domain error, 2 malformed
//! input.

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use srkit::cousin::{self, AnnularPair, FactorOrder, GlueMode};
use srkit::jets::{self, JetSpec};
use srkit::json as sj;
use srkit::matrep;
use srkit::scalar::{Rat, Scalar};
use srkit::starpoly::QPoly;
use srkit::zeros::{self, Divisor};
use srkit::Error;

#[derive(Parser)]
#[command(
    name = "srkit",
    about = "Computer algebra for quaternionic slice-regular polynomials",
    version
)]
struct Cli {
    /// Scalar backend: exact | float (env SRKIT_BACKEND, default exact).
    #[arg(long, global = true)]
    backend: Option<String>,
    /// Input file, or - for stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,
    /// Output file, or - for stdout.
    #[arg(long, global = true, default_value = "-")]
    output: String,
    /// Float tolerance override for gated operations.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Series truncation override.
    #[arg(long, global = true)]
    trunc: Option<usize>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Clone, Copy)]
enum Cmd {
    /// Process a full request object or an array of requests.
    Run,
    /// Evaluate a polynomial at a quaternion.
    Eval,
    /// Star product of two polynomials.
    Mul,
    /// Regular conjugate.
    Conj,
    /// Symmetrization f^s.
    Symm,
    /// Star inverse as a semiregular function.
    Inv,
    /// The four slice-preserving components.
    Components,
    /// The 4x4 matrix representation.
    Matrep,
    /// det M_f (checked against (f^s)^2).
    Det,
    /// exp* series (float backend).
    Exp,
    /// log* series (float backend).
    Log,
    /// Classified zero set.
    Zeros,
    /// Polynomial with prescribed zeros.
    BuildZeros,
    /// Semiregular function with prescribed zeros and poles.
    Divisor,
    /// Taylor jet at a point.
    Jet,
    /// Spherical jet at an anchor on a sphere.
    Sjet,
    /// Jet interpolation.
    Interpolate,
    /// Additive Cartan splitting on an annulus.
    SplitAdd,
    /// Multiplicative Cartan splitting on an annulus (float backend).
    SplitMul,
    /// Chain gluing of transition data.
    Glue,
}

impl Cmd {
    fn name(self) -> &'static str {
        match self {
            Cmd::Run => "run",
            Cmd::Eval => "eval",
            Cmd::Mul => "mul",
            Cmd::Conj => "conj",
            Cmd::Symm => "symm",
            Cmd::Inv => "inv",
            Cmd::Components => "components",
            Cmd::Matrep => "matrep",
            Cmd::Det => "det",
            Cmd::Exp => "exp",
            Cmd::Log => "log",
            Cmd::Zeros => "zeros",
            Cmd::BuildZeros => "build-zeros",
            Cmd::Divisor => "divisor",
            Cmd::Jet => "jet",
            Cmd::Sjet => "sjet",
            Cmd::Interpolate => "interpolate",
            Cmd::SplitAdd => "split-add",
            Cmd::SplitMul => "split-mul",
            Cmd::Glue => "glue",
        }
    }
}

/// Request-level knobs, CLI flags as defaults.
#[derive(Clone, Debug)]
struct Opts {
    trunc: usize,
    tolerance: Option<f64>,
}

enum Fail {
    /// Schema/JSON problems: exit code 2.
    Malformed(String),
    /// Library errors: exit code 1.
    Domain(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Domain(e)
    }
}

impl From<String> for Fail {
    fn from(m: String) -> Self {
        Fail::Malformed(m)
    }
}

type DispatchResult = Result<(Value, Vec<String>), Fail>;

fn obj_field<'a>(payload: &'a Value, key: &str) -> Result<&'a Value, Fail> {
    payload
        .as_object()
        .and_then(|o| o.get(key))
        .ok_or_else(|| Fail::Malformed(format!("payload needs field {key:?}")))
}

fn poly_field<S: Scalar>(payload: &Value, key: &str) -> Result<QPoly<S>, Fail> {
    Ok(sj::qpoly_from_value(obj_field(payload, key)?)?)
}

fn pair_field(payload: &Value) -> Result<AnnularPair, Fail> {
    match payload.get("pair") {
        None => Ok(AnnularPair::default()),
        Some(v) => {
            let o = v
                .as_object()
                .ok_or_else(|| Fail::Malformed("pair must be an object".into()))?;
            let r_inner = o
                .get("r_inner")
                .and_then(|x| x.as_f64())
                .ok_or_else(|| Fail::Malformed("pair needs numeric r_inner".into()))?;
            let r_outer = o
                .get("r_outer")
                .and_then(|x| x.as_f64())
                .ok_or_else(|| Fail::Malformed("pair needs numeric r_outer".into()))?;
            AnnularPair::new(r_inner, r_outer)
                .map_err(|_| Fail::Malformed("pair needs 0 < r_inner < r_outer".into()))
        }
    }
}

fn u32_field(payload: &Value, key: &str) -> Result<u32, Fail> {
    payload
        .get(key)
        .and_then(|v| v.as_u64())
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Fail::Malformed(format!("payload needs small nonneg integer {key:?}")))
}

fn f64_field(payload: &Value, key: &str, default: f64) -> Result<f64, Fail> {
    match payload.get(key) {
        None => Ok(default),
        Some(v) => v
            .as_f64()
            .ok_or_else(|| Fail::Malformed(format!("{key} must be a number"))),
    }
}

fn dispatch<S: Scalar>(cmd: &str, payload: &Value, opts: &Opts) -> DispatchResult {
    match cmd {
        "eval" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let q = sj::quat_from_value::<S>(obj_field(payload, "q")?)?;
            let v = f.evaluate(&q)?;
            Ok((json!({"value": sj::quat_to_value(&v)}), vec![]))
        }
        "mul" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let g: QPoly<S> = poly_field(payload, "g")?;
            Ok((sj::qpoly_to_value(&f.star_mul(&g)), vec![]))
        }
        "conj" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            Ok((sj::qpoly_to_value(&f.regular_conjugate()), vec![]))
        }
        "symm" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            Ok((sj::qpoly_to_value(&f.symmetrization()), vec![]))
        }
        "inv" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            Ok((sj::semiregular_to_value(&f.star_inverse()?), vec![]))
        }
        "components" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let [f0, f1, f2, f3] = f.component_decompose();
            Ok((
                json!({
                    "f0": sj::qpoly_to_value(&f0),
                    "f1": sj::qpoly_to_value(&f1),
                    "f2": sj::qpoly_to_value(&f2),
                    "f3": sj::qpoly_to_value(&f3),
                }),
                vec![],
            ))
        }
        "matrep" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            Ok((sj::matrep_to_value(&matrep::to_matrix(&f)), vec![]))
        }
        "det" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let det = matrep::det_check(&f);
            Ok((
                json!({"det": sj::qpoly_to_value(&det)}),
                vec!["verified det M_f = (f^s)^2".into()],
            ))
        }
        "exp" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let (e, depth) = matrep::exp_star_report(&f, opts.trunc)?;
            Ok((
                sj::qpoly_to_value(&e),
                vec![format!("truncation depth: {depth}")],
            ))
        }
        "log" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let radius = f64_field(payload, "radius", 1.0)?;
            let (l, depth) = matrep::log_star_radius(&f, opts.trunc, radius)?;
            Ok((
                sj::qpoly_to_value(&l),
                vec![format!("truncation depth: {depth}")],
            ))
        }
        "zeros" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let cfg = match opts.tolerance {
                None => zeros::ZeroConfig::default(),
                Some(t) => zeros::ZeroConfig {
                    cluster_tol: t,
                    value_tol: t,
                },
            };
            let records = zeros::zero_set_with(&f, &cfg)?;
            Ok((
                Value::Array(records.iter().map(sj::zero_record_to_value).collect()),
                vec![],
            ))
        }
        "build-zeros" => {
            let entries = sj::divisor_from_value::<S>(payload)?;
            let spec = Divisor::new(entries)?;
            Ok((sj::qpoly_to_value(&zeros::build_with_zeros(&spec)?), vec![]))
        }
        "divisor" => {
            let entries = sj::divisor_from_value::<S>(payload)?;
            let spec = Divisor::new(entries)?;
            Ok((
                sj::semiregular_to_value(&zeros::divisor_build(&spec)?),
                vec![],
            ))
        }
        "jet" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let q0 = sj::quat_from_value::<S>(obj_field(payload, "q0")?)?;
            let order = u32_field(payload, "order")?;
            let jet = jets::taylor_jet(&f, &q0, order)?;
            Ok((sj::taylor_jet_to_value(&jet), vec![]))
        }
        "sjet" => {
            let f: QPoly<S> = poly_field(payload, "f")?;
            let sphere = sj::sphere_from_value::<S>(obj_field(payload, "sphere")?)?;
            let anchor = sj::quat_from_value::<S>(obj_field(payload, "anchor")?)?;
            let order = u32_field(payload, "order")?;
            let jet = jets::spherical_expand(&f, &sphere, &anchor, order)?;
            Ok((sj::spherical_jet_to_value(&jet), vec![]))
        }
        "interpolate" => {
            let entries = sj::jet_spec_from_value::<S>(payload)?;
            let spec = JetSpec::new(entries)?;
            let f = jets::jet_interpolate(&spec)?;
            Ok((sj::qpoly_to_value(&f), vec![]))
        }
        "split-add" => {
            let gamma: QPoly<S> = poly_field(payload, "gamma")?;
            let pair = pair_field(payload)?;
            let r = cousin::additive_split(&gamma, &pair);
            Ok((
                json!({
                    "alpha": sj::qpoly_to_value(&r.alpha),
                    "beta": sj::qpoly_to_value(&r.beta),
                    "d_constant": r.d_constant,
                }),
                vec![format!("measured D: {}", r.d_constant)],
            ))
        }
        "split-mul" => {
            let c: QPoly<S> = poly_field(payload, "c")?;
            let pair = pair_field(payload)?;
            let eps = f64_field(payload, "eps", 1.0)?;
            let rho = f64_field(payload, "rho", 0.125)?;
            let mode = payload
                .get("mode")
                .and_then(|m| m.as_str())
                .unwrap_or("general");
            let order = match payload.get("order").and_then(|m| m.as_str()) {
                None | Some("ab") => FactorOrder::AFirst,
                Some("ba") => FactorOrder::BFirst,
                Some(other) => {
                    return Err(Fail::Malformed(format!("unknown factor order {other:?}")))
                }
            };
            let (a, b) = match mode {
                "sp" => cousin::multiplicative_split_sp(&c, &pair, eps)?,
                "general" => cousin::multiplicative_split_general(&c, &pair, eps, rho, order)?,
                other => return Err(Fail::Malformed(format!("unknown split mode {other:?}"))),
            };
            let recon = match order {
                FactorOrder::AFirst => a.star_mul(&b),
                FactorOrder::BFirst => b.star_mul(&a),
            };
            let residual = {
                let d = (&recon - &c).to_f64_poly();
                pair.boundary_samples()
                    .iter()
                    .map(|q| d.evaluate(q).map(|v| v.abs_f64()).unwrap_or(f64::NAN))
                    .fold(0.0, f64::max)
            };
            Ok((
                json!({
                    "a": sj::qpoly_to_value(&a),
                    "b": sj::qpoly_to_value(&b),
                }),
                vec![format!("reconstruction residual: {residual:e}")],
            ))
        }
        "glue" => {
            let mode = match payload.get("mode").and_then(|m| m.as_str()) {
                Some("additive") | None => GlueMode::Additive,
                Some("multiplicative") => GlueMode::Multiplicative,
                Some(other) => return Err(Fail::Malformed(format!("unknown glue mode {other:?}"))),
            };
            let raw = obj_field(payload, "transitions")?
                .as_array()
                .ok_or_else(|| Fail::Malformed("transitions must be an array".into()))?;
            let mut data = Vec::new();
            for t in raw {
                let o = t
                    .as_object()
                    .ok_or_else(|| Fail::Malformed("transition must be an object".into()))?;
                let pair = o
                    .get("pair")
                    .and_then(|p| p.as_array())
                    .filter(|p| p.len() == 2)
                    .ok_or_else(|| Fail::Malformed("transition needs pair [k, l]".into()))?;
                let k = pair[0]
                    .as_u64()
                    .ok_or_else(|| Fail::Malformed("bad region index".into()))?;
                let l = pair[1]
                    .as_u64()
                    .ok_or_else(|| Fail::Malformed("bad region index".into()))?;
                let f: QPoly<S> =
                    sj::qpoly_from_value(o.get("f").ok_or("transition needs f".to_string())?)?;
                data.push(((k as usize, l as usize), f));
            }
            let vs = cousin::glue_chain(&data, mode)?;
            Ok((
                Value::Array(vs.iter().map(sj::qpoly_to_value).collect()),
                vec![],
            ))
        }
        other => Err(Fail::Malformed(format!("unknown command {other:?}"))),
    }
}

fn response_ok(result: Value, diagnostics: Vec<String>) -> Value {
    json!({
        "status": "ok",
        "result": result,
        "diagnostics": diagnostics,
    })
}

fn response_error(code: &str, message: String) -> Value {
    json!({
        "status": "error",
        "result": {"code": code, "message": message},
        "diagnostics": [],
    })
}

#[derive(PartialEq, Eq, PartialOrd, Ord, Clone, Copy)]
enum Status {
    Ok = 0,
    DomainError = 1,
    Malformed = 2,
}

fn process_request(
    req: &Value,
    flag_backend: &Option<String>,
    opts_default: &Opts,
) -> (Value, Status) {
    let Some(obj) = req.as_object() else {
        return (
            response_error("MalformedInput", "request must be an object".into()),
            Status::Malformed,
        );
    };
    let Some(cmd) = obj.get("command").and_then(|c| c.as_str()) else {
        return (
            response_error("MalformedInput", "request needs a command string".into()),
            Status::Malformed,
        );
    };
    let empty = Value::Object(Map::new());
    let payload = obj.get("payload").unwrap_or(&empty);
    let backend = obj
        .get("backend")
        .and_then(|b| b.as_str())
        .map(str::to_string)
        .or_else(|| flag_backend.clone())
        .or_else(|| std::env::var("SRKIT_BACKEND").ok())
        .unwrap_or_else(|| "exact".into());
    let mut opts = opts_default.clone();
    if let Some(t) = obj.get("tolerances").and_then(|t| t.as_object()) {
        if let Some(n) = t.get("trunc").and_then(|n| n.as_u64()) {
            opts.trunc = n as usize;
        }
        if let Some(x) = t.get("tolerance").and_then(|n| n.as_f64()) {
            opts.tolerance = Some(x);
        }
    }
    let outcome = match backend.as_str() {
        "exact" => dispatch::<Rat>(cmd, payload, &opts),
        "float" => dispatch::<f64>(cmd, payload, &opts),
        other => {
            return (
                response_error("MalformedInput", format!("unknown backend {other:?}")),
                Status::Malformed,
            )
        }
    };
    match outcome {
        Ok((result, diagnostics)) => (response_ok(result, diagnostics), Status::Ok),
        Err(Fail::Domain(e)) => (response_error(e.code(), e.to_string()), Status::DomainError),
        Err(Fail::Malformed(m)) => (response_error("MalformedInput", m), Status::Malformed),
    }
}

fn read_input(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

fn write_output(path: &str, text: &str) -> std::io::Result<()> {
    if path == "-" {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.write_all(b"\n")?;
        Ok(())
    } else {
        std::fs::write(path, format!("{text}\n"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Opts {
        trunc: cli.trunc.unwrap_or(64),
        tolerance: cli.tolerance,
    };
    let raw = match read_input(&cli.input) {
        Ok(r) => r,
        Err(e) => {
            let resp = response_error("MalformedInput", format!("cannot read input: {e}"));
            let _ = write_output(&cli.output, &resp.to_string());
            return ExitCode::from(2);
        }
    };
    let parsed: Value = match serde_json::from_str(&raw) {
        Ok(v) => v,
        Err(e) => {
            let resp = response_error("MalformedInput", format!("invalid JSON: {e}"));
            let _ = write_output(&cli.output, &resp.to_string());
            return ExitCode::from(2);
        }
    };
    let (out, status) = match cli.command {
        Cmd::Run => match &parsed {
            Value::Array(requests) => {
                let mut worst = Status::Ok;
                let mut responses = Vec::with_capacity(requests.len());
                for req in requests {
                    let (resp, st) = process_request(req, &cli.backend, &opts);
                    worst = worst.max(st);
                    responses.push(resp);
                }
                (Value::Array(responses), worst)
            }
            single => process_request(single, &cli.backend, &opts),
        },
        cmd => {
            let req = json!({"command": cmd.name(), "payload": parsed});
            process_request(&req, &cli.backend, &opts)
        }
    };
    if write_output(&cli.output, &out.to_string()).is_err() {
        eprintln!("srkit: cannot write output");
        return ExitCode::from(2);
    }
    ExitCode::from(status as u8)
}
