//! Command-line surface of `branchcheck`.
//!
//! Exit status: 0 for a definite answer, 2 when a hypothesis fails, 1 for
//! malformed input.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::criteria::{
    abhyankar_moh_check, irreducible_at_infinity, irreducible_at_origin, irreducible_at_point, jacobian_newton_diagram,
    AbhyankarMoh, IrreducibilityReport, JacobianError, Precondition, Verdict,
};
use crate::exactpoly::{Coefficient, Polynomial, Var};
use crate::merle::{merle_test, MerleOutcome, MerleVerdict};
use crate::newton::{CanonicalDiagram, Extent, LatticePolygon};
use crate::parser::parse_polynomial;

pub const EXIT_DEFINITE: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NOT_APPLICABLE: i32 = 2;

/// Decide analytic irreducibility of plane curve branches from Newton
/// diagrams of discriminants.
///
/// Polynomials use explicit `*` (write `x*y`, not `xy`), `^` with a natural
/// exponent, rational literals such as `3/4`, and the variables `x` and `y`.
#[derive(Debug, Parser)]
#[command(name = "branchcheck", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub output: OutputFlags,
}

#[derive(Clone, Copy, Debug, Default, Args)]
pub struct OutputFlags {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include the H/C table, condition checks, discriminant and polygons.
    #[arg(long, global = true)]
    pub trace: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreducibility at the origin.
    Local { polynomial: String },
    /// Irreducibility at (0, y0), where x=0 meets the curve only at that point.
    AtPoint {
        polynomial: String,
        /// y0 as a rational "a/b"; detected from f(0,y) when omitted.
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Irreducibility at the unique point at infinity.
    Infinity { polynomial: String },
    /// Jacobian Newton diagram of (x, f) only.
    Diagram { polynomial: String },
    /// Merle test on a diagram given as "L1,M1;L2,M2" ("inf" allowed).
    Merle { diagram: String },
    /// Abhyankar-Moh inequality q < n at the point at infinity.
    Am { polynomial: String },
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn error(message: String) -> Self {
        Output {
            code: EXIT_ERROR,
            stdout: String::new(),
            stderr: message,
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    let flags = cli.output;
    match &cli.command {
        Command::Local { polynomial } => with_poly(polynomial, |f| {
            irreducible_at_origin(&f).map(|r| render_report(&r, flags, "origin", None))
        }),
        Command::AtPoint { polynomial, point } => {
            let y0 = match point.as_deref().map(parse_rational).transpose() {
                Ok(y0) => y0,
                Err(msg) => return Output::error(msg),
            };
            with_poly(polynomial, |f| {
                irreducible_at_point(&f, y0.as_ref()).map(|r| {
                    let place = match &r.point {
                        Some(p) => format!("(0,{p})"),
                        None => "the point".to_string(),
                    };
                    render_report(&r, flags, &place, None)
                })
            })
        }
        Command::Infinity { polynomial } => with_poly(polynomial, |f| {
            irreducible_at_infinity(&f).map(|r| render_report(&r, flags, "infinity", None))
        }),
        Command::Am { polynomial } => with_poly(polynomial, |f| {
            abhyankar_moh_check(&f).map(|(am, r)| render_report(&r, flags, "infinity", Some(&am)))
        }),
        Command::Diagram { polynomial } => with_poly(polynomial, |f| Ok::<_, String>(render_diagram(&f, flags))),
        Command::Merle { diagram } => match diagram.parse::<CanonicalDiagram>() {
            Ok(d) => render_merle(&d, flags),
            Err(e) => Output::error(format!("invalid diagram: {e}")),
        },
    }
}

fn with_poly<E: std::fmt::Display>(src: &str, body: impl FnOnce(Polynomial) -> Result<Output, E>) -> Output {
    match parse_polynomial(src, &[Var::X, Var::Y]) {
        Ok(f) => body(f).unwrap_or_else(|e| Output::error(format!("error: {e}"))),
        Err(e) => Output::error(e.render(src)),
    }
}

fn parse_rational(src: &str) -> Result<Coefficient, String> {
    src.trim()
        .parse::<Coefficient>()
        .map_err(|_| format!("invalid point '{src}': expected a rational a/b"))
}

fn extent_json(e: Extent) -> Value {
    match e {
        Extent::Finite(n) => json!(n),
        Extent::Infinite => json!("inf"),
    }
}

fn diagram_json(d: &CanonicalDiagram) -> Value {
    Value::Array(
        d.pieces()
            .iter()
            .map(|p| json!([extent_json(p.l()), extent_json(p.m())]))
            .collect(),
    )
}

fn polygon_json(p: &LatticePolygon) -> Value {
    Value::Array(p.vertices.iter().map(|v| json!([v.i, v.j])).collect())
}

fn trace_json(m: &MerleVerdict) -> Value {
    let h: Vec<Value> = m
        .trace
        .h_values
        .iter()
        .map(|h| h.to_u64().map_or_else(|| json!(h.to_string()), |n| json!(n)))
        .collect();
    let c: Vec<Value> = m.trace.c_values.iter().map(|c| json!(c.to_string())).collect();
    let conditions: Vec<Value> = m
        .trace
        .checks
        .iter()
        .map(|ch| {
            json!({
                "condition": ch.condition.to_string(),
                "index": ch.index,
                "pass": ch.pass,
                "detail": ch.detail,
            })
        })
        .collect();
    json!({ "H": h, "C": c, "conditions": conditions })
}

fn preconditions_json(pre: &[Precondition]) -> Value {
    Value::Array(
        pre.iter()
            .map(|p| {
                let mut obj = Map::new();
                obj.insert("name".into(), json!(p.name));
                obj.insert("pass".into(), json!(p.pass));
                if let Some(d) = &p.detail {
                    obj.insert("detail".into(), json!(d));
                }
                Value::Object(obj)
            })
            .collect(),
    )
}

fn finish_json(obj: Map<String, Value>, code: i32) -> Output {
    let mut stdout = serde_json::to_string(&Value::Object(obj)).expect("serializable");
    stdout.push('\n');
    Output {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn verdict_code(v: &Verdict) -> i32 {
    match v {
        Verdict::NotApplicable(_) => EXIT_NOT_APPLICABLE,
        _ => EXIT_DEFINITE,
    }
}

fn verdict_sentence(r: &IrreducibilityReport, place: &str) -> String {
    match &r.verdict {
        Verdict::Irreducible => format!(
            "irreducible; semigroup {}",
            r.semigroup.as_ref().expect("irreducible reports carry a semigroup")
        ),
        Verdict::Reducible => match r.merle.as_ref().map(|m| &m.outcome) {
            Some(MerleOutcome::NotMerle(reason)) => format!("reducible; not Merle: {reason}"),
            _ => "reducible".to_string(),
        },
        Verdict::Smooth => format!("smooth at {place} (trivially irreducible)"),
        Verdict::NotApplicable(reason) => format!("not applicable: {reason}"),
    }
}

fn am_json(am: &AbhyankarMoh) -> Value {
    match am {
        AbhyankarMoh::Evaluated { q, n, holds } => json!({ "q": q.to_string(), "n": n, "holds": holds }),
        AbhyankarMoh::NotApplicable(reason) => json!({ "q": null, "n": null, "holds": null, "reason": reason }),
    }
}

fn am_sentence(am: &AbhyankarMoh) -> String {
    match am {
        AbhyankarMoh::Evaluated { q, n, holds: true } => format!("Abhyankar-Moh inequality holds: q = {q} < n = {n}"),
        AbhyankarMoh::Evaluated { q, n, holds: false } => {
            format!("Abhyankar-Moh inequality fails: q = {q} >= n = {n}")
        }
        AbhyankarMoh::NotApplicable(reason) => format!("Abhyankar-Moh check not applicable: {reason}"),
    }
}

fn diagram_line(d: &CanonicalDiagram) -> String {
    if d.is_empty() {
        return "diagram: (empty)".to_string();
    }
    let parts: Vec<String> = d.pieces().iter().map(ToString::to_string).collect();
    format!("diagram: {}", parts.join(" + "))
}

fn polygon_line(label: &str, p: &LatticePolygon) -> String {
    let parts: Vec<String> = p.vertices.iter().map(ToString::to_string).collect();
    format!("{label}: {}", parts.join(" "))
}

fn trace_table(out: &mut String, m: &MerleVerdict) {
    let t = &m.trace;
    let _ = writeln!(out, "i\tH_i\tC_i");
    for i in 0..t.h_values.len().max(t.c_values.len()) {
        let h = t.h_values.get(i).map_or(String::new(), ToString::to_string);
        let c = t.c_values.get(i).map_or(String::new(), ToString::to_string);
        let _ = writeln!(out, "{i}\t{h}\t{c}");
    }
    for ch in &t.checks {
        let status = if ch.pass { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{} i={}: {status} ({})", ch.condition, ch.index, ch.detail);
    }
}

fn render_report(r: &IrreducibilityReport, flags: OutputFlags, place: &str, am: Option<&AbhyankarMoh>) -> Output {
    let code = match am {
        Some(AbhyankarMoh::NotApplicable(_)) => EXIT_NOT_APPLICABLE,
        Some(AbhyankarMoh::Evaluated { .. }) => EXIT_DEFINITE,
        None => verdict_code(&r.verdict),
    };
    if flags.json {
        let mut obj = Map::new();
        obj.insert("verdict".into(), json!(r.verdict.name()));
        if let Verdict::NotApplicable(reason) = &r.verdict {
            obj.insert("reason".into(), json!(reason));
        }
        obj.insert(
            "semigroup".into(),
            r.semigroup.as_ref().map_or(Value::Null, |s| json!(s.generators())),
        );
        obj.insert("diagram".into(), r.diagram.as_ref().map_or(Value::Null, diagram_json));
        obj.insert(
            "trace".into(),
            match (&r.merle, flags.trace) {
                (Some(m), true) => trace_json(m),
                _ => Value::Null,
            },
        );
        obj.insert("preconditions".into(), preconditions_json(&r.preconditions));
        if let Some(y0) = &r.point {
            obj.insert("point".into(), json!(y0.to_string()));
        }
        if let Some(inf) = &r.infinity {
            obj.insert("point_at_infinity".into(), json!(inf.point.to_string()));
            obj.insert("degree".into(), json!(inf.point.n));
            if flags.trace {
                obj.insert("polygon_at_infinity".into(), polygon_json(&inf.polygon_at_infinity));
                obj.insert("transformed_polygon".into(), polygon_json(&inf.transformed));
            }
        }
        if let Some(am) = am {
            obj.insert("abhyankar_moh".into(), am_json(am));
        }
        if flags.trace {
            if let Some(d) = &r.discriminant {
                obj.insert("discriminant".into(), json!(d.to_string()));
            }
        }
        return finish_json(obj, code);
    }

    let mut out = String::new();
    if let Some(inf) = &r.infinity {
        let _ = writeln!(out, "point at infinity: {} (degree {})", inf.point, inf.point.n);
    }
    if flags.trace {
        for p in &r.preconditions {
            let status = if p.pass { "pass" } else { "FAIL" };
            match &p.detail {
                Some(d) => {
                    let _ = writeln!(out, "precondition {}: {status} ({d})", p.name);
                }
                None => {
                    let _ = writeln!(out, "precondition {}: {status}", p.name);
                }
            }
        }
        if let Some(d) = &r.discriminant {
            let _ = writeln!(out, "discriminant: {d}");
        }
        if let Some(inf) = &r.infinity {
            if !inf.polygon_at_infinity.vertices.is_empty() {
                let _ = writeln!(out, "{}", polygon_line("polygon at infinity", &inf.polygon_at_infinity));
                let _ = writeln!(out, "{}", polygon_line("transformed polygon", &inf.transformed));
            }
        }
    }
    if let Some(d) = &r.diagram {
        let _ = writeln!(out, "{}", diagram_line(d));
    }
    if flags.trace {
        if let Some(m) = &r.merle {
            trace_table(&mut out, m);
        }
    }
    let _ = writeln!(out, "{}", verdict_sentence(r, place));
    if let Some(am) = am {
        let _ = writeln!(out, "{}", am_sentence(am));
    }
    Output {
        code,
        stdout: out,
        stderr: String::new(),
    }
}

fn render_diagram(f: &Polynomial, flags: OutputFlags) -> Output {
    let result = jacobian_newton_diagram(f);
    if let Err(JacobianError::Input(e)) = &result {
        return Output::error(format!("error: {e}"));
    }
    if flags.json {
        let mut obj = Map::new();
        match &result {
            Ok(jac) => {
                obj.insert("verdict".into(), Value::Null);
                obj.insert("diagram".into(), diagram_json(&jac.diagram));
                if flags.trace {
                    obj.insert("discriminant".into(), json!(jac.discriminant.to_string()));
                    obj.insert("polygon".into(), polygon_json(&jac.polygon));
                }
            }
            Err(e) => {
                obj.insert("verdict".into(), json!("not_applicable"));
                obj.insert("reason".into(), json!(e.to_string()));
                obj.insert("diagram".into(), Value::Null);
            }
        }
        obj.insert("semigroup".into(), Value::Null);
        obj.insert("trace".into(), Value::Null);
        obj.insert("preconditions".into(), json!([]));
        let code = if result.is_ok() {
            EXIT_DEFINITE
        } else {
            EXIT_NOT_APPLICABLE
        };
        return finish_json(obj, code);
    }
    match result {
        Ok(jac) => {
            let mut out = String::new();
            if flags.trace {
                let _ = writeln!(out, "discriminant: {}", jac.discriminant);
                let _ = writeln!(out, "{}", polygon_line("polygon", &jac.polygon));
            }
            let _ = writeln!(out, "{}", diagram_line(&jac.diagram));
            Output {
                code: EXIT_DEFINITE,
                stdout: out,
                stderr: String::new(),
            }
        }
        Err(e) => Output {
            code: EXIT_NOT_APPLICABLE,
            stdout: format!("not applicable: {e}\n"),
            stderr: String::new(),
        },
    }
}

fn render_merle(d: &CanonicalDiagram, flags: OutputFlags) -> Output {
    let m = merle_test(d);
    if flags.json {
        let mut obj = Map::new();
        obj.insert(
            "verdict".into(),
            json!(if m.is_merle() { "merle" } else { "not_merle" }),
        );
        if let MerleOutcome::NotMerle(reason) = &m.outcome {
            obj.insert("reason".into(), json!(reason.to_string()));
        }
        obj.insert(
            "semigroup".into(),
            m.generators().map_or(Value::Null, |s| json!(s.generators())),
        );
        obj.insert("diagram".into(), diagram_json(d));
        obj.insert("trace".into(), if flags.trace { trace_json(&m) } else { Value::Null });
        obj.insert("preconditions".into(), json!([]));
        return finish_json(obj, EXIT_DEFINITE);
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", diagram_line(d));
    if flags.trace {
        trace_table(&mut out, &m);
    }
    match &m.outcome {
        MerleOutcome::Merle(seq) => {
            let _ = writeln!(out, "Merle; generators {seq}");
        }
        MerleOutcome::NotMerle(reason) => {
            let _ = writeln!(out, "not Merle: {reason}");
        }
    }
    Output {
        code: EXIT_DEFINITE,
        stdout: out,
        stderr: String::new(),
    }
}
