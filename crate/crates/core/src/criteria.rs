//! End-to-end irreducibility pipelines.
//!
//! * at the origin: the jacobian Newton diagram of `(x, f)` is computed as the
//!   Newton diagram of `Discr_y(f(u, y) - v)` and fed to the Merle test;
//! * at `(0, y0)`: the same after the shift `y -> y + y0`;
//! * at the unique point at infinity `Q = (1 : y0 : 0)`: the polygon at
//!   infinity of `Discr_y(p(x, y) - t)` is mapped by
//!   `(i, k) -> (n(n-1) - i - n k, k)` onto the polygon at zero of the local
//!   discriminant at `Q`, which is then Merle-tested.
//!
//! Every hypothesis is checked exactly and recorded as a named precondition.
//! A failed precondition yields `Verdict::NotApplicable`, never `Reducible`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::exactpoly::{Coefficient, FormMode, Monomial, Polynomial, Var};
use crate::merle::{merle_test, GeneratorSequence, MerleVerdict};
use crate::newton::{
    apply_infinity_transform, diagram_from_polynomial, max_inclination, polygon_at_infinity, CanonicalDiagram,
    Inclination, LatticePolygon,
};
use crate::resultant::{discriminant_fiber, discriminant_surface, ResultantError};

/// Malformed input, as opposed to an inapplicable hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CriteriaError {
    #[error("the zero polynomial does not define a curve")]
    ZeroPolynomial,
    #[error("curve equations may only involve x and y, found {0}")]
    UnexpectedVariable(Var),
}

/// Why the jacobian Newton diagram cannot be computed by the discriminant
/// formula.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum JacobianError {
    #[error(transparent)]
    Input(#[from] CriteriaError),
    #[error("f has degree 0 in y")]
    DegreeZeroInY,
    #[error("leading coefficient of f in y is not constant: {0}")]
    NonConstantLeadingCoefficient(Polynomial),
    #[error(
        "f(0,y) has a multiple nonzero root; translate coordinates so the point of interest is the only one on x=0"
    )]
    NonzeroRootsNotSimple,
    #[error("input not reduced: f and df/dy share a factor")]
    NotReduced,
}

impl JacobianError {
    fn precondition_name(&self) -> &'static str {
        match self {
            JacobianError::Input(_) => "valid_input",
            JacobianError::DegreeZeroInY => "positive_y_degree",
            JacobianError::NonConstantLeadingCoefficient(_) => "constant_leading_coefficient_in_y",
            JacobianError::NonzeroRootsNotSimple => "simple_nonzero_roots",
            JacobianError::NotReduced => "reduced",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Irreducible,
    Reducible,
    Smooth,
    NotApplicable(String),
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Irreducible => "irreducible",
            Verdict::Reducible => "reducible",
            Verdict::Smooth => "smooth",
            Verdict::NotApplicable(_) => "not_applicable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Precondition {
    pub name: &'static str,
    pub pass: bool,
    pub detail: Option<String>,
}

impl Precondition {
    fn passed(name: &'static str) -> Self {
        Precondition {
            name,
            pass: true,
            detail: None,
        }
    }

    fn failed(name: &'static str, detail: impl Into<String>) -> Self {
        Precondition {
            name,
            pass: false,
            detail: Some(detail.into()),
        }
    }
}

/// The unique point at infinity `(1 : y0 : 0)` of a curve of degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointAtInfinity {
    pub y0: Coefficient,
    pub n: u32,
}

impl fmt::Display for PointAtInfinity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1:{}:0)", self.y0)
    }
}

/// Intermediate polygons of the at-infinity pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityTrace {
    pub point: PointAtInfinity,
    pub polygon_at_infinity: LatticePolygon,
    pub transformed: LatticePolygon,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityReport {
    pub verdict: Verdict,
    pub semigroup: Option<GeneratorSequence>,
    pub diagram: Option<CanonicalDiagram>,
    pub merle: Option<MerleVerdict>,
    pub preconditions: Vec<Precondition>,
    pub discriminant: Option<Polynomial>,
    /// `y0` for reports about the point `(0, y0)`.
    pub point: Option<Coefficient>,
    pub infinity: Option<InfinityTrace>,
}

impl IrreducibilityReport {
    fn new(verdict: Verdict, preconditions: Vec<Precondition>) -> Self {
        IrreducibilityReport {
            verdict,
            semigroup: None,
            diagram: None,
            merle: None,
            preconditions,
            discriminant: None,
            point: None,
            infinity: None,
        }
    }

    fn not_applicable(mut preconditions: Vec<Precondition>, failed: Precondition) -> Self {
        let reason = failed.detail.clone().unwrap_or_else(|| failed.name.to_string());
        preconditions.push(failed);
        IrreducibilityReport::new(Verdict::NotApplicable(reason), preconditions)
    }

    /// Fills verdict, semigroup and diagram from a Merle test outcome.
    fn decide(mut self, diagram: CanonicalDiagram, merle: MerleVerdict) -> Self {
        self.verdict = if merle.is_merle() {
            Verdict::Irreducible
        } else {
            Verdict::Reducible
        };
        self.semigroup = merle.generators().cloned();
        self.diagram = Some(diagram);
        self.merle = Some(merle);
        self
    }
}

fn check_curve(f: &Polynomial) -> Result<(), CriteriaError> {
    if f.is_zero() {
        return Err(CriteriaError::ZeroPolynomial);
    }
    match f.variables().into_iter().find(|v| !matches!(v, Var::X | Var::Y)) {
        Some(v) => Err(CriteriaError::UnexpectedVariable(v)),
        None => Ok(()),
    }
}

// Dense univariate helpers over Q, lowest degree first, no trailing zeros.

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn uni_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r = a.to_vec();
    let lb = b.last().expect("nonzero divisor");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let q = r.last().expect("nonempty") / lb;
        for (k, c) in b.iter().enumerate() {
            r[shift + k] -= &q * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

/// Degree of `gcd(a, b)` via the Euclidean remainder sequence.
fn uni_gcd_degree(a: Vec<BigRational>, b: Vec<BigRational>) -> usize {
    let (mut a, mut b) = (trim(a), trim(b));
    while !b.is_empty() {
        let r = uni_rem(&a, &b);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

/// `f(0, y) = c y^m q(y)` with `q(0) != 0`; true iff `q` is squarefree.
fn nonzero_roots_simple(f: &Polynomial) -> bool {
    let coeffs = f
        .evaluate_at_zero(Var::X)
        .univariate_coefficients(Var::Y)
        .expect("f(0,y) only involves y");
    let q: Vec<BigRational> = coeffs.into_iter().skip_while(Zero::is_zero).collect();
    let q = trim(q);
    if q.len() <= 2 {
        return true;
    }
    let dq: Vec<BigRational> = q
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigRational::from_integer(BigInt::from(k)))
        .collect();
    uni_gcd_degree(q, dq) == 0
}

/// Jacobian Newton diagram of `(x, f)` together with the discriminant and
/// vertex chain it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobianDiagram {
    pub discriminant: Polynomial,
    pub polygon: LatticePolygon,
    pub diagram: CanonicalDiagram,
}

pub fn jacobian_newton_diagram(f: &Polynomial) -> Result<JacobianDiagram, JacobianError> {
    check_curve(f)?;
    let n = f.degree_in(Var::Y).unwrap_or(0);
    if n == 0 {
        return Err(JacobianError::DegreeZeroInY);
    }
    let lc = f.leading_coefficient_in(Var::Y).expect("nonzero");
    if !lc.is_constant() {
        return Err(JacobianError::NonConstantLeadingCoefficient(lc));
    }
    if !nonzero_roots_simple(f) {
        return Err(JacobianError::NonzeroRootsNotSimple);
    }
    let discriminant = discriminant_surface(f).map_err(|e| match e {
        ResultantError::NonConstantLeadingCoefficient { coefficient, .. } => {
            JacobianError::NonConstantLeadingCoefficient(coefficient)
        }
        other => unreachable!("inputs were validated: {other}"),
    })?;
    // D(u, 0) = Discr_y(f(u, y)) vanishes exactly when f has a repeated factor
    if discriminant.evaluate_at_zero(Var::V).is_zero() {
        return Err(JacobianError::NotReduced);
    }
    let (polygon, diagram) =
        diagram_from_polynomial(&discriminant, (Var::U, Var::V)).expect("nonzero polynomial in u, v");
    Ok(JacobianDiagram {
        discriminant,
        polygon,
        diagram,
    })
}

fn local_pipeline(f: &Polynomial, mut preconditions: Vec<Precondition>, place: &str) -> IrreducibilityReport {
    if !f.constant_term().is_zero() {
        return IrreducibilityReport::not_applicable(
            preconditions,
            Precondition::failed(
                "passes_through_point",
                format!("the curve does not pass through {place}"),
            ),
        );
    }
    preconditions.push(Precondition::passed("passes_through_point"));
    if f.ord_at_origin() == Some(1) {
        preconditions.push(Precondition::failed("singular", format!("order 1 at {place}")));
        return IrreducibilityReport::new(Verdict::Smooth, preconditions);
    }
    preconditions.push(Precondition::passed("singular"));
    match jacobian_newton_diagram(f) {
        Err(e) => IrreducibilityReport::not_applicable(
            preconditions,
            Precondition::failed(e.precondition_name(), e.to_string()),
        ),
        Ok(jac) => {
            for name in [
                "positive_y_degree",
                "constant_leading_coefficient_in_y",
                "simple_nonzero_roots",
                "reduced",
            ] {
                preconditions.push(Precondition::passed(name));
            }
            let merle = merle_test(&jac.diagram);
            let mut report = IrreducibilityReport::new(Verdict::Reducible, preconditions);
            report.discriminant = Some(jac.discriminant);
            report.decide(jac.diagram, merle)
        }
    }
}

/// Analytic irreducibility of `f = 0` at the origin, with `l = x`.
pub fn irreducible_at_origin(f: &Polynomial) -> Result<IrreducibilityReport, CriteriaError> {
    check_curve(f)?;
    Ok(local_pipeline(f, Vec::new(), "the origin"))
}

/// Candidate `y0` with `f(0, y) = c (y - y0)^N`, verified by expansion.
fn single_root_on_axis(f0: &Polynomial, n: u32) -> Option<Coefficient> {
    let c = f0.coefficient(&Monomial::var_power(Var::Y, n));
    if c.is_zero() {
        return None;
    }
    let sub = f0.coefficient(&Monomial::var_power(Var::Y, n - 1));
    let y0 = -sub / (&c * BigRational::from_integer(BigInt::from(n)));
    let expected = (&Polynomial::var(Var::Y) - &Polynomial::constant(y0.clone()))
        .pow(n)
        .scale(&c);
    (expected == *f0).then_some(y0)
}

/// Analytic irreducibility at `(0, y0)` for a curve meeting `x = 0` only
/// there. When `y0` is `None` the point is detected from `f(0, y)`.
pub fn irreducible_at_point(f: &Polynomial, y0: Option<&Coefficient>) -> Result<IrreducibilityReport, CriteriaError> {
    check_curve(f)?;
    let mut pre = Vec::new();
    let n = f.degree_in(Var::Y).unwrap_or(0);
    if n == 0 {
        return Ok(IrreducibilityReport::not_applicable(
            pre,
            Precondition::failed("positive_y_degree", "f has degree 0 in y"),
        ));
    }
    let lc = f.leading_coefficient_in(Var::Y).expect("nonzero");
    if !lc.is_constant() {
        return Ok(IrreducibilityReport::not_applicable(
            pre,
            Precondition::failed(
                "constant_leading_coefficient_in_y",
                format!("leading coefficient of f in y is not constant: {lc}"),
            ),
        ));
    }
    let f0 = f.evaluate_at_zero(Var::X);
    let Some(found) = single_root_on_axis(&f0, n) else {
        return Ok(IrreducibilityReport::not_applicable(
            pre,
            Precondition::failed(
                "single_point_on_x0",
                format!("f(0,y) = {f0} is not c*(y - y0)^{n} with rational y0"),
            ),
        ));
    };
    if let Some(requested) = y0 {
        if *requested != found {
            return Ok(IrreducibilityReport::not_applicable(
                pre,
                Precondition::failed(
                    "single_point_on_x0",
                    format!("the curve meets x=0 only at (0,{found}), not at (0,{requested})"),
                ),
            ));
        }
    }
    pre.push(Precondition::passed("single_point_on_x0"));

    let shifted = f.substitute_shift(Var::Y, &found);
    let place = format!("(0,{found})");
    let mut report = local_pipeline(&shifted, pre, &place);
    if let Some(d_shifted) = &report.discriminant {
        let d_original = discriminant_surface(f).expect("validated above");
        report.preconditions.push(if d_original == *d_shifted {
            Precondition::passed("discriminant_shift_invariant")
        } else {
            Precondition::failed("discriminant_shift_invariant", "discriminant changed under the shift")
        });
    }
    report.point = Some(found);
    Ok(report)
}

/// The point at infinity when the highest form is `c (y - y0 x)^n`.
fn unique_point_at_infinity(p: &Polynomial) -> Result<PointAtInfinity, Precondition> {
    let n = p.total_degree().expect("nonzero");
    let form = p.leading_form(FormMode::Highest).expect("nonzero");
    let c = form.coefficient(&Monomial::var_power(Var::Y, n));
    if c.is_zero() {
        return Err(Precondition::failed(
            "point_at_infinity_not_vertical",
            format!("highest form {form} vanishes at (0:1:0)"),
        ));
    }
    let sub = form.coefficient(&Monomial::var_power(Var::Y, n - 1).with_exp(Var::X, 1));
    let y0 = -sub / (&c * BigRational::from_integer(BigInt::from(n)));
    let line = &Polynomial::var(Var::Y) - &Polynomial::var(Var::X).scale(&y0);
    if line.pow(n).scale(&c) != form {
        return Err(Precondition::failed(
            "one_point_at_infinity",
            format!("highest form {form} is not c*(y - y0*x)^{n} with rational y0"),
        ));
    }
    Ok(PointAtInfinity { y0, n })
}

/// Analytic irreducibility of the projective closure of `p = 0` at its unique
/// point at infinity.
pub fn irreducible_at_infinity(p: &Polynomial) -> Result<IrreducibilityReport, CriteriaError> {
    check_curve(p)?;
    let mut pre = Vec::new();
    let n = p.total_degree().expect("nonzero");
    if n == 0 {
        return Ok(IrreducibilityReport::not_applicable(
            pre,
            Precondition::failed("positive_degree", "p is a nonzero constant"),
        ));
    }
    pre.push(Precondition::passed("positive_degree"));
    let point = match unique_point_at_infinity(p) {
        Ok(q) => q,
        Err(failed) => return Ok(IrreducibilityReport::not_applicable(pre, failed)),
    };
    pre.push(Precondition::passed("point_at_infinity_not_vertical"));
    pre.push(Precondition::passed("one_point_at_infinity"));

    let fiber = discriminant_fiber(p).expect("the y^n coefficient is a nonzero constant");
    if fiber.evaluate_at_zero(Var::T).is_zero() {
        return Ok(IrreducibilityReport::not_applicable(
            pre,
            Precondition::failed("squarefree", "p has a multiple factor"),
        ));
    }
    pre.push(Precondition::passed("squarefree"));

    if n == 1 {
        let mut report = IrreducibilityReport::new(Verdict::Smooth, pre);
        report.discriminant = Some(fiber);
        report.infinity = Some(InfinityTrace {
            point,
            polygon_at_infinity: LatticePolygon {
                vertices: Vec::new(),
                kind: crate::newton::PolygonKind::AtInfinity,
            },
            transformed: LatticePolygon {
                vertices: Vec::new(),
                kind: crate::newton::PolygonKind::AtZero,
            },
        });
        return Ok(report);
    }

    let at_inf = polygon_at_infinity(&fiber, (Var::X, Var::T)).expect("nonzero polynomial in x, t");
    let transformed = match apply_infinity_transform(&at_inf, u64::from(n)) {
        Ok(t) => t,
        Err(e) => {
            return Ok(IrreducibilityReport::not_applicable(
                pre,
                Precondition::failed("transform_is_polygon_at_zero", e.to_string()),
            ))
        }
    };
    pre.push(Precondition::passed("transform_is_polygon_at_zero"));
    let diagram = CanonicalDiagram::from_zero_polygon(&transformed).expect("validated by the transform");
    let merle = merle_test(&diagram);
    let mut report = IrreducibilityReport::new(Verdict::Reducible, pre);
    report.discriminant = Some(fiber);
    report.infinity = Some(InfinityTrace {
        point,
        polygon_at_infinity: at_inf,
        transformed,
    });
    Ok(report.decide(diagram, merle))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AbhyankarMoh {
    Evaluated { q: Inclination, n: u32, holds: bool },
    NotApplicable(String),
}

/// `q < n` where `q` is the maximal inclination of the transformed diagram.
/// The at-infinity report is returned alongside.
pub fn abhyankar_moh_check(p: &Polynomial) -> Result<(AbhyankarMoh, IrreducibilityReport), CriteriaError> {
    let report = irreducible_at_infinity(p)?;
    let check = match (&report.verdict, &report.diagram, &report.infinity) {
        (Verdict::NotApplicable(reason), _, _) => AbhyankarMoh::NotApplicable(reason.clone()),
        (_, Some(diagram), Some(trace)) if !diagram.is_empty() => {
            let q = max_inclination(diagram).expect("nonempty");
            let n = trace.point.n;
            let holds = match q {
                Inclination::Finite(r) => u128::from(*r.numer()) < u128::from(n) * u128::from(*r.denom()),
                Inclination::Infinite => false,
            };
            AbhyankarMoh::Evaluated { q, n, holds }
        }
        _ => AbhyankarMoh::NotApplicable("degree 1: the transformed diagram is empty, so q is undefined".into()),
    };
    Ok((check, report))
}
