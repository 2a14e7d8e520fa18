//! Newton diagrams at zero, Newton polygons at infinity, and the canonical
//! decomposition of a diagram into elementary diagrams `Teis{L}{M}`.
//!
//! A diagram is stored as its canonical piece list. A compact edge from
//! `(i, j)` to `(i + L, j - M)` contributes `Teis{L}{M}`; a leftmost vertex off
//! the vertical axis at `i0` contributes the leading `Teis{i0}{inf}`, and a
//! bottom vertex above the horizontal axis at `j_r` the trailing
//! `Teis{inf}{j_r}`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::exactpoly::{Polynomial, Var};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum NewtonError {
    #[error("the zero polynomial has no Newton diagram")]
    ZeroPolynomial,
    #[error("polynomial involves {0}, which is not one of the two axis variables")]
    UnexpectedVariable(Var),
    #[error("an elementary diagram needs positive sizes and at most one infinite side")]
    InvalidElementary,
    #[error("pieces must have strictly increasing inclinations")]
    NotCanonical,
    #[error("diagram is empty")]
    EmptyDiagram,
    #[error("vertex ({i}, {k}) leaves the first quadrant under the transform with n = {n}")]
    NegativeImage { i: u64, k: u64, n: u64 },
    #[error("vertex chain is not a Newton polygon at zero: {0}")]
    NotZeroPolygon(String),
    #[error("malformed diagram string: {0}")]
    Malformed(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub i: u64,
    pub j: u64,
}

impl LatticePoint {
    pub fn new(i: u64, j: u64) -> Self {
        LatticePoint { i, j }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolygonKind {
    AtZero,
    AtInfinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolygon {
    pub vertices: Vec<LatticePoint>,
    pub kind: PolygonKind,
}

impl LatticePolygon {
    /// Checks the at-zero shape: `i` strictly increasing, `j` strictly
    /// decreasing, edge inclinations strictly increasing.
    pub fn validate_at_zero(&self) -> Result<(), NewtonError> {
        for w in self.vertices.windows(2) {
            if !(w[0].i < w[1].i && w[0].j > w[1].j) {
                return Err(NewtonError::NotZeroPolygon(format!(
                    "{} -> {} is not monotone",
                    w[0], w[1]
                )));
            }
        }
        for w in self.vertices.windows(3) {
            let (a, b, c) = (w[0], w[1], w[2]);
            // (b.i-a.i)/(a.j-b.j) < (c.i-b.i)/(b.j-c.j)
            let lhs = u128::from(b.i - a.i) * u128::from(b.j - c.j);
            let rhs = u128::from(c.i - b.i) * u128::from(a.j - b.j);
            if lhs >= rhs {
                return Err(NewtonError::NotZeroPolygon(format!("not strictly convex at {b}")));
            }
        }
        Ok(())
    }
}

/// One side of an elementary diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extent {
    Finite(u64),
    Infinite,
}

impl Extent {
    pub fn finite(self) -> Option<u64> {
        match self {
            Extent::Finite(n) => Some(n),
            Extent::Infinite => None,
        }
    }

    fn plus(self, other: Extent) -> Extent {
        match (self, other) {
            (Extent::Finite(a), Extent::Finite(b)) => Extent::Finite(a + b),
            _ => Extent::Infinite,
        }
    }
}

impl fmt::Display for Extent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extent::Finite(n) => write!(f, "{n}"),
            Extent::Infinite => write!(f, "inf"),
        }
    }
}

/// Inclination `L/M` with `L/inf = 0` and `inf/M = +inf`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inclination {
    Finite(Ratio<u64>),
    Infinite,
}

impl Ord for Inclination {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Inclination::Finite(a), Inclination::Finite(b)) => {
                // cross-multiply to avoid overflow in Ratio's comparison
                let lhs = u128::from(*a.numer()) * u128::from(*b.denom());
                let rhs = u128::from(*b.numer()) * u128::from(*a.denom());
                lhs.cmp(&rhs)
            }
            (Inclination::Finite(_), Inclination::Infinite) => Ordering::Less,
            (Inclination::Infinite, Inclination::Finite(_)) => Ordering::Greater,
            (Inclination::Infinite, Inclination::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Inclination {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Inclination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inclination::Finite(r) => write!(f, "{r}"),
            Inclination::Infinite => write!(f, "inf"),
        }
    }
}

/// `Teis{L}{M}`, the Newton diagram of `x^L + y^M`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryDiagram {
    l: Extent,
    m: Extent,
}

impl ElementaryDiagram {
    pub fn new(l: Extent, m: Extent) -> Result<Self, NewtonError> {
        match (l, m) {
            (Extent::Infinite, Extent::Infinite) | (Extent::Finite(0), _) | (_, Extent::Finite(0)) => {
                Err(NewtonError::InvalidElementary)
            }
            _ => Ok(ElementaryDiagram { l, m }),
        }
    }

    pub fn finite(l: u64, m: u64) -> Result<Self, NewtonError> {
        ElementaryDiagram::new(Extent::Finite(l), Extent::Finite(m))
    }

    pub fn l(&self) -> Extent {
        self.l
    }

    pub fn m(&self) -> Extent {
        self.m
    }

    pub fn inclination(&self) -> Inclination {
        match (self.l, self.m) {
            (Extent::Finite(l), Extent::Finite(m)) => Inclination::Finite(Ratio::new(l, m)),
            (Extent::Finite(_), Extent::Infinite) => Inclination::Finite(Ratio::from_integer(0)),
            _ => Inclination::Infinite,
        }
    }

    pub fn is_compact(&self) -> bool {
        matches!((self.l, self.m), (Extent::Finite(_), Extent::Finite(_)))
    }
}

impl fmt::Display for ElementaryDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Teis{{{}}}{{{}}}", self.l, self.m)
    }
}

/// Diagram in canonical form: pieces sorted by strictly increasing inclination.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CanonicalDiagram {
    pieces: Vec<ElementaryDiagram>,
}

impl CanonicalDiagram {
    /// The diagram of a unit, `R^2_+` itself.
    pub fn empty() -> Self {
        CanonicalDiagram::default()
    }

    pub fn new(pieces: Vec<ElementaryDiagram>) -> Result<Self, NewtonError> {
        if pieces.windows(2).any(|w| w[0].inclination() >= w[1].inclination()) {
            return Err(NewtonError::NotCanonical);
        }
        Ok(CanonicalDiagram { pieces })
    }

    /// Canonical form of an arbitrary sum of elementary diagrams.
    pub fn from_sum(pieces: impl IntoIterator<Item = ElementaryDiagram>) -> Self {
        pieces.into_iter().fold(CanonicalDiagram::empty(), |acc, p| {
            minkowski_sum(&acc, &CanonicalDiagram { pieces: vec![p] })
        })
    }

    pub fn pieces(&self) -> &[ElementaryDiagram] {
        &self.pieces
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Meets both coordinate axes, i.e. every piece is compact.
    pub fn is_convenient(&self) -> bool {
        self.pieces.iter().all(ElementaryDiagram::is_compact)
    }

    /// Re-synthesizes the vertex chain of the compact boundary.
    pub fn to_zero_polygon(&self) -> LatticePolygon {
        let mut i = 0u64;
        let mut height = 0u64;
        for p in &self.pieces {
            match (p.l, p.m) {
                (Extent::Finite(l), Extent::Infinite) => i = l,
                (_, Extent::Finite(m)) => height += m,
                _ => unreachable!("invalid elementary diagram"),
            }
        }
        let mut j = height;
        let mut vertices = vec![LatticePoint::new(i, j)];
        for p in self.pieces.iter().filter(|p| p.is_compact()) {
            i += p.l.finite().expect("compact");
            j -= p.m.finite().expect("compact");
            vertices.push(LatticePoint::new(i, j));
        }
        LatticePolygon {
            vertices,
            kind: PolygonKind::AtZero,
        }
    }

    /// Decomposes an at-zero vertex chain.
    pub fn from_zero_polygon(poly: &LatticePolygon) -> Result<Self, NewtonError> {
        poly.validate_at_zero()?;
        let Some(first) = poly.vertices.first() else {
            return Ok(CanonicalDiagram::empty());
        };
        let last = poly.vertices.last().expect("nonempty");
        let mut pieces = Vec::with_capacity(poly.vertices.len() + 1);
        if first.i > 0 {
            pieces.push(ElementaryDiagram::new(Extent::Finite(first.i), Extent::Infinite)?);
        }
        for w in poly.vertices.windows(2) {
            pieces.push(ElementaryDiagram::finite(w[1].i - w[0].i, w[0].j - w[1].j)?);
        }
        if last.j > 0 {
            pieces.push(ElementaryDiagram::new(Extent::Infinite, Extent::Finite(last.j))?);
        }
        CanonicalDiagram::new(pieces)
    }

    /// Horizontal stretch `(i, j) -> (N i, j)`.
    pub fn stretch_horizontal(&self, factor: u64) -> CanonicalDiagram {
        let scale = |e: Extent| match e {
            Extent::Finite(n) => Extent::Finite(n * factor),
            Extent::Infinite => Extent::Infinite,
        };
        CanonicalDiagram {
            pieces: self
                .pieces
                .iter()
                .map(|p| ElementaryDiagram { l: scale(p.l), m: p.m })
                .collect(),
        }
    }
}

impl fmt::Display for CanonicalDiagram {
    /// Wire format `L1,M1;L2,M2` with `inf` for an infinite side.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.pieces.iter().enumerate() {
            if idx > 0 {
                write!(f, ";")?;
            }
            write!(f, "{},{}", p.l, p.m)?;
        }
        Ok(())
    }
}

fn parse_extent(s: &str) -> Result<Extent, NewtonError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("inf") {
        return Ok(Extent::Infinite);
    }
    // bounded so that downstream sums and products cannot overflow
    let n: u32 = s
        .parse()
        .map_err(|_| NewtonError::Malformed(format!("'{s}' is neither a positive integer nor 'inf'")))?;
    Ok(Extent::Finite(u64::from(n)))
}

impl FromStr for CanonicalDiagram {
    type Err = NewtonError;

    /// Parses `L1,M1;L2,M2;...` and brings the pieces into canonical form.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(CanonicalDiagram::empty());
        }
        let mut pieces = Vec::new();
        for part in s.split(';') {
            let (l, m) = part
                .split_once(',')
                .ok_or_else(|| NewtonError::Malformed(format!("piece '{}' is not of the form L,M", part.trim())))?;
            pieces.push(ElementaryDiagram::new(parse_extent(l)?, parse_extent(m)?)?);
        }
        Ok(CanonicalDiagram::from_sum(pieces))
    }
}

/// Minkowski sum: merge by inclination, coalescing equal inclinations.
pub fn minkowski_sum(a: &CanonicalDiagram, b: &CanonicalDiagram) -> CanonicalDiagram {
    let mut out: Vec<ElementaryDiagram> = Vec::with_capacity(a.pieces.len() + b.pieces.len());
    let (mut ia, mut ib) = (a.pieces.iter().peekable(), b.pieces.iter().peekable());
    loop {
        let next = match (ia.peek(), ib.peek()) {
            (Some(pa), Some(pb)) => match pa.inclination().cmp(&pb.inclination()) {
                Ordering::Less => *ia.next().expect("peeked"),
                Ordering::Greater => *ib.next().expect("peeked"),
                Ordering::Equal => {
                    let (pa, pb) = (ia.next().expect("peeked"), ib.next().expect("peeked"));
                    ElementaryDiagram {
                        l: pa.l.plus(pb.l),
                        m: pa.m.plus(pb.m),
                    }
                }
            },
            (Some(_), None) => *ia.next().expect("peeked"),
            (None, Some(_)) => *ib.next().expect("peeked"),
            (None, None) => break,
        };
        out.push(next);
    }
    CanonicalDiagram { pieces: out }
}

fn cross(o: (i128, i128), a: (i128, i128), b: (i128, i128)) -> i128 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain; returns the strict hull in counter-clockwise
/// order starting from the lexicographically smallest point.
fn convex_hull(mut pts: Vec<(i128, i128)>) -> Vec<(i128, i128)> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut hull: Vec<(i128, i128)> = Vec::with_capacity(2 * pts.len());
    for &p in &pts {
        while hull.len() >= 2 && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

fn support(p: &Polynomial, axes: (Var, Var)) -> Result<Vec<(i128, i128)>, NewtonError> {
    if p.is_zero() {
        return Err(NewtonError::ZeroPolynomial);
    }
    if let Some(v) = p.variables().into_iter().find(|&v| v != axes.0 && v != axes.1) {
        return Err(NewtonError::UnexpectedVariable(v));
    }
    Ok(p.terms()
        .map(|(m, _)| (i128::from(m.exp(axes.0)), i128::from(m.exp(axes.1))))
        .collect())
}

fn to_point(p: (i128, i128)) -> LatticePoint {
    LatticePoint::new(p.0 as u64, p.1 as u64)
}

/// Compact boundary of `Conv(supp P + R^2_+)` and its canonical form.
pub fn diagram_from_polynomial(
    p: &Polynomial,
    axes: (Var, Var),
) -> Result<(LatticePolygon, CanonicalDiagram), NewtonError> {
    let mut pts = support(p, axes)?;
    pts.sort_unstable();
    let min_j = pts.iter().map(|p| p.1).min().expect("nonempty support");
    // lower hull, left to right, strict
    let mut chain: Vec<(i128, i128)> = Vec::new();
    for &q in &pts {
        if chain.last().is_some_and(|last| last.0 == q.0) {
            continue; // same column, larger j
        }
        while chain.len() >= 2 && cross(chain[chain.len() - 2], chain[chain.len() - 1], q) <= 0 {
            chain.pop();
        }
        chain.push(q);
    }
    let stop = chain.iter().position(|q| q.1 == min_j).expect("min attained");
    chain.truncate(stop + 1);
    let polygon = LatticePolygon {
        vertices: chain.into_iter().map(to_point).collect(),
        kind: PolygonKind::AtZero,
    };
    let diagram = CanonicalDiagram::from_zero_polygon(&polygon)?;
    Ok((polygon, diagram))
}

/// Outer boundary of `Conv(supp P ∪ {(0,0)})`, listed from the vertical-axis
/// end to the horizontal-axis end.
pub fn polygon_at_infinity(p: &Polynomial, axes: (Var, Var)) -> Result<LatticePolygon, NewtonError> {
    let mut pts = support(p, axes)?;
    pts.push((0, 0));
    let hull = convex_hull(pts);
    // the origin is the lexicographically smallest point, hence hull[0];
    // walking the rest backwards is clockwise from the vertical axis
    debug_assert_eq!(hull.first(), Some(&(0, 0)));
    Ok(LatticePolygon {
        vertices: hull.into_iter().skip(1).rev().map(to_point).collect(),
        kind: PolygonKind::AtInfinity,
    })
}

/// Vertex-wise image under `(i, k) -> (n(n-1) - i - n k, k)`.
pub fn apply_infinity_transform(poly: &LatticePolygon, n: u64) -> Result<LatticePolygon, NewtonError> {
    let top = i128::from(n) * (i128::from(n) - 1);
    let mut vertices = Vec::with_capacity(poly.vertices.len());
    for v in &poly.vertices {
        let image = top - i128::from(v.i) - i128::from(n) * i128::from(v.j);
        if image < 0 {
            return Err(NewtonError::NegativeImage { i: v.i, k: v.j, n });
        }
        vertices.push(LatticePoint::new(image as u64, v.j));
    }
    let out = LatticePolygon {
        vertices,
        kind: PolygonKind::AtZero,
    };
    out.validate_at_zero()?;
    Ok(out)
}

pub fn max_inclination(d: &CanonicalDiagram) -> Result<Inclination, NewtonError> {
    d.pieces
        .last()
        .map(ElementaryDiagram::inclination)
        .ok_or(NewtonError::EmptyDiagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;

    const UV: (Var, Var) = (Var::U, Var::V);
    const XT: (Var, Var) = (Var::X, Var::T);

    fn poly(src: &str) -> Polynomial {
        parse_polynomial(src, &Var::ALL).unwrap()
    }

    fn teis(l: u64, m: u64) -> ElementaryDiagram {
        ElementaryDiagram::finite(l, m).unwrap()
    }

    fn diag(pieces: &[(u64, u64)]) -> CanonicalDiagram {
        CanonicalDiagram::new(pieces.iter().map(|&(l, m)| teis(l, m)).collect()).unwrap()
    }

    fn pts(v: &[(u64, u64)]) -> Vec<LatticePoint> {
        v.iter().map(|&(i, j)| LatticePoint::new(i, j)).collect()
    }

    #[test]
    fn diagram_of_binomial_discriminant() {
        let (poly_, d) = diagram_from_polynomial(&poly("4*v+4*u^5"), UV).unwrap();
        assert_eq!(poly_.vertices, pts(&[(0, 1), (5, 0)]));
        assert_eq!(d, diag(&[(5, 1)]));
        assert!(d.is_convenient());
    }

    #[test]
    fn diagram_of_quartic_branch_discriminant() {
        let d = poly("-256*v^3+256*u^6*v^2+288*u^13*v-256*u^19-27*u^20");
        let (p, c) = diagram_from_polynomial(&d, UV).unwrap();
        assert_eq!(p.vertices, pts(&[(0, 3), (6, 2), (19, 0)]));
        assert_eq!(c, diag(&[(6, 1), (13, 2)]));
        assert!(c.is_convenient());
    }

    #[test]
    fn diagram_of_monomial() {
        let (p, d) = diagram_from_polynomial(&poly("u^3*v^2"), UV).unwrap();
        assert_eq!(p.vertices, pts(&[(3, 2)]));
        assert_eq!(
            d.pieces(),
            &[
                ElementaryDiagram::new(Extent::Finite(3), Extent::Infinite).unwrap(),
                ElementaryDiagram::new(Extent::Infinite, Extent::Finite(2)).unwrap(),
            ]
        );
        assert!(!d.is_convenient());
        assert_eq!(d.to_string(), "3,inf;inf,2");
    }

    #[test]
    fn diagram_skips_collinear_and_interior_points() {
        // (0,4),(2,2),(4,0) collinear; (3,3) interior
        let (p, d) = diagram_from_polynomial(&poly("v^4+u^2*v^2+u^4+u^3*v^3"), UV).unwrap();
        assert_eq!(p.vertices, pts(&[(0, 4), (4, 0)]));
        assert_eq!(d, diag(&[(4, 4)]));
    }

    #[test]
    fn diagram_errors() {
        assert_eq!(
            diagram_from_polynomial(&Polynomial::zero(), UV),
            Err(NewtonError::ZeroPolynomial)
        );
        assert_eq!(
            diagram_from_polynomial(&poly("u+x"), UV),
            Err(NewtonError::UnexpectedVariable(Var::X))
        );
    }

    #[test]
    fn unit_has_empty_diagram() {
        let (p, d) = diagram_from_polynomial(&poly("3+u*v"), UV).unwrap();
        assert_eq!(p.vertices, pts(&[(0, 0)]));
        assert!(d.is_empty());
    }

    #[test]
    fn minkowski_examples() {
        assert_eq!(
            minkowski_sum(&diag(&[(5, 1)]), &CanonicalDiagram::empty()),
            diag(&[(5, 1)])
        );
        assert_eq!(
            minkowski_sum(&diag(&[(2, 1)]), &diag(&[(5, 2)])),
            diag(&[(2, 1), (5, 2)])
        );
        assert_eq!(minkowski_sum(&diag(&[(3, 1)]), &diag(&[(3, 1)])), diag(&[(6, 2)]));
    }

    #[test]
    fn minkowski_coalesces_infinite_pieces() {
        let a: CanonicalDiagram = "2,inf;1,1".parse().unwrap();
        let b: CanonicalDiagram = "3,inf;inf,4".parse().unwrap();
        assert_eq!(minkowski_sum(&a, &b).to_string(), "5,inf;1,1;inf,4");
    }

    #[test]
    fn canonical_rejects_unsorted_pieces() {
        assert_eq!(
            CanonicalDiagram::new(vec![teis(13, 2), teis(6, 1)]),
            Err(NewtonError::NotCanonical)
        );
        assert_eq!(
            CanonicalDiagram::new(vec![teis(3, 1), teis(6, 2)]),
            Err(NewtonError::NotCanonical)
        );
    }

    #[test]
    fn elementary_rejects_degenerate_sides() {
        assert!(ElementaryDiagram::new(Extent::Infinite, Extent::Infinite).is_err());
        assert!(ElementaryDiagram::finite(0, 1).is_err());
    }

    #[test]
    fn polygon_at_infinity_examples() {
        let d = poly("(x+x^3-t)^2*(x-t)^6");
        let p = polygon_at_infinity(&d, XT).unwrap();
        assert_eq!(p.vertices, pts(&[(0, 8), (6, 6), (12, 0)]));
        assert_eq!(
            polygon_at_infinity(&poly("x^2+t^2"), XT).unwrap().vertices,
            pts(&[(0, 2), (2, 0)])
        );
        assert_eq!(
            polygon_at_infinity(&poly("1+x*t"), XT).unwrap().vertices,
            pts(&[(1, 1)])
        );
        assert!(polygon_at_infinity(&poly("5"), XT).unwrap().vertices.is_empty());
    }

    #[test]
    fn infinity_transform_examples() {
        let at_inf = LatticePolygon {
            vertices: pts(&[(0, 8), (6, 6), (12, 0)]),
            kind: PolygonKind::AtInfinity,
        };
        let image = apply_infinity_transform(&at_inf, 9).unwrap();
        assert_eq!(image.vertices, pts(&[(0, 8), (12, 6), (60, 0)]));
        assert_eq!(
            CanonicalDiagram::from_zero_polygon(&image).unwrap(),
            diag(&[(12, 2), (48, 6)])
        );

        for n in 1..6 {
            let origin = LatticePolygon {
                vertices: pts(&[(0, 0)]),
                kind: PolygonKind::AtInfinity,
            };
            assert_eq!(
                apply_infinity_transform(&origin, n).unwrap().vertices,
                pts(&[(n * (n - 1), 0)])
            );
            let top = LatticePolygon {
                vertices: pts(&[(0, n - 1)]),
                kind: PolygonKind::AtInfinity,
            };
            assert_eq!(apply_infinity_transform(&top, n).unwrap().vertices, pts(&[(0, n - 1)]));
        }
    }

    #[test]
    fn infinity_transform_rejects_negative_image() {
        let p = LatticePolygon {
            vertices: pts(&[(5, 2)]),
            kind: PolygonKind::AtInfinity,
        };
        assert_eq!(
            apply_infinity_transform(&p, 3),
            Err(NewtonError::NegativeImage { i: 5, k: 2, n: 3 })
        );
    }

    #[test]
    fn max_inclination_examples() {
        assert_eq!(
            max_inclination(&diag(&[(12, 2), (48, 6)])).unwrap(),
            Inclination::Finite(Ratio::from_integer(8))
        );
        assert_eq!(
            max_inclination(&diag(&[(5, 1)])).unwrap(),
            Inclination::Finite(Ratio::from_integer(5))
        );
        let d: CanonicalDiagram = "3,1;inf,2".parse().unwrap();
        assert_eq!(max_inclination(&d).unwrap(), Inclination::Infinite);
        assert_eq!(
            max_inclination(&CanonicalDiagram::empty()),
            Err(NewtonError::EmptyDiagram)
        );
    }

    #[test]
    fn wire_format_round_trip() {
        let d = diag(&[(6, 1), (13, 2)]);
        assert_eq!(d.to_string(), "6,1;13,2");
        assert_eq!("6,1;13,2".parse::<CanonicalDiagram>().unwrap(), d);
        assert_eq!(" 13 , 2 ; 6,1 ".parse::<CanonicalDiagram>().unwrap(), d);
        assert!("6;1".parse::<CanonicalDiagram>().is_err());
        assert!("0,1".parse::<CanonicalDiagram>().is_err());
        assert!("inf,inf".parse::<CanonicalDiagram>().is_err());
        assert!("".parse::<CanonicalDiagram>().unwrap().is_empty());
    }

    #[test]
    fn stretch_scales_horizontal_sides() {
        let d: CanonicalDiagram = "2,inf;6,1;13,2;inf,3".parse().unwrap();
        assert_eq!(d.stretch_horizontal(3).to_string(), "6,inf;18,1;39,2;inf,3");
    }

    #[test]
    fn zero_polygon_validation() {
        let bad = LatticePolygon {
            vertices: pts(&[(0, 4), (2, 2), (4, 0)]),
            kind: PolygonKind::AtZero,
        };
        assert!(bad.validate_at_zero().is_err());
        let bad = LatticePolygon {
            vertices: pts(&[(0, 4), (2, 4)]),
            kind: PolygonKind::AtZero,
        };
        assert!(bad.validate_at_zero().is_err());
    }
}
