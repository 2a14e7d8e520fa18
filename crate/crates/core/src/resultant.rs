//! Resultants and discriminants with respect to one variable.
//!
//! Resultants are Sylvester determinants evaluated by fraction-free Bareiss
//! elimination over the polynomial ring in the remaining variables. Small
//! matrices (dimension at most 4) use cofactor expansion instead.

use num_traits::{One, Zero};

use crate::exactpoly::{Coefficient, Polynomial, Var};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ResultantError {
    #[error("resultant of the zero polynomial is undefined")]
    ZeroInput,
    #[error("both polynomials have degree zero in {0}")]
    BothDegreesZero(Var),
    #[error("degree in {0} must be at least 1")]
    DegreeZero(Var),
    #[error("leading coefficient in {var} is not a nonzero constant: {coefficient}")]
    NonConstantLeadingCoefficient { var: Var, coefficient: Polynomial },
    #[error("input may only involve the variables x and y, found {0}")]
    UnexpectedVariable(Var),
}

/// Square matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(dim: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be positive");
        PolyMatrix {
            dim,
            entries: vec![Polynomial::zero(); dim * dim],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        let dim = rows.len();
        assert!(dim >= 1, "matrix dimension must be positive");
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        PolyMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = PolyMatrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Polynomial) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Polynomial]> {
        self.entries.chunks(self.dim)
    }
}

/// Sylvester matrix of `a` (degree m) and `b` (degree k) in `var`: k shifted
/// rows of the coefficients of `a`, then m shifted rows of those of `b`,
/// leading coefficients first.
pub fn sylvester_matrix(a: &Polynomial, b: &Polynomial, var: Var) -> Result<PolyMatrix, ResultantError> {
    if a.is_zero() || b.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let ca = a.coefficients_in(var);
    let cb = b.coefficients_in(var);
    let (m, k) = (ca.len() - 1, cb.len() - 1);
    if m == 0 && k == 0 {
        return Err(ResultantError::BothDegreesZero(var));
    }
    let dim = m + k;
    let mut mat = PolyMatrix::zeros(dim);
    for row in 0..k {
        for (j, c) in ca.iter().rev().enumerate() {
            mat.set(row, row + j, c.clone());
        }
    }
    for row in 0..m {
        for (j, c) in cb.iter().rev().enumerate() {
            mat.set(k + row, row + j, c.clone());
        }
    }
    Ok(mat)
}

/// Exact determinant.
pub fn determinant(mat: &PolyMatrix) -> Polynomial {
    if mat.dim() <= 4 {
        cofactor_determinant(mat)
    } else {
        bareiss_determinant(mat)
    }
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant(mat: &PolyMatrix) -> Polynomial {
    let rows: Vec<usize> = (0..mat.dim()).collect();
    let cols = rows.clone();
    laplace(mat, &rows, &cols)
}

fn laplace(mat: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
    if rows.len() == 1 {
        return mat.get(rows[0], cols[0]).clone();
    }
    let mut acc = Polynomial::zero();
    let sub_rows = &rows[1..];
    for (idx, &c) in cols.iter().enumerate() {
        let entry = mat.get(rows[0], c);
        if entry.is_zero() {
            continue;
        }
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&cc| cc != c).collect();
        let minor = entry * &laplace(mat, sub_rows, &sub_cols);
        acc = if idx % 2 == 0 { &acc + &minor } else { &acc - &minor };
    }
    acc
}

/// Fraction-free Gaussian elimination. Each division by the previous pivot
/// is exact by Sylvester's identity. Pivots are chosen among nonzero
/// candidates with the fewest terms.
pub fn bareiss_determinant(mat: &PolyMatrix) -> Polynomial {
    let n = mat.dim();
    let mut a: Vec<Vec<Polynomial>> = mat.rows().map(|r| r.to_vec()).collect();
    let mut negate = false;
    let mut prev = Polynomial::one();
    for k in 0..n - 1 {
        let pivot_row = (k..n)
            .filter(|&r| !a[r][k].is_zero())
            .min_by_key(|&r| a[r][k].num_terms());
        let Some(p) = pivot_row else {
            return Polynomial::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let (head, tail) = a.split_at_mut(k + 1);
        let pivot_line = &head[k];
        let pivot = &pivot_line[k];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let mut val = pivot * &row[j];
                if !lead.is_zero() && !pivot_line[j].is_zero() {
                    val = &val - &(&lead * &pivot_line[j]);
                }
                row[j] = val
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly by the previous pivot");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// `Res_var(a, b)`. When one side has degree zero the resultant is that
/// constant raised to the other's degree.
pub fn resultant_in(a: &Polynomial, b: &Polynomial, var: Var) -> Result<Polynomial, ResultantError> {
    if a.is_zero() || b.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let m = a.degree_in(var).unwrap_or(0);
    let k = b.degree_in(var).unwrap_or(0);
    match (m, k) {
        (0, 0) => Ok(Polynomial::one()),
        (_, 0) => Ok(b.pow(m)),
        (0, _) => Ok(a.pow(k)),
        _ => Ok(determinant(&sylvester_matrix(a, b, var)?)),
    }
}

/// `(-1)^(N(N-1)/2) Res(a, da/dvar) / lc`, requiring a constant leading
/// coefficient; 1 when the degree is 1.
pub fn discriminant_in(a: &Polynomial, var: Var) -> Result<Polynomial, ResultantError> {
    if a.is_zero() {
        return Err(ResultantError::ZeroInput);
    }
    let n = a.degree_in(var).unwrap_or(0);
    if n == 0 {
        return Err(ResultantError::DegreeZero(var));
    }
    let lc_poly = a.leading_coefficient_in(var).expect("nonzero polynomial");
    if !lc_poly.is_constant() {
        return Err(ResultantError::NonConstantLeadingCoefficient {
            var,
            coefficient: lc_poly,
        });
    }
    if n == 1 {
        return Ok(Polynomial::one());
    }
    let lc = lc_poly.constant_term();
    let res = resultant_in(a, &a.partial_derivative(var), var)?;
    let mut scale = Coefficient::one() / lc;
    if (n as u64 * (n as u64 - 1) / 2) % 2 == 1 {
        scale = -scale;
    }
    Ok(res.scale(&scale))
}

fn check_xy(f: &Polynomial) -> Result<(), ResultantError> {
    match f.variables().into_iter().find(|v| !matches!(v, Var::X | Var::Y)) {
        Some(v) => Err(ResultantError::UnexpectedVariable(v)),
        None => Ok(()),
    }
}

/// `D(u, v) = Discr_y(f(u, y) - v)` for `f` in `x, y`.
pub fn discriminant_surface(f: &Polynomial) -> Result<Polynomial, ResultantError> {
    check_xy(f)?;
    let shifted = &f.rename(Var::X, Var::U) - &Polynomial::var(Var::V);
    discriminant_in(&shifted, Var::Y)
}

/// `D_inf(x, t) = Discr_y(p(x, y) - t)` for `p` in `x, y`.
pub fn discriminant_fiber(p: &Polynomial) -> Result<Polynomial, ResultantError> {
    check_xy(p)?;
    let shifted = p - &Polynomial::var(Var::T);
    discriminant_in(&shifted, Var::Y)
}

/// `Some(c)` with `a = c * b` for a rational constant `c`, else `None`.
pub fn scalar_ratio(a: &Polynomial, b: &Polynomial) -> Option<Coefficient> {
    if a.num_terms() != b.num_terms() {
        return None;
    }
    let (ma, ca) = a.terms().next()?;
    let cb = b.coefficient(ma);
    if cb.is_zero() {
        return None;
    }
    let ratio = ca / cb;
    (b.scale(&ratio) == *a).then_some(ratio)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_polynomial;

    fn poly(src: &str) -> Polynomial {
        parse_polynomial(src, &Var::ALL).unwrap()
    }

    #[test]
    fn sylvester_layout_for_quadratic_and_linear() {
        let m = sylvester_matrix(&poly("y^2-u"), &poly("y-v"), Var::Y).unwrap();
        let expected = PolyMatrix::from_rows(vec![
            vec![poly("1"), poly("0"), poly("-u")],
            vec![poly("1"), poly("-v"), poly("0")],
            vec![poly("0"), poly("1"), poly("-v")],
        ]);
        assert_eq!(m, expected);
    }

    #[test]
    fn sylvester_dimension_is_sum_of_degrees() {
        let m = sylvester_matrix(&poly("y^4+x*y+1"), &poly("y^3-x"), Var::Y).unwrap();
        assert_eq!(m.dim(), 7);
    }

    #[test]
    fn sylvester_of_cusp_and_derivative() {
        // rows (1,0,c),(2,0,0),(0,2,0) with c = -x^3-v: det = 4c
        let m = sylvester_matrix(&poly("y^2-x^3-v"), &poly("2*y"), Var::Y).unwrap();
        assert_eq!(m.dim(), 3);
        assert_eq!(cofactor_determinant(&m), poly("-4*x^3-4*v"));
        assert_eq!(bareiss_determinant(&m), poly("-4*x^3-4*v"));
        // the discriminant carries the extra (-1)^(N(N-1)/2) = -1
        assert_eq!(discriminant_in(&poly("y^2-x^3-v"), Var::Y).unwrap(), poly("4*x^3+4*v"));
    }

    #[test]
    fn sylvester_rejects_two_constants() {
        assert_eq!(
            sylvester_matrix(&poly("3"), &poly("x"), Var::Y),
            Err(ResultantError::BothDegreesZero(Var::Y))
        );
    }

    #[test]
    fn determinant_of_identity_and_repeated_row() {
        assert_eq!(determinant(&PolyMatrix::identity(3)), Polynomial::one());
        assert_eq!(bareiss_determinant(&PolyMatrix::identity(6)), Polynomial::one());
        let row = vec![poly("x"), poly("y+1"), poly("2"), poly("x*y"), poly("0")];
        let mut rows = vec![row.clone(), row];
        rows.push(vec![poly("1"), poly("0"), poly("0"), poly("0"), poly("u")]);
        rows.push(vec![poly("0"), poly("1"), poly("x"), poly("0"), poly("0")]);
        rows.push(vec![poly("v"), poly("0"), poly("1"), poly("1"), poly("0")]);
        assert!(bareiss_determinant(&PolyMatrix::from_rows(rows)).is_zero());
    }

    #[test]
    fn bareiss_needs_row_swaps() {
        let m = PolyMatrix::from_rows(vec![
            vec![poly("0"), poly("1"), poly("0"), poly("0"), poly("0")],
            vec![poly("1"), poly("0"), poly("0"), poly("0"), poly("0")],
            vec![poly("0"), poly("0"), poly("x"), poly("0"), poly("0")],
            vec![poly("0"), poly("0"), poly("0"), poly("0"), poly("y")],
            vec![poly("0"), poly("0"), poly("0"), poly("1"), poly("0")],
        ]);
        assert_eq!(bareiss_determinant(&m), poly("x*y"));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(
            resultant_in(&poly("y^2-u"), &poly("y-v"), Var::Y).unwrap(),
            poly("v^2-u")
        );
        assert!(resultant_in(&poly("y^2-x"), &poly("y^2-x"), Var::Y).unwrap().is_zero());
        // cubic y^3 + p y + q with p -> u, q -> v
        let res = resultant_in(&poly("y^3+u*y+v"), &poly("3*y^2+u"), Var::Y).unwrap();
        assert_eq!(res, poly("4*u^3+27*v^2"));
    }

    #[test]
    fn resultant_degenerate_degrees() {
        assert_eq!(
            resultant_in(&poly("y^3+x"), &poly("x+1"), Var::Y).unwrap(),
            poly("(x+1)^3")
        );
        assert_eq!(resultant_in(&poly("2"), &poly("y^2+1"), Var::Y).unwrap(), poly("4"));
        assert_eq!(
            resultant_in(&Polynomial::zero(), &poly("y"), Var::Y),
            Err(ResultantError::ZeroInput)
        );
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(discriminant_in(&poly("y^2+v"), Var::Y).unwrap(), poly("-4*v"));
        assert_eq!(discriminant_in(&poly("y-u"), Var::Y).unwrap(), Polynomial::one());
        assert_eq!(
            discriminant_in(&poly("y^3+u*y+v"), Var::Y).unwrap(),
            poly("-4*u^3-27*v^2")
        );
        assert!(matches!(
            discriminant_in(&poly("x*y^2+1"), Var::Y),
            Err(ResultantError::NonConstantLeadingCoefficient { .. })
        ));
        assert_eq!(
            discriminant_in(&poly("x"), Var::Y),
            Err(ResultantError::DegreeZero(Var::Y))
        );
    }

    #[test]
    fn discriminant_divides_by_leading_coefficient() {
        // Res(2y^2+v, 4y) = 16v, then times -1/2
        let d2 = discriminant_in(&poly("2*y^2+v"), Var::Y).unwrap();
        assert_eq!(d2, poly("-8*v"));
    }

    #[test]
    fn discriminant_surface_of_quartic_branch() {
        let d = discriminant_surface(&poly("(y^2-x^3)^2-x^5*y")).unwrap();
        let expected = poly("-256*v^3+256*u^6*v^2+288*u^13*v-256*u^19-27*u^20");
        assert!(scalar_ratio(&d, &expected).is_some(), "{d}");
    }

    #[test]
    fn discriminant_surface_binomial() {
        let d = discriminant_surface(&poly("y^2-x^3")).unwrap();
        assert_eq!(d, poly("4*v+4*u^3"));
    }

    #[test]
    fn discriminant_surface_of_reducible_quartic() {
        let d = discriminant_surface(&poly("(y^2-x^3)^2-x^7")).unwrap();
        let expected = poly("(v-u^6+u^7)*(v+u^7)^2");
        assert!(scalar_ratio(&d, &expected).is_some(), "{d}");
    }

    #[test]
    fn discriminant_surface_rejects_foreign_variables() {
        assert_eq!(
            discriminant_surface(&poly("y^2-u")),
            Err(ResultantError::UnexpectedVariable(Var::U))
        );
    }

    #[test]
    fn discriminant_fiber_examples() {
        let d = discriminant_fiber(&poly("x+(x+y^3)^3")).unwrap();
        let expected = poly("(x+x^3-t)^2*(x-t)^6");
        assert!(scalar_ratio(&d, &expected).is_some(), "{d}");
        assert_eq!(discriminant_fiber(&poly("y^2-x")).unwrap(), poly("4*x+4*t"));
        assert_eq!(discriminant_fiber(&poly("y")).unwrap(), Polynomial::one());
    }

    #[test]
    fn scalar_ratio_detects_proportionality() {
        assert_eq!(
            scalar_ratio(&poly("2*x+4*y"), &poly("x+2*y")),
            Some(Coefficient::from_integer(2.into()))
        );
        assert_eq!(scalar_ratio(&poly("2*x+4*y"), &poly("x+3*y")), None);
        assert_eq!(scalar_ratio(&poly("x"), &poly("x+y")), None);
    }
}
