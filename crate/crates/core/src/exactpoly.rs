//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! The variable universe is fixed to `{x, y, u, v, t}`. Monomials are dense
//! exponent arrays over that universe, so a zero exponent is simply absent
//! from the printed form. Terms are kept in graded-lexicographic order, which
//! makes printing and hashing deterministic.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient. `BigRational` keeps itself in lowest terms with
/// a positive denominator.
pub type Coefficient = BigRational;

pub const NVARS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    U,
    V,
    T,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::X, Var::Y, Var::U, Var::V, Var::T];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Var::X => 'x',
            Var::Y => 'y',
            Var::U => 'u',
            Var::V => 'v',
            Var::T => 't',
        }
    }

    pub fn from_symbol(c: char) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.symbol() == c)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// Exponent vector over the fixed variable universe.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial([u32; NVARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NVARS])
    }

    pub fn var_power(var: Var, exp: u32) -> Self {
        let mut e = [0; NVARS];
        e[var.index()] = exp;
        Monomial(e)
    }

    pub fn from_exponents(exps: [u32; NVARS]) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32; NVARS] {
        &self.0
    }

    pub fn exp(&self, var: Var) -> u32 {
        self.0[var.index()]
    }

    pub fn with_exp(mut self, var: Var, exp: u32) -> Self {
        self.0[var.index()] = exp;
        self
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut e = other.0;
        for (a, b) in e.iter_mut().zip(self.0.iter()) {
            *a -= b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    // graded lex with x > y > u > v > t
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for var in Var::ALL {
            let e = self.exp(var);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{var}")?;
            } else {
                write!(f, "{var}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Which homogeneous component `leading_form` selects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormMode {
    Lowest,
    Highest,
}

/// Sparse polynomial; no stored coefficient is ever zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Coefficient::one())
    }

    pub fn constant(c: Coefficient) -> Self {
        Polynomial::monomial(Monomial::one(), c)
    }

    pub fn integer(n: i64) -> Self {
        Polynomial::constant(Coefficient::from_integer(BigInt::from(n)))
    }

    pub fn var(var: Var) -> Self {
        Polynomial::monomial(Monomial::var_power(var, 1), Coefficient::one())
    }

    pub fn monomial(m: Monomial, c: Coefficient) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// Builds a polynomial from terms, merging duplicates and dropping zeros.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Coefficient)>>(iter: I) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coefficient {
        self.terms.get(m).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&Monomial::one())
    }

    /// Variables with a positive exponent in some term, in universe order.
    pub fn variables(&self) -> Vec<Var> {
        Var::ALL
            .into_iter()
            .filter(|&v| self.terms.keys().any(|m| m.exp(v) > 0))
            .collect()
    }

    pub fn uses_only(&self, allowed: &[Var]) -> bool {
        self.variables().iter().all(|v| allowed.contains(v))
    }

    pub fn degree_in(&self, var: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(var)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    /// Minimal total degree of a term, i.e. the order at the origin.
    pub fn ord_at_origin(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).min()
    }

    pub fn scale(&self, c: &Coefficient) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn partial_derivative(&self, var: Var) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exp(var);
            (e > 0).then(|| (m.with_exp(var, e - 1), c * Coefficient::from_integer(e.into())))
        }))
    }

    /// Replaces `var` by `var + shift` and expands.
    pub fn substitute_shift(&self, var: Var, shift: &Coefficient) -> Polynomial {
        if shift.is_zero() {
            return self.clone();
        }
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let rest = m.with_exp(var, 0);
            // (var + shift)^e = sum binom(e,k) shift^(e-k) var^k
            let mut binom = BigInt::one();
            for k in 0..=e {
                let coeff =
                    c * Coefficient::from_integer(binom.clone()) * num_traits::pow(shift.clone(), (e - k) as usize);
                out.add_term(rest.with_exp(var, k), coeff);
                binom = binom * BigInt::from(e - k) / BigInt::from(k + 1);
            }
        }
        out
    }

    /// Replaces `var` by `var^n`.
    pub fn substitute_power(&self, var: Var, n: u32) -> Polynomial {
        assert!(n >= 1, "substitute_power needs a positive exponent");
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.with_exp(var, m.exp(var) * n), c.clone()))
                .collect(),
        }
    }

    /// Sets `var = 0`.
    pub fn evaluate_at_zero(&self, var: Var) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(var) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Homogeneous component of minimal or maximal total degree.
    pub fn leading_form(&self, mode: FormMode) -> Option<Polynomial> {
        let d = match mode {
            FormMode::Lowest => self.ord_at_origin()?,
            FormMode::Highest => self.total_degree()?,
        };
        Some(Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.total_degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        })
    }

    /// Coefficients as a polynomial in `var`: entry `k` multiplies `var^k`.
    pub fn coefficients_in(&self, var: Var) -> Vec<Polynomial> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Polynomial::zero(); deg + 1];
        if self.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            let k = m.exp(var) as usize;
            out[k].terms.insert(m.with_exp(var, 0), c.clone());
        }
        out
    }

    pub fn leading_coefficient_in(&self, var: Var) -> Option<Polynomial> {
        let deg = self.degree_in(var)?;
        Some(Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(var) == deg)
                .map(|(m, c)| (m.with_exp(var, 0), c.clone()))
                .collect(),
        })
    }

    /// Relabels `from` as `to`; `to` must not already occur.
    pub fn rename(&self, from: Var, to: Var) -> Polynomial {
        assert!(
            from == to || self.degree_in(to).unwrap_or(0) == 0,
            "rename target {to} already occurs"
        );
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let e = m.exp(from);
                    (m.with_exp(from, 0).with_exp(to, e), c.clone())
                })
                .collect(),
        }
    }

    fn leading_term(&self) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        if divisor.terms.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                terms.insert(lm.quotient_of(m), c / lc);
            }
            return Some(Polynomial { terms });
        }
        let mut rem = self.terms.clone();
        let mut quotient = Polynomial::zero();
        while let Some((m, c)) = rem.pop_last() {
            if !lm.divides(&m) {
                return None;
            }
            let qm = lm.quotient_of(&m);
            let qc = c / lc;
            for (dm, dc) in divisor.terms.iter().rev().skip(1) {
                let key = dm.mul(&qm);
                let delta = dc * &qc;
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                }
            }
            quotient.terms.insert(qm, qc);
        }
        Some(quotient)
    }

    /// Dense univariate coefficients in `var`, lowest degree first. Returns
    /// `None` if any other variable occurs.
    pub fn univariate_coefficients(&self, var: Var) -> Option<Vec<Coefficient>> {
        if !self.uses_only(&[var]) {
            return None;
        }
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Coefficient::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exp(var) as usize] = c.clone();
        }
        Some(out)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut acc: BTreeMap<Monomial, Coefficient> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(mb)).and_modify(|c| *c += &prod).or_insert(prod);
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Polynomial { terms: acc }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    /// Parser-compatible rendering, e.g. `y^4 - 2*x^3*y^2 + 1/2*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let abs = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}
