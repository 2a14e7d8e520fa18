#![allow(dead_code)]

use branchcheck::resultant::PolyMatrix;
use branchcheck::{parse_polynomial, Coefficient, Monomial, Polynomial, Var};
use rand::Rng;

pub fn poly(src: &str) -> Polynomial {
    parse_polynomial(src, &[Var::X, Var::Y]).expect("test polynomial parses")
}

pub fn rational(n: i64, d: i64) -> Coefficient {
    Coefficient::new(n.into(), d.into())
}

/// Determinant as the signed sum over all permutations.
pub fn leibniz_determinant(m: &PolyMatrix) -> Polynomial {
    let n = m.dim();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = Polynomial::zero();
    permute(m, &mut perm, 0, &mut total);
    total
}

fn permute(m: &PolyMatrix, perm: &mut Vec<usize>, k: usize, total: &mut Polynomial) {
    let n = perm.len();
    if k == n {
        let inversions = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j])
            .count();
        let mut term = Polynomial::one();
        for (row, &col) in perm.iter().enumerate() {
            term = &term * m.get(row, col);
            if term.is_zero() {
                return;
            }
        }
        *total = if inversions % 2 == 0 {
            &*total + &term
        } else {
            &*total - &term
        };
        return;
    }
    for i in k..n {
        perm.swap(k, i);
        permute(m, perm, k + 1, total);
        perm.swap(k, i);
    }
}

/// Sparse polynomial in `vars` with small integer coefficients; may be zero.
pub fn random_polynomial<R: Rng>(rng: &mut R, vars: &[Var], max_degree: u32, max_terms: usize) -> Polynomial {
    let terms = rng.gen_range(0..=max_terms);
    Polynomial::from_terms((0..terms).map(|_| {
        let mut m = Monomial::one();
        for &v in vars {
            m = m.with_exp(v, rng.gen_range(0..=max_degree));
        }
        let c = rng.gen_range(-5i64..=5);
        (m, Coefficient::from_integer(c.into()))
    }))
}

pub fn random_matrix<R: Rng>(rng: &mut R, dim: usize) -> PolyMatrix {
    let rows = (0..dim)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    if rng.gen_bool(0.35) {
                        Polynomial::zero()
                    } else {
                        random_polynomial(rng, &[Var::X, Var::Y], 2, 2)
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows)
}

/// Polynomial in x, y of total degree at most `max_degree` with no constant
/// term and nonzero integer coefficients.
pub fn random_sparse_curve<R: Rng>(rng: &mut R, max_degree: u32, max_terms: usize) -> Polynomial {
    loop {
        let terms = rng.gen_range(1..=max_terms);
        let p = Polynomial::from_terms((0..terms).map(|_| {
            let d = rng.gen_range(1..=max_degree);
            let i = rng.gen_range(0..=d);
            let m = Monomial::one().with_exp(Var::X, i).with_exp(Var::Y, d - i);
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-4i64..=4);
            }
            (m, Coefficient::from_integer(c.into()))
        }));
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `y^a - x^b`.
pub fn binomial_branch(a: u32, b: u32) -> Polynomial {
    &Polynomial::var(Var::Y).pow(a) - &Polynomial::var(Var::X).pow(b)
}

/// All sequences with `h <= max_h` and entries `<= bound` satisfying the
/// generator conditions.
pub fn valid_generator_sequences(max_h: usize, bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for b0 in 2..=bound {
        let mut stack = vec![vec![b0]];
        while let Some(seq) = stack.pop() {
            if seq.len() > 1 && branchcheck::merle::validate_generators(&seq).is_ok_and(|r| r.is_valid()) {
                out.push(seq.clone());
            }
            if seq.len() > max_h {
                continue;
            }
            let g = seq.iter().fold(0, |acc, &b| gcd(acc, b));
            if g == 1 {
                continue;
            }
            for next in 1..=bound {
                if seq.len() >= 2 {
                    let prev_g = seq[..seq.len() - 1].iter().fold(0, |acc, &b| gcd(acc, b));
                    let n_prev = prev_g / g;
                    if n_prev * seq[seq.len() - 1] >= next {
                        continue;
                    }
                }
                if gcd(g, next) == g {
                    continue;
                }
                let mut ext = seq.clone();
                ext.push(next);
                stack.push(ext);
            }
        }
    }
    out.sort();
    out
}
