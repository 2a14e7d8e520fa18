//! Semigroup generator sequences, the diagrams `M(b0, ..., bh)` they induce,
//! and the arithmetic test deciding whether a diagram is of that form.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::newton::{CanonicalDiagram, ElementaryDiagram, Extent};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MerleError {
    #[error("a generator sequence needs at least two entries, got {0}")]
    TooShort(usize),
    #[error("generators must be positive")]
    NonPositive,
    #[error("sequence {0:?} violates the generator conditions")]
    Invalid(Vec<u64>),
    #[error("diagram sides overflow")]
    Overflow,
}

/// Outcome of checking (Z1) and (Z2) on a candidate sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorReport {
    /// `n_k = gcd(b0..b_{k-1}) / gcd(b0..b_k)` for `k = 1..h`.
    pub n: Vec<u64>,
    /// `n_k > 1` for all k and `n_1 ... n_h = b0`.
    pub z1: bool,
    /// `n_k b_k < b_{k+1}` for `k < h`.
    pub z2: bool,
}

impl GeneratorReport {
    pub fn is_valid(&self) -> bool {
        self.z1 && self.z2
    }
}

pub fn validate_generators(b: &[u64]) -> Result<GeneratorReport, MerleError> {
    if b.len() < 2 {
        return Err(MerleError::TooShort(b.len()));
    }
    if b.contains(&0) {
        return Err(MerleError::NonPositive);
    }
    let mut n = Vec::with_capacity(b.len() - 1);
    let mut g = b[0];
    for &bk in &b[1..] {
        let next = g.gcd(&bk);
        n.push(g / next);
        g = next;
    }
    let product = n.iter().try_fold(1u64, |acc, &nk| acc.checked_mul(nk));
    let z1 = n.iter().all(|&nk| nk > 1) && product == Some(b[0]);
    let z2 = (1..b.len() - 1).all(|k| u128::from(n[k - 1]) * u128::from(b[k]) < u128::from(b[k + 1]));
    Ok(GeneratorReport { n, z1, z2 })
}

/// A sequence `b0, ..., bh` (h >= 1) satisfying (Z1) and (Z2).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSequence {
    b: Vec<u64>,
    n: Vec<u64>,
}

impl GeneratorSequence {
    pub fn new(b: Vec<u64>) -> Result<Self, MerleError> {
        let report = validate_generators(&b)?;
        if !report.is_valid() {
            return Err(MerleError::Invalid(b));
        }
        Ok(GeneratorSequence { b, n: report.n })
    }

    pub fn generators(&self) -> &[u64] {
        &self.b
    }

    pub fn quotients(&self) -> &[u64] {
        &self.n
    }

    pub fn h(&self) -> usize {
        self.b.len() - 1
    }
}

impl fmt::Display for GeneratorSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.b.iter().map(u64::to_string).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// `M(b) = sum_k Teis{(n_k - 1) b_k}{(n_k - 1) n_1 ... n_{k-1}}`.
pub fn merle_diagram(seq: &GeneratorSequence) -> Result<CanonicalDiagram, MerleError> {
    let mut prefix = 1u64;
    let mut pieces = Vec::with_capacity(seq.h());
    for (k, &nk) in seq.n.iter().enumerate() {
        let l = (nk - 1).checked_mul(seq.b[k + 1]).ok_or(MerleError::Overflow)?;
        let m = (nk - 1).checked_mul(prefix).ok_or(MerleError::Overflow)?;
        pieces.push(ElementaryDiagram::finite(l, m).expect("positive sides"));
        prefix = prefix.checked_mul(nk).ok_or(MerleError::Overflow)?;
    }
    Ok(CanonicalDiagram::new(pieces).expect("Merle diagrams are canonical"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `H_i / H_{i-1}` integral for `i = 2..h`.
    I,
    /// `C_i` integral for `i = 1..h`.
    II,
    /// `gcd(C_0..C_i) = C_0 / H_i` for `i = 1..h`.
    III,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Condition::I => "i",
            Condition::II => "ii",
            Condition::III => "iii",
        };
        write!(f, "({s})")
    }
}

/// One evaluated instance of a condition at index `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    pub condition: Condition,
    pub index: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotMerleReason {
    EmptyDiagram,
    NotConvenient,
    ConditionFailed {
        condition: Condition,
        index: usize,
        detail: String,
    },
}

impl fmt::Display for NotMerleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotMerleReason::EmptyDiagram => write!(f, "empty diagram"),
            NotMerleReason::NotConvenient => write!(f, "diagram is not convenient"),
            NotMerleReason::ConditionFailed {
                condition,
                index,
                detail,
            } => write!(f, "condition {condition} fails at i={index} ({detail})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MerleOutcome {
    Merle(GeneratorSequence),
    NotMerle(NotMerleReason),
}

/// `H_0..H_h`, `C_0..C_h` and every condition evaluated, in check order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MerleTrace {
    pub h_values: Vec<BigInt>,
    pub c_values: Vec<BigRational>,
    pub checks: Vec<ConditionCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MerleVerdict {
    pub outcome: MerleOutcome,
    pub trace: MerleTrace,
}

impl MerleVerdict {
    pub fn is_merle(&self) -> bool {
        matches!(self.outcome, MerleOutcome::Merle(_))
    }

    pub fn generators(&self) -> Option<&GeneratorSequence> {
        match &self.outcome {
            MerleOutcome::Merle(seq) => Some(seq),
            MerleOutcome::NotMerle(_) => None,
        }
    }

    fn rejected(reason: NotMerleReason) -> Self {
        MerleVerdict {
            outcome: MerleOutcome::NotMerle(reason),
            trace: MerleTrace::default(),
        }
    }
}

fn fmt_gcd_args(c: &[BigRational]) -> String {
    c.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

/// Decides whether `d` is a Merle type diagram and, if so, recovers the
/// generators `(C_0, ..., C_h)`.
pub fn merle_test(d: &CanonicalDiagram) -> MerleVerdict {
    if d.is_empty() {
        return MerleVerdict::rejected(NotMerleReason::EmptyDiagram);
    }
    if !d.is_convenient() {
        return MerleVerdict::rejected(NotMerleReason::NotConvenient);
    }
    let sides: Vec<(BigInt, BigInt)> = d
        .pieces()
        .iter()
        .map(|p| match (p.l(), p.m()) {
            (Extent::Finite(l), Extent::Finite(m)) => (BigInt::from(l), BigInt::from(m)),
            _ => unreachable!("convenient diagrams are compact"),
        })
        .collect();
    let h = sides.len();

    let mut hs = vec![BigInt::one()];
    for (_, m) in &sides {
        let next = hs.last().expect("nonempty") + m;
        hs.push(next);
    }
    let mut cs = vec![BigRational::from_integer(hs[h].clone())];
    for (i, (l, m)) in sides.iter().enumerate() {
        cs.push(BigRational::new(&hs[i] * l, m.clone()));
    }

    let mut checks = Vec::new();
    for i in 2..=h {
        let q = BigRational::new(hs[i].clone(), hs[i - 1].clone());
        checks.push(ConditionCheck {
            condition: Condition::I,
            index: i,
            pass: q.is_integer(),
            detail: format!("H_{i}/H_{}={q}", i - 1),
        });
    }
    for (i, c) in cs.iter().enumerate().skip(1) {
        checks.push(ConditionCheck {
            condition: Condition::II,
            index: i,
            pass: c.is_integer(),
            detail: format!("C_{i}={c}"),
        });
    }
    if cs.iter().all(BigRational::is_integer) {
        let mut g = cs[0].to_integer();
        for i in 1..=h {
            g = g.gcd(&cs[i].to_integer());
            let expected = BigRational::new(cs[0].to_integer(), hs[i].clone());
            let pass = expected.is_integer() && expected.to_integer() == g;
            checks.push(ConditionCheck {
                condition: Condition::III,
                index: i,
                pass,
                detail: format!("gcd({})={g}, expected {expected}", fmt_gcd_args(&cs[..=i])),
            });
        }
    }

    let trace = MerleTrace {
        h_values: hs,
        c_values: cs,
        checks,
    };
    if let Some(failed) = trace.checks.iter().find(|c| !c.pass) {
        let detail = match failed.condition {
            Condition::III => {
                let i = failed.index;
                let g = trace.c_values[..=i]
                    .iter()
                    .fold(BigInt::zero(), |g, c| g.gcd(&c.to_integer()));
                let expected = BigRational::new(trace.c_values[0].to_integer(), trace.h_values[i].clone());
                format!("gcd={g}, expected {expected}")
            }
            _ => failed.detail.clone(),
        };
        return MerleVerdict {
            outcome: MerleOutcome::NotMerle(NotMerleReason::ConditionFailed {
                condition: failed.condition,
                index: failed.index,
                detail,
            }),
            trace,
        };
    }

    let b: Vec<u64> = trace
        .c_values
        .iter()
        .map(|c| {
            c.to_integer()
                .to_u64()
                .expect("generators are bounded by the diagram sides")
        })
        .collect();
    let seq = GeneratorSequence::new(b).expect("conditions (i)-(iii) imply (Z1) and (Z2)");
    MerleVerdict {
        outcome: MerleOutcome::Merle(seq),
        trace,
    }
}

impl MerleVerdict {
    /// Condition (iii) witness `gcd(C_0..C_i)` when that check ran.
    pub fn gcd_witness(&self, index: usize) -> Option<BigInt> {
        let cs = &self.trace.c_values;
        if index >= cs.len() || !cs.iter().all(BigRational::is_integer) {
            return None;
        }
        Some(cs[..=index].iter().fold(BigInt::zero(), |g, c| g.gcd(&c.to_integer())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(s: &str) -> CanonicalDiagram {
        s.parse().unwrap()
    }

    #[test]
    fn validate_examples() {
        let r = validate_generators(&[4, 6, 13]).unwrap();
        assert_eq!(r.n, vec![2, 2]);
        assert!(r.is_valid());

        let r = validate_generators(&[4, 6, 14]).unwrap();
        assert_eq!(r.n, vec![2, 1]);
        assert!(!r.z1);

        let r = validate_generators(&[4, 2, 5]).unwrap();
        assert_eq!(r.n, vec![2, 2]);
        assert!(r.is_valid());
    }

    #[test]
    fn validate_z2_failure() {
        // n = (2, 2) but 2*6 = 12 is not below 11
        let r = validate_generators(&[4, 6, 11]).unwrap();
        assert!(r.z1);
        assert!(!r.z2);
    }

    #[test]
    fn validate_rejects_short_or_zero() {
        assert_eq!(validate_generators(&[]), Err(MerleError::TooShort(0)));
        assert_eq!(validate_generators(&[4]), Err(MerleError::TooShort(1)));
        assert_eq!(validate_generators(&[4, 0]), Err(MerleError::NonPositive));
    }

    #[test]
    fn merle_diagram_examples() {
        let d = |b: &[u64]| merle_diagram(&GeneratorSequence::new(b.to_vec()).unwrap()).unwrap();
        assert_eq!(d(&[2, 5]), diag("5,1"));
        assert_eq!(d(&[5, 2]), diag("8,4"));
        assert_eq!(d(&[4, 2, 5]), diag("2,1;5,2"));
        assert_eq!(d(&[4, 6, 13]), diag("6,1;13,2"));
    }

    #[test]
    fn invalid_sequence_is_rejected() {
        assert_eq!(
            GeneratorSequence::new(vec![4, 6, 14]),
            Err(MerleError::Invalid(vec![4, 6, 14]))
        );
    }

    #[test]
    fn test_accepts_quartic_branch_diagram() {
        let v = merle_test(&diag("6,1;13,2"));
        assert_eq!(v.generators().unwrap().generators(), &[4, 6, 13]);
        let int = |n: i64| BigInt::from(n);
        assert_eq!(v.trace.h_values, vec![int(1), int(2), int(4)]);
        let ints: Vec<BigInt> = v.trace.c_values.iter().map(|c| c.to_integer()).collect();
        assert_eq!(ints, vec![int(4), int(6), int(13)]);
        assert!(v.trace.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn test_rejects_gcd_two_at_second_step() {
        let v = merle_test(&diag("6,1;14,2"));
        match &v.outcome {
            MerleOutcome::NotMerle(reason) => {
                assert_eq!(reason.to_string(), "condition (iii) fails at i=2 (gcd=2, expected 1)")
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(v.gcd_witness(2), Some(BigInt::from(2)));
    }

    #[test]
    fn test_rejects_two_piece_diagram_with_gcd_three() {
        let v = merle_test(&diag("12,2;48,6"));
        let ints: Vec<i64> = v
            .trace
            .c_values
            .iter()
            .map(|c| c.to_integer().to_i64().unwrap())
            .collect();
        assert_eq!(ints, vec![9, 6, 24]);
        assert_eq!(
            v.outcome,
            MerleOutcome::NotMerle(NotMerleReason::ConditionFailed {
                condition: Condition::III,
                index: 2,
                detail: "gcd=3, expected 1".into(),
            })
        );
    }

    #[test]
    fn test_rejects_non_convenient_and_empty() {
        assert_eq!(
            merle_test(&diag("inf,1")).outcome,
            MerleOutcome::NotMerle(NotMerleReason::NotConvenient)
        );
        assert_eq!(
            merle_test(&CanonicalDiagram::empty()).outcome,
            MerleOutcome::NotMerle(NotMerleReason::EmptyDiagram)
        );
    }

    #[test]
    fn condition_order_reports_first_failure() {
        // H = (1, 2, 5): H_2/H_1 = 5/2 fails (i) before anything else
        let v = merle_test(&diag("1,1;7,3"));
        match v.outcome {
            MerleOutcome::NotMerle(NotMerleReason::ConditionFailed { condition, index, .. }) => {
                assert_eq!((condition, index), (Condition::I, 2))
            }
            other => panic!("unexpected {other:?}"),
        }
        // h = 1 so (i) is vacuous; C_1 = 1*3/2 fails (ii)
        let v = merle_test(&diag("3,2"));
        match v.outcome {
            MerleOutcome::NotMerle(NotMerleReason::ConditionFailed { condition, index, .. }) => {
                assert_eq!((condition, index), (Condition::II, 1))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn doubled_cusp_diagram_is_not_merle() {
        // M(2,3) = Teis{3}{1}; doubled gives Teis{6}{2}: C = (3, 3), gcd 3 != 1
        let v = merle_test(&diag("6,2"));
        let ints: Vec<i64> = v
            .trace
            .c_values
            .iter()
            .map(|c| c.to_integer().to_i64().unwrap())
            .collect();
        assert_eq!(ints, vec![3, 3]);
        assert!(!v.is_merle());
    }

    #[test]
    fn smooth_tangent_branch() {
        // Teis{1}{1}: C = (2, 1), the sequence (2, 1)
        let v = merle_test(&diag("1,1"));
        assert_eq!(v.generators().unwrap().generators(), &[2, 1]);
    }
}
