//! The specialized symmetric-function algebra behind the sequences.
//!
//! Everything here happens under the specialization of the complete
//! homogeneous functions to
//!
//! ```text
//! h_n = 1 / (n! (x)_n),        x > 0 rational,
//! ```
//!
//! whose generating series is the hypergeometric limit function 0F1(x; z).
//! The power sums p_n of this algebra carry the coefficient sequences:
//! scaling by 2 (2n-1)! at x = 2 gives A_n, at x = 1 gives B_n.
//!
//! The power sums can be computed four independent ways:
//!
//! * [`p_newton`] — the coefficient recurrence of H' = P H,
//! * [`p_quadratic`] — the quadratic recurrence (n+x) p_{n+1} = -sum p_r p_{n-r+1},
//! * [`p_continued_fraction`] — series expansion of the truncated Gauss
//!   continued fraction 1/(x + z/(x+1 + z/(x+2 + ...))),
//! * [`p_composition`] — the explicit positive sum over compositions of
//!   n-1 (exponentially many terms; an oracle, capped by
//!   [`composition_cap`]).
//!
//! Agreement of all four is one of the strongest checks this crate runs.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{
    factorial, int, int_to_rat, neg_one_pow, rising_factorial, Int, Rat,
};
use crate::combinat::Kind;
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::report::VerificationReport;
use crate::sequences::{Method, SeqName, SequenceTable};

/// Environment variable overriding the composition-enumeration cap.
pub const COMPOSITION_CAP_ENV: &str = "NARAYANA_COMPOSITION_CAP";

const COMPOSITION_CAP_DEFAULT: usize = 22;

/// Largest n for which [`p_composition`] will enumerate (2^(n-2) terms).
pub fn composition_cap() -> usize {
    std::env::var(COMPOSITION_CAP_ENV)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(COMPOSITION_CAP_DEFAULT)
}

/// The parameter x > 0 of the specialization h_n = 1/(n! (x)_n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Specialization {
    x: Rat,
}

impl Specialization {
    pub fn new(x: Rat) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "specialization parameter must be positive, got {x}"
            )));
        }
        Ok(Specialization { x })
    }

    /// The specialization carrying a family's sequence: x = 2 for type A,
    /// x = 1 for type B.
    pub fn for_kind(kind: Kind) -> Self {
        let x = match kind {
            Kind::TypeA => 2,
            Kind::TypeB => 1,
        };
        Specialization {
            x: Rat::from_integer(int(x)),
        }
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    /// h_n = 1/(n! (x)_n); h_0 = 1, and h_n = 0 for n < 0 (the convention
    /// the Jacobi-Trudi determinant needs).
    pub fn h(&self, n: i64) -> Rat {
        if n < 0 {
            return Rat::zero();
        }
        (int_to_rat(&factorial(n as u64)) * rising_factorial(&self.x, n as u64)).recip()
    }

    /// `[h_0, ..., h_n_max]` by the ratio h_n = h_{n-1} / (n (x+n-1)).
    pub fn h_table(&self, n_max: usize) -> Vec<Rat> {
        let mut table = Vec::with_capacity(n_max + 1);
        table.push(Rat::one());
        for n in 1..=n_max as i64 {
            let step = (int_to_rat(&int(n)) * (&self.x + int_to_rat(&int(n - 1)))).recip();
            let prev: &Rat = &table[n as usize - 1];
            table.push(prev * step);
        }
        table
    }
}

impl fmt::Display for Specialization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x = {}", self.x)
    }
}

/// `[p_1, ..., p_n_max]` from the coefficient form of H' = P H:
/// n h_n = sum_{r=1..n} p_r h_{n-r}.
pub fn p_newton(spec: &Specialization, n_max: usize) -> Vec<Rat> {
    let h = spec.h_table(n_max);
    let mut p: Vec<Rat> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = int_to_rat(&int(n as i64)) * &h[n];
        for r in 1..n {
            acc -= &p[r - 1] * &h[n - r];
        }
        p.push(acc);
    }
    p
}

/// `[p_1, ..., p_n_max]` from p_1 = 1/x and the quadratic recurrence
/// (n + x) p_{n+1} = -sum_{r=1..n} p_r p_{n-r+1}.
pub fn p_quadratic(spec: &Specialization, n_max: usize) -> Vec<Rat> {
    let mut p: Vec<Rat> = Vec::with_capacity(n_max);
    p.push(spec.x().clone().recip());
    for n in 1..n_max {
        let mut acc = Rat::zero();
        for r in 1..=n {
            acc += &p[r - 1] * &p[n - r];
        }
        let den = spec.x() + int_to_rat(&int(n as i64));
        p.push(-acc / den);
    }
    p
}

/// Check the functional equation z P^2 + z P' + x P = 1 coefficientwise on
/// an externally supplied power-sum prefix: x p_1 = 1 and, for each n with
/// n+1 in range, the quadratic recurrence.
pub fn verify_functional_equation(spec: &Specialization, p: &[Rat]) -> VerificationReport {
    let check = "functional-equation".to_string();
    let range = format!("order <= {}, {spec}", p.len());
    if p.is_empty() {
        return VerificationReport::pass(check, range);
    }
    if spec.x() * &p[0] != Rat::one() {
        return VerificationReport::fail(check, range, 1, format!("x p_1 = {} != 1", spec.x() * &p[0]));
    }
    for n in 1..p.len() {
        let mut acc = Rat::zero();
        for r in 1..=n {
            acc += &p[r - 1] * &p[n - r];
        }
        let lhs = (spec.x() + int_to_rat(&int(n as i64))) * &p[n];
        let rhs = -acc;
        if lhs != rhs {
            return VerificationReport::fail(
                check,
                range,
                n as i64 + 1,
                format!("(n+x) p_{} = {lhs} but -sum = {rhs}", n + 1),
            );
        }
    }
    VerificationReport::pass(check, range)
}

fn cf_series(spec: &Specialization, n_max: usize, depth: usize) -> Vec<Rat> {
    // Convergent numerators/denominators of
    // 1/(x + z/(x+1 + z/(x+2 + ... + z/(x+depth)))) by the three-term
    // recurrence; the partial denominators are x+j for j = 0..depth.
    let mut num_prev = Polynomial::one(); // index -1
    let mut num = Polynomial::zero(); // index 0
    let mut den_prev = Polynomial::zero();
    let mut den = Polynomial::one();
    for j in 0..=depth as i64 {
        let b = spec.x() + int_to_rat(&int(j));
        let (num_next, den_next) = if j == 0 {
            // first level: partial numerator 1
            (num.scale(&b) + num_prev, den.scale(&b) + den_prev)
        } else {
            // deeper levels: partial numerator z
            (num.scale(&b) + num_prev.shift(1), den.scale(&b) + den_prev.shift(1))
        };
        num_prev = num;
        num = num_next;
        den_prev = den;
        den = den_next;
    }
    let series = &num * &den.series_reciprocal(n_max);
    (0..n_max).map(|k| series.coeff(k)).collect()
}

/// `[p_1, ..., p_n_max]` by expanding the truncated Gauss continued
/// fraction as a power series. The truncation depth n_max + 1 leaves the
/// first n_max coefficients exact; this is re-verified against depth
/// n_max + 2 and a mismatch panics, since it would mean the truncation
/// analysis is wrong.
pub fn p_continued_fraction(spec: &Specialization, n_max: usize) -> Vec<Rat> {
    let series = cf_series(spec, n_max, n_max + 1);
    let deeper = cf_series(spec, n_max, n_max + 2);
    assert_eq!(
        series, deeper,
        "continued-fraction truncation at depth {} is not stable",
        n_max + 1
    );
    series
}

/// A composition: an ordered list of strictly positive parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    /// Panics on empty or nonpositive parts.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(!parts.is_empty(), "composition must be nonempty");
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Composition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }
}

fn composition_from_mask(total: u32, mask: u64) -> Vec<u32> {
    // Bit i of mask set = cut after position i+1; runs between cuts are parts.
    let mut parts = Vec::new();
    let mut run = 1u32;
    for i in 0..total - 1 {
        if mask >> i & 1 == 1 {
            parts.push(run);
            run = 1;
        } else {
            run += 1;
        }
    }
    parts.push(run);
    parts
}

/// All 2^(total-1) compositions of `total` >= 1.
pub fn compositions_of(total: u32) -> Vec<Composition> {
    assert!(total >= 1);
    (0..1u64 << (total - 1))
        .map(|mask| Composition::new(composition_from_mask(total, mask)))
        .collect()
}

/// Sum exact rationals pairwise in rounds. The value is independent of
/// grouping; the balanced tree just keeps operand sizes matched, which is
/// dramatically cheaper than a left fold when there are many terms.
fn balanced_sum(mut terms: Vec<Rat>) -> Rat {
    if terms.is_empty() {
        return Rat::zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len() / 2 + 1);
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a + b),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().expect("nonempty")
}

/// p_n (n >= 2) as the explicit sum over the 2^(n-2) compositions
/// (k_1, ..., k_l) of n-1:
///
/// ```text
/// p_n = ((-1)^(n-1)/x) sum prod_i (1/((x+i-1)(x+i)))^(k_i) C(k_i + k_{i+1} - 1, k_{i+1})
/// ```
///
/// with k_{l+1} = 0. Each composition's contribution is assembled as one
/// integer numerator and denominator and reduced once. Enumeration is
/// parallel; exact addition makes the reduction order irrelevant.
pub fn p_composition_capped(spec: &Specialization, n: usize, cap: usize) -> Result<Rat> {
    assert!(n >= 2, "composition formula starts at n = 2");
    if n > cap {
        return Err(Error::CompositionCap { n, cap });
    }
    let total = (n - 1) as u32;

    // Numerator/denominator powers of u_i = 1/((x+i-1)(x+i)) for
    // 1 <= i <= n-1, 0 <= j <= n-1.
    let factor_pows: Vec<(Vec<Int>, Vec<Int>)> = (1..=total as i64)
        .map(|i| {
            let xi = spec.x() + int_to_rat(&int(i - 1));
            let xi1 = spec.x() + int_to_rat(&int(i));
            let u = (xi * xi1).recip();
            let mut nums = Vec::with_capacity(n);
            let mut dens = Vec::with_capacity(n);
            nums.push(Int::one());
            dens.push(Int::one());
            for j in 1..n {
                nums.push(&nums[j - 1] * u.numer());
                dens.push(&dens[j - 1] * u.denom());
            }
            (nums, dens)
        })
        .collect();
    // Small Pascal triangle for the C(k_i + k_{i+1} - 1, k_{i+1}) factors.
    let pascal: Vec<Vec<Int>> = (0..2 * total as u64).map(crate::arith::pascal_row).collect();

    let terms: Vec<Rat> = (0..1u64 << (total - 1))
        .into_par_iter()
        .map(|mask| {
            let parts = composition_from_mask(total, mask);
            let mut num = Int::one();
            let mut den = Int::one();
            for (i, &k) in parts.iter().enumerate() {
                let k_next = parts.get(i + 1).copied().unwrap_or(0);
                let (u_nums, u_dens) = &factor_pows[i];
                num *= &u_nums[k as usize];
                den *= &u_dens[k as usize];
                let b = &pascal[(k + k_next) as usize - 1][k_next as usize];
                if !b.is_one() {
                    num *= b;
                }
            }
            Rat::new(num, den)
        })
        .collect();

    Ok(int_to_rat(&neg_one_pow(n as u64 - 1)) * balanced_sum(terms) / spec.x())
}

/// [`p_composition_capped`] with the cap from the environment (default 22).
pub fn p_composition(spec: &Specialization, n: usize) -> Result<Rat> {
    p_composition_capped(spec, n, composition_cap())
}

/// `[e_0, ..., e_n_max]` via the Newton identity
/// n e_n = sum_{r=1..n} (-1)^(r-1) p_r e_{n-r}, with p from [`p_newton`].
pub fn e_values(spec: &Specialization, n_max: usize) -> Vec<Rat> {
    let p = p_newton(spec, n_max);
    let mut e = Vec::with_capacity(n_max + 1);
    e.push(Rat::one());
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for r in 1..=n {
            let term = &p[r - 1] * &e[n - r];
            if r % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / int_to_rat(&int(n as i64)));
    }
    e
}

/// Check E(z) H(-z) = 1 coefficientwise:
/// sum_{r=0..n} e_r (-1)^(n-r) h_{n-r} = 0 for 1 <= n <= n_max.
pub fn verify_e_reciprocal(spec: &Specialization, n_max: usize) -> VerificationReport {
    let check = "e-reciprocal".to_string();
    let range = format!("n <= {n_max}, {spec}");
    let e = e_values(spec, n_max);
    let h = spec.h_table(n_max);
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for r in 0..=n {
            let term = &e[r] * &h[n - r];
            if (n - r) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if !acc.is_zero() {
            return VerificationReport::fail(
                check,
                range,
                n as i64,
                format!("convolution coefficient {n} is {acc}, expected 0"),
            );
        }
    }
    VerificationReport::pass(check, range)
}

/// An integer partition: weakly decreasing positive parts. The empty
/// partition is allowed (weight 0).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidArgument(
                "partition parts must be positive".into(),
            ));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "partition parts must be weakly decreasing".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The single-row partition (n), or empty for n = 0.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition { parts: vec![] }
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The single-column partition (1^n).
    pub fn column(n: u32) -> Self {
        Partition {
            parts: vec![1; n as usize],
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

fn extend_partitions(acc: &mut Vec<Partition>, prefix: &mut Vec<u32>, remaining: u32, max_part: u32) {
    if remaining == 0 {
        acc.push(Partition {
            parts: prefix.clone(),
        });
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        prefix.push(part);
        extend_partitions(acc, prefix, remaining - part, part);
        prefix.pop();
    }
}

/// All partitions of exactly `weight`, in reverse lexicographic order.
pub fn partitions_of_weight(weight: u32) -> Vec<Partition> {
    let mut acc = Vec::new();
    extend_partitions(&mut acc, &mut Vec::new(), weight, weight.max(1));
    acc
}

/// All partitions of weight 0..=weight_max, the empty partition included.
pub fn partitions_up_to_weight(weight_max: u32) -> Vec<Partition> {
    (0..=weight_max).flat_map(partitions_of_weight).collect()
}

fn determinant(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot_row != col {
            m.swap(col, pivot_row);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for row in col + 1..n {
            if m[row][col].is_zero() {
                continue;
            }
            let factor = &m[row][col] / &pivot;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[row][c] = &m[row][c] - &sub;
            }
        }
    }
    det
}

/// Schur value s_lambda under the specialization, by the Jacobi-Trudi
/// determinant s_lambda = det(h_{lambda_i - i + j}).
pub fn schur_value(spec: &Specialization, lambda: &Partition) -> Rat {
    let len = lambda.len();
    assert!(len <= 20, "partition length capped at 20");
    if len == 0 {
        return Rat::one();
    }
    let max_index = lambda.parts()[0] as usize + len;
    let h = spec.h_table(max_index);
    let fetch = |idx: i64| -> Rat {
        if idx < 0 {
            Rat::zero()
        } else {
            h[idx as usize].clone()
        }
    };
    let matrix: Vec<Vec<Rat>> = (1..=len as i64)
        .map(|i| {
            (1..=len as i64)
                .map(|j| fetch(lambda.parts()[i as usize - 1] as i64 - i + j))
                .collect()
        })
        .collect();
    determinant(matrix)
}

/// Scale power sums into the integer coefficient sequence:
/// X_n = (-1)^(n-1) 2 (2n-1)! p_n, at x = 2 (type A) or x = 1 (type B).
pub fn upper_from_p(kind: Kind, p: &[Rat]) -> Result<Vec<Int>> {
    let what = match kind {
        Kind::TypeA => "A",
        Kind::TypeB => "B",
    };
    let mut fact = Int::one(); // (2n-1)!
    let mut out = Vec::with_capacity(p.len());
    for (i, pn) in p.iter().enumerate() {
        let n = i + 1;
        if n > 1 {
            fact *= int((2 * n as i64 - 2) * (2 * n as i64 - 1));
        }
        let value = int_to_rat(&(neg_one_pow(n as u64 - 1) * int(2) * &fact)) * pn;
        if !value.is_integer() {
            return Err(Error::IntegralityViolation {
                what: what.to_string(),
                index: n,
                value: value.to_string(),
            });
        }
        out.push(value.to_integer());
    }
    Ok(out)
}

/// A_n or B_n via Newton power sums.
pub fn power_sum_upper(kind: Kind, n_max: usize) -> Result<Vec<Int>> {
    let spec = Specialization::for_kind(kind);
    upper_from_p(kind, &p_newton(&spec, n_max))
}

/// A_n or B_n via the continued-fraction expansion.
pub fn continued_fraction_upper(kind: Kind, n_max: usize) -> Result<Vec<Int>> {
    let spec = Specialization::for_kind(kind);
    upper_from_p(kind, &p_continued_fraction(&spec, n_max))
}

/// A_n or B_n via composition enumeration (subject to the cap).
pub fn composition_upper(kind: Kind, n_max: usize) -> Result<Vec<Int>> {
    let spec = Specialization::for_kind(kind);
    let mut p = Vec::with_capacity(n_max);
    if n_max >= 1 {
        p.push(spec.x().clone().recip());
    }
    for n in 2..=n_max {
        p.push(p_composition(&spec, n)?);
    }
    upper_from_p(kind, &p)
}

/// The A sequence as a [`SequenceTable`] built from power sums at x = 2,
/// integrality and positivity checked.
pub fn bridge_a(n_max: usize) -> Result<SequenceTable> {
    SequenceTable::from_values(
        SeqName::A,
        Method::PowerSum,
        power_sum_upper(Kind::TypeA, n_max)?,
    )
}

/// The B sequence from power sums at x = 1.
pub fn bridge_b(n_max: usize) -> Result<SequenceTable> {
    SequenceTable::from_values(
        SeqName::B,
        Method::PowerSum,
        power_sum_upper(Kind::TypeB, n_max)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn spec(num: i64, den: i64) -> Specialization {
        Specialization::new(rat(num, den)).unwrap()
    }

    /// The closed forms p_1 = 1/x, p_2 = -1/(x^2 (x+1)),
    /// p_3 = 1/(x^2 (x+1)^2 (x+2)) + 1/(x^3 (x+1)^2).
    fn p3_closed(x: &Rat) -> [Rat; 3] {
        let x1 = x + Rat::one();
        let x2 = x + rat(2, 1);
        [
            x.clone().recip(),
            -(x * x * &x1).recip(),
            (x * x * &x1 * &x1 * &x2).recip() + (x * x * x * &x1 * &x1).recip(),
        ]
    }

    #[test]
    fn specialization_rejects_nonpositive() {
        assert!(Specialization::new(rat(0, 1)).is_err());
        assert!(Specialization::new(rat(-3, 7)).is_err());
    }

    #[test]
    fn h_values() {
        let s2 = spec(2, 1);
        assert_eq!(s2.h(0), rat(1, 1));
        assert_eq!(s2.h(1), rat(1, 2));
        assert_eq!(s2.h(-3), rat(0, 1));
        let s1 = spec(1, 1);
        assert_eq!(s1.h(2), rat(1, 4));
        for (n, v) in s1.h_table(8).iter().enumerate() {
            assert_eq!(*v, s1.h(n as i64));
        }
    }

    #[test]
    fn newton_matches_closed_forms() {
        for s in [spec(2, 1), spec(1, 1), spec(1, 2), spec(17, 5)] {
            let p = p_newton(&s, 3);
            assert_eq!(p, p3_closed(s.x()));
        }
        assert_eq!(p_newton(&spec(2, 1), 2), vec![rat(1, 2), rat(-1, 12)]);
        assert_eq!(p_newton(&spec(1, 1), 2), vec![rat(1, 1), rat(-1, 2)]);
    }

    #[test]
    fn quadratic_matches_newton() {
        for s in [spec(2, 1), spec(1, 1), spec(1, 2), spec(17, 5)] {
            assert_eq!(p_quadratic(&s, 25), p_newton(&s, 25));
        }
        let p = p_quadratic(&spec(2, 1), 3);
        assert_eq!(p[2], rat(1, 48));
    }

    #[test]
    fn continued_fraction_matches_newton() {
        for s in [spec(2, 1), spec(1, 1), spec(1, 2), spec(17, 5)] {
            assert_eq!(p_continued_fraction(&s, 20), p_newton(&s, 20));
        }
        assert_eq!(p_continued_fraction(&spec(2, 1), 1), vec![rat(1, 2)]);
        assert_eq!(
            p_continued_fraction(&spec(2, 1), 3),
            vec![rat(1, 2), rat(-1, 12), rat(1, 48)]
        );
    }

    #[test]
    fn composition_counts_and_values() {
        assert_eq!(compositions_of(1).len(), 1);
        assert_eq!(compositions_of(5).len(), 16);
        for total in 1..=10u32 {
            for c in compositions_of(total) {
                assert_eq!(c.total(), total);
            }
        }

        assert_eq!(p_composition(&spec(2, 1), 2).unwrap(), rat(-1, 12));
        assert_eq!(p_composition(&spec(2, 1), 3).unwrap(), rat(1, 48));
        assert_eq!(p_composition(&spec(1, 1), 3).unwrap(), rat(1, 3));
        for s in [spec(2, 1), spec(1, 2)] {
            let p = p_newton(&s, 10);
            for n in 2..=10 {
                assert_eq!(p_composition(&s, n).unwrap(), p[n - 1], "n = {n}");
            }
        }
    }

    #[test]
    fn composition_cap_enforced() {
        let err = p_composition_capped(&spec(2, 1), 23, 22).unwrap_err();
        assert!(matches!(err, Error::CompositionCap { n: 23, cap: 22 }));
    }

    #[test]
    fn functional_equation_holds_for_newton_p() {
        for s in [spec(2, 1), spec(1, 1), spec(1, 2), spec(17, 5)] {
            let p = p_newton(&s, 30);
            assert!(verify_functional_equation(&s, &p).pass);
        }
    }

    #[test]
    fn e_values_examples() {
        let e = e_values(&spec(2, 1), 2);
        assert_eq!(e[0], rat(1, 1));
        assert_eq!(e[1], rat(1, 2));
        assert_eq!(e[2], rat(1, 6));
        assert_eq!(e_values(&spec(1, 1), 1)[1], rat(1, 1));
    }

    #[test]
    fn e_reciprocal_examples() {
        assert!(verify_e_reciprocal(&spec(2, 1), 1).pass);
        assert!(verify_e_reciprocal(&spec(2, 1), 10).pass);
        assert!(verify_e_reciprocal(&spec(1, 2), 8).pass);
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1]).is_ok());
        assert!(Partition::new(vec![]).is_ok());
        assert!(Partition::new(vec![1, 3]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of_weight(4).len(), 5);
        assert_eq!(partitions_of_weight(12).len(), 77);
        // 272 = 1 + p(1) + ... + p(12)
        assert_eq!(partitions_up_to_weight(12).len(), 272);
    }

    #[test]
    fn schur_row_and_column() {
        let s = spec(2, 1);
        for n in 0..=8u32 {
            assert_eq!(schur_value(&s, &Partition::row(n)), s.h(n as i64));
        }
        let e = e_values(&s, 8);
        for n in 0..=8u32 {
            assert_eq!(schur_value(&s, &Partition::column(n)), e[n as usize]);
        }
    }

    #[test]
    fn schur_examples() {
        assert_eq!(
            schur_value(&spec(2, 1), &Partition::new(vec![1, 1]).unwrap()),
            rat(1, 6)
        );
        assert_eq!(
            schur_value(&spec(1, 1), &Partition::new(vec![2, 1]).unwrap()),
            rat(2, 9)
        );
    }

    #[test]
    fn bridges_reproduce_small_tables() {
        let a = bridge_a(3).unwrap();
        assert_eq!(a.values(), &[int(1), int(1), int(5)]);
        let b = bridge_b(2).unwrap();
        assert_eq!(b.values(), &[int(2), int(6)]);
    }
}
