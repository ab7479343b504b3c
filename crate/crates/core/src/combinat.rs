//! Catalan numbers, central binomial coefficients, Narayana polynomials of
//! both families, the lattice-walk numbers c(n,r), and the expansion
//! identities connecting them.
//!
//! The two polynomial families are
//!
//! ```text
//! C_r(z) = sum_{k=1..r} N(r,k) z^(k-1),   N(r,k) = (1/r) C(r,k-1) C(r,k)
//! W_r(z) = sum_{k=0..r} C(r,k)^2 z^k
//! ```
//!
//! with `C_0(z) = W_0(z) = 1`. At z = 1 they collapse to the Catalan and
//! central binomial numbers respectively.

use std::fmt;
use std::sync::{LazyLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{binomial, exact_div, int, int_to_rat, pascal_row, Int};
use crate::error::{Error, Result};
use crate::poly::{z_plus_one, Polynomial};
use crate::report::VerificationReport;

/// Which polynomial family: `TypeA` for C_r(z), `TypeB` for W_r(z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    TypeA,
    TypeB,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::TypeA => write!(f, "type-a"),
            Kind::TypeB => write!(f, "type-b"),
        }
    }
}

/// Catalan number C_n = C(2n,n)/(n+1).
pub fn catalan(n: u64) -> Int {
    exact_div(&binomial(2 * n, n as i64), &int(n as i64 + 1))
}

/// Central binomial coefficient W_n = C(2n,n).
pub fn central_binomial(n: u64) -> Int {
    binomial(2 * n, n as i64)
}

/// `[C_0, ..., C_n_max]` by the ratio update C_{n+1} = C_n 2(2n+1)/(n+2).
pub fn catalan_table(n_max: usize) -> Vec<Int> {
    let mut table = Vec::with_capacity(n_max + 1);
    let mut c = Int::one();
    table.push(c.clone());
    for n in 0..n_max as i64 {
        c *= int(2 * (2 * n + 1));
        c = exact_div(&c, &int(n + 2));
        table.push(c.clone());
    }
    table
}

/// `[W_0, ..., W_n_max]` by the ratio update W_{n+1} = W_n 2(2n+1)/(n+1).
pub fn central_binomial_table(n_max: usize) -> Vec<Int> {
    let mut table = Vec::with_capacity(n_max + 1);
    let mut w = Int::one();
    table.push(w.clone());
    for n in 0..n_max as i64 {
        w *= int(2 * (2 * n + 1));
        w = exact_div(&w, &int(n + 1));
        table.push(w.clone());
    }
    table
}

/// Base sequence for a family: Catalan for type A, central binomial for
/// type B. These are the values the expansion identities sum over.
pub fn base_table(kind: Kind, n_max: usize) -> Vec<Int> {
    match kind {
        Kind::TypeA => catalan_table(n_max),
        Kind::TypeB => central_binomial_table(n_max),
    }
}

/// Narayana number N(r,k) for r >= 1; zero for k < 1 or k > r.
pub fn narayana_number(r: u64, k: i64) -> Int {
    assert!(r >= 1, "narayana_number needs r >= 1");
    if k < 1 || k as u64 > r {
        return Int::zero();
    }
    exact_div(
        &(binomial(r, k - 1) * binomial(r, k)),
        &int(r as i64),
    )
}

/// A cached table of Narayana polynomials of one family.
///
/// The cache behaves as a write-once map: every entry is a pure function of
/// (kind, r), so concurrent fills produce identical values.
pub struct NarayanaFamily {
    kind: Kind,
    cache: RwLock<Vec<Polynomial>>,
}

impl NarayanaFamily {
    pub fn new(kind: Kind) -> Self {
        NarayanaFamily {
            kind,
            cache: RwLock::new(Vec::new()),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn poly(&self, r: usize) -> Polynomial {
        if let Some(p) = self.cache.read().expect("cache poisoned").get(r) {
            return p.clone();
        }
        let mut cache = self.cache.write().expect("cache poisoned");
        while cache.len() <= r {
            let next = compute_poly(self.kind, cache.len());
            cache.push(next);
        }
        cache[r].clone()
    }
}

fn compute_poly(kind: Kind, r: usize) -> Polynomial {
    match kind {
        Kind::TypeA => {
            if r == 0 {
                return Polynomial::one();
            }
            let coeffs = (1..=r as u64)
                .map(|k| int_to_rat(&narayana_number(r as u64, k as i64)))
                .collect();
            Polynomial::from_coeffs(coeffs)
        }
        Kind::TypeB => {
            let coeffs = (0..=r as i64)
                .map(|k| {
                    let b = binomial(r as u64, k);
                    int_to_rat(&(&b * &b))
                })
                .collect();
            Polynomial::from_coeffs(coeffs)
        }
    }
}

static FAMILY_A: LazyLock<NarayanaFamily> = LazyLock::new(|| NarayanaFamily::new(Kind::TypeA));
static FAMILY_B: LazyLock<NarayanaFamily> = LazyLock::new(|| NarayanaFamily::new(Kind::TypeB));

/// Narayana polynomial of the given family, cached process-wide.
pub fn narayana_poly(kind: Kind, r: usize) -> Polynomial {
    match kind {
        Kind::TypeA => FAMILY_A.poly(r),
        Kind::TypeB => FAMILY_B.poly(r),
    }
}

/// Check the expansion of a Narayana polynomial over its base sequence:
///
/// ```text
/// C_r(z) = sum_m z^m (z+1)^(r-2m-1) C(r-1,2m) C_m      (type A, r >= 1)
/// W_r(z) = sum_m z^m (z+1)^(r-2m)   C(r,2m)   W_m      (type B)
/// ```
///
/// For type A at r = 0 the generic formula has a negative exponent; both
/// sides are the constant 1 and the check degenerates to that.
pub fn verify_expansion(kind: Kind, r: usize) -> VerificationReport {
    let check = format!("expansion-{kind}");
    let range = format!("r = {r}");
    if kind == Kind::TypeA && r == 0 {
        return VerificationReport::pass(check, range);
    }

    // (z+1)^j for every exponent the sum can need.
    let max_exp = match kind {
        Kind::TypeA => r - 1,
        Kind::TypeB => r,
    };
    let mut powers = Vec::with_capacity(max_exp + 1);
    powers.push(Polynomial::one());
    for j in 0..max_exp {
        powers.push(&powers[j] * &z_plus_one());
    }

    let base = base_table(kind, r / 2);
    let mut rhs = Polynomial::zero();
    for m in 0.. {
        let (weight, exp) = match kind {
            Kind::TypeA => (binomial(r as u64 - 1, 2 * m as i64), r as i64 - 2 * m - 1),
            Kind::TypeB => (binomial(r as u64, 2 * m as i64), r as i64 - 2 * m),
        };
        if weight.is_zero() || exp < 0 {
            break;
        }
        let scalar = int_to_rat(&(weight * &base[m as usize]));
        let term = powers[exp as usize].scale(&scalar).shift(m as usize);
        rhs = &rhs + &term;
    }

    let lhs = narayana_poly(kind, r);
    if lhs == rhs {
        VerificationReport::pass(check, range)
    } else {
        VerificationReport::fail(
            check,
            range,
            r as i64,
            format!("polynomial mismatch: table gives {lhs}, expansion gives {rhs}"),
        )
    }
}

/// Sweep [`verify_expansion`] over 0 <= r <= r_max.
pub fn verify_expansion_sweep(kind: Kind, r_max: usize) -> VerificationReport {
    let range = format!("r <= {r_max}");
    for r in 0..=r_max {
        let rep = verify_expansion(kind, r);
        if !rep.pass {
            let c = rep.counterexample.expect("failed report has counterexample");
            return VerificationReport::fail(format!("expansion-{kind}"), range, c.index, c.detail);
        }
    }
    VerificationReport::pass(format!("expansion-{kind}"), range)
}

fn c_forms(
    n: u64,
    r: i64,
    row_n: &[Int],
    row_n1: &[Int],
) -> Result<Int> {
    let pick = |row: &[Int], k: i64| -> Int {
        if k < 0 || k as usize >= row.len() {
            Int::zero()
        } else {
            row[k as usize].clone()
        }
    };
    // Displayed closed form: (2/(n+1)) C(n+1,r+1) C(n+1,r-1).
    let first = int_to_rat(&(int(2) * pick(row_n1, r + 1) * pick(row_n1, r - 1)))
        / int_to_rat(&int(n as i64 + 1));
    // Determinant-style form: C(n,r-1)C(n,r) - C(n,r-2)C(n,r+1).
    let second = pick(row_n, r - 1) * pick(row_n, r) - pick(row_n, r - 2) * pick(row_n, r + 1);
    if !first.is_integer() || first.to_integer() != second {
        return Err(Error::Internal(format!(
            "c({n},{r}) closed forms disagree: {first} vs {second}"
        )));
    }
    Ok(second)
}

/// The walk number c(n,r) = (2/(n+1)) C(n+1,r+1) C(n+1,r-1), zero out of
/// range. Both closed forms are evaluated and must agree; a mismatch means
/// the arithmetic itself is broken.
pub fn c_coeff(n: u64, r: i64) -> Result<Int> {
    assert!(n >= 1, "c_coeff needs n >= 1");
    let row_n = pascal_row(n);
    let row_n1 = pascal_row(n + 1);
    c_forms(n, r, &row_n, &row_n1)
}

/// `[c(n,1), ..., c(n,n)]` in one pass over two Pascal rows.
pub fn c_row(n: u64) -> Result<Vec<Int>> {
    assert!(n >= 1, "c_row needs n >= 1");
    let row_n = pascal_row(n);
    let row_n1 = pascal_row(n + 1);
    (1..=n as i64)
        .map(|r| c_forms(n, r, &row_n, &row_n1))
        .collect()
}

/// Count n-step walks on the square lattice (steps up, down, left, right)
/// from (0,0) to (target_x, 1). With `constrained` set, every position on
/// the walk must keep y >= 0.
pub fn walk_count(n: u64, target_x: i64, constrained: bool) -> Int {
    assert!(n >= 1, "walk_count needs n >= 1");
    let n = n as usize;
    if target_x.unsigned_abs() as usize > n {
        return Int::zero();
    }
    // x offset by n; y offset by 0 (constrained) or n (free).
    let y_off = if constrained { 0 } else { n };
    let width = 2 * n + 1;
    let height = n + 1 + y_off;
    let mut cur = vec![vec![Int::zero(); height]; width];
    cur[n][y_off] = Int::one();
    for _ in 0..n {
        let mut next = vec![vec![Int::zero(); height]; width];
        for (xi, col) in cur.iter().enumerate() {
            for (yi, count) in col.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                if xi > 0 {
                    next[xi - 1][yi] += count;
                }
                if xi + 1 < width {
                    next[xi + 1][yi] += count;
                }
                if yi > 0 {
                    next[xi][yi - 1] += count;
                }
                if yi + 1 < height {
                    next[xi][yi + 1] += count;
                }
            }
        }
        cur = next;
    }
    let yi = 1 + y_off;
    if yi >= height {
        return Int::zero();
    }
    cur[(target_x + n as i64) as usize][yi].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use num_traits::Signed;

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(3), int(5));
        assert_eq!(catalan(7), int(429));
        let table = catalan_table(10);
        for (n, c) in table.iter().enumerate() {
            assert_eq!(*c, catalan(n as u64));
        }
    }

    #[test]
    fn central_binomial_values() {
        assert_eq!(central_binomial(0), int(1));
        assert_eq!(central_binomial(2), int(6));
        assert_eq!(central_binomial(5), int(252));
        let table = central_binomial_table(10);
        for (n, w) in table.iter().enumerate() {
            assert_eq!(*w, central_binomial(n as u64));
        }
    }

    #[test]
    fn narayana_number_values() {
        assert_eq!(narayana_number(4, 1), int(1));
        assert_eq!(narayana_number(3, 2), int(3));
        assert_eq!(narayana_number(4, 2), int(6));
        assert_eq!(narayana_number(4, 0), int(0));
        assert_eq!(narayana_number(4, 5), int(0));
    }

    #[test]
    fn narayana_poly_values() {
        assert_eq!(narayana_poly(Kind::TypeA, 0), Polynomial::one());
        assert_eq!(narayana_poly(Kind::TypeA, 3), Polynomial::from_ints(&[1, 3, 1]));
        assert_eq!(narayana_poly(Kind::TypeB, 2), Polynomial::from_ints(&[1, 4, 1]));
    }

    #[test]
    fn narayana_poly_degrees_and_positivity() {
        for r in 1..=25 {
            let a = narayana_poly(Kind::TypeA, r);
            assert_eq!(a.degree(), Some(r - 1));
            let b = narayana_poly(Kind::TypeB, r);
            assert_eq!(b.degree(), Some(r));
            for p in [a, b] {
                for c in p.coeffs() {
                    assert!(c.is_integer() && c.is_positive());
                }
            }
        }
    }

    #[test]
    fn poly_at_one_collapses_to_base_sequence() {
        let one = rat(1, 1);
        for r in 0..=25u64 {
            assert_eq!(
                narayana_poly(Kind::TypeA, r as usize).eval(&one),
                int_to_rat(&catalan(r))
            );
            assert_eq!(
                narayana_poly(Kind::TypeB, r as usize).eval(&one),
                int_to_rat(&central_binomial(r))
            );
        }
    }

    #[test]
    fn coefficient_symmetry() {
        for r in 1..=20u64 {
            for k in 1..=r as i64 {
                assert_eq!(
                    narayana_number(r, k),
                    narayana_number(r, r as i64 + 1 - k)
                );
            }
            let b = narayana_poly(Kind::TypeB, r as usize);
            for k in 0..=r as usize {
                assert_eq!(b.coeff(k), b.coeff(r as usize - k));
            }
        }
    }

    #[test]
    fn expansion_examples() {
        assert!(verify_expansion(Kind::TypeA, 0).pass);
        assert!(verify_expansion(Kind::TypeA, 5).pass);
        assert!(verify_expansion(Kind::TypeB, 6).pass);
        assert!(verify_expansion_sweep(Kind::TypeA, 20).pass);
        assert!(verify_expansion_sweep(Kind::TypeB, 20).pass);
    }

    #[test]
    fn c_coeff_examples() {
        assert_eq!(c_coeff(3, 2).unwrap(), int(8));
        assert_eq!(c_coeff(1, 1).unwrap(), int(1));
        assert_eq!(c_coeff(4, 5).unwrap(), int(0));
        assert_eq!(c_coeff(4, 0).unwrap(), int(0));
    }

    #[test]
    fn c_row_matches_and_is_symmetric() {
        for n in 1..=40u64 {
            let row = c_row(n).unwrap();
            for r in 1..=n as i64 {
                assert_eq!(row[r as usize - 1], c_coeff(n, r).unwrap());
                assert_eq!(row[r as usize - 1], row[(n as i64 - r + 1) as usize - 1]);
            }
        }
    }

    #[test]
    fn walk_counts() {
        assert_eq!(walk_count(1, 0, true), int(1));
        assert_eq!(walk_count(3, 0, true), int(8));
        assert_eq!(walk_count(3, 0, false), int(9));
        assert_eq!(walk_count(2, 5, true), int(0));
    }

    #[test]
    fn walks_match_closed_forms() {
        for n in 1..=8u64 {
            for r in 1..=n as i64 {
                let tx = 2 * r - n as i64 - 1;
                assert_eq!(walk_count(n, tx, true), c_coeff(n, r).unwrap());
                assert_eq!(
                    walk_count(n, tx, false),
                    binomial(n, r) * binomial(n, r - 1)
                );
            }
        }
    }
}
