//! Exact evaluation of the finite identities tying the coefficient
//! sequences back to Catalan and central binomial numbers.
//!
//! Every identity is evaluated with independent code paths for the two
//! sides (the left side through the sequence tables, the right side
//! through binomials alone), so equality is evidence rather than
//! tautology.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{
    binomial, int, int_to_rat, neg_one_pow, rat, rat_to_int, Int, Rat,
};
use crate::combinat::{base_table, Kind};
use crate::error::{Error, Result};
use crate::report::VerificationReport;
use crate::sequences::upper_defining;

/// Both sides of one identity instance, evaluated exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub id: String,
    pub parameter: u64,
    pub lhs: Rat,
    pub rhs: Rat,
    pub pass: bool,
}

impl IdentityOutcome {
    fn new(id: impl Into<String>, parameter: u64, lhs: Rat, rhs: Rat) -> Self {
        let pass = lhs == rhs;
        IdentityOutcome {
            id: id.into(),
            parameter,
            lhs,
            rhs,
            pass,
        }
    }
}

impl fmt::Display for IdentityOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}): {} {} {}",
            self.id,
            self.parameter,
            self.lhs,
            if self.pass { "=" } else { "!=" },
            self.rhs
        )
    }
}

/// C_{r+1} - 2 C_r = (2/r) C(2r, r-2) for r >= 1.
pub fn catalan_classical(r: u64) -> IdentityOutcome {
    assert!(r >= 1);
    let cats = base_table(Kind::TypeA, r as usize + 1);
    let lhs = int_to_rat(&(&cats[r as usize + 1] - int(2) * &cats[r as usize]));
    let rhs = Rat::new(int(2) * binomial(2 * r, r as i64 - 2), int(r as i64));
    IdentityOutcome::new("catalan-classical", r, lhs, rhs)
}

fn z1_with(kind: Kind, n: u64, upper: &[Int]) -> IdentityOutcome {
    assert!(n >= 2);
    let base = base_table(kind, n as usize + 1);
    let mut lhs = Rat::zero();
    let mut m = 1i64;
    loop {
        let weight = match kind {
            Kind::TypeA => binomial(n - 1, 2 * m - 1),
            Kind::TypeB => binomial(n, 2 * m - 1),
        };
        if num_traits::Zero::is_zero(&weight) {
            break;
        }
        let term = weight * &upper[m as usize - 1] * &base[(n as i64 - 2 * m + 1) as usize];
        lhs += int_to_rat(&(neg_one_pow(m as u64) * term));
        m += 1;
    }
    let (id, rhs) = match kind {
        Kind::TypeA => (
            "z1-type-a",
            -Rat::new(int(2) * binomial(2 * n, n as i64 - 2), int(n as i64)),
        ),
        Kind::TypeB => (
            "z1-type-b",
            int_to_rat(&(int(2) * &base[n as usize] - &base[n as usize + 1])),
        ),
    };
    IdentityOutcome::new(id, n, lhs, rhs)
}

/// The z = 1 specialization of the defining polynomial identity:
///
/// ```text
/// sum_m (-1)^m C(n-1,2m-1) A_m C_{n-2m+1} = -(2/n) C(2n, n-2)     (type A)
/// sum_m (-1)^m C(n,2m-1)   B_m W_{n-2m+1} = 2 W_n - W_{n+1}       (type B)
/// ```
pub fn z1_sum(kind: Kind, n: u64) -> IdentityOutcome {
    let upper = upper_defining(kind, (n as usize + 1) / 2 + 1);
    z1_with(kind, n, &upper)
}

fn consistency_with(r: u64, upper_a: &[Int]) -> IdentityOutcome {
    assert!(r >= 1);
    let cats = base_table(Kind::TypeA, 2 * r as usize + 1);
    let mut lhs = Rat::zero();
    for m in 1..r {
        let inner = binomial(2 * r, 2 * m as i64 - 1) * &cats[(2 * r - 2 * m + 2) as usize]
            - int(4 * r as i64)
                * binomial(2 * r - 1, 2 * m as i64 - 1)
                * &cats[(2 * r - 2 * m + 1) as usize];
        lhs += int_to_rat(&(neg_one_pow(m) * &upper_a[m as usize - 1] * inner));
    }
    let rhs = int_to_rat(&(int(4) * binomial(4 * r, 2 * r as i64 - 2)))
        - Rat::new(
            int(2) * binomial(4 * r + 2, 2 * r as i64 - 1),
            int(2 * r as i64 + 1),
        );
    IdentityOutcome::new("consistency-pair", r, lhs, rhs)
}

/// Consistency of the two inductive definitions of A_r extracted from the
/// z = 1 identity at n = 2r and n = 2r + 1:
///
/// ```text
/// sum_{m=1..r-1} (-1)^m A_m (C(2r,2m-1) C_{2r-2m+2} - 4r C(2r-1,2m-1) C_{2r-2m+1})
///   = 4 C(4r, 2r-2) - (2/(2r+1)) C(4r+2, 2r-1)
/// ```
pub fn consistency_pair(r: u64) -> IdentityOutcome {
    let upper_a = upper_defining(Kind::TypeA, r.max(2) as usize - 1);
    consistency_with(r, &upper_a)
}

fn strange_with(kind: Kind, r: u64, upper: &[Int]) -> IdentityOutcome {
    assert!(r >= 1);
    let r_i = r as i64;
    let mut lhs = Rat::zero();
    // Running pieces: (-1/4)^m, (2m-1)!, and the product of
    // (2r-i)^2/(4r-2i-1) over the family's i-range.
    let mut quarter_pow = Rat::one();
    let mut odd_fact = Rat::one();
    let mut product = Rat::one();
    for m in 1..r_i {
        quarter_pow *= rat(-1, 4);
        if m > 1 {
            odd_fact *= rat((2 * m - 2) * (2 * m - 1), 1);
        }
        let extend = |product: &mut Rat, i: i64| {
            *product *= rat((2 * r_i - i) * (2 * r_i - i), 4 * r_i - 2 * i - 1);
        };
        match kind {
            Kind::TypeA => {
                // product over i = 0..=2m-2
                if m == 1 {
                    extend(&mut product, 0);
                } else {
                    extend(&mut product, 2 * m - 3);
                    extend(&mut product, 2 * m - 2);
                }
            }
            Kind::TypeB => {
                // product over i = 1..=2m-1
                if m == 1 {
                    extend(&mut product, 1);
                } else {
                    extend(&mut product, 2 * m - 2);
                    extend(&mut product, 2 * m - 1);
                }
            }
        }
        let shape = match kind {
            Kind::TypeA => rat(r_i - m, 2 * r_i - 2 * m + 3),
            Kind::TypeB => {
                let d = 2 * r_i - 2 * m + 1;
                rat((r_i - m) * (r_i - m), d * d)
            }
        };
        lhs += &quarter_pow * int_to_rat(&upper[m as usize - 1]) / &odd_fact * shape * &product;
    }
    let (id, rhs) = match kind {
        Kind::TypeA => (
            "strange-type-a",
            rat(-2 * r_i * (r_i - 1), (2 * r_i + 1) * (2 * r_i + 3)),
        ),
        Kind::TypeB => ("strange-type-b", rat(-(r_i - 1), 2 * (2 * r_i + 1))),
    };
    IdentityOutcome::new(id, r, lhs, rhs)
}

/// The closed-form rational identities obtained by dividing the
/// consistency relation through by C_{2r} (type A) or W_{2r} (type B):
///
/// ```text
/// sum_{m=1..r-1} (-1/4)^m (A_m/(2m-1)!) ((r-m)/(2r-2m+3))
///     prod_{i=0..2m-2} (2r-i)^2/(4r-2i-1)  =  -2r(r-1)/((2r+1)(2r+3))
/// sum_{m=1..r-1} (-1/4)^m (B_m/(2m-1)!) ((r-m)^2/(2r-2m+1)^2)
///     prod_{i=1..2m-1} (2r-i)^2/(4r-2i-1)  =  -(r-1)/(2(2r+1))
/// ```
pub fn strange_identity(kind: Kind, r: u64) -> IdentityOutcome {
    let upper = upper_defining(kind, r.max(2) as usize - 1);
    strange_with(kind, r, &upper)
}

/// A_r rebuilt inductively from the z = 1 identity written at n = 2r:
/// (-1)^(r-1) A_r = (1/r) C(4r, 2r-2) + sum_{m<r} (-1)^m C(2r-1,2m-1) A_m C_{2r-2m+1}.
pub fn upper_a_from_even_rows(r_max: usize) -> Result<Vec<Int>> {
    let cats = base_table(Kind::TypeA, 2 * r_max);
    let mut a: Vec<Int> = Vec::with_capacity(r_max);
    for r in 1..=r_max as u64 {
        let mut acc = Rat::new(binomial(4 * r, 2 * r as i64 - 2), int(r as i64));
        for m in 1..r {
            let term = binomial(2 * r - 1, 2 * m as i64 - 1)
                * &a[m as usize - 1]
                * &cats[(2 * r - 2 * m + 1) as usize];
            acc += int_to_rat(&(neg_one_pow(m) * term));
        }
        let value = int_to_rat(&neg_one_pow(r - 1)) * acc;
        if !value.is_integer() {
            return Err(Error::IntegralityViolation {
                what: "A(even-rows)".into(),
                index: r as usize,
                value: value.to_string(),
            });
        }
        a.push(rat_to_int(&value));
    }
    Ok(a)
}

/// A_r rebuilt inductively from the z = 1 identity written at n = 2r+1:
/// (-1)^(r-1) 4r A_r = (2/(2r+1)) C(4r+2, 2r-1) + sum_{m<r} (-1)^m C(2r,2m-1) A_m C_{2r-2m+2}.
pub fn upper_a_from_odd_rows(r_max: usize) -> Result<Vec<Int>> {
    let cats = base_table(Kind::TypeA, 2 * r_max + 1);
    let mut a: Vec<Int> = Vec::with_capacity(r_max);
    for r in 1..=r_max as u64 {
        let mut acc = Rat::new(
            int(2) * binomial(4 * r + 2, 2 * r as i64 - 1),
            int(2 * r as i64 + 1),
        );
        for m in 1..r {
            let term = binomial(2 * r, 2 * m as i64 - 1)
                * &a[m as usize - 1]
                * &cats[(2 * r - 2 * m + 2) as usize];
            acc += int_to_rat(&(neg_one_pow(m) * term));
        }
        let value = int_to_rat(&neg_one_pow(r - 1)) * acc / int_to_rat(&int(4 * r as i64));
        if !value.is_integer() {
            return Err(Error::IntegralityViolation {
                what: "A(odd-rows)".into(),
                index: r as usize,
                value: value.to_string(),
            });
        }
        a.push(rat_to_int(&value));
    }
    Ok(a)
}

fn sweep<F>(check: &str, range: String, params: impl Iterator<Item = u64>, eval: F) -> VerificationReport
where
    F: Fn(u64) -> IdentityOutcome,
{
    for p in params {
        let outcome = eval(p);
        if !outcome.pass {
            return VerificationReport::fail(
                check,
                range,
                p as i64,
                format!("lhs = {}, rhs = {}", outcome.lhs, outcome.rhs),
            );
        }
    }
    VerificationReport::pass(check, range)
}

/// Sweep [`catalan_classical`] over 1 <= r <= r_max.
pub fn catalan_classical_sweep(r_max: u64) -> VerificationReport {
    sweep(
        "catalan-classical",
        format!("r <= {r_max}"),
        1..=r_max,
        catalan_classical,
    )
}

/// Sweep [`z1_sum`] over 2 <= n <= n_max with the sequence table built once.
pub fn z1_sweep(kind: Kind, n_max: u64) -> VerificationReport {
    let upper = upper_defining(kind, (n_max as usize + 1) / 2 + 1);
    sweep(
        &format!("z1-{kind}"),
        format!("n <= {n_max}"),
        2..=n_max,
        |n| z1_with(kind, n, &upper),
    )
}

/// Sweep [`consistency_pair`] over 1 <= r <= r_max.
pub fn consistency_sweep(r_max: u64) -> VerificationReport {
    let upper_a = upper_defining(Kind::TypeA, (r_max as usize).max(2) - 1);
    sweep(
        "consistency-pair",
        format!("r <= {r_max}"),
        1..=r_max,
        |r| consistency_with(r, &upper_a),
    )
}

/// Sweep [`strange_identity`] over 1 <= r <= r_max.
pub fn strange_sweep(kind: Kind, r_max: u64) -> VerificationReport {
    let upper = upper_defining(kind, (r_max as usize).max(2) - 1);
    sweep(
        &format!("strange-{kind}"),
        format!("r <= {r_max}"),
        1..=r_max,
        |r| strange_with(kind, r, &upper),
    )
}

/// Both single-identity inductive reconstructions of A_r must reproduce
/// the defining-recurrence table.
pub fn verify_inductive_reconstructions(r_max: usize) -> Result<VerificationReport> {
    let range = format!("r <= {r_max}");
    let reference = upper_defining(Kind::TypeA, r_max);
    let even = upper_a_from_even_rows(r_max)?;
    let odd = upper_a_from_odd_rows(r_max)?;
    for r in 1..=r_max {
        if even[r - 1] != reference[r - 1] || odd[r - 1] != reference[r - 1] {
            return Ok(VerificationReport::fail(
                "inductive-reconstruction",
                range,
                r as i64,
                format!(
                    "defining gives {}, even-rows {}, odd-rows {}",
                    reference[r - 1],
                    even[r - 1],
                    odd[r - 1]
                ),
            ));
        }
    }
    Ok(VerificationReport::pass("inductive-reconstruction", range))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_classical_examples() {
        let o = catalan_classical(1);
        assert!(o.pass);
        assert_eq!(o.lhs, rat(0, 1));
        let o = catalan_classical(2);
        assert!(o.pass);
        assert_eq!(o.lhs, rat(1, 1));
        let o = catalan_classical(5);
        assert!(o.pass);
        assert_eq!(o.lhs, rat(48, 1));
    }

    #[test]
    fn z1_examples() {
        let o = z1_sum(Kind::TypeA, 2);
        assert!(o.pass, "{o}");
        assert_eq!(o.lhs, rat(-1, 1));
        assert!(z1_sum(Kind::TypeA, 4).pass);
        let o = z1_sum(Kind::TypeB, 3);
        assert!(o.pass, "{o}");
        assert_eq!(o.rhs, rat(-30, 1));
    }

    #[test]
    fn consistency_examples() {
        let o = consistency_pair(1);
        assert!(o.pass, "{o}");
        assert_eq!(o.lhs, rat(0, 1));
        assert_eq!(o.rhs, rat(0, 1));
        assert!(consistency_pair(2).pass);
        assert!(consistency_pair(10).pass);
    }

    #[test]
    fn strange_examples() {
        let o = strange_identity(Kind::TypeA, 1);
        assert!(o.pass);
        assert_eq!(o.lhs, rat(0, 1));
        let o = strange_identity(Kind::TypeA, 2);
        assert!(o.pass, "{o}");
        assert_eq!(o.lhs, rat(-4, 35));
        assert_eq!(o.rhs, rat(-4, 35));
        let o = strange_identity(Kind::TypeB, 1);
        assert!(o.pass);
        let o = strange_identity(Kind::TypeB, 2);
        assert!(o.pass, "{o}");
        assert_eq!(o.rhs, rat(-1, 10));
    }

    #[test]
    fn small_sweeps() {
        assert!(catalan_classical_sweep(30).pass);
        assert!(z1_sweep(Kind::TypeA, 30).pass);
        assert!(z1_sweep(Kind::TypeB, 30).pass);
        assert!(consistency_sweep(15).pass);
        assert!(strange_sweep(Kind::TypeA, 15).pass);
        assert!(strange_sweep(Kind::TypeB, 15).pass);
    }

    #[test]
    fn inductive_reconstructions_match() {
        assert!(verify_inductive_reconstructions(20).unwrap().pass);
    }
}
