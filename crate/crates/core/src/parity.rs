//! 2-adic valuations, Kummer carry counting, and the parity laws of the
//! walk numbers and the sequences a_n and A_n.
//!
//! Parity of a computed sequence entry is always read off the integer
//! itself (its lowest bit), never recomputed modulo 2 through a separate
//! pipeline: the sweeps below are views over exactly the tables the rest
//! of the crate produces.

use num_integer::Integer as _;
use rayon::prelude::*;

use crate::arith::{binomial, exact_div, int, is_power_of_two, Int, Rat};
use crate::combinat::{c_row, catalan_table, Kind};
use crate::error::{Error, Result};
use crate::report::{Counterexample, VerificationReport};
use crate::sequences::{lower_a_defining, upper_defining};

/// 2-adic valuation of a nonzero integer.
pub fn nu2_int(n: &Int) -> Result<i64> {
    match n.trailing_zeros() {
        Some(m) => Ok(m as i64),
        None => Err(Error::ZeroValuation),
    }
}

/// 2-adic valuation of a nonzero rational: the unique m with
/// q = 2^m (a/b), a and b odd. Negative when the denominator is even.
pub fn nu2(q: &Rat) -> Result<i64> {
    Ok(nu2_int(q.numer())? - nu2_int(q.denom())?)
}

fn carries_base2(mut a: u64, mut b: u64) -> u64 {
    let mut carry = 0u64;
    let mut count = 0;
    while a > 0 || b > 0 || carry > 0 {
        let s = (a & 1) + (b & 1) + carry;
        carry = s >> 1;
        count += carry;
        a >>= 1;
        b >>= 1;
    }
    count
}

/// Number of carries when adding a and b in base 2. By Kummer's theorem
/// this equals nu2(C(a+b, a)); both quantities are computed and compared,
/// and a mismatch is reported as an internal error.
pub fn kummer_carries(a: u64, b: u64) -> Result<u64> {
    let carries = carries_base2(a, b);
    let valuation = nu2_int(&binomial(a + b, a as i64))?;
    if valuation != carries as i64 {
        return Err(Error::Internal(format!(
            "carries({a},{b}) = {carries} but nu2(C({},{a})) = {valuation}",
            a + b
        )));
    }
    Ok(carries)
}

/// Exhaustive Kummer check over 0 <= a <= a_max, 0 <= b <= b_max, with the
/// binomials taken as factorial ratios for throughput. Counterexample
/// indices encode the pair as a * (b_max+1) + b.
pub fn verify_kummer(a_max: u64, b_max: u64) -> Result<VerificationReport> {
    let range = format!("a <= {a_max}, b <= {b_max}");
    let fact: Vec<Int> = {
        let mut f = Vec::with_capacity((a_max + b_max + 1) as usize);
        f.push(Int::from(1));
        for i in 1..=a_max + b_max {
            let prev = f.last().expect("nonempty").clone();
            f.push(prev * int(i as i64));
        }
        f
    };
    let failures: Vec<Counterexample> = (0..=a_max)
        .into_par_iter()
        .flat_map_iter(|a| {
            let fact = &fact;
            (0..=b_max).filter_map(move |b| {
                let binom = exact_div(
                    &fact[(a + b) as usize],
                    &(&fact[a as usize] * &fact[b as usize]),
                );
                let valuation = binom.trailing_zeros().expect("binomial is positive");
                let carries = carries_base2(a, b);
                (valuation != carries).then(|| Counterexample {
                    index: (a * (b_max + 1) + b) as i64,
                    detail: format!(
                        "a = {a}, b = {b}: {carries} carries, nu2(C(a+b,a)) = {valuation}"
                    ),
                })
            })
        })
        .collect();
    Ok(VerificationReport::from_failures("kummer", range, failures))
}

/// Parity of the walk numbers: for every 1 <= r <= n <= n_max,
/// c(n,r) is even when n is even, and a multiple of 4 when n is odd and
/// r is even.
pub fn check_lemma4(n_max: u64) -> Result<VerificationReport> {
    let range = format!("n <= {n_max}");
    for n in 1..=n_max {
        let row = c_row(n)?;
        for r in 1..=n {
            let c = &row[r as usize - 1];
            let required = if n % 2 == 0 {
                1
            } else if r % 2 == 0 {
                2
            } else {
                continue;
            };
            let v = nu2_int(c)?;
            if v < required {
                return Ok(VerificationReport::fail(
                    "lemma4",
                    range,
                    n as i64,
                    format!("c({n},{r}) = {c} has nu2 = {v}, expected >= {required}"),
                ));
            }
        }
    }
    Ok(VerificationReport::pass("lemma4", range))
}

/// Parity of the diagonal walk numbers c(2p-1, p) = (1/p) C(2p, p+1)^2:
/// a multiple of 8 for even p, a multiple of 4 for odd p unless
/// p = 2^k - 1, and odd exactly when p = 2^k - 1.
pub fn check_lemma5(p_max: u64) -> Result<VerificationReport> {
    let range = format!("p <= {p_max}");
    for p in 1..=p_max {
        let c = crate::combinat::c_coeff(2 * p - 1, p as i64)?;
        // Independent closed form for this diagonal.
        let b = binomial(2 * p, p as i64 + 1);
        let diag = exact_div(&(&b * &b), &int(p as i64));
        if c != diag {
            return Err(Error::Internal(format!(
                "c(2p-1,p) closed forms disagree at p = {p}: {c} vs {diag}"
            )));
        }
        let v = nu2_int(&c)?;
        let ok = if p % 2 == 0 {
            v >= 3
        } else if is_power_of_two(p + 1) {
            v == 0
        } else {
            v >= 2
        };
        if !ok {
            return Ok(VerificationReport::fail(
                "lemma5",
                range,
                p as i64,
                format!("c({},{p}) = {c} has nu2 = {v}", 2 * p - 1),
            ));
        }
    }
    Ok(VerificationReport::pass("lemma5", range))
}

/// Parity law for a_n over 2 <= n <= n_max: a_n is odd exactly when
/// n + 2 is a power of two.
pub fn check_theorem2_parity(n_max: usize) -> Result<VerificationReport> {
    let range = format!("2 <= n <= {n_max}");
    let a = lower_a_defining(n_max)?;
    for n in 2..=n_max {
        let odd = a[n - 1].is_odd();
        let expected = is_power_of_two(n as u64 + 2);
        if odd != expected {
            return Ok(VerificationReport::fail(
                "theorem2-parity",
                range,
                n as i64,
                format!(
                    "a_{n} is {}, but n+2 = {} is {}a power of two",
                    if odd { "odd" } else { "even" },
                    n + 2,
                    if expected { "" } else { "not " }
                ),
            ));
        }
    }
    Ok(VerificationReport::pass("theorem2-parity", range))
}

/// Parity law for A_n over 3 <= n <= n_max: A_n and the Catalan number C_n
/// always share parity, and they are odd exactly when n + 1 is a power of
/// two.
pub fn check_theorem4_parity(n_max: usize) -> Result<VerificationReport> {
    let range = format!("3 <= n <= {n_max}");
    let a = upper_defining(Kind::TypeA, n_max);
    let c = catalan_table(n_max);
    for n in 3..=n_max {
        let a_odd = a[n - 1].is_odd();
        let c_odd = c[n].is_odd();
        let expected = is_power_of_two(n as u64 + 1);
        if a_odd != c_odd || a_odd != expected {
            return Ok(VerificationReport::fail(
                "theorem4-parity",
                range,
                n as i64,
                format!(
                    "A_{n} {} / C_{n} {} (n+1 = {} power of two: {expected})",
                    if a_odd { "odd" } else { "even" },
                    if c_odd { "odd" } else { "even" },
                    n + 1,
                ),
            ));
        }
    }
    Ok(VerificationReport::pass("theorem4-parity", range))
}
