//! Exact scalar arithmetic and elementary combinatorial functions.
//!
//! Everything in this crate computes over arbitrary-precision integers
//! ([`Int`]) and rationals ([`Rat`]); there is no floating point anywhere.
//! Rationals are kept reduced with a positive denominator, so equality and
//! integrality checks are plain structural comparisons.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always reduced, denominator > 0.
pub type Rat = BigRational;

/// Shorthand constructor for small integers.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Shorthand constructor for small rationals. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

/// Lift an integer into the rationals.
pub fn int_to_rat(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Exact integer division. Panics if `den` does not divide `num`; callers
/// use this where divisibility is a theorem, so a failure is a bug.
pub fn exact_div(num: &Int, den: &Int) -> Int {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "inexact division: {num} / {den}");
    q
}

/// n!
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= i;
    }
    acc
}

/// Binomial coefficient C(n, k), with C(n, k) = 0 for k < 0 or k > n.
///
/// The out-of-range convention matters: the expansion identities sum over
/// all m and rely on out-of-range terms vanishing.
pub fn binomial(n: u64, k: i64) -> Int {
    if k < 0 || k as u64 > n {
        return Int::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = Int::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc = exact_div(&acc, &int(i as i64));
    }
    acc
}

/// Full row `[C(n,0), ..., C(n,n)]` of Pascal's triangle.
///
/// The recurrences need O(n) binomials from one row; building the row once
/// by the ratio update keeps table construction at O(n^2) big-integer ops
/// overall instead of O(n^3).
pub fn pascal_row(n: u64) -> Vec<Int> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut entry = Int::one();
    row.push(entry.clone());
    for k in 0..n {
        entry *= n - k;
        entry = exact_div(&entry, &int(k as i64 + 1));
        row.push(entry.clone());
    }
    row
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1.
pub fn rising_factorial(x: &Rat, k: u64) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= x + int_to_rat(&int(i as i64));
    }
    acc
}

/// True if `q` is a (positive or negative) integer.
pub fn is_integer(q: &Rat) -> bool {
    q.is_integer()
}

/// Convert a rational known to be integral. Panics otherwise.
pub fn rat_to_int(q: &Rat) -> Int {
    assert!(q.is_integer(), "expected an integer, got {q}");
    q.to_integer()
}

/// True for n = 2^k, k >= 0. Popcount check on the binary representation.
pub fn is_power_of_two(n: u64) -> bool {
    n != 0 && n & (n - 1) == 0
}

/// Sign of (-1)^k as an integer.
pub fn neg_one_pow(k: u64) -> Int {
    if k % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}
