//! Exact computation and cross-validation of the integer sequences carried
//! by Narayana polynomial expansions.
//!
//! The library is organized around four integer sequences: the expansion
//! coefficients `A_n` and `B_n` that express `(z+1) C_r(z) - C_{r+1}(z)`
//! (and its type-B analogue) over shifted Narayana polynomials, and their
//! normalized companions `a_n = 2 A_n / C_n` and `b_n = B_n / W_n`. Each
//! sequence is computable by several genuinely independent pipelines —
//! alternating defining recurrences, positive convolutions, specialized
//! symmetric-function power sums, continued-fraction expansion, and a
//! brute-force composition sum — and the crate's purpose is to compute
//! them exactly and check that everything the surrounding theory claims
//! (expansion identities, bridges, positivity, monotonicity, Schur
//! positivity, 2-adic parity laws) holds on concrete ranges.
//!
//! All arithmetic is exact: arbitrary-precision integers and rationals
//! only, no floating point anywhere. Checks either pass exactly or report
//! the first counterexample.
//!
//! Module map:
//!
//! * [`arith`] — big integers/rationals, factorials, binomials.
//! * [`poly`] — dense exact univariate polynomials in `z`.
//! * [`combinat`] — Catalan and central binomial numbers, Narayana
//!   polynomials, walk numbers c(n,r) and their lattice-walk oracle.
//! * [`sequences`] — the four sequences, their pipelines, cross-checks,
//!   bridge checks, and the defining polynomial identity.
//! * [`symfun`] — the h_n = 1/(n! (x)_n) specialization: power sums four
//!   ways, elementary functions, Schur values by Jacobi-Trudi.
//! * [`parity`] — 2-adic valuation, Kummer carries, parity theorems.
//! * [`identities`] — the closed-form identity suite, including the two
//!   "strange" rational identities.

pub mod arith;
pub mod combinat;
pub mod error;
pub mod identities;
pub mod parity;
pub mod poly;
pub mod report;
pub mod sequences;
pub mod symfun;

pub use arith::{Int, Rat};
pub use combinat::{Kind, NarayanaFamily};
pub use error::{Error, Result};
pub use identities::IdentityOutcome;
pub use poly::Polynomial;
pub use report::{Counterexample, VerificationReport};
pub use sequences::{Method, SeqName, SequenceTable};
pub use symfun::{Composition, Partition, Specialization};
