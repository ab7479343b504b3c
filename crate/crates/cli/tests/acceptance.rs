//! Acceptance suite: the exit criteria for the whole artifact, each at its
//! full documented range and runtime budget. Run with `--nocapture` to see
//! one pass/fail line per criterion:
//!
//! ```text
//! cargo test -p narayana-cli --test acceptance -- --nocapture
//! ```
//!
//! Everything here is checked by exact equality; runtime budgets are
//! asserted where stated.

use std::process::Command;
use std::time::{Duration, Instant};

use narayana_cli::output::{csv_rows, SeqRow};
use narayana_core::arith::{binomial, factorial, int_to_rat, neg_one_pow, rat, Rat};
use narayana_core::combinat::{
    c_coeff, verify_expansion_sweep, walk_count, Kind,
};
use narayana_core::identities::{
    catalan_classical_sweep, consistency_sweep, strange_sweep, z1_sweep,
};
use narayana_core::parity::{
    check_lemma4, check_lemma5, check_theorem2_parity, check_theorem4_parity, verify_kummer,
};
use narayana_core::sequences::{
    cross_check, seq_defining, verify_defining_identity_sweep, Method, SeqName,
};
use narayana_core::symfun::{
    p_continued_fraction, p_newton, partitions_up_to_weight, schur_value,
    verify_functional_equation, Specialization,
};
use num_traits::Signed;

struct Criterion {
    number: u32,
    name: &'static str,
    budget: Option<Duration>,
}

impl Criterion {
    fn new(number: u32, name: &'static str, budget_secs: Option<u64>) -> Self {
        Criterion {
            number,
            name,
            budget: budget_secs.map(Duration::from_secs),
        }
    }

    fn run(self, body: impl FnOnce() -> Result<(), String>) {
        let start = Instant::now();
        let outcome = body();
        let elapsed = start.elapsed();
        let within_budget = self.budget.map_or(true, |b| elapsed < b);
        let pass = outcome.is_ok() && within_budget;
        println!(
            "acceptance criterion {:2} ({}): {} [{:.2?}]",
            self.number,
            self.name,
            if pass { "PASS" } else { "FAIL" },
            elapsed
        );
        if let Err(msg) = outcome {
            panic!("criterion {} failed: {msg}", self.number);
        }
        if !within_budget {
            panic!(
                "criterion {} exceeded its {:?} budget: took {:.2?}",
                self.number,
                self.budget.expect("budget set"),
                elapsed
            );
        }
    }
}

fn seq_via_cli(name: &str, max: usize) -> Result<Vec<String>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_narayana"))
        .args(["seq", name, "--max", &max.to_string(), "--format", "csv"])
        .output()
        .map_err(|e| e.to_string())?;
    if out.status.code() != Some(0) {
        return Err(format!("seq {name} exited {:?}", out.status.code()));
    }
    let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
    let rows: Vec<SeqRow> = csv_rows(&text)?;
    Ok(rows.into_iter().map(|r| r.value).collect())
}

const A_TABLE: [&str; 14] = [
    "1",
    "1",
    "5",
    "56",
    "1092",
    "32670",
    "1387815",
    "79389310",
    "5882844968",
    "548129834616",
    "62720089624920",
    "8646340208462880",
    "1413380381699497200",
    "270316008395632253340",
];

const LOWER_A_TABLE: [&str; 16] = [
    "2",
    "1",
    "2",
    "8",
    "52",
    "495",
    "6470",
    "111034",
    "2419928",
    "65269092",
    "2133844440",
    "83133090480",
    "3805035352536",
    "202147745618247",
    "12336516593999598",
    "857054350280418290",
];

fn samples() -> Vec<Specialization> {
    [(1, 2), (1, 1), (2, 1), (17, 5)]
        .into_iter()
        .map(|(n, d)| Specialization::new(rat(n, d)).expect("positive"))
        .collect()
}

#[test]
fn acceptance_01_published_a_table() {
    Criterion::new(1, "published A-table via `seq A --max 14`", Some(1)).run(|| {
        let values = seq_via_cli("A", 14)?;
        if values != A_TABLE {
            return Err(format!("table mismatch: {values:?}"));
        }
        Ok(())
    });
}

#[test]
fn acceptance_02_published_lower_a_table() {
    Criterion::new(2, "published a-table via `seq a --max 16`", Some(1)).run(|| {
        let values = seq_via_cli("a", 16)?;
        if values != LOWER_A_TABLE {
            return Err(format!("table mismatch: {values:?}"));
        }
        Ok(())
    });
}

#[test]
fn acceptance_03_method_agreement() {
    Criterion::new(3, "four-way method agreement", Some(30)).run(|| {
        for name in SeqName::ALL {
            let rep = cross_check(
                name,
                200,
                &[Method::Defining, Method::Convolution, Method::PowerSum],
            )
            .map_err(|e| e.to_string())?;
            if !rep.pass {
                return Err(rep.to_string());
            }
            let rep = cross_check(name, 20, &[Method::Defining, Method::Composition])
                .map_err(|e| e.to_string())?;
            if !rep.pass {
                return Err(rep.to_string());
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_04_parity_theorems() {
    Criterion::new(4, "parity laws for a_n and A_n to 512", Some(60)).run(|| {
        let rep = check_theorem2_parity(512).map_err(|e| e.to_string())?;
        if !rep.pass {
            return Err(rep.to_string());
        }
        let rep = check_theorem4_parity(512).map_err(|e| e.to_string())?;
        if !rep.pass {
            return Err(rep.to_string());
        }
        Ok(())
    });
}

#[test]
fn acceptance_05_walk_number_lemmas_and_kummer() {
    Criterion::new(5, "2-adic lemmas to 200 and Kummer to 300", Some(30)).run(|| {
        for rep in [
            check_lemma4(200).map_err(|e| e.to_string())?,
            check_lemma5(200).map_err(|e| e.to_string())?,
            verify_kummer(300, 300).map_err(|e| e.to_string())?,
        ] {
            if !rep.pass {
                return Err(rep.to_string());
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_06_polynomial_identities() {
    Criterion::new(6, "expansion and defining identities to r = 60", Some(30)).run(|| {
        for kind in [Kind::TypeA, Kind::TypeB] {
            let rep = verify_expansion_sweep(kind, 60);
            if !rep.pass {
                return Err(rep.to_string());
            }
            let rep = verify_defining_identity_sweep(kind, 60);
            if !rep.pass {
                return Err(rep.to_string());
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_07_sign_and_functional_equation() {
    Criterion::new(7, "power-sum signs and functional equation to 60", Some(10)).run(|| {
        for spec in samples() {
            let p = p_newton(&spec, 60);
            for (i, value) in p.iter().enumerate() {
                let signed = int_to_rat(&neg_one_pow(i as u64)) * value;
                if !signed.is_positive() {
                    return Err(format!("(-1)^(n-1) p_n <= 0 at n = {} for {spec}", i + 1));
                }
            }
            let rep = verify_functional_equation(&spec, &p);
            if !rep.pass {
                return Err(rep.to_string());
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_08_generating_function_coefficients() {
    Criterion::new(8, "continued fraction reproduces A_m and B_m to 40", None).run(|| {
        for (kind, name) in [(Kind::TypeA, SeqName::A), (Kind::TypeB, SeqName::B)] {
            let table = seq_defining(name, 40).map_err(|e| e.to_string())?;
            let cf = p_continued_fraction(&Specialization::for_kind(kind), 40);
            for m in 1..=40usize {
                let expected = Rat::new(
                    neg_one_pow(m as u64 - 1) * table.get(m),
                    factorial(2 * m as u64 - 1),
                );
                let got = int_to_rat(&narayana_core::arith::int(2)) * &cf[m - 1];
                if got != expected {
                    return Err(format!("{name}: coefficient {m} is {got}, expected {expected}"));
                }
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_09_schur_positivity() {
    Criterion::new(9, "Schur positivity for all 272 partitions of weight <= 12", Some(60)).run(
        || {
            let partitions = partitions_up_to_weight(12);
            if partitions.len() != 272 {
                return Err(format!("expected 272 partitions, got {}", partitions.len()));
            }
            for spec in samples() {
                for lambda in &partitions {
                    let value = schur_value(&spec, lambda);
                    if !value.is_positive() {
                        return Err(format!("s_{lambda} = {value} at {spec}"));
                    }
                }
            }
            Ok(())
        },
    );
}

#[test]
fn acceptance_10_identity_suite() {
    Criterion::new(10, "closed-form identity suite", Some(30)).run(|| {
        let mut reports = vec![
            catalan_classical_sweep(200),
            z1_sweep(Kind::TypeA, 200),
            z1_sweep(Kind::TypeB, 200),
            consistency_sweep(100),
            strange_sweep(Kind::TypeA, 100),
            strange_sweep(Kind::TypeB, 100),
        ];
        for rep in reports.drain(..) {
            if !rep.pass {
                return Err(rep.to_string());
            }
        }
        Ok(())
    });
}

#[test]
fn acceptance_11_walk_oracle() {
    Criterion::new(11, "lattice-walk dynamic program matches closed forms", None).run(|| {
        for n in 1..=12u64 {
            for r in 1..=n as i64 {
                let target_x = 2 * r - n as i64 - 1;
                let constrained = walk_count(n, target_x, true);
                let closed = c_coeff(n, r).map_err(|e| e.to_string())?;
                if constrained != closed {
                    return Err(format!(
                        "constrained walks({n},{target_x}) = {constrained}, c({n},{r}) = {closed}"
                    ));
                }
                let free = walk_count(n, target_x, false);
                let product = binomial(n, r) * binomial(n, r - 1);
                if free != product {
                    return Err(format!(
                        "free walks({n},{target_x}) = {free}, C(n,r)C(n,r-1) = {product}"
                    ));
                }
            }
        }
        Ok(())
    });
}
