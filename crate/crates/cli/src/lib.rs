//! Command implementations for the `narayana` binary.
//!
//! Exit code contract: 0 when every requested check passes, 1 on a
//! verification failure (including internal integrality violations), 2 on
//! a usage error.

pub mod output;

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use rayon::prelude::*;

use narayana_core::combinat::{catalan_table, central_binomial_table, Kind};
use narayana_core::error::Error as CoreError;
use narayana_core::identities::{
    catalan_classical, catalan_classical_sweep, consistency_pair, consistency_sweep, strange_identity,
    strange_sweep, verify_inductive_reconstructions, z1_sum, z1_sweep,
};
use narayana_core::parity::{
    check_lemma4, check_lemma5, check_theorem2_parity, check_theorem4_parity, verify_kummer,
};
use narayana_core::sequences::{
    compute, cross_check, verify_bridge, verify_defining_identity_sweep, Method, SeqName,
};
use narayana_core::symfun::{
    composition_cap, partitions_up_to_weight, schur_value, Specialization,
};
use narayana_core::combinat::verify_expansion_sweep;
use narayana_core::{Int, Rat, VerificationReport};

use output::{
    BenchRow, Document, Format, IdentityRow, Rows, SchurRow, SeqRow, VerifyRow,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Csv,
    Ndj,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Csv => Format::Csv,
            FormatArg::Ndj => Format::Ndj,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "narayana",
    version,
    about = "Exact integer sequences from Narayana polynomial expansions, with identity, positivity, and parity verification"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,

    /// Worker threads for parallel sweeps (results are identical for any value)
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a sequence table (values as exact decimal strings)
    Seq {
        /// Sequence name: A, a, B, b, C (Catalan), or W (central binomial)
        name: String,
        /// Largest index to compute
        #[arg(long)]
        max: usize,
        /// Pipeline: defining, convolution, power-sum, composition, continued-fraction
        #[arg(long, default_value = "defining")]
        method: String,
    },
    /// Run a verification suite; exits nonzero if any check fails
    Verify {
        /// Suite: expansion, defining-identity, bridge, parity, lemma4,
        /// lemma5, identities, or crosscheck
        suite: String,
        /// Sweep bound (each suite has a sensible default)
        #[arg(long)]
        max: Option<usize>,
        /// Restrict the crosscheck suite to one sequence (A, a, B, b)
        #[arg(long)]
        seq: Option<String>,
    },
    /// Evaluate all Schur values up to a weight and check positivity
    Schur {
        /// Specialization parameter, a positive rational like 2 or 17/5
        #[arg(long)]
        x: String,
        /// Largest partition weight to enumerate (capped at 14)
        #[arg(long, default_value_t = 12)]
        weight_max: u32,
    },
    /// Evaluate a single identity instance and print both sides
    Identity {
        /// One of: catalan-classical, z1-a, z1-b, consistency, strange-a, strange-b
        id: String,
        /// The identity parameter (r, or n for the z1 identities)
        #[arg(long)]
        param: u64,
    },
    /// Time each pipeline for one sequence; results are cross-checked,
    /// then discarded
    Bench {
        /// Sequence name: A, a, B, or b
        target: String,
        /// Largest index to compute
        #[arg(long)]
        max: usize,
    },
}

pub enum CliError {
    Usage(String),
    Failure(String),
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidArgument(_) | CoreError::CompositionCap { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Failure(other.to_string()),
        }
    }
}

/// Parse a rational given as `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: Int = num.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let den: Int = den.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if den == Int::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rat::new(num, den))
}

fn params_of(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn seq_command(name: &str, max: usize, method: &str) -> Result<(String, BTreeMap<String, String>, Rows, bool), CliError> {
    if max == 0 {
        return Err(CliError::Usage("--max must be at least 1".into()));
    }
    let params = params_of(&[
        ("name", name.to_string()),
        ("max", max.to_string()),
        ("method", method.to_string()),
    ]);
    let values: Vec<Int> = match name {
        "C" | "W" => {
            if method != "defining" {
                return Err(CliError::Usage(format!(
                    "sequence {name} has a single closed form; --method does not apply"
                )));
            }
            let table = if name == "C" {
                catalan_table(max)
            } else {
                central_binomial_table(max)
            };
            table[1..].to_vec()
        }
        _ => {
            let seq_name: SeqName = name.parse().map_err(|e: CoreError| CliError::Usage(e.to_string()))?;
            let method: Method = method.parse().map_err(|e: CoreError| CliError::Usage(e.to_string()))?;
            compute(seq_name, method, max)?.values().to_vec()
        }
    };
    let rows = values
        .iter()
        .enumerate()
        .map(|(i, v)| SeqRow {
            n: i + 1,
            value: v.to_string(),
        })
        .collect();
    Ok(("seq".into(), params, Rows::Seq(rows), true))
}

fn crosscheck_reports(name: SeqName, max: usize) -> Result<Vec<VerificationReport>, CliError> {
    let mut reports = vec![cross_check(
        name,
        max,
        &[Method::Defining, Method::Convolution, Method::PowerSum],
    )?];
    let cf_max = max.min(60);
    reports.push(cross_check(
        name,
        cf_max,
        &[Method::Defining, Method::ContinuedFraction],
    )?);
    let comp_max = max.min(20).min(composition_cap());
    reports.push(cross_check(
        name,
        comp_max,
        &[Method::Defining, Method::Composition],
    )?);
    Ok(reports)
}

fn verify_command(
    suite: &str,
    max: Option<usize>,
    seq: Option<&str>,
) -> Result<(String, BTreeMap<String, String>, Rows, bool), CliError> {
    if max == Some(0) {
        return Err(CliError::Usage("--max must be at least 1".into()));
    }
    let pick = |default: usize| max.unwrap_or(default);
    let reports: Vec<VerificationReport> = match suite {
        "expansion" => {
            let m = pick(60);
            vec![
                verify_expansion_sweep(Kind::TypeA, m),
                verify_expansion_sweep(Kind::TypeB, m),
            ]
        }
        "defining-identity" => {
            let m = pick(60);
            vec![
                verify_defining_identity_sweep(Kind::TypeA, m),
                verify_defining_identity_sweep(Kind::TypeB, m),
            ]
        }
        "bridge" => vec![verify_bridge(pick(200))?],
        "parity" => {
            let m = pick(512);
            vec![
                check_theorem2_parity(m.max(2))?,
                check_theorem4_parity(m.max(3))?,
                verify_kummer(300, 300)?,
            ]
        }
        "lemma4" => vec![check_lemma4(pick(200) as u64)?],
        "lemma5" => vec![check_lemma5(pick(200) as u64)?],
        "identities" => {
            let m = pick(100) as u64;
            vec![
                catalan_classical_sweep(m),
                z1_sweep(Kind::TypeA, m.max(2)),
                z1_sweep(Kind::TypeB, m.max(2)),
                consistency_sweep(m),
                strange_sweep(Kind::TypeA, m),
                strange_sweep(Kind::TypeB, m),
                verify_inductive_reconstructions(m.min(50) as usize)?,
            ]
        }
        "crosscheck" => {
            let m = pick(100);
            let names: Vec<SeqName> = match seq {
                Some(s) => vec![s
                    .parse()
                    .map_err(|e: CoreError| CliError::Usage(e.to_string()))?],
                None => SeqName::ALL.to_vec(),
            };
            let mut reports = Vec::new();
            for name in names {
                reports.extend(crosscheck_reports(name, m)?);
            }
            reports
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown suite {other:?}; expected expansion, defining-identity, bridge, parity, lemma4, lemma5, identities, or crosscheck"
            )))
        }
    };
    let mut params = params_of(&[("suite", suite.to_string())]);
    if let Some(m) = max {
        params.insert("max".into(), m.to_string());
    }
    if let Some(s) = seq {
        params.insert("seq".into(), s.to_string());
    }
    let all_pass = reports.iter().all(|r| r.pass);
    let rows = reports.iter().map(VerifyRow::from).collect();
    Ok(("verify".into(), params, Rows::Verify(rows), all_pass))
}

fn schur_command(
    x: &str,
    weight_max: u32,
) -> Result<(String, BTreeMap<String, String>, Rows, bool), CliError> {
    let x_val = parse_rational(x).map_err(CliError::Usage)?;
    let spec = Specialization::new(x_val).map_err(|e| CliError::Usage(e.to_string()))?;
    if weight_max > 14 {
        return Err(CliError::Usage(
            "--weight-max is capped at 14 (the enumeration grows quickly)".into(),
        ));
    }
    let partitions = partitions_up_to_weight(weight_max);
    let rows: Vec<SchurRow> = partitions
        .par_iter()
        .map(|lambda| {
            let value = schur_value(&spec, lambda);
            SchurRow {
                partition: lambda.to_string(),
                positive: value.is_positive(),
                value: value.to_string(),
            }
        })
        .collect();
    let all_positive = rows.iter().all(|r| r.positive);
    let params = params_of(&[("x", x.to_string()), ("weight_max", weight_max.to_string())]);
    Ok(("schur".into(), params, Rows::Schur(rows), all_positive))
}

fn identity_command(
    id: &str,
    param: u64,
) -> Result<(String, BTreeMap<String, String>, Rows, bool), CliError> {
    let need = |min: u64, what: &str| -> Result<(), CliError> {
        if param < min {
            Err(CliError::Usage(format!("{id} needs {what} >= {min}")))
        } else {
            Ok(())
        }
    };
    let outcome = match id {
        "catalan-classical" => {
            need(1, "r")?;
            catalan_classical(param)
        }
        "z1-a" => {
            need(2, "n")?;
            z1_sum(Kind::TypeA, param)
        }
        "z1-b" => {
            need(2, "n")?;
            z1_sum(Kind::TypeB, param)
        }
        "consistency" => {
            need(1, "r")?;
            consistency_pair(param)
        }
        "strange-a" => {
            need(1, "r")?;
            strange_identity(Kind::TypeA, param)
        }
        "strange-b" => {
            need(1, "r")?;
            strange_identity(Kind::TypeB, param)
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown identity {other:?}; expected catalan-classical, z1-a, z1-b, consistency, strange-a, or strange-b"
            )))
        }
    };
    let pass = outcome.pass;
    let params = params_of(&[("id", id.to_string()), ("param", param.to_string())]);
    Ok((
        "identity".into(),
        params,
        Rows::Identity(vec![IdentityRow::from(&outcome)]),
        pass,
    ))
}

fn bench_command(
    target: &str,
    max: usize,
) -> Result<(String, BTreeMap<String, String>, Rows, bool), CliError> {
    if max == 0 {
        return Err(CliError::Usage("--max must be at least 1".into()));
    }
    let name: SeqName = target
        .parse()
        .map_err(|e: CoreError| CliError::Usage(e.to_string()))?;
    let methods = [Method::Defining, Method::Convolution, Method::PowerSum];
    let mut rows = Vec::new();
    let mut tables = Vec::new();
    for method in methods {
        let start = Instant::now();
        let table = compute(name, method, max)?;
        rows.push(BenchRow {
            method: method.to_string(),
            max,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
        tables.push(table);
    }
    let reference = &tables[0];
    let mut pass = true;
    for other in &tables[1..] {
        if other.values() != reference.values() {
            pass = false;
        }
    }
    // Tables are dropped here; only the timings survive.
    let params = params_of(&[("target", target.to_string()), ("max", max.to_string())]);
    Ok(("bench".into(), params, Rows::Bench(rows), pass))
}

fn dispatch(cli: &Cli) -> Result<(String, BTreeMap<String, String>, Rows, bool), CliError> {
    match &cli.command {
        Command::Seq { name, max, method } => seq_command(name, *max, method),
        Command::Verify { suite, max, seq } => verify_command(suite, *max, seq.as_deref()),
        Command::Schur { x, weight_max } => schur_command(x, *weight_max),
        Command::Identity { id, param } => identity_command(id, *param),
        Command::Bench { target, max } => bench_command(target, *max),
    }
}

/// Execute a parsed command line; returns the process exit code and prints
/// the rendered document to stdout.
pub fn run(cli: Cli) -> i32 {
    let format: Format = cli.format.into();
    let started = Instant::now();
    let outcome = match cli.jobs {
        Some(0) => Err(CliError::Usage("--jobs must be at least 1".into())),
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(CliError::Failure(format!("thread pool: {e}"))),
        },
        None => dispatch(&cli),
    };
    match outcome {
        Ok((command, params, rows, pass)) => {
            let doc = Document::new(&command, params, rows, started.elapsed().as_millis() as u64);
            print!("{}", doc.render(format));
            if pass {
                0
            } else {
                1
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(CliError::Failure(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}
