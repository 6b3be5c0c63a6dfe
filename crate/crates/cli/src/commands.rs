//! Subcommand bodies. Each one checks every input first and only then
//! computes, so a contract error never leaves partial output behind.

use std::collections::BTreeMap;

use anyhow::{bail, ensure, Context, Result};
use qpart_core::congruence::MAX_VERIFY_ORDER;
use qpart_core::oracle::{count_colour_partitions, count_signed_distinct};
use qpart_core::{
    check_frobenius, check_identity_dissection5, check_jacobi, check_lemma_h5, check_ramanujan_pm4,
    pr_series, scan, verify_claim, verify_theorem, CongruenceClaim, RingSpec, VerifyReport,
};

use crate::args::{
    Command, ExpandArgs, IdentityArgs, IdentityName, OracleArgs, ScanArgs, TheoremArgs, VerifyArgs,
};
use crate::record::{OutputRecord, ResultItem};

pub const STATUS_OK: &str = "ok";

/// A finished command: what to print, and whether it found a counterexample.
#[derive(Debug)]
pub struct Outcome {
    pub record: OutputRecord,
    pub counterexample: bool,
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Expand(a) => expand(a),
        Command::Verify(a) => verify(a),
        Command::Theorem(a) => theorem(a),
        Command::Identity(a) => identity(a),
        Command::Scan(a) => run_scan(a),
        Command::Oracle(a) => oracle(a),
    }
}

fn unsigned(name: &str, v: i64) -> Result<u64> {
    u64::try_from(v).with_context(|| format!("--{name} must be non-negative, got {v}"))
}

fn order_in_range(name: &str, v: i64) -> Result<i64> {
    ensure!(
        (1..=MAX_VERIFY_ORDER as i64).contains(&v),
        "--{name} must be between 1 and {MAX_VERIFY_ORDER}, got {v}"
    );
    Ok(v)
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> BTreeMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn report_outcome(
    command: &str,
    parameters: BTreeMap<String, String>,
    depth: i64,
    reports: &[VerifyReport],
) -> Outcome {
    let counterexample = !reports.iter().all(VerifyReport::holds);
    let status = if counterexample {
        "counterexample"
    } else {
        "holds-to-depth"
    };
    Outcome {
        record: OutputRecord {
            command: command.into(),
            parameters,
            results: reports
                .iter()
                .map(|r| ResultItem::Report(r.into()))
                .collect(),
            depth,
            status: status.into(),
        },
        counterexample,
    }
}

fn expand(a: &ExpandArgs) -> Result<Outcome> {
    ensure!(a.r != 0, "--r must be nonzero");
    let terms = order_in_range("terms", a.terms)?;
    let ring = match a.modulus {
        None => RingSpec::ExactInteger,
        Some(m) => RingSpec::modular(unsigned("mod", m)?)?,
    };

    let series = pr_series(ring, a.r, terms)?;
    let results = series
        .coefficients()
        .into_iter()
        .enumerate()
        .map(|(n, c)| ResultItem::Coefficient {
            n: n as i64,
            value: c.to_string(),
        })
        .collect();
    let mut parameters = params([("r", a.r.to_string()), ("terms", terms.to_string())]);
    if let Some(m) = a.modulus {
        parameters.insert("mod".into(), m.to_string());
    }
    Ok(Outcome {
        record: OutputRecord {
            command: "expand".into(),
            parameters,
            results,
            depth: terms,
            status: STATUS_OK.into(),
        },
        counterexample: false,
    })
}

fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let claim = CongruenceClaim::new(
        a.r,
        unsigned("A", a.step)?,
        unsigned("B", a.offset)?,
        unsigned("M", a.modulus)?,
    )?;
    let n_max = unsigned("nmax", a.nmax)?;
    claim.required_order(n_max)?;

    let report = verify_claim(&claim, n_max)?;
    let parameters = params([
        ("r", a.r.to_string()),
        ("A", a.step.to_string()),
        ("B", a.offset.to_string()),
        ("M", a.modulus.to_string()),
        ("nmax", a.nmax.to_string()),
    ]);
    Ok(report_outcome("verify", parameters, a.nmax, &[report]))
}

fn theorem(a: &TheoremArgs) -> Result<Outcome> {
    let n_max = unsigned("nmax", a.nmax)?;
    ensure!(
        a.lambda_min <= a.lambda_max,
        "--lambda-min {} exceeds --lambda-max {}",
        a.lambda_min,
        a.lambda_max
    );
    for lambda in a.lambda_min..=a.lambda_max {
        for claim in a.id.claims(lambda)? {
            claim.required_order(n_max)?;
        }
    }

    let run = verify_theorem(a.id, a.lambda_min, a.lambda_max, n_max)?;
    if !run.skipped_lambdas.is_empty() {
        eprintln!("note: skipped lambda {:?} (r = 0)", run.skipped_lambdas);
    }
    let parameters = params([
        ("id", a.id.to_string()),
        ("lambda-min", a.lambda_min.to_string()),
        ("lambda-max", a.lambda_max.to_string()),
        ("nmax", a.nmax.to_string()),
    ]);
    Ok(report_outcome("theorem", parameters, a.nmax, &run.reports))
}

fn identity(a: &IdentityArgs) -> Result<Outcome> {
    let terms = order_in_range("terms", a.terms)?;
    let name = a.name;
    let mut parameters = params([("name", identity_label(name).to_string())]);

    // every flag is checked before anything is expanded
    let (depth, reports) = match name {
        IdentityName::Dissection5 => {
            parameters.insert("terms".into(), terms.to_string());
            (terms, vec![check_identity_dissection5(terms)?])
        }
        IdentityName::Jacobi => {
            parameters.insert("terms".into(), terms.to_string());
            (terms, vec![check_jacobi(terms)?])
        }
        IdentityName::LemmaH5 => {
            let Some(k) = a.k else {
                bail!("lemma-h5 needs --k")
            };
            ensure!((1..=4).contains(&k), "--k must be between 1 and 4, got {k}");
            parameters.insert("terms".into(), terms.to_string());
            parameters.insert("k".into(), k.to_string());
            let report = check_lemma_h5(k as u32, terms)?;
            (report.depth, vec![report])
        }
        IdentityName::Frobenius => {
            let Some(p) = a.p else {
                bail!("frobenius needs --p")
            };
            let p = unsigned("p", p)?;
            parameters.insert("terms".into(), terms.to_string());
            parameters.insert("p".into(), p.to_string());
            (terms, vec![check_frobenius(p, terms)?])
        }
        IdentityName::RamanujanPm4 => {
            ensure!(!a.w.is_empty(), "ramanujan-pm4 needs --w");
            let primes =
                a.w.iter()
                    .map(|&w| unsigned("w", w))
                    .collect::<Result<Vec<_>>>()?;
            ensure!(a.nmax >= 1, "--nmax must be at least 1, got {}", a.nmax);
            for &w in &primes {
                CongruenceClaim::new(-4, w, w.saturating_sub((w + 1) / 6), w)?
                    .required_order(a.nmax as u64 - 1)?;
            }
            let list: Vec<String> = primes.iter().map(u64::to_string).collect();
            parameters.insert("w".into(), list.join(","));
            parameters.insert("nmax".into(), a.nmax.to_string());
            (a.nmax, check_ramanujan_pm4(&primes, a.nmax as u64)?)
        }
    };
    Ok(report_outcome("identity", parameters, depth, &reports))
}

fn identity_label(name: IdentityName) -> &'static str {
    match name {
        IdentityName::Dissection5 => "dissection5",
        IdentityName::LemmaH5 => "lemma-h5",
        IdentityName::Frobenius => "frobenius",
        IdentityName::Jacobi => "jacobi",
        IdentityName::RamanujanPm4 => "ramanujan-pm4",
    }
}

fn run_scan(a: &ScanArgs) -> Result<Outcome> {
    ensure!(
        a.r_min <= a.r_max,
        "--r-min {} exceeds --r-max {}",
        a.r_min,
        a.r_max
    );
    let modulus = unsigned("modulus", a.modulus)?;
    let step = unsigned("A", a.step)?;
    let n_max = unsigned("nmax", a.nmax)?;

    let candidates = scan(a.r_min, a.r_max, modulus, step, n_max)?;
    let parameters = params([
        ("r-min", a.r_min.to_string()),
        ("r-max", a.r_max.to_string()),
        ("modulus", a.modulus.to_string()),
        ("A", a.step.to_string()),
        ("nmax", a.nmax.to_string()),
    ]);
    Ok(Outcome {
        record: OutputRecord {
            command: "scan".into(),
            parameters,
            results: candidates
                .iter()
                .map(|c| ResultItem::Candidate(c.into()))
                .collect(),
            depth: a.nmax,
            status: STATUS_OK.into(),
        },
        counterexample: false,
    })
}

fn oracle(a: &OracleArgs) -> Result<Outcome> {
    let n =
        usize::try_from(a.n).with_context(|| format!("--n must be non-negative, got {}", a.n))?;
    let count = match a.r {
        0 => bail!("--r must be nonzero"),
        r if r > 0 => count_colour_partitions(n, r)?,
        r => count_signed_distinct(n, r)?,
    };
    Ok(Outcome {
        record: OutputRecord {
            command: "oracle".into(),
            parameters: params([("n", a.n.to_string()), ("r", a.r.to_string())]),
            results: vec![ResultItem::Oracle((&count).into())],
            depth: a.n,
            status: STATUS_OK.into(),
        },
        counterexample: false,
    })
}
