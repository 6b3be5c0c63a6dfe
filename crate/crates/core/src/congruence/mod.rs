//! Finite-depth verification of congruences `p_r(A n + B) = 0 (mod M)`.
//!
//! Nothing here proves anything: every report states the depth to which a
//! statement was checked coefficient by coefficient.

mod identities;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use thiserror::Error;

use crate::error::SeriesError;
use crate::products::pr_series;
use crate::ring::{Modulus, RingSpec};
use crate::series::TruncSeries;

pub use identities::{
    check_frobenius, check_identity_dissection5, check_jacobi, check_lemma_h5, check_ramanujan_pm4,
    is_prime, LEMMA_H5_CONSTANTS,
};

/// Largest series order a single verification may request.
pub const MAX_VERIFY_ORDER: u64 = 2_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("invalid claim: {0}")]
    InvalidClaim(String),
    #[error("verification needs series order {requested}, above the limit {MAX_VERIFY_ORDER}")]
    InfeasibleDepth { requested: u128 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime congruent to 5 mod 6")]
    NotRamanujanPrime(u64),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// The statement `p_r(step * n + offset) = 0 (mod modulus)` for all `n >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CongruenceClaim {
    r: i64,
    step: u64,
    offset: u64,
    modulus: u64,
}

impl CongruenceClaim {
    pub fn new(r: i64, step: u64, offset: u64, modulus: u64) -> Result<Self, VerifyError> {
        if r == 0 {
            return Err(VerifyError::InvalidClaim("r must be nonzero".into()));
        }
        if step < 1 {
            return Err(VerifyError::InvalidClaim("A must be >= 1".into()));
        }
        if offset >= step {
            return Err(VerifyError::InvalidClaim(format!(
                "B must satisfy 0 <= B < A, got A = {step}, B = {offset}"
            )));
        }
        Modulus::new(modulus)
            .map_err(|_| VerifyError::InvalidClaim(format!("M = {modulus} is out of range")))?;
        Ok(CongruenceClaim {
            r,
            step,
            offset,
            modulus,
        })
    }

    pub fn r(&self) -> i64 {
        self.r
    }

    /// `A`
    pub fn step(&self) -> u64 {
        self.step
    }

    /// `B`
    pub fn offset(&self) -> u64 {
        self.offset
    }

    /// `M`
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Series order needed to see `p_r(A n + B)` for every `n <= n_max`.
    pub fn required_order(&self, n_max: u64) -> Result<i64, VerifyError> {
        let requested = self.step as u128 * n_max as u128 + self.offset as u128 + 1;
        if requested > MAX_VERIFY_ORDER as u128 {
            return Err(VerifyError::InfeasibleDepth { requested });
        }
        Ok(requested as i64)
    }

    fn ring(&self) -> RingSpec {
        RingSpec::modular(self.modulus).expect("validated on construction")
    }

    /// Scans an ordinary series (in any ring) for the first `n <= n_max`
    /// whose coefficient at `A n + B` is nonzero mod `M`.
    fn first_violation(
        &self,
        series: &TruncSeries,
        n_max: u64,
    ) -> Result<Option<Witness>, VerifyError> {
        let m = Modulus::new(self.modulus)?;
        for n in 0..=n_max {
            let e = (self.step * n + self.offset) as i64;
            let residue = m.reduce_bigint(&series.coeff(e)?);
            if residue != 0 {
                return Ok(Some(Witness {
                    n: n as i64,
                    value: BigInt::from(residue),
                }));
            }
        }
        Ok(None)
    }
}

impl fmt::Display for CongruenceClaim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "p_{}({}n + {}) = 0 (mod {})",
            self.r, self.step, self.offset, self.modulus
        )
    }
}

/// What a report is about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Claim(CongruenceClaim),
    Identity(String),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Claim(c) => c.fmt(f),
            Subject::Identity(name) => f.write_str(name),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerifyStatus {
    HoldsToDepth,
    Counterexample,
}

impl VerifyStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerifyStatus::HoldsToDepth => "holds-to-depth",
            VerifyStatus::Counterexample => "counterexample",
        }
    }
}

/// Where a check failed. For claims, `n` indexes the progression and
/// `value` is the nonzero residue of `p_r(A n + B)`. For identities, `n` is
/// the exponent of the first disagreeing term and `value` the offending
/// coefficient (or difference).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub n: i64,
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub subject: Subject,
    /// Largest `n` checked for claims; series order compared for identities.
    pub depth: i64,
    pub status: VerifyStatus,
    pub witness: Option<Witness>,
    /// Value an identity evaluated to, when it reduces to a constant.
    pub observed: Option<BigInt>,
}

impl VerifyReport {
    pub(crate) fn from_outcome(subject: Subject, depth: i64, witness: Option<Witness>) -> Self {
        let status = if witness.is_some() {
            VerifyStatus::Counterexample
        } else {
            VerifyStatus::HoldsToDepth
        };
        debug_assert!(witness.as_ref().is_none_or(|w| !w.value.is_zero()));
        VerifyReport {
            subject,
            depth,
            status,
            witness,
            observed: None,
        }
    }

    pub fn holds(&self) -> bool {
        self.status == VerifyStatus::HoldsToDepth
    }
}

/// Checks `claim` for `0 <= n <= n_max`, computing in `Z/MZ` throughout.
pub fn verify_claim(claim: &CongruenceClaim, n_max: u64) -> Result<VerifyReport, VerifyError> {
    let order = claim.required_order(n_max)?;
    let series = pr_series(claim.ring(), claim.r, order)?;
    let progression = series.dissect(claim.step as i64, claim.offset as i64)?;
    let residues = progression.residues().expect("modular series");
    let witness = residues[..=n_max as usize]
        .iter()
        .position(|&c| c != 0)
        .map(|n| Witness {
            n: n as i64,
            value: BigInt::from(residues[n]),
        });
    Ok(VerifyReport::from_outcome(
        Subject::Claim(*claim),
        n_max as i64,
        witness,
    ))
}

/// Same as [`verify_claim`], but expands `p_r` over the integers and only
/// reduces at the end. Slower; exists to audit the modular path.
pub fn verify_claim_exact(
    claim: &CongruenceClaim,
    n_max: u64,
) -> Result<VerifyReport, VerifyError> {
    let order = claim.required_order(n_max)?;
    let series = pr_series(RingSpec::ExactInteger, claim.r, order)?;
    let witness = claim.first_violation(&series, n_max)?;
    Ok(VerifyReport::from_outcome(
        Subject::Claim(*claim),
        n_max as i64,
        witness,
    ))
}

/// The five families of congruences modulo 5.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `p_{-(5l+1)}(5n + k) = 0` for `k = 3, 4`
    T1,
    /// `p_{-(5l+3)}(5n + k) = 0` for `k = 2, 3, 4`
    T2,
    /// `p_{-(5l+4)}(5n + 4) = 0`
    T3,
    /// `p_{-(25l+1)}(25n + 5k + 1) = 0` for `k = 1..4`
    T4,
    /// `p_{-(25l+2)}(25n + 5k + 2) = 0` for `k = 1..4`
    T5,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem::T1,
        Theorem::T2,
        Theorem::T3,
        Theorem::T4,
        Theorem::T5,
    ];
    pub const MODULUS: u64 = 5;

    /// The `r` the family prescribes for a given `lambda`.
    pub fn r_for(self, lambda: i64) -> Option<i64> {
        let (scale, shift) = match self {
            Theorem::T1 => (5, 1),
            Theorem::T2 => (5, 3),
            Theorem::T3 => (5, 4),
            Theorem::T4 => (25, 1),
            Theorem::T5 => (25, 2),
        };
        lambda.checked_mul(scale)?.checked_add(shift)?.checked_neg()
    }

    /// `(A, B)` pairs asserted for every `lambda`.
    pub fn progressions(self) -> Vec<(u64, u64)> {
        match self {
            Theorem::T1 => vec![(5, 3), (5, 4)],
            Theorem::T2 => vec![(5, 2), (5, 3), (5, 4)],
            Theorem::T3 => vec![(5, 4)],
            Theorem::T4 => (1..=4).map(|l| (25, 5 * l + 1)).collect(),
            Theorem::T5 => (1..=4).map(|l| (25, 5 * l + 2)).collect(),
        }
    }

    /// The claims the family makes for one `lambda`; empty if `r` would be 0.
    pub fn claims(self, lambda: i64) -> Result<Vec<CongruenceClaim>, VerifyError> {
        let r = self.r_for(lambda).ok_or_else(|| {
            VerifyError::InvalidArgument(format!("lambda = {lambda} overflows r"))
        })?;
        if r == 0 {
            return Ok(Vec::new());
        }
        self.progressions()
            .into_iter()
            .map(|(a, b)| CongruenceClaim::new(r, a, b, Self::MODULUS))
            .collect()
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Theorem {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "T1" => Ok(Theorem::T1),
            "T2" => Ok(Theorem::T2),
            "T3" => Ok(Theorem::T3),
            "T4" => Ok(Theorem::T4),
            "T5" => Ok(Theorem::T5),
            _ => Err(VerifyError::InvalidArgument(format!(
                "unknown theorem id {s:?}; expected T1..T5"
            ))),
        }
    }
}

/// Outcome of a theorem suite over a range of `lambda`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRun {
    pub theorem: Theorem,
    pub reports: Vec<VerifyReport>,
    /// Values of `lambda` that would give `r = 0` and were not checked.
    pub skipped_lambdas: Vec<i64>,
}

impl TheoremRun {
    pub fn all_hold(&self) -> bool {
        self.reports.iter().all(VerifyReport::holds)
    }
}

/// Checks every claim `theorem` makes for `lambda` in
/// `lambda_min..=lambda_max`, for `0 <= n <= n_max`.
///
/// Claims sharing a `lambda` share one series expansion. Different values of
/// `lambda` run in parallel; report order is deterministic.
pub fn verify_theorem(
    theorem: Theorem,
    lambda_min: i64,
    lambda_max: i64,
    n_max: u64,
) -> Result<TheoremRun, VerifyError> {
    if lambda_min > lambda_max {
        return Err(VerifyError::InvalidArgument(format!(
            "empty lambda range {lambda_min}..={lambda_max}"
        )));
    }
    let per_lambda: Vec<(i64, Vec<CongruenceClaim>)> = (lambda_min..=lambda_max)
        .map(|l| theorem.claims(l).map(|c| (l, c)))
        .collect::<Result<_, _>>()?;
    let skipped_lambdas = per_lambda
        .iter()
        .filter(|(_, claims)| claims.is_empty())
        .map(|(l, _)| *l)
        .collect();

    let batches: Vec<Vec<VerifyReport>> = per_lambda
        .par_iter()
        .filter(|(_, claims)| !claims.is_empty())
        .map(|(_, claims)| verify_shared(claims, n_max))
        .collect::<Result<_, _>>()?;

    Ok(TheoremRun {
        theorem,
        reports: batches.into_iter().flatten().collect(),
        skipped_lambdas,
    })
}

/// Verifies claims that share `r` and `M` against a single expansion.
fn verify_shared(claims: &[CongruenceClaim], n_max: u64) -> Result<Vec<VerifyReport>, VerifyError> {
    let order = claims
        .iter()
        .map(|c| c.required_order(n_max))
        .try_fold(1, |acc, o| o.map(|o| acc.max(o)))?;
    let first = claims[0];
    debug_assert!(claims
        .iter()
        .all(|c| c.r == first.r && c.modulus == first.modulus));
    let series = pr_series(first.ring(), first.r, order)?;
    claims
        .iter()
        .map(|claim| {
            let witness = claim.first_violation(&series, n_max)?;
            Ok(VerifyReport::from_outcome(
                Subject::Claim(*claim),
                n_max as i64,
                witness,
            ))
        })
        .collect()
}

/// A congruence observed to hold for every `n <= depth`. Not a proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Candidate {
    pub claim: CongruenceClaim,
    pub depth: u64,
}

impl Candidate {
    pub fn label(&self) -> String {
        format!("candidate to depth {}", self.depth)
    }
}

/// Finds every `B` in `0..A` with `p_r(A n + B) = 0 (mod M)` for all
/// `n <= n_max`, for each nonzero `r` in `r_min..=r_max`.
pub fn scan(
    r_min: i64,
    r_max: i64,
    modulus: u64,
    step: u64,
    n_max: u64,
) -> Result<Vec<Candidate>, VerifyError> {
    if step < 2 {
        return Err(VerifyError::InvalidArgument(format!(
            "A must be >= 2, got {step}"
        )));
    }
    if n_max < 10 {
        return Err(VerifyError::InvalidArgument(format!(
            "n_max must be >= 10 to avoid vacuous candidates, got {n_max}"
        )));
    }
    let ring = RingSpec::modular(modulus)?;
    let rs: Vec<i64> = (r_min..=r_max).filter(|&r| r != 0).collect();
    if rs.is_empty() {
        return Err(VerifyError::InvalidArgument(format!(
            "r range {r_min}..={r_max} contains no nonzero value"
        )));
    }
    // the largest offset B = A - 1 sets the depth
    let probe = CongruenceClaim::new(rs[0], step, step - 1, modulus)?;
    let order = probe.required_order(n_max)?;

    let found: Vec<Vec<Candidate>> = rs
        .par_iter()
        .map(|&r| {
            let series = pr_series(ring, r, order)?;
            let residues = series.residues().expect("modular series");
            let mut hits = Vec::new();
            for offset in 0..step {
                let holds = (0..=n_max).all(|n| residues[(step * n + offset) as usize] == 0);
                if holds {
                    hits.push(Candidate {
                        claim: CongruenceClaim::new(r, step, offset, modulus)?,
                        depth: n_max,
                    });
                }
            }
            Ok(hits)
        })
        .collect::<Result<_, VerifyError>>()?;
    Ok(found.into_iter().flatten().collect())
}
