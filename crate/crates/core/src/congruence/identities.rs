//! The q-series identities behind the mod-5 families, each checked by
//! building both sides independently and comparing coefficients.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{CongruenceClaim, Subject, VerifyError, VerifyReport, Witness};
use crate::products::{eta_quotient, euler_phi, jacobi_cube, rogers_ramanujan};
use crate::ring::{Modulus, RingSpec};
use crate::series::{Mismatch, TruncSeries};

const Z: RingSpec = RingSpec::ExactInteger;

/// `H_5(eta^k)` for `k = 1..=4`.
pub const LEMMA_H5_CONSTANTS: [i64; 4] = [-1, -1, 5, -5];

fn mismatch_witness(m: Mismatch) -> Witness {
    Witness {
        n: m.exponent,
        value: m.left - m.right,
    }
}

fn compare(
    name: String,
    lhs: &TruncSeries,
    rhs: &TruncSeries,
    n: i64,
) -> Result<VerifyReport, VerifyError> {
    let witness = lhs.first_difference(rhs, n)?.map(mismatch_witness);
    Ok(VerifyReport::from_outcome(
        Subject::Identity(name),
        n,
        witness,
    ))
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), VerifyError> {
    if cond {
        Ok(())
    } else {
        Err(VerifyError::InvalidArgument(msg()))
    }
}

/// `(q;q) = (q^25;q^25) (R(q^5) - q - q^2 / R(q^5))` to order `n`.
pub fn check_identity_dissection5(n: i64) -> Result<VerifyReport, VerifyError> {
    require(n >= 3, || format!("dissection5 needs order >= 3, got {n}"))?;
    let lhs = euler_phi(Z, n)?;

    let fifth = (n + 4) / 5;
    let r5 = rogers_ramanujan(Z, fifth)?.substitute_power(5)?;
    let phi25 = euler_phi(Z, (n + 24) / 25)?.substitute_power(25)?;
    let q = TruncSeries::monomial(Z, 1, n)?;
    let q2_over_r5 = r5.invert()?.shift(2)?;
    let bracket = r5.sub(&q)?.sub(&q2_over_r5)?;
    let rhs = phi25.mul(&bracket)?;

    compare("dissection5".into(), &lhs, &rhs, n)
}

/// `H_5(eta^k)` equals the constant `LEMMA_H5_CONSTANTS[k - 1]`, with
/// every other exponent divisible by 5 vanishing, through order `n`.
pub fn check_lemma_h5(k: u32, n: i64) -> Result<VerifyReport, VerifyError> {
    require((1..=4).contains(&k), || {
        format!("lemma-h5 needs 1 <= k <= 4, got {k}")
    })?;
    require(n >= 5, || format!("lemma-h5 needs order >= 5, got {n}"))?;
    let expected = BigInt::from(LEMMA_H5_CONSTANTS[k as usize - 1]);

    let power = eta_quotient(Z, n)?.pow_int(k as i64)?;
    let zero_class = power.component(5, 0)?;
    let depth = zero_class.order();

    let mut witness = None;
    for (i, c) in zero_class.coefficients().into_iter().enumerate() {
        let e = zero_class.valuation() + i as i64;
        let target = if e == 0 { &expected } else { &BigInt::zero() };
        if &c != target {
            witness = Some(Witness {
                n: e,
                value: c - target,
            });
            break;
        }
    }
    let mut report =
        VerifyReport::from_outcome(Subject::Identity(format!("lemma-h5 k={k}")), depth, witness);
    report.observed = Some(zero_class.coeff(0)?);
    Ok(report)
}

/// Trial division.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// `(q;q)^p = (q^p;q^p) (mod p)` to order `n`. The left side is expanded
/// over the integers and reduced afterwards.
pub fn check_frobenius(p: u64, n: i64) -> Result<VerifyReport, VerifyError> {
    if !is_prime(p) {
        return Err(VerifyError::NotPrime(p));
    }
    Modulus::new(p)?;
    require(n >= 1, || format!("frobenius needs order >= 1, got {n}"))?;
    let exponent = i64::try_from(p).map_err(|_| VerifyError::NotPrime(p))?;
    let lhs = euler_phi(Z, n)?.pow_int(exponent)?.reduce_mod(p)?;
    let rows = (n + exponent - 1) / exponent;
    let rhs = euler_phi(Z, rows)?
        .substitute_power(exponent)?
        .reduce_mod(p)?;
    compare(format!("frobenius p={p}"), &lhs, &rhs, n)
}

/// `(q;q)^3 = sum (-1)^k (2k+1) q^(k(k+1)/2)` to order `n`.
pub fn check_jacobi(n: i64) -> Result<VerifyReport, VerifyError> {
    require(n >= 1, || format!("jacobi needs order >= 1, got {n}"))?;
    let lhs = jacobi_cube(Z, n)?;
    let rhs = euler_phi(Z, n)?.pow_int(3)?;
    compare("jacobi".into(), &lhs, &rhs, n)
}

/// For each prime `w = 5 (mod 6)`, checks
/// `p_{-4}(w n - (w + 1) / 6) = 0 (mod w)` for `1 <= n <= n_max`.
///
/// Each is run as the claim `{r = -4, A = w, B = w - (w + 1) / 6, M = w}`,
/// so witnesses and depths use the claim's index `n - 1`.
pub fn check_ramanujan_pm4(primes: &[u64], n_max: u64) -> Result<Vec<VerifyReport>, VerifyError> {
    require(n_max >= 1, || "ramanujan-pm4 needs n_max >= 1".into())?;
    require(!primes.is_empty(), || {
        "ramanujan-pm4 needs at least one prime".into()
    })?;
    if let Some(&bad) = primes.iter().find(|&&w| w % 6 != 5 || !is_prime(w)) {
        return Err(VerifyError::NotRamanujanPrime(bad));
    }
    primes
        .iter()
        .map(|&w| {
            let claim = CongruenceClaim::new(-4, w, w - (w + 1) / 6, w)?;
            super::verify_claim(&claim, n_max - 1)
        })
        .collect()
}
