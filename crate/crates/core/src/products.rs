//! Constructors for the q-products used throughout: Euler products on
//! arithmetic progressions, `(q;q)_inf^r`, the Rogers-Ramanujan quotient
//! `R(q)`, the quotient `eta = (q;q)_inf / (q (q^25;q^25)_inf)`, and Jacobi's
//! cube `(q;q)_inf^3`.
//!
//! `euler_phi` and `jacobi_cube` are generated from their closed-form
//! exponent sets; the product constructors build the same objects by
//! multiplying factors. Tests cross-check the two routes.

use crate::error::SeriesError;
use crate::ring::RingSpec;
use crate::series::TruncSeries;

fn require_order(n: i64) -> Result<usize, SeriesError> {
    if n < 1 {
        return Err(SeriesError::InvalidArgument(format!(
            "truncation order must be >= 1, got {n}"
        )));
    }
    usize::try_from(n).map_err(|_| SeriesError::Overflow)
}

/// Builds an ordinary series from a sparse list of `(exponent, coefficient)`.
fn sparse(
    ring: RingSpec,
    len: usize,
    terms: impl IntoIterator<Item = (usize, i64)>,
) -> Result<TruncSeries, SeriesError> {
    let mut dense = vec![0i64; len];
    for (e, c) in terms {
        dense[e] += c;
    }
    TruncSeries::new(ring, 0, dense, len as i64)
}

/// `(q;q)_inf` to order `n`, from the generalized pentagonal numbers:
/// `sum_k (-1)^k q^(k(3k-1)/2)` over all integers `k`.
pub fn euler_phi(ring: RingSpec, n: i64) -> Result<TruncSeries, SeriesError> {
    let len = require_order(n)?;
    let mut terms = vec![(0usize, 1i64)];
    for k in 1usize.. {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let lo = k * (3 * k - 1) / 2;
        let hi = k * (3 * k + 1) / 2;
        if lo >= len {
            break;
        }
        terms.push((lo, sign));
        if hi < len {
            terms.push((hi, sign));
        }
    }
    sparse(ring, len, terms)
}

/// `(q^a; q^m)_inf = prod_{k >= 0} (1 - q^(a + k m))` to order `n`.
pub fn euler_product_ap(
    ring: RingSpec,
    a: i64,
    m: i64,
    n: i64,
) -> Result<TruncSeries, SeriesError> {
    let len = require_order(n)?;
    if a < 1 || m < 1 {
        return Err(SeriesError::InvalidArgument(format!(
            "Euler product needs a >= 1 and m >= 1, got a = {a}, m = {m}"
        )));
    }
    let mut product = TruncSeries::one(ring, n)?;
    let mut exponent = a;
    while exponent < n {
        // multiply by (1 - q^exponent); the factor is exact to any order
        let factor = sparse(ring, len, [(0, 1), (exponent as usize, -1)])?;
        product = product.mul(&factor)?;
        exponent += m;
    }
    Ok(product)
}

/// `sum_n p_r(n) q^n = (q;q)_inf^(-r)` to order `n`.
pub fn pr_series(ring: RingSpec, r: i64, n: i64) -> Result<TruncSeries, SeriesError> {
    if r == 0 {
        return Err(SeriesError::InvalidArgument(
            "p_r is only defined for r != 0".into(),
        ));
    }
    let neg_r = r.checked_neg().ok_or(SeriesError::Overflow)?;
    euler_phi(ring, n)?.pow_int(neg_r)
}

/// `R(q) = (q^2;q^5)(q^3;q^5) / ((q;q^5)(q^4;q^5))` to order `n`.
pub fn rogers_ramanujan(ring: RingSpec, n: i64) -> Result<TruncSeries, SeriesError> {
    let numerator = euler_product_ap(ring, 2, 5, n)?.mul(&euler_product_ap(ring, 3, 5, n)?)?;
    let denominator = euler_product_ap(ring, 1, 5, n)?.mul(&euler_product_ap(ring, 4, 5, n)?)?;
    numerator.mul(&denominator.invert()?)
}

/// `eta = (q;q)_inf / (q (q^25;q^25)_inf)` to order `n`; valuation `-1`.
pub fn eta_quotient(ring: RingSpec, n: i64) -> Result<TruncSeries, SeriesError> {
    require_order(n)?;
    let inner = n + 1;
    let phi = euler_phi(ring, inner)?;
    let phi25 = euler_phi(ring, (inner + 24) / 25)?.substitute_power(25)?;
    Ok(phi.mul(&phi25.invert()?)?.shift(-1)?.truncate(n))
}

/// `(q;q)_inf^3 = sum_{k >= 0} (-1)^k (2k + 1) q^(k(k+1)/2)` to order `n`.
pub fn jacobi_cube(ring: RingSpec, n: i64) -> Result<TruncSeries, SeriesError> {
    let len = require_order(n)?;
    let terms = (0usize..)
        .map(|k| (k * (k + 1) / 2, k))
        .take_while(|&(e, _)| e < len)
        .map(|(e, k)| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (e, sign * (2 * k as i64 + 1))
        });
    sparse(ring, len, terms)
}

/// One factor `(q^start; q^step)_inf^exponent` of a [`ProductSpec`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PochhammerFactor {
    pub start: i64,
    pub step: i64,
    pub exponent: i64,
}

/// `q^leading_power * prod (q^a; q^m)_inf^e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductSpec {
    factors: Vec<PochhammerFactor>,
    leading_power: i64,
}

impl ProductSpec {
    pub fn new(factors: Vec<PochhammerFactor>, leading_power: i64) -> Result<Self, SeriesError> {
        if let Some(bad) = factors.iter().find(|f| f.start < 1 || f.step < 1) {
            return Err(SeriesError::InvalidArgument(format!(
                "factor (q^{}; q^{}) needs both exponents >= 1",
                bad.start, bad.step
            )));
        }
        Ok(ProductSpec {
            factors,
            leading_power,
        })
    }

    /// The quotient `R(q)` as a product description.
    pub fn rogers_ramanujan() -> Self {
        let f = |start, exponent| PochhammerFactor {
            start,
            step: 5,
            exponent,
        };
        ProductSpec {
            factors: vec![f(2, 1), f(3, 1), f(1, -1), f(4, -1)],
            leading_power: 0,
        }
    }

    /// `eta = q^-1 (q;q)_inf (q^25;q^25)_inf^-1`.
    pub fn eta() -> Self {
        ProductSpec {
            factors: vec![
                PochhammerFactor {
                    start: 1,
                    step: 1,
                    exponent: 1,
                },
                PochhammerFactor {
                    start: 25,
                    step: 25,
                    exponent: -1,
                },
            ],
            leading_power: -1,
        }
    }

    pub fn factors(&self) -> &[PochhammerFactor] {
        &self.factors
    }

    pub fn leading_power(&self) -> i64 {
        self.leading_power
    }

    /// Expands the product to absolute order `n`.
    pub fn expand(&self, ring: RingSpec, n: i64) -> Result<TruncSeries, SeriesError> {
        let relative = n
            .checked_sub(self.leading_power)
            .ok_or(SeriesError::Overflow)?;
        let mut acc = TruncSeries::one(ring, require_order(relative)? as i64)?;
        for f in &self.factors {
            let base = euler_product_ap(ring, f.start, f.step, relative)?;
            acc = acc.mul(&base.pow_int(f.exponent)?)?;
        }
        acc.shift(self.leading_power)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    use num_bigint::BigInt;

    const Z: RingSpec = RingSpec::ExactInteger;

    fn small_coefficients(s: &TruncSeries) -> Vec<i64> {
        s.coefficients()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    /// Brute-force product of (1 - q^e) over an explicit exponent list.
    fn naive_product(exponents: impl IntoIterator<Item = usize>, len: usize) -> Vec<i64> {
        let mut acc = vec![0i64; len];
        acc[0] = 1;
        for e in exponents {
            for i in (e..len).rev() {
                acc[i] -= acc[i - e];
            }
        }
        acc
    }

    #[test]
    fn euler_phi_pentagonal_values() {
        let phi = small_coefficients(&euler_phi(Z, 16).unwrap());
        let mut expected = vec![0i64; 16];
        for (e, c) in [(0, 1), (1, -1), (2, -1), (5, 1), (7, 1), (12, -1), (15, -1)] {
            expected[e] = c;
        }
        assert_eq!(phi, expected);
        assert_eq!(phi[4], 0);
        assert!(euler_phi(Z, 0).is_err());
    }

    #[test]
    fn euler_phi_matches_product() {
        for n in [1, 2, 7, 40, 300] {
            let a = euler_phi(Z, n).unwrap();
            let b = euler_product_ap(Z, 1, 1, n).unwrap();
            assert!(a.equal_up_to(&b, n).unwrap(), "n = {n}");
            assert_eq!(
                small_coefficients(&b),
                naive_product(1..n as usize, n as usize)
            );
        }
    }

    #[test]
    fn progression_product_two_mod_five() {
        let s = euler_product_ap(Z, 2, 5, 12).unwrap();
        assert_eq!(
            small_coefficients(&s),
            [1, 0, -1, 0, 0, 0, 0, -1, 0, 1, 0, 0]
        );
        assert_eq!(small_coefficients(&s), naive_product([2, 7], 12));
    }

    #[test]
    fn progression_product_with_no_factor_below_order() {
        let s = euler_product_ap(Z, 9, 1, 9).unwrap();
        assert_eq!(small_coefficients(&s), [1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert!(euler_product_ap(Z, 0, 1, 9).is_err());
    }

    #[test]
    fn pr_series_anchors() {
        assert_eq!(
            pr_series(Z, 1, 10).unwrap().coeff(3).unwrap(),
            BigInt::from(3)
        );
        assert_eq!(
            pr_series(Z, 2, 10).unwrap().coeff(3).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(
            pr_series(Z, -1, 10).unwrap().coeff(5).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            pr_series(Z, -2, 10).unwrap().coeff(3).unwrap(),
            BigInt::from(2)
        );
        assert!(pr_series(Z, 0, 10).is_err());
    }

    #[test]
    fn rogers_ramanujan_head() {
        let r = rogers_ramanujan(Z, 40).unwrap();
        assert_eq!(r.coeff(0).unwrap(), BigInt::from(1));
        assert_eq!(r.coeff(1).unwrap(), BigInt::from(1));
        let roundtrip = r.mul(&r.invert().unwrap()).unwrap();
        assert!(roundtrip
            .equal_up_to(&TruncSeries::one(Z, 40).unwrap(), 40)
            .unwrap());
        let via_spec = ProductSpec::rogers_ramanujan().expand(Z, 40).unwrap();
        assert!(r.equal_up_to(&via_spec, 40).unwrap());
    }

    #[test]
    fn eta_head_and_valuation() {
        let eta = eta_quotient(Z, 60).unwrap();
        assert_eq!((eta.valuation(), eta.order()), (-1, 60));
        assert_eq!(eta.first_nonzero(), Some(-1));
        assert_eq!(eta.coeff(-1).unwrap(), BigInt::from(1));
        assert_eq!(eta.coeff(0).unwrap(), BigInt::from(-1));
        assert_eq!(eta.coeff(1).unwrap(), BigInt::from(-1));
        let via_spec = ProductSpec::eta().expand(Z, 60).unwrap();
        assert!(eta.equal_up_to(&via_spec, 60).unwrap());
    }

    #[test]
    fn eta_zero_class_is_minus_one() {
        let h5 = eta_quotient(Z, 50).unwrap().component(5, 0).unwrap();
        assert_eq!(h5.first_nonzero(), Some(0));
        assert_eq!(h5.coeff(0).unwrap(), BigInt::from(-1));
        for e in (5..50).step_by(5) {
            assert_eq!(h5.coeff(e).unwrap(), BigInt::from(0), "q^{e}");
        }
    }

    #[test]
    fn jacobi_cube_values() {
        let j = jacobi_cube(Z, 11).unwrap();
        let c = small_coefficients(&j);
        assert_eq!([c[0], c[1], c[3], c[6], c[10]], [1, -3, 5, -7, 9]);
        assert_eq!(c[2], 0);
        for n in [1, 2, 50, 400] {
            let j = jacobi_cube(Z, n).unwrap();
            let cube = euler_phi(Z, n).unwrap().pow_int(3).unwrap();
            assert!(j.equal_up_to(&cube, n).unwrap());
        }
    }

    #[test]
    fn product_spec_validation() {
        let bad = PochhammerFactor {
            start: 0,
            step: 5,
            exponent: 1,
        };
        assert!(ProductSpec::new(vec![bad], 0).is_err());
        let spec = ProductSpec::new(
            vec![PochhammerFactor {
                start: 1,
                step: 1,
                exponent: -2,
            }],
            0,
        )
        .unwrap();
        let s = spec.expand(Z, 4).unwrap();
        assert_eq!(small_coefficients(&s), [1, 2, 5, 10]);
    }

    #[test]
    fn modular_constructors_reduce() {
        let m5 = RingSpec::modular(5).unwrap();
        let phi = euler_phi(m5, 8).unwrap();
        assert_eq!(phi.residues().unwrap(), [1, 4, 4, 0, 0, 1, 0, 1]);
        let j = jacobi_cube(m5, 7).unwrap();
        assert_eq!(j.residues().unwrap(), [1, 2, 0, 0, 0, 0, 3]);
    }
}
