//! Integer powers of truncated series.
//!
//! Over the integers we use the classical power recurrence
//!
//! ```text
//! n h_0 g_n = sum_{k=1..n} (k (r + 1) - n) h_k g_{n-k}
//! ```
//!
//! which needs one exact division per coefficient. In `Z/mZ` that division
//! is not available, so modular powers go through binary exponentiation
//! (after inverting the base when `r < 0`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, ToPrimitive, Zero};

use super::inverse::invert_mod;
use super::mul::mul_mod;
use super::{Coeffs, TruncSeries};
use crate::error::SeriesError;
use crate::ring::{Modulus, RingSpec};

pub(crate) fn power_exact(h: &[BigInt], r: i64, len: usize) -> Vec<BigInt> {
    let lead = &h[0];
    let support: Vec<(usize, &BigInt, Option<i64>)> = (1..h.len().min(len))
        .filter(|&k| !h[k].is_zero())
        .map(|k| (k, &h[k], h[k].to_i64()))
        .collect();
    let r_plus_one = r as i128 + 1;

    let mut g: Vec<BigInt> = Vec::with_capacity(len);
    // for r < 0 the lead is +-1, so lead^r = lead^|r|
    g.push(Pow::pow(lead, r.unsigned_abs()));
    for n in 1..len {
        let mut acc = BigInt::zero();
        for &(k, hk, small) in support.iter().take_while(|&&(k, _, _)| k <= n) {
            let weight = k as i128 * r_plus_one - n as i128;
            if weight == 0 {
                continue;
            }
            let fused = small.and_then(|s| i64::try_from(weight).ok()?.checked_mul(s));
            match fused {
                Some(w) => acc += &g[n - k] * w,
                None => acc += &g[n - k] * hk * BigInt::from(weight),
            }
        }
        let divisor = lead * BigInt::from(n);
        let (quotient, remainder) = acc.div_rem(&divisor);
        assert!(
            remainder.is_zero(),
            "power recurrence produced a non-integral coefficient at n = {n} (r = {r}); this is a bug"
        );
        g.push(quotient);
    }
    g
}

pub(crate) fn power_mod(base: &[u64], e: u64, len: usize, m: Modulus) -> Vec<u64> {
    let base = &base[..len.min(base.len())];
    if e == 0 {
        let mut one = vec![0; len];
        if len > 0 {
            one[0] = 1;
        }
        return one;
    }
    let mut acc = base.to_vec();
    let bits = u64::BITS - e.leading_zeros();
    for i in (0..bits - 1).rev() {
        acc = mul_mod(&acc, &acc, len, m);
        if (e >> i) & 1 == 1 {
            acc = mul_mod(&acc, base, len, m);
        }
    }
    acc
}

impl TruncSeries {
    /// `f^r` for any integer `r`.
    ///
    /// The first nonzero coefficient is factored out as `u q^v`; the result
    /// has valuation `r v` and as many known terms as `f` has past `v`.
    /// Negative `r` requires `u` to be a unit.
    pub fn pow_int(&self, r: i64) -> Result<TruncSeries, SeriesError> {
        let Some(first) = self.first_nonzero() else {
            return match r {
                r if r > 0 => {
                    let order = self.order.checked_mul(r).ok_or(SeriesError::Overflow)?;
                    TruncSeries::zero(self.ring, order, order)
                }
                0 => TruncSeries::one(self.ring, 0),
                _ => Err(SeriesError::ZeroSeries { order: self.order }),
            };
        };
        let skip = (first - self.valuation) as usize;
        let len = self.len() - skip;
        let valuation = first.checked_mul(r).ok_or(SeriesError::Overflow)?;
        valuation
            .checked_add(len as i64)
            .ok_or(SeriesError::Overflow)?;

        let coeffs = match (&self.coeffs, self.ring) {
            (Coeffs::Exact(v), ring) => {
                let h = &v[skip..];
                if r < 0 && !ring.is_unit(&h[0]) {
                    return Err(SeriesError::NonUnitLeading {
                        residue: h[0].to_string(),
                        ring,
                    });
                }
                Coeffs::Exact(power_exact(h, r, len))
            }
            (Coeffs::Modular(v), RingSpec::Modular(m)) => {
                let h = &v[skip..];
                if r >= 0 {
                    Coeffs::Modular(power_mod(h, r as u64, len, m))
                } else {
                    let lead_inv = m.inverse(h[0]).ok_or_else(|| SeriesError::NonUnitLeading {
                        residue: h[0].to_string(),
                        ring: self.ring,
                    })?;
                    let inv = invert_mod(h, len, m, lead_inv);
                    Coeffs::Modular(power_mod(&inv, r.unsigned_abs(), len, m))
                }
            }
            _ => unreachable!("coefficient storage always matches the ring"),
        };
        Ok(TruncSeries::from_parts(self.ring, valuation, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(valuation: i64, coeffs: &[i64], order: i64) -> TruncSeries {
        TruncSeries::new(
            RingSpec::ExactInteger,
            valuation,
            coeffs.iter().copied(),
            order,
        )
        .unwrap()
    }

    fn ints(s: &TruncSeries) -> Vec<i64> {
        s.coefficients()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    /// (q;q)_inf through q^11, straight from the pentagonal exponents.
    fn phi12() -> TruncSeries {
        exact(0, &[1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0], 12)
    }

    /// Repeated convolution on plain i64 vectors, independent of the crate.
    fn naive_power(f: &[i64], r: usize) -> Vec<i64> {
        let mut acc = vec![0; f.len()];
        acc[0] = 1;
        for _ in 0..r {
            let mut next = vec![0; f.len()];
            for i in 0..f.len() {
                for j in 0..f.len() - i {
                    next[i + j] += acc[i] * f[j];
                }
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn binomial_series() {
        let f = exact(0, &[1, -1, 0, 0, 0, 0, 0], 7);
        let g = f.pow_int(-2).unwrap();
        assert_eq!(ints(&g), [1, 2, 3, 4, 5, 6, 7]);
    }

    #[test]
    fn two_colour_partitions_of_three() {
        assert_eq!(
            phi12().pow_int(-2).unwrap().coeff(3).unwrap(),
            BigInt::from(10)
        );
    }

    #[test]
    fn fourth_power_matches_direct_convolution() {
        let phi: Vec<i64> = ints(&phi12());
        let oracle = naive_power(&phi, 4);
        assert_eq!(oracle[4], -5);
        let g = phi12().pow_int(4).unwrap();
        assert_eq!(ints(&g), oracle);
    }

    #[test]
    fn non_unit_lead_positive_power() {
        // (2 + q)^3 = 8 + 12 q + 6 q^2 + q^3
        let f = exact(0, &[2, 1, 0, 0, 0], 5);
        assert_eq!(ints(&f.pow_int(3).unwrap()), [8, 12, 6, 1, 0]);
        assert!(matches!(
            f.pow_int(-1),
            Err(SeriesError::NonUnitLeading { .. })
        ));
    }

    #[test]
    fn laurent_power_valuation() {
        // (q^-1 - 1)^2 = q^-2 - 2 q^-1 + 1
        let f = exact(-1, &[1, -1, 0], 2);
        let g = f.pow_int(2).unwrap();
        assert_eq!((g.valuation(), g.order()), (-2, 1));
        assert_eq!(ints(&g), [1, -2, 1]);
        let h = f.pow_int(-1).unwrap();
        assert_eq!((h.valuation(), h.order()), (1, 4));
        assert_eq!(ints(&h), [1, 1, 1]);
    }

    #[test]
    fn zeroth_power_and_zero_series() {
        let one = phi12().pow_int(0).unwrap();
        assert_eq!(ints(&one), [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let zero = TruncSeries::zero(RingSpec::ExactInteger, 0, 3).unwrap();
        let sq = zero.pow_int(2).unwrap();
        assert_eq!((sq.valuation(), sq.order()), (6, 6));
        assert!(zero.pow_int(-1).is_err());
    }

    #[test]
    fn modular_agrees_with_exact() {
        let m = RingSpec::modular(5).unwrap();
        for r in -5..=5 {
            let exact_then_reduce = phi12().pow_int(r).unwrap().reduce_mod(5).unwrap();
            let modular = phi12().reduce_mod(5).unwrap().pow_int(r).unwrap();
            assert_eq!(modular.ring(), m);
            assert!(
                exact_then_reduce.equal_up_to(&modular, 12).unwrap(),
                "r = {r}"
            );
        }
    }

    #[test]
    fn power_mod_zero_exponent() {
        let m = Modulus::new(3).unwrap();
        assert_eq!(power_mod(&[2, 1, 1], 0, 3, m), [1, 0, 0]);
        assert_eq!(power_mod(&[2, 1, 1], 1, 3, m), [2, 1, 1]);
    }
}
