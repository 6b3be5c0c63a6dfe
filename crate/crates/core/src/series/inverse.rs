use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Coeffs, TruncSeries};
use crate::error::SeriesError;
use crate::ring::{Modulus, RingSpec};

/// `g` with `h * g = 1` to `len` terms, for `h[0] = +-1`.
pub(crate) fn invert_exact(h: &[BigInt], len: usize) -> Vec<BigInt> {
    let lead = &h[0];
    debug_assert!(lead.is_one() || (-lead).is_one());
    let support: Vec<usize> = (1..h.len().min(len)).filter(|&k| !h[k].is_zero()).collect();
    let mut g: Vec<BigInt> = Vec::with_capacity(len);
    g.push(lead.clone());
    for n in 1..len {
        let mut acc = BigInt::zero();
        for &k in support.iter().take_while(|&&k| k <= n) {
            acc += &h[k] * &g[n - k];
        }
        // lead is its own inverse
        g.push(-(acc * lead));
    }
    g
}

/// `g` with `h * g = 1` to `len` terms, for `h[0]` a unit mod `m`.
pub(crate) fn invert_mod(h: &[u64], len: usize, m: Modulus, lead_inv: u64) -> Vec<u64> {
    let support: Vec<usize> = (1..h.len().min(len)).filter(|&k| h[k] != 0).collect();
    let modulus = m.get() as u128;
    let neg_inv = m.neg(lead_inv);
    let mut g: Vec<u64> = Vec::with_capacity(len);
    g.push(lead_inv);
    for n in 1..len {
        let mut acc: u128 = 0;
        for &k in support.iter().take_while(|&&k| k <= n) {
            acc += (h[k] * g[n - k]) as u128;
        }
        g.push(m.mul((acc % modulus) as u64, neg_inv));
    }
    g
}

impl TruncSeries {
    /// Multiplicative inverse.
    ///
    /// The first nonzero stored coefficient must be a unit of the ring. If it
    /// sits at exponent `v`, the result has valuation `-v` and carries the
    /// same number of known terms as the input past `v`.
    pub fn invert(&self) -> Result<TruncSeries, SeriesError> {
        let first = self
            .first_nonzero()
            .ok_or(SeriesError::ZeroSeries { order: self.order })?;
        let skip = (first - self.valuation) as usize;
        let len = self.len() - skip;
        let valuation = first.checked_neg().ok_or(SeriesError::Overflow)?;
        let coeffs = match (&self.coeffs, self.ring) {
            (Coeffs::Exact(v), _) => {
                let h = &v[skip..];
                if !self.ring.is_unit(&h[0]) {
                    return Err(SeriesError::NonUnitLeading {
                        residue: h[0].to_string(),
                        ring: self.ring,
                    });
                }
                Coeffs::Exact(invert_exact(h, len))
            }
            (Coeffs::Modular(v), RingSpec::Modular(m)) => {
                let h = &v[skip..];
                let lead_inv = m.inverse(h[0]).ok_or_else(|| SeriesError::NonUnitLeading {
                    residue: h[0].to_string(),
                    ring: self.ring,
                })?;
                Coeffs::Modular(invert_mod(h, len, m, lead_inv))
            }
            _ => unreachable!("coefficient storage always matches the ring"),
        };
        Ok(TruncSeries::from_parts(self.ring, valuation, coeffs))
    }
}
