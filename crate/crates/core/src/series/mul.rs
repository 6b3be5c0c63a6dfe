//! Truncated Cauchy products.
//!
//! Both kernels are schoolbook convolutions written as row updates
//! `out[j..] += a_j * b[..]`, driven by whichever operand has fewer nonzero
//! terms. Sparse factors such as `(q;q)_inf` therefore cost
//! `O(nnz * len)` rather than `O(len^2)`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Coeffs, TruncSeries};
use crate::error::SeriesError;
use crate::ring::{Modulus, RingSpec};

fn nonzero_count<T, F: Fn(&T) -> bool>(v: &[T], is_zero: F) -> usize {
    v.iter().filter(|x| !is_zero(x)).count()
}

pub(crate) fn mul_exact(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let a = &a[..len.min(a.len())];
    let b = &b[..len.min(b.len())];
    let (rows, cols) = if nonzero_count(a, Zero::is_zero) <= nonzero_count(b, Zero::is_zero) {
        (a, b)
    } else {
        (b, a)
    };
    let mut out = vec![BigInt::zero(); len];
    for (j, x) in rows.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out[j..].iter_mut().zip(cols) {
            if !y.is_zero() {
                *o += x * y;
            }
        }
    }
    out
}

pub(crate) fn mul_mod(a: &[u64], b: &[u64], len: usize, m: Modulus) -> Vec<u64> {
    let a = &a[..len.min(a.len())];
    let b = &b[..len.min(b.len())];
    let (rows, cols) = if nonzero_count(a, |&x| x == 0) <= nonzero_count(b, |&x| x == 0) {
        (a, b)
    } else {
        (b, a)
    };
    let modulus = m.get();
    let budget = m.lazy_budget();
    let mut pending = 0u64;
    let mut out = vec![0u64; len];
    for (j, &x) in rows.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (o, &y) in out[j..].iter_mut().zip(cols) {
            *o += x * y;
        }
        pending += 1;
        if pending == budget {
            // rows only ever touch out[j..], so earlier entries are settled
            out[j..].iter_mut().for_each(|o| *o %= modulus);
            pending = 0;
        }
    }
    out.iter_mut().for_each(|o| *o %= modulus);
    out
}

impl TruncSeries {
    /// Cauchy product. The result has valuation `val(f) + val(g)` and order
    /// `min(val(f) + order(g), val(g) + order(f))`.
    pub fn mul(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.same_ring(other)?;
        let valuation = self
            .valuation
            .checked_add(other.valuation)
            .ok_or(SeriesError::Overflow)?;
        let len = self.len().min(other.len());
        let coeffs = match (&self.coeffs, &other.coeffs, self.ring) {
            (Coeffs::Exact(a), Coeffs::Exact(b), _) => Coeffs::Exact(mul_exact(a, b, len)),
            (Coeffs::Modular(a), Coeffs::Modular(b), RingSpec::Modular(m)) => {
                Coeffs::Modular(mul_mod(a, b, len, m))
            }
            _ => unreachable!("coefficient storage always matches the ring"),
        };
        Ok(TruncSeries::from_parts(self.ring, valuation, coeffs))
    }
}
