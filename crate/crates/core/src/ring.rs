//! Coefficient rings: the exact integers, or the integers modulo `m`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::SeriesError;

/// A modulus `m` with `2 <= m <= 2^32 - 1`.
///
/// The upper bound keeps every product of two residues inside a `u64`, which
/// the multiplication kernels rely on for delayed reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Modulus(u64);

impl Modulus {
    pub const MAX: u64 = u32::MAX as u64;

    pub fn new(m: u64) -> Result<Self, SeriesError> {
        if (2..=Self::MAX).contains(&m) {
            Ok(Modulus(m))
        } else {
            Err(SeriesError::InvalidModulus(m as i128))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn reduce_i64(self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    pub fn reduce_bigint(self, x: &BigInt) -> u64 {
        x.mod_floor(&BigInt::from(self.0))
            .to_u64()
            .expect("residue fits in u64")
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    /// Multiplicative inverse of `a`, if `gcd(a, m) = 1`.
    pub fn inverse(self, a: u64) -> Option<u64> {
        let egcd = (a as i64).extended_gcd(&(self.0 as i64));
        if egcd.gcd != 1 {
            return None;
        }
        Some(self.reduce_i64(egcd.x))
    }

    /// How many products of two residues can be summed into a `u64` that
    /// already holds a reduced residue, without overflowing.
    pub(crate) fn lazy_budget(self) -> u64 {
        let max_product = (self.0 - 1) * (self.0 - 1);
        if max_product == 0 {
            return u64::MAX;
        }
        ((u64::MAX - self.0) / max_product).max(1)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Selects the coefficient ring of a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    ExactInteger,
    Modular(Modulus),
}

impl RingSpec {
    /// Shorthand for `RingSpec::Modular(Modulus::new(m)?)`.
    pub fn modular(m: u64) -> Result<Self, SeriesError> {
        Ok(RingSpec::Modular(Modulus::new(m)?))
    }

    pub fn modulus(self) -> Option<Modulus> {
        match self {
            RingSpec::ExactInteger => None,
            RingSpec::Modular(m) => Some(m),
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, RingSpec::ExactInteger)
    }

    /// Whether `x` is invertible in this ring.
    pub fn is_unit(self, x: &BigInt) -> bool {
        match self {
            RingSpec::ExactInteger => x.abs() == BigInt::from(1),
            RingSpec::Modular(m) => {
                let r = m.reduce_bigint(x);
                !r.is_zero() && m.inverse(r).is_some()
            }
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::ExactInteger => f.write_str("Z"),
            RingSpec::Modular(m) => write!(f, "Z/{m}Z"),
        }
    }
}
