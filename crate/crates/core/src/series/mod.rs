//! Truncated Laurent series in one variable `q`.
//!
//! A [`TruncSeries`] stores a dense block of coefficients starting at its
//! valuation and stopping at its truncation order, which is exclusive: the
//! coefficient of `q^e` is known exactly for every `e < order` and unknown
//! from `order` on. Every operation computes the largest order it can
//! guarantee and records it on the result.
//!
//! Series are never auto-normalized. Leading zeros are kept, so two series
//! describing the same element may differ structurally; compare them with
//! [`TruncSeries::equal_up_to`].

mod inverse;
mod mul;
mod power;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::SeriesError;
use crate::ring::{Modulus, RingSpec};

#[derive(Clone, Debug)]
pub(crate) enum Coeffs {
    Exact(Vec<BigInt>),
    Modular(Vec<u64>),
}

impl Coeffs {
    fn len(&self) -> usize {
        match self {
            Coeffs::Exact(v) => v.len(),
            Coeffs::Modular(v) => v.len(),
        }
    }

    fn is_zero_at(&self, i: usize) -> bool {
        match self {
            Coeffs::Exact(v) => v[i].is_zero(),
            Coeffs::Modular(v) => v[i] == 0,
        }
    }

    fn get(&self, i: usize) -> BigInt {
        match self {
            Coeffs::Exact(v) => v[i].clone(),
            Coeffs::Modular(v) => BigInt::from(v[i]),
        }
    }

    /// Applies a purely positional transformation, filling gaps with zero.
    fn remap<F>(&self, len: usize, source: F) -> Coeffs
    where
        F: Fn(usize) -> Option<usize>,
    {
        match self {
            Coeffs::Exact(v) => Coeffs::Exact(
                (0..len)
                    .map(|i| source(i).map_or_else(BigInt::zero, |s| v[s].clone()))
                    .collect(),
            ),
            Coeffs::Modular(v) => {
                Coeffs::Modular((0..len).map(|i| source(i).map_or(0, |s| v[s])).collect())
            }
        }
    }
}

/// A truncated Laurent series `sum_{valuation <= e < order} c_e q^e + O(q^order)`.
///
/// Values are immutable once built; every operation returns a new series.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    ring: RingSpec,
    valuation: i64,
    order: i64,
    coeffs: Coeffs,
}

/// First exponent at which two series disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub exponent: i64,
    pub left: BigInt,
    pub right: BigInt,
}

fn checked_len(valuation: i64, order: i64) -> Result<usize, SeriesError> {
    if order < valuation {
        return Err(SeriesError::OrderBelowValuation { valuation, order });
    }
    usize::try_from(order - valuation).map_err(|_| SeriesError::Overflow)
}

impl TruncSeries {
    /// Builds a series from integer coefficients; `coeffs[i]` multiplies
    /// `q^(valuation + i)`. Coefficients are reduced into `ring`.
    pub fn new<I>(
        ring: RingSpec,
        valuation: i64,
        coeffs: I,
        order: i64,
    ) -> Result<Self, SeriesError>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let expected = order.checked_sub(valuation).ok_or(SeriesError::Overflow)?;
        let values: Vec<BigInt> = coeffs.into_iter().map(Into::into).collect();
        if expected < 0 || values.len() as i64 != expected {
            return Err(SeriesError::LengthMismatch {
                expected,
                found: values.len(),
            });
        }
        let coeffs = match ring {
            RingSpec::ExactInteger => Coeffs::Exact(values),
            RingSpec::Modular(m) => {
                Coeffs::Modular(values.iter().map(|c| m.reduce_bigint(c)).collect())
            }
        };
        Ok(TruncSeries {
            ring,
            valuation,
            order,
            coeffs,
        })
    }

    pub(crate) fn from_parts(ring: RingSpec, valuation: i64, coeffs: Coeffs) -> Self {
        debug_assert!(match (&coeffs, ring) {
            (Coeffs::Exact(_), RingSpec::ExactInteger) => true,
            (Coeffs::Modular(v), RingSpec::Modular(m)) => v.iter().all(|&c| c < m.get()),
            _ => false,
        });
        let order = valuation + coeffs.len() as i64;
        TruncSeries {
            ring,
            valuation,
            order,
            coeffs,
        }
    }

    /// The zero series on `[valuation, order)`.
    pub fn zero(ring: RingSpec, valuation: i64, order: i64) -> Result<Self, SeriesError> {
        let len = checked_len(valuation, order)?;
        let coeffs = match ring {
            RingSpec::ExactInteger => Coeffs::Exact(vec![BigInt::zero(); len]),
            RingSpec::Modular(_) => Coeffs::Modular(vec![0; len]),
        };
        Ok(TruncSeries {
            ring,
            valuation,
            order,
            coeffs,
        })
    }

    /// `q^exponent + O(q^order)`.
    pub fn monomial(ring: RingSpec, exponent: i64, order: i64) -> Result<Self, SeriesError> {
        if order <= exponent {
            return TruncSeries::zero(ring, order, order);
        }
        let mut s = TruncSeries::zero(ring, exponent, order)?;
        match &mut s.coeffs {
            Coeffs::Exact(v) => v[0] = BigInt::one(),
            Coeffs::Modular(v) => v[0] = 1,
        }
        Ok(s)
    }

    /// The constant `1 + O(q^order)`.
    pub fn one(ring: RingSpec, order: i64) -> Result<Self, SeriesError> {
        TruncSeries::monomial(ring, 0, order)
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    /// Exclusive truncation order.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Number of stored coefficients, `order - valuation`.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.len() == 0
    }

    /// Exponent of the first nonzero stored coefficient.
    pub fn first_nonzero(&self) -> Option<i64> {
        (0..self.len())
            .find(|&i| !self.coeffs.is_zero_at(i))
            .map(|i| self.valuation + i as i64)
    }

    /// True when every known coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.first_nonzero().is_none()
    }

    /// Coefficient of `q^exponent`. In a modular ring this is the canonical
    /// residue in `[0, m)`.
    pub fn coeff(&self, exponent: i64) -> Result<BigInt, SeriesError> {
        if exponent >= self.order {
            return Err(SeriesError::OutOfTruncation {
                exponent,
                order: self.order,
            });
        }
        if exponent < self.valuation {
            return Ok(BigInt::zero());
        }
        Ok(self.coeffs.get((exponent - self.valuation) as usize))
    }

    /// All stored coefficients, from the valuation up to the order.
    pub fn coefficients(&self) -> Vec<BigInt> {
        (0..self.len()).map(|i| self.coeffs.get(i)).collect()
    }

    /// Stored residues, when the ring is modular.
    pub fn residues(&self) -> Option<&[u64]> {
        match &self.coeffs {
            Coeffs::Modular(v) => Some(v),
            Coeffs::Exact(_) => None,
        }
    }

    fn same_ring(&self, other: &TruncSeries) -> Result<(), SeriesError> {
        if self.ring != other.ring {
            return Err(SeriesError::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }

    /// Index into `coeffs` for an exponent inside the stored window.
    fn index_of(&self, exponent: i64) -> Option<usize> {
        if exponent >= self.valuation && exponent < self.order {
            Some((exponent - self.valuation) as usize)
        } else {
            None
        }
    }

    fn combine(&self, other: &TruncSeries, subtract: bool) -> Result<TruncSeries, SeriesError> {
        self.same_ring(other)?;
        let valuation = self.valuation.min(other.valuation);
        let order = self.order.min(other.order);
        let len = checked_len(valuation, order)?;
        let exponents = (0..len).map(|i| valuation + i as i64);
        let coeffs = match (&self.coeffs, &other.coeffs, self.ring) {
            (Coeffs::Exact(a), Coeffs::Exact(b), _) => Coeffs::Exact(
                exponents
                    .map(|e| {
                        let x = self.index_of(e).map_or_else(BigInt::zero, |i| a[i].clone());
                        let y = other
                            .index_of(e)
                            .map_or_else(BigInt::zero, |i| b[i].clone());
                        if subtract {
                            x - y
                        } else {
                            x + y
                        }
                    })
                    .collect(),
            ),
            (Coeffs::Modular(a), Coeffs::Modular(b), RingSpec::Modular(m)) => Coeffs::Modular(
                exponents
                    .map(|e| {
                        let x = self.index_of(e).map_or(0, |i| a[i]);
                        let y = other.index_of(e).map_or(0, |i| b[i]);
                        if subtract {
                            m.sub(x, y)
                        } else {
                            m.add(x, y)
                        }
                    })
                    .collect(),
            ),
            _ => unreachable!("coefficient storage always matches the ring"),
        };
        Ok(TruncSeries {
            ring: self.ring,
            valuation,
            order,
            coeffs,
        })
    }

    /// Coefficientwise sum. Valuation is the smaller valuation, order the
    /// smaller order.
    pub fn add(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &TruncSeries) -> Result<TruncSeries, SeriesError> {
        self.combine(other, true)
    }

    pub fn neg(&self) -> TruncSeries {
        self.scale(-1)
    }

    /// Multiplies every coefficient by the integer `c`.
    pub fn scale(&self, c: i64) -> TruncSeries {
        let coeffs = match (&self.coeffs, self.ring) {
            (Coeffs::Exact(v), _) => Coeffs::Exact(v.iter().map(|x| x * c).collect()),
            (Coeffs::Modular(v), RingSpec::Modular(m)) => {
                let c = m.reduce_i64(c);
                Coeffs::Modular(v.iter().map(|&x| m.mul(x, c)).collect())
            }
            _ => unreachable!("coefficient storage always matches the ring"),
        };
        TruncSeries {
            coeffs,
            ..self.clone()
        }
    }

    /// Multiplies by `q^d`: valuation and order both move by `d`.
    pub fn shift(&self, d: i64) -> Result<TruncSeries, SeriesError> {
        Ok(TruncSeries {
            ring: self.ring,
            valuation: self.valuation.checked_add(d).ok_or(SeriesError::Overflow)?,
            order: self.order.checked_add(d).ok_or(SeriesError::Overflow)?,
            coeffs: self.coeffs.clone(),
        })
    }

    /// `f(q^k)`. Exponents between multiples of `k` are known zeros, so the
    /// order scales to `k * order`.
    pub fn substitute_power(&self, k: i64) -> Result<TruncSeries, SeriesError> {
        if k < 1 {
            return Err(SeriesError::InvalidArgument(format!(
                "substitution power must be >= 1, got {k}"
            )));
        }
        let valuation = self.valuation.checked_mul(k).ok_or(SeriesError::Overflow)?;
        let order = self.order.checked_mul(k).ok_or(SeriesError::Overflow)?;
        let len = checked_len(valuation, order)?;
        let step = k as usize;
        let coeffs = self
            .coeffs
            .remap(len, |i| if i % step == 0 { Some(i / step) } else { None });
        Ok(TruncSeries {
            ring: self.ring,
            valuation,
            order,
            coeffs,
        })
    }

    /// Keeps only the terms whose exponent is congruent to `j` modulo `m`, at
    /// their original exponents. `component(5, 0)` is the `H_5` operator.
    pub fn component(&self, m: i64, j: i64) -> Result<TruncSeries, SeriesError> {
        if m < 1 {
            return Err(SeriesError::InvalidArgument(format!(
                "component modulus must be >= 1, got {m}"
            )));
        }
        let j = j.rem_euclid(m);
        let valuation = self.valuation;
        let coeffs = self.coeffs.remap(self.len(), |i| {
            if (valuation + i as i64 - j).rem_euclid(m) == 0 {
                Some(i)
            } else {
                None
            }
        });
        Ok(TruncSeries {
            coeffs,
            ..self.clone()
        })
    }

    /// `sum_n c_{m n + j} q^n`: pulls out one residue class of exponents and
    /// reindexes it. Only defined for ordinary series (valuation >= 0).
    pub fn dissect(&self, m: i64, j: i64) -> Result<TruncSeries, SeriesError> {
        if m < 1 || !(0..m).contains(&j) {
            return Err(SeriesError::InvalidArgument(format!(
                "dissect needs m >= 1 and 0 <= j < m, got m = {m}, j = {j}"
            )));
        }
        if self.valuation < 0 {
            return Err(SeriesError::LaurentDissection {
                valuation: self.valuation,
            });
        }
        // ceil((order - j) / m), clamped at zero
        let order = if self.order <= j {
            0
        } else {
            (self.order - j + m - 1) / m
        };
        let coeffs = self
            .coeffs
            .remap(order as usize, |n| self.index_of(m * n as i64 + j));
        Ok(TruncSeries {
            ring: self.ring,
            valuation: 0,
            order,
            coeffs,
        })
    }

    /// Maps the series into `Z/mZ`. Accepts exact series, or modular series
    /// whose modulus is a multiple of `m`.
    pub fn reduce_mod(&self, m: u64) -> Result<TruncSeries, SeriesError> {
        let target = Modulus::new(m)?;
        let coeffs = match (&self.coeffs, self.ring) {
            (Coeffs::Exact(v), _) => {
                Coeffs::Modular(v.iter().map(|c| target.reduce_bigint(c)).collect())
            }
            (Coeffs::Modular(v), RingSpec::Modular(src)) if src.get() % m == 0 => {
                Coeffs::Modular(v.iter().map(|&c| c % m).collect())
            }
            _ => {
                return Err(SeriesError::IncompatibleReduction {
                    from: self.ring,
                    to: RingSpec::Modular(target),
                })
            }
        };
        Ok(TruncSeries {
            ring: RingSpec::Modular(target),
            valuation: self.valuation,
            order: self.order,
            coeffs,
        })
    }

    /// Lowers the truncation order to `min(order, new_order)`.
    pub fn truncate(&self, new_order: i64) -> TruncSeries {
        if new_order >= self.order {
            return self.clone();
        }
        let valuation = self.valuation.min(new_order);
        let len = (new_order - valuation) as usize;
        let coeffs = self.coeffs.remap(len, Some);
        TruncSeries {
            ring: self.ring,
            valuation,
            order: new_order,
            coeffs,
        }
    }

    /// First exponent `e < n` where the two series differ.
    pub fn first_difference(
        &self,
        other: &TruncSeries,
        n: i64,
    ) -> Result<Option<Mismatch>, SeriesError> {
        self.same_ring(other)?;
        let available = self.order.min(other.order);
        if available < n {
            return Err(SeriesError::InsufficientOrder {
                required: n,
                available,
            });
        }
        for e in self.valuation.min(other.valuation)..n {
            let left = self.coeff(e)?;
            let right = other.coeff(e)?;
            if left != right {
                return Ok(Some(Mismatch {
                    exponent: e,
                    left,
                    right,
                }));
            }
        }
        Ok(None)
    }

    /// True iff the coefficients of `q^e` agree for every `e < n`.
    pub fn equal_up_to(&self, other: &TruncSeries, n: i64) -> Result<bool, SeriesError> {
        Ok(self.first_difference(other, n)?.is_none())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coefficients().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = self.valuation + i as i64;
            let negative = c < BigInt::zero();
            let mag = if negative { -c } else { c };
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("q")?,
                1 => write!(f, "{mag}*q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}*q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order)
    }
}
