use thiserror::Error;

use crate::ring::RingSpec;

/// Errors raised by series construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("coefficient list has length {found}, but order - valuation = {expected}")]
    LengthMismatch { expected: i64, found: usize },

    #[error("truncation order {order} is below valuation {valuation}")]
    OrderBelowValuation { valuation: i64, order: i64 },

    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingSpec, right: RingSpec },

    #[error("leading coefficient {residue} is not a unit in {ring}")]
    NonUnitLeading { residue: String, ring: RingSpec },

    #[error("series has no nonzero coefficient below its truncation order {order}")]
    ZeroSeries { order: i64 },

    #[error("coefficient of q^{exponent} is beyond the truncation order {order}")]
    OutOfTruncation { exponent: i64, order: i64 },

    #[error("comparison up to q^{required} needs both orders >= {required}, have {available}")]
    InsufficientOrder { required: i64, available: i64 },

    #[error("dissect requires an ordinary series, got valuation {valuation}; use component for Laurent series")]
    LaurentDissection { valuation: i64 },

    #[error("invalid modulus {0}: must satisfy 2 <= m <= {max}", max = crate::ring::Modulus::MAX)]
    InvalidModulus(i128),

    #[error("cannot reduce a series over {from} into {to}")]
    IncompatibleReduction { from: RingSpec, to: RingSpec },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("exponent arithmetic overflowed")]
    Overflow,
}
