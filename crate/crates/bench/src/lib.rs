//! Fixtures shared by the benchmarks.

use qpart_core::{RingSpec, TruncSeries};

/// A dense series of length `len` with small, deterministic, mostly nonzero
/// coefficients and a unit constant term.
pub fn dense_series(ring: RingSpec, len: i64) -> TruncSeries {
    let coeffs = (0..len).map(|i| if i == 0 { 1 } else { (i * i * 7 + 3) % 97 - 48 });
    TruncSeries::new(ring, 0, coeffs, len).expect("fixture series")
}
