//! Brute-force partition counters that never touch series arithmetic.
//!
//! For `r > 0`, `p_r(n)` counts partitions of `n` whose parts each carry one
//! of `r` colours; a coloured part may repeat. For `r < 0`, `p_r(n)` is the
//! number of sets of distinct coloured parts (colours from `1..=|r|`) summing
//! to `n` with an even number of elements, minus the number with an odd
//! number of elements. These are the coefficients of `prod 1/(1-q^v)^r` and
//! `prod (1-q^v)^|r|` respectively.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest `n` accepted by [`count_colour_partitions`].
pub const COLOUR_BOUND: usize = 60;
/// Largest `n` accepted by [`count_signed_distinct`].
pub const SIGNED_BOUND: usize = 40;
/// Largest `n` accepted by [`classical_p`].
pub const CLASSICAL_BOUND: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n = {n} exceeds the oracle bound {bound}; use the series engine for larger n")]
    BoundExceeded { n: usize, bound: usize },
    #[error("{0}")]
    InvalidColours(String),
}

/// A brute-force count of `p_r(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleCount {
    pub n: usize,
    pub r: i64,
    pub value: BigInt,
    /// Set iff `r < 0`.
    pub even_count: Option<u64>,
    /// Set iff `r < 0`.
    pub odd_count: Option<u64>,
}

fn check_bound(n: usize, bound: usize) -> Result<(), OracleError> {
    if n > bound {
        Err(OracleError::BoundExceeded { n, bound })
    } else {
        Ok(())
    }
}

/// `p_r(n)` for `r >= 1` by counting multisets of coloured parts.
pub fn count_colour_partitions(n: usize, r: i64) -> Result<OracleCount, OracleError> {
    count_colour_partitions_bounded(n, r, COLOUR_BOUND)
}

pub fn count_colour_partitions_bounded(
    n: usize,
    r: i64,
    bound: usize,
) -> Result<OracleCount, OracleError> {
    check_bound(n, bound)?;
    if r < 1 {
        return Err(OracleError::InvalidColours(format!(
            "colour partitions need r >= 1, got {r}"
        )));
    }
    // one coin per (value, colour) pair, in a fixed order
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for value in 1..=n {
        for _colour in 0..r {
            for total in value..=n {
                let (lo, hi) = ways.split_at_mut(total);
                hi[0] += &lo[total - value];
            }
        }
    }
    Ok(OracleCount {
        n,
        r,
        value: ways.swap_remove(n),
        even_count: None,
        odd_count: None,
    })
}

/// `p_r(n)` for `r <= -1` by explicitly enumerating every set of distinct
/// coloured parts summing to `n` and splitting by set size parity.
pub fn count_signed_distinct(n: usize, r: i64) -> Result<OracleCount, OracleError> {
    count_signed_distinct_bounded(n, r, SIGNED_BOUND)
}

struct Enumeration {
    /// Part values, one entry per (value, colour), largest first.
    items: Vec<usize>,
    /// `suffix[i]` is the sum of `items[i..]`.
    suffix: Vec<usize>,
    even: u64,
    odd: u64,
}

impl Enumeration {
    fn visit(&mut self, from: usize, remaining: usize, size: usize) {
        if remaining == 0 {
            if size % 2 == 0 {
                self.even += 1;
            } else {
                self.odd += 1;
            }
            return;
        }
        for i in from..self.items.len() {
            if self.suffix[i] < remaining {
                return;
            }
            let part = self.items[i];
            if part <= remaining {
                self.visit(i + 1, remaining - part, size + 1);
            }
        }
    }
}

pub fn count_signed_distinct_bounded(
    n: usize,
    r: i64,
    bound: usize,
) -> Result<OracleCount, OracleError> {
    check_bound(n, bound)?;
    if r > -1 {
        return Err(OracleError::InvalidColours(format!(
            "signed distinct-part counts need r <= -1, got {r}"
        )));
    }
    let colours = r.unsigned_abs() as usize;
    let items: Vec<usize> = (1..=n)
        .rev()
        .flat_map(|v| std::iter::repeat_n(v, colours))
        .collect();
    let mut suffix = vec![0; items.len() + 1];
    for i in (0..items.len()).rev() {
        suffix[i] = suffix[i + 1] + items[i];
    }
    let mut walk = Enumeration {
        items,
        suffix,
        even: 0,
        odd: 0,
    };
    walk.visit(0, n, 0);
    Ok(OracleCount {
        n,
        r,
        value: BigInt::from(walk.even) - BigInt::from(walk.odd),
        even_count: Some(walk.even),
        odd_count: Some(walk.odd),
    })
}

/// Number of sets of distinct `(value, colour)` pairs summing to `n`,
/// ignoring parity. A 0/1 knapsack, independent of the enumeration above.
pub fn count_distinct_coloured_sets(n: usize, colours: usize) -> BigInt {
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for value in 1..=n {
        for _ in 0..colours {
            for total in (value..=n).rev() {
                let (lo, hi) = ways.split_at_mut(total);
                hi[0] += &lo[total - value];
            }
        }
    }
    ways.swap_remove(n)
}

/// The ordinary partition number `p(n)`, by the coin-change recurrence.
pub fn classical_p(n: usize) -> Result<BigInt, OracleError> {
    check_bound(n, CLASSICAL_BOUND)?;
    let mut ways = vec![BigInt::zero(); n + 1];
    ways[0] = BigInt::one();
    for part in 1..=n {
        for total in part..=n {
            let (lo, hi) = ways.split_at_mut(total);
            hi[0] += &lo[total - part];
        }
    }
    Ok(ways.swap_remove(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colour_partition_anchors() {
        assert_eq!(
            count_colour_partitions(3, 2).unwrap().value,
            BigInt::from(10)
        );
        assert_eq!(
            count_colour_partitions(3, 1).unwrap().value,
            BigInt::from(3)
        );
        for r in [1, 2, 7, 100] {
            let c = count_colour_partitions(0, r).unwrap();
            assert_eq!(c.value, BigInt::one());
            assert_eq!(c.even_count, None);
        }
        let four: Vec<i64> = (0..5)
            .map(|n| i64::try_from(&count_colour_partitions(n, 4).unwrap().value).unwrap())
            .collect();
        assert_eq!(four, [1, 4, 14, 40, 105]);
    }

    #[test]
    fn signed_distinct_anchors() {
        let c = count_signed_distinct(5, -1).unwrap();
        assert_eq!((c.even_count, c.odd_count), (Some(2), Some(1)));
        assert_eq!(c.value, BigInt::one());

        let c = count_signed_distinct(3, -2).unwrap();
        assert_eq!((c.even_count, c.odd_count), (Some(4), Some(2)));
        assert_eq!(c.value, BigInt::from(2));

        for r in [-1, -3, -9] {
            let c = count_signed_distinct(0, r).unwrap();
            assert_eq!((c.even_count, c.odd_count), (Some(1), Some(0)));
            assert_eq!(c.value, BigInt::one());
        }
    }

    #[test]
    fn parity_split_accounts_for_every_set() {
        for colours in 1..=3usize {
            for n in 0..=18 {
                let c = count_signed_distinct(n, -(colours as i64)).unwrap();
                let total = BigInt::from(c.even_count.unwrap() + c.odd_count.unwrap());
                assert_eq!(
                    total,
                    count_distinct_coloured_sets(n, colours),
                    "n = {n}, colours = {colours}"
                );
            }
        }
    }

    #[test]
    fn classical_values() {
        assert_eq!(classical_p(0).unwrap(), BigInt::one());
        assert_eq!(classical_p(3).unwrap(), BigInt::from(3));
        assert_eq!(classical_p(4).unwrap(), BigInt::from(5));
        assert_eq!(classical_p(19).unwrap(), BigInt::from(490));
        assert_eq!(
            classical_p(100).unwrap(),
            "190569292".parse::<BigInt>().unwrap()
        );
    }

    #[test]
    fn bounds_and_sign_errors() {
        assert_eq!(
            count_colour_partitions(61, 1).unwrap_err(),
            OracleError::BoundExceeded { n: 61, bound: 60 }
        );
        assert!(count_colour_partitions_bounded(61, 1, 61).is_ok());
        assert!(count_signed_distinct(41, -1).is_err());
        assert!(count_signed_distinct(3, 1).is_err());
        assert!(count_colour_partitions(3, -1).is_err());
        assert!(count_colour_partitions(3, 0).is_err());
        assert!(classical_p(CLASSICAL_BOUND + 1).is_err());
    }
}
