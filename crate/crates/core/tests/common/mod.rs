#![allow(dead_code)]

use proptest::prelude::*;
use qpart_core::{RingSpec, TruncSeries};

pub const SMALL_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

pub fn ring() -> impl Strategy<Value = RingSpec> {
    prop_oneof![
        Just(RingSpec::ExactInteger),
        prop::sample::select(SMALL_PRIMES.to_vec()).prop_map(|m| RingSpec::modular(m).unwrap()),
        Just(RingSpec::modular(10).unwrap()),
    ]
}

/// A Laurent series with small valuation, 1..12 known terms, small coefficients.
pub fn series_in(ring: RingSpec) -> impl Strategy<Value = TruncSeries> {
    (-3i64..4, prop::collection::vec(-9i64..10, 1..12)).prop_map(move |(valuation, coeffs)| {
        let order = valuation + coeffs.len() as i64;
        TruncSeries::new(ring, valuation, coeffs, order).unwrap()
    })
}

/// Same as [`series_in`], with a leading coefficient of +-1.
pub fn unit_series_in(ring: RingSpec) -> impl Strategy<Value = TruncSeries> {
    (
        -3i64..4,
        prop::bool::ANY,
        prop::collection::vec(-9i64..10, 0..11),
    )
        .prop_map(move |(valuation, negative, tail)| {
            let lead = if negative { -1 } else { 1 };
            let coeffs: Vec<i64> = std::iter::once(lead).chain(tail).collect();
            let order = valuation + coeffs.len() as i64;
            TruncSeries::new(ring, valuation, coeffs, order).unwrap()
        })
}

/// An ordinary series (valuation 0..3).
pub fn ordinary_series_in(ring: RingSpec) -> impl Strategy<Value = TruncSeries> {
    (0i64..3, prop::collection::vec(-9i64..10, 0..20)).prop_map(move |(valuation, coeffs)| {
        let order = valuation + coeffs.len() as i64;
        TruncSeries::new(ring, valuation, coeffs, order).unwrap()
    })
}

pub fn common_order(a: &TruncSeries, b: &TruncSeries) -> i64 {
    a.order().min(b.order())
}

/// Random inputs for [`check_laws`].
#[derive(Debug, Clone)]
pub struct LawInputs {
    pub f: TruncSeries,
    pub g: TruncSeries,
    pub h: TruncSeries,
    pub unit: TruncSeries,
    pub exact_unit: TruncSeries,
    pub ordinary: TruncSeries,
    pub a: i64,
    pub b: i64,
    pub r: i64,
    pub prime: u64,
    pub m: i64,
    pub j: i64,
}

pub fn law_inputs() -> impl Strategy<Value = LawInputs> {
    ring().prop_flat_map(|ring| {
        (
            (series_in(ring), series_in(ring), series_in(ring)),
            unit_series_in(ring),
            unit_series_in(RingSpec::ExactInteger),
            ordinary_series_in(ring),
            (-3i64..=3, -3i64..=3, -5i64..=5),
            prop::sample::select(SMALL_PRIMES.to_vec()),
            (1i64..7).prop_flat_map(|m| (Just(m), 0..m)),
        )
            .prop_map(
                |((f, g, h), unit, exact_unit, ordinary, (a, b, r), prime, (m, j))| LawInputs {
                    f,
                    g,
                    h,
                    unit,
                    exact_unit,
                    ordinary,
                    a,
                    b,
                    r,
                    prime,
                    m,
                    j,
                },
            )
    })
}

fn same(label: &str, x: &TruncSeries, y: &TruncSeries) -> Result<(), String> {
    let n = common_order(x, y);
    match x.first_difference(y, n) {
        Ok(None) => Ok(()),
        Ok(Some(d)) => Err(format!(
            "{label}: differ at q^{} ({} vs {})",
            d.exponent, d.left, d.right
        )),
        Err(e) => Err(format!("{label}: {e}")),
    }
}

/// Every algebraic law the series engine is expected to satisfy, checked on
/// one bundle of random inputs. Returns a description of the first failure.
pub fn check_laws(x: &LawInputs) -> Result<(), String> {
    let LawInputs { f, g, h, .. } = x;
    let e = |r: Result<TruncSeries, qpart_core::SeriesError>| r.map_err(|e| e.to_string());

    same("commutativity", &e(f.mul(g))?, &e(g.mul(f))?)?;
    same(
        "associativity",
        &e(e(f.mul(g))?.mul(h))?,
        &e(f.mul(&e(g.mul(h))?))?,
    )?;
    same(
        "distributivity",
        &e(f.mul(&e(g.add(h))?))?,
        &e(e(f.mul(g))?.add(&e(f.mul(h))?))?,
    )?;

    let u = &x.unit;
    let roundtrip = e(u.mul(&e(u.invert())?))?;
    same(
        "invert roundtrip",
        &roundtrip,
        &e(TruncSeries::one(u.ring(), roundtrip.order()))?,
    )?;

    let lhs = e(u.pow_int(x.a + x.b))?;
    let rhs = e(e(u.pow_int(x.a))?.mul(&e(u.pow_int(x.b))?))?;
    same("power additivity", &lhs, &rhs)?;

    let exact = e(x.exact_unit.pow_int(x.r))?;
    let reduced = e(exact.reduce_mod(x.prime))?;
    let modular = e(e(x.exact_unit.reduce_mod(x.prime))?.pow_int(x.r))?;
    same("recurrence vs binary exponentiation", &reduced, &modular)?;

    let o = &x.ordinary;
    let mut total = e(TruncSeries::zero(o.ring(), 0, o.order().max(0)))?;
    for j in 0..x.m {
        let piece = e(e(e(o.dissect(x.m, j))?.substitute_power(x.m))?.shift(j))?;
        total = e(total.add(&piece))?;
    }
    if total.order() < o.order() {
        return Err("dissection completeness lost precision".into());
    }
    same("dissection completeness", &total, o)?;

    let via_dissect = e(e(e(o.dissect(x.m, x.j))?.substitute_power(x.m))?.shift(x.j))?;
    same(
        "component/dissect consistency",
        &e(o.component(x.m, x.j))?,
        &via_dissect,
    )?;
    Ok(())
}
