//! Exact truncated q-series arithmetic for Ramanujan's general partition
//! function `p_r(n)`, defined by `sum p_r(n) q^n = (q;q)_inf^(-r)`, together
//! with brute-force partition counters and procedures that check
//! Ramanujan-type congruences `p_r(A n + B) = 0 (mod M)` to a finite depth.

pub mod congruence;
pub mod error;
pub mod oracle;
pub mod products;
pub mod ring;
pub mod series;

pub use congruence::{
    check_frobenius, check_identity_dissection5, check_jacobi, check_lemma_h5, check_ramanujan_pm4,
    scan, verify_claim, verify_claim_exact, verify_theorem, Candidate, CongruenceClaim, Subject,
    Theorem, TheoremRun, VerifyError, VerifyReport, VerifyStatus, Witness,
};
pub use error::SeriesError;
pub use oracle::{
    classical_p, count_colour_partitions, count_signed_distinct, OracleCount, OracleError,
};
pub use products::{
    eta_quotient, euler_phi, euler_product_ap, jacobi_cube, pr_series, rogers_ramanujan,
    PochhammerFactor, ProductSpec,
};
pub use ring::{Modulus, RingSpec};
pub use series::{Mismatch, TruncSeries};
