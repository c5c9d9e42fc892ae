//! Closed-form dimension predictions.
//!
//! All dimensions here are projective. The fiber-bundle prediction writes a
//! general point of σ_s^r(Gr(k,n)) as a choice of overlap `E ∈ Gr(r,n)`
//! plus a point of σ_s(Gr(k−r, n−r)), and takes the secant dimension from
//! the table of known defective secants of Grassmannians, assuming that
//! table is complete.

use serde::{Deserialize, Serialize};

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::terracini::{DimensionReport, SecantParams};

/// Known defective secants `σ_s(Gr(k,n))` with `k ≤ n/2`, outside the
/// `Gr(2,n)` family: `(n, k, s, actual codimension)`.
pub const SPORADIC_DEFECTIVE: [(usize, usize, usize, u64); 4] =
    [(7, 3, 3, 1), (8, 4, 3, 20), (8, 4, 4, 6), (9, 3, 4, 10)];

fn ambient_dim(n: usize, k: usize) -> u64 {
    binomial(n, k) - 1
}

fn grass_dim(n: usize, k: usize) -> u64 {
    (k * (n - k)) as u64
}

/// The `n` from which the family σ_s^r(Gr(k,n)) has a common normal form.
pub fn stability_step(k: usize, s: usize, r: usize) -> usize {
    r + s * (k - r)
}

/// Literal parameter count `r(p−r) + s(k−r)(p−k) + s − 1 + p(n−p)` with
/// `p` the stability step. This is a virtual count and ignores defects of
/// the fiber secant.
pub fn dimfam_formula(n: usize, k: usize, s: usize, r: usize) -> Result<u64> {
    let p = stability_step(k, s, r);
    if n < p {
        return Err(Error::BelowStability { n, p });
    }
    Ok((r * (p - r) + s * (k - r) * (p - k) + s - 1 + p * (n - p)) as u64)
}

/// `s · dim Gr(k,n) + s − 1`.
pub fn secant_virtual_dim(n: usize, k: usize, s: usize) -> u64 {
    s as u64 * grass_dim(n, k) + s as u64 - 1
}

pub fn secant_expected_dim(n: usize, k: usize, s: usize) -> u64 {
    secant_virtual_dim(n, k, s).min(ambient_dim(n, k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SecantSource {
    /// `s = 1`, or a projective space / point after duality.
    Trivial,
    /// Skew matrices of rank ≤ 2s.
    Gr2Family,
    /// One of [`SPORADIC_DEFECTIVE`].
    Sporadic,
    /// Not in the table, so assumed non-defective.
    Expected,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecantDim {
    pub dim: u64,
    pub defect: u64,
    pub source: SecantSource,
}

/// Dimension of σ_s(Gr(k,n)) assuming the defect table is complete.
pub fn secant_dim_conjectural(n: usize, k: usize, s: usize) -> SecantDim {
    let k = k.min(n - k);
    let expected = secant_expected_dim(n, k, s);
    let with = |dim: u64, source| SecantDim {
        dim,
        defect: expected - dim,
        source,
    };
    if s == 1 || k <= 1 {
        return with(expected, SecantSource::Trivial);
    }
    if k == 2 {
        // rank ≤ 2s skew forms; beyond s = ⌊n/2⌋ the locus is everything
        let s = s.min(n / 2);
        return with(ambient_dim(n, 2) - binomial(n - 2 * s, 2), SecantSource::Gr2Family);
    }
    for (tn, tk, ts, codim) in SPORADIC_DEFECTIVE {
        if (tn, tk, ts) == (n, k, s) {
            return with(ambient_dim(n, k) - codim, SecantSource::Sporadic);
        }
    }
    with(expected, SecantSource::Expected)
}

/// Overlap dimension forced on `s` general k-planes sharing an r-plane:
/// `s` subspaces of codimension `n − k` meet in dimension at least
/// `sk − (s−1)n`.
pub fn forced_overlap(n: usize, k: usize, r: usize, s: usize) -> usize {
    let common = (s * k) as i64 - ((s - 1) * n) as i64;
    (r as i64).max(common).clamp(0, k as i64) as usize
}

/// Parameter count of σ_s^r with the overlap already forced, without the
/// ambient cap.
pub fn restricted_virtual_dim(n: usize, k: usize, s: usize, r: usize) -> u64 {
    if r >= k {
        return grass_dim(n, k);
    }
    (r * (n - r) + s * (k - r) * (n - k) + s - 1) as u64
}

/// `min(C(n,k) − 1, r(n−r) + s(k−r)(n−k) + s − 1)` with `r` forced first.
pub fn restricted_expected_dim(n: usize, k: usize, s: usize, r: usize) -> u64 {
    let r = forced_overlap(n, k, r, s);
    restricted_virtual_dim(n, k, s, r).min(ambient_dim(n, k))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberPrediction {
    pub dim: u64,
    pub assumes_bddg: bool,
}

/// Dimension of the space of vectors dividing a general point of
/// σ_s(Gr(k,n)), for `s ≥ 2` planes with no common intersection. Only
/// corank-two forms in odd dimension (duals of odd skew forms) and
/// hyperplanes pick up a divisor.
pub fn generic_divisor_dim(n: usize, k: usize, s: usize) -> usize {
    if s < 2 || k == 0 || k >= n {
        return 0;
    }
    match n - k {
        1 => k,
        2 if n % 2 == 1 && 2 * s >= n - 1 => 1,
        _ => 0,
    }
}

/// `r(n−r) + dim σ_s(Gr(k−r, n−r))`, after forcing the overlap and
/// absorbing any generic divisor of the fiber point into it. When the
/// planes differ in at most one direction the sum is itself decomposable
/// and the variety is Gr(k,n).
pub fn fiber_predicted_dim(n: usize, k: usize, s: usize, r: usize) -> FiberPrediction {
    let r = forced_overlap(n, k, r, s);
    let r = if r < k { r + generic_divisor_dim(n - r, k - r, s) } else { r };
    if s == 1 || r + 1 >= k {
        return FiberPrediction {
            dim: grass_dim(n, k),
            assumes_bddg: false,
        };
    }
    let fiber = secant_dim_conjectural(n - r, k - r, s);
    FiberPrediction {
        dim: ((r * (n - r)) as u64 + fiber.dim).min(ambient_dim(n, k)),
        assumes_bddg: fiber.source != SecantSource::Trivial,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prediction {
    pub params: SecantParams,
    pub stability_step: usize,
    pub forced_overlap: usize,
    /// `None` below the stability step.
    pub dimfam_value: Option<u64>,
    pub virtual_dim: u64,
    pub expected_dim: u64,
    pub fiber_dim: u64,
    pub assumes_bddg: bool,
}

pub fn predict(params: &SecantParams) -> Prediction {
    let SecantParams { n, k, s, r } = *params;
    let forced = forced_overlap(n, k, r, s);
    let fiber = fiber_predicted_dim(n, k, s, r);
    Prediction {
        params: *params,
        stability_step: stability_step(k, s, r),
        forced_overlap: forced,
        dimfam_value: dimfam_formula(n, k, s, r).ok(),
        virtual_dim: restricted_virtual_dim(n, k, s, forced),
        expected_dim: restricted_expected_dim(n, k, s, r),
        fiber_dim: fiber.dim,
        assumes_bddg: fiber.assumes_bddg,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectReport {
    pub params: SecantParams,
    pub expected: u64,
    pub fiber: u64,
    pub actual: u64,
    /// `expected − actual`; negative values mean the oracle exceeded the
    /// expected count.
    pub defect: i64,
    pub is_defective: bool,
    pub matches_fiber: bool,
}

pub fn defect_report(params: &SecantParams, oracle: &DimensionReport) -> Result<DefectReport> {
    if oracle.params != *params {
        return Err(Error::ParamMismatch(format!(
            "report is for {}, asked about {}",
            oracle.params, params
        )));
    }
    let prediction = predict(params);
    let actual = oracle.proj_dim;
    let defect = prediction.expected_dim as i64 - actual as i64;
    Ok(DefectReport {
        params: *params,
        expected: prediction.expected_dim,
        fiber: prediction.fiber_dim,
        actual,
        defect,
        is_defective: defect > 0,
        matches_fiber: prediction.fiber_dim == actual,
    })
}
