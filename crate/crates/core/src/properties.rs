//! Structural-property predicates driven by the L_YJ value: a sufficient
//! condition for super-reflexivity and the weak-normal-structure region of
//! the Banaś–Frączek plane. Both are one-directional tests.

use crate::closed_forms::lyj_bf;
use crate::error::{Error, Result};

/// Sufficient condition for super-reflexivity: `L_YJ < 2`.
/// The boundary value 2 is excluded.
pub fn super_reflexive_sufficient(lyj_value: f64) -> bool {
    lyj_value < 2.0
}

fn check_region(xi: f64, eta: f64, open_upper: bool) -> Result<()> {
    for (name, v) in [("xi", xi), ("eta", eta)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::ParameterDomain(format!(
                "{name} must be finite and > 0, got {v}"
            )));
        }
    }
    let upper_ok = if open_upper { xi < 1.5 * eta } else { xi <= 2.0 * eta };
    if eta <= xi && upper_ok {
        Ok(())
    } else if open_upper {
        Err(Error::ParameterDomain(format!(
            "weak normal structure threshold needs eta <= xi < 1.5*eta, got xi={xi}, eta={eta}"
        )))
    } else {
        Err(Error::ParameterDomain(format!(
            "weak normal structure bound needs eta <= xi <= 2*eta, got xi={xi}, eta={eta}"
        )))
    }
}

/// Weak-normal-structure bound `((ξ+η)² + (2η−ξ)²) / (2(ξ²+η²))`,
/// applicable for η ≤ ξ ≤ 2η. A space with `L_YJ(ξ, η)` strictly below this
/// has weak normal structure.
pub fn wns_bound(xi: f64, eta: f64) -> Result<f64> {
    check_region(xi, eta, false)?;
    let a = xi + eta;
    let b = 2.0 * eta - xi;
    Ok((a * a + b * b) / (2.0 * (xi * xi + eta * eta)))
}

/// The λ threshold `√(4ξη / (6ξη − 3η²))` below which the Banaś–Frączek
/// plane satisfies the weak-normal-structure bound, for η ≤ ξ < 1.5η.
/// At λ equal to the threshold, `lyj_bf` equals `wns_bound` exactly.
pub fn wns_lambda_threshold(xi: f64, eta: f64) -> Result<f64> {
    check_region(xi, eta, true)?;
    Ok((4.0 * xi * eta / (6.0 * xi * eta - 3.0 * eta * eta)).sqrt())
}

/// Three-valued outcome when the predicate is fed a numeric (search-based)
/// L_YJ value instead of the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    /// The value is within `tol` of the bound; no conclusion.
    Inconclusive,
}

/// Tolerance-aware comparison of a numeric L_YJ value against the
/// weak-normal-structure bound.
pub fn wns_verdict(lyj_value: f64, xi: f64, eta: f64, tol: f64) -> Result<Verdict> {
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(Error::ParameterDomain(format!(
            "tol must be finite and >= 0, got {tol}"
        )));
    }
    if !lyj_value.is_finite() {
        return Err(Error::ParameterDomain(format!(
            "lyj_value must be finite, got {lyj_value}"
        )));
    }
    let bound = wns_bound(xi, eta)?;
    Ok(if lyj_value < bound - tol {
        Verdict::Holds
    } else if lyj_value > bound + tol {
        Verdict::Fails
    } else {
        Verdict::Inconclusive
    })
}

/// A λ range to scan for the weak-normal-structure predicate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionQuery {
    pub xi: f64,
    pub eta: f64,
    pub lambda_from: f64,
    pub lambda_to: f64,
    pub samples: usize,
}

/// One row of a region scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegionRow {
    pub lambda: f64,
    pub lyj: f64,
    pub bound: f64,
    /// `lyj < bound`, i.e. the sufficient condition fires at this λ.
    pub holds: bool,
}

/// Evaluates `lyj_bf(ξ, η, λ) < wns_bound(ξ, η)` on an inclusive λ grid.
/// Rows are ordered by ascending λ; `holds` flips at
/// [`wns_lambda_threshold`] (within one grid cell).
pub fn wns_region_scan(q: &RegionQuery) -> Result<Vec<RegionRow>> {
    check_region(q.xi, q.eta, true)?;
    if !(q.lambda_from.is_finite() && q.lambda_from >= 1.0) {
        return Err(Error::ParameterDomain(format!(
            "lambda_from must be >= 1, got {}",
            q.lambda_from
        )));
    }
    if !(q.lambda_to.is_finite() && q.lambda_to >= q.lambda_from) {
        return Err(Error::ParameterDomain(format!(
            "lambda_to must be >= lambda_from, got {}",
            q.lambda_to
        )));
    }
    if q.samples < 1 {
        return Err(Error::ParameterDomain(
            "samples must be at least 1".to_string(),
        ));
    }
    let bound = wns_bound(q.xi, q.eta)?;
    let mut rows = Vec::with_capacity(q.samples);
    for i in 0..q.samples {
        let lambda = if q.samples == 1 {
            q.lambda_from
        } else if i == q.samples - 1 {
            q.lambda_to
        } else {
            q.lambda_from + (q.lambda_to - q.lambda_from) * i as f64 / (q.samples - 1) as f64
        };
        let lyj = lyj_bf(q.xi, q.eta, lambda)?;
        rows.push(RegionRow {
            lambda,
            lyj,
            bound,
            holds: lyj < bound,
        });
    }
    Ok(rows)
}
