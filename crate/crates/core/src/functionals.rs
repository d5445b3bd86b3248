//! The expressions inside each geometric-constant supremum, evaluated at
//! fixed points. The suprema themselves live in [`crate::sup_search`].

use crate::error::{Error, Result};
use crate::norm_spaces::{combine, pow_nonneg, root_nonneg, SpaceSpec, Vec2};

/// Points are accepted as "on the unit sphere" when their norm is within
/// this much of 1 (and "in the ball" when at most `1 +` this much).
pub const SPHERE_TOL: f64 = 1e-9;

/// Which geometric constant a query refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstantKind {
    Lyj,
    LyjPrime,
    Cnj,
    Cnjp,
    James,
    JamesLambdaMu,
    JamesType,
}

impl ConstantKind {
    pub fn name(&self) -> &'static str {
        match self {
            ConstantKind::Lyj => "lyj",
            ConstantKind::LyjPrime => "lyj_prime",
            ConstantKind::Cnj => "cnj",
            ConstantKind::Cnjp => "cnjp",
            ConstantKind::James => "james",
            ConstantKind::JamesLambdaMu => "james_lm",
            ConstantKind::JamesType => "james_type",
        }
    }
}

impl std::str::FromStr for ConstantKind {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are ignored, so `lyj-prime`,
    /// `lyj_prime` and `lyjprime` all parse.
    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        match norm.as_str() {
            "lyj" => Ok(ConstantKind::Lyj),
            "lyjprime" => Ok(ConstantKind::LyjPrime),
            "cnj" => Ok(ConstantKind::Cnj),
            "cnjp" => Ok(ConstantKind::Cnjp),
            "james" => Ok(ConstantKind::James),
            "jameslm" => Ok(ConstantKind::JamesLambdaMu),
            "jamestype" => Ok(ConstantKind::JamesType),
            _ => Err(Error::ParameterDomain(format!("unknown constant '{s}'"))),
        }
    }
}

impl std::fmt::Display for ConstantKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// A constant to compute together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConstantQuery {
    Lyj { xi: f64, eta: f64 },
    LyjPrime { xi: f64, eta: f64 },
    Cnj,
    Cnjp { p_exp: f64 },
    James,
    JamesLambdaMu { lam: f64, mu: f64 },
    JamesType { t_mean: f64, tau: f64 },
}

impl ConstantQuery {
    pub fn kind(&self) -> ConstantKind {
        match self {
            ConstantQuery::Lyj { .. } => ConstantKind::Lyj,
            ConstantQuery::LyjPrime { .. } => ConstantKind::LyjPrime,
            ConstantQuery::Cnj => ConstantKind::Cnj,
            ConstantQuery::Cnjp { .. } => ConstantKind::Cnjp,
            ConstantQuery::James => ConstantKind::James,
            ConstantQuery::JamesLambdaMu { .. } => ConstantKind::JamesLambdaMu,
            ConstantQuery::JamesType { .. } => ConstantKind::JamesType,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let pos = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(Error::ParameterDomain(format!(
                    "{name} must be finite and > 0, got {v}"
                )))
            }
        };
        match *self {
            ConstantQuery::Lyj { xi, eta } | ConstantQuery::LyjPrime { xi, eta } => {
                pos("xi", xi)?;
                pos("eta", eta)
            }
            ConstantQuery::Cnj | ConstantQuery::James => Ok(()),
            ConstantQuery::Cnjp { p_exp } => {
                if p_exp.is_finite() && p_exp >= 1.0 {
                    Ok(())
                } else {
                    Err(Error::ParameterDomain(format!(
                        "p_exp must be finite and >= 1, got {p_exp}"
                    )))
                }
            }
            ConstantQuery::JamesLambdaMu { lam, mu } => {
                for (name, v) in [("lam", lam), ("mu", mu)] {
                    if !(v.is_finite() && v > 0.0 && v <= 1.0) {
                        return Err(Error::ParameterDomain(format!(
                            "{name} must lie in (0, 1], got {v}"
                        )));
                    }
                }
                Ok(())
            }
            ConstantQuery::JamesType { t_mean, tau } => {
                pos("t_mean", t_mean)?;
                if tau.is_finite() && (0.0..=1.0).contains(&tau) {
                    Ok(())
                } else {
                    Err(Error::ParameterDomain(format!(
                        "tau must lie in [0, 1], got {tau}"
                    )))
                }
            }
        }
    }
}

/// The t-power mean `((a^t + b^t)/2)^(1/t)` for t > 0 and a, b ≥ 0.
pub fn power_mean(t: f64, a: f64, b: f64) -> Result<f64> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::ParameterDomain(format!(
            "power mean exponent must be finite and > 0, got {t}"
        )));
    }
    for (name, v) in [("a", a), ("b", b)] {
        if !(v.is_finite() && v >= 0.0) {
            return Err(Error::ParameterDomain(format!(
                "power mean argument {name} must be finite and >= 0, got {v}"
            )));
        }
    }
    Ok(power_mean_raw(t, a, b))
}

#[inline]
pub(crate) fn power_mean_raw(t: f64, a: f64, b: f64) -> f64 {
    root_nonneg((pow_nonneg(a, t) + pow_nonneg(b, t)) / 2.0, t)
}

// ---------------------------------------------------------------------------
// Raw kernels. The supremum search calls these with precomputed norms; the
// public wrappers below validate inputs and then call the identical kernel,
// so probe evaluations and grid evaluations agree bit for bit.
// ---------------------------------------------------------------------------

/// `(‖ξx+ηy‖² + ‖ηx−ξy‖²) / ((ξ²+η²)(‖x‖²+‖y‖²))`
#[inline]
pub(crate) fn lyj_raw(space: &SpaceSpec, xi: f64, eta: f64, x: Vec2, nx: f64, y: Vec2, ny: f64) -> f64 {
    let n1 = space.norm_raw(combine(xi, x, eta, y));
    let n2 = space.norm_raw(combine(eta, x, -xi, y));
    (n1 * n1 + n2 * n2) / ((xi * xi + eta * eta) * (nx * nx + ny * ny))
}

/// `(‖ξx+ηy‖² + ‖ηx−ξy‖²) / (2(‖x‖²+‖y‖²))`
#[inline]
pub(crate) fn lyj_prime_raw(
    space: &SpaceSpec,
    xi: f64,
    eta: f64,
    x: Vec2,
    nx: f64,
    y: Vec2,
    ny: f64,
) -> f64 {
    let n1 = space.norm_raw(combine(xi, x, eta, y));
    let n2 = space.norm_raw(combine(eta, x, -xi, y));
    (n1 * n1 + n2 * n2) / (2.0 * (nx * nx + ny * ny))
}

/// `(‖x+y‖² + ‖x−y‖²) / (2‖x‖² + 2‖y‖²)`
#[inline]
pub(crate) fn cnj_raw(space: &SpaceSpec, x: Vec2, nx: f64, y: Vec2, ny: f64) -> f64 {
    let n1 = space.norm_raw(x + y);
    let n2 = space.norm_raw(x - y);
    (n1 * n1 + n2 * n2) / (2.0 * nx * nx + 2.0 * ny * ny)
}

/// `(‖x+y‖^p + ‖x−y‖^p) / (2^(p−1)(‖x‖^p + ‖y‖^p))`
#[inline]
pub(crate) fn cnjp_raw(space: &SpaceSpec, p_exp: f64, x: Vec2, nx: f64, y: Vec2, ny: f64) -> f64 {
    let n1 = space.norm_raw(x + y);
    let n2 = space.norm_raw(x - y);
    (pow_nonneg(n1, p_exp) + pow_nonneg(n2, p_exp))
        / (f64::exp2(p_exp - 1.0) * (pow_nonneg(nx, p_exp) + pow_nonneg(ny, p_exp)))
}

/// `min(‖x+y‖, ‖x−y‖)`
#[inline]
pub(crate) fn james_raw(space: &SpaceSpec, x: Vec2, y: Vec2) -> f64 {
    space.norm_raw(x + y).min(space.norm_raw(x - y))
}

/// `min(‖λx+μy‖, ‖μx−λy‖)`
#[inline]
pub(crate) fn james_lm_raw(space: &SpaceSpec, lam: f64, mu: f64, x: Vec2, y: Vec2) -> f64 {
    space
        .norm_raw(combine(lam, x, mu, y))
        .min(space.norm_raw(combine(mu, x, -lam, y)))
}

/// `μ_t(‖x+τy‖, ‖x−τy‖)`
#[inline]
pub(crate) fn james_type_raw(space: &SpaceSpec, t_mean: f64, tau: f64, x: Vec2, y: Vec2) -> f64 {
    let n1 = space.norm_raw(combine(1.0, x, tau, y));
    let n2 = space.norm_raw(combine(1.0, x, -tau, y));
    power_mean_raw(t_mean, n1, n2)
}

// ---------------------------------------------------------------------------
// Public wrappers with input validation.
// ---------------------------------------------------------------------------

fn check_space_and_points(space: &SpaceSpec, x: Vec2, y: Vec2) -> Result<()> {
    space.validate()?;
    if !x.is_finite() || !y.is_finite() {
        return Err(Error::ParameterDomain(format!(
            "points must be finite, got x={x}, y={y}"
        )));
    }
    Ok(())
}

fn check_not_both_zero(x: Vec2, y: Vec2) -> Result<()> {
    if x.is_zero() && y.is_zero() {
        Err(Error::DegenerateInput(
            "x and y must not both be zero".to_string(),
        ))
    } else {
        Ok(())
    }
}

fn check_on_sphere(space: &SpaceSpec, name: &str, v: Vec2) -> Result<f64> {
    let n = space.norm_raw(v);
    if (n - 1.0).abs() <= SPHERE_TOL {
        Ok(n)
    } else {
        Err(Error::Precondition(format!(
            "{name} must lie on the unit sphere, got norm {n}"
        )))
    }
}

fn check_in_ball(space: &SpaceSpec, name: &str, v: Vec2) -> Result<f64> {
    let n = space.norm_raw(v);
    if n <= 1.0 + SPHERE_TOL {
        Ok(n)
    } else {
        Err(Error::Precondition(format!(
            "{name} must lie in the unit ball, got norm {n}"
        )))
    }
}

fn finite_or_numeric_failure(v: f64, what: &str, x: Vec2, y: Vec2) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NumericFailure(format!(
            "{what} evaluated to {v} at x={x}, y={y}"
        )))
    }
}

/// Ratio inside the L_YJ supremum. Scale-invariant in `(x,y)` and in `(ξ,η)`.
pub fn lyj_expr(space: &SpaceSpec, xi: f64, eta: f64, x: Vec2, y: Vec2) -> Result<f64> {
    check_space_and_points(space, x, y)?;
    ConstantQuery::Lyj { xi, eta }.validate()?;
    check_not_both_zero(x, y)?;
    let v = lyj_raw(space, xi, eta, x, space.norm_raw(x), y, space.norm_raw(y));
    finite_or_numeric_failure(v, "lyj_expr", x, y)
}

/// Ratio inside the L'_YJ supremum; both points must lie on the unit sphere.
/// The denominator `2(‖x‖²+‖y‖²)` is kept literal even though it is 4 there.
pub fn lyj_prime_expr(space: &SpaceSpec, xi: f64, eta: f64, x: Vec2, y: Vec2) -> Result<f64> {
    check_space_and_points(space, x, y)?;
    ConstantQuery::LyjPrime { xi, eta }.validate()?;
    let nx = check_on_sphere(space, "x", x)?;
    let ny = check_on_sphere(space, "y", y)?;
    let v = lyj_prime_raw(space, xi, eta, x, nx, y, ny);
    finite_or_numeric_failure(v, "lyj_prime_expr", x, y)
}

/// Ratio inside the von Neumann–Jordan supremum. Coincides with
/// [`lyj_expr`] at ξ = η = 1.
pub fn cnj_expr(space: &SpaceSpec, x: Vec2, y: Vec2) -> Result<f64> {
    check_space_and_points(space, x, y)?;
    check_not_both_zero(x, y)?;
    let v = cnj_raw(space, x, space.norm_raw(x), y, space.norm_raw(y));
    finite_or_numeric_failure(v, "cnj_expr", x, y)
}

/// Ratio inside the generalized von Neumann–Jordan supremum (exponent p ≥ 1).
pub fn cnjp_expr(space: &SpaceSpec, p_exp: f64, x: Vec2, y: Vec2) -> Result<f64> {
    check_space_and_points(space, x, y)?;
    ConstantQuery::Cnjp { p_exp }.validate()?;
    check_not_both_zero(x, y)?;
    let v = cnjp_raw(space, p_exp, x, space.norm_raw(x), y, space.norm_raw(y));
    finite_or_numeric_failure(v, "cnjp_expr", x, y)
}

/// `min(‖x+y‖, ‖x−y‖)` for unit vectors x, y.
pub fn james_min(space: &SpaceSpec, x: Vec2, y: Vec2) -> Result<f64> {
    check_space_and_points(space, x, y)?;
    check_on_sphere(space, "x", x)?;
    check_on_sphere(space, "y", y)?;
    let v = james_raw(space, x, y);
    finite_or_numeric_failure(v, "james_min", x, y)
}

/// `min(‖λx+μy‖, ‖μx−λy‖)` for ball points x, y and λ, μ ∈ (0, 1].
pub fn james_lm_min(space: &SpaceSpec, lam: f64, mu: f64, x: Vec2, y: Vec2) -> Result<f64> {
    check_space_and_points(space, x, y)?;
    ConstantQuery::JamesLambdaMu { lam, mu }.validate()?;
    check_in_ball(space, "x", x)?;
    check_in_ball(space, "y", y)?;
    let v = james_lm_raw(space, lam, mu, x, y);
    finite_or_numeric_failure(v, "james_lm_min", x, y)
}

/// `μ_t(‖x+τy‖, ‖x−τy‖)` for unit vectors x, y, mean exponent t > 0 and
/// τ ∈ [0, 1].
pub fn james_type_expr(space: &SpaceSpec, t_mean: f64, tau: f64, x: Vec2, y: Vec2) -> Result<f64> {
    check_space_and_points(space, x, y)?;
    ConstantQuery::JamesType { t_mean, tau }.validate()?;
    check_on_sphere(space, "x", x)?;
    check_on_sphere(space, "y", y)?;
    let v = james_type_raw(space, t_mean, tau, x, y);
    finite_or_numeric_failure(v, "james_type_expr", x, y)
}
