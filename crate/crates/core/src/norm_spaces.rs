//! Normed planes: norm evaluation, unit-sphere parametrization, extreme points.
//!
//! Three families are supported: the Banaś–Frączek plane with norm
//! `max{λ|a|, √(a²+b²)}`, its generalization `max{λ|a|, (|a|^p+|b|^p)^(1/p)}`,
//! and the plain ℓ_p plane.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default absolute tolerance for [`SpaceSpec::is_extreme_point`].
pub const EXTREME_POINT_TOL: f64 = 1e-9;

/// A point of the real plane. All operations require finite coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Vec2 {
    pub a: f64,
    pub b: f64,
}

impl Vec2 {
    pub const ZERO: Vec2 = Vec2 { a: 0.0, b: 0.0 };

    pub fn new(a: f64, b: f64) -> Self {
        Vec2 { a, b }
    }

    pub fn is_finite(self) -> bool {
        self.a.is_finite() && self.b.is_finite()
    }

    pub fn is_zero(self) -> bool {
        self.a == 0.0 && self.b == 0.0
    }

    pub fn scale(self, c: f64) -> Self {
        Vec2::new(c * self.a, c * self.b)
    }

    /// Euclidean length √(a²+b²).
    pub fn euclidean(self) -> f64 {
        (self.a * self.a + self.b * self.b).sqrt()
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, rhs: Vec2) -> Vec2 {
        Vec2::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.a, -self.b)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// `c1*v1 + c2*v2`, the one place linear combinations are formed so every
/// evaluation path produces bit-identical vectors.
pub(crate) fn combine(c1: f64, v1: Vec2, c2: f64, v2: Vec2) -> Vec2 {
    Vec2::new(c1 * v1.a + c2 * v2.a, c1 * v1.b + c2 * v2.b)
}

/// `x^p` for `x ≥ 0`. Small integer exponents go through multiplication,
/// which keeps p = 2 bit-identical to squaring.
pub(crate) fn pow_nonneg(x: f64, p: f64) -> f64 {
    if p == 1.0 {
        x
    } else if p == 2.0 {
        x * x
    } else if p.fract() == 0.0 && (1.0..=32.0).contains(&p) {
        x.powi(p as i32)
    } else {
        x.powf(p)
    }
}

/// `x^(1/p)` for `x ≥ 0`.
pub(crate) fn root_nonneg(x: f64, p: f64) -> f64 {
    if p == 1.0 {
        x
    } else if p == 2.0 {
        x.sqrt()
    } else {
        x.powf(1.0 / p)
    }
}

/// Description of a normed plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpaceSpec {
    /// `‖(a,b)‖ = max{λ|a|, √(a²+b²)}`, λ ≥ 1.
    BanasFraczek { lambda: f64 },
    /// `‖(a,b)‖ = max{λ|a|, (|a|^p+|b|^p)^(1/p)}`, λ ≥ 1, p ≥ 1.
    GeneralizedBF { lambda: f64, p: f64 },
    /// `‖(a,b)‖ = (|a|^p+|b|^p)^(1/p)`, p ≥ 1.
    LpPlane { p: f64 },
}

impl SpaceSpec {
    pub fn banas_fraczek(lambda: f64) -> Result<Self> {
        let s = SpaceSpec::BanasFraczek { lambda };
        s.validate()?;
        Ok(s)
    }

    pub fn generalized_bf(lambda: f64, p: f64) -> Result<Self> {
        let s = SpaceSpec::GeneralizedBF { lambda, p };
        s.validate()?;
        Ok(s)
    }

    pub fn lp_plane(p: f64) -> Result<Self> {
        let s = SpaceSpec::LpPlane { p };
        s.validate()?;
        Ok(s)
    }

    /// Checks λ ≥ 1 and p ≥ 1 where present.
    pub fn validate(&self) -> Result<()> {
        let check_lambda = |lambda: f64| {
            if lambda.is_finite() && lambda >= 1.0 {
                Ok(())
            } else {
                Err(Error::ParameterDomain(format!(
                    "lambda must be finite and >= 1, got {lambda}"
                )))
            }
        };
        let check_p = |p: f64| {
            if p.is_finite() && p >= 1.0 {
                Ok(())
            } else {
                Err(Error::ParameterDomain(format!(
                    "p must be finite and >= 1, got {p}"
                )))
            }
        };
        match *self {
            SpaceSpec::BanasFraczek { lambda } => check_lambda(lambda),
            SpaceSpec::GeneralizedBF { lambda, p } => {
                check_lambda(lambda)?;
                check_p(p)
            }
            SpaceSpec::LpPlane { p } => check_p(p),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            SpaceSpec::BanasFraczek { .. } => "bf",
            SpaceSpec::GeneralizedBF { .. } => "gbf",
            SpaceSpec::LpPlane { .. } => "lp",
        }
    }

    /// Norm of `v`. Nonnegative, zero iff `v = (0,0)`, absolutely homogeneous.
    pub fn norm(&self, v: Vec2) -> Result<f64> {
        self.validate()?;
        if !v.is_finite() {
            return Err(Error::ParameterDomain(format!(
                "coordinates must be finite, got {v}"
            )));
        }
        Ok(self.norm_raw(v))
    }

    /// Norm without input validation; callers guarantee a valid space and
    /// finite coordinates.
    #[inline]
    pub(crate) fn norm_raw(&self, v: Vec2) -> f64 {
        match *self {
            SpaceSpec::BanasFraczek { lambda } => (lambda * v.a.abs()).max(v.euclidean()),
            SpaceSpec::GeneralizedBF { lambda, p } => {
                (lambda * v.a.abs()).max(lp_norm_raw(v, p))
            }
            SpaceSpec::LpPlane { p } => lp_norm_raw(v, p),
        }
    }

    /// The point where the ray at angle `theta` meets the unit sphere:
    /// `(cos θ, sin θ) / ‖(cos θ, sin θ)‖`.
    pub fn unit_vector(&self, theta: f64) -> Result<Vec2> {
        self.validate()?;
        if !theta.is_finite() {
            return Err(Error::ParameterDomain(format!(
                "theta must be finite, got {theta}"
            )));
        }
        Ok(self.unit_vector_raw(theta))
    }

    #[inline]
    pub(crate) fn unit_vector_raw(&self, theta: f64) -> Vec2 {
        let d = Vec2::new(theta.cos(), theta.sin());
        let n = self.norm_raw(d);
        Vec2::new(d.a / n, d.b / n)
    }

    /// Whether `v` is an extreme point of the unit ball. Defined for the
    /// Banaś–Frączek plane only, where the extreme points are the circular
    /// arcs `{(z₁,z₂) : z₁²+z₂² = 1, |z₁| ≤ 1/λ}`.
    pub fn is_extreme_point(&self, v: Vec2, tol: f64) -> Result<bool> {
        self.validate()?;
        if !v.is_finite() {
            return Err(Error::ParameterDomain(format!(
                "coordinates must be finite, got {v}"
            )));
        }
        if !tol.is_finite() || tol < 0.0 {
            return Err(Error::ParameterDomain(format!(
                "tol must be finite and >= 0, got {tol}"
            )));
        }
        match *self {
            SpaceSpec::BanasFraczek { lambda } => {
                let r2 = v.a * v.a + v.b * v.b;
                Ok((r2 - 1.0).abs() <= tol && v.a.abs() <= 1.0 / lambda + tol)
            }
            _ => Err(Error::UnsupportedOperation(format!(
                "is_extreme_point is defined for bf spaces only, got {}",
                self.kind_name()
            ))),
        }
    }

    /// `n` equally spaced sphere points `unit_vector(2πk/n)`, k = 0..n-1.
    pub fn sample_sphere(&self, n: usize) -> Result<Vec<Vec2>> {
        self.validate()?;
        if n < 4 {
            return Err(Error::ParameterDomain(format!(
                "sample_sphere needs n >= 4, got {n}"
            )));
        }
        let step = std::f64::consts::TAU / n as f64;
        Ok((0..n).map(|k| self.unit_vector_raw(k as f64 * step)).collect())
    }
}

#[inline]
fn lp_norm_raw(v: Vec2, p: f64) -> f64 {
    root_nonneg(pow_nonneg(v.a.abs(), p) + pow_nonneg(v.b.abs(), p), p)
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SpaceSpec::BanasFraczek { lambda } => write!(f, "bf:lambda={lambda}"),
            SpaceSpec::GeneralizedBF { lambda, p } => write!(f, "gbf:lambda={lambda},p={p}"),
            SpaceSpec::LpPlane { p } => write!(f, "lp:p={p}"),
        }
    }
}

impl FromStr for SpaceSpec {
    type Err = Error;

    /// Parses `bf:lambda=<real>`, `gbf:lambda=<real>,p=<real>`, `lp:p=<real>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::ParameterDomain(format!("invalid space spec '{s}': {msg}"));
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("expected '<kind>:<params>'"))?;
        let mut fields = std::collections::HashMap::new();
        for part in rest.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad("expected 'key=value' parameters"))?;
            let value: f64 = value
                .parse()
                .map_err(|_| bad(&format!("'{value}' is not a number")))?;
            if fields.insert(key.trim(), value).is_some() {
                return Err(bad(&format!("duplicate parameter '{key}'")));
            }
        }
        let take = |fields: &mut std::collections::HashMap<&str, f64>, key: &str| {
            fields
                .remove(key)
                .ok_or_else(|| bad(&format!("missing parameter '{key}'")))
        };
        let spec = match kind.trim() {
            "bf" => SpaceSpec::banas_fraczek(take(&mut fields, "lambda")?)?,
            "gbf" => {
                let lambda = take(&mut fields, "lambda")?;
                let p = take(&mut fields, "p")?;
                SpaceSpec::generalized_bf(lambda, p)?
            }
            "lp" => SpaceSpec::lp_plane(take(&mut fields, "p")?)?,
            other => return Err(bad(&format!("unknown kind '{other}'"))),
        };
        if let Some(key) = fields.keys().next() {
            return Err(bad(&format!("unexpected parameter '{key}'")));
        }
        Ok(spec)
    }
}
