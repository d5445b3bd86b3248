//! Exact constant values with known closed forms, used as oracles by the
//! verification path. Formulas are evaluated literally, with no algebraic
//! rearrangement, so they stay independent of the numeric search.

use crate::error::{Error, Result};
use crate::functionals::ConstantQuery;
use crate::norm_spaces::SpaceSpec;

fn check_lambda(lambda: f64) -> Result<()> {
    if lambda.is_finite() && lambda >= 1.0 {
        Ok(())
    } else {
        Err(Error::ParameterDomain(format!(
            "lambda must be finite and >= 1, got {lambda}"
        )))
    }
}

/// `L_YJ(ξ, η)` on the Banaś–Frączek plane:
/// `1 + (2ξη/(ξ²+η²))(1 − 1/λ²)`. Always in [1, 2).
pub fn lyj_bf(xi: f64, eta: f64, lambda: f64) -> Result<f64> {
    for (name, v) in [("xi", xi), ("eta", eta)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::ParameterDomain(format!(
                "{name} must be finite and > 0, got {v}"
            )));
        }
    }
    check_lambda(lambda)?;
    Ok(1.0 + (2.0 * xi * eta / (xi * xi + eta * eta)) * (1.0 - 1.0 / (lambda * lambda)))
}

/// `C_NJ` on the Banaś–Frączek plane: `2 − 1/λ²`.
pub fn cnj_bf(lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    Ok(2.0 - 1.0 / (lambda * lambda))
}

/// `C_NJ^(p)` on the Banaś–Frączek plane: `1 + (1 − 1/λ²)^(p/2)` for p ≥ 2,
/// valid only when `λ²(1 − 1/λ²)^(p/2) ≥ 1`.
pub fn cnjp_bf(p_exp: f64, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    if !(p_exp.is_finite() && p_exp >= 2.0) {
        return Err(Error::ParameterDomain(format!(
            "cnjp closed form needs p >= 2, got {p_exp}"
        )));
    }
    let core = (1.0 - 1.0 / (lambda * lambda)).powf(p_exp / 2.0);
    if lambda * lambda * core < 1.0 {
        return Err(Error::ConditionNotMet(format!(
            "lambda^2 (1 - 1/lambda^2)^(p/2) = {} < 1 for p={p_exp}, lambda={lambda}",
            lambda * lambda * core
        )));
    }
    Ok(1.0 + core)
}

/// James-type constant at τ = 1 on the generalized plane, t ≥ p branch only:
/// `2^(1−1/t) (1 + (1 − 1/λ^p)^(t/p))^(1/t)`.
///
/// The t < p branches are not encoded: their validity conditions contain a
/// malformed exponent in the source formula, so they are refused rather than
/// guessed.
pub fn james_type_gbf(t_mean: f64, p_exp: f64, lambda: f64) -> Result<f64> {
    check_lambda(lambda)?;
    if !(p_exp.is_finite() && p_exp >= 1.0) {
        return Err(Error::ParameterDomain(format!(
            "p must be finite and >= 1, got {p_exp}"
        )));
    }
    if !(t_mean.is_finite() && t_mean > 0.0) {
        return Err(Error::ParameterDomain(format!(
            "t must be finite and > 0, got {t_mean}"
        )));
    }
    if t_mean < p_exp {
        return Err(Error::UnsupportedBranch(format!(
            "james_type closed form is encoded for t >= p only, got t={t_mean}, p={p_exp}"
        )));
    }
    let inner = 1.0 - 1.0 / lambda.powf(p_exp);
    Ok(f64::exp2(1.0 - 1.0 / t_mean) * (1.0 + inner.powf(t_mean / p_exp)).powf(1.0 / t_mean))
}

/// Closed form for a (space, constant) pair, when one is known:
/// L_YJ, C_NJ and C_NJ^(p) on `bf` spaces, and the James-type constant at
/// τ = 1 on `gbf` spaces. Everything else is an unsupported combination.
pub fn closed_form_for(space: &SpaceSpec, query: &ConstantQuery) -> Result<f64> {
    space.validate()?;
    query.validate()?;
    match (*space, *query) {
        (SpaceSpec::BanasFraczek { lambda }, ConstantQuery::Lyj { xi, eta }) => {
            lyj_bf(xi, eta, lambda)
        }
        (SpaceSpec::BanasFraczek { lambda }, ConstantQuery::Cnj) => cnj_bf(lambda),
        (SpaceSpec::BanasFraczek { lambda }, ConstantQuery::Cnjp { p_exp }) => {
            cnjp_bf(p_exp, lambda)
        }
        (SpaceSpec::GeneralizedBF { lambda, p }, ConstantQuery::JamesType { t_mean, tau }) => {
            if tau == 1.0 {
                james_type_gbf(t_mean, p, lambda)
            } else {
                Err(Error::UnsupportedCombination(format!(
                    "james_type closed form is known at tau = 1 only, got tau = {tau}"
                )))
            }
        }
        _ => Err(Error::UnsupportedCombination(format!(
            "no closed form for constant '{}' on space '{space}'",
            query.kind()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lyj_bf_examples() {
        assert_eq!(lyj_bf(3.0, 0.7, 1.0).unwrap(), 1.0);
        for lambda in [1.0, 1.5, 2.0, 10.0] {
            let v = lyj_bf(1.0, 1.0, lambda).unwrap();
            assert!((v - (2.0 - 1.0 / (lambda * lambda))).abs() < 1e-15);
        }
        let v = lyj_bf(1.0, 2.0, 2.0_f64.sqrt()).unwrap();
        assert!((v - 1.4).abs() < 1e-15);
    }

    #[test]
    fn lyj_bf_symmetry_and_scaling() {
        for (xi, eta, lambda) in [(1.0, 2.0, 1.3), (0.4, 5.0, 3.0), (2.0, 2.0, 1.01)] {
            let v = lyj_bf(xi, eta, lambda).unwrap();
            assert_eq!(v, lyj_bf(eta, xi, lambda).unwrap());
            let scaled = lyj_bf(3.0 * xi, 3.0 * eta, lambda).unwrap();
            assert!((v - scaled).abs() <= 1e-15 * v);
            assert!((1.0..2.0).contains(&v));
        }
    }

    #[test]
    fn lyj_bf_monotone_in_lambda_and_maximized_at_equal_weights() {
        let mut prev = 0.0;
        for k in 0..50 {
            let lambda = 1.0 + 0.1 * k as f64;
            let v = lyj_bf(1.0, 3.0, lambda).unwrap();
            assert!(v >= prev);
            prev = v;
        }
        let lambda = 2.0;
        let peak = lyj_bf(1.0, 1.0, lambda).unwrap();
        for xi in [0.2, 0.5, 0.9, 1.1, 4.0] {
            assert!(lyj_bf(xi, 1.0, lambda).unwrap() <= peak + 1e-15);
        }
        assert!((peak - cnj_bf(lambda).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn cnj_bf_examples() {
        assert_eq!(cnj_bf(1.0).unwrap(), 1.0);
        assert!((cnj_bf(2.0).unwrap() - 1.75).abs() < 1e-15);
        assert!(cnj_bf(1e6).unwrap() < 2.0);
        assert!(matches!(cnj_bf(0.99), Err(Error::ParameterDomain(_))));
    }

    #[test]
    fn cnjp_bf_examples() {
        assert!((cnjp_bf(2.0, 2.0_f64.sqrt()).unwrap() - 1.5).abs() < 1e-15);
        assert!((cnjp_bf(4.0, 2.0).unwrap() - 1.5625).abs() < 1e-15);
        assert!(matches!(
            cnjp_bf(2.0, 1.05),
            Err(Error::ConditionNotMet(_))
        ));
        assert!(matches!(cnjp_bf(1.5, 2.0), Err(Error::ParameterDomain(_))));
    }

    #[test]
    fn james_type_gbf_examples() {
        // t = p = 2, λ = √2: √2 · √(3/2) = √3
        let v = james_type_gbf(2.0, 2.0, 2.0_f64.sqrt()).unwrap();
        assert!((v - 3.0_f64.sqrt()).abs() < 1e-15);
        // branch boundary t = p
        let v = james_type_gbf(3.0, 3.0, 1.4).unwrap();
        let expect = f64::exp2(1.0 - 1.0 / 3.0)
            * (1.0 + (1.0 - 1.0 / 1.4_f64.powf(3.0))).powf(1.0 / 3.0);
        assert_eq!(v, expect);
        // λ → 1 limit is 2^(1-1/t)
        let v = james_type_gbf(2.0, 2.0, 1.0).unwrap();
        assert!((v - 2.0_f64.sqrt()).abs() < 1e-15);
        assert!(matches!(
            james_type_gbf(1.5, 2.0, 2.0),
            Err(Error::UnsupportedBranch(_))
        ));
    }

    #[test]
    fn closed_form_lookup() {
        let bf = SpaceSpec::banas_fraczek(5.0).unwrap();
        assert!((closed_form_for(&bf, &ConstantQuery::Cnj).unwrap() - 1.96).abs() < 1e-15);

        let gbf = SpaceSpec::generalized_bf(2.0, 2.0).unwrap();
        let v = closed_form_for(
            &gbf,
            &ConstantQuery::JamesType { t_mean: 2.0, tau: 1.0 },
        )
        .unwrap();
        assert!((v - 2.0_f64.sqrt() * 1.75_f64.sqrt()).abs() < 1e-15);

        // unsupported combinations
        let gbf3 = SpaceSpec::generalized_bf(2.0, 3.0).unwrap();
        assert!(matches!(
            closed_form_for(&gbf3, &ConstantQuery::Cnjp { p_exp: 3.0 }),
            Err(Error::UnsupportedCombination(_))
        ));
        let lp = SpaceSpec::lp_plane(2.0).unwrap();
        assert!(matches!(
            closed_form_for(&lp, &ConstantQuery::Cnj),
            Err(Error::UnsupportedCombination(_))
        ));
        assert!(matches!(
            closed_form_for(&bf, &ConstantQuery::James),
            Err(Error::UnsupportedCombination(_))
        ));
        assert!(matches!(
            closed_form_for(
                &gbf,
                &ConstantQuery::JamesType { t_mean: 2.0, tau: 0.5 }
            ),
            Err(Error::UnsupportedCombination(_))
        ));
    }
}
