//! Network-level parameters and their reduction to the two integrand
//! constants A and B.
//!
//! A Poisson field of interferers with density λ, Rayleigh fading (unit-mean
//! exponential power, rate μ), SIR threshold T, noise power σ² and path-loss
//! exponent α collapses into A = πλβ and B = μTσ², where β captures the
//! interference geometry:
//!
//!   β = (2(μT)^{2/α}/α) · E_g[ g^{2/α} (Γ(−2/α, μTg) − Γ(−2/α)) ]
//!
//! with g drawn from the fading distribution. β > 1 whenever T > 0, and
//! β → 1 as T → 0. The coverage probability is p_c = πλ·I(A, B, α), which
//! makes 1/β a hard ceiling on p_c in the noise-free limit.

use crate::error::{Error, Result};
use crate::quadrature::{self, IntegralParams, ALPHA_MAX, ALPHA_MIN};
use crate::specfun;

/// Fading power distribution of the desired and interfering links.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Fading {
    /// Exponential power (Rayleigh amplitude) with rate μ.
    #[default]
    Exponential,
}

impl Fading {
    /// Probability density of the fading power at `g`.
    pub fn density(&self, mu: f64, g: f64) -> f64 {
        match self {
            Fading::Exponential => {
                if g < 0.0 {
                    0.0
                } else {
                    mu * (-mu * g).exp()
                }
            }
        }
    }
}

/// Physical-layer description of the downlink.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NetworkParams {
    /// Base-station density (per unit area), > 0.
    pub lambda: f64,
    /// SIR/SINR threshold, linear scale, > 0.
    pub t: f64,
    /// Fading rate, > 0 (unit-mean fading has μ = 1).
    pub mu: f64,
    /// Noise power normalized by transmit power, ≥ 0.
    pub sigma2: f64,
    /// Path-loss exponent.
    pub alpha: f64,
    pub fading: Fading,
}

impl NetworkParams {
    pub fn new(lambda: f64, t: f64, mu: f64, sigma2: f64, alpha: f64) -> Result<Self> {
        let p = NetworkParams { lambda, t, mu, sigma2, alpha, fading: Fading::Exponential };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let positive = [("lambda", self.lambda), ("T", self.t), ("mu", self.mu)];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!(
                    "NetworkParams: need {name} > 0, got {v}"
                )));
            }
        }
        if !(self.sigma2 >= 0.0) || !self.sigma2.is_finite() {
            return Err(Error::Domain(format!(
                "NetworkParams: need sigma2 >= 0, got {}",
                self.sigma2
            )));
        }
        if !(ALPHA_MIN..=ALPHA_MAX).contains(&self.alpha) {
            return Err(Error::Domain(format!(
                "NetworkParams: alpha = {} outside [{ALPHA_MIN}, {ALPHA_MAX}]",
                self.alpha
            )));
        }
        Ok(())
    }
}

/// The reduced constants the integral depends on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedParams {
    pub beta: f64,
    /// A = πλβ.
    pub a: f64,
    /// B = μTσ².
    pub b: f64,
}

impl DerivedParams {
    /// Build the derived constants from an externally supplied β (useful at
    /// α = 2, where [`compute_beta`] has no finite value).
    pub fn from_beta(beta: f64, params: &NetworkParams) -> Result<Self> {
        params.validate()?;
        if !(beta > 0.0) || !beta.is_finite() {
            return Err(Error::Domain(format!("need beta > 0, got {beta}")));
        }
        Ok(DerivedParams {
            beta,
            a: std::f64::consts::PI * params.lambda * beta,
            b: params.mu * params.t * params.sigma2,
        })
    }

    pub fn integral_params(&self, alpha: f64) -> Result<IntegralParams> {
        IntegralParams::new(self.a, self.b, alpha)
    }
}

/// The interference geometry factor β, to relative accuracy `tol`.
///
/// Evaluated as a semi-infinite expectation over the fading density. The
/// quadrature runs twice: a coarse pass fixes the scale, a second pass
/// re-integrates to the implied absolute tolerance.
///
/// # Errors
/// Domain error for α = 2 (Γ(−2/α) sits on the Γ pole at −1 and the
/// expectation has no finite closed value) and for invalid `params`/`tol`.
pub fn compute_beta(params: &NetworkParams, tol: f64) -> Result<f64> {
    params.validate()?;
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(Error::Domain(format!("compute_beta: need tol > 0, got {tol}")));
    }
    if params.alpha == 2.0 {
        return Err(Error::Domain(
            "compute_beta: alpha = 2 is a pole of Gamma(-2/alpha); supply beta explicitly"
                .into(),
        ));
    }

    let two_over_alpha = 2.0 / params.alpha;
    let mt = params.mu * params.t;
    // Γ(−2/α) via Γ(1 − 2/α) = (−2/α)Γ(−2/α).
    let gamma_whole = specfun::gamma(1.0 - two_over_alpha)? / (-two_over_alpha);
    let mu = params.mu;
    let fading = params.fading;

    let f = move |g: f64| {
        let tail = match specfun::upper_incomplete_gamma(-two_over_alpha, mt * g) {
            Ok(v) => v,
            Err(_) => return f64::NAN,
        };
        fading.density(mu, g) * g.powf(two_over_alpha) * (tail - gamma_whole)
    };

    let coarse = quadrature::integrate_semi_infinite(f, 1e-6)?;
    let target = (coarse.value.abs() * tol * 0.5).max(1e-15);
    let expectation = if coarse.abs_error_estimate > target {
        quadrature::integrate_semi_infinite(f, target)?.value
    } else {
        coarse.value
    };

    let beta = (2.0 * mt.powf(two_over_alpha) / params.alpha) * expectation;
    if !(beta > 0.0) || !beta.is_finite() {
        return Err(Error::Domain(format!(
            "compute_beta: expectation produced beta = {beta}"
        )));
    }
    Ok(beta)
}

/// β, A and B for the given network, with β computed to 1e-10 relative.
pub fn derive(params: &NetworkParams) -> Result<DerivedParams> {
    let beta = compute_beta(params, 1e-10)?;
    DerivedParams::from_beta(beta, params)
}

/// p_c = πλ·I, clipped to 1 against roundoff.
///
/// # Errors
/// Domain error for I < 0 or λ ≤ 0; range error if πλI exceeds 1 by more
/// than 1e-6 (an I that large signals inconsistent inputs, not roundoff).
pub fn coverage_probability(integral_value: f64, lambda: f64) -> Result<f64> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return Err(Error::Domain(format!("need lambda > 0, got {lambda}")));
    }
    if !(integral_value >= 0.0) || !integral_value.is_finite() {
        return Err(Error::Domain(format!(
            "need a finite integral value >= 0, got {integral_value}"
        )));
    }
    let p = std::f64::consts::PI * lambda * integral_value;
    if p > 1.0 + 1e-6 {
        return Err(Error::OutOfRange(format!(
            "coverage probability {p} exceeds 1; inputs are inconsistent"
        )));
    }
    Ok(p.min(1.0))
}

/// Noise power for a given SNR in dB: σ² = 10^{−SNR/10} (unit transmit
/// power, so SNR = 1/σ²).
pub fn snr_db_to_sigma2(snr_db: f64) -> f64 {
    10f64.powf(-snr_db / 10.0)
}
