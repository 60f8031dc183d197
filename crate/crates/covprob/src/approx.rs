//! Closed forms and approximations for the coverage integral
//! I = ∫₀^∞ exp{−(Ax + Bx^{α/2})} dx, with rigorous truncation bounds,
//! validity-region solvers and ratio-test diagnostics.
//!
//! Four approximation families:
//!  * limiting: [A + (α/2)B^{2/α}/Γ(2/α)]^{−1}, exact at α = 2 and in both
//!    single-term limits, no error bound;
//!  * interference-dominant series: expansion of exp{−Bx^{α/2}}, asymptotic
//!    (divergent) for α > 2, bound = first omitted term;
//!  * noise-dominant series: expansion of exp{−Ax}, convergent for α > 2,
//!    bound = first omitted term;
//!  * Laplace: Gaussian approximation around the unique stationary point of
//!    the shifted exponent, exact at α = 4, cubic-remainder bound for
//!    2 < α < 6.
//!
//! Both series bounds are rigorous for every truncation order n, not only
//! asymptotically: the omitted tail is the Lagrange remainder of e^{−v}
//! integrated against a positive measure, and |R_n(v)| ≤ v^{n+1}/(n+1)!
//! for v ≥ 0.

use crate::error::{Error, Result};
use crate::model::{DerivedParams, NetworkParams};
use crate::quadrature::IntegralParams;
use crate::specfun::{self, log_gamma};

/// Hard ceiling on series truncation order; Γ(kα/2+1) magnitudes stay
/// representable in log form but the partial sums stop being informative
/// long before this.
pub const N_MAX: usize = 30;

/// Truncation order used when the caller does not pick one.
pub const DEFAULT_TERMS: usize = 4;

// exp() overflows just above this; used for the ±∞/error sentinels.
const LN_MAX: f64 = 709.0;

/// Which estimate produced an [`ApproxResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Exact,
    Limiting,
    InterferenceSeries,
    NoiseSeries,
    Laplace,
}

impl Method {
    /// Short name used on the command line and in CSV column suffixes.
    pub fn cli_name(&self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Limiting => "limiting",
            Method::InterferenceSeries => "interference",
            Method::NoiseSeries => "noise",
            Method::Laplace => "laplace",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Method::Exact),
            "limiting" => Ok(Method::Limiting),
            "interference" | "interference_series" => Ok(Method::InterferenceSeries),
            "noise" | "noise_series" => Ok(Method::NoiseSeries),
            "laplace" => Ok(Method::Laplace),
            other => Err(Error::Domain(format!(
                "unknown method {other:?}; expected exact, limiting, interference, noise or laplace"
            ))),
        }
    }
}

/// An approximate (or exact) value of the integral.
#[derive(Debug, Clone, Copy)]
pub struct ApproxResult {
    pub value: f64,
    /// Rigorous bound on |value − I| when the method provides one.
    /// `f64::INFINITY` flags a bound that overflowed the representable range.
    pub error_bound: Option<f64>,
    pub method: Method,
    /// Truncation order actually used by the series methods (may be lower
    /// than requested when a divergent series is capped at its smallest
    /// term).
    pub terms_used: Option<usize>,
}

/// Largest noise variance (interference case) or smallest (noise case) for
/// which a truncated series stays within a target absolute error ε.
#[derive(Debug, Clone, Copy)]
pub struct ValidityReport {
    pub epsilon: f64,
    pub n: usize,
    pub b_threshold: f64,
    pub sigma2_threshold: f64,
    /// Formal n → ∞ limit of the threshold.
    pub sigma2_asymptotic: f64,
}

/// Ratio-test classification of a series.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Converges,
    Diverges,
    /// Converges only when the limiting ratio is below 1.
    Conditional,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Converges => "converges",
            Verdict::Diverges => "diverges",
            Verdict::Conditional => "conditional",
        })
    }
}

/// Successive term ratios |a_{k+1}/a_k| and their limiting behavior.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    /// |a_{k+1}/a_k| for k = 1..=K.
    pub ratios: Vec<f64>,
    pub verdict: Verdict,
    /// Limit of the ratios: +∞ for divergent, 0 for convergent, the
    /// constant ratio in the conditional α = 2 case.
    pub limit_expression: f64,
}

/// Stationary-point data of the Laplace approximation: the exponent is
/// rewritten as h(x) = c + b(x − x̂)... around x̂, giving the Gaussian
/// factor exp{−a y²} after completing the square.
#[derive(Debug, Clone, Copy)]
pub struct LaplaceInternals {
    pub x_hat: f64,
    /// h''(x̂)/2 > 0 (needs α > 2 and B > 0).
    pub a: f64,
    /// h'(x̂) > 0.
    pub b: f64,
    /// h(x̂).
    pub c: f64,
    /// ŷ = √(2a)(−x̂ + b/(2a)), the lower integration limit after the
    /// Gaussian change of variables.
    pub y_hat: f64,
}

fn check_nonneg(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v < 0.0 {
        return Err(Error::Domain(format!("need {name} >= 0, got {v}")));
    }
    Ok(())
}

fn check_pos(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::Domain(format!("need {name} > 0, got {v}")));
    }
    Ok(())
}

/// I = 1/(A + B) at α = 2.
pub fn exact_alpha2(a: f64, b: f64) -> Result<f64> {
    check_nonneg("A", a)?;
    check_nonneg("B", b)?;
    if a + b == 0.0 {
        return Err(Error::Degenerate("exact_alpha2: A = B = 0".into()));
    }
    Ok(1.0 / (a + b))
}

/// I = √(π/B)·exp{A²/(4B)}·Q(A/√(2B)) at α = 4, evaluated in log space
/// (the exponential and the Q tail overflow/underflow separately long
/// before their product leaves f64 range).
pub fn exact_alpha4(a: f64, b: f64) -> Result<f64> {
    check_nonneg("A", a)?;
    if !(b > 0.0) || !b.is_finite() {
        return Err(Error::Domain(format!(
            "exact_alpha4: the closed form needs B > 0, got {b}"
        )));
    }
    if a == 0.0 {
        return Ok(0.5 * (std::f64::consts::PI / b).sqrt());
    }
    let ln = 0.5 * (std::f64::consts::PI.ln() - b.ln()) + a * a / (4.0 * b)
        + specfun::ln_q(a / (2.0 * b).sqrt());
    Ok(ln.exp())
}

/// I = (2/(αB^{2/α}))·Γ(2/α) at A = 0.
pub fn limit_noise(b: f64, alpha: f64) -> Result<f64> {
    check_pos("B", b)?;
    IntegralParams::new(0.0, b, alpha)?;
    let g = specfun::gamma(2.0 / alpha)?;
    Ok(2.0 / (alpha * b.powf(2.0 / alpha)) * g)
}

/// I = 1/A at B = 0.
pub fn limit_interference(a: f64) -> Result<f64> {
    check_pos("A", a)?;
    Ok(1.0 / a)
}

/// The closed-form limiting approximation [A + (α/2)B^{2/α}/Γ(2/α)]^{−1}.
/// Exact at α = 2 and whenever A = 0 or B = 0; carries no error bound in
/// between.
pub fn limiting_approx(params: &IntegralParams) -> Result<ApproxResult> {
    params.validate()?;
    let value = if params.a == 0.0 {
        limit_noise(params.b, params.alpha)?
    } else if params.b == 0.0 {
        limit_interference(params.a)?
    } else {
        let g = specfun::gamma(2.0 / params.alpha)?;
        let denom = params.a + (params.alpha / 2.0) * params.b.powf(2.0 / params.alpha) / g;
        1.0 / denom
    };
    Ok(ApproxResult { value, error_bound: None, method: Method::Limiting, terms_used: None })
}

fn check_order(n: usize) -> Result<()> {
    if n > N_MAX {
        return Err(Error::Domain(format!(
            "truncation order {n} exceeds the maximum {N_MAX}"
        )));
    }
    Ok(())
}

/// Truncated expansion in powers of B/A^{α/2}:
/// I ≈ (1/A)Σ_{k=0}^n (1/k!)(−B/A^{α/2})^k Γ(kα/2 + 1).
///
/// The bound is the first omitted term. For α ≥ 2 the series is asymptotic
/// and the term magnitudes have a single minimum; a request for more terms
/// than the minimum is capped there (the asymptotic optimum) and the cap is
/// visible in `terms_used`.
///
/// # Errors
/// Domain error for A ≤ 0, n > [`N_MAX`], or a partial-sum term too large
/// for f64.
pub fn interference_series(params: &IntegralParams, n: usize) -> Result<ApproxResult> {
    params.validate()?;
    check_pos("A", params.a)?;
    check_order(n)?;

    let method = Method::InterferenceSeries;
    if params.b == 0.0 {
        return Ok(ApproxResult {
            value: 1.0 / params.a,
            error_bound: Some(0.0),
            method,
            terms_used: Some(0),
        });
    }

    let half_alpha = params.alpha / 2.0;
    let ln_a = params.a.ln();
    let ln_x = params.b.ln() - half_alpha * ln_a; // x = B/A^{α/2}
    let ln_term = |k: usize| -> Result<f64> {
        let kf = k as f64;
        Ok(-log_gamma(kf + 1.0)? + kf * ln_x + log_gamma(kf * half_alpha + 1.0)?
            - ln_a)
    };

    let cap_divergent = params.alpha >= 2.0;
    let mut sum = 1.0 / params.a; // k = 0 term, Γ(1)/A exactly
    let mut prev_ln = -ln_a;
    let mut used = n;
    let mut next_ln = None;
    for k in 1..=n {
        let ln_k = ln_term(k)?;
        if cap_divergent && ln_k > prev_ln {
            used = k - 1;
            next_ln = Some(ln_k);
            break;
        }
        if ln_k > LN_MAX {
            return Err(Error::Domain(format!(
                "interference_series: term {k} overflows f64; reduce n"
            )));
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * ln_k.exp();
        prev_ln = ln_k;
    }

    let ln_bound = match next_ln {
        Some(v) => v,
        None => ln_term(used + 1)?,
    };
    let error_bound = if ln_bound > LN_MAX { f64::INFINITY } else { ln_bound.exp() };

    Ok(ApproxResult { value: sum, error_bound: Some(error_bound), method, terms_used: Some(used) })
}

/// Where the order-n interference series meets a target absolute error ε:
/// B below B_threshold = A^{α/2}(εK₁A)^{1/(n+1)} keeps the first omitted
/// term under ε, with K₁ = (n+1)!/Γ((n+1)α/2 + 1). Thresholds are reported
/// both on B and on σ² = B/(μT); `sigma2_asymptotic` is the formal n → ∞
/// limit (πλβ)^{α/2}/(μT).
pub fn interference_validity(
    epsilon: f64,
    n: usize,
    net: &NetworkParams,
    derived: &DerivedParams,
) -> Result<ValidityReport> {
    check_pos("epsilon", epsilon)?;
    check_order(n)?;
    net.validate()?;
    check_pos("A", derived.a)?;

    let np1 = (n + 1) as f64;
    let half_alpha = net.alpha / 2.0;
    let ln_a = derived.a.ln();
    let ln_k1 = log_gamma(np1 + 1.0)? - log_gamma(np1 * half_alpha + 1.0)?;
    let ln_b_thr = half_alpha * ln_a + (epsilon.ln() + ln_k1 + ln_a) / np1;
    let b_threshold = ln_b_thr.exp();
    let mt = net.mu * net.t;

    Ok(ValidityReport {
        epsilon,
        n,
        b_threshold,
        sigma2_threshold: b_threshold / mt,
        sigma2_asymptotic: derived.a.powf(half_alpha) / mt,
    })
}

/// Truncated expansion in powers of A/B^{2/α}:
/// I ≈ (2/(αB^{2/α}))Σ_{k=0}^n (1/k!)(−A/B^{2/α})^k Γ(2(k+1)/α).
///
/// The bound is the first omitted term; the series converges for α > 2, so
/// no capping is applied.
///
/// # Errors
/// Domain error for B ≤ 0, n > [`N_MAX`], or a partial-sum term too large
/// for f64 (possible for α < 2 where the series diverges).
pub fn noise_series(params: &IntegralParams, n: usize) -> Result<ApproxResult> {
    params.validate()?;
    check_pos("B", params.b)?;
    check_order(n)?;

    let method = Method::NoiseSeries;
    let k0 = limit_noise(params.b, params.alpha)?;
    if params.a == 0.0 {
        return Ok(ApproxResult {
            value: k0,
            error_bound: Some(0.0),
            method,
            terms_used: Some(0),
        });
    }

    let two_over_alpha = 2.0 / params.alpha;
    let ln_b = params.b.ln();
    // ln of the prefactor 2/(αB^{2/α}).
    let ln_s0 = std::f64::consts::LN_2 - params.alpha.ln() - two_over_alpha * ln_b;
    let ln_x = params.a.ln() - two_over_alpha * ln_b; // x = A/B^{2/α}
    let ln_term = |k: usize| -> Result<f64> {
        let kf = k as f64;
        Ok(ln_s0 - log_gamma(kf + 1.0)? + kf * ln_x
            + log_gamma(2.0 * (kf + 1.0) / params.alpha)?)
    };

    let mut sum = k0;
    for k in 1..=n {
        let ln_k = ln_term(k)?;
        if ln_k > LN_MAX {
            return Err(Error::Domain(format!(
                "noise_series: term {k} overflows f64; reduce n"
            )));
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * ln_k.exp();
    }

    let ln_bound = ln_term(n + 1)?;
    let error_bound = if ln_bound > LN_MAX { f64::INFINITY } else { ln_bound.exp() };

    Ok(ApproxResult { value: sum, error_bound: Some(error_bound), method, terms_used: Some(n) })
}

/// Where the order-n noise series meets a target absolute error ε: B above
/// B_threshold = (A^{n+1}/(εK₂))^{α/(2(n+2))} keeps the first omitted term
/// under ε, with K₂ = α(n+1)!/(2Γ(2(n+2)/α)). `sigma2_asymptotic` is the
/// n → ∞ limit of the threshold: 0 for α > 2 (the series eventually works
/// for any noise level), A/(μT) at α = 2, +∞ for α < 2.
pub fn noise_validity(
    epsilon: f64,
    n: usize,
    net: &NetworkParams,
    derived: &DerivedParams,
) -> Result<ValidityReport> {
    check_pos("epsilon", epsilon)?;
    check_order(n)?;
    net.validate()?;
    check_nonneg("A", derived.a)?;

    let np1 = (n + 1) as f64;
    let np2 = (n + 2) as f64;
    let ln_k2 = net.alpha.ln() + log_gamma(np1 + 1.0)? - std::f64::consts::LN_2
        - log_gamma(2.0 * np2 / net.alpha)?;
    let ln_b_thr = (np1 * derived.a.ln() - epsilon.ln() - ln_k2) * net.alpha / (2.0 * np2);
    let b_threshold = ln_b_thr.exp();
    let mt = net.mu * net.t;

    let sigma2_asymptotic = if net.alpha > 2.0 {
        0.0
    } else if net.alpha == 2.0 {
        derived.a / mt
    } else {
        f64::INFINITY
    };

    Ok(ValidityReport {
        epsilon,
        n,
        b_threshold,
        sigma2_threshold: b_threshold / mt,
        sigma2_asymptotic,
    })
}

/// Stationary-point data for the Laplace approximation at `x_hat` (default
/// (A + B^{2/α})^{−1}).
///
/// # Errors
/// Domain error unless α > 2, B > 0, A ≥ 0 and `x_hat` (when given) is a
/// positive finite number.
pub fn laplace_internals(
    params: &IntegralParams,
    x_hat_override: Option<f64>,
) -> Result<LaplaceInternals> {
    params.validate()?;
    check_nonneg("A", params.a)?;
    check_pos("B", params.b)?;
    if params.alpha <= 2.0 {
        return Err(Error::Domain(format!(
            "laplace approximation needs alpha > 2 (h'' > 0), got {}",
            params.alpha
        )));
    }
    let x_hat = match x_hat_override {
        Some(x) => {
            check_pos("x_hat", x)?;
            x
        }
        None => 1.0 / (params.a + params.b.powf(2.0 / params.alpha)),
    };

    let c2 = params.alpha / 2.0;
    let a = (params.b / 2.0) * c2 * (c2 - 1.0) * x_hat.powf(c2 - 2.0);
    let b = params.a + params.b * c2 * x_hat.powf(c2 - 1.0);
    let c = params.a * x_hat + params.b * x_hat.powf(c2);
    let y_hat = (2.0 * a).sqrt() * (-x_hat + b / (2.0 * a));
    Ok(LaplaceInternals { x_hat, a, b, c, y_hat })
}

/// Laplace (Gaussian) approximation √(π/a)·exp{b²/(4a) − c}·Q(ŷ), in log
/// space. Exact at α = 4 for any choice of x̂ (the cubic remainder carries
/// a factor (α/2 − 2)). For 2 < α < 6 `error_bound` holds the cubic
/// remainder bound; outside that range it is absent.
pub fn laplace_approx(
    params: &IntegralParams,
    x_hat_override: Option<f64>,
) -> Result<ApproxResult> {
    let it = laplace_internals(params, x_hat_override)?;
    let ln = 0.5 * (std::f64::consts::PI.ln() - it.a.ln()) + (it.b * it.b / (4.0 * it.a) - it.c)
        + specfun::ln_q(it.y_hat);
    let error_bound = if params.alpha < 6.0 {
        Some(laplace_error_bound(params, &it)?)
    } else {
        None
    };
    Ok(ApproxResult { value: ln.exp(), error_bound, method: Method::Laplace, terms_used: None })
}

/// Bound on the cubic-remainder error of [`laplace_approx`], valid for
/// 2 < α < 6 where |x|^{α/2−3} decreases away from the expansion point:
///
///   exp{b²/(4a) − c}·(K₃/a²)·Σ_{k=0}^3 C(3,k)(b²/(4a))^{k/2} G(k)
///
/// with K₃ = B·|C(α/2,3)|·x̂^{α/2−3} and
/// G(k) = Γ(2 − k/2) + (−1)^{3−k} γ(2 − k/2, b²/(4a)). Returns
/// `f64::INFINITY` when the bound overflows.
pub fn laplace_error_bound(params: &IntegralParams, internals: &LaplaceInternals) -> Result<f64> {
    params.validate()?;
    if !(params.alpha > 2.0 && params.alpha < 6.0) {
        return Err(Error::Domain(format!(
            "laplace_error_bound holds for 2 < alpha < 6, got {}",
            params.alpha
        )));
    }
    let c2 = params.alpha / 2.0;
    let binom3 = c2 * (c2 - 1.0) * (c2 - 2.0) / 6.0;
    if binom3 == 0.0 {
        return Ok(0.0); // α = 4: the cubic term of the exponent vanishes
    }
    let k3 = params.b * binom3.abs() * internals.x_hat.powf(c2 - 3.0);

    let arg = internals.b * internals.b / (4.0 * internals.a);
    // G(k) via upper incomplete gamma: Γ(s) − γ(s, z) = Γ(s, z) for even k,
    // Γ(s) + γ(s, z) = 2Γ(s) − Γ(s, z) for odd k.
    let g = |k: usize| -> Result<f64> {
        let s = 2.0 - k as f64 / 2.0;
        let upper = specfun::upper_incomplete_gamma(s, arg)?;
        if k.is_multiple_of(2) {
            Ok(upper)
        } else {
            Ok(2.0 * specfun::gamma(s)? - upper)
        }
    };
    let sq = arg.sqrt();
    let sum = g(0)? + 3.0 * sq * g(1)? + 3.0 * arg * g(2)? + sq * arg * g(3)?;

    let ln_bound = (arg - internals.c) + (k3 / (internals.a * internals.a)).ln() + sum.ln();
    if ln_bound > LN_MAX {
        Ok(f64::INFINITY)
    } else {
        Ok(ln_bound.exp())
    }
}

fn ratio_report(
    ln_x: f64,
    lgamma_num: impl Fn(f64) -> Result<f64>,
    lgamma_den: impl Fn(f64) -> Result<f64>,
    k_max: usize,
    verdict: Verdict,
    limit_expression: f64,
) -> Result<ConvergenceReport> {
    let mut ratios = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let kf = k as f64;
        let ln_r = ln_x - (kf + 1.0).ln() + lgamma_num(kf)? - lgamma_den(kf)?;
        ratios.push(ln_r.exp());
    }
    Ok(ConvergenceReport { ratios, verdict, limit_expression })
}

/// Ratio test of the interference series: |a_{k+1}/a_k| =
/// (B/((k+1)A^{α/2}))·Γ((k+1)α/2 + 1)/Γ(kα/2 + 1) for k = 1..=K.
/// Diverges for α > 2; at α = 2 the ratio is the constant B/A; converges
/// for α < 2.
pub fn ratio_test_interference(params: &IntegralParams, k_max: usize) -> Result<ConvergenceReport> {
    params.validate()?;
    check_pos("A", params.a)?;
    check_pos("B", params.b)?;
    if k_max < 2 {
        return Err(Error::Domain(format!("need K >= 2, got {k_max}")));
    }
    let half_alpha = params.alpha / 2.0;
    let ln_x = params.b.ln() - half_alpha * params.a.ln();
    let (verdict, limit) = if params.alpha > 2.0 {
        (Verdict::Diverges, f64::INFINITY)
    } else if params.alpha == 2.0 {
        (Verdict::Conditional, params.b / params.a)
    } else {
        (Verdict::Converges, 0.0)
    };
    ratio_report(
        ln_x,
        |k| log_gamma((k + 1.0) * half_alpha + 1.0),
        |k| log_gamma(k * half_alpha + 1.0),
        k_max,
        verdict,
        limit,
    )
}

/// Ratio test of the noise series: |a_{k+1}/a_k| =
/// (A/((k+1)B^{2/α}))·Γ(2(k+2)/α)/Γ(2(k+1)/α) for k = 1..=K. Converges for
/// α > 2 (ratios → 0); at α = 2 the ratio is the constant A/B; diverges for
/// α < 2.
pub fn ratio_test_noise(params: &IntegralParams, k_max: usize) -> Result<ConvergenceReport> {
    params.validate()?;
    check_pos("B", params.b)?;
    check_nonneg("A", params.a)?;
    if k_max < 2 {
        return Err(Error::Domain(format!("need K >= 2, got {k_max}")));
    }
    let two_over_alpha = 2.0 / params.alpha;
    let ln_x = params.a.ln() - two_over_alpha * params.b.ln();
    let (verdict, limit) = if params.alpha > 2.0 {
        (Verdict::Converges, 0.0)
    } else if params.alpha == 2.0 {
        (
            Verdict::Conditional,
            (2.0 / params.alpha).powf(two_over_alpha) * params.a / params.b.powf(two_over_alpha),
        )
    } else {
        (Verdict::Diverges, f64::INFINITY)
    };
    ratio_report(
        ln_x,
        |k| log_gamma(2.0 * (k + 2.0) / params.alpha),
        |k| log_gamma(2.0 * (k + 1.0) / params.alpha),
        k_max,
        verdict,
        limit,
    )
}

/// Options for [`evaluate`].
#[derive(Debug, Clone, Copy, Default)]
pub struct EvalOptions {
    /// Truncation order for the series methods (default [`DEFAULT_TERMS`]).
    pub n: Option<usize>,
    /// Expansion point override for the Laplace method.
    pub x_hat_override: Option<f64>,
    /// Accepted for interface stability; none of the closed-form or series
    /// methods consumes a tolerance.
    pub tol: Option<f64>,
}

/// Uniform dispatch over the five methods.
///
/// `Method::Exact` routes B = 0 and A = 0 to the single-parameter closed
/// forms first (those hold for every α), then α = 2 and α = 4; anything
/// else has no closed form and errors.
pub fn evaluate(params: &IntegralParams, method: Method, options: &EvalOptions) -> Result<ApproxResult> {
    params.validate()?;
    match method {
        Method::Exact => {
            let value = if params.b == 0.0 {
                limit_interference(params.a)?
            } else if params.a == 0.0 {
                limit_noise(params.b, params.alpha)?
            } else if params.alpha == 2.0 {
                exact_alpha2(params.a, params.b)?
            } else if params.alpha == 4.0 {
                exact_alpha4(params.a, params.b)?
            } else {
                return Err(Error::NoClosedForm(format!(
                    "no exact expression for A = {}, B = {}, alpha = {}; \
                     closed forms exist for alpha in {{2, 4}} or A·B = 0",
                    params.a, params.b, params.alpha
                )));
            };
            Ok(ApproxResult {
                value,
                error_bound: Some(0.0),
                method: Method::Exact,
                terms_used: None,
            })
        }
        Method::Limiting => limiting_approx(params),
        Method::InterferenceSeries => {
            interference_series(params, options.n.unwrap_or(DEFAULT_TERMS))
        }
        Method::NoiseSeries => noise_series(params, options.n.unwrap_or(DEFAULT_TERMS)),
        Method::Laplace => laplace_approx(params, options.x_hat_override),
    }
}
