//! Python bindings for the coverage-probability library. Scalar in, scalar
//! (or tuple) out; every library error surfaces as ValueError carrying the
//! original message.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use covprob::approx::{self, EvalOptions, Method};
use covprob::model::{self, NetworkParams};
use covprob::quadrature::{self, IntegralParams};
use covprob::specfun;

fn to_py(e: covprob::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn params(a: f64, b: f64, alpha: f64) -> PyResult<IntegralParams> {
    IntegralParams::new(a, b, alpha).map_err(to_py)
}

fn network(lam: f64, t: f64, mu: f64, sigma2: f64, alpha: f64) -> PyResult<NetworkParams> {
    NetworkParams::new(lam, t, mu, sigma2, alpha).map_err(to_py)
}

fn derived_for(net: &NetworkParams, beta: Option<f64>) -> PyResult<model::DerivedParams> {
    match beta {
        Some(b) => model::DerivedParams::from_beta(b, net).map_err(to_py),
        None => model::derive(net).map_err(to_py),
    }
}

/// High-accuracy quadrature value of ∫_0^∞ exp{−(a·x + b·x^(alpha/2))} dx.
/// Returns (value, abs_error_estimate).
#[pyfunction]
#[pyo3(signature = (a, b, alpha, tol=1e-10))]
fn oracle(a: f64, b: f64, alpha: f64, tol: f64) -> PyResult<(f64, f64)> {
    let r = quadrature::integrate_coverage(&params(a, b, alpha)?, tol).map_err(to_py)?;
    Ok((r.value, r.abs_error_estimate))
}

/// Evaluate by method name: "exact", "limiting", "interference", "noise" or
/// "laplace". Returns (value, error_bound_or_None, terms_used_or_None).
#[pyfunction]
#[pyo3(signature = (a, b, alpha, method, n=None, x_hat=None))]
fn evaluate(
    a: f64,
    b: f64,
    alpha: f64,
    method: &str,
    n: Option<usize>,
    x_hat: Option<f64>,
) -> PyResult<(f64, Option<f64>, Option<usize>)> {
    let m: Method = method.parse().map_err(to_py)?;
    let opts = EvalOptions { n, x_hat_override: x_hat, tol: None };
    let r = approx::evaluate(&params(a, b, alpha)?, m, &opts).map_err(to_py)?;
    Ok((r.value, r.error_bound, r.terms_used))
}

/// Fading constant β for exponential fading; independent of sigma2 and lam.
#[pyfunction]
#[pyo3(signature = (t, mu, alpha, tol=1e-10))]
fn compute_beta(t: f64, mu: f64, alpha: f64, tol: f64) -> PyResult<f64> {
    let net = network(1.0, t, mu, 0.0, alpha)?;
    model::compute_beta(&net, tol).map_err(to_py)
}

/// Map network parameters to the integrand constants.
/// Returns (beta, a, b) with a = π·lam·beta and b = mu·t·sigma2.
#[pyfunction]
fn derive(lam: f64, t: f64, mu: f64, sigma2: f64, alpha: f64) -> PyResult<(f64, f64, f64)> {
    let net = network(lam, t, mu, sigma2, alpha)?;
    let d = model::derive(&net).map_err(to_py)?;
    Ok((d.beta, d.a, d.b))
}

/// p_c = π·lam·I, validated and clipped to [0, 1].
#[pyfunction]
fn coverage_probability(integral_value: f64, lam: f64) -> PyResult<f64> {
    model::coverage_probability(integral_value, lam).map_err(to_py)
}

#[pyfunction]
fn snr_db_to_sigma2(snr_db: f64) -> f64 {
    model::snr_db_to_sigma2(snr_db)
}

/// Noise-variance validity threshold for one series ("interference" or
/// "noise"). Returns (b_threshold, sigma2_threshold, sigma2_asymptotic).
#[pyfunction]
#[pyo3(signature = (kind, epsilon, n, lam, t, mu, alpha, beta=None))]
#[allow(clippy::too_many_arguments)]
fn validity(
    kind: &str,
    epsilon: f64,
    n: usize,
    lam: f64,
    t: f64,
    mu: f64,
    alpha: f64,
    beta: Option<f64>,
) -> PyResult<(f64, f64, f64)> {
    let net = network(lam, t, mu, 0.0, alpha)?;
    let derived = derived_for(&net, beta)?;
    let report = match kind {
        "interference" => approx::interference_validity(epsilon, n, &net, &derived),
        "noise" => approx::noise_validity(epsilon, n, &net, &derived),
        other => {
            return Err(PyValueError::new_err(format!(
                "kind must be 'interference' or 'noise', got '{other}'"
            )))
        }
    }
    .map_err(to_py)?;
    Ok((report.b_threshold, report.sigma2_threshold, report.sigma2_asymptotic))
}

/// Ratio-test diagnostics for one series ("interference" or "noise").
/// Returns (ratios, verdict, limit); verdict is "converges", "diverges" or
/// "conditional".
#[pyfunction]
#[pyo3(signature = (kind, a, b, alpha, k=50))]
fn ratio_test(kind: &str, a: f64, b: f64, alpha: f64, k: usize) -> PyResult<(Vec<f64>, String, f64)> {
    let p = params(a, b, alpha)?;
    let report = match kind {
        "interference" => approx::ratio_test_interference(&p, k),
        "noise" => approx::ratio_test_noise(&p, k),
        other => {
            return Err(PyValueError::new_err(format!(
                "kind must be 'interference' or 'noise', got '{other}'"
            )))
        }
    }
    .map_err(to_py)?;
    Ok((report.ratios, report.verdict.to_string(), report.limit_expression))
}

#[pyfunction]
fn q_function(x: f64) -> f64 {
    specfun::q_function(x)
}

#[pyfunction]
fn ln_q(x: f64) -> f64 {
    specfun::ln_q(x)
}

#[pyfunction]
fn erfc(x: f64) -> f64 {
    specfun::erfc(x)
}

#[pyfunction]
fn gamma(x: f64) -> PyResult<f64> {
    specfun::gamma(x).map_err(to_py)
}

#[pyfunction]
fn log_gamma(x: f64) -> PyResult<f64> {
    specfun::log_gamma(x).map_err(to_py)
}

#[pyfunction]
fn upper_incomplete_gamma(a: f64, z: f64) -> PyResult<f64> {
    specfun::upper_incomplete_gamma(a, z).map_err(to_py)
}

#[pyfunction]
fn lower_incomplete_gamma(a: f64, z: f64) -> PyResult<f64> {
    specfun::lower_incomplete_gamma(a, z).map_err(to_py)
}

#[pymodule]
fn covprob_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(oracle, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate, m)?)?;
    m.add_function(wrap_pyfunction!(compute_beta, m)?)?;
    m.add_function(wrap_pyfunction!(derive, m)?)?;
    m.add_function(wrap_pyfunction!(coverage_probability, m)?)?;
    m.add_function(wrap_pyfunction!(snr_db_to_sigma2, m)?)?;
    m.add_function(wrap_pyfunction!(validity, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_test, m)?)?;
    m.add_function(wrap_pyfunction!(q_function, m)?)?;
    m.add_function(wrap_pyfunction!(ln_q, m)?)?;
    m.add_function(wrap_pyfunction!(erfc, m)?)?;
    m.add_function(wrap_pyfunction!(gamma, m)?)?;
    m.add_function(wrap_pyfunction!(log_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(upper_incomplete_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(lower_incomplete_gamma, m)?)?;
    Ok(())
}
