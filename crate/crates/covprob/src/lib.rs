//! Downlink coverage probability for Poisson cellular networks.
//!
//! The probability that a user's SINR clears a threshold reduces to
//! p_c = πλ·I with I = ∫₀^∞ exp{−(Ax + Bx^{α/2})} dx, where A encodes
//! interferer density and B the noise level. The crate provides:
//!
//! * [`model`]: network parameters (λ, T, μ, σ², α) and their reduction to
//!   A and B, including the interference geometry factor β;
//! * [`quadrature`]: an adaptive Gauss-Kronrod oracle for I;
//! * [`approx`]: exact closed forms (α = 2, α = 4, single-parameter
//!   limits), a limiting approximation, two truncated series with rigorous
//!   remainder bounds, a Laplace approximation, validity-region solvers and
//!   ratio-test diagnostics;
//! * [`specfun`]: the special functions the above need (gamma family,
//!   incomplete gammas including negative parameters, Gaussian tail).
//!
//! The `covprob` binary exposes all of it as subcommands (`eval`, `sweep`,
//! `max-error`, `validity`, `convergence`).

// Guards are written `!(x > 0.0)` on purpose: they must trip for NaN too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod error;
pub mod model;
pub mod quadrature;
pub mod specfun;

pub use approx::{
    ApproxResult, ConvergenceReport, EvalOptions, LaplaceInternals, Method, ValidityReport,
    Verdict,
};
pub use error::{Error, Result};
pub use model::{DerivedParams, Fading, NetworkParams};
pub use quadrature::{IntegralParams, QuadratureResult};
pub use specfun::SpecfunResult;
