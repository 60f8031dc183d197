//! Shared helpers for the integration tests: an adaptive-Simpson integrator
//! kept deliberately independent of the crate's own quadrature and special
//! functions, so agreement between the two is evidence rather than tautology.

#![allow(dead_code)]

/// Adaptive Simpson on [lo, hi] with absolute tolerance `tol`.
pub fn simpson<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64, tol: f64) -> f64 {
    let m = 0.5 * (lo + hi);
    let (fa, fm, fb) = (f(lo), f(m), f(hi));
    let whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, lo, hi, fa, fm, fb, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step<F: Fn(f64) -> f64>(
    f: &F,
    lo: f64,
    hi: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (lo + hi);
    let lm = 0.5 * (lo + m);
    let rm = 0.5 * (m + hi);
    let (flm, frm) = (f(lm), f(rm));
    let left = (m - lo) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (hi - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, lo, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
        + simpson_step(f, m, hi, fm, frm, fb, right, 0.5 * tol, depth - 1)
}

/// ∫_0^∞ f(x) dx via x = s/(1−s); f must decay fast enough that
/// f(x)·(1+x)² → 0.
pub fn simpson_semi_infinite<F: Fn(f64) -> f64>(f: &F, tol: f64) -> f64 {
    let g = |s: f64| {
        if s >= 1.0 {
            return 0.0;
        }
        let om = 1.0 - s;
        let x = s / om;
        let fx = f(x);
        if fx == 0.0 {
            0.0
        } else {
            fx / (om * om)
        }
    };
    simpson(&g, 0.0, 1.0, tol)
}

/// Independent value of ∫_0^∞ exp{−(Ax + Bx^{α/2})} dx.
pub fn coverage_simpson(a: f64, b: f64, alpha: f64, tol: f64) -> f64 {
    simpson_semi_infinite(
        &|x: f64| {
            let h = a * x + b * x.powf(0.5 * alpha);
            if h > 700.0 {
                0.0
            } else {
                (-h).exp()
            }
        },
        tol,
    )
}

/// Γ(a, z) = ∫_z^∞ t^{a−1}e^{−t} dt for z > 0, by direct quadrature; valid
/// for any real a because the integrand is singularity-free on [z, ∞).
pub fn upper_gamma_simpson(a: f64, z: f64, tol: f64) -> f64 {
    simpson_semi_infinite(
        &|u: f64| {
            let t = z + u;
            let ln = (a - 1.0) * t.ln() - t;
            if ln < -700.0 {
                0.0
            } else {
                ln.exp()
            }
        },
        tol,
    )
}

/// γ(s, x) = ∫_0^x t^{s−1}e^{−t} dt for s ∈ (0, 1), with the endpoint
/// singularity removed by t = u^p, p = 1/s... here specialised to
/// s = 1 − 2/α: p = 2α/(α−2) makes the transformed integrand p·u·e^{−u^p}.
fn lower_gamma_smooth(alpha: f64, x: f64, tol: f64) -> f64 {
    let p = 2.0 * alpha / (alpha - 2.0);
    let upper = x.powf(1.0 / p);
    simpson(
        &|u: f64| {
            let up = u.powf(p);
            if up > 700.0 {
                0.0
            } else {
                p * u * (-up).exp()
            }
        },
        0.0,
        upper,
        tol,
    )
}

/// Nested-quadrature value of the fading constant
///
///   β = (2(μT)^{2/α}/α) · E_g[ g^{2/α} (Γ(−2/α, μTg) − Γ(−2/α)) ],
///
/// g exponential with rate μ. The bracket is rewritten through the recurrence
/// Γ(a, x) − Γ(a) = (α/2)[γ(a+1, x) + x^a e^{−x}] at a = −2/α, which leaves
/// only proper integrals; no special-function code is shared with the crate.
pub fn beta_simpson(mu: f64, t: f64, alpha: f64) -> f64 {
    let two_over_alpha = 2.0 / alpha;
    let mt = mu * t;
    let outer = |g: f64| {
        if g <= 0.0 {
            // limit g → 0: the x^a e^{−x} part of the bracket cancels g^{2/α}
            return mu * mt.powf(-two_over_alpha);
        }
        let x = mt * g;
        let bracket = lower_gamma_smooth(alpha, x, 1e-12) + x.powf(-two_over_alpha) * (-x).exp();
        let weight = mu * (-mu * g).exp();
        if weight == 0.0 {
            0.0
        } else {
            weight * g.powf(two_over_alpha) * bracket
        }
    };
    mt.powf(two_over_alpha) * simpson_semi_infinite(&outer, 1e-9)
}

/// SplitMix64: tiny deterministic generator for reproducible random draws in
/// tests (no external RNG dependency needed at this quality level).
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let u = (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
        lo + (hi - lo) * u
    }

    pub fn index(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}
