//! Command-line front end: single evaluations, SNR sweeps emitting CSV
//! error tables, per-α maximum-error tables, validity-threshold queries and
//! ratio-test diagnostics.
//!
//! Exit codes: 0 success, 2 bad arguments, 3 domain/math error (including
//! quadrature non-convergence), 4 I/O error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use covprob::approx::{self, EvalOptions, Method, DEFAULT_TERMS, N_MAX};
use covprob::error::{Error, Result};
use covprob::model::{self, DerivedParams, NetworkParams};
use covprob::quadrature::{self, IntegralParams};

/// §-free default density: one base station per π·500² area units.
const DEFAULT_LAMBDA: f64 = 1.0 / (std::f64::consts::PI * 500.0 * 500.0);

#[derive(Parser)]
#[command(
    name = "covprob",
    version,
    about = "Coverage-probability integral: closed forms, approximations, bounds"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate the integral once by a chosen method, against the oracle
    Eval(EvalArgs),
    /// Sweep SNR and emit a CSV of per-method coverage errors
    Sweep(SweepArgs),
    /// Per-alpha maxima of the limiting and Laplace sweep errors
    MaxError(MaxErrorArgs),
    /// Noise-variance validity thresholds for the two series
    Validity(ValidityArgs),
    /// Ratio-test diagnostics for the two series
    Convergence(ConvergenceArgs),
}

#[derive(Args)]
struct EvalArgs {
    /// Integrand constant A = πλβ (with --B; excludes the model flags)
    #[arg(long = "A", allow_negative_numbers = true)]
    a: Option<f64>,
    /// Integrand constant B = μTσ²
    #[arg(long = "B", allow_negative_numbers = true)]
    b: Option<f64>,
    /// Path-loss exponent
    #[arg(long)]
    alpha: f64,
    /// Base-station density (model path; default 1/(π·500²))
    #[arg(long)]
    lambda: Option<f64>,
    /// SIR threshold in dB (model path; default 0)
    #[arg(long = "T-db", allow_negative_numbers = true)]
    t_db: Option<f64>,
    /// Fading rate (model path; default 1)
    #[arg(long)]
    mu: Option<f64>,
    /// Noise power; selects the model path
    #[arg(long)]
    sigma2: Option<f64>,
    /// Skip the β quadrature and use this value (model path)
    #[arg(long)]
    beta: Option<f64>,
    /// exact | limiting | interference | noise | laplace
    #[arg(long, default_value = "exact")]
    method: String,
    /// Series truncation order
    #[arg(long)]
    terms: Option<usize>,
    /// Laplace expansion point override
    #[arg(long = "x-hat")]
    x_hat: Option<f64>,
    /// Oracle absolute tolerance, on the integral for --A/--B and on the
    /// coverage-probability scale for the model path (default 1e-10)
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    /// Path-loss exponent
    #[arg(long)]
    alpha: f64,
    /// Base-station density
    #[arg(long, default_value_t = DEFAULT_LAMBDA)]
    lambda: f64,
    /// SIR threshold in dB
    #[arg(long = "T-db", default_value_t = 0.0, allow_negative_numbers = true)]
    t_db: f64,
    /// Fading rate
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
    /// First SNR grid point, dB
    #[arg(long = "snr-start", default_value_t = -20.0, allow_negative_numbers = true)]
    snr_start: f64,
    /// Last SNR grid point, dB (inclusive)
    #[arg(long = "snr-stop", default_value_t = 40.0, allow_negative_numbers = true)]
    snr_stop: f64,
    /// Grid spacing, dB
    #[arg(long = "snr-step", default_value_t = 1.0)]
    snr_step: f64,
    /// Series truncation order
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    terms: usize,
    /// Target error carried in the sweep configuration
    #[arg(long, default_value_t = 1e-3)]
    epsilon: f64,
    /// Comma-separated subset of limiting,interference,noise,laplace
    #[arg(long, default_value = "limiting,interference,noise,laplace")]
    methods: String,
    /// Skip the β quadrature and use this value
    #[arg(long)]
    beta: Option<f64>,
    /// Oracle absolute tolerance on the coverage-probability scale
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    /// Output CSV path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MaxErrorArgs {
    /// Comma-separated path-loss exponents
    #[arg(long, value_delimiter = ',', required = true)]
    alpha: Vec<f64>,
    #[arg(long, default_value_t = DEFAULT_LAMBDA)]
    lambda: f64,
    #[arg(long = "T-db", default_value_t = 0.0, allow_negative_numbers = true)]
    t_db: f64,
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
    #[arg(long = "snr-start", default_value_t = -20.0, allow_negative_numbers = true)]
    snr_start: f64,
    #[arg(long = "snr-stop", default_value_t = 40.0, allow_negative_numbers = true)]
    snr_stop: f64,
    #[arg(long = "snr-step", default_value_t = 1.0)]
    snr_step: f64,
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    terms: usize,
    /// Skip the β quadrature and use this value for every alpha
    #[arg(long)]
    beta: Option<f64>,
    /// Oracle absolute tolerance on the coverage-probability scale
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ValidityArgs {
    #[arg(long)]
    alpha: f64,
    #[arg(long, default_value_t = DEFAULT_LAMBDA)]
    lambda: f64,
    #[arg(long = "T-db", default_value_t = 0.0, allow_negative_numbers = true)]
    t_db: f64,
    #[arg(long, default_value_t = 1.0)]
    mu: f64,
    /// Target absolute error on the integral
    #[arg(long, default_value_t = 1e-3)]
    epsilon: f64,
    /// Series truncation order n
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    terms: usize,
    /// Skip the β quadrature and use this value (required at alpha = 2)
    #[arg(long)]
    beta: Option<f64>,
}

#[derive(Args)]
struct ConvergenceArgs {
    #[arg(long = "A")]
    a: f64,
    #[arg(long = "B")]
    b: f64,
    #[arg(long)]
    alpha: f64,
    /// Number of ratios K to compute
    #[arg(long, default_value_t = 50)]
    terms: usize,
}

/// A resolved sweep request; field invariants checked by [`SweepConfig::new`].
pub struct SweepConfig {
    pub alpha: f64,
    pub lambda: f64,
    pub t_db: f64,
    pub mu: f64,
    pub snr_db_start: f64,
    pub snr_db_stop: f64,
    pub snr_db_step: f64,
    pub n_terms: usize,
    /// Target error carried with the grid; validated, not consumed by the
    /// CSV writer itself.
    #[allow(dead_code)]
    pub epsilon: f64,
    pub methods: Vec<Method>,
    pub output_path: Option<PathBuf>,
}

impl SweepConfig {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alpha: f64,
        lambda: f64,
        t_db: f64,
        mu: f64,
        snr_db_start: f64,
        snr_db_stop: f64,
        snr_db_step: f64,
        n_terms: usize,
        epsilon: f64,
        methods: Vec<Method>,
        output_path: Option<PathBuf>,
    ) -> Result<Self> {
        if !(snr_db_start <= snr_db_stop) {
            return Err(Error::Domain(format!(
                "need snr-start <= snr-stop, got {snr_db_start} > {snr_db_stop}"
            )));
        }
        if !(snr_db_step > 0.0) {
            return Err(Error::Domain(format!("need snr-step > 0, got {snr_db_step}")));
        }
        if methods.is_empty() {
            return Err(Error::Domain("need at least one method".into()));
        }
        if !(epsilon > 0.0) {
            return Err(Error::Domain(format!("need epsilon > 0, got {epsilon}")));
        }
        Ok(SweepConfig {
            alpha,
            lambda,
            t_db,
            mu,
            snr_db_start,
            snr_db_stop,
            snr_db_step,
            n_terms,
            epsilon,
            methods,
            output_path,
        })
    }
}

fn usage_error(msg: &str) -> ! {
    eprintln!("error: {msg}");
    std::process::exit(2);
}

fn db_to_linear(db: f64) -> f64 {
    10f64.powf(db / 10.0)
}

fn snr_db_of_sigma2(sigma2: f64) -> f64 {
    -10.0 * sigma2.log10()
}

/// 12 significant digits; the fixed width keeps CSV output byte-stable.
fn sig12(x: f64) -> String {
    format!("{x:.11e}")
}

fn snr_grid(start: f64, stop: f64, step: f64) -> Vec<f64> {
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    (0..=n).map(|i| start + i as f64 * step).collect()
}

/// Methods in their canonical column order, deduplicated.
fn parse_method_list(raw: &str) -> Result<Vec<Method>> {
    let mut requested = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let m: Method = part.parse()?;
        if m == Method::Exact {
            return Err(Error::Domain(
                "sweep columns cover limiting, interference, noise and laplace; \
                 use `eval --method exact` for the closed forms"
                    .into(),
            ));
        }
        if !requested.contains(&m) {
            requested.push(m);
        }
    }
    let canonical = [
        Method::Limiting,
        Method::InterferenceSeries,
        Method::NoiseSeries,
        Method::Laplace,
    ];
    let ordered: Vec<Method> = canonical.into_iter().filter(|m| requested.contains(m)).collect();
    if ordered.is_empty() {
        return Err(Error::Domain("need at least one method".into()));
    }
    Ok(ordered)
}

fn derive_or_override(net: &NetworkParams, beta: Option<f64>) -> Result<DerivedParams> {
    match beta {
        Some(b) => DerivedParams::from_beta(b, net),
        None => model::derive(net),
    }
}

fn run_eval(args: EvalArgs) -> Result<String> {
    let model_flags_given = args.lambda.is_some()
        || args.t_db.is_some()
        || args.mu.is_some()
        || args.sigma2.is_some()
        || args.beta.is_some();
    let mut out = String::new();

    // (params, πλ for the probability scale when the model path is used)
    let (params, pi_lambda) = match (args.a, args.b) {
        (Some(a), Some(b)) => {
            if model_flags_given {
                usage_error("pass either --A/--B or the model flags, not both");
            }
            (IntegralParams::new(a, b, args.alpha)?, None)
        }
        (None, None) => {
            let Some(sigma2) = args.sigma2 else {
                usage_error("pass --A and --B, or model parameters including --sigma2");
            };
            let net = NetworkParams::new(
                args.lambda.unwrap_or(DEFAULT_LAMBDA),
                db_to_linear(args.t_db.unwrap_or(0.0)),
                args.mu.unwrap_or(1.0),
                sigma2,
                args.alpha,
            )?;
            let derived = derive_or_override(&net, args.beta)?;
            let _ = writeln!(out, "beta = {}", derived.beta);
            (
                derived.integral_params(args.alpha)?,
                Some(std::f64::consts::PI * net.lambda),
            )
        }
        _ => usage_error("--A and --B go together"),
    };

    let method = match args.method.parse::<Method>() {
        Ok(m) => m,
        Err(e) => usage_error(&e.to_string()),
    };

    let _ = writeln!(out, "A = {}", params.a);
    let _ = writeln!(out, "B = {}", params.b);
    let _ = writeln!(out, "alpha = {}", params.alpha);

    let opts = EvalOptions { n: args.terms, x_hat_override: args.x_hat, tol: args.tol };
    let r = approx::evaluate(&params, method, &opts)?;
    let _ = writeln!(out, "I[{method}] = {}", r.value);
    if let Some(bound) = r.error_bound {
        let _ = writeln!(out, "error_bound = {bound}");
    }
    if let Some(n) = r.terms_used {
        let _ = writeln!(out, "terms_used = {n}");
    }

    // Probability-scale tolerance on the model path keeps a single-point
    // sweep and an eval of the same point bit-identical.
    let tol = args.tol.unwrap_or(quadrature::DEFAULT_TOL) / pi_lambda.unwrap_or(1.0);
    let oracle = quadrature::integrate_coverage(&params, tol)?;
    let _ = writeln!(out, "I[oracle] = {}", oracle.value);
    let _ = writeln!(out, "abs_error = {}", (r.value - oracle.value).abs());

    if let Some(pl) = pi_lambda {
        let _ = writeln!(out, "pc[{method}] = {}", sig12(pl * r.value));
        let pc_oracle = model::coverage_probability(oracle.value, pl / std::f64::consts::PI)?;
        let _ = writeln!(out, "pc[oracle] = {}", sig12(pc_oracle));
    }
    Ok(out)
}

struct SweepRow {
    snr_db: f64,
    sigma2: f64,
    a: f64,
    b: f64,
    pc_oracle: f64,
    pc: Vec<f64>, // one per configured method, in column order
}

/// Evaluate the grid. `tol` is the oracle's absolute tolerance on the
/// coverage-probability scale; it is divided by πλ for the integral itself
/// (an absolute integral tolerance would be unreachable for very sparse
/// networks, where I approaches 1/(πλβ)).
fn sweep_rows(cfg: &SweepConfig, beta: Option<f64>, tol: f64) -> Result<Vec<SweepRow>> {
    let t = db_to_linear(cfg.t_db);
    let net = NetworkParams::new(cfg.lambda, t, cfg.mu, 0.0, cfg.alpha)?;
    let derived = derive_or_override(&net, beta)?;
    let pi_lambda = std::f64::consts::PI * cfg.lambda;
    let tol_integral = tol / pi_lambda;
    let opts = EvalOptions { n: Some(cfg.n_terms), x_hat_override: None, tol: None };

    let mut rows = Vec::new();
    for snr_db in snr_grid(cfg.snr_db_start, cfg.snr_db_stop, cfg.snr_db_step) {
        let sigma2 = model::snr_db_to_sigma2(snr_db);
        let b = net.mu * net.t * sigma2;
        let params = IntegralParams::new(derived.a, b, cfg.alpha)?;
        let oracle = quadrature::integrate_coverage(&params, tol_integral)?;
        let pc_oracle = model::coverage_probability(oracle.value, cfg.lambda)?;
        let pc = cfg
            .methods
            .iter()
            .map(|&m| Ok(pi_lambda * approx::evaluate(&params, m, &opts)?.value))
            .collect::<Result<Vec<f64>>>()?;
        rows.push(SweepRow { snr_db, sigma2, a: derived.a, b, pc_oracle, pc });
    }
    Ok(rows)
}

fn sweep_csv(cfg: &SweepConfig, rows: &[SweepRow]) -> String {
    let mut out = String::from("snr_db,sigma2,A,B,pc_oracle");
    for m in &cfg.methods {
        out.push_str(",pc_");
        out.push_str(m.cli_name());
    }
    for m in &cfg.methods {
        out.push_str(",err_");
        out.push_str(m.cli_name());
    }
    out.push('\n');
    for row in rows {
        out.push_str(&sig12(row.snr_db));
        for v in [row.sigma2, row.a, row.b, row.pc_oracle] {
            out.push(',');
            out.push_str(&sig12(v));
        }
        for pc in &row.pc {
            out.push(',');
            out.push_str(&sig12(*pc));
        }
        for pc in &row.pc {
            out.push(',');
            out.push_str(&sig12((pc - row.pc_oracle).abs()));
        }
        out.push('\n');
    }
    out
}

/// Write to the file or stdout. A consumer that stops reading early (e.g.
/// `covprob ... | head`) closes the pipe; treat that as a normal exit rather
/// than an error.
fn emit(path: Option<&PathBuf>, content: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, content.as_bytes())?,
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(content.as_bytes()).and_then(|()| stdout.flush()) {
                if e.kind() == std::io::ErrorKind::BrokenPipe {
                    std::process::exit(0);
                }
                return Err(e.into());
            }
        }
    }
    Ok(())
}

fn run_sweep(args: SweepArgs) -> Result<(Option<PathBuf>, String)> {
    let methods = match parse_method_list(&args.methods) {
        Ok(m) => m,
        Err(e) => usage_error(&e.to_string()),
    };
    // a bad grid is a usage problem, not a math one
    let cfg = SweepConfig::new(
        args.alpha,
        args.lambda,
        args.t_db,
        args.mu,
        args.snr_start,
        args.snr_stop,
        args.snr_step,
        args.terms,
        args.epsilon,
        methods,
        args.out,
    )
    .unwrap_or_else(|e| usage_error(&e.to_string()));
    let rows = sweep_rows(&cfg, args.beta, args.tol)?;
    let csv = sweep_csv(&cfg, &rows);
    Ok((cfg.output_path, csv))
}

fn run_max_error(args: MaxErrorArgs) -> Result<(Option<PathBuf>, String)> {
    if args.alpha.is_empty() {
        usage_error("need at least one --alpha value");
    }
    let mut out = String::from("alpha,max_err_limiting,max_err_laplace\n");
    for &alpha in &args.alpha {
        let cfg = SweepConfig::new(
            alpha,
            args.lambda,
            args.t_db,
            args.mu,
            args.snr_start,
            args.snr_stop,
            args.snr_step,
            args.terms,
            1e-3,
            vec![Method::Limiting, Method::Laplace],
            None,
        )
        .unwrap_or_else(|e| usage_error(&e.to_string()));
        let rows = sweep_rows(&cfg, args.beta, args.tol)?;
        let max_err = |idx: usize| {
            rows.iter()
                .map(|r| (r.pc[idx] - r.pc_oracle).abs())
                .fold(0.0_f64, f64::max)
        };
        let _ = writeln!(out, "{},{},{}", sig12(alpha), sig12(max_err(0)), sig12(max_err(1)));
    }
    Ok((args.out, out))
}

fn run_validity(args: ValidityArgs) -> Result<String> {
    let t = db_to_linear(args.t_db);
    let net = NetworkParams::new(args.lambda, t, args.mu, 0.0, args.alpha)?;
    let derived = derive_or_override(&net, args.beta)?;
    let mut out = String::new();
    let _ = writeln!(out, "beta = {}", derived.beta);
    let _ = writeln!(out, "A = {}", derived.a);
    let _ = writeln!(out, "epsilon = {}", args.epsilon);
    let _ = writeln!(out, "n = {}", args.terms);

    let vi = approx::interference_validity(args.epsilon, args.terms, &net, &derived)?;
    let _ = writeln!(
        out,
        "interference: sigma2_threshold = {} (SNR_db = {})",
        vi.sigma2_threshold,
        snr_db_of_sigma2(vi.sigma2_threshold)
    );
    let _ = writeln!(
        out,
        "interference: sigma2_asymptotic = {} (SNR_db = {})",
        vi.sigma2_asymptotic,
        snr_db_of_sigma2(vi.sigma2_asymptotic)
    );
    let _ = writeln!(out, "interference: valid for sigma2 <= threshold (SNR at or above the dB value)");

    let vn = approx::noise_validity(args.epsilon, args.terms, &net, &derived)?;
    let _ = writeln!(
        out,
        "noise: sigma2_threshold = {} (SNR_db = {})",
        vn.sigma2_threshold,
        snr_db_of_sigma2(vn.sigma2_threshold)
    );
    let _ = writeln!(
        out,
        "noise: sigma2_asymptotic = {} (SNR_db = {})",
        vn.sigma2_asymptotic,
        snr_db_of_sigma2(vn.sigma2_asymptotic)
    );
    let _ = writeln!(out, "noise: valid for sigma2 >= threshold (SNR at or below the dB value)");
    Ok(out)
}

fn push_ratio_block(out: &mut String, label: &str, report: &covprob::ConvergenceReport) {
    let k_total = report.ratios.len();
    let _ = writeln!(out, "{label} series |a_(k+1)/a_k| (K = {k_total}):");
    let head = 10.min(k_total);
    for (i, r) in report.ratios.iter().take(head).enumerate() {
        let _ = writeln!(out, "  k={}: {}", i + 1, sig12(*r));
    }
    if k_total > head {
        let tail_start = k_total.saturating_sub(5).max(head);
        if tail_start > head {
            let _ = writeln!(out, "  ...");
        }
        for (i, r) in report.ratios.iter().enumerate().skip(tail_start) {
            let _ = writeln!(out, "  k={}: {}", i + 1, sig12(*r));
        }
    }
    let _ = writeln!(out, "{label} verdict: {}", report.verdict);
    let _ = writeln!(out, "{label} ratio limit: {}", report.limit_expression);
}

fn run_convergence(args: ConvergenceArgs) -> Result<String> {
    let params = IntegralParams::new(args.a, args.b, args.alpha)?;
    let mut out = String::new();
    let ri = approx::ratio_test_interference(&params, args.terms)?;
    push_ratio_block(&mut out, "interference", &ri);
    let series = approx::interference_series(&params, N_MAX)?;
    let _ = writeln!(
        out,
        "interference optimal_truncation_index = {} (of max {N_MAX} terms)",
        series.terms_used.expect("series reports its order")
    );
    let _ = writeln!(out);
    let rn = approx::ratio_test_noise(&params, args.terms)?;
    push_ratio_block(&mut out, "noise", &rn);
    Ok(out)
}

pub fn main() {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Eval(args) => run_eval(args).map(|s| (None, s)),
        Cmd::Sweep(args) => run_sweep(args),
        Cmd::MaxError(args) => run_max_error(args),
        Cmd::Validity(args) => run_validity(args).map(|s| (None, s)),
        Cmd::Convergence(args) => run_convergence(args).map(|s| (None, s)),
    };
    let code = match result {
        Ok((path, content)) => match emit(path.as_ref(), &content) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    std::process::exit(code);
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_inclusive_and_stable() {
        let g = snr_grid(-20.0, 40.0, 1.0);
        assert_eq!(g.len(), 61);
        assert_eq!(g[0], -20.0);
        assert_eq!(g[60], 40.0);

        let g = snr_grid(5.0, 5.0, 1.0);
        assert_eq!(g, vec![5.0]);

        let g = snr_grid(0.0, 1.0, 0.3);
        assert_eq!(g.len(), 4); // 0.0, 0.3, 0.6, 0.9
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(sig12(0.5), "5.00000000000e-1");
        assert_eq!(sig12(0.0), "0.00000000000e0");
        assert_eq!(sig12(-20.0), "-2.00000000000e1");
        assert_eq!(sig12(1.0685190786117768e-5), "1.06851907861e-5");
    }

    #[test]
    fn method_list_canonical_order() {
        let ms = parse_method_list("laplace,limiting").unwrap();
        assert_eq!(ms, vec![Method::Limiting, Method::Laplace]);
        let ms = parse_method_list("noise,noise,interference").unwrap();
        assert_eq!(ms, vec![Method::InterferenceSeries, Method::NoiseSeries]);
        assert!(parse_method_list("exact").is_err());
        assert!(parse_method_list("").is_err());
        assert!(parse_method_list("fourier").is_err());
    }

    #[test]
    fn sweep_config_validation() {
        let mk = |start: f64, stop: f64, step: f64, methods: Vec<Method>| {
            SweepConfig::new(3.0, 1.0, 0.0, 1.0, start, stop, step, 4, 1e-3, methods, None)
        };
        assert!(mk(0.0, 10.0, 1.0, vec![Method::Laplace]).is_ok());
        assert!(mk(10.0, 0.0, 1.0, vec![Method::Laplace]).is_err());
        assert!(mk(0.0, 10.0, 0.0, vec![Method::Laplace]).is_err());
        assert!(mk(0.0, 10.0, 1.0, vec![]).is_err());
    }

    #[test]
    fn db_conversions() {
        assert_eq!(db_to_linear(0.0), 1.0);
        assert!((db_to_linear(10.0) - 10.0).abs() <= 1e-12);
        assert!((snr_db_of_sigma2(0.1) - 10.0).abs() <= 1e-12);
    }
}
