//! End-to-end checks of the `covprob` binary: output contracts, CSV
//! determinism, sweep/eval consistency and the exit-code scheme.

use std::process::{Command, Output};

fn covprob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covprob"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = covprob(args);
    assert!(
        out.status.success(),
        "covprob {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn exit_code(args: &[&str]) -> i32 {
    covprob(args).status.code().expect("no signal")
}

/// Value of the first `name = <v>` line, as the exact serialized token.
fn field<'a>(text: &'a str, name: &str) -> &'a str {
    let prefix = format!("{name} = ");
    text.lines()
        .find_map(|l| l.strip_prefix(&prefix))
        .unwrap_or_else(|| panic!("no `{name}` line in:\n{text}"))
        .split_whitespace()
        .next()
        .unwrap()
}

#[test]
fn eval_prints_closed_forms() {
    let out = stdout_of(&["eval", "--A", "1", "--B", "1", "--alpha", "2", "--method", "exact"]);
    assert!(out.contains("I[exact] = 0.5\n"), "got:\n{out}");
    assert!(out.contains("error_bound = 0\n"));

    let out = stdout_of(&["eval", "--A", "1", "--B", "0", "--alpha", "3.7", "--method", "exact"]);
    assert!(out.contains("I[exact] = 1\n"), "got:\n{out}");
}

#[test]
fn eval_reports_oracle_disagreement() {
    let out = stdout_of(&["eval", "--A", "1", "--B", "0.5", "--alpha", "3", "--method", "limiting"]);
    let value: f64 = field(&out, "I[limiting]").parse().unwrap();
    let oracle: f64 = field(&out, "I[oracle]").parse().unwrap();
    let err: f64 = field(&out, "abs_error").parse().unwrap();
    assert!((err - (value - oracle).abs()).abs() <= 1e-15);
    assert!((oracle - 0.661_626_194_474_719_2).abs() <= 1e-9);
}

#[test]
fn sweep_csv_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let p1 = dir.path().join("a.csv");
    let p2 = dir.path().join("b.csv");
    let args = ["sweep", "--alpha", "3", "--snr-start", "-5", "--snr-stop", "15"];
    stdout_of(&[&args[..], &["--out", p1.to_str().unwrap()]].concat());
    stdout_of(&[&args[..], &["--out", p2.to_str().unwrap()]].concat());
    let b1 = std::fs::read(&p1).unwrap();
    let b2 = std::fs::read(&p2).unwrap();
    assert!(!b1.is_empty());
    assert_eq!(b1, b2, "identical invocations must serialize identically");

    let text = String::from_utf8(b1).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "snr_db,sigma2,A,B,pc_oracle,pc_limiting,pc_interference,pc_noise,pc_laplace,\
         err_limiting,err_interference,err_noise,err_laplace"
    );
    assert_eq!(lines.count(), 21);
}

#[test]
fn sweep_header_tracks_method_subset() {
    let out = stdout_of(&[
        "sweep", "--alpha", "4", "--snr-start", "0", "--snr-stop", "1", "--methods",
        "laplace,limiting",
    ]);
    let header = out.lines().next().unwrap();
    assert_eq!(header, "snr_db,sigma2,A,B,pc_oracle,pc_limiting,pc_laplace,err_limiting,err_laplace");
}

#[test]
fn single_point_sweep_matches_eval_serialization() {
    let csv = stdout_of(&["sweep", "--alpha", "3", "--snr-start", "20", "--snr-stop", "20"]);
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    // columns: snr_db, sigma2, A, B, pc_oracle, pc_limiting, pc_interference,
    // pc_noise, pc_laplace, err_*
    let (pc_oracle, pc_laplace) = (row[4], row[8]);

    let eval = stdout_of(&["eval", "--sigma2", "0.01", "--alpha", "3", "--method", "laplace"]);
    assert_eq!(field(&eval, "pc[laplace]"), pc_laplace);
    assert_eq!(field(&eval, "pc[oracle]"), pc_oracle);
}

#[test]
fn sweep_probability_column_is_sane() {
    let csv = stdout_of(&["sweep", "--alpha", "3", "--snr-step", "4"]);
    let pcs: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(4).unwrap().parse().unwrap())
        .collect();
    assert_eq!(pcs.len(), 16);
    for &pc in &pcs {
        assert!((0.0..=1.0).contains(&pc), "pc_oracle out of range: {pc}");
    }
    // rows ascend in SNR, so sigma2 falls and coverage must not fall
    for w in pcs.windows(2) {
        assert!(w[1] >= w[0] - 1e-15, "pc_oracle decreased along rising SNR: {w:?}");
    }
}

#[test]
fn max_error_table_shape_and_alpha4_floor() {
    let out = stdout_of(&["max-error", "--alpha", "2.5,3,4,5"]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "alpha,max_err_limiting,max_err_laplace");
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    let laplace_col: Vec<f64> = rows.iter().map(|r| r[2]).collect();
    let at_alpha4 = rows.iter().find(|r| r[0] == 4.0).unwrap()[2];
    assert!(at_alpha4 < 1e-10, "alpha=4 laplace error should be at the oracle floor");
    assert!(laplace_col.iter().all(|&e| e >= at_alpha4));
}

#[test]
fn max_error_shrinks_with_higher_threshold() {
    let parse = |text: String| -> Vec<(f64, f64, f64)> {
        text.lines()
            .skip(1)
            .map(|l| {
                let v: Vec<f64> = l.split(',').map(|c| c.parse().unwrap()).collect();
                (v[0], v[1], v[2])
            })
            .collect()
    };
    let base = parse(stdout_of(&["max-error", "--alpha", "2.5,3"]));
    let raised = parse(stdout_of(&["max-error", "--alpha", "2.5,3", "--T-db", "10"]));
    for (b, r) in base.iter().zip(&raised) {
        assert_eq!(b.0, r.0);
        assert!(r.1 <= b.1, "limiting max error grew with T at alpha={}", b.0);
        assert!(r.2 <= b.2, "laplace max error grew with T at alpha={}", b.0);
    }
}

#[test]
fn validity_alpha2_needs_beta_override() {
    let out = covprob(&["validity", "--alpha", "2"]);
    assert_eq!(out.status.code(), Some(3), "beta quadrature has a pole at alpha=2");

    // with πλβ = 1 the interference threshold is ε^{1/(n+1)} times its
    // asymptote, so a large n must land within 5%
    let lambda = format!("{}", 1.0 / std::f64::consts::PI);
    let out = stdout_of(&[
        "validity", "--alpha", "2", "--beta", "1", "--lambda", &lambda, "--epsilon", "0.3",
        "--terms", "25",
    ]);
    let thr: f64 = field(&out, "interference: sigma2_threshold").parse().unwrap();
    let asym: f64 = field(&out, "interference: sigma2_asymptotic").parse().unwrap();
    assert!((asym - 1.0).abs() <= 1e-12);
    assert!((thr / asym - 1.0).abs() <= 0.05, "threshold {thr} not within 5% of {asym}");
}

#[test]
fn validity_reports_dual_thresholds() {
    let out = stdout_of(&["validity", "--alpha", "3"]);
    let thr_i: f64 = field(&out, "interference: sigma2_threshold").parse().unwrap();
    let thr_n: f64 = field(&out, "noise: sigma2_threshold").parse().unwrap();
    let asym_n: f64 = field(&out, "noise: sigma2_asymptotic").parse().unwrap();
    assert!(thr_i > 0.0 && thr_n > thr_i, "series regimes should not overlap here");
    assert_eq!(asym_n, 0.0, "noise threshold vanishes as n grows at alpha > 2");
    assert!(out.contains("(SNR_db = "));
}

#[test]
fn convergence_verdict_lines() {
    let out = stdout_of(&["convergence", "--A", "1", "--B", "1", "--alpha", "3"]);
    assert!(out.contains("interference verdict: diverges"), "got:\n{out}");
    assert!(out.contains("interference ratio limit: inf"));
    assert!(out.contains("noise verdict: converges"));
    assert!(out.contains("noise ratio limit: 0"));
    assert!(out.contains("optimal_truncation_index = 0"));

    let out = stdout_of(&["convergence", "--A", "2", "--B", "1", "--alpha", "2", "--terms", "12"]);
    assert!(out.contains("interference verdict: conditional"));
    assert!(out.contains("interference ratio limit: 0.5"));
    assert!(out.contains("noise verdict: conditional"));
    assert!(out.contains("noise ratio limit: 2"));
}

#[test]
fn exit_codes_follow_failure_class() {
    // 2: argument problems, caught before any math runs
    assert_eq!(exit_code(&["eval", "--A", "1", "--alpha", "3"]), 2);
    assert_eq!(exit_code(&["eval", "--A", "1", "--B", "1", "--alpha", "2", "--method", "simpson"]), 2);
    assert_eq!(exit_code(&["sweep", "--alpha", "3", "--methods", "exact"]), 2);
    assert_eq!(exit_code(&["eval", "--no-such-flag"]), 2);
    assert_eq!(
        exit_code(&["eval", "--A", "1", "--B", "1", "--alpha", "2", "--sigma2", "0.1"]),
        2,
        "mixing direct and model parameters is ambiguous"
    );

    // 3: domain and convergence failures
    assert_eq!(exit_code(&["eval", "--A", "1", "--B", "1", "--alpha", "9"]), 3);
    assert_eq!(exit_code(&["eval", "--A", "1", "--B", "1", "--alpha", "3", "--method", "exact"]), 3);
    assert_eq!(exit_code(&["eval", "--A", "0", "--B", "0", "--alpha", "3"]), 3);
    // an inverted grid is caught as a usage problem
    assert_eq!(exit_code(&["sweep", "--alpha", "3", "--snr-start", "10", "--snr-stop", "0"]), 2);

    // 4: I/O failures
    assert_eq!(
        exit_code(&["sweep", "--alpha", "3", "--snr-stop", "-19", "--out", "/no/such/dir/x.csv"]),
        4
    );
}

#[test]
fn errors_name_the_offending_parameter() {
    let out = covprob(&["eval", "--A", "1", "--B", "1", "--alpha", "9"]);
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("alpha"), "diagnostic should name the parameter: {stderr}");
}
