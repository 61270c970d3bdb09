//! Shared helpers and machine-generated reference values for the
//! integration tests.
#![allow(dead_code)]

pub mod oracle_data;

/// Relative error with an absolute fallback near zero.
pub fn rel_err(got: f64, want: f64) -> f64 {
    let scale = want.abs().max(1e-300);
    (got - want).abs() / scale
}

/// Signed relative deviation of `got` from `want`, in percent.
pub fn rel_dev_percent(got: f64, want: f64) -> f64 {
    100.0 * (got - want) / want
}

/// Asserts a slice matches its reference values within a relative bound.
pub fn assert_slice_close(got: &[f64], want: &[f64], tol: f64, label: &str) {
    assert_eq!(got.len(), want.len(), "{label}: length mismatch");
    for (i, (g, w)) in got.iter().zip(want).enumerate() {
        let e = rel_err(*g, *w);
        assert!(
            e <= tol,
            "{label}[{i}]: got {g:.12e}, want {w:.12e}, rel err {e:.3e} > {tol:.1e}"
        );
    }
}

/// Consecutive-halving error ratios.
pub fn ratios(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| w[0] / w[1]).collect()
}
