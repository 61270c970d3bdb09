//! Error measurement between piecewise-linear FE functions and exact
//! solutions: elementwise Gauss L2 error, two H1-seminorm conventions
//! (quarter-point sampling and full Gauss), midpoint and spectral
//! gradient errors, and observed convergence rates.
//!
//! The quarter-point H1 convention samples the exact derivative at
//! x_m +- h/4 with weight h/2 per sample; on smooth errors it equals
//! sqrt(3)/2 times the Gauss seminorm at leading order. Both appear in
//! the reference tables, so both are first-class here.

use crate::error::{Error, Result};
use crate::exact::SeriesSolution;
use crate::fem::{Mesh1D, NodalVector};
use std::f64::consts::PI;

/// 5-point Gauss-Legendre rule on [-1, 1] (degree 9).
pub const GAUSS5_X: [f64; 5] = [
    -0.906_179_845_938_664,
    -0.538_469_310_105_683_1,
    0.0,
    0.538_469_310_105_683_1,
    0.906_179_845_938_664,
];
pub const GAUSS5_W: [f64; 5] = [
    0.236_926_885_056_189_1,
    0.478_628_670_499_366_5,
    0.568_888_888_888_888_9,
    0.478_628_670_499_366_5,
    0.236_926_885_056_189_1,
];

/// 10-point Gauss-Legendre rule on [-1, 1], for quadrature-doubling checks.
pub const GAUSS10_X: [f64; 10] = [
    -0.973_906_528_517_171_7,
    -0.865_063_366_688_984_5,
    -0.679_409_568_299_024_4,
    -0.433_395_394_129_247_2,
    -0.148_874_338_981_631_2,
    0.148_874_338_981_631_2,
    0.433_395_394_129_247_2,
    0.679_409_568_299_024_4,
    0.865_063_366_688_984_5,
    0.973_906_528_517_171_7,
];
pub const GAUSS10_W: [f64; 10] = [
    0.066_671_344_308_688_14,
    0.149_451_349_150_580_6,
    0.219_086_362_515_982,
    0.269_266_719_309_996_4,
    0.295_524_224_714_752_9,
    0.295_524_224_714_752_9,
    0.269_266_719_309_996_4,
    0.219_086_362_515_982,
    0.149_451_349_150_580_6,
    0.066_671_344_308_688_14,
];

/// Element endpoint values of a nodal vector with boundary zeros.
fn element_values(mesh: &Mesh1D, u: &NodalVector, e: usize) -> (f64, f64) {
    let n = mesh.n_interior();
    let left = if e == 0 { 0.0 } else { u.values[e - 1] };
    let right = if e >= n { 0.0 } else { u.values[e] };
    (left, right)
}

fn check_lengths(mesh: &Mesh1D, u: &NodalVector) -> Result<()> {
    if u.len() != mesh.n_interior() {
        return Err(Error::domain(format!(
            "error norm: vector length {} vs {} interior nodes",
            u.len(),
            mesh.n_interior()
        )));
    }
    Ok(())
}

fn l2_error_rule<F>(mesh: &Mesh1D, u: &NodalVector, exact: F, gx: &[f64], gw: &[f64]) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_lengths(mesh, u)?;
    let h = mesh.h();
    let mut acc = 0.0;
    for e in 0..mesh.n_cells() {
        let (left, right) = element_values(mesh, u, e);
        let xm = (e as f64 + 0.5) * h;
        for (x, w) in gx.iter().zip(gw) {
            let s = 0.5 * (x + 1.0);
            let uh = left + (right - left) * s;
            let d = exact(xm + 0.5 * h * x)? - uh;
            acc += w * d * d;
        }
    }
    Ok((acc * h / 2.0).sqrt())
}

/// L2 error of a piecewise-linear function against `exact`, by 5-point
/// Gauss quadrature per element.
pub fn l2_error<F>(mesh: &Mesh1D, u: &NodalVector, exact: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    l2_error_rule(mesh, u, exact, &GAUSS5_X, &GAUSS5_W)
}

/// Same as `l2_error` with a 10-point rule; agreement between the two
/// certifies the quadrature is converged.
pub fn l2_error_refined<F>(mesh: &Mesh1D, u: &NodalVector, exact: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    l2_error_rule(mesh, u, exact, &GAUSS10_X, &GAUSS10_W)
}

/// H1-seminorm error by quarter-point sampling: the exact derivative is
/// taken at x_m - h/4 and x_m + h/4 in each element, each sample weighted
/// h/2.
pub fn h1_error_quarter<F>(mesh: &Mesh1D, u: &NodalVector, exact_deriv: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_lengths(mesh, u)?;
    let h = mesh.h();
    let mut acc = 0.0;
    for e in 0..mesh.n_cells() {
        let (left, right) = element_values(mesh, u, e);
        let slope = (right - left) / h;
        let xm = (e as f64 + 0.5) * h;
        let d1 = exact_deriv(xm - 0.25 * h)? - slope;
        let d2 = exact_deriv(xm + 0.25 * h)? - slope;
        acc += d1 * d1 + d2 * d2;
    }
    Ok((acc * h / 2.0).sqrt())
}

/// H1-seminorm error by 5-point Gauss quadrature per element.
pub fn h1_error_gauss<F>(mesh: &Mesh1D, u: &NodalVector, exact_deriv: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_lengths(mesh, u)?;
    let h = mesh.h();
    let mut acc = 0.0;
    for e in 0..mesh.n_cells() {
        let (left, right) = element_values(mesh, u, e);
        let slope = (right - left) / h;
        let xm = (e as f64 + 0.5) * h;
        for (x, w) in GAUSS5_X.iter().zip(&GAUSS5_W) {
            let d = exact_deriv(xm + 0.5 * h * x)? - slope;
            acc += w * d * d;
        }
    }
    Ok((acc * h / 2.0).sqrt())
}

/// Gradient error sampled at element midpoints only:
/// sqrt(sum_e h (u'(x_m) - slope_e)^2).
pub fn midpoint_gradient_error<F>(mesh: &Mesh1D, u: &NodalVector, exact_deriv: F) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    check_lengths(mesh, u)?;
    let h = mesh.h();
    let mut acc = 0.0;
    for e in 0..mesh.n_cells() {
        let (left, right) = element_values(mesh, u, e);
        let slope = (right - left) / h;
        let d = exact_deriv((e as f64 + 0.5) * h)? - slope;
        acc += d * d;
    }
    Ok((acc * h).sqrt())
}

/// Spectral gradient error of a lumped modal solution against the series:
/// with a_n = w_n n pi / sqrt(2) (exact modal gradient amplitudes) and
/// b_j = modal_j j pi (discrete ones), it is
/// sqrt(2 [ sum_{j<=N} (a_j - b_j)^2 + sum_{n>N} a_n^2 ]).
pub fn spectral_gradient_error(series: &SeriesSolution, modal: &[f64]) -> Result<f64> {
    let w = series.weights();
    if modal.len() > w.len() {
        return Err(Error::domain(format!(
            "spectral gradient error: {} discrete modes exceed {} series modes",
            modal.len(),
            w.len()
        )));
    }
    let sqrt2 = std::f64::consts::SQRT_2;
    let mut acc = 0.0;
    for (i, wn) in w.iter().enumerate() {
        let a = wn * (i + 1) as f64 * PI / sqrt2;
        let d = if i < modal.len() {
            a - modal[i] * (i + 1) as f64 * PI
        } else {
            a
        };
        acc += d * d;
    }
    Ok((2.0 * acc).sqrt())
}

/// Observed convergence rate log2(coarse / fine) between two errors on
/// meshes refined by a factor of two.
pub fn observed_rate(coarse: f64, fine: f64) -> Result<f64> {
    if !(coarse > 0.0 && fine > 0.0) {
        return Err(Error::domain(
            "observed rate: errors must be positive",
        ));
    }
    Ok((coarse / fine).log2())
}
