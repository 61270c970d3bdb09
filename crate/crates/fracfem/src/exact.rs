//! The initial-data catalogue and exact solutions of the continuous
//! problem with unit coefficient, as Fourier sine series
//! u(x,t) = sum_n c_n E_a(-(n pi)^2 t^a) sin(n pi x).
//!
//! Each data kind carries its sine coefficients, its exact projection
//! loads, and its L2 norm (used to normalize error tables). The
//! variable-coefficient kind has no closed-form series; its solutions
//! come from the time stepper against a fine self-computed reference.

use crate::error::{Error, Result};
use crate::fem::{assemble_mass, CoefficientField, Mesh1D, NodalVector};
use crate::specfun::{mittag_leffler, MlParams};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Largest mode count a series evaluation may request.
pub const MODE_CAP: usize = 200_000;

/// Initial data of the model problem.
///
/// - `A`: v = 4x - 4x^2 (smooth, compatible)
/// - `B`: v = min(x, 1-x) (hat; kink at the midpoint)
/// - `C1`: v = 1 (boundary-incompatible constant)
/// - `C2`: v = x (boundary-incompatible ramp)
/// - `C3`: v = indicator of (0, 1/2) (interior jump)
/// - `D`: v = Dirac mass at x = 1/2
/// - `E`: v = 1 with coefficient k(x) = 3 + sin(2 pi x)
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DataKind {
    A,
    B,
    C1,
    C2,
    C3,
    D,
    E,
}

impl DataKind {
    pub const ALL: [DataKind; 7] = [
        DataKind::A,
        DataKind::B,
        DataKind::C1,
        DataKind::C2,
        DataKind::C3,
        DataKind::D,
        DataKind::E,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            DataKind::A => "a",
            DataKind::B => "b",
            DataKind::C1 => "c1",
            DataKind::C2 => "c2",
            DataKind::C3 => "c3",
            DataKind::D => "d",
            DataKind::E => "e",
        }
    }

    /// Diffusion coefficient of the example this datum belongs to.
    pub fn coefficient(&self) -> CoefficientField {
        match self {
            DataKind::E => CoefficientField::SinePerturbed,
            _ => CoefficientField::Constant(1.0),
        }
    }

    /// Whether a closed-form sine series for the solution exists.
    pub fn has_series(&self) -> bool {
        !matches!(self, DataKind::E)
    }

    /// Decay exponent p of the sine-coefficient envelope C n^{-p}.
    fn envelope(&self) -> Result<(f64, f64)> {
        Ok(match self {
            DataKind::A => (32.0 / (PI * PI * PI), 3.0),
            DataKind::B => (4.0 / (PI * PI), 2.0),
            DataKind::C1 | DataKind::C3 => (4.0 / PI, 1.0),
            DataKind::C2 => (2.0 / PI, 1.0),
            DataKind::D => (2.0, 0.0),
            DataKind::E => {
                return Err(Error::domain(
                    "the variable-coefficient datum has no sine series",
                ))
            }
        })
    }
}

impl fmt::Display for DataKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DataKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" => Ok(DataKind::A),
            "b" => Ok(DataKind::B),
            "c1" => Ok(DataKind::C1),
            "c2" => Ok(DataKind::C2),
            "c3" => Ok(DataKind::C3),
            "d" => Ok(DataKind::D),
            "e" => Ok(DataKind::E),
            other => Err(Error::config(format!(
                "unknown example '{other}' (expected a, b, c1, c2, c3, d, or e)"
            ))),
        }
    }
}

/// Fourier sine coefficient c_n = 2 (v, sin(n pi x)), n >= 1.
pub fn sine_coefficient(kind: DataKind, n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::domain("sine coefficient: n starts at 1"));
    }
    let nf = n as f64;
    Ok(match kind {
        DataKind::A => {
            if n % 2 == 0 {
                0.0
            } else {
                32.0 / (PI * PI * PI * nf * nf * nf)
            }
        }
        DataKind::B => 4.0 * (0.5 * nf * PI).sin() / (nf * PI * nf * PI),
        DataKind::C1 => {
            if n % 2 == 0 {
                0.0
            } else {
                4.0 / (nf * PI)
            }
        }
        DataKind::C2 => {
            let sign = if n % 2 == 0 { -1.0 } else { 1.0 };
            sign * 2.0 / (nf * PI)
        }
        DataKind::C3 => 2.0 * (1.0 - (0.5 * nf * PI).cos()) / (nf * PI),
        DataKind::D => 2.0 * (0.5 * nf * PI).sin(),
        DataKind::E => {
            return Err(Error::domain(
                "the variable-coefficient datum has no sine series",
            ))
        }
    })
}

/// L2 norm of the datum, used to normalize table errors. The Dirac and
/// variable-coefficient kinds report 1 (their tables are unnormalized).
pub fn v_norm(kind: DataKind) -> f64 {
    match kind {
        DataKind::A => (8.0 / 15.0_f64).sqrt(),
        DataKind::B => (1.0 / 12.0_f64).sqrt(),
        DataKind::C1 => 1.0,
        DataKind::C2 => (1.0 / 3.0_f64).sqrt(),
        DataKind::C3 => 0.5_f64.sqrt(),
        DataKind::D | DataKind::E => 1.0,
    }
}

/// Interior nodal values of the datum, which coincide with its lumped L2
/// projection (v, phi_i)_h / h; the jump datum takes the value 1/2 at its
/// breakpoint node. The Dirac kind has no pointwise values.
pub fn nodal_values(kind: DataKind, mesh: &Mesh1D) -> Result<NodalVector> {
    if kind == DataKind::D {
        return Err(Error::domain(
            "the Dirac datum has no pointwise values; project it through a mass matrix",
        ));
    }
    let n = mesh.n_interior();
    let values: Vec<f64> = (0..n)
        .map(|i| {
            let x = mesh.interior_node(i);
            match kind {
                DataKind::A => 4.0 * x - 4.0 * x * x,
                DataKind::B => x.min(1.0 - x),
                DataKind::C1 | DataKind::E => 1.0,
                DataKind::C2 => x,
                DataKind::C3 => {
                    if x < 0.5 - 1e-12 {
                        1.0
                    } else if x > 0.5 + 1e-12 {
                        0.0
                    } else {
                        0.5
                    }
                }
                DataKind::D => unreachable!(),
            }
        })
        .collect();
    NodalVector::new(mesh, values)
}

/// Exact consistent-mass loads (v, phi_i) of the datum. The Dirac kind is
/// excluded (its L2 projection is the e_L column of the inverse mass).
pub fn l2_load(kind: DataKind, mesh: &Mesh1D) -> Result<Vec<f64>> {
    if kind == DataKind::D {
        return Err(Error::domain(
            "the Dirac datum has no L2 loads; use the Dirac projection",
        ));
    }
    let n = mesh.n_interior();
    let h = mesh.h();
    Ok(match kind {
        // (v, phi_i) = h v(x_i) + (h^3/12) v'' for quadratic v; v'' = -8
        DataKind::A => (0..n)
            .map(|i| {
                let x = mesh.interior_node(i);
                h * (4.0 * x - 4.0 * x * x) - 8.0 * h * h * h / 12.0
            })
            .collect(),
        // the hat lies in the FE space, so its loads are exactly M v
        DataKind::B => {
            let v = nodal_values(kind, mesh)?;
            assemble_mass(mesh).matvec(&v.values)
        }
        DataKind::C1 | DataKind::E => vec![h; n],
        DataKind::C2 => (0..n).map(|i| h * mesh.interior_node(i)).collect(),
        DataKind::C3 => (0..n)
            .map(|i| {
                let x = mesh.interior_node(i);
                if x < 0.5 - 1e-12 {
                    h
                } else if x > 0.5 + 1e-12 {
                    0.0
                } else {
                    0.5 * h
                }
            })
            .collect(),
        DataKind::D => unreachable!(),
    })
}

/// Exact energy loads (k v', phi_i') for the Ritz projection; defined only
/// for the two data with finite energy. The constant load 8h comes from
/// -v'' = 8 for the parabola; the hat contributes 2 phi_i(1/2).
pub fn energy_load(kind: DataKind, mesh: &Mesh1D) -> Result<Vec<f64>> {
    let n = mesh.n_interior();
    let h = mesh.h();
    match kind {
        DataKind::A => Ok(vec![8.0 * h; n]),
        DataKind::B => {
            if mesh.n_cells() % 2 != 0 {
                return Err(Error::domain(
                    "energy load for the hat datum needs a node at x = 1/2",
                ));
            }
            let mut load = vec![0.0; n];
            load[mesh.n_cells() / 2 - 1] = 2.0;
            Ok(load)
        }
        other => Err(Error::domain(format!(
            "datum '{other}' has no finite-energy Ritz projection"
        ))),
    }
}

/// How many series modes to keep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModeRule {
    Fixed(usize),
    /// Smallest mode count whose tail estimate is below `tol`.
    Adaptive { tol: f64 },
}

/// Mode counts used when reproducing the reference tables: generous for
/// smooth data, large enough to resolve rough data at small times.
pub fn default_mode_count(kind: DataKind, t: f64) -> usize {
    match kind {
        DataKind::A | DataKind::B => 4000,
        DataKind::D => MODE_CAP,
        _ => {
            if t < 0.5 {
                MODE_CAP
            } else {
                20_000
            }
        }
    }
}

/// Estimate of the series tail beyond `n_modes` terms, using the
/// Mittag-Leffler decay bound |E_a(-x)| <= 2/x.
///
/// For the Dirac derivative the absolute-value certificate diverges (its
/// bounded terms decay only like 1/n); the estimate returned there is the
/// cap-relative partial sum C ln(MODE_CAP / N), a heuristic rather than a
/// proof.
fn tail_estimate_parts(kind: DataKind, n_modes: usize, alpha: f64, t: f64, deriv: bool) -> Result<f64> {
    let (c_env, p) = kind.envelope()?;
    let nf = n_modes as f64;
    // per-term envelope after the ML bound: d_coef * n^{-q}
    let (d_coef, q) = if t > 0.0 {
        let ml = 2.0 / (PI * PI * t.powf(alpha));
        let grow = if deriv { PI } else { 1.0 };
        (c_env * ml * grow, p + 2.0 - if deriv { 1.0 } else { 0.0 })
    } else {
        let grow = if deriv { PI } else { 1.0 };
        (c_env * grow, p - if deriv { 1.0 } else { 0.0 })
    };
    if q > 1.0 {
        Ok(d_coef * nf.powf(1.0 - q) / (q - 1.0))
    } else if (q - 1.0).abs() < 1e-12 {
        Ok(d_coef * (MODE_CAP as f64 / nf).max(1.0).ln().max(0.0))
    } else {
        Err(Error::domain(format!(
            "series tail for datum '{kind}' does not converge absolutely here"
        )))
    }
}

/// Exact solution evaluator: holds the weighted coefficients
/// w_n = c_n E_a(-(n pi)^2 t^a) and sums the sine series on demand.
#[derive(Debug, Clone)]
pub struct SeriesSolution {
    kind: DataKind,
    alpha: f64,
    t: f64,
    weights: Vec<f64>,
}

impl SeriesSolution {
    /// Builds the evaluator. t = 0 is allowed only for the two data whose
    /// raw sine series converge absolutely (the parabola and the hat).
    pub fn new(kind: DataKind, alpha: f64, t: f64, rule: ModeRule) -> Result<Self> {
        if !kind.has_series() {
            return Err(Error::domain(
                "the variable-coefficient datum has no sine series",
            ));
        }
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::domain(format!(
                "series solution: alpha = {alpha} outside (0, 1]"
            )));
        }
        if t < 0.0 {
            return Err(Error::domain(format!("series solution: t = {t} negative")));
        }
        if t == 0.0 && !matches!(kind, DataKind::A | DataKind::B) {
            return Err(Error::domain(format!(
                "series for datum '{kind}' does not converge absolutely at t = 0"
            )));
        }
        let n_modes = match rule {
            ModeRule::Fixed(n) => {
                if n == 0 || n > MODE_CAP {
                    return Err(Error::domain(format!(
                        "series solution: mode count {n} outside 1..={MODE_CAP}"
                    )));
                }
                n
            }
            ModeRule::Adaptive { tol } => {
                if !(tol > 0.0) {
                    return Err(Error::domain("series solution: tolerance must be positive"));
                }
                let mut n = 64;
                loop {
                    if tail_estimate_parts(kind, n, alpha, t, false)? <= tol {
                        break n;
                    }
                    if n >= MODE_CAP {
                        return Err(Error::domain(format!(
                            "series solution: tolerance {tol:.3e} unreachable within {MODE_CAP} modes"
                        )));
                    }
                    n = (2 * n).min(MODE_CAP);
                }
            }
        };
        let mut weights = Vec::with_capacity(n_modes);
        if t == 0.0 {
            for n in 1..=n_modes {
                weights.push(sine_coefficient(kind, n)?);
            }
        } else {
            let p = MlParams::new(alpha, 1.0)?;
            let ta = t.powf(alpha);
            for n in 1..=n_modes {
                let c = sine_coefficient(kind, n)?;
                if c == 0.0 {
                    weights.push(0.0);
                    continue;
                }
                let nf = n as f64;
                weights.push(c * mittag_leffler(p, -(nf * PI) * (nf * PI) * ta)?);
            }
        }
        Ok(SeriesSolution {
            kind,
            alpha,
            t,
            weights,
        })
    }

    pub fn kind(&self) -> DataKind {
        self.kind
    }

    pub fn n_modes(&self) -> usize {
        self.weights.len()
    }

    /// The weighted coefficients w_n (mode n at index n-1).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Tail estimate beyond the kept modes (see `tail_estimate_parts`).
    pub fn tail_estimate(&self, deriv: bool) -> Result<f64> {
        tail_estimate_parts(self.kind, self.n_modes(), self.alpha, self.t, deriv)
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&x) {
            return Err(Error::domain(format!(
                "series evaluation: x = {x} outside [0, 1]"
            )));
        }
        Ok(())
    }

    /// u(x, t) = sum w_n sin(n pi x), summed with a rotation recurrence
    /// re-anchored every 512 modes and Kahan compensation.
    pub fn value(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        let th = PI * x;
        let (s1, c1) = th.sin_cos();
        let (mut s, mut c) = (0.0, 1.0); // sin/cos of n*th, starting at n = 0
        let mut acc = 0.0;
        let mut comp = 0.0;
        for (i, w) in self.weights.iter().enumerate() {
            let n = i + 1;
            if n % 512 == 1 && n > 1 {
                let r = (n as f64 * x) % 2.0;
                let ang = PI * r;
                s = ang.sin();
                c = ang.cos();
            } else {
                let sn = s * c1 + c * s1;
                let cn = c * c1 - s * s1;
                s = sn;
                c = cn;
            }
            let term = w * s;
            let y = term - comp;
            let tacc = acc + y;
            comp = (tacc - acc) - y;
            acc = tacc;
        }
        Ok(acc)
    }

    /// u_x(x, t) = sum w_n (n pi) cos(n pi x); at t = 0 only the parabola
    /// keeps an absolutely convergent derivative series.
    pub fn deriv(&self, x: f64) -> Result<f64> {
        self.check_x(x)?;
        if self.t == 0.0 && self.kind != DataKind::A {
            return Err(Error::domain(format!(
                "derivative series for datum '{}' does not converge absolutely at t = 0",
                self.kind
            )));
        }
        let th = PI * x;
        let (s1, c1) = th.sin_cos();
        let (mut s, mut c) = (0.0, 1.0);
        let mut acc = 0.0;
        let mut comp = 0.0;
        for (i, w) in self.weights.iter().enumerate() {
            let n = i + 1;
            if n % 512 == 1 && n > 1 {
                let r = (n as f64 * x) % 2.0;
                let ang = PI * r;
                s = ang.sin();
                c = ang.cos();
            } else {
                let sn = s * c1 + c * s1;
                let cn = c * c1 - s * s1;
                s = sn;
                c = cn;
            }
            let term = w * (n as f64) * PI * c;
            let y = term - comp;
            let tacc = acc + y;
            comp = (tacc - acc) - y;
            acc = tacc;
        }
        Ok(acc)
    }
}
