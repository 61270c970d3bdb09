//! L1 discretization of the Caputo derivative and the implicit
//! time-stepping scheme built on it.
//!
//! The scheme keeps the full solution history (the fractional derivative
//! is nonlocal), so a run of N steps on n nodes costs O(n N^2) time and
//! O(n N) memory.

use crate::error::{Error, Result};
use crate::fem::{
    assemble_lumped_mass, assemble_mass, assemble_stiffness, CoefficientField, MassKind, Mesh1D,
    NodalVector, TriDiagMatrix,
};
use crate::specfun::gamma;

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::domain(format!(
            "L1 scheme: alpha = {alpha} outside (0, 1)"
        )));
    }
    Ok(())
}

/// L1 weights b_j = (j+1)^{1-a} - j^{1-a}, j = 0..n-1; positive, strictly
/// decreasing, with b_0 = 1 and partial sums n^{1-a}.
pub fn l1_weights(alpha: f64, n: usize) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    if n == 0 {
        return Err(Error::domain("L1 weights: need at least one step"));
    }
    let p = 1.0 - alpha;
    let w: Vec<f64> = (0..n)
        .map(|j| ((j + 1) as f64).powf(p) - (j as f64).powf(p))
        .collect();
    debug_assert!(w.windows(2).all(|x| x[0] > x[1] && x[1] > 0.0));
    Ok(w)
}

/// L1 approximation of the Caputo derivative at the last entry of
/// `history` (states at t_0, t_1, ..., t_n with uniform step `tau`):
/// tau^{-a}/Gamma(2-a) sum_j b_j (U^{n-j} - U^{n-j-1}).
pub fn discrete_caputo(alpha: f64, tau: f64, history: &[Vec<f64>]) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    if tau <= 0.0 {
        return Err(Error::domain(format!("L1 scheme: tau = {tau} not positive")));
    }
    let n = history.len().saturating_sub(1);
    if n == 0 {
        return Err(Error::domain(
            "discrete Caputo: need at least two states",
        ));
    }
    let dim = history[0].len();
    if history.iter().any(|s| s.len() != dim) {
        return Err(Error::domain("discrete Caputo: ragged history"));
    }
    let b = l1_weights(alpha, n)?;
    let scale = tau.powf(-alpha) / gamma(2.0 - alpha)?;
    let mut out = vec![0.0; dim];
    for (j, bj) in b.iter().enumerate() {
        let cur = &history[n - j];
        let prev = &history[n - j - 1];
        for ((o, c), p) in out.iter_mut().zip(cur).zip(prev) {
            *o += bj * (c - p);
        }
    }
    for o in out.iter_mut() {
        *o *= scale;
    }
    Ok(out)
}

/// Uniform-step L1 solution history for the semidiscrete problem
/// M_* dt^a U + K U = M_* f.
#[derive(Debug, Clone)]
pub struct L1Trajectory {
    pub tau: f64,
    pub states: Vec<NodalVector>,
}

impl L1Trajectory {
    pub fn n_steps(&self) -> usize {
        self.states.len() - 1
    }

    pub fn time(&self, n: usize) -> f64 {
        n as f64 * self.tau
    }

    pub fn last(&self) -> &NodalVector {
        self.states.last().expect("trajectory holds the initial state")
    }
}

/// Runs the implicit L1 scheme: at each step n,
/// (M_* + g K) U^n = M_* [ sum_{j=1}^{n-1} (b_{j-1} - b_j) U^{n-j}
///                         + b_{n-1} U^0 ] + g M_* f(t_n)
/// with g = Gamma(2-a) tau^a. `source` supplies nodal values of f at t_n;
/// omit it for the homogeneous problem.
pub fn l1_solve(
    mesh: &Mesh1D,
    k: &CoefficientField,
    mass: MassKind,
    alpha: f64,
    tau: f64,
    n_steps: usize,
    u0: &NodalVector,
    source: Option<&dyn Fn(f64) -> Vec<f64>>,
) -> Result<L1Trajectory> {
    check_alpha(alpha)?;
    if tau <= 0.0 {
        return Err(Error::domain(format!("L1 scheme: tau = {tau} not positive")));
    }
    if n_steps == 0 {
        return Err(Error::domain("L1 scheme: need at least one step"));
    }
    let dim = mesh.n_interior();
    if u0.len() != dim {
        return Err(Error::domain(format!(
            "L1 scheme: initial data length {} vs {} interior nodes",
            u0.len(),
            dim
        )));
    }
    let m_star = match mass {
        MassKind::Consistent => assemble_mass(mesh),
        MassKind::Lumped => assemble_lumped_mass(mesh),
    };
    let stiff = assemble_stiffness(mesh, k)?;
    let g = gamma(2.0 - alpha)? * tau.powf(alpha);
    let system = TriDiagMatrix::new(
        m_star
            .diag
            .iter()
            .zip(&stiff.diag)
            .map(|(m, s)| m + g * s)
            .collect(),
        m_star
            .off
            .iter()
            .zip(&stiff.off)
            .map(|(m, s)| m + g * s)
            .collect(),
    )?;
    let b = l1_weights(alpha, n_steps)?;
    let mut states: Vec<Vec<f64>> = Vec::with_capacity(n_steps + 1);
    states.push(u0.values.clone());
    for n in 1..=n_steps {
        let mut acc = vec![0.0; dim];
        for j in 1..n {
            let w = b[j - 1] - b[j];
            for (a, u) in acc.iter_mut().zip(&states[n - j]) {
                *a += w * u;
            }
        }
        let w0 = b[n - 1];
        for (a, u) in acc.iter_mut().zip(&states[0]) {
            *a += w0 * u;
        }
        let mut rhs = m_star.matvec(&acc);
        if let Some(f) = source {
            let fv = f(n as f64 * tau);
            if fv.len() != dim {
                return Err(Error::domain("L1 scheme: source length mismatch"));
            }
            let mf = m_star.matvec(&fv);
            for (r, s) in rhs.iter_mut().zip(&mf) {
                *r += g * s;
            }
        }
        let u = system.solve(&rhs)?;
        if u.iter().any(|v| !v.is_finite()) {
            return Err(Error::invariant(format!(
                "L1 scheme: non-finite state at step {n}"
            )));
        }
        states.push(u);
    }
    Ok(L1Trajectory {
        tau,
        states: states
            .into_iter()
            .map(|values| NodalVector { values })
            .collect(),
    })
}

/// Scalar L1 recursion for a single mode dy^a/dt = -lam y:
/// (1 + g lam) y^n = sum_{j=1}^{n-1} (b_{j-1} - b_j) y^{n-j} + b_{n-1} y^0.
pub fn l1_scalar(alpha: f64, lam: f64, tau: f64, n_steps: usize, y0: f64) -> Result<Vec<f64>> {
    check_alpha(alpha)?;
    if tau <= 0.0 || lam < 0.0 {
        return Err(Error::domain(
            "L1 scalar: need tau > 0 and lam >= 0",
        ));
    }
    let g = gamma(2.0 - alpha)? * tau.powf(alpha);
    let b = l1_weights(alpha, n_steps.max(1))?;
    let mut y = Vec::with_capacity(n_steps + 1);
    y.push(y0);
    for n in 1..=n_steps {
        let mut acc = 0.0;
        for j in 1..n {
            acc += (b[j - 1] - b[j]) * y[n - j];
        }
        acc += b[n - 1] * y[0];
        y.push(acc / (1.0 + g * lam));
    }
    Ok(y)
}
