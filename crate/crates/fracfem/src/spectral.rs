//! Discrete eigenpairs of the P1 stiffness/mass pencil and the
//! exact-in-time solution operators built on them.
//!
//! For constant coefficients both mass treatments admit closed-form
//! eigenpairs (discrete sine vectors); variable coefficients fall back to
//! a symmetric tridiagonal QL solver (lumped mass) or a dense
//! Householder + QL solver after a Cholesky change of basis (consistent
//! mass). Every path returns eigenvectors orthonormal in the chosen mass
//! inner product and is re-validated against the residual invariant.

use crate::error::{Error, Result};
use crate::fem::{
    assemble_lumped_mass, assemble_mass, assemble_stiffness, CoefficientField, MassKind, Mesh1D,
    NodalVector, TriDiagMatrix,
};
use crate::specfun::{mittag_leffler, MlParams};
use std::f64::consts::PI;

/// Hard cap on interior nodes for any eigensolve (level 12 meshes pass).
const MAX_EIG_N: usize = 4095;
/// Tighter cap for the dense generalized path (variable coefficient with
/// consistent mass), which costs O(n^3) time and O(n^2) memory.
const MAX_DENSE_N: usize = 2048;

/// Eigenpairs of K psi = lambda M_* psi with M_*-orthonormal vectors,
/// sorted by ascending eigenvalue. The pencil matrices are kept so the
/// projections and invariant checks need no re-assembly.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    pub eigenvalues: Vec<f64>,
    /// vectors[j] is the j-th eigenvector in nodal coordinates.
    pub vectors: Vec<Vec<f64>>,
    pub mass: TriDiagMatrix,
    pub stiffness: TriDiagMatrix,
}

impl EigenSystem {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Modal coefficients w_j = psi_j^T M_* v of a nodal vector.
    pub fn project(&self, v: &[f64]) -> Vec<f64> {
        let mv = self.mass.matvec(v);
        self.vectors
            .iter()
            .map(|psi| psi.iter().zip(&mv).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Nodal vector sum_j coef_j psi_j.
    pub fn reconstruct(&self, coef: &[f64]) -> Vec<f64> {
        let n = self.n();
        assert_eq!(coef.len(), n, "modal coefficient count mismatch");
        let mut out = vec![0.0; n];
        for (c, psi) in coef.iter().zip(&self.vectors) {
            if *c == 0.0 {
                continue;
            }
            for (o, p) in out.iter_mut().zip(psi) {
                *o += c * p;
            }
        }
        out
    }

    /// max_j ||K psi_j - lambda_j M_* psi_j||_2 / lambda_max.
    pub fn max_residual(&self) -> f64 {
        let lam_max = self.eigenvalues.last().copied().unwrap_or(1.0).max(1e-300);
        let mut worst: f64 = 0.0;
        for (lam, psi) in self.eigenvalues.iter().zip(&self.vectors) {
            let kp = self.stiffness.matvec(psi);
            let mp = self.mass.matvec(psi);
            let r2: f64 = kp
                .iter()
                .zip(&mp)
                .map(|(k, m)| {
                    let r = k - lam * m;
                    r * r
                })
                .sum();
            worst = worst.max(r2.sqrt() / lam_max);
        }
        worst
    }

    /// max_{i,j} |psi_i^T M_* psi_j - delta_ij| over the full Gram matrix;
    /// O(n^3), intended for tests and small-n diagnostics.
    pub fn orthonormality_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        let mpsis: Vec<Vec<f64>> = self.vectors.iter().map(|p| self.mass.matvec(p)).collect();
        for (i, psi) in self.vectors.iter().enumerate() {
            for (j, mp) in mpsis.iter().enumerate() {
                let g: f64 = psi.iter().zip(mp).map(|(a, b)| a * b).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((g - want).abs());
            }
        }
        worst
    }
}

/// Discrete sine vector s_k = sqrt(2) sin(j pi x_k) at the interior nodes
/// (j = 1..n_cells-1); exactly orthonormal in the lumped mass product.
pub fn sine_vector(mesh: &Mesh1D, j: usize) -> Vec<f64> {
    let n = mesh.n_interior();
    let sqrt2 = std::f64::consts::SQRT_2;
    (0..n)
        .map(|k| sqrt2 * (j as f64 * PI * mesh.interior_node(k)).sin())
        .collect()
}

fn check_eig_size(mesh: &Mesh1D, cap: usize, label: &str) -> Result<()> {
    if mesh.n_interior() > cap {
        return Err(Error::domain(format!(
            "{label}: {} interior nodes exceeds the cap of {cap}",
            mesh.n_interior()
        )));
    }
    Ok(())
}

/// Closed-form eigensystem of the lumped pencil with constant coefficient:
/// lambda_j = k (4/h^2) sin^2(j pi h / 2), sine eigenvectors.
pub fn analytic_lumped_eigensystem(mesh: &Mesh1D, k_const: f64) -> Result<EigenSystem> {
    check_eig_size(mesh, MAX_EIG_N, "analytic lumped eigensystem")?;
    if k_const <= 0.0 {
        return Err(Error::domain("eigensystem: coefficient must be positive"));
    }
    let n = mesh.n_interior();
    let h = mesh.h();
    let mut eigenvalues = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for j in 1..=n {
        let s = (0.5 * j as f64 * PI * h).sin();
        eigenvalues.push(k_const * 4.0 / (h * h) * s * s);
        vectors.push(sine_vector(mesh, j));
    }
    Ok(EigenSystem {
        eigenvalues,
        vectors,
        mass: assemble_lumped_mass(mesh),
        stiffness: assemble_stiffness(mesh, &CoefficientField::Constant(k_const))?,
    })
}

/// Closed-form eigensystem of the consistent (Galerkin) pencil with
/// constant coefficient: lambda_j = k (6/h^2) (1 - cos t_j)/(2 + cos t_j)
/// with t_j = j pi h; the sine vectors are renormalized in the consistent
/// mass product.
pub fn analytic_galerkin_eigensystem(mesh: &Mesh1D, k_const: f64) -> Result<EigenSystem> {
    check_eig_size(mesh, MAX_EIG_N, "analytic galerkin eigensystem")?;
    if k_const <= 0.0 {
        return Err(Error::domain("eigensystem: coefficient must be positive"));
    }
    let n = mesh.n_interior();
    let h = mesh.h();
    let mass = assemble_mass(mesh);
    let mut eigenvalues = Vec::with_capacity(n);
    let mut vectors = Vec::with_capacity(n);
    for j in 1..=n {
        let th = (j as f64 * PI * h).cos();
        eigenvalues.push(k_const * 6.0 / (h * h) * (1.0 - th) / (2.0 + th));
        let mut psi = sine_vector(mesh, j);
        let nrm = mass.quadratic_form(&psi).sqrt();
        for p in psi.iter_mut() {
            *p /= nrm;
        }
        vectors.push(psi);
    }
    Ok(EigenSystem {
        eigenvalues,
        vectors,
        mass,
        stiffness: assemble_stiffness(mesh, &CoefficientField::Constant(k_const))?,
    })
}

/// Eigenpairs of a symmetric tridiagonal matrix by QL with implicit
/// shifts, accumulating the rotations so the returned columns are
/// orthonormal eigenvectors. `sub[i]` couples rows i and i+1.
fn symmetric_tridiag_eig(diag: &[f64], sub: &[f64]) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = diag.len();
    let mut z: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            let mut row = vec![0.0; n];
            row[r] = 1.0;
            row
        })
        .collect();
    let mut d = diag.to_vec();
    let mut e = vec![0.0; n];
    e[..n - 1].copy_from_slice(sub);
    tql2(&mut d, &mut e, &mut z)?;
    // sort ascending, permuting columns of z into rows of `vectors`
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&c| (0..n).map(|r| z[r][c]).collect())
        .collect();
    Ok((eigenvalues, vectors))
}

/// QL with implicit shifts on a symmetric tridiagonal matrix; `z` rows are
/// rotated in place so its columns end as eigenvectors in the basis `z`
/// started in. `e` must have length n with e[n-1] = 0 workspace.
fn tql2(d: &mut [f64], e: &mut [f64], z: &mut [Vec<f64>]) -> Result<()> {
    let n = d.len();
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(Error::invariant(
                    "eigensolver: QL iteration failed to converge",
                ));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let mut s = 1.0;
            let mut c = 1.0;
            let mut p = 0.0;
            let mut underflow = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for zr in z.iter_mut() {
                    let f2 = zr[i + 1];
                    zr[i + 1] = s * zr[i] + c * f2;
                    zr[i] = c * zr[i] - s * f2;
                }
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Householder reduction of a dense symmetric matrix to tridiagonal form,
/// accumulating the orthogonal transform in place so a subsequent QL pass
/// yields eigenvectors of the original matrix.
fn tred2(a: &mut [Vec<f64>], d: &mut [f64], e: &mut [f64]) {
    let n = a.len();
    for i in (1..n).rev() {
        let l = i - 1;
        let mut h = 0.0;
        if l > 0 {
            let scale: f64 = (0..=l).map(|k| a[i][k].abs()).sum();
            if scale == 0.0 {
                e[i] = a[i][l];
            } else {
                for k in 0..=l {
                    a[i][k] /= scale;
                    h += a[i][k] * a[i][k];
                }
                let mut f = a[i][l];
                let g = if f >= 0.0 { -h.sqrt() } else { h.sqrt() };
                e[i] = scale * g;
                h -= f * g;
                a[i][l] = f - g;
                f = 0.0;
                for j in 0..=l {
                    a[j][i] = a[i][j] / h;
                    let mut g2 = 0.0;
                    for k in 0..=j {
                        g2 += a[j][k] * a[i][k];
                    }
                    for k in (j + 1)..=l {
                        g2 += a[k][j] * a[i][k];
                    }
                    e[j] = g2 / h;
                    f += e[j] * a[i][j];
                }
                let hh = f / (h + h);
                for j in 0..=l {
                    let f2 = a[i][j];
                    let g2 = e[j] - hh * f2;
                    e[j] = g2;
                    for k in 0..=j {
                        a[j][k] -= f2 * e[k] + g2 * a[i][k];
                    }
                }
            }
        } else {
            e[i] = a[i][l];
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for i in 0..n {
        if d[i] != 0.0 {
            for j in 0..i {
                let mut g = 0.0;
                for k in 0..i {
                    g += a[i][k] * a[k][j];
                }
                for k in 0..i {
                    a[k][j] -= g * a[k][i];
                }
            }
        }
        d[i] = a[i][i];
        a[i][i] = 1.0;
        for j in 0..i {
            a[j][i] = 0.0;
            a[i][j] = 0.0;
        }
    }
}

/// Dense generalized solve K psi = lambda M psi via bidiagonal Cholesky
/// M = L L^T, Householder reduction of L^{-1} K L^{-T}, and QL.
fn dense_generalized_eig(
    k: &TriDiagMatrix,
    m: &TriDiagMatrix,
) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    let n = k.n();
    // bidiagonal Cholesky of the tridiagonal mass matrix
    let mut ld = vec![0.0; n];
    let mut ls = vec![0.0; n.saturating_sub(1)];
    ld[0] = m.diag[0].sqrt();
    for i in 1..n {
        ls[i - 1] = m.off[i - 1] / ld[i - 1];
        let v = m.diag[i] - ls[i - 1] * ls[i - 1];
        if v <= 0.0 {
            return Err(Error::invariant(
                "eigensolver: mass matrix is not positive definite",
            ));
        }
        ld[i] = v.sqrt();
    }
    // dense K
    let mut c: Vec<Vec<f64>> = (0..n)
        .map(|i| {
            let mut row = vec![0.0; n];
            row[i] = k.diag[i];
            if i > 0 {
                row[i - 1] = k.off[i - 1];
            }
            if i + 1 < n {
                row[i + 1] = k.off[i];
            }
            row
        })
        .collect();
    // W = L^{-1} K: forward-substitute on rows
    for i in 0..n {
        if i > 0 {
            let f = ls[i - 1];
            let (prev, cur) = c.split_at_mut(i);
            for (w, p) in cur[0].iter_mut().zip(&prev[i - 1]) {
                *w -= f * p;
            }
        }
        for w in c[i].iter_mut() {
            *w /= ld[i];
        }
    }
    // C = W L^{-T}: forward-substitute on columns
    for j in 0..n {
        for i in 0..n {
            if j > 0 {
                let f = ls[j - 1] * c[i][j - 1];
                c[i][j] -= f;
            }
            c[i][j] /= ld[j];
        }
    }
    // symmetrize against rounding
    for i in 0..n {
        for j in 0..i {
            let v = 0.5 * (c[i][j] + c[j][i]);
            c[i][j] = v;
            c[j][i] = v;
        }
    }
    let mut d = vec![0.0; n];
    let mut e = vec![0.0; n];
    tred2(&mut c, &mut d, &mut e);
    // tql2 couples d[i], d[i+1] through e[i]; tred2 put that bond in e[i+1]
    for i in 0..n - 1 {
        e[i] = e[i + 1];
    }
    e[n - 1] = 0.0;
    tql2(&mut d, &mut e, &mut c)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| d[i]).collect();
    // psi = L^{-T} y, column by column; M-orthonormality is inherited
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| {
            let mut x: Vec<f64> = (0..n).map(|r| c[r][col]).collect();
            for i in (0..n).rev() {
                if i + 1 < n {
                    let f = ls[i] * x[i + 1];
                    x[i] -= f;
                }
                x[i] /= ld[i];
            }
            x
        })
        .collect();
    Ok((eigenvalues, vectors))
}

/// Fix eigenvector signs so the first appreciable component is positive,
/// making solver output deterministic across paths.
fn orient(vectors: &mut [Vec<f64>]) {
    for v in vectors.iter_mut() {
        let lead = v.iter().find(|x| x.abs() > 1e-8).copied().unwrap_or(1.0);
        if lead < 0.0 {
            for x in v.iter_mut() {
                *x = -*x;
            }
        }
    }
}

/// Eigensystem of the stiffness/mass pencil for any coefficient and mass
/// treatment. Constant coefficients dispatch to the closed forms; the
/// numeric paths validate the residual invariant before returning.
pub fn solve_eigensystem(
    mesh: &Mesh1D,
    k: &CoefficientField,
    mass: MassKind,
) -> Result<EigenSystem> {
    check_eig_size(mesh, MAX_EIG_N, "eigensystem")?;
    if let CoefficientField::Constant(c) = k {
        return match mass {
            MassKind::Lumped => analytic_lumped_eigensystem(mesh, *c),
            MassKind::Consistent => analytic_galerkin_eigensystem(mesh, *c),
        };
    }
    let stiffness = assemble_stiffness(mesh, k)?;
    let system = match mass {
        MassKind::Lumped => {
            let h = mesh.h();
            // M = h I, so the pencil reduces to the ordinary problem for K/h
            let diag: Vec<f64> = stiffness.diag.iter().map(|v| v / h).collect();
            let sub: Vec<f64> = stiffness.off.iter().map(|v| v / h).collect();
            let (eigenvalues, mut vectors) = symmetric_tridiag_eig(&diag, &sub)?;
            let scale = 1.0 / h.sqrt();
            for v in vectors.iter_mut() {
                for x in v.iter_mut() {
                    *x *= scale;
                }
            }
            orient(&mut vectors);
            EigenSystem {
                eigenvalues,
                vectors,
                mass: assemble_lumped_mass(mesh),
                stiffness,
            }
        }
        MassKind::Consistent => {
            check_eig_size(mesh, MAX_DENSE_N, "dense generalized eigensystem")?;
            let m = assemble_mass(mesh);
            let (eigenvalues, mut vectors) = dense_generalized_eig(&stiffness, &m)?;
            orient(&mut vectors);
            EigenSystem {
                eigenvalues,
                vectors,
                mass: m,
                stiffness,
            }
        }
    };
    let res = system.max_residual();
    if res > 1e-9 {
        return Err(Error::invariant(format!(
            "eigensystem: residual {res:.3e} exceeds 1e-9 of the top eigenvalue"
        )));
    }
    Ok(system)
}

/// Nodal values plus the modal coefficients of the same solution; the
/// modal side feeds the spectral gradient-error convention.
#[derive(Debug, Clone)]
pub struct SpectralSolution {
    pub nodal: NodalVector,
    pub modal: Vec<f64>,
}

fn check_solve_args(system: &EigenSystem, v: &NodalVector, alpha: f64) -> Result<()> {
    if v.len() != system.n() {
        return Err(Error::domain(format!(
            "spectral solve: data length {} vs system size {}",
            v.len(),
            system.n()
        )));
    }
    if !(alpha > 0.0 && alpha <= 1.0) {
        return Err(Error::domain(format!(
            "spectral solve: alpha = {alpha} outside (0, 1]"
        )));
    }
    Ok(())
}

fn wrap_solution(system: &EigenSystem, modal: Vec<f64>) -> Result<SpectralSolution> {
    let nodal = system.reconstruct(&modal);
    if nodal.iter().any(|v| !v.is_finite()) {
        return Err(Error::invariant("spectral solve: non-finite solution"));
    }
    Ok(SpectralSolution {
        nodal: NodalVector { values: nodal },
        modal,
    })
}

/// Exact-in-time homogeneous solution u_h(t) = sum_j E_a(-lambda_j t^a)
/// (v, psi_j)_* psi_j; t = 0 reproduces the datum exactly.
pub fn homogeneous_solve(
    system: &EigenSystem,
    v: &NodalVector,
    alpha: f64,
    t: f64,
) -> Result<SpectralSolution> {
    check_solve_args(system, v, alpha)?;
    if t < 0.0 {
        return Err(Error::domain(format!("spectral solve: t = {t} negative")));
    }
    let w = system.project(&v.values);
    if t == 0.0 {
        return Ok(SpectralSolution {
            nodal: v.clone(),
            modal: w,
        });
    }
    let p = MlParams::new(alpha, 1.0)?;
    let ta = t.powf(alpha);
    let modal: Result<Vec<f64>> = system
        .eigenvalues
        .iter()
        .zip(&w)
        .map(|(lam, wj)| Ok(mittag_leffler(p, -lam * ta)? * wj))
        .collect();
    wrap_solution(system, modal?)
}

/// Kernel operator t^{a-1} E_{a,a}(-lambda t^a) applied mode by mode;
/// defined for strictly positive t only.
pub fn bar_operator_apply(
    system: &EigenSystem,
    v: &NodalVector,
    alpha: f64,
    t: f64,
) -> Result<SpectralSolution> {
    check_solve_args(system, v, alpha)?;
    if t <= 0.0 {
        return Err(Error::domain(format!(
            "kernel operator: t = {t} must be positive"
        )));
    }
    let w = system.project(&v.values);
    let p = MlParams::new(alpha, alpha)?;
    let ta = t.powf(alpha);
    let pre = t.powf(alpha - 1.0);
    let modal: Result<Vec<f64>> = system
        .eigenvalues
        .iter()
        .zip(&w)
        .map(|(lam, wj)| Ok(pre * mittag_leffler(p, -lam * ta)? * wj))
        .collect();
    wrap_solution(system, modal?)
}

/// Spectral Sobolev-type norm (sum_j lambda_j^p w_j^2)^{1/2}; p = 0 is the
/// mass norm, p = 1 the energy norm.
pub fn discrete_norm(system: &EigenSystem, v: &NodalVector, p: f64) -> Result<f64> {
    if v.len() != system.n() {
        return Err(Error::domain(format!(
            "discrete norm: data length {} vs system size {}",
            v.len(),
            system.n()
        )));
    }
    let w = system.project(&v.values);
    let s: f64 = system
        .eigenvalues
        .iter()
        .zip(&w)
        .map(|(lam, wj)| lam.powf(p) * wj * wj)
        .sum();
    if !s.is_finite() {
        return Err(Error::invariant("discrete norm: non-finite value"));
    }
    Ok(s.sqrt())
}
