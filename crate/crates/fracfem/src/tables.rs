//! Convergence-table pipeline: initial-data projection, solution operator
//! (exact-in-time eigenexpansion or L1 stepping), error norms against the
//! exact series or a fine self-computed reference, ratio columns, and
//! CSV / Markdown emission.
//!
//! Every knob that distinguishes one reference table from another is an
//! explicit field of `TableSpec`: the data kind, the mass treatment, the
//! initial projection, and the H1 sampling rule. Errors are normalized by
//! the L2 norm of the datum (which is 1 for the point mass and the
//! variable-coefficient datum).

use crate::analysis::{
    h1_error_gauss, h1_error_quarter, l2_error, spectral_gradient_error,
};
use crate::error::{Error, Result};
use crate::exact::{
    default_mode_count, l2_load, nodal_values, v_norm, energy_load, DataKind, ModeRule,
    SeriesSolution,
};
use crate::fem::{dirac_load, l2_project, ritz_project, MassKind, Mesh1D, NodalVector};
use crate::spectral::{homogeneous_solve, solve_eigensystem, EigenSystem};
use crate::specfun::{region_stats, reset_region_stats};
use crate::timestep::l1_solve;
use std::fmt;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Spatial discretization driving a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Consistent mass, exact in time via the eigenexpansion.
    Galerkin,
    /// Lumped mass, exact in time via the eigenexpansion.
    Lumped,
    /// L1 time stepping (lumped mass; the variable-coefficient example
    /// uses the method only to pick its mass treatment).
    L1,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Galerkin => "galerkin",
            Method::Lumped => "lumped",
            Method::L1 => "l1",
        }
    }

    pub fn mass_kind(&self) -> MassKind {
        match self {
            Method::Galerkin => MassKind::Consistent,
            Method::Lumped | Method::L1 => MassKind::Lumped,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "galerkin" => Ok(Method::Galerkin),
            "lumped" => Ok(Method::Lumped),
            "l1" => Ok(Method::L1),
            other => Err(Error::config(format!(
                "unknown method '{other}' (expected galerkin, lumped, or l1)"
            ))),
        }
    }
}

/// Initial-data projection onto the FE space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    /// Energy projection (exact loads); the interpolant for the smooth
    /// and hat data in 1D.
    Ritz,
    /// Consistent-mass L2 projection with exact loads.
    L2,
    /// Lumped-mass L2 projection (v, phi_i)_h / h, i.e. nodal values with
    /// the half-value convention at a jump node.
    LumpedL2,
    /// Point-mass projection (column of an inverse mass matrix).
    Dirac,
}

impl Projection {
    pub fn as_str(&self) -> &'static str {
        match self {
            Projection::Ritz => "ritz",
            Projection::L2 => "l2",
            Projection::LumpedL2 => "lumped_l2",
            Projection::Dirac => "dirac",
        }
    }

    /// Default projection per datum: energy projection for the two
    /// finite-energy data, point-mass handling for the Dirac datum, L2
    /// projection otherwise.
    pub fn default_for(kind: DataKind) -> Projection {
        match kind {
            DataKind::A | DataKind::B => Projection::Ritz,
            DataKind::D => Projection::Dirac,
            _ => Projection::L2,
        }
    }
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Projection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ritz" => Ok(Projection::Ritz),
            "l2" => Ok(Projection::L2),
            "lumped_l2" => Ok(Projection::LumpedL2),
            "dirac" => Ok(Projection::Dirac),
            other => Err(Error::config(format!(
                "unknown projection '{other}' (expected ritz, l2, lumped_l2, or dirac)"
            ))),
        }
    }
}

/// H1-seminorm sampling rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum H1Rule {
    QuarterPoint,
    Gauss,
}

impl H1Rule {
    pub fn as_str(&self) -> &'static str {
        match self {
            H1Rule::QuarterPoint => "quarter",
            H1Rule::Gauss => "gauss",
        }
    }
}

impl fmt::Display for H1Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for H1Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quarter" => Ok(H1Rule::QuarterPoint),
            "gauss" => Ok(H1Rule::Gauss),
            other => Err(Error::config(format!(
                "unknown h1 rule '{other}' (expected quarter or gauss)"
            ))),
        }
    }
}

/// Mass matrix defining the Dirac projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiracMass {
    Consistent,
    Lumped,
}

impl DiracMass {
    pub fn as_str(&self) -> &'static str {
        match self {
            DiracMass::Consistent => "consistent",
            DiracMass::Lumped => "lumped",
        }
    }
}

impl fmt::Display for DiracMass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for DiracMass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "consistent" => Ok(DiracMass::Consistent),
            "lumped" => Ok(DiracMass::Lumped),
            other => Err(Error::config(format!(
                "unknown dirac mass '{other}' (expected consistent or lumped)"
            ))),
        }
    }
}

/// Everything needed to produce one convergence table (one datum, one
/// method, one alpha, one time, a range of dyadic levels).
#[derive(Debug, Clone)]
pub struct TableSpec {
    pub kind: DataKind,
    pub method: Method,
    pub alpha: f64,
    pub t: f64,
    /// Inclusive dyadic level range; level k means 2^k cells.
    pub levels: (u32, u32),
    pub projection: Projection,
    pub h1_rule: H1Rule,
    pub dirac_mass: DiracMass,
    /// Also compute the spectral gradient-error column (lumped method,
    /// series data only).
    pub with_gh: bool,
    /// Time step for the L1 method (and for the variable-coefficient
    /// example, which is always stepped).
    pub tau: Option<f64>,
    /// Series mode count override; None picks the table default.
    pub modes: Option<usize>,
}

impl TableSpec {
    pub fn new(kind: DataKind, method: Method, alpha: f64, t: f64, levels: (u32, u32)) -> Self {
        TableSpec {
            kind,
            method,
            alpha,
            t,
            levels,
            projection: Projection::default_for(kind),
            h1_rule: H1Rule::QuarterPoint,
            dirac_mass: DiracMass::Consistent,
            with_gh: false,
            tau: None,
            modes: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 1.0) {
            return Err(Error::config(format!(
                "alpha = {} outside (0, 1]",
                self.alpha
            )));
        }
        if self.t < 0.0 || !self.t.is_finite() {
            return Err(Error::config(format!("t = {} is not admissible", self.t)));
        }
        let (lo, hi) = self.levels;
        if lo < 2 || hi > 12 || lo > hi {
            return Err(Error::config(format!(
                "levels {lo}:{hi} outside the supported range 2..=12"
            )));
        }
        if self.with_gh && (self.method != Method::Lumped || !self.kind.has_series()) {
            return Err(Error::config(
                "the spectral gradient column needs the lumped method and series data",
            ));
        }
        if self.needs_stepping() {
            let tau = self.tau.unwrap_or(REFERENCE_TAU);
            if !(tau > 0.0) {
                return Err(Error::config(format!("tau = {tau} not positive")));
            }
            let steps = (self.t / tau).round();
            if steps < 1.0 || (steps * tau - self.t).abs() > 1e-9 * self.t.max(1.0) {
                return Err(Error::config(format!(
                    "tau = {tau} does not divide t = {} into whole steps",
                    self.t
                )));
            }
        }
        Ok(())
    }

    /// The variable-coefficient example is always L1-stepped (its method
    /// only picks the mass treatment); other data step only under the L1
    /// method.
    fn needs_stepping(&self) -> bool {
        self.kind == DataKind::E || self.method == Method::L1
    }

    fn n_steps(&self, tau: f64) -> usize {
        (self.t / tau).round() as usize
    }
}

/// One mesh level of a table.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorRow {
    pub level: u32,
    pub h: f64,
    pub l2: f64,
    pub h1: f64,
    pub gh: Option<f64>,
}

/// A finished table plus the spec that produced it.
#[derive(Debug, Clone)]
pub struct ConvergenceTable {
    pub kind: DataKind,
    pub method: Method,
    pub alpha: f64,
    pub t: f64,
    pub rows: Vec<ErrorRow>,
}

impl ConvergenceTable {
    /// Coarse-over-fine error ratios; entry i compares rows i and i+1.
    pub fn l2_ratios(&self) -> Vec<f64> {
        self.rows.windows(2).map(|w| w[0].l2 / w[1].l2).collect()
    }

    pub fn h1_ratios(&self) -> Vec<f64> {
        self.rows.windows(2).map(|w| w[0].h1 / w[1].h1).collect()
    }

    /// Theoretical rates (L2, H1) per halving for the lossless data
    /// classes; rough data match them only up to logarithmic factors.
    pub fn expected_rates(&self) -> (f64, f64) {
        (2.0, 1.0)
    }
}

/// Initial nodal data for a spec on a given mesh.
pub fn initial_data(spec: &TableSpec, mesh: &Mesh1D) -> Result<NodalVector> {
    match spec.projection {
        Projection::Ritz => {
            let load = energy_load(spec.kind, mesh)?;
            ritz_project(mesh, &spec.kind.coefficient(), &load)
        }
        Projection::L2 => {
            if spec.kind == DataKind::D {
                dirac_load(mesh, 0.5, MassKind::Consistent)
            } else {
                l2_project(mesh, &l2_load(spec.kind, mesh)?)
            }
        }
        Projection::LumpedL2 => {
            if spec.kind == DataKind::D {
                dirac_load(mesh, 0.5, MassKind::Lumped)
            } else {
                nodal_values(spec.kind, mesh)
            }
        }
        Projection::Dirac => {
            if spec.kind != DataKind::D {
                return Err(Error::config(format!(
                    "the dirac projection applies only to the point-mass datum, not '{}'",
                    spec.kind
                )));
            }
            let mass = match spec.dirac_mass {
                DiracMass::Consistent => MassKind::Consistent,
                DiracMass::Lumped => MassKind::Lumped,
            };
            dirac_load(mesh, 0.5, mass)
        }
    }
}

/// Solution at one level: nodal values plus, for eigenexpansion solves,
/// the modal coefficients feeding the spectral gradient error.
fn solve_level(spec: &TableSpec, mesh: &Mesh1D) -> Result<(NodalVector, Option<Vec<f64>>)> {
    let v0 = initial_data(spec, mesh)?;
    if spec.needs_stepping() {
        let tau = spec.tau.unwrap_or(REFERENCE_TAU);
        if spec.t == 0.0 {
            return Ok((v0, None));
        }
        let traj = l1_solve(
            mesh,
            &spec.kind.coefficient(),
            spec.method.mass_kind(),
            spec.alpha,
            tau,
            spec.n_steps(tau),
            &v0,
            None,
        )?;
        return Ok((traj.last().clone(), None));
    }
    let system = solve_eigensystem(mesh, &spec.kind.coefficient(), spec.method.mass_kind())?;
    log_eigen_diagnostics(spec, mesh, &system);
    let sol = homogeneous_solve(&system, &v0, spec.alpha, spec.t)?;
    Ok((sol.nodal, Some(sol.modal)))
}

fn log_eigen_diagnostics(spec: &TableSpec, mesh: &Mesh1D, system: &EigenSystem) {
    log::debug!(
        "eigen residual max {:.3e} at {} cells",
        system.max_residual(),
        mesh.n_cells()
    );
    if spec.method == Method::Galerkin && spec.kind.coefficient().is_constant() {
        // the lumped closed form is sometimes quoted for both mass
        // treatments; record how far the true generalized spectrum sits
        let h = mesh.h();
        let gap = system
            .eigenvalues
            .iter()
            .enumerate()
            .map(|(i, lam)| {
                let s = (0.5 * (i + 1) as f64 * std::f64::consts::PI * h).sin();
                let bar = 4.0 / (h * h) * s * s;
                ((lam - bar) / bar).abs()
            })
            .fold(0.0f64, f64::max);
        log::debug!(
            "galerkin vs lumped eigenvalue formula: max rel gap {gap:.3e} at {} cells",
            mesh.n_cells()
        );
    }
}

/// Builds a table for the closed-form data kinds by comparing against the
/// exact sine series. The variable-coefficient kind needs
/// `build_table_vs_reference`.
pub fn build_table(spec: &TableSpec) -> Result<ConvergenceTable> {
    spec.validate()?;
    if !spec.kind.has_series() {
        return Err(Error::config(
            "the variable-coefficient example is measured against the cached reference; \
             use the reference pipeline",
        ));
    }
    reset_region_stats();
    let n_modes = spec.modes.unwrap_or_else(|| default_mode_count(spec.kind, spec.t));
    let series = SeriesSolution::new(spec.kind, spec.alpha, spec.t, ModeRule::Fixed(n_modes))?;
    let gh_series = if spec.with_gh {
        Some(SeriesSolution::new(
            spec.kind,
            spec.alpha,
            spec.t,
            ModeRule::Fixed(GH_SERIES_MODES),
        )?)
    } else {
        None
    };
    let norm = v_norm(spec.kind);
    let mut rows = Vec::new();
    for level in spec.levels.0..=spec.levels.1 {
        let mesh = Mesh1D::new(1usize << level)?;
        let (u, modal) = solve_level(spec, &mesh)?;
        let l2 = l2_error(&mesh, &u, |x| series.value(x))? / norm;
        let h1 = match spec.h1_rule {
            H1Rule::QuarterPoint => h1_error_quarter(&mesh, &u, |x| series.deriv(x))?,
            H1Rule::Gauss => h1_error_gauss(&mesh, &u, |x| series.deriv(x))?,
        } / norm;
        let gh = match (&gh_series, &modal) {
            (Some(gs), Some(m)) => Some(spectral_gradient_error(gs, m)? / norm),
            _ => None,
        };
        rows.push(ErrorRow {
            level,
            h: mesh.h(),
            l2,
            h1,
            gh,
        });
    }
    log::info!(
        "table {} {} alpha={} t={} projection={} h1={}: {} levels, ML regions {}",
        spec.kind,
        spec.method,
        spec.alpha,
        spec.t,
        spec.projection,
        spec.h1_rule,
        rows.len(),
        region_stats()
    );
    Ok(ConvergenceTable {
        kind: spec.kind,
        method: spec.method,
        alpha: spec.alpha,
        t: spec.t,
        rows,
    })
}

/// Number of series modes kept for the spectral gradient column.
pub const GH_SERIES_MODES: usize = 20_000;

// ---------------------------------------------------------------------
// Variable-coefficient reference pipeline
// ---------------------------------------------------------------------

/// Dyadic level of the reference mesh (2^9 = 512 cells).
pub const REFERENCE_LEVEL: u32 = 9;
/// Time step shared by the reference and by every stepped coarse solve.
pub const REFERENCE_TAU: f64 = 1e-5;
/// Final time of the reference solution.
pub const REFERENCE_T: f64 = 0.01;
/// Fractional order of the reference solution.
pub const REFERENCE_ALPHA: f64 = 0.5;

/// Fine-mesh solution of the variable-coefficient example.
#[derive(Debug, Clone)]
pub struct ReferenceRun {
    /// Interior nodal values on the 512-cell mesh.
    pub values: Vec<f64>,
    /// Max-norm gap against the exact-in-time eigenexpansion at the same
    /// level; computed on build, absent when loaded from cache.
    pub eig_gap: Option<f64>,
}

/// Builds the reference by L1 stepping and cross-checks it against the
/// eigenexpansion solution at the same level.
pub fn build_reference() -> Result<ReferenceRun> {
    let mesh = Mesh1D::new(1usize << REFERENCE_LEVEL)?;
    let spec = TableSpec::new(
        DataKind::E,
        Method::Lumped,
        REFERENCE_ALPHA,
        REFERENCE_T,
        (REFERENCE_LEVEL, REFERENCE_LEVEL),
    );
    let v0 = nodal_values(DataKind::E, &mesh)?;
    let traj = l1_solve(
        &mesh,
        &DataKind::E.coefficient(),
        MassKind::Lumped,
        REFERENCE_ALPHA,
        REFERENCE_TAU,
        spec.n_steps(REFERENCE_TAU),
        &v0,
        None,
    )?;
    let stepped = traj.last().clone();
    let system = solve_eigensystem(&mesh, &DataKind::E.coefficient(), MassKind::Lumped)?;
    let exact = homogeneous_solve(&system, &v0, REFERENCE_ALPHA, REFERENCE_T)?;
    let gap = stepped
        .values
        .iter()
        .zip(&exact.nodal.values)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0f64, f64::max);
    log::info!(
        "reference build: {} cells, tau {REFERENCE_TAU}, stepping-vs-eigenexpansion gap {gap:.3e}",
        mesh.n_cells()
    );
    Ok(ReferenceRun {
        values: stepped.values,
        eig_gap: Some(gap),
    })
}

/// Cache file used by the reference pipeline inside an output directory.
pub fn reference_cache_path(dir: &Path) -> PathBuf {
    dir.join("reference_e.csv")
}

/// Writes the reference as `x,value` rows (513 nodes including the zero
/// boundary values), atomically via a sibling temp file.
pub fn write_reference_cache(path: &Path, reference: &ReferenceRun) -> Result<()> {
    let n_cells = 1usize << REFERENCE_LEVEL;
    if reference.values.len() != n_cells - 1 {
        return Err(Error::invariant(format!(
            "reference cache: expected {} interior values, got {}",
            n_cells - 1,
            reference.values.len()
        )));
    }
    let mut body = String::from("x,value\n");
    for k in 0..=n_cells {
        let x = k as f64 / n_cells as f64;
        let v = if k == 0 || k == n_cells {
            0.0
        } else {
            reference.values[k - 1]
        };
        body.push_str(&format!("{x:.16e},{v:.16e}\n"));
    }
    let tmp = path.with_extension("csv.tmp");
    let io_err = |e: std::io::Error, p: &Path| Error::io(p.display().to_string(), e);
    let mut f = fs::File::create(&tmp).map_err(|e| io_err(e, &tmp))?;
    f.write_all(body.as_bytes()).map_err(|e| io_err(e, &tmp))?;
    f.sync_all().map_err(|e| io_err(e, &tmp))?;
    drop(f);
    fs::rename(&tmp, path).map_err(|e| io_err(e, path))?;
    Ok(())
}

/// Reads a reference cache, verifying the node grid and boundary zeros.
pub fn read_reference_cache(path: &Path) -> Result<ReferenceRun> {
    let n_cells = 1usize << REFERENCE_LEVEL;
    let text =
        fs::read_to_string(path).map_err(|e| Error::io(path.display().to_string(), e))?;
    let mut lines = text.lines();
    if lines.next() != Some("x,value") {
        return Err(Error::config(format!(
            "reference cache {}: missing 'x,value' header",
            path.display()
        )));
    }
    let mut values = Vec::with_capacity(n_cells - 1);
    for (k, line) in lines.enumerate() {
        let (xs, vs) = line.split_once(',').ok_or_else(|| {
            Error::config(format!("reference cache {}: malformed row {k}", path.display()))
        })?;
        let x: f64 = xs.trim().parse().map_err(|_| {
            Error::config(format!("reference cache {}: bad x in row {k}", path.display()))
        })?;
        let v: f64 = vs.trim().parse().map_err(|_| {
            Error::config(format!("reference cache {}: bad value in row {k}", path.display()))
        })?;
        if k > n_cells {
            return Err(Error::config(format!(
                "reference cache {}: too many rows",
                path.display()
            )));
        }
        if (x - k as f64 / n_cells as f64).abs() > 1e-12 {
            return Err(Error::config(format!(
                "reference cache {}: node {k} at x = {x} off the reference grid",
                path.display()
            )));
        }
        if (k == 0 || k == n_cells) && v != 0.0 {
            return Err(Error::config(format!(
                "reference cache {}: nonzero boundary value",
                path.display()
            )));
        }
        if k > 0 && k < n_cells {
            if !v.is_finite() {
                return Err(Error::config(format!(
                    "reference cache {}: non-finite value in row {k}",
                    path.display()
                )));
            }
            values.push(v);
        }
    }
    if values.len() != n_cells - 1 {
        return Err(Error::config(format!(
            "reference cache {}: expected {} rows, found {}",
            path.display(),
            n_cells + 1,
            values.len() + 2
        )));
    }
    Ok(ReferenceRun {
        values,
        eig_gap: None,
    })
}

/// Removes its lock file when the guarded build finishes or fails.
struct LockGuard(PathBuf);

impl Drop for LockGuard {
    fn drop(&mut self) {
        let _ = fs::remove_file(&self.0);
    }
}

/// Loads the cached reference from `dir`, building (and caching) it when
/// missing, malformed, or when `force` is set. Concurrent builds are
/// excluded by a lock file.
pub fn load_or_build_reference(dir: &Path, force: bool) -> Result<ReferenceRun> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir.display().to_string(), e))?;
    let path = reference_cache_path(dir);
    if !force && path.exists() {
        match read_reference_cache(&path) {
            Ok(r) => {
                log::info!("reference cache loaded from {}", path.display());
                return Ok(r);
            }
            Err(e) => log::warn!("reference cache rebuild: {e}"),
        }
    }
    let lock_path = path.with_extension("lock");
    match fs::OpenOptions::new()
        .write(true)
        .create_new(true)
        .open(&lock_path)
    {
        Ok(_) => {}
        Err(e) if e.kind() == std::io::ErrorKind::AlreadyExists => {
            return Err(Error::config(format!(
                "reference build already in progress (lock file {}); remove it if stale",
                lock_path.display()
            )));
        }
        Err(e) => return Err(Error::io(lock_path.display().to_string(), e)),
    }
    let _guard = LockGuard(lock_path);
    let reference = build_reference()?;
    write_reference_cache(&path, &reference)?;
    log::info!("reference cache written to {}", path.display());
    Ok(reference)
}

/// Doubles the mesh of interior nodal values by inserting element
/// midpoints (exact piecewise-linear refinement).
fn refine_midpoints(interior: &[f64]) -> Vec<f64> {
    let n_cells = interior.len() + 1;
    let mut out = Vec::with_capacity(2 * n_cells - 1);
    let mut prev = 0.0;
    for k in 0..n_cells {
        let cur = if k + 1 == n_cells { 0.0 } else { interior[k] };
        out.push(0.5 * (prev + cur));
        if k + 1 != n_cells {
            out.push(cur);
        }
        prev = cur;
    }
    out
}

/// Exact L2 norm of the piecewise-linear function with these interior
/// values (boundary zeros) on a uniform mesh of width h.
pub fn pw_linear_l2(interior: &[f64], h: f64) -> f64 {
    let mut acc = 0.0;
    let mut prev = 0.0;
    for k in 0..=interior.len() {
        let cur = if k == interior.len() { 0.0 } else { interior[k] };
        acc += (h / 3.0) * (prev * prev + prev * cur + cur * cur);
        prev = cur;
    }
    acc.sqrt()
}

/// Exact H1 seminorm of the same piecewise-linear function.
pub fn pw_linear_h1(interior: &[f64], h: f64) -> f64 {
    let mut acc = 0.0;
    let mut prev = 0.0;
    for k in 0..=interior.len() {
        let cur = if k == interior.len() { 0.0 } else { interior[k] };
        let d = cur - prev;
        acc += d * d / h;
        prev = cur;
    }
    acc.sqrt()
}

/// Builds the variable-coefficient table: each level is L1-stepped with
/// the reference time step, refined onto the reference mesh by midpoint
/// insertion, and measured in the exact piecewise-linear difference
/// norms.
pub fn build_table_vs_reference(
    spec: &TableSpec,
    reference: &ReferenceRun,
) -> Result<ConvergenceTable> {
    spec.validate()?;
    if spec.kind != DataKind::E {
        return Err(Error::config(
            "the reference pipeline applies only to the variable-coefficient example",
        ));
    }
    if (spec.alpha - REFERENCE_ALPHA).abs() > 1e-12 || (spec.t - REFERENCE_T).abs() > 1e-12 {
        return Err(Error::config(format!(
            "the cached reference is computed at alpha = {REFERENCE_ALPHA}, t = {REFERENCE_T}; \
             requested alpha = {}, t = {}",
            spec.alpha, spec.t
        )));
    }
    if spec.levels.1 >= REFERENCE_LEVEL {
        return Err(Error::config(format!(
            "levels must stay below the reference level {REFERENCE_LEVEL}"
        )));
    }
    let href = 1.0 / (1usize << REFERENCE_LEVEL) as f64;
    let norm = v_norm(spec.kind);
    let mut rows = Vec::new();
    for level in spec.levels.0..=spec.levels.1 {
        let mesh = Mesh1D::new(1usize << level)?;
        let (u, _) = solve_level(spec, &mesh)?;
        let mut fine = u.values;
        for _ in level..REFERENCE_LEVEL {
            fine = refine_midpoints(&fine);
        }
        let diff: Vec<f64> = fine
            .iter()
            .zip(&reference.values)
            .map(|(a, b)| a - b)
            .collect();
        rows.push(ErrorRow {
            level,
            h: mesh.h(),
            l2: pw_linear_l2(&diff, href) / norm,
            h1: pw_linear_h1(&diff, href) / norm,
            gh: None,
        });
    }
    log::info!(
        "table {} {} alpha={} t={} vs reference: {} levels",
        spec.kind,
        spec.method,
        spec.alpha,
        spec.t,
        rows.len()
    );
    Ok(ConvergenceTable {
        kind: spec.kind,
        method: spec.method,
        alpha: spec.alpha,
        t: spec.t,
        rows,
    })
}

// ---------------------------------------------------------------------
// Emission and parsing
// ---------------------------------------------------------------------

/// CSV form: full-precision errors plus ratio columns (blank where a
/// value does not exist). Byte-identical across runs.
pub fn to_csv(table: &ConvergenceTable) -> String {
    let mut out = String::from("h,l2_error,h1_error,gh_error,l2_ratio,h1_ratio\n");
    for (i, row) in table.rows.iter().enumerate() {
        let gh = row.gh.map(|g| format!("{g:.16e}")).unwrap_or_default();
        let (rl2, rh1) = if i == 0 {
            (String::new(), String::new())
        } else {
            (
                format!("{:.16e}", table.rows[i - 1].l2 / row.l2),
                format!("{:.16e}", table.rows[i - 1].h1 / row.h1),
            )
        };
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{gh},{rl2},{rh1}\n",
            row.h, row.l2, row.h1
        ));
    }
    out
}

/// Markdown form with three significant digits, one row per level.
pub fn to_markdown(table: &ConvergenceTable) -> String {
    let has_gh = table.rows.iter().any(|r| r.gh.is_some());
    let mut out = format!(
        "### example {}, method {}, alpha = {}, t = {}\n\n",
        table.kind, table.method, table.alpha, table.t
    );
    out.push_str(if has_gh {
        "| 1/h | L2 error | ratio | H1 error | ratio | grad error |\n|---:|---:|---:|---:|---:|---:|\n"
    } else {
        "| 1/h | L2 error | ratio | H1 error | ratio |\n|---:|---:|---:|---:|---:|\n"
    });
    for (i, row) in table.rows.iter().enumerate() {
        let inv_h = (1.0 / row.h).round() as u64;
        let (rl2, rh1) = if i == 0 {
            ("--".to_string(), "--".to_string())
        } else {
            (
                format!("{:.2}", table.rows[i - 1].l2 / row.l2),
                format!("{:.2}", table.rows[i - 1].h1 / row.h1),
            )
        };
        let mut line = format!(
            "| {inv_h} | {:.2e} | {rl2} | {:.2e} | {rh1} |",
            row.l2, row.h1
        );
        if has_gh {
            match row.gh {
                Some(g) => line.push_str(&format!(" {g:.2e} |")),
                None => line.push_str(" -- |"),
            }
        }
        line.push('\n');
        out.push_str(&line);
    }
    out
}

/// Parses a single table back from its CSV form (comment lines starting
/// with '#' and blank lines are skipped); used to verify round-trips.
pub fn parse_table_csv(text: &str) -> Result<Vec<ErrorRow>> {
    let mut rows = Vec::new();
    let mut saw_header = false;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !saw_header {
            if line != "h,l2_error,h1_error,gh_error,l2_ratio,h1_ratio" {
                return Err(Error::config(format!("unexpected table header '{line}'")));
            }
            saw_header = true;
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(Error::config(format!("expected 6 fields, got '{line}'")));
        }
        let parse = |s: &str| -> Result<f64> {
            s.parse()
                .map_err(|_| Error::config(format!("bad number '{s}' in table row")))
        };
        let h = parse(fields[0])?;
        let level = (1.0 / h).round().log2().round() as u32;
        rows.push(ErrorRow {
            level,
            h,
            l2: parse(fields[1])?,
            h1: parse(fields[2])?,
            gh: if fields[3].is_empty() {
                None
            } else {
                Some(parse(fields[3])?)
            },
        });
    }
    if !saw_header {
        return Err(Error::config("no table header found"));
    }
    Ok(rows)
}
