//! Finite element solver for the time-fractional diffusion equation
//! du/dt^alpha - (k u')' = 0 on the unit interval with homogeneous
//! Dirichlet boundary conditions, 0 < alpha <= 1.
//!
//! The spatial discretization is piecewise-linear finite elements on a
//! uniform mesh with either the consistent (Galerkin) or the lumped mass
//! matrix. In time the semidiscrete problem is solved exactly through its
//! eigenexpansion, with each mode propagated by the Mittag-Leffler
//! function E_alpha(-lambda t^alpha); an L1 finite-difference stepper is
//! available as a fallback and for problems outside the eigenexpansion's
//! reach.
//!
//! The crate is organized bottom-up:
//!
//! - [`specfun`]: gamma and Mittag-Leffler special functions;
//! - [`fem`]: meshes, mass and stiffness matrices, projections;
//! - [`spectral`]: generalized eigensystems and exact-in-time solves;
//! - [`timestep`]: the L1 discretization of the Caputo derivative;
//! - [`exact`]: the catalogue of model data and exact series solutions;
//! - [`analysis`]: quadrature-based error norms and rate estimation;
//! - [`tables`]: convergence-table assembly and emission;
//! - [`config`]: the JSON experiment schema used by the CLI.
//!
//! Nonsmooth initial data are the point of the method: the catalogue
//! ranges from smooth data through L2-rough step functions to a Dirac
//! point mass, and the error norms track how the convergence rates hold
//! up as smoothness degrades.

pub mod analysis;
pub mod config;
pub mod error;
pub mod exact;
pub mod fem;
pub mod specfun;
pub mod spectral;
pub mod tables;
pub mod timestep;

pub use error::{Error, Result};
