//! JSON experiment configuration for the CLI: one file describes a data
//! kind, a method, lists of fractional orders and times, a dyadic level
//! range, and output options. Each (alpha, t) pair becomes one table.

use crate::error::{Error, Result};
use crate::exact::DataKind;
use crate::tables::{DiracMass, H1Rule, Method, Projection, TableSpec};
use serde::Deserialize;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// Output format for emitted tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Markdown,
}

impl OutputFormat {
    pub fn as_str(&self) -> &'static str {
        match self {
            OutputFormat::Csv => "csv",
            OutputFormat::Markdown => "markdown",
        }
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "markdown" => Ok(OutputFormat::Markdown),
            other => Err(Error::config(format!(
                "unknown format '{other}' (expected csv or markdown)"
            ))),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum OneOrMany {
    One(f64),
    Many(Vec<f64>),
}

impl OneOrMany {
    fn into_vec(self) -> Vec<f64> {
        match self {
            OneOrMany::One(x) => vec![x],
            OneOrMany::Many(xs) => xs,
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum LevelsRaw {
    Text(String),
    Pair([u32; 2]),
    One(u32),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    example: String,
    method: Option<String>,
    alpha: OneOrMany,
    t: OneOrMany,
    levels: LevelsRaw,
    projection: Option<String>,
    h1_rule: Option<String>,
    dirac_mass: Option<String>,
    gh: Option<bool>,
    format: Option<String>,
    out: Option<PathBuf>,
    tau: Option<f64>,
    modes: Option<usize>,
}

/// Validated experiment description.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub kind: DataKind,
    pub method: Method,
    pub alphas: Vec<f64>,
    pub times: Vec<f64>,
    /// Inclusive dyadic level range; level k means 2^k cells.
    pub levels: (u32, u32),
    /// None keeps the per-kind default projection.
    pub projection: Option<Projection>,
    pub h1_rule: H1Rule,
    pub dirac_mass: DiracMass,
    pub with_gh: bool,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub tau: Option<f64>,
    pub modes: Option<usize>,
}

/// Parses a level range given as "lo:hi", "k", [lo, hi], or a bare level.
pub fn parse_levels(text: &str) -> Result<(u32, u32)> {
    let parse_one = |s: &str| -> Result<u32> {
        s.trim()
            .parse()
            .map_err(|_| Error::config(format!("bad level '{s}'")))
    };
    let (lo, hi) = match text.split_once(':') {
        Some((a, b)) => (parse_one(a)?, parse_one(b)?),
        None => {
            let k = parse_one(text)?;
            (k, k)
        }
    };
    check_levels(lo, hi)?;
    Ok((lo, hi))
}

fn check_levels(lo: u32, hi: u32) -> Result<()> {
    if lo < 2 || hi > 12 || lo > hi {
        return Err(Error::config(format!(
            "levels {lo}:{hi} outside the supported range 2..=12"
        )));
    }
    Ok(())
}

impl ExperimentConfig {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawConfig = serde_json::from_str(text)
            .map_err(|e| Error::config(format!("config parse: {e}")))?;
        Self::from_raw(raw)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::io(path.display().to_string(), e))?;
        Self::from_json_str(&text)
    }

    fn from_raw(raw: RawConfig) -> Result<Self> {
        let kind: DataKind = raw.example.parse()?;
        let method: Method = raw.method.as_deref().unwrap_or("lumped").parse()?;
        let alphas = raw.alpha.into_vec();
        if alphas.is_empty() {
            return Err(Error::config("alpha list is empty"));
        }
        for &a in &alphas {
            if !(a > 0.0 && a <= 1.0) {
                return Err(Error::config(format!("alpha = {a} outside (0, 1]")));
            }
        }
        let times = raw.t.into_vec();
        if times.is_empty() {
            return Err(Error::config("t list is empty"));
        }
        for &t in &times {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(Error::config(format!("t = {t} is not admissible")));
            }
        }
        let levels = match raw.levels {
            LevelsRaw::Text(s) => parse_levels(&s)?,
            LevelsRaw::Pair([lo, hi]) => {
                check_levels(lo, hi)?;
                (lo, hi)
            }
            LevelsRaw::One(k) => {
                check_levels(k, k)?;
                (k, k)
            }
        };
        let projection = raw
            .projection
            .as_deref()
            .map(Projection::from_str)
            .transpose()?;
        let h1_rule: H1Rule = raw.h1_rule.as_deref().unwrap_or("quarter").parse()?;
        let dirac_mass: DiracMass =
            raw.dirac_mass.as_deref().unwrap_or("consistent").parse()?;
        let format: OutputFormat = raw.format.as_deref().unwrap_or("csv").parse()?;
        if let Some(tau) = raw.tau {
            if !(tau > 0.0 && tau.is_finite()) {
                return Err(Error::config(format!("tau = {tau} not positive")));
            }
        }
        if raw.modes == Some(0) {
            return Err(Error::config("modes must be at least 1"));
        }
        Ok(ExperimentConfig {
            kind,
            method,
            alphas,
            times,
            levels,
            projection,
            h1_rule,
            dirac_mass,
            with_gh: raw.gh.unwrap_or(false),
            format,
            out: raw.out,
            tau: raw.tau,
            modes: raw.modes,
        })
    }

    /// One table spec per (alpha, t), in config order.
    pub fn table_specs(&self) -> Vec<TableSpec> {
        let mut specs = Vec::with_capacity(self.alphas.len() * self.times.len());
        for &alpha in &self.alphas {
            for &t in &self.times {
                let mut spec = TableSpec::new(self.kind, self.method, alpha, t, self.levels);
                if let Some(p) = self.projection {
                    spec.projection = p;
                }
                spec.h1_rule = self.h1_rule;
                spec.dirac_mass = self.dirac_mass;
                spec.with_gh = self.with_gh;
                spec.tau = self.tau;
                spec.modes = self.modes;
                specs.push(spec);
            }
        }
        specs
    }
}

/// Output directory used when a relative or missing path is given:
/// `FRACFEM_OUT` when set, the working directory otherwise.
pub fn default_out_dir() -> PathBuf {
    std::env::var_os("FRACFEM_OUT")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("."))
}
