//! Command-line interface: convergence tables from JSON configs,
//! pointwise Mittag-Leffler evaluation, the cached fine reference for the
//! variable-coefficient example, and log-log plot data.

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use fracfem::config::{default_out_dir, parse_levels, ExperimentConfig, OutputFormat};
use fracfem::exact::DataKind;
use fracfem::specfun::{mittag_leffler, MlParams};
use fracfem::tables::{
    build_table, build_table_vs_reference, load_or_build_reference, reference_cache_path,
    to_csv, to_markdown, ConvergenceTable, Method, TableSpec,
};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "fracfem",
    version,
    about = "P1 finite elements for time-fractional diffusion on the unit interval"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run convergence tables described by a JSON config
    Table(TableArgs),
    /// Evaluate the two-parameter Mittag-Leffler function
    Ml(MlArgs),
    /// Build (and cache) the fine reference solution for example e
    ReferenceE {
        /// Rebuild even when a valid cache exists
        #[arg(long)]
        force: bool,
    },
    /// Emit log2(1/h) vs log10(error) pairs for plotting
    Plotdata {
        /// JSON experiment config
        #[arg(long)]
        config: PathBuf,
    },
}

#[derive(Args)]
struct TableArgs {
    /// JSON experiment config
    #[arg(long)]
    config: PathBuf,
    /// Override the config's example (a, b, c1, c2, c3, d, e)
    #[arg(long)]
    example: Option<String>,
    /// Override the method (galerkin, lumped, l1)
    #[arg(long)]
    method: Option<String>,
    /// Override with a single fractional order
    #[arg(long)]
    alpha: Option<f64>,
    /// Override with a single evaluation time
    #[arg(long)]
    t: Option<f64>,
    /// Override the level range, e.g. 3:7
    #[arg(long)]
    levels: Option<String>,
    /// Override the output format (csv, markdown)
    #[arg(long)]
    format: Option<String>,
    /// Override the output path (stdout when absent everywhere)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MlArgs {
    /// First parameter, alpha > 0
    #[arg(long)]
    alpha: f64,
    /// Second parameter (default 1)
    #[arg(long, default_value_t = 1.0)]
    beta: f64,
    /// Single evaluation point
    #[arg(long, allow_negative_numbers = true)]
    z: Option<f64>,
    /// Evaluation grid zmin:zmax:n (inclusive endpoints)
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err:#}");
        std::process::exit(exit_code(&err));
    }
}

fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<fracfem::Error>() {
            return match e {
                fracfem::Error::Config { .. } | fracfem::Error::Domain { .. } => 2,
                fracfem::Error::Invariant { .. } => 3,
                fracfem::Error::Io { .. } => 1,
            };
        }
    }
    1
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Table(args) => cmd_table(args),
        Cmd::Ml(args) => cmd_ml(args),
        Cmd::ReferenceE { force } => cmd_reference(force),
        Cmd::Plotdata { config } => cmd_plotdata(&config),
    }
}

fn load_with_overrides(args: &TableArgs) -> Result<ExperimentConfig> {
    let mut cfg = ExperimentConfig::from_path(&args.config)
        .with_context(|| format!("loading {}", args.config.display()))?;
    if let Some(example) = &args.example {
        cfg.kind = DataKind::from_str(example)?;
    }
    if let Some(method) = &args.method {
        cfg.method = Method::from_str(method)?;
    }
    if let Some(alpha) = args.alpha {
        cfg.alphas = vec![alpha];
    }
    if let Some(t) = args.t {
        cfg.times = vec![t];
    }
    if let Some(levels) = &args.levels {
        cfg.levels = parse_levels(levels)?;
    }
    if let Some(format) = &args.format {
        cfg.format = OutputFormat::from_str(format)?;
    }
    if let Some(out) = &args.out {
        cfg.out = Some(out.clone());
    }
    Ok(cfg)
}

fn build_tables(cfg: &ExperimentConfig) -> Result<Vec<(TableSpec, ConvergenceTable)>> {
    let reference = if cfg.kind == DataKind::E {
        Some(load_or_build_reference(&default_out_dir(), false)?)
    } else {
        None
    };
    let mut tables = Vec::new();
    for spec in cfg.table_specs() {
        let table = match &reference {
            Some(r) => build_table_vs_reference(&spec, r)?,
            None => build_table(&spec)?,
        };
        tables.push((spec, table));
    }
    Ok(tables)
}

fn table_comment(table: &ConvergenceTable) -> String {
    format!(
        "# example {} method {} alpha {} t {}",
        table.kind, table.method, table.alpha, table.t
    )
}

/// Output file for one table: the configured path, with `_a{alpha}_t{t}`
/// appended before the extension when several tables share a run.
fn table_path(base: &Path, table: &ConvergenceTable, many: bool) -> PathBuf {
    let resolved = if base.is_absolute() {
        base.to_path_buf()
    } else {
        default_out_dir().join(base)
    };
    if !many {
        return resolved;
    }
    let stem = resolved
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "table".into());
    let ext = resolved
        .extension()
        .map(|s| format!(".{}", s.to_string_lossy()))
        .unwrap_or_default();
    resolved.with_file_name(format!(
        "{stem}_a{}_t{}{ext}",
        table.alpha, table.t
    ))
}

fn cmd_table(args: TableArgs) -> Result<()> {
    let cfg = load_with_overrides(&args)?;
    let tables = build_tables(&cfg)?;
    let many = tables.len() > 1;
    for (i, (_, table)) in tables.iter().enumerate() {
        let body = match cfg.format {
            OutputFormat::Csv => to_csv(table),
            OutputFormat::Markdown => to_markdown(table),
        };
        match &cfg.out {
            Some(base) => {
                let path = table_path(base, table, many);
                if let Some(parent) = path.parent() {
                    std::fs::create_dir_all(parent)
                        .with_context(|| format!("creating {}", parent.display()))?;
                }
                std::fs::write(&path, &body)
                    .with_context(|| format!("writing {}", path.display()))?;
                log::info!("wrote {}", path.display());
            }
            None => {
                if i > 0 {
                    println!();
                }
                if cfg.format == OutputFormat::Csv {
                    println!("{}", table_comment(table));
                }
                print!("{body}");
            }
        }
    }
    Ok(())
}

fn parse_grid(text: &str) -> Result<(f64, f64, usize)> {
    let parts: Vec<&str> = text.split(':').collect();
    if parts.len() != 3 {
        bail!(fracfem::Error::config(format!(
            "grid '{text}' should be zmin:zmax:n"
        )));
    }
    let zmin: f64 = parts[0]
        .parse()
        .map_err(|_| fracfem::Error::config(format!("bad grid start '{}'", parts[0])))?;
    let zmax: f64 = parts[1]
        .parse()
        .map_err(|_| fracfem::Error::config(format!("bad grid end '{}'", parts[1])))?;
    let n: usize = parts[2]
        .parse()
        .map_err(|_| fracfem::Error::config(format!("bad grid count '{}'", parts[2])))?;
    if n == 0 {
        bail!(fracfem::Error::config("grid needs at least one point"));
    }
    if n > 1 && !(zmax > zmin) {
        bail!(fracfem::Error::config(format!(
            "grid '{text}' needs zmin < zmax"
        )));
    }
    Ok((zmin, zmax, n))
}

fn cmd_ml(args: MlArgs) -> Result<()> {
    let params = MlParams::new(args.alpha, args.beta)?;
    let points: Vec<f64> = match (args.z, &args.grid) {
        (Some(z), None) => vec![z],
        (None, Some(grid)) => {
            let (zmin, zmax, n) = parse_grid(grid)?;
            (0..n)
                .map(|i| {
                    if n == 1 {
                        zmin
                    } else {
                        zmin + (zmax - zmin) * i as f64 / (n - 1) as f64
                    }
                })
                .collect()
        }
        _ => bail!(fracfem::Error::config(
            "pass exactly one of --z or --grid"
        )),
    };
    let mut out = String::from("z,value\n");
    for z in points {
        let value = mittag_leffler(params, z)?;
        writeln!(out, "{z:.16e},{value:.16e}")?;
    }
    print!("{out}");
    Ok(())
}

fn cmd_reference(force: bool) -> Result<()> {
    let dir = default_out_dir();
    let run = load_or_build_reference(&dir, force)?;
    let path = reference_cache_path(&dir);
    if let Some(gap) = run.eig_gap {
        log::info!("stepping-vs-eigenexpansion gap {gap:.3e}");
    }
    println!("{}", path.display());
    Ok(())
}

fn cmd_plotdata(config: &Path) -> Result<()> {
    let cfg = ExperimentConfig::from_path(config)
        .with_context(|| format!("loading {}", config.display()))?;
    let tables = build_tables(&cfg)?;
    for (i, (_, table)) in tables.iter().enumerate() {
        if i > 0 {
            println!();
        }
        println!("{}", table_comment(table));
        println!("curve,log2_inv_h,log10_error");
        let emit = |curve: &str, pairs: Vec<(u32, f64)>| {
            for (level, err) in pairs {
                println!("{curve},{level},{:.16e}", err.log10());
            }
        };
        emit(
            "l2",
            table.rows.iter().map(|r| (r.level, r.l2)).collect(),
        );
        emit(
            "h1",
            table.rows.iter().map(|r| (r.level, r.h1)).collect(),
        );
        let gh: Vec<(u32, f64)> = table
            .rows
            .iter()
            .filter_map(|r| r.gh.map(|g| (r.level, g)))
            .collect();
        if !gh.is_empty() {
            emit("gh", gh);
        }
    }
    Ok(())
}
