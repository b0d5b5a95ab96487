//! The `rotmap` command line.
//!
//! Exit codes: 0 on success, 1 when a checked property fails, 2 on
//! malformed input or bad parameters.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rotmap::adjacency::{ProductProperty, product_property_check, rotation_from_adjacency};
use rotmap::product::Factor;
use rotmap::shift::build_shift;
use rotmap::solver::{BacktrackOutcome, solve_backtracking, solve_matching};
use rotmap::spectrum::{DEFAULT_COMPARE_TOL, DEFAULT_JACOBI_TOL, Tolerances};
use rotmap::{FamilySpec, cartesian_rotation};

use crate::formats::{self, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_MALFORMED: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "rotmap", version, about = "Build, combine and check consistent rotation maps of regular graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cycle,
    Complete,
    #[value(alias = "kb")]
    CompleteBipartite,
    #[value(alias = "generalized-petersen")]
    Gp,
    K2,
    Hypercube,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Matching,
    Backtrack,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the rotation map of a family member
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        /// Number of vertices (cycle, complete), side size (complete-bipartite)
        /// or cycle length (gp)
        #[arg(long)]
        n: Option<usize>,
        /// Inner step of a generalized Petersen graph
        #[arg(long)]
        s: Option<usize>,
        /// Hypercube dimension
        #[arg(long)]
        dim: Option<usize>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Rotation map of the Cartesian product G x H (clouds are copies of G)
    Product {
        g: PathBuf,
        h: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check a rotation map; exit 0 if consistent, 1 if only valid, 2 if malformed
    Verify { rot: PathBuf },
    /// Read a rotation map off an adjacency matrix, row by row
    FromAdjacency {
        adj: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Find a consistent rotation map for a regular graph
    Solve {
        adj: PathBuf,
        #[arg(long, value_enum, default_value = "matching")]
        method: Method,
        /// Node budget for the backtracking search
        #[arg(long, default_value_t = 10_000_000)]
        budget: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write the dart permutation of the shift operator
    Shift {
        rot: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print the adjacency spectrum, or check the product properties of two graphs
    Spectrum {
        adj: PathBuf,
        adj2: Option<PathBuf>,
        /// Jacobi stopping tolerance on the off-diagonal norm
        #[arg(long, default_value_t = DEFAULT_JACOBI_TOL, value_parser = positive)]
        tol: f64,
        /// Allowed eigenvalue deviation when comparing spectra
        #[arg(long, default_value_t = DEFAULT_COMPARE_TOL, value_parser = non_negative)]
        compare_tol: f64,
    },
    /// Export a rotation map as DOT or JSON
    Export {
        #[arg(long, value_enum)]
        format: ExportFormat,
        rot: PathBuf,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn positive(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x > 0.0 => Ok(x),
        _ => Err(format!("expected a finite number > 0, found {s:?}")),
    }
}

fn non_negative(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(x) if x.is_finite() && x >= 0.0 => Ok(x),
        _ => Err(format!("expected a finite number >= 0, found {s:?}")),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: FormatError },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Graph(#[from] rotmap::Error),
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_owned(), source })
}

fn load<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, FormatError>) -> Result<T, CliError> {
    parse(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Write { path: path.to_owned(), source }),
        None => Ok(stdout.write_all(text.as_bytes())?),
    }
}

fn family_spec(family: Family, n: Option<usize>, s: Option<usize>, dim: Option<usize>) -> Result<FamilySpec, CliError> {
    let need = |v: Option<usize>, flag: &str| {
        v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for family {family:?}").to_lowercase()))
    };
    Ok(match family {
        Family::Cycle => FamilySpec::Cycle { n: need(n, "n")? },
        Family::Complete => FamilySpec::Complete { n: need(n, "n")? },
        Family::CompleteBipartite => FamilySpec::CompleteBipartite { n: need(n, "n")? },
        Family::Gp => FamilySpec::GeneralizedPetersen { n: need(n, "n")?, s: need(s, "s")? },
        Family::K2 => FamilySpec::K2,
        Family::Hypercube => FamilySpec::Hypercube { dimension: need(dim, "dim")? },
    })
}

/// Prints eigenvalues with 12 decimals, folding tiny values onto `0`.
fn format_eigenvalue(x: f64) -> String {
    let x = if x.abs() < 5e-13 { 0.0 } else { x };
    format!("{x:.12}")
}

fn execute(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    match cli.command {
        Command::Generate { family, n, s, dim, out } => {
            let r = family_spec(family, n, s, dim)?.build()?;
            emit(&formats::write_rot(&r), out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Product { g, h, out } => {
            let (rg, rh) = (load(&g, formats::parse_rot)?, load(&h, formats::parse_rot)?);
            let p = cartesian_rotation(&rg, &rh)?;
            writeln!(
                stderr,
                "{} clouds of {} vertices ({} vertices, degree {})",
                p.partition.cloud_count(),
                p.partition.cloud_size(),
                p.map.num_vertices(),
                p.map.degree()
            )?;
            for factor in &p.inconsistent_factors {
                let (name, path) = match factor {
                    Factor::Inner => ("first", &g),
                    Factor::Outer => ("second", &h),
                };
                writeln!(
                    stderr,
                    "warning: {name} factor {} is not consistent; the product may not be",
                    path.display()
                )?;
            }
            emit(&formats::write_rot(&p.map), out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Verify { rot } => {
            let r = load(&rot, formats::parse_rot_matrix)?;
            let report = r.validate();
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            writeln!(stdout, "vertices: {}", r.num_vertices())?;
            writeln!(stdout, "degree: {}", r.degree())?;
            writeln!(stdout, "valid map: {}", yes_no(report.is_valid_map))?;
            writeln!(stdout, "consistent: {}", yes_no(report.is_consistent))?;
            for v in &report.violations {
                writeln!(stdout, "{v}")?;
            }
            Ok(match (report.is_valid_map, report.is_consistent) {
                (true, true) => EXIT_OK,
                (true, false) => EXIT_PROPERTY_FAILURE,
                _ => EXIT_MALFORMED,
            })
        }
        Command::FromAdjacency { adj, out } => {
            let a = load(&adj, formats::parse_adj)?;
            let r = rotation_from_adjacency(&a)?;
            emit(&formats::write_rot(&r), out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Solve { adj, method, budget, out } => {
            let a = load(&adj, formats::parse_adj)?;
            let r = match method {
                Method::Matching => solve_matching(&a)?,
                Method::Backtrack => match solve_backtracking(&a, budget)? {
                    BacktrackOutcome::Solved(r) => r,
                    BacktrackOutcome::Exhausted { explored } => {
                        writeln!(stderr, "backtracking budget exhausted after {explored} nodes")?;
                        return Ok(EXIT_PROPERTY_FAILURE);
                    }
                },
            };
            emit(&formats::write_rot(&r), out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Shift { rot, out } => {
            let r = load(&rot, formats::parse_rot)?;
            if !r.is_consistent() {
                writeln!(stderr, "warning: {} is not consistent", rot.display())?;
            }
            let s = build_shift(&r)?;
            emit(&formats::write_perm(&s), out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
        Command::Spectrum { adj, adj2, tol, compare_tol } => {
            let a = load(&adj, formats::parse_adj)?;
            let Some(adj2) = adj2 else {
                for x in a.spectrum(tol)?.values() {
                    writeln!(stdout, "{}", format_eigenvalue(*x))?;
                }
                return Ok(EXIT_OK);
            };
            let b = load(&adj2, formats::parse_adj)?;
            let r = product_property_check(&a, &b, Tolerances { jacobi: tol, compare: compare_tol })?;
            let verdict = |p| if r.holds(p) { "pass" } else { "FAIL" };
            writeln!(
                stdout,
                "vertices: {} (expected {}) {}",
                r.vertex_count.1,
                r.vertex_count.0,
                verdict(ProductProperty::VertexCount)
            )?;
            let observed = r.regularity.1.map_or_else(|| "not regular".to_owned(), |d| d.to_string());
            writeln!(
                stdout,
                "regularity: {observed} (expected {}) {}",
                r.regularity.0,
                verdict(ProductProperty::Regularity)
            )?;
            writeln!(
                stdout,
                "edges: {} (expected {}) {}",
                r.edge_count.1,
                r.edge_count.0,
                verdict(ProductProperty::EdgeCount)
            )?;
            let deviation = r.spectrum_deviation.map_or_else(|| "length mismatch".to_owned(), |d| format!("{d:.3e}"));
            writeln!(
                stdout,
                "spectrum: max deviation {deviation} (tolerance {:e}) {}",
                r.spectrum_tolerance,
                verdict(ProductProperty::SpectrumAdditivity)
            )?;
            Ok(if r.all_hold() { EXIT_OK } else { EXIT_PROPERTY_FAILURE })
        }
        Command::Export { format, rot, out } => {
            let r = load(&rot, formats::parse_rot)?;
            let text = match format {
                ExportFormat::Dot => formats::write_dot(&r).map_err(|source| CliError::Parse { path: rot, source })?,
                ExportFormat::Json => formats::write_json(&r),
            };
            emit(&text, out.as_deref(), stdout)?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    match execute(cli, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_MALFORMED
        }
    }
}
