//! `capmap`: logarithmic capacity, outer conformal centers and exterior-map
//! grids of triangles, plus the half-disk example.

mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;

#[derive(Debug, Parser)]
#[command(name = "capmap", version, about = "Capacity and conformal centers of triangles")]
pub struct Cli {
    #[command(flatten)]
    pub run: RunArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Absolute quadrature tolerance per path segment.
    #[arg(long, global = true, value_parser = real_arg)]
    pub tol: Option<f64>,
    /// Relative quadrature tolerance.
    #[arg(long, global = true, value_parser = real_arg)]
    pub rel_tol: Option<f64>,
    /// Contour radius for Laurent extraction, in (0.05, 1).
    #[arg(long, global = true, default_value = "0.5", value_parser = real_arg)]
    pub radius: f64,
    /// Initial trapezoid node count (power of two, at least 64); doubled until stable.
    #[arg(long, global = true, default_value_t = 512)]
    pub nodes: usize,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    pub json: bool,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Read apex angles in degrees.
    #[arg(long, global = true)]
    pub degrees: bool,
    /// Accept apex angles within 0.05 of 0 or π.
    #[arg(long, global = true)]
    pub unguarded: bool,
}

/// Which triangle to work on.
#[derive(Debug, Clone, Args)]
pub struct Shape {
    /// Isosceles triangle with unit legs and this apex angle.
    #[arg(long, value_parser = real_arg, allow_hyphen_values = true)]
    pub apex: Option<f64>,
    /// Side lengths a b c (a is opposite the first vertex). Accepts forms like sqrt3 or 2/sqrt(3).
    #[arg(long, num_args = 3, value_names = ["A", "B", "C"], value_parser = real_arg, allow_hyphen_values = true)]
    pub sides: Option<Vec<f64>>,
    /// Vertices as x,y pairs.
    #[arg(long, num_args = 3, value_names = ["X1,Y1", "X2,Y2", "X3,Y3"], value_parser = point_arg, allow_hyphen_values = true)]
    pub vertices: Option<Vec<Complex<f64>>>,
    /// The triangle with vertices 0, 1, i.
    #[arg(long)]
    pub unit_legs_right: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Logarithmic capacity from Haegi's formula.
    Capacity {
        #[command(flatten)]
        shape: Shape,
        /// Also extract κ from the Schwarz–Christoffel map.
        #[arg(long)]
        verify_sc: bool,
    },
    /// Outer conformal center and capacity from the exterior map.
    Center {
        #[command(flatten)]
        shape: Shape,
        /// For the right isosceles triangle also evaluate the F₁ expression for the center.
        #[arg(long)]
        closed_form: bool,
    },
    /// Inner and outer data of the upper half-disk.
    Halfdisk {
        #[arg(long)]
        inner: bool,
        #[arg(long)]
        outer: bool,
    },
    /// Apex angle of the isosceles triangle with the largest capacity.
    OptimizeKappa,
    /// Images of concentric circles and rays under the exterior map.
    MapGrid {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 10)]
        circles: usize,
        #[arg(long, default_value_t = 24)]
        rays: usize,
        #[arg(long, default_value_t = 512)]
        samples: usize,
    },
    /// Exponents and prevertices of the exterior map.
    Prevertices {
        #[command(flatten)]
        shape: Shape,
    },
}

fn real_arg(s: &str) -> Result<f64, String> {
    input::parse_real(s)
}

fn point_arg(s: &str) -> Result<Complex<f64>, String> {
    input::parse_point(s)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("capmap: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
