use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Fundamental solutions of the fractional wave equation, 1 <= alpha < 2.
///
/// Exit status: 0 ok, 1 cross-check tolerance breached, 2 invalid input,
/// 3 numerical failure. FRACWAVE_THREADS caps the worker threads.
#[derive(Debug, Parser)]
#[command(name = "fracwave", version)]
pub struct Cli {
    /// key = value file overriding quadrature and contour defaults.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate G_{alpha,n}(r, t) at one point.
    Eval(EvalArgs),
    /// Radial profile at fixed t, or time profile at fixed r, as CSV.
    Profile(ProfileArgs),
    /// Phase or gravity-center velocity over a range of orders, as CSV.
    Velocity(VelocityArgs),
    /// Compare every available route on a log grid in r.
    Crosscheck(CrosscheckArgs),
    /// Moment formulas, optionally against numerical integration.
    Moments(MomentsArgs),
    /// Solve the 1D initial-value problem for a sampled displacement.
    Solve1d(Solve1dArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Integral,
    Mellin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Phase,
    Gravity,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long)]
    pub dim: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub r: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub t: f64,
    /// Defaults to `closed` for n = 1, 3 and `integral` for n = 2.
    #[arg(long, value_enum)]
    pub method: Option<Method>,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long)]
    pub dim: u32,
    /// Time of a radial profile.
    #[arg(long, requires_all = ["rmin", "rmax"], conflicts_with = "fixed_r")]
    pub t: Option<f64>,
    #[arg(long)]
    pub rmin: Option<f64>,
    #[arg(long)]
    pub rmax: Option<f64>,
    /// Radius of a time profile.
    #[arg(long, requires_all = ["tmin", "tmax"])]
    pub fixed_r: Option<f64>,
    #[arg(long)]
    pub tmin: Option<f64>,
    #[arg(long)]
    pub tmax: Option<f64>,
    #[arg(long, default_value_t = 101)]
    pub points: usize,
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VelocityArgs {
    #[arg(long)]
    pub dim: u32,
    #[arg(long)]
    pub alpha_min: f64,
    #[arg(long)]
    pub alpha_max: f64,
    /// Number of orders, endpoints included.
    #[arg(long, default_value_t = 91)]
    pub steps: usize,
    #[arg(long, value_enum, default_value_t = Which::Phase)]
    pub which: Which,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub dim: u32,
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    #[arg(long, default_value_t = 0.1)]
    pub rmin: f64,
    #[arg(long, default_value_t = 10.0)]
    pub rmax: f64,
    /// Absolute tolerance for pairs involving the closed form.
    #[arg(long, default_value_t = 1e-6)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct MomentsArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub dim: u32,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub t: f64,
    #[arg(long)]
    pub check_numeric: bool,
}

#[derive(Debug, Args)]
pub struct Solve1dArgs {
    #[arg(long)]
    pub alpha: f64,
    #[arg(long)]
    pub t: f64,
    /// Two-column CSV `x,phi` on a uniform grid, with header.
    #[arg(long)]
    pub phi: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}
