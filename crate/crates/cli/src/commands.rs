use std::path::Path;
use std::process::ExitCode;

use fracwave::analysis::{
    gravity_center_velocity, moment_1d, moment_1d_numeric, moment_3d, moment_3d_numeric,
    phase_velocity, VelocityCurve,
};
use fracwave::closed_form::{g1, g3};
use fracwave::mellin_barnes::g_mellin_barnes;
use fracwave::quadrature::{g_integral, solve_ivp_1d};
use fracwave::{Dimension, EvalPoint64, Order64};
use rayon::prelude::*;

use crate::args::{
    CrosscheckArgs, EvalArgs, Method, MomentsArgs, ProfileArgs, Solve1dArgs, VelocityArgs, Which,
};
use crate::config::Settings;
use crate::fail::{CliResult, Failure};
use crate::format::{fmt_g, write_csv};

#[derive(Debug, Clone, Copy)]
struct Sample {
    value: f64,
    est_error: f64,
}

fn default_method(n: Dimension) -> Method {
    if n == Dimension::Two {
        Method::Integral
    } else {
        Method::Closed
    }
}

fn warn_extrapolated(alpha: Order64, n: Dimension) {
    if alpha.is_cauchy() && n == Dimension::Three {
        eprintln!(
            "warning: alpha = 1 with n = 3 lies outside the 1 < alpha < 2 range of the \
             3D analysis; values are extrapolated"
        );
    }
}

fn evaluate(
    alpha: Order64,
    n: Dimension,
    p: EvalPoint64,
    method: Method,
    s: &Settings,
) -> CliResult<Sample> {
    let exact = |value| Sample {
        value,
        est_error: 0.0,
    };
    Ok(match method {
        Method::Closed => match n {
            Dimension::One => exact(g1(alpha, p)),
            Dimension::Three => exact(g3(alpha, p)?),
            Dimension::Two => {
                return Err(Failure::Usage(
                    "no closed form for n = 2; its route is the J0 Fourier-Bessel integral \
                     (--method integral) or the contour integral (--method mellin)"
                        .into(),
                ))
            }
        },
        Method::Integral => {
            let q = g_integral(alpha, n, p, &s.quad)?;
            Sample {
                value: q.value,
                est_error: q.est_error,
            }
        }
        Method::Mellin => {
            let q = g_mellin_barnes(alpha, n, p, &s.contour(alpha, n))?;
            Sample {
                value: q.value,
                est_error: q.est_error,
            }
        }
    })
}

pub fn eval(a: &EvalArgs, s: &Settings) -> CliResult<ExitCode> {
    let alpha = Order64::new(a.alpha)?;
    let n = Dimension::new(a.dim)?;
    let p = EvalPoint64::new(a.r, a.t)?;
    let method = a.method.unwrap_or(default_method(n));
    warn_extrapolated(alpha, n);
    let v = evaluate(alpha, n, p, method, s)?;
    if method == Method::Closed {
        println!("{}", fmt_g(v.value, 15));
    } else {
        println!("{} {}", fmt_g(v.value, 15), fmt_g(v.est_error, 3));
    }
    Ok(ExitCode::SUCCESS)
}

fn linspace(lo: f64, hi: f64, k: usize) -> Vec<f64> {
    match k {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..k)
            .map(|i| lo + (hi - lo) * i as f64 / (k - 1) as f64)
            .collect(),
    }
}

fn logspace(lo: f64, hi: f64, k: usize) -> Vec<f64> {
    linspace(lo.ln(), hi.ln(), k)
        .into_iter()
        .map(f64::exp)
        .collect()
}

pub fn profile(a: &ProfileArgs, s: &Settings) -> CliResult<ExitCode> {
    let alpha = Order64::new(a.alpha)?;
    let n = Dimension::new(a.dim)?;
    let method = a.method.unwrap_or(default_method(n));
    if a.points == 0 {
        return Err(Failure::Usage("--points must be at least 1".into()));
    }
    let (column, points): (&str, Vec<EvalPoint64>) = match (a.t, a.fixed_r) {
        (Some(t), None) => {
            let (lo, hi) = (a.rmin.unwrap(), a.rmax.unwrap());
            if !(lo <= hi) {
                return Err(Failure::Usage("--rmin must not exceed --rmax".into()));
            }
            let pts = linspace(lo, hi, a.points)
                .into_iter()
                .map(|r| EvalPoint64::new(r, t));
            ("r", pts.collect::<Result<_, _>>()?)
        }
        (None, Some(r)) => {
            let (lo, hi) = (a.tmin.unwrap(), a.tmax.unwrap());
            if !(lo <= hi) {
                return Err(Failure::Usage("--tmin must not exceed --tmax".into()));
            }
            let pts = linspace(lo, hi, a.points)
                .into_iter()
                .map(|t| EvalPoint64::new(r, t));
            ("t", pts.collect::<Result<_, _>>()?)
        }
        _ => {
            return Err(Failure::Usage(
                "give either --t with --rmin/--rmax or --fixed-r with --tmin/--tmax".into(),
            ))
        }
    };
    warn_extrapolated(alpha, n);
    let rows = points
        .par_iter()
        .map(|&p| {
            let v = evaluate(alpha, n, p, method, s)?;
            let x = if column == "r" { p.r() } else { p.t() };
            Ok(vec![x, v.value, v.est_error])
        })
        .collect::<CliResult<Vec<_>>>()?;
    write_csv(a.out.as_deref(), &[column, "value", "est_error"], &rows)?;
    Ok(ExitCode::SUCCESS)
}

pub fn velocity(a: &VelocityArgs) -> CliResult<ExitCode> {
    let n = Dimension::new(a.dim)?;
    if a.steps == 0 || !(a.alpha_min <= a.alpha_max) {
        return Err(Failure::Usage(
            "need --steps >= 1 and --alpha-min <= --alpha-max".into(),
        ));
    }
    let alphas = linspace(a.alpha_min, a.alpha_max, a.steps);
    let samples = alphas
        .par_iter()
        .map(|&x| {
            let alpha = Order64::new(x)?;
            let v = match (a.which, n) {
                (Which::Phase, _) => phase_velocity(alpha, n)?,
                (Which::Gravity, Dimension::One) => gravity_center_velocity(alpha)?,
                (Which::Gravity, _) => {
                    return Err(Failure::Usage(
                        "gravity-center velocity needs --dim 1".into(),
                    ))
                }
            };
            Ok((x, v))
        })
        .collect::<CliResult<Vec<_>>>()?;
    let curve = VelocityCurve::new(samples)?;
    let rows: Vec<Vec<f64>> = curve.samples().iter().map(|&(x, v)| vec![x, v]).collect();
    write_csv(a.out.as_deref(), &["alpha", "v"], &rows)?;
    Ok(ExitCode::SUCCESS)
}

pub fn crosscheck(a: &CrosscheckArgs, s: &Settings) -> CliResult<ExitCode> {
    let alpha = Order64::new(a.alpha)?;
    let n = Dimension::new(a.dim)?;
    if !(a.rmin > 0.0 && a.rmin <= a.rmax) || a.points == 0 {
        return Err(Failure::Usage(
            "need 0 < --rmin <= --rmax and --points >= 1".into(),
        ));
    }
    let open = !alpha.is_cauchy();
    let mut routes = Vec::new();
    if n != Dimension::Two {
        routes.push(Method::Closed);
    }
    if open || n == Dimension::One {
        routes.push(Method::Integral);
    }
    if open {
        routes.push(Method::Mellin);
    }
    if routes.len() < 2 {
        return Err(Failure::Usage(format!(
            "only one route is available for alpha = {}, n = {}",
            a.alpha,
            n.n()
        )));
    }
    warn_extrapolated(alpha, n);
    let radii = logspace(a.rmin, a.rmax, a.points);
    let table = radii
        .par_iter()
        .map(|&r| {
            let p = EvalPoint64::new(r, a.t)?;
            routes
                .iter()
                .map(|&m| evaluate(alpha, n, p, m, s))
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;

    let name = |m: Method| match m {
        Method::Closed => "closed",
        Method::Integral => "integral",
        Method::Mellin => "mellin",
    };
    println!(
        "alpha = {}, n = {}, t = {}, {} points",
        a.alpha,
        n.n(),
        a.t,
        a.points
    );
    let mut ok = true;
    for i in 0..routes.len() {
        for j in i + 1..routes.len() {
            let (mut max_abs, mut max_rel, mut pass) = (0.0f64, 0.0f64, true);
            for row in &table {
                let (u, v) = (row[i], row[j]);
                let d = (u.value - v.value).abs();
                max_abs = max_abs.max(d);
                max_rel = max_rel.max(d / u.value.abs().max(v.value.abs()));
                // Without a closed form the two estimates are the only yardstick.
                let limit = if n == Dimension::Two {
                    u.est_error + v.est_error
                } else {
                    a.tol
                };
                pass &= d <= limit;
            }
            ok &= pass;
            println!(
                "{}-{}: max_abs {} max_rel {} {}",
                name(routes[i]),
                name(routes[j]),
                fmt_g(max_abs, 3),
                fmt_g(max_rel, 3),
                if pass { "ok" } else { "BREACH" }
            );
        }
    }
    println!("{}", if ok { "PASS" } else { "FAIL" });
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

pub fn moments(a: &MomentsArgs) -> CliResult<ExitCode> {
    let alpha = Order64::new(a.alpha)?;
    let (formula, numeric): (fn(_, _, _) -> _, fn(_, _, _) -> _) = match a.dim {
        1 => (moment_1d::<f64>, moment_1d_numeric::<f64>),
        3 => (moment_3d::<f64>, moment_3d_numeric::<f64>),
        d => {
            return Err(Failure::Usage(format!(
                "moments need --dim 1 or 3, got {d}"
            )))
        }
    };
    let f = formula(alpha, a.beta, a.t)?;
    println!("formula {}", fmt_g(f, 15));
    if a.check_numeric {
        let v = numeric(alpha, a.beta, a.t)?;
        println!("numeric {}", fmt_g(v, 15));
        if f == 0.0 {
            println!("abs_diff {}", fmt_g(v.abs(), 3));
        } else {
            println!("rel_diff {}", fmt_g((v / f - 1.0).abs(), 3));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read_phi(path: &Path) -> CliResult<Vec<(f64, f64)>> {
    let bad = |what: String| Failure::Usage(format!("{}: {what}", path.display()));
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| bad(e.to_string()))?;
    let mut out = Vec::new();
    for (i, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| bad(e.to_string()))?;
        if rec.len() != 2 {
            return Err(bad(format!(
                "row {} has {} columns, expected 2",
                i + 1,
                rec.len()
            )));
        }
        let num = |k: usize| {
            rec[k]
                .parse::<f64>()
                .map_err(|_| bad(format!("row {}: `{}` is not a number", i + 1, &rec[k])))
        };
        out.push((num(0)?, num(1)?));
    }
    Ok(out)
}

pub fn solve1d(a: &Solve1dArgs) -> CliResult<ExitCode> {
    let alpha = Order64::new(a.alpha)?;
    let phi = read_phi(&a.phi)?;
    let grid: Vec<f64> = phi.iter().map(|s| s.0).collect();
    let u = solve_ivp_1d(alpha, &phi, a.t, &grid)?;
    let rows: Vec<Vec<f64>> = u.iter().map(|&(x, v)| vec![x, v]).collect();
    write_csv(a.out.as_deref(), &["x", "u"], &rows)?;
    Ok(ExitCode::SUCCESS)
}

pub fn dispatch(cmd: &crate::args::Command, s: &Settings) -> CliResult<ExitCode> {
    use crate::args::Command as C;
    match cmd {
        C::Eval(a) => eval(a, s),
        C::Profile(a) => profile(a, s),
        C::Velocity(a) => velocity(a),
        C::Crosscheck(a) => crosscheck(a, s),
        C::Moments(a) => moments(a),
        C::Solve1d(a) => solve1d(a),
    }
}
