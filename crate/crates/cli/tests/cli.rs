use std::path::Path;
use std::process::{Command, Output};

use fracwave::closed_form::g1;
use fracwave::{EvalPoint64, Order64};

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fracwave"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut r = csv::Reader::from_path(path).unwrap();
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(|f| f.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn eval_cauchy_center() {
    let o = run(&[
        "eval", "--alpha", "1.0", "--dim", "1", "--r", "0", "--t", "1", "--method", "closed",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "0.318309886183791\n");
}

#[test]
fn eval_origin_divergence_is_numerical_failure() {
    let o = run(&[
        "eval", "--alpha", "1.5", "--dim", "3", "--r", "0", "--t", "1", "--method", "closed",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("diverges at origin"));
}

#[test]
fn eval_integral_matches_closed() {
    let o = run(&[
        "eval", "--alpha", "1.5", "--dim", "1", "--r", "1", "--t", "1", "--method", "integral",
    ]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut fields = out.split_whitespace();
    let value: f64 = fields.next().unwrap().parse().unwrap();
    let est: f64 = fields.next().unwrap().parse().unwrap();
    let exact = g1(
        Order64::new(1.5).unwrap(),
        EvalPoint64::new(1.0, 1.0).unwrap(),
    );
    assert!((value - exact).abs() < 1e-6 && est < 1e-6);
}

#[test]
fn usage_errors_exit_two() {
    let closed_2d = run(&[
        "eval", "--alpha", "1.5", "--dim", "2", "--r", "1", "--t", "1", "--method", "closed",
    ]);
    assert_eq!(code(&closed_2d), 2);
    assert!(stderr(&closed_2d).contains("--method integral"));
    assert_eq!(
        code(&run(&[
            "eval", "--alpha", "2", "--dim", "1", "--r", "1", "--t", "1"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "eval", "--alpha", "1.5", "--dim", "4", "--r", "1", "--t", "1"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "eval", "--alpha", "1.5", "--dim", "1", "--r", "-1", "--t", "1"
        ])),
        2
    );
    assert_eq!(code(&run(&["eval", "--alpha", "1.5"])), 2);
}

#[test]
fn cauchy_three_d_is_flagged() {
    let o = run(&["eval", "--alpha", "1", "--dim", "3", "--r", "1", "--t", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("extrapolated"));
}

#[test]
fn profile_round_trips_bit_for_bit() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.csv");
    let o = run(&[
        "profile",
        "--alpha",
        "1.3",
        "--dim",
        "1",
        "--t",
        "0.7",
        "--rmin",
        "0",
        "--rmax",
        "4",
        "--points",
        "41",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let (header, rows) = read_csv(&path);
    assert_eq!(header, ["r", "value", "est_error"]);
    assert_eq!(rows.len(), 41);
    let alpha = Order64::new(1.3).unwrap();
    for w in rows.windows(2) {
        assert!(w[1][0] > w[0][0]);
    }
    for row in &rows {
        assert_eq!(row[1], g1(alpha, EvalPoint64::new(row[0], 0.7).unwrap()));
        assert_eq!(row[2], 0.0);
    }
    let raw = std::fs::read_to_string(&path).unwrap();
    assert!(!raw.contains('\r'));
}

#[test]
fn radial_and_time_profiles() {
    let dir = tempfile::tempdir().unwrap();
    // Radial 2D profile: signed, unlike a density.
    let p2 = dir.path().join("g2.csv");
    let o = run(&[
        "profile",
        "--alpha",
        "1.5",
        "--dim",
        "2",
        "--t",
        "1",
        "--rmin",
        "0.1",
        "--rmax",
        "3",
        "--points",
        "8",
        "--out",
        p2.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let (_, rows) = read_csv(&p2);
    assert!(rows.iter().any(|r| r[1] < 0.0) && rows.iter().any(|r| r[1] > 0.0));
    assert!(rows.iter().all(|r| r[2] > 0.0 && r[2] < 1e-6));

    // 3D profiles at three times: the maximum moves out linearly in t.
    let mut peaks = Vec::new();
    for t in ["0.2", "0.3", "0.4"] {
        let p = dir.path().join(format!("g3_{t}.csv"));
        let o = run(&[
            "profile",
            "--alpha",
            "1.5",
            "--dim",
            "3",
            "--t",
            t,
            "--rmin",
            "0.01",
            "--rmax",
            "1",
            "--points",
            "991",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code(&o), 0);
        let (_, rows) = read_csv(&p);
        let peak = rows
            .iter()
            .max_by(|a, b| a[1].partial_cmp(&b[1]).unwrap())
            .unwrap();
        peaks.push(peak[0] / t.parse::<f64>().unwrap());
    }
    assert!(peaks.windows(2).all(|w| (w[0] - w[1]).abs() < 0.02));

    // Time profiles at fixed radii.
    for r in ["0.3", "0.5", "0.7"] {
        let o = run(&[
            "profile",
            "--alpha",
            "1.5",
            "--dim",
            "3",
            "--fixed-r",
            r,
            "--tmin",
            "0.05",
            "--tmax",
            "3",
            "--points",
            "30",
        ]);
        assert_eq!(code(&o), 0);
        let out = stdout(&o);
        assert!(out.starts_with("t,value,est_error\n"));
        assert_eq!(out.lines().count(), 31);
    }
}

#[test]
fn velocity_curves() {
    let o = run(&[
        "velocity",
        "--dim",
        "3",
        "--alpha-min",
        "1.05",
        "--alpha-max",
        "1.95",
        "--steps",
        "91",
    ]);
    assert_eq!(code(&o), 0);
    let rows: Vec<(f64, f64)> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| {
            let (a, v) = l.split_once(',').unwrap();
            (a.parse().unwrap(), v.parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 91);
    let best = rows
        .iter()
        .max_by(|a, b| a.1.partial_cmp(&b.1).unwrap())
        .unwrap();
    assert!((best.0 - 1.575).abs() <= 0.02);

    let o = run(&[
        "velocity",
        "--dim",
        "1",
        "--alpha-min",
        "1",
        "--alpha-max",
        "1.9999",
        "--steps",
        "2",
    ]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[1], "1,0");
    let v: f64 = lines[2].split_once(',').unwrap().1.parse().unwrap();
    assert!((v - 1.0).abs() < 1e-3);

    let o = run(&[
        "velocity",
        "--dim",
        "1",
        "--alpha-min",
        "1.5",
        "--alpha-max",
        "1.5",
        "--steps",
        "1",
        "--which",
        "gravity",
    ]);
    let v: f64 = stdout(&o)
        .lines()
        .nth(1)
        .unwrap()
        .split_once(',')
        .unwrap()
        .1
        .parse()
        .unwrap();
    assert!((v - 1.5396).abs() < 1e-4);

    let o = run(&[
        "velocity",
        "--dim",
        "3",
        "--alpha-min",
        "1.2",
        "--alpha-max",
        "1.5",
        "--which",
        "gravity",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn crosscheck_reports() {
    for dim in ["1", "2", "3"] {
        let o = run(&[
            "crosscheck",
            "--alpha",
            "1.5",
            "--dim",
            dim,
            "--t",
            "1",
            "--points",
            "6",
        ]);
        assert_eq!(code(&o), 0, "{}", stdout(&o));
        assert!(stdout(&o).ends_with("PASS\n"));
    }
    let o = run(&[
        "crosscheck",
        "--alpha",
        "1.5",
        "--dim",
        "3",
        "--points",
        "6",
        "--tol",
        "1e-16",
    ]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("BREACH"));
}

#[test]
fn moments_constants() {
    for (a, t) in [("1.2", "0.5"), ("1.8", "4")] {
        let o = run(&[
            "moments", "--alpha", a, "--dim", "3", "--beta", "2", "--t", t,
        ]);
        assert_eq!(stdout(&o), "formula 0.0795774715459477\n");
        let o = run(&[
            "moments", "--alpha", a, "--dim", "3", "--beta", "1", "--t", t,
        ]);
        assert_eq!(stdout(&o), "formula 0\n");
    }
    let o = run(&[
        "moments",
        "--alpha",
        "1.5",
        "--dim",
        "1",
        "--beta",
        "1",
        "--check-numeric",
    ]);
    let out = stdout(&o);
    let rel: f64 = out
        .lines()
        .last()
        .unwrap()
        .strip_prefix("rel_diff ")
        .unwrap()
        .parse()
        .unwrap();
    assert!(rel < 1e-5);
    assert_eq!(
        code(&run(&[
            "moments", "--alpha", "1.2", "--dim", "1", "--beta", "1.5"
        ])),
        2
    );
    assert_eq!(
        code(&run(&[
            "moments", "--alpha", "1.2", "--dim", "2", "--beta", "0.5"
        ])),
        2
    );
}

#[test]
fn solve1d_delta_reproduces_kernel() {
    let dir = tempfile::tempdir().unwrap();
    let phi = dir.path().join("phi.csv");
    let out = dir.path().join("u.csv");
    let h = 0.05;
    let mut text = String::from("x,phi\n");
    for i in -60..=60 {
        let v = if i == 0 { 1.0 / h } else { 0.0 };
        text.push_str(&format!("{},{v}\n", i as f64 * h));
    }
    std::fs::write(&phi, text).unwrap();
    let o = run(&[
        "solve1d",
        "--alpha",
        "1.4",
        "--t",
        "1",
        "--phi",
        phi.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let (header, rows) = read_csv(&out);
    assert_eq!(header, ["x", "u"]);
    let alpha = Order64::new(1.4).unwrap();
    for row in rows {
        let g = g1(alpha, EvalPoint64::new(row[0].abs(), 1.0).unwrap());
        assert!((row[1] - g).abs() < 1e-12);
    }

    std::fs::write(&phi, "x,phi\n0,1\n0.1,oops\n").unwrap();
    let o = run(&[
        "solve1d",
        "--alpha",
        "1.4",
        "--t",
        "1",
        "--phi",
        phi.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
    std::fs::write(&phi, "x,phi\n0,1\n0.1,1\n0.5,1\n").unwrap();
    let o = run(&[
        "solve1d",
        "--alpha",
        "1.4",
        "--t",
        "1",
        "--phi",
        phi.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn config_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("fw.conf");
    std::fs::write(&cfg, "abs_tol = 1e-10\nrel_tol = 1e-10\nsigma = 0.6\n").unwrap();
    let args = [
        "profile",
        "--alpha",
        "1.5",
        "--dim",
        "2",
        "--t",
        "1",
        "--rmin",
        "0.2",
        "--rmax",
        "2",
        "--points",
        "6",
        "--config",
        cfg.to_str().unwrap(),
    ];
    let one = run_env(&args, &[("FRACWAVE_THREADS", "1")]);
    let four = run_env(&args, &[("FRACWAVE_THREADS", "4")]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);

    let o = run_env(
        &[
            "eval", "--alpha", "1.5", "--dim", "1", "--r", "1", "--t", "1",
        ],
        &[("FRACWAVE_THREADS", "many")],
    );
    assert_eq!(code(&o), 2);

    std::fs::write(&cfg, "speed = 11\n").unwrap();
    let o = run(&[
        "eval",
        "--alpha",
        "1.5",
        "--dim",
        "1",
        "--r",
        "1",
        "--t",
        "1",
        "--config",
        cfg.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("unknown key"));
}
