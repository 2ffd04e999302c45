//! `--config` files: `key = value` lines, `#` comments.
//!
//! Keys: `abs_tol`, `rel_tol`, `max_lobes`, `accel_order`, `panel_rule`
//! (`gk15` or `gl16`) for the quadrature route; `sigma`, `y_max`, `step_tol`
//! for the contour route.

use std::path::Path;

use fracwave::quadrature::PanelRule;
use fracwave::{ContourConfig64, Dimension, Order64, QuadratureConfig64};

use crate::fail::{CliResult, Failure};

#[derive(Debug, Clone, Default)]
pub struct Settings {
    pub quad: QuadratureConfig64,
    /// Overrides applied on top of `ContourConfig::for_problem`.
    pub sigma: Option<f64>,
    pub y_max: Option<f64>,
    pub step_tol: Option<f64>,
}

impl Settings {
    pub fn load(path: Option<&Path>) -> CliResult<Self> {
        match path {
            None => Ok(Self::default()),
            Some(p) => {
                let text = std::fs::read_to_string(p)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                Self::parse(&text)
            }
        }
    }

    pub fn parse(text: &str) -> CliResult<Self> {
        let mut s = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Failure::Usage(format!("config line {}: {what}", i + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad("expected key = value"))?;
            let (key, value) = (key.trim(), value.trim());
            let real = || value.parse::<f64>().map_err(|_| bad("expected a number"));
            let count = || {
                value
                    .parse::<usize>()
                    .map_err(|_| bad("expected an integer"))
            };
            match key {
                "abs_tol" => s.quad.abs_tol = real()?,
                "rel_tol" => s.quad.rel_tol = real()?,
                "max_lobes" => s.quad.max_lobes = count()?,
                "accel_order" => s.quad.accel_order = count()?,
                "panel_rule" => {
                    s.quad.panel_rule = match value {
                        "gk15" => PanelRule::GaussKronrod15,
                        "gl16" => PanelRule::GaussLegendre16,
                        _ => return Err(bad("panel_rule must be gk15 or gl16")),
                    }
                }
                "sigma" => s.sigma = Some(real()?),
                "y_max" => s.y_max = Some(real()?),
                "step_tol" => s.step_tol = Some(real()?),
                other => return Err(bad(&format!("unknown key `{other}`"))),
            }
        }
        s.quad.validate()?;
        Ok(s)
    }

    pub fn contour(&self, alpha: Order64, n: Dimension) -> ContourConfig64 {
        let mut c = ContourConfig64::for_problem(alpha, n);
        if let Some(v) = self.sigma {
            c.sigma = v;
        }
        if self.y_max.is_some() {
            c.y_max = self.y_max;
        }
        if let Some(v) = self.step_tol {
            c.step_tol = v;
        }
        c
    }
}
