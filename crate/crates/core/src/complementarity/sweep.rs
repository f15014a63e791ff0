use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{analyze, AnalyzeOptions};
use crate::error::{Error, Result};
use crate::states::{make_ghz, make_w, State};

/// Inclusive uniform grid `min + i (max - min) / (steps - 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Grid {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl Grid {
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        let g = Self { min, max, steps };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::OutOfRange(format!("grid needs at least 2 steps, got {}", self.steps)));
        }
        if !(self.min.is_finite() && self.max.is_finite()) || self.max < self.min {
            return Err(Error::OutOfRange(format!("bad grid range [{}, {}]", self.min, self.max)));
        }
        Ok(())
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.steps {
            self.max
        } else {
            self.min + i as f64 * (self.max - self.min) / (self.steps - 1) as f64
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.steps).map(|i| self.point(i)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub theta: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
    pub c_adv_max: f64,
    pub ggm: f64,
    pub delta_c: f64,
    pub best_receiver: Option<usize>,
}

fn row(theta: f64, phi: Option<f64>, state: State) -> Result<SweepRow> {
    let r = analyze(&state, &AnalyzeOptions::default())?;
    Ok(SweepRow {
        theta,
        phi,
        c_adv_max: r.advantage.c_adv_max,
        ggm: r.ggm,
        delta_c: r.delta_c.expect("three qubits"),
        best_receiver: r.advantage.best_receiver,
    })
}

/// `delta_C` along the generalized GHZ family.
pub fn sweep_ghz(theta: &Grid) -> Result<Vec<SweepRow>> {
    theta.validate()?;
    (0..theta.steps)
        .into_par_iter()
        .map(|i| {
            let t = theta.point(i);
            row(t, None, State::Pure(make_ghz(t)))
        })
        .collect()
}

/// `delta_C` over the generalized W family; `theta` outer, `phi` inner.
pub fn sweep_w(theta: &Grid, phi: &Grid) -> Result<Vec<SweepRow>> {
    theta.validate()?;
    phi.validate()?;
    (0..theta.steps * phi.steps)
        .into_par_iter()
        .map(|k| {
            let (t, p) = (theta.point(k / phi.steps), phi.point(k % phi.steps));
            row(t, Some(p), State::Pure(make_w(t, p)))
        })
        .collect()
}
