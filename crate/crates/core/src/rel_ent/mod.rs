//! Relative entropy of entanglement with respect to the biseparable set.
//!
//! Two upper bounds are provided: an analytic chain through bipartite
//! entanglement of formation, and a multi-start local minimization of
//! `S(rho || sigma)` over explicit biseparable ansatz states.

mod ansatz;
mod lbfgs;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use ansatz::{AnsatzTerm, BisepAnsatz};
pub use lbfgs::{minimize, LbfgsOptions, LbfgsResult};

use crate::error::{Error, Result};
use crate::ggm::{enumerate_bipartitions, Bipartition};
use crate::linalg::{relative_entropy, von_neumann_entropy, DensityMatrix};
use crate::states::{derive_seed, State};

/// Largest total dimension accepted by [`er_heuristic`].
pub const HEURISTIC_MAX_DIM: usize = 64;
/// White-noise weight mixed into the ansatz during optimization.
pub const OPTIMIZATION_NOISE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErBounds {
    /// `min` over bipartitions `X|Y` of `min(S(rho_X), S(rho_Y))`, which bounds
    /// `E_R <= E_R^{X:Y} <= E_f^{X:Y} <= min(S_X, S_Y)`.
    pub upper_chain: f64,
    /// Bipartition attaining `upper_chain`.
    pub chain_bipartition: Bipartition,
    /// `S(rho_{A B_i})` for receivers `i = 1..N`.
    pub receiver_chain: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub heuristic_upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BisepAnsatz>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<OptimizerDiagnostics>,
}

impl ErBounds {
    /// Smallest available upper bound on `E_R`.
    pub fn best(&self) -> f64 {
        match self.heuristic_upper {
            Some(h) => h.min(self.upper_chain),
            None => self.upper_chain,
        }
    }
}

/// Analytic upper bound on `E_R`; sender is party 0.
pub fn er_upper_chain(state: &State) -> Result<ErBounds> {
    let profile = state.profile();
    let n = profile.parties();
    let bips = enumerate_bipartitions(n)?;
    let mut best: Option<(f64, &Bipartition)> = None;
    for bip in &bips {
        let s = match state {
            State::Pure(_) => von_neumann_entropy(&state.reduced(&bip.smaller_side(profile))?)?,
            State::Mixed(_) => {
                let a = von_neumann_entropy(&state.reduced(bip.side_a())?)?;
                let b = von_neumann_entropy(&state.reduced(&bip.side_b(n))?)?;
                a.min(b)
            }
        };
        if best.is_none_or(|(v, _)| s < v) {
            best = Some((s, bip));
        }
    }
    let (upper_chain, bip) = best.expect("at least one bipartition");
    let receiver_chain = (1..n)
        .map(|i| von_neumann_entropy(&state.reduced(&[0, i])?))
        .collect::<Result<Vec<_>>>()?;
    Ok(ErBounds {
        upper_chain,
        chain_bipartition: bip.clone(),
        receiver_chain,
        heuristic_upper: None,
        witness: None,
        diagnostics: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErConfig {
    pub restarts: usize,
    /// Number of ansatz terms; `None` means `D^2`.
    pub max_terms: Option<usize>,
    pub max_iters: usize,
    pub tolerance: f64,
    pub seed: u64,
}

impl Default for ErConfig {
    fn default() -> Self {
        Self {
            restarts: 32,
            max_terms: None,
            max_iters: 2000,
            tolerance: 1e-9,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerDiagnostics {
    pub restarts: usize,
    pub terms: usize,
    pub best_restart: usize,
    /// Iterations used by the best restart.
    pub iterations: usize,
    pub total_iterations: usize,
    pub evaluations: usize,
    pub converged_restarts: usize,
    /// Final (noise-mixed) objective of each restart, in restart order.
    pub restart_objectives: Vec<f64>,
    pub objective_min: f64,
    pub objective_median: f64,
    pub objective_max: f64,
}

struct RestartOutcome {
    ansatz: BisepAnsatz,
    objective: f64,
    iterations: usize,
    evaluations: usize,
    converged: bool,
}

/// Analytic chain plus the minimizer's best biseparable upper bound.
pub fn er_heuristic(state: &State, config: &ErConfig) -> Result<ErBounds> {
    let d = state.profile().total();
    if d > HEURISTIC_MAX_DIM {
        return Err(Error::GuardExceeded(format!(
            "relative-entropy minimizer supports total dimension <= {HEURISTIC_MAX_DIM}, got {d}"
        )));
    }
    if config.restarts == 0 {
        return Err(Error::OutOfRange("at least one restart is required".into()));
    }
    let mut bounds = er_upper_chain(state)?;
    let rho = state.to_density();
    let terms = config.max_terms.unwrap_or(d * d).max(1);
    let problem = ansatz::Problem::new(&rho, terms, OPTIMIZATION_NOISE)?;
    let opts = LbfgsOptions {
        max_iters: config.max_iters,
        f_tolerance: config.tolerance,
        ..Default::default()
    };

    let outcomes: Vec<RestartOutcome> = (0..config.restarts)
        .into_par_iter()
        .map(|r| {
            let x0 = problem.initial_point(derive_seed(config.seed, r as u64));
            let res = minimize(x0, |x, g| problem.objective_and_gradient(x, g), &opts);
            RestartOutcome {
                ansatz: problem.decode(&res.x, OPTIMIZATION_NOISE),
                objective: res.f,
                iterations: res.iterations,
                evaluations: res.evaluations,
                converged: res.converged,
            }
        })
        .collect();

    // Re-evaluate each restart exactly: with and without the optimization noise
    // (both are biseparable), keep the smaller finite value.
    let mut best: Option<(usize, f64, BisepAnsatz)> = None;
    for (r, out) in outcomes.iter().enumerate() {
        let noisy = out.ansatz.clone();
        let clean = noisy.without_noise();
        for candidate in [clean, noisy] {
            let sigma = candidate.to_density(rho.profile())?;
            let value = relative_entropy(&rho, &sigma)?;
            if value.is_finite() && best.as_ref().is_none_or(|(_, v, _)| value < *v) {
                best = Some((r, value, candidate));
            }
        }
    }
    let (best_restart, value, witness) = best.ok_or_else(|| {
        Error::OutOfRange("no restart produced a finite relative entropy".into())
    })?;

    let mut objectives: Vec<f64> = outcomes.iter().map(|o| o.objective).collect();
    let restart_objectives = objectives.clone();
    objectives.sort_by(f64::total_cmp);
    bounds.heuristic_upper = Some(value);
    bounds.witness = Some(witness);
    bounds.diagnostics = Some(OptimizerDiagnostics {
        restarts: config.restarts,
        terms,
        best_restart,
        iterations: outcomes[best_restart].iterations,
        total_iterations: outcomes.iter().map(|o| o.iterations).sum(),
        evaluations: outcomes.iter().map(|o| o.evaluations).sum(),
        converged_restarts: outcomes.iter().filter(|o| o.converged).count(),
        restart_objectives,
        objective_min: objectives[0],
        objective_median: objectives[objectives.len() / 2],
        objective_max: objectives[objectives.len() - 1],
    });
    Ok(bounds)
}

/// Re-evaluates `S(rho || sigma)` for a witness.
pub fn witness_value(rho: &DensityMatrix, witness: &BisepAnsatz) -> Result<f64> {
    relative_entropy(rho, &witness.to_density(rho.profile())?)
}
