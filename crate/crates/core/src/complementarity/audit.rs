use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{analyze, AnalyzeOptions, SLACK_TOLERANCE};
use crate::error::{Error, Result};
use crate::rel_ent::ErConfig;
use crate::states::EnsembleSpec;

/// Largest total dimension accepted by [`audit`].
pub const AUDIT_MAX_DIM: usize = 1 << 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// `C_adv^max + E_R <= log2 d`.
    AdvantagePlusRelEnt,
    /// `C_adv^max / log2 d + d/(d-1) GGM <= 1`.
    AdvantagePlusGgm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Violation {
    pub index: usize,
    pub seed: u64,
    pub theorem: Theorem,
    pub slack: f64,
}

#[derive(Debug, Clone, Default)]
pub struct AuditOptions {
    pub compute_er: bool,
    pub er_config: ErConfig,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub spec: EnsembleSpec,
    pub count: usize,
    pub min_slack_t23: Option<f64>,
    pub min_slack_t1: f64,
    pub max_delta_c: Option<f64>,
    pub violations: Vec<Violation>,
}

/// Analyzes every sample of the ensemble and collects theorem violations
/// (slack below `-SLACK_TOLERANCE`).
pub fn audit(spec: &EnsembleSpec, options: &AuditOptions) -> Result<AuditSummary> {
    let profile = spec.validate()?;
    if profile.total() > AUDIT_MAX_DIM {
        return Err(Error::GuardExceeded(format!(
            "audits support total dimension <= {AUDIT_MAX_DIM}, got {}",
            profile.total()
        )));
    }
    let analyze_opts = AnalyzeOptions {
        compute_er: options.compute_er,
        er_config: options.er_config,
        decomposition: None,
    };
    let reports = (0..spec.count)
        .into_par_iter()
        .map(|i| analyze(&spec.sample(i)?, &analyze_opts))
        .collect::<Result<Vec<_>>>()?;

    let mut violations = Vec::new();
    for (index, r) in reports.iter().enumerate() {
        let seed = spec.sample_seed(index);
        if r.slack_t1 < -SLACK_TOLERANCE {
            violations.push(Violation {
                index,
                seed,
                theorem: Theorem::AdvantagePlusRelEnt,
                slack: r.slack_t1,
            });
        }
        if let Some(s) = r.slack_t23.filter(|&s| s < -SLACK_TOLERANCE) {
            violations.push(Violation {
                index,
                seed,
                theorem: Theorem::AdvantagePlusGgm,
                slack: s,
            });
        }
    }
    let fold_min = |it: &mut dyn Iterator<Item = f64>| it.fold(None, |m: Option<f64>, x| Some(m.map_or(x, |m| m.min(x))));
    Ok(AuditSummary {
        spec: spec.clone(),
        count: reports.len(),
        min_slack_t23: fold_min(&mut reports.iter().filter_map(|r| r.slack_t23)),
        min_slack_t1: fold_min(&mut reports.iter().map(|r| r.slack_t1)).expect("count >= 1"),
        max_delta_c: fold_min(&mut reports.iter().filter_map(|r| r.delta_c.map(|d| -d))).map(|x| -x),
        violations,
    })
}
