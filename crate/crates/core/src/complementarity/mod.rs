//! Complementarity between the multiport dense-coding advantage and genuine
//! multipartite entanglement.
//!
//! `delta_C = C_adv^max / log2 d + d/(d-1) * GGM - 1` is defined for uniform
//! local dimension `d` and is non-positive for valid inputs. The relative
//! entropy side is reported as the slack
//! `log2 d_max - (C_adv^max + E_R bound)`.

mod audit;
mod sweep;

use serde::{Deserialize, Serialize};

pub use audit::{audit, AuditOptions, AuditSummary, Theorem, Violation};
pub use sweep::{sweep_ghz, sweep_w, Grid, SweepRow};

use crate::dense_coding::{multiport_advantage, AdvantageBreakdown};
use crate::error::{Error, Result};
use crate::ggm::{ggm_mixed_upper, ggm_pure, Bipartition};
use crate::linalg::DimensionProfile;
use crate::rel_ent::{er_heuristic, er_upper_chain, ErBounds, ErConfig};
use crate::states::{PureState, State, StateKind};

/// Theorem slacks below `-SLACK_TOLERANCE` count as violations.
pub const SLACK_TOLERANCE: f64 = 1e-7;
/// `|delta_C|` at or below this counts as saturation.
pub const SATURATION_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplementarityReport {
    pub profile: DimensionProfile,
    pub kind: StateKind,
    pub advantage: AdvantageBreakdown,
    /// Exact for pure states; decomposition-average upper bound for mixed ones.
    pub ggm: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ggm_bipartition: Option<Bipartition>,
    pub er_bounds: ErBounds,
    /// The E_R upper bound used in `slack_t1`.
    pub er_value: f64,
    pub delta_c: Option<f64>,
    pub slack_t1: f64,
    pub slack_t23: Option<f64>,
    pub uniform_d: Option<usize>,
}

#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    pub compute_er: bool,
    pub er_config: ErConfig,
    /// Pure-state decomposition used for the mixed-state GGM; spectral when `None`.
    pub decomposition: Option<Vec<(f64, PureState)>>,
}

/// `C_adv^max / log2 d + d/(d-1) * ggm - 1`.
pub fn delta_c(c_adv_max: f64, ggm: f64, d: usize) -> f64 {
    let d_f = d as f64;
    c_adv_max / d_f.log2() + d_f / (d_f - 1.0) * ggm - 1.0
}

/// Full complementarity report for one state (sender = party 0).
pub fn analyze(state: &State, options: &AnalyzeOptions) -> Result<ComplementarityReport> {
    let profile = state.profile().clone();
    if profile.parties() < 2 {
        return Err(Error::InvalidProfile(format!(
            "complementarity needs a sender and at least one receiver, got {} parties",
            profile.parties()
        )));
    }
    let advantage = multiport_advantage(state)?;
    let (ggm, ggm_bipartition) = match state {
        State::Pure(psi) => {
            let r = ggm_pure(psi)?;
            (r.value, Some(r.argmax_bipartition))
        }
        State::Mixed(rho) => (ggm_mixed_upper(rho, options.decomposition.as_deref())?, None),
    };
    let er_bounds: ErBounds = if options.compute_er {
        er_heuristic(state, &options.er_config)?
    } else {
        er_upper_chain(state)?
    };
    let er_value = er_bounds.best();
    let d_max = profile.dims()[1..].iter().copied().max().expect("receivers");
    let slack_t1 = (d_max as f64).log2() - (advantage.c_adv_max + er_value);
    let uniform_d = profile.uniform_dim();
    let delta_c = uniform_d.map(|d| delta_c(advantage.c_adv_max, ggm, d));
    Ok(ComplementarityReport {
        kind: state.kind(),
        profile,
        advantage,
        ggm,
        ggm_bipartition,
        er_bounds,
        er_value,
        slack_t23: delta_c.map(|x| -x),
        delta_c,
        slack_t1,
        uniform_d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{make_ghz, make_w};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

    #[test]
    fn ghz_saturates() {
        let r = analyze(&State::Pure(make_ghz(FRAC_PI_4)), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.advantage.c_adv_max, 0.0);
        assert!((r.ggm - 0.5).abs() < 1e-12);
        assert!(r.delta_c.unwrap().abs() <= SATURATION_TOLERANCE);
        assert!(r.slack_t1.abs() <= 1e-9);
        assert_eq!(r.uniform_d, Some(2));
    }

    #[test]
    fn product_is_minus_one() {
        let p = DimensionProfile::uniform(3, 2).unwrap();
        let r = analyze(&State::Pure(PureState::basis(p, &[0, 0, 0]).unwrap()), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.ggm, 0.0);
        assert!((r.delta_c.unwrap() + 1.0).abs() < 1e-12);
        assert!((r.slack_t23.unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn w_family_bell_point_saturates() {
        let r = analyze(&State::Pure(make_w(FRAC_PI_2, FRAC_PI_4)), &AnalyzeOptions::default()).unwrap();
        assert!((r.advantage.c_adv_max - 1.0).abs() < 1e-12);
        assert_eq!(r.advantage.best_receiver, Some(1));
        assert!(r.ggm < 1e-12);
        assert!(r.delta_c.unwrap().abs() <= SATURATION_TOLERANCE);
    }

    #[test]
    fn heterogeneous_profile_has_no_delta() {
        let p = DimensionProfile::new(vec![2, 3, 2]).unwrap();
        let psi = crate::states::sample_haar_pure(&p, 5);
        let r = analyze(&State::Pure(psi), &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.delta_c, None);
        assert_eq!(r.slack_t23, None);
        assert!(r.slack_t1 >= -SLACK_TOLERANCE);
    }

    #[test]
    fn qutrit_normalization() {
        // d = 3: factor 3/2 on GGM and 1/log2 3 on the advantage
        assert!((delta_c(3f64.log2(), 0.0, 3) - 0.0).abs() < 1e-15);
        assert!((delta_c(0.0, 2.0 / 3.0, 3) - 0.0).abs() < 1e-15);
    }
}
