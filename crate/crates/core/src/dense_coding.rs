//! Dense-coding capacity and quantum advantage, single- and multiport.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{von_neumann_entropy, DensityMatrix};
use crate::states::State;

/// Receivers whose advantage is within this of the maximum count as tied.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Advantage of the sender (party 0) towards one receiver.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReceiverAdvantage {
    pub receiver: usize,
    /// `S(rho_{B_i})`, bits.
    pub s_b: f64,
    /// `S(rho_{A B_i})`, bits.
    pub s_ab: f64,
    /// `max(0, s_b - s_ab)`, bits.
    pub advantage: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdvantageBreakdown {
    pub per_receiver: Vec<ReceiverAdvantage>,
    pub c_adv_max: f64,
    /// Lowest receiver index attaining `c_adv_max`; `None` when it is zero.
    pub best_receiver: Option<usize>,
}

fn require_bipartite(rho: &DensityMatrix) -> Result<()> {
    if rho.profile().parties() != 2 {
        return Err(Error::ProfileMismatch(format!(
            "dense coding needs a sender/receiver pair, got {} parties",
            rho.profile().parties()
        )));
    }
    Ok(())
}

/// `S(rho_B) - S(rho_AB)` without the floor at zero.
fn coherent_information(rho_ab: &DensityMatrix) -> Result<(f64, f64)> {
    let s_b = von_neumann_entropy(&rho_ab.partial_trace(&[1])?)?;
    let s_ab = von_neumann_entropy(rho_ab)?;
    Ok((s_b, s_ab))
}

/// `max{log2 d_A, log2 d_A + S(rho_B) - S(rho_AB)}` in bits.
pub fn capacity(rho_ab: &DensityMatrix) -> Result<f64> {
    let adv = quantum_advantage(rho_ab)?;
    Ok((rho_ab.profile().dim(0) as f64).log2() + adv)
}

/// `max{S(rho_B) - S(rho_AB), 0}` in bits.
pub fn quantum_advantage(rho_ab: &DensityMatrix) -> Result<f64> {
    require_bipartite(rho_ab)?;
    let (s_b, s_ab) = coherent_information(rho_ab)?;
    Ok((s_b - s_ab).max(0.0))
}

/// Per-receiver advantages and their maximum, sender fixed as party 0.
pub fn multiport_advantage(state: &State) -> Result<AdvantageBreakdown> {
    let parties = state.profile().parties();
    if parties < 2 {
        return Err(Error::InvalidProfile(format!(
            "multiport dense coding needs at least 2 parties, got {parties}"
        )));
    }
    let per_receiver = (1..parties)
        .map(|i| {
            let rho_ab = state.reduced(&[0, i])?;
            let s_b = von_neumann_entropy(&rho_ab.partial_trace(&[1])?)?;
            let s_ab = von_neumann_entropy(&rho_ab)?;
            Ok(ReceiverAdvantage {
                receiver: i,
                s_b,
                s_ab,
                advantage: (s_b - s_ab).max(0.0),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let c_adv_max = per_receiver.iter().map(|r| r.advantage).fold(0.0, f64::max);
    let best_receiver = best_receiver(&per_receiver, c_adv_max);
    Ok(AdvantageBreakdown {
        per_receiver,
        c_adv_max,
        best_receiver,
    })
}

fn best_receiver(per_receiver: &[ReceiverAdvantage], c_adv_max: f64) -> Option<usize> {
    if c_adv_max <= 0.0 {
        return None;
    }
    per_receiver
        .iter()
        .find(|r| r.advantage >= c_adv_max - TIE_TOLERANCE)
        .map(|r| r.receiver)
}
