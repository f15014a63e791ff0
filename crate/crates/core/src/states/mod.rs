//! Pure and mixed states, named families, random ensembles and state files.

mod ensemble;
mod families;
mod io;
mod pure;
mod random;

pub use ensemble::{Ensemble, EnsembleSpec};
pub use families::{make_ghz, make_ghz_general, make_w, make_w_general, mix_with_white_noise};
pub use io::{format_exact, read_state, state_from_json, state_to_json, write_state, StateKind};
pub use pure::{PureState, NORM_TOLERANCE};
pub use random::{
    complex_gaussians, derive_seed, rng_from_seed, sample_haar_pure, sample_haar_unitary,
    sample_local_unitaries, sample_mixed_hs,
};

use crate::error::Result;
use crate::linalg::{ComplexMatrix, DensityMatrix, DimensionProfile};

/// Either representation of a quantum state.
#[derive(Debug, Clone, PartialEq)]
pub enum State {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl State {
    pub fn profile(&self) -> &DimensionProfile {
        match self {
            State::Pure(p) => p.profile(),
            State::Mixed(m) => m.profile(),
        }
    }

    pub fn kind(&self) -> StateKind {
        match self {
            State::Pure(_) => StateKind::Pure,
            State::Mixed(_) => StateKind::Mixed,
        }
    }

    pub fn to_density(&self) -> DensityMatrix {
        match self {
            State::Pure(p) => p.to_density(),
            State::Mixed(m) => m.clone(),
        }
    }

    /// Reduced density matrix on `keep`.
    pub fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix> {
        match self {
            State::Pure(p) => p.reduced(keep),
            State::Mixed(m) => m.partial_trace(keep),
        }
    }

    pub fn permute_parties(&self, order: &[usize]) -> Result<State> {
        Ok(match self {
            State::Pure(p) => State::Pure(p.permute_parties(order)?),
            State::Mixed(m) => State::Mixed(m.permute_parties(order)?),
        })
    }

    /// Applies a product of local unitaries.
    pub fn apply_local(&self, unitaries: &[ComplexMatrix]) -> Result<State> {
        Ok(match self {
            State::Pure(p) => State::Pure(p.apply_local(unitaries)?),
            State::Mixed(m) => {
                let mut u = unitaries
                    .first()
                    .cloned()
                    .ok_or_else(|| crate::Error::ShapeMismatch("no local operators".into()))?;
                for next in &unitaries[1..] {
                    u = crate::linalg::tensor_product(&u, next)?;
                }
                State::Mixed(m.conjugate(&u)?)
            }
        })
    }
}

impl From<PureState> for State {
    fn from(p: PureState) -> Self {
        State::Pure(p)
    }
}

impl From<DensityMatrix> for State {
    fn from(m: DensityMatrix) -> Self {
        State::Mixed(m)
    }
}
