use serde::{Deserialize, Serialize};

use super::random::{derive_seed, rng_from_seed, complex_gaussians, sample_haar_pure, sample_mixed_hs};
use super::{make_ghz_general, make_w_general, mix_with_white_noise, State};
use crate::error::{Error, Result};
use crate::linalg::DimensionProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ensemble {
    HaarPure,
    HsMixed,
    NoisyGhz,
    NoisyW,
}

impl Ensemble {
    pub fn is_noisy(self) -> bool {
        matches!(self, Ensemble::NoisyGhz | Ensemble::NoisyW)
    }
}

impl std::str::FromStr for Ensemble {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "haar-pure" => Ok(Ensemble::HaarPure),
            "hs-mixed" => Ok(Ensemble::HsMixed),
            "noisy-ghz" => Ok(Ensemble::NoisyGhz),
            "noisy-w" => Ok(Ensemble::NoisyW),
            other => Err(Error::OutOfRange(format!("unknown ensemble {other:?}"))),
        }
    }
}

/// A reproducible family of random states.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    pub ensemble: Ensemble,
    pub parties: usize,
    pub local_dim: usize,
    pub count: usize,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub noise: Option<f64>,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<DimensionProfile> {
        if self.count == 0 {
            return Err(Error::OutOfRange("ensemble count must be at least 1".into()));
        }
        match (self.ensemble.is_noisy(), self.noise) {
            (true, None) => {
                return Err(Error::OutOfRange(format!("{:?} requires a noise weight", self.ensemble)))
            }
            (false, Some(_)) => {
                return Err(Error::OutOfRange(format!("{:?} takes no noise weight", self.ensemble)))
            }
            (true, Some(p)) if !(0.0..=1.0).contains(&p) => {
                return Err(Error::OutOfRange(format!("noise weight {p} not in [0, 1]")))
            }
            _ => {}
        }
        DimensionProfile::uniform(self.parties, self.local_dim)
    }

    /// Seed used for sample `index`.
    pub fn sample_seed(&self, index: usize) -> u64 {
        derive_seed(self.seed, index as u64)
    }

    /// Sample `index` of the ensemble; depends only on `(spec, index)`.
    pub fn sample(&self, index: usize) -> Result<State> {
        let profile = self.validate()?;
        let seed = self.sample_seed(index);
        Ok(match self.ensemble {
            Ensemble::HaarPure => State::Pure(sample_haar_pure(&profile, seed)),
            Ensemble::HsMixed => State::Mixed(sample_mixed_hs(&profile, seed)),
            Ensemble::NoisyGhz => {
                let coeffs = complex_gaussians(&mut rng_from_seed(seed), self.local_dim);
                let psi = make_ghz_general(&coeffs, self.parties)?;
                State::Mixed(mix_with_white_noise(&psi, self.noise.unwrap_or(0.0))?)
            }
            Ensemble::NoisyW => {
                let coeffs = complex_gaussians(&mut rng_from_seed(seed), self.parties);
                let psi = make_w_general(&coeffs, self.local_dim)?;
                State::Mixed(mix_with_white_noise(&psi, self.noise.unwrap_or(0.0))?)
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(ensemble: Ensemble, noise: Option<f64>) -> EnsembleSpec {
        EnsembleSpec {
            ensemble,
            parties: 3,
            local_dim: 2,
            count: 4,
            seed: 9,
            noise,
        }
    }

    #[test]
    fn noise_presence_rules() {
        assert!(spec(Ensemble::HaarPure, None).validate().is_ok());
        assert!(spec(Ensemble::HaarPure, Some(0.1)).validate().is_err());
        assert!(spec(Ensemble::NoisyGhz, None).validate().is_err());
        assert!(spec(Ensemble::NoisyW, Some(2.0)).validate().is_err());
        let mut s = spec(Ensemble::HsMixed, None);
        s.count = 0;
        assert!(s.validate().is_err());
    }

    #[test]
    fn samples_are_index_addressable() {
        for e in [Ensemble::HaarPure, Ensemble::HsMixed, Ensemble::NoisyGhz, Ensemble::NoisyW] {
            let noise = e.is_noisy().then_some(0.3);
            let s = spec(e, noise);
            assert_eq!(s.sample(3).unwrap(), s.sample(3).unwrap());
            let rho = s.sample(2).unwrap().to_density();
            crate::linalg::DensityMatrix::new(rho.profile().clone(), rho.matrix().clone()).unwrap();
        }
        assert_eq!("noisy-w".parse::<Ensemble>().unwrap(), Ensemble::NoisyW);
        assert!("ghz".parse::<Ensemble>().is_err());
    }
}
