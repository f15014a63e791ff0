use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{kron_vec, offsets, permutation_map, ComplexMatrix, DensityMatrix, DimensionProfile};

/// Tolerance on `sum |a_i|^2 - 1`.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Normalized amplitude vector over a [`DimensionProfile`].
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    profile: DimensionProfile,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Rejects vectors whose squared norm is off by more than [`NORM_TOLERANCE`].
    pub fn new(profile: DimensionProfile, amplitudes: Vec<Complex64>) -> Result<Self> {
        check_len(&profile, amplitudes.len())?;
        let norm_sq = norm_sq(&amplitudes);
        if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized {
                norm_sq,
                tolerance: NORM_TOLERANCE,
            });
        }
        Ok(Self { profile, amplitudes })
    }

    /// Scales a nonzero vector to unit norm.
    pub fn normalized(profile: DimensionProfile, mut amplitudes: Vec<Complex64>) -> Result<Self> {
        check_len(&profile, amplitudes.len())?;
        let n = norm_sq(&amplitudes).sqrt();
        if !(n > 0.0 && n.is_finite()) {
            return Err(Error::NotNormalized {
                norm_sq: n * n,
                tolerance: NORM_TOLERANCE,
            });
        }
        amplitudes.iter_mut().for_each(|a| *a /= n);
        Ok(Self { profile, amplitudes })
    }

    /// Computational basis state with the given per-party digits.
    pub fn basis(profile: DimensionProfile, digits: &[usize]) -> Result<Self> {
        if digits.len() != profile.parties() || digits.iter().zip(profile.dims()).any(|(&i, &d)| i >= d) {
            return Err(Error::ShapeMismatch(format!(
                "basis digits {digits:?} for profile {:?}",
                profile.dims()
            )));
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); profile.total()];
        amps[profile.index_of(digits)] = Complex64::new(1.0, 0.0);
        Ok(Self { profile, amplitudes: amps })
    }

    /// Tensor product of per-party local vectors (each normalized here).
    pub fn product(locals: &[Vec<Complex64>]) -> Result<Self> {
        let profile = DimensionProfile::new(locals.iter().map(Vec::len).collect())?;
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for v in locals {
            let n = norm_sq(v).sqrt();
            if n == 0.0 {
                return Err(Error::NotNormalized {
                    norm_sq: 0.0,
                    tolerance: NORM_TOLERANCE,
                });
            }
            let unit: Vec<Complex64> = v.iter().map(|a| a / n).collect();
            amps = kron_vec(&amps, &unit);
        }
        Ok(Self { profile, amplitudes: amps })
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm_sq(&self) -> f64 {
        norm_sq(&self.amplitudes)
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix::projector(self.profile.clone(), &self.amplitudes)
    }

    /// Reduced density matrix on `keep`, computed as `M M^dagger` with `M` the
    /// amplitudes reshaped to (kept, traced).
    pub fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let keep = self.profile.check_parties(keep)?;
        let traced: Vec<usize> = (0..self.profile.parties()).filter(|p| !keep.contains(p)).collect();
        let sub = self.profile.restrict(&keep)?;
        if traced.is_empty() {
            return Ok(self.to_density());
        }
        let keep_off = offsets(&self.profile, &keep);
        let trace_off = offsets(&self.profile, &traced);
        let k = keep_off.len();
        let mut out = ComplexMatrix::zeros(k, k);
        for a in 0..k {
            for b in a..k {
                let v: Complex64 = trace_off
                    .iter()
                    .map(|&t| self.amplitudes[keep_off[a] + t] * self.amplitudes[keep_off[b] + t].conj())
                    .sum();
                out[(a, b)] = v;
                out[(b, a)] = v.conj();
            }
        }
        Ok(DensityMatrix::from_parts(sub, out))
    }

    /// Reorders parties: new party `k` is old party `order[k]`.
    pub fn permute_parties(&self, order: &[usize]) -> Result<PureState> {
        let (profile, map) = permutation_map(&self.profile, order)?;
        let amplitudes = map.iter().map(|&old| self.amplitudes[old]).collect();
        Ok(Self { profile, amplitudes })
    }

    /// Applies `U_0 ⊗ U_1 ⊗ ... ⊗ U_N`, one local matrix per party.
    pub fn apply_local(&self, unitaries: &[ComplexMatrix]) -> Result<PureState> {
        if unitaries.len() != self.profile.parties() {
            return Err(Error::ShapeMismatch(format!(
                "{} local operators for {} parties",
                unitaries.len(),
                self.profile.parties()
            )));
        }
        let strides = self.profile.strides();
        let mut amps = self.amplitudes.clone();
        for (p, u) in unitaries.iter().enumerate() {
            let d = self.profile.dim(p);
            if u.rows() != d || u.cols() != d {
                return Err(Error::ShapeMismatch(format!("operator for party {p} is not {d}x{d}")));
            }
            let s = strides[p];
            let mut next = vec![Complex64::new(0.0, 0.0); amps.len()];
            for (idx, slot) in next.iter_mut().enumerate() {
                let digit = (idx / s) % d;
                let base = idx - digit * s;
                *slot = (0..d).map(|j| u[(digit, j)] * amps[base + j * s]).sum();
            }
            amps = next;
        }
        Ok(Self {
            profile: self.profile.clone(),
            amplitudes: amps,
        })
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

fn norm_sq(v: &[Complex64]) -> f64 {
    v.iter().map(|a| a.norm_sqr()).sum()
}

fn check_len(profile: &DimensionProfile, len: usize) -> Result<()> {
    if len != profile.total() {
        return Err(Error::ShapeMismatch(format!(
            "{len} amplitudes for profile {:?} (total dimension {})",
            profile.dims(),
            profile.total()
        )));
    }
    Ok(())
}
