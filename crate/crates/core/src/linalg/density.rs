use num_complex::Complex64;

use super::eigen::{hermitian_eigh, hermitian_eigs, Spectrum};
use super::matrix::ComplexMatrix;
use super::profile::DimensionProfile;
use super::{TAU_HERM, TAU_PSD, TAU_TR};
use crate::error::{Error, Result};

/// Hermitian, positive-semidefinite, unit-trace matrix over a [`DimensionProfile`].
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    profile: DimensionProfile,
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// Validates all three invariants. The stored matrix is hermitized.
    pub fn new(profile: DimensionProfile, mut matrix: ComplexMatrix) -> Result<Self> {
        let n = profile.total();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for total dimension {n}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        let deviation = matrix.hermiticity_defect();
        if deviation > TAU_HERM {
            return Err(Error::NotHermitian {
                deviation,
                tolerance: TAU_HERM,
            });
        }
        let trace = matrix.trace().re;
        if (trace - 1.0).abs() > TAU_TR {
            return Err(Error::TraceNotUnit {
                trace,
                tolerance: TAU_TR,
            });
        }
        matrix.hermitize();
        let min = hermitian_eigs(&matrix)?.min();
        if min < -TAU_PSD {
            return Err(Error::NegativeEigenvalue {
                value: min,
                tolerance: TAU_PSD,
            });
        }
        Ok(Self { profile, matrix })
    }

    /// Skips validation; used where the construction guarantees the invariants
    /// up to round-off.
    pub(crate) fn from_parts(profile: DimensionProfile, mut matrix: ComplexMatrix) -> Self {
        debug_assert_eq!(matrix.rows(), profile.total());
        matrix.hermitize();
        Self { profile, matrix }
    }

    /// `|v><v|` for a (assumed normalized) amplitude vector.
    pub(crate) fn projector(profile: DimensionProfile, amplitudes: &[Complex64]) -> Self {
        Self {
            profile,
            matrix: ComplexMatrix::outer(amplitudes),
        }
    }

    pub fn maximally_mixed(profile: DimensionProfile) -> Self {
        let n = profile.total();
        Self {
            matrix: ComplexMatrix::identity(n).scale(1.0 / n as f64),
            profile,
        }
    }

    pub fn profile(&self) -> &DimensionProfile {
        &self.profile
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.profile.total()
    }

    pub fn purity(&self) -> f64 {
        // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho
        self.matrix.as_slice().iter().map(|x| x.norm_sqr()).sum()
    }

    /// Raw eigenvalues, descending.
    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(hermitian_eigs(&self.matrix)?.eigenvalues)
    }

    /// Eigenvalues with entries in `[-TAU_PSD, 0)` set to zero and the result
    /// renormalized to unit sum. Entries below `-TAU_PSD` are an error.
    pub fn clipped_spectrum(&self) -> Result<Vec<f64>> {
        clip_spectrum(self.eigenvalues()?)
    }

    /// Full eigendecomposition (descending).
    pub fn eigh(&self) -> Result<Spectrum> {
        hermitian_eigh(&self.matrix)
    }

    /// Reduced state on `keep`, parties in their original relative order.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let keep = self.profile.check_parties(keep)?;
        if keep.len() == self.profile.parties() {
            return Ok(self.clone());
        }
        let traced: Vec<usize> = (0..self.profile.parties())
            .filter(|p| !keep.contains(p))
            .collect();
        let keep_off = offsets(&self.profile, &keep);
        let trace_off = offsets(&self.profile, &traced);
        let n = self.profile.total();
        let k = keep_off.len();
        let src = self.matrix.as_slice();
        let mut out = ComplexMatrix::zeros(k, k);
        for (a, &oa) in keep_off.iter().enumerate() {
            for (b, &ob) in keep_off.iter().enumerate() {
                out[(a, b)] = trace_off
                    .iter()
                    .map(|&t| src[(oa + t) * n + ob + t])
                    .sum();
            }
        }
        Ok(Self::from_parts(self.profile.restrict(&keep)?, out))
    }

    /// Reorders parties: new party `k` is old party `order[k]`.
    pub fn permute_parties(&self, order: &[usize]) -> Result<DensityMatrix> {
        let (profile, map) = permutation_map(&self.profile, order)?;
        let n = profile.total();
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self.matrix[(map[i], map[j])];
            }
        }
        Ok(Self { profile, matrix: out })
    }

    /// `U rho U^dagger` for a unitary `U` of matching size.
    pub fn conjugate(&self, u: &ComplexMatrix) -> Result<DensityMatrix> {
        let m = u.matmul(&self.matrix)?.matmul(&u.adjoint())?;
        if m.rows() != self.dim() {
            return Err(Error::ShapeMismatch("unitary size".into()));
        }
        Ok(Self::from_parts(self.profile.clone(), m))
    }

    /// Convex combination `sum_k w_k rho_k` of states on one profile.
    pub fn mixture(terms: &[(f64, &DensityMatrix)]) -> Result<DensityMatrix> {
        let first = terms
            .first()
            .ok_or_else(|| Error::InvalidDecomposition("empty mixture".into()))?
            .1;
        let mut acc = ComplexMatrix::zeros(first.dim(), first.dim());
        for &(w, rho) in terms {
            if rho.profile != first.profile {
                return Err(Error::ProfileMismatch(format!(
                    "{:?} vs {:?}",
                    rho.profile.dims(),
                    first.profile.dims()
                )));
            }
            acc.add_scaled(&rho.matrix, w)?;
        }
        DensityMatrix::new(first.profile.clone(), acc)
    }
}

/// Sets eigenvalues in `[-TAU_PSD, 0)` to zero and renormalizes to unit sum;
/// anything below `-TAU_PSD` is an error.
pub fn clip_spectrum(mut ev: Vec<f64>) -> Result<Vec<f64>> {
    if let Some(&min) = ev.last() {
        if min < -TAU_PSD {
            return Err(Error::NegativeEigenvalue {
                value: min,
                tolerance: TAU_PSD,
            });
        }
    }
    for x in ev.iter_mut() {
        if *x < 0.0 {
            *x = 0.0;
        }
    }
    let sum: f64 = ev.iter().sum();
    if sum > 0.0 {
        ev.iter_mut().for_each(|x| *x /= sum);
    }
    Ok(ev)
}

/// Flat offsets of every multi-index over `parties` within the full space.
pub(crate) fn offsets(profile: &DimensionProfile, parties: &[usize]) -> Vec<usize> {
    let strides = profile.strides();
    let mut out = vec![0usize];
    for &p in parties {
        let d = profile.dim(p);
        let stride = strides[p];
        out = out
            .iter()
            .flat_map(|&base| (0..d).map(move |i| base + i * stride))
            .collect();
    }
    out
}

/// For a party reordering, the permuted profile and the map
/// `new basis index -> old basis index`.
pub(crate) fn permutation_map(
    profile: &DimensionProfile,
    order: &[usize],
) -> Result<(DimensionProfile, Vec<usize>)> {
    let sorted = profile.check_parties(order)?;
    if sorted.len() != profile.parties() {
        return Err(Error::ShapeMismatch(format!(
            "permutation {order:?} does not cover all {} parties",
            profile.parties()
        )));
    }
    let new_profile = DimensionProfile::subsystem(order.iter().map(|&p| profile.dim(p)).collect())?;
    let old_strides = profile.strides();
    let map = (0..profile.total())
        .map(|i| {
            new_profile
                .digits(i)
                .iter()
                .zip(order)
                .map(|(&digit, &old)| digit * old_strides[old])
                .sum()
        })
        .collect();
    Ok((new_profile, map))
}
