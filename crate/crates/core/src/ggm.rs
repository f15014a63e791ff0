//! Generalized geometric measure (GGM).
//!
//! For a pure state the GGM is `1 - max_j Lambda_j`, where `Lambda_j` is the
//! largest eigenvalue of the reduced state on either side of bipartition `j`.
//! Mixed states get the average over a pure-state decomposition, which upper
//! bounds the convex roof.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigs, DensityMatrix, DimensionProfile};
use crate::states::PureState;

/// Bipartitions whose top eigenvalues agree to within this are treated as tied.
const TIE_TOLERANCE: f64 = 1e-12;

/// One side of a bipartition; the canonical side contains party 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    side_a: Vec<usize>,
}

impl Bipartition {
    /// Canonicalizes `side` against `n_parties` (swapping to the complement if
    /// party 0 is missing).
    pub fn new(side: &[usize], n_parties: usize) -> Result<Self> {
        let mut side_a = side.to_vec();
        side_a.sort_unstable();
        side_a.dedup();
        if side_a.is_empty() || side_a.len() >= n_parties {
            return Err(Error::ShapeMismatch(format!(
                "{side:?} is not a nonempty proper subset of {n_parties} parties"
            )));
        }
        if let Some(&p) = side_a.iter().find(|&&p| p >= n_parties) {
            return Err(Error::InvalidPartyIndex {
                index: p,
                parties: n_parties,
            });
        }
        if side_a[0] != 0 {
            side_a = (0..n_parties).filter(|p| !side_a.contains(p)).collect();
        }
        Ok(Self { side_a })
    }

    pub fn side_a(&self) -> &[usize] {
        &self.side_a
    }

    pub fn side_b(&self, n_parties: usize) -> Vec<usize> {
        (0..n_parties).filter(|p| !self.side_a.contains(p)).collect()
    }

    fn side_dim(side: &[usize], profile: &DimensionProfile) -> usize {
        side.iter().map(|&p| profile.dim(p)).product()
    }

    /// The side with the smaller Hilbert-space dimension (side A on ties).
    pub fn smaller_side(&self, profile: &DimensionProfile) -> Vec<usize> {
        let b = self.side_b(profile.parties());
        if Self::side_dim(&b, profile) < Self::side_dim(&self.side_a, profile) {
            b
        } else {
            self.side_a.clone()
        }
    }
}

/// All `2^(n-1) - 1` canonical bipartitions, ordered by size of side A and
/// then lexicographically.
pub fn enumerate_bipartitions(n_parties: usize) -> Result<Vec<Bipartition>> {
    if n_parties < 2 {
        return Err(Error::InvalidProfile(format!(
            "bipartitions need at least 2 parties, got {n_parties}"
        )));
    }
    if n_parties > 63 {
        return Err(Error::DimensionOverflow(format!("{n_parties} parties")));
    }
    let mut out: Vec<Bipartition> = (0u64..1 << (n_parties - 1))
        .map(|mask| {
            let mut side = vec![0];
            side.extend((1..n_parties).filter(|&p| mask >> (p - 1) & 1 == 1));
            side
        })
        .filter(|side| side.len() < n_parties)
        .map(|side_a| Bipartition { side_a })
        .collect();
    out.sort_by(|a, b| a.side_a.len().cmp(&b.side_a.len()).then_with(|| a.side_a.cmp(&b.side_a)));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GgmReport {
    pub value: f64,
    pub argmax_bipartition: Bipartition,
    pub lambda_max: f64,
}

/// Largest eigenvalue of the reduced state on the smaller side of `bip`.
pub fn bipartition_lambda(psi: &PureState, bip: &Bipartition) -> Result<f64> {
    let side = bip.smaller_side(psi.profile());
    let lambda = hermitian_eigs(psi.reduced(&side)?.matrix())?.max();
    #[cfg(debug_assertions)]
    {
        let n = psi.profile().parties();
        let other: Vec<usize> = (0..n).filter(|p| !side.contains(p)).collect();
        let other_lambda = hermitian_eigs(psi.reduced(&other)?.matrix())?.max();
        debug_assert!(
            (lambda - other_lambda).abs() <= 1e-8,
            "complementary marginals disagree: {lambda} vs {other_lambda}"
        );
    }
    Ok(lambda)
}

/// GGM of a pure state.
pub fn ggm_pure(psi: &PureState) -> Result<GgmReport> {
    let norm_sq = psi.norm_sq();
    if (norm_sq - 1.0).abs() > crate::states::NORM_TOLERANCE {
        return Err(Error::NotNormalized {
            norm_sq,
            tolerance: crate::states::NORM_TOLERANCE,
        });
    }
    let bips = enumerate_bipartitions(psi.profile().parties())?;
    let lambdas = bips
        .iter()
        .map(|b| bipartition_lambda(psi, b))
        .collect::<Result<Vec<_>>>()?;
    let lambda_max = lambdas.iter().copied().fold(f64::NEG_INFINITY, f64::max).min(1.0);
    let idx = lambdas
        .iter()
        .position(|&l| l >= lambda_max - TIE_TOLERANCE)
        .expect("at least one bipartition");
    Ok(GgmReport {
        value: (1.0 - lambda_max).max(0.0),
        argmax_bipartition: bips[idx].clone(),
        lambda_max,
    })
}

/// Tolerance on decomposition weights summing to one.
pub const WEIGHT_TOLERANCE: f64 = 1e-9;
/// Entrywise tolerance for a decomposition reconstructing its state.
pub const RECONSTRUCTION_TOLERANCE: f64 = 1e-8;

/// Eigen-decomposition of `rho` as a pure-state ensemble, zero weights dropped.
pub fn spectral_decomposition(rho: &DensityMatrix) -> Result<Vec<(f64, PureState)>> {
    let spec = rho.eigh()?;
    let weights = crate::linalg::clip_spectrum(spec.eigenvalues.clone())?;
    weights
        .iter()
        .enumerate()
        .filter(|(_, &w)| w > 0.0)
        .map(|(k, &w)| {
            let v = spec.vector(k).expect("eigenvectors requested");
            Ok((w, PureState::normalized(rho.profile().clone(), v)?))
        })
        .collect()
}

/// Checks that `decomposition` is a probability-weighted ensemble of `rho`.
pub fn check_decomposition(rho: &DensityMatrix, decomposition: &[(f64, PureState)]) -> Result<()> {
    if decomposition.is_empty() {
        return Err(Error::InvalidDecomposition("empty decomposition".into()));
    }
    if let Some((w, _)) = decomposition.iter().find(|(w, _)| w.is_nan() || *w < 0.0) {
        return Err(Error::InvalidDecomposition(format!("negative weight {w}")));
    }
    let total: f64 = decomposition.iter().map(|(w, _)| w).sum();
    if (total - 1.0).abs() > WEIGHT_TOLERANCE {
        return Err(Error::InvalidDecomposition(format!(
            "weights sum to {total}, not 1 within {WEIGHT_TOLERANCE:e}"
        )));
    }
    let n = rho.dim();
    let mut acc = crate::linalg::ComplexMatrix::zeros(n, n);
    for (w, psi) in decomposition {
        if psi.profile() != rho.profile() {
            return Err(Error::ProfileMismatch(format!(
                "decomposition term on {:?}, state on {:?}",
                psi.profile().dims(),
                rho.profile().dims()
            )));
        }
        acc.add_scaled(&crate::linalg::ComplexMatrix::outer(psi.amplitudes()), *w)?;
    }
    let err = acc.max_abs_diff(rho.matrix());
    if err > RECONSTRUCTION_TOLERANCE {
        return Err(Error::InvalidDecomposition(format!(
            "decomposition misses the state by {err:e} (tolerance {RECONSTRUCTION_TOLERANCE:e})"
        )));
    }
    Ok(())
}

/// `sum_k p_k GGM(psi_k)` over the given decomposition, or the spectral one
/// when `None`. Upper bounds the convex-roof GGM of `rho`.
pub fn ggm_mixed_upper(rho: &DensityMatrix, decomposition: Option<&[(f64, PureState)]>) -> Result<f64> {
    let spectral;
    let terms = match decomposition {
        Some(d) => {
            check_decomposition(rho, d)?;
            d
        }
        None => {
            spectral = spectral_decomposition(rho)?;
            &spectral[..]
        }
    };
    terms
        .iter()
        .map(|(w, psi)| Ok(w * ggm_pure(psi)?.value))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::{make_ghz, make_w, mix_with_white_noise};
    use std::f64::consts::FRAC_PI_4;

    fn sides(n: usize) -> Vec<Vec<usize>> {
        enumerate_bipartitions(n).unwrap().into_iter().map(|b| b.side_a).collect()
    }

    #[test]
    fn bipartition_enumeration() {
        assert_eq!(sides(2), vec![vec![0]]);
        assert_eq!(sides(3), vec![vec![0], vec![0, 1], vec![0, 2]]);
        assert_eq!(sides(4).len(), 7);
        assert_eq!(sides(6).len(), 31);
        assert!(enumerate_bipartitions(1).is_err());
    }

    #[test]
    fn bipartition_canonicalization() {
        let b = Bipartition::new(&[2, 1], 3).unwrap();
        assert_eq!(b.side_a(), &[0]);
        assert_eq!(b.side_b(3), vec![1, 2]);
        assert!(Bipartition::new(&[0, 1, 2], 3).is_err());
        assert!(Bipartition::new(&[], 3).is_err());
        assert!(Bipartition::new(&[5], 3).is_err());
    }

    #[test]
    fn ghz_and_w_spot_values() {
        let g = ggm_pure(&make_ghz(FRAC_PI_4)).unwrap();
        assert!((g.value - 0.5).abs() < 1e-12);
        assert!((g.lambda_max - 0.5).abs() < 1e-12);
        assert_eq!(g.argmax_bipartition.side_a(), &[0]);
        let w = ggm_pure(&make_w((1.0 / 3f64.sqrt()).acos(), FRAC_PI_4)).unwrap();
        assert!((w.value - 1.0 / 3.0).abs() < 1e-12);
        assert!((w.lambda_max - 2.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn product_state_is_zero() {
        let psi = make_w(std::f64::consts::FRAC_PI_2, FRAC_PI_4);
        // Bell pair on (0, 1) times |1>: separable across {01}|{2}
        let g = ggm_pure(&psi).unwrap();
        assert!(g.value < 1e-12);
        assert_eq!(g.argmax_bipartition.side_a(), &[0, 1]);
    }

    #[test]
    fn mixed_upper_bounds() {
        let psi = make_ghz(0.4);
        let rho = psi.to_density();
        let direct = ggm_pure(&psi).unwrap().value;
        assert!((ggm_mixed_upper(&rho, None).unwrap() - direct).abs() < 1e-12);
        assert!((ggm_mixed_upper(&rho, Some(&[(1.0, psi.clone())])).unwrap() - direct).abs() < 1e-15);

        let p = DimensionProfile::uniform(3, 2).unwrap();
        let a = PureState::basis(p.clone(), &[0, 0, 0]).unwrap();
        let b = PureState::basis(p, &[1, 1, 1]).unwrap();
        let mix = DensityMatrix::mixture(&[(0.5, &a.to_density()), (0.5, &b.to_density())]).unwrap();
        assert_eq!(ggm_mixed_upper(&mix, Some(&[(0.5, a.clone()), (0.5, b.clone())])).unwrap(), 0.0);

        let noisy = mix_with_white_noise(&make_ghz(FRAC_PI_4), 0.2).unwrap();
        let v = ggm_mixed_upper(&noisy, None).unwrap();
        assert!((0.0..=0.5).contains(&v), "{v}");
    }

    #[test]
    fn decomposition_errors() {
        let p = DimensionProfile::uniform(3, 2).unwrap();
        let a = PureState::basis(p.clone(), &[0, 0, 0]).unwrap();
        let b = PureState::basis(p, &[1, 1, 1]).unwrap();
        let mix = DensityMatrix::mixture(&[(0.5, &a.to_density()), (0.5, &b.to_density())]).unwrap();
        assert!(matches!(
            ggm_mixed_upper(&mix, Some(&[(0.5, a.clone()), (0.4, b.clone())])),
            Err(Error::InvalidDecomposition(_))
        ));
        assert!(matches!(
            ggm_mixed_upper(&mix, Some(&[(0.7, a), (0.3, b)])),
            Err(Error::InvalidDecomposition(_))
        ));
    }
}
