use super::density::DensityMatrix;
use super::eigen::hermitian_eigh;
use super::matrix::ComplexMatrix;
use super::TAU_PSD;
use crate::error::{Error, Result};

/// Weight of `rho` on the kernel of `sigma` above which the relative entropy
/// is reported as infinite.
pub const SUPPORT_TOLERANCE: f64 = 1e-10;

/// Shannon entropy in bits of a probability vector, `0 log 0 = 0`.
pub fn shannon_entropy(p: &[f64]) -> f64 {
    let h: f64 = p
        .iter()
        .filter(|&&x| x > 0.0)
        .map(|&x| -x * x.log2())
        .sum();
    h.max(0.0)
}

/// `S(rho) = -tr(rho log2 rho)` over the clipped spectrum.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    let spectrum = rho.clipped_spectrum()?;
    Ok(shannon_entropy(&spectrum).min((rho.dim() as f64).log2()))
}

/// `S(rho || sigma) = tr(rho log2 rho - rho log2 sigma)` in bits;
/// `f64::INFINITY` when the support of `rho` is not contained in that of `sigma`.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.profile() != sigma.profile() {
        return Err(Error::ProfileMismatch(format!(
            "relative entropy between {:?} and {:?}",
            rho.profile().dims(),
            sigma.profile().dims()
        )));
    }
    let s_rho = von_neumann_entropy(rho)?;
    let cross = cross_entropy(rho.matrix(), sigma.matrix())?;
    Ok((cross - s_rho).max(0.0))
}

/// `-tr(rho log2 sigma)`, infinite on support mismatch.
fn cross_entropy(rho: &ComplexMatrix, sigma: &ComplexMatrix) -> Result<f64> {
    let eig = hermitian_eigh(sigma)?;
    let vecs = eig.eigenvectors.as_ref().expect("requested eigenvectors");
    let n = rho.rows();
    let mut kernel_weight = 0.0;
    let mut cross = 0.0;
    let mut rv = vec![num_complex::Complex64::new(0.0, 0.0); n];
    for (a, &mu) in eig.eigenvalues.iter().enumerate() {
        if mu < -TAU_PSD {
            return Err(Error::NegativeEigenvalue {
                value: mu,
                tolerance: TAU_PSD,
            });
        }
        // r_a = <v_a| rho |v_a>
        for (i, slot) in rv.iter_mut().enumerate() {
            *slot = (0..n).map(|j| rho[(i, j)] * vecs[(j, a)]).sum();
        }
        let r: f64 = (0..n).map(|i| (vecs[(i, a)].conj() * rv[i]).re).sum();
        if mu <= TAU_PSD {
            kernel_weight += r.max(0.0);
        } else {
            cross -= r * mu.log2();
        }
    }
    if kernel_weight > SUPPORT_TOLERANCE {
        return Ok(f64::INFINITY);
    }
    Ok(cross)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DimensionProfile;
    use num_complex::Complex64;

    fn qubit(diag: &[f64]) -> DensityMatrix {
        let p = DimensionProfile::subsystem(vec![2]).unwrap();
        DensityMatrix::new(p, ComplexMatrix::from_real_diagonal(diag)).unwrap()
    }

    #[test]
    fn entropy_spot_values() {
        assert_eq!(von_neumann_entropy(&qubit(&[1.0, 0.0])).unwrap(), 0.0);
        assert!((von_neumann_entropy(&qubit(&[0.5, 0.5])).unwrap() - 1.0).abs() < 1e-15);
        let p = DimensionProfile::new(vec![3, 3]).unwrap();
        let mixed = DensityMatrix::maximally_mixed(p);
        assert!((von_neumann_entropy(&mixed).unwrap() - 9f64.log2()).abs() < 1e-12);
        // H(1/3) evaluated as a scalar expression
        let h = (2.0 / 3.0) * (1.5f64).log2() + (1.0 / 3.0) * 3f64.log2();
        assert!((h - 0.918296).abs() < 1e-6);
        let s = von_neumann_entropy(&qubit(&[2.0 / 3.0, 1.0 / 3.0])).unwrap();
        assert!((s - h).abs() < 1e-14);
    }

    #[test]
    fn entropy_of_pure_superposition() {
        let p = DimensionProfile::subsystem(vec![2]).unwrap();
        let v = [Complex64::new(0.6, 0.0), Complex64::new(0.0, 0.8)];
        let rho = DensityMatrix::new(p, ComplexMatrix::outer(&v)).unwrap();
        assert!(von_neumann_entropy(&rho).unwrap() < 1e-12);
    }

    #[test]
    fn relative_entropy_spot_values() {
        let zero = qubit(&[1.0, 0.0]);
        let one = qubit(&[0.0, 1.0]);
        let mixed = qubit(&[0.5, 0.5]);
        assert_eq!(relative_entropy(&mixed, &mixed).unwrap(), 0.0);
        assert!((relative_entropy(&zero, &mixed).unwrap() - 1.0).abs() < 1e-14);
        assert_eq!(relative_entropy(&zero, &one).unwrap(), f64::INFINITY);
        // sigma-kernel weight below tolerance is dropped
        let almost = qubit(&[1.0 - 1e-12, 1e-12]);
        assert!(relative_entropy(&almost, &zero).unwrap().is_finite());
    }

    #[test]
    fn relative_entropy_profile_mismatch() {
        let a = qubit(&[1.0, 0.0]);
        let b = DensityMatrix::maximally_mixed(DimensionProfile::new(vec![2, 2]).unwrap());
        assert!(matches!(relative_entropy(&a, &b), Err(Error::ProfileMismatch(_))));
    }

    #[test]
    fn shannon_handles_zeros() {
        assert_eq!(shannon_entropy(&[1.0, 0.0, 0.0]), 0.0);
        assert!((shannon_entropy(&[0.25; 4]) - 2.0).abs() < 1e-15);
    }
}
