//! Complex-matrix primitives, partial traces, Hermitian eigenanalysis and
//! entropies. All logarithms are base 2.

mod density;
mod eigen;
mod entropy;
mod matrix;
mod profile;

pub use density::DensityMatrix;
pub use density::clip_spectrum;
pub(crate) use density::{offsets, permutation_map};
pub use eigen::{hermitian_eigh, hermitian_eigs, Spectrum};
pub use entropy::{relative_entropy, shannon_entropy, von_neumann_entropy, SUPPORT_TOLERANCE};
pub use matrix::{kron_vec, tensor_product, ComplexMatrix};
pub use profile::{DimensionProfile, MAX_TOTAL_DIM};

/// Entrywise Hermiticity tolerance.
pub const TAU_HERM: f64 = 1e-10;
/// Trace tolerance.
pub const TAU_TR: f64 = 1e-9;
/// Most negative eigenvalue accepted as round-off.
pub const TAU_PSD: f64 = 1e-10;

/// Reduced state of `rho` on `keep`.
pub fn partial_trace(rho: &DensityMatrix, keep: &[usize]) -> crate::Result<DensityMatrix> {
    rho.partial_trace(keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn pure(dims: Vec<usize>, amps: Vec<Complex64>) -> DensityMatrix {
        DensityMatrix::new(DimensionProfile::new(dims).unwrap(), ComplexMatrix::outer(&amps)).unwrap()
    }

    #[test]
    fn bell_marginal_is_maximally_mixed() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let bell = pure(vec![2, 2], vec![c(h), c(0.0), c(0.0), c(h)]);
        let m = bell.partial_trace(&[1]).unwrap();
        assert!(m.matrix().max_abs_diff(&ComplexMatrix::from_real_diagonal(&[0.5, 0.5])) < 1e-15);
        assert_eq!(m.profile().dims(), &[2]);
    }

    #[test]
    fn product_state_marginal() {
        let p = DimensionProfile::subsystem(vec![2]).unwrap();
        let rho_b = DensityMatrix::new(
            p,
            ComplexMatrix::from_vec(2, 2, vec![c(0.7), Complex64::new(0.1, 0.2), Complex64::new(0.1, -0.2), c(0.3)]).unwrap(),
        )
        .unwrap();
        let zero = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        let joint = DensityMatrix::new(
            DimensionProfile::new(vec![2, 2]).unwrap(),
            tensor_product(&zero, rho_b.matrix()).unwrap(),
        )
        .unwrap();
        assert!(joint.partial_trace(&[1]).unwrap().matrix().max_abs_diff(rho_b.matrix()) < 1e-15);
    }

    #[test]
    fn w_two_site_marginal() {
        let s = 1.0 / 3f64.sqrt();
        let mut amps = vec![c(0.0); 8];
        for i in [3, 5, 6] {
            amps[i] = c(s);
        }
        let w = pure(vec![2, 2, 2], amps);
        let m = w.partial_trace(&[0, 1]).unwrap();
        // (2/3)|psi+><psi+| + (1/3)|11><11|, psi+ = (|01> + |10>)/sqrt2
        let mut expect = ComplexMatrix::zeros(4, 4);
        for (i, j) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            expect[(i, j)] = c(1.0 / 3.0);
        }
        expect[(3, 3)] = c(1.0 / 3.0);
        assert!(m.matrix().max_abs_diff(&expect) < 1e-15);
        let ev = hermitian_eigs(m.matrix()).unwrap().eigenvalues;
        for (got, want) in ev.iter().zip([2.0 / 3.0, 1.0 / 3.0, 0.0, 0.0]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn partial_trace_errors() {
        let rho = DensityMatrix::maximally_mixed(DimensionProfile::new(vec![2, 3]).unwrap());
        assert!(matches!(rho.partial_trace(&[2]), Err(crate::Error::InvalidPartyIndex { .. })));
        assert!(rho.partial_trace(&[]).is_err());
        assert_eq!(rho.partial_trace(&[1, 0]).unwrap(), rho);
    }

    #[test]
    fn invalid_density_matrices() {
        let p = DimensionProfile::new(vec![2, 2]).unwrap();
        let neg = ComplexMatrix::from_real_diagonal(&[0.6, 0.6, -0.1, -0.1]);
        assert!(matches!(DensityMatrix::new(p.clone(), neg), Err(crate::Error::NegativeEigenvalue { .. })));
        let tr = ComplexMatrix::from_real_diagonal(&[0.5, 0.5, 0.5, 0.5]);
        assert!(matches!(DensityMatrix::new(p.clone(), tr), Err(crate::Error::TraceNotUnit { .. })));
        let mut nh = ComplexMatrix::from_real_diagonal(&[0.25; 4]);
        nh[(0, 1)] = c(0.1);
        assert!(matches!(DensityMatrix::new(p, nh), Err(crate::Error::NotHermitian { .. })));
    }

    #[test]
    fn clipping_rules() {
        assert_eq!(clip_spectrum(vec![1.0, -1e-11]).unwrap(), vec![1.0, 0.0]);
        assert!(clip_spectrum(vec![1.0, -1e-9]).is_err());
    }

    #[test]
    fn permute_parties_swaps_factors() {
        let a = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        let b = ComplexMatrix::from_real_diagonal(&[0.2, 0.3, 0.5]);
        let ab = DensityMatrix::new(DimensionProfile::new(vec![2, 3]).unwrap(), tensor_product(&a, &b).unwrap()).unwrap();
        let ba = ab.permute_parties(&[1, 0]).unwrap();
        assert_eq!(ba.profile().dims(), &[3, 2]);
        assert!(ba.matrix().max_abs_diff(&tensor_product(&b, &a).unwrap()) < 1e-15);
    }
}
