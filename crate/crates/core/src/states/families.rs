//! Named state families.

use num_complex::Complex64;

use super::PureState;
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, DimensionProfile};

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn three_qubits() -> DimensionProfile {
    DimensionProfile::uniform(3, 2).expect("static profile")
}

/// `cos(theta)|000> + sin(theta)|111>`.
pub fn make_ghz(theta: f64) -> PureState {
    let mut amps = vec![real(0.0); 8];
    amps[0] = real(theta.cos());
    amps[7] = real(theta.sin());
    PureState::new(three_qubits(), amps).expect("unit norm by construction")
}

/// `sin(t)cos(p)|011> + sin(t)sin(p)|101> + cos(t)|110>`.
pub fn make_w(theta_p: f64, phi_p: f64) -> PureState {
    let mut amps = vec![real(0.0); 8];
    amps[0b011] = real(theta_p.sin() * phi_p.cos());
    amps[0b101] = real(theta_p.sin() * phi_p.sin());
    amps[0b110] = real(theta_p.cos());
    PureState::new(three_qubits(), amps).expect("unit norm by construction")
}

/// `sum_k c_k |k k ... k>` on `parties` parties of local dimension `coeffs.len()`.
/// Coefficients are normalized.
pub fn make_ghz_general(coeffs: &[Complex64], parties: usize) -> Result<PureState> {
    let d = coeffs.len();
    let profile = DimensionProfile::uniform(parties, d)?;
    let mut amps = vec![real(0.0); profile.total()];
    for (k, &c) in coeffs.iter().enumerate() {
        amps[profile.index_of(&vec![k; parties])] = c;
    }
    PureState::normalized(profile, amps)
}

/// `sum_k c_k |0 ... 1_k ... 0>` (one excitation at party `k`) on
/// `coeffs.len()` parties of local dimension `d`. Coefficients are normalized.
pub fn make_w_general(coeffs: &[Complex64], d: usize) -> Result<PureState> {
    let parties = coeffs.len();
    let profile = DimensionProfile::uniform(parties, d)?;
    let mut amps = vec![real(0.0); profile.total()];
    for (k, &c) in coeffs.iter().enumerate() {
        let mut digits = vec![0; parties];
        digits[k] = 1;
        amps[profile.index_of(&digits)] = c;
    }
    PureState::normalized(profile, amps)
}

/// `(1 - p)|psi><psi| + p I / D`.
pub fn mix_with_white_noise(psi: &PureState, p: f64) -> Result<DensityMatrix> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::OutOfRange(format!("noise weight {p} not in [0, 1]")));
    }
    let n = psi.profile().total();
    let mut m = ComplexMatrix::outer(psi.amplitudes()).scale(1.0 - p);
    m.add_scaled(&ComplexMatrix::identity(n), p / n as f64)?;
    Ok(DensityMatrix::from_parts(psi.profile().clone(), m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, FRAC_PI_4, FRAC_PI_6};

    fn close(a: &[Complex64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, &y)| (x - y).norm() < 1e-15)
    }

    #[test]
    fn ghz_spot_values() {
        assert!(close(make_ghz(0.0).amplitudes(), &[1.0, 0., 0., 0., 0., 0., 0., 0.]));
        let h = FRAC_1_SQRT_2;
        assert!(close(make_ghz(FRAC_PI_4).amplitudes(), &[h, 0., 0., 0., 0., 0., 0., h]));
        let r3 = 3f64.sqrt() / 2.0;
        assert!(close(make_ghz(FRAC_PI_6).amplitudes(), &[r3, 0., 0., 0., 0., 0., 0., 0.5]));
    }

    #[test]
    fn ghz_sender_marginal_is_diagonal() {
        for &t in &[0.3, 1.1, 2.0, 2.9] {
            let m = make_ghz(t).reduced(&[0]).unwrap();
            let want = ComplexMatrix::from_real_diagonal(&[t.cos().powi(2), t.sin().powi(2)]);
            assert!(m.matrix().max_abs_diff(&want) < 1e-12);
        }
    }

    #[test]
    fn w_spot_values() {
        let h = FRAC_1_SQRT_2;
        let w = make_w(FRAC_PI_2, FRAC_PI_4);
        assert!(close(w.amplitudes(), &[0., 0., 0., h, 0., h, 0., 0.]));
        assert!(close(make_w(0.0, 1.234).amplitudes(), &[0., 0., 0., 0., 0., 0., 1., 0.]));
        // sin t cos p = sin t sin p = cos t = 1/sqrt3
        let s = 1.0 / 3f64.sqrt();
        let std_w = make_w(s.acos(), FRAC_PI_4);
        assert!(close(std_w.amplitudes(), &[0., 0., 0., s, 0., s, s, 0.]));
    }

    #[test]
    fn general_families() {
        let g = make_ghz_general(&[real(1.0), real(1.0), real(1.0)], 3).unwrap();
        assert_eq!(g.profile().dims(), &[3, 3, 3]);
        assert!((g.amplitudes()[0] - real(1.0 / 3f64.sqrt())).norm() < 1e-15);
        assert!((g.amplitudes()[26] - real(1.0 / 3f64.sqrt())).norm() < 1e-15);
        let w = make_w_general(&[real(1.0); 3], 2).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!(close(w.amplitudes(), &[0., s, s, 0., s, 0., 0., 0.]));
        assert!(make_ghz_general(&[real(0.0); 2], 3).is_err());
    }

    #[test]
    fn white_noise_mixing() {
        let profile = DimensionProfile::new(vec![2, 2]).unwrap();
        let psi = PureState::basis(profile, &[0, 0]).unwrap();
        assert_eq!(mix_with_white_noise(&psi, 0.0).unwrap(), psi.to_density());
        let full = mix_with_white_noise(&psi, 1.0).unwrap();
        assert!(full.matrix().max_abs_diff(&ComplexMatrix::from_real_diagonal(&[0.25; 4])) < 1e-16);
        assert!(mix_with_white_noise(&psi, 1.5).is_err());
        assert!(mix_with_white_noise(&psi, -0.1).is_err());
    }
}
