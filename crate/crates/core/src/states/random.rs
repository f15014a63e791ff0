//! Seeded samplers. Every sample derives its own generator from
//! `(seed, index)`, so ensembles do not depend on evaluation order.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::PureState;
use crate::linalg::{ComplexMatrix, DensityMatrix, DimensionProfile};

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-sample seed `hash(seed, index)`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed ^ splitmix64(index.wrapping_add(0x632b_e59b_d9b4_e019)))
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n` independent standard complex Gaussians (real and imaginary parts ~ N(0, 1)).
pub fn complex_gaussians<R: rand::Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex64::new(re, im)
        })
        .collect()
}

/// Haar-random pure state: normalized vector of complex Gaussians.
pub fn sample_haar_pure(profile: &DimensionProfile, seed: u64) -> PureState {
    let mut rng = rng_from_seed(seed);
    loop {
        let v = complex_gaussians(&mut rng, profile.total());
        if let Ok(psi) = PureState::normalized(profile.clone(), v) {
            return psi;
        }
    }
}

/// Hilbert-Schmidt random mixed state: ancilla (of equal dimension) traced
/// out of a Haar-random pure state, i.e. `G G^dagger / tr(G G^dagger)` for a
/// square complex Gaussian `G`.
pub fn sample_mixed_hs(profile: &DimensionProfile, seed: u64) -> DensityMatrix {
    let n = profile.total();
    let mut rng = rng_from_seed(seed);
    let g = ComplexMatrix::from_vec(n, n, complex_gaussians(&mut rng, n * n)).expect("square");
    let gg = g.matmul(&g.adjoint()).expect("square");
    let tr = gg.trace().re;
    DensityMatrix::from_parts(profile.clone(), gg.scale(1.0 / tr))
}

/// Haar-random `n x n` unitary by Gram-Schmidt on complex Gaussian columns.
pub fn sample_haar_unitary(n: usize, seed: u64) -> ComplexMatrix {
    let mut rng = rng_from_seed(seed);
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v = complex_gaussians(&mut rng, n);
        for _ in 0..2 {
            for c in &cols {
                let proj: Complex64 = c.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                v.iter_mut().zip(c).for_each(|(x, a)| *x -= proj * a);
            }
        }
        let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-8 {
            v.iter_mut().for_each(|x| *x /= norm);
            cols.push(v);
        }
    }
    let mut u = ComplexMatrix::zeros(n, n);
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            u[(i, j)] = x;
        }
    }
    u
}

/// One Haar-random unitary per party.
pub fn sample_local_unitaries(profile: &DimensionProfile, seed: u64) -> Vec<ComplexMatrix> {
    profile
        .dims()
        .iter()
        .enumerate()
        .map(|(k, &d)| sample_haar_unitary(d, derive_seed(seed, k as u64)))
        .collect()
}
