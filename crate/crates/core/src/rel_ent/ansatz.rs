use num_complex::Complex64;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ggm::{enumerate_bipartitions, Bipartition};
use crate::linalg::{hermitian_eigh, offsets, von_neumann_entropy, ComplexMatrix, DensityMatrix, DimensionProfile};
use crate::states::{complex_gaussians, rng_from_seed};

const ANSATZ_TOLERANCE: f64 = 1e-12;

/// `weight * |a><a| ⊗ |b><b|` across `bipartition`, with `side_a` living on
/// the canonical side (parties in increasing order).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnsatzTerm {
    pub weight: f64,
    pub bipartition: Bipartition,
    pub side_a: Vec<Complex64>,
    pub side_b: Vec<Complex64>,
}

/// Convex mixture of pure states that are each product across some
/// bipartition, optionally blended with white noise (itself fully product).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BisepAnsatz {
    pub terms: Vec<AnsatzTerm>,
    pub white_noise: f64,
}

impl BisepAnsatz {
    pub fn without_noise(&self) -> Self {
        Self {
            terms: self.terms.clone(),
            white_noise: 0.0,
        }
    }

    pub fn validate(&self, profile: &DimensionProfile) -> Result<()> {
        let total: f64 = self.terms.iter().map(|t| t.weight).sum();
        if (total - 1.0).abs() > ANSATZ_TOLERANCE || self.terms.iter().any(|t| t.weight < 0.0) {
            return Err(Error::InvalidDecomposition(format!("ansatz weights sum to {total}")));
        }
        if !(0.0..=1.0).contains(&self.white_noise) {
            return Err(Error::OutOfRange(format!("white-noise weight {}", self.white_noise)));
        }
        let n = profile.parties();
        for t in &self.terms {
            let da: usize = t.bipartition.side_a().iter().map(|&p| profile.dim(p)).product();
            let db: usize = t.bipartition.side_b(n).iter().map(|&p| profile.dim(p)).product();
            if t.side_a.len() != da || t.side_b.len() != db {
                return Err(Error::ShapeMismatch("ansatz vector length".into()));
            }
            for v in [&t.side_a, &t.side_b] {
                let ns: f64 = v.iter().map(|z| z.norm_sqr()).sum();
                if (ns - 1.0).abs() > ANSATZ_TOLERANCE {
                    return Err(Error::NotNormalized {
                        norm_sq: ns,
                        tolerance: ANSATZ_TOLERANCE,
                    });
                }
            }
        }
        Ok(())
    }

    /// The biseparable state described by the ansatz.
    pub fn to_density(&self, profile: &DimensionProfile) -> Result<DensityMatrix> {
        self.validate(profile)?;
        let dim = profile.total();
        let mut sigma = ComplexMatrix::zeros(dim, dim);
        for t in &self.terms {
            let map = SplitMap::new(profile, &t.bipartition);
            let phi = map.embed(&t.side_a, &t.side_b);
            sigma.add_scaled(&ComplexMatrix::outer(&phi), t.weight * (1.0 - self.white_noise))?;
        }
        sigma.add_scaled(&ComplexMatrix::identity(dim), self.white_noise / dim as f64)?;
        DensityMatrix::new(profile.clone(), sigma)
    }
}

/// Full basis index -> (side A index, side B index) for one bipartition.
#[derive(Debug, Clone)]
pub(crate) struct SplitMap {
    ia: Vec<usize>,
    ib: Vec<usize>,
    da: usize,
    db: usize,
}

impl SplitMap {
    pub(crate) fn new(profile: &DimensionProfile, bip: &Bipartition) -> Self {
        let a = bip.side_a();
        let b = bip.side_b(profile.parties());
        let off_a = offsets(profile, a);
        let off_b = offsets(profile, &b);
        let mut ia = vec![0; profile.total()];
        let mut ib = vec![0; profile.total()];
        for (x, &oa) in off_a.iter().enumerate() {
            for (y, &ob) in off_b.iter().enumerate() {
                ia[oa + ob] = x;
                ib[oa + ob] = y;
            }
        }
        Self {
            ia,
            ib,
            da: off_a.len(),
            db: off_b.len(),
        }
    }

    pub(crate) fn embed(&self, u: &[Complex64], v: &[Complex64]) -> Vec<Complex64> {
        self.ia.iter().zip(&self.ib).map(|(&a, &b)| u[a] * v[b]).collect()
    }
}

struct TermLayout {
    bip: usize,
    offset: usize,
}

/// Unconstrained parameterization of a fixed-size ansatz: per term one
/// softmax logit followed by raw complex vectors for both sides.
pub(crate) struct Problem {
    rho: ComplexMatrix,
    profile: DimensionProfile,
    entropy: f64,
    noise: f64,
    bips: Vec<Bipartition>,
    maps: Vec<SplitMap>,
    layout: Vec<TermLayout>,
    n_params: usize,
}

fn log_mean_inverse(x: f64, y: f64) -> f64 {
    // (ln x - ln y) / (x - y), continuous at x = y
    let d = x - y;
    if d == 0.0 {
        1.0 / x
    } else {
        (d / y).ln_1p() / d
    }
}

impl Problem {
    pub(crate) fn new(rho: &DensityMatrix, terms: usize, noise: f64) -> Result<Self> {
        let profile = rho.profile().clone();
        let bips = enumerate_bipartitions(profile.parties())?;
        let maps: Vec<SplitMap> = bips.iter().map(|b| SplitMap::new(&profile, b)).collect();
        let mut layout = Vec::with_capacity(terms);
        let mut offset = 0;
        for k in 0..terms {
            let bip = k % bips.len();
            layout.push(TermLayout { bip, offset });
            offset += 1 + 2 * (maps[bip].da + maps[bip].db);
        }
        Ok(Self {
            rho: rho.matrix().clone(),
            entropy: von_neumann_entropy(rho)?,
            profile,
            noise,
            bips,
            maps,
            layout,
            n_params: offset,
        })
    }

    pub(crate) fn initial_point(&self, seed: u64) -> Vec<f64> {
        let mut rng = rng_from_seed(seed);
        let mut x = Vec::with_capacity(self.n_params);
        for t in &self.layout {
            let m = &self.maps[t.bip];
            let z: f64 = StandardNormal.sample(&mut rng);
            x.push(z);
            for c in complex_gaussians(&mut rng, m.da + m.db) {
                x.push(c.re);
                x.push(c.im);
            }
        }
        x
    }

    fn unpack(&self, x: &[f64], t: &TermLayout) -> (Vec<Complex64>, f64, Vec<Complex64>, f64) {
        let m = &self.maps[t.bip];
        let raw = |start: usize, len: usize| -> (Vec<Complex64>, f64) {
            let v: Vec<Complex64> = (0..len)
                .map(|i| Complex64::new(x[start + 2 * i], x[start + 2 * i + 1]))
                .collect();
            let r = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt().max(1e-300);
            (v.into_iter().map(|z| z / r).collect(), r)
        };
        let (u, ru) = raw(t.offset + 1, m.da);
        let (v, rv) = raw(t.offset + 1 + 2 * m.da, m.db);
        (u, ru, v, rv)
    }

    fn weights(&self, x: &[f64]) -> Vec<f64> {
        let zmax = self.layout.iter().map(|t| x[t.offset]).fold(f64::NEG_INFINITY, f64::max);
        let e: Vec<f64> = self.layout.iter().map(|t| (x[t.offset] - zmax).exp()).collect();
        let s: f64 = e.iter().sum();
        e.into_iter().map(|v| v / s).collect()
    }

    pub(crate) fn decode(&self, x: &[f64], noise: f64) -> BisepAnsatz {
        let w = self.weights(x);
        let terms = self
            .layout
            .iter()
            .zip(w)
            .map(|(t, weight)| {
                let (u, _, v, _) = self.unpack(x, t);
                AnsatzTerm {
                    weight,
                    bipartition: self.bips[t.bip].clone(),
                    side_a: u,
                    side_b: v,
                }
            })
            .collect();
        BisepAnsatz {
            terms,
            white_noise: noise,
        }
    }

    /// `S(rho || sigma_eps(x))` in bits and its gradient.
    pub(crate) fn objective_and_gradient(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        let dim = self.profile.total();
        let w = self.weights(x);
        let mut phis = Vec::with_capacity(self.layout.len());
        let mut sigma = ComplexMatrix::zeros(dim, dim);
        for (t, &wk) in self.layout.iter().zip(&w) {
            let (u, ru, v, rv) = self.unpack(x, t);
            let phi = self.maps[t.bip].embed(&u, &v);
            let s = sigma.as_mut_slice();
            let c = wk * (1.0 - self.noise);
            for i in 0..dim {
                let pi = phi[i] * c;
                for j in 0..dim {
                    s[i * dim + j] += pi * phi[j].conj();
                }
            }
            phis.push((phi, u, ru, v, rv));
        }
        for i in 0..dim {
            sigma[(i, i)] += Complex64::new(self.noise / dim as f64, 0.0);
        }
        let eig = match hermitian_eigh(&sigma) {
            Ok(e) => e,
            Err(_) => {
                grad.iter_mut().for_each(|g| *g = 0.0);
                return f64::INFINITY;
            }
        };
        let vecs = eig.eigenvectors.as_ref().expect("eigenvectors");
        let mu: Vec<f64> = eig.eigenvalues.iter().map(|&m| m.max(1e-300)).collect();
        let rho_e = vecs.adjoint().matmul(&self.rho).and_then(|m| m.matmul(vecs)).expect("square");

        let mut f = -self.entropy;
        for a in 0..dim {
            f -= rho_e[(a, a)].re * mu[a].log2();
        }

        // G = -(1 - eps)/ln2 * V (L ∘ rho_e) V^dagger
        let mut m = ComplexMatrix::zeros(dim, dim);
        for a in 0..dim {
            for b in 0..dim {
                m[(a, b)] = rho_e[(a, b)] * log_mean_inverse(mu[a], mu[b]);
            }
        }
        let g_mat = vecs
            .matmul(&m)
            .and_then(|t| t.matmul(&vecs.adjoint()))
            .expect("square")
            .scale(-(1.0 - self.noise) / std::f64::consts::LN_2);

        let mut term_grad = Vec::with_capacity(self.layout.len());
        for (t, (phi, u, ru, v, rv)) in self.layout.iter().zip(&phis) {
            let map = &self.maps[t.bip];
            let h = g_mat.mul_vec(phi).expect("square");
            let gk: f64 = phi.iter().zip(&h).map(|(p, q)| (p.conj() * q).re).sum();
            term_grad.push(gk);
            let wk = w[term_grad.len() - 1];
            let mut gu = vec![Complex64::new(0.0, 0.0); map.da];
            let mut gv = vec![Complex64::new(0.0, 0.0); map.db];
            for ((&ia, &ib), hi) in map.ia.iter().zip(&map.ib).zip(&h) {
                gu[ia] += v[ib].conj() * hi * wk;
                gv[ib] += u[ia].conj() * hi * wk;
            }
            let mut write = |start: usize, g: &[Complex64], unit: &[Complex64], r: f64| {
                let proj: f64 = unit.iter().zip(g).map(|(a, b)| (a.conj() * b).re).sum();
                for (i, (gi, ui)) in g.iter().zip(unit).enumerate() {
                    let d = (gi - ui * proj) * (2.0 / r);
                    grad[start + 2 * i] = d.re;
                    grad[start + 2 * i + 1] = d.im;
                }
            };
            write(t.offset + 1, &gu, u, *ru);
            write(t.offset + 1 + 2 * map.da, &gv, v, *rv);
        }
        let mean: f64 = w.iter().zip(&term_grad).map(|(a, b)| a * b).sum();
        for ((t, wk), gk) in self.layout.iter().zip(&w).zip(&term_grad) {
            grad[t.offset] = wk * (gk - mean);
        }
        f
    }
}
