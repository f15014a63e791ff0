use nalgebra::SymmetricEigen;
use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use super::TAU_HERM;
use crate::error::{Error, Result};

/// Eigenvalues sorted descending, with optional orthonormal eigenvectors
/// stored as the columns of `eigenvectors` in the same order.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Option<ComplexMatrix>,
}

impl Spectrum {
    pub fn max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// Column `k` of the eigenvector matrix.
    pub fn vector(&self, k: usize) -> Option<Vec<Complex64>> {
        let v = self.eigenvectors.as_ref()?;
        Some((0..v.rows()).map(|i| v[(i, k)]).collect())
    }

    /// `V diag(lambda) V^dagger`; `None` without eigenvectors.
    pub fn reconstruct(&self) -> Option<ComplexMatrix> {
        let v = self.eigenvectors.as_ref()?;
        let n = v.rows();
        let mut out = ComplexMatrix::zeros(n, n);
        for (k, &lam) in self.eigenvalues.iter().enumerate() {
            for i in 0..n {
                let vik = v[(i, k)] * lam;
                for j in 0..n {
                    out[(i, j)] += vik * v[(j, k)].conj();
                }
            }
        }
        Some(out)
    }
}

/// Eigenvalues of a Hermitian matrix, descending.
pub fn hermitian_eigs(m: &ComplexMatrix) -> Result<Spectrum> {
    decompose(m, false)
}

/// Eigenvalues and eigenvectors of a Hermitian matrix, descending.
pub fn hermitian_eigh(m: &ComplexMatrix) -> Result<Spectrum> {
    decompose(m, true)
}

fn decompose(m: &ComplexMatrix, vectors: bool) -> Result<Spectrum> {
    if !m.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "eigendecomposition of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let deviation = m.hermiticity_defect();
    if deviation > TAU_HERM {
        return Err(Error::NotHermitian {
            deviation,
            tolerance: TAU_HERM,
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Spectrum {
            eigenvalues: vec![],
            eigenvectors: vectors.then(|| ComplexMatrix::zeros(0, 0)),
        });
    }
    if n == 1 {
        return Ok(Spectrum {
            eigenvalues: vec![m[(0, 0)].re],
            eigenvectors: vectors.then(|| ComplexMatrix::identity(1)),
        });
    }
    let mut h = m.clone();
    h.hermitize();
    let na = h.to_nalgebra();
    if !vectors {
        let mut ev: Vec<f64> = SymmetricEigen::new(na).eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| b.total_cmp(a));
        return Ok(Spectrum {
            eigenvalues: ev,
            eigenvectors: None,
        });
    }
    let eig = SymmetricEigen::new(na);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let mut vecs = ComplexMatrix::zeros(n, n);
    for (k, &src) in order.iter().enumerate() {
        for i in 0..n {
            vecs[(i, k)] = eig.eigenvectors[(i, src)];
        }
    }
    Ok(Spectrum {
        eigenvalues: order.iter().map(|&k| eig.eigenvalues[k]).collect(),
        eigenvectors: Some(vecs),
    })
}
