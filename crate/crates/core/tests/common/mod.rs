#![allow(dead_code)]

use num_complex::Complex64;

use mqdc_core::linalg::{ComplexMatrix, DensityMatrix};

/// Partial trace by direct summation over the traced digits.
pub fn brute_partial_trace(rho: &DensityMatrix, keep: &[usize]) -> Vec<Vec<Complex64>> {
    let dims = rho.profile().dims().to_vec();
    let n = dims.len();
    let traced: Vec<usize> = (0..n).filter(|p| !keep.contains(p)).collect();
    let kept_total: usize = keep.iter().map(|&p| dims[p]).product();
    let traced_total: usize = traced.iter().map(|&p| dims[p]).product();
    let m = rho.matrix();

    let split = |mut x: usize, parties: &[usize]| -> Vec<usize> {
        let mut out = vec![0; parties.len()];
        for (slot, &p) in parties.iter().enumerate().rev() {
            out[slot] = x % dims[p];
            x /= dims[p];
        }
        out
    };
    let join = |kd: &[usize], td: &[usize]| -> usize {
        let mut digits = vec![0; n];
        for (slot, &p) in keep.iter().enumerate() {
            digits[p] = kd[slot];
        }
        for (slot, &p) in traced.iter().enumerate() {
            digits[p] = td[slot];
        }
        digits.iter().zip(&dims).fold(0, |acc, (&d, &size)| acc * size + d)
    };

    let mut out = vec![vec![Complex64::new(0.0, 0.0); kept_total]; kept_total];
    for (i, row) in out.iter_mut().enumerate() {
        let ki = split(i, keep);
        for (j, cell) in row.iter_mut().enumerate() {
            let kj = split(j, keep);
            for t in 0..traced_total {
                let td = split(t, &traced);
                *cell += m[(join(&ki, &td), join(&kj, &td))];
            }
        }
    }
    out
}

pub fn max_entry_diff(a: &ComplexMatrix, b: &[Vec<Complex64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, row) in b.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            worst = worst.max((a[(i, j)] - v).norm());
        }
    }
    worst
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}
