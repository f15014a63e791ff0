use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest total Hilbert-space dimension handled by the library.
pub const MAX_TOTAL_DIM: usize = 1 << 14;

/// Ordered local dimensions, sender (party 0) first.
///
/// Basis indices are big-endian with party 0 most significant:
/// `i = sum_k i_k * prod_{j>k} d_j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DimensionProfile {
    dims: Vec<usize>,
    total: usize,
}

impl DimensionProfile {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.len() < 2 {
            return Err(Error::InvalidProfile(format!(
                "need at least 2 parties, got {}",
                dims.len()
            )));
        }
        Self::subsystem(dims)
    }

    /// Like [`DimensionProfile::new`] but also accepts a single party, for
    /// reduced states and single-system test inputs.
    pub fn subsystem(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidProfile("no parties".into()));
        }
        if let Some(&d) = dims.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidProfile(format!(
                "local dimension {d} < 2 in {dims:?}"
            )));
        }
        let total = dims
            .iter()
            .try_fold(1usize, |acc, &d| acc.checked_mul(d))
            .filter(|&t| t <= MAX_TOTAL_DIM)
            .ok_or_else(|| {
                Error::DimensionOverflow(format!(
                    "total dimension of {dims:?} exceeds {MAX_TOTAL_DIM}"
                ))
            })?;
        Ok(Self { dims, total })
    }

    /// `parties` copies of local dimension `d`.
    pub fn uniform(parties: usize, d: usize) -> Result<Self> {
        Self::new(vec![d; parties])
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn parties(&self) -> usize {
        self.dims.len()
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn dim(&self, party: usize) -> usize {
        self.dims[party]
    }

    /// `Some(d)` when every party has local dimension `d`.
    pub fn uniform_dim(&self) -> Option<usize> {
        let d = self.dims[0];
        self.dims.iter().all(|&x| x == d).then_some(d)
    }

    /// Row-major strides: `stride[k] = prod_{j>k} d_j`.
    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for k in (0..self.dims.len() - 1).rev() {
            strides[k] = strides[k + 1] * self.dims[k + 1];
        }
        strides
    }

    pub(crate) fn check_party(&self, party: usize) -> Result<()> {
        if party >= self.dims.len() {
            Err(Error::InvalidPartyIndex {
                index: party,
                parties: self.dims.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Validates a party set: nonempty, in range, no duplicates. Returns it sorted.
    pub(crate) fn check_parties(&self, parties: &[usize]) -> Result<Vec<usize>> {
        if parties.is_empty() {
            return Err(Error::ShapeMismatch("empty party set".into()));
        }
        let mut sorted = parties.to_vec();
        sorted.sort_unstable();
        for &p in &sorted {
            self.check_party(p)?;
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::ShapeMismatch(format!(
                "duplicate party index in {parties:?}"
            )));
        }
        Ok(sorted)
    }

    /// Sub-profile of the given (sorted) parties.
    pub(crate) fn restrict(&self, parties: &[usize]) -> Result<Self> {
        Self::subsystem(parties.iter().map(|&p| self.dims[p]).collect())
    }

    /// Splits a basis index into per-party digits.
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.dims.len()];
        for k in (0..self.dims.len()).rev() {
            out[k] = index % self.dims[k];
            index /= self.dims[k];
        }
        out
    }

    /// Inverse of [`DimensionProfile::digits`].
    pub fn index_of(&self, digits: &[usize]) -> usize {
        digits
            .iter()
            .zip(&self.dims)
            .fold(0, |acc, (&i, &d)| acc * d + i)
    }
}

impl TryFrom<Vec<usize>> for DimensionProfile {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        Self::new(dims)
    }
}

impl From<DimensionProfile> for Vec<usize> {
    fn from(p: DimensionProfile) -> Self {
        p.dims
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_profiles() {
        assert!(DimensionProfile::new(vec![2]).is_err());
        assert!(DimensionProfile::new(vec![2, 1]).is_err());
        assert!(matches!(
            DimensionProfile::new(vec![1 << 10, 1 << 10]),
            Err(Error::DimensionOverflow(_))
        ));
        assert!(matches!(
            DimensionProfile::new(vec![usize::MAX, 3]),
            Err(Error::DimensionOverflow(_))
        ));
    }

    #[test]
    fn digits_are_big_endian() {
        let p = DimensionProfile::new(vec![2, 3, 2]).unwrap();
        assert_eq!(p.total(), 12);
        assert_eq!(p.strides(), vec![6, 2, 1]);
        assert_eq!(p.digits(7), vec![1, 0, 1]);
        for i in 0..12 {
            assert_eq!(p.index_of(&p.digits(i)), i);
        }
        assert_eq!(p.uniform_dim(), None);
        assert_eq!(DimensionProfile::uniform(3, 3).unwrap().uniform_dim(), Some(3));
    }
}
