//! JSON state files.
//!
//! ```json
//! { "kind": "pure", "dims": [2, 2], "label": "bell",
//!   "amplitudes": [[re, im], ...] }
//! ```
//! Mixed states carry `"matrix": [[[re, im], ...], ...]` (row-major) instead.
//! Numbers are written with 17 significant digits so binary doubles round-trip.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::value::RawValue;

use super::{PureState, State};
use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, DensityMatrix, DimensionProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StateKind {
    Pure,
    Mixed,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Num {
    Float(f64),
    Text(String),
}

impl Num {
    fn value(&self) -> Result<f64> {
        match self {
            Num::Float(x) => Ok(*x),
            Num::Text(s) => s
                .trim()
                .parse::<f64>()
                .map_err(|_| Error::Schema(format!("not a number: {s:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RecordIn {
    kind: StateKind,
    dims: Vec<usize>,
    #[serde(default)]
    label: String,
    amplitudes: Option<Vec<[Num; 2]>>,
    matrix: Option<Vec<Vec<[Num; 2]>>>,
}

#[derive(Serialize)]
struct RecordOut<'a> {
    kind: StateKind,
    dims: &'a [usize],
    label: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    amplitudes: Option<Vec<[Box<RawValue>; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<[Box<RawValue>; 2]>>>,
}

/// 17 significant digits.
pub fn format_exact(x: f64) -> Result<String> {
    if !x.is_finite() {
        return Err(Error::Schema(format!("non-finite value {x}")));
    }
    Ok(format!("{x:.16e}"))
}

fn raw_pair(z: Complex64) -> Result<[Box<RawValue>; 2]> {
    let raw = |x| -> Result<Box<RawValue>> { Ok(RawValue::from_string(format_exact(x)?)?) };
    Ok([raw(z.re)?, raw(z.im)?])
}

fn pair(p: &[Num; 2]) -> Result<Complex64> {
    Ok(Complex64::new(p[0].value()?, p[1].value()?))
}

/// Serializes a state to the JSON file format.
pub fn state_to_json(state: &State, label: &str) -> Result<String> {
    let record = match state {
        State::Pure(psi) => RecordOut {
            kind: StateKind::Pure,
            dims: psi.profile().dims(),
            label,
            amplitudes: Some(psi.amplitudes().iter().map(|&z| raw_pair(z)).collect::<Result<_>>()?),
            matrix: None,
        },
        State::Mixed(rho) => {
            let m = rho.matrix();
            let rows = (0..m.rows())
                .map(|i| m.row(i).iter().map(|&z| raw_pair(z)).collect::<Result<Vec<_>>>())
                .collect::<Result<_>>()?;
            RecordOut {
                kind: StateKind::Mixed,
                dims: rho.profile().dims(),
                label,
                amplitudes: None,
                matrix: Some(rows),
            }
        }
    };
    let mut s = serde_json::to_string(&record)?;
    s.push('\n');
    Ok(s)
}

/// Parses and validates a state from the JSON file format. Returns the label too.
pub fn state_from_json(text: &str) -> Result<(State, String)> {
    let rec: RecordIn = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
    let profile = DimensionProfile::subsystem(rec.dims.clone())?;
    let n = profile.total();
    let state = match (rec.kind, rec.amplitudes, rec.matrix) {
        (StateKind::Pure, Some(amps), None) => {
            if amps.len() != n {
                return Err(Error::Schema(format!(
                    "{} amplitudes for dims {:?} (expected {n})",
                    amps.len(),
                    rec.dims
                )));
            }
            let v = amps.iter().map(pair).collect::<Result<Vec<_>>>()?;
            State::Pure(PureState::new(profile, v)?)
        }
        (StateKind::Mixed, None, Some(rows)) => {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::Schema(format!(
                    "matrix for dims {:?} must be {n}x{n}",
                    rec.dims
                )));
            }
            let data = rows
                .iter()
                .flat_map(|r| r.iter().map(pair))
                .collect::<Result<Vec<_>>>()?;
            let m = ComplexMatrix::from_vec(n, n, data)?;
            State::Mixed(DensityMatrix::new(profile, m)?)
        }
        (kind, a, m) => {
            return Err(Error::Schema(format!(
                "kind {kind:?} requires exactly one of \"amplitudes\" (pure) or \"matrix\" (mixed); found amplitudes: {}, matrix: {}",
                a.is_some(),
                m.is_some()
            )))
        }
    };
    Ok((state, rec.label))
}

pub fn write_state(state: &State, label: &str, path: impl AsRef<Path>) -> Result<()> {
    fs::write(path, state_to_json(state, label)?)?;
    Ok(())
}

pub fn read_state(path: impl AsRef<Path>) -> Result<(State, String)> {
    state_from_json(&fs::read_to_string(path)?)
}
