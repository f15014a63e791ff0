//! Multiport dense-coding quantum advantage and genuine multipartite
//! entanglement measures (generalized geometric measure, relative entropy of
//! entanglement bounds) for multiparty states, with the complementarity
//! quantity `delta_C` linking them.
//!
//! Party 0 is always the sender; parties `1..N` are receivers.

pub mod complementarity;
pub mod dense_coding;
pub mod error;
pub mod ggm;
pub mod linalg;
pub mod rel_ent;
pub mod states;

pub use error::{Error, Result};
