//! Expanded cyclic codes over finite fields: field arithmetic, basis
//! expansion, subspace subcode dimensions and minimum distance bounds.

pub mod enumerate;
pub mod error;
pub mod expansion;
pub mod basis;
pub mod bounds;
pub mod cyclic;
pub mod galois;
pub mod linalg;
pub mod subspace;

pub use error::{Error, Result};
pub use galois::{Elem, Field, Poly, Subfield};
