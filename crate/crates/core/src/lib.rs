//! Decides whether the integral points on the complement of a union of
//! hyperplanes in projective space over a number field are Zariski-dense.

pub mod error;
pub mod exact;
pub mod arrangement;
pub mod cmfields;
pub mod density;
pub mod embeddings;
pub mod form;
pub mod galois;
pub mod io;
pub mod linalg;
pub mod numberfield;
pub mod witness;

pub use error::{Error, Result};
pub use exact::{Polynomial, Rational};
pub use form::Form;
pub use numberfield::{FieldElement, KPoly, NumberField, SubfieldEmbedding};
