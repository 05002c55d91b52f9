//! Exact-arithmetic calculus of 2-term L-infinity algebras: axiom
//! checking, weak morphisms and their homotopies, butterflies with their
//! bicategorical composition, homotopy fibers and the 7-term long exact
//! sequence.
//!
//! Everything is computed over a field (rationals by default, an optional
//! prime field per session) with no floating point anywhere, so all
//! results are exact and reproducible. All values are immutable after
//! construction and all operations are pure functions; sharing across
//! threads is safe.

pub mod error;
pub mod scalar;
pub mod matrix;
pub mod quotient;
pub mod tensor;
pub mod report;

pub use error::{Error, Result};
pub use matrix::{fiber_product, RationalMatrix};
pub use quotient::{pushout, quotient, QuotientPresentation};
pub use report::{AxiomFailure, ValidationReport};
pub use scalar::{FieldSpec, Scalar};
pub use tensor::{Bilinear, Trilinear};
