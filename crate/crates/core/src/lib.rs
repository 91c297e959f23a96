//! Exact computations on the graded pieces of the space of 3-loop Jacobi
//! diagrams, reduced to invariant theory of S4 acting on polynomial rings.

pub mod asymptotics;
pub mod coverage;
pub mod diagrams;
pub mod error;
pub mod exact;
pub mod lemma;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
pub use exact::BigRational;
pub use poly::{Monomial, Poly, VarSet};
