//! Exact GF(p) algebra for artinian local rings and connected graded
//! algebras: minimal resolutions, Ext-algebra presentations, quadratic
//! duality, linearity defect and multiplicity.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod error;
pub mod extalg;
pub mod field;
pub mod graded;
pub mod lindef;
pub mod linalg;
pub mod localalg;
pub mod poly;
pub mod quadratic;
pub mod resolve;
pub mod series;

pub use error::{Error, Result};
pub use field::{Elem, PrimeField};
pub use graded::GradedAlgebra;
pub use linalg::{Echelon, Matrix, Subspace};
pub use localalg::{build_finite_algebra, FiniteLocalAlgebra, RingPresentation};
pub use quadratic::QuadraticPresentation;
pub use poly::{parse_polynomial, parse_tensor, Monomial, Polynomial, TensorElement, Word};

pub use series::TruncSeries;
