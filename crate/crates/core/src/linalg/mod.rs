//! Exact linear algebra over F2 on bit-packed vectors.
//!
//! Everything here returns canonical reduced echelon bases so that results
//! are reproducible bit for bit.

mod bitvec;
mod matrix;
mod subspace;

pub use bitvec::BitVec;
pub use matrix::F2Matrix;
pub use subspace::{quotient_dim, Subspace};
