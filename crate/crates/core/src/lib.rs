//! Exact F2 computations for the derived functors of de Rham type functors
//! on graded algebras with a lambda operation.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: presented graded-commutative F2-algebras, normal forms,
//!   homomorphisms and the lambda operation.
//! * [`linalg`]: bit-packed linear algebra over F2.
//! * [`functors`]: the de Rham algebra with its cycles, boundaries and
//!   cohomology, the functors `ell`, `L`, `Omega~`, `Omega_tw` and the
//!   comparison maps between them.
//! * [`simplicial`]: the explicit simplicial resolution of an exterior algebra
//!   on one generator, levelwise functor application, homology and connecting
//!   maps.
//! * [`series`]: truncated power series and rational closed forms.

pub mod algebra;
mod error;
pub mod functors;
pub mod linalg;
pub mod series;
pub mod simplicial;

pub use error::{Error, Result};
