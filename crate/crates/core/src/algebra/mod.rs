//! Graded-commutative F2-algebras presented by generators and square
//! rewrite rules, with an optional lambda operation.

mod basis;
mod element;
mod graded;
mod hom;
mod monomial;
mod spec;

pub use basis::Basis;
pub use element::{Element, ElementDegree};
pub use graded::{AlgebraBuilder, Generator, GradedAlgebra, SquareRule};
pub use hom::AlgebraHom;
pub use monomial::Monomial;
pub use spec::{AlgebraSpec, GeneratorSpec};
