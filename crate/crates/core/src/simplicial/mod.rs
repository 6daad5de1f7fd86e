//! Simplicial algebras, levelwise functors and their homotopy.

mod applied;
mod complex;
mod derived;
mod les;
mod resolution;
mod table;

pub use applied::{AmbientFunctor, AppliedFunctor, Mode, Piece};
pub use complex::{HomologyGroup, LevelSpace, SubquotientComplex};
pub use derived::{derived_dims, gamma, DerivedFunctor, Window};
pub use les::{connecting_map, ConnectingMap, ShortExactSequence};
pub use resolution::SimplicialAlgebra;
pub use table::DimTable;
