//! The de Rham type functors on presented algebras and the comparison maps
//! between them.

mod ell;
mod expand;
mod maps;
mod omega;
mod tilde;
mod twisted;

use std::fmt;
use std::str::FromStr;

pub use ell::{EllPresentation, EllRelation, EllVariant};
pub use maps::{cartier_phi, q_map, v_map, ComparisonReport};
pub use omega::{omega_bar, Cohomology, OmegaAlgebra};
pub use tilde::{omega_tilde, OmegaTilde};
pub use twisted::{gr_filtration, omega_tw, OmegaTw};

use crate::Error;

/// Functor names accepted by the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctorTag {
    OmegaBar,
    Z,
    B,
    H,
    OmegaTilde,
    Ell,
    OmegaTw,
}

impl FunctorTag {
    pub const ALL: [FunctorTag; 7] = [
        FunctorTag::OmegaBar,
        FunctorTag::Z,
        FunctorTag::B,
        FunctorTag::H,
        FunctorTag::OmegaTilde,
        FunctorTag::Ell,
        FunctorTag::OmegaTw,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FunctorTag::OmegaBar => "omegabar",
            FunctorTag::Z => "z",
            FunctorTag::B => "b",
            FunctorTag::H => "h",
            FunctorTag::OmegaTilde => "omegatilde",
            FunctorTag::Ell => "ell",
            FunctorTag::OmegaTw => "omegatw",
        }
    }
}

impl fmt::Display for FunctorTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FunctorTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        FunctorTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnsupportedFunctor(s.to_string()))
    }
}

/// Dimension of each graded piece of `a` in degrees `0..=max_deg`.
pub fn graded_dims(a: &crate::algebra::GradedAlgebra, max_deg: u32) -> Vec<usize> {
    (0..=max_deg).map(|t| a.basis_of_degree(t).len()).collect()
}
