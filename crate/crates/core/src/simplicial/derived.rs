use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::applied::{AmbientFunctor, AppliedFunctor, Mode, Piece};
use super::complex::{HomologyGroup, SubquotientComplex};
use super::resolution::SimplicialAlgebra;
use super::table::DimTable;
use crate::algebra::Element;
use crate::functors::{FunctorTag, OmegaAlgebra};
use crate::{Error, Result};

/// The range of homological levels and internal degrees computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Window {
    /// Highest homological level reported; chains are built one level
    /// beyond.
    pub max_level: usize,
    pub max_internal: u32,
    /// Only classes of total degree `t - i` at most this are kept.
    pub max_total: Option<u32>,
    /// Require the top level to vanish within the window.
    pub check_top: bool,
}

impl Window {
    /// Everything on levels `0..=max_level` in internal degrees up to
    /// `max_internal`.
    pub fn new(max_level: usize, max_internal: u32) -> Self {
        Window {
            max_level,
            max_internal,
            max_total: None,
            check_top: false,
        }
    }

    /// The window holding every class of total degree at most `n` for the
    /// sphere of dimension `s`.
    pub fn for_total_degree(s: u32, n: u32) -> Result<Self> {
        if s < 2 {
            return Err(Error::Invalid("the sphere degree must be at least 2".into()));
        }
        let step = 2 * s - 2;
        let max_level = n.div_ceil(step) as usize + 1;
        Ok(Window {
            max_level,
            max_internal: n + max_level as u32,
            max_total: Some(n),
            check_top: true,
        })
    }

    pub fn contains(&self, level: usize, t: u32) -> bool {
        level <= self.max_level
            && t <= self.max_internal
            && self
                .max_total
                .is_none_or(|n| i64::from(t) - level as i64 <= i64::from(n))
    }
}

/// A functor of the library applied to a simplicial algebra.
#[derive(Clone, Debug)]
pub struct DerivedFunctor {
    tag: FunctorTag,
    piece: Piece,
    applied: AppliedFunctor,
}

impl DerivedFunctor {
    pub fn new(tag: FunctorTag, s: &SimplicialAlgebra) -> Result<Self> {
        let kind = AmbientFunctor::of(tag)?;
        Ok(DerivedFunctor {
            tag,
            piece: Piece::of(tag),
            applied: AppliedFunctor::new(kind, s)?,
        })
    }

    /// The underlying simplicial algebra itself.
    pub fn underlying(s: &SimplicialAlgebra) -> Result<Self> {
        Ok(DerivedFunctor {
            tag: FunctorTag::OmegaBar,
            piece: Piece::All,
            applied: AppliedFunctor::new(AmbientFunctor::Underlying, s)?,
        })
    }

    pub fn tag(&self) -> FunctorTag {
        self.tag
    }

    pub fn piece(&self) -> Piece {
        self.piece
    }

    pub fn applied(&self) -> &AppliedFunctor {
        &self.applied
    }

    pub fn max_level(&self) -> usize {
        self.applied.max_level()
    }

    pub fn complex(&self, t: u32, top: usize, mode: Mode) -> Result<SubquotientComplex> {
        self.applied.complex(self.piece, t, top, mode)
    }

    /// `H_level` in internal degree `t`.
    pub fn homology(&self, level: usize, t: u32, mode: Mode) -> Result<HomologyGroup> {
        self.complex(t, level + 1, mode)?.homology(level)
    }

    /// Canonical representatives, moved into the normalized subcomplex.
    pub fn representatives(&self, group: &HomologyGroup) -> Vec<Element> {
        group
            .representatives()
            .iter()
            .map(|e| self.applied.normalize_chain(group.level(), e))
            .collect()
    }

    /// Dimensions of the homology over a window.
    pub fn table(&self, name: &str, s: u32, window: Window, mode: Mode) -> Result<DimTable> {
        let top = window.max_level + 1;
        let rows: Vec<Vec<(usize, u32, usize)>> = (0..=window.max_internal)
            .into_par_iter()
            .map(|t| {
                let c = self.complex(t, top, mode)?;
                let mut row = Vec::new();
                for n in 0..=window.max_level {
                    if !window.contains(n, t) {
                        continue;
                    }
                    let dim = c.homology(n)?.dim();
                    if window.check_top && n == window.max_level && dim > 0 {
                        return Err(Error::IncompleteWindow(format!(
                            "level {n} carries classes in degree {t}"
                        )));
                    }
                    row.push((n, t, dim));
                }
                Ok(row)
            })
            .collect::<Result<_>>()?;
        let mut table = DimTable::new(name, s, window);
        for (n, t, dim) in rows.into_iter().flatten() {
            table.insert(n, t, dim);
        }
        Ok(table)
    }
}

/// `dim H_i(Lambda; F)^t` for the exterior algebra on a class of degree `s`.
pub fn derived_dims(tag: FunctorTag, s: u32, window: Window, mode: Mode) -> Result<DimTable> {
    let resolution = SimplicialAlgebra::sphere_resolution(s, window.max_level + 1)?;
    DerivedFunctor::new(tag, &resolution)?.table(tag.name(), s, window, mode)
}

/// `y_1 ... y_i dy_1 ... dy_j` in the de Rham algebra of level `j` of the
/// sphere resolution.
pub fn gamma(omega: &OmegaAlgebra, i: usize, j: usize) -> Result<Element> {
    if i > j || omega.base_generators() != j + 1 {
        return Err(Error::Invalid(format!("gamma({i}, {j}) needs level {j} with i <= j")));
    }
    let mut factors: Vec<(usize, u32)> = (1..=i).map(|k| (k, 1)).collect();
    factors.extend((1..=j).map(|k| (omega.d_generator(k), 1)));
    Ok(omega.algebra().monomial(&factors).into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_arithmetic() {
        let w = Window::for_total_degree(2, 10).unwrap();
        assert_eq!(w.max_level, 6);
        assert_eq!(w.max_internal, 16);
        assert!(w.contains(1, 11));
        assert!(!w.contains(1, 12));
        let w = Window::for_total_degree(3, 10).unwrap();
        assert_eq!(w.max_level, 4);
        assert_eq!(Window::for_total_degree(2, 0).unwrap().max_level, 1);
    }

    #[test]
    fn omegabar_four_classes_per_level() {
        let s = 2;
        let table = derived_dims(FunctorTag::OmegaBar, s, Window::new(3, 16), Mode::Normalized).unwrap();
        for i in 0..=3usize {
            let base = i as u32 * (2 * s - 1);
            for t in [0, s - 1, s, 2 * s - 1] {
                assert_eq!(table.get(i, base + t), 1, "level {i} degree {}", base + t);
            }
            assert_eq!(table.level_total(i), 4);
        }
    }

    #[test]
    fn gamma_degrees() {
        let r = SimplicialAlgebra::sphere_resolution(2, 3).unwrap();
        let f = DerivedFunctor::new(FunctorTag::Z, &r).unwrap();
        let omega = f.applied().omega(3).unwrap();
        let g = gamma(omega, 1, 3).unwrap();
        assert!(g.has_degree(4 + 9));
        assert!(gamma(omega, 2, 1).is_err());
    }
}
