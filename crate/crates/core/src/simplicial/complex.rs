use crate::algebra::{Basis, Element};
use crate::linalg::{BitVec, F2Matrix, Subspace};
use crate::{Error, Result};

/// The chains of one level: the subquotient `upper / lower` of the span of
/// `basis`.
#[derive(Clone, Debug)]
pub struct LevelSpace {
    basis: Basis,
    upper: Subspace,
    lower: Subspace,
}

impl LevelSpace {
    pub fn new(basis: Basis, upper: Subspace, lower: Subspace) -> Self {
        LevelSpace { basis, upper, lower }
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn upper(&self) -> &Subspace {
        &self.upper
    }

    pub fn lower(&self) -> &Subspace {
        &self.lower
    }

    pub(crate) fn set_upper(&mut self, upper: Subspace) {
        self.upper = upper;
    }

    /// Dimension of the subquotient.
    pub fn dim(&self) -> usize {
        self.upper.dim() - self.lower.dim()
    }
}

/// A chain complex of subquotients in one internal degree:
/// `boundary[n - 1]` maps level `n` to level `n - 1`.
#[derive(Clone, Debug)]
pub struct SubquotientComplex {
    degree: u32,
    levels: Vec<LevelSpace>,
    boundary: Vec<F2Matrix>,
}

impl SubquotientComplex {
    pub fn new(degree: u32, levels: Vec<LevelSpace>, boundary: Vec<F2Matrix>) -> Result<Self> {
        if levels.is_empty() || boundary.len() + 1 != levels.len() {
            return Err(Error::Invalid("a complex needs one boundary per positive level".into()));
        }
        for (n, b) in boundary.iter().enumerate() {
            let (src, dst) = (&levels[n + 1], &levels[n]);
            if b.cols() != src.basis.len() || b.rows() != dst.basis.len() {
                return Err(Error::DimensionMismatch {
                    expected: src.basis.len(),
                    found: b.cols(),
                });
            }
        }
        for l in &levels {
            if !l.lower.is_subspace_of(&l.upper) {
                return Err(Error::NotASubspace);
            }
        }
        Ok(SubquotientComplex { degree, levels, boundary })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn top(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &LevelSpace {
        &self.levels[n]
    }

    /// The boundary out of level `n >= 1`.
    pub fn boundary(&self, n: usize) -> &F2Matrix {
        &self.boundary[n - 1]
    }

    /// Checks that the boundary preserves `upper` and `lower` and squares
    /// into `lower`.
    pub fn validate(&self) -> Result<()> {
        for n in 1..=self.top() {
            let b = self.boundary(n);
            let (src, dst) = (&self.levels[n], &self.levels[n - 1]);
            if !src.upper.image_under(b).is_subspace_of(&dst.upper)
                || !src.lower.image_under(b).is_subspace_of(&dst.lower)
            {
                return Err(Error::Invalid(format!(
                    "boundary out of level {n} does not respect the subquotient"
                )));
            }
            if n >= 2 {
                let twice = self.boundary(n - 1).mul(b);
                let below = &self.levels[n - 2];
                if !src.upper.image_under(&twice).is_subspace_of(&below.lower) {
                    return Err(Error::Invalid(format!(
                        "boundary squares to a nonzero map on level {n} in degree {}",
                        self.degree
                    )));
                }
            }
        }
        Ok(())
    }

    /// Homology at level `n < top`.
    pub fn homology(&self, n: usize) -> Result<HomologyGroup> {
        if n >= self.top() {
            return Err(Error::IncompleteWindow(format!(
                "homology at level {n} needs chains on level {}",
                n + 1
            )));
        }
        let here = &self.levels[n];
        let cycles = if n == 0 {
            here.upper.clone()
        } else {
            here.upper
                .preimage_within(self.boundary(n), &self.levels[n - 1].lower)
        };
        let incoming = self.levels[n + 1].upper.image_under(self.boundary(n + 1));
        let boundaries = incoming.sum(&here.lower);
        let classes = cycles.complement_basis(&boundaries)?;
        let classes = Subspace::from_vectors(cycles.ambient_dim(), classes);
        Ok(HomologyGroup {
            level: n,
            degree: self.degree,
            basis: here.basis.clone(),
            cycles,
            boundaries,
            classes,
        })
    }
}

/// A homology group with canonical representatives.
#[derive(Clone, Debug)]
pub struct HomologyGroup {
    level: usize,
    degree: u32,
    basis: Basis,
    cycles: Subspace,
    boundaries: Subspace,
    /// Echelon basis of the representatives, each vanishing on the pivots
    /// of `boundaries`.
    classes: Subspace,
}

impl HomologyGroup {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.classes.dim()
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn cycles(&self) -> &Subspace {
        &self.cycles
    }

    pub fn boundaries(&self) -> &Subspace {
        &self.boundaries
    }

    /// Canonical representatives as coordinate vectors.
    pub fn representative_vectors(&self) -> &[BitVec] {
        self.classes.basis()
    }

    /// Canonical representatives as elements in the chain basis.
    pub fn representatives(&self) -> Vec<Element> {
        self.classes.basis().iter().map(|v| self.basis.element(v)).collect()
    }

    /// Coordinates of the class of a cycle in the canonical basis.
    pub fn class_of(&self, v: &BitVec) -> Result<BitVec> {
        if !self.cycles.contains(v) {
            return Err(Error::Invalid(format!(
                "not a cycle on level {} in degree {}",
                self.level, self.degree
            )));
        }
        let r = self.boundaries.reduce(v);
        self.classes
            .coordinates(&r)
            .ok_or_else(|| Error::Invalid("class outside the canonical span".into()))
    }

    /// Coordinates of the class of an element (projected onto the basis).
    pub fn class_of_element(&self, e: &Element) -> Result<BitVec> {
        self.class_of(&self.basis.project(e))
    }

    /// Whether two cycles are homologous.
    pub fn same_class(&self, a: &BitVec, b: &BitVec) -> Result<bool> {
        Ok(self.class_of(a)? == self.class_of(b)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GradedAlgebra;

    #[test]
    fn two_term_complex() {
        // F2 --1--> F2 --0--> F2
        let a = GradedAlgebra::polynomial(&[("x", 2)]).unwrap();
        let basis = Basis::of_degree(&a, 2);
        let full = Subspace::full(1);
        let zero = Subspace::zero(1);
        let levels = vec![
            LevelSpace::new(basis.clone(), full.clone(), zero.clone()),
            LevelSpace::new(basis.clone(), full.clone(), zero.clone()),
            LevelSpace::new(basis, full, zero),
        ];
        let c = SubquotientComplex::new(
            2,
            levels,
            vec![F2Matrix::zeros(1, 1), F2Matrix::identity(1)],
        )
        .unwrap();
        c.validate().unwrap();
        assert_eq!(c.homology(0).unwrap().dim(), 1);
        assert_eq!(c.homology(1).unwrap().dim(), 0);
        assert!(c.homology(2).is_err());
    }
}
