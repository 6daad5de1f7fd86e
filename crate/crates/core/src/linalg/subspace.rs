use super::{matrix::rref_in_place, BitVec, F2Matrix};
use crate::{Error, Result};

/// A linear subspace of `F2^n` held by its reduced row echelon basis.
///
/// The basis is sorted by pivot and every pivot column vanishes in all other
/// basis vectors, so two equal subspaces have identical representations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (0..ambient).map(|i| BitVec::unit(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// The span of `vectors`.
    pub fn from_vectors<I: IntoIterator<Item = BitVec>>(ambient: usize, vectors: I) -> Self {
        let mut rows: Vec<BitVec> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length mismatch"))
            .filter(|v| !v.is_zero())
            .collect();
        let pivots = rref_in_place(&mut rows, ambient);
        Subspace {
            ambient,
            basis: rows,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical representative of `v` modulo this subspace: the unique
    /// vector in `v + U` vanishing on every pivot column.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_assign(b);
            }
        }
        out
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &BitVec) -> Option<BitVec> {
        let coeffs = BitVec::from_indices(
            self.dim(),
            self.pivots
                .iter()
                .enumerate()
                .filter(|(_, &p)| v.get(p))
                .map(|(k, _)| k),
        );
        (self.combine(&coeffs) == *v).then_some(coeffs)
    }

    /// `sum_k coeffs[k] * basis[k]`.
    pub fn combine(&self, coeffs: &BitVec) -> BitVec {
        assert_eq!(coeffs.len(), self.dim(), "coefficient length mismatch");
        let mut out = BitVec::zeros(self.ambient);
        for k in coeffs.ones() {
            out.xor_assign(&self.basis[k]);
        }
        out
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        Subspace::from_vectors(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        let reduced: Vec<BitVec> = self.basis.iter().map(|b| other.reduce(b)).collect();
        let kernel = F2Matrix::from_columns(self.ambient, &reduced).kernel();
        Ok(Subspace::from_vectors(
            self.ambient,
            kernel.basis.iter().map(|c| self.combine(c)),
        ))
    }

    /// Image of this subspace under `m`.
    pub fn image_under(&self, m: &F2Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "dimension mismatch");
        Subspace::from_vectors(m.rows(), m.apply_all(&self.basis))
    }

    /// `{u in self : m u in target}`.
    pub fn preimage_within(&self, m: &F2Matrix, target: &Subspace) -> Subspace {
        assert_eq!(m.cols(), self.ambient, "dimension mismatch");
        assert_eq!(m.rows(), target.ambient, "dimension mismatch");
        let images: Vec<BitVec> = m
            .apply_all(&self.basis)
            .iter()
            .map(|v| target.reduce(v))
            .collect();
        let kernel = F2Matrix::from_columns(m.rows(), &images).kernel();
        Subspace::from_vectors(
            self.ambient,
            kernel.basis.iter().map(|c| self.combine(c)),
        )
    }

    /// Canonical basis of a complement of `sub` inside `self`: the echelon
    /// basis of `self` reduced modulo `sub`. Each vector vanishes on the
    /// pivots of `sub`.
    pub fn complement_basis(&self, sub: &Subspace) -> Result<Vec<BitVec>> {
        if !sub.is_subspace_of(self) {
            return Err(Error::NotASubspace);
        }
        let q = Subspace::from_vectors(self.ambient, self.basis.iter().map(|b| sub.reduce(b)));
        Ok(q.basis)
    }
}

/// `dim sup - dim sub`, checking `sub ⊆ sup`.
pub fn quotient_dim(sub: &Subspace, sup: &Subspace) -> Result<usize> {
    if !sub.is_subspace_of(sup) {
        return Err(Error::NotASubspace);
    }
    Ok(sup.dim() - sub.dim())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(n: usize, vs: &[&[bool]]) -> Subspace {
        Subspace::from_vectors(n, vs.iter().map(|v| BitVec::from_bools(v)))
    }

    #[test]
    fn coordinate_axes_meet_in_zero() {
        let u = span(2, &[&[true, false]]);
        let v = span(2, &[&[false, true]]);
        assert!(u.intersect(&v).unwrap().is_zero());
        assert_eq!(u.sum(&v), Subspace::full(2));
    }

    #[test]
    fn echelon_form_is_canonical() {
        let a = span(3, &[&[true, true, false], &[false, true, true]]);
        let b = span(3, &[&[true, false, true], &[true, true, false]]);
        assert_eq!(a, b);
        assert_eq!(a.pivots(), &[0, 1]);
    }

    #[test]
    fn quotient_dim_requires_containment() {
        let u = span(3, &[&[true, false, false]]);
        let v = span(3, &[&[false, true, false]]);
        assert!(matches!(quotient_dim(&u, &v), Err(Error::NotASubspace)));
        assert_eq!(quotient_dim(&u, &Subspace::full(3)).unwrap(), 2);
    }

    #[test]
    fn complement_and_coordinates() {
        let sup = Subspace::full(3);
        let sub = span(3, &[&[true, true, false]]);
        let comp = sup.complement_basis(&sub).unwrap();
        assert_eq!(comp.len(), 2);
        for c in &comp {
            assert!(!c.get(0));
        }
        let v = BitVec::from_bools(&[true, true, false]);
        assert_eq!(sub.coordinates(&v), Some(BitVec::from_bools(&[true])));
        assert_eq!(sub.coordinates(&BitVec::from_bools(&[true, false, false])), None);
    }

    #[test]
    fn preimage_within_restricts_domain() {
        let m = F2Matrix::from_grid(&["111"]);
        let domain = span(3, &[&[true, false, false], &[false, true, false]]);
        let k = domain.preimage_within(&m, &Subspace::zero(1));
        assert_eq!(k, span(3, &[&[true, true, false]]));
    }
}
