use super::applied::{AppliedFunctor, Mode, Piece};
use super::complex::{HomologyGroup, SubquotientComplex};
use crate::algebra::Element;
use crate::linalg::{BitVec, F2Matrix, Subspace};
use crate::{Error, Result};

/// A levelwise short exact sequence `0 -> A -> B -> C -> 0` of subquotient
/// complexes in fixed internal degrees.
#[derive(Clone, Debug)]
pub struct ShortExactSequence {
    sub: SubquotientComplex,
    mid: SubquotientComplex,
    quotient: SubquotientComplex,
    inclusion: Vec<F2Matrix>,
    projection: Vec<F2Matrix>,
}

/// Some `u` in `domain` with `map u = target` modulo `slack`.
fn lift(map: &F2Matrix, domain: &Subspace, slack: &Subspace, target: &BitVec) -> Option<BitVec> {
    let mut columns = map.apply_all(domain.basis());
    columns.extend(slack.basis().iter().cloned());
    let m = F2Matrix::from_columns(map.rows(), &columns);
    let c = m.solve(target)?;
    Some(domain.combine(&c.slice(0, domain.dim())))
}

impl ShortExactSequence {
    /// Checks exactness and the chain map property on every level.
    pub fn new(
        sub: SubquotientComplex,
        mid: SubquotientComplex,
        quotient: SubquotientComplex,
        inclusion: Vec<F2Matrix>,
        projection: Vec<F2Matrix>,
    ) -> Result<Self> {
        let top = mid.top();
        if sub.top() != top || quotient.top() != top || inclusion.len() != top + 1 || projection.len() != top + 1 {
            return Err(Error::NotExact("complexes and maps cover different levels".into()));
        }
        let seq = ShortExactSequence {
            sub,
            mid,
            quotient,
            inclusion,
            projection,
        };
        for n in 0..=top {
            seq.check_level(n)?;
        }
        Ok(seq)
    }

    fn check_level(&self, n: usize) -> Result<()> {
        let fail = |what: &str| Err(Error::NotExact(format!("{what} on level {n}")));
        let (a, b, c) = (self.sub.level(n), self.mid.level(n), self.quotient.level(n));
        let (i, p) = (&self.inclusion[n], &self.projection[n]);
        if !a.upper().image_under(i).is_subspace_of(b.upper()) || !a.lower().image_under(i).is_subspace_of(b.lower()) {
            return fail("inclusion does not respect the subquotients");
        }
        if !b.upper().image_under(p).is_subspace_of(c.upper()) || !b.lower().image_under(p).is_subspace_of(c.lower()) {
            return fail("projection does not respect the subquotients");
        }
        if !a.upper().image_under(&p.mul(i)).is_subspace_of(c.lower()) {
            return fail("composite is nonzero");
        }
        if a.upper().preimage_within(i, b.lower()).dim() != a.lower().dim() {
            return fail("inclusion is not injective");
        }
        if b.upper().image_under(p).sum(c.lower()).dim() != c.upper().dim() {
            return fail("projection is not surjective");
        }
        if a.dim() + c.dim() != b.dim() {
            return fail("dimensions do not add up");
        }
        if n >= 1 {
            let commutes = |f: &F2Matrix, g: &F2Matrix, src: &SubquotientComplex, dst: &SubquotientComplex| {
                let lhs = dst.boundary(n).mul(f);
                let rhs = g.mul(src.boundary(n));
                let diff = F2Matrix::from_columns(
                    lhs.rows(),
                    &(0..lhs.cols())
                        .map(|j| {
                            let mut col = lhs.column(j);
                            col.xor_assign(&rhs.column(j));
                            col
                        })
                        .collect::<Vec<_>>(),
                );
                src.level(n).upper().image_under(&diff).is_subspace_of(dst.level(n - 1).lower())
            };
            if !commutes(i, &self.inclusion[n - 1], &self.sub, &self.mid) {
                return fail("inclusion is not a chain map");
            }
            if !commutes(p, &self.projection[n - 1], &self.mid, &self.quotient) {
                return fail("projection is not a chain map");
            }
        }
        Ok(())
    }

    /// `0 -> Z^{t+1} -> Omega^{t+1} -> B^t -> 0`, the second map being the
    /// de Rham differential.
    pub fn de_rham(f: &AppliedFunctor, t: u32, top: usize, mode: Mode) -> Result<Self> {
        let sub = f.complex(Piece::Cycles, t + 1, top, mode)?;
        let mid = f.complex(Piece::All, t + 1, top, mode)?;
        let quotient = f.complex(Piece::Boundaries, t, top, mode)?;
        let inclusion = (0..=top).map(|n| F2Matrix::identity(mid.level(n).basis().len())).collect();
        let projection = (0..=top)
            .map(|n| f.de_rham_matrix(n, t + 1, mode))
            .collect::<Result<_>>()?;
        ShortExactSequence::new(sub, mid, quotient, inclusion, projection)
    }

    /// `0 -> B^t -> Z^t -> H^t -> 0`.
    pub fn cohomology(f: &AppliedFunctor, t: u32, top: usize, mode: Mode) -> Result<Self> {
        let sub = f.complex(Piece::Boundaries, t, top, mode)?;
        let mid = f.complex(Piece::Cycles, t, top, mode)?;
        let quotient = f.complex(Piece::Cohomology, t, top, mode)?;
        let id: Vec<F2Matrix> = (0..=top).map(|n| F2Matrix::identity(mid.level(n).basis().len())).collect();
        ShortExactSequence::new(sub, mid, quotient, id.clone(), id)
    }

    pub fn sub(&self) -> &SubquotientComplex {
        &self.sub
    }

    pub fn mid(&self) -> &SubquotientComplex {
        &self.mid
    }

    pub fn quotient(&self) -> &SubquotientComplex {
        &self.quotient
    }

    /// The connecting map `H_{m+1}(C) -> H_m(A)`.
    pub fn connecting(&self, m: usize) -> Result<ConnectingMap> {
        if m + 2 > self.mid.top() {
            return Err(Error::IncompleteWindow(format!(
                "the connecting map out of level {} needs chains on level {}",
                m + 1,
                m + 2
            )));
        }
        let source = self.quotient.homology(m + 1)?;
        let target = self.sub.homology(m)?;
        let columns = source
            .representative_vectors()
            .iter()
            .map(|v| self.connect_vector(m, &target, v))
            .collect::<Result<Vec<_>>>()?;
        let matrix = F2Matrix::from_columns(target.dim(), &columns);
        Ok(ConnectingMap { source, target, matrix })
    }

    fn connect_vector(&self, m: usize, target: &HomologyGroup, gamma: &BitVec) -> Result<BitVec> {
        let c = self.quotient.level(m + 1);
        let b = self.mid.level(m + 1);
        let beta = lift(&self.projection[m + 1], b.upper(), c.lower(), gamma)
            .ok_or_else(|| Error::NotExact(format!("no lift through the projection on level {}", m + 1)))?;
        let boundary = self.mid.boundary(m + 1).mul_vec(&beta);
        let alpha = lift(&self.inclusion[m], self.sub.level(m).upper(), self.mid.level(m).lower(), &boundary)
            .ok_or_else(|| Error::NotExact(format!("boundary does not come from the kernel on level {m}")))?;
        target.class_of(&alpha)
    }
}

/// The matrix of a connecting homomorphism in canonical coordinates.
#[derive(Clone, Debug)]
pub struct ConnectingMap {
    source: HomologyGroup,
    target: HomologyGroup,
    matrix: F2Matrix,
}

impl ConnectingMap {
    pub fn source(&self) -> &HomologyGroup {
        &self.source
    }

    pub fn target(&self) -> &HomologyGroup {
        &self.target
    }

    pub fn matrix(&self) -> &F2Matrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Class in the target of the image of a cycle of the source.
    pub fn apply(&self, e: &Element) -> Result<BitVec> {
        let coords = self.source.class_of_element(e)?;
        Ok(self.matrix.mul_vec(&coords))
    }
}

/// The connecting map of `seq` out of level `m + 1`.
pub fn connecting_map(seq: &ShortExactSequence, m: usize) -> Result<ConnectingMap> {
    seq.connecting(m)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::algebra::GradedAlgebra;
    use crate::simplicial::{AmbientFunctor, SimplicialAlgebra};

    #[test]
    fn constant_sequences_have_zero_connecting_map() {
        let a = Arc::new(GradedAlgebra::exterior("x", 2).unwrap());
        let c = SimplicialAlgebra::constant(a, 3).unwrap();
        let f = AppliedFunctor::new(AmbientFunctor::OmegaBar, &c).unwrap();
        for t in 0..6 {
            let seq = ShortExactSequence::de_rham(&f, t, 3, Mode::Unnormalized).unwrap();
            assert!(seq.connecting(0).unwrap().matrix().is_zero());
            let seq = ShortExactSequence::cohomology(&f, t, 3, Mode::Normalized).unwrap();
            assert!(seq.connecting(1).unwrap().matrix().is_zero());
        }
    }
}
