use std::sync::Arc;

use crate::algebra::{AlgebraBuilder, AlgebraHom, Basis, Element, GradedAlgebra, Monomial, SquareRule};
use crate::linalg::{BitVec, F2Matrix, Subspace};
use crate::{Error, Result};

/// The twisted de Rham algebra of a base algebra: the base generators
/// followed by one `d`-generator per base generator, with `(dg)^2 = d(lambda g)`.
#[derive(Clone, Debug)]
pub struct OmegaAlgebra {
    base: Arc<GradedAlgebra>,
    algebra: Arc<GradedAlgebra>,
}

/// Cohomology of the de Rham complex in one degree.
#[derive(Clone, Debug)]
pub struct Cohomology {
    pub degree: u32,
    pub cycles: Subspace,
    pub boundaries: Subspace,
    /// Canonical representatives: the echelon basis of the cycles reduced
    /// modulo the boundaries.
    pub representatives: Vec<Element>,
}

impl Cohomology {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

fn d_name(name: &str) -> String {
    if name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        format!("d{name}")
    } else {
        format!("d({name})")
    }
}

/// Builds the twisted de Rham algebra. Requires lambda on every generator
/// and positive generator degrees.
pub fn omega_bar(base: Arc<GradedAlgebra>) -> Result<OmegaAlgebra> {
    if let Some(g) = base.generators().iter().find(|g| g.lambda.is_none()) {
        return Err(Error::MissingLambda(g.name.clone()));
    }
    if let Some(g) = base.generators().iter().find(|g| g.degree == 0) {
        return Err(Error::InvalidAlgebra(format!(
            "generator `{}` of degree 0 has no differential",
            g.name
        )));
    }
    let k = base.num_generators();
    let mut b = AlgebraBuilder::new();
    for g in base.generators() {
        b.generator(g.name.clone(), g.degree)?;
    }
    for g in base.generators() {
        b.generator(d_name(&g.name), g.degree - 1)?;
    }
    for (i, g) in base.generators().iter().enumerate() {
        if let SquareRule::Rewrite(rhs) = &g.square {
            b.set_square(i, rhs.clone());
        }
        let lambda = g.lambda.as_ref().expect("checked above");
        let rhs = derivation(lambda, k, |pairs| b.monomial(pairs));
        b.set_square(k + i, rhs);
    }
    let algebra = Arc::new(b.build()?);
    let omega = OmegaAlgebra { base, algebra };
    for g in omega.base.generators() {
        if let SquareRule::Rewrite(rhs) = &g.square {
            if !omega.d(rhs).is_zero() {
                return Err(Error::InvalidAlgebra(format!(
                    "d of the square rewrite of `{}` must vanish",
                    g.name
                )));
            }
        }
    }
    Ok(omega)
}

/// Leibniz expansion of `d` on base monomials, without normalization.
fn derivation(e: &Element, k: usize, make: impl Fn(&[(usize, u32)]) -> Monomial) -> Element {
    let mut terms = Vec::new();
    for m in e.terms() {
        for (j, &(g, exp)) in m.factors().iter().enumerate() {
            if exp % 2 == 0 || g as usize >= k {
                continue;
            }
            let mut pairs: Vec<(usize, u32)> = m
                .factors()
                .iter()
                .enumerate()
                .map(|(i, &(h, f))| (h as usize, if i == j { f - 1 } else { f }))
                .collect();
            pairs.push((k + g as usize, 1));
            terms.push(make(&pairs));
        }
    }
    Element::from_terms(terms)
}

impl OmegaAlgebra {
    pub fn base(&self) -> &Arc<GradedAlgebra> {
        &self.base
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn base_generators(&self) -> usize {
        self.base.num_generators()
    }

    /// Index of `dg` for the base generator `g`.
    pub fn d_generator(&self, g: usize) -> usize {
        self.base_generators() + g
    }

    /// Base elements embed with unchanged coordinates.
    pub fn from_base(&self, e: &Element) -> Element {
        e.clone()
    }

    /// The de Rham differential, a derivation lowering degree by one.
    pub fn d(&self, e: &Element) -> Element {
        let k = self.base_generators();
        let raw = derivation(e, k, |pairs| self.algebra.monomial(pairs));
        self.algebra.normalize_element(&raw)
    }

    pub fn d_monomial(&self, m: &Monomial) -> Element {
        self.d(&Element::from_monomial(m.clone()))
    }

    /// Matrix of `d` from `source` (degree t) to `target` (degree t - 1).
    pub fn d_matrix(&self, source: &Basis, target: &Basis) -> Result<F2Matrix> {
        source.matrix(target, |m| self.d_monomial(m))
    }

    pub fn cycles(&self, t: u32) -> Subspace {
        let source = Basis::of_degree(&self.algebra, t);
        if t == 0 {
            return Subspace::full(source.len());
        }
        let target = Basis::of_degree(&self.algebra, t - 1);
        self.d_matrix(&source, &target)
            .expect("d preserves the algebra")
            .kernel()
    }

    pub fn boundaries(&self, t: u32) -> Subspace {
        let source = Basis::of_degree(&self.algebra, t + 1);
        let target = Basis::of_degree(&self.algebra, t);
        self.d_matrix(&source, &target)
            .expect("d preserves the algebra")
            .image()
    }

    pub fn cohomology(&self, t: u32) -> Cohomology {
        let basis = Basis::of_degree(&self.algebra, t);
        let cycles = self.cycles(t);
        let boundaries = self.boundaries(t);
        let reps: Vec<BitVec> = cycles
            .complement_basis(&boundaries)
            .expect("boundaries are cycles");
        Cohomology {
            degree: t,
            representatives: reps.iter().map(|v| basis.element(v)).collect(),
            cycles,
            boundaries,
        }
    }

    /// The map induced by `f: base -> target.base`.
    pub fn induced(&self, f: &AlgebraHom, target: &OmegaAlgebra) -> Result<AlgebraHom> {
        if **f.source() != *self.base || **f.target() != *target.base {
            return Err(Error::InvalidHom("induced map between mismatched bases".into()));
        }
        let mut images: Vec<Element> = f.images().iter().map(|e| target.from_base(e)).collect();
        let d_images: Vec<Element> = f.images().iter().map(|e| target.d(e)).collect();
        images.extend(d_images);
        AlgebraHom::new(self.algebra.clone(), target.algebra.clone(), images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functors::graded_dims;

    #[test]
    fn exterior_omega_has_four_classes() {
        let omega = omega_bar(Arc::new(GradedAlgebra::exterior("s", 2).unwrap())).unwrap();
        assert_eq!(graded_dims(omega.algebra(), 4), vec![1, 1, 1, 1, 0]);
        let a = omega.algebra();
        let ds = a.gen(omega.d_generator(0));
        assert!(a.mul(&ds, &ds).is_zero());
    }

    #[test]
    fn ground_field() {
        let omega = omega_bar(Arc::new(GradedAlgebra::ground_field())).unwrap();
        assert_eq!(graded_dims(omega.algebra(), 3), vec![1, 0, 0, 0]);
    }

    #[test]
    fn polynomial_in_one_variable() {
        let omega = omega_bar(Arc::new(GradedAlgebra::polynomial(&[("x", 2)]).unwrap())).unwrap();
        assert_eq!(graded_dims(omega.algebra(), 5), vec![1, 1, 1, 1, 1, 1]);
        let a = omega.algebra();
        let x = a.gen(0);
        assert!(omega.d(&a.pow(&x, 2)).is_zero());
        assert_eq!(omega.d(&x), a.gen(1));
        // cycles: x^{2k} and all x^m dx
        for t in 0..12u32 {
            let z = omega.cycles(t).dim();
            let expected = if t % 2 == 1 || t % 4 == 0 { 1 } else { 0 };
            assert_eq!(z, expected, "degree {t}");
            let b = omega.boundaries(t).dim();
            // boundaries x^{2k} dx sit in degrees 4k + 1
            assert_eq!(b, usize::from(t % 4 == 1), "degree {t}");
        }
        let h = omega.cohomology(3);
        assert_eq!(a.format(&h.representatives[0]), "x*dx");
    }

    #[test]
    fn leibniz_on_two_variables() {
        let base = GradedAlgebra::polynomial(&[("x", 2), ("y1", 4)]).unwrap();
        let omega = omega_bar(Arc::new(base)).unwrap();
        let a = omega.algebra();
        let xy = a.parse("x*y1").unwrap();
        assert_eq!(omega.d(&xy), a.parse("x*dy1 + y1*dx").unwrap());
        let b3: Vec<String> = a.basis_of_degree(3).iter().map(|m| a.format_monomial(m)).collect();
        assert_eq!(b3, vec!["x*dx", "dy1"]);
    }

    #[test]
    fn nonzero_lambda_square_rule() {
        let base = GradedAlgebra::polynomial(&[("g", 1)]).unwrap();
        let omega = omega_bar(Arc::new(base)).unwrap();
        let a = omega.algebra();
        // (dg)^2 = d(lambda g) = dg, with dg of degree 0
        let dg = a.gen(1);
        assert_eq!(a.mul(&dg, &dg), dg);
        for t in 0..6 {
            for m in a.basis_of_degree(t) {
                assert!(omega.d(&omega.d_monomial(&m)).is_zero());
            }
        }
    }
}
