use std::sync::Arc;

use super::ell::{EllGenerator, EllPresentation, EllVariant};
use super::omega::omega_bar;
use super::tilde::omega_tilde;
use super::twisted::omega_tw;
use crate::algebra::{AlgebraHom, Basis, Element, GradedAlgebra};
use crate::linalg::Subspace;
use crate::{Error, Result};

/// Ranks of a comparison map in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: u32,
    /// Dimension of the source quotient.
    pub source: usize,
    /// Dimension of the intended target.
    pub target: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub map: &'static str,
    pub degrees: Vec<DegreeReport>,
}

impl ComparisonReport {
    /// Injective and surjective onto the intended target in every degree.
    pub fn is_bijective(&self) -> bool {
        self.degrees
            .iter()
            .all(|d| d.rank == d.source && d.rank == d.target)
    }
}

fn not_annihilated(map: &'static str, a: &GradedAlgebra, e: &Element, degree: u32) -> Error {
    Error::RelationNotAnnihilated {
        map,
        relation: a.format(e),
        degree,
    }
}

/// `Q: L(A) -> Z(A)` with `delta(m) -> dm`, `q(m) -> m dm + lambda m`,
/// `phi(m) -> m^2`. Fails if a relation of `L` is not sent to zero or an
/// image is not a cycle.
pub fn q_map(base: Arc<GradedAlgebra>, max_deg: u32) -> Result<ComparisonReport> {
    let ell = EllPresentation::new(base.clone(), max_deg, EllVariant::CalL)?;
    let omega = omega_bar(base.clone())?;
    let w = omega.algebra();
    let images: Vec<Element> = (0..ell.ambient().num_generators())
        .map(|g| -> Result<Element> {
            Ok(match ell.generator_kind(g) {
                EllGenerator::U => Element::zero(),
                EllGenerator::Phi(m) => base.mul_monomials(m, m),
                EllGenerator::Q(m) => {
                    let me = Element::from_monomial(m.clone());
                    &w.mul(&me, &omega.d(&me)) + &base.lambda_extend(&me)?
                }
                EllGenerator::Delta(m) => omega.d_monomial(m),
            })
        })
        .collect::<Result<_>>()?;
    let hom = AlgebraHom::new(ell.ambient().clone(), w.clone(), images)?;
    let mut degrees = Vec::new();
    for t in 0..=max_deg {
        let source = ell.basis(t);
        let target = Basis::of_degree(w, t);
        let m = source.matrix(&target, |mono| hom.eval_monomial(mono))?;
        for v in ell.relation_span(t).basis() {
            if !m.mul_vec(v).is_zero() {
                return Err(not_annihilated("Q", ell.ambient(), &source.element(v), t));
            }
        }
        let image = m.image();
        let cycles = omega.cycles(t);
        if !image.is_subspace_of(&cycles) {
            return Err(Error::Invalid(format!("Q has non-closed images in degree {t}")));
        }
        degrees.push(DegreeReport {
            degree: t,
            source: source.len() - ell.relation_span(t).dim(),
            target: cycles.dim(),
            rank: image.dim(),
        });
    }
    Ok(ComparisonReport { map: "Q", degrees })
}

/// The Cartier map `Omega~(A) -> H(A)` with `phi(g) -> [g^2]` and
/// `q(g) -> [g dg + lambda g]`, for polynomial `A`.
pub fn cartier_phi(base: Arc<GradedAlgebra>, max_deg: u32) -> Result<ComparisonReport> {
    let tilde = omega_tilde(base.clone())?;
    let omega = omega_bar(base.clone())?;
    let w = omega.algebra();
    let k = base.num_generators();
    let mut gen_images = Vec::with_capacity(2 * k);
    for g in 0..k {
        gen_images.push(w.square(&base.gen(g)));
    }
    for g in 0..k {
        let x = base.gen(g);
        gen_images.push(&w.mul(&x, &omega.d(&x)) + &base.lambda_extend(&x)?);
    }
    let phi_free = |m: &crate::algebra::Monomial| -> Element {
        let mut acc = Element::one();
        for &(g, e) in m.factors() {
            acc = w.mul(&acc, &w.pow(&gen_images[g as usize], e));
        }
        acc
    };
    let ta = tilde.algebra();
    let bases: Vec<Basis> = (0..=max_deg).map(|t| Basis::of_degree(ta, t)).collect();
    // q(g)^2 + phi(lambda g) under the free lift
    let relations: Vec<(u32, Element)> = (0..k)
        .map(|g| {
            let q = &gen_images[k + g];
            let lambda = base.generator(g).lambda.as_ref().expect("checked by omega_tilde");
            let phi_lambda = phi_free_base(&gen_images, w, lambda);
            (4 * base.generator(g).degree - 2, &w.mul(q, q) + &phi_lambda)
        })
        .collect();
    let mut degrees = Vec::new();
    for t in 0..=max_deg {
        let target = Basis::of_degree(w, t);
        let cycles = omega.cycles(t);
        let boundaries = omega.boundaries(t);
        let images: Vec<Element> = bases[t as usize].monomials().iter().map(phi_free).collect();
        for e in &images {
            if !cycles.contains(&target.vector(e)?) {
                return Err(Error::Invalid(format!("Phi has a non-closed image in degree {t}")));
            }
        }
        for (rd, r) in &relations {
            if *rd > t {
                continue;
            }
            for m in bases[(t - rd) as usize].monomials() {
                let e = w.mul(&phi_free(m), r);
                if !boundaries.contains(&target.vector(&e)?) {
                    return Err(not_annihilated("Phi", w, r, t));
                }
            }
        }
        for d in 0..=t / 2 {
            for a in bases[d as usize].monomials() {
                for b in bases[(t - d) as usize].monomials() {
                    let product = ta.mul_monomials(a, b);
                    let lhs = w.mul(&phi_free(a), &phi_free(b));
                    let rhs: Element = product
                        .terms()
                        .iter()
                        .fold(Element::zero(), |acc, m| &acc + &phi_free(m));
                    if !boundaries.contains(&target.vector(&(&lhs + &rhs))?) {
                        return Err(not_annihilated("Phi", ta, &product, t));
                    }
                }
            }
        }
        let reduced = images
            .iter()
            .map(|e| target.vector(e).map(|v| boundaries.reduce(&v)))
            .collect::<Result<Vec<_>>>()?;
        let rank = Subspace::from_vectors(target.len(), reduced).dim();
        degrees.push(DegreeReport {
            degree: t,
            source: bases[t as usize].len(),
            target: cycles.dim() - boundaries.dim(),
            rank,
        });
    }
    Ok(ComparisonReport { map: "Phi", degrees })
}

fn phi_free_base(gen_images: &[Element], w: &GradedAlgebra, e: &Element) -> Element {
    let mut acc = Element::zero();
    for m in e.terms() {
        let mut p = Element::one();
        for &(g, x) in m.factors() {
            p = w.mul(&p, &w.pow(&gen_images[g as usize], x));
        }
        acc += &p;
    }
    acc
}

/// `v: ell(A) -> Omega_tw(A)` with `u -> t^2`, `phi(m) -> phi(m) + t q(m)`,
/// `q(m) -> q(m)`, `delta(m) -> 0`. Fails unless every relation maps to zero.
pub fn v_map(base: Arc<GradedAlgebra>, max_deg: u32) -> Result<ComparisonReport> {
    let ell = EllPresentation::new(base.clone(), max_deg, EllVariant::Ell)?;
    let tw = omega_tw(base)?;
    let w = tw.algebra();
    let t_gen = tw.t();
    let images: Vec<Element> = (0..ell.ambient().num_generators())
        .map(|g| match ell.generator_kind(g) {
            EllGenerator::U => w.mul(&t_gen, &t_gen),
            EllGenerator::Phi(m) => {
                let me = Element::from_monomial(m.clone());
                &tw.phi_of(&me) + &w.mul(&t_gen, &tw.q_of(&me))
            }
            EllGenerator::Q(m) => tw.q_of(&Element::from_monomial(m.clone())),
            EllGenerator::Delta(_) => Element::zero(),
        })
        .collect();
    let hom = AlgebraHom::new(ell.ambient().clone(), w.clone(), images)?;
    for r in ell.instances() {
        let image = hom.eval(r);
        if !image.is_zero() {
            let t = r.terms()[0].degree();
            return Err(not_annihilated("v", ell.ambient(), r, t));
        }
    }
    let mut degrees = Vec::new();
    for t in 0..=max_deg {
        let source = ell.basis(t);
        let target = Basis::of_degree(w, t);
        let m = source.matrix(&target, |mono| hom.eval_monomial(mono))?;
        for v in ell.relation_span(t).basis() {
            if !m.mul_vec(v).is_zero() {
                return Err(not_annihilated("v", ell.ambient(), &source.element(v), t));
            }
        }
        degrees.push(DegreeReport {
            degree: t,
            source: source.len() - ell.relation_span(t).dim(),
            target: target.len(),
            rank: m.rank(),
        });
    }
    Ok(ComparisonReport { map: "v", degrees })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_variable_maps() {
        let base = Arc::new(GradedAlgebra::polynomial(&[("x", 2)]).unwrap());
        assert!(q_map(base.clone(), 8).unwrap().is_bijective());
        assert!(cartier_phi(base.clone(), 8).unwrap().is_bijective());
        v_map(base, 8).unwrap();
    }
}
