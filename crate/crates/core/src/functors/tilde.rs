use std::sync::Arc;

use super::expand::PhiQ;
use crate::algebra::{AlgebraBuilder, AlgebraHom, Element, GradedAlgebra};
use crate::{Error, Result};

/// The presentation of `Omega~(A)` for a polynomial algebra `A`: generators
/// `phi(g)` of degree `2|g|` and `q(g)` of degree `2|g| - 1` with
/// `q(g)^2 = phi(lambda g)`.
#[derive(Clone, Debug)]
pub struct OmegaTilde {
    base: Arc<GradedAlgebra>,
    algebra: Arc<GradedAlgebra>,
}

fn require_polynomial(base: &GradedAlgebra) -> Result<()> {
    if !base.is_polynomial() {
        return Err(Error::NotPolynomial(
            "this presentation is only valid for polynomial algebras".into(),
        ));
    }
    if let Some(g) = base.generators().iter().find(|g| g.lambda.is_none()) {
        return Err(Error::MissingLambda(g.name.clone()));
    }
    Ok(())
}

pub(crate) fn phi_name(name: &str) -> String {
    format!("phi({name})")
}

pub(crate) fn q_name(name: &str) -> String {
    format!("q({name})")
}

pub fn omega_tilde(base: Arc<GradedAlgebra>) -> Result<OmegaTilde> {
    require_polynomial(&base)?;
    let k = base.num_generators();
    let mut b = AlgebraBuilder::new();
    for g in base.generators() {
        b.generator(phi_name(&g.name), 2 * g.degree)?;
    }
    for g in base.generators() {
        b.generator(q_name(&g.name), 2 * g.degree - 1)?;
    }
    for (i, g) in base.generators().iter().enumerate() {
        let lambda = g.lambda.as_ref().expect("checked");
        let rhs = Element::from_terms(lambda.terms().iter().map(|m| {
            let pairs: Vec<(usize, u32)> =
                m.factors().iter().map(|&(h, e)| (h as usize, e)).collect();
            b.monomial(&pairs)
        }));
        b.set_square(k + i, rhs);
    }
    Ok(OmegaTilde {
        base,
        algebra: Arc::new(b.build()?),
    })
}

impl OmegaTilde {
    pub fn base(&self) -> &Arc<GradedAlgebra> {
        &self.base
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn phi_generator(&self, g: usize) -> usize {
        g
    }

    pub fn q_generator(&self, g: usize) -> usize {
        self.base.num_generators() + g
    }

    fn expander<R>(&self, f: impl FnOnce(&PhiQ<'_>) -> R) -> R {
        let k = self.base.num_generators();
        let phi = |g: usize| g;
        let q = move |g: usize| k + g;
        f(&PhiQ {
            target: &self.algebra,
            phi: &phi,
            q: &q,
        })
    }

    /// `phi` of a base element.
    pub fn phi_of(&self, e: &Element) -> Element {
        self.expander(|x| x.phi(e))
    }

    /// `q` of a base element.
    pub fn q_of(&self, e: &Element) -> Element {
        self.expander(|x| x.q(e))
    }

    /// The map induced by `f: base -> target.base`.
    pub fn induced(&self, f: &AlgebraHom, target: &OmegaTilde) -> Result<AlgebraHom> {
        if **f.source() != *self.base || **f.target() != *target.base {
            return Err(Error::InvalidHom("induced map between mismatched bases".into()));
        }
        let mut images: Vec<Element> = f.images().iter().map(|e| target.phi_of(e)).collect();
        let q_images: Vec<Element> = f.images().iter().map(|e| target.q_of(e)).collect();
        images.extend(q_images);
        AlgebraHom::new(self.algebra.clone(), target.algebra.clone(), images)
    }
}
