use std::sync::Arc;

use super::{Element, GradedAlgebra, Monomial, SquareRule};
use crate::{Error, Result};

/// A degree-preserving algebra homomorphism given by generator images.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    source: Arc<GradedAlgebra>,
    target: Arc<GradedAlgebra>,
    images: Vec<Element>,
}

impl AlgebraHom {
    /// Checks degrees, square rules and, when both sides carry lambda,
    /// compatibility with lambda.
    pub fn new(
        source: Arc<GradedAlgebra>,
        target: Arc<GradedAlgebra>,
        images: Vec<Element>,
    ) -> Result<Self> {
        if images.len() != source.num_generators() {
            return Err(Error::InvalidHom(format!(
                "{} images for {} generators",
                images.len(),
                source.num_generators()
            )));
        }
        let images: Vec<Element> = images.iter().map(|e| target.normalize_element(e)).collect();
        for (gen, image) in source.generators().iter().zip(&images) {
            if !image.has_degree(gen.degree) {
                return Err(Error::InvalidHom(format!(
                    "image of `{}` is not of degree {}",
                    gen.name, gen.degree
                )));
            }
        }
        let hom = AlgebraHom {
            source,
            target,
            images,
        };
        for gen in hom.source.generators() {
            if let SquareRule::Rewrite(rhs) = &gen.square {
                let g = hom.source.index_of(&gen.name).expect("own generator");
                if hom.target.square(&hom.images[g]) != hom.eval(rhs) {
                    return Err(Error::InvalidHom(format!(
                        "square rule of `{}` is not preserved",
                        gen.name
                    )));
                }
            }
        }
        if hom.source.carries_lambda() && hom.target.carries_lambda() {
            for (g, gen) in hom.source.generators().iter().enumerate() {
                let lambda = gen.lambda.as_ref().expect("carries lambda");
                if hom.target.lambda_extend(&hom.images[g])? != hom.eval(lambda) {
                    return Err(Error::InvalidHom(format!(
                        "lambda is not preserved on `{}`",
                        gen.name
                    )));
                }
            }
        }
        Ok(hom)
    }

    pub fn identity(a: Arc<GradedAlgebra>) -> Self {
        let images = (0..a.num_generators()).map(|g| a.gen(g)).collect();
        AlgebraHom {
            source: a.clone(),
            target: a,
            images,
        }
    }

    pub fn source(&self) -> &Arc<GradedAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedAlgebra> {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &Element {
        &self.images[g]
    }

    pub fn eval_monomial(&self, m: &Monomial) -> Element {
        let mut acc = Element::one();
        for &(g, e) in m.factors() {
            let p = self.target.pow(&self.images[g as usize], e);
            acc = self.target.mul(&acc, &p);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn eval(&self, e: &Element) -> Element {
        let mut acc = Element::zero();
        for m in e.terms() {
            acc += &self.eval_monomial(m);
        }
        acc
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &AlgebraHom) -> Result<AlgebraHom> {
        if *first.target != *self.source {
            return Err(Error::InvalidHom("composition of incompatible maps".into()));
        }
        Ok(AlgebraHom {
            source: first.source.clone(),
            target: self.target.clone(),
            images: first.images.iter().map(|e| self.eval(e)).collect(),
        })
    }

    /// Equality of generator images; sources and targets are assumed equal.
    pub fn same_images(&self, other: &AlgebraHom) -> bool {
        self.images == other.images
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_is_multiplicative() {
        let a = Arc::new(GradedAlgebra::polynomial(&[("x", 2), ("y", 4)]).unwrap());
        let b = Arc::new(GradedAlgebra::polynomial(&[("x", 2)]).unwrap());
        let x = b.gen(0);
        let f = AlgebraHom::new(a.clone(), b.clone(), vec![x.clone(), b.pow(&x, 2)]).unwrap();
        let xy = a.mul(&a.gen(0), &a.gen(1));
        assert_eq!(f.eval(&xy), b.pow(&x, 3));
        let id = AlgebraHom::identity(a.clone());
        assert_eq!(id.eval(&xy), xy);
        assert!(f.compose(&id).unwrap().same_images(&f));
    }

    #[test]
    fn degree_and_square_checks() {
        let a = Arc::new(GradedAlgebra::polynomial(&[("x", 2)]).unwrap());
        let e = Arc::new(GradedAlgebra::exterior("s", 2).unwrap());
        assert!(AlgebraHom::new(a.clone(), a.clone(), vec![Element::one()]).is_err());
        // x -> s is fine; s -> x does not preserve s^2 = 0
        assert!(AlgebraHom::new(a.clone(), e.clone(), vec![e.gen(0)]).is_ok());
        assert!(AlgebraHom::new(e, a.clone(), vec![a.gen(0)]).is_err());
    }
}
