//! Expansion of `phi` and `q` on elements of a polynomial base algebra, for
//! presentations where `phi` is additive and multiplicative and `q` is
//! additive with `q(ab) = phi(a) q(b) + phi(b) q(a)`.

use crate::algebra::{Element, GradedAlgebra, Monomial};

/// Index maps from base generators to the `phi` and `q` generators.
pub(crate) struct PhiQ<'a> {
    pub target: &'a GradedAlgebra,
    pub phi: &'a dyn Fn(usize) -> usize,
    pub q: &'a dyn Fn(usize) -> usize,
}

impl PhiQ<'_> {
    pub fn phi_monomial(&self, m: &Monomial) -> Monomial {
        let pairs: Vec<(usize, u32)> = m
            .factors()
            .iter()
            .map(|&(g, e)| ((self.phi)(g as usize), e))
            .collect();
        self.target.monomial(&pairs)
    }

    pub fn phi(&self, e: &Element) -> Element {
        self.target
            .normalize_element(&Element::from_terms(e.terms().iter().map(|m| self.phi_monomial(m))))
    }

    /// `q(m) = sum over generators h with odd exponent of phi(m/h) q(h)`.
    pub fn q_monomial(&self, m: &Monomial) -> Element {
        let mut terms = Vec::new();
        for (k, &(h, e)) in m.factors().iter().enumerate() {
            if e % 2 == 0 {
                continue;
            }
            let mut pairs: Vec<(usize, u32)> = m
                .factors()
                .iter()
                .enumerate()
                .map(|(j, &(g, f))| ((self.phi)(g as usize), if j == k { f - 1 } else { f }))
                .collect();
            pairs.push(((self.q)(h as usize), 1));
            terms.push(self.target.monomial(&pairs));
        }
        self.target.normalize_element(&Element::from_terms(terms))
    }

    pub fn q(&self, e: &Element) -> Element {
        let mut acc = Element::zero();
        for m in e.terms() {
            acc += &self.q_monomial(m);
        }
        acc
    }
}
