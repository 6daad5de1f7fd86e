use std::ops::{Add, AddAssign};

use super::Monomial;

/// Degree information of an element.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ElementDegree {
    Zero,
    Homogeneous(u32),
    Mixed,
}

/// An F2-linear combination of normal-form monomials.
///
/// Terms are kept sorted and duplicate free; addition is symmetric difference.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Element {
    terms: Vec<Monomial>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Element {
            terms: vec![Monomial::one()],
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Element { terms: vec![m] }
    }

    /// Sums the given monomials mod 2.
    pub fn from_terms<I: IntoIterator<Item = Monomial>>(terms: I) -> Self {
        let mut terms: Vec<Monomial> = terms.into_iter().collect();
        terms.sort_unstable();
        let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
        for m in terms {
            if out.last() == Some(&m) {
                out.pop();
            } else {
                out.push(m);
            }
        }
        Element { terms: out }
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> ElementDegree {
        match self.terms.first() {
            None => ElementDegree::Zero,
            Some(first) => {
                let d = first.degree();
                if self.terms.iter().all(|m| m.degree() == d) {
                    ElementDegree::Homogeneous(d)
                } else {
                    ElementDegree::Mixed
                }
            }
        }
    }

    /// True when the element is zero or homogeneous of degree `d`.
    pub fn has_degree(&self, d: u32) -> bool {
        self.terms.iter().all(|m| m.degree() == d)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.binary_search(m).is_ok()
    }
}

impl Add<&Element> for &Element {
    type Output = Element;

    fn add(self, rhs: &Element) -> Element {
        let (a, b) = (&self.terms, &rhs.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Element { terms: out }
    }
}

impl Add for Element {
    type Output = Element;

    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl AddAssign<&Element> for Element {
    fn add_assign(&mut self, rhs: &Element) {
        *self = &*self + rhs;
    }
}

impl From<Monomial> for Element {
    fn from(m: Monomial) -> Self {
        Element::from_monomial(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn addition_is_symmetric_difference() {
        let a = Monomial::from_parts(2, vec![(0, 1)]);
        let b = Monomial::from_parts(2, vec![(1, 1)]);
        let e = Element::from_terms([a.clone(), b.clone()]);
        let f = Element::from_terms([b.clone()]);
        assert_eq!(&e + &f, Element::from_monomial(a.clone()));
        assert!((&e + &e).is_zero());
        assert_eq!(Element::from_terms([a.clone(), a.clone(), b.clone()]), f);
        assert_eq!(e.degree(), ElementDegree::Homogeneous(2));
        let mixed = &e + &Element::one();
        assert_eq!(mixed.degree(), ElementDegree::Mixed);
    }
}
