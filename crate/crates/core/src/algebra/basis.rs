use std::collections::HashMap;

use rayon::prelude::*;

use super::{Element, GradedAlgebra, Monomial};
use crate::linalg::{BitVec, F2Matrix};
use crate::{Error, Result};

/// An ordered list of monomials used as coordinates for a graded piece or a
/// subset of one.
#[derive(Clone, Debug, Default)]
pub struct Basis {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl Basis {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Basis { monomials, index }
    }

    /// All normal-form monomials of degree `t`.
    pub fn of_degree(a: &GradedAlgebra, t: u32) -> Self {
        Basis::new(a.basis_of_degree(t))
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of `e`; fails if a term is not in the basis.
    pub fn vector(&self, e: &Element) -> Result<BitVec> {
        let mut v = BitVec::zeros(self.len());
        for m in e.terms() {
            let k = self.position(m).ok_or_else(|| {
                Error::Invalid(format!("monomial of degree {} outside the basis", m.degree()))
            })?;
            v.flip(k);
        }
        Ok(v)
    }

    /// Coordinates of the terms of `e` lying in the basis; other terms are
    /// dropped.
    pub fn project(&self, e: &Element) -> BitVec {
        BitVec::from_indices(self.len(), e.terms().iter().filter_map(|m| self.position(m)))
    }

    pub fn element(&self, v: &BitVec) -> Element {
        Element::from_terms(v.ones().map(|k| self.monomials[k].clone()))
    }

    /// Matrix of a linear map given on basis monomials. Terms outside
    /// `target` are an error.
    pub fn matrix<F>(&self, target: &Basis, f: F) -> Result<F2Matrix>
    where
        F: Fn(&Monomial) -> Element + Sync,
    {
        let columns: Vec<BitVec> = self
            .monomials
            .par_iter()
            .map(|m| target.vector(&f(m)))
            .collect::<Result<_>>()?;
        Ok(F2Matrix::from_columns(target.len(), &columns))
    }

    /// Matrix of `f` followed by the projection onto `target`.
    pub fn projected_matrix<F>(&self, target: &Basis, f: F) -> F2Matrix
    where
        F: Fn(&Monomial) -> Element + Sync,
    {
        let columns: Vec<BitVec> = self
            .monomials
            .par_iter()
            .map(|m| target.project(&f(m)))
            .collect();
        F2Matrix::from_columns(target.len(), &columns)
    }
}
