use std::collections::BTreeMap;
use std::sync::Arc;

use super::expand::PhiQ;
use super::tilde::{phi_name, q_name};
use crate::algebra::{AlgebraBuilder, Basis, Element, GradedAlgebra};
use crate::linalg::Subspace;
use crate::{Error, Result};

/// `Omega_tw(A)` for polynomial `A`: generators `t` (degree 1), `phi(g)`,
/// `q(g)` with `q(g)^2 = phi(lambda g) + t q(lambda g)`.
#[derive(Clone, Debug)]
pub struct OmegaTw {
    base: Arc<GradedAlgebra>,
    algebra: Arc<GradedAlgebra>,
}

pub fn omega_tw(base: Arc<GradedAlgebra>) -> Result<OmegaTw> {
    if !base.is_polynomial() {
        return Err(Error::NotPolynomial(
            "the twisted presentation is only valid for polynomial algebras".into(),
        ));
    }
    if let Some(g) = base.generators().iter().find(|g| g.lambda.is_none()) {
        return Err(Error::MissingLambda(g.name.clone()));
    }
    let k = base.num_generators();
    let mut b = AlgebraBuilder::new();
    b.generator("t", 1)?;
    for g in base.generators() {
        b.generator(phi_name(&g.name), 2 * g.degree)?;
    }
    for g in base.generators() {
        b.generator(q_name(&g.name), 2 * g.degree - 1)?;
    }
    let rules: Vec<Element> = {
        let phi = |g: usize| 1 + g;
        let q = |g: usize| 1 + k + g;
        // expansion needs an algebra; use a rule-free copy of the generators
        let mut plain = AlgebraBuilder::new();
        plain.generator("t", 1)?;
        for g in base.generators() {
            plain.generator(phi_name(&g.name), 2 * g.degree)?;
        }
        for g in base.generators() {
            plain.generator(q_name(&g.name), 2 * g.degree - 1)?;
        }
        let plain = plain.build()?;
        let x = PhiQ {
            target: &plain,
            phi: &phi,
            q: &q,
        };
        let t = plain.gen(0);
        base.generators()
            .iter()
            .map(|g| {
                let lambda = g.lambda.as_ref().expect("checked");
                &x.phi(lambda) + &plain.mul(&t, &x.q(lambda))
            })
            .collect()
    };
    for (i, rhs) in rules.into_iter().enumerate() {
        b.set_square(1 + k + i, rhs);
    }
    Ok(OmegaTw {
        base,
        algebra: Arc::new(b.build()?),
    })
}

impl OmegaTw {
    pub fn base(&self) -> &Arc<GradedAlgebra> {
        &self.base
    }

    pub fn algebra(&self) -> &Arc<GradedAlgebra> {
        &self.algebra
    }

    pub fn t(&self) -> Element {
        self.algebra.gen(0)
    }

    fn expander<R>(&self, f: impl FnOnce(&PhiQ<'_>) -> R) -> R {
        let k = self.base.num_generators();
        let phi = |g: usize| 1 + g;
        let q = move |g: usize| 1 + k + g;
        f(&PhiQ {
            target: &self.algebra,
            phi: &phi,
            q: &q,
        })
    }

    pub fn phi_of(&self, e: &Element) -> Element {
        self.expander(|x| x.phi(e))
    }

    pub fn q_of(&self, e: &Element) -> Element {
        self.expander(|x| x.q(e))
    }
}

/// Dimensions of `t^k W^{d-k} / t^{k+1} W^{d-k-1}` for `d <= max_deg`, keyed
/// by `(k, d)`; zero entries are included.
pub fn gr_filtration(w: &OmegaTw, max_deg: u32) -> BTreeMap<(u32, u32), usize> {
    let a = w.algebra();
    let bases: Vec<Basis> = (0..=max_deg).map(|d| Basis::of_degree(a, d)).collect();
    let mut out = BTreeMap::new();
    for d in 0..=max_deg {
        let target = &bases[d as usize];
        // dim t^k W^{d-k} for k = 0..=d+1
        let dims: Vec<usize> = (0..=d + 1)
            .map(|k| {
                if k > d {
                    return 0;
                }
                let tk = a.pow(&w.t(), k);
                let vectors = bases[(d - k) as usize]
                    .monomials()
                    .iter()
                    .map(|m| {
                        let e = a.mul(&tk, &Element::from_monomial(m.clone()));
                        target.vector(&e).expect("degree d")
                    });
                Subspace::from_vectors(target.len(), vectors).dim()
            })
            .collect();
        for k in 0..=d {
            out.insert((k, d), dims[k as usize] - dims[k as usize + 1]);
        }
    }
    out
}
