use std::collections::HashMap;

use super::{Element, Monomial};
use crate::{Error, Result};

/// How the square of a generator is treated in normal forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareRule {
    /// The square is an ordinary monomial.
    Free,
    /// `g^2` is rewritten to the given element; normal forms carry `g` with
    /// exponent at most one.
    Rewrite(Element),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub square: SquareRule,
    /// `None` when the algebra carries no lambda structure on this generator.
    pub lambda: Option<Element>,
}

impl Generator {
    pub fn is_rewrite(&self) -> bool {
        matches!(self.square, SquareRule::Rewrite(_))
    }
}

/// A finitely generated graded-commutative F2-algebra presented by
/// generators and square-rewrite rules.
///
/// In characteristic two graded commutativity is plain commutativity, so the
/// underlying algebra is a polynomial ring modulo the relations
/// `g^2 = rhs(g)` for the rewrite generators.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators
    }
}

impl Eq for GradedAlgebra {}

/// Incremental constructor for [`GradedAlgebra`].
#[derive(Default)]
pub struct AlgebraBuilder {
    generators: Vec<Generator>,
    index: HashMap<String, usize>,
}

impl AlgebraBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a free generator without lambda structure; returns its index.
    pub fn generator(&mut self, name: impl Into<String>, degree: u32) -> Result<usize> {
        let name = name.into();
        if self.index.contains_key(&name) {
            return Err(Error::InvalidAlgebra(format!("duplicate generator `{name}`")));
        }
        let i = self.generators.len();
        self.index.insert(name.clone(), i);
        self.generators.push(Generator {
            name,
            degree,
            square: SquareRule::Free,
            lambda: None,
        });
        Ok(i)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn degree(&self, g: usize) -> u32 {
        self.generators[g].degree
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Raw monomial from `(generator, exponent)` pairs; repeated generators
    /// are merged.
    pub fn monomial(&self, factors: &[(usize, u32)]) -> Monomial {
        monomial_from_pairs(&self.generators, factors)
    }

    pub fn gen(&self, g: usize) -> Element {
        Element::from_monomial(self.monomial(&[(g, 1)]))
    }

    pub fn set_square(&mut self, g: usize, rhs: Element) {
        self.generators[g].square = SquareRule::Rewrite(rhs);
    }

    pub fn set_lambda(&mut self, g: usize, lambda: Element) {
        self.generators[g].lambda = Some(lambda);
    }

    pub fn build(self) -> Result<GradedAlgebra> {
        let mut algebra = GradedAlgebra {
            generators: self.generators,
            index: self.index,
        };
        algebra.validate_rules()?;
        let lambdas: Vec<Option<Element>> = algebra
            .generators
            .iter()
            .map(|g| g.lambda.as_ref().map(|l| algebra.normalize_element(l)))
            .collect();
        for (g, l) in algebra.generators.iter_mut().zip(lambdas) {
            g.lambda = l;
        }
        algebra.validate_lambda()?;
        Ok(algebra)
    }
}

fn monomial_from_pairs(generators: &[Generator], factors: &[(usize, u32)]) -> Monomial {
    let mut pairs: Vec<(u32, u32)> = factors
        .iter()
        .filter(|&&(_, e)| e > 0)
        .map(|&(g, e)| (g as u32, e))
        .collect();
    pairs.sort_unstable();
    let mut merged: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
    for (g, e) in pairs {
        match merged.last_mut() {
            Some(last) if last.0 == g => last.1 += e,
            _ => merged.push((g, e)),
        }
    }
    let degree = merged
        .iter()
        .map(|&(g, e)| generators[g as usize].degree * e)
        .sum();
    Monomial::from_parts(degree, merged)
}

struct Enumeration<'a> {
    groups_last: &'a [usize],
    member: &'a [Vec<usize>],
    hits: &'a mut [u32],
    current: &'a mut Vec<(u32, u32)>,
    out: &'a mut Vec<Monomial>,
}

impl GradedAlgebra {
    /// The ground field F2.
    pub fn ground_field() -> Self {
        AlgebraBuilder::new().build().expect("empty presentation is valid")
    }

    /// `F2[x_1, ..., x_k]` with lambda zero on every generator of degree > 1.
    pub fn polynomial(generators: &[(&str, u32)]) -> Result<Self> {
        let mut b = AlgebraBuilder::new();
        for &(name, degree) in generators {
            let g = b.generator(name, degree)?;
            let lambda = if degree == 1 { b.gen(g) } else { Element::zero() };
            b.set_lambda(g, lambda);
        }
        b.build()
    }

    /// The exterior algebra on one generator of degree `degree >= 2`, with
    /// lambda zero.
    pub fn exterior(name: &str, degree: u32) -> Result<Self> {
        if degree < 2 {
            return Err(Error::InvalidAlgebra(
                "exterior generator must have degree at least 2".into(),
            ));
        }
        let mut b = AlgebraBuilder::new();
        let g = b.generator(name, degree)?;
        b.set_square(g, Element::zero());
        b.set_lambda(g, Element::zero());
        b.build()
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator(&self, g: usize) -> &Generator {
        &self.generators[g]
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// True when every generator has a free square.
    pub fn is_polynomial(&self) -> bool {
        self.generators.iter().all(|g| !g.is_rewrite())
    }

    /// True when every generator carries a lambda image.
    pub fn carries_lambda(&self) -> bool {
        self.generators.iter().all(|g| g.lambda.is_some())
    }

    /// Raw monomial from `(generator, exponent)` pairs, not normalized.
    pub fn monomial(&self, factors: &[(usize, u32)]) -> Monomial {
        monomial_from_pairs(&self.generators, factors)
    }

    pub fn gen(&self, g: usize) -> Element {
        Element::from_monomial(self.monomial(&[(g, 1)]))
    }

    /// Normal form of a raw monomial.
    pub fn normalize(&self, m: Monomial) -> Element {
        let mut out = Vec::new();
        self.normalize_into(m, &mut out);
        Element::from_terms(out)
    }

    pub fn normalize_element(&self, e: &Element) -> Element {
        let mut out = Vec::new();
        for m in e.terms() {
            self.normalize_into(m.clone(), &mut out);
        }
        Element::from_terms(out)
    }

    fn normalize_into(&self, m: Monomial, out: &mut Vec<Monomial>) {
        for &(g, e) in m.factors() {
            if e < 2 {
                continue;
            }
            let gen = &self.generators[g as usize];
            if let SquareRule::Rewrite(rhs) = &gen.square {
                let rest = m.divide_generator(g, gen.degree, 2);
                for r in rhs.terms() {
                    self.normalize_into(rest.mul_raw(r), out);
                }
                return;
            }
        }
        out.push(m);
    }

    pub fn is_normal(&self, m: &Monomial) -> bool {
        m.factors()
            .iter()
            .all(|&(g, e)| e < 2 || !self.generators[g as usize].is_rewrite())
    }

    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Element {
        self.normalize(a.mul_raw(b))
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let mut out = Vec::with_capacity(a.len() * b.len());
        for x in a.terms() {
            for y in b.terms() {
                self.normalize_into(x.mul_raw(y), &mut out);
            }
        }
        Element::from_terms(out)
    }

    /// Frobenius: cross terms cancel in characteristic two.
    pub fn square(&self, a: &Element) -> Element {
        let mut out = Vec::with_capacity(a.len());
        for x in a.terms() {
            self.normalize_into(x.mul_raw(x), &mut out);
        }
        Element::from_terms(out)
    }

    pub fn pow(&self, a: &Element, mut k: u32) -> Element {
        let mut base = a.clone();
        let mut acc = Element::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.square(&base);
            }
        }
        acc
    }

    /// All normal-form monomials of degree `t`, sorted.
    pub fn basis_of_degree(&self, t: u32) -> Vec<Monomial> {
        self.basis_of_degree_meeting(t, &[])
    }

    /// Normal-form monomials of degree `t` containing at least one generator
    /// of every group, sorted.
    pub fn basis_of_degree_meeting(&self, t: u32, groups: &[Vec<usize>]) -> Vec<Monomial> {
        // a group is settled once enumeration passes its last generator
        let last: Vec<usize> = groups.iter().map(|g| g.iter().copied().max().unwrap_or(0)).collect();
        if groups.iter().any(Vec::is_empty) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        let mut hits = vec![0u32; groups.len()];
        let member: Vec<Vec<usize>> = (0..self.generators.len())
            .map(|g| (0..groups.len()).filter(|&k| groups[k].contains(&g)).collect())
            .collect();
        let mut ctx = Enumeration {
            groups_last: &last,
            member: &member,
            hits: &mut hits,
            current: &mut current,
            out: &mut out,
        };
        self.enumerate(0, t, &mut ctx);
        out.sort_unstable();
        out
    }

    fn enumerate(&self, g: usize, remaining: u32, ctx: &mut Enumeration<'_>) {
        if ctx
            .groups_last
            .iter()
            .zip(ctx.hits.iter())
            .any(|(&last, &h)| last < g && h == 0)
        {
            return;
        }
        if g == self.generators.len() {
            if remaining == 0 {
                let degree = ctx
                    .current
                    .iter()
                    .map(|&(i, e)| self.generators[i as usize].degree * e)
                    .sum();
                ctx.out.push(Monomial::from_parts(degree, ctx.current.clone()));
            }
            return;
        }
        let gen = &self.generators[g];
        let max_exp = if gen.is_rewrite() {
            1
        } else {
            // free generators have positive degree
            remaining / gen.degree
        };
        let mut marked = false;
        for e in 0..=max_exp {
            let used = gen.degree * e;
            if used > remaining {
                break;
            }
            if e == 1 {
                marked = true;
                for &k in &ctx.member[g] {
                    ctx.hits[k] += 1;
                }
            }
            if e > 0 {
                ctx.current.push((g as u32, e));
            }
            self.enumerate(g + 1, remaining - used, ctx);
            if e > 0 {
                ctx.current.pop();
            }
        }
        if marked {
            for &k in &ctx.member[g] {
                ctx.hits[k] -= 1;
            }
        }
    }

    /// Extends the lambda images of the generators to `e` by additivity and
    /// `lambda(xy) = lambda(x) y^2 + x^2 lambda(y)`.
    pub fn lambda_extend(&self, e: &Element) -> Result<Element> {
        if let Some(g) = self.generators.iter().find(|g| g.lambda.is_none()) {
            return Err(Error::MissingLambda(g.name.clone()));
        }
        let mut acc = Element::zero();
        for m in e.terms() {
            acc += &self.lambda_monomial(m);
        }
        Ok(acc)
    }

    fn lambda_monomial(&self, m: &Monomial) -> Element {
        let Some(&(g, _)) = m.factors().first() else {
            return Element::zero();
        };
        let gen = &self.generators[g as usize];
        let rest = m.divide_generator(g, gen.degree, 1);
        let lambda_g = gen.lambda.as_ref().expect("checked by caller");
        let first = if lambda_g.is_zero() {
            Element::zero()
        } else {
            self.mul(lambda_g, &self.normalize(rest.mul_raw(&rest)))
        };
        let lambda_rest = self.lambda_monomial(&rest);
        let second = if lambda_rest.is_zero() {
            Element::zero()
        } else {
            let g2 = self.normalize(self.monomial(&[(g as usize, 2)]));
            self.mul(&g2, &lambda_rest)
        };
        first + second
    }

    fn validate_rules(&self) -> Result<()> {
        for gen in &self.generators {
            match &gen.square {
                SquareRule::Free => {
                    if gen.degree == 0 {
                        return Err(Error::InvalidAlgebra(format!(
                            "free generator `{}` of degree 0 gives an infinite graded piece",
                            gen.name
                        )));
                    }
                }
                SquareRule::Rewrite(rhs) => {
                    if !rhs.has_degree(2 * gen.degree) {
                        return Err(Error::InvalidAlgebra(format!(
                            "square rewrite of `{}` is not homogeneous of degree {}",
                            gen.name,
                            2 * gen.degree
                        )));
                    }
                    if rhs.terms().iter().any(|m| self.rewrite_metric(m) >= 2) {
                        return Err(Error::NonTerminatingRewrite(gen.name.clone()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Number of rewrite-generator letters, with multiplicity.
    pub fn rewrite_metric(&self, m: &Monomial) -> u32 {
        m.factors()
            .iter()
            .filter(|&&(g, _)| self.generators[g as usize].is_rewrite())
            .map(|&(_, e)| e)
            .sum()
    }

    fn validate_lambda(&self) -> Result<()> {
        for (i, gen) in self.generators.iter().enumerate() {
            let Some(lambda) = &gen.lambda else { continue };
            if gen.degree == 1 {
                if *lambda != self.gen(i) {
                    return Err(Error::InvalidAlgebra(format!(
                        "lambda of the degree-one generator `{}` must be itself",
                        gen.name
                    )));
                }
            } else if gen.degree == 0 {
                if !lambda.is_zero() {
                    return Err(Error::InvalidAlgebra(format!(
                        "lambda of the degree-zero generator `{}` must vanish",
                        gen.name
                    )));
                }
            } else if !lambda.has_degree(2 * gen.degree - 1) {
                return Err(Error::InvalidAlgebra(format!(
                    "lambda of `{}` must have degree {}",
                    gen.name,
                    2 * gen.degree - 1
                )));
            }
        }
        if self.carries_lambda() {
            for gen in &self.generators {
                if let SquareRule::Rewrite(rhs) = &gen.square {
                    if !self.lambda_extend(rhs)?.is_zero() {
                        return Err(Error::InvalidAlgebra(format!(
                            "lambda of the square rewrite of `{}` must vanish",
                            gen.name
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly_xy() -> GradedAlgebra {
        GradedAlgebra::polynomial(&[("x", 2), ("y", 2)]).unwrap()
    }

    #[test]
    fn free_square() {
        let a = GradedAlgebra::polynomial(&[("x", 2)]).unwrap();
        let x = a.gen(0);
        assert_eq!(a.mul(&x, &x), Element::from_monomial(a.monomial(&[(0, 2)])));
    }

    #[test]
    fn frobenius_in_char_two() {
        let a = poly_xy();
        let s = &a.gen(0) + &a.gen(1);
        let expected = &a.pow(&a.gen(0), 2) + &a.pow(&a.gen(1), 2);
        assert_eq!(a.mul(&s, &s), expected);
        assert_eq!(a.square(&s), expected);
    }

    #[test]
    fn exterior_basis() {
        let a = GradedAlgebra::exterior("s", 2).unwrap();
        let b2: Vec<_> = a.basis_of_degree(2);
        assert_eq!(b2, vec![a.monomial(&[(0, 1)])]);
        assert!(a.basis_of_degree(4).is_empty());
        assert!(a.mul(&a.gen(0), &a.gen(0)).is_zero());
    }

    #[test]
    fn rewrite_metric_is_enforced() {
        let mut b = AlgebraBuilder::new();
        let g = b.generator("g", 2).unwrap();
        let h = b.generator("h", 2).unwrap();
        b.set_square(h, Element::zero());
        let bad = Element::from_monomial(b.monomial(&[(g, 1), (h, 1)]));
        b.set_square(g, bad);
        assert!(matches!(b.build(), Err(Error::NonTerminatingRewrite(_))));
    }

    #[test]
    fn rewrite_degree_is_checked() {
        let mut b = AlgebraBuilder::new();
        let g = b.generator("g", 2).unwrap();
        b.set_square(g, b.gen(g));
        assert!(matches!(b.build(), Err(Error::InvalidAlgebra(_))));
    }

    #[test]
    fn lambda_rules() {
        // lambda(xy) with lambda x = lambda y = 0
        let a = poly_xy();
        let xy = a.mul(&a.gen(0), &a.gen(1));
        assert!(a.lambda_extend(&xy).unwrap().is_zero());
        // lambda(g) = g in degree one
        let one = GradedAlgebra::polynomial(&[("g", 1)]).unwrap();
        assert_eq!(one.lambda_extend(&one.gen(0)).unwrap(), one.gen(0));
        // lambda(x^2) = 0 even when lambda x = z
        let mut b = AlgebraBuilder::new();
        let x = b.generator("x", 2).unwrap();
        let z = b.generator("z", 3).unwrap();
        b.set_lambda(z, Element::zero());
        b.set_lambda(x, b.gen(z));
        let a = b.build().unwrap();
        assert_eq!(a.lambda_extend(&a.gen(x)).unwrap(), a.gen(z));
        assert!(a.lambda_extend(&a.pow(&a.gen(x), 2)).unwrap().is_zero());
    }

    #[test]
    fn lambda_missing_is_an_error() {
        let mut b = AlgebraBuilder::new();
        b.generator("x", 2).unwrap();
        let a = b.build().unwrap();
        assert!(matches!(a.lambda_extend(&a.gen(0)), Err(Error::MissingLambda(_))));
    }

    #[test]
    fn degree_one_lambda_is_checked() {
        let mut b = AlgebraBuilder::new();
        let g = b.generator("g", 1).unwrap();
        b.set_lambda(g, Element::zero());
        assert!(b.build().is_err());
    }

    #[test]
    fn free_degree_zero_rejected() {
        let mut b = AlgebraBuilder::new();
        b.generator("e", 0).unwrap();
        assert!(b.build().is_err());
    }
}
