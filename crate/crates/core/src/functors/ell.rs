use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use rayon::prelude::*;

use crate::algebra::{AlgebraBuilder, Basis, Element, GradedAlgebra, Monomial};
use crate::linalg::{BitVec, Subspace};
use crate::{Error, Result};

/// Which quotient of the free algebra on `u, phi, q, delta` is presented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EllVariant {
    /// `ell(A)` itself.
    Ell,
    /// `L(A) = ell(A) / (u)`.
    CalL,
    /// `Omega~(A) = L(A) / (delta)`.
    OmegaTilde,
}

/// The defining relations, each taking homogeneous arguments (`PhiSum`,
/// `DeltaSum` and `QSum` take two arguments of equal degree).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EllRelation {
    PhiSum,
    DeltaSum,
    QSum,
    DeltaTriple,
    PhiProduct,
    QProduct,
    DeltaSquare,
    QSquare,
    DeltaPhi,
    DeltaQ,
    UDelta,
}

impl EllRelation {
    pub const ALL: [EllRelation; 11] = [
        EllRelation::PhiSum,
        EllRelation::DeltaSum,
        EllRelation::QSum,
        EllRelation::DeltaTriple,
        EllRelation::PhiProduct,
        EllRelation::QProduct,
        EllRelation::DeltaSquare,
        EllRelation::QSquare,
        EllRelation::DeltaPhi,
        EllRelation::DeltaQ,
        EllRelation::UDelta,
    ];

    pub fn arity(self) -> usize {
        match self {
            EllRelation::DeltaTriple => 3,
            EllRelation::DeltaSquare | EllRelation::QSquare | EllRelation::UDelta => 1,
            _ => 2,
        }
    }

    /// Degree of the instance for arguments of the given degrees.
    pub fn degree(self, args: &[u32]) -> i64 {
        let d: Vec<i64> = args.iter().map(|&x| i64::from(x)).collect();
        match self {
            EllRelation::PhiSum => 2 * d[0],
            EllRelation::DeltaSum => d[0] - 1,
            EllRelation::QSum => 2 * d[0] - 1,
            EllRelation::DeltaTriple => d[0] + d[1] + d[2] - 2,
            EllRelation::PhiProduct => 2 * (d[0] + d[1]),
            EllRelation::QProduct => 2 * (d[0] + d[1]) - 1,
            EllRelation::DeltaSquare => 2 * d[0] - 2,
            EllRelation::QSquare => 4 * d[0] - 2,
            EllRelation::DeltaPhi => d[0] - 1 + 2 * d[1],
            EllRelation::DeltaQ => d[0] + 2 * d[1] - 2,
            EllRelation::UDelta => d[0] + 1,
        }
    }

    fn symmetric(self) -> bool {
        matches!(
            self,
            EllRelation::DeltaTriple | EllRelation::PhiProduct | EllRelation::QProduct
        )
    }
}

/// One generator of the free ambient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EllGenerator {
    U,
    Phi(Monomial),
    Q(Monomial),
    Delta(Monomial),
}

/// A degree-truncated presentation of `ell(A)` or one of its quotients.
///
/// The ambient algebra is free on `u`, and on `phi(m)`, `q(m)`, `delta(m)`
/// for the nonconstant basis monomials `m` of `A`, truncated by degree.
/// Additivity is built into the element-level operations, with the
/// conventions `phi(1) = 1` and `q(1) = delta(1) = 0`. The relation span
/// in each degree is the ideal generated by all relation instances with
/// monomial arguments.
#[derive(Clone, Debug)]
pub struct EllPresentation {
    base: Arc<GradedAlgebra>,
    variant: EllVariant,
    max_deg: u32,
    ambient: Arc<GradedAlgebra>,
    generators: Vec<EllGenerator>,
    phi: HashMap<Monomial, usize>,
    q: HashMap<Monomial, usize>,
    delta: HashMap<Monomial, usize>,
    instances: Vec<Element>,
    bases: Vec<Basis>,
    spans: Vec<Subspace>,
}

fn bracket(kind: &str, base: &GradedAlgebra, m: &Monomial) -> String {
    format!("{kind}({})", base.format_monomial(m))
}

impl EllPresentation {
    pub fn new(base: Arc<GradedAlgebra>, max_deg: u32, variant: EllVariant) -> Result<Self> {
        if let Some(g) = base.generators().iter().find(|g| g.lambda.is_none()) {
            return Err(Error::MissingLambda(g.name.clone()));
        }
        if let Some(g) = base.generators().iter().find(|g| g.degree == 0) {
            return Err(Error::InvalidAlgebra(format!(
                "generator `{}` of degree 0 is not supported",
                g.name
            )));
        }
        let mut b = AlgebraBuilder::new();
        let mut generators = vec![EllGenerator::U];
        b.generator("u", 2)?;
        let mut phi = HashMap::new();
        let mut q = HashMap::new();
        let mut delta = HashMap::new();
        let monomials: Vec<Monomial> = (1..=max_deg + 1)
            .flat_map(|d| base.basis_of_degree(d))
            .collect();
        for m in &monomials {
            let d = m.degree();
            if 2 * d <= max_deg {
                phi.insert(m.clone(), b.generator(bracket("phi", &base, m), 2 * d)?);
                generators.push(EllGenerator::Phi(m.clone()));
            }
        }
        for m in &monomials {
            let d = m.degree();
            if 2 * d - 1 <= max_deg {
                q.insert(m.clone(), b.generator(bracket("q", &base, m), 2 * d - 1)?);
                generators.push(EllGenerator::Q(m.clone()));
            }
        }
        for m in &monomials {
            delta.insert(m.clone(), b.generator(bracket("delta", &base, m), m.degree() - 1)?);
            generators.push(EllGenerator::Delta(m.clone()));
        }
        // delta(m) of degree 0 squares to delta(lambda m)
        for m in monomials.iter().filter(|m| m.degree() == 1) {
            let lambda = base.lambda_extend(&Element::from_monomial(m.clone()))?;
            let rhs = Element::from_terms(lambda.terms().iter().map(|t| b.monomial(&[(delta[t], 1)])));
            b.set_square(delta[m], rhs);
        }
        let ambient = Arc::new(b.build()?);
        let mut pres = EllPresentation {
            base,
            variant,
            max_deg,
            ambient,
            generators,
            phi,
            q,
            delta,
            instances: Vec::new(),
            bases: Vec::new(),
            spans: Vec::new(),
        };
        pres.instances = pres.monomial_instances()?;
        pres.saturate();
        Ok(pres)
    }

    pub fn base(&self) -> &Arc<GradedAlgebra> {
        &self.base
    }

    pub fn variant(&self) -> EllVariant {
        self.variant
    }

    pub fn max_deg(&self) -> u32 {
        self.max_deg
    }

    pub fn ambient(&self) -> &Arc<GradedAlgebra> {
        &self.ambient
    }

    pub fn generator_kind(&self, g: usize) -> &EllGenerator {
        &self.generators[g]
    }

    pub fn u(&self) -> Element {
        self.ambient.gen(0)
    }

    pub fn instances(&self) -> &[Element] {
        &self.instances
    }

    pub fn basis(&self, t: u32) -> &Basis {
        &self.bases[t as usize]
    }

    pub fn relation_span(&self, t: u32) -> &Subspace {
        &self.spans[t as usize]
    }

    fn lookup(&self, table: &HashMap<Monomial, usize>, kind: &str, m: &Monomial) -> Result<Element> {
        table
            .get(m)
            .map(|&g| self.ambient.gen(g))
            .ok_or_else(|| Error::Invalid(format!("{kind} of a degree {} monomial is beyond the truncation", m.degree())))
    }

    /// `phi` of a base element, extended additively.
    pub fn phi_of(&self, a: &Element) -> Result<Element> {
        let mut acc = Element::zero();
        for m in a.terms() {
            if m.is_one() {
                acc += &Element::one();
            } else {
                acc += &self.lookup(&self.phi, "phi", m)?;
            }
        }
        Ok(acc)
    }

    /// `delta` of a base element, extended additively.
    pub fn delta_of(&self, a: &Element) -> Result<Element> {
        let mut acc = Element::zero();
        for m in a.terms().iter().filter(|m| !m.is_one()) {
            acc += &self.lookup(&self.delta, "delta", m)?;
        }
        Ok(acc)
    }

    /// `q` of a homogeneous base element:
    /// `q(sum m_i) = sum q(m_i) + sum_{i<j} delta(m_i m_j)`.
    pub fn q_of(&self, a: &Element) -> Result<Element> {
        let terms = a.terms();
        let mut acc = Element::zero();
        for (i, m) in terms.iter().enumerate() {
            if !m.is_one() {
                acc += &self.lookup(&self.q, "q", m)?;
            }
            for n in &terms[i + 1..] {
                acc += &self.delta_of(&self.base.mul_monomials(m, n))?;
            }
        }
        Ok(acc)
    }

    /// Product that skips the second factor when the first vanishes, so
    /// that unit arguments do not reach generators beyond the truncation.
    fn lazy_mul(
        &self,
        first: Result<Element>,
        second: impl FnOnce() -> Result<Element>,
    ) -> Result<Element> {
        let first = first?;
        if first.is_zero() {
            return Ok(first);
        }
        Ok(self.ambient.mul(&first, &second()?))
    }

    /// The relation instance for the given (normal-form, homogeneous) base
    /// elements.
    pub fn instance(&self, rel: EllRelation, args: &[Element]) -> Result<Element> {
        if args.len() != rel.arity() {
            return Err(Error::Invalid(format!("{rel:?} takes {} arguments", rel.arity())));
        }
        let a = &self.ambient;
        let base = &self.base;
        let x = &args[0];
        let out = match rel {
            EllRelation::PhiSum => {
                let y = &args[1];
                &(&self.phi_of(&(x + y))? + &self.phi_of(x)?) + &self.phi_of(y)?
            }
            EllRelation::DeltaSum => {
                let y = &args[1];
                &(&self.delta_of(&(x + y))? + &self.delta_of(x)?) + &self.delta_of(y)?
            }
            EllRelation::QSum => {
                let y = &args[1];
                let s = &(&self.q_of(&(x + y))? + &self.q_of(x)?) + &self.q_of(y)?;
                &s + &self.delta_of(&base.mul(x, y))?
            }
            EllRelation::DeltaTriple => {
                let (y, z) = (&args[1], &args[2]);
                let t1 = self.lazy_mul(self.delta_of(z), || self.delta_of(&base.mul(x, y)))?;
                let t2 = self.lazy_mul(self.delta_of(x), || self.delta_of(&base.mul(y, z)))?;
                let t3 = self.lazy_mul(self.delta_of(y), || self.delta_of(&base.mul(z, x)))?;
                &(&t1 + &t2) + &t3
            }
            EllRelation::PhiProduct => {
                let y = &args[1];
                let t1 = self.phi_of(&base.mul(x, y))?;
                let t2 = a.mul(&self.phi_of(x)?, &self.phi_of(y)?);
                let t3 = a.mul(&self.u(), &self.lazy_mul(self.q_of(x), || self.q_of(y))?);
                &(&t1 + &t2) + &t3
            }
            EllRelation::QProduct => {
                let y = &args[1];
                let t1 = self.q_of(&base.mul(x, y))?;
                let t2 = self.lazy_mul(self.q_of(x), || self.phi_of(y))?;
                let t3 = self.lazy_mul(self.q_of(y), || self.phi_of(x))?;
                &(&t1 + &t2) + &t3
            }
            EllRelation::DeltaSquare => {
                let dx = self.delta_of(x)?;
                &a.mul(&dx, &dx) + &self.delta_of(&base.lambda_extend(x)?)?
            }
            EllRelation::QSquare => {
                let qx = self.q_of(x)?;
                let lx = base.lambda_extend(x)?;
                let t3 = self.delta_of(&base.mul(&base.square(x), &lx))?;
                &(&a.mul(&qx, &qx) + &self.phi_of(&lx)?) + &t3
            }
            EllRelation::DeltaPhi => {
                let y = &args[1];
                let t1 = self.lazy_mul(self.delta_of(x), || self.phi_of(y))?;
                &t1 + &self.delta_of(&base.mul(x, &base.square(y)))?
            }
            EllRelation::DeltaQ => {
                let y = &args[1];
                let t1 = self.lazy_mul(self.delta_of(x), || self.q_of(y))?;
                let t2 = self.delta_of(&base.mul(x, &base.lambda_extend(y)?))?;
                let t3 = self.lazy_mul(self.delta_of(y), || self.delta_of(&base.mul(x, y)))?;
                &(&t1 + &t2) + &t3
            }
            EllRelation::UDelta => a.mul(&self.u(), &self.delta_of(x)?),
        };
        Ok(out)
    }

    /// Every instance with monomial arguments (including `1`) of degree at
    /// most the truncation, together with the extra relations of the variant.
    fn monomial_instances(&self) -> Result<Vec<Element>> {
        let max = i64::from(self.max_deg);
        let args: Vec<Element> = std::iter::once(Element::one())
            .chain(
                (1..=self.max_deg + 1)
                    .flat_map(|d| self.base.basis_of_degree(d))
                    .map(Element::from_monomial),
            )
            .collect();
        let deg = |e: &Element| e.terms()[0].degree();
        let mut out = Vec::new();
        for rel in EllRelation::ALL {
            let mut tuples: Vec<Vec<usize>> = Vec::new();
            let n = args.len();
            match rel.arity() {
                1 => tuples.extend((0..n).map(|i| vec![i])),
                2 => {
                    for i in 0..n {
                        let lo = if rel.symmetric() { i } else { 0 };
                        for j in lo..n {
                            tuples.push(vec![i, j]);
                        }
                    }
                }
                _ => {
                    for i in 0..n {
                        for j in i..n {
                            if rel.degree(&[deg(&args[i]), deg(&args[j]), 0]) > max {
                                break;
                            }
                            for k in j..n {
                                tuples.push(vec![i, j, k]);
                            }
                        }
                    }
                }
            }
            for t in tuples {
                let degrees: Vec<u32> = t.iter().map(|&i| deg(&args[i])).collect();
                let d = rel.degree(&degrees);
                if d < 0 || d > max {
                    continue;
                }
                if matches!(rel, EllRelation::PhiSum | EllRelation::DeltaSum | EllRelation::QSum)
                    && degrees[0] != degrees[1]
                {
                    continue;
                }
                let chosen: Vec<Element> = t.iter().map(|&i| args[i].clone()).collect();
                let e = self.instance(rel, &chosen)?;
                if !e.is_zero() {
                    out.push(e);
                }
            }
        }
        if matches!(self.variant, EllVariant::CalL | EllVariant::OmegaTilde) {
            out.push(self.u());
        }
        if self.variant == EllVariant::OmegaTilde {
            let mut ds: Vec<usize> = self.delta.values().copied().collect();
            ds.sort_unstable();
            out.extend(ds.into_iter().map(|g| self.ambient.gen(g)));
        }
        Ok(out)
    }

    /// Builds the relation span degree by degree: the ideal in degree `t`
    /// is spanned by the instances of degree `t` and by generator multiples
    /// of lower-degree spans, closed under degree-0 generators.
    fn saturate(&mut self) {
        let a = self.ambient.clone();
        let positive: Vec<(usize, u32)> = (0..a.num_generators())
            .map(|g| (g, a.generator(g).degree))
            .filter(|&(_, d)| d > 0)
            .collect();
        let zero_gens: Vec<usize> = (0..a.num_generators())
            .filter(|&g| a.generator(g).degree == 0)
            .collect();
        for t in 0..=self.max_deg {
            let basis = Basis::of_degree(&a, t);
            let mut vectors: Vec<BitVec> = self
                .instances
                .iter()
                .filter(|e| e.terms()[0].degree() == t)
                .map(|e| basis.vector(e).expect("homogeneous instance"))
                .collect();
            let jobs: Vec<(usize, u32, &BitVec)> = positive
                .iter()
                .filter(|&&(_, d)| d <= t)
                .flat_map(|&(g, d)| {
                    self.spans[(t - d) as usize]
                        .basis()
                        .iter()
                        .map(move |v| (g, d, v))
                })
                .collect();
            let products: Vec<BitVec> = jobs
                .par_iter()
                .map(|&(g, d, v)| {
                    let e = self.bases[(t - d) as usize].element(v);
                    basis.vector(&a.mul(&a.gen(g), &e)).expect("degree t")
                })
                .collect();
            vectors.extend(products);
            let mut span = Subspace::from_vectors(basis.len(), vectors);
            loop {
                let extra: Vec<BitVec> = zero_gens
                    .iter()
                    .flat_map(|&g| {
                        span.basis()
                            .iter()
                            .map(|v| basis.vector(&a.mul(&a.gen(g), &basis.element(v))).expect("degree t"))
                            .collect::<Vec<_>>()
                    })
                    .filter(|v| !span.contains(v))
                    .collect();
                if extra.is_empty() {
                    break;
                }
                span = span.sum(&Subspace::from_vectors(basis.len(), extra));
            }
            self.bases.push(basis);
            self.spans.push(span);
        }
    }

    /// Quotient dimensions in degrees `0..=max_deg`.
    pub fn dims(&self) -> Vec<usize> {
        self.bases
            .iter()
            .zip(&self.spans)
            .map(|(b, s)| b.len() - s.dim())
            .collect()
    }

    /// Whether a homogeneous ambient element lies in the relation span.
    pub fn contains(&self, e: &Element) -> Result<bool> {
        let Some(first) = e.terms().first() else {
            return Ok(true);
        };
        let t = first.degree();
        if t > self.max_deg || !e.has_degree(t) {
            return Err(Error::Invalid("element outside the truncation".into()));
        }
        Ok(self.spans[t as usize].contains(&self.bases[t as usize].vector(e)?))
    }

    /// Dimensions of the `u`-adic graded pieces `u^j ell / u^{j+1} ell` in
    /// each degree, keyed by `(j, t)`; zero entries are included.
    pub fn u_adic_dims(&self) -> BTreeMap<(u32, u32), usize> {
        let a = &self.ambient;
        let mut out = BTreeMap::new();
        for t in 0..=self.max_deg {
            let basis = &self.bases[t as usize];
            let rel = &self.spans[t as usize];
            let dim_s = |j: u32| -> usize {
                if 2 * j > t {
                    return rel.dim();
                }
                let uj = a.pow(&self.u(), j);
                let vectors = self.bases[(t - 2 * j) as usize].monomials().iter().map(|m| {
                    basis
                        .vector(&a.mul(&uj, &Element::from_monomial(m.clone())))
                        .expect("degree t")
                });
                rel.sum(&Subspace::from_vectors(basis.len(), vectors)).dim()
            };
            let dims: Vec<usize> = (0..=t / 2 + 1).map(dim_s).collect();
            for j in 0..=t / 2 {
                out.insert((j, t), dims[j as usize] - dims[j as usize + 1]);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ground_field_is_polynomial_in_u() {
        let p = EllPresentation::new(Arc::new(GradedAlgebra::ground_field()), 6, EllVariant::Ell).unwrap();
        assert_eq!(p.dims(), vec![1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn low_degrees_of_one_variable() {
        let base = Arc::new(GradedAlgebra::polynomial(&[("x", 2)]).unwrap());
        let p = EllPresentation::new(base, 4, EllVariant::Ell).unwrap();
        let dims = p.dims();
        assert_eq!(dims[0], 1);
        assert_eq!(dims[1], 1);
    }

    #[test]
    fn delta_of_squares_vanishes() {
        let base = Arc::new(GradedAlgebra::polynomial(&[("x", 2)]).unwrap());
        let p = EllPresentation::new(base.clone(), 6, EllVariant::Ell).unwrap();
        let x2 = base.parse("x^2").unwrap();
        assert!(p.contains(&p.delta_of(&x2).unwrap()).unwrap());
        let x = base.parse("x").unwrap();
        assert!(!p.contains(&p.delta_of(&x).unwrap()).unwrap());
    }

    #[test]
    fn degree_zero_delta_is_idempotent() {
        let base = Arc::new(GradedAlgebra::polynomial(&[("g", 1)]).unwrap());
        let p = EllPresentation::new(base.clone(), 3, EllVariant::Ell).unwrap();
        let dg = p.delta_of(&base.gen(0)).unwrap();
        assert_eq!(p.ambient().mul(&dg, &dg), dg);
    }
}
