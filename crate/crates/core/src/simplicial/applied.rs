use std::sync::Arc;

use rayon::prelude::*;

use super::complex::{LevelSpace, SubquotientComplex};
use super::resolution::{check_identities, SimplicialAlgebra};
use crate::algebra::{AlgebraHom, Basis, Element, GradedAlgebra, Monomial};
use crate::functors::{omega_bar, omega_tilde, FunctorTag, OmegaAlgebra};
use crate::linalg::{BitVec, F2Matrix, Subspace};
use crate::{Error, Result};

/// How chains are modelled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    /// Normalized chains, computed as the quotient by degenerate chains
    /// (spanned by degenerate monomials); representatives are lifted into
    /// the normalized subcomplex on request.
    #[default]
    Normalized,
    /// The normalized subcomplex taken literally: the intersection of the
    /// kernels of `d_i`, `i > 0`, with differential `d_0`.
    Moore,
    /// All chains with the full boundary `sum d_i`.
    Unnormalized,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Normalized => "normalized",
            Mode::Moore => "moore",
            Mode::Unnormalized => "unnormalized",
        }
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "normalized" => Ok(Mode::Normalized),
            "moore" => Ok(Mode::Moore),
            "unnormalized" => Ok(Mode::Unnormalized),
            _ => Err(Error::Invalid(format!("unknown mode `{s}`"))),
        }
    }
}

/// The algebra-valued functor applied levelwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AmbientFunctor {
    /// The simplicial algebra itself.
    Underlying,
    OmegaBar,
    OmegaTilde,
}

impl AmbientFunctor {
    /// The ambient functor of a tag and the subquotient it takes.
    pub fn of(tag: FunctorTag) -> Result<Self> {
        match tag {
            FunctorTag::OmegaBar | FunctorTag::Z | FunctorTag::B | FunctorTag::H => {
                Ok(AmbientFunctor::OmegaBar)
            }
            FunctorTag::OmegaTilde => Ok(AmbientFunctor::OmegaTilde),
            FunctorTag::Ell | FunctorTag::OmegaTw => Err(Error::UnsupportedFunctor(format!(
                "derived functors of `{tag}` are not computed levelwise"
            ))),
        }
    }
}

/// Which subquotient of the ambient functor forms the chains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Piece {
    All,
    Cycles,
    Boundaries,
    Cohomology,
}

impl Piece {
    pub fn of(tag: FunctorTag) -> Piece {
        match tag {
            FunctorTag::Z => Piece::Cycles,
            FunctorTag::B => Piece::Boundaries,
            FunctorTag::H => Piece::Cohomology,
            _ => Piece::All,
        }
    }
}

/// A functor applied to every level of a simplicial algebra, with the
/// induced faces and degeneracies.
#[derive(Clone, Debug)]
pub struct AppliedFunctor {
    kind: AmbientFunctor,
    levels: Vec<Arc<GradedAlgebra>>,
    omegas: Vec<OmegaAlgebra>,
    faces: Vec<Vec<AlgebraHom>>,
    degeneracies: Vec<Vec<AlgebraHom>>,
    /// Per level `n >= 1` and degeneracy `s_i: n - 1 -> n`, the generators
    /// of level `n` outside the image of `s_i`; `None` if some degeneracy
    /// does not permute generators.
    missing: Option<Vec<Vec<Vec<usize>>>>,
}

fn generator_image(h: &AlgebraHom) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(h.images().len());
    for e in h.images() {
        let [m] = e.terms() else { return None };
        let [(g, 1)] = m.factors() else { return None };
        out.push(*g as usize);
    }
    Some(out)
}

impl AppliedFunctor {
    pub fn new(kind: AmbientFunctor, s: &SimplicialAlgebra) -> Result<Self> {
        let m = s.max_level();
        let mut omegas = Vec::new();
        let (levels, faces, degeneracies): (Vec<_>, Vec<Vec<AlgebraHom>>, Vec<Vec<AlgebraHom>>) = match kind {
            AmbientFunctor::Underlying => (
                s.levels().to_vec(),
                (0..=m).map(|n| s.faces(n).to_vec()).collect(),
                (0..m).map(|n| s.degeneracies(n).to_vec()).collect(),
            ),
            AmbientFunctor::OmegaBar => {
                omegas = s
                    .levels()
                    .iter()
                    .map(|a| omega_bar(a.clone()))
                    .collect::<Result<_>>()?;
                let faces = (0..=m)
                    .map(|n| {
                        s.faces(n)
                            .iter()
                            .map(|f| omegas[n].induced(f, &omegas[n - 1]))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<_>>()?;
                let degs = (0..m)
                    .map(|n| {
                        s.degeneracies(n)
                            .iter()
                            .map(|f| omegas[n].induced(f, &omegas[n + 1]))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<_>>()?;
                (omegas.iter().map(|o| o.algebra().clone()).collect(), faces, degs)
            }
            AmbientFunctor::OmegaTilde => {
                let tildes = s
                    .levels()
                    .iter()
                    .map(|a| omega_tilde(a.clone()))
                    .collect::<Result<Vec<_>>>()?;
                let faces = (0..=m)
                    .map(|n| {
                        s.faces(n)
                            .iter()
                            .map(|f| tildes[n].induced(f, &tildes[n - 1]))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<_>>()?;
                let degs = (0..m)
                    .map(|n| {
                        s.degeneracies(n)
                            .iter()
                            .map(|f| tildes[n].induced(f, &tildes[n + 1]))
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<_>>()?;
                (tildes.iter().map(|t| t.algebra().clone()).collect(), faces, degs)
            }
        };
        let missing = (1..=m)
            .map(|n| {
                degeneracies[n - 1]
                    .iter()
                    .map(|h| {
                        let image = generator_image(h)?;
                        Some(
                            (0..levels[n].num_generators())
                                .filter(|g| !image.contains(g))
                                .collect(),
                        )
                    })
                    .collect::<Option<Vec<Vec<usize>>>>()
            })
            .collect::<Option<Vec<_>>>();
        Ok(AppliedFunctor {
            kind,
            levels,
            omegas,
            faces,
            degeneracies,
            missing,
        })
    }

    pub fn kind(&self) -> AmbientFunctor {
        self.kind
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &Arc<GradedAlgebra> {
        &self.levels[n]
    }

    pub fn omega(&self, n: usize) -> Option<&OmegaAlgebra> {
        self.omegas.get(n)
    }

    pub fn face(&self, n: usize, i: usize) -> &AlgebraHom {
        &self.faces[n][i]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &AlgebraHom {
        &self.degeneracies[n][i]
    }

    pub fn check_identities(&self) -> Result<()> {
        check_identities(self.max_level(), |n, i| &self.faces[n][i], |n, i| &self.degeneracies[n][i])
    }

    /// A monomial is degenerate when it avoids the generators missing from
    /// the image of some degeneracy.
    pub fn is_degenerate(&self, n: usize, m: &Monomial) -> Result<bool> {
        if n == 0 {
            return Ok(false);
        }
        let missing = self.missing.as_ref().ok_or_else(|| {
            Error::Invalid("degeneracies do not permute generators".into())
        })?;
        Ok(missing[n - 1]
            .iter()
            .any(|gens| gens.iter().all(|&g| m.exponent(g) == 0)))
    }

    /// Chain basis of level `n` in degree `t` for the mode.
    pub fn chain_basis(&self, n: usize, t: u32, mode: Mode) -> Result<Basis> {
        let level = &self.levels[n];
        match mode {
            Mode::Normalized if n > 0 => {
                let missing = self.missing.as_ref().ok_or_else(|| {
                    Error::Invalid("degeneracies do not permute generators".into())
                })?;
                Ok(Basis::new(level.basis_of_degree_meeting(t, &missing[n - 1])))
            }
            _ => Ok(Basis::new(level.basis_of_degree(t))),
        }
    }

    fn face_sum(&self, n: usize, m: &Monomial) -> Element {
        let mut acc = Element::zero();
        for f in &self.faces[n] {
            acc += &f.eval_monomial(m);
        }
        acc
    }

    /// Matrix of `sum d_i` (or `d_0` in the Moore mode) from level `n` to
    /// `n - 1`, in the given bases.
    fn boundary_matrix(&self, n: usize, source: &Basis, target: &Basis, mode: Mode) -> Result<F2Matrix> {
        match mode {
            Mode::Normalized => Ok(source.projected_matrix(target, |m| self.face_sum(n, m))),
            Mode::Unnormalized => source.matrix(target, |m| self.face_sum(n, m)),
            Mode::Moore => source.matrix(target, |m| self.faces[n][0].eval_monomial(m)),
        }
    }

    /// The de Rham differential between chain bases (degree `t` to `t - 1`).
    fn d_matrix(&self, n: usize, source: &Basis, target: &Basis, mode: Mode) -> Result<F2Matrix> {
        let omega = self
            .omegas
            .get(n)
            .ok_or_else(|| Error::UnsupportedFunctor("subquotients need the de Rham functor".into()))?;
        match mode {
            Mode::Normalized => Ok(source.projected_matrix(target, |m| omega.d_monomial(m))),
            _ => source.matrix(target, |m| omega.d_monomial(m)),
        }
    }

    /// The de Rham differential on chains of level `n`, degree `t` to `t - 1`.
    pub fn de_rham_matrix(&self, n: usize, t: u32, mode: Mode) -> Result<F2Matrix> {
        let source = self.chain_basis(n, t, mode)?;
        let target = if t == 0 { Basis::default() } else { self.chain_basis(n, t - 1, mode)? };
        self.d_matrix(n, &source, &target, mode)
    }

    /// The subquotient complex of `piece` in internal degree `t` on levels
    /// `0..=top`.
    pub fn complex(&self, piece: Piece, t: u32, top: usize, mode: Mode) -> Result<SubquotientComplex> {
        if top > self.max_level() {
            return Err(Error::IncompleteWindow(format!(
                "level {top} requested but only {} built",
                self.max_level()
            )));
        }
        let bases: Vec<Basis> = (0..=top)
            .into_par_iter()
            .map(|n| self.chain_basis(n, t, mode))
            .collect::<Result<_>>()?;
        let mut levels = Vec::with_capacity(top + 1);
        for (n, basis) in bases.iter().enumerate() {
            let dim = basis.len();
            let (upper, lower) = match piece {
                Piece::All => (Subspace::full(dim), Subspace::zero(dim)),
                _ => {
                    let cycles = || -> Result<Subspace> {
                        if t == 0 {
                            return Ok(Subspace::full(dim));
                        }
                        let below = self.chain_basis(n, t - 1, mode)?;
                        Ok(self.d_matrix(n, basis, &below, mode)?.kernel())
                    };
                    let boundaries = || -> Result<Subspace> {
                        let above = self.chain_basis(n, t + 1, mode)?;
                        Ok(self.d_matrix(n, &above, basis, mode)?.image())
                    };
                    match piece {
                        Piece::Cycles => (cycles()?, Subspace::zero(dim)),
                        Piece::Boundaries => (boundaries()?, Subspace::zero(dim)),
                        Piece::Cohomology => (cycles()?, boundaries()?),
                        Piece::All => unreachable!(),
                    }
                }
            };
            levels.push(LevelSpace::new(basis.clone(), upper, lower));
        }
        let boundary: Vec<F2Matrix> = (1..=top)
            .into_par_iter()
            .map(|n| self.boundary_matrix(n, &bases[n], &bases[n - 1], mode))
            .collect::<Result<_>>()?;
        if mode == Mode::Moore {
            // restrict to the intersection of the kernels of d_i, i > 0
            for n in 1..=top {
                let below = &levels[n - 1];
                let mut upper = levels[n].upper().clone();
                for i in 1..=n {
                    let f = bases[n].matrix(&bases[n - 1], |m| self.faces[n][i].eval_monomial(m))?;
                    upper = upper.preimage_within(&f, below.lower());
                }
                levels[n].set_upper(upper);
            }
        }
        SubquotientComplex::new(t, levels, boundary)
    }

    /// The projection onto the normalized subcomplex,
    /// `(1 - s_0 d_1)(1 - s_1 d_2) ... (1 - s_{n-1} d_n)`.
    pub fn normalize_chain(&self, n: usize, e: &Element) -> Element {
        let mut x = e.clone();
        for j in (1..=n).rev() {
            let back = self.degeneracies[n - 1][j - 1].eval(&self.faces[n][j].eval(&x));
            x += &back;
        }
        x
    }

    /// Whether `e` lies in the normalized subcomplex.
    pub fn is_normalized(&self, n: usize, e: &Element) -> bool {
        (1..=n).all(|i| self.faces[n][i].eval(e).is_zero())
    }

    /// Lifts a chain given in `basis` coordinates to an element.
    pub fn element(&self, basis: &Basis, v: &BitVec) -> Element {
        basis.element(v)
    }
}
