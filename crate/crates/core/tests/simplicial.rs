use std::sync::OnceLock;

use loopcohom::algebra::Element;
use loopcohom::functors::FunctorTag;
use loopcohom::simplicial::{
    derived_dims, gamma, AmbientFunctor, AppliedFunctor, DerivedFunctor, DimTable, Mode, ShortExactSequence,
    SimplicialAlgebra, Window,
};
use proptest::prelude::*;

fn resolution() -> &'static SimplicialAlgebra {
    static CELL: OnceLock<SimplicialAlgebra> = OnceLock::new();
    CELL.get_or_init(|| SimplicialAlgebra::sphere_resolution(2, 5).unwrap())
}

fn omega() -> &'static AppliedFunctor {
    static CELL: OnceLock<AppliedFunctor> = OnceLock::new();
    CELL.get_or_init(|| AppliedFunctor::new(AmbientFunctor::OmegaBar, resolution()).unwrap())
}

fn random_element(f: &AppliedFunctor, n: usize, t: u32, mask: u64) -> Element {
    let basis = f.chain_basis(n, t, Mode::Unnormalized).unwrap();
    Element::from_terms(
        basis
            .monomials()
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> (k % 64) & 1 == 1)
            .map(|(_, m)| m.clone()),
    )
}

proptest! {
    #[test]
    fn projection_onto_normalized_chains(n in 1usize..=4, t in 0u32..=14, mask in any::<u64>()) {
        let f = omega();
        let c = random_element(f, n, t, mask);
        let p = f.normalize_chain(n, &c);
        prop_assert!(f.is_normalized(n, &p));
        prop_assert_eq!(f.normalize_chain(n, &p), p);
        let below = random_element(f, n - 1, t, mask.rotate_left(7));
        for i in 0..n {
            let degenerate = f.degeneracy(n - 1, i).eval(&below);
            prop_assert!(f.normalize_chain(n, &degenerate).is_zero());
        }
    }
}

#[test]
fn faces_fix_dx_on_level_one() {
    let f = omega();
    let (w1, w0) = (f.omega(1).unwrap(), f.omega(0).unwrap());
    let dx1 = w1.d(&w1.from_base(&w1.base().gen(0)));
    let dx0 = w0.d(&w0.from_base(&w0.base().gen(0)));
    assert_eq!(f.chain_basis(1, 1, Mode::Unnormalized).unwrap().len(), 1);
    assert_eq!(f.chain_basis(0, 1, Mode::Unnormalized).unwrap().len(), 1);
    for i in 0..=1 {
        assert_eq!(f.face(1, i).eval(&dx1), dx0);
    }
}

#[test]
fn first_face_kills_q_of_y() {
    let f = AppliedFunctor::new(AmbientFunctor::OmegaTilde, resolution()).unwrap();
    let level = f.level(1);
    let q = level.parse("q(y1)").unwrap();
    assert!(f.face(1, 0).eval(&q).is_zero());
    assert_eq!(f.face(1, 1).eval(&q), f.level(0).parse("0").unwrap());
}

#[test]
fn de_rham_classes_of_the_resolution() {
    let r = resolution();
    let f = DerivedFunctor::new(FunctorTag::OmegaBar, r).unwrap();
    for n in 1..=3usize {
        let w = f.applied().omega(n).unwrap();
        let g = gamma(w, 0, n).unwrap();
        let x = w.from_base(&w.base().gen(0));
        let dx = w.d(&x);
        let a = w.algebra();
        let classes = [g.clone(), a.mul(&x, &g), a.mul(&dx, &g), a.mul(&a.mul(&x, &dx), &g)];
        let base = 3 * n as u32;
        for (c, shift) in classes.iter().zip([0u32, 2, 1, 3]) {
            let group = f.homology(n, base + shift, Mode::Normalized).unwrap();
            assert_eq!(group.dim(), 1);
            let class = group.class_of_element(c).unwrap();
            assert!(!class.is_zero(), "level {n}, degree {}", base + shift);
            for rep in f.representatives(&group) {
                assert!(f.applied().is_normalized(n, &rep));
            }
        }
    }
}

#[test]
fn cohomology_sequence_splits() {
    let f = omega();
    for t in 0..=16 {
        let seq = ShortExactSequence::cohomology(f, t, 4, Mode::Normalized).unwrap();
        for m in 0..=2 {
            assert!(seq.connecting(m).unwrap().matrix().is_zero(), "degree {t}, level {m}");
        }
    }
}

#[test]
fn derived_tables_of_subquotients() {
    let w = Window::for_total_degree(2, 8).unwrap();
    let b = derived_dims(FunctorTag::B, 2, w, Mode::Normalized).unwrap();
    let h = derived_dims(FunctorTag::H, 2, w, Mode::Normalized).unwrap();
    let z = derived_dims(FunctorTag::Z, 2, w, Mode::Normalized).unwrap();
    assert_eq!(b.merge(&h).unwrap().entries().collect::<Vec<_>>(), z.entries().collect::<Vec<_>>());
    let again = DimTable::from_json(&z.to_json().unwrap()).unwrap();
    assert_eq!(again, z);
    let h0 = derived_dims(FunctorTag::H, 2, Window::for_total_degree(2, 0).unwrap(), Mode::Normalized).unwrap();
    assert_eq!(h0.entries().collect::<Vec<_>>(), vec![((0, 0), 1)]);
}

#[test]
fn levelwise_functors_only() {
    for tag in [FunctorTag::Ell, FunctorTag::OmegaTw] {
        assert!(DerivedFunctor::new(tag, resolution()).is_err());
    }
}
