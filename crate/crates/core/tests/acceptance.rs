//! End-to-end checks against the closed forms and explicit homology bases
//! for the exterior algebra on one class. Prints one line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use loopcohom::algebra::{Element, GradedAlgebra};
use loopcohom::functors::{
    cartier_phi, graded_dims, gr_filtration, omega_bar, omega_tilde, omega_tw, q_map, EllPresentation,
    EllVariant, FunctorTag, OmegaAlgebra,
};
use loopcohom::linalg::Subspace;
use loopcohom::series::{assemble_ell, from_dim_table, ClosedForm, TruncSeries};
use loopcohom::simplicial::{
    derived_dims, gamma, AmbientFunctor, AppliedFunctor, DerivedFunctor, Mode, ShortExactSequence,
    SimplicialAlgebra, Window,
};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

const N: u32 = 10;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn series_of(tag: FunctorTag, s: u32) -> Result<TruncSeries, String> {
    let w = Window::for_total_degree(s, N).map_err(err)?;
    let table = derived_dims(tag, s, w, Mode::Normalized).map_err(err)?;
    from_dim_table(&table, N).map_err(err)
}

fn expect_series(what: &str, got: &TruncSeries, form: ClosedForm, s: u32) -> Check {
    let want = form.form(s).map_err(err)?.expand(N).map_err(err)?;
    ensure(got == &want, || {
        format!("{what}, s={s}: computed [{got}], {form} gives [{want}]")
    })
}

fn criterion_1() -> Check {
    for s in [2, 3] {
        expect_series("omegabar", &series_of(FunctorTag::OmegaBar, s)?, ClosedForm::OmegaBar, s)?;
    }
    Ok(())
}

fn criterion_2() -> Check {
    for s in [2, 3] {
        expect_series("omegatilde", &series_of(FunctorTag::OmegaTilde, s)?, ClosedForm::OmegaTilde, s)?;
    }
    Ok(())
}

/// A factor of a listed basis element: `x^a dx^b`.
#[derive(Clone, Copy)]
struct Prefix {
    x: u32,
    dx: u32,
}

const ONE: Prefix = Prefix { x: 0, dx: 0 };
const DX: Prefix = Prefix { x: 0, dx: 1 };
const X2: Prefix = Prefix { x: 2, dx: 0 };
const XDX: Prefix = Prefix { x: 1, dx: 1 };
const X3DX: Prefix = Prefix { x: 3, dx: 1 };

/// `prefix * gamma_{i,j}`.
#[derive(Clone, Copy)]
struct Listed {
    prefix: Prefix,
    i: usize,
    j: usize,
}

impl Listed {
    fn degree(&self, s: u32) -> u32 {
        self.prefix.x * s + self.prefix.dx * (s - 1) + self.i as u32 * 2 * s + self.j as u32 * (2 * s - 1)
    }

    fn element(&self, omega: &OmegaAlgebra) -> Result<Element, String> {
        let w = omega.algebra();
        let mut factors = Vec::new();
        if self.prefix.x > 0 {
            factors.push((0, self.prefix.x));
        }
        if self.prefix.dx > 0 {
            factors.push((omega.d_generator(0), 1));
        }
        let prefix = Element::from_monomial(w.monomial(&factors));
        Ok(w.mul(&prefix, &gamma(omega, self.i, self.j).map_err(err)?))
    }
}

/// The basis of `H_m(Lambda; B)` listed for the exterior algebra.
fn listed_b(m: usize) -> Vec<Listed> {
    let four = [ONE, X2, XDX, X3DX];
    let n = m / 2;
    let mut out = Vec::new();
    if m.is_multiple_of(2) {
        out.push(Listed { prefix: DX, i: 0, j: m });
        for i in 0..n {
            out.extend(four.iter().map(|&prefix| Listed { prefix, i: 2 * i, j: m }));
        }
    } else {
        out.extend([ONE, DX, XDX].iter().map(|&prefix| Listed { prefix, i: 0, j: m }));
        for i in 0..n {
            out.extend(four.iter().map(|&prefix| Listed { prefix, i: 2 * i + 1, j: m }));
        }
    }
    out
}

/// The basis of `H_m(Lambda; H)`.
fn listed_h(m: usize) -> Vec<Listed> {
    [ONE, X2, XDX, X3DX]
        .iter()
        .map(|&prefix| Listed { prefix, i: m, j: m })
        .collect()
}

fn degree_counts(listed: &[Listed], s: u32) -> BTreeMap<u32, usize> {
    let mut out = BTreeMap::new();
    for l in listed {
        *out.entry(l.degree(s)).or_insert(0) += 1;
    }
    out
}

/// Levels `0..=5`, internal degrees up to 38: holds every listed class of
/// `H_m(Lambda; B)` for `m <= 5` with `s = 2`.
fn basis_window() -> Window {
    Window::new(5, 38)
}

/// Checks that the listed elements are cycles whose classes are linearly
/// independent in each degree.
fn check_listed(f: &DerivedFunctor, listed: &[Listed], m: usize, s: u32, window: Window) -> Check {
    let mut by_degree: BTreeMap<u32, Vec<Listed>> = BTreeMap::new();
    for l in listed {
        by_degree.entry(l.degree(s)).or_default().push(*l);
    }
    for (t, items) in by_degree {
        if t > window.max_internal {
            continue;
        }
        let group = f.homology(m, t, Mode::Normalized).map_err(err)?;
        let omega = f.applied().omega(m).ok_or("missing de Rham level")?;
        let classes = items
            .iter()
            .map(|l| group.class_of_element(&l.element(omega)?).map_err(|e| format!("level {m}, degree {t}: {e}")))
            .collect::<Result<Vec<_>, _>>()?;
        let span = Subspace::from_vectors(group.dim(), classes);
        ensure(span.dim() == items.len(), || {
            format!("level {m}, degree {t}: listed classes are dependent")
        })?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    let s = 2;
    let window = basis_window();
    let table = derived_dims(FunctorTag::B, s, window, Mode::Normalized).map_err(err)?;
    let resolution = SimplicialAlgebra::sphere_resolution(s, window.max_level + 1).map_err(err)?;
    let f = DerivedFunctor::new(FunctorTag::B, &resolution).map_err(err)?;
    for m in 0..=5 {
        let listed = listed_b(m);
        ensure(listed.len() == 2 * m + 1, || format!("level {m}: list has {} entries", listed.len()))?;
        ensure(table.level_total(m) == listed.len(), || {
            format!("level {m}: {} classes computed, {} listed", table.level_total(m), listed.len())
        })?;
        let counts = degree_counts(&listed, s);
        for t in 0..=window.max_internal {
            let want = counts.get(&t).copied().unwrap_or(0);
            ensure(table.get(m, t) == want, || {
                format!("level {m}, degree {t}: {} computed, {want} listed", table.get(m, t))
            })?;
        }
        check_listed(&f, &listed, m, s, window)?;
    }
    expect_series("b", &series_of(FunctorTag::B, s)?, ClosedForm::B, s)
}

fn criterion_4() -> Check {
    let s = 2;
    let window = basis_window();
    let z = derived_dims(FunctorTag::Z, s, window, Mode::Normalized).map_err(err)?;
    let b = derived_dims(FunctorTag::B, s, window, Mode::Normalized).map_err(err)?;
    let h = derived_dims(FunctorTag::H, s, window, Mode::Normalized).map_err(err)?;
    for m in 0..=window.max_level {
        let counts = degree_counts(&listed_h(m), s);
        for t in 0..=window.max_internal {
            ensure(z.get(m, t) == b.get(m, t) + h.get(m, t), || {
                format!("level {m}, degree {t}: z={} b={} h={}", z.get(m, t), b.get(m, t), h.get(m, t))
            })?;
            let want = counts.get(&t).copied().unwrap_or(0);
            ensure(h.get(m, t) == want, || {
                format!("level {m}, degree {t}: h={}, {want} listed", h.get(m, t))
            })?;
        }
        if listed_h(m).iter().all(|l| l.degree(s) <= window.max_internal) {
            ensure(h.level_total(m) == 4, || format!("level {m}: h has {} classes", h.level_total(m)))?;
        }
    }
    let resolution = SimplicialAlgebra::sphere_resolution(s, window.max_level + 1).map_err(err)?;
    let f = DerivedFunctor::new(FunctorTag::H, &resolution).map_err(err)?;
    for m in 0..=4 {
        check_listed(&f, &listed_h(m), m, s, window)?;
    }
    Ok(())
}

/// Checks `b(source) = target` under the connecting map of
/// `Z -> Omega -> B`, as classes in canonical coordinates.
fn check_connecting(f: &AppliedFunctor, source: (Prefix, usize, usize), target: (Prefix, usize, usize)) -> Check {
    let s = 2;
    let src = Listed { prefix: source.0, i: source.1, j: source.2 };
    let dst = Listed { prefix: target.0, i: target.1, j: target.2 };
    let m = dst.j;
    let t = src.degree(s);
    ensure(dst.degree(s) == t + 1, || "degrees do not match".into())?;
    let seq = ShortExactSequence::de_rham(f, t, m + 2, Mode::Normalized).map_err(err)?;
    let map = seq.connecting(m).map_err(err)?;
    let omega_src = f.omega(src.j).ok_or("missing level")?;
    let omega_dst = f.omega(dst.j).ok_or("missing level")?;
    let image = map.apply(&src.element(omega_src)?).map_err(err)?;
    let expected = map.target().class_of_element(&dst.element(omega_dst)?).map_err(err)?;
    ensure(!expected.is_zero() && image == expected, || {
        format!(
            "b(gamma_{{{},{}}}) has class {image:?}, expected {expected:?}",
            src.i, src.j
        )
    })
}

fn criterion_5() -> Check {
    let resolution = SimplicialAlgebra::sphere_resolution(2, 7).map_err(err)?;
    let f = AppliedFunctor::new(AmbientFunctor::OmegaBar, &resolution).map_err(err)?;
    // b(gamma_{0,2n+1}) = x^2 gamma_{0,2n}
    for n in 0..=2 {
        check_connecting(&f, (ONE, 0, 2 * n + 1), (X2, 0, 2 * n))?;
    }
    // b(gamma_{2i,2n+2}) = gamma_{2i+1,2n+1}
    for n in 0..=2 {
        for i in 0..=n {
            check_connecting(&f, (ONE, 2 * i, 2 * n + 2), (ONE, 2 * i + 1, 2 * n + 1))?;
        }
    }
    Ok(())
}

fn criterion_6() -> Check {
    for s in [2, 3] {
        let w = Window::for_total_degree(s, N).map_err(err)?;
        let b = derived_dims(FunctorTag::B, s, w, Mode::Normalized).map_err(err)?;
        let tilde = derived_dims(FunctorTag::OmegaTilde, s, w, Mode::Normalized).map_err(err)?;
        let ell = assemble_ell(&b, &tilde, N).map_err(err)?;
        expect_series("assembled ell", &ell, ClosedForm::Ell, s)?;
        expect_series("assembled ell", &ell, ClosedForm::BorelCC, s)?;
        expect_series("omegabar", &series_of(FunctorTag::OmegaBar, s)?, ClosedForm::FreeLoop, s)?;
    }
    Ok(())
}

fn polynomial_examples() -> Result<Vec<Arc<GradedAlgebra>>, String> {
    [vec![("x", 2)], vec![("x", 2), ("y", 2)]]
        .iter()
        .map(|g| GradedAlgebra::polynomial(g).map(Arc::new).map_err(err))
        .collect()
}

fn criterion_7() -> Check {
    for a in polynomial_examples()? {
        let ell = EllPresentation::new(a.clone(), N, EllVariant::Ell).map_err(err)?.dims();
        let omega = omega_bar(a.clone()).map_err(err)?;
        let tilde = graded_dims(omega_tilde(a.clone()).map_err(err)?.algebra(), N);
        for t in 0..=N {
            let predicted = omega.cycles(t).dim() + (1..=t / 2).map(|j| tilde[(t - 2 * j) as usize]).sum::<usize>();
            ensure(ell[t as usize] == predicted, || {
                format!("{} generators, degree {t}: ell {} vs {predicted}", a.num_generators(), ell[t as usize])
            })?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let a = Arc::new(GradedAlgebra::polynomial(&[("x", 2)]).map_err(err)?);
    let tilde = graded_dims(omega_tilde(a.clone()).map_err(err)?.algebra(), N);
    let presented = EllPresentation::new(a.clone(), N, EllVariant::OmegaTilde).map_err(err)?.dims();
    ensure(tilde == presented, || format!("tilde {tilde:?} vs presented {presented:?}"))?;
    let gr = gr_filtration(&omega_tw(a).map_err(err)?, N);
    for d in 0..=N {
        for k in 0..=N {
            let got = gr.get(&(k, d)).copied().unwrap_or(0);
            let want = if k <= d { tilde[(d - k) as usize] } else { 0 };
            ensure(got == want, || format!("Gr_{k} in degree {d}: {got} vs {want}"))?;
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    // simplicial identities
    for s in [2, 3] {
        let r = SimplicialAlgebra::sphere_resolution(s, 8).map_err(err)?;
        r.check_identities().map_err(err)?;
        for kind in [AmbientFunctor::OmegaBar, AmbientFunctor::OmegaTilde] {
            let r = SimplicialAlgebra::sphere_resolution(s, 5).map_err(err)?;
            AppliedFunctor::new(kind, &r).map_err(err)?.check_identities().map_err(err)?;
        }
    }
    // boundary squares to zero; modes agree
    let tags = [FunctorTag::OmegaBar, FunctorTag::Z, FunctorTag::B, FunctorTag::H, FunctorTag::OmegaTilde];
    for s in [2, 3] {
        let r = SimplicialAlgebra::sphere_resolution(s, 5).map_err(err)?;
        for tag in tags {
            let f = DerivedFunctor::new(tag, &r).map_err(err)?;
            for mode in [Mode::Normalized, Mode::Moore, Mode::Unnormalized] {
                for t in 0..=14 {
                    f.complex(t, 4, mode)
                        .and_then(|c| c.validate())
                        .map_err(|e| format!("{tag}, s={s}, degree {t}, {}: {e}", mode.name()))?;
                }
            }
        }
        for tag in tags {
            let w = Window::for_total_degree(s, 8).map_err(err)?;
            let normalized = derived_dims(tag, s, w, Mode::Normalized).map_err(err)?;
            for mode in [Mode::Moore, Mode::Unnormalized] {
                let other = derived_dims(tag, s, w, mode).map_err(err)?;
                ensure(normalized == other, || format!("{tag}, s={s}: {} differs", mode.name()))?;
            }
        }
    }
    // d^2 = 0 in de Rham algebras
    let mut algebras = polynomial_examples()?;
    algebras.push(Arc::new(GradedAlgebra::exterior("x", 2).map_err(err)?));
    algebras.push(Arc::new(GradedAlgebra::exterior("x", 3).map_err(err)?));
    let r = SimplicialAlgebra::sphere_resolution(2, 3).map_err(err)?;
    algebras.extend(r.levels().iter().cloned());
    for a in &algebras {
        let omega = omega_bar(a.clone()).map_err(err)?;
        for t in 0..=12 {
            let basis = loopcohom::algebra::Basis::of_degree(omega.algebra(), t);
            for m in basis.monomials() {
                let dd = omega.d(&omega.d_monomial(m));
                ensure(dd.is_zero(), || format!("d^2 does not vanish in degree {t}"))?;
            }
        }
    }
    // H_0 identities
    for s in [2, 3] {
        let lambda = Arc::new(GradedAlgebra::exterior("x", s).map_err(err)?);
        let r = SimplicialAlgebra::sphere_resolution(s, 2).map_err(err)?;
        let constant = SimplicialAlgebra::constant(lambda.clone(), 3).map_err(err)?;
        let omega = omega_bar(lambda.clone()).map_err(err)?;
        let direct = graded_dims(omega.algebra(), 12);
        let l = EllPresentation::new(lambda.clone(), 12, EllVariant::CalL).map_err(err)?.dims();
        let tilde = EllPresentation::new(lambda.clone(), 12, EllVariant::OmegaTilde).map_err(err)?.dims();
        let pi0 = DerivedFunctor::underlying(&r).map_err(err)?;
        let ob = DerivedFunctor::new(FunctorTag::OmegaBar, &r).map_err(err)?;
        let ot = DerivedFunctor::new(FunctorTag::OmegaTilde, &r).map_err(err)?;
        let oz = DerivedFunctor::new(FunctorTag::Z, &r).map_err(err)?;
        let cb = DerivedFunctor::new(FunctorTag::OmegaBar, &constant).map_err(err)?;
        for t in 0..=12u32 {
            let h0 = |f: &DerivedFunctor| f.homology(0, t, Mode::Normalized).map(|g| g.dim()).map_err(err);
            let base = usize::from(t == 0 || t == s);
            ensure(h0(&pi0)? == base, || format!("pi_0 of the resolution in degree {t}"))?;
            ensure(h0(&ob)? == direct[t as usize], || format!("H_0(omegabar), s={s}, degree {t}"))?;
            ensure(h0(&cb)? == direct[t as usize], || format!("constant H_0(omegabar), degree {t}"))?;
            ensure(h0(&oz)? == l[t as usize], || format!("H_0(z) vs L, s={s}, degree {t}"))?;
            ensure(h0(&ot)? == tilde[t as usize], || format!("H_0(omegatilde), s={s}, degree {t}"))?;
            for level in 1..=2 {
                let g = cb.homology(level, t, Mode::Unnormalized).map_err(err)?;
                ensure(g.dim() == 0, || format!("constant complex has level {level} homology"))?;
            }
        }
    }
    // comparison maps
    for a in polynomial_examples()? {
        for report in [q_map(a.clone(), 8).map_err(err)?, cartier_phi(a.clone(), 8).map_err(err)?] {
            ensure(report.is_bijective(), || format!("{} is not bijective", report.map))?;
        }
    }
    Ok(())
}

fn criterion_10() -> Check {
    for s in [2, 3, 4] {
        let ell = ClosedForm::Ell.form(s).map_err(err)?;
        let borel = ClosedForm::BorelCC.form(s).map_err(err)?;
        ensure(ell.same_function(&borel), || format!("s={s}: {ell} vs {borel}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("omegabar series", criterion_1),
        ("omegatilde series", criterion_2),
        ("b bases and series", criterion_3),
        ("split exactness", criterion_4),
        ("connecting maps", criterion_5),
        ("collapse for spheres", criterion_6),
        ("filtration of ell", criterion_7),
        ("twisted de Rham grading", criterion_8),
        ("property suites", criterion_9),
        ("closed-form identity", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match run() {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({:.2?})", k + 1, start.elapsed()),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {e}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
