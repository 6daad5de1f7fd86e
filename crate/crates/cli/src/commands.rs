use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use loopcohom::algebra::{AlgebraSpec, Basis, GradedAlgebra};
use loopcohom::functors::{
    graded_dims, omega_bar, omega_tilde, omega_tw, EllPresentation, EllVariant, FunctorTag,
};
use loopcohom::series::{assemble_ell, closed_form, from_dim_table, ClosedForm, TruncSeries};
use loopcohom::simplicial::{derived_dims, DimTable, Mode, SimplicialAlgebra, Window};
use serde_json::json;

use crate::{DumpArgs, DumpWhat, EllArgs, Format, HomologyArgs, ModeArg, OutputArgs, SeriesArgs, SphereArgs};

pub enum Outcome {
    Pass,
    Mismatch,
}

fn emit(output: &OutputArgs, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn mode(m: ModeArg) -> Mode {
    match m {
        ModeArg::Normalized => Mode::Normalized,
        ModeArg::Moore => Mode::Moore,
        ModeArg::Unnormalized => Mode::Unnormalized,
    }
}

fn table(tag: FunctorTag, sphere: SphereArgs, m: Mode) -> Result<DimTable> {
    let window = Window::for_total_degree(sphere.s, sphere.n)?;
    derived_dims(tag, sphere.s, window, m).with_context(|| format!("computing the {tag} table"))
}

fn load_algebra(path: Option<&Path>) -> Result<Arc<GradedAlgebra>> {
    let a = match path {
        Some(p) => {
            let text = fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
            AlgebraSpec::from_json(&text)?.build()?
        }
        None => GradedAlgebra::polynomial(&[("x", 2)])?,
    };
    Ok(Arc::new(a))
}

pub fn homology(args: &HomologyArgs) -> Result<Outcome> {
    let tag: FunctorTag = args.functor.parse()?;
    let t = table(tag, args.sphere, mode(args.mode))?;
    let text = match args.output.format {
        Format::Tsv => t.to_tsv(),
        Format::Json => t.to_json()? + "\n",
    };
    emit(&args.output, &text)?;
    Ok(Outcome::Pass)
}

/// One comparison of a computed series with a closed form.
fn compare(out: &mut String, label: &str, got: &TruncSeries, form: ClosedForm, s: u32) -> Result<bool> {
    let want = form.form(s)?.expand(got.precision())?;
    let first = got.first_difference(&want);
    let verdict = match first {
        None => "PASS".to_string(),
        Some(k) => format!("FAIL at degree {k}"),
    };
    writeln!(out, "{label} vs {form}: {verdict}")?;
    writeln!(out, "  closed form  {}", form.form(s)?)?;
    writeln!(out, "  degree\tcomputed\texpected")?;
    for (k, (a, b)) in got.coeffs().iter().zip(want.coeffs()).enumerate() {
        let mark = if a == b { "" } else { "\t<-" };
        writeln!(out, "  {k}\t{a}\t{b}{mark}")?;
    }
    Ok(first.is_none())
}

pub fn verify_collapse(sphere: SphereArgs) -> Result<Outcome> {
    let (s, n) = (sphere.s, sphere.n);
    let omegabar = table(FunctorTag::OmegaBar, sphere, Mode::Normalized)?;
    let b = table(FunctorTag::B, sphere, Mode::Normalized)?;
    let tilde = table(FunctorTag::OmegaTilde, sphere, Mode::Normalized)?;
    let ell = assemble_ell(&b, &tilde, n)?;
    let free = from_dim_table(&omegabar, n)?;
    let mut out = format!("verify-collapse s={s} N={n}\n");
    let mut ok = true;
    ok &= compare(&mut out, "assembled ell", &ell, ClosedForm::Ell, s)?;
    ok &= compare(&mut out, "assembled ell", &ell, ClosedForm::BorelCC, s)?;
    ok &= compare(&mut out, "omegabar", &free, ClosedForm::FreeLoop, s)?;
    writeln!(out, "{}", if ok { "PASS" } else { "FAIL" })?;
    print!("{out}");
    Ok(if ok { Outcome::Pass } else { Outcome::Mismatch })
}

pub fn ell_dims(args: &EllArgs) -> Result<Outcome> {
    let a = load_algebra(args.algebra.as_deref())?;
    if !a.is_polynomial() {
        bail!("ell-dims needs a polynomial algebra; the spec has square rewrites");
    }
    let n = args.n;
    let ell = EllPresentation::new(a.clone(), n, EllVariant::Ell)?.dims();
    let omega = omega_bar(a.clone())?;
    let tilde = graded_dims(omega_tilde(a.clone())?.algebra(), n);
    let predicted: Vec<usize> = (0..=n)
        .map(|t| omega.cycles(t).dim() + (1..=t / 2).map(|j| tilde[(t - 2 * j) as usize]).sum::<usize>())
        .collect();
    let ok = ell == predicted;
    let text = match args.output.format {
        Format::Tsv => {
            let mut s = String::from("degree\tell\tpredicted\n");
            for t in 0..=n as usize {
                let mark = if ell[t] == predicted[t] { "" } else { "\tMISMATCH" };
                writeln!(s, "{t}\t{}\t{}{mark}", ell[t], predicted[t])?;
            }
            s
        }
        Format::Json => {
            serde_json::to_string_pretty(&json!({ "ell": ell, "predicted": predicted, "match": ok }))? + "\n"
        }
    };
    emit(&args.output, &text)?;
    Ok(if ok { Outcome::Pass } else { Outcome::Mismatch })
}

pub fn series(args: &SeriesArgs) -> Result<Outcome> {
    let SphereArgs { s, n } = args.sphere;
    let (label, series) = match (&args.name, &args.functor) {
        (Some(name), _) => {
            let form = closed_form(name, s)?;
            (form.to_string(), form.expand(n)?)
        }
        (None, Some(functor)) => {
            let tag: FunctorTag = functor.parse()?;
            let t = table(tag, args.sphere, Mode::Normalized)?;
            (format!("{tag} table"), from_dim_table(&t, n)?)
        }
        (None, None) => bail!("give either --name or --functor"),
    };
    match args.format {
        Format::Tsv => println!("{label}\n{series}"),
        Format::Json => println!("{}", json!({ "source": label, "coefficients": serde_json::from_str::<serde_json::Value>(&series.to_json())? })),
    }
    Ok(Outcome::Pass)
}

fn line(out: &mut String, t: u32, items: &[String], sep: &str) -> Result<()> {
    if items.is_empty() {
        writeln!(out, "{t}\t0")?;
    } else {
        writeln!(out, "{t}\t{}\t{}", items.len(), items.join(sep))?;
    }
    Ok(())
}

pub fn dump(args: &DumpArgs) -> Result<Outcome> {
    let mut out = String::new();
    match &args.what {
        DumpWhat::Resolution { s, level } => {
            let r = SimplicialAlgebra::sphere_resolution(*s, *level)?;
            r.check_identities()?;
            for n in 0..=*level {
                let a = r.level(n);
                let gens: Vec<String> = a.generators().iter().map(|g| format!("{}:{}", g.name, g.degree)).collect();
                writeln!(out, "level {n}: {}", gens.join(" "))?;
                let maps = r.faces(n).iter().map(|f| ('d', f));
                let degs = if n < *level { r.degeneracies(n) } else { &[] };
                for (i, (kind, f)) in maps.chain(degs.iter().map(|f| ('s', f))).enumerate() {
                    let index = if kind == 'd' { i } else { i - r.faces(n).len() };
                    let images: Vec<String> = a
                        .generators()
                        .iter()
                        .zip(f.images())
                        .map(|(g, e)| format!("{} -> {}", g.name, f.target().format(e)))
                        .collect();
                    writeln!(out, "  {kind}{index}: {}", images.join(", "))?;
                }
            }
        }
        DumpWhat::Functor { functor, algebra, n } => {
            let a = load_algebra(algebra.as_deref())?;
            let target = match functor.as_str() {
                "omegabar" => omega_bar(a)?.algebra().clone(),
                "omegatilde" => omega_tilde(a)?.algebra().clone(),
                "omegatw" => omega_tw(a)?.algebra().clone(),
                "ell" => {
                    let dims = EllPresentation::new(a, *n, EllVariant::Ell)?.dims();
                    for (t, d) in dims.iter().enumerate() {
                        writeln!(out, "{t}\t{d}")?;
                    }
                    print!("{out}");
                    return Ok(Outcome::Pass);
                }
                "z" | "b" | "h" => {
                    let omega = omega_bar(a)?;
                    for t in 0..=*n {
                        let basis = Basis::of_degree(omega.algebra(), t);
                        let space = match functor.as_str() {
                            "z" => omega.cycles(t).basis().to_vec(),
                            "b" => omega.boundaries(t).basis().to_vec(),
                            _ => omega.cohomology(t).representatives.iter().map(|e| basis.vector(e)).collect::<Result<_, _>>()?,
                        };
                        let items: Vec<String> = space.iter().map(|v| omega.algebra().format(&basis.element(v))).collect();
                        line(&mut out, t, &items, "; ")?;
                    }
                    print!("{out}");
                    return Ok(Outcome::Pass);
                }
                other => bail!("unknown functor `{other}`"),
            };
            for t in 0..=*n {
                let basis = target.basis_of_degree(t);
                let items: Vec<String> = basis.iter().map(|m| target.format_monomial(m)).collect();
                line(&mut out, t, &items, " ")?;
            }
        }
    }
    print!("{out}");
    Ok(Outcome::Pass)
}
