use std::sync::Arc;

use crate::algebra::{AlgebraHom, Element, GradedAlgebra};
use crate::{Error, Result};

/// Levels `0..=M` of a simplicial graded algebra with its faces and
/// degeneracies.
#[derive(Clone, Debug)]
pub struct SimplicialAlgebra {
    levels: Vec<Arc<GradedAlgebra>>,
    /// `faces[n][i] = d_i: level n -> n - 1`; `faces[0]` is empty.
    faces: Vec<Vec<AlgebraHom>>,
    /// `degeneracies[n][i] = s_i: level n -> n + 1` for `n < M`.
    degeneracies: Vec<Vec<AlgebraHom>>,
}

impl SimplicialAlgebra {
    pub fn new(
        levels: Vec<Arc<GradedAlgebra>>,
        faces: Vec<Vec<AlgebraHom>>,
        degeneracies: Vec<Vec<AlgebraHom>>,
    ) -> Result<Self> {
        let m = levels.len();
        if m == 0 || faces.len() != m || degeneracies.len() != m - 1 {
            return Err(Error::Invalid("inconsistent simplicial structure".into()));
        }
        for (n, d) in faces.iter().enumerate() {
            let expected = if n == 0 { 0 } else { n + 1 };
            if d.len() != expected {
                return Err(Error::Invalid(format!("level {n} needs {expected} faces")));
            }
        }
        for (n, s) in degeneracies.iter().enumerate() {
            if s.len() != n + 1 {
                return Err(Error::Invalid(format!("level {n} needs {} degeneracies", n + 1)));
            }
        }
        Ok(SimplicialAlgebra {
            levels,
            faces,
            degeneracies,
        })
    }

    /// The resolution `R_n = F2[x, y_1, ..., y_n]` of the exterior algebra on
    /// a class of degree `s`, with `|x| = s`, `|y_j| = 2s` and lambda zero.
    pub fn sphere_resolution(s: u32, max_level: usize) -> Result<Self> {
        if s < 2 {
            return Err(Error::Invalid("the sphere degree must be at least 2".into()));
        }
        let levels: Vec<Arc<GradedAlgebra>> = (0..=max_level)
            .map(|n| {
                let mut gens = vec![("x".to_string(), s)];
                gens.extend((1..=n).map(|j| (format!("y{j}"), 2 * s)));
                let refs: Vec<(&str, u32)> = gens.iter().map(|(a, d)| (a.as_str(), *d)).collect();
                GradedAlgebra::polynomial(&refs).map(Arc::new)
            })
            .collect::<Result<_>>()?;
        let mut faces = vec![Vec::new()];
        for n in 1..=max_level {
            let (src, dst) = (&levels[n], &levels[n - 1]);
            let mut row = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let mut images = vec![dst.gen(0)];
                for j in 1..=n {
                    images.push(if i == 0 && j == 1 {
                        dst.pow(&dst.gen(0), 2)
                    } else if i < j {
                        dst.gen(j - 1)
                    } else if j < n {
                        dst.gen(j)
                    } else {
                        Element::zero()
                    });
                }
                row.push(AlgebraHom::new(src.clone(), dst.clone(), images)?);
            }
            faces.push(row);
        }
        let mut degeneracies = Vec::new();
        for n in 0..max_level {
            let (src, dst) = (&levels[n], &levels[n + 1]);
            let mut row = Vec::with_capacity(n + 1);
            for i in 0..=n {
                let mut images = vec![dst.gen(0)];
                for j in 1..=n {
                    images.push(if j <= i { dst.gen(j) } else { dst.gen(j + 1) });
                }
                row.push(AlgebraHom::new(src.clone(), dst.clone(), images)?);
            }
            degeneracies.push(row);
        }
        SimplicialAlgebra::new(levels, faces, degeneracies)
    }

    /// The constant simplicial algebra on `a`.
    pub fn constant(a: Arc<GradedAlgebra>, max_level: usize) -> Result<Self> {
        let id = AlgebraHom::identity(a.clone());
        let levels = vec![a; max_level + 1];
        let faces = (0..=max_level)
            .map(|n| if n == 0 { Vec::new() } else { vec![id.clone(); n + 1] })
            .collect();
        let degeneracies = (0..max_level).map(|n| vec![id.clone(); n + 1]).collect();
        SimplicialAlgebra::new(levels, faces, degeneracies)
    }

    pub fn max_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn level(&self, n: usize) -> &Arc<GradedAlgebra> {
        &self.levels[n]
    }

    pub fn levels(&self) -> &[Arc<GradedAlgebra>] {
        &self.levels
    }

    pub fn face(&self, n: usize, i: usize) -> &AlgebraHom {
        &self.faces[n][i]
    }

    pub fn faces(&self, n: usize) -> &[AlgebraHom] {
        &self.faces[n]
    }

    pub fn degeneracy(&self, n: usize, i: usize) -> &AlgebraHom {
        &self.degeneracies[n][i]
    }

    pub fn degeneracies(&self, n: usize) -> &[AlgebraHom] {
        &self.degeneracies[n]
    }

    /// Checks every simplicial identity on generators; returns the first
    /// violation.
    pub fn check_identities(&self) -> Result<()> {
        check_identities(self.max_level(), |n, i| &self.faces[n][i], |n, i| &self.degeneracies[n][i])
    }
}

/// Simplicial identities for any family of face and degeneracy maps.
pub(crate) fn check_identities<'a>(
    max_level: usize,
    d: impl Fn(usize, usize) -> &'a AlgebraHom,
    s: impl Fn(usize, usize) -> &'a AlgebraHom,
) -> Result<()> {
    let fail = |what: String| Err(Error::Invalid(format!("simplicial identity fails: {what}")));
    let eq = |a: &AlgebraHom, b: &AlgebraHom| -> Result<bool> { Ok(a.same_images(b)) };
    // d_i d_j = d_{j-1} d_i for i < j, on level n
    for n in 2..=max_level {
        for j in 0..=n {
            for i in 0..j {
                let lhs = d(n - 1, i).compose(d(n, j))?;
                let rhs = d(n - 1, j - 1).compose(d(n, i))?;
                if !eq(&lhs, &rhs)? {
                    return fail(format!("d{i} d{j} on level {n}"));
                }
            }
        }
    }
    // s_i s_j = s_{j+1} s_i for i <= j, on level n
    for n in 0..max_level.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                let lhs = s(n + 1, i).compose(s(n, j))?;
                let rhs = s(n + 1, j + 1).compose(s(n, i))?;
                if !eq(&lhs, &rhs)? {
                    return fail(format!("s{i} s{j} on level {n}"));
                }
            }
        }
    }
    // mixed identities, s_j on level n then d_i on level n + 1
    for n in 0..max_level {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = d(n + 1, i).compose(s(n, j))?;
                let ok = if i < j {
                    eq(&lhs, &s(n - 1, j - 1).compose(d(n, i))?)?
                } else if i == j || i == j + 1 {
                    lhs.images().iter().enumerate().all(|(g, e)| *e == lhs.source().gen(g))
                } else {
                    eq(&lhs, &s(n - 1, j).compose(d(n, i - 1))?)?
                };
                if !ok {
                    return fail(format!("d{i} s{j} on level {n}"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_face_squares() {
        let r = SimplicialAlgebra::sphere_resolution(2, 2).unwrap();
        let d0 = r.face(1, 0);
        assert_eq!(r.level(0).format(&d0.eval(&r.level(1).parse("y1").unwrap())), "x^2");
        assert!(r.face(1, 1).image(1).is_zero());
        for n in 0..2 {
            for s in r.degeneracies(n) {
                assert_eq!(s.image(0), &r.level(n + 1).gen(0));
            }
        }
    }

    #[test]
    fn identities_hold() {
        for s in 2..=3 {
            SimplicialAlgebra::sphere_resolution(s, 5).unwrap().check_identities().unwrap();
        }
        let c = SimplicialAlgebra::constant(Arc::new(GradedAlgebra::polynomial(&[("x", 2)]).unwrap()), 3).unwrap();
        c.check_identities().unwrap();
    }

    #[test]
    fn rejects_degree_one() {
        assert!(SimplicialAlgebra::sphere_resolution(1, 2).is_err());
    }
}
