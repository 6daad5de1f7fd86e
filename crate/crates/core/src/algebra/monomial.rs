use std::cmp::Ordering;

/// A monomial as a sparse exponent map over generator indices.
///
/// The internal degree is cached; monomials are only created through a
/// [`GradedAlgebra`](super::GradedAlgebra), which knows generator degrees.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    degree: u32,
    factors: Vec<(u32, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            degree: 0,
            factors: Vec::new(),
        }
    }

    /// `factors` must be sorted by generator index with positive exponents.
    pub(crate) fn from_parts(degree: u32, factors: Vec<(u32, u32)>) -> Self {
        debug_assert!(factors.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(factors.iter().all(|&(_, e)| e > 0));
        Monomial { degree, factors }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// `(generator index, exponent)` pairs in increasing generator order.
    pub fn factors(&self) -> &[(u32, u32)] {
        &self.factors
    }

    pub fn exponent(&self, generator: usize) -> u32 {
        self.factors
            .binary_search_by_key(&(generator as u32), |&(g, _)| g)
            .map_or(0, |k| self.factors[k].1)
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.factors.iter().map(|&(g, _)| g as usize)
    }

    /// Exponentwise sum, without any rewriting.
    pub fn mul_raw(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (a, ea) = self.factors[i];
            let (b, eb) = other.factors[j];
            match a.cmp(&b) {
                Ordering::Less => {
                    factors.push((a, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push((b, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial {
            degree: self.degree + other.degree,
            factors,
        }
    }

    /// Removes `count` copies of `generator` of degree `gen_degree`.
    pub(crate) fn divide_generator(&self, generator: u32, gen_degree: u32, count: u32) -> Monomial {
        let mut factors = self.factors.clone();
        let k = factors
            .binary_search_by_key(&generator, |&(g, _)| g)
            .expect("generator not present");
        assert!(factors[k].1 >= count, "exponent too small");
        factors[k].1 -= count;
        if factors[k].1 == 0 {
            factors.remove(k);
        }
        Monomial {
            degree: self.degree - gen_degree * count,
            factors,
        }
    }
}

/// Graded lexicographic order: by degree, then by the dense exponent vector
/// with larger exponents of earlier generators first (`x^2 < x*y < y^2`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            let (mut i, mut j) = (0, 0);
            loop {
                match (self.factors.get(i), other.factors.get(j)) {
                    (None, None) => return Ordering::Equal,
                    (Some(_), None) => return Ordering::Less,
                    (None, Some(_)) => return Ordering::Greater,
                    (Some(&(a, ea)), Some(&(b, eb))) => match a.cmp(&b) {
                        Ordering::Less => return Ordering::Less,
                        Ordering::Greater => return Ordering::Greater,
                        Ordering::Equal => {
                            if ea != eb {
                                return eb.cmp(&ea);
                            }
                            i += 1;
                            j += 1;
                        }
                    },
                }
            }
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(deg: u32, f: &[(u32, u32)]) -> Monomial {
        Monomial::from_parts(deg, f.to_vec())
    }

    #[test]
    fn grlex_order() {
        let x2 = m(4, &[(0, 2)]);
        let xy = m(4, &[(0, 1), (1, 1)]);
        let y2 = m(4, &[(1, 2)]);
        let x = m(2, &[(0, 1)]);
        assert!(x < x2);
        assert!(x2 < xy);
        assert!(xy < y2);
    }

    #[test]
    fn raw_product_merges() {
        let a = m(3, &[(0, 1), (2, 1)]);
        let b = m(5, &[(1, 1), (2, 2)]);
        let c = a.mul_raw(&b);
        assert_eq!(c.factors(), &[(0, 1), (1, 1), (2, 3)]);
        assert_eq!(c.degree(), 8);
        assert_eq!(c.exponent(2), 3);
        assert_eq!(c.exponent(3), 0);
    }
}
