//! Exact integer power series and rational generating functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::simplicial::DimTable;
use crate::{Error, Result};

/// An integer polynomial in `t`, without trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::monomial(1, 0)
    }

    /// `c * t^k`.
    pub fn monomial(c: i64, k: u32) -> Self {
        let mut coeffs = vec![BigInt::zero(); k as usize + 1];
        coeffs[k as usize] = BigInt::from(c);
        Poly::from_coeffs(coeffs)
    }

    /// `sum c * t^k` over the given terms.
    pub fn from_terms(terms: &[(i64, u32)]) -> Self {
        terms
            .iter()
            .fold(Poly::zero(), |acc, &(c, k)| acc + Poly::monomial(c, k))
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for Poly {
    type Output = Poly;

    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match k {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

/// A quotient of integer polynomials, read as a power series in `t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalForm {
    num: Poly,
    den: Poly,
}

impl RationalForm {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Invalid("zero denominator".into()));
        }
        Ok(RationalForm { num, den })
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Power series coefficients `c_0..=c_n` by long division.
    pub fn expand(&self, n: u32) -> Result<TruncSeries> {
        if !self.den.coeff(0).is_one() {
            return Err(Error::Invalid(format!(
                "denominator {} does not have constant term 1",
                self.den
            )));
        }
        let mut out: Vec<BigInt> = Vec::with_capacity(n as usize + 1);
        for k in 0..=n as usize {
            let mut c = self.num.coeff(k);
            for j in 1..=k.min(self.den.coeffs.len().saturating_sub(1)) {
                c -= &self.den.coeffs[j] * &out[k - j];
            }
            out.push(c);
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn same_function(&self, other: &RationalForm) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &RationalForm) -> RationalForm {
        RationalForm {
            num: &(&self.num * &other.den) + &(&other.num * &self.den),
            den: &self.den * &other.den,
        }
    }
}

impl fmt::Display for RationalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Coefficients `c_0..=c_N` of a power series; everything beyond `N` is
/// unknown.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<BigInt>,
}

impl TruncSeries {
    pub fn zero(n: u32) -> Self {
        TruncSeries {
            coeffs: vec![BigInt::zero(); n as usize + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("a series needs at least one coefficient".into()));
        }
        Ok(TruncSeries { coeffs })
    }

    pub fn from_counts(counts: &[u64]) -> Result<Self> {
        TruncSeries::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The truncation degree `N`.
    pub fn precision(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: u32) -> Option<&BigInt> {
        self.coeffs.get(k as usize)
    }

    /// Drops the coefficients beyond `n`.
    pub fn truncate(&self, n: u32) -> Result<Self> {
        if n > self.precision() {
            return Err(Error::IncompleteWindow(format!(
                "series known through degree {} only",
                self.precision()
            )));
        }
        Ok(TruncSeries {
            coeffs: self.coeffs[..=n as usize].to_vec(),
        })
    }

    /// Sum, known through the smaller precision.
    pub fn add(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        TruncSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    /// Product, known through the smaller precision.
    pub fn mul(&self, other: &TruncSeries) -> TruncSeries {
        let n = self.coeffs.len().min(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| (0..=k).map(|j| &self.coeffs[j] * &other.coeffs[k - j]).sum())
            .collect();
        TruncSeries { coeffs }
    }

    /// First degree where the series differ, within the common precision.
    pub fn first_difference(&self, other: &TruncSeries) -> Option<u32> {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .position(|(a, b)| a != b)
            .map(|k| k as u32)
    }

    pub fn to_json(&self) -> String {
        let items: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        format!("[{}]", items.join(","))
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        f.write_str(&items.join(" "))
    }
}

/// Coefficient `k` is the total dimension in total degree `t - i = k`.
pub fn from_dim_table(table: &DimTable, n: u32) -> Result<TruncSeries> {
    if !table.complete_through(n) {
        return Err(Error::IncompleteWindow(format!(
            "the {} table is not complete through total degree {n}",
            table.functor()
        )));
    }
    let mut out = TruncSeries::zero(n);
    for ((i, t), dim) in table.entries() {
        let total = i64::from(t) - i as i64;
        if (0..=i64::from(n)).contains(&total) {
            out.coeffs[total as usize] += dim;
        }
    }
    Ok(out)
}

/// `P_B + (1 - t^2)^{-1} P_tilde`, from the two tables.
pub fn assemble_ell(b: &DimTable, tilde: &DimTable, n: u32) -> Result<TruncSeries> {
    let pb = from_dim_table(b, n)?;
    let pt = from_dim_table(tilde, n)?;
    let u = RationalForm::new(Poly::one(), Poly::from_terms(&[(1, 0), (-1, 2)]))?.expand(n)?;
    Ok(pb.add(&u.mul(&pt)))
}

/// The named generating functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    OmegaBar,
    OmegaTilde,
    B,
    Ell,
    FreeLoop,
    BorelCC,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 6] = [
        ClosedForm::OmegaBar,
        ClosedForm::OmegaTilde,
        ClosedForm::B,
        ClosedForm::Ell,
        ClosedForm::FreeLoop,
        ClosedForm::BorelCC,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::OmegaBar => "omegabar",
            ClosedForm::OmegaTilde => "omegatilde",
            ClosedForm::B => "b",
            ClosedForm::Ell => "ell",
            ClosedForm::FreeLoop => "freeloop",
            ClosedForm::BorelCC => "borelCC",
        }
    }

    /// The rational function for the sphere of dimension `s`.
    pub fn form(self, s: u32) -> Result<RationalForm> {
        if s < 2 {
            return Err(Error::Invalid("the sphere degree must be at least 2".into()));
        }
        let p = Poly::from_terms;
        // 1 - t^k
        let one_minus = |k: u32| p(&[(1, 0), (-1, k)]);
        match self {
            ClosedForm::OmegaBar => RationalForm::new(p(&[(1, 0), (1, s)]), one_minus(s - 1)),
            ClosedForm::OmegaTilde => RationalForm::new(p(&[(1, 0), (1, 2 * s)]), one_minus(2 * s - 1)),
            ClosedForm::B => RationalForm::new(
                p(&[(1, s - 1), (1, 2 * s - 2), (-1, 3 * s - 2)]),
                one_minus(2 * s - 1) * one_minus(2 * s - 2),
            ),
            ClosedForm::Ell => RationalForm::new(
                p(&[(1, 0), (1, s - 1), (-1, s + 1), (1, 2 * s - 1)]),
                one_minus(2) * one_minus(2 * s - 2),
            ),
            ClosedForm::FreeLoop => RationalForm::new(
                p(&[(1, 0), (1, s)]) * p(&[(1, 0), (1, s - 1)]),
                one_minus(2 * s - 2),
            ),
            ClosedForm::BorelCC => {
                let a = RationalForm::new(p(&[(1, s - 1)]), one_minus(s - 1))?;
                let b = RationalForm::new(p(&[(1, 2 * s - 1)]), one_minus(1) * one_minus(2 * s - 2))?;
                let c = RationalForm::new(Poly::one(), one_minus(2))?;
                Ok(a.add(&b).add(&c))
            }
        }
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown closed form `{s}`")))
    }
}

/// The closed form called `name` at the sphere of dimension `s`.
pub fn closed_form(name: &str, s: u32) -> Result<RationalForm> {
    name.parse::<ClosedForm>()?.form(s)
}
