use serde::{Deserialize, Serialize};

use super::{AlgebraBuilder, Element, GradedAlgebra, Monomial, SquareRule};
use crate::{Error, Result};

/// JSON description of an algebra:
/// `{"generators":[{"name":"x","degree":2,"lambda":"0","square":"free"}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub generators: Vec<GeneratorSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    pub name: String,
    pub degree: u32,
    /// Defaults to the generator itself in degree one and to `0` otherwise.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    /// `"free"` or the right-hand side of the square rewrite.
    #[serde(default = "free")]
    pub square: String,
}

fn free() -> String {
    "free".into()
}

impl AlgebraSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn build(&self) -> Result<GradedAlgebra> {
        let mut b = AlgebraBuilder::new();
        for g in &self.generators {
            validate_name(&g.name)?;
            b.generator(g.name.clone(), g.degree)?;
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.square != "free" {
                let rhs = parse_with(&g.square, |name| b.index_of(name), |f| b.monomial(f))?;
                b.set_square(i, rhs);
            }
            let lambda = match &g.lambda {
                Some(text) => parse_with(text, |name| b.index_of(name), |f| b.monomial(f))?,
                None if g.degree == 1 => b.gen(i),
                None => Element::zero(),
            };
            b.set_lambda(i, lambda);
        }
        b.build()
    }

    pub fn from_algebra(a: &GradedAlgebra) -> Self {
        let generators = a
            .generators()
            .iter()
            .map(|g| GeneratorSpec {
                name: g.name.clone(),
                degree: g.degree,
                lambda: g.lambda.as_ref().map(|l| a.format(l)),
                square: match &g.square {
                    SquareRule::Free => free(),
                    SquareRule::Rewrite(rhs) => a.format(rhs),
                },
            })
            .collect();
        AlgebraSpec { generators }
    }
}

fn validate_name(name: &str) -> Result<()> {
    let bad = name.is_empty()
        || name == "0"
        || name == "1"
        || name.chars().any(|c| c.is_whitespace() || matches!(c, '+' | '*' | '^'));
    if bad {
        return Err(Error::InvalidAlgebra(format!("invalid generator name `{name}`")));
    }
    Ok(())
}

/// Splits `s` at occurrences of `sep` outside parentheses.
fn split_top(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn parse_with(
    text: &str,
    lookup: impl Fn(&str) -> Option<usize>,
    make: impl Fn(&[(usize, u32)]) -> Monomial,
) -> Result<Element> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    if text == "0" {
        return Ok(Element::zero());
    }
    let mut terms = Vec::new();
    for term in split_top(text, '+') {
        let term = term.trim();
        if term.is_empty() {
            return Err(Error::Parse(format!("empty term in `{text}`")));
        }
        if term == "1" {
            terms.push(Monomial::one());
            continue;
        }
        let mut factors = Vec::new();
        for factor in split_top(term, '*') {
            let factor = factor.trim();
            let (name, exp) = match factor.rfind('^') {
                Some(k) if !factor[k..].contains(')') => {
                    let exp: u32 = factor[k + 1..]
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                    (factor[..k].trim(), exp)
                }
                _ => (factor, 1),
            };
            if name == "1" {
                continue;
            }
            let g = lookup(name).ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            factors.push((g, exp));
        }
        terms.push(make(&factors));
    }
    Ok(Element::from_terms(terms))
}

impl GradedAlgebra {
    /// Parses an element such as `x^2*dy1 + 1` and returns its normal form.
    pub fn parse(&self, text: &str) -> Result<Element> {
        let raw = parse_with(text, |name| self.index_of(name), |f| self.monomial(f))?;
        Ok(self.normalize_element(&raw))
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        m.factors()
            .iter()
            .map(|&(g, e)| {
                let name = &self.generator(g as usize).name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format(&self, e: &Element) -> String {
        if e.is_zero() {
            return "0".into();
        }
        e.terms()
            .iter()
            .map(|m| self.format_monomial(m))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        let text = r#"{"generators":[
            {"name":"x","degree":2,"lambda":"0","square":"free"},
            {"name":"s","degree":3,"square":"0"},
            {"name":"g","degree":1}
        ]}"#;
        let spec = AlgebraSpec::from_json(text).unwrap();
        let a = spec.build().unwrap();
        assert!(a.generator(1).is_rewrite());
        assert_eq!(a.generator(2).lambda, Some(a.gen(2)));
        let again = AlgebraSpec::from_json(&AlgebraSpec::from_algebra(&a).to_json().unwrap())
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn element_round_trip() {
        let a = GradedAlgebra::polynomial(&[("x", 2), ("dy1", 3)]).unwrap();
        let e = a.parse("x^2*dy1 + 1 + dy1*x^2 + x").unwrap();
        assert_eq!(a.format(&e), "1 + x");
        let f = a.parse("x^3*dy1").unwrap();
        assert_eq!(a.parse(&a.format(&f)).unwrap(), f);
        assert_eq!(a.format(&Element::zero()), "0");
        assert!(matches!(a.parse("z"), Err(Error::UnknownGenerator(_))));
        assert!(a.parse("x +").is_err());
    }

    #[test]
    fn parenthesized_names() {
        let a = GradedAlgebra::polynomial(&[("phi(x*y)", 8), ("q(x^2)", 7)]).unwrap();
        let e = a.parse("phi(x*y)^2*q(x^2)").unwrap();
        assert_eq!(e.terms()[0].factors(), &[(0, 2), (1, 1)]);
        assert_eq!(a.format(&e), "phi(x*y)^2*q(x^2)");
    }
}
