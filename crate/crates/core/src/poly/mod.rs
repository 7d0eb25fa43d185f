//! Canonical multilinear polynomials over the two-element field.
//!
//! A [`Poly`] is a set of monomials and a [`Monomial`] is a set of variable
//! names, so `g² = g` and `g + g = 0` hold by construction. There is no
//! subtraction; adding is its own inverse.

mod matrix;
mod parse;

pub use matrix::{op_matrix, ArityError, BitMatrix2, PolyMatrix2};
pub use parse::{parse_poly, PolyParseError};

use crate::assignment::Assignment;
use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul};

/// A product of distinct variables. The empty monomial is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeSet<String>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn var(name: impl Into<String>) -> Self {
        Monomial(BTreeSet::from([name.into()]))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    pub fn contains(&self, var: &str) -> bool {
        self.0.contains(var)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.union(&other.0).cloned().collect())
    }
}

impl<S: Into<String>> FromIterator<S> for Monomial {
    fn from_iter<I: IntoIterator<Item = S>>(iter: I) -> Self {
        Monomial(iter.into_iter().map(Into::into).collect())
    }
}

/// Higher degree first, then lexicographic on the sorted variable lists.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| self.0.iter().cmp(other.0.iter()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Raised by [`Poly::evaluate`] when the assignment misses a variable.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unbound variable {0:?}")]
pub struct UnboundVariable(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeSet<Monomial>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Poly { terms: BTreeSet::from([Monomial::one()]) }
    }

    pub fn constant(value: bool) -> Self {
        if value {
            Self::one()
        } else {
            Self::zero()
        }
    }

    pub fn var(name: impl Into<String>) -> Self {
        Poly { terms: BTreeSet::from([Monomial::var(name)]) }
    }

    /// Sums the given monomials; duplicates cancel in pairs.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(monomials: I) -> Self {
        let mut p = Poly::zero();
        for m in monomials {
            p.toggle(m);
        }
        p
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    /// Monomials in canonical order.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains(&Monomial::one())
    }

    /// `Some(b)` when the polynomial is the constant `b`.
    pub fn as_constant(&self) -> Option<bool> {
        if self.is_zero() {
            Some(false)
        } else if self.is_one() {
            Some(true)
        } else {
            None
        }
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<String> {
        self.terms.iter().flat_map(|m| m.0.iter().cloned()).collect()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        Poly { terms: self.terms.symmetric_difference(&other.terms).cloned().collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.toggle(a.times(b));
            }
        }
        out
    }

    /// `a + 1`.
    pub fn negate(&self) -> Poly {
        self.add(&Poly::one())
    }

    /// Simultaneous substitution; variables missing from `map` stay put.
    pub fn substitute(&self, map: &BTreeMap<String, Poly>) -> Poly {
        let mut out = Poly::zero();
        for m in &self.terms {
            let mut product = Poly::one();
            for v in &m.0 {
                let image = map.get(v).cloned().unwrap_or_else(|| Poly::var(v.clone()));
                product = product.mul(&image);
                if product.is_zero() {
                    break;
                }
            }
            out = out.add(&product);
        }
        out
    }

    /// Convenience form of [`Poly::substitute`] taking pairs.
    pub fn substitute_pairs<'a, I>(&self, pairs: I) -> Poly
    where
        I: IntoIterator<Item = (&'a str, Poly)>,
    {
        let map: BTreeMap<String, Poly> = pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        self.substitute(&map)
    }

    /// Replaces every variable `v` with `v + 1`.
    pub fn complement_inputs(&self) -> Poly {
        let map: BTreeMap<String, Poly> =
            self.variables().into_iter().map(|v| (v.clone(), Poly::var(v).negate())).collect();
        self.substitute(&map)
    }

    pub fn evaluate(&self, sigma: &Assignment) -> Result<bool, UnboundVariable> {
        let mut acc = false;
        for m in &self.terms {
            let mut term = true;
            for v in &m.0 {
                let bit = sigma.get(v).ok_or_else(|| UnboundVariable(v.clone()))?;
                term &= bit;
            }
            acc ^= term;
        }
        Ok(acc)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        Poly::add(self, rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        Poly::mul(self, rhs)
    }
}

/// A variable that prints without `*` separators: one letter plus digits.
pub(crate) fn is_short_var(v: &str) -> bool {
    let mut chars = v.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_digit())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let sep = if self.0.iter().all(|v| is_short_var(v)) { "" } else { "*" };
        let joined: Vec<&str> = self.vars().collect();
        f.write_str(&joined.join(sep))
    }
}

/// Fully reduced form, e.g. `pq+p+q+1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Poly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    fn assignments2() -> Vec<Assignment> {
        let vars = vec!["p".to_string(), "q".to_string()];
        crate::assignment::rows(&vars).collect()
    }

    fn agree_on_all(a: &Poly, b: &Poly) -> bool {
        assignments2().iter().all(|s| a.evaluate(s) == b.evaluate(s))
    }

    #[test]
    fn add_examples() {
        assert_eq!(&poly("p") + &poly("p"), Poly::zero());
        assert_eq!((&poly("p") + &Poly::one()).to_string(), "p+1");
        let sum = &poly("pq+p+1") + &poly("p");
        assert_eq!(sum, poly("pq+1"));
        assert!(agree_on_all(&sum, &poly("pq+1")));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&poly("p") * &poly("p"), poly("p"));
        let prod = &poly("p+1") * &poly("q+1");
        assert_eq!(prod.to_string(), "pq+p+q+1");
        assert!(agree_on_all(&prod, &poly("(p+1)(q+1)")));
        assert_eq!(poly("(p+1)*p*q"), Poly::zero());
    }

    #[test]
    fn negate_examples() {
        assert_eq!(poly("pq").negate().to_string(), "pq+1");
        assert_eq!(Poly::one().negate(), Poly::zero());
        let a = poly("pq+q");
        assert_eq!(a.negate().negate(), a);
    }

    #[test]
    fn substitute_examples() {
        let got = poly("pq+1").substitute_pairs([("q", poly("q+1"))]);
        assert_eq!(got.to_string(), "pq+p+1");
        assert_eq!(got, poly("p(q+1)+1"));

        let got = poly("p+q").substitute_pairs([("p", poly("p")), ("q", poly("p"))]);
        assert_eq!(got, Poly::zero());

        let got = poly("(p+1)(q+1)+1").substitute_pairs([("p", poly("p+1")), ("q", poly("q+1"))]);
        assert_eq!(got, poly("pq+1"));
    }

    #[test]
    fn substitution_is_simultaneous() {
        let swapped = poly("p(q+1)").substitute_pairs([("p", poly("q")), ("q", poly("p"))]);
        assert_eq!(swapped, poly("(p+1)q"));
    }

    #[test]
    fn evaluate_examples() {
        let s10 = Assignment::new().with("p", true).with("q", false);
        let s01 = Assignment::new().with("p", false).with("q", true);
        assert_eq!(poly("pq").evaluate(&s10), Ok(false));
        assert_eq!(poly("p(q+1)+1").evaluate(&s10), Ok(false));
        assert_eq!(poly("p(q+1)+1").evaluate(&s01), Ok(true));
        assert_eq!(poly("pr").evaluate(&s10), Err(UnboundVariable("r".into())));
        // A variable whose monomial vanishes still has to be bound.
        assert!(poly("r+1").evaluate(&Assignment::new()).is_err());
    }

    #[test]
    fn canonical_display_order() {
        assert_eq!(poly("1+q+p+qp").to_string(), "pq+p+q+1");
        assert_eq!(poly("r+pqr+pq").to_string(), "pqr+pq+r");
        assert_eq!(Poly::zero().to_string(), "0");
        let long = Poly::var("foo").mul(&Poly::var("bar"));
        assert_eq!(long.to_string(), "bar*foo");
        assert_eq!(poly("x1x2+x1").to_string(), "x1x2+x1");
    }

    #[test]
    fn complement_inputs_is_involution() {
        let a = poly("pq+p+r");
        assert_eq!(a.complement_inputs().complement_inputs(), a);
        assert_eq!(poly("(p+1)(q+1)+1").complement_inputs(), poly("pq+1"));
    }
}
