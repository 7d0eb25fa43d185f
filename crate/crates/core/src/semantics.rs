//! Classical two-valued semantics, used as the independent oracle, and the
//! correspondence between polynomials and truth vectors.

use crate::assignment::{self, Assignment};
use crate::formula::Formula;
use crate::poly::{Monomial, Poly, UnboundVariable};
use std::fmt;

/// Raised when a formula is evaluated without a value for one of its letters.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unbound letter {0:?}")]
pub struct UnboundLetter(pub String);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VectorError {
    #[error("truth vectors differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("a vector over {vars} variables needs {expected} bits, got {got}")]
    WrongLength { vars: usize, expected: usize, got: usize },
    #[error("invalid bit {0:?} (expected 0 or 1)")]
    InvalidBit(char),
}

/// Truth values over `vars`, one per row of the canonical order (first
/// variable most significant, 1 before 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthVector {
    vars: Vec<String>,
    bits: Vec<bool>,
}

impl TruthVector {
    pub fn new(vars: Vec<String>, bits: Vec<bool>) -> Result<Self, VectorError> {
        let expected = 1usize << vars.len();
        if bits.len() != expected {
            return Err(VectorError::WrongLength { vars: vars.len(), expected, got: bits.len() });
        }
        Ok(TruthVector { vars, bits })
    }

    /// Parses a bit string such as `"1011"`.
    pub fn from_bit_str(vars: Vec<String>, s: &str) -> Result<Self, VectorError> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(VectorError::InvalidBit(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars, bits)
    }

    /// Over `(p, q)` from a packed number string (bit 3 is row (1,1)).
    pub fn binary(bits: u8) -> Self {
        TruthVector { vars: vec!["p".into(), "q".into()], bits: (0..4).map(|i| (bits >> (3 - i)) & 1 == 1).collect() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Packed form for vectors of at most 8 rows; the first row is the most
    /// significant bit.
    pub fn packed(&self) -> u8 {
        assert!(self.bits.len() <= 8, "packed() needs at most 8 rows");
        self.bits.iter().fold(0u8, |acc, &b| acc << 1 | u8::from(b))
    }

    pub fn is_all_ones(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn is_all_zeros(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    fn zip_with(&self, other: &TruthVector, f: impl Fn(bool, bool) -> bool) -> Result<TruthVector, VectorError> {
        if self.len() != other.len() {
            return Err(VectorError::LengthMismatch(self.len(), other.len()));
        }
        let bits = self.bits.iter().zip(&other.bits).map(|(&a, &b)| f(a, b)).collect();
        Ok(TruthVector { vars: self.vars.clone(), bits })
    }

    /// Componentwise XOR.
    pub fn bitwise_add(&self, other: &TruthVector) -> Result<TruthVector, VectorError> {
        self.zip_with(other, |a, b| a ^ b)
    }

    /// Componentwise AND.
    pub fn bitwise_mul(&self, other: &TruthVector) -> Result<TruthVector, VectorError> {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn complement(&self) -> TruthVector {
        TruthVector { vars: self.vars.clone(), bits: self.bits.iter().map(|b| !b).collect() }
    }

    /// Row reversal, which is the same as complementing every input.
    pub fn mirror(&self) -> TruthVector {
        TruthVector { vars: self.vars.clone(), bits: self.bits.iter().rev().copied().collect() }
    }
}

impl fmt::Display for TruthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub fn eval_formula(f: &Formula, sigma: &Assignment) -> Result<bool, UnboundLetter> {
    Ok(match f {
        Formula::Atom(name) => sigma.get(name).ok_or_else(|| UnboundLetter(name.clone()))?,
        Formula::Const(b) => *b,
        Formula::Unary(op, c) => op.eval(eval_formula(c, sigma)?),
        Formula::Binary(op, l, r) => op.eval(eval_formula(l, sigma)?, eval_formula(r, sigma)?),
    })
}

/// Truth vector over the formula's letters in first-appearance order.
pub fn truth_vector(f: &Formula) -> TruthVector {
    truth_vector_over(f, &f.letters()).expect("letters() covers the formula")
}

/// Truth vector over an explicit variable order.
pub fn truth_vector_over(f: &Formula, vars: &[String]) -> Result<TruthVector, UnboundLetter> {
    let bits = assignment::rows(vars).map(|s| eval_formula(f, &s)).collect::<Result<Vec<_>, _>>()?;
    Ok(TruthVector { vars: vars.to_vec(), bits })
}

pub fn poly_to_vector(a: &Poly, vars: &[String]) -> Result<TruthVector, UnboundVariable> {
    let bits = assignment::rows(vars).map(|s| a.evaluate(&s)).collect::<Result<Vec<_>, _>>()?;
    Ok(TruthVector { vars: vars.to_vec(), bits })
}

/// The unique multilinear polynomial with the given truth vector, by the
/// subset Möbius transform.
pub fn vector_to_poly(v: &TruthVector) -> Poly {
    let n = v.vars.len();
    let size = v.bits.len();
    // Index by mask: bit (n-1-j) set iff variable j is 1. Row 0 is all ones,
    // so mask = (size - 1) - row.
    let mut coeff: Vec<bool> = (0..size).map(|mask| v.bits[size - 1 - mask]).collect();
    for i in 0..n {
        let bit = 1 << i;
        for mask in 0..size {
            if mask & bit != 0 {
                coeff[mask] ^= coeff[mask ^ bit];
            }
        }
    }
    Poly::from_monomials(coeff.iter().enumerate().filter(|(_, &c)| c).map(|(mask, _)| {
        v.vars
            .iter()
            .enumerate()
            .filter(|(j, _)| mask >> (n - 1 - j) & 1 == 1)
            .map(|(_, name)| name.clone())
            .collect::<Monomial>()
    }))
}
