//! Factored display forms such as `(p+1)(q+1)+1`.
//!
//! These are for presentation and trace rendering only; every computation
//! goes through the reduced [`Poly`].

use crate::formula::{BinaryOp, OperatorId};
use crate::poly::Poly;
use crate::semantics::{vector_to_poly, TruthVector};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Literal {
    pub var: String,
    pub complemented: bool,
}

/// A sum of products of literals `v` / `(v+1)`, plus an optional `+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Template {
    products: Vec<Vec<Literal>>,
    constant: bool,
}

fn lit(var: &str, complemented: bool) -> Literal {
    Literal { var: var.to_string(), complemented }
}

impl Template {
    pub fn constant(value: bool) -> Self {
        Template { products: Vec::new(), constant: value }
    }

    /// Each monomial becomes a product of plain literals.
    pub fn from_poly(a: &Poly) -> Self {
        let mut products = Vec::new();
        let mut constant = false;
        for m in a.monomials() {
            if m.degree() == 0 {
                constant = true;
            } else {
                products.push(m.vars().map(|v| lit(v, false)).collect());
            }
        }
        Template { products, constant }
    }

    /// Template for a two-letter truth vector. A single true row becomes the
    /// product of its literals, a single false row that product plus one;
    /// anything else is shown reduced.
    pub fn for_vector(bits: u8) -> Self {
        let bits = bits & 0x0f;
        let row_literals = |row: u32| {
            // row 0 is (1,1), row 3 is (0,0)
            vec![lit("p", row >= 2), lit("q", row % 2 == 1)]
        };
        match bits.count_ones() {
            1 => Template { products: vec![row_literals(3 - bits.trailing_zeros())], constant: false },
            3 => {
                let zero = (!bits & 0x0f).trailing_zeros();
                Template { products: vec![row_literals(3 - zero)], constant: true }
            }
            _ => Template::from_poly(&vector_to_poly(&TruthVector::binary(bits))),
        }
    }

    /// `(p+1)pq+1` for ι₁, `(p+1)pq` for ι₀.
    pub fn iota(top: bool) -> Self {
        Template { products: vec![vec![lit("p", true), lit("p", false), lit("q", false)]], constant: top }
    }

    /// Normal-family template of a catalog entry.
    pub fn normal(op: OperatorId) -> Self {
        match op {
            OperatorId::Binary(BinaryOp::Top) => Template::iota(true),
            OperatorId::Binary(BinaryOp::Bot) => Template::iota(false),
            OperatorId::Binary(b) => Template::for_vector(b.bits()),
            OperatorId::Unary(_) | OperatorId::Const(_) => Template::from_poly(&super::normal_poly(op)),
        }
    }

    pub fn complement(&self) -> Self {
        Template { products: self.products.clone(), constant: !self.constant }
    }

    /// Every literal flipped, as when each input is complemented.
    pub fn pullback(&self) -> Self {
        let products =
            self.products.iter().map(|prod| prod.iter().map(|l| lit(&l.var, !l.complemented)).collect()).collect();
        Template { products, constant: self.constant }
    }

    pub fn reduce(&self) -> Poly {
        let mut acc = Poly::constant(self.constant);
        for prod in &self.products {
            let mut term = Poly::one();
            for l in prod {
                let v = Poly::var(l.var.clone());
                term = term.mul(&if l.complemented { v.negate() } else { v });
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Renders with each variable replaced by the given text, e.g. the
    /// reduced polynomials of subformulas.
    pub fn render_with(&self, args: &BTreeMap<String, String>) -> String {
        let arg = |v: &str| args.get(v).cloned().unwrap_or_else(|| v.to_string());
        let mut parts: Vec<String> = self
            .products
            .iter()
            .map(|prod| {
                let many = prod.len() > 1;
                prod.iter()
                    .map(|l| {
                        let a = arg(&l.var);
                        if l.complemented {
                            format!("({a}+1)")
                        } else if many && !a.chars().all(|c| c.is_ascii_alphabetic()) {
                            format!("({a})")
                        } else {
                            a
                        }
                    })
                    .collect::<String>()
            })
            .collect();
        if self.constant {
            parts.push("1".into());
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&BTreeMap::new()))
    }
}
