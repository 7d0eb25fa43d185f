//! Propositional formulas over the full connective catalog.
//!
//! The concrete grammar is in `docs/grammar.ebnf`. Applications are typed by
//! arity ([`UnaryOp`] takes one child, [`BinaryOp`] two), so an ill-formed
//! application cannot be built.

mod ops;
mod parse;
mod print;

pub use ops::{BinaryOp, OperatorId, UnaryOp};
pub use parse::{parse, ParseError, ParseErrorKind};
pub use print::Style;

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom(String),
    Const(bool),
    Unary(UnaryOp, Box<Formula>),
    Binary(BinaryOp, Box<Formula>, Box<Formula>),
}

/// Returned by [`Formula::atom`] for names outside `[A-Za-z_][A-Za-z0-9_]*`
/// or names reserved as connective keywords.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid atom name {0:?}")]
pub struct InvalidAtom(pub String);

impl Formula {
    pub fn atom(name: &str) -> Result<Formula, InvalidAtom> {
        if parse::is_valid_atom(name) {
            Ok(Formula::Atom(name.to_string()))
        } else {
            Err(InvalidAtom(name.to_string()))
        }
    }

    pub fn unary(op: UnaryOp, child: Formula) -> Formula {
        Formula::Unary(op, Box::new(child))
    }

    pub fn binary(op: BinaryOp, left: Formula, right: Formula) -> Formula {
        Formula::Binary(op, Box::new(left), Box::new(right))
    }

    pub fn negation(child: Formula) -> Formula {
        Formula::unary(UnaryOp::Neg, child)
    }

    /// Builds an application from a catalog entry; `None` if the number of
    /// children does not match the arity.
    pub fn apply(op: OperatorId, mut children: Vec<Formula>) -> Option<Formula> {
        if children.len() != op.arity() {
            return None;
        }
        Some(match op {
            OperatorId::Const(b) => Formula::Const(b),
            OperatorId::Unary(u) => Formula::unary(u, children.pop()?),
            OperatorId::Binary(b) => {
                let right = children.pop()?;
                let left = children.pop()?;
                Formula::binary(b, left, right)
            }
        })
    }

    /// Statement letters in order of first appearance.
    pub fn letters(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<String>) {
        match self {
            Formula::Atom(name) => {
                if !out.iter().any(|n| n == name) {
                    out.push(name.clone());
                }
            }
            Formula::Const(_) => {}
            Formula::Unary(_, c) => c.collect_letters(out),
            Formula::Binary(_, l, r) => {
                l.collect_letters(out);
                r.collect_letters(out);
            }
        }
    }

    /// Number of connective applications (`k`).
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Const(_) => 0,
            Formula::Unary(_, c) => 1 + c.connective_count(),
            Formula::Binary(_, l, r) => 1 + l.connective_count() + r.connective_count(),
        }
    }

    /// Number of distinct letters (`l`).
    pub fn letter_count(&self) -> usize {
        self.letters().len()
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Const(_) => 0,
            Formula::Unary(_, c) => 1 + c.depth(),
            Formula::Binary(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    pub fn to_string_styled(&self, style: Style) -> String {
        print::print(self, style)
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print::print(self, Style::Unicode))
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
