//! The four polynomial families and the fiber back to named connectives.
//!
//! | family               | polynomial            | truth vector        |
//! |----------------------|-----------------------|---------------------|
//! | Normal `g(p,q,1)`    | as compiled           | as is               |
//! | Complement `g(p,q,0)`| `+ 1`                 | complemented        |
//! | Pullback `g(p′,q′,1)`| every `v` ↦ `v + 1`   | mirrored            |
//! | PullbackComplement   | both                  | mirrored complement |
//!
//! Families are stored as these transforms. The printed tables are derived
//! from them, never hardcoded.

mod template;

pub use template::{Literal, Template};

use crate::assignment::Assignment;
use crate::formula::{BinaryOp, Formula, OperatorId, UnaryOp};
use crate::poly::{Poly, UnboundVariable};
use crate::semantics::{poly_to_vector, vector_to_poly, TruthVector};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Normal,
    Complement,
    Pullback,
    PullbackComplement,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Normal, Family::Complement, Family::Pullback, Family::PullbackComplement];

    pub fn complements_output(self) -> bool {
        matches!(self, Family::Complement | Family::PullbackComplement)
    }

    pub fn complements_inputs(self) -> bool {
        matches!(self, Family::Pullback | Family::PullbackComplement)
    }

    /// The polynomial constant that means "true" in this family.
    pub fn true_constant(self) -> bool {
        !self.complements_output()
    }

    /// Re-encodes a Normal polynomial in this family.
    pub fn from_normal(self, a: &Poly) -> Poly {
        let a = if self.complements_inputs() { a.complement_inputs() } else { a.clone() };
        if self.complements_output() {
            a.negate()
        } else {
            a
        }
    }

    /// Inverse of [`Family::from_normal`]; both transforms are involutions.
    pub fn to_normal(self, a: &Poly) -> Poly {
        self.from_normal(a)
    }

    pub fn map_vector(self, v: &TruthVector) -> TruthVector {
        let v = if self.complements_inputs() { v.mirror() } else { v.clone() };
        if self.complements_output() {
            v.complement()
        } else {
            v
        }
    }

    /// Truth value of the encoded statement under `sigma` (an assignment to
    /// the statement's own letters).
    pub fn truth_value(self, a: &Poly, sigma: &Assignment) -> Result<bool, UnboundVariable> {
        let value = if self.complements_inputs() { a.evaluate(&sigma.complemented())? } else { a.evaluate(sigma)? };
        Ok(value ^ self.complements_output())
    }

    /// CLI spelling.
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Normal => "normal",
            Family::Complement => "complement",
            Family::Pullback => "pullback",
            Family::PullbackComplement => "pullback-complement",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Family::Normal => "ℋ*",
            Family::Complement => "ℋ′",
            Family::Pullback => "ℋ″",
            Family::PullbackComplement => "ℋ**",
        }
    }

    pub fn signature(self) -> &'static str {
        match self {
            Family::Normal => "g(p,q,1)",
            Family::Complement => "g(p,q,0)",
            Family::Pullback => "g(p′,q′,1)",
            Family::PullbackComplement => "g(p′,q′,0)",
        }
    }

    pub fn template(self, t: &Template) -> Template {
        let t = if self.complements_inputs() { t.pullback() } else { t.clone() };
        if self.complements_output() {
            t.complement()
        } else {
            t
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown family {0:?} (expected normal, complement, pullback or pullback-complement)")]
pub struct UnknownFamily(pub String);

impl FromStr for Family {
    type Err = UnknownFamily;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "normal" | "n" => Ok(Family::Normal),
            "complement" | "c" => Ok(Family::Complement),
            "pullback" | "p" => Ok(Family::Pullback),
            "pullback-complement" | "pullback_complement" | "pc" => Ok(Family::PullbackComplement),
            _ => Err(UnknownFamily(s.to_string())),
        }
    }
}

fn operand_vars(arity: usize) -> Vec<String> {
    ["p", "q"].iter().take(arity).map(|s| s.to_string()).collect()
}

/// Normal polynomial of a catalog entry over `p` (and `q`).
pub(crate) fn normal_poly(op: OperatorId) -> Poly {
    let vars = operand_vars(op.arity());
    let v = TruthVector::new(vars, op.truth_bits()).expect("catalog vectors have length 2^arity");
    vector_to_poly(&v)
}

/// The polynomial of a connective in a family, over `p` and `q`.
pub fn op_poly(op: OperatorId, fam: Family) -> Poly {
    fam.from_normal(&normal_poly(op))
}

pub fn to_family(a: &Poly, from: Family, to: Family) -> Poly {
    to.from_normal(&from.to_normal(a))
}

/// The dual named in the mirrored-complement correspondence (`∨ ↦ ∧`,
/// `⇒ ↦ ⇍`, `⇔ ↦ ⊕`, `↓ ↦ ↑`).
pub fn mirrored_complement(op: BinaryOp) -> BinaryOp {
    let v = TruthVector::binary(op.bits());
    BinaryOp::from_bits(Family::PullbackComplement.map_vector(&v).packed())
}

/// How a fibered polynomial reads once degenerate cases are recognised.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reading {
    /// Depends on both letters.
    Binary(BinaryOp),
    /// Depends on exactly one letter: `ID` or `NEG` applied to it.
    Unary(UnaryOp, String),
    Constant(bool),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fiber {
    /// The binary connective whose family polynomial this is.
    pub binary: BinaryOp,
    pub reading: Reading,
    /// Input variables renamed to `p`, `q`, when they were not already.
    pub renamed: Vec<(String, String)>,
}

impl Fiber {
    pub fn is_degenerate(&self) -> bool {
        !matches!(self.reading, Reading::Binary(_))
    }

    /// Whether `op` is one of the names this fiber admits.
    pub fn names(&self, op: OperatorId) -> bool {
        match (op, &self.reading) {
            (OperatorId::Binary(b), _) => b == self.binary,
            (OperatorId::Unary(u), Reading::Unary(r, _)) => u == *r,
            (OperatorId::Unary(UnaryOp::Lower), Reading::Constant(false)) => true,
            (OperatorId::Unary(UnaryOp::Raise), Reading::Constant(true)) => true,
            (OperatorId::Const(b), Reading::Constant(c)) => b == *c,
            _ => false,
        }
    }

    /// The named statement over `p`, `q`.
    pub fn statement(&self) -> Formula {
        let atom = |v: &str| Formula::Atom(v.to_string());
        match &self.reading {
            Reading::Binary(op) => Formula::binary(*op, atom("p"), atom("q")),
            Reading::Unary(UnaryOp::Neg, v) => Formula::negation(atom(v)),
            Reading::Unary(_, v) => atom(v),
            Reading::Constant(b) => Formula::Const(*b),
        }
    }
}

impl fmt::Display for Fiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.binary)?;
        if self.is_degenerate() {
            write!(f, " (degenerate: {})", self.statement())?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("fiber naming needs at most two letters, found {0:?}")]
pub struct TooManyLetters(pub Vec<String>);

/// The connective whose polynomial in `fam` is `a`.
///
/// Variables other than `p`, `q` are renamed to `p`, `q` in sorted order.
pub fn fiber(a: &Poly, fam: Family) -> Result<Fiber, TooManyLetters> {
    let vars: Vec<String> = a.variables().into_iter().collect();
    if vars.len() > 2 {
        return Err(TooManyLetters(vars));
    }
    let mut renamed = Vec::new();
    let a = if vars.iter().all(|v| v == "p" || v == "q") {
        a.clone()
    } else {
        renamed = vars.iter().cloned().zip(["p".to_string(), "q".to_string()]).collect();
        let pairs = renamed.iter().map(|(from, to)| (from.as_str(), Poly::var(to.clone())));
        a.substitute_pairs(pairs)
    };
    let normal = fam.to_normal(&a);
    let v = poly_to_vector(&normal, &operand_vars(2)).expect("variables are p and q");
    let binary = BinaryOp::from_bits(v.packed());
    let reading = match (binary.depends_on_p(), binary.depends_on_q()) {
        (true, true) => Reading::Binary(binary),
        (true, false) => Reading::Unary(if binary.eval(true, true) { UnaryOp::Id } else { UnaryOp::Neg }, "p".into()),
        (false, true) => Reading::Unary(if binary.eval(true, true) { UnaryOp::Id } else { UnaryOp::Neg }, "q".into()),
        (false, false) => Reading::Constant(binary.eval(true, true)),
    };
    Ok(Fiber { binary, reading, renamed })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub op: OperatorId,
    /// Factored display form.
    pub template: Template,
    pub poly: Poly,
    pub vector: TruthVector,
}

/// Rows of the complete family table: letters, their complements, `¬p`,
/// the remaining binary connectives, then ι₁ and ι₀.
pub fn family_table(fam: Family) -> Vec<TableRow> {
    use BinaryOp::*;
    let binary_rows: [(&str, BinaryOp); 16] = [
        ("p", ProjP),
        ("p′", NprojP),
        ("q", ProjQ),
        ("q′", NprojQ),
        ("p ∨ q", Or),
        ("p ∧ q", And),
        ("p ⇒ q", Imp),
        ("p ⇏ q", Nimp),
        ("p ⇐ q", Convimp),
        ("p ⇍ q", Nconvimp),
        ("p ↓ q", Nor),
        ("p ↑ q", Nand),
        ("p ⇔ q", Iff),
        ("p ⊕ q", Xor),
        ("ι₁", Top),
        ("ι₀", Bot),
    ];
    let mut rows = Vec::with_capacity(17);
    let mut push = |label: &str, op: OperatorId| {
        let poly = op_poly(op, fam);
        let vars = operand_vars(op.arity());
        let vector = fam.map_vector(&TruthVector::new(vars, op.truth_bits()).expect("catalog vector"));
        let template = match op {
            OperatorId::Binary(b @ (Top | Bot)) => fam.template(&Template::iota(b == Top)),
            OperatorId::Binary(_) => Template::for_vector(vector.packed()),
            _ => Template::from_poly(&poly),
        };
        rows.push(TableRow { label: label.to_string(), op, template, poly, vector });
    };
    for (label, op) in &binary_rows[..4] {
        push(label, (*op).into());
    }
    push("¬p", UnaryOp::Neg.into());
    for (label, op) in &binary_rows[4..] {
        push(label, (*op).into());
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn op_poly_examples() {
        assert_eq!(op_poly(BinaryOp::And.into(), Family::Normal), poly("pq"));
        assert_eq!(op_poly(BinaryOp::And.into(), Family::Complement), poly("pq+1"));
        assert_eq!(op_poly(BinaryOp::Imp.into(), Family::Pullback), poly("pq+q+1"));
        assert_eq!(op_poly(BinaryOp::Imp.into(), Family::Pullback), poly("(p+1)q+1"));
        assert_eq!(op_poly(BinaryOp::Bot.into(), Family::Normal), Poly::zero());
        assert_eq!(op_poly(UnaryOp::Neg.into(), Family::Complement), poly("p"));
    }

    #[test]
    fn to_family_examples() {
        assert_eq!(to_family(&poly("pq"), Family::Normal, Family::Complement), poly("pq+1"));
        assert_eq!(to_family(&poly("(p+1)(q+1)+1"), Family::Normal, Family::Pullback), poly("pq+1"));
        for from in Family::ALL {
            for to in Family::ALL {
                let a = poly("pq+p+r");
                assert_eq!(to_family(&to_family(&a, from, to), to, from), a);
            }
        }
    }

    #[test]
    fn fiber_examples() {
        let f = fiber(&poly("p+q+1"), Family::Normal).unwrap();
        assert_eq!(f.binary, BinaryOp::Iff);
        assert!(!f.is_degenerate());

        let f = fiber(&poly("(p+1)q"), Family::Normal).unwrap();
        assert_eq!(f.binary, BinaryOp::Nconvimp);

        let f = fiber(&poly("p+1"), Family::Normal).unwrap();
        assert_eq!(f.reading, Reading::Unary(UnaryOp::Neg, "p".into()));
        assert_eq!(f.binary, BinaryOp::NprojP);
        assert_eq!(f.statement().to_string(), "¬p");

        let f = fiber(&poly("pp+1"), Family::Normal).unwrap();
        assert!(f.names(UnaryOp::Neg.into()));

        assert!(fiber(&poly("pqr"), Family::Normal).is_err());
    }

    #[test]
    fn fiber_renames_other_letters() {
        let f = fiber(&poly("xy+1"), Family::Normal).unwrap();
        assert_eq!(f.binary, BinaryOp::Nand);
        assert_eq!(f.renamed, [("x".to_string(), "p".to_string()), ("y".to_string(), "q".to_string())]);
        let f = fiber(&poly("q"), Family::Normal).unwrap();
        assert_eq!(f.binary, BinaryOp::ProjQ);
        assert!(f.renamed.is_empty());
    }

    #[test]
    fn fiber_inverts_op_poly() {
        for fam in Family::ALL {
            for op in OperatorId::ALL {
                let f = fiber(&op_poly(op, fam), fam).unwrap();
                assert!(f.names(op), "{op} in {fam}: got {f}");
            }
        }
    }

    #[test]
    fn table_examples() {
        let row = |fam: Family, label: &str| family_table(fam).into_iter().find(|r| r.label == label).unwrap();
        assert_eq!(row(Family::Normal, "p ⊕ q").poly, poly("p+q"));
        assert_eq!(row(Family::PullbackComplement, "p ↓ q").poly, poly("pq+1"));
        assert_eq!(row(Family::Complement, "¬p").poly, poly("p"));
        assert_eq!(row(Family::Normal, "p ∨ q").template.to_string(), "(p+1)(q+1)+1");
        assert_eq!(row(Family::Pullback, "ι₁").template.to_string(), "p(p+1)(q+1)+1");
        assert_eq!(row(Family::Pullback, "ι₀").template.to_string(), "p(p+1)(q+1)");
        assert_eq!(family_table(Family::Normal).len(), 17);
    }

    #[test]
    fn table_templates_reduce_to_polys() {
        for fam in Family::ALL {
            for row in family_table(fam) {
                assert_eq!(row.template.reduce(), row.poly, "{} in {fam}", row.label);
            }
        }
    }

    #[test]
    fn mirrored_complement_pairs() {
        assert_eq!(mirrored_complement(BinaryOp::Or), BinaryOp::And);
        assert_eq!(mirrored_complement(BinaryOp::Imp), BinaryOp::Nconvimp);
        assert_eq!(mirrored_complement(BinaryOp::Iff), BinaryOp::Xor);
        assert_eq!(mirrored_complement(BinaryOp::Nor), BinaryOp::Nand);
        assert_eq!(mirrored_complement(BinaryOp::Convimp), BinaryOp::Nimp);
    }

    #[test]
    fn family_names_parse() {
        for fam in Family::ALL {
            assert_eq!(fam.as_str().parse::<Family>().unwrap(), fam);
        }
        assert!("house".parse::<Family>().is_err());
    }
}
