//! Singular operators applied to two-letter statements, and the comparison
//! with the printed tables.

use super::SingularOp;
use crate::families::{fiber, Fiber, TooManyLetters};
use crate::formula::{parse, Formula, UnaryOp};
use crate::poly::Poly;
use crate::transform::pbnf;
use crate::Family;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryApplication {
    pub op: SingularOp,
    pub input: Formula,
    /// The letter the template is instantiated at.
    pub letter: String,
    pub poly: Poly,
    pub fiber: Fiber,
}

impl BinaryApplication {
    /// The named statement, over the input's own letters.
    pub fn statement(&self) -> Formula {
        let named = self.fiber.statement();
        if self.fiber.renamed.is_empty() {
            return named;
        }
        rename(&named, &self.fiber.renamed)
    }
}

fn rename(f: &Formula, renamed: &[(String, String)]) -> Formula {
    match f {
        Formula::Atom(a) => {
            let back = renamed.iter().find(|(_, to)| to == a).map_or(a.clone(), |(from, _)| from.clone());
            Formula::Atom(back)
        }
        Formula::Const(b) => Formula::Const(*b),
        Formula::Unary(op, c) => Formula::unary(*op, rename(c, renamed)),
        Formula::Binary(op, l, r) => Formula::binary(*op, rename(l, renamed), rename(r, renamed)),
    }
}

/// Adds the operator's template at the first letter of `f` (`p` for a
/// constant statement) and names the result.
pub fn apply_to_binary(op: SingularOp, f: &Formula) -> Result<BinaryApplication, TooManyLetters> {
    let letters = f.letters();
    if letters.len() > 2 {
        return Err(TooManyLetters(letters));
    }
    let letter = letters.first().cloned().unwrap_or_else(|| "p".to_string());
    let poly = super::apply_singular(op, &pbnf(f, Family::Normal), &letter);
    let fiber = fiber(&poly, Family::Normal)?;
    Ok(BinaryApplication { op, input: f.clone(), letter, poly, fiber })
}

/// Column headings of the printed table with their statements.
pub const PRINTED_COLUMNS: [(&str, &str); 16] = [
    ("p ∧ q", "p & q"),
    ("p ∨ q", "p | q"),
    ("p ⇒ q", "p -> q"),
    ("p ⇐ q", "p <- q"),
    ("p ⇔ q", "p <-> q"),
    ("¬p", "!p"),
    ("¬q", "!q"),
    ("p ↓ q", "p nor q"),
    ("p ↑ q", "p nand q"),
    ("p ⊕ q", "p ^ q"),
    ("p ⇏ q", "p -/> q"),
    ("p ⇍ q", "p </- q"),
    ("p", "p"),
    ("q", "q"),
    ("1", "1"),
    ("0", "0"),
];

/// Printed cells, rows `=`, `−`, `¬`, `+`. A `;` separates alternatives.
const PRINTED_CELLS: [[&str; 16]; 4] = [
    [
        "p & q", "p | q", "p & q", "p & q", "p <-> q", "!p", "!q", "p nor q", "p nand q", "p ^ q", "p -/> q",
        "p </- q", "p", "q", "1", "0",
    ],
    [
        "p & !q", "p | q", "1", "p <- q", "!p; !q", "1", "1", "p <- q", "p -> q", "q", "p & q", "p | q", "0", "0",
        "!p", "-p",
    ],
    [
        "p nand q", "1", "p -> q", "p -> q", "p ^ q", "p", "q", "p | q", "p -> q", "p <-> q", "p -> q", "p <- q", "!p",
        "!q", "0", "1",
    ],
    [
        "p -> q", "p <- q", "p & q", "p | q", "p & q", "0", "0", "!p & q", "p <- q", "!q", "p nand q", "p nor q", "1",
        "1", "p", "+p",
    ],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffCell {
    pub row: SingularOp,
    pub column: &'static str,
    /// The printed cell, ASCII, with `;` between alternatives.
    pub printed: &'static str,
    pub computed: BinaryApplication,
    pub matches: bool,
}

fn cell_alternatives(cell: &str) -> Vec<Formula> {
    cell.split(';').map(|s| parse(s.trim()).expect("printed cells are well formed")).collect()
}

/// Every cell of the printed table against the additive rule.
pub fn singular_table_diff() -> Vec<DiffCell> {
    let mut out = Vec::with_capacity(64);
    for (row, cells) in UnaryOp::ALL.into_iter().zip(PRINTED_CELLS) {
        for ((column, input), printed) in PRINTED_COLUMNS.into_iter().zip(cells) {
            let input = parse(input).expect("column statements are well formed");
            let computed = apply_to_binary(row, &input).expect("columns use at most two letters");
            let matches = cell_alternatives(printed).iter().any(|alt| pbnf(alt, Family::Normal) == computed.poly);
            out.push(DiffCell { row, column, printed, computed, matches });
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClauseSource {
    Lemma,
    Definition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseCheck {
    pub source: ClauseSource,
    pub clause: &'static str,
    /// The statement lowered by `−`.
    pub argument: Formula,
    /// The statements the clause equates with `−(argument)`.
    pub claimed: Vec<Formula>,
    /// `−(argument)` under the additive rule.
    pub computed: Poly,
    pub agrees: bool,
}

/// Both De Morgan-type readings of `−` on `∨` and `∧`.
pub fn de_morgan_checks() -> Vec<ClauseCheck> {
    let clauses: [(ClauseSource, &str, &str, &[&str]); 4] = [
        (ClauseSource::Lemma, "i", "p | q", &["!p & q", "p </- q"]),
        (ClauseSource::Lemma, "ii", "p & q", &["p & !q", "p -/> q"]),
        (ClauseSource::Definition, "i", "p | q", &["!(!p | q)", "p & !q"]),
        (ClauseSource::Definition, "ii", "p & q", &["!(p | !q)", "!p & q"]),
    ];
    clauses
        .into_iter()
        .map(|(source, clause, argument, claimed)| {
            let argument = parse(argument).expect("well formed");
            let claimed: Vec<Formula> = claimed.iter().map(|s| parse(s).expect("well formed")).collect();
            let computed = apply_to_binary(UnaryOp::Lower, &argument).expect("two letters").poly;
            let agrees = claimed.iter().all(|c| pbnf(c, Family::Normal) == computed);
            ClauseCheck { source, clause, argument, claimed, computed, agrees }
        })
        .collect()
}
