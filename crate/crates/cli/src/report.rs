//! Typed command results. Each serializes to one JSON document tagged with
//! [`SCHEMA`] and renders to aligned text.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const SCHEMA: &str = "pbnf/1";

/// Letter values, `{"p": 1, "q": 0}`.
pub type Row = BTreeMap<String, u8>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Envelope<T> {
    pub schema: String,
    pub command: String,
    #[serde(flatten)]
    pub body: T,
}

impl<T> Envelope<T> {
    pub fn new(command: &str, body: T) -> Self {
        Envelope { schema: SCHEMA.to_string(), command: command.to_string(), body }
    }
}

pub trait Render {
    fn text(&self) -> String;
}

fn row_text(row: &Row) -> String {
    row.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ")
}

/// Pads every column but the last to its widest cell, counting characters.
pub fn columns(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..width)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            if c + 1 < row.len() {
                line.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count()));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn pairs(items: &[(&str, String)]) -> String {
    let rows: Vec<Vec<String>> = items.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
    columns(&rows)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub kind: String,
    pub subformula: String,
    pub template: String,
    pub substituted: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transform {
    pub formula: String,
    pub family: String,
    pub polynomial: String,
    pub vars: Vec<String>,
    pub vector: String,
    pub class: String,
    pub witness: Option<Row>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<TraceStep>>,
}

impl Render for Transform {
    fn text(&self) -> String {
        let mut out = pairs(&[
            ("formula", self.formula.clone()),
            ("family", self.family.clone()),
            ("polynomial", self.polynomial.clone()),
            ("vector", format!("{} ({})", self.vector, self.vars.join(", "))),
            ("class", self.class.clone()),
            ("witness", self.witness.as_ref().map_or("none".into(), row_text)),
        ]);
        if let Some(trace) = &self.trace {
            out.push_str("trace\n");
            for s in trace {
                if s.kind == "leaf" {
                    out.push_str(&format!("  {} ↦ {}\n", s.subformula, s.result));
                } else {
                    out.push_str(&format!("  {} ↦ {} = {} = {}\n", s.subformula, s.template, s.substituted, s.result));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prove {
    pub formula: String,
    pub family: String,
    pub polynomial: String,
    pub class: String,
    pub tautology: bool,
    pub witness: Option<Row>,
}

impl Render for Prove {
    fn text(&self) -> String {
        match &self.witness {
            Some(w) if !self.tautology => format!("not a tautology ({}), falsified by {}\n", self.class, row_text(w)),
            _ => format!("{}\n", self.class),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Equiv {
    pub left: String,
    pub right: String,
    pub left_polynomial: String,
    pub right_polynomial: String,
    pub equivalent: bool,
    pub witness: Option<Row>,
}

impl Render for Equiv {
    fn text(&self) -> String {
        match &self.witness {
            Some(w) if !self.equivalent => format!("not equivalent, witness {}\n", row_text(w)),
            _ => "equivalent\n".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solve {
    pub left: String,
    pub right: String,
    pub vars: Vec<String>,
    /// `left + right + 1`, true exactly where the sides agree.
    pub condition: String,
    pub description: String,
    pub solutions: Vec<Row>,
}

impl Render for Solve {
    fn text(&self) -> String {
        let rows: Vec<String> = self.solutions.iter().map(row_text).collect();
        let solutions = if rows.is_empty() { "none".into() } else { rows.join(", ") };
        pairs(&[
            ("equation", format!("{} = {}", self.left, self.right)),
            ("condition", format!("{} = 1", self.condition)),
            ("holds when", self.description.clone()),
            ("solutions", solutions),
        ])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberReport {
    pub polynomial: String,
    pub family: String,
    pub operator: String,
    pub statement: String,
    pub degenerate: bool,
    /// Input letters renamed to `p`, `q`, as `[from, to]`.
    pub renamed: Vec<[String; 2]>,
}

impl Render for FiberReport {
    fn text(&self) -> String {
        let mut out = format!("{}  {}", self.operator, self.statement);
        if self.degenerate {
            out.push_str("  (degenerate)");
        }
        out.push('\n');
        if !self.renamed.is_empty() {
            let r: Vec<String> = self.renamed.iter().map(|[a, b]| format!("{a} as {b}")).collect();
            out.push_str(&format!("renamed {}\n", r.join(", ")));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub label: String,
    pub operator: String,
    /// Factored form, before reduction.
    pub template: String,
    pub polynomial: String,
    pub vector: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyBlock {
    pub family: String,
    pub symbol: String,
    pub signature: String,
    pub rows: Vec<FamilyRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTable {
    pub families: Vec<FamilyBlock>,
}

impl Render for FamilyTable {
    fn text(&self) -> String {
        let blocks: Vec<String> = self
            .families
            .iter()
            .map(|b| {
                let mut rows = vec![vec!["".to_string(), "operator".into(), "polynomial".into(), "vector".into()]];
                for r in &b.rows {
                    let poly = if r.template == r.polynomial {
                        r.template.clone()
                    } else {
                        format!("{} [= {}]", r.template, r.polynomial)
                    };
                    rows.push(vec![r.label.clone(), r.operator.clone(), poly, r.vector.clone()]);
                }
                format!("{} {}  {}\n{}", b.symbol, b.signature, b.family, columns(&rows))
            })
            .collect();
        blocks.join("\n")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KleinTable {
    pub operators: Vec<String>,
    /// `row ∘ column` as an operator.
    pub composition: Vec<Vec<String>>,
    /// `row ∘ column` applied to `p`.
    pub on_p: Vec<Vec<String>>,
}

impl Render for KleinTable {
    fn text(&self) -> String {
        let mut rows = vec![std::iter::once("∘".to_string()).chain(self.operators.iter().cloned()).collect()];
        for (op, cells) in self.operators.iter().zip(&self.on_p) {
            rows.push(std::iter::once(op.clone()).chain(cells.iter().cloned()).collect());
        }
        columns(&rows)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueTable {
    pub pairs: Vec<String>,
    /// Coordinatewise sums.
    pub sums: Vec<Vec<String>>,
    pub four_values: Vec<String>,
}

impl Render for ValueTable {
    fn text(&self) -> String {
        let mut rows = vec![std::iter::once("+".to_string()).chain(self.pairs.iter().cloned()).collect()];
        for (x, cells) in self.pairs.iter().zip(&self.sums) {
            rows.push(std::iter::once(x.clone()).chain(cells.iter().cloned()).collect());
        }
        let mut out = columns(&rows);
        out.push('\n');
        let legend: Vec<Vec<String>> =
            self.pairs.iter().zip(&self.four_values).map(|(p, v)| vec![p.clone(), v.clone()]).collect();
        out.push_str(&columns(&legend));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub vector: String,
    pub depth: usize,
    pub witness: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Synthesis {
    pub target: String,
    pub vector: Option<String>,
    pub formula: Option<String>,
    pub depth: Option<usize>,
    pub error: Option<String>,
}

impl Synthesis {
    fn line(&self) -> String {
        match (&self.formula, &self.error) {
            (Some(f), _) => format!("{} = {f}\n", self.target),
            (None, Some(e)) => format!("{}: {e}\n", self.target),
            (None, None) => format!("{}\n", self.target),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Basis {
    pub ops: Vec<String>,
    pub constants: bool,
    pub complete: bool,
    pub rounds: usize,
    pub reached: Vec<BasisEntry>,
    pub missing: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<Synthesis>,
}

impl Render for Basis {
    fn text(&self) -> String {
        let verdict = if self.complete { "complete" } else { "incomplete" };
        let mut out = format!(
            "basis {{{}}}{}: {verdict}, {} of 16 reached in {} rounds\n",
            self.ops.join(", "),
            if self.constants { " with constants" } else { "" },
            self.reached.len(),
            self.rounds
        );
        let mut rows = vec![vec!["vector".to_string(), "depth".into(), "witness".into()]];
        rows.extend(self.reached.iter().map(|e| vec![e.vector.clone(), e.depth.to_string(), e.witness.clone()]));
        out.push_str(&columns(&rows));
        if !self.missing.is_empty() {
            out.push_str(&format!("missing {}\n", self.missing.join(" ")));
        }
        if let Some(t) = &self.target {
            out.push_str(&t.line());
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Synth {
    pub ops: Vec<String>,
    pub constants: bool,
    pub depth_cap: usize,
    #[serde(flatten)]
    pub result: Synthesis,
}

impl Render for Synth {
    fn text(&self) -> String {
        match &self.result.formula {
            Some(f) => format!("{f}\n"),
            None => self.result.line(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularApply {
    pub operator: String,
    pub formula: String,
    pub letter: String,
    pub polynomial: String,
    pub connective: Option<String>,
    pub statement: Option<String>,
}

impl Render for SingularApply {
    fn text(&self) -> String {
        let mut items = vec![
            ("operator", self.operator.clone()),
            ("formula", self.formula.clone()),
            ("letter", self.letter.clone()),
            ("polynomial", self.polynomial.clone()),
        ];
        if let (Some(c), Some(s)) = (&self.connective, &self.statement) {
            items.push(("statement", format!("{s}  ({c})")));
        }
        pairs(&items)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum CellStatus {
    Match,
    Mismatch { printed: String, computed: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffEntry {
    pub row: String,
    pub column: String,
    pub polynomial: String,
    #[serde(flatten)]
    pub status: CellStatus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub source: String,
    pub clause: String,
    pub argument: String,
    pub claimed: Vec<String>,
    pub computed: String,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularTables {
    pub cells: Vec<DiffEntry>,
    pub mismatches: usize,
    pub clauses: Vec<Clause>,
}

impl Render for SingularTables {
    fn text(&self) -> String {
        let mut rows = vec![vec![
            "row".to_string(),
            "column".into(),
            "polynomial".into(),
            "status".into(),
            "printed".into(),
            "computed".into(),
        ]];
        for c in &self.cells {
            let mut r = vec![c.row.clone(), c.column.clone(), c.polynomial.clone()];
            match &c.status {
                CellStatus::Match => r.push("match".into()),
                CellStatus::Mismatch { printed, computed } => {
                    r.extend(["mismatch".to_string(), printed.clone(), computed.clone()]);
                }
            }
            rows.push(r);
        }
        let mut out = columns(&rows);
        out.push_str(&format!(
            "{} of {} printed cells deviate from the additive rule\n\n",
            self.mismatches,
            self.cells.len()
        ));
        let mut rows =
            vec![vec!["source".to_string(), "clause".into(), "claim".into(), "computed".into(), "verdict".into()]];
        for c in &self.clauses {
            rows.push(vec![
                c.source.clone(),
                c.clause.clone(),
                format!("{} = {}", c.argument, c.claimed.join(" = ")),
                c.computed.clone(),
                if c.agrees { "holds" } else { "fails" }.into(),
            ]);
        }
        out.push_str(&columns(&rows));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Demi {
    /// Two-valued singular operators whose square is negation.
    pub singular: Vec<String>,
    /// Maps on coordinate pairs whose square is negation, as images of `10 00 01 11`.
    pub pair_maps: Vec<Vec<String>>,
    /// Mod-4 residues whose double is negation.
    pub z4: Vec<u8>,
}

impl Render for Demi {
    fn text(&self) -> String {
        let none = |v: &[String]| if v.is_empty() { "none".to_string() } else { v.join(", ") };
        let maps: Vec<String> = self.pair_maps.iter().map(|m| format!("[{}]", m.join(" "))).collect();
        let z4: Vec<String> = self.z4.iter().map(u8::to_string).collect();
        pairs(&[("singular", none(&self.singular)), ("pair maps", none(&maps)), ("mod 4", none(&z4))])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixOp {
    pub operator: String,
    pub matrix: [[u8; 2]; 2],
    pub transpose: [[u8; 2]; 2],
    pub transpose_operator: String,
}

impl Render for MatrixOp {
    fn text(&self) -> String {
        let m = |x: &[[u8; 2]; 2]| format!("[[{},{}],[{},{}]]", x[0][0], x[0][1], x[1][0], x[1][1]);
        pairs(&[
            ("operator", self.operator.clone()),
            ("matrix", m(&self.matrix)),
            ("transpose", format!("{}  {}", m(&self.transpose), self.transpose_operator)),
        ])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixMul {
    pub left: [String; 4],
    pub right: [String; 4],
    pub product: [String; 4],
}

impl Render for MatrixMul {
    fn text(&self) -> String {
        format!("({})\n", self.product.join(","))
    }
}
