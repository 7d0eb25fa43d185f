//! Compiling formulas to family polynomials, and the decision procedures
//! built on top: classification, equivalence and finite equation solving.

use crate::assignment::{self, Assignment};
use crate::families::{normal_poly, Family, Template};
use crate::formula::{Formula, OperatorId};
use crate::poly::Poly;
use std::collections::BTreeMap;
use std::fmt;

fn compile_normal(f: &Formula) -> Poly {
    match f {
        Formula::Atom(name) => Poly::var(name.clone()),
        Formula::Const(b) => Poly::constant(*b),
        Formula::Unary(op, c) => {
            normal_poly((*op).into()).substitute(&BTreeMap::from([("p".to_string(), compile_normal(c))]))
        }
        Formula::Binary(op, l, r) => normal_poly((*op).into())
            .substitute(&BTreeMap::from([("p".to_string(), compile_normal(l)), ("q".to_string(), compile_normal(r))])),
    }
}

/// The canonical polynomial of `f` in `fam`.
///
/// Child polynomials are substituted into Normal operator templates bottom
/// up; the family transform is applied once at the root.
pub fn pbnf(f: &Formula, fam: Family) -> Poly {
    fam.from_normal(&compile_normal(f))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Tautology,
    Contradiction,
    Contingent,
}

impl Class {
    pub fn as_str(self) -> &'static str {
        match self {
            Class::Tautology => "tautology",
            Class::Contradiction => "contradiction",
            Class::Contingent => "contingent",
        }
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub class: Class,
    /// First row (canonical order) where the statement is false.
    pub falsifying: Option<Assignment>,
    /// First row where the statement is true.
    pub satisfying: Option<Assignment>,
    pub poly: Poly,
    pub family: Family,
}

impl Verdict {
    /// The witness relevant to the class: a falsifying row unless the
    /// statement is a tautology.
    pub fn witness(&self) -> Option<&Assignment> {
        self.falsifying.as_ref().or(self.satisfying.as_ref())
    }
}

pub fn classify(f: &Formula, fam: Family) -> Verdict {
    let poly = pbnf(f, fam);
    let class = match poly.as_constant() {
        Some(b) if b == fam.true_constant() => Class::Tautology,
        Some(_) => Class::Contradiction,
        None => Class::Contingent,
    };
    let letters = f.letters();
    let value = |s: &Assignment| fam.truth_value(&poly, s).expect("poly letters come from the formula");
    let falsifying = assignment::rows(&letters).find(|s| !value(s));
    let satisfying = assignment::rows(&letters).find(|s| value(s));
    Verdict { class, falsifying, satisfying, poly, family: fam }
}

/// Letters of `f` followed by the new letters of `g`.
fn joint_letters(f: &Formula, g: &Formula) -> Vec<String> {
    let mut vars = f.letters();
    for v in g.letters() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub equivalent: bool,
    /// The first row where the two statements differ.
    pub witness: Option<Assignment>,
    pub left: Poly,
    pub right: Poly,
}

/// Equivalence by identity of canonical Normal polynomials.
pub fn equivalent(f: &Formula, g: &Formula) -> Equivalence {
    let left = pbnf(f, Family::Normal);
    let right = pbnf(g, Family::Normal);
    let equivalent = left == right;
    let witness = if equivalent {
        None
    } else {
        let diff = left.add(&right);
        let vars = joint_letters(f, g);
        let found = assignment::rows(&vars).find(|s| diff.evaluate(s).expect("joint letters cover both sides"));
        found
    };
    Equivalence { equivalent, witness, left, right }
}

pub const SOLVE_LETTER_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0} letters exceed the enumeration bound of {SOLVE_LETTER_LIMIT}")]
pub struct TooManyLetters(pub usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualCondition {
    pub vars: Vec<String>,
    /// Rows where both sides agree, in canonical order.
    pub solutions: Vec<Assignment>,
    /// `f + g + 1`, which is 1 exactly on the solutions.
    pub condition: Poly,
    pub description: String,
}

/// Every assignment under which `f` and `g` take the same value.
pub fn equal_condition(f: &Formula, g: &Formula) -> Result<EqualCondition, TooManyLetters> {
    let vars = joint_letters(f, g);
    if vars.len() > SOLVE_LETTER_LIMIT {
        return Err(TooManyLetters(vars.len()));
    }
    let condition = pbnf(f, Family::Normal).add(&pbnf(g, Family::Normal)).negate();
    let solutions: Vec<Assignment> =
        assignment::rows(&vars).filter(|s| condition.evaluate(s).expect("joint letters cover both sides")).collect();
    let description = describe_condition(&condition, &vars, &solutions);
    Ok(EqualCondition { vars, solutions, condition, description })
}

/// Reads a closed form off the canonical condition polynomial.
fn describe_condition(c: &Poly, vars: &[String], solutions: &[Assignment]) -> String {
    if let Some(b) = c.as_constant() {
        return if b { "always".into() } else { "never".into() };
    }
    let linear: Vec<&str> = c.monomials().filter(|m| m.degree() == 1).flat_map(|m| m.vars()).collect();
    let affine = c.degree() == 1;
    let has_one = c.as_constant().is_none() && c.monomials().any(|m| m.degree() == 0);
    match (affine, linear.as_slice(), has_one) {
        (true, [v], false) => return format!("{v} = 1"),
        (true, [v], true) => return format!("{v} = 0"),
        (true, [v, w], true) => return format!("{v} = {w}"),
        (true, [v, w], false) => return format!("{v} ≠ {w}"),
        _ => {}
    }
    if let [only] = solutions {
        return vars
            .iter()
            .map(|v| format!("{v} = {}", u8::from(only.get(v).unwrap_or(false))))
            .collect::<Vec<_>>()
            .join(", ");
    }
    format!("{c} = 1")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// A bare letter or constant.
    Leaf,
    /// A connective template with child polynomials substituted.
    Apply,
    /// The root family transform.
    Family,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub subformula: String,
    pub template: String,
    pub substituted: String,
    pub result: Poly,
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            StepKind::Leaf => write!(f, "{} ↦ {}", self.subformula, self.result),
            _ => write!(f, "{} ↦ {} = {} = {}", self.subformula, self.template, self.substituted, self.result),
        }
    }
}

/// The substitution steps of [`pbnf`], leaves to root.
pub fn proof_trace(f: &Formula, fam: Family) -> Vec<Step> {
    let mut steps = Vec::new();
    let normal = trace_into(f, &mut steps);
    if steps.is_empty() {
        steps.push(Step {
            kind: StepKind::Leaf,
            subformula: f.to_string(),
            template: normal.to_string(),
            substituted: normal.to_string(),
            result: normal.clone(),
        });
    }
    if fam != Family::Normal {
        let result = fam.from_normal(&normal);
        let substituted = match (fam.complements_inputs(), fam.complements_output()) {
            (true, true) => format!("({normal})[v ↦ v+1]+1"),
            (true, false) => format!("({normal})[v ↦ v+1]"),
            _ => format!("{normal}+1"),
        };
        steps.push(Step {
            kind: StepKind::Family,
            subformula: f.to_string(),
            template: fam.signature().to_string(),
            substituted,
            result,
        });
    }
    steps
}

fn trace_into(f: &Formula, steps: &mut Vec<Step>) -> Poly {
    let (op, children): (OperatorId, Vec<&Formula>) = match f {
        Formula::Atom(name) => return Poly::var(name.clone()),
        Formula::Const(b) => return Poly::constant(*b),
        Formula::Unary(op, c) => ((*op).into(), vec![c]),
        Formula::Binary(op, l, r) => ((*op).into(), vec![l, r]),
    };
    let args: Vec<Poly> = children.into_iter().map(|c| trace_into(c, steps)).collect();
    let template = Template::normal(op);
    let names = ["p", "q"].map(String::from);
    let rendered: BTreeMap<String, String> = names.iter().cloned().zip(args.iter().map(|a| a.to_string())).collect();
    let map: BTreeMap<String, Poly> = names.iter().cloned().zip(args).collect();
    let result = normal_poly(op).substitute(&map);
    steps.push(Step {
        kind: StepKind::Apply,
        subformula: f.to_string(),
        template: template.to_string(),
        substituted: template.render_with(&rendered),
        result: result.clone(),
    });
    result
}
