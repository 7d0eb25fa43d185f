//! Clone closure over a set of connectives, completeness verdicts, and
//! synthesis of formulas over a restricted basis.

use crate::families::normal_poly;
use crate::formula::{BinaryOp, Formula, OperatorId, Style};
use crate::poly::Poly;
use crate::semantics::{poly_to_vector, TruthVector};
use crate::transform::pbnf;
use crate::Family;
use std::collections::BTreeMap;

const P: u8 = 0b1100;
const Q: u8 = 0b1010;

/// Applies `op` to packed two-letter truth vectors.
fn apply_bits(op: OperatorId, args: &[u8]) -> u8 {
    (0..4).fold(0u8, |acc, k| {
        let arg = |i: usize| (args[i] >> k) & 1 == 1;
        let value = match op {
            OperatorId::Const(b) => b,
            OperatorId::Unary(u) => u.eval(arg(0)),
            OperatorId::Binary(b) => b.eval(arg(0), arg(1)),
        };
        acc | u8::from(value) << k
    })
}

fn shortlex(f: &Formula) -> (usize, String) {
    let s = f.to_string_styled(Style::Ascii);
    (s.len(), s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureResult {
    /// Minimal-depth witness for each reached packed vector.
    pub witnesses: BTreeMap<u8, Formula>,
    /// The round in which each vector was first reached; seeds are round 0.
    pub depths: BTreeMap<u8, usize>,
    /// Rounds that reached something new.
    pub generations: usize,
    pub complete: bool,
}

impl ClosureResult {
    pub fn contains(&self, bits: u8) -> bool {
        self.witnesses.contains_key(&bits)
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn witness(&self, bits: u8) -> Option<&Formula> {
        self.witnesses.get(&bits)
    }

    pub fn reached(&self) -> Vec<TruthVector> {
        self.witnesses.keys().map(|&b| TruthVector::binary(b)).collect()
    }

    /// Unreached vectors, in descending packed order.
    pub fn missing(&self) -> Vec<TruthVector> {
        (0..16u8).rev().filter(|b| !self.contains(*b)).map(TruthVector::binary).collect()
    }
}

/// Every binary function generated by `ops` over the projections `p`, `q`
/// (and the constants when `include_constants`).
pub fn closure(ops: &[OperatorId], include_constants: bool) -> ClosureResult {
    closure_capped(ops, include_constants, None)
}

/// [`closure`] stopped after `max_rounds` rounds.
pub fn closure_capped(ops: &[OperatorId], include_constants: bool, max_rounds: Option<usize>) -> ClosureResult {
    let mut witnesses = BTreeMap::new();
    let mut depths = BTreeMap::new();
    witnesses.insert(P, Formula::Atom("p".into()));
    witnesses.insert(Q, Formula::Atom("q".into()));
    if include_constants {
        witnesses.insert(0b0000, Formula::Const(false));
        witnesses.insert(0b1111, Formula::Const(true));
    }
    for &b in witnesses.keys() {
        depths.insert(b, 0);
    }

    let mut generations = 0;
    let mut round = 0;
    while max_rounds.is_none_or(|cap| round < cap) && witnesses.len() < 16 {
        round += 1;
        let known: Vec<(u8, Formula)> = witnesses.iter().map(|(b, f)| (*b, f.clone())).collect();
        let mut found: BTreeMap<u8, Formula> = BTreeMap::new();
        let mut offer = |bits: u8, f: Formula| {
            if witnesses.contains_key(&bits) {
                return;
            }
            match found.get(&bits) {
                Some(best) if shortlex(best) <= shortlex(&f) => {}
                _ => {
                    found.insert(bits, f);
                }
            }
        };
        for &op in ops {
            match op.arity() {
                0 => offer(apply_bits(op, &[]), Formula::apply(op, vec![]).expect("arity 0")),
                1 => {
                    for (a, fa) in &known {
                        offer(apply_bits(op, &[*a]), Formula::apply(op, vec![fa.clone()]).expect("arity 1"));
                    }
                }
                _ => {
                    for (a, fa) in &known {
                        for (b, fb) in &known {
                            let f = Formula::apply(op, vec![fa.clone(), fb.clone()]).expect("arity 2");
                            offer(apply_bits(op, &[*a, *b]), f);
                        }
                    }
                }
            }
        }
        if found.is_empty() {
            break;
        }
        generations = round;
        for (bits, f) in found {
            depths.insert(bits, round);
            witnesses.insert(bits, f);
        }
    }
    let complete = witnesses.len() == 16;
    ClosureResult { witnesses, depths, generations, complete }
}

pub fn is_complete(ops: &[OperatorId]) -> bool {
    closure(ops, false).complete
}

pub fn which_missing(ops: &[OperatorId]) -> Vec<TruthVector> {
    closure(ops, false).missing()
}

/// Whether `p op p` reduces to `p + 1`.
///
/// Besides `↑` and `↓` this also holds for the negated projections, which
/// ignore one argument.
pub fn collapses_to_negation(op: BinaryOp) -> bool {
    let collapsed = normal_poly(op.into()).substitute_pairs([("q", Poly::var("p"))]);
    collapsed == Poly::var("p").negate()
}

/// Whether `op` is a genuine two-place connective that yields `¬p` on a
/// repeated argument. True exactly for `↑` and `↓`.
pub fn self_negation_test(op: BinaryOp) -> bool {
    op.depends_on_p() && op.depends_on_q() && collapses_to_negation(op)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SynthError {
    #[error("no connectives allowed")]
    EmptyBasis,
    #[error("synthesis targets must be over p and q, found {0:?}")]
    Letters(Vec<String>),
    #[error("{target} is not generated by the basis at any depth")]
    Incomplete { target: TruthVector },
    #[error("{target} needs depth {needed}, beyond the cap of {cap}")]
    DepthCapped { target: TruthVector, needed: usize, cap: usize },
}

/// A minimal-depth formula over `allowed` with the same polynomial as `target`.
pub fn synthesize(
    target: &Poly,
    allowed: &[OperatorId],
    depth_cap: usize,
    include_constants: bool,
) -> Result<Formula, SynthError> {
    if allowed.is_empty() {
        return Err(SynthError::EmptyBasis);
    }
    let vars: Vec<String> = target.variables().into_iter().collect();
    if vars.iter().any(|v| v != "p" && v != "q") {
        return Err(SynthError::Letters(vars));
    }
    let pq = ["p".to_string(), "q".to_string()];
    let target = poly_to_vector(target, &pq).expect("letters checked above");
    let bits = target.packed();
    let capped = closure_capped(allowed, include_constants, Some(depth_cap));
    if let Some(f) = capped.witness(bits) {
        return Ok(f.clone());
    }
    let full = closure(allowed, include_constants);
    match full.depths.get(&bits) {
        Some(&needed) => Err(SynthError::DepthCapped { target, needed, cap: depth_cap }),
        None => Err(SynthError::Incomplete { target }),
    }
}

/// [`synthesize`] for a formula target.
pub fn synthesize_formula(
    target: &Formula,
    allowed: &[OperatorId],
    depth_cap: usize,
    include_constants: bool,
) -> Result<Formula, SynthError> {
    synthesize(&pbnf(target, Family::Normal), allowed, depth_cap, include_constants)
}
