//! Shared test support: printed reference tables, independent oracles and
//! random formula generators.
#![allow(dead_code)]

use pbnf::assignment;
use pbnf::{BinaryOp, Family, Formula, Monomial, Poly, UnaryOp};
use proptest::prelude::*;
use rand::Rng;

pub const FAMILIES: [Family; 4] = Family::ALL;

/// One row of the complete printed table: label, statement (ASCII), the
/// binary connective it names if any, and the cells for Normal,
/// Complement, Pullback and PullbackComplement.
pub struct PrintedRow {
    pub label: &'static str,
    pub statement: &'static str,
    pub op: Option<BinaryOp>,
    pub cells: [&'static str; 4],
}

const fn row(
    label: &'static str,
    statement: &'static str,
    op: Option<BinaryOp>,
    cells: [&'static str; 4],
) -> PrintedRow {
    PrintedRow { label, statement, op, cells }
}

/// The complete four-family table as printed, with `x′` written `x+1`.
pub const COMPLETE_TABLE: [PrintedRow; 19] = [
    row("p", "p", Some(BinaryOp::ProjP), ["p", "p+1", "p+1", "p"]),
    row("p′", "p nprojp q", Some(BinaryOp::NprojP), ["p+1", "p", "p", "p+1"]),
    row("q", "q", Some(BinaryOp::ProjQ), ["q", "q+1", "q+1", "q"]),
    row("q′", "p nprojq q", Some(BinaryOp::NprojQ), ["q+1", "q", "q", "q+1"]),
    row("¬p", "!p", None, ["p+1", "p", "p", "p+1"]),
    row("p ∨ q", "p | q", Some(BinaryOp::Or), ["(p+1)(q+1)+1", "(p+1)(q+1)", "pq+1", "pq"]),
    row("p ∧ q", "p & q", Some(BinaryOp::And), ["pq", "pq+1", "(p+1)(q+1)", "(p+1)(q+1)+1"]),
    row("p ⇒ q", "p -> q", Some(BinaryOp::Imp), ["p(q+1)+1", "p(q+1)", "(p+1)q+1", "(p+1)q"]),
    row("p ⇏ q", "p -/> q", Some(BinaryOp::Nimp), ["p(q+1)", "p(q+1)+1", "(p+1)q", "(p+1)q+1"]),
    row("¬p ⇒ ¬q", "!p -> !q", None, ["(p+1)q+1", "(p+1)q", "p(q+1)+1", "p(q+1)"]),
    row("p ⇐ q", "p <- q", Some(BinaryOp::Convimp), ["(p+1)q+1", "(p+1)q", "p(q+1)+1", "p(q+1)"]),
    row("p ⇍ q", "p </- q", Some(BinaryOp::Nconvimp), ["(p+1)q", "(p+1)q+1", "p(q+1)", "p(q+1)+1"]),
    row("¬p ⇐ ¬q", "!p <- !q", None, ["p(q+1)+1", "p(q+1)", "(p+1)q+1", "(p+1)q"]),
    row("p ↓ q", "p nor q", Some(BinaryOp::Nor), ["(p+1)(q+1)", "(p+1)(q+1)+1", "pq", "pq+1"]),
    row("p ↑ q", "p nand q", Some(BinaryOp::Nand), ["pq+1", "pq", "(p+1)(q+1)+1", "(p+1)(q+1)"]),
    row("p ⇔ q", "p <-> q", Some(BinaryOp::Iff), ["p+q+1", "p+q", "p+q+1", "p+q"]),
    row("p ⊕ q", "p ^ q", Some(BinaryOp::Xor), ["p+q", "p+q+1", "p+q", "p+q+1"]),
    row("ι₁", "p top q", Some(BinaryOp::Top), ["(p+1)pq+1", "(p+1)pq", "p(p+1)(q+1)+1", "p(p+1)(q+1)"]),
    row("ι₀", "p bot q", Some(BinaryOp::Bot), ["(p+1)pq", "(p+1)pq+1", "p(p+1)(q+1)+1", "p(p+1)(q+1)"]),
];

/// Cells of [`COMPLETE_TABLE`] that disagree with the transforms:
/// (row label, family).
pub const COMPLETE_TABLE_TYPOS: [(&str, Family); 2] = [("ι₀", Family::Pullback), ("ι₀", Family::PullbackComplement)];

/// The separate Pullback / PullbackComplement listing.
pub const PULLBACK_LISTING: [(&str, [&str; 2]); 11] = [
    ("p", ["p+1", "p+1"]),
    ("q", ["q+1", "q+1"]),
    ("!p", ["p", "p+1"]),
    ("p & q", ["(p+1)(q+1)", "(p+1)(q+1)+1"]),
    ("p | q", ["pq+1", "pq"]),
    ("p -> q", ["(p+1)q+1", "(p+1)q"]),
    ("!p -> !q", ["(p+1)q+1", "p(q+1)"]),
    ("p <- q", ["p(q+1)+1", "p(q+1)"]),
    ("!p <- !q", ["(p+1)q+1", "(p+1)q"]),
    ("p <-> q", ["(p+q)+1", "p+q"]),
    ("p nand q", ["(p+1)(q+1)+1", "(p+1)(q+1)"]),
];

/// Cells of [`PULLBACK_LISTING`] that disagree: (statement, family).
pub const PULLBACK_LISTING_TYPOS: [(&str, Family); 3] =
    [("p", Family::PullbackComplement), ("q", Family::PullbackComplement), ("!p -> !q", Family::Pullback)];

/// The Complement listing.
pub const COMPLEMENT_LISTING: [(&str, &str); 7] = [
    ("p & q", "pq+1"),
    ("p", "p+1"),
    ("!p", "p"),
    ("p | q", "(p+1)(q+1)"),
    ("p -> q", "p(q+1)"),
    ("p <-> q", "p+q"),
    ("p ^ q", "pq"),
];

pub const COMPLEMENT_LISTING_TYPOS: [&str; 1] = ["p ^ q"];

pub fn f(s: &str) -> Formula {
    pbnf::parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn poly(s: &str) -> Poly {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// Interpolation oracle: the sum, over true rows, of the product of `v` or
/// `v+1` per letter. Shares nothing with the library's transform.
pub fn interpolate(bits: &[bool], vars: &[String]) -> Poly {
    let mut acc = Poly::zero();
    for (r, &bit) in bits.iter().enumerate() {
        if !bit {
            continue;
        }
        let row = assignment::row(vars, r);
        let mut term = Poly::one();
        for v in vars {
            let x = Poly::var(v.clone());
            let factor = if row.get(v).unwrap() { x } else { x.add(&Poly::one()) };
            term = term.mul(&factor);
        }
        acc = acc.add(&term);
    }
    acc
}

/// Truth table by direct recursion on the syntax tree.
pub fn brute_force(f: &Formula, vars: &[String]) -> Vec<bool> {
    assignment::rows(vars).map(|s| pbnf::eval_formula(f, &s).unwrap()).collect()
}

const BINARY: [BinaryOp; 16] = BinaryOp::ALL;
const UNARY: [UnaryOp; 4] = UnaryOp::ALL;

/// A random formula over at most `letters` letters with depth at most
/// `depth`, drawing from the whole catalog.
pub fn random_formula<R: Rng>(rng: &mut R, letters: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return if rng.gen_ratio(1, 10) {
            Formula::Const(rng.gen())
        } else {
            Formula::Atom(letters[rng.gen_range(0..letters.len())].to_string())
        };
    }
    if rng.gen_ratio(1, 4) {
        let op = UNARY[rng.gen_range(0..UNARY.len())];
        Formula::unary(op, random_formula(rng, letters, depth - 1))
    } else {
        let op = BINARY[rng.gen_range(0..BINARY.len())];
        Formula::binary(op, random_formula(rng, letters, depth - 1), random_formula(rng, letters, depth - 1))
    }
}

pub fn arb_formula(letters: &'static [&'static str], depth: u32) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        4 => proptest::sample::select(letters).prop_map(|l| Formula::Atom(l.to_string())),
        1 => any::<bool>().prop_map(Formula::Const),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            (proptest::sample::select(UNARY.to_vec()), inner.clone()).prop_map(|(op, c)| Formula::unary(op, c)),
            (proptest::sample::select(BINARY.to_vec()), inner.clone(), inner)
                .prop_map(|(op, l, r)| Formula::binary(op, l, r)),
        ]
    })
}

pub fn arb_poly(letters: &'static [&'static str]) -> impl Strategy<Value = Poly> {
    let monomial = proptest::sample::subsequence(letters.to_vec(), 0..=letters.len())
        .prop_map(|vs| vs.into_iter().collect::<Monomial>());
    proptest::collection::vec(monomial, 0..8).prop_map(Poly::from_monomials)
}
