//! Propositional formulas compiled to canonical multilinear polynomials over
//! GF(2), read in four dual families.
//!
//! ```
//! use pbnf::{parse, pbnf, Family};
//!
//! let f = parse("!(p -> !q)").unwrap();
//! assert_eq!(pbnf(&f, Family::Normal).to_string(), "pq");
//! ```

pub mod assignment;
pub mod basis;
pub mod families;
pub mod formula;
pub mod poly;
pub mod semantics;
pub mod singular;
pub mod transform;

pub use assignment::Assignment;
pub use families::{fiber, op_poly, to_family, Family, Fiber, Reading, Template};
pub use formula::{parse, BinaryOp, Formula, OperatorId, ParseError, ParseErrorKind, Style, UnaryOp};
pub use poly::{parse_poly, Monomial, Poly};
pub use semantics::{eval_formula, poly_to_vector, truth_vector, vector_to_poly, TruthVector};
pub use transform::{classify, equal_condition, equivalent, pbnf, proof_trace, Class, Verdict};
