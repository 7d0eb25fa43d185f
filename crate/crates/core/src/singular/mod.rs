//! The four singular operators `=`, `−`, `¬`, `+` as additions of
//! `0`, `v`, `1`, `v+1`, their coordinate-pair readings, and the separate
//! mod-4 model in which a square root of negation exists.

mod table;

pub use table::{
    apply_to_binary, de_morgan_checks, singular_table_diff, BinaryApplication, ClauseCheck, ClauseSource, DiffCell,
    PRINTED_COLUMNS,
};

use crate::formula::UnaryOp;
use crate::poly::Poly;
use crate::Family;
use std::fmt;

/// Singular operators are the unary catalog entries.
pub type SingularOp = UnaryOp;

impl UnaryOp {
    /// Coefficients `(v, 1)` of the added polynomial.
    fn added(self) -> (bool, bool) {
        match self {
            UnaryOp::Id => (false, false),
            UnaryOp::Lower => (true, false),
            UnaryOp::Neg => (false, true),
            UnaryOp::Raise => (true, true),
        }
    }

    fn from_added(coeffs: (bool, bool)) -> UnaryOp {
        match coeffs {
            (false, false) => UnaryOp::Id,
            (true, false) => UnaryOp::Lower,
            (false, true) => UnaryOp::Neg,
            (true, true) => UnaryOp::Raise,
        }
    }

    /// The polynomial this operator adds: `0`, `v`, `1` or `v+1`.
    pub fn added_poly(self, v: &str) -> Poly {
        let (lin, one) = self.added();
        let lin = if lin { Poly::var(v) } else { Poly::zero() };
        lin.add(&Poly::constant(one))
    }

    /// Values of the operator applied to `p`, read at `p = 1` then `p = 0`.
    pub fn pair(self) -> Pair {
        Pair(self.bits())
    }

    /// `self ∘ other`, which adds the two templates.
    pub fn compose(self, other: UnaryOp) -> UnaryOp {
        let (a, b) = self.added();
        let (c, d) = other.added();
        UnaryOp::from_added((a ^ c, b ^ d))
    }
}

/// `a + template(op)` at letter `v`.
pub fn apply_singular(op: SingularOp, a: &Poly, v: &str) -> Poly {
    a.add(&op.added_poly(v))
}

pub fn compose_singular(a: SingularOp, b: SingularOp) -> SingularOp {
    a.compose(b)
}

/// The composition table, each cell shown as the result applied to `p`.
pub fn klein_table() -> [[SingularOp; 4]; 4] {
    UnaryOp::ALL.map(|a| UnaryOp::ALL.map(|b| a.compose(b)))
}

/// How a singular operator reads when applied to the letter `p`.
pub fn on_p(op: SingularOp) -> &'static str {
    match op {
        UnaryOp::Id => "p",
        UnaryOp::Lower => "0",
        UnaryOp::Neg => "¬p",
        UnaryOp::Raise => "1",
    }
}

/// A coordinate pair: the value at `p = 1` (high bit) and at `p = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pair(u8);

impl Pair {
    pub const ALL: [Pair; 4] = [Pair(0b10), Pair(0b00), Pair(0b01), Pair(0b11)];

    pub fn new(first: bool, second: bool) -> Pair {
        Pair(u8::from(first) << 1 | u8::from(second))
    }

    pub fn first(self) -> bool {
        self.0 & 0b10 != 0
    }

    pub fn second(self) -> bool {
        self.0 & 0b01 != 0
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    /// Lowering adds 1 to the first coordinate, raising to the second,
    /// negation to both.
    pub fn act(self, op: SingularOp) -> Pair {
        let mask = match op {
            UnaryOp::Id => 0b00,
            UnaryOp::Lower => 0b10,
            UnaryOp::Raise => 0b01,
            UnaryOp::Neg => 0b11,
        };
        Pair(self.0 ^ mask)
    }

    pub fn negate(self) -> Pair {
        Pair(self.0 ^ 0b11)
    }

    pub fn four_value(self) -> FourValue {
        match self.0 {
            0b11 => FourValue::BigTruth,
            0b10 => FourValue::LittleTruth,
            0b01 => FourValue::LittleLie,
            _ => FourValue::BigLie,
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", u8::from(self.first()), u8::from(self.second()))
    }
}

/// Coordinatewise XOR of operator values.
pub fn value_add(x: Pair, y: Pair) -> Pair {
    Pair(x.0 ^ y.0)
}

/// Adding the values of two operators versus the value of their
/// composition on `p`: `(pair(a) + pair(b), pair(a ∘ b))`.
pub fn value_vs_composition(a: SingularOp, b: SingularOp) -> (Pair, Pair) {
    (value_add(a.pair(), b.pair()), a.compose(b).pair())
}

/// `⟨p₋, pₓ⟩ ∘ ⟨pₓ, p₊⟩`, which is `11` for every `x`.
pub fn inner_identity_check(x: SingularOp) -> Pair {
    let lower = UnaryOp::Lower.pair();
    let raise = UnaryOp::Raise.pair();
    value_add(value_add(lower, x.pair()), value_add(x.pair(), raise))
}

/// `⟨p₋, p₊⟩ ∘ ⟨p₊, p₋⟩` under two readings: pure addition, and with the
/// extra `+1` (as `11`) that appears in the worked line.
pub fn inner_lower_raise_readings() -> (Pair, Pair) {
    let lower = UnaryOp::Lower.pair();
    let raise = UnaryOp::Raise.pair();
    let pure = value_add(value_add(lower, raise), value_add(raise, lower));
    (pure, value_add(pure, Pair(0b11)))
}

/// Labels of the four-valued reading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FourValue {
    BigTruth,
    LittleTruth,
    LittleLie,
    BigLie,
}

impl FourValue {
    pub fn label(self) -> &'static str {
        match self {
            FourValue::BigTruth => "Big Truth",
            FourValue::LittleTruth => "Little Truth",
            FourValue::LittleLie => "Little Lie",
            FourValue::BigLie => "Big Lie",
        }
    }

    pub fn symbol(self) -> char {
        match self {
            FourValue::BigTruth => 'T',
            FourValue::LittleTruth => 't',
            FourValue::LittleLie => 'f',
            FourValue::BigLie => 'F',
        }
    }
}

impl fmt::Display for FourValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One step clockwise on the diamond: `10 → 00 → 01 → 11 → 10`.
pub fn half_flip(x: Pair) -> Pair {
    match x.0 {
        0b10 => Pair(0b00),
        0b00 => Pair(0b01),
        0b01 => Pair(0b11),
        _ => Pair(0b10),
    }
}

/// Residues mod 4: `0` is `=`, `1` is `−`, `2` is `¬`, `3` is `+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Z4Op(u8);

impl Z4Op {
    pub const ALL: [Z4Op; 4] = [Z4Op(0), Z4Op(1), Z4Op(2), Z4Op(3)];

    pub fn new(residue: u8) -> Z4Op {
        Z4Op(residue % 4)
    }

    pub fn residue(self) -> u8 {
        self.0
    }

    pub fn symbol(self) -> &'static str {
        ["=", "−", "¬", "+"][self.0 as usize]
    }

    pub fn is_negation(self) -> bool {
        self.0 == 2
    }
}

impl fmt::Display for Z4Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub fn z4_compose(a: Z4Op, b: Z4Op) -> Z4Op {
    Z4Op((a.0 + b.0) % 4)
}

/// A function on coordinate pairs, listed as images of `10, 00, 01, 11`.
pub type PairMap = [Pair; 4];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DemiReport {
    /// Singular operators with `f ∘ f = ¬`.
    pub singular: Vec<SingularOp>,
    /// All maps on pairs whose square is negation.
    pub pair_maps: Vec<PairMap>,
    /// Residues with `f + f = 2` in the mod-4 model.
    pub z4: Vec<Z4Op>,
}

/// Exhaustive search for square roots of negation in each model.
pub fn demi_negation_search() -> DemiReport {
    let singular = UnaryOp::ALL.into_iter().filter(|f| f.compose(*f) == UnaryOp::Neg).collect();

    let index = |x: Pair| Pair::ALL.iter().position(|&y| y == x).expect("pair");
    let mut pair_maps = Vec::new();
    for code in 0..256u32 {
        let map: PairMap = std::array::from_fn(|i| Pair::ALL[(code >> (2 * i)) as usize & 3]);
        if Pair::ALL.iter().all(|&x| map[index(map[index(x)])] == x.negate()) {
            pair_maps.push(map);
        }
    }

    let z4 = Z4Op::ALL.into_iter().filter(|&f| z4_compose(f, f).is_negation()).collect();
    DemiReport { singular, pair_maps, z4 }
}

/// `|` adds `p+q`, `I` adds `p+q+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SelectorOp {
    Xor,
    Iff,
}

impl SelectorOp {
    pub fn symbol(self) -> &'static str {
        match self {
            SelectorOp::Xor => "|",
            SelectorOp::Iff => "I",
        }
    }

    pub fn apply(self, a: &Poly) -> Poly {
        let pq = Poly::var("p").add(&Poly::var("q"));
        let added = match self {
            SelectorOp::Xor => pq,
            SelectorOp::Iff => pq.negate(),
        };
        a.add(&added)
    }
}

/// A corner of the input-negation diamond: which of `p`, `q` and the
/// constant have been complemented.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Corner {
    pub p: bool,
    pub q: bool,
    pub one: bool,
}

impl Corner {
    /// The family when both inputs agree; mixed corners are not families.
    pub fn family(self) -> Option<Family> {
        match (self.p, self.q, self.one) {
            (false, false, false) => Some(Family::Normal),
            (false, false, true) => Some(Family::Complement),
            (true, true, false) => Some(Family::Pullback),
            (true, true, true) => Some(Family::PullbackComplement),
            _ => None,
        }
    }

    /// Selector rows over the canonical row order, e.g. `p+1: 0011`.
    pub fn selectors(self) -> [(String, [bool; 4]); 2] {
        let row = |name: &str, bits: [bool; 4], flipped: bool| {
            let label = if flipped { format!("{name}+1") } else { name.to_string() };
            (label, bits.map(|b| b ^ flipped))
        };
        [row("p", [true, true, false, false], self.p), row("q", [true, false, true, false], self.q)]
    }
}

impl fmt::Display for Corner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |b: bool| if b { "′" } else { "" };
        write!(f, "g(p{},q{},1{})", mark(self.p), mark(self.q), mark(self.one))
    }
}

/// Complements one slot per step, left to right: `p`, then `q`, then the
/// constant, then around again.
pub fn iterate_family_negation(steps: usize) -> Corner {
    let mut slots = [false; 3];
    for k in 0..steps {
        slots[k % 3] ^= true;
    }
    Corner { p: slots[0], q: slots[1], one: slots[2] }
}
