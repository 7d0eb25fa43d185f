//! The connective catalog: 16 binary connectives, 4 unary ones and the two
//! constants, each keyed by its truth vector.
//!
//! Truth vectors use the row order (1,1),(1,0),(0,1),(0,0), so the vector of
//! a binary connective is its four-digit "number string" (`AND` is `1000`).
//! In the packed `u8` form the first row is the most significant bit.

use std::fmt;

/// A binary connective, identified by its four-row truth vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryOp {
    /// ι₀, the binary contradiction `0000`.
    Bot,
    /// Peirce arrow `0001`.
    Nor,
    /// Converse non-implication `0010`, `¬p ∧ q`.
    Nconvimp,
    /// Negated first projection `0011`.
    NprojP,
    /// Non-implication `0100`, `p ∧ ¬q`.
    Nimp,
    /// Negated second projection `0101`.
    NprojQ,
    /// Exclusive or `0110`.
    Xor,
    /// Sheffer stroke `0111`.
    Nand,
    And,
    Iff,
    /// Second projection `1010`.
    ProjQ,
    Imp,
    /// First projection `1100`.
    ProjP,
    /// Converse implication `1101`.
    Convimp,
    Or,
    /// ι₁, the binary tautology `1111`.
    Top,
}

/// A unary ("singular") connective. Truth vectors have two rows, `p=1` then
/// `p=0`: `=` is `10`, `−` is `00`, `¬` is `01` and `+` is `11`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnaryOp {
    Id,
    Lower,
    Neg,
    Raise,
}

/// Any catalog entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OperatorId {
    Const(bool),
    Unary(UnaryOp),
    Binary(BinaryOp),
}

impl BinaryOp {
    /// All sixteen, ordered by packed truth vector `0000` .. `1111`.
    pub const ALL: [BinaryOp; 16] = [
        BinaryOp::Bot,
        BinaryOp::Nor,
        BinaryOp::Nconvimp,
        BinaryOp::NprojP,
        BinaryOp::Nimp,
        BinaryOp::NprojQ,
        BinaryOp::Xor,
        BinaryOp::Nand,
        BinaryOp::And,
        BinaryOp::Iff,
        BinaryOp::ProjQ,
        BinaryOp::Imp,
        BinaryOp::ProjP,
        BinaryOp::Convimp,
        BinaryOp::Or,
        BinaryOp::Top,
    ];

    /// Packed truth vector; bit 3 is row (1,1), bit 0 is row (0,0).
    pub fn bits(self) -> u8 {
        self as u8
    }

    pub fn from_bits(bits: u8) -> BinaryOp {
        BinaryOp::ALL[usize::from(bits & 0x0f)]
    }

    pub fn eval(self, a: bool, b: bool) -> bool {
        let shift = 2 * u8::from(a) + u8::from(b);
        (self.bits() >> shift) & 1 == 1
    }

    /// Truth vector as bools in row order.
    pub fn truth_bits(self) -> [bool; 4] {
        let b = self.bits();
        [b & 8 != 0, b & 4 != 0, b & 2 != 0, b & 1 != 0]
    }

    /// Number of true rows.
    pub fn weight(self) -> u32 {
        self.bits().count_ones()
    }

    pub fn depends_on_p(self) -> bool {
        (0..2).any(|b| self.eval(true, b == 1) != self.eval(false, b == 1))
    }

    pub fn depends_on_q(self) -> bool {
        (0..2).any(|a| self.eval(a == 1, true) != self.eval(a == 1, false))
    }

    pub fn name(self) -> &'static str {
        match self {
            BinaryOp::Bot => "BOT",
            BinaryOp::Nor => "NOR",
            BinaryOp::Nconvimp => "NCONVIMP",
            BinaryOp::NprojP => "NPROJ_P",
            BinaryOp::Nimp => "NIMP",
            BinaryOp::NprojQ => "NPROJ_Q",
            BinaryOp::Xor => "XOR",
            BinaryOp::Nand => "NAND",
            BinaryOp::And => "AND",
            BinaryOp::Iff => "IFF",
            BinaryOp::ProjQ => "PROJ_Q",
            BinaryOp::Imp => "IMP",
            BinaryOp::ProjP => "PROJ_P",
            BinaryOp::Convimp => "CONVIMP",
            BinaryOp::Or => "OR",
            BinaryOp::Top => "TOP",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            BinaryOp::Bot => "bot",
            BinaryOp::Nor => "nor",
            BinaryOp::Nconvimp => "</-",
            BinaryOp::NprojP => "nprojp",
            BinaryOp::Nimp => "-/>",
            BinaryOp::NprojQ => "nprojq",
            BinaryOp::Xor => "^",
            BinaryOp::Nand => "nand",
            BinaryOp::And => "&",
            BinaryOp::Iff => "<->",
            BinaryOp::ProjQ => "projq",
            BinaryOp::Imp => "->",
            BinaryOp::ProjP => "projp",
            BinaryOp::Convimp => "<-",
            BinaryOp::Or => "|",
            BinaryOp::Top => "top",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            BinaryOp::Bot => "ι₀",
            BinaryOp::Nor => "↓",
            BinaryOp::Nconvimp => "⇍",
            BinaryOp::Nimp => "⇏",
            BinaryOp::Xor => "⊕",
            BinaryOp::Nand => "↑",
            BinaryOp::And => "∧",
            BinaryOp::Iff => "⇔",
            BinaryOp::Imp => "⇒",
            BinaryOp::Convimp => "⇐",
            BinaryOp::Or => "∨",
            BinaryOp::Top => "ι₁",
            BinaryOp::NprojP | BinaryOp::NprojQ | BinaryOp::ProjQ | BinaryOp::ProjP => self.ascii(),
        }
    }

    /// Binding strength in the concrete grammar; 1 binds tightest.
    pub fn precedence(self) -> u8 {
        match self {
            BinaryOp::And | BinaryOp::Nand => 1,
            BinaryOp::Or | BinaryOp::Nor => 2,
            BinaryOp::Iff | BinaryOp::Xor => 4,
            _ => 3,
        }
    }
}

impl UnaryOp {
    pub const ALL: [UnaryOp; 4] = [UnaryOp::Id, UnaryOp::Lower, UnaryOp::Neg, UnaryOp::Raise];

    /// Packed two-row truth vector; bit 1 is the row `p=1`.
    pub fn bits(self) -> u8 {
        match self {
            UnaryOp::Id => 0b10,
            UnaryOp::Lower => 0b00,
            UnaryOp::Neg => 0b01,
            UnaryOp::Raise => 0b11,
        }
    }

    pub fn from_bits(bits: u8) -> UnaryOp {
        match bits & 0b11 {
            0b10 => UnaryOp::Id,
            0b00 => UnaryOp::Lower,
            0b01 => UnaryOp::Neg,
            _ => UnaryOp::Raise,
        }
    }

    pub fn eval(self, a: bool) -> bool {
        (self.bits() >> u8::from(a)) & 1 == 1
    }

    pub fn name(self) -> &'static str {
        match self {
            UnaryOp::Id => "ID",
            UnaryOp::Lower => "LOWER",
            UnaryOp::Neg => "NEG",
            UnaryOp::Raise => "RAISE",
        }
    }

    pub fn ascii(self) -> &'static str {
        match self {
            UnaryOp::Id => "=",
            UnaryOp::Lower => "-",
            UnaryOp::Neg => "!",
            UnaryOp::Raise => "+",
        }
    }

    pub fn unicode(self) -> &'static str {
        match self {
            UnaryOp::Id => "=",
            UnaryOp::Lower => "−",
            UnaryOp::Neg => "¬",
            UnaryOp::Raise => "+",
        }
    }
}

impl OperatorId {
    /// The whole catalog: constants, unary, then binary by truth vector.
    pub const ALL: [OperatorId; 22] = [
        OperatorId::Const(true),
        OperatorId::Const(false),
        OperatorId::Unary(UnaryOp::Id),
        OperatorId::Unary(UnaryOp::Lower),
        OperatorId::Unary(UnaryOp::Neg),
        OperatorId::Unary(UnaryOp::Raise),
        OperatorId::Binary(BinaryOp::Bot),
        OperatorId::Binary(BinaryOp::Nor),
        OperatorId::Binary(BinaryOp::Nconvimp),
        OperatorId::Binary(BinaryOp::NprojP),
        OperatorId::Binary(BinaryOp::Nimp),
        OperatorId::Binary(BinaryOp::NprojQ),
        OperatorId::Binary(BinaryOp::Xor),
        OperatorId::Binary(BinaryOp::Nand),
        OperatorId::Binary(BinaryOp::And),
        OperatorId::Binary(BinaryOp::Iff),
        OperatorId::Binary(BinaryOp::ProjQ),
        OperatorId::Binary(BinaryOp::Imp),
        OperatorId::Binary(BinaryOp::ProjP),
        OperatorId::Binary(BinaryOp::Convimp),
        OperatorId::Binary(BinaryOp::Or),
        OperatorId::Binary(BinaryOp::Top),
    ];

    pub fn arity(self) -> usize {
        match self {
            OperatorId::Const(_) => 0,
            OperatorId::Unary(_) => 1,
            OperatorId::Binary(_) => 2,
        }
    }

    /// Truth vector of length `2^arity`, rows in canonical order.
    pub fn truth_bits(self) -> Vec<bool> {
        match self {
            OperatorId::Const(b) => vec![b],
            OperatorId::Unary(u) => vec![u.eval(true), u.eval(false)],
            OperatorId::Binary(b) => b.truth_bits().to_vec(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OperatorId::Const(true) => "TRUE",
            OperatorId::Const(false) => "FALSE",
            OperatorId::Unary(u) => u.name(),
            OperatorId::Binary(b) => b.name(),
        }
    }

    /// Looks a connective up by canonical name, glyph, or a few common
    /// aliases (`and`, `nand`, `neg`, `⇒`, ...). Case-insensitive for names.
    pub fn lookup(token: &str) -> Option<OperatorId> {
        let t = token.trim();
        for op in OperatorId::ALL {
            if op.name().eq_ignore_ascii_case(t) {
                return Some(op);
            }
        }
        let lower = t.to_ascii_lowercase();
        let found = match lower.as_str() {
            "1" | "true" | "verum" => OperatorId::Const(true),
            "0" | "false" | "falsum" => OperatorId::Const(false),
            "not" | "!" | "~" | "¬" | "'" => OperatorId::Unary(UnaryOp::Neg),
            "=" | "identity" => OperatorId::Unary(UnaryOp::Id),
            "-" | "−" => OperatorId::Unary(UnaryOp::Lower),
            "+" => OperatorId::Unary(UnaryOp::Raise),
            "&" | "∧" => OperatorId::Binary(BinaryOp::And),
            "|" | "∨" => OperatorId::Binary(BinaryOp::Or),
            "->" | "⇒" | "→" | "implies" => OperatorId::Binary(BinaryOp::Imp),
            "<-" | "⇐" | "←" => OperatorId::Binary(BinaryOp::Convimp),
            "<->" | "⇔" | "↔" => OperatorId::Binary(BinaryOp::Iff),
            "^" | "⊕" => OperatorId::Binary(BinaryOp::Xor),
            "↑" => OperatorId::Binary(BinaryOp::Nand),
            "↓" => OperatorId::Binary(BinaryOp::Nor),
            "-/>" | "⇏" => OperatorId::Binary(BinaryOp::Nimp),
            "</-" | "⇍" => OperatorId::Binary(BinaryOp::Nconvimp),
            "ι₁" | "iota1" => OperatorId::Binary(BinaryOp::Top),
            "ι₀" | "iota0" => OperatorId::Binary(BinaryOp::Bot),
            _ => return BinaryOp::ALL.into_iter().find(|b| b.ascii() == lower).map(OperatorId::Binary),
        };
        Some(found)
    }
}

impl From<BinaryOp> for OperatorId {
    fn from(op: BinaryOp) -> Self {
        OperatorId::Binary(op)
    }
}

impl From<UnaryOp> for OperatorId {
    fn from(op: UnaryOp) -> Self {
        OperatorId::Unary(op)
    }
}

impl fmt::Display for BinaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for UnaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for OperatorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
