use super::{BinaryOp, Formula, UnaryOp};

/// A syntax error; `position` counts characters from the start of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("unknown connective {0:?}")]
    UnknownConnective(String),
    #[error("unexpected {0}")]
    Unexpected(String),
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("prefix operator {0:?} must be followed by a letter, constant or parenthesis")]
    PrefixOperand(String),
    #[error("unclosed parenthesis")]
    Unclosed,
}

const KEYWORDS: [(&str, BinaryOp); 8] = [
    ("nand", BinaryOp::Nand),
    ("nor", BinaryOp::Nor),
    ("projp", BinaryOp::ProjP),
    ("projq", BinaryOp::ProjQ),
    ("nprojp", BinaryOp::NprojP),
    ("nprojq", BinaryOp::NprojQ),
    ("top", BinaryOp::Top),
    ("bot", BinaryOp::Bot),
];

pub(crate) fn is_valid_atom(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !KEYWORDS.iter().any(|(k, _)| *k == name)
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Const(bool),
    LParen,
    RParen,
    Bin(BinaryOp),
    Neg,
    Prefix(UnaryOp),
    Prime,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("letter {name:?}"),
            Tok::Const(b) => format!("constant {}", u8::from(*b)),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::Bin(op) => format!("connective {:?}", op.ascii()),
            Tok::Neg => "negation".into(),
            Tok::Prefix(op) => format!("prefix {:?}", op.ascii()),
            Tok::Prime => "\"'\"".into(),
        }
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let starts = |i: usize, s: &str| -> bool {
        let pat: Vec<char> = s.chars().collect();
        chars.len() >= i + pat.len() && chars[i..i + pat.len()] == pat[..]
    };
    while i < chars.len() {
        let c = chars[i];
        let at = i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        // Longest multi-character symbols first.
        let symbols: [(&str, Tok); 5] = [
            ("<->", Tok::Bin(BinaryOp::Iff)),
            ("-/>", Tok::Bin(BinaryOp::Nimp)),
            ("</-", Tok::Bin(BinaryOp::Nconvimp)),
            ("->", Tok::Bin(BinaryOp::Imp)),
            ("<-", Tok::Bin(BinaryOp::Convimp)),
        ];
        if let Some((s, tok)) = symbols.iter().find(|(s, _)| starts(i, s)) {
            out.push((tok.clone(), at));
            i += s.chars().count();
            continue;
        }
        if starts(i, "ι₁") || starts(i, "ι₀") {
            let op = if chars[i + 1] == '₁' { BinaryOp::Top } else { BinaryOp::Bot };
            out.push((Tok::Bin(op), at));
            i += 2;
            continue;
        }
        if c == '=' && chars.get(i + 1).is_some_and(|n| "<>=".contains(*n)) {
            let end = (i..chars.len()).find(|&j| !"<>=".contains(chars[j])).unwrap_or(chars.len());
            return Err(ParseError {
                kind: ParseErrorKind::UnknownConnective(chars[i..end].iter().collect()),
                position: at,
            });
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '&' | '∧' => Tok::Bin(BinaryOp::And),
            '|' | '∨' => Tok::Bin(BinaryOp::Or),
            '^' | '⊕' => Tok::Bin(BinaryOp::Xor),
            '⇒' | '→' => Tok::Bin(BinaryOp::Imp),
            '⇐' | '←' => Tok::Bin(BinaryOp::Convimp),
            '⇔' | '↔' => Tok::Bin(BinaryOp::Iff),
            '⇏' => Tok::Bin(BinaryOp::Nimp),
            '⇍' => Tok::Bin(BinaryOp::Nconvimp),
            '↑' => Tok::Bin(BinaryOp::Nand),
            '↓' => Tok::Bin(BinaryOp::Nor),
            '!' | '~' | '¬' => Tok::Neg,
            '=' => Tok::Prefix(UnaryOp::Id),
            '-' | '−' => Tok::Prefix(UnaryOp::Lower),
            '+' => Tok::Prefix(UnaryOp::Raise),
            '\'' | '′' => Tok::Prime,
            '0' | '1' => {
                if chars.get(i + 1).is_some_and(|n| n.is_ascii_alphanumeric() || *n == '_') {
                    let end = scan_word(&chars, i);
                    let word: String = chars[i..end].iter().collect();
                    return Err(ParseError { kind: ParseErrorKind::UnknownConnective(word), position: at });
                }
                Tok::Const(c == '1')
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let end = scan_word(&chars, i);
                let word: String = chars[i..end].iter().collect();
                i = end;
                let tok = match KEYWORDS.iter().find(|(k, _)| *k == word) {
                    Some((_, op)) => Tok::Bin(*op),
                    None => Tok::Ident(word),
                };
                out.push((tok, at));
                continue;
            }
            _ => {
                let end = (i + 1..chars.len())
                    .find(|&j| chars[j].is_whitespace() || chars[j].is_ascii_alphanumeric() || "()".contains(chars[j]))
                    .unwrap_or(chars.len());
                return Err(ParseError {
                    kind: ParseErrorKind::UnknownConnective(chars[i..end].iter().collect()),
                    position: at,
                });
            }
        };
        out.push((tok, at));
        i += 1;
    }
    Ok(out)
}

fn scan_word(chars: &[char], start: usize) -> usize {
    let mut end = start;
    while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '_') {
        end += 1;
    }
    end
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, at)| *at)
    }

    fn err(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { kind, position: self.here() }
    }

    fn unexpected(&self) -> ParseError {
        match self.peek() {
            Some(t) => self.err(ParseErrorKind::Unexpected(t.describe())),
            None => self.err(ParseErrorKind::UnexpectedEnd),
        }
    }

    fn binary_level(&mut self, level: u8) -> Result<Formula, ParseError> {
        if level == 0 {
            return self.unary();
        }
        let mut left = self.binary_level(level - 1)?;
        while let Some(Tok::Bin(op)) = self.peek() {
            let op = *op;
            if op.precedence() != level {
                break;
            }
            self.pos += 1;
            let right = self.binary_level(level - 1)?;
            left = Formula::binary(op, left, right);
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek() {
            Some(Tok::Neg) => {
                self.pos += 1;
                Ok(Formula::negation(self.unary()?))
            }
            Some(Tok::Prefix(op)) => {
                let op = *op;
                self.pos += 1;
                match self.peek() {
                    Some(Tok::Ident(_) | Tok::Const(_) | Tok::LParen) => Ok(Formula::unary(op, self.postfix()?)),
                    _ => Err(self.err(ParseErrorKind::PrefixOperand(op.ascii().into()))),
                }
            }
            _ => self.postfix(),
        }
    }

    fn postfix(&mut self) -> Result<Formula, ParseError> {
        let mut f = self.primary()?;
        while self.peek() == Some(&Tok::Prime) {
            self.pos += 1;
            f = Formula::negation(f);
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Formula::Atom(name))
            }
            Some(Tok::Const(b)) => {
                self.pos += 1;
                Ok(Formula::Const(b))
            }
            Some(Tok::LParen) => {
                let open = self.here();
                self.pos += 1;
                let inner = self.binary_level(4)?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    None => Err(ParseError { kind: ParseErrorKind::Unclosed, position: open }),
                    Some(_) => Err(self.unexpected()),
                }
            }
            _ => Err(self.unexpected()),
        }
    }
}

/// Parses a formula in the ASCII or Unicode concrete syntax.
///
/// Precedence, tightest first: `!`/prefix, `&`/`nand`, `|`/`nor`, the arrow
/// group (`->`, `<-`, `-/>`, `</-`, projections, `top`, `bot`), then
/// `<->`/`^`. All binary connectives associate to the left.
pub fn parse(input: &str) -> Result<Formula, ParseError> {
    let toks = lex(input)?;
    let mut parser = Parser { toks, pos: 0, end: input.chars().count() };
    let f = parser.binary_level(4)?;
    if parser.pos != parser.toks.len() {
        return Err(parser.unexpected());
    }
    Ok(f)
}
