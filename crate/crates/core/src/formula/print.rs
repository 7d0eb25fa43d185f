use super::{BinaryOp, Formula, UnaryOp};

/// Glyph set used when printing formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Style {
    Ascii,
    #[default]
    Unicode,
}

impl std::str::FromStr for Style {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ascii" => Ok(Style::Ascii),
            "unicode" => Ok(Style::Unicode),
            other => Err(format!("unknown style {other:?} (expected ascii or unicode)")),
        }
    }
}

pub(crate) fn print(f: &Formula, style: Style) -> String {
    let mut out = String::new();
    write(f, style, &mut out);
    out
}

fn write(f: &Formula, style: Style, out: &mut String) {
    match f {
        Formula::Atom(name) => out.push_str(name),
        Formula::Const(true) => out.push('1'),
        Formula::Const(false) => out.push('0'),
        Formula::Unary(op, child) => {
            out.push_str(match style {
                Style::Ascii => op.ascii(),
                Style::Unicode => op.unicode(),
            });
            // `=`, `-` and `+` only take an atom or a parenthesized operand.
            let wrap = match child.as_ref() {
                Formula::Binary(..) => true,
                Formula::Unary(..) => *op != UnaryOp::Neg,
                _ => false,
            };
            write_maybe_wrapped(child, style, wrap, out);
        }
        Formula::Binary(op, left, right) => {
            let level = op.precedence();
            // Chains stay flat only for a repeated associative connective.
            let wrap_left = matches!(left.as_ref(), Formula::Binary(l, ..)
                if l.precedence() > level || (l.precedence() == level && !(l == op && associative(*op))));
            let wrap_right = matches!(right.as_ref(), Formula::Binary(r, ..) if r.precedence() >= level);
            write_maybe_wrapped(left, style, wrap_left, out);
            out.push(' ');
            out.push_str(glyph(*op, style));
            out.push(' ');
            write_maybe_wrapped(right, style, wrap_right, out);
        }
    }
}

fn write_maybe_wrapped(f: &Formula, style: Style, wrap: bool, out: &mut String) {
    if wrap {
        out.push('(');
        write(f, style, out);
        out.push(')');
    } else {
        write(f, style, out);
    }
}

fn associative(op: BinaryOp) -> bool {
    matches!(op, BinaryOp::And | BinaryOp::Or | BinaryOp::Xor | BinaryOp::Iff | BinaryOp::Top | BinaryOp::Bot)
}

fn glyph(op: BinaryOp, style: Style) -> &'static str {
    match style {
        Style::Ascii => op.ascii(),
        Style::Unicode => op.unicode(),
    }
}
