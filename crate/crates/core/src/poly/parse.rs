use super::Poly;

/// Syntax error in polynomial text; `position` is a character offset.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at position {position}")]
pub struct PolyParseError {
    pub message: String,
    pub position: usize,
}

/// Parses `pq+p+1`, `(p+1)(q+1)+1`, `x1*x2 + 1`.
///
/// A variable is one ASCII letter followed by optional digits, so `pq` is
/// the product of `p` and `q` and `x12y` is `x12·y`. Juxtaposition and `*`
/// both multiply; parentheses are allowed.
pub fn parse_poly(input: &str) -> Result<Poly, PolyParseError> {
    let chars: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    // Positions refer to the original text, so keep a map back.
    let offsets: Vec<usize> = input.chars().enumerate().filter(|(_, c)| !c.is_whitespace()).map(|(i, _)| i).collect();
    let mut p = PolyParser { chars, offsets, pos: 0, len: input.chars().count() };
    let out = p.sum()?;
    if p.pos != p.chars.len() {
        return Err(p.error("unexpected character"));
    }
    Ok(out)
}

struct PolyParser {
    chars: Vec<char>,
    offsets: Vec<usize>,
    pos: usize,
    len: usize,
}

impl PolyParser {
    fn error(&self, what: &str) -> PolyParseError {
        let position = self.offsets.get(self.pos).copied().unwrap_or(self.len);
        let message = match self.chars.get(self.pos) {
            Some(c) => format!("{what} {c:?}"),
            None => "unexpected end of input".to_string(),
        };
        PolyParseError { message, position }
    }

    fn sum(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.product()?;
        while self.chars.get(self.pos) == Some(&'+') {
            self.pos += 1;
            acc = acc.add(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Poly, PolyParseError> {
        let mut acc = self.factor()?;
        loop {
            match self.chars.get(self.pos) {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some(c) if c.is_ascii_alphabetic() || *c == '(' || *c == '0' || *c == '1' => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Poly, PolyParseError> {
        match self.chars.get(self.pos).copied() {
            Some('0') => {
                self.pos += 1;
                Ok(Poly::zero())
            }
            Some('1') => {
                self.pos += 1;
                Ok(Poly::one())
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.chars.get(self.pos) != Some(&')') {
                    return Err(self.error("expected ')' but found"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let mut name = String::from(c);
                self.pos += 1;
                while let Some(d) = self.chars.get(self.pos).filter(|d| d.is_ascii_digit()) {
                    name.push(*d);
                    self.pos += 1;
                }
                Ok(Poly::var(name))
            }
            _ => Err(self.error("unexpected character")),
        }
    }
}
