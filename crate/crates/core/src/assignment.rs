use std::collections::BTreeMap;
use std::fmt;

/// A truth assignment from letter names to bits.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment(BTreeMap<String, bool>);

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, var: &str) -> Option<bool> {
        self.0.get(var).copied()
    }

    pub fn set(&mut self, var: impl Into<String>, value: bool) {
        self.0.insert(var.into(), value);
    }

    pub fn with(mut self, var: impl Into<String>, value: bool) -> Self {
        self.set(var, value);
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Every letter flipped.
    pub fn complemented(&self) -> Self {
        Assignment(self.0.iter().map(|(k, v)| (k.clone(), !v)).collect())
    }
}

impl<S: Into<String>> FromIterator<(S, bool)> for Assignment {
    fn from_iter<I: IntoIterator<Item = (S, bool)>>(iter: I) -> Self {
        Assignment(iter.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }
}

/// `p=1 q=0`
impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}={}", u8::from(*v))?;
        }
        Ok(())
    }
}

/// All assignments over `vars` in canonical row order: the first variable is
/// the most significant and 1 comes before 0, so `(p,q)` yields
/// (1,1), (1,0), (0,1), (0,0).
pub fn rows(vars: &[String]) -> impl Iterator<Item = Assignment> + '_ {
    let n = vars.len();
    (0..1usize << n).map(move |r| row(vars, r))
}

/// The assignment in row `r` of the canonical order.
pub fn row(vars: &[String], r: usize) -> Assignment {
    let n = vars.len();
    vars.iter().enumerate().map(|(j, v)| (v.clone(), (r >> (n - 1 - j)) & 1 == 0)).collect()
}
