use super::Poly;
use crate::formula::{BinaryOp, OperatorId};
use std::fmt;

/// A 2×2 matrix of polynomials, multiplied with the ring operations above.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix2(pub [[Poly; 2]; 2]);

impl PolyMatrix2 {
    pub fn new(a: Poly, b: Poly, c: Poly, d: Poly) -> Self {
        PolyMatrix2([[a, b], [c, d]])
    }

    pub fn identity() -> Self {
        Self::new(Poly::one(), Poly::zero(), Poly::zero(), Poly::one())
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.0[row][col]
    }

    pub fn mat_mul(&self, other: &PolyMatrix2) -> PolyMatrix2 {
        let m = &self.0;
        let n = &other.0;
        let entry = |i: usize, j: usize| m[i][0].mul(&n[0][j]).add(&m[i][1].mul(&n[1][j]));
        PolyMatrix2([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    /// Entries rows-first: (1,1), (1,2), (2,1), (2,2).
    pub fn entries(&self) -> [&Poly; 4] {
        [&self.0[0][0], &self.0[0][1], &self.0[1][0], &self.0[1][1]]
    }
}

/// `(a,b,c,d)` rows-first.
impl fmt::Display for PolyMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.entries();
        write!(f, "({a},{b},{c},{d})")
    }
}

/// A truth vector `x₁x₂x₃x₄` laid out as `[[x₁,x₂],[x₃,x₄]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BitMatrix2(pub [[bool; 2]; 2]);

impl BitMatrix2 {
    pub fn from_bits(bits: [bool; 4]) -> Self {
        BitMatrix2([[bits[0], bits[1]], [bits[2], bits[3]]])
    }

    pub fn bits(&self) -> [bool; 4] {
        let m = self.0;
        [m[0][0], m[0][1], m[1][0], m[1][1]]
    }

    /// `[[x₄,x₃],[x₂,x₁]]`: the selectors complemented.
    pub fn mirror(&self) -> Self {
        let [a, b, c, d] = self.bits();
        Self::from_bits([d, c, b, a])
    }

    pub fn complement(&self) -> Self {
        let [a, b, c, d] = self.bits();
        Self::from_bits([!a, !b, !c, !d])
    }

    pub fn transpose(&self) -> Self {
        let m = self.0;
        BitMatrix2([[m[0][0], m[1][0]], [m[0][1], m[1][1]]])
    }

    /// The binary connective with this truth vector.
    pub fn operator(&self) -> BinaryOp {
        let [a, b, c, d] = self.bits();
        BinaryOp::from_bits(u8::from(a) << 3 | u8::from(b) << 2 | u8::from(c) << 1 | u8::from(d))
    }
}

impl fmt::Display for BitMatrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = |x: bool| u8::from(x);
        let m = self.0;
        write!(f, "[[{},{}],[{},{}]]", b(m[0][0]), b(m[0][1]), b(m[1][0]), b(m[1][1]))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{op} has arity {arity}; a matrix needs a binary connective")]
pub struct ArityError {
    pub op: OperatorId,
    pub arity: usize,
}

pub fn op_matrix(op: OperatorId) -> Result<BitMatrix2, ArityError> {
    match op {
        OperatorId::Binary(b) => Ok(BitMatrix2::from_bits(b.truth_bits())),
        other => Err(ArityError { op: other, arity: other.arity() }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::UnaryOp;

    fn poly(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn product_example() {
        let m = PolyMatrix2::new(poly("p"), poly("p"), poly("q"), poly("1"));
        let n = PolyMatrix2::new(poly("q"), poly("p"), poly("p"), poly("1"));
        let expected = PolyMatrix2::new(poly("p(q+1)"), poly("0"), poly("p+q"), poly("pq+1"));
        assert_eq!(m.mat_mul(&n), expected);
        assert_eq!(m.mat_mul(&PolyMatrix2::identity()), m);
    }

    #[test]
    fn idempotent_diagonal() {
        let m = PolyMatrix2::new(poly("p"), poly("0"), poly("0"), poly("p"));
        assert_eq!(m.mat_mul(&m), m);
    }

    #[test]
    fn selector_matrices() {
        let p = op_matrix(BinaryOp::ProjP.into()).unwrap();
        assert_eq!(p, BitMatrix2([[true, true], [false, false]]));
        assert_eq!(p.transpose(), op_matrix(BinaryOp::ProjQ.into()).unwrap());
        assert_eq!(p.transpose().operator(), BinaryOp::ProjQ);
    }

    #[test]
    fn mirror_and_complement() {
        let or = op_matrix(BinaryOp::Or.into()).unwrap();
        assert_eq!(or.complement().mirror().operator(), BinaryOp::And);
        let iff = op_matrix(BinaryOp::Iff.into()).unwrap();
        assert_eq!(iff.mirror(), iff);
        for op in BinaryOp::ALL {
            let m = BitMatrix2::from_bits(op.truth_bits());
            assert_eq!(m.mirror().mirror(), m);
            assert_eq!(m.operator(), op);
        }
    }

    #[test]
    fn arity_mismatch() {
        let err = op_matrix(UnaryOp::Neg.into()).unwrap_err();
        assert_eq!(err.arity, 1);
        assert!(op_matrix(OperatorId::Const(true)).is_err());
    }
}
