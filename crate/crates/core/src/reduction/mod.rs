//! Reduced triples `(a, B, G)`: the normal shape
//! `a x0^3 + x0^2 (sum b_i x_i) + G(x1, .., xn)` reachable by a change of
//! basis, together with searches for them and equivalence tests between them.

mod binary;
mod equivalence;
mod extract;
mod normalize;
mod search;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::form::{IntForm, Monomial};
use crate::matrix::IntMatrix;

pub use binary::{enumerate_binary_triples, BinaryTriple};
pub use equivalence::{triples_equivalent, EquivalenceVerdict};
pub use extract::{point_contraction_extract, point_contractions, PointContraction};
pub use normalize::{normalize_line, LineNormalization};
pub use search::{
    estimate_s, low_rank_points, search_reduced_triples, triple_classes, ClassReport, FoundTriple, LowRankPoint,
    SearchOptions, TripleClass,
};

/// `(a, B, G)` with `B` the raw coefficients of `x0^2 x_i` and `G` a form in
/// the remaining `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReducedTriple {
    pub a: BigInt,
    pub b: Vec<BigInt>,
    pub g: IntForm,
}

impl ReducedTriple {
    pub fn new(a: BigInt, b: Vec<BigInt>, g: IntForm) -> Result<Self> {
        if b.len() != g.nvars() {
            return Err(Error::DimensionMismatch { expected: g.nvars(), found: b.len() });
        }
        Ok(ReducedTriple { a, b, g })
    }

    pub fn n(&self) -> usize {
        self.b.len()
    }

    /// `a x0^3 + x0^2 (sum b_i x_i) + G(x1, .., xn)`.
    pub fn reassemble(&self) -> IntForm {
        let mut f = self.g.shifted(1);
        f.add_term(Monomial::new(0, 0, 0), self.a.clone());
        for (i, b) in self.b.iter().enumerate() {
            f.add_term(Monomial::new(0, 0, i + 1), b.clone());
        }
        f
    }

    /// The triple of `diag(1, M) . reassemble()`: `(a, M^T B, M . G)`.
    ///
    /// This is a right action: `t.transform(M2).transform(M1)` equals
    /// `t.transform(M2 M1)`.
    pub fn transform(&self, m: &IntMatrix) -> Result<ReducedTriple> {
        if m.rows() != self.n() || !m.is_square() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: m.rows() });
        }
        let b = m.transpose().mul_vec(&self.b)?;
        Ok(ReducedTriple { a: self.a.clone(), b, g: self.g.act(m)? })
    }

    pub fn b_content(&self) -> BigInt {
        self.b.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }
}

impl fmt::Display for ReducedTriple {
    /// `(a, (b1,..,bn), G)` with `G` written in the variables after `x0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.b.iter().map(ToString::to_string).collect();
        write!(f, "({}, ({}), {})", self.a, b.join(","), self.g.shifted(1))
    }
}

/// Reads off the triple when `F` already has the reduced shape, i.e. contains
/// no monomial `x0 x_i x_j` with `i, j >= 1`. Never changes coordinates.
pub fn detect_reduced(f: &IntForm) -> Option<ReducedTriple> {
    let n1 = f.nvars();
    if n1 < 2 {
        return None;
    }
    let mut a = BigInt::zero();
    let mut b = vec![BigInt::zero(); n1 - 1];
    let mut g = IntForm::zero(n1 - 1);
    for (m, c) in f.terms() {
        let [i, j, k] = m.indices();
        match m.degree_in(0) {
            3 => a = c.clone(),
            2 => b[k - 1] = c.clone(),
            1 => return None,
            _ => g.add_term(Monomial::new(i - 1, j - 1, k - 1), c.clone()),
        }
    }
    Some(ReducedTriple { a, b, g })
}
