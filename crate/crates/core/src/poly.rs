//! Sparse multivariate integer polynomials, used for symbolic Hessian
//! determinants.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(vec![0; nvars], BigInt::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    fn add_term(&mut self, exp: Vec<u8>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// `self += sign * other * (sum_i lin[i] x_i)`.
    pub fn add_mul_linear(&mut self, other: &Polynomial, lin: &[BigInt], negate: bool) {
        for (exp, c) in &other.terms {
            for (i, l) in lin.iter().enumerate() {
                if l.is_zero() {
                    continue;
                }
                let mut e = exp.clone();
                e[i] += 1;
                let v = c * l;
                self.add_term(e, if negate { -v } else { v });
            }
        }
    }

    pub fn eval(&self, p: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .map(|(exp, c)| {
                exp.iter().zip(p).fold(c.clone(), |acc, (&e, x)| acc * num_traits::pow(x.clone(), e as usize))
            })
            .sum()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&d| d as usize).sum()).max()
    }
}

/// Determinant of a square matrix of linear forms, where `m[r][c]` is the
/// coefficient vector of entry `(r, c)` in `nvars` variables.
///
/// Expands over permutations by dynamic programming on the set of used
/// columns, so the cost is `2^n` partial sums rather than `n!` products.
pub fn linear_matrix_det(m: &[Vec<Vec<BigInt>>], nvars: usize) -> Polynomial {
    let n = m.len();
    let mut layer: BTreeMap<u32, Polynomial> = BTreeMap::new();
    layer.insert(0, Polynomial::one(nvars));
    for row in m {
        let mut next: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (mask, poly) in &layer {
            if poly.is_zero() {
                continue;
            }
            for (c, entry) in row.iter().enumerate() {
                if mask & (1 << c) != 0 || entry.iter().all(Zero::is_zero) {
                    continue;
                }
                // inversions added by placing column c after the used ones
                let negate = (mask >> (c + 1)).count_ones() % 2 == 1;
                next.entry(mask | (1 << c))
                    .or_insert_with(|| Polynomial::zero(nvars))
                    .add_mul_linear(poly, entry, negate);
            }
        }
        layer = next;
    }
    layer.remove(&((1u32 << n) - 1)).unwrap_or_else(|| Polynomial::zero(nvars))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // highest terms first for readability
        for (n, (exp, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let vars: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{i}") } else { format!("x{i}^{e}") })
                .collect();
            let abs = c.abs();
            match (vars.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => f.write_str(&vars.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", vars.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, ints};

    #[test]
    fn det_of_diagonal_linear_matrix() {
        // diag(x0, 2 x1, 3 x2)
        let z = ints(&[0, 0, 0]);
        let m = vec![
            vec![ints(&[1, 0, 0]), z.clone(), z.clone()],
            vec![z.clone(), ints(&[0, 2, 0]), z.clone()],
            vec![z.clone(), z.clone(), ints(&[0, 0, 3])],
        ];
        let d = linear_matrix_det(&m, 3);
        assert_eq!(d.num_terms(), 1);
        assert_eq!(d.eval(&ints(&[1, 1, 1])), int(6));
        assert_eq!(d.degree(), Some(3));
    }

    #[test]
    fn det_sign_of_antidiagonal() {
        // [[0, x0], [x1, 0]] has det -x0 x1
        let m = vec![vec![ints(&[0, 0]), ints(&[1, 0])], vec![ints(&[0, 1]), ints(&[0, 0])]];
        let d = linear_matrix_det(&m, 2);
        assert_eq!(d.eval(&ints(&[2, 3])), int(-6));
        assert_eq!(d.to_string(), "-x0*x1");
    }
}
