use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::form::{IntForm, Monomial};
use crate::invariants::binary_discriminant;
use crate::matrix::IntMatrix;
use crate::point::primitive_points;

/// A reduced form `a x^3 + b x^2 y + c y^3` of a binary cubic, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryTriple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    /// `det = 1`, entries bounded by the search bound, `matrix . F` is the
    /// reduced form.
    pub matrix: IntMatrix,
    /// Determinant of the linear system solved for the first column; equals
    /// `3 F(t01, t11) = 3c`.
    pub system_det: BigInt,
}

/// All reduced forms `(a', b', c')` with `c' != 0` of `F = a x^3 + b x^2 y + c y^3`
/// reachable by `T` in `SL(2, Z)` with entries bounded by `bound`.
///
/// The second column `v = (t01, t11)` determines `c' = F(v)`; the first
/// column is then the unique solution of `grad F(v) . u = 0` and
/// `det [u | v] = 1`. Since `T` and `-T` give forms differing by a sign, each
/// result is reported with `c' > 0`. When the discriminant is nonzero, `c'`
/// must divide it, which prunes the candidates.
pub fn enumerate_binary_triples(a: &BigInt, b: &BigInt, c: &BigInt, bound: u32) -> Result<Vec<BinaryTriple>> {
    if c.is_zero() {
        return Err(Error::Precondition("the coefficient of y^3 must be nonzero".into()));
    }
    let f = IntForm::from_terms(
        2,
        [(Monomial::new(0, 0, 0), a.clone()), (Monomial::new(0, 0, 1), b.clone()), (Monomial::new(1, 1, 1), c.clone())],
    )?;
    let disc = binary_discriminant(&f)?;
    let limit = BigInt::from(bound);
    let mut out: BTreeMap<(BigInt, BigInt, BigInt), BinaryTriple> = BTreeMap::new();
    for v in primitive_points(2, bound) {
        let (t01, t11) = (&v.coords()[0], &v.coords()[1]);
        let cv = f.eval(v.coords())?;
        if cv.is_zero() || (!disc.is_zero() && !disc.is_multiple_of(&cv)) {
            continue;
        }
        let sign = BigInt::from(if cv.is_negative() { -1 } else { 1 });
        let (t01, t11, cv) = (t01 * &sign, t11 * &sign, cv * &sign);
        let grad = f.gradient(&[t01.clone(), t11.clone()])?;
        // [[Fx, Fy], [-t11, t01]] (t00, t10)^T = (0, -1)^T
        let system_det = &grad[0] * &t01 + &grad[1] * &t11;
        let (t00, r0) = grad[1].div_rem(&system_det);
        let (t10, r1) = (-&grad[0]).div_rem(&system_det);
        if !r0.is_zero() || !r1.is_zero() || t00.abs() > limit || t10.abs() > limit {
            continue;
        }
        let t = IntMatrix::from_rows(vec![vec![t00, t01], vec![t10, t11]])?;
        let g = f.act(&t)?;
        debug_assert!(g.coeff_of(0, 1, 1).is_zero() && g.coeff_of(1, 1, 1) == cv);
        let key = (g.coeff_of(0, 0, 0), g.coeff_of(0, 0, 1), cv);
        out.entry(key.clone()).or_insert(BinaryTriple { a: key.0, b: key.1, c: key.2, matrix: t, system_det });
    }
    Ok(out.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    fn triples(a: i64, b: i64, c: i64, bound: u32) -> Vec<(i64, i64, i64)> {
        enumerate_binary_triples(&int(a), &int(b), &int(c), bound)
            .unwrap()
            .into_iter()
            .map(|t| {
                let v = |x: BigInt| i64::try_from(x).unwrap();
                (v(t.a), v(t.b), v(t.c))
            })
            .collect()
    }

    #[test]
    fn sum_of_cubes() {
        assert_eq!(triples(1, 0, 1, 50), [(-1, 0, 1), (1, 0, 1)]);
    }

    #[test]
    fn system_determinant_and_divisibility() {
        for t in enumerate_binary_triples(&int(0), &int(1), &int(1), 50).unwrap() {
            assert_eq!(t.system_det, 3 * &t.c);
            assert_eq!(int(-4) % &t.c, int(0));
            let f =
                IntForm::from_terms(2, [(Monomial::new(0, 0, 1), int(1)), (Monomial::new(1, 1, 1), int(1))]).unwrap();
            let g = f.act(&t.matrix).unwrap();
            assert_eq!(g.coeff_of(1, 1, 1), t.c);
        }
    }

    #[test]
    fn zero_c_rejected() {
        assert!(enumerate_binary_triples(&int(1), &int(1), &int(0), 5).is_err());
    }
}
