//! Explicit families: the Pell-equation family of reduced forms of a nodal
//! cubic, and the double blow-up of `P^3` along two lines.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::form::{build_from_intersections, parse_form, IntForm, Monomial, TrilinearForm};
use crate::invariants::{singular_point_search, ternary_discriminant};
use crate::matrix::IntMatrix;
use crate::point::PointProj;

/// A solution of `s^2 - 3 t^2 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSolution {
    pub s: BigInt,
    pub t: BigInt,
}

/// The first `count` nonnegative solutions, from `(1, 0)` by
/// `(s, t) -> (2s + 3t, s + 2t)`.
pub fn pell_solutions(count: usize) -> Vec<PellSolution> {
    let mut out = Vec::with_capacity(count);
    let (mut s, mut t) = (BigInt::one(), BigInt::zero());
    for _ in 0..count {
        debug_assert!(&s * &s - 3 * &t * &t == BigInt::one());
        out.push(PellSolution { s: s.clone(), t: t.clone() });
        let next = (2 * &s + 3 * &t, &s + 2 * &t);
        (s, t) = next;
    }
    out
}

/// `a x^3 + b x^2 y + x^2 z - 3 y^2 z`; singular at `[0, 0, 1]`.
pub fn pell_form(a: &BigInt, b: &BigInt) -> IntForm {
    let mut f = IntForm::zero(3);
    f.add_term(Monomial::new(0, 0, 0), a.clone());
    f.add_term(Monomial::new(0, 0, 1), b.clone());
    f.add_term(Monomial::new(0, 0, 2), BigInt::one());
    f.add_term(Monomial::new(1, 1, 2), BigInt::from(-3));
    f
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellMember {
    pub solution: PellSolution,
    pub matrix: IntMatrix,
    /// Coefficient of `X^3` in `M . F`.
    pub a: BigInt,
    /// Coefficient of `X^2 Y` in `M . F`.
    pub b: BigInt,
}

/// For each Pell solution `(al, be)`, the matrix
/// `[[al, 3be, 0], [be, al, 0], [m31, m32, 1]]` with
/// `m31 = be (3b be^2 + 9a al be + 2b al^2)` and `m32 = 3 be^2 (3a be + b al)`
/// carries `pell_form(a, b)` to `A X^3 + B X^2 Y + X^2 Z - 3 Y^2 Z`.
///
/// Both the determinant and the transformed form are checked; a mismatch is
/// an internal error.
pub fn pell_family(a: &BigInt, b: &BigInt, count: usize) -> Result<Vec<PellMember>> {
    let f = pell_form(a, b);
    pell_solutions(count)
        .into_iter()
        .map(|sol| {
            let (al, be) = (&sol.s, &sol.t);
            let m31 = be * (3 * b * be * be + 9 * a * al * be + 2 * b * al * al);
            let m32 = 3 * be * be * (3 * a * be + b * al);
            let z = BigInt::zero;
            let matrix = IntMatrix::from_rows(vec![
                vec![al.clone(), 3 * be, z()],
                vec![be.clone(), al.clone(), z()],
                vec![m31, m32, BigInt::one()],
            ])?;
            let big_a = 3 * b * al * al * be + 3 * b * be * be * be + a * al * al * al + 9 * a * al * be * be;
            let big_b = 9 * a * be * be * be + 9 * b * al * be * be + 9 * a * al * al * be + b * al * al * al;
            if !matrix.det()?.is_one() {
                return Err(Error::Internal(format!("Pell matrix {matrix} does not have determinant 1")));
            }
            let moved = f.act(&matrix)?;
            if moved != pell_form(&big_a, &big_b) {
                return Err(Error::Internal(format!("M . F = {moved} does not match A = {big_a}, B = {big_b}")));
            }
            Ok(PellMember { solution: sol, matrix, a: big_a, b: big_b })
        })
        .collect()
}

/// Staged data of the double blow-up of `P^3`: first along a line `C`, then
/// along the strict transform of a second line meeting `C` once.
#[derive(Clone, Debug)]
pub struct BlowupFixture {
    /// Intersection form in the basis `(H, E)`.
    pub h_basis_form: IntForm,
    /// Columns `L1 = H`, `L2 = H - E` in `(H, E)` coordinates.
    pub stage1_basis: Vec<Vec<BigInt>>,
    /// Intersection form in `(L1, L2)`, built from `L1^3 = L1^2 L2 = 1`,
    /// `L1 L2^2 = L2^3 = 0`.
    pub stage1_form: IntForm,
    /// Inputs of the second blow-up: genus, `E^3`, and `beta_i . D`.
    pub stage2_genus: u32,
    pub stage2_e3: BigInt,
    pub stage2_beta_dot_c: Vec<BigInt>,
    pub stage2_form: IntForm,
    /// Singular points of `{stage2_form = 0}` in the box of radius 3.
    pub stage2_singular_points: Vec<PointProj>,
}

pub fn example_blowup_p3() -> Result<BlowupFixture> {
    // H^3 = 1, H^2 E = 0, H E^2 = -1, E^3 = -2
    let h_basis = TrilinearForm::symmetric(2, &[((0, 0, 0), 1), ((0, 0, 1), 0), ((0, 1, 1), -1), ((1, 1, 1), -2)]);
    let h_basis_form = build_from_intersections(&h_basis)?;
    let stage1_basis = vec![crate::coeff::ints(&[1, 0]), crate::coeff::ints(&[1, -1])];
    let restricted = h_basis_form.restrict(&stage1_basis)?;
    let l_basis = TrilinearForm::symmetric(2, &[((0, 0, 0), 1), ((0, 0, 1), 1)]);
    let stage1_form = build_from_intersections(&l_basis)?;
    if restricted != stage1_form {
        return Err(Error::Internal(format!("restriction gave {restricted}, expected {stage1_form}")));
    }
    let stage2_e3 = BigInt::one();
    let stage2_beta_dot_c = crate::coeff::ints(&[1, 1]);
    let stage2_form = crate::mmp::blowup_form(&stage1_form, &stage2_e3, &stage2_beta_dot_c)?;
    let printed = parse_form("x^3 - 3*x^2*y - 3*x^2*z + y^3 + 3*y^2*z")?;
    if stage2_form != printed {
        return Err(Error::Internal(format!("second blow-up gave {stage2_form}")));
    }
    if !ternary_discriminant(&stage2_form)?.is_zero() {
        return Err(Error::Internal("second-stage discriminant is nonzero".into()));
    }
    let stage2_singular_points = singular_point_search(&stage2_form, 3);
    Ok(BlowupFixture {
        h_basis_form,
        stage1_basis,
        stage1_form,
        stage2_genus: 0,
        stage2_e3,
        stage2_beta_dot_c,
        stage2_form,
        stage2_singular_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    #[test]
    fn pell_recurrence() {
        let s = pell_solutions(4);
        let pairs: Vec<(BigInt, BigInt)> = s.into_iter().map(|p| (p.s, p.t)).collect();
        assert_eq!(pairs, [(int(1), int(0)), (int(2), int(1)), (int(7), int(4)), (int(26), int(15))]);
    }

    #[test]
    fn pell_family_values() {
        let fam = pell_family(&int(0), &int(1), 2).unwrap();
        assert!(fam[0].matrix.is_identity());
        assert_eq!((fam[0].a.clone(), fam[0].b.clone()), (int(0), int(1)));
        assert_eq!(fam[1].matrix, IntMatrix::from_i64_rows(&[&[2, 3, 0], &[1, 2, 0], &[11, 6, 1]]).unwrap());
        assert_eq!((fam[1].a.clone(), fam[1].b.clone()), (int(15), int(26)));
        let fam = pell_family(&int(1), &int(0), 2).unwrap();
        assert_eq!((fam[1].a.clone(), fam[1].b.clone()), (int(26), int(45)));
    }

    #[test]
    fn fixture() {
        let fx = example_blowup_p3().unwrap();
        assert_eq!(fx.stage1_form.to_string(), "x^3 + 3*x^2*y");
        assert_eq!(fx.stage2_singular_points, [PointProj::from_i64(&[0, 0, 1]).unwrap()]);
    }
}
