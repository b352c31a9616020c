//! Discriminants and classical invariants of binary and ternary cubics.
//!
//! The ternary invariants `S` (degree 4) and `T` (degree 6) are normalized so
//! that on `a x^3 + x^2 (b y + c z) + d y^3 + z^3` they take the values
//! `S = d b c` and `T = 27 a^2 d^2 + 4 b^3 d + 4 c^3 d^2`. With this
//! normalization they are rational, not integral, on general integer forms
//! (`x y z` has `S = 1/144`), so they are returned as exact rationals.

mod tables;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::form::{IntForm, Monomial};
use crate::point::{primitive_points, PointProj};

/// Discriminant `q^2 r^2 - 4 p r^3 - 4 q^3 s + 18 p q r s - 27 p^2 s^2` of
/// `p x^3 + q x^2 y + r x y^2 + s y^3`.
pub fn binary_discriminant(f: &IntForm) -> Result<BigInt> {
    if f.nvars() != 2 {
        return Err(Error::WrongArity { expected: 2, found: f.nvars() });
    }
    let p = f.coeff_of(0, 0, 0);
    let q = f.coeff_of(0, 0, 1);
    let r = f.coeff_of(0, 1, 1);
    let s = f.coeff_of(1, 1, 1);
    Ok(&q * &q * &r * &r - 4 * &p * &r * &r * &r - 4 * &q * &q * &q * &s + 18 * &p * &q * &r * &s
        - 27 * &p * &p * &s * &s)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TernaryInvariants {
    pub s: BigRational,
    pub t: BigRational,
    /// `T^2 - 64 S^3`.
    pub delta: BigRational,
}

// Monomials of a ternary cubic in graded-lex order; the tables index into this.
const SLOTS: [[usize; 3]; 10] =
    [[0, 0, 0], [0, 0, 1], [0, 0, 2], [0, 1, 1], [0, 1, 2], [0, 2, 2], [1, 1, 1], [1, 1, 2], [1, 2, 2], [2, 2, 2]];

fn psi(f: &IntForm) -> Vec<BigInt> {
    SLOTS
        .iter()
        .map(|&[i, j, k]| {
            let m = Monomial::new(i, j, k);
            f.coeff(&m) * BigInt::from(6 / m.multiplicity())
        })
        .collect()
}

fn eval_table<const D: usize>(table: &[([u8; D], i64)], psi: &[BigInt]) -> BigInt {
    table.iter().map(|(slots, c)| slots.iter().fold(BigInt::from(*c), |acc, &s| acc * &psi[s as usize])).sum()
}

pub fn aronhold_st(f: &IntForm) -> Result<TernaryInvariants> {
    if f.nvars() != 3 {
        return Err(Error::WrongArity { expected: 3, found: f.nvars() });
    }
    let psi = psi(f);
    let s = BigRational::new(9 * eval_table(&tables::S_TERMS, &psi), BigInt::from(6u32.pow(4)));
    let t = BigRational::new(27 * eval_table(&tables::T_TERMS, &psi), BigInt::from(6u32.pow(6)));
    let delta = &t * &t - BigRational::from(BigInt::from(64)) * &s * &s * &s;
    Ok(TernaryInvariants { s, t, delta })
}

/// `T^2 - 64 S^3`; zero exactly when the plane cubic `F = 0` is singular.
pub fn ternary_discriminant(f: &IntForm) -> Result<BigRational> {
    Ok(aronhold_st(f)?.delta)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DivisibilityVerdict {
    /// `delta_f / delta_g` is an integer. `quotient` is `None` when both vanish.
    Divides {
        delta_g: BigInt,
        delta_f: BigRational,
        quotient: Option<BigInt>,
    },
    DoesNotDivide {
        delta_g: BigInt,
        delta_f: BigRational,
    },
    /// No discriminant is implemented for this arity.
    Unsupported {
        nvars: usize,
    },
}

/// Checks whether the discriminant of the tail `G` divides that of
/// `F = a x0^3 + x0^2 (sum b_i x_i) + G(x1, ..)`.
pub fn discriminant_divides(g: &IntForm, f: &IntForm) -> Result<DivisibilityVerdict> {
    check_reduced_shape(f)?;
    if f.nvars() != g.nvars() + 1 {
        return Err(Error::DimensionMismatch { expected: f.nvars() - 1, found: g.nvars() });
    }
    if f.nvars() != 3 {
        return Ok(DivisibilityVerdict::Unsupported { nvars: f.nvars() });
    }
    let tail = IntForm::from_terms(3, f.terms().filter(|(m, _)| m.degree_in(0) == 0).map(|(m, c)| (*m, c.clone())))?;
    if tail != g.shifted(1) {
        return Err(Error::Precondition("G is not the x0-free part of F".into()));
    }
    let delta_g = binary_discriminant(g)?;
    let delta_f = ternary_discriminant(f)?;
    Ok(match (delta_g.is_zero(), delta_f.is_zero()) {
        (true, true) => DivisibilityVerdict::Divides { delta_g, delta_f, quotient: None },
        (true, false) => DivisibilityVerdict::DoesNotDivide { delta_g, delta_f },
        (false, _) => {
            let q = &delta_f / BigRational::from(delta_g.clone());
            if q.is_integer() {
                DivisibilityVerdict::Divides { delta_g, delta_f, quotient: Some(q.to_integer()) }
            } else {
                DivisibilityVerdict::DoesNotDivide { delta_g, delta_f }
            }
        }
    })
}

/// Rejects forms containing a monomial `x0 x_i x_j` with `i, j >= 1`.
pub fn check_reduced_shape(f: &IntForm) -> Result<()> {
    match f.terms().find(|(m, _)| m.degree_in(0) == 1) {
        Some((m, _)) => {
            let [_, i, j] = m.indices();
            Err(Error::ShapeViolation(format!("monomial x0*x{i}*x{j} present")))
        }
        None => Ok(()),
    }
}

/// Primitive points in the box where `F` and its gradient vanish.
pub fn singular_point_search(f: &IntForm, bound: u32) -> Vec<PointProj> {
    primitive_points(f.nvars(), bound)
        .into_iter()
        .filter(|p| {
            f.gradient(p.coords()).is_ok_and(|g| g.iter().all(Zero::is_zero))
                && f.eval(p.coords()).is_ok_and(|v| v.is_zero())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, rat};
    use crate::form::{parse_form, parse_form_in};

    fn f(s: &str) -> IntForm {
        parse_form(s).unwrap()
    }

    fn r(n: i64) -> BigRational {
        rat(n, 1)
    }

    #[test]
    fn binary_examples() {
        assert_eq!(binary_discriminant(&f("x^3 + y^3")).unwrap(), int(-27));
        assert_eq!(binary_discriminant(&parse_form_in("x^3", 2).unwrap()).unwrap(), int(0));
        // a x^3 + b x^2 y + c y^3: -(4 b^3 c + 27 a^2 c^2)
        assert_eq!(binary_discriminant(&f("2*x^3 + 3*x^2*y + 5*y^3")).unwrap(), int(-(4 * 27 * 5 + 27 * 4 * 25)));
        assert!(matches!(binary_discriminant(&f("x^3 + z^3")), Err(Error::WrongArity { .. })));
    }

    #[test]
    fn ternary_calibration_examples() {
        let inv = aronhold_st(&f("x^3 + 2*x^2*y + 3*x^2*z + 5*y^3 + z^3")).unwrap();
        assert_eq!((inv.s, inv.t), (r(30), r(3535)));
        let fermat = aronhold_st(&f("x^3 + y^3 + z^3")).unwrap();
        assert_eq!((fermat.s, fermat.t, fermat.delta), (r(0), r(27), r(729)));
        let zero = aronhold_st(&IntForm::zero(3)).unwrap();
        assert_eq!((zero.s, zero.t, zero.delta), (r(0), r(0), r(0)));
        assert_eq!(aronhold_st(&f("x*y*z")).unwrap().s, rat(1, 144));
    }

    #[test]
    fn singular_cubics_have_zero_discriminant() {
        assert!(ternary_discriminant(&f("x^2*y + x^2*z - 3*y^2*z")).unwrap().is_zero());
        assert!(ternary_discriminant(&f("x^3 - 3*x^2*y - 3*x^2*z + y^3 + 3*y^2*z")).unwrap().is_zero());
    }

    #[test]
    fn divisibility_examples() {
        let v = discriminant_divides(&f("3*x^3 + y^3"), &f("2*x^3 + 3*y^3 + z^3")).unwrap();
        assert_eq!(
            v,
            DivisibilityVerdict::Divides { delta_g: int(-243), delta_f: r(944_784), quotient: Some(int(-3888)) }
        );
        let v = discriminant_divides(&f("x^3 + y^3"), &f("x^3 + y^3 + z^3")).unwrap();
        assert!(matches!(v, DivisibilityVerdict::Divides { quotient: Some(q), .. } if q == int(-27)));
        assert!(matches!(
            discriminant_divides(&f("x^3 + y^3"), &f("x^3 + x*y*z + y^3 + z^3")),
            Err(Error::ShapeViolation(_))
        ));
    }

    #[test]
    fn singular_points() {
        let pts = singular_point_search(&f("x^2*y + x^2*z - 3*y^2*z"), 2);
        assert!(pts.contains(&PointProj::from_i64(&[0, 0, 1]).unwrap()));
        assert!(singular_point_search(&f("x^3 + y^3 + z^3"), 10).is_empty());
        let line = singular_point_search(&parse_form_in("x^3", 3).unwrap(), 1);
        assert!(line.contains(&PointProj::from_i64(&[0, 1, 0]).unwrap()));
        assert!(line.contains(&PointProj::from_i64(&[0, 0, 1]).unwrap()));
    }
}
