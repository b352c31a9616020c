use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::search::low_rank_points;
use crate::error::{Error, Result};
use crate::form::{IntForm, Monomial};
use crate::lattice::integer_kernel;
use crate::matrix::IntMatrix;
use crate::point::PointProj;

/// `T . F = a x0^3 + F_X(x1, .., xn)` for `T = [alpha | basis of L]`, where
/// `L = {v : phi(alpha, alpha, v) = 0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointContraction {
    pub alpha: PointProj,
    pub a: BigInt,
    /// The residual form on `L`, in `n` variables.
    pub f_x: IntForm,
    pub matrix: IntMatrix,
    /// `det T`; the index of `Z alpha + L` in the full lattice.
    pub det: BigInt,
}

pub fn point_contraction_extract(f: &IntForm, alpha: &PointProj) -> Result<PointContraction> {
    let n1 = f.nvars();
    if alpha.dim() != n1 {
        return Err(Error::DimensionMismatch { expected: n1, found: alpha.dim() });
    }
    let p = alpha.coords();
    let h = f.hessian(p)?;
    let rank = h.rank();
    if rank > 1 {
        return Err(Error::RankTooLarge { rank, max: 1 });
    }
    let a = f.eval(p)?;
    if a.is_zero() {
        return Err(Error::Precondition("F(alpha) = 0, so there is no determinant bound r = |a| > 0".into()));
    }
    let grad = f.gradient(p)?;
    let basis = integer_kernel(&[grad], n1);
    for (i, v) in basis.iter().enumerate() {
        let hv = h.mul_vec(v)?;
        for w in &basis[i..] {
            if !crate::lattice::dot(&hv, w).is_zero() {
                return Err(Error::Hypothesis(
                    "phi(alpha, v, w) is nonzero on the kernel: not a point contraction".into(),
                ));
            }
        }
    }
    let f_x = f.restrict(&basis)?;
    let mut cols = vec![p.to_vec()];
    cols.extend(basis.iter().cloned());
    let matrix = IntMatrix::from_columns(&cols)?;
    let det = matrix.det()?;
    let bound = num_traits::pow(a.abs(), n1 - 1);
    if det.is_zero() || det.abs() > bound {
        return Err(Error::BoundViolated(format!("|det T| = {} is not in (0, {bound}]", det.abs())));
    }
    let mut expected = f_x.shifted(1);
    expected.add_term(Monomial::new(0, 0, 0), a.clone());
    if f.act(&matrix)? != expected {
        return Err(Error::Internal("reassembled point contraction does not match".into()));
    }
    Ok(PointContraction { alpha: alpha.clone(), a, f_x, matrix, det })
}

/// Every extraction available at points of the rank-at-most-1 probe.
pub fn point_contractions(f: &IntForm, radius: u32) -> Vec<PointContraction> {
    low_rank_points(f, 1, radius)
        .into_iter()
        .filter(|p| !p.value.is_zero())
        .filter_map(|p| point_contraction_extract(f, &p.point).ok())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;
    use crate::form::parse_form;

    #[test]
    fn blown_up_point() {
        let f = parse_form("x^3 + y^3").unwrap();
        let e = point_contraction_extract(&f, &PointProj::from_i64(&[1, 0]).unwrap()).unwrap();
        assert_eq!(e.a, int(1));
        assert_eq!(e.f_x.shifted(1).to_string(), "y^3");
        assert_eq!(e.det, int(1));
    }

    #[test]
    fn fermat() {
        let f = parse_form("x^3 + y^3 + z^3").unwrap();
        let e = point_contraction_extract(&f, &PointProj::from_i64(&[1, 0, 0]).unwrap()).unwrap();
        assert_eq!((e.a.clone(), e.f_x.shifted(1).to_string()), (int(1), "y^3 + z^3".to_string()));
        assert_eq!(
            point_contraction_extract(&f, &PointProj::from_i64(&[1, 1, 1]).unwrap()),
            Err(Error::RankTooLarge { rank: 3, max: 1 })
        );
        assert_eq!(point_contractions(&f, 2).len(), 3);
    }

    #[test]
    fn nontrivial_index() {
        // (2x + y)^3 + y^3 at [1, 0]: H is a multiple of (2, 1)(2, 1)^T and
        // L = ker (2, 1) has index 2
        let f = parse_form("8*x^3 + 12*x^2*y + 6*x*y^2 + 2*y^3").unwrap();
        let e = point_contraction_extract(&f, &PointProj::from_i64(&[1, 0]).unwrap()).unwrap();
        assert_eq!((e.a, e.det.abs()), (int(8), int(2)));
        assert_eq!(e.f_x.to_string(), "-8*x^3");
    }
}
