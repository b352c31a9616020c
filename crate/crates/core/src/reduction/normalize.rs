use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::form::{IntForm, Monomial, RatForm};
use crate::matrix::RatMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineNormalization {
    /// `det = 1`, identity except `t12 = -c/b`.
    pub matrix: RatMatrix,
    /// `matrix . F = a x0^3 + b x0^2 x1 + c1 x1^3 + R(x2, .., xn)`.
    pub form: RatForm,
}

/// Brings `F = a x0^3 + x0^2 (b x1 + c x2) + G` with `b != 0`, whose line
/// `x2 = .. = xn = 0` lies in the rank-at-most-2 locus, to the shape
/// `a x0^3 + b x0^2 x1 + c1 x1^3 + R(x2, .., xn)` by `x1 <- x1 - (c/b) x2`.
///
/// The remaining hypotheses are checked rather than forced: any leftover
/// `x0^2 x_j` (`j >= 2`), `x0 x_i x_j` (`i, j >= 1`) or `x1`-mixed term is
/// reported as an error.
pub fn normalize_line(f: &IntForm) -> Result<LineNormalization> {
    let n = f.nvars();
    if n < 3 {
        return Err(Error::Precondition("need at least three variables".into()));
    }
    let b = f.coeff_of(0, 0, 1);
    if b.is_zero() {
        return Err(Error::Precondition("the coefficient b of x0^2 x1 is zero".into()));
    }
    check_line_in_v(f)?;
    let c = f.coeff_of(0, 0, 2);
    let mut t = RatMatrix::identity(n);
    t.set(1, 2, -BigRational::new(c, b));
    let g: RatForm = f.act(&t)?;
    check_residuals(&g)?;
    Ok(LineNormalization { matrix: t, form: g })
}

// rank H_F <= 2 at max(4, n + 1) points of the line {x2 = .. = 0}
fn check_line_in_v(f: &IntForm) -> Result<()> {
    let n = f.nvars();
    let samples = (n + 1).max(4);
    let pairs = [(1i64, 0i64), (0, 1)]
        .into_iter()
        .chain((1i64..).flat_map(|k| [(1, k), (1, -k), (k + 1, 1), (k + 1, -1)]))
        .take(samples);
    for (s, t) in pairs {
        let mut p = vec![BigInt::zero(); n];
        p[0] = BigInt::from(s);
        p[1] = BigInt::from(t);
        let rank = f.hessian(&p)?.rank();
        if rank > 2 {
            return Err(Error::Hypothesis(format!(
                "line x2 = .. = 0 is not in the rank <= 2 locus: rank {rank} at ({s}, {t}, 0, ..)"
            )));
        }
    }
    Ok(())
}

fn check_residuals(g: &RatForm) -> Result<()> {
    let mut l = Vec::new();
    let mut q = Vec::new();
    let mut mixed = Vec::new();
    for (m, c) in g.terms() {
        let [i, j, k] = m.indices();
        let term = format!("{c}*{}", show(m));
        match (m.degree_in(0), m.degree_in(1)) {
            (3, _) | (2, 1) | (0, 3) => {}
            (2, 0) => l.push(term),
            (1, _) => q.push(term),
            (0, d) if d > 0 => mixed.push(term),
            _ => debug_assert!(i >= 2 && j >= 2 && k >= 2),
        }
    }
    for (name, terms) in [("L", l), ("Q", q), ("x1-mixed", mixed)] {
        if !terms.is_empty() {
            return Err(Error::Hypothesis(format!("residual {name} part is nonzero: {}", terms.join(", "))));
        }
    }
    Ok(())
}

fn show(m: &Monomial) -> String {
    m.indices().iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::form::parse_form;

    #[test]
    fn already_normal() {
        let f = parse_form("x^3 + x^2*y + y^3 + z^3").unwrap();
        let out = normalize_line(&f).unwrap();
        assert!(out.matrix.is_identity());
        assert_eq!(out.form, f.to_rational());
    }

    #[test]
    fn undoes_a_shear() {
        let f = parse_form("x^3 + x^2*y + 2*x^2*z + y^3 + 6*y^2*z + 12*y*z^2 + 9*z^3").unwrap();
        let out = normalize_line(&f).unwrap();
        assert_eq!(out.form, parse_form("x^3 + x^2*y + y^3 + z^3").unwrap().to_rational());
        assert!(out.matrix.det().unwrap() == BigRational::from(BigInt::from(1)));
    }

    #[test]
    fn rejects_b_zero_and_bad_residuals() {
        assert!(matches!(normalize_line(&parse_form("x^3 + x^2*z + y^3").unwrap()), Err(Error::Precondition(_))));
        // rank 3 along the line
        assert!(matches!(normalize_line(&parse_form("x^3 + x^2*y + x*z^2 + y^3").unwrap()), Err(Error::Hypothesis(_))));
        // the line passes the rank test but x0^2 x3 survives
        match normalize_line(&parse_form("x^3 + x^2*y + x^2*w").unwrap()) {
            Err(Error::Hypothesis(msg)) => assert!(msg.contains("residual L")),
            other => panic!("{other:?}"),
        }
    }
}
