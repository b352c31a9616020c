//! Integer lattice helpers: Hermite normal form, integer kernels and
//! unimodular completion.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::IntMatrix;

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns the nonzero rows: pivots strictly move right, are positive, and
/// every entry above a pivot lies in `[0, pivot)`. The result depends only on
/// the lattice, not on the generating set.
pub fn hermite_rows(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..ncols {
        if r == a.len() {
            break;
        }
        // gcd-combine every row below r into row r on this column
        for i in r + 1..a.len() {
            if a[i][col].is_zero() {
                continue;
            }
            if a[r][col].is_zero() {
                a.swap(r, i);
                continue;
            }
            let e = a[r][col].extended_gcd(&a[i][col]);
            let (p, q) = (e.x, e.y);
            let u = &a[r][col] / &e.gcd;
            let v = &a[i][col] / &e.gcd;
            let (top, bottom): (Vec<BigInt>, Vec<BigInt>) =
                a[r].iter().zip(&a[i]).map(|(x, y)| (&p * x + &q * y, &u * y - &v * x)).unzip();
            a[r] = top;
            a[i] = bottom;
        }
        if a[r][col].is_zero() {
            continue;
        }
        if a[r][col].is_negative() {
            for x in a[r].iter_mut() {
                *x = -x.clone();
            }
        }
        for i in 0..r {
            let q = a[i][col].div_floor(&a[r][col]);
            if !q.is_zero() {
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x -= &q * y;
                }
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// Basis of `{v in Z^n : A v = 0}` for the `m x n` integer matrix given by
/// `constraints` (one row per equation), in Hermite normal form.
pub fn integer_kernel(constraints: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    // Rows [A^T e_j | e_j]; unimodular row operations that clear the left
    // block leave kernel vectors in the right block.
    let m = constraints.len();
    let mut aug: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut row: Vec<BigInt> = constraints.iter().map(|c| c[j].clone()).collect();
            row.extend((0..n).map(|k| if k == j { BigInt::one() } else { BigInt::zero() }));
            row
        })
        .collect();
    let mut r = 0;
    for col in 0..m {
        for i in r + 1..n {
            if aug[i][col].is_zero() {
                continue;
            }
            if aug[r][col].is_zero() {
                aug.swap(r, i);
                continue;
            }
            let e = aug[r][col].extended_gcd(&aug[i][col]);
            let u = &aug[r][col] / &e.gcd;
            let v = &aug[i][col] / &e.gcd;
            let (top, bottom): (Vec<BigInt>, Vec<BigInt>) =
                aug[r].iter().zip(&aug[i]).map(|(x, y)| (&e.x * x + &e.y * y, &u * y - &v * x)).unzip();
            aug[r] = top;
            aug[i] = bottom;
        }
        if r < n && !aug[r][col].is_zero() {
            r += 1;
        }
    }
    let kernel: Vec<Vec<BigInt>> =
        aug.into_iter().filter(|row| row[..m].iter().all(Zero::is_zero)).map(|row| row[m..].to_vec()).collect();
    hermite_rows(&kernel)
}

/// Integer vector `l` with `l . p = 1`, for primitive `p`.
pub fn bezout_covector(p: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut coeffs = vec![BigInt::zero(); p.len()];
    let mut g = BigInt::zero();
    for (i, x) in p.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        if g.is_zero() {
            g = x.clone();
            coeffs[i] = BigInt::one();
            continue;
        }
        let e = g.extended_gcd(x);
        for c in coeffs.iter_mut() {
            *c *= &e.x;
        }
        coeffs[i] = e.y;
        g = e.gcd;
    }
    if g.is_negative() {
        g = -g;
        for c in coeffs.iter_mut() {
            *c = -c.clone();
        }
    }
    g.is_one().then_some(coeffs)
}

/// Unimodular matrix with determinant 1 whose first column is the primitive
/// vector `p`.
pub fn complete_to_unimodular(p: &[BigInt]) -> Option<IntMatrix> {
    let l = bezout_covector(p)?;
    let rest = integer_kernel(&[l], p.len());
    with_first_column(p, rest)
}

/// `[p | rest]`, with the last column negated when needed to reach det 1.
/// Returns `None` unless the determinant is ±1.
pub(crate) fn with_first_column(p: &[BigInt], mut rest: Vec<Vec<BigInt>>) -> Option<IntMatrix> {
    if rest.len() + 1 != p.len() {
        return None;
    }
    let mut cols = vec![p.to_vec()];
    cols.extend(rest.iter().cloned());
    let t = IntMatrix::from_columns(&cols).ok()?;
    let d = t.det().ok()?;
    if d.is_one() {
        return Some(t);
    }
    if d != -BigInt::one() {
        return None;
    }
    let last = rest.last_mut()?;
    for x in last.iter_mut() {
        *x = -x.clone();
    }
    let mut cols = vec![p.to_vec()];
    cols.extend(rest);
    IntMatrix::from_columns(&cols).ok()
}

/// Divides a nonzero integer vector by its content and fixes the sign so the
/// first nonzero entry is positive.
pub fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v.to_vec();
    }
    let g = if v.iter().find(|x| !x.is_zero()).is_some_and(Signed::is_negative) { -g } else { g };
    v.iter().map(|x| x / &g).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::ints;

    #[test]
    fn hnf_is_canonical() {
        let a = hermite_rows(&[ints(&[2, 4, 4]), ints(&[-6, 6, 12]), ints(&[10, -4, -16])]);
        let b = hermite_rows(&[ints(&[10, -4, -16]), ints(&[2, 4, 4]), ints(&[-6, 6, 12])]);
        assert_eq!(a, b);
        for (i, row) in a.iter().enumerate() {
            let piv = row.iter().position(|x| !x.is_zero()).unwrap();
            assert!(row[piv].is_positive());
            for above in &a[..i] {
                assert!(!above[piv].is_negative() && above[piv] < row[piv]);
            }
        }
    }

    #[test]
    fn kernel_of_linear_form() {
        let k = integer_kernel(&[ints(&[1, 2, 3])], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(dot(v, &ints(&[1, 2, 3])).is_zero());
        }
        // [p | kernel] is unimodular for p with l.p = 1
        let m = with_first_column(&ints(&[1, 0, 0]), k).unwrap();
        assert!(m.det().unwrap().is_one());
    }

    #[test]
    fn completion() {
        for p in [[2, 3, 5], [0, 7, -4], [1, 1, 1], [-3, 0, 2]] {
            let p = ints(&p);
            let t = complete_to_unimodular(&p).unwrap();
            assert_eq!(t.column(0), p);
            assert!(t.det().unwrap().is_one());
        }
        assert!(complete_to_unimodular(&ints(&[2, 4])).is_none());
    }
}
