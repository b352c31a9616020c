//! Independent oracles and random generators shared by the integration tests.
//! Everything here works on plain `i64`/`i128` so it does not lean on the
//! library's own arithmetic.

#![allow(clippy::needless_range_loop)]
#![allow(dead_code)]

use std::collections::BTreeSet;

use cubic3_core::{IntForm, IntMatrix, Monomial};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn form(nvars: usize, terms: &[((usize, usize, usize), i64)]) -> IntForm {
    IntForm::from_terms(nvars, terms.iter().map(|&((i, j, k), c)| (Monomial::new(i, j, k), BigInt::from(c)))).unwrap()
}

/// Every monomial with a coefficient in `[-bound, bound]`.
pub fn random_form(rng: &mut impl Rng, nvars: usize, bound: i64) -> IntForm {
    let mut terms = Vec::new();
    for i in 0..nvars {
        for j in i..nvars {
            for k in j..nvars {
                terms.push(((i, j, k), rng.gen_range(-bound..=bound)));
            }
        }
    }
    form(nvars, &terms)
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

/// A product of elementary shears with entries kept at most `max_entry`.
pub fn random_sl(rng: &mut impl Rng, n: usize, max_entry: i64) -> Vec<Vec<i64>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..2 * n + 2 {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let k = rng.gen_range(-2..=2);
        let mut e: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
        e[i][j] = k;
        let next = mat_mul(&m, &e);
        if next.iter().flatten().all(|x| x.abs() <= max_entry) {
            m = next;
        }
    }
    m
}

pub fn to_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    let r: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64_rows(&r).unwrap()
}

/// Rank by fraction-free elimination.
pub fn rank_i128(m: &[Vec<i128>]) -> usize {
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else { continue };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && a[r][c] != 0 {
                let (x, y) = (a[rank][c], a[r][c]);
                for k in 0..cols {
                    a[r][k] = a[r][k] * x - a[rank][k] * y;
                }
                let g = a[r].iter().fold(0i128, |g, &v| gcd(g, v));
                if g > 1 {
                    a[r].iter_mut().for_each(|v| *v /= g);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Coefficients `(p, q, r, s)` of `F(t00 x + t01 y, t10 x + t11 y)` where
/// `F = a x^3 + b x^2 y + c y^3`.
pub fn binary_act(abc: (i128, i128, i128), t: [[i128; 2]; 2]) -> (i128, i128, i128, i128) {
    let (a, b, c) = abc;
    // u = t00 x + t01 y, v = t10 x + t11 y; F = a u^3 + b u^2 v + c v^3
    let (u0, u1, v0, v1) = (t[0][0], t[0][1], t[1][0], t[1][1]);
    let cube = |p: i128, q: i128| [p * p * p, 3 * p * p * q, 3 * p * q * q, q * q * q];
    let sq = [u0 * u0, 2 * u0 * u1, u1 * u1];
    let mut out = [0i128; 4];
    for (k, v) in cube(u0, u1).iter().enumerate() {
        out[k] += a * v;
    }
    for (k, v) in cube(v0, v1).iter().enumerate() {
        out[k] += c * v;
    }
    for (k, s) in sq.iter().enumerate() {
        out[k] += b * s * v0;
        out[k + 1] += b * s * v1;
    }
    (out[0], out[1], out[2], out[3])
}

/// Reduced forms `(a', b', c')` with `c' > 0` over every `T` in `SL(2, Z)`
/// with entries at most `bound`.
pub fn binary_brute_force(abc: (i64, i64, i64), bound: i64) -> BTreeSet<(i64, i64, i64)> {
    let abc = (abc.0 as i128, abc.1 as i128, abc.2 as i128);
    let b = bound as i128;
    let mut out = BTreeSet::new();
    for t00 in -b..=b {
        for t01 in -b..=b {
            for t11 in -b..=b {
                // t00 t11 - t01 t10 = 1
                let t10 = if t01 == 0 {
                    if t00 * t11 != 1 {
                        continue;
                    }
                    (-b..=b).collect::<Vec<_>>()
                } else {
                    let num = t00 * t11 - 1;
                    if num % t01 != 0 || (num / t01).abs() > b {
                        continue;
                    }
                    vec![num / t01]
                };
                for t10 in t10 {
                    let (p, q, r, s) = binary_act(abc, [[t00, t01], [t10, t11]]);
                    if r == 0 && s > 0 {
                        out.insert((p as i64, q as i64, s as i64));
                    }
                }
            }
        }
    }
    out
}

/// `-(4 b^3 c + 27 a^2 c^2)`, the discriminant of `a x^3 + b x^2 y + c y^3`.
pub fn binary_disc(a: i128, b: i128, c: i128) -> i128 {
    -(4 * b * b * b * c + 27 * a * a * c * c)
}
