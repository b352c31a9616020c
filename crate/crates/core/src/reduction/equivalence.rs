use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::ReducedTriple;
use crate::error::{Error, Result};
use crate::form::IntForm;
use crate::invariants::{aronhold_st, binary_discriminant};
use crate::lattice::complete_to_unimodular;
use crate::matrix::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceVerdict {
    /// `t1.transform(M) == t2` with `det M = 1`.
    Equivalent(IntMatrix),
    /// An invariant differs, or an exact method ruled out every candidate.
    DefinitelyNot(String),
    /// Bounded search over entries in `[-radius, radius]` found no witness.
    NotFoundWithinRadius(u32),
}

impl EquivalenceVerdict {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivalenceVerdict::Equivalent(_))
    }
}

/// Decides whether `M . t1 = t2` for some `M` in `SL(n, Z)`.
///
/// Cheap invariants are compared first. When `G` is zero, or `n = 2` and `B`
/// is nonzero, the answer is exact: `B` is moved to a multiple of `e1` and the
/// remaining stabilizer is solved for directly. Otherwise the search is
/// bounded by `radius`.
pub fn triples_equivalent(t1: &ReducedTriple, t2: &ReducedTriple, radius: u32) -> Result<EquivalenceVerdict> {
    if t1.n() != t2.n() {
        return Err(Error::DimensionMismatch { expected: t1.n(), found: t2.n() });
    }
    let n = t1.n();
    if t1 == t2 {
        return Ok(EquivalenceVerdict::Equivalent(IntMatrix::identity(n)));
    }
    if let Some(reason) = invariant_mismatch(t1, t2)? {
        return Ok(EquivalenceVerdict::DefinitelyNot(reason));
    }
    if n == 1 {
        return Ok(EquivalenceVerdict::DefinitelyNot("SL(1, Z) is trivial and the triples differ".into()));
    }
    if t1.g.is_zero() {
        // both G vanish and B has equal content: move B to B'
        let m = exact_witness(t1, t2, |_, _| Some(IntMatrix::identity(n)))?;
        return Ok(m.map_or_else(
            || EquivalenceVerdict::DefinitelyNot("B vectors are not related".into()),
            EquivalenceVerdict::Equivalent,
        ));
    }
    if n == 2 && t1.b.iter().any(|x| !x.is_zero()) {
        let m = exact_witness(t1, t2, stabilizer_solution)?;
        return Ok(m.map_or_else(
            || EquivalenceVerdict::DefinitelyNot("no element fixing B carries G to G'".into()),
            EquivalenceVerdict::Equivalent,
        ));
    }
    Ok(bounded_search(t1, t2, radius)?
        .map_or(EquivalenceVerdict::NotFoundWithinRadius(radius), EquivalenceVerdict::Equivalent))
}

fn invariant_mismatch(t1: &ReducedTriple, t2: &ReducedTriple) -> Result<Option<String>> {
    if t1.a != t2.a {
        return Ok(Some(format!("a differs: {} vs {}", t1.a, t2.a)));
    }
    if t1.b_content() != t2.b_content() {
        return Ok(Some(format!("content of B differs: {} vs {}", t1.b_content(), t2.b_content())));
    }
    if t1.g.content() != t2.g.content() {
        return Ok(Some(format!("content of G differs: {} vs {}", t1.g.content(), t2.g.content())));
    }
    match t1.n() {
        2 => {
            let (d1, d2) = (binary_discriminant(&t1.g)?, binary_discriminant(&t2.g)?);
            if d1 != d2 {
                return Ok(Some(format!("discriminant of G differs: {d1} vs {d2}")));
            }
        }
        3 => {
            let (i1, i2) = (aronhold_st(&t1.g)?, aronhold_st(&t2.g)?);
            if (&i1.s, &i1.t) != (&i2.s, &i2.t) {
                return Ok(Some(format!(
                    "invariants of G differ: (S, T) = ({}, {}) vs ({}, {})",
                    i1.s, i1.t, i2.s, i2.t
                )));
            }
        }
        _ => {}
    }
    Ok(None)
}

/// `U` in `SL(n, Z)` with `U^T B = g e1`, `g` the content of `B`.
fn normalizer(b: &[BigInt]) -> Option<IntMatrix> {
    let g = b.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Some(IntMatrix::identity(b.len()));
    }
    let prim: Vec<BigInt> = b.iter().map(|x| x / &g).collect();
    // V has first column B / g, so V^{-1} B = g e1 and U = V^{-T}
    let v = complete_to_unimodular(&prim)?;
    v.inverse_unimodular().map(|vi| vi.transpose())
}

/// Both triples are normalized to `B = g e1`; `solve` then looks for `K` in
/// the stabilizer of `g e1` with `K . t1n = t2n`. Returns `U1 K U2^{-1}`.
fn exact_witness(
    t1: &ReducedTriple,
    t2: &ReducedTriple,
    solve: impl Fn(&ReducedTriple, &ReducedTriple) -> Option<IntMatrix>,
) -> Result<Option<IntMatrix>> {
    let internal = || Error::Internal("unimodular completion failed".into());
    let u1 = normalizer(&t1.b).ok_or_else(internal)?;
    let u2 = normalizer(&t2.b).ok_or_else(internal)?;
    let (n1, n2) = (t1.transform(&u1)?, t2.transform(&u2)?);
    let Some(k) = solve(&n1, &n2) else { return Ok(None) };
    if n1.transform(&k)? != n2 {
        return Ok(None);
    }
    let u2_inv = u2.inverse_unimodular().ok_or_else(internal)?;
    let m = u1.mul(&k)?.mul(&u2_inv)?;
    if t1.transform(&m)? != *t2 || !m.det()?.is_one() {
        return Err(Error::Internal("equivalence witness failed verification".into()));
    }
    Ok(Some(m))
}

/// For `n = 2` the stabilizer of `(g, 0)` is `[[1, 0], [k, 1]]`, acting by
/// `G(y1, k y1 + y2)`. `k` is pinned down by the first coefficient of `G`
/// (from the `y2^3` end) that feels it.
fn stabilizer_solution(t1: &ReducedTriple, t2: &ReducedTriple) -> Option<IntMatrix> {
    let g = |f: &IntForm, i, j, k| f.coeff_of(i, j, k);
    let (g0, g1, g2, g3) = (g(&t1.g, 0, 0, 0), g(&t1.g, 0, 0, 1), g(&t1.g, 0, 1, 1), g(&t1.g, 1, 1, 1));
    let (h0, h1, h2) = (g(&t2.g, 0, 0, 0), g(&t2.g, 0, 0, 1), g(&t2.g, 0, 1, 1));
    let exact = |num: BigInt, den: BigInt| -> Option<BigInt> {
        let (q, r) = num.div_rem(&den);
        r.is_zero().then_some(q)
    };
    let k = if !g3.is_zero() {
        exact(h2 - g2, 3 * g3)?
    } else if !g2.is_zero() {
        exact(h1 - g1, 2 * g2)?
    } else if !g1.is_zero() {
        exact(h0 - g0, g1)?
    } else {
        BigInt::zero()
    };
    IntMatrix::from_rows(vec![vec![BigInt::one(), BigInt::zero()], vec![k, BigInt::one()]]).ok()
}

/// Column-by-column search: column `j` of `M` must satisfy
/// `G(col_j) = G'_{jjj}` and `col_j . B = B'_j`, and pairs of columns must
/// match the `y_i^2 y_j` coefficients of `G'`.
fn bounded_search(t1: &ReducedTriple, t2: &ReducedTriple, radius: u32) -> Result<Option<IntMatrix>> {
    let n = t1.n();
    let r = i64::from(radius);
    let mut box_vectors = Vec::new();
    let mut cur = vec![-r; n];
    loop {
        if cur.iter().any(|&x| x != 0) {
            box_vectors.push(cur.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>());
        }
        let mut i = 0;
        while i < n && cur[i] == r {
            cur[i] = -r;
            i += 1;
        }
        if i == n {
            break;
        }
        cur[i] += 1;
    }
    let mut candidates = Vec::with_capacity(n);
    for j in 0..n {
        let target_g = t2.g.coeff_of(j, j, j);
        let cands: Vec<(Vec<BigInt>, Vec<BigInt>)> = box_vectors
            .iter()
            .filter(|v| crate::lattice::dot(v, &t1.b) == t2.b[j])
            .filter_map(|v| {
                if t1.g.eval(v).ok()? != target_g {
                    return None;
                }
                Some((v.clone(), t1.g.gradient(v).ok()?))
            })
            .collect();
        if cands.is_empty() {
            return Ok(None);
        }
        candidates.push(cands);
    }
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    Ok(backtrack(t1, t2, &candidates, &mut chosen))
}

fn backtrack(
    t1: &ReducedTriple,
    t2: &ReducedTriple,
    candidates: &[Vec<(Vec<BigInt>, Vec<BigInt>)>],
    chosen: &mut Vec<usize>,
) -> Option<IntMatrix> {
    let j = chosen.len();
    if j == candidates.len() {
        let cols: Vec<Vec<BigInt>> = chosen.iter().enumerate().map(|(i, &c)| candidates[i][c].0.clone()).collect();
        let m = IntMatrix::from_columns(&cols).ok()?;
        if m.det().ok()?.is_one() && t1.transform(&m).ok()? == *t2 {
            return Some(m);
        }
        return None;
    }
    'next: for (c, (v, grad_v)) in candidates[j].iter().enumerate() {
        for (i, &ci) in chosen.iter().enumerate() {
            let (w, grad_w) = &candidates[i][ci];
            // coefficients of y_i^2 y_j and y_i y_j^2 in M . G
            if crate::lattice::dot(grad_w, v) != t2.g.coeff_of(i, i, j)
                || crate::lattice::dot(grad_v, w) != t2.g.coeff_of(i, j, j)
            {
                continue 'next;
            }
        }
        chosen.push(c);
        if let Some(m) = backtrack(t1, t2, candidates, chosen) {
            return Some(m);
        }
        chosen.pop();
    }
    None
}
