use std::collections::HashSet;
use std::thread;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{detect_reduced, triples_equivalent, EquivalenceVerdict, ReducedTriple};
use crate::error::Result;
use crate::form::IntForm;
use crate::lattice::{bezout_covector, dot, integer_kernel, primitive_part, with_first_column};
use crate::matrix::IntMatrix;
use crate::point::{primitive_points, primitive_points_with_lead, PointProj};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowRankPoint {
    pub point: PointProj,
    pub rank: usize,
    pub value: BigInt,
}

/// Primitive points in the box with `rk H_F(p) <= max_rank`, in
/// lexicographic order. A probe of the loci, not a decision procedure.
pub fn low_rank_points(f: &IntForm, max_rank: usize, bound: u32) -> Vec<LowRankPoint> {
    primitive_points(f.nvars(), bound)
        .into_iter()
        .filter_map(|p| {
            let rank = f.hessian(p.coords()).ok()?.rank();
            (rank <= max_rank).then(|| {
                let value = f.eval(p.coords()).unwrap_or_default();
                LowRankPoint { point: p, rank, value }
            })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Bound on the entries of the first column of the basis change.
    pub radius: u32,
    pub threads: usize,
}

impl SearchOptions {
    pub fn new(radius: u32) -> Self {
        SearchOptions { radius, threads: 1 }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoundTriple {
    pub triple: ReducedTriple,
    /// `matrix . F` reassembles to the triple; `det = 1`.
    pub matrix: IntMatrix,
}

/// Covectors `l` whose kernel is a hyperplane on which the quadratic form
/// `H_F(p)` vanishes identically.
fn isotropic_covectors(h: &IntMatrix, p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = h.rows();
    match h.rank() {
        0 => bezout_covector(p).into_iter().collect(),
        1 => {
            let row = (0..n).map(|i| h.row(i)).find(|r| r.iter().any(|x| !x.is_zero()));
            row.map(|r| vec![primitive_part(r)]).unwrap_or_default()
        }
        2 => rank_two_covectors(h),
        _ => Vec::new(),
    }
}

// H = H_{.J} H_JJ^{-1} H_{J.} for a nonsingular principal minor J, so the
// quadratic form is h22 s1^2 - 2 h12 s1 s2 + h11 s2^2 in s = H_J w. Its
// rational factors give the isotropic hyperplanes.
fn rank_two_covectors(h: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = h.rows();
    let Some((j1, j2)) = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| h.get(i, i) * h.get(j, j) != h.get(i, j) * h.get(i, j))
    else {
        return Vec::new();
    };
    let (h11, h12, h22) = (h.get(j1, j1), h.get(j1, j2), h.get(j2, j2));
    let disc = h12 * h12 - h11 * h22;
    if disc.is_negative() {
        return Vec::new();
    }
    let root = disc.sqrt();
    if &root * &root != disc {
        return Vec::new();
    }
    let (a, b, c) = (h22.clone(), -h12.clone(), h11.clone());
    let factors = if a.is_zero() {
        vec![(BigInt::zero(), BigInt::one()), (2 * &b, c)]
    } else {
        vec![(a.clone(), &b + &root), (a, &b - &root)]
    };
    let mut out: Vec<Vec<BigInt>> = Vec::new();
    for (alpha, beta) in factors {
        let l: Vec<BigInt> = h.row(j1).iter().zip(h.row(j2)).map(|(x, y)| &alpha * x + &beta * y).collect();
        if l.iter().all(Zero::is_zero) {
            continue;
        }
        let l = primitive_part(&l);
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

fn triples_at(f: &IntForm, p: &PointProj) -> Vec<FoundTriple> {
    let Ok(h) = f.hessian(p.coords()) else { return Vec::new() };
    let mut out = Vec::new();
    for l in isotropic_covectors(&h, p.coords()) {
        if !dot(&l, p.coords()).abs().is_one() {
            continue;
        }
        let rest = integer_kernel(&[l], f.nvars());
        for sign in [1, -1] {
            let first: Vec<BigInt> = p.coords().iter().map(|x| x * sign).collect();
            let Some(t) = with_first_column(&first, rest.clone()) else { continue };
            let Ok(moved) = f.act(&t) else { continue };
            if let Some(triple) = detect_reduced(&moved) {
                out.push(FoundTriple { triple, matrix: t });
            } else {
                debug_assert!(false, "isotropic hyperplane did not give a reduced form");
            }
        }
    }
    out
}

/// Reduced triples of `F` reached by `T` in `SL(n+1, Z)` whose first column
/// has entries bounded by the radius. The remaining columns are a canonical
/// (Hermite) basis of the isotropic hyperplane, so every triple found is a
/// genuine one; the list is a lower estimate of the full set, nondecreasing
/// in the radius. Distinct triples only, ordered by their matrices.
pub fn search_reduced_triples(f: &IntForm, opts: &SearchOptions) -> Result<Vec<FoundTriple>> {
    let n = f.nvars();
    if n < 2 {
        return Ok(Vec::new());
    }
    let r = i64::from(opts.radius);
    let threads = opts.threads.max(1);
    let mut found: Vec<FoundTriple> = if threads == 1 {
        primitive_points(n, opts.radius).iter().flat_map(|p| triples_at(f, p)).collect()
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    s.spawn(move || {
                        (0..=r)
                            .filter(|lead| (*lead as usize) % threads == w)
                            .flat_map(|lead| primitive_points_with_lead(n, r, lead..=lead))
                            .flat_map(|p| triples_at(f, &p))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles.into_iter().flat_map(|h| h.join().expect("search worker panicked")).collect()
        })
    };
    found.sort_by_key(|t| t.matrix.transpose().to_rows());
    let mut seen = HashSet::new();
    found.retain(|t| seen.insert(t.triple.clone()));
    Ok(found)
}

/// Largest `|a|` over the triples found, or 0 when there are none. A lower
/// estimate of the supremum over all reduced triples.
pub fn estimate_s(f: &IntForm, opts: &SearchOptions) -> Result<BigInt> {
    Ok(search_reduced_triples(f, opts)?.iter().map(|t| t.triple.a.abs()).max().unwrap_or_default())
}

#[derive(Clone, Debug)]
pub struct TripleClass {
    pub representative: FoundTriple,
    pub members: usize,
}

#[derive(Clone, Debug)]
pub struct ClassReport {
    pub classes: Vec<TripleClass>,
    /// Triples found by the search, before grouping.
    pub triples: usize,
    /// Triples opened as a new class although some comparison was
    /// inconclusive within the equivalence radius.
    pub unresolved: usize,
}

/// Groups the triples found within `opts.radius` into equivalence classes.
pub fn triple_classes(f: &IntForm, opts: &SearchOptions, equiv_radius: u32) -> Result<ClassReport> {
    let found = search_reduced_triples(f, opts)?;
    let triples = found.len();
    let mut classes: Vec<TripleClass> = Vec::new();
    let mut unresolved = 0;
    for t in found {
        let mut ambiguous = false;
        let mut placed = false;
        for class in classes.iter_mut() {
            match triples_equivalent(&class.representative.triple, &t.triple, equiv_radius)? {
                EquivalenceVerdict::Equivalent(_) => {
                    class.members += 1;
                    placed = true;
                    break;
                }
                EquivalenceVerdict::NotFoundWithinRadius(_) => ambiguous = true,
                EquivalenceVerdict::DefinitelyNot(_) => {}
            }
        }
        if !placed {
            unresolved += usize::from(ambiguous);
            classes.push(TripleClass { representative: t, members: 1 });
        }
    }
    Ok(ClassReport { classes, triples, unresolved })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;
    use crate::form::parse_form;

    #[test]
    fn fermat_low_rank() {
        let f = parse_form("x^3 + y^3 + z^3").unwrap();
        let w = low_rank_points(&f, 1, 5);
        let pts: Vec<String> = w.iter().map(|p| p.point.to_string()).collect();
        assert_eq!(pts, ["[0,0,1]", "[0,1,0]", "[1,0,0]"]);
        assert!(w.iter().all(|p| p.rank == 1 && p.value == int(1)));
        let v = low_rank_points(&f, 2, 1);
        assert!(v.iter().any(|p| p.point.to_string() == "[1,1,0]" && p.rank == 2 && p.value == int(2)));
        assert!(low_rank_points(&f, 0, 5).is_empty());
    }

    #[test]
    fn fermat_triples() {
        let f = parse_form("x^3 + y^3 + z^3").unwrap();
        let found = search_reduced_triples(&f, &SearchOptions::new(2)).unwrap();
        assert!(!found.is_empty());
        for t in &found {
            assert!(t.matrix.det().unwrap().is_one());
            assert_eq!(t.triple.reassemble(), f.act(&t.matrix).unwrap());
            assert!(t.triple.a.abs().is_one());
        }
        assert_eq!(estimate_s(&f, &SearchOptions::new(2)).unwrap(), int(1));
    }

    #[test]
    fn threads_do_not_change_results() {
        let f = parse_form("x^2*y + x^2*z - 3*y^2*z").unwrap();
        let one = search_reduced_triples(&f, &SearchOptions::new(4)).unwrap();
        let four = search_reduced_triples(&f, &SearchOptions::new(4).with_threads(4)).unwrap();
        assert_eq!(one, four);
    }

    #[test]
    fn pell_estimate() {
        let f = parse_form("x^2*y + x^2*z - 3*y^2*z").unwrap();
        assert!(estimate_s(&f, &SearchOptions::new(12)).unwrap() >= int(15));
    }
}
