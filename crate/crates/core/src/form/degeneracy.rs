use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::IntForm;
use crate::error::{Error, Result};
use crate::point::{primitive_points, PointProj};
use crate::poly::{linear_matrix_det, Polynomial};

/// Largest number of variables for which `det H_F` is expanded symbolically.
pub const SYMBOLIC_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nondegeneracy {
    /// `det H_F(p) != 0` at the witness point.
    Nondegenerate(PointProj),
    /// `det H_F` expands to the zero polynomial.
    Degenerate,
    /// Every sampled point had a singular Hessian.
    ProbablyDegenerate { samples: usize },
}

#[derive(Clone, Debug)]
pub struct DegeneracyConfig {
    pub symbolic_limit: usize,
    pub samples: usize,
    pub sample_bound: i64,
    pub seed: u64,
}

impl Default for DegeneracyConfig {
    fn default() -> Self {
        DegeneracyConfig { symbolic_limit: SYMBOLIC_LIMIT, samples: 64, sample_bound: 1_000_000, seed: 0 }
    }
}

/// `det H_F` as a polynomial of degree `nvars`.
pub fn hessian_determinant(f: &IntForm) -> Result<Polynomial> {
    if f.nvars() > 16 {
        return Err(Error::Precondition("symbolic determinant limited to 16 variables".into()));
    }
    Ok(linear_matrix_det(&f.hessian_linear_forms(), f.nvars()))
}

pub fn is_nondegenerate(f: &IntForm) -> Nondegeneracy {
    is_nondegenerate_with(f, &DegeneracyConfig::default())
}

pub fn is_nondegenerate_with(f: &IntForm, cfg: &DegeneracyConfig) -> Nondegeneracy {
    let n = f.nvars();
    if n <= cfg.symbolic_limit {
        let det = linear_matrix_det(&f.hessian_linear_forms(), n);
        return match det.degree() {
            None => Nondegeneracy::Degenerate,
            Some(d) => Nondegeneracy::Nondegenerate(grid_witness(&det, n, d)),
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.samples {
        let p: Vec<BigInt> =
            (0..n).map(|_| BigInt::from(rng.gen_range(-cfg.sample_bound..=cfg.sample_bound))).collect();
        let Ok(point) = PointProj::new(p) else { continue };
        if f.hessian(point.coords()).is_ok_and(|h| h.rank() == n) {
            return Nondegeneracy::Nondegenerate(point);
        }
    }
    Nondegeneracy::ProbablyDegenerate { samples: cfg.samples }
}

// A nonzero homogeneous polynomial of degree d cannot vanish on the whole
// grid {-k..k}^n once 2k + 1 > d, so this search always terminates.
fn grid_witness(det: &Polynomial, n: usize, degree: usize) -> PointProj {
    let max_bound = degree as u32 / 2 + 1;
    for bound in 1..=max_bound {
        if let Some(p) = primitive_points(n, bound).into_iter().find(|p| !det.eval(p.coords()).is_zero()) {
            return p;
        }
    }
    unreachable!("nonzero polynomial vanishes on a full grid")
}
