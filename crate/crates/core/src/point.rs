use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// A point of projective space with integer coordinates, stored as its unique
/// primitive representative whose first nonzero entry is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointProj {
    coords: Vec<BigInt>,
}

impl PointProj {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        let g = coords.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        if g.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let lead_negative = coords.iter().find(|c| !c.is_zero()).is_some_and(Signed::is_negative);
        let g = if lead_negative { -g } else { g };
        Ok(PointProj { coords: coords.into_iter().map(|c| c / &g).collect() })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self> {
        Self::new(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Coordinate vector `e_i` in `n` variables.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut coords = vec![BigInt::zero(); n];
        coords[i] = BigInt::from(1);
        PointProj { coords }
    }

    pub(crate) fn from_canonical(coords: Vec<BigInt>) -> Self {
        PointProj { coords }
    }
}

impl fmt::Display for PointProj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Canonical primitive points with all coordinates in `[-bound, bound]`, in
/// lexicographic order of their coordinate vectors.
pub fn primitive_points(n: usize, bound: u32) -> Vec<PointProj> {
    let b = i64::from(bound);
    primitive_points_with_lead(n, b, -b..=b)
}

/// As [`primitive_points`], restricted to points whose first coordinate lies
/// in `lead`. Used to partition searches across worker threads.
pub fn primitive_points_with_lead(n: usize, bound: i64, lead: std::ops::RangeInclusive<i64>) -> Vec<PointProj> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![0i64; n];
    for first in lead {
        if first < 0 {
            continue;
        }
        cur[0] = first;
        walk(&mut cur, 1, bound, first != 0, &mut out);
    }
    out
}

fn walk(cur: &mut [i64], pos: usize, bound: i64, seen_nonzero: bool, out: &mut Vec<PointProj>) {
    if pos == cur.len() {
        if seen_nonzero && cur.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1 {
            out.push(PointProj::from_canonical(cur.iter().map(|&c| BigInt::from(c)).collect()));
        }
        return;
    }
    let lo = if seen_nonzero { -bound } else { 0 };
    for v in lo..=bound {
        cur[pos] = v;
        walk(cur, pos + 1, bound, seen_nonzero || v != 0, out);
    }
    cur[pos] = 0;
}
