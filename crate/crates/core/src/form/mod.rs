//! Integral (and rational) cubic forms: sparse storage, evaluation, Hessians,
//! the unimodular action `T . F(x) = F(T x)`, and restriction to sublattices.

mod degeneracy;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeff::Coeff;
use crate::error::{Error, Result};
use crate::matrix::{IntMatrix, Matrix, RatMatrix};
use crate::point::PointProj;

pub use degeneracy::{
    hessian_determinant, is_nondegenerate, is_nondegenerate_with, DegeneracyConfig, Nondegeneracy, SYMBOLIC_LIMIT,
};
pub use parse::{parse_form, parse_form_in};

/// The monomial `x_i x_j x_k`, stored as its sorted index triple.
///
/// The derived order on sorted triples is the graded-lex order on exponent
/// vectors: `x0^3 < x0^2 x1 < x0^2 x2 < x0 x1^2 < ...`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([usize; 3]);

impl Monomial {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        let mut idx = [i, j, k];
        idx.sort_unstable();
        Monomial(idx)
    }

    pub fn indices(&self) -> [usize; 3] {
        self.0
    }

    pub fn max_index(&self) -> usize {
        self.0[2]
    }

    /// Exponent of variable `v`.
    pub fn degree_in(&self, v: usize) -> usize {
        self.0.iter().filter(|&&i| i == v).count()
    }

    /// Multinomial coefficient `3! / (e_0! e_1! ...)`: 1, 3 or 6.
    pub fn multiplicity(&self) -> u32 {
        let [i, j, k] = self.0;
        match (i == j, j == k) {
            (true, true) => 1,
            (false, false) => 6,
            _ => 3,
        }
    }

    fn exponents(&self) -> Vec<(usize, u32)> {
        let mut out: Vec<(usize, u32)> = Vec::with_capacity(3);
        for &i in &self.0 {
            match out.last_mut() {
                Some((v, e)) if *v == i => *e += 1,
                _ => out.push((i, 1)),
            }
        }
        out
    }

    pub(crate) fn render(&self, names: &VarNames) -> String {
        self.exponents()
            .into_iter()
            .map(|(v, e)| if e == 1 { names.name(v) } else { format!("{}^{}", names.name(v), e) })
            .collect::<Vec<_>>()
            .join("*")
    }
}

pub(crate) enum VarNames {
    Aliases,
    Indexed,
}

impl VarNames {
    fn for_nvars(n: usize) -> Self {
        if n <= 4 {
            VarNames::Aliases
        } else {
            VarNames::Indexed
        }
    }

    fn name(&self, v: usize) -> String {
        match self {
            VarNames::Aliases => ["x", "y", "z", "w"][v].to_string(),
            VarNames::Indexed => format!("x{v}"),
        }
    }
}

/// Homogeneous cubic polynomial in `nvars` variables with canonical sparse
/// storage: only nonzero coefficients are kept, keyed by sorted index triple,
/// and each stores the coefficient of `x_i x_j x_k` as written in expanded
/// form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicForm<C = BigInt> {
    nvars: usize,
    coeffs: BTreeMap<Monomial, C>,
}

pub type IntForm = CubicForm<BigInt>;
pub type RatForm = CubicForm<BigRational>;

/// Value, gradient and Hessian of a form at one point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation<C: Coeff = BigInt> {
    pub value: C,
    pub gradient: Vec<C>,
    pub hessian: Matrix<C>,
}

impl<C: Coeff> CubicForm<C> {
    pub fn zero(nvars: usize) -> Self {
        CubicForm { nvars, coeffs: BTreeMap::new() }
    }

    /// Accumulates terms; repeated monomials are summed and zeros dropped.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, C)>) -> Result<Self> {
        let mut f = Self::zero(nvars);
        for (m, c) in terms {
            if m.max_index() >= nvars {
                return Err(Error::DimensionMismatch { expected: nvars, found: m.max_index() + 1 });
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.get_mut(&m) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.coeffs.remove(&m);
                }
            }
            None => {
                self.coeffs.insert(m, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.coeffs.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeff_of(&self, i: usize, j: usize, k: usize) -> C {
        self.coeff(&Monomial::new(i, j, k))
    }

    /// Nonzero terms in graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.coeffs.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut f = Self::zero(self.nvars);
        for (m, c) in &self.coeffs {
            f.add_term(*m, c.clone() * s.clone());
        }
        f
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: other.nvars });
        }
        let mut f = self.clone();
        for (m, c) in &other.coeffs {
            f.add_term(*m, c.clone());
        }
        Ok(f)
    }

    /// The same polynomial viewed in `offset + nvars` variables, with variable
    /// `i` renamed to `i + offset`.
    pub fn shifted(&self, offset: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(m, c)| {
                let [i, j, k] = m.0;
                (Monomial([i + offset, j + offset, k + offset]), c.clone())
            })
            .collect();
        CubicForm { nvars: self.nvars + offset, coeffs }
    }

    /// The same polynomial viewed in `nvars >= self.nvars()` variables.
    pub fn embed(&self, nvars: usize) -> Result<Self> {
        if nvars < self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: nvars });
        }
        Ok(CubicForm { nvars, coeffs: self.coeffs.clone() })
    }

    fn check_point(&self, p: &[C]) -> Result<()> {
        if p.len() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: p.len() });
        }
        Ok(())
    }

    pub fn eval(&self, p: &[C]) -> Result<C> {
        self.check_point(p)?;
        Ok(self.coeffs.iter().fold(C::zero(), |acc, (m, c)| {
            let [i, j, k] = m.0;
            acc + c.clone() * p[i].clone() * p[j].clone() * p[k].clone()
        }))
    }

    pub fn gradient(&self, p: &[C]) -> Result<Vec<C>> {
        self.check_point(p)?;
        let mut g = vec![C::zero(); self.nvars];
        for (m, c) in &self.coeffs {
            let idx = m.0;
            for a in 0..3 {
                let (b, d) = others(a);
                g[idx[a]] = g[idx[a]].clone() + c.clone() * p[idx[b]].clone() * p[idx[d]].clone();
            }
        }
        Ok(g)
    }

    pub fn hessian(&self, p: &[C]) -> Result<Matrix<C>> {
        self.check_point(p)?;
        let mut h = Matrix::<C>::zeros(self.nvars, self.nvars);
        for (m, c) in &self.coeffs {
            let idx = m.0;
            for a in 0..3 {
                for b in 0..3 {
                    if a == b {
                        continue;
                    }
                    let rest = 3 - a - b;
                    let (r, s) = (idx[a], idx[b]);
                    let v = h.get(r, s).clone() + c.clone() * p[idx[rest]].clone();
                    h.set(r, s, v);
                }
            }
        }
        Ok(h)
    }

    /// Value, gradient and Hessian at `p`.
    pub fn evaluate_all(&self, p: &[C]) -> Result<Evaluation<C>> {
        Ok(Evaluation { value: self.eval(p)?, gradient: self.gradient(p)?, hessian: self.hessian(p)? })
    }

    /// The linear form `x -> x^T H_F . ` coefficients, i.e. the Hessian as a
    /// matrix of linear forms: entry `(r, s)` is the coefficient vector of
    /// `d_r d_s F`.
    pub fn hessian_linear_forms(&self) -> Vec<Vec<Vec<C>>> {
        let n = self.nvars;
        let mut h = vec![vec![vec![C::zero(); n]; n]; n];
        for (m, c) in &self.coeffs {
            let idx = m.0;
            for a in 0..3 {
                for b in 0..3 {
                    if a == b {
                        continue;
                    }
                    let rest = idx[3 - a - b];
                    let cell = &mut h[idx[a]][idx[b]][rest];
                    *cell = cell.clone() + c.clone();
                }
            }
        }
        h
    }

    /// Substitutes `x = M y`: the result is the form `y -> F(M y)` in
    /// `M.cols()` variables. Square `M` gives the action `M . F`.
    pub fn substitute<D>(&self, m: &Matrix<D>) -> Result<CubicForm<D>>
    where
        D: Coeff + From<C>,
    {
        if m.rows() != self.nvars {
            return Err(Error::DimensionMismatch { expected: self.nvars, found: m.rows() });
        }
        let k = m.cols();
        // nonzero entries of each row of M: x_i = sum_j m_ij y_j
        let rows: Vec<Vec<(usize, D)>> = (0..m.rows())
            .map(|i| m.row(i).iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        let mut out = CubicForm::<D>::zero(k);
        for (mono, c) in &self.coeffs {
            let [i, j, l] = mono.0;
            let c = D::from(c.clone());
            for (a, va) in &rows[i] {
                let ca = c.clone() * va.clone();
                for (b, vb) in &rows[j] {
                    let cab = ca.clone() * vb.clone();
                    for (d, vd) in &rows[l] {
                        out.add_term(Monomial::new(*a, *b, *d), cab.clone() * vd.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// The action `T . F(x) = F(T x)` for a square matrix `T`.
    pub fn act<D>(&self, t: &Matrix<D>) -> Result<CubicForm<D>>
    where
        D: Coeff + From<C>,
    {
        if !t.is_square() {
            return Err(Error::DimensionMismatch { expected: t.rows(), found: t.cols() });
        }
        self.substitute(t)
    }

    /// Symmetric trilinear form with `phi(x, x, x) = F(x)`.
    pub fn polarize(&self, u: &[C], v: &[C], w: &[C]) -> Result<BigRational>
    where
        BigRational: From<C>,
    {
        self.check_point(u)?;
        self.check_point(v)?;
        self.check_point(w)?;
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut total = BigRational::zero();
        for (m, c) in &self.coeffs {
            let idx = m.0;
            let mut s = BigRational::zero();
            for p in PERMS {
                s += BigRational::from(u[idx[p[0]]].clone() * v[idx[p[1]]].clone() * w[idx[p[2]]].clone());
            }
            total += BigRational::from(c.clone()) * s;
        }
        Ok(total / BigRational::from_integer(BigInt::from(6)))
    }

    /// Canonical text: graded-lex order, explicit signs, `x,y,z,w` names for
    /// up to four variables and `x0..` beyond.
    pub fn format(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let names = VarNames::for_nvars(self.nvars);
        let mut out = String::new();
        for (n, (m, c)) in self.coeffs.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (n, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push('*');
            }
            out.push_str(&m.render(&names));
        }
        out
    }
}

fn others(a: usize) -> (usize, usize) {
    match a {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

impl<C: Coeff> fmt::Display for CubicForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format())
    }
}

impl<C: Coeff> fmt::Debug for CubicForm<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CubicForm[{}; {}]", self.nvars, self.format())
    }
}

impl IntForm {
    /// Gcd of all coefficients; 0 only for the zero form.
    pub fn content(&self) -> BigInt {
        self.coeffs.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn to_rational(&self) -> RatForm {
        CubicForm {
            nvars: self.nvars,
            coeffs: self.coeffs.iter().map(|(m, c)| (*m, BigRational::from(c.clone()))).collect(),
        }
    }

    /// Exact rank of `H_F(p)`; independent of the representative of `p`.
    pub fn hessian_rank(&self, p: &PointProj) -> Result<usize> {
        Ok(self.hessian(p.coords())?.rank())
    }

    /// Restriction to the sublattice spanned by `basis`: substitutes
    /// `x = sum_i y_i basis[i]`.
    pub fn restrict(&self, basis: &[Vec<BigInt>]) -> Result<IntForm> {
        for b in basis {
            if b.len() != self.nvars {
                return Err(Error::DimensionMismatch { expected: self.nvars, found: b.len() });
            }
        }
        let m = IntMatrix::from_columns(basis)?;
        if basis.is_empty() || m.rank() != basis.len() {
            return Err(Error::DependentBasis);
        }
        self.substitute(&m)
    }

    /// Symmetric trilinear data `phi(i, j, k)` with `F = sum binom(3, I) phi(h^I) x^I`.
    /// Entries are rational when a coefficient is not divisible by its
    /// multinomial weight.
    pub fn trilinear_coefficient(&self, i: usize, j: usize, k: usize) -> BigRational {
        let m = Monomial::new(i, j, k);
        BigRational::new(self.coeff(&m), BigInt::from(m.multiplicity()))
    }
}

impl RatForm {
    pub fn is_integral(&self) -> bool {
        self.coeffs.values().all(BigRational::is_integer)
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_integral(&self) -> Option<IntForm> {
        let coeffs: Option<BTreeMap<Monomial, BigInt>> =
            self.coeffs.iter().map(|(m, c)| c.as_integer().map(|c| (*m, c))).collect();
        coeffs.map(|coeffs| CubicForm { nvars: self.nvars, coeffs })
    }

    pub fn act_rational(&self, t: &RatMatrix) -> Result<RatForm> {
        self.act(t)
    }
}

/// Symmetric trilinear form on `Z^n`, e.g. intersection numbers of a basis
/// of divisor classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrilinearForm {
    n: usize,
    values: Vec<BigInt>,
}

impl TrilinearForm {
    pub fn zero(n: usize) -> Self {
        TrilinearForm { n, values: vec![BigInt::zero(); n * n * n] }
    }

    /// Builds from arbitrary (not yet checked) data; `f(i, j, k)` for all triples.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize, usize) -> BigInt) -> Self {
        let mut t = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t.values[(i * n + j) * n + k] = f(i, j, k);
                }
            }
        }
        t
    }

    /// Symmetric data from values on sorted triples; unspecified triples are 0.
    pub fn symmetric(n: usize, values: &[((usize, usize, usize), i64)]) -> Self {
        let mut t = Self::zero(n);
        for &((i, j, k), v) in values {
            for [a, b, c] in [[i, j, k], [i, k, j], [j, i, k], [j, k, i], [k, i, j], [k, j, i]] {
                t.values[(a * n + b) * n + c] = BigInt::from(v);
            }
        }
        t
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.values[(i * self.n + j) * self.n + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: BigInt) {
        let n = self.n;
        self.values[(i * n + j) * n + k] = v;
    }

    pub fn check_symmetric(&self) -> Result<()> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if v != self.get(j, i, k) || v != self.get(i, k, j) {
                        return Err(Error::AsymmetricTrilinear(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }
}

/// `F(x) = sum_I binom(3, I) phi(h^I) x^I`: the cubic form attached to a
/// symmetric trilinear form. The zero form is accepted; callers can test
/// [`CubicForm::is_zero`].
pub fn build_from_intersections(phi: &TrilinearForm) -> Result<IntForm> {
    phi.check_symmetric()?;
    let n = phi.n();
    let mut f = IntForm::zero(n);
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let m = Monomial::new(i, j, k);
                f.add_term(m, phi.get(i, j, k) * BigInt::from(m.multiplicity()));
            }
        }
    }
    Ok(f)
}

/// `Some` when the matrix has determinant exactly 1.
pub fn check_special(t: &IntMatrix) -> Option<()> {
    t.det().ok().filter(One::is_one).map(|_| ())
}
