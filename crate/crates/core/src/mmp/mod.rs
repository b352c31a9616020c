//! Chern-number and Betti-number bookkeeping along divisorial contractions
//! of threefolds.
//!
//! A [`ThreefoldState`] carries `b2`, `b3`, `Ib3`, `K^3`, the intersection
//! form `F` on `H^2` and the basket of singular indices. Transitions return
//! new states and append a [`ContractionRecord`]. Every `delta_k3` is
//! `K^3` of the side carrying the exceptional divisor minus `K^3` of the
//! other side.

mod scenario;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::form::{IntForm, Monomial};
use crate::reduction::{detect_reduced, estimate_s, SearchOptions};

pub use scenario::{parse_scenario, replay, replay_from, Command, ScenarioReport, ScenarioStep};

/// Default search radius for the `S` estimate in [`contract_to_curve`].
pub const DEFAULT_S_RADIUS: u32 = 3;

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Indices `r >= 2` of the non-Gorenstein points, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Basket {
    indices: Vec<u32>,
}

impl Basket {
    pub fn new(mut indices: Vec<u32>) -> Result<Self> {
        if let Some(r) = indices.iter().find(|&&r| r < 2) {
            return Err(Error::Precondition(format!("basket index {r} is below 2")));
        }
        indices.sort_unstable();
        Ok(Basket { indices })
    }

    pub fn empty() -> Self {
        Basket::default()
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Least common multiple of the indices; 1 for the empty basket.
    pub fn index_lcm(&self) -> BigInt {
        self.indices.iter().fold(BigInt::one(), |l, &r| l.lcm(&BigInt::from(r)))
    }
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasketStats {
    /// Sum of the indices.
    pub xi: BigInt,
    /// Sum of `r - 1/r`.
    pub e: BigRational,
    /// Every index divides `4 xi`.
    pub index_check: bool,
}

pub fn basket_stats(basket: &Basket) -> BasketStats {
    let xi: BigInt = basket.indices.iter().map(|&r| BigInt::from(r)).sum();
    let e = basket
        .indices
        .iter()
        .map(|&r| {
            let r = BigInt::from(r);
            BigRational::new(&r * &r - BigInt::one(), r)
        })
        .fold(BigRational::zero(), |acc, x| acc + x);
    let four_xi: BigInt = 4 * &xi;
    let index_check = basket.indices.iter().all(|&r| four_xi.is_multiple_of(&BigInt::from(r)));
    BasketStats { xi, e, index_check }
}

/// `chi(O) = (-K.c2 + e) / 24`.
pub fn chi_riemann_roch(k_dot_c2: &BigRational, basket: &Basket) -> BigRational {
    (basket_stats(basket).e - k_dot_c2) / q(24)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopologicalBounds {
    /// `6 b2 + 36 b3`, bounding the canonical volume.
    pub volume_bound: BigInt,
    /// `2^10 b2^2`, bounding `K^3` jumps at point contractions.
    pub point_bound: BigInt,
    /// `2 S + 6 (b3 + 1)`, bounding `|K^3|` jumps at curve contractions.
    pub curve_bound: BigInt,
    /// `K^3 <= 3 K.c2`.
    pub bmy_ok: bool,
    /// `2 b2`, bounding the sum of indices.
    pub xi_cap: BigInt,
}

pub fn topological_bounds(
    b2: &BigInt,
    b3: &BigInt,
    s: &BigInt,
    k3: &BigRational,
    k_dot_c2: &BigRational,
) -> TopologicalBounds {
    TopologicalBounds {
        volume_bound: 6 * b2 + 36 * b3,
        point_bound: 1024 * b2 * b2,
        curve_bound: 2 * s + 6 * (b3 + 1),
        bmy_ok: k3 <= &(q(3) * k_dot_c2),
        xi_cap: 2 * b2,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractionKind {
    /// Blow-up of a smooth curve of genus `g` with exceptional `E^3 = e3`.
    BlowupCurve { g: u32, e3: BigInt, beta_dot_c: Vec<BigInt> },
    /// Contraction of a divisor to a point with discrepancy `a`.
    ContractToPoint { a: BigRational, e3: BigRational },
    /// Contraction of a divisor onto a smooth curve of genus `g`.
    ContractToCurve { g: u32, e3: BigInt },
}

impl ContractionKind {
    pub fn name(&self) -> &'static str {
        match self {
            ContractionKind::BlowupCurve { .. } => "blowup-curve",
            ContractionKind::ContractToPoint { .. } => "contract-point",
            ContractionKind::ContractToCurve { .. } => "contract-curve",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl BoundCheck {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        BoundCheck { name: name.to_string(), passed, detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionRecord {
    pub kind: ContractionKind,
    pub delta_k3: BigRational,
    /// Every check in `checks` passed.
    pub bound_checked: bool,
    pub checks: Vec<BoundCheck>,
}

impl ContractionRecord {
    fn new(kind: ContractionKind, delta_k3: BigRational, checks: Vec<BoundCheck>) -> Self {
        let bound_checked = checks.iter().all(|c| c.passed);
        ContractionRecord { kind, delta_k3, bound_checked, checks }
    }

    /// Names of the failed checks; these are warnings, not errors.
    pub fn warnings(&self) -> Vec<String> {
        self.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", c.name, c.detail)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreefoldState {
    pub b2: u32,
    pub b3: u32,
    pub ib3: u32,
    pub k3: BigRational,
    /// Intersection form in `b2` variables.
    pub f: IntForm,
    pub basket: Basket,
    pub history: Vec<ContractionRecord>,
}

impl ThreefoldState {
    pub fn new(f: IntForm, b3: u32, ib3: u32, k3: BigRational, basket: Basket) -> Result<Self> {
        let b2 = u32::try_from(f.nvars()).map_err(|_| Error::Precondition("too many variables".into()))?;
        if b2 == 0 {
            return Err(Error::Precondition("b2 must be at least 1".into()));
        }
        let cube = num_traits::pow(basket.index_lcm(), 3);
        if !cube.is_multiple_of(k3.denom()) {
            return Err(Error::Precondition(format!(
                "denominator of K^3 = {k3} does not divide {cube}, the cubed index of the basket"
            )));
        }
        Ok(ThreefoldState { b2, b3, ib3, k3, f, basket, history: Vec::new() })
    }

    /// Projective space: `b2 = 1`, `F = x^3`, `K^3 = -64`.
    pub fn p3() -> Self {
        let f = IntForm::from_terms(1, [(Monomial::new(0, 0, 0), BigInt::one())]).expect("one variable");
        ThreefoldState::new(f, 0, 0, q(-64), Basket::empty()).expect("valid state")
    }

    /// Equality of every field except the history.
    pub fn same_ledger(&self, other: &ThreefoldState) -> bool {
        self.b2 == other.b2
            && self.b3 == other.b3
            && self.ib3 == other.ib3
            && self.k3 == other.k3
            && self.f == other.f
            && self.basket == other.basket
    }

    pub fn with_basket(mut self, basket: Basket) -> Self {
        self.basket = basket;
        self
    }

    fn next(&self, f: IntForm, b2: u32, b3: u32, ib3: u32, record: ContractionRecord) -> Self {
        let mut history = self.history.clone();
        let k3 = &self.k3 + &record_k3_change(&record);
        history.push(record);
        ThreefoldState { b2, b3, ib3, k3, f, basket: self.basket.clone(), history }
    }
}

// Change of K^3 along the recorded direction of travel.
fn record_k3_change(record: &ContractionRecord) -> BigRational {
    match record.kind {
        ContractionKind::BlowupCurve { .. } => record.delta_k3.clone(),
        _ => -record.delta_k3.clone(),
    }
}

/// `e3 x0^3 - 3 x0^2 (sum beta_i x_i) + F(x1, .., xn)`: the form after
/// blowing up a curve with `beta_i . C` given.
pub fn blowup_form(f: &IntForm, e3: &BigInt, beta_dot_c: &[BigInt]) -> Result<IntForm> {
    if beta_dot_c.len() != f.nvars() {
        return Err(Error::DimensionMismatch { expected: f.nvars(), found: beta_dot_c.len() });
    }
    let mut out = f.shifted(1);
    out.add_term(Monomial::new(0, 0, 0), e3.clone());
    for (i, c) in beta_dot_c.iter().enumerate() {
        out.add_term(Monomial::new(0, 0, i + 1), -3 * c);
    }
    Ok(out)
}

/// `K^3` rises by `-2 E^3 + 6 - 6g`; `b2` by one, `b3` and `Ib3` by `2g`.
pub fn blowup_curve(state: &ThreefoldState, g: u32, e3: &BigInt, beta_dot_c: &[BigInt]) -> Result<ThreefoldState> {
    let f = blowup_form(&state.f, e3, beta_dot_c)?;
    let delta = BigRational::from_integer(-2 * e3 + 6 - 6 * BigInt::from(g));
    let kind = ContractionKind::BlowupCurve { g, e3: e3.clone(), beta_dot_c: beta_dot_c.to_vec() };
    let record = ContractionRecord::new(kind, delta, Vec::new());
    Ok(state.next(f, state.b2 + 1, state.b3 + 2 * g, state.ib3 + 2 * g, record))
}

/// Contracts the divisor `x0` to a point: `K^3` drops by `a^3 E^3`.
///
/// `F` must split as `c x0^3 + F'(x1, ..)`. Fails unless `a > 0` and
/// `0 < a E^3 <= 4`. The conditions `E^3 >= 1/R` (with `R` the index of
/// the basket) and `a^3 E^3 <= 2^10 b2^2` are recorded as checks only.
pub fn contract_to_point(state: &ThreefoldState, a: &BigRational, e3: &BigRational) -> Result<ThreefoldState> {
    if !a.is_positive() {
        return Err(Error::Precondition(format!("discrepancy a = {a} must be positive")));
    }
    if state.b2 < 2 {
        return Err(Error::Precondition("b2 must be at least 2 to contract a divisor".into()));
    }
    let ae3 = a * e3;
    if !ae3.is_positive() || ae3 > q(4) {
        return Err(Error::BoundViolated(format!("a E^3 = {ae3} is not in (0, 4]")));
    }
    if let Some((m, _)) = state.f.terms().find(|(m, _)| matches!(m.degree_in(0), 1 | 2)) {
        let [i, j, k] = m.indices();
        return Err(Error::ShapeViolation(format!("monomial x{i}*x{j}*x{k} mixes x0 with the other variables")));
    }
    let delta = a * a * a * e3;
    debug_assert!(delta.is_positive());
    let r = BigRational::from_integer(state.basket.index_lcm());
    let point_bound = q(1024) * q(i64::from(state.b2)).pow(2);
    let checks = vec![
        BoundCheck::new("a*E3 in (0,4]", true, format!("a*E3 = {ae3}")),
        BoundCheck::new("E3 >= 1/R", e3 >= &r.recip(), format!("E3 = {e3}, R = {r}")),
        BoundCheck::new("delta_K3 <= 2^10*b2^2", delta <= point_bound, format!("{delta} vs {point_bound}")),
    ];
    let f = state.f.terms().filter(|(m, _)| m.degree_in(0) == 0).map(|(m, c)| (*m, c.clone()));
    let f = IntForm::from_terms(state.f.nvars(), f)?;
    let f = drop_first_variable(&f)?;
    let kind = ContractionKind::ContractToPoint { a: a.clone(), e3: e3.clone() };
    let record = ContractionRecord::new(kind, delta, checks);
    Ok(state.next(f, state.b2 - 1, state.b3, state.ib3, record))
}

fn drop_first_variable(f: &IntForm) -> Result<IntForm> {
    let terms = f.terms().map(|(m, c)| {
        let [i, j, k] = m.indices();
        (Monomial::new(i - 1, j - 1, k - 1), c.clone())
    });
    IntForm::from_terms(f.nvars() - 1, terms)
}

pub fn contract_to_curve(state: &ThreefoldState, g: u32) -> Result<ThreefoldState> {
    contract_to_curve_with(state, g, DEFAULT_S_RADIUS)
}

/// Inverse of [`blowup_curve`] on a form already in reduced shape
/// `a x0^3 + x0^2 (sum b_i x_i) + G` with every `b_i` divisible by 3.
///
/// `|delta_k3| <= 2 S + 6 (b3 + 1)` is recorded as a check with `S`
/// estimated by a search of the given radius. The estimate is a lower
/// bound, so a failed check is a warning.
pub fn contract_to_curve_with(state: &ThreefoldState, g: u32, radius: u32) -> Result<ThreefoldState> {
    if state.b2 < 2 {
        return Err(Error::Precondition("b2 must be at least 2 to contract a divisor".into()));
    }
    crate::invariants::check_reduced_shape(&state.f)?;
    let triple = detect_reduced(&state.f).ok_or_else(|| Error::Internal("reduced shape not detected".into()))?;
    let three = BigInt::from(3);
    if let Some(b) = triple.b.iter().find(|b| !b.is_multiple_of(&three)) {
        return Err(Error::Hypothesis(format!("coefficient {b} of x0^2 x_i is not divisible by 3")));
    }
    let (Some(b3), Some(ib3)) = (state.b3.checked_sub(2 * g), state.ib3.checked_sub(2 * g)) else {
        return Err(Error::Precondition(format!(
            "genus {g} needs b3 >= {0} and Ib3 >= {0}; have b3 = {1}, Ib3 = {2}",
            2 * g,
            state.b3,
            state.ib3
        )));
    };
    let delta = BigRational::from_integer(-2 * &triple.a + 6 - 6 * BigInt::from(g));
    let s = estimate_s(&state.f, &SearchOptions::new(radius))?;
    let bound = BigRational::from_integer(2 * &s + 6 * (BigInt::from(state.b3) + 1));
    let checks = vec![BoundCheck::new(
        "|delta_K3| <= 2S+6(b3+1)",
        delta.abs() <= bound,
        format!("|{delta}| vs {bound} with S >= {s} at radius {radius}"),
    )];
    let kind = ContractionKind::ContractToCurve { g, e3: triple.a.clone() };
    let record = ContractionRecord::new(kind, delta, checks);
    Ok(state.next(triple.g, state.b2 - 1, b3, ib3, record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, ints, rat};
    use crate::form::parse_form;

    fn basket(v: &[u32]) -> Basket {
        Basket::new(v.to_vec()).unwrap()
    }

    #[test]
    fn basket_examples() {
        let s = basket_stats(&basket(&[2, 3, 5]));
        assert_eq!((s.xi, s.e, s.index_check), (int(10), rat(269, 30), false));
        let s = basket_stats(&Basket::empty());
        assert_eq!((s.xi, s.e, s.index_check), (int(0), rat(0, 1), true));
        let s = basket_stats(&basket(&[2, 2]));
        assert_eq!((s.xi, s.e, s.index_check), (int(4), rat(3, 1), true));
        assert!(Basket::new(vec![1]).is_err());
    }

    #[test]
    fn riemann_roch_examples() {
        assert_eq!(chi_riemann_roch(&rat(-24, 1), &Basket::empty()), rat(1, 1));
        assert_eq!(chi_riemann_roch(&rat(0, 1), &Basket::empty()), rat(0, 1));
        assert_eq!(chi_riemann_roch(&rat(3, 2), &basket(&[2])), rat(0, 1));
    }

    #[test]
    fn bounds_examples() {
        let z = rat(0, 1);
        let b = topological_bounds(&int(2), &int(4), &int(0), &z, &z);
        assert_eq!(b.volume_bound, int(156));
        assert_eq!(topological_bounds(&int(3), &int(0), &int(0), &z, &z).point_bound, int(9216));
        assert_eq!(topological_bounds(&int(1), &int(0), &int(2), &z, &z).curve_bound, int(10));
        assert!(!topological_bounds(&int(1), &int(0), &int(0), &rat(1, 1), &z).bmy_ok);
    }

    #[test]
    fn blowup_of_p3_along_a_line() {
        let s = blowup_curve(&ThreefoldState::p3(), 0, &int(-2), &ints(&[1])).unwrap();
        assert_eq!((s.b2, s.k3.clone()), (2, rat(-54, 1)));
        assert_eq!(s.f, parse_form("-2*x^3 - 3*x^2*y + y^3").unwrap());
        let back = contract_to_curve(&s, 0).unwrap();
        assert!(back.same_ledger(&ThreefoldState::p3()));
        let rec = back.history.last().unwrap();
        assert_eq!(rec.delta_k3, rat(10, 1));
        assert!(rec.bound_checked);
    }

    #[test]
    fn genus_one_blowup() {
        let s = blowup_curve(&ThreefoldState::p3(), 1, &int(7), &ints(&[4])).unwrap();
        assert_eq!(s.history[0].delta_k3, rat(-14, 1));
        assert_eq!((s.b3, s.ib3), (2, 2));
    }

    #[test]
    fn point_contractions() {
        let start = ThreefoldState::new(parse_form("x^3 + y^3").unwrap(), 0, 0, rat(-56, 1), Basket::empty()).unwrap();
        let s = contract_to_point(&start, &rat(2, 1), &rat(1, 1)).unwrap();
        assert_eq!(s.history[0].delta_k3, rat(8, 1));
        assert_eq!(s.k3, rat(-64, 1));
        assert_eq!(s.f, parse_form("x^3").unwrap());
        assert!(matches!(contract_to_point(&start, &rat(1, 1), &rat(5, 1)), Err(Error::BoundViolated(_))));
        assert!(contract_to_point(&start, &rat(-1, 1), &rat(-1, 1)).is_err());
        let s = contract_to_point(&start.with_basket(basket(&[4])), &rat(1, 2), &rat(2, 1)).unwrap();
        assert_eq!(s.history[0].delta_k3, rat(1, 4));
        assert!(s.history[0].bound_checked);
    }

    #[test]
    fn curve_contraction_errors() {
        let s = blowup_curve(&ThreefoldState::p3(), 0, &int(-2), &ints(&[1])).unwrap();
        assert!(matches!(contract_to_curve(&s, 1), Err(Error::Precondition(_))));
        assert!(contract_to_curve(&ThreefoldState::p3(), 0).is_err());
        let bad =
            ThreefoldState::new(parse_form("x^3 + x^2*y + y^3").unwrap(), 0, 0, rat(0, 1), Basket::empty()).unwrap();
        assert!(matches!(contract_to_curve(&bad, 0), Err(Error::Hypothesis(_))));
    }
}
