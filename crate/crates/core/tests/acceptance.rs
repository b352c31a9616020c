//! End-to-end acceptance checks. Runs without the test harness so that each
//! criterion prints one PASS/FAIL line; exits nonzero if any criterion fails.

#![allow(clippy::needless_range_loop)]

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use cubic3_core::invariants::DivisibilityVerdict;
use cubic3_core::reduction::EquivalenceVerdict;
use cubic3_core::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(int(n), int(d))
}

fn within(start: Instant, budget: Duration) -> Outcome {
    let t = start.elapsed();
    if t <= budget {
        Ok(format!("{t:?}"))
    } else {
        Err(format!("took {t:?}, budget {budget:?}"))
    }
}

fn blowup_pipeline() -> Outcome {
    let start = Instant::now();
    let fx = example_blowup_p3().map_err(|e| e.to_string())?;
    let stage1 = parse_form("y^3 + 3*y^2*z").unwrap();
    let restricted = fx.h_basis_form.restrict(&fx.stage1_basis).map_err(|e| e.to_string())?;
    ensure!(restricted.shifted(1) == stage1, "restriction gave {restricted}");
    let state = ThreefoldState::new(fx.stage1_form.clone(), 0, 0, rat(0, 1), Basket::empty()).unwrap();
    let next =
        blowup_curve(&state, fx.stage2_genus, &fx.stage2_e3, &fx.stage2_beta_dot_c).map_err(|e| e.to_string())?;
    let expected = parse_form("x^3 - 3*y*x^2 - 3*z*x^2 + y^3 + 3*y^2*z").unwrap();
    ensure!(next.f == expected, "blow-up gave {}", next.f);
    ensure!(ternary_discriminant(&next.f).unwrap().is_zero(), "discriminant is nonzero");
    let nodes = singular_point_search(&next.f, 3);
    ensure!(nodes == [PointProj::from_i64(&[0, 0, 1]).unwrap()], "singular points {nodes:?}");
    within(start, Duration::from_secs(1))
}

fn pell_family_distinct() -> Outcome {
    let start = Instant::now();
    for (a, b) in [(0i64, 1i64), (1, 0), (2, 3)] {
        let fam = pell_family(&int(a), &int(b), 5).map_err(|e| e.to_string())?;
        ensure!(fam.len() == 5, "expected 5 members");
        let f = pell_form(&int(a), &int(b));
        let mut triples = Vec::new();
        for m in &fam {
            let (al, be) = (i128::try_from(&m.solution.s).unwrap(), i128::try_from(&m.solution.t).unwrap());
            ensure!(al * al - 3 * be * be == 1, "not a Pell solution");
            let (a, b) = (a as i128, b as i128);
            let big_a = 3 * b * al * al * be + 3 * b * be.pow(3) + a * al.pow(3) + 9 * a * al * be * be;
            let big_b = 9 * a * be.pow(3) + 9 * b * al * be * be + 9 * a * al * al * be + b * al.pow(3);
            ensure!(m.matrix.det().unwrap().is_one(), "det != 1");
            let target =
                form(3, &[((0, 0, 0), big_a as i64), ((0, 0, 1), big_b as i64), ((0, 0, 2), 1), ((1, 1, 2), -3)]);
            ensure!(f.act(&m.matrix).unwrap() == target, "M . F mismatch at ({al}, {be})");
            triples.push(detect_reduced(&target).unwrap());
        }
        let distinct: BTreeSet<_> = triples.iter().map(|t| t.a.clone()).collect();
        ensure!(distinct.len() == 5, "a-components not distinct for ({a}, {b})");
        for i in 0..5 {
            for j in i + 1..5 {
                let v = triples_equivalent(&triples[i], &triples[j], 3).unwrap();
                ensure!(matches!(v, EquivalenceVerdict::DefinitelyNot(_)), "pair ({i}, {j}) gave {v:?}");
            }
        }
    }
    within(start, Duration::from_secs(1))
}

fn calibration() -> Outcome {
    let mut r = rng(3);
    for _ in 0..100 {
        let [a, b, c, d]: [i64; 4] = std::array::from_fn(|_| r.gen_range(-20..=20));
        let f = form(3, &[((0, 0, 0), a), ((0, 0, 1), b), ((0, 0, 2), c), ((1, 1, 1), d), ((2, 2, 2), 1)]);
        let inv = aronhold_st(&f).unwrap();
        let s = d * b * c;
        let t = 27 * a * a * d * d + 4 * b * b * b * d + 4 * c * c * c * d * d;
        ensure!(inv.s == rat(s, 1) && inv.t == rat(t, 1), "({a},{b},{c},{d}): S={}, T={}", inv.s, inv.t);
    }
    let fermat = ternary_discriminant(&parse_form("x^3 + y^3 + z^3").unwrap()).unwrap();
    ensure!(fermat == rat(729, 1), "Fermat discriminant {fermat}");
    Ok("100 samples".into())
}

fn binary_oracle() -> Outcome {
    let mut r = rng(4);
    let mut corpus = vec![(1, 0, 1), (0, 1, 1), (1, 1, 1), (2, 3, 5), (0, 0, 1), (1, 0, 2), (0, 3, 1)];
    while corpus.len() < 50 {
        let c = r.gen_range(-6i64..=6);
        if c != 0 {
            corpus.push((r.gen_range(-6..=6), r.gen_range(-6..=6), c));
        }
    }
    for &(a, b, c) in &corpus {
        let found = enumerate_binary_triples(&int(a), &int(b), &int(c), 20).map_err(|e| e.to_string())?;
        let set: BTreeSet<(i64, i64, i64)> = found
            .iter()
            .map(|t| (i64::try_from(&t.a).unwrap(), i64::try_from(&t.b).unwrap(), i64::try_from(&t.c).unwrap()))
            .collect();
        let oracle = binary_brute_force((a, b, c), 20);
        ensure!(set == oracle, "({a},{b},{c}): {set:?} vs {oracle:?}");
        let disc = binary_disc(a as i128, b as i128, c as i128);
        for t in &found {
            let f = form(2, &[((0, 0, 0), a), ((0, 0, 1), b), ((1, 1, 1), c)]);
            let v = [t.matrix.get(0, 1).clone(), t.matrix.get(1, 1).clone()];
            ensure!(t.system_det == 3 * f.eval(&v).unwrap(), "system determinant at ({a},{b},{c})");
            ensure!(disc == 0 || disc % i128::try_from(&t.c).unwrap() == 0, "c' does not divide the discriminant");
        }
    }
    let sums = enumerate_binary_triples(&int(1), &int(0), &int(1), 20).unwrap();
    let sums: BTreeSet<_> = sums.into_iter().map(|t| (t.a, t.b, t.c)).collect();
    ensure!(sums == BTreeSet::from([(int(1), int(0), int(1)), (int(-1), int(0), int(1))]), "(1,0,1) gave {sums:?}");
    Ok(format!("{} cases", corpus.len()))
}

fn sl_invariance() -> Outcome {
    let mut r = rng(5);
    for k in 0..20 {
        let n = if k < 10 { 2 } else { 3 };
        let f = random_form(&mut r, n, 5);
        let before_b = (n == 2).then(|| binary_discriminant(&f).unwrap());
        let before_t = (n == 3).then(|| aronhold_st(&f).unwrap());
        for _ in 0..100 {
            let mut t = random_sl(&mut r, n, 5);
            let moved = f.act(&to_matrix(&t)).unwrap();
            if let Some(d) = &before_b {
                ensure!(&binary_discriminant(&moved).unwrap() == d, "binary discriminant changed");
            }
            if let Some(inv) = &before_t {
                ensure!(&aronhold_st(&moved).unwrap() == inv, "S, T changed");
            }
            t[0].iter_mut().for_each(|x| *x = -*x);
            ensure!(f.act(&to_matrix(&t)).unwrap().content() == f.content(), "content changed");
        }
    }
    Ok("20 forms x 100 actions".into())
}

fn rank_law() -> Outcome {
    let mut r = rng(6);
    for _ in 0..100 {
        let n = r.gen_range(2..=4usize);
        // Q as a sum of a random number of signed squares, so low ranks occur
        let mut a = vec![vec![0i64; n]; n];
        for _ in 0..r.gen_range(0..=n) {
            let l: Vec<i64> = (0..n).map(|_| r.gen_range(-3..=3)).collect();
            let s = if r.gen_bool(0.5) { 1 } else { -1 };
            for i in 0..n {
                for j in 0..n {
                    a[i][j] += s * l[i] * l[j];
                }
            }
        }
        let mut terms = vec![((0, 0, 0), 1)];
        for i in 0..n {
            for j in i..n {
                let c = if i == j { a[i][i] } else { 2 * a[i][j] };
                terms.push(((0, i + 1, j + 1), c));
                for k in j..n {
                    terms.push(((i + 1, j + 1, k + 1), r.gen_range(-4..=4)));
                }
            }
        }
        let f = form(n + 1, &terms);
        let p = PointProj::unit(n + 1, 0);
        let rank = f.hessian_rank(&p).unwrap();
        let wide: Vec<Vec<i128>> = a.iter().map(|row| row.iter().map(|&x| x as i128).collect()).collect();
        ensure!(rank == rank_i128(&wide) + 1, "rank {rank} for Q = {a:?}");
    }
    Ok("100 instances".into())
}

fn discriminant_divisibility() -> Outcome {
    let mut r = rng(7);
    for _ in 0..100 {
        let a = r.gen_range(-20i64..=20);
        let d = loop {
            let d = r.gen_range(-20i64..=20);
            if d != 0 {
                break d;
            }
        };
        let f = form(3, &[((0, 0, 0), a), ((1, 1, 1), d), ((2, 2, 2), 1)]);
        let g = form(2, &[((0, 0, 0), d), ((1, 1, 1), 1)]);
        let expected = -27 * BigInt::from(a).pow(4) * BigInt::from(d).pow(2);
        match discriminant_divides(&g, &f).unwrap() {
            DivisibilityVerdict::Divides { quotient: Some(q), .. } if q == expected => {}
            other => return Err(format!("(a, d) = ({a}, {d}): {other:?}")),
        }
    }
    Ok("100 samples".into())
}

fn w_probe() -> Outcome {
    let fermat = parse_form("x^3 + y^3 + z^3").unwrap();
    let pts: BTreeSet<String> = low_rank_points(&fermat, 1, 10).iter().map(|p| p.point.to_string()).collect();
    let expected: BTreeSet<String> = ["[1,0,0]", "[0,1,0]", "[0,0,1]"].map(String::from).into();
    ensure!(pts == expected, "rank <= 1 points {pts:?}");
    ensure!(low_rank_points(&fermat, 0, 10).is_empty(), "rank 0 points found");
    Ok("3 points".into())
}

fn ledger() -> Outcome {
    let p3 = ThreefoldState::p3();
    let up = blowup_curve(&p3, 0, &int(-2), &[int(1)]).map_err(|e| e.to_string())?;
    ensure!(up.k3 == rat(-54, 1), "K3 after blow-up {}", up.k3);
    ensure!(up.f == parse_form("-2*x^3 - 3*x^2*y + y^3").unwrap(), "F after blow-up {}", up.f);
    let down = contract_to_curve(&up, 0).map_err(|e| e.to_string())?;
    ensure!(down.k3 == rat(-64, 1) && down.f.shifted(1) == parse_form("y^3").unwrap(), "round trip {:?}", down);
    let rec = down.history.last().unwrap();
    let s = estimate_s(&up.f, &SearchOptions::new(DEFAULT_S_RADIUS)).unwrap();
    ensure!(s >= int(2), "estimate_S = {s}");
    let curve_bound = topological_bounds(&int(2), &int(0), &int(2), &rat(0, 1), &rat(0, 1)).curve_bound;
    ensure!(curve_bound == int(10), "curve bound {curve_bound}");
    ensure!(rec.delta_k3 == rat(10, 1) && rec.bound_checked, "curve contraction record {rec:?}");

    let two = ThreefoldState::new(parse_form("x^3 + y^3").unwrap(), 0, 0, rat(-56, 1), Basket::empty()).unwrap();
    let pt = contract_to_point(&two, &rat(2, 1), &rat(1, 1)).map_err(|e| e.to_string())?;
    ensure!(pt.history[0].delta_k3 == rat(8, 1), "point contraction delta");
    ensure!(contract_to_point(&two, &rat(1, 1), &rat(5, 1)).is_err(), "a E3 = 5 accepted");

    let z = rat(0, 1);
    ensure!(topological_bounds(&int(2), &int(4), &int(0), &z, &z).volume_bound == int(156), "volume bound");
    ensure!(topological_bounds(&int(3), &int(0), &int(0), &z, &z).point_bound == int(9216), "point bound");
    Ok("all deltas exact".into())
}

fn class_count(f: &IntForm, radius: u32) -> std::result::Result<cubic3_core::reduction::ClassReport, String> {
    triple_classes(f, &SearchOptions::new(radius), 6).map_err(|e| e.to_string())
}

fn stabilization() -> Outcome {
    let start = Instant::now();
    let baseline = 6;
    let corpus = [
        "x^3 + y^3 + z^3",
        "x^3 + 2*y^3 + 3*z^3",
        "x^3 + x^2*y + x^2*z + y^3 + z^3",
        "x^3 + 2*x^2*y + 3*x^2*z + 5*y^3 + z^3",
        "x^2*y + y^2*z + z^2*x",
    ];
    let mut summary = Vec::new();
    for text in corpus {
        let f = parse_form(text).unwrap();
        ensure!(!ternary_discriminant(&f).unwrap().is_zero(), "{text} is singular");
        let small = class_count(&f, baseline)?;
        let large = class_count(&f, 2 * baseline)?;
        ensure!(small.unresolved == 0 && large.unresolved == 0, "{text}: inconclusive comparisons");
        ensure!(
            small.classes.len() == large.classes.len(),
            "{text}: {} classes at {baseline}, {} at {}",
            small.classes.len(),
            large.classes.len(),
            2 * baseline
        );
        for c in &large.classes {
            let matched = small.classes.iter().any(|s| {
                triples_equivalent(&s.representative.triple, &c.representative.triple, 6)
                    .is_ok_and(|v| v.is_equivalent())
            });
            ensure!(matched, "{text}: class {} is new at the doubled radius", c.representative.triple);
        }
        summary.push(small.classes.len());
    }
    let pell = pell_form(&int(0), &int(1));
    ensure!(ternary_discriminant(&pell).unwrap().is_zero(), "Pell form is smooth");
    let (small, large) = (class_count(&pell, baseline)?, class_count(&pell, 2 * baseline)?);
    ensure!(large.classes.len() > small.classes.len(), "Pell classes did not grow");
    let a_values = |r: u32| -> BTreeSet<BigInt> {
        search_reduced_triples(&pell, &SearchOptions::new(r)).unwrap().into_iter().map(|t| t.triple.a).collect()
    };
    ensure!(a_values(2 * baseline).len() > a_values(baseline).len(), "Pell a-values did not grow");
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("classes {summary:?} stable; Pell {} -> {}; {t}", small.classes.len(), large.classes.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("blow-up pipeline of P^3", blowup_pipeline),
        ("Pell family", pell_family_distinct),
        ("S, T calibration", calibration),
        ("binary enumeration vs brute force", binary_oracle),
        ("SL invariance and content", sl_invariance),
        ("Hessian rank law", rank_law),
        ("discriminant divisibility", discriminant_divisibility),
        ("rank <= 1 probe", w_probe),
        ("threefold ledger", ledger),
        ("stabilization of reduced triples", stabilization),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
