use std::fmt::Write as _;

use cubic3_core::families::example_blowup_p3;
use cubic3_core::mmp::{replay, ContractionKind, ScenarioReport, ThreefoldState};
use cubic3_core::reduction::{point_contractions, PointContraction};
use cubic3_core::{
    aronhold_st, basket_stats, binary_discriminant, chi_riemann_roch, detect_reduced, enumerate_binary_triples,
    estimate_s, low_rank_points, normalize_line, parse_form, parse_form_in, pell_family, point_contraction_extract,
    search_reduced_triples, topological_bounds, triple_classes, triples_equivalent, Basket, EquivalenceVerdict, Error,
    IntForm, IntMatrix, Monomial, PointProj, ReducedTriple, Result, SearchOptions,
};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::args::{Cmd, FormArg};
use crate::render::{self, num, nums};
use crate::{CommandResult, ErrorInfo, EXIT_DOMAIN, EXIT_OK};

struct Output {
    echo: String,
    result: Value,
    text: String,
    warnings: Vec<String>,
}

impl Output {
    fn new(echo: String, result: Value, text: String) -> Self {
        Output { echo, result, text, warnings: Vec::new() }
    }
}

fn op_name(cmd: &Cmd) -> &'static str {
    match cmd {
        Cmd::Invariants(_) => "invariants",
        Cmd::Rank { .. } => "rank",
        Cmd::Act { .. } => "act",
        Cmd::Reduce { .. } => "reduce",
        Cmd::Equiv { .. } => "equiv",
        Cmd::EnumerateBinary { .. } => "enumerate-binary",
        Cmd::Lowrank { .. } => "lowrank",
        Cmd::NormalizeLine(_) => "normalize-line",
        Cmd::EstimateS { .. } => "estimate-s",
        Cmd::ExtractPoint { .. } => "extract-point",
        Cmd::Pell { .. } => "pell",
        Cmd::Fixtures { .. } => "fixtures",
        Cmd::Simulate { .. } => "simulate",
        Cmd::Bounds { .. } => "bounds",
    }
}

// Echo used when the command fails before producing a canonical one.
fn raw_echo(cmd: &Cmd) -> String {
    let op = op_name(cmd);
    match cmd {
        Cmd::Invariants(f)
        | Cmd::Rank { form: f, .. }
        | Cmd::Act { form: f, .. }
        | Cmd::Reduce { form: f, .. }
        | Cmd::Lowrank { form: f, .. }
        | Cmd::NormalizeLine(f)
        | Cmd::EstimateS { form: f, .. }
        | Cmd::ExtractPoint { form: f, .. } => format!("{op} {}", f.form),
        Cmd::Equiv { first, second, .. } => format!("{op} {first} | {second}"),
        Cmd::Simulate { file } => format!("{op} {}", file.display()),
        _ => op.to_string(),
    }
}

pub fn dispatch(cmd: Cmd, threads: usize, json: bool) -> CommandResult {
    let op = op_name(&cmd).to_string();
    let fallback_echo = raw_echo(&cmd);
    let outcome = match cmd {
        Cmd::Invariants(f) => invariants(&f),
        Cmd::Rank { form, point } => rank(&form, &point.0),
        Cmd::Act { form, matrix } => act(&form, matrix.0),
        Cmd::Reduce { form, radius } => reduce(&form, radius, threads),
        Cmd::Equiv { first, second, radius } => equiv(&first, &second, radius),
        Cmd::EnumerateBinary { a, b, c, bound } => enumerate_binary(&a, &b, &c, bound),
        Cmd::Lowrank { form, max_rank, bound } => lowrank(&form, max_rank, bound),
        Cmd::NormalizeLine(f) => normalize(&f),
        Cmd::EstimateS { form, radius, classes } => estimate(&form, radius, classes, threads),
        Cmd::ExtractPoint { form, point, radius } => extract(&form, point.map(|p| p.0), radius),
        Cmd::Pell { a, b, count } => pell(&a, &b, count),
        Cmd::Fixtures { name } => fixtures(&name),
        Cmd::Simulate { file } => simulate(&file),
        Cmd::Bounds { b2, b3, s, k3, kc2, basket } => bounds(&b2, &b3, &s, &k3, &kc2, basket.map(|b| b.0)),
    };
    match outcome {
        Ok(out) => CommandResult {
            op,
            input_echo: out.echo,
            result: out.result,
            text: out.text,
            warnings: out.warnings,
            error: None,
            exit_code: EXIT_OK,
            json,
        },
        Err(e) => CommandResult {
            op,
            input_echo: fallback_echo,
            result: Value::Null,
            text: String::new(),
            warnings: Vec::new(),
            error: Some(error_info(&e)),
            exit_code: EXIT_DOMAIN,
            json,
        },
    }
}

fn error_info(e: &Error) -> ErrorInfo {
    let position = match e {
        Error::Syntax { pos, .. } | Error::NonHomogeneousDegree3 { pos, .. } | Error::MixedVariableStyles { pos } => {
            Some(*pos)
        }
        _ => None,
    };
    ErrorInfo { code: e.code().to_string(), message: e.to_string(), position }
}

fn parse(f: &FormArg) -> Result<IntForm> {
    match f.nvars {
        Some(n) => parse_form_in(&f.form, n),
        None => parse_form(&f.form),
    }
}

fn point(coords: &[BigInt]) -> Result<PointProj> {
    PointProj::new(coords.to_vec())
}

fn invariants(fa: &FormArg) -> Result<Output> {
    let f = parse(fa)?;
    let echo = format!("invariants {f}");
    match f.nvars() {
        2 => {
            let d = binary_discriminant(&f)?;
            let result = json!({ "nvars": 2, "Delta": num(&d) });
            Ok(Output::new(echo, result, format!("Delta = {d}")))
        }
        3 => {
            let inv = aronhold_st(&f)?;
            let result = json!({ "nvars": 3, "S": num(&inv.s), "T": num(&inv.t), "Delta": num(&inv.delta) });
            Ok(Output::new(echo, result, format!("S = {}\nT = {}\nDelta = {}", inv.s, inv.t, inv.delta)))
        }
        n => Err(Error::WrongArity { expected: 3, found: n }),
    }
}

fn rank(fa: &FormArg, coords: &[BigInt]) -> Result<Output> {
    let f = parse(fa)?;
    let p = point(coords)?;
    let r = f.hessian_rank(&p)?;
    let value = f.eval(p.coords())?;
    let echo = format!("rank {f} --point {}", render::ints_text(p.coords()));
    let result = json!({ "point": render::point(&p), "rank": r, "value": num(&value) });
    Ok(Output::new(echo, result, r.to_string()))
}

fn act(fa: &FormArg, rows: Vec<Vec<BigInt>>) -> Result<Output> {
    let f = parse(fa)?;
    let m = IntMatrix::from_rows(rows)?;
    let g = f.act(&m)?;
    let det = m.det()?;
    let echo = format!("act {f} --matrix {}", render::matrix_text(&m));
    let mut out = Output::new(echo, json!({ "form": render::form(&g), "det": num(&det) }), g.to_string());
    if !m.is_unimodular() {
        out.warnings.push(format!("det = {det}: the matrix is not unimodular"));
    }
    Ok(out)
}

fn triple_text(t: &ReducedTriple) -> String {
    t.to_string()
}

fn reduce(fa: &FormArg, radius: Option<u32>, threads: usize) -> Result<Output> {
    let f = parse(fa)?;
    match radius {
        None => {
            cubic3_core::invariants::check_reduced_shape(&f)?;
            let t = detect_reduced(&f).ok_or_else(|| Error::Precondition("need at least two variables".into()))?;
            Ok(Output::new(format!("reduce {f}"), json!({ "triple": render::triple(&t) }), triple_text(&t)))
        }
        Some(r) => {
            let found = search_reduced_triples(&f, &SearchOptions::new(r).with_threads(threads))?;
            let list: Vec<Value> = found
                .iter()
                .map(|t| json!({ "triple": render::triple(&t.triple), "matrix": render::matrix(&t.matrix) }))
                .collect();
            let mut text = String::new();
            for t in &found {
                let _ = writeln!(text, "{}  T = {}", t.triple, render::matrix_text(&t.matrix));
            }
            let result = json!({ "radius": r, "count": found.len(), "triples": list });
            Ok(Output::new(format!("reduce {f} --radius {r}"), result, text))
        }
    }
}

fn reduced(text: &str) -> Result<ReducedTriple> {
    let f = parse_form(text)?;
    cubic3_core::invariants::check_reduced_shape(&f)?;
    detect_reduced(&f).ok_or_else(|| Error::Precondition("need at least two variables".into()))
}

fn equiv(first: &str, second: &str, radius: u32) -> Result<Output> {
    let (t1, t2) = (reduced(first)?, reduced(second)?);
    let echo = format!("equiv {} | {} --radius {radius}", t1.reassemble(), t2.reassemble());
    let (result, text) = match triples_equivalent(&t1, &t2, radius)? {
        EquivalenceVerdict::Equivalent(m) => (
            json!({ "verdict": "equivalent", "matrix": render::matrix(&m) }),
            format!("equivalent\nM = {}", render::matrix_text(&m)),
        ),
        EquivalenceVerdict::DefinitelyNot(why) => {
            (json!({ "verdict": "not_equivalent", "reason": why }), format!("not equivalent: {why}"))
        }
        EquivalenceVerdict::NotFoundWithinRadius(r) => (
            json!({ "verdict": "not_found_within_radius", "radius": r }),
            format!("no equivalence found within radius {r}"),
        ),
    };
    Ok(Output::new(echo, result, text))
}

fn enumerate_binary(a: &BigInt, b: &BigInt, c: &BigInt, bound: u32) -> Result<Output> {
    let found = enumerate_binary_triples(a, b, c, bound)?;
    let f = IntForm::from_terms(
        2,
        [(Monomial::new(0, 0, 0), a.clone()), (Monomial::new(0, 0, 1), b.clone()), (Monomial::new(1, 1, 1), c.clone())],
    )?;
    let disc = binary_discriminant(&f)?;
    let list: Vec<Value> = found
        .iter()
        .map(|t| {
            json!({
                "a": num(&t.a), "b": num(&t.b), "c": num(&t.c),
                "matrix": render::matrix(&t.matrix), "system_det": num(&t.system_det),
            })
        })
        .collect();
    let mut text = String::new();
    for t in &found {
        let _ = writeln!(text, "({}, {}, {})  T = {}", t.a, t.b, t.c, render::matrix_text(&t.matrix));
    }
    let echo = format!("enumerate-binary --a {a} --b {b} --c {c} --bound {bound}");
    Ok(Output::new(echo, json!({ "discriminant": num(&disc), "count": found.len(), "triples": list }), text))
}

fn lowrank(fa: &FormArg, max_rank: usize, bound: u32) -> Result<Output> {
    let f = parse(fa)?;
    let pts = low_rank_points(&f, max_rank, bound);
    let list: Vec<Value> = pts
        .iter()
        .map(|p| json!({ "point": render::point(&p.point), "rank": p.rank, "value": num(&p.value) }))
        .collect();
    let mut text = String::new();
    for p in &pts {
        let _ = writeln!(text, "{}  rank {}  F = {}", p.point, p.rank, p.value);
    }
    let echo = format!("lowrank {f} --max-rank {max_rank} --bound {bound}");
    Ok(Output::new(echo, json!({ "count": pts.len(), "points": list }), text))
}

fn normalize(fa: &FormArg) -> Result<Output> {
    let f = parse(fa)?;
    let out = normalize_line(&f)?;
    let result = json!({ "matrix": render::matrix(&out.matrix), "form": render::form(&out.form) });
    let text = format!("{}\nT = {}", out.form, render::matrix_text(&out.matrix));
    Ok(Output::new(format!("normalize-line {f}"), result, text))
}

fn estimate(fa: &FormArg, radius: u32, classes: bool, threads: usize) -> Result<Output> {
    let f = parse(fa)?;
    let opts = SearchOptions::new(radius).with_threads(threads);
    let s = estimate_s(&f, &opts)?;
    let found = search_reduced_triples(&f, &opts)?;
    let witness = found.iter().max_by(|x, y| {
        x.triple
            .a
            .magnitude()
            .cmp(y.triple.a.magnitude())
            .then(y.matrix.transpose().to_rows().cmp(&x.matrix.transpose().to_rows()))
    });
    let mut result = Map::new();
    result.insert("S".into(), num(&s));
    result.insert("radius".into(), json!(radius));
    result.insert("triples".into(), json!(found.len()));
    if let Some(w) = witness {
        result.insert(
            "witness".into(),
            json!({ "triple": render::triple(&w.triple), "matrix": render::matrix(&w.matrix) }),
        );
    }
    let mut text = format!("S >= {s} ({} triples within radius {radius})", found.len());
    let mut warnings = Vec::new();
    if classes {
        let report = triple_classes(&f, &opts, radius.max(3))?;
        result.insert("classes".into(), json!(report.classes.len()));
        result.insert("unresolved".into(), json!(report.unresolved));
        let _ = write!(text, "\n{} classes", report.classes.len());
        if report.unresolved > 0 {
            warnings.push(format!("{} comparisons were inconclusive", report.unresolved));
        }
    }
    let mut out = Output::new(format!("estimate-s {f} --radius {radius}"), Value::Object(result), text);
    out.warnings = warnings;
    Ok(out)
}

fn contraction_json(e: &PointContraction) -> Value {
    json!({
        "alpha": render::point(&e.alpha),
        "a": num(&e.a),
        "F_X": render::form(&e.f_x.shifted(1)),
        "matrix": render::matrix(&e.matrix),
        "det": num(&e.det),
    })
}

fn contraction_text(e: &PointContraction) -> String {
    format!("alpha = {}  a = {}  F_X = {}  det = {}", e.alpha, e.a, e.f_x.shifted(1), e.det)
}

fn extract(fa: &FormArg, coords: Option<Vec<BigInt>>, radius: u32) -> Result<Output> {
    let f = parse(fa)?;
    match coords {
        Some(c) => {
            let p = point(&c)?;
            let e = point_contraction_extract(&f, &p)?;
            let echo = format!("extract-point {f} --point {}", render::ints_text(p.coords()));
            Ok(Output::new(echo, contraction_json(&e), contraction_text(&e)))
        }
        None => {
            let all = point_contractions(&f, radius);
            let text: Vec<String> = all.iter().map(contraction_text).collect();
            let result =
                json!({ "count": all.len(), "contractions": all.iter().map(contraction_json).collect::<Vec<_>>() });
            Ok(Output::new(format!("extract-point {f} --radius {radius}"), result, text.join("\n")))
        }
    }
}

fn pell(a: &BigInt, b: &BigInt, count: usize) -> Result<Output> {
    let fam = pell_family(a, b, count)?;
    let mut text = String::new();
    let list: Vec<Value> = fam
        .iter()
        .map(|m| {
            let det = m.matrix.det().unwrap_or_default();
            let _ = writeln!(
                text,
                "(s, t) = ({}, {})  (A, B) = ({}, {})  M = {}",
                m.solution.s,
                m.solution.t,
                m.a,
                m.b,
                render::matrix_text(&m.matrix)
            );
            json!({
                "s": num(&m.solution.s), "t": num(&m.solution.t),
                "A": num(&m.a), "B": num(&m.b),
                "matrix": render::matrix(&m.matrix), "det": num(&det),
            })
        })
        .collect();
    let form = cubic3_core::pell_form(a, b);
    let echo = format!("pell --a {a} --b {b} --count {count}");
    Ok(Output::new(echo, json!({ "form": render::form(&form), "members": list }), text))
}

fn fixtures(name: &str) -> Result<Output> {
    if name != "blowup-p3" {
        return Err(Error::Precondition(format!("unknown fixture {name:?}; available: blowup-p3")));
    }
    let fx = example_blowup_p3()?;
    let disc = cubic3_core::ternary_discriminant(&fx.stage2_form)?;
    let result = json!({
        "h_basis_form": render::form(&fx.h_basis_form),
        "stage1_basis": fx.stage1_basis.iter().map(|v| nums(v)).collect::<Vec<_>>(),
        "stage1_form": render::form(&fx.stage1_form.shifted(1)),
        "stage2": {
            "genus": fx.stage2_genus,
            "E3": num(&fx.stage2_e3),
            "betaC": nums(&fx.stage2_beta_dot_c),
            "form": render::form(&fx.stage2_form),
            "discriminant": num(&disc),
            "singular_points": fx.stage2_singular_points.iter().map(render::point).collect::<Vec<_>>(),
        },
    });
    let points: Vec<String> = fx.stage2_singular_points.iter().map(ToString::to_string).collect();
    let text = format!(
        "H-basis form: {}\nstage 1 (L1, L2): {}\nstage 2: {}\ndiscriminant: {disc}\nsingular points: {}",
        fx.h_basis_form,
        fx.stage1_form.shifted(1),
        fx.stage2_form,
        points.join(" ")
    );
    Ok(Output::new(format!("fixtures {name}"), result, text))
}

fn state_json(s: &ThreefoldState) -> Value {
    json!({
        "b2": s.b2, "b3": s.b3, "Ib3": s.ib3,
        "K3": num(&s.k3),
        "F": render::form(&s.f),
        "basket": s.basket.indices(),
    })
}

fn kind_json(k: &ContractionKind) -> Value {
    match k {
        ContractionKind::BlowupCurve { g, e3, beta_dot_c } => {
            json!({ "type": k.name(), "g": g, "E3": num(e3), "betaC": nums(beta_dot_c) })
        }
        ContractionKind::ContractToPoint { a, e3 } => json!({ "type": k.name(), "a": num(a), "E3": num(e3) }),
        ContractionKind::ContractToCurve { g, e3 } => json!({ "type": k.name(), "g": g, "E3": num(e3) }),
    }
}

fn simulate(path: &std::path::Path) -> Result<Output> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Precondition(format!("cannot read {}: {e}", path.display())))?;
    let report: ScenarioReport = replay(&text)?;
    let steps: Vec<Value> = report
        .steps
        .iter()
        .map(|s| {
            let mut m = Map::new();
            m.insert("line".into(), json!(s.line));
            m.insert("command".into(), json!(s.source));
            if let Some(r) = &s.record {
                m.insert("kind".into(), kind_json(&r.kind));
                m.insert("delta_K3".into(), num(&r.delta_k3));
                m.insert("bound_checked".into(), json!(r.bound_checked));
                let checks: Vec<Value> = r
                    .checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail }))
                    .collect();
                m.insert("checks".into(), Value::Array(checks));
            }
            Value::Object(m)
        })
        .collect();
    let st = &report.state;
    let mut out_text = String::new();
    for s in &report.steps {
        if let Some(r) = &s.record {
            let verdict = if r.bound_checked { "ok" } else { "WARN" };
            let _ =
                writeln!(out_text, "line {}: {}  delta_K3 = {}  checks {verdict}", s.line, r.kind.name(), r.delta_k3);
            for c in &r.checks {
                let _ = writeln!(out_text, "    [{}] {}: {}", if c.passed { "pass" } else { "fail" }, c.name, c.detail);
            }
        }
    }
    let _ = write!(
        out_text,
        "final: b2 = {}, b3 = {}, Ib3 = {}, K3 = {}, basket = {}, F = {}",
        st.b2, st.b3, st.ib3, st.k3, st.basket, st.f
    );
    let mut out = Output::new(
        format!("simulate {}", path.display()),
        json!({ "final": state_json(st), "steps": steps }),
        out_text,
    );
    out.warnings = report.warnings();
    Ok(out)
}

fn bounds(
    b2: &BigInt,
    b3: &BigInt,
    s: &BigInt,
    k3: &num_rational::BigRational,
    kc2: &num_rational::BigRational,
    basket: Option<Vec<u32>>,
) -> Result<Output> {
    use num_traits::Signed;
    if b2.is_negative() || b3.is_negative() || s.is_negative() {
        return Err(Error::Precondition("b2, b3 and S must be nonnegative".into()));
    }
    let tb = topological_bounds(b2, b3, s, k3, kc2);
    let mut result = Map::new();
    result.insert("volume_bound".into(), num(&tb.volume_bound));
    result.insert("point_bound".into(), num(&tb.point_bound));
    result.insert("curve_bound".into(), num(&tb.curve_bound));
    result.insert("bmy_ok".into(), json!(tb.bmy_ok));
    result.insert("xi_cap".into(), num(&tb.xi_cap));
    let mut text = format!(
        "volume bound: {}\npoint bound: {}\ncurve bound: {}\nK3 <= 3 K.c2: {}\nxi cap: {}",
        tb.volume_bound, tb.point_bound, tb.curve_bound, tb.bmy_ok, tb.xi_cap
    );
    let mut warnings = Vec::new();
    let mut echo = format!("bounds --b2 {b2} --b3 {b3} --s {s} --k3 {k3} --kc2 {kc2}");
    if let Some(indices) = basket {
        let basket = Basket::new(indices)?;
        let st = basket_stats(&basket);
        let chi = chi_riemann_roch(kc2, &basket);
        result.insert("basket".into(), json!({ "xi": num(&st.xi), "e": num(&st.e), "index_check": st.index_check }));
        result.insert("chi".into(), num(&chi));
        let _ = write!(text, "\nxi = {}, e = {}, index check: {}\nchi = {chi}", st.xi, st.e, st.index_check);
        if st.xi > tb.xi_cap {
            warnings.push(format!("xi = {} exceeds 2 b2 = {}", st.xi, tb.xi_cap));
        }
        if !st.index_check {
            warnings.push("some basket index does not divide 4 xi".into());
        }
        let _ = write!(
            echo,
            " --basket {}",
            basket.indices().iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        );
    }
    if !tb.bmy_ok {
        warnings
            .push(format!("K3 = {k3} exceeds 3 K.c2 = {}", kc2 * num_rational::BigRational::from_integer(3.into())));
    }
    let mut out = Output::new(echo, Value::Object(result), text);
    out.warnings = warnings;
    Ok(out)
}
