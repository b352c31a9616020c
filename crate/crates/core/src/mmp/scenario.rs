//! Line-oriented scenario files.
//!
//! ```text
//! # blow up a line in P^3 and contract it again
//! start preset=p3
//! blowup-curve g=0 E3=-2 betaC=1
//! assert K3=-54 b2=2
//! contract-curve g=0
//! assert K3=-64 F="x^3"
//! ```
//!
//! Without a `start` line the scenario begins at projective space. Values
//! containing spaces are quoted; `#` starts a comment.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{
    blowup_curve, contract_to_curve_with, contract_to_point, Basket, ContractionRecord, ThreefoldState,
    DEFAULT_S_RADIUS,
};
use crate::error::{Error, Result};
use crate::form::{parse_form, IntForm};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Start(Box<ThreefoldState>),
    SetBasket(Basket),
    BlowupCurve { g: u32, e3: BigInt, beta_dot_c: Vec<BigInt> },
    ContractPoint { a: BigRational, e3: BigRational },
    ContractCurve { g: u32, radius: u32 },
    Assert(Expectations),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Expectations {
    pub k3: Option<BigRational>,
    pub b2: Option<u32>,
    pub b3: Option<u32>,
    pub ib3: Option<u32>,
    pub f: Option<IntForm>,
}

#[derive(Clone, Debug)]
pub struct ScenarioStep {
    pub line: usize,
    pub source: String,
    /// Present for transitions.
    pub record: Option<ContractionRecord>,
}

#[derive(Clone, Debug)]
pub struct ScenarioReport {
    pub steps: Vec<ScenarioStep>,
    pub state: ThreefoldState,
}

impl ScenarioReport {
    /// Failed checks of every transition, prefixed by their line.
    pub fn warnings(&self) -> Vec<String> {
        self.steps
            .iter()
            .filter_map(|s| s.record.as_ref().map(|r| (s.line, r)))
            .flat_map(|(line, r)| r.warnings().into_iter().map(move |w| format!("line {line}: {w}")))
            .collect()
    }
}

struct Args {
    line: usize,
    values: BTreeMap<String, String>,
}

impl Args {
    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Scenario { line: self.line, msg: msg.into() }
    }

    fn take(&mut self, key: &str) -> Option<String> {
        self.values.remove(key)
    }

    fn parsed<T: FromStr>(&mut self, key: &str) -> Result<Option<T>> {
        match self.take(key) {
            None => Ok(None),
            Some(v) => v.parse().map(Some).map_err(|_| self.err(format!("cannot parse {key}={v}"))),
        }
    }

    fn required<T: FromStr>(&mut self, key: &str) -> Result<T> {
        self.parsed(key)?.ok_or_else(|| self.err(format!("missing {key}=")))
    }

    fn list<T: FromStr>(&mut self, key: &str) -> Result<Option<Vec<T>>> {
        let Some(v) = self.take(key) else { return Ok(None) };
        v.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse().map_err(|_| self.err(format!("cannot parse {key} entry {s}"))))
            .collect::<Result<Vec<T>>>()
            .map(Some)
    }

    fn form(&mut self, key: &str) -> Result<Option<IntForm>> {
        match self.take(key) {
            None => Ok(None),
            Some(v) => parse_form(&v).map(Some).map_err(|e| self.err(format!("{key}: {e}"))),
        }
    }

    fn finish(self) -> Result<()> {
        match self.values.keys().next() {
            Some(k) => Err(self.err(format!("unknown argument {k}"))),
            None => Ok(()),
        }
    }
}

fn parse_line(line: usize, text: &str) -> Result<Option<Command>> {
    let words = shlex::split(text).ok_or(Error::Scenario { line, msg: "unbalanced quotes".into() })?;
    let Some((name, rest)) = words.split_first() else { return Ok(None) };
    let mut values = BTreeMap::new();
    for w in rest {
        let (k, v) = w.split_once('=').ok_or(Error::Scenario { line, msg: format!("expected key=value, got {w}") })?;
        if values.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Error::Scenario { line, msg: format!("repeated argument {k}") });
        }
    }
    let mut args = Args { line, values };
    let command = match name.as_str() {
        "start" => {
            let state = match args.take("preset").as_deref() {
                Some("p3") => ThreefoldState::p3(),
                Some(other) => return Err(args.err(format!("unknown preset {other}"))),
                None => {
                    let f = args.form("F")?.ok_or_else(|| args.err("missing F= or preset="))?;
                    let b3 = args.parsed("b3")?.unwrap_or(0);
                    let ib3 = args.parsed("Ib3")?.unwrap_or(0);
                    let k3 = args.parsed("K3")?.unwrap_or_default();
                    let basket =
                        Basket::new(args.list("basket")?.unwrap_or_default()).map_err(|e| args.err(e.to_string()))?;
                    ThreefoldState::new(f, b3, ib3, k3, basket).map_err(|e| args.err(e.to_string()))?
                }
            };
            Command::Start(Box::new(state))
        }
        "basket" => {
            let indices = args.list("indices")?.unwrap_or_default();
            Command::SetBasket(Basket::new(indices).map_err(|e| args.err(e.to_string()))?)
        }
        "blowup-curve" => Command::BlowupCurve {
            g: args.required("g")?,
            e3: args.required("E3")?,
            beta_dot_c: args.list("betaC")?.ok_or_else(|| args.err("missing betaC="))?,
        },
        "contract-point" => Command::ContractPoint { a: args.required("a")?, e3: args.required("E3")? },
        "contract-curve" => Command::ContractCurve {
            g: args.required("g")?,
            radius: args.parsed("radius")?.unwrap_or(DEFAULT_S_RADIUS),
        },
        "assert" => Command::Assert(Expectations {
            k3: args.parsed("K3")?,
            b2: args.parsed("b2")?,
            b3: args.parsed("b3")?,
            ib3: args.parsed("Ib3")?,
            f: args.form("F")?,
        }),
        other => return Err(args.err(format!("unknown command {other}"))),
    };
    args.finish()?;
    Ok(Some(command))
}

/// Parses every line; returns `(line number, source, command)` triples.
pub fn parse_scenario(text: &str) -> Result<Vec<(usize, String, Command)>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, l)| match parse_line(i + 1, l) {
            Ok(Some(c)) => Some(Ok((i + 1, l.trim().to_string(), c))),
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        })
        .collect()
}

pub fn replay(text: &str) -> Result<ScenarioReport> {
    replay_from(ThreefoldState::p3(), text)
}

fn check(line: usize, what: &str, expected: String, found: String) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Scenario { line, msg: format!("assertion failed: {what} is {found}, expected {expected}") })
    }
}

/// Replays a scenario from `state`. Transition errors and failed assertions
/// abort with the offending line number.
pub fn replay_from(mut state: ThreefoldState, text: &str) -> Result<ScenarioReport> {
    let mut steps = Vec::new();
    for (line, source, command) in parse_scenario(text)? {
        let wrap = |e: Error| Error::Scenario { line, msg: format!("{}: {e}", e.code()) };
        let before = state.history.len();
        state = match command {
            Command::Start(s) => *s,
            Command::SetBasket(b) => state.with_basket(b),
            Command::BlowupCurve { g, e3, beta_dot_c } => blowup_curve(&state, g, &e3, &beta_dot_c).map_err(wrap)?,
            Command::ContractPoint { a, e3 } => contract_to_point(&state, &a, &e3).map_err(wrap)?,
            Command::ContractCurve { g, radius } => contract_to_curve_with(&state, g, radius).map_err(wrap)?,
            Command::Assert(x) => {
                let show = |v: &Option<u32>| v.map(|v| v.to_string());
                for (what, expected, found) in [
                    ("K3", x.k3.as_ref().map(ToString::to_string), state.k3.to_string()),
                    ("b2", show(&x.b2), state.b2.to_string()),
                    ("b3", show(&x.b3), state.b3.to_string()),
                    ("Ib3", show(&x.ib3), state.ib3.to_string()),
                    ("F", x.f.as_ref().map(ToString::to_string), state.f.to_string()),
                ] {
                    if let Some(expected) = expected {
                        check(line, what, expected, found)?;
                    }
                }
                state
            }
        };
        let record = (state.history.len() > before).then(|| state.history.last().cloned()).flatten();
        steps.push(ScenarioStep { line, source, record });
    }
    Ok(ScenarioReport { steps, state })
}
