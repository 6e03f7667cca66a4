//! Machine-checkable claims about the set classes and axioms, and the runner that
//! decides them on fixture spaces and on every labeled topology up to a size bound.
//!
//! A claim is never assumed true: the runner reports `confirmed` (no counterexample up
//! to the bound), `refuted` (with a witness that can be re-checked on its own), or
//! `inapplicable` (the statement never applied, e.g. an induced family was never a
//! topology).

mod fixtures;
mod props;
mod registry;
mod report;

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::axioms::AxiomId;
use crate::classes::{ClassConfig, InducedSpace, Polarity, SetClass, SpaceAnalysis};
use crate::document::{NamedSpace, SpaceDocument};
use crate::enumerate::{enumerate_topologies, MAX_ENUM_POINTS};
use crate::maps::{enumerate_maps, PointMap};
use crate::space::FiniteSpace;

pub use fixtures::{Fixture, FixtureRef};
pub use props::{EvalError, Family, MapProp, PointProp, Prop};
pub use registry::registry;
pub use report::{Outcome, Report, Summary, VerdictChange};

/// Default enumeration bound for the registry.
pub const DEFAULT_N_MAX: usize = 4;
/// Largest bound accepted without [`RegistryConfig::allow_long`].
pub const SHORT_N_MAX: usize = 5;
/// Default bound for map claims.
pub const DEFAULT_MAP_N_MAX: usize = 3;

const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Implication,
    Equivalence,
    FixtureAssertion,
    Independence,
    MapPreservation,
}

impl ClaimKind {
    pub fn name(self) -> &'static str {
        match self {
            ClaimKind::Implication => "implication",
            ClaimKind::Equivalence => "equivalence",
            ClaimKind::FixtureAssertion => "fixture-assertion",
            ClaimKind::Independence => "independence",
            ClaimKind::MapPreservation => "map-preservation",
        }
    }

    pub fn from_name(s: &str) -> Option<ClaimKind> {
        [
            ClaimKind::Implication,
            ClaimKind::Equivalence,
            ClaimKind::FixtureAssertion,
            ClaimKind::Independence,
            ClaimKind::MapPreservation,
        ]
        .into_iter()
        .find(|k| k.name() == s || (s == "fixture" && *k == ClaimKind::FixtureAssertion))
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Confirmed,
    Refuted,
    Inapplicable,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "confirmed",
            Status::Refuted => "refuted",
            Status::Inapplicable => "inapplicable",
            Status::Error => "error",
        })
    }
}

/// One assertion about one fixture space, with the truth value the source states.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureCheck {
    pub space: FixtureRef,
    pub prop: Prop,
    pub expected: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapScope {
    AllMaps,
    Bijections,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Fixtures(Vec<FixtureCheck>),
    /// Over every enumerated space: all premises imply the conclusion.
    Implication {
        premises: Vec<Prop>,
        conclusion: Prop,
    },
    Equivalence {
        left: Prop,
        right: Prop,
    },
    /// `first ∧ ¬second` and `second ∧ ¬first` are both satisfiable.
    Independence {
        first: Prop,
        second: Prop,
        first_only: FixtureRef,
        second_only: FixtureRef,
    },
    /// Over every enumerated pair of spaces and map in scope: all premises imply all
    /// conclusions (or, for an equivalence, the two conjunctions agree).
    Maps {
        scope: MapScope,
        premises: Vec<MapProp>,
        conclusion: Vec<MapProp>,
        equivalence: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub location: &'static str,
    pub statement: Statement,
    /// Status the source asserts; every registered claim is stated as true.
    pub expected: Status,
}

impl Claim {
    pub fn new(id: &'static str, location: &'static str, statement: Statement) -> Self {
        Self {
            id,
            location,
            statement,
            expected: Status::Confirmed,
        }
    }

    pub fn kind(&self) -> ClaimKind {
        match self.statement {
            Statement::Fixtures(_) => ClaimKind::FixtureAssertion,
            Statement::Implication { .. } => ClaimKind::Implication,
            Statement::Equivalence { .. } => ClaimKind::Equivalence,
            Statement::Independence { .. } => ClaimKind::Independence,
            Statement::Maps { .. } => ClaimKind::MapPreservation,
        }
    }

    /// Human-readable statement.
    pub fn describe(&self) -> String {
        let join = |ps: &[Prop]| {
            ps.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ∧ ")
        };
        let join_maps = |ps: &[MapProp]| {
            ps.iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ∧ ")
        };
        match &self.statement {
            Statement::Fixtures(checks) => checks
                .iter()
                .map(|c| {
                    let p = if c.expected {
                        c.prop.to_string()
                    } else {
                        format!("¬({})", c.prop)
                    };
                    format!("{}: {p}", c.space.label())
                })
                .collect::<Vec<_>>()
                .join("; "),
            Statement::Implication {
                premises,
                conclusion,
            } if premises.is_empty() => conclusion.to_string(),
            Statement::Implication {
                premises,
                conclusion,
            } => format!("{} ⇒ {conclusion}", join(premises)),
            Statement::Equivalence { left, right } => format!("{left} ⇔ {right}"),
            Statement::Independence { first, second, .. } => {
                format!("{first} and {second} are independent")
            }
            Statement::Maps {
                premises,
                conclusion,
                equivalence,
                ..
            } => {
                let arrow = if *equivalence { "⇔" } else { "⇒" };
                format!("{} {arrow} {}", join_maps(premises), join_maps(conclusion))
            }
        }
    }

    /// Re-evaluates the statement on a witness; true iff the witness still refutes it.
    pub fn recheck(&self, witness: &Witness, config: ClassConfig) -> Result<bool, String> {
        let named = witness.space.bind().map_err(|e| e.to_string())?;
        let s = SpaceAnalysis::with_config(named.space.clone(), config);
        let eval = |p: &Prop| p.eval(&s, Some(&named)).map_err(|e| e.0);
        match &self.statement {
            Statement::Implication {
                premises,
                conclusion,
            } => {
                for p in premises {
                    if !eval(p)? {
                        return Ok(false);
                    }
                }
                Ok(!eval(conclusion)?)
            }
            Statement::Equivalence { left, right } => Ok(eval(left)? != eval(right)?),
            Statement::Fixtures(checks) => {
                let key = witness
                    .fixture
                    .as_deref()
                    .ok_or("witness names no fixture")?;
                let mut refuted = false;
                for c in checks.iter().filter(|c| c.space.key() == key) {
                    refuted |= eval(&c.prop)? != c.expected;
                }
                Ok(refuted)
            }
            Statement::Independence {
                first,
                second,
                first_only,
                ..
            } => {
                let key = witness
                    .fixture
                    .as_deref()
                    .ok_or("witness names no fixture")?;
                let (a, b) = if key == first_only.key() {
                    (first, second)
                } else {
                    (second, first)
                };
                Ok(!(eval(a)? && !eval(b)?))
            }
            Statement::Maps {
                premises,
                conclusion,
                equivalence,
                ..
            } => {
                let target_doc = witness.target.as_ref().ok_or("witness has no target")?;
                let assignment = witness.map.as_ref().ok_or("witness has no map")?;
                let target = target_doc.bind().map_err(|e| e.to_string())?;
                let t = SpaceAnalysis::with_config(target.space, config);
                let pair = MapContext::new(s, t);
                let f = PointMap::new(&pair.source, &pair.target, assignment)
                    .map_err(|e| e.to_string())?;
                match evaluate_map(&pair, &f, premises, conclusion, *equivalence) {
                    MapEval::Fails => Ok(true),
                    _ => Ok(false),
                }
            }
        }
    }
}

/// The members of one class, printed with point names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyDump {
    pub family: String,
    pub members: Vec<String>,
}

/// A concrete space (and, for map claims, a target and map) on which a claim fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub space: SpaceDocument,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixture: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<SpaceDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub failing: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub families: Vec<FamilyDump>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimVerdict {
    pub id: String,
    pub location: String,
    pub kind: ClaimKind,
    pub statement: String,
    pub status: Status,
    pub expected: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Largest ground-set size examined.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    /// Spaces (or maps) examined.
    pub checked: u64,
    /// Cases where the premises held.
    pub support: u64,
    /// Cases skipped because an induced family was not a topology.
    pub inapplicable: u64,
    pub time_ms: f64,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl ClaimVerdict {
    fn blank(claim: &Claim) -> Self {
        Self {
            id: claim.id.to_string(),
            location: claim.location.to_string(),
            kind: claim.kind(),
            statement: claim.describe(),
            status: Status::Confirmed,
            expected: claim.expected,
            witness: None,
            bound: None,
            checked: 0,
            support: 0,
            inapplicable: 0,
            time_ms: 0.0,
            detail: String::new(),
        }
    }

    pub fn diverges(&self) -> bool {
        self.status != self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("enumeration bound {n} exceeds the limit of {max}")]
    GroundSetTooLarge { n: usize, max: usize },
    #[error("enumeration bound {0} is a long run; enable it explicitly")]
    LongRunNotAllowed(usize),
}

/// What to run and how.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegistryConfig {
    pub n_max: usize,
    pub map_n_max: usize,
    pub strict_hstarg: bool,
    /// Permit `n_max = 6` (about 210k spaces).
    pub allow_long: bool,
    /// Run only these ids (all when empty).
    pub ids: Vec<String>,
    /// Run only these kinds (all when empty).
    pub kinds: Vec<ClaimKind>,
}

impl Default for RegistryConfig {
    fn default() -> Self {
        Self {
            n_max: DEFAULT_N_MAX,
            map_n_max: DEFAULT_MAP_N_MAX,
            strict_hstarg: false,
            allow_long: false,
            ids: Vec::new(),
            kinds: Vec::new(),
        }
    }
}

impl RegistryConfig {
    pub fn class_config(&self) -> ClassConfig {
        ClassConfig {
            strict_hstarg: self.strict_hstarg,
        }
    }

    fn validate(&self) -> Result<(), ClaimError> {
        for n in [self.n_max, self.map_n_max] {
            if n > MAX_ENUM_POINTS {
                return Err(ClaimError::GroundSetTooLarge {
                    n,
                    max: MAX_ENUM_POINTS,
                });
            }
        }
        if self.n_max > SHORT_N_MAX && !self.allow_long {
            return Err(ClaimError::LongRunNotAllowed(self.n_max));
        }
        if self.map_n_max > crate::maps::MAX_MAP_POINTS {
            return Err(ClaimError::GroundSetTooLarge {
                n: self.map_n_max,
                max: crate::maps::MAX_MAP_POINTS,
            });
        }
        Ok(())
    }

    fn selected(&self) -> Result<Vec<Claim>, ClaimError> {
        let all = registry();
        for id in &self.ids {
            if !all.iter().any(|c| c.id.eq_ignore_ascii_case(id)) {
                return Err(ClaimError::UnknownClaim(id.clone()));
            }
        }
        Ok(all
            .into_iter()
            .filter(|c| {
                self.ids.is_empty() || self.ids.iter().any(|i| c.id.eq_ignore_ascii_case(i))
            })
            .filter(|c| self.kinds.is_empty() || self.kinds.contains(&c.kind()))
            .collect())
    }
}

/// Looks up a claim by id (case-insensitive).
pub fn find_claim(id: &str) -> Result<Claim, ClaimError> {
    registry()
        .into_iter()
        .find(|c| c.id.eq_ignore_ascii_case(id))
        .ok_or_else(|| ClaimError::UnknownClaim(id.to_string()))
}

/// Runs one claim.
pub fn check_claim(id: &str, config: &RegistryConfig) -> Result<ClaimVerdict, ClaimError> {
    let claim = find_claim(id)?;
    let config = RegistryConfig {
        ids: vec![claim.id.to_string()],
        kinds: vec![],
        ..config.clone()
    };
    let mut report = run_registry(&config)?;
    Ok(report.verdicts.remove(0))
}

/// Runs every selected claim and collects the verdicts in registry order.
pub fn run_registry(config: &RegistryConfig) -> Result<Report, ClaimError> {
    config.validate()?;
    let started = Instant::now();
    let claims = config.selected()?;
    let class_config = config.class_config();
    let mut verdicts: Vec<ClaimVerdict> = claims.iter().map(ClaimVerdict::blank).collect();

    let sweep_idx: Vec<usize> = claims
        .iter()
        .enumerate()
        .filter(|(_, c)| {
            matches!(
                c.statement,
                Statement::Implication { .. } | Statement::Equivalence { .. }
            )
        })
        .map(|(i, _)| i)
        .collect();
    if !sweep_idx.is_empty() {
        let sweep_claims: Vec<&Claim> = sweep_idx.iter().map(|&i| &claims[i]).collect();
        let results = sweep(&sweep_claims, config.n_max, class_config);
        for (&i, r) in sweep_idx.iter().zip(results) {
            apply_sweep(&claims[i], &mut verdicts[i], r, config.n_max, class_config);
        }
    }

    let mut fixture_cache: HashMap<String, (NamedSpace, SpaceAnalysis)> = HashMap::new();
    let mut map_spaces: Option<Vec<MapContextSpace>> = None;
    for (claim, verdict) in claims.iter().zip(verdicts.iter_mut()) {
        let t0 = Instant::now();
        match &claim.statement {
            Statement::Fixtures(checks) => {
                run_fixture_claim(checks, verdict, &mut fixture_cache, class_config)
            }
            Statement::Independence {
                first,
                second,
                first_only,
                second_only,
            } => run_independence(
                (first, second),
                (*first_only, *second_only),
                verdict,
                &mut fixture_cache,
                config,
            ),
            Statement::Maps {
                scope,
                premises,
                conclusion,
                equivalence,
            } => {
                let spaces = map_spaces
                    .get_or_insert_with(|| map_context_spaces(config.map_n_max, class_config));
                run_map_claim(spaces, *scope, premises, conclusion, *equivalence, verdict);
                verdict.bound = Some(config.map_n_max);
            }
            _ => continue,
        }
        verdict.time_ms = ms(t0.elapsed());
    }

    Ok(Report {
        n_max: config.n_max,
        map_n_max: config.map_n_max,
        strict_hstarg: config.strict_hstarg,
        elapsed_ms: ms(started.elapsed()),
        verdicts,
    })
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

fn dump_families(named: &NamedSpace, s: &SpaceAnalysis, props: &[&Prop]) -> Vec<FamilyDump> {
    let mut classes: Vec<(SetClass, Polarity)> = props.iter().flat_map(|p| p.families()).collect();
    classes.sort();
    classes.dedup();
    classes
        .into_iter()
        .map(|(c, p)| FamilyDump {
            family: c.label(p),
            members: s
                .members_of(c, p)
                .into_iter()
                .map(|m| named.format_set(m))
                .collect(),
        })
        .collect()
}

fn fixture_entry(
    cache: &mut HashMap<String, (NamedSpace, SpaceAnalysis)>,
    fixture: FixtureRef,
    config: ClassConfig,
) -> &(NamedSpace, SpaceAnalysis) {
    cache.entry(fixture.key()).or_insert_with(|| {
        let named = fixture.resolve();
        let s = SpaceAnalysis::with_config(named.space.clone(), config);
        (named, s)
    })
}

fn run_fixture_claim(
    checks: &[FixtureCheck],
    verdict: &mut ClaimVerdict,
    cache: &mut HashMap<String, (NamedSpace, SpaceAnalysis)>,
    config: ClassConfig,
) {
    let mut mismatches: Vec<(FixtureRef, String, &Prop)> = Vec::new();
    let mut errors = Vec::new();
    for check in checks {
        let (named, s) = fixture_entry(cache, check.space, config);
        verdict.checked += 1;
        match check.prop.eval(s, Some(named)) {
            Ok(v) if v == check.expected => {}
            Ok(v) => mismatches.push((
                check.space,
                format!(
                    "{}: {} is {v}, expected {}",
                    check.space.label(),
                    check.prop,
                    check.expected
                ),
                &check.prop,
            )),
            Err(e) => errors.push(format!("{}: {}", check.space.label(), e.0)),
        }
    }
    verdict.bound = None;
    if !errors.is_empty() {
        verdict.status = Status::Error;
        verdict.detail = errors.join("; ");
        return;
    }
    let Some(&(first, _, _)) = mismatches.first() else {
        return;
    };
    let (named, s) = fixture_entry(cache, first, config);
    let on_first: Vec<&(FixtureRef, String, &Prop)> =
        mismatches.iter().filter(|m| m.0 == first).collect();
    let props: Vec<&Prop> = on_first.iter().map(|m| m.2).collect();
    verdict.status = Status::Refuted;
    verdict.detail = mismatches
        .iter()
        .map(|m| m.1.clone())
        .collect::<Vec<_>>()
        .join("; ");
    verdict.witness = Some(Witness {
        space: named.document(),
        fixture: Some(first.key()),
        target: None,
        map: None,
        failing: on_first.iter().map(|m| m.1.clone()).collect(),
        families: dump_families(named, s, &props),
    });
}

fn run_independence(
    (first, second): (&Prop, &Prop),
    (first_only, second_only): (FixtureRef, FixtureRef),
    verdict: &mut ClaimVerdict,
    cache: &mut HashMap<String, (NamedSpace, SpaceAnalysis)>,
    config: &RegistryConfig,
) {
    let class_config = config.class_config();
    let mut notes = Vec::new();
    let mut failed: Option<(FixtureRef, String)> = None;
    for (fixture, a, b) in [(first_only, first, second), (second_only, second, first)] {
        let (named, s) = fixture_entry(cache, fixture, class_config);
        verdict.checked += 1;
        let ok = match (a.eval(s, Some(named)), b.eval(s, Some(named))) {
            (Ok(x), Ok(y)) => x && !y,
            (Err(e), _) | (_, Err(e)) => {
                verdict.status = Status::Error;
                verdict.detail = e.0;
                return;
            }
        };
        if ok {
            notes.push(format!("{}: {a} ∧ ¬({b})", fixture.label()));
            continue;
        }
        // Fall back to the enumeration for a replacement witness.
        let found = find_first_space(config.n_max, class_config, |s| {
            matches!((a.eval(s, None), b.eval(s, None)), (Ok(true), Ok(false)))
        });
        match found {
            Some(space) => notes.push(format!(
                "{} does not show {a} ∧ ¬({b}); enumeration found {}",
                fixture.label(),
                SpaceDocument::from_space(&space).to_inline()
            )),
            None => {
                if failed.is_none() {
                    failed = Some((
                        fixture,
                        format!("no space up to n = {} satisfies {a} ∧ ¬({b})", config.n_max),
                    ));
                }
            }
        }
    }
    verdict.bound = Some(config.n_max);
    verdict.detail = notes.join("; ");
    if let Some((fixture, why)) = failed {
        let (named, s) = fixture_entry(cache, fixture, class_config);
        verdict.status = Status::Refuted;
        verdict.detail = if verdict.detail.is_empty() {
            why.clone()
        } else {
            format!("{}; {why}", verdict.detail)
        };
        verdict.witness = Some(Witness {
            space: named.document(),
            fixture: Some(fixture.key()),
            target: None,
            map: None,
            failing: vec![why],
            families: dump_families(named, s, &[first, second]),
        });
    }
}

/// First enumerated space (by size, then enumeration order) satisfying `pred`.
pub fn find_first_space(
    n_max: usize,
    config: ClassConfig,
    pred: impl Fn(&SpaceAnalysis) -> bool + Sync,
) -> Option<FiniteSpace> {
    find_first_space_between(1, n_max, config, pred)
}

/// As [`find_first_space`], restricted to `n_min ≤ n ≤ n_max`.
pub fn find_first_space_between(
    n_min: usize,
    n_max: usize,
    config: ClassConfig,
    pred: impl Fn(&SpaceAnalysis) -> bool + Sync,
) -> Option<FiniteSpace> {
    for n in n_min.max(1)..=n_max.min(MAX_ENUM_POINTS) {
        let mut it = enumerate_topologies(n).expect("n within range");
        loop {
            let chunk: Vec<FiniteSpace> = it.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let hit = chunk
                .into_par_iter()
                .find_first(|space| pred(&SpaceAnalysis::with_config(space.clone(), config)));
            if hit.is_some() {
                return hit;
            }
        }
    }
    None
}

/// First enumerated space satisfying every premise and failing the conclusion.
pub fn search_counterexample(
    premises: &[AxiomId],
    conclusion: AxiomId,
    n_max: usize,
    config: ClassConfig,
) -> Result<Option<FiniteSpace>, ClaimError> {
    if n_max > MAX_ENUM_POINTS {
        return Err(ClaimError::GroundSetTooLarge {
            n: n_max,
            max: MAX_ENUM_POINTS,
        });
    }
    Ok(find_first_space(n_max, config, |s| {
        premises.iter().all(|p| p.holds(s)) && !conclusion.holds(s)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SpaceEval {
    Vacuous,
    Holds,
    /// The string names the failing direction for equivalences.
    Fails(&'static str),
    Error,
}

#[derive(Debug, Default)]
struct SweepResult {
    failure: Option<(FiniteSpace, &'static str)>,
    error: Option<(FiniteSpace, String)>,
    checked: u64,
    support: u64,
    bound: usize,
    time: Duration,
}

fn eval_on(claim: &Claim, s: &SpaceAnalysis) -> Result<SpaceEval, EvalError> {
    match &claim.statement {
        Statement::Implication {
            premises,
            conclusion,
        } => {
            for p in premises {
                if !p.eval(s, None)? {
                    return Ok(SpaceEval::Vacuous);
                }
            }
            Ok(if conclusion.eval(s, None)? {
                SpaceEval::Holds
            } else {
                SpaceEval::Fails("")
            })
        }
        Statement::Equivalence { left, right } => {
            Ok(match (left.eval(s, None)?, right.eval(s, None)?) {
                (true, true) | (false, false) => SpaceEval::Holds,
                (true, false) => SpaceEval::Fails("left ⇒ right fails"),
                (false, true) => SpaceEval::Fails("right ⇒ left fails"),
            })
        }
        _ => unreachable!("only implications and equivalences are swept"),
    }
}

/// Evaluates every claim on every space up to `n_max`, one pass over the enumeration.
/// Spaces within a chunk run in parallel; the first failure in enumeration order wins.
fn sweep(claims: &[&Claim], n_max: usize, config: ClassConfig) -> Vec<SweepResult> {
    let mut results: Vec<SweepResult> = claims.iter().map(|_| SweepResult::default()).collect();
    for n in 1..=n_max {
        let mut it = enumerate_topologies(n).expect("validated bound");
        loop {
            let chunk: Vec<FiniteSpace> = it.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let active: Vec<usize> = (0..claims.len())
                .filter(|&i| results[i].failure.is_none() && results[i].error.is_none())
                .collect();
            if active.is_empty() {
                break;
            }
            let evals: Vec<Vec<(SpaceEval, Duration, Option<String>)>> = chunk
                .par_iter()
                .map(|space| {
                    let s = SpaceAnalysis::with_config(space.clone(), config);
                    active
                        .iter()
                        .map(|&i| {
                            let t0 = Instant::now();
                            let r = eval_on(claims[i], &s);
                            let dt = t0.elapsed();
                            match r {
                                Ok(e) => (e, dt, None),
                                Err(e) => (SpaceEval::Error, dt, Some(e.0)),
                            }
                        })
                        .collect()
                })
                .collect();
            for (space, row) in chunk.iter().zip(evals) {
                for (&i, (e, dt, err)) in active.iter().zip(row) {
                    let r = &mut results[i];
                    if r.failure.is_some() || r.error.is_some() {
                        continue;
                    }
                    r.checked += 1;
                    r.time += dt;
                    r.bound = n;
                    match e {
                        SpaceEval::Vacuous => {}
                        SpaceEval::Holds => r.support += 1,
                        SpaceEval::Fails(dir) => {
                            r.support += 1;
                            r.failure = Some((space.clone(), dir));
                        }
                        SpaceEval::Error => {
                            r.error = Some((space.clone(), err.unwrap_or_default()))
                        }
                    }
                }
            }
        }
    }
    results
}

fn apply_sweep(
    claim: &Claim,
    verdict: &mut ClaimVerdict,
    r: SweepResult,
    n_max: usize,
    config: ClassConfig,
) {
    verdict.checked = r.checked;
    verdict.support = r.support;
    verdict.time_ms = ms(r.time);
    verdict.bound = Some(if r.failure.is_some() { r.bound } else { n_max });
    if let Some((space, e)) = r.error {
        verdict.status = Status::Error;
        verdict.detail = format!("{e} on {}", SpaceDocument::from_space(&space).to_inline());
        return;
    }
    if let Some((space, dir)) = r.failure {
        let named = NamedSpace::unnamed(space);
        let s = SpaceAnalysis::with_config(named.space.clone(), config);
        let props: Vec<&Prop> = match &claim.statement {
            Statement::Implication {
                premises,
                conclusion,
            } => premises.iter().chain([conclusion]).collect(),
            Statement::Equivalence { left, right } => vec![left, right],
            _ => vec![],
        };
        let failing = match &claim.statement {
            Statement::Implication {
                premises,
                conclusion,
            } if premises.is_empty() => {
                format!("{conclusion} fails")
            }
            Statement::Implication { conclusion, .. } => {
                format!("premises hold but {conclusion} fails")
            }
            _ => dir.to_string(),
        };
        verdict.status = Status::Refuted;
        verdict.detail = format!(
            "counterexample at n = {}: {}",
            named.space.n(),
            named.document().to_inline()
        );
        if named.space.n() == 1 {
            // The one-point space often fails for vacuous reasons; say whether
            // anything larger does too.
            let larger = find_first_space_between(2, n_max, config, |s| {
                matches!(eval_on(claim, s), Ok(SpaceEval::Fails(_)))
            });
            let _ = match larger {
                Some(space) => write!(
                    verdict.detail,
                    "; smallest with n ≥ 2: {}",
                    SpaceDocument::from_space(&space).to_inline()
                ),
                None => write!(verdict.detail, "; no counterexample with 2 ≤ n ≤ {n_max}"),
            };
        }
        verdict.witness = Some(Witness {
            space: named.document(),
            fixture: None,
            target: None,
            map: None,
            failing: vec![failing],
            families: dump_families(&named, &s, &props),
        });
    } else if r.support == 0 {
        verdict.detail = format!("premises never hold up to n = {n_max}");
    }
}

/// An enumerated space with its analysis and the analysis of its H*-induced space.
struct MapContextSpace {
    analysis: SpaceAnalysis,
    induced: Option<SpaceAnalysis>,
}

fn map_context_spaces(n_max: usize, config: ClassConfig) -> Vec<MapContextSpace> {
    let spaces: Vec<FiniteSpace> = (1..=n_max)
        .flat_map(|n| enumerate_topologies(n).expect("validated bound"))
        .collect();
    spaces
        .into_par_iter()
        .map(|space| {
            let analysis = SpaceAnalysis::with_config(space, config);
            let induced = match analysis
                .induced_space(SetClass::HStar)
                .expect("H* has a polarity")
            {
                InducedSpace::Topology(t) => Some(SpaceAnalysis::with_config(t, config)),
                InducedSpace::NotATopology(_) => None,
            };
            MapContextSpace { analysis, induced }
        })
        .collect()
}

/// A single source/target pair, for re-checking map witnesses.
struct MapContext {
    source: SpaceAnalysis,
    target: SpaceAnalysis,
    source_induced: Option<SpaceAnalysis>,
    target_induced: Option<SpaceAnalysis>,
}

impl MapContext {
    fn new(source: SpaceAnalysis, target: SpaceAnalysis) -> Self {
        let induce = |s: &SpaceAnalysis| match s.induced_space(SetClass::HStar).ok()? {
            InducedSpace::Topology(t) => Some(SpaceAnalysis::with_config(t, s.config())),
            InducedSpace::NotATopology(_) => None,
        };
        Self {
            source_induced: induce(&source),
            target_induced: induce(&target),
            source,
            target,
        }
    }
}

enum MapEval {
    Inapplicable,
    Vacuous,
    Holds,
    Fails,
}

trait InducedPair {
    fn induced(&self) -> Option<(&SpaceAnalysis, &SpaceAnalysis)>;
}

impl InducedPair for MapContext {
    fn induced(&self) -> Option<(&SpaceAnalysis, &SpaceAnalysis)> {
        Some((self.source_induced.as_ref()?, self.target_induced.as_ref()?))
    }
}

impl InducedPair for (&MapContextSpace, &MapContextSpace) {
    fn induced(&self) -> Option<(&SpaceAnalysis, &SpaceAnalysis)> {
        Some((self.0.induced.as_ref()?, self.1.induced.as_ref()?))
    }
}

fn evaluate_map(
    pair: &impl InducedPair,
    f: &PointMap<'_>,
    premises: &[MapProp],
    conclusion: &[MapProp],
    equivalence: bool,
) -> MapEval {
    let induced_map = pair
        .induced()
        .map(|(src, tgt)| PointMap::new(src, tgt, f.assignment()).expect("same point sets"));
    let all = |ps: &[MapProp]| -> Option<bool> {
        let mut v = true;
        for p in ps {
            v &= p.holds(f, induced_map.as_ref())?;
        }
        Some(v)
    };
    let Some(lhs) = all(premises) else {
        return MapEval::Inapplicable;
    };
    if !equivalence && !lhs {
        return MapEval::Vacuous;
    }
    let Some(rhs) = all(conclusion) else {
        return MapEval::Inapplicable;
    };
    match (equivalence, lhs, rhs) {
        (true, l, r) if l == r => MapEval::Holds,
        (true, _, _) => MapEval::Fails,
        (false, _, true) => MapEval::Holds,
        (false, _, false) => MapEval::Fails,
    }
}

fn run_map_claim(
    spaces: &[MapContextSpace],
    scope: MapScope,
    premises: &[MapProp],
    conclusion: &[MapProp],
    equivalence: bool,
    verdict: &mut ClaimVerdict,
) {
    #[derive(Default)]
    struct Tally {
        checked: u64,
        support: u64,
        inapplicable: u64,
        failure: Option<(usize, Vec<usize>)>,
    }
    let bijective = scope == MapScope::Bijections;
    let per_source: Vec<Tally> = spaces
        .par_iter()
        .map(|src| {
            let mut t = Tally::default();
            for (ti, tgt) in spaces.iter().enumerate() {
                if bijective && src.analysis.n() != tgt.analysis.n() {
                    continue;
                }
                let pair = (src, tgt);
                let maps = enumerate_maps(src.analysis.space(), tgt.analysis.space(), bijective)
                    .expect("bounded by the registry config");
                for assignment in maps {
                    let f = PointMap::new(&src.analysis, &tgt.analysis, &assignment)
                        .expect("enumerated maps are valid");
                    t.checked += 1;
                    match evaluate_map(&pair, &f, premises, conclusion, equivalence) {
                        MapEval::Inapplicable => t.inapplicable += 1,
                        MapEval::Vacuous => {}
                        MapEval::Holds => t.support += 1,
                        MapEval::Fails => {
                            t.support += 1;
                            t.failure = Some((ti, assignment));
                            return t;
                        }
                    }
                }
            }
            t
        })
        .collect();

    for (si, t) in per_source.into_iter().enumerate() {
        verdict.checked += t.checked;
        verdict.support += t.support;
        verdict.inapplicable += t.inapplicable;
        if let (Some((ti, assignment)), None) = (t.failure, verdict.witness.as_ref()) {
            let src = NamedSpace::unnamed(spaces[si].analysis.space().clone());
            let tgt = NamedSpace::unnamed(spaces[ti].analysis.space().clone());
            verdict.status = Status::Refuted;
            verdict.detail = format!(
                "f = {:?} from {} to {}",
                assignment,
                src.document().to_inline(),
                tgt.document().to_inline()
            );
            verdict.witness = Some(Witness {
                space: src.document(),
                fixture: None,
                target: Some(tgt.document()),
                map: Some(assignment),
                failing: vec![if equivalence {
                    "the two sides disagree".to_string()
                } else {
                    "premises hold but the conclusion fails".to_string()
                }],
                families: Vec::new(),
            });
            // Later sources are still tallied for the counts, but the first failure wins.
        }
    }
    if verdict.status == Status::Confirmed && verdict.support == 0 {
        if verdict.inapplicable > 0 {
            verdict.status = Status::Inapplicable;
            verdict.detail = format!(
                "{} of {} maps skipped: an induced family is not a topology",
                verdict.inapplicable, verdict.checked
            );
        } else {
            verdict.detail = "premises never hold".to_string();
        }
    } else if verdict.inapplicable > 0 && verdict.detail.is_empty() {
        verdict.detail = format!(
            "{} of {} maps skipped: an induced family is not a topology",
            verdict.inapplicable, verdict.checked
        );
    }
}
