//! Bounded, seeded evidence search for the open questions: enumerate small
//! universes, force the relevant axiom instances into the closure, run the
//! checkers, and report what was found. The search explores; it never
//! proves, and every report says so.
//!
//! Candidates are generated from a deterministic per-index substream of the
//! seed and distributed across worker threads; results are merged in
//! candidate order, so output is independent of scheduling.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::axioms::{self, AxiomName, AxiomSpec, Verdict3};
use crate::json::{AxiomReportJson, GeneratorSetJson, UniverseJson, SCHEMA_VERSION};
use crate::lottery::{mix, Lottery, Outcome};
use crate::order::OutcomePreorder;
use crate::prng::SplitMix64;
use crate::rational::{rat, Rational};
use crate::relation::{
    build_closure, ensure_good_expectations, DeclaredPair, GeneratorRule, GeneratorSet, Universe,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchQuestion {
    OpenQ1,
    OpenQ2Evidence,
    OpenQ3,
    Conjecture1,
    Conjecture2,
}

impl SearchQuestion {
    pub const ALL: [SearchQuestion; 5] = [
        SearchQuestion::OpenQ1,
        SearchQuestion::OpenQ2Evidence,
        SearchQuestion::OpenQ3,
        SearchQuestion::Conjecture1,
        SearchQuestion::Conjecture2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SearchQuestion::OpenQ1 => "open-q1",
            SearchQuestion::OpenQ2Evidence => "open-q2-evidence",
            SearchQuestion::OpenQ3 => "open-q3",
            SearchQuestion::Conjecture1 => "conjecture1",
            SearchQuestion::Conjecture2 => "conjecture2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        SearchQuestion::ALL
            .iter()
            .copied()
            .find(|q| q.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Coordinate, denominator, and size limits for candidate universes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchBounds {
    pub coord_bound: i64,
    pub denom_bound: i64,
    pub outcome_pool: usize,
    pub max_support: usize,
    pub seed_lotteries: usize,
    pub max_universe: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            coord_bound: 3,
            denom_bound: 2,
            outcome_pool: 5,
            max_support: 3,
            seed_lotteries: 3,
            max_universe: 64,
        }
    }
}

/// Hard ceiling on per-candidate universes, overridable through the
/// `NEGDOM_SEARCH_CAP` environment variable.
pub fn universe_guard() -> usize {
    std::env::var("NEGDOM_SEARCH_CAP")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(512)
}

impl SearchBounds {
    pub fn validate(&self) -> Result<()> {
        let guard = universe_guard();
        if self.max_universe > guard {
            return Err(Error::GuardExceeded {
                what: "search universe bound".into(),
                value: self.max_universe,
                limit: guard,
            });
        }
        if self.coord_bound < 1 || self.denom_bound < 1 || self.outcome_pool < 2 {
            return Err(Error::BadInput("search bounds are degenerate".into()));
        }
        Ok(())
    }
}

/// One examined universe, with the complete manifest needed to re-verify it.
#[derive(Clone, Debug)]
pub struct SearchFinding {
    pub candidate: u64,
    pub universe: Universe,
    pub generators: GeneratorSet,
    pub checks: Vec<AxiomSpec>,
    pub reports: Vec<axioms::AxiomReport>,
    pub classification: String,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub question: SearchQuestion,
    pub bounds: SearchBounds,
    pub seed: u64,
    pub budget: u64,
    pub candidates_examined: u64,
    pub candidates_skipped: u64,
    pub findings: Vec<SearchFinding>,
    pub summary: BTreeMap<String, u64>,
}

impl SearchReport {
    /// Serializes deterministically (struct field order, BTreeMap keys).
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct FindingJson {
            candidate: u64,
            classification: String,
            universe: UniverseJson,
            generators: GeneratorSetJson,
            checks: Vec<String>,
            reports: Vec<AxiomReportJson>,
        }
        #[derive(Serialize)]
        struct ReportJson<'a> {
            schema_version: u32,
            status: &'static str,
            question: &'a str,
            bounds: &'a SearchBounds,
            seed: u64,
            budget: u64,
            candidates_examined: u64,
            candidates_skipped: u64,
            summary: &'a BTreeMap<String, u64>,
            findings: Vec<FindingJson>,
        }
        let findings = self
            .findings
            .iter()
            .map(|f| FindingJson {
                candidate: f.candidate,
                classification: f.classification.clone(),
                universe: UniverseJson::from_universe(&f.universe),
                generators: GeneratorSetJson::from_generators(&f.generators),
                checks: f
                    .checks
                    .iter()
                    .map(|c| c.name.as_str().to_string())
                    .collect(),
                reports: f.reports.iter().map(AxiomReportJson::from_report).collect(),
            })
            .collect();
        serde_json::to_value(ReportJson {
            schema_version: SCHEMA_VERSION,
            status: "evidence",
            question: self.question.as_str(),
            bounds: &self.bounds,
            seed: self.seed,
            budget: self.budget,
            candidates_examined: self.candidates_examined,
            candidates_skipped: self.candidates_skipped,
            summary: &self.summary,
            findings,
        })
        .expect("report serializes")
    }
}

/// Rebuilds a finding's closure from its manifest and re-runs its checks;
/// `true` when every verdict matches the recorded report.
pub fn reverify_finding(finding: &SearchFinding) -> Result<bool> {
    let order = OutcomePreorder::pareto_box();
    let (rel, _) = build_closure(&finding.universe, &order, &finding.generators)?;
    if finding.checks.len() != finding.reports.len() {
        return Ok(false);
    }
    for (spec, recorded) in finding.checks.iter().zip(&finding.reports) {
        let fresh = axioms::check_axiom(&rel, &finding.universe, &order, spec)?;
        if fresh.verdict != recorded.verdict {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Deterministically samples and classifies `budget` candidate universes.
pub fn search_conjecture(
    question: SearchQuestion,
    bounds: &SearchBounds,
    budget: u64,
    seed: u64,
) -> Result<SearchReport> {
    bounds.validate()?;
    let workers = std::thread::available_parallelism()
        .map(|n| n.get().min(8))
        .unwrap_or(1);
    let mut slots: Vec<Option<Result<Option<SearchFinding>>>> = Vec::new();
    slots.resize_with(budget as usize, || None);
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for w in 0..workers {
            let bounds = bounds.clone();
            handles.push(scope.spawn(move || {
                let mut out = Vec::new();
                let mut c = w as u64;
                while c < budget {
                    out.push((c, examine_candidate(question, &bounds, seed, c)));
                    c += workers as u64;
                }
                out
            }));
        }
        for h in handles {
            for (c, r) in h.join().expect("worker panicked") {
                slots[c as usize] = Some(r);
            }
        }
    });
    let mut findings = Vec::new();
    let mut skipped = 0u64;
    let mut summary: BTreeMap<String, u64> = BTreeMap::new();
    for slot in slots {
        match slot.expect("all candidates examined") {
            Ok(Some(finding)) => {
                *summary.entry(finding.classification.clone()).or_insert(0) += 1;
                findings.push(finding);
            }
            Ok(None) => skipped += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(SearchReport {
        question,
        bounds: bounds.clone(),
        seed,
        budget,
        candidates_examined: budget - skipped,
        candidates_skipped: skipped,
        findings,
        summary,
    })
}

fn substream(seed: u64, candidate: u64) -> SplitMix64 {
    SplitMix64::new(seed ^ (candidate.wrapping_add(1)).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn examine_candidate(
    question: SearchQuestion,
    bounds: &SearchBounds,
    seed: u64,
    candidate: u64,
) -> Result<Option<SearchFinding>> {
    let mut rng = substream(seed, candidate);
    let order = OutcomePreorder::pareto_box();
    let Some(items) = sample_items(question, bounds, &mut rng)? else {
        return Ok(None);
    };
    let (items, _) = ensure_good_expectations(items, &order)?;
    if items.len() > bounds.max_universe {
        return Ok(None);
    }
    let universe = Universe::canonical(items)?;

    type Classifier = fn(&[axioms::AxiomReport]) -> String;
    let (generators, checks, classify): (GeneratorSet, Vec<AxiomSpec>, Classifier) = match question
    {
        SearchQuestion::OpenQ3 => {
            let base = GeneratorSet::new(vec![
                GeneratorRule::OrderLift,
                GeneratorRule::GoodExpectations,
                GeneratorRule::StochasticDominance,
            ]);
            let generators = force_indifferent_independence(&universe, &order, base)?;
            let checks = vec![
                AxiomSpec::new(AxiomName::NegativeDominance),
                AxiomSpec::new(AxiomName::GoodExpectations),
                AxiomSpec::new(AxiomName::StochasticDominanceRespect),
                AxiomSpec::new(AxiomName::IndifferentIndependence),
            ];
            fn classify(reports: &[axioms::AxiomReport]) -> String {
                if reports.iter().any(|r| r.verdict == Verdict3::Violated) {
                    "forced-violation".into()
                } else if reports.iter().all(|r| r.verdict == Verdict3::Holds) {
                    "jointly-satisfied".into()
                } else {
                    "inconclusive".into()
                }
            }
            (generators, checks, classify)
        }
        SearchQuestion::OpenQ2Evidence => {
            let generators = GeneratorSet::new(vec![
                GeneratorRule::OrderLift,
                GeneratorRule::GoodExpectations,
                GeneratorRule::StochasticDominance,
            ]);
            let checks = vec![
                AxiomSpec::new(AxiomName::NegativeDominance),
                AxiomSpec::new(AxiomName::ComparableIndependence),
                AxiomSpec::new(AxiomName::StochasticDominanceRespect),
            ];
            fn classify(reports: &[axioms::AxiomReport]) -> String {
                if reports.iter().any(|r| r.verdict == Verdict3::Violated) {
                    "package-violated".into()
                } else if reports.iter().all(|r| r.verdict == Verdict3::Holds) {
                    "package-satisfied".into()
                } else {
                    "inconclusive".into()
                }
            }
            (generators, checks, classify)
        }
        SearchQuestion::OpenQ1 | SearchQuestion::Conjecture1 => {
            let mut generators = GeneratorSet::new(vec![
                GeneratorRule::OrderLift,
                GeneratorRule::StochasticDominance,
            ]);
            declare_unidimensional_expectations(&universe, &mut generators)?;
            let checks = vec![
                AxiomSpec::new(AxiomName::NegativeDominance),
                AxiomSpec::new(AxiomName::ComparableIndependence),
                AxiomSpec::new(AxiomName::StochasticDominanceRespect),
                AxiomSpec::new(AxiomName::UnidimensionalExpectations),
                AxiomSpec::new(AxiomName::ParetoConsistency),
                AxiomSpec::new(AxiomName::ConverseParetoConsistency),
                AxiomSpec::new(AxiomName::GoodExpectations),
            ];
            fn classify(reports: &[axioms::AxiomReport]) -> String {
                let premises_ok = reports[..6].iter().all(|r| r.verdict != Verdict3::Violated);
                let conclusion = reports[6].verdict;
                match (premises_ok, conclusion) {
                    (false, _) => "premise-violated".into(),
                    (true, Verdict3::Violated) => "premises-hold-good-expectations-fails".into(),
                    (true, Verdict3::Holds) => "premises-and-conclusion-hold".into(),
                    (true, Verdict3::NotDeterminable) => "inconclusive".into(),
                }
            }
            (generators, checks, classify)
        }
        SearchQuestion::Conjecture2 => {
            let mut base = GeneratorSet::new(vec![GeneratorRule::OrderLift]);
            declare_unidimensional_expectations(&universe, &mut base)?;
            let generators = force_independence(&universe, &order, base)?;
            let checks = vec![
                AxiomSpec::new(AxiomName::ParetoConsistency),
                AxiomSpec::new(AxiomName::ConverseParetoConsistency),
                AxiomSpec::new(AxiomName::Independence),
                AxiomSpec::new(AxiomName::UnidimensionalExpectations),
                AxiomSpec::new(AxiomName::Expectationalism),
            ];
            fn classify(reports: &[axioms::AxiomReport]) -> String {
                let premises_ok = reports[..4].iter().all(|r| r.verdict != Verdict3::Violated);
                let conclusion = reports[4].verdict;
                match (premises_ok, conclusion) {
                    (false, _) => "premise-violated".into(),
                    (true, Verdict3::Violated) => "premises-hold-expectationalism-fails".into(),
                    (true, Verdict3::Holds) => "premises-and-conclusion-hold".into(),
                    (true, Verdict3::NotDeterminable) => "inconclusive".into(),
                }
            }
            (generators, checks, classify)
        }
    };

    let (rel, _) = build_closure(&universe, &order, &generators)?;
    let mut reports = Vec::with_capacity(checks.len());
    for spec in &checks {
        reports.push(axioms::check_axiom(&rel, &universe, &order, spec)?);
    }
    let classification = classify(&reports);
    Ok(Some(SearchFinding {
        candidate,
        universe,
        generators,
        checks,
        reports,
        classification,
    }))
}

/// Samples the raw lottery set for one candidate. Returns `None` when the
/// bounds cannot yield a candidate that exercises the question's premises
/// (e.g. no non-degenerate unidimensional lottery fits).
fn sample_items(
    question: SearchQuestion,
    bounds: &SearchBounds,
    rng: &mut SplitMix64,
) -> Result<Option<Vec<Lottery>>> {
    let needs_unidimensional = matches!(
        question,
        SearchQuestion::OpenQ1 | SearchQuestion::Conjecture1 | SearchQuestion::Conjecture2
    );
    if needs_unidimensional && bounds.max_support < 2 {
        return Ok(None);
    }
    let mut outcomes: Vec<Outcome> = Vec::new();
    for _ in 0..bounds.outcome_pool {
        outcomes.push(Outcome::pair(
            rng.rational(bounds.coord_bound, bounds.denom_bound),
            rng.rational(bounds.coord_bound, bounds.denom_bound),
        ));
    }
    outcomes.sort();
    outcomes.dedup();
    let mut items: Vec<Lottery> = outcomes.iter().cloned().map(Lottery::degenerate).collect();

    // generic random lotteries over the pool
    for _ in 0..bounds.seed_lotteries {
        if bounds.max_support < 2 {
            break;
        }
        let support = 2 + (rng.below((bounds.max_support - 1) as u64) as usize);
        let mut chosen: Vec<Outcome> = Vec::new();
        for _ in 0..support {
            chosen.push(rng.pick(&outcomes).clone());
        }
        chosen.sort();
        chosen.dedup();
        if chosen.len() < 2 {
            continue;
        }
        let weights: Vec<Rational> = (0..chosen.len())
            .map(|_| rat(rng.range_i64(1, 2 * bounds.denom_bound), 1))
            .collect();
        let total: Rational = weights.iter().cloned().sum();
        let entries = chosen
            .into_iter()
            .zip(weights.into_iter().map(|w| w / &total))
            .collect::<Vec<_>>();
        items.push(Lottery::new(entries)?);
    }

    if needs_unidimensional {
        // a planted unidimensional pair with its expectation
        let base = rng.pick(&outcomes).clone();
        let axis = rng.below(2) as usize;
        let delta = rng.positive_rational(bounds.coord_bound, bounds.denom_bound);
        let mut hi = base.coords().to_vec();
        hi[axis] = &hi[axis] + &delta;
        let hi = Outcome::new(hi);
        let uni = Lottery::uniform(vec![base.clone(), hi.clone()])?;
        let e = uni.expectation();
        items.push(Lottery::degenerate(hi));
        items.push(Lottery::degenerate(e.clone()));
        items.push(uni.clone());
        if question == SearchQuestion::Conjecture2 {
            // mixtures that give the independence forcing something to move
            let h = Lottery::degenerate(rng.pick(&outcomes).clone());
            items.push(mix(&uni, &h, &rat(1, 2))?);
            items.push(mix(&Lottery::degenerate(e), &h, &rat(1, 2))?);
        }
    }
    if matches!(
        question,
        SearchQuestion::OpenQ1 | SearchQuestion::Conjecture1 | SearchQuestion::Conjecture2
    ) {
        // a good, non-unidimensional lottery so the conclusion has bite
        let u = rng.rational(bounds.coord_bound, bounds.denom_bound);
        let v = &u + rng.positive_rational(bounds.coord_bound, bounds.denom_bound);
        let lo = Outcome::pair(u.clone(), u);
        let hi = Outcome::pair(v.clone(), v);
        let diag = Lottery::uniform(vec![lo, hi])?;
        items.push(Lottery::degenerate(diag.expectation()));
        items.push(diag);
    }
    if matches!(
        question,
        SearchQuestion::OpenQ3 | SearchQuestion::OpenQ2Evidence
    ) {
        // a planted indifference cluster: two good diagonal lotteries with a
        // common expectation, plus the mixtures the axiom instances need
        let u = rng.rational(bounds.coord_bound, bounds.denom_bound);
        let v = &u + rng.positive_rational(bounds.coord_bound, bounds.denom_bound);
        let lo = Outcome::pair(u.clone(), u);
        let hi = Outcome::pair(v.clone(), v);
        let g1 = Lottery::uniform(vec![lo, hi])?;
        let e = Lottery::degenerate(g1.expectation());
        let g2 = mix(&g1, &e, &rat(1, 2))?;
        items.push(mix(&g1, &g2, &rat(1, 2))?);
        items.push(mix(&e, &g2, &rat(1, 2))?);
        items.push(g2);
        items.push(g1);
        items.push(e);
    }
    Ok(Some(items))
}

/// Declares `f ~ exp(f)` for every non-degenerate unidimensional member.
fn declare_unidimensional_expectations(
    universe: &Universe,
    generators: &mut GeneratorSet,
) -> Result<()> {
    for i in 0..universe.len() {
        let f = universe.lottery(i);
        if f.as_degenerate().is_some() || !f.is_unidimensional() {
            continue;
        }
        if let Some(j) = universe.degenerate_position(&f.expectation()) {
            generators.declared.push(DeclaredPair {
                from: i,
                to: j,
                both: true,
                tag: "unidimensional-expectations".into(),
            });
        }
    }
    Ok(())
}

/// Adds every pair forced by Indifferent Independence (at weight 1/2) to the
/// generator set, iterating closure-and-force to a fixpoint.
fn force_indifferent_independence(
    universe: &Universe,
    order: &OutcomePreorder,
    mut generators: GeneratorSet,
) -> Result<GeneratorSet> {
    let alpha = rat(1, 2);
    loop {
        let (rel, _) = build_closure(universe, order, &generators)?;
        let mut new_pairs = Vec::new();
        let n = universe.len();
        for f in 0..n {
            for g in 0..n {
                if f == g || !rel.indifferent(f, g) {
                    continue;
                }
                for h in 0..n {
                    if !rel.indifferent(g, h) {
                        continue;
                    }
                    let mf = mix(universe.lottery(f), universe.lottery(h), &alpha)?;
                    let mg = mix(universe.lottery(g), universe.lottery(h), &alpha)?;
                    let (Some(mfi), Some(mgi)) = (universe.position(&mf), universe.position(&mg))
                    else {
                        continue;
                    };
                    if !(rel.indifferent(mfi, mgi)) {
                        new_pairs.push((mfi, mgi));
                    }
                }
            }
        }
        if new_pairs.is_empty() {
            return Ok(generators);
        }
        for (a, b) in new_pairs {
            generators.declared.push(DeclaredPair {
                from: a,
                to: b,
                both: true,
                tag: "indifferent-independence (forced)".into(),
            });
        }
    }
}

/// Adds every pair forced by full Independence at weight 1/2 (both the mix
/// and un-mix directions), iterating to a fixpoint.
fn force_independence(
    universe: &Universe,
    order: &OutcomePreorder,
    mut generators: GeneratorSet,
) -> Result<GeneratorSet> {
    let alpha = rat(1, 2);
    // precompute mixture positions
    let n = universe.len();
    let mut mix_pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for f in 0..n {
        for h in 0..n {
            let m = mix(universe.lottery(f), universe.lottery(h), &alpha)?;
            if let Some(p) = universe.position(&m) {
                mix_pos.insert((f, h), p);
            }
        }
    }
    loop {
        let (rel, _) = build_closure(universe, order, &generators)?;
        let mut new_pairs = Vec::new();
        for f in 0..n {
            for g in 0..n {
                if f == g {
                    continue;
                }
                for h in 0..n {
                    let (Some(&mf), Some(&mg)) = (mix_pos.get(&(f, h)), mix_pos.get(&(g, h)))
                    else {
                        continue;
                    };
                    if rel.weak(f, g) && !rel.weak(mf, mg) {
                        new_pairs.push((mf, mg));
                    }
                    if rel.weak(mf, mg) && !rel.weak(f, g) {
                        new_pairs.push((f, g));
                    }
                }
            }
        }
        if new_pairs.is_empty() {
            return Ok(generators);
        }
        new_pairs.sort_unstable();
        new_pairs.dedup();
        for (a, b) in new_pairs {
            generators.declared.push(DeclaredPair {
                from: a,
                to: b,
                both: false,
                tag: "independence (forced)".into(),
            });
        }
    }
}
