//! Checkers for the axiom catalog, evaluated over a finite relation and
//! universe, with three-valued verdicts.
//!
//! Universally quantified axioms are checked exhaustively over the universe
//! and report holds or violated with concrete witnesses. Existence axioms
//! (certainty equivalents and the continuity-flavored assumptions) report
//! holds only when the witness is present inside the universe and otherwise
//! not-determinable: a finite universe cannot refute existence over the full
//! lottery space. Independence-family axioms are evaluated on every instance
//! whose mixtures are present in the universe; reports disclose the alpha
//! set and the number of instances checked.
//!
//! Outcome-level comparisons consult the relation when both degenerate
//! lotteries are present and fall back to the outcome order otherwise.

use std::collections::BTreeMap;
use std::fmt;

use crate::dominance;
use crate::lottery::{mix, outcomes_unidimensional, Outcome};
use crate::order::{OutcomePreorder, Verdict};
use crate::rational::{format_rational, rat, Rational};
use crate::relation::{Relation, Universe};
use crate::{Error, Result};

/// Names of every checkable axiom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum AxiomName {
    NegativeDominance,
    OutcomeComparability,
    OutcomeDominance,
    Vst,
    Independence,
    IndifferentIndependence,
    ComparableIndependence,
    StochasticDominanceRespect,
    GoodExpectations,
    Expectationalism,
    UnidimensionalExpectations,
    WeakUnidimensionalExpectations,
    DimensionalSeparability,
    CertaintyEquivalents,
    StrictBetweenness,
    UnidimensionalContinuity,
    UnidimensionalCertaintyEquivalents,
    ParetoConsistency,
    ConverseParetoConsistency,
}

impl AxiomName {
    pub const ALL: [AxiomName; 19] = [
        AxiomName::NegativeDominance,
        AxiomName::OutcomeComparability,
        AxiomName::OutcomeDominance,
        AxiomName::Vst,
        AxiomName::Independence,
        AxiomName::IndifferentIndependence,
        AxiomName::ComparableIndependence,
        AxiomName::StochasticDominanceRespect,
        AxiomName::GoodExpectations,
        AxiomName::Expectationalism,
        AxiomName::UnidimensionalExpectations,
        AxiomName::WeakUnidimensionalExpectations,
        AxiomName::DimensionalSeparability,
        AxiomName::CertaintyEquivalents,
        AxiomName::StrictBetweenness,
        AxiomName::UnidimensionalContinuity,
        AxiomName::UnidimensionalCertaintyEquivalents,
        AxiomName::ParetoConsistency,
        AxiomName::ConverseParetoConsistency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            AxiomName::NegativeDominance => "negative-dominance",
            AxiomName::OutcomeComparability => "outcome-comparability",
            AxiomName::OutcomeDominance => "outcome-dominance",
            AxiomName::Vst => "vst",
            AxiomName::Independence => "independence",
            AxiomName::IndifferentIndependence => "indifferent-independence",
            AxiomName::ComparableIndependence => "comparable-independence",
            AxiomName::StochasticDominanceRespect => "stochastic-dominance-respect",
            AxiomName::GoodExpectations => "good-expectations",
            AxiomName::Expectationalism => "expectationalism",
            AxiomName::UnidimensionalExpectations => "unidimensional-expectations",
            AxiomName::WeakUnidimensionalExpectations => "weak-unidimensional-expectations",
            AxiomName::DimensionalSeparability => "dimensional-separability",
            AxiomName::CertaintyEquivalents => "certainty-equivalents",
            AxiomName::StrictBetweenness => "strict-betweenness",
            AxiomName::UnidimensionalContinuity => "unidimensional-continuity",
            AxiomName::UnidimensionalCertaintyEquivalents => "unidimensional-certainty-equivalents",
            AxiomName::ParetoConsistency => "pareto-consistency",
            AxiomName::ConverseParetoConsistency => "converse-pareto-consistency",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        AxiomName::ALL
            .iter()
            .copied()
            .find(|a| a.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for AxiomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An axiom plus its parameters (the mixture-weight set for the
/// independence family and VST).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomSpec {
    pub name: AxiomName,
    pub alphas: Vec<Rational>,
}

impl AxiomSpec {
    pub fn new(name: AxiomName) -> Self {
        AxiomSpec {
            name,
            alphas: vec![rat(1, 2)],
        }
    }

    pub fn with_alphas(name: AxiomName, alphas: Vec<Rational>) -> Self {
        AxiomSpec { name, alphas }
    }
}

/// Verdict of a checker run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict3 {
    Holds,
    Violated,
    NotDeterminable,
}

impl Verdict3 {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict3::Holds => "holds",
            Verdict3::Violated => "violated",
            Verdict3::NotDeterminable => "not-determinable",
        }
    }
}

impl fmt::Display for Verdict3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A concrete counterexample tuple: universe indices plus any outcome-level
/// evidence, with a human-readable note.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub items: Vec<usize>,
    pub outcomes: Vec<Outcome>,
    pub note: String,
}

/// Verdict record for one axiom. `violated` implies at least one witness,
/// and every witness re-verifies against the relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub axiom: String,
    pub verdict: Verdict3,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
}

impl AxiomReport {
    pub fn new(axiom: impl Into<String>) -> Self {
        AxiomReport {
            axiom: axiom.into(),
            verdict: Verdict3::NotDeterminable,
            witnesses: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn finish_universal(mut self) -> Self {
        self.verdict = if self.witnesses.is_empty() {
            Verdict3::Holds
        } else {
            Verdict3::Violated
        };
        self
    }
}

/// Shared lookup state for the checkers.
struct Ctx<'a> {
    rel: &'a Relation,
    universe: &'a Universe,
    order: &'a OutcomePreorder,
    degenerate_of: BTreeMap<&'a Outcome, usize>,
}

impl<'a> Ctx<'a> {
    fn new(rel: &'a Relation, universe: &'a Universe, order: &'a OutcomePreorder) -> Result<Self> {
        if rel.len() != universe.len() {
            return Err(Error::BadInput(format!(
                "relation over {} items does not match universe of {}",
                rel.len(),
                universe.len()
            )));
        }
        let mut degenerate_of = BTreeMap::new();
        for i in 0..universe.len() {
            if let Some(o) = universe.lottery(i).as_degenerate() {
                degenerate_of.insert(o, i);
            }
        }
        Ok(Ctx {
            rel,
            universe,
            order,
            degenerate_of,
        })
    }

    /// Outcome comparison: the relation's verdict when both degenerates are
    /// present, the outcome order's otherwise.
    fn outcome_verdict(&self, a: &Outcome, b: &Outcome) -> Result<Verdict> {
        match (self.degenerate_of.get(a), self.degenerate_of.get(b)) {
            (Some(&i), Some(&j)) => Ok(self.rel.verdict(i, j)),
            _ => self.order.compare(a, b),
        }
    }

    fn outcome_strict(&self, a: &Outcome, b: &Outcome) -> Result<bool> {
        Ok(self.outcome_verdict(a, b)? == Verdict::StrictlyAbove)
    }

    fn mixture_index(&self, f: usize, h: usize, alpha: &Rational) -> Result<Option<usize>> {
        let m = mix(self.universe.lottery(f), self.universe.lottery(h), alpha)?;
        Ok(self.universe.position(&m))
    }
}

/// Runs one axiom checker over a closed relation.
pub fn check_axiom(
    rel: &Relation,
    universe: &Universe,
    order: &OutcomePreorder,
    spec: &AxiomSpec,
) -> Result<AxiomReport> {
    let ctx = Ctx::new(rel, universe, order)?;
    for a in &spec.alphas {
        if a < &Rational::from_integer(0.into()) || a > &Rational::from_integer(1.into()) {
            return Err(Error::AlphaOutOfRange(format_rational(a)));
        }
    }
    match spec.name {
        AxiomName::NegativeDominance => negative_dominance(&ctx),
        AxiomName::OutcomeComparability => outcome_comparability(&ctx),
        AxiomName::OutcomeDominance => outcome_dominance(&ctx),
        AxiomName::Vst => vst(&ctx, &spec.alphas),
        AxiomName::Independence => independence(&ctx, &spec.alphas),
        AxiomName::IndifferentIndependence => indifferent_independence(&ctx, &spec.alphas),
        AxiomName::ComparableIndependence => comparable_independence(&ctx, &spec.alphas),
        AxiomName::StochasticDominanceRespect => stochastic_dominance_respect(&ctx),
        AxiomName::GoodExpectations => expectations_family(&ctx, spec.name),
        AxiomName::Expectationalism => expectations_family(&ctx, spec.name),
        AxiomName::UnidimensionalExpectations => expectations_family(&ctx, spec.name),
        AxiomName::WeakUnidimensionalExpectations => weak_unidimensional_expectations(&ctx),
        AxiomName::DimensionalSeparability => dimensional_separability(&ctx),
        AxiomName::CertaintyEquivalents => certainty_equivalents(&ctx),
        AxiomName::StrictBetweenness => strict_betweenness(&ctx),
        AxiomName::UnidimensionalContinuity => unidimensional_continuity(&ctx),
        AxiomName::UnidimensionalCertaintyEquivalents => unidimensional_certainty_equivalents(&ctx),
        AxiomName::ParetoConsistency => pareto_consistency(&ctx),
        AxiomName::ConverseParetoConsistency => converse_pareto_consistency(&ctx),
    }
}

/// Verifies reflexivity and transitivity of the matrix itself.
pub fn check_preorder(rel: &Relation) -> AxiomReport {
    let mut report = AxiomReport::new("preorder");
    if let Some(i) = rel.reflexivity_witness() {
        report.witnesses.push(Witness {
            items: vec![i],
            outcomes: vec![],
            note: format!("reflexivity fails at {i}"),
        });
    }
    if let Some((i, j, k)) = rel.transitivity_witness() {
        report.witnesses.push(Witness {
            items: vec![i, j, k],
            outcomes: vec![],
            note: format!("transitivity fails: {i} >= {j} >= {k} but not {i} >= {k}"),
        });
    }
    report.finish_universal()
}

fn negative_dominance(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::NegativeDominance.as_str());
    for (i, j) in ctx.rel.strict_pairs() {
        let f = ctx.universe.lottery(i);
        let g = ctx.universe.lottery(j);
        let mut found = false;
        'outer: for o in f.support() {
            for o2 in g.support() {
                if ctx.outcome_strict(o, o2)? {
                    found = true;
                    break 'outer;
                }
            }
        }
        if !found {
            report.witnesses.push(Witness {
                items: vec![i, j],
                outcomes: f.support().chain(g.support()).cloned().collect(),
                note: format!(
                    "{f} strictly preferred to {g} but no support outcome of the former is strictly preferred to any of the latter"
                ),
            });
        }
    }
    Ok(report.finish_universal())
}

fn outcome_comparability(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::OutcomeComparability.as_str());
    for (i, j) in ctx.rel.strict_pairs() {
        // one side must be an outcome
        let (fi, star) = if let Some(o) = ctx.universe.lottery(j).as_degenerate() {
            (i, o.clone())
        } else if let Some(o) = ctx.universe.lottery(i).as_degenerate() {
            (j, o.clone())
        } else {
            continue;
        };
        let f = ctx.universe.lottery(fi);
        let mut comparable = false;
        for o in f.support() {
            if ctx.outcome_verdict(o, &star)?.is_comparable() {
                comparable = true;
                break;
            }
        }
        if !comparable {
            report.witnesses.push(Witness {
                items: vec![i, j],
                outcomes: vec![star.clone()],
                note: format!(
                    "{} is strictly ranked against {star} but no support outcome is comparable to it",
                    f
                ),
            });
        }
    }
    Ok(report.finish_universal())
}

fn outcome_dominance(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::OutcomeDominance.as_str());
    let n = ctx.universe.len();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let f = ctx.universe.lottery(i);
            let g = ctx.universe.lottery(j);
            let mut premise = true;
            'outer: for o in f.support() {
                for o2 in g.support() {
                    if !ctx.outcome_strict(o, o2)? {
                        premise = false;
                        break 'outer;
                    }
                }
            }
            if premise && !ctx.rel.strict(i, j) {
                report.witnesses.push(Witness {
                    items: vec![i, j],
                    outcomes: vec![],
                    note: format!(
                        "every support outcome of {f} is strictly preferred to every support outcome of {g}, but {f} is not strictly preferred to {g}"
                    ),
                });
            }
        }
    }
    Ok(report.finish_universal())
}

fn vst(ctx: &Ctx, alphas: &[Rational]) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::Vst.as_str());
    let incomparable = ctx.rel.incomparable_pairs();
    let mut instances = 0usize;
    for &(f1, g1) in &incomparable {
        for &(f2, g2) in &incomparable {
            for alpha in alphas {
                let Some(mf) = ctx.mixture_index(f1, f2, alpha)? else {
                    continue;
                };
                let Some(mg) = ctx.mixture_index(g1, g2, alpha)? else {
                    continue;
                };
                instances += 1;
                if !ctx.rel.incomparable(mf, mg) && mf != mg {
                    report.witnesses.push(Witness {
                        items: vec![f1, g1, f2, g2, mf, mg],
                        outcomes: vec![],
                        note: format!(
                            "incomparable premises mix at {} into a pair judged {}",
                            format_rational(alpha),
                            ctx.rel.verdict(mf, mg)
                        ),
                    });
                }
            }
        }
    }
    report.notes.push(format!("instances checked: {instances}"));
    Ok(report.finish_universal())
}

/// Result shape shared by the mixture-quantified checkers: violations,
/// instances checked.
fn finish_instance_family(
    mut report: AxiomReport,
    instances: usize,
    ctx: &Ctx,
    alphas: &[Rational],
) -> AxiomReport {
    report.notes.push(format!(
        "universe size {}, alphas {{{}}}, instances checked: {instances}",
        ctx.universe.len(),
        alphas
            .iter()
            .map(format_rational)
            .collect::<Vec<_>>()
            .join(", ")
    ));
    if !report.witnesses.is_empty() {
        report.verdict = Verdict3::Violated;
    } else if instances == 0 {
        report.verdict = Verdict3::NotDeterminable;
        report
            .notes
            .push("no instance has its mixtures inside the universe".into());
    } else {
        report.verdict = Verdict3::Holds;
    }
    report
}

fn independence(ctx: &Ctx, alphas: &[Rational]) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::Independence.as_str());
    let n = ctx.universe.len();
    let mut instances = 0usize;
    for f in 0..n {
        for g in 0..n {
            if f == g {
                continue;
            }
            for h in 0..n {
                for alpha in alphas {
                    let Some(mf) = ctx.mixture_index(f, h, alpha)? else {
                        continue;
                    };
                    let Some(mg) = ctx.mixture_index(g, h, alpha)? else {
                        continue;
                    };
                    instances += 1;
                    let plain = ctx.rel.weak(f, g);
                    let mixed = ctx.rel.weak(mf, mg);
                    if plain != mixed {
                        report.witnesses.push(Witness {
                            items: vec![f, g, h, mf, mg],
                            outcomes: vec![],
                            note: format!(
                                "weak preference {} unmixed but {} after mixing with weight {}",
                                plain,
                                mixed,
                                format_rational(alpha)
                            ),
                        });
                    }
                }
            }
        }
    }
    Ok(finish_instance_family(report, instances, ctx, alphas))
}

fn indifferent_independence(ctx: &Ctx, alphas: &[Rational]) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::IndifferentIndependence.as_str());
    let n = ctx.universe.len();
    let mut instances = 0usize;
    for f in 0..n {
        for g in 0..n {
            if !ctx.rel.indifferent(f, g) {
                continue;
            }
            for h in 0..n {
                if !ctx.rel.indifferent(g, h) {
                    continue;
                }
                for alpha in alphas {
                    let Some(mf) = ctx.mixture_index(f, h, alpha)? else {
                        continue;
                    };
                    let Some(mg) = ctx.mixture_index(g, h, alpha)? else {
                        continue;
                    };
                    instances += 1;
                    if !ctx.rel.indifferent(mf, mg) {
                        report.witnesses.push(Witness {
                            items: vec![f, g, h, mf, mg],
                            outcomes: vec![],
                            note: format!(
                                "f ~ g ~ h but the mixtures at {} are judged {}",
                                format_rational(alpha),
                                ctx.rel.verdict(mf, mg)
                            ),
                        });
                    }
                }
            }
        }
    }
    Ok(finish_instance_family(report, instances, ctx, alphas))
}

#[allow(clippy::needless_range_loop)]
fn comparable_independence(ctx: &Ctx, alphas: &[Rational]) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::ComparableIndependence.as_str());
    let n = ctx.universe.len();
    // pairwise support comparability, precomputed
    let mut internally_comparable = vec![true; n];
    for (i, flag) in internally_comparable.iter_mut().enumerate() {
        let outcomes: Vec<&Outcome> = ctx.universe.lottery(i).support().collect();
        'outer: for (a_idx, a) in outcomes.iter().enumerate() {
            for b in &outcomes[a_idx + 1..] {
                if !ctx.outcome_verdict(a, b)?.is_comparable() {
                    *flag = false;
                    break 'outer;
                }
            }
        }
    }
    let mut cross = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i..n {
            let mut ok = true;
            'outer: for a in ctx.universe.lottery(i).support() {
                for b in ctx.universe.lottery(j).support() {
                    if !ctx.outcome_verdict(a, b)?.is_comparable() {
                        ok = false;
                        break 'outer;
                    }
                }
            }
            cross[i][j] = ok;
            cross[j][i] = ok;
        }
    }
    let comparable_triple = |f: usize, g: usize, h: usize| {
        internally_comparable[f]
            && internally_comparable[g]
            && internally_comparable[h]
            && cross[f][g]
            && cross[f][h]
            && cross[g][h]
    };
    let mut instances = 0usize;
    // mixtures are shared across triples; memoize their positions
    let mut mix_pos: BTreeMap<(usize, usize, usize), Option<usize>> = BTreeMap::new();
    let mut lookup =
        |ctx: &Ctx, f: usize, h: usize, ai: usize, alpha: &Rational| -> Result<Option<usize>> {
            if let Some(p) = mix_pos.get(&(f, h, ai)) {
                return Ok(*p);
            }
            let p = ctx.mixture_index(f, h, alpha)?;
            mix_pos.insert((f, h, ai), p);
            Ok(p)
        };
    for f in 0..n {
        if !internally_comparable[f] {
            continue;
        }
        for g in 0..n {
            if f == g || !internally_comparable[g] || !cross[f][g] {
                continue;
            }
            for h in 0..n {
                if !comparable_triple(f, g, h) {
                    continue;
                }
                for (ai, alpha) in alphas.iter().enumerate() {
                    let Some(mf) = lookup(ctx, f, h, ai, alpha)? else {
                        continue;
                    };
                    let Some(mg) = lookup(ctx, g, h, ai, alpha)? else {
                        continue;
                    };
                    instances += 1;
                    let plain = ctx.rel.weak(f, g);
                    let mixed = ctx.rel.weak(mf, mg);
                    if plain != mixed {
                        report.witnesses.push(Witness {
                            items: vec![f, g, h, mf, mg],
                            outcomes: vec![],
                            note: format!(
                                "combined support is pairwise comparable yet weak preference flips under mixing at {}",
                                format_rational(alpha)
                            ),
                        });
                    }
                }
            }
        }
    }
    Ok(finish_instance_family(report, instances, ctx, alphas))
}

fn stochastic_dominance_respect(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::StochasticDominanceRespect.as_str());
    let n = ctx.universe.len();
    // intern outcomes so the verdict cache avoids cloning keys
    let mut outcome_ids: BTreeMap<&Outcome, usize> = BTreeMap::new();
    for l in ctx.universe.items() {
        for o in l.support() {
            let next = outcome_ids.len();
            outcome_ids.entry(o).or_insert(next);
        }
    }
    let mut cache: BTreeMap<(usize, usize), Verdict> = BTreeMap::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let f = ctx.universe.lottery(i);
            let g = ctx.universe.lottery(j);
            let verdict = dominance::check_stochastic_dominance_with(f, g, &mut |a, b| {
                let key = (outcome_ids[a], outcome_ids[b]);
                if let Some(v) = cache.get(&key) {
                    return Ok(*v);
                }
                let v = ctx.order.compare(a, b)?;
                cache.insert(key, v);
                Ok(v)
            })?;
            if verdict.dominates && !ctx.rel.strict(i, j) {
                report.witnesses.push(Witness {
                    items: vec![i, j],
                    outcomes: vec![],
                    note: format!(
                        "{f} stochastically dominates {g} but the relation judges the pair {}",
                        ctx.rel.verdict(i, j)
                    ),
                });
            }
        }
    }
    Ok(report.finish_universal())
}

/// Shared checker for the `f ∼ exp(f)` family; the name selects which
/// lotteries the requirement quantifies over.
fn expectations_family(ctx: &Ctx, name: AxiomName) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(name.as_str());
    let mut missing = 0usize;
    for i in 0..ctx.universe.len() {
        let f = ctx.universe.lottery(i);
        let applies = match name {
            AxiomName::Expectationalism => true,
            AxiomName::GoodExpectations => f.is_good(ctx.order)?,
            AxiomName::UnidimensionalExpectations => f.is_unidimensional(),
            _ => unreachable!("not an expectations-family axiom"),
        };
        if !applies {
            continue;
        }
        let e = f.expectation();
        match ctx.degenerate_of.get(&e) {
            None => missing += 1,
            Some(&j) => {
                if !ctx.rel.indifferent(i, j) {
                    report.witnesses.push(Witness {
                        items: vec![i, j],
                        outcomes: vec![e.clone()],
                        note: format!(
                            "{f} should be indifferent to its expectation {e} but the relation judges the pair {}",
                            ctx.rel.verdict(i, j)
                        ),
                    });
                }
            }
        }
    }
    report.verdict = if !report.witnesses.is_empty() {
        Verdict3::Violated
    } else if missing > 0 {
        report.notes.push(format!(
            "{missing} expectation outcome(s) absent from the universe"
        ));
        Verdict3::NotDeterminable
    } else {
        Verdict3::Holds
    };
    Ok(report)
}

fn weak_unidimensional_expectations(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::WeakUnidimensionalExpectations.as_str());
    let mut missing = 0usize;
    let n = ctx.universe.len();
    for i in 0..n {
        let f = ctx.universe.lottery(i);
        if !f.is_unidimensional() {
            continue;
        }
        let e = f.expectation();
        let Some(&ei) = ctx.degenerate_of.get(&e) else {
            missing += 1;
            continue;
        };
        for g in 0..n {
            if ctx.rel.strict(ei, g) && !ctx.rel.strict(i, g) {
                report.witnesses.push(Witness {
                    items: vec![i, ei, g],
                    outcomes: vec![e.clone()],
                    note: format!("exp(f) = {e} is strictly preferred to member {g} but f is not"),
                });
            }
            if ctx.rel.strict(g, ei) && !ctx.rel.strict(g, i) {
                report.witnesses.push(Witness {
                    items: vec![i, ei, g],
                    outcomes: vec![e.clone()],
                    note: format!("member {g} is strictly preferred to exp(f) = {e} but not to f"),
                });
            }
        }
    }
    report.verdict = if !report.witnesses.is_empty() {
        Verdict3::Violated
    } else if missing > 0 {
        report.notes.push(format!(
            "{missing} expectation outcome(s) absent from the universe"
        ));
        Verdict3::NotDeterminable
    } else {
        Verdict3::Holds
    };
    Ok(report)
}

#[allow(clippy::needless_range_loop)]
fn dimensional_separability(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::DimensionalSeparability.as_str());
    let n = ctx.universe.len();
    // certainty equivalents present in the universe, per member
    let mut ces: Vec<Vec<&Outcome>> = vec![Vec::new(); n];
    for (o, &j) in &ctx.degenerate_of {
        for i in 0..n {
            if ctx.rel.indifferent(i, j) {
                ces[i].push(o);
            }
        }
    }
    let dim = ctx.universe.dim();
    for i in 0..n {
        if ces[i].is_empty() {
            continue;
        }
        for j in i..n {
            if ces[j].is_empty() {
                continue;
            }
            for d in 0..dim {
                if ctx.universe.lottery(i).projection(d)?
                    != ctx.universe.lottery(j).projection(d)?
                {
                    continue;
                }
                for a in &ces[i] {
                    for b in &ces[j] {
                        if a.coord(d) != b.coord(d) {
                            report.witnesses.push(Witness {
                                items: vec![i, j],
                                outcomes: vec![(*a).clone(), (*b).clone()],
                                note: format!(
                                    "equal coordinate-{d} marginals but certainty equivalents {a} and {b} differ there"
                                ),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(report.finish_universal())
}

fn certainty_equivalents(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::CertaintyEquivalents.as_str());
    let mut missing = Vec::new();
    for i in 0..ctx.universe.len() {
        let has = ctx
            .degenerate_of
            .values()
            .any(|&j| ctx.rel.indifferent(i, j));
        if !has {
            missing.push(i);
        }
    }
    if missing.is_empty() {
        report.verdict = Verdict3::Holds;
    } else {
        report.verdict = Verdict3::NotDeterminable;
        report.notes.push(format!(
            "{} member(s) have no certainty equivalent inside the universe (existence cannot be refuted finitely)",
            missing.len()
        ));
    }
    Ok(report)
}

fn strict_betweenness(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::StrictBetweenness.as_str());
    for i in 0..ctx.universe.len() {
        let f = ctx.universe.lottery(i);
        if !f.is_unidimensional() {
            continue;
        }
        let mut has_strict_support_pair = false;
        'outer: for a in f.support() {
            for b in f.support() {
                if ctx.outcome_strict(a, b)? {
                    has_strict_support_pair = true;
                    break 'outer;
                }
            }
        }
        if !has_strict_support_pair {
            continue;
        }
        for (o, &j) in &ctx.degenerate_of {
            if !ctx.rel.indifferent(i, j) {
                continue;
            }
            let mut above = false;
            let mut below = false;
            for c in f.support() {
                if ctx.outcome_strict(c, o)? {
                    above = true;
                }
                if ctx.outcome_strict(o, c)? {
                    below = true;
                }
            }
            if !(above && below) {
                report.witnesses.push(Witness {
                    items: vec![i, j],
                    outcomes: vec![(*o).clone()],
                    note: format!(
                        "{f} ~ {o} but no support outcomes strictly bracket the certainty equivalent"
                    ),
                });
            }
        }
    }
    Ok(report.finish_universal())
}

fn unidimensional_continuity(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::UnidimensionalContinuity.as_str());
    let degenerates: Vec<(&Outcome, usize)> =
        ctx.degenerate_of.iter().map(|(o, &i)| (*o, i)).collect();
    let mut unmet = 0usize;
    let mut triples = 0usize;
    for &(a, ai) in &degenerates {
        for &(b, bi) in &degenerates {
            for &(c, ci) in &degenerates {
                if !(ctx.rel.strict(ai, bi) && ctx.rel.strict(bi, ci)) {
                    continue;
                }
                if !(outcomes_unidimensional(a, b)
                    && outcomes_unidimensional(b, c)
                    && outcomes_unidimensional(a, c))
                {
                    continue;
                }
                triples += 1;
                let mut found = false;
                for i in 0..ctx.universe.len() {
                    let f = ctx.universe.lottery(i);
                    if f.support().all(|o| o == a || o == c) && ctx.rel.indifferent(i, bi) {
                        found = true;
                        break;
                    }
                }
                if !found {
                    unmet += 1;
                }
            }
        }
    }
    report
        .notes
        .push(format!("strict unidimensional triples examined: {triples}"));
    report.verdict = if unmet > 0 {
        report.notes.push(format!(
            "{unmet} triple(s) lack an interpolating lottery inside the universe (existence cannot be refuted finitely)"
        ));
        Verdict3::NotDeterminable
    } else {
        Verdict3::Holds
    };
    Ok(report)
}

fn unidimensional_certainty_equivalents(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::UnidimensionalCertaintyEquivalents.as_str());
    let mut unmet = 0usize;
    for i in 0..ctx.universe.len() {
        let f = ctx.universe.lottery(i);
        if !f.is_unidimensional() {
            continue;
        }
        let mut has_strict_support_pair = false;
        'outer: for a in f.support() {
            for b in f.support() {
                if ctx.outcome_strict(a, b)? {
                    has_strict_support_pair = true;
                    break 'outer;
                }
            }
        }
        let mut witness_found = false;
        for (o, &j) in &ctx.degenerate_of {
            if !ctx.rel.indifferent(i, j) {
                continue;
            }
            if !f.support().all(|s| outcomes_unidimensional(s, o)) {
                continue;
            }
            if has_strict_support_pair {
                let mut above = false;
                let mut below = false;
                for c in f.support() {
                    if ctx.outcome_strict(c, o)? {
                        above = true;
                    }
                    if ctx.outcome_strict(o, c)? {
                        below = true;
                    }
                }
                if !(above && below) {
                    continue;
                }
            }
            witness_found = true;
            break;
        }
        if !witness_found {
            unmet += 1;
        }
    }
    report.verdict = if unmet > 0 {
        report.notes.push(format!(
            "{unmet} unidimensional member(s) lack a qualifying certainty equivalent inside the universe (existence cannot be refuted finitely)"
        ));
        Verdict3::NotDeterminable
    } else {
        Verdict3::Holds
    };
    Ok(report)
}

fn pareto_consistency(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::ParetoConsistency.as_str());
    for (a, &i) in &ctx.degenerate_of {
        for (b, &j) in &ctx.degenerate_of {
            if i != j && a.dominates_weakly(b) && !ctx.rel.weak(i, j) {
                report.witnesses.push(Witness {
                    items: vec![i, j],
                    outcomes: vec![(*a).clone(), (*b).clone()],
                    note: format!("{a} dominates {b} coordinate-wise but is not weakly preferred"),
                });
            }
        }
    }
    Ok(report.finish_universal())
}

fn converse_pareto_consistency(ctx: &Ctx) -> Result<AxiomReport> {
    let mut report = AxiomReport::new(AxiomName::ConverseParetoConsistency.as_str());
    for (a, &i) in &ctx.degenerate_of {
        for (b, &j) in &ctx.degenerate_of {
            if i != j && ctx.rel.weak(i, j) && !a.dominates_weakly(b) {
                report.witnesses.push(Witness {
                    items: vec![i, j],
                    outcomes: vec![(*a).clone(), (*b).clone()],
                    note: format!(
                        "{a} is weakly preferred to {b} without coordinate-wise dominance"
                    ),
                });
            }
        }
    }
    Ok(report.finish_universal())
}
