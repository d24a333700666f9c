//! Executable catalog of the impossibility and consistency scenarios: each
//! replay constructs the exact lotteries of one argument, declares the
//! axiom-instance premises it consumes as generators, builds the minimal
//! closure, re-verifies every derived step against the closure, and runs the
//! relevant checkers.
//!
//! Replays are single-threaded and deterministic; a result carries the full
//! universe and generator manifest, so any replay is reproducible from its
//! manifest alone.

use std::collections::BTreeMap;
use std::fmt;

use crate::axioms::{self, AxiomName, AxiomReport, AxiomSpec, Verdict3, Witness};
use crate::lottery::{mix, Lottery, Outcome};
use crate::order::{k_classify, KInterpretation, KVerdict, OutcomePreorder, Verdict};
use crate::qualitative::{
    all_outcomes, check_uds, derive_unanimous_equivalence, embed_lottery, uniform_parts, DimFact,
    DimensionSpec, QualSpace,
};
use crate::rational::{format_rational, rat, rat_int, Rational};
use crate::relation::{
    build_closure, ensure_good_expectations, mixture_closure, DeclaredPair, GeneratorRule,
    GeneratorSet, Relation, Universe,
};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ScenarioId {
    Prop1,
    Prop2,
    Prop3,
    Prop4,
    Prop5,
    InitialFact,
    WueFact,
    KFact,
    Vst,
    Prop9,
    QualA1,
    QualA2,
    QualA3,
}

impl ScenarioId {
    pub const ALL: [ScenarioId; 13] = [
        ScenarioId::Prop1,
        ScenarioId::Prop2,
        ScenarioId::Prop3,
        ScenarioId::Prop4,
        ScenarioId::Prop5,
        ScenarioId::InitialFact,
        ScenarioId::WueFact,
        ScenarioId::KFact,
        ScenarioId::Vst,
        ScenarioId::Prop9,
        ScenarioId::QualA1,
        ScenarioId::QualA2,
        ScenarioId::QualA3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ScenarioId::Prop1 => "prop1",
            ScenarioId::Prop2 => "prop2",
            ScenarioId::Prop3 => "prop3",
            ScenarioId::Prop4 => "prop4",
            ScenarioId::Prop5 => "prop5",
            ScenarioId::InitialFact => "initial-fact",
            ScenarioId::WueFact => "wue-fact",
            ScenarioId::KFact => "kfact",
            ScenarioId::Vst => "vst",
            ScenarioId::Prop9 => "prop9",
            ScenarioId::QualA1 => "qual-a1",
            ScenarioId::QualA2 => "qual-a2",
            ScenarioId::QualA3 => "qual-a3",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        ScenarioId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Optional parameter overrides; unspecified values take per-scenario
/// defaults (prop2/prop5 a = 3, prop4 l = 2, m = 1/2, kfact k = 4).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReplayParams {
    pub a: Option<Rational>,
    pub b: Option<Rational>,
    pub k: Option<Rational>,
    pub l: Option<Rational>,
    pub m: Option<Rational>,
    pub epsilon: Option<Rational>,
    pub literal_k: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepFact {
    Weak(usize, usize),
    Strict(usize, usize),
    Indifferent(usize, usize),
    Incomparable(usize, usize),
}

/// One derived fact in a replay chain, with the axiom or rule that justifies
/// it. Facts are re-checked against the closure before a result is returned.
#[derive(Clone, Debug)]
pub struct Step {
    pub fact: StepFact,
    pub display: String,
    pub justification: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReplayVerdict {
    ContradictionReproduced,
    ConsistencyVerified,
}

impl ReplayVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ReplayVerdict::ContradictionReproduced => "contradiction-reproduced",
            ReplayVerdict::ConsistencyVerified => "consistency-verified",
        }
    }
}

/// Everything a replay produced: the manifest (universe, order, generators),
/// the closed relation, the verified derivation steps, checker reports, and
/// the headline witnesses.
#[derive(Clone, Debug)]
pub struct ScenarioResult {
    pub scenario: ScenarioId,
    pub params: BTreeMap<String, String>,
    pub universe: Universe,
    pub labels: Vec<String>,
    pub order: OutcomePreorder,
    pub generators: GeneratorSet,
    pub relation: Relation,
    pub steps: Vec<Step>,
    pub verdict: ReplayVerdict,
    pub witnesses: Vec<Witness>,
    pub reports: Vec<AxiomReport>,
}

impl ScenarioResult {
    pub fn report(&self, axiom: &str) -> Option<&AxiomReport> {
        self.reports.iter().find(|r| r.axiom == axiom)
    }
}

struct Builder {
    scenario: ScenarioId,
    order: OutcomePreorder,
    items: Vec<Lottery>,
    labels: Vec<String>,
    index: BTreeMap<Lottery, usize>,
    rules: Vec<GeneratorRule>,
    declared: Vec<DeclaredPair>,
    steps: Vec<Step>,
}

impl Builder {
    fn new(scenario: ScenarioId, order: OutcomePreorder, rules: Vec<GeneratorRule>) -> Self {
        Builder {
            scenario,
            order,
            items: Vec::new(),
            labels: Vec::new(),
            index: BTreeMap::new(),
            rules,
            declared: Vec::new(),
            steps: Vec::new(),
        }
    }

    fn add(&mut self, lottery: Lottery, label: impl Into<String>) -> usize {
        if let Some(&i) = self.index.get(&lottery) {
            return i;
        }
        let i = self.items.len();
        self.index.insert(lottery.clone(), i);
        self.items.push(lottery);
        self.labels.push(label.into());
        i
    }

    fn add_degenerate(&mut self, o: Outcome) -> usize {
        let label = o.to_string();
        self.add(Lottery::degenerate(o), label)
    }

    fn declare(&mut self, from: usize, to: usize, tag: impl Into<String>) {
        self.declared.push(DeclaredPair {
            from,
            to,
            both: false,
            tag: tag.into(),
        });
    }

    fn declare_both(&mut self, from: usize, to: usize, tag: impl Into<String>) {
        self.declared.push(DeclaredPair {
            from,
            to,
            both: true,
            tag: tag.into(),
        });
    }

    fn expect(&mut self, fact: StepFact, justification: impl Into<String>) {
        let display = match fact {
            StepFact::Weak(i, j) => format!("{} >= {}", self.labels[i], self.labels[j]),
            StepFact::Strict(i, j) => format!("{} > {}", self.labels[i], self.labels[j]),
            StepFact::Indifferent(i, j) => format!("{} ~ {}", self.labels[i], self.labels[j]),
            StepFact::Incomparable(i, j) => {
                format!("{} || {}", self.labels[i], self.labels[j])
            }
        };
        self.steps.push(Step {
            fact,
            display,
            justification: justification.into(),
        });
    }

    fn finish(
        self,
        params: BTreeMap<String, String>,
        verdict: ReplayVerdict,
        extra_checks: &[AxiomSpec],
    ) -> Result<ScenarioResult> {
        let universe = Universe::new(self.items)?;
        let generators = GeneratorSet {
            rules: self.rules,
            declared: self.declared,
        };
        let (relation, _) = build_closure(&universe, &self.order, &generators)?;
        for step in &self.steps {
            let ok = match step.fact {
                StepFact::Weak(i, j) => relation.weak(i, j),
                StepFact::Strict(i, j) => relation.strict(i, j),
                StepFact::Indifferent(i, j) => relation.indifferent(i, j),
                StepFact::Incomparable(i, j) => relation.incomparable(i, j),
            };
            if !ok {
                return Err(Error::ReplayStepFailed {
                    scenario: self.scenario.as_str().to_string(),
                    step: step.display.clone(),
                });
            }
        }
        let mut reports = vec![axioms::check_preorder(&relation)];
        let nd = axioms::check_axiom(
            &relation,
            &universe,
            &self.order,
            &AxiomSpec::new(AxiomName::NegativeDominance),
        )?;
        reports.push(nd);
        for spec in extra_checks {
            reports.push(axioms::check_axiom(
                &relation,
                &universe,
                &self.order,
                spec,
            )?);
        }
        let witnesses = reports
            .iter()
            .filter(|r| r.verdict == Verdict3::Violated)
            .flat_map(|r| r.witnesses.clone())
            .collect();
        Ok(ScenarioResult {
            scenario: self.scenario,
            params,
            universe,
            labels: self.labels,
            order: self.order,
            generators,
            relation,
            steps: self.steps,
            verdict,
            witnesses,
            reports,
        })
    }
}

fn o2(x: Rational, y: Rational) -> Outcome {
    Outcome::pair(x, y)
}

fn half() -> Rational {
    rat(1, 2)
}

fn params_map(entries: &[(&str, String)]) -> BTreeMap<String, String> {
    entries
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// Runs a scenario with the given parameter overrides.
pub fn replay(id: ScenarioId, params: &ReplayParams) -> Result<ScenarioResult> {
    match id {
        ScenarioId::Prop1 => prop1(),
        ScenarioId::Prop2 => {
            let a = params.a.clone().unwrap_or_else(|| rat_int(3));
            square_replay(
                ScenarioId::Prop2,
                OutcomePreorder::pareto_box(),
                a.clone(),
                a,
                "unidimensional-expectations",
            )
        }
        ScenarioId::Prop3 => prop3(params),
        ScenarioId::Prop4 => prop4(params),
        ScenarioId::Prop5 => prop5(params),
        ScenarioId::InitialFact => {
            let a = params.a.clone().unwrap_or_else(|| rat_int(3));
            let b = params.b.clone().unwrap_or_else(|| rat_int(2));
            square_replay(
                ScenarioId::InitialFact,
                OutcomePreorder::pareto_box(),
                a,
                b,
                "unidimensional-expectations",
            )
        }
        ScenarioId::WueFact => kfact_like(ScenarioId::WueFact, params),
        ScenarioId::KFact => kfact_like(ScenarioId::KFact, params),
        ScenarioId::Vst => vst_scenario(),
        ScenarioId::Prop9 => prop9(),
        ScenarioId::QualA1 => qual_a1(),
        ScenarioId::QualA2 => qual_a2(ScenarioId::QualA2),
        ScenarioId::QualA3 => qual_a2(ScenarioId::QualA3),
    }
}

/// Expectationalism + Pareto + Converse Pareto against Negative Dominance:
/// the two-tradeoff lottery is forced strictly above the status quo while
/// both its outcomes stay incomparable to it.
fn prop1() -> Result<ScenarioResult> {
    let order = OutcomePreorder::pareto_box();
    let mut b = Builder::new(ScenarioId::Prop1, order, vec![GeneratorRule::OrderLift]);
    let f_star = Lottery::uniform(vec![
        o2(rat_int(4), rat_int(-2)),
        o2(rat_int(-2), rat_int(4)),
    ])?;
    let fi = b.add(f_star, "f*");
    let one_one = b.add_degenerate(o2(rat_int(1), rat_int(1)));
    let zero = b.add_degenerate(o2(rat_int(0), rat_int(0)));
    b.add_degenerate(o2(rat_int(4), rat_int(-2)));
    b.add_degenerate(o2(rat_int(-2), rat_int(4)));
    b.declare_both(fi, one_one, "expectationalism (f* ~ exp(f*) = (1,1))");
    b.expect(
        StepFact::Indifferent(fi, one_one),
        "expectationalism instance",
    );
    b.expect(StepFact::Strict(one_one, zero), "pareto");
    b.expect(StepFact::Strict(fi, zero), "transitivity");
    b.finish(params_map(&[]), ReplayVerdict::ContradictionReproduced, &[])
}

/// The shared four-point construction: start from the uniform square around
/// the origin, mix to the status quo, improve two corners, recombine the
/// halves as unidimensional lotteries, and land on the two-point lottery
/// whose outcomes are incomparable with the status quo.
fn square_chain(b: &mut Builder, a: &Rational, bb: &Rational, sim_tag: &str) -> Result<()> {
    let zero_o = o2(rat_int(0), rat_int(0));
    let e_l = o2(-a.clone(), rat_int(0));
    let e_r = o2(a.clone(), rat_int(0));
    let e_t = o2(rat_int(0), bb.clone());
    let e_b = o2(rat_int(0), -bb.clone());
    let imp_l = o2(-a.clone(), bb.clone());
    let imp_b = o2(a.clone(), -bb.clone());
    let p = o2(-(a / rat_int(2)), bb.clone());
    let q = o2(a.clone(), -(bb / rat_int(2)));

    // degenerates for lifts and witnesses
    let zero = b.add_degenerate(zero_o.clone());
    for o in [&e_l, &e_r, &e_t, &e_b, &imp_l, &imp_b] {
        b.add_degenerate(o.clone());
    }
    let dp = b.add_degenerate(p.clone());
    let dq = b.add_degenerate(q.clone());

    let lot_z = Lottery::degenerate(zero_o.clone());
    let l_h = Lottery::uniform(vec![e_l.clone(), e_r.clone()])?;
    let l_v = Lottery::uniform(vec![e_t.clone(), e_b.clone()])?;
    let m1 = mix(&l_h, &lot_z, &half())?;
    let f0 = mix(&l_v, &l_h, &half())?;
    let f1 = Lottery::new(vec![
        (e_t.clone(), rat(1, 4)),
        (e_b.clone(), rat(1, 4)),
        (imp_l.clone(), rat(1, 4)),
        (e_r.clone(), rat(1, 4)),
    ])?;
    let f2 = Lottery::new(vec![
        (e_t.clone(), rat(1, 4)),
        (imp_b.clone(), rat(1, 4)),
        (imp_l.clone(), rat(1, 4)),
        (e_r.clone(), rat(1, 4)),
    ])?;
    let h_y = Lottery::uniform(vec![e_t.clone(), imp_l.clone()])?;
    let h_x = Lottery::uniform(vec![e_r.clone(), imp_b.clone()])?;
    // the rearrangement identity behind the final Independence steps
    assert_eq!(f2, mix(&h_y, &h_x, &half())?);
    let n1 = mix(&Lottery::degenerate(p.clone()), &h_x, &half())?;
    let ff = mix(
        &Lottery::degenerate(p.clone()),
        &Lottery::degenerate(q.clone()),
        &half(),
    )?;

    let lh = b.add(
        l_h,
        format!(
            "({},0)/({},0)",
            format_rational(&-a.clone()),
            format_rational(a)
        ),
    );
    let lv = b.add(
        l_v,
        format!(
            "(0,{})/(0,{})",
            format_rational(bb),
            format_rational(&-bb.clone())
        ),
    );
    let m1i = b.add(m1, "m1");
    let f = b.add(f0, "f");
    let f1i = b.add(f1, "f+");
    let fpp = b.add(f2, "f++");
    let hyi = b.add(h_y, "top-half");
    let hxi = b.add(h_x, "right-half");
    let n1i = b.add(n1, "n1");
    let ffi = b.add(ff, "final");

    // the improvements must be strict under the active order
    for (better, worse) in [(&imp_l, &e_l), (&imp_b, &e_b)] {
        if b.order.compare(better, worse)? != Verdict::StrictlyAbove {
            return Err(Error::PreconditionFailed {
                scenario: b.scenario.as_str().to_string(),
                details: vec![format!(
                    "improvement {better} is not strictly above {worse} under {}",
                    b.order.spec_string()
                )],
            });
        }
    }

    b.declare_both(lh, zero, format!("{sim_tag} ({} ~ (0,0))", b.labels[lh]));
    b.declare_both(lv, zero, format!("{sim_tag} ({} ~ (0,0))", b.labels[lv]));
    b.declare_both(m1i, zero, "independence (mix both sides with (0,0) at 1/2)");
    b.declare_both(
        f,
        m1i,
        format!("independence (mix both sides with {} at 1/2)", b.labels[lh]),
    );
    b.declare(f1i, f, "independence + pareto (left corner moved up)");
    b.declare(
        fpp,
        f1i,
        "independence + pareto (bottom corner moved right)",
    );
    b.declare_both(hyi, dp, format!("{sim_tag} (top half ~ its expectation)"));
    b.declare_both(hxi, dq, format!("{sim_tag} (right half ~ its expectation)"));
    b.declare_both(
        n1i,
        fpp,
        "independence (replace the top half by its equivalent outcome)",
    );
    b.declare_both(
        ffi,
        n1i,
        "independence (replace the right half by its equivalent outcome)",
    );

    b.expect(
        StepFact::Indifferent(f, zero),
        "independence from the two declared equivalences",
    );
    b.expect(
        StepFact::Strict(fpp, zero),
        "pareto improvements preserved by independence",
    );
    b.expect(
        StepFact::Indifferent(fpp, ffi),
        "independence over the unidimensional halves",
    );
    b.expect(StepFact::Strict(ffi, zero), "transitivity");
    b.expect(
        StepFact::Incomparable(dp, zero),
        "converse direction of the outcome order",
    );
    b.expect(
        StepFact::Incomparable(dq, zero),
        "converse direction of the outcome order",
    );

    Ok(())
}

/// Validates the final-pair incomparability precondition, then runs the
/// square chain under the given order.
fn square_replay(
    id: ScenarioId,
    order: OutcomePreorder,
    a: Rational,
    bb: Rational,
    sim_tag: &str,
) -> Result<ScenarioResult> {
    validate_square_precondition(id, &order, &a, &bb)?;
    let mut b = Builder::new(id, order, vec![GeneratorRule::OrderLift]);
    square_chain(&mut b, &a, &bb, sim_tag)?;
    let params = params_map(&[
        ("a", format_rational(&a)),
        ("b", format_rational(&bb)),
        ("order", b.order.spec_string()),
    ]);
    b.finish(params, ReplayVerdict::ContradictionReproduced, &[])
}

fn validate_square_precondition(
    id: ScenarioId,
    order: &OutcomePreorder,
    a: &Rational,
    bb: &Rational,
) -> Result<()> {
    use num_traits::Signed;
    let mut details = Vec::new();
    if !a.is_positive() {
        details.push(format!("a = {} must be positive", format_rational(a)));
    }
    if !bb.is_positive() {
        details.push(format!("b = {} must be positive", format_rational(bb)));
    }
    if details.is_empty() {
        let zero = o2(rat_int(0), rat_int(0));
        let p = o2(-(a / rat_int(2)), bb.clone());
        let q = o2(a.clone(), -(bb / rat_int(2)));
        for point in [&p, &q] {
            let v = order.compare(point, &zero)?;
            if v != Verdict::Incomparable {
                details.push(format!(
                    "{point} must be incomparable with (0,0) under {}, got {v}",
                    order.spec_string()
                ));
            }
        }
    }
    if details.is_empty() {
        Ok(())
    } else {
        Err(Error::PreconditionFailed {
            scenario: id.as_str().to_string(),
            details,
        })
    }
}

/// Dimensional Separability against Negative Dominance, instantiated at the
/// expectation-consistent certainty equivalents x = y = 0.
fn prop3(params: &ReplayParams) -> Result<ScenarioResult> {
    use num_traits::Signed;
    let a = params.a.clone().unwrap_or_else(|| rat_int(1));
    let bb = params.b.clone().unwrap_or_else(|| a.clone());
    let eps = params.epsilon.clone().unwrap_or_else(half);
    let mut details = Vec::new();
    if !a.is_positive() || !bb.is_positive() {
        details.push("a and b must be positive".to_string());
    }
    if !eps.is_positive() || eps >= a || eps >= bb {
        details.push(format!(
            "epsilon = {} must lie in (0, min(a, b))",
            format_rational(&eps)
        ));
    }
    if !details.is_empty() {
        return Err(Error::PreconditionFailed {
            scenario: "prop3".into(),
            details,
        });
    }
    let order = OutcomePreorder::pareto_box();
    let mut b = Builder::new(ScenarioId::Prop3, order, vec![GeneratorRule::OrderLift]);
    let zero_o = o2(rat_int(0), rat_int(0));
    let low_o = o2(-eps.clone(), -eps.clone());
    let corners = [
        o2(-a.clone(), rat_int(0)),
        o2(a.clone(), rat_int(0)),
        o2(rat_int(0), bb.clone()),
        o2(rat_int(0), -bb.clone()),
    ];
    let tradeoff = [o2(-a.clone(), bb.clone()), o2(a.clone(), -bb.clone())];
    let zero = b.add_degenerate(zero_o.clone());
    let low = b.add_degenerate(low_o);
    for o in corners.iter().chain(tradeoff.iter()) {
        b.add_degenerate(o.clone());
    }
    let l_h = Lottery::uniform(vec![corners[0].clone(), corners[1].clone()])?;
    let l_v = Lottery::uniform(vec![corners[2].clone(), corners[3].clone()])?;
    let h = Lottery::uniform(tradeoff.to_vec())?;
    // Dimensional Separability applies because the marginals agree: the
    // tradeoff lottery projects like the horizontal pair on the first axis
    // and like the vertical pair on the second.
    assert_eq!(h.projection(0)?, l_h.projection(0)?);
    assert_eq!(h.projection(1)?, l_v.projection(1)?);
    let lh = b.add(l_h, "(-a,0)/(a,0)");
    let lv = b.add(l_v, "(0,b)/(0,-b)");
    let hi = b.add(h, "(-a,b)/(a,-b)");
    b.declare_both(
        lh,
        zero,
        "certainty-equivalents + strict-betweenness ((x,0) = (0,0))",
    );
    b.declare_both(
        lv,
        zero,
        "certainty-equivalents + strict-betweenness ((0,y) = (0,0))",
    );
    b.declare_both(
        hi,
        zero,
        "dimensional-separability (equal marginals force (x,y) = (0,0))",
    );
    b.expect(
        StepFact::Indifferent(hi, zero),
        "dimensional-separability instance",
    );
    b.expect(StepFact::Strict(zero, low), "pareto");
    b.expect(StepFact::Strict(hi, low), "transitivity");
    let params = params_map(&[
        ("a", format_rational(&a)),
        ("b", format_rational(&bb)),
        ("epsilon", format_rational(&eps)),
    ]);
    b.finish(params, ReplayVerdict::ContradictionReproduced, &[])
}

/// The square chain under a two-line order. The required incomparabilities
/// pin `b` to the open band `(2ma, la/2)`, which is empty unless the slope
/// ratio exceeds 4; infeasible parameters are reported, not forced.
fn prop4(params: &ReplayParams) -> Result<ScenarioResult> {
    let l = params.l.clone().unwrap_or_else(|| rat_int(2));
    let m = params.m.clone().unwrap_or_else(half);
    let order = OutcomePreorder::lines(l.clone(), m.clone())?;
    let a = params.a.clone().unwrap_or_else(|| rat_int(2));
    let (hi, lo) = if l > m {
        (l.clone(), m.clone())
    } else {
        (m.clone(), l.clone())
    };
    // default b: the midpoint of the feasible band (2·lo·a, hi·a/2)
    let bb = params
        .b
        .clone()
        .unwrap_or_else(|| (&a * (rat_int(4) * &lo + &hi)) / rat_int(4));
    let mut result = square_replay(ScenarioId::Prop4, order, a.clone(), bb, "unidimensional-expectations")
        .map_err(|e| match e {
            Error::PreconditionFailed { scenario, mut details } if hi <= (rat_int(4) * &lo) => {
                details.push(format!(
                    "no b works for these slopes: the required band ({}, {}) is empty unless the slope ratio exceeds 4",
                    format_rational(&(rat_int(2) * &lo * &a)),
                    format_rational(&(&hi * &a / rat_int(2)))
                ));
                Error::PreconditionFailed { scenario, details }
            }
            other => other,
        })?;
    result.params.insert("l".into(), format_rational(&l));
    result.params.insert("m".into(), format_rational(&m));
    Ok(result)
}

/// Unidimensional Continuity and Certainty Equivalents at the uniform
/// weights: the same square chain, with the half-to-outcome steps justified
/// by declared certainty equivalents rather than expectations.
fn prop5(params: &ReplayParams) -> Result<ScenarioResult> {
    let a = params.a.clone().unwrap_or_else(|| rat_int(3));
    let order = OutcomePreorder::pareto_box();
    validate_square_precondition(ScenarioId::Prop5, &order, &a, &a)?;
    let mut b = Builder::new(ScenarioId::Prop5, order, vec![GeneratorRule::OrderLift]);
    square_chain(
        &mut b,
        &a.clone(),
        &a,
        "unidimensional-certainty-equivalents",
    )?;
    // the certainty equivalents sit strictly between the half endpoints
    let dq = b.index[&Lottery::degenerate(o2(a.clone(), -(&a / rat_int(2))))];
    let dp = b.index[&Lottery::degenerate(o2(-(&a / rat_int(2)), a.clone()))];
    let e_r = b.index[&Lottery::degenerate(o2(a.clone(), rat_int(0)))];
    let imp_b = b.index[&Lottery::degenerate(o2(a.clone(), -a.clone()))];
    let e_t = b.index[&Lottery::degenerate(o2(rat_int(0), a.clone()))];
    let imp_l = b.index[&Lottery::degenerate(o2(-a.clone(), a.clone()))];
    b.expect(
        StepFact::Strict(e_r, dq),
        "second clause of unidimensional certainty equivalents",
    );
    b.expect(
        StepFact::Strict(dq, imp_b),
        "second clause of unidimensional certainty equivalents",
    );
    b.expect(
        StepFact::Strict(e_t, dp),
        "second clause of unidimensional certainty equivalents",
    );
    b.expect(
        StepFact::Strict(dp, imp_l),
        "second clause of unidimensional certainty equivalents",
    );
    let params = params_map(&[
        ("a", format_rational(&a)),
        ("alpha", "1/2".to_string()),
        ("beta", "1/2".to_string()),
    ]);
    b.finish(params, ReplayVerdict::ContradictionReproduced, &[])
}

/// The k-incomparability fact (and its weak-expectations corollary): both
/// use the worked instance on segments of length 8 and 4 around the origin.
fn kfact_like(id: ScenarioId, params: &ReplayParams) -> Result<ScenarioResult> {
    use num_traits::Signed;
    let k = params.k.clone().unwrap_or_else(|| rat_int(4));
    if !k.is_positive() {
        return Err(Error::PreconditionFailed {
            scenario: id.as_str().to_string(),
            details: vec![format!("k = {} must be positive", format_rational(&k))],
        });
    }
    let interp = if params.literal_k {
        KInterpretation::LiteralDefinition
    } else {
        KInterpretation::ProofReading
    };
    let order = OutcomePreorder::pareto_box();

    let four = rat_int(4);
    let vt = o2(rat_int(0), four.clone());
    let vb = o2(rat_int(0), -four.clone());
    let hl = o2(-four.clone(), rat_int(0));
    let hr = o2(four.clone(), rat_int(0));
    let low_v = o2(rat_int(0), -(&four / &k));
    let low_h = o2(-(&four / &k), rat_int(0));
    let corner = o2(-(&four / &k), -(&four / &k));
    let imp_hl = o2(-four.clone(), four.clone());
    let imp_vb = o2(four.clone(), -four.clone());
    let t_off = rat_int(-2) + rat_int(2) / &k;
    let t1 = o2(four.clone(), t_off.clone());
    let t2 = o2(t_off.clone(), four.clone());

    // precondition: the final supports must be incomparable with the corner
    let mut details = Vec::new();
    for point in [&t1, &t2] {
        let v = order.compare(point, &corner)?;
        if v != Verdict::Incomparable {
            details.push(format!(
                "{point} must be incomparable with {corner}, got {v}"
            ));
        }
    }
    // and the forcing facts must hold under the chosen reading
    let l_v = Lottery::uniform(vec![vt.clone(), vb.clone()])?;
    let l_h = Lottery::uniform(vec![hl.clone(), hr.clone()])?;
    let h1 = Lottery::uniform(vec![hr.clone(), imp_vb.clone()])?;
    let h2 = Lottery::uniform(vec![imp_hl.clone(), vt.clone()])?;
    if id == ScenarioId::KFact {
        let cases = [
            (
                &vt,
                &vb,
                &low_v,
                KVerdict::ForcedPreferred,
                "long vertical segment",
            ),
            (
                &hl,
                &hr,
                &low_h,
                KVerdict::ForcedPreferred,
                "long horizontal segment",
            ),
            (
                &hr,
                &imp_vb,
                &t1,
                KVerdict::ForcedDispreferred,
                "right half",
            ),
            (&imp_hl, &vt, &t2, KVerdict::ForcedDispreferred, "top half"),
        ];
        for (a, bb, c, want, what) in cases {
            let got = k_classify(&k, a, bb, c, interp)?;
            if got != want {
                details.push(format!(
                    "{what}: k-classification of {c} is {} rather than {}",
                    got.as_str(),
                    want.as_str()
                ));
            }
        }
    } else {
        // weak unidimensional expectations force the same comparisons via
        // strict pareto dominance over the expectations
        let cases = [
            (l_v.expectation(), &low_v, true, "long vertical segment"),
            (l_h.expectation(), &low_h, true, "long horizontal segment"),
            (h1.expectation(), &t1, false, "right half"),
            (h2.expectation(), &t2, false, "top half"),
        ];
        for (e, c, expect_above, what) in cases {
            let v = order.compare(&e, c)?;
            let ok = if expect_above {
                v == Verdict::StrictlyAbove
            } else {
                v == Verdict::StrictlyBelow
            };
            if !ok {
                details.push(format!(
                    "{what}: expectation {e} does not strictly bracket {c} (got {v})"
                ));
            }
        }
    }
    if !details.is_empty() {
        return Err(Error::PreconditionFailed {
            scenario: id.as_str().to_string(),
            details,
        });
    }

    let tag = if id == ScenarioId::KFact {
        "k-incomparability (forcing at the band boundary)"
    } else {
        "weak-unidimensional-expectations (expectation strictly brackets the point)"
    };

    let mut b = Builder::new(id, order, vec![GeneratorRule::OrderLift]);
    let corner_i = b.add_degenerate(corner.clone());
    for o in [
        &vt, &vb, &hl, &hr, &low_v, &low_h, &imp_hl, &imp_vb, &t1, &t2,
    ] {
        b.add_degenerate(o.clone());
    }
    let low_v_i = b.index[&Lottery::degenerate(low_v.clone())];
    let low_h_i = b.index[&Lottery::degenerate(low_h.clone())];
    let t1_i = b.index[&Lottery::degenerate(t1.clone())];
    let t2_i = b.index[&Lottery::degenerate(t2.clone())];

    let m1 = mix(&Lottery::degenerate(corner.clone()), &l_v, &half())?;
    let a_big = mix(&l_h, &l_v, &half())?;
    let b_big = Lottery::uniform(vec![hr.clone(), imp_hl.clone(), vt.clone(), vb.clone()])?;
    let c_big = Lottery::uniform(vec![hr.clone(), imp_hl.clone(), vt.clone(), imp_vb.clone()])?;
    assert_eq!(c_big, mix(&h1, &h2, &half())?);
    let d_big = mix(&Lottery::degenerate(t1.clone()), &h2, &half())?;
    let ff = mix(
        &Lottery::degenerate(t1.clone()),
        &Lottery::degenerate(t2.clone()),
        &half(),
    )?;

    let lv_i = b.add(l_v, "(0,4)/(0,-4)");
    let lh_i = b.add(l_h, "(4,0)/(-4,0)");
    let m1_i = b.add(m1, "m1");
    let a_i = b.add(a_big, "(4,0)/(-4,0)/(0,4)/(0,-4)");
    let b_i = b.add(b_big, "improved-once");
    let c_i = b.add(c_big, "f++");
    let h1_i = b.add(h1, "right-half");
    let h2_i = b.add(h2, "top-half");
    let d_i = b.add(d_big, "d");
    let ff_i = b.add(ff, "final");

    b.declare(lv_i, low_v_i, tag);
    b.declare(lh_i, low_h_i, tag);
    b.declare(
        m1_i,
        corner_i,
        "independence (mix the vertical pair into both sides)",
    );
    b.declare(
        a_i,
        m1_i,
        "independence (mix the horizontal pair into both sides)",
    );
    b.declare(b_i, a_i, "independence + pareto ((-4,4) > (-4,0))");
    b.declare(c_i, b_i, "independence + pareto ((4,-4) > (0,-4))");
    b.declare(t1_i, h1_i, tag);
    b.declare(t2_i, h2_i, tag);
    b.declare(
        d_i,
        c_i,
        "independence (replace the right half by its upper bound)",
    );
    b.declare(
        ff_i,
        d_i,
        "independence (replace the top half by its upper bound)",
    );

    b.expect(StepFact::Strict(lv_i, low_v_i), tag);
    b.expect(StepFact::Strict(lh_i, low_h_i), tag);
    b.expect(
        StepFact::Strict(a_i, corner_i),
        "independence over the two forced comparisons",
    );
    b.expect(
        StepFact::Strict(c_i, corner_i),
        "pareto improvements preserved by independence",
    );
    b.expect(
        StepFact::Strict(ff_i, c_i),
        "independence over the two half bounds",
    );
    b.expect(StepFact::Strict(ff_i, corner_i), "transitivity");
    b.expect(StepFact::Incomparable(t1_i, corner_i), "converse pareto");
    b.expect(StepFact::Incomparable(t2_i, corner_i), "converse pareto");

    let mut params = params_map(&[("k", format_rational(&k))]);
    if id == ScenarioId::KFact {
        params.insert(
            "interpretation".into(),
            if interp == KInterpretation::ProofReading {
                "proof"
            } else {
                "literal"
            }
            .to_string(),
        );
    }
    b.finish(params, ReplayVerdict::ContradictionReproduced, &[])
}

/// The quadruple that separates stochastic dominance from the vague
/// sure-thing principle: dominance forces a strict edge the latter forbids.
fn vst_scenario() -> Result<ScenarioResult> {
    let order = OutcomePreorder::pareto_box();
    let mut b = Builder::new(
        ScenarioId::Vst,
        order,
        vec![GeneratorRule::OrderLift, GeneratorRule::StochasticDominance],
    );
    let a = o2(rat_int(-2), rat_int(3));
    let a_plus = o2(rat_int(-2), rat_int(4));
    let bo = o2(rat_int(3), rat_int(-2));
    let b_plus = o2(rat_int(4), rat_int(-2));
    for o in [&a, &a_plus, &bo, &b_plus] {
        b.add_degenerate(o.clone());
    }
    let upper = Lottery::uniform(vec![a_plus.clone(), b_plus.clone()])?;
    let lower = Lottery::uniform(vec![a.clone(), bo.clone()])?;
    let ui = b.add(upper, "a+/b+");
    let li = b.add(lower, "a/b");
    b.expect(
        StepFact::Strict(ui, li),
        "stochastic dominance (witnessed by the aligned coupling)",
    );
    b.finish(
        params_map(&[]),
        ReplayVerdict::ContradictionReproduced,
        &[AxiomSpec::new(AxiomName::Vst)],
    )
}

/// The consistency scenario: a universe holding all replay lotteries, their
/// expectations, and a mixture-closed diagonal family of good lotteries,
/// closed under the order lift, good expectations, and stochastic dominance;
/// the joint axiom suite must pass.
fn prop9() -> Result<ScenarioResult> {
    let order = OutcomePreorder::pareto_box();
    let mut items: Vec<Lottery> = Vec::new();
    for id in [
        ScenarioId::Prop1,
        ScenarioId::Prop2,
        ScenarioId::Prop3,
        ScenarioId::Prop5,
        ScenarioId::InitialFact,
        ScenarioId::KFact,
        ScenarioId::Vst,
    ] {
        let r = replay(id, &ReplayParams::default())?;
        items.extend(r.universe.items().iter().cloned());
    }
    // the dominance-divergence pair
    items.push(Lottery::new(vec![
        (o2(rat_int(2), rat_int(2)), rat(3, 4)),
        (o2(rat_int(0), rat_int(0)), rat(1, 4)),
    ])?);
    items.push(Lottery::uniform(vec![
        o2(rat_int(2), rat_int(0)),
        o2(rat_int(0), rat_int(2)),
        o2(rat_int(2), rat_int(2)),
    ])?);
    // good lotteries from the theory sections
    items.push(Lottery::uniform(vec![
        o2(rat_int(4), rat_int(4)),
        o2(rat_int(-2), rat_int(-2)),
    ])?);
    items.push(Lottery::uniform(vec![
        o2(rat_int(0), rat_int(0)),
        o2(rat_int(0), rat_int(3)),
        o2(rat_int(3), rat_int(3)),
    ])?);
    items.push(Lottery::degenerate(o2(rat_int(1), rat_int(2))));
    // a mixture-closed diagonal family for the comparable-independence checks
    let seeds = Universe::canonical(vec![
        Lottery::degenerate(o2(rat_int(0), rat_int(0))),
        Lottery::degenerate(o2(rat_int(4), rat_int(4))),
        Lottery::degenerate(o2(rat_int(-2), rat_int(-2))),
        Lottery::uniform(vec![
            o2(rat_int(4), rat_int(4)),
            o2(rat_int(-2), rat_int(-2)),
        ])?,
    ])?;
    let diagonal = mixture_closure(&seeds, &[half()], 2, crate::relation::DEFAULT_UNIVERSE_CAP)?;
    items.extend(diagonal.items().iter().cloned());
    let (items, _inserted) = ensure_good_expectations(items, &order)?;
    let universe = Universe::canonical(items)?;
    let labels: Vec<String> = universe.items().iter().map(|l| l.to_string()).collect();
    let generators = GeneratorSet::new(vec![
        GeneratorRule::OrderLift,
        GeneratorRule::GoodExpectations,
        GeneratorRule::StochasticDominance,
    ]);
    let (relation, _) = build_closure(&universe, &order, &generators)?;

    let mut reports = vec![axioms::check_preorder(&relation)];
    for name in [
        AxiomName::NegativeDominance,
        AxiomName::GoodExpectations,
        AxiomName::StochasticDominanceRespect,
        AxiomName::ComparableIndependence,
    ] {
        reports.push(axioms::check_axiom(
            &relation,
            &universe,
            &order,
            &AxiomSpec::new(name),
        )?);
    }
    let all_hold = reports.iter().all(|r| r.verdict == Verdict3::Holds);

    // the headline separation: the diagonal lottery is strictly preferred to
    // the status quo while the tradeoff lottery stays incomparable
    let f_star = Lottery::uniform(vec![
        o2(rat_int(4), rat_int(-2)),
        o2(rat_int(-2), rat_int(4)),
    ])?;
    let g_star = Lottery::uniform(vec![
        o2(rat_int(4), rat_int(4)),
        o2(rat_int(-2), rat_int(-2)),
    ])?;
    let zero = Lottery::degenerate(o2(rat_int(0), rat_int(0)));
    let (fi, gi, zi) = (
        universe.position(&f_star).expect("present"),
        universe.position(&g_star).expect("present"),
        universe.position(&zero).expect("present"),
    );
    let steps = vec![
        Step {
            fact: StepFact::Strict(gi, zi),
            display: "(4,4)/(-2,-2) > (0,0)".into(),
            justification: "good expectations + pareto".into(),
        },
        Step {
            fact: StepFact::Incomparable(fi, zi),
            display: "(4,-2)/(-2,4) || (0,0)".into(),
            justification: "the minimal closure adds no comparison".into(),
        },
    ];
    for s in &steps {
        let ok = match s.fact {
            StepFact::Strict(i, j) => relation.strict(i, j),
            StepFact::Incomparable(i, j) => relation.incomparable(i, j),
            _ => unreachable!(),
        };
        if !ok {
            return Err(Error::ReplayStepFailed {
                scenario: "prop9".into(),
                step: s.display.clone(),
            });
        }
    }

    let witnesses = reports
        .iter()
        .filter(|r| r.verdict == Verdict3::Violated)
        .flat_map(|r| r.witnesses.clone())
        .collect();
    Ok(ScenarioResult {
        scenario: ScenarioId::Prop9,
        params: params_map(&[("alphas", "1/2".into()), ("mixture-depth", "2".into())]),
        universe,
        labels,
        order,
        generators,
        relation,
        steps,
        verdict: if all_hold {
            ReplayVerdict::ConsistencyVerified
        } else {
            ReplayVerdict::ContradictionReproduced
        },
        witnesses,
        reports,
    })
}

fn qual_space_a1() -> Result<QualSpace> {
    let half = half();
    let d1 = DimensionSpec::chain("dim1", &["a1", "b1", "c1", "d1"])?.with_fact(
        DimFact::MixIndifferent {
            a: 0,
            c: 3,
            alpha: half.clone(),
            b: 1,
        },
    )?;
    let d2 = DimensionSpec::chain("dim2", &["a2", "b2", "c2", "d2"])?.with_fact(
        DimFact::MixIndifferent {
            a: 0,
            c: 3,
            alpha: half,
            b: 1,
        },
    )?;
    QualSpace::new("qual-a1", vec![d1, d2])
}

/// Unanimous Equivalence against Negative Dominance over two declared
/// four-chains.
fn qual_a1() -> Result<ScenarioResult> {
    let space = qual_space_a1()?;
    let forced = derive_unanimous_equivalence(&space, &half())?;
    let crossed_mix = mix(
        &Lottery::degenerate(space.outcome(&["a1", "d2"])?),
        &Lottery::degenerate(space.outcome(&["d1", "a2"])?),
        &half(),
    )?;
    let target = Lottery::degenerate(space.outcome(&["b1", "b2"])?);
    if !forced
        .iter()
        .any(|p| p.mixture == crossed_mix && p.target == target)
    {
        return Err(Error::PreconditionFailed {
            scenario: "qual-a1".into(),
            details: vec!["unanimous equivalence does not force the crossed mixture".into()],
        });
    }
    let order = OutcomePreorder::qualitative(std::sync::Arc::new(space.clone()));
    let mut b = Builder::new(ScenarioId::QualA1, order, vec![GeneratorRule::OrderLift]);
    for o in all_outcomes(&space) {
        let label = space.display_outcome(&o)?;
        b.add(Lottery::degenerate(o), label);
    }
    let li = b.add(crossed_mix, "(a1,d2)/(d1,a2)");
    let bi = b.index[&target];
    let ci = b.index[&Lottery::degenerate(space.outcome(&["c1", "c2"])?)];
    b.declare_both(
        li,
        bi,
        "unanimous-equivalence ((a_i/d_i ~ b_i in both dimensions)",
    );
    b.expect(StepFact::Indifferent(li, bi), "unanimous equivalence");
    b.expect(StepFact::Strict(bi, ci), "qualitative pareto");
    b.expect(StepFact::Strict(li, ci), "transitivity");
    b.finish(
        params_map(&[("alpha", "1/2".into())]),
        ReplayVerdict::ContradictionReproduced,
        &[],
    )
}

/// Unidimensional Dimensional Separability (and, with renamed premises, the
/// qualitative continuity/certainty-equivalents variant) against Negative
/// Dominance, run at the uniform weights.
fn qual_a2(id: ScenarioId) -> Result<ScenarioResult> {
    let h = half();
    // Chains best-first. For the continuity variant the third element is the
    // declared certainty equivalent of b/c, renamed into the same pattern.
    let (labels1, labels2, mix_tag, above_tag): (Vec<&str>, Vec<&str>, &str, &str) =
        if id == ScenarioId::QualA2 {
            (
                vec!["a1", "b1", "c1", "d1"],
                vec!["a2", "b2", "c2", "d2"],
                "unidimensional-dimensional-separability (a_i/d_i ~_i b_i lifted)",
                "unidimensional-dimensional-separability (c_i >= b_i/d_i lifted)",
            )
        } else {
            (
                vec!["a1", "b1", "x1", "c1"],
                vec!["a2", "b2", "x2", "c2"],
                "qualitative-unidimensional-continuity (a_i/c_i ~_i b_i)",
                "qualitative-unidimensional-certainty-equivalents (x_i ~_i b_i/c_i)",
            )
        };
    let d1 = DimensionSpec::chain("dim1", &labels1)?
        .with_fact(DimFact::MixIndifferent {
            a: 0,
            c: 3,
            alpha: h.clone(),
            b: 1,
        })?
        .with_fact(DimFact::OutcomeAboveMix {
            c: 2,
            b: 1,
            beta: h.clone(),
            d: 3,
        })?;
    let d2 = DimensionSpec::chain("dim2", &labels2)?
        .with_fact(DimFact::MixIndifferent {
            a: 0,
            c: 3,
            alpha: h.clone(),
            b: 1,
        })?
        .with_fact(DimFact::OutcomeAboveMix {
            c: 2,
            b: 1,
            beta: h.clone(),
            d: 3,
        })?;
    let space = QualSpace::new(id.as_str(), vec![d1, d2])?;
    let order = OutcomePreorder::qualitative(std::sync::Arc::new(space.clone()));

    let mut b = Builder::new(id, order, vec![GeneratorRule::OrderLift]);
    for o in all_outcomes(&space) {
        let label = space.display_outcome(&o)?;
        b.add(Lottery::degenerate(o), label);
    }
    let at = |b_: &Builder, l1: usize, l2: usize| -> usize {
        let o = Outcome::pair(rat_int(l1 as i64), rat_int(l2 as i64));
        b_.index[&Lottery::degenerate(o)]
    };
    // label indices: 0 = a, 1 = b, 2 = c or x, 3 = d or c
    let bb = at(&b, 1, 1);
    let context_b2 = space.outcome(&["a1", labels2[1]])?; // any outcome with second coord b2
    let context_a2 = space.outcome(&["a1", labels2[0]])?;
    let context_b1 = space.outcome(&[labels1[1], "a2"])?;
    let context_a1 = space.outcome(&[labels1[0], "a2"])?;

    let e1 = embed_lottery(&space, 0, &uniform_parts(0, 3), &context_b2)?; // (a1,b2)/(d1,b2)
    let e2 = embed_lottery(&space, 1, &uniform_parts(0, 3), &context_b1)?; // (b1,a2)/(b1,d2)
    let f_b = embed_lottery(&space, 0, &uniform_parts(1, 3), &context_a2)?; // (b1,a2)/(d1,a2)
    let f_t = embed_lottery(&space, 1, &uniform_parts(1, 3), &context_a1)?; // (a1,b2)/(a1,d2)
    let m1 = mix(
        &e1,
        &Lottery::degenerate(space.outcome(&[labels1[1], labels2[1]])?),
        &h,
    )?;
    let f = mix(&e2, &e1, &h)?;
    let f1 = Lottery::uniform(vec![
        space.outcome(&[labels1[1], labels2[0]])?, // (b1,a2)
        space.outcome(&[labels1[1], labels2[3]])?, // (b1,d2)
        space.outcome(&[labels1[0], labels2[1]])?, // (a1,b2)
        space.outcome(&[labels1[3], labels2[0]])?, // (d1,a2)
    ])?;
    let fpp = Lottery::uniform(vec![
        space.outcome(&[labels1[1], labels2[0]])?, // (b1,a2)
        space.outcome(&[labels1[0], labels2[3]])?, // (a1,d2)
        space.outcome(&[labels1[0], labels2[1]])?, // (a1,b2)
        space.outcome(&[labels1[3], labels2[0]])?, // (d1,a2)
    ])?;
    assert_eq!(fpp, mix(&f_b, &f_t, &h)?);
    let c1_a2 = Lottery::degenerate(space.outcome(&[labels1[2], labels2[0]])?);
    let a1_c2 = Lottery::degenerate(space.outcome(&[labels1[0], labels2[2]])?);
    let d_big = mix(&c1_a2, &f_t, &h)?;
    let g_big = mix(&c1_a2, &a1_c2, &h)?;

    let e1_i = b.add(e1, "(a1,b2)/(d1,b2)");
    let e2_i = b.add(e2, "(b1,a2)/(b1,d2)");
    let m1_i = b.add(m1, "m1");
    let f_i = b.add(f, "f");
    let f1_i = b.add(f1, "f+");
    let fpp_i = b.add(fpp, "f++");
    let fb_i = b.add(f_b, "bottom-half");
    let ft_i = b.add(f_t, "top-half");
    let d_i = b.add(d_big, "d");
    let g_i = b.add(g_big, "g");
    let c1a2_i = b.index[&c1_a2];
    let a1c2_i = b.index[&a1_c2];

    b.declare_both(e1_i, bb, mix_tag);
    b.declare_both(e2_i, bb, mix_tag);
    b.declare_both(
        m1_i,
        bb,
        "independence (mix both sides with (b1,b2) at 1/2)",
    );
    b.declare_both(
        f_i,
        m1_i,
        "independence (mix both sides with the first embedding at 1/2)",
    );
    b.declare(f1_i, f_i, "independence + pareto ((d1,a2) > (d1,b2))");
    b.declare(fpp_i, f1_i, "independence + pareto ((a1,d2) > (b1,d2))");
    b.declare(c1a2_i, fb_i, above_tag);
    b.declare(a1c2_i, ft_i, above_tag);
    b.declare(
        d_i,
        fpp_i,
        "independence (replace the bottom half by its upper bound)",
    );
    b.declare(
        g_i,
        d_i,
        "independence (replace the top half by its upper bound)",
    );

    b.expect(
        StepFact::Indifferent(f_i, bb),
        "independence over the two embeddings",
    );
    b.expect(
        StepFact::Strict(fpp_i, bb),
        "pareto improvements preserved by independence",
    );
    b.expect(
        StepFact::Weak(g_i, fpp_i),
        "independence over the two upper bounds",
    );
    b.expect(StepFact::Strict(g_i, bb), "transitivity");
    b.expect(
        StepFact::Incomparable(c1a2_i, bb),
        "converse pareto across the chains",
    );
    b.expect(
        StepFact::Incomparable(a1c2_i, bb),
        "converse pareto across the chains",
    );

    let mut result = b.finish(
        params_map(&[("alpha", "1/2".into()), ("beta", "1/2".into())]),
        ReplayVerdict::ContradictionReproduced,
        &[],
    )?;
    // the dimension-level facts embed consistently into the closure
    let uds = check_uds(&space, &result.universe, &result.relation)?;
    result.reports.push(uds);
    Ok(result)
}
