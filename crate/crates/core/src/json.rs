//! Interchange formats. Rationals travel as `"p/q"` strings, never floats,
//! and every report carries a schema-version field.

use serde::{Deserialize, Serialize};

use crate::axioms::{AxiomReport, Verdict3};
use crate::dominance::{Coupling, DominanceVerdict};
use crate::lottery::{Lottery, Outcome};
use crate::rational::{format_rational, parse_rational};
use crate::relation::{DeclaredPair, GeneratorRule, GeneratorSet, Universe};
use crate::utility::{Utility, UtilityFamily};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct EntryJson {
    pub coords: Vec<String>,
    pub prob: String,
}

/// `{"outcomes": [{"coords": ["4","-2"], "prob": "1/2"}, ...]}`
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LotteryJson {
    pub outcomes: Vec<EntryJson>,
}

impl LotteryJson {
    pub fn from_lottery(l: &Lottery) -> Self {
        LotteryJson {
            outcomes: l
                .mass()
                .iter()
                .map(|(o, p)| EntryJson {
                    coords: o.coords().iter().map(format_rational).collect(),
                    prob: format_rational(p),
                })
                .collect(),
        }
    }

    /// Validates positivity, dimension agreement, duplicate-freedom, and that
    /// the total is exactly 1 (the diagnostic names the deficit).
    pub fn to_lottery(&self) -> Result<Lottery> {
        let mut entries = Vec::with_capacity(self.outcomes.len());
        let mut seen: Vec<&Vec<String>> = Vec::new();
        for e in &self.outcomes {
            if e.coords.is_empty() {
                return Err(Error::BadInput("outcome with no coordinates".into()));
            }
            if seen.contains(&&e.coords) {
                return Err(Error::BadInput(format!(
                    "duplicate outcome ({})",
                    e.coords.join(",")
                )));
            }
            seen.push(&e.coords);
            let coords = e
                .coords
                .iter()
                .map(|c| parse_rational(c))
                .collect::<Result<Vec<_>>>()?;
            entries.push((Outcome::new(coords), parse_rational(&e.prob)?));
        }
        Lottery::new(entries)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UniverseJson {
    pub lotteries: Vec<LotteryJson>,
}

impl UniverseJson {
    pub fn from_universe(u: &Universe) -> Self {
        UniverseJson {
            lotteries: u.items().iter().map(LotteryJson::from_lottery).collect(),
        }
    }

    pub fn to_universe(&self) -> Result<Universe> {
        Universe::new(
            self.lotteries
                .iter()
                .map(|l| l.to_lottery())
                .collect::<Result<Vec<_>>>()?,
        )
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DeclaredJson {
    pub from: usize,
    pub to: usize,
    #[serde(default)]
    pub both: bool,
    #[serde(default)]
    pub tag: String,
}

/// `{"rules": ["pareto-lift", ...], "declared": [{"from": 0, "to": 1, ...}]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GeneratorSetJson {
    #[serde(default)]
    pub rules: Vec<String>,
    #[serde(default)]
    pub declared: Vec<DeclaredJson>,
}

impl GeneratorSetJson {
    pub fn from_generators(g: &GeneratorSet) -> Self {
        GeneratorSetJson {
            rules: g.rules.iter().map(|r| r.as_str().to_string()).collect(),
            declared: g
                .declared
                .iter()
                .map(|d| DeclaredJson {
                    from: d.from,
                    to: d.to,
                    both: d.both,
                    tag: d.tag.clone(),
                })
                .collect(),
        }
    }

    pub fn to_generators(&self) -> Result<GeneratorSet> {
        let rules = self
            .rules
            .iter()
            .map(|r| GeneratorRule::parse(r))
            .collect::<Result<Vec<_>>>()?;
        let declared = self
            .declared
            .iter()
            .map(|d| DeclaredPair {
                from: d.from,
                to: d.to,
                both: d.both,
                tag: d.tag.clone(),
            })
            .collect();
        Ok(GeneratorSet { rules, declared })
    }
}

/// `[{"kind":"linear","a":"1","b":"2","k":"0"},
///   {"kind":"step","polarity":"plus","threshold":["0","0"]}]`
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FamilyMemberJson {
    Linear {
        a: String,
        b: String,
        k: String,
    },
    Step {
        polarity: String,
        threshold: Vec<String>,
    },
}

pub fn family_from_json(members: &[FamilyMemberJson]) -> Result<UtilityFamily> {
    let mut out = Vec::with_capacity(members.len());
    for m in members {
        out.push(match m {
            FamilyMemberJson::Linear { a, b, k } => {
                Utility::linear(parse_rational(a)?, parse_rational(b)?, parse_rational(k)?)
            }
            FamilyMemberJson::Step {
                polarity,
                threshold,
            } => {
                if threshold.len() != 2 {
                    return Err(Error::BadInput(
                        "step threshold needs two coordinates".into(),
                    ));
                }
                let t = Outcome::pair(
                    parse_rational(&threshold[0])?,
                    parse_rational(&threshold[1])?,
                );
                match polarity.as_str() {
                    "plus" => Utility::step_plus(t),
                    "minus" => Utility::step_minus(t),
                    other => return Err(Error::BadInput(format!("unknown polarity {other:?}"))),
                }
            }
        });
    }
    UtilityFamily::new(out)
}

/// One qualitative dimension: labels, declared weak order pairs (closed to
/// a preorder on construction), and dimension-level lottery facts.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DimensionSpecJson {
    pub name: String,
    pub labels: Vec<String>,
    #[serde(default)]
    pub order_pairs: Vec<(usize, usize)>,
    #[serde(default)]
    pub facts: Vec<DimFactJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DimFactJson {
    /// `a alpha c ~ b` (label indices)
    MixIndifferent {
        a: usize,
        c: usize,
        alpha: String,
        b: usize,
    },
    /// `c >= (b beta d)`
    OutcomeAboveMix {
        c: usize,
        b: usize,
        beta: String,
        d: usize,
    },
}

impl DimensionSpecJson {
    pub fn to_dimension(&self) -> Result<crate::qualitative::DimensionSpec> {
        use crate::qualitative::{DimFact, DimensionSpec};
        let mut dim =
            DimensionSpec::new(self.name.clone(), self.labels.clone(), &self.order_pairs)?;
        for fact in &self.facts {
            dim = dim.with_fact(match fact {
                DimFactJson::MixIndifferent { a, c, alpha, b } => DimFact::MixIndifferent {
                    a: *a,
                    c: *c,
                    alpha: parse_rational(alpha)?,
                    b: *b,
                },
                DimFactJson::OutcomeAboveMix { c, b, beta, d } => DimFact::OutcomeAboveMix {
                    c: *c,
                    b: *b,
                    beta: parse_rational(beta)?,
                    d: *d,
                },
            })?;
        }
        Ok(dim)
    }

    pub fn from_dimension(dim: &crate::qualitative::DimensionSpec) -> Self {
        use crate::qualitative::DimFact;
        let n = dim.labels().len();
        let mut order_pairs = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && dim.weakly_prefers(a, b) {
                    order_pairs.push((a, b));
                }
            }
        }
        DimensionSpecJson {
            name: dim.name().to_string(),
            labels: dim.labels().to_vec(),
            order_pairs,
            facts: dim
                .facts()
                .iter()
                .map(|f| match f {
                    DimFact::MixIndifferent { a, c, alpha, b } => DimFactJson::MixIndifferent {
                        a: *a,
                        c: *c,
                        alpha: format_rational(alpha),
                        b: *b,
                    },
                    DimFact::OutcomeAboveMix { c, b, beta, d } => DimFactJson::OutcomeAboveMix {
                        c: *c,
                        b: *b,
                        beta: format_rational(beta),
                        d: *d,
                    },
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CouplingEntryJson {
    pub from: Vec<String>,
    pub to: Vec<String>,
    pub mass: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CouplingJson {
    pub entries: Vec<CouplingEntryJson>,
}

impl CouplingJson {
    pub fn from_coupling(c: &Coupling) -> Self {
        CouplingJson {
            entries: c
                .entries
                .iter()
                .map(|(s, t, m)| CouplingEntryJson {
                    from: s.coords().iter().map(format_rational).collect(),
                    to: t.coords().iter().map(format_rational).collect(),
                    mass: format_rational(m),
                })
                .collect(),
        }
    }

    pub fn to_coupling(&self) -> Result<Coupling> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let s = Outcome::new(
                e.from
                    .iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vec<_>>>()?,
            );
            let t = Outcome::new(
                e.to.iter()
                    .map(|c| parse_rational(c))
                    .collect::<Result<Vec<_>>>()?,
            );
            entries.push((s, t, parse_rational(&e.mass)?));
        }
        Ok(Coupling { entries })
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DominanceReportJson {
    pub schema_version: u32,
    pub order: String,
    pub mode: String,
    pub dominates: bool,
    pub strict_mass: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<CouplingJson>,
}

impl DominanceReportJson {
    pub fn from_verdict(order: &str, mode: &str, v: &DominanceVerdict) -> Self {
        DominanceReportJson {
            schema_version: SCHEMA_VERSION,
            order: order.to_string(),
            mode: mode.to_string(),
            dominates: v.dominates,
            strict_mass: format_rational(&v.strict_mass),
            witness: v.witness.as_ref().map(CouplingJson::from_coupling),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WitnessJson {
    pub items: Vec<usize>,
    pub outcomes: Vec<Vec<String>>,
    pub note: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AxiomReportJson {
    pub axiom: String,
    pub verdict: String,
    pub witnesses: Vec<WitnessJson>,
    pub notes: Vec<String>,
}

impl AxiomReportJson {
    pub fn from_report(r: &AxiomReport) -> Self {
        AxiomReportJson {
            axiom: r.axiom.clone(),
            verdict: r.verdict.as_str().to_string(),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    items: w.items.clone(),
                    outcomes: w
                        .outcomes
                        .iter()
                        .map(|o| o.coords().iter().map(format_rational).collect())
                        .collect(),
                    note: w.note.clone(),
                })
                .collect(),
            notes: r.notes.clone(),
        }
    }
}

pub fn verdict3_from_str(s: &str) -> Result<Verdict3> {
    match s {
        "holds" => Ok(Verdict3::Holds),
        "violated" => Ok(Verdict3::Violated),
        "not-determinable" => Ok(Verdict3::NotDeterminable),
        other => Err(Error::UnknownName(other.to_string())),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckReportJson {
    pub schema_version: u32,
    pub order: String,
    pub universe_size: usize,
    pub axioms: Vec<AxiomReportJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StepJson {
    pub kind: String,
    pub lhs: usize,
    pub rhs: usize,
    pub display: String,
    pub justification: String,
}

/// A complete replay result; the `universe` and `generators` fields are the
/// manifest from which the run is reproducible.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScenarioResultJson {
    pub schema_version: u32,
    pub scenario: String,
    pub verdict: String,
    pub params: std::collections::BTreeMap<String, String>,
    pub order: String,
    pub labels: Vec<String>,
    pub universe: UniverseJson,
    pub generators: GeneratorSetJson,
    pub steps: Vec<StepJson>,
    pub witnesses: Vec<WitnessJson>,
    pub reports: Vec<AxiomReportJson>,
}

impl ScenarioResultJson {
    pub fn from_result(r: &crate::scenarios::ScenarioResult) -> Self {
        use crate::scenarios::StepFact;
        ScenarioResultJson {
            schema_version: SCHEMA_VERSION,
            scenario: r.scenario.as_str().to_string(),
            verdict: r.verdict.as_str().to_string(),
            params: r.params.clone(),
            order: r.order.spec_string(),
            labels: r.labels.clone(),
            universe: UniverseJson::from_universe(&r.universe),
            generators: GeneratorSetJson::from_generators(&r.generators),
            steps: r
                .steps
                .iter()
                .map(|s| {
                    let (kind, lhs, rhs) = match s.fact {
                        StepFact::Weak(i, j) => ("weak", i, j),
                        StepFact::Strict(i, j) => ("strict", i, j),
                        StepFact::Indifferent(i, j) => ("indifferent", i, j),
                        StepFact::Incomparable(i, j) => ("incomparable", i, j),
                    };
                    StepJson {
                        kind: kind.to_string(),
                        lhs,
                        rhs,
                        display: s.display.clone(),
                        justification: s.justification.clone(),
                    }
                })
                .collect(),
            witnesses: r
                .witnesses
                .iter()
                .map(|w| WitnessJson {
                    items: w.items.clone(),
                    outcomes: w
                        .outcomes
                        .iter()
                        .map(|o| o.coords().iter().map(format_rational).collect())
                        .collect(),
                    note: w.note.clone(),
                })
                .collect(),
            reports: r.reports.iter().map(AxiomReportJson::from_report).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn lottery_json_round_trip() {
        let text = r#"{"outcomes":[{"coords":["4","-2"],"prob":"1/2"},{"coords":["-2","4"],"prob":"1/2"}]}"#;
        let parsed: LotteryJson = serde_json::from_str(text).unwrap();
        let lottery = parsed.to_lottery().unwrap();
        assert_eq!(lottery.support_len(), 2);
        let back = LotteryJson::from_lottery(&lottery);
        let reparsed = back.to_lottery().unwrap();
        assert_eq!(lottery, reparsed);
    }

    #[test]
    fn lottery_json_names_the_deficit() {
        let text =
            r#"{"outcomes":[{"coords":["0","0"],"prob":"1/3"},{"coords":["1","1"],"prob":"1/2"}]}"#;
        let parsed: LotteryJson = serde_json::from_str(text).unwrap();
        match parsed.to_lottery() {
            Err(Error::MassNotOne { total, deficit }) => {
                assert_eq!(total, "5/6");
                assert_eq!(deficit, "1/6");
            }
            other => panic!("expected MassNotOne, got {other:?}"),
        }
    }

    #[test]
    fn lottery_json_rejects_duplicates_and_bad_probs() {
        let dup =
            r#"{"outcomes":[{"coords":["0","0"],"prob":"1/2"},{"coords":["0","0"],"prob":"1/2"}]}"#;
        let parsed: LotteryJson = serde_json::from_str(dup).unwrap();
        assert!(parsed.to_lottery().is_err());
        let neg = r#"{"outcomes":[{"coords":["0","0"],"prob":"3/2"},{"coords":["1","1"],"prob":"-1/2"}]}"#;
        let parsed: LotteryJson = serde_json::from_str(neg).unwrap();
        assert!(parsed.to_lottery().is_err());
    }

    #[test]
    fn family_json_parses_both_kinds() {
        let text = r#"[{"kind":"linear","a":"1","b":"2","k":"0"},
                       {"kind":"step","polarity":"plus","threshold":["0","0"]}]"#;
        let members: Vec<FamilyMemberJson> = serde_json::from_str(text).unwrap();
        let family = family_from_json(&members).unwrap();
        assert_eq!(family.members.len(), 2);
    }

    #[test]
    fn generator_set_json_round_trip() {
        let mut g = GeneratorSet::new(vec![
            GeneratorRule::OrderLift,
            GeneratorRule::StochasticDominance,
        ]);
        g.declare_both(0, 1, "premise");
        let j = GeneratorSetJson::from_generators(&g);
        let back = j.to_generators().unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn dimension_spec_json_round_trip() {
        let text = r#"{"name":"d1","labels":["a","b","c","d"],
                       "order_pairs":[[0,1],[1,2],[2,3]],
                       "facts":[{"kind":"mix-indifferent","a":0,"c":3,"alpha":"1/2","b":1},
                                {"kind":"outcome-above-mix","c":2,"b":1,"beta":"1/2","d":3}]}"#;
        let parsed: DimensionSpecJson = serde_json::from_str(text).unwrap();
        let dim = parsed.to_dimension().unwrap();
        // the declared chain closes transitively
        assert!(dim.weakly_prefers(0, 3));
        assert!(!dim.weakly_prefers(3, 0));
        let back = DimensionSpecJson::from_dimension(&dim);
        assert_eq!(back.to_dimension().unwrap(), dim);
        // dangling label indices are rejected
        let bad = r#"{"name":"d","labels":["a"],"order_pairs":[[0,7]]}"#;
        let parsed: DimensionSpecJson = serde_json::from_str(bad).unwrap();
        assert!(parsed.to_dimension().is_err());
    }

    #[test]
    fn coupling_json_round_trip() {
        let c = Coupling {
            entries: vec![(
                Outcome::pair(rat(-2, 1), rat(4, 1)),
                Outcome::pair(rat(-2, 1), rat(3, 1)),
                rat(1, 2),
            )],
        };
        let j = CouplingJson::from_coupling(&c);
        assert_eq!(j.to_coupling().unwrap(), c);
    }
}
