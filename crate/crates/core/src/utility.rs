//! Mixture-preserving utility families and the sets-of-utilities comparison
//! rule, supporting instance checks of the representation facts.
//!
//! Families here are finite samples of the (possibly infinite) sets the
//! theory quantifies over, so family comparisons supply evidence-level
//! verification; the checks document which members were sampled.

use num_traits::{One, Zero};

use crate::axioms::{AxiomReport, Verdict3, Witness};
use crate::lottery::{Lottery, Outcome};
use crate::order::Verdict;
use crate::rational::{format_rational, Rational};
use crate::{Error, Result};

/// `u(x, y) = a x + b y + k`. Positive `a`, `b` make it monotone for the
/// Pareto-compatible family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearUtility {
    pub a: Rational,
    pub b: Rational,
    pub k: Rational,
}

/// Indicator-style utilities from the consistency construction: `plus` is 1
/// exactly on the closed upper quadrant at the threshold, `minus` is 0
/// exactly on the closed lower quadrant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepUtility {
    pub polarity: StepPolarity,
    pub threshold: Outcome,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepPolarity {
    Plus,
    Minus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Utility {
    Linear(LinearUtility),
    Step(StepUtility),
}

impl Utility {
    pub fn linear(a: Rational, b: Rational, k: Rational) -> Self {
        Utility::Linear(LinearUtility { a, b, k })
    }

    pub fn step_plus(threshold: Outcome) -> Self {
        Utility::Step(StepUtility {
            polarity: StepPolarity::Plus,
            threshold,
        })
    }

    pub fn step_minus(threshold: Outcome) -> Self {
        Utility::Step(StepUtility {
            polarity: StepPolarity::Minus,
            threshold,
        })
    }

    /// Value on a single outcome (dimension 2 only).
    pub fn value(&self, o: &Outcome) -> Result<Rational> {
        if o.dim() != 2 {
            return Err(Error::OrderUnsupported(format!(
                "utilities are defined on dimension 2 only, got {}",
                o.dim()
            )));
        }
        Ok(match self {
            Utility::Linear(LinearUtility { a, b, k }) => a * o.coord(0) + b * o.coord(1) + k,
            Utility::Step(StepUtility {
                polarity,
                threshold,
            }) => {
                let (x, y) = (o.coord(0), o.coord(1));
                let (tx, ty) = (threshold.coord(0), threshold.coord(1));
                match polarity {
                    StepPolarity::Plus => {
                        if x >= tx && y >= ty {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    }
                    StepPolarity::Minus => {
                        if x <= tx && y <= ty {
                            Rational::zero()
                        } else {
                            Rational::one()
                        }
                    }
                }
            }
        })
    }
}

/// Exact expected utility over the support. Mixture preservation on
/// finite-support lotteries forces exactly this form.
pub fn eval_utility(u: &Utility, f: &Lottery) -> Result<Rational> {
    let mut total = Rational::zero();
    for (o, p) in f.mass() {
        total += p * u.value(o)?;
    }
    Ok(total)
}

/// A non-empty finite family of utilities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UtilityFamily {
    pub members: Vec<Utility>,
}

impl UtilityFamily {
    pub fn new(members: Vec<Utility>) -> Result<Self> {
        if members.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(UtilityFamily { members })
    }
}

/// `f ⪰ g` iff every member values `f` at least as highly as `g`; the four
/// verdicts follow from the two weak directions.
pub fn family_compare(family: &UtilityFamily, f: &Lottery, g: &Lottery) -> Result<Verdict> {
    let mut forward = true;
    let mut backward = true;
    for u in &family.members {
        let uf = eval_utility(u, f)?;
        let ug = eval_utility(u, g)?;
        if uf < ug {
            forward = false;
        }
        if ug < uf {
            backward = false;
        }
        if !forward && !backward {
            break;
        }
    }
    Ok(Verdict::from_directions(forward, backward))
}

/// Verifies every family member is monotone on the sampled coordinate-wise
/// dominating pairs.
pub fn check_pareto_respect(
    family: &UtilityFamily,
    samples: &[(Outcome, Outcome)],
) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("utility-pareto-respect");
    let mut checked = 0usize;
    for (hi, lo) in samples {
        if !hi.dominates_weakly(lo) {
            continue;
        }
        checked += 1;
        for (idx, u) in family.members.iter().enumerate() {
            if u.value(hi)? < u.value(lo)? {
                report.witnesses.push(Witness {
                    items: vec![idx],
                    outcomes: vec![hi.clone(), lo.clone()],
                    note: format!(
                        "member {idx} values {hi} at {} below {lo} at {}",
                        format_rational(&u.value(hi)?),
                        format_rational(&u.value(lo)?)
                    ),
                });
            }
        }
    }
    report
        .notes
        .push(format!("dominating pairs checked: {checked}"));
    report.verdict = if !report.witnesses.is_empty() {
        Verdict3::Violated
    } else if checked == 0 {
        Verdict3::NotDeterminable
    } else {
        Verdict3::Holds
    };
    Ok(report)
}
