//! Outcomes, finite-support lotteries, mixtures, expectations, projections,
//! and the structural predicates (unidimensional, good) the rest of the
//! engine consumes.
//!
//! A lottery is a finite map from outcomes to strictly positive rational
//! probabilities summing to exactly one. Zero-mass entries are normalized
//! away, so lottery equality is support-map equality. All outcomes in one
//! computation share a dimension; mixed-dimension inputs are rejected rather
//! than padded. Values are immutable after construction.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::order::OutcomePreorder;
use crate::rational::{format_rational, Rational};
use crate::{Error, Result};

/// A point of the outcome space: a fixed-length vector of exact rationals.
/// The derived `Ord` is lexicographic on coordinates, which is the canonical
/// ordering used for deduplication and serialization everywhere.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Outcome {
    coords: Vec<Rational>,
}

impl Outcome {
    pub fn new(coords: Vec<Rational>) -> Self {
        assert!(!coords.is_empty(), "outcome needs at least one coordinate");
        Outcome { coords }
    }

    /// Two-dimensional helper, the common case in this crate.
    pub fn pair(x: Rational, y: Rational) -> Self {
        Outcome::new(vec![x, y])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// Coordinate-wise weak dominance: every coordinate at least as large.
    pub fn dominates_weakly(&self, other: &Outcome) -> bool {
        self.dim() == other.dim() && self.coords.iter().zip(&other.coords).all(|(a, b)| a >= b)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `true` when the outcomes differ in at most one coordinate.
pub fn outcomes_unidimensional(a: &Outcome, b: &Outcome) -> bool {
    a.dim() == b.dim()
        && a.coords
            .iter()
            .zip(&b.coords)
            .filter(|(x, y)| x != y)
            .count()
            <= 1
}

/// A finite-support probability distribution over outcomes.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Lottery {
    mass: BTreeMap<Outcome, Rational>,
}

impl Lottery {
    /// Builds a lottery from entries, summing duplicated outcomes pointwise.
    /// Every entry must be strictly positive and the total must be exactly 1.
    pub fn new(entries: impl IntoIterator<Item = (Outcome, Rational)>) -> Result<Self> {
        let mut mass: BTreeMap<Outcome, Rational> = BTreeMap::new();
        let mut dim: Option<usize> = None;
        for (o, p) in entries {
            match dim {
                None => dim = Some(o.dim()),
                Some(d) if d != o.dim() => {
                    return Err(Error::DimensionMismatch {
                        left: d,
                        right: o.dim(),
                    })
                }
                _ => {}
            }
            if !p.is_positive() {
                return Err(Error::NonPositiveProbability {
                    outcome: o.to_string(),
                    prob: format_rational(&p),
                });
            }
            *mass.entry(o).or_insert_with(Rational::zero) += p;
        }
        if mass.is_empty() {
            return Err(Error::EmptySupport);
        }
        let total: Rational = mass.values().cloned().sum();
        if !total.is_one() {
            let deficit = Rational::one() - &total;
            return Err(Error::MassNotOne {
                total: format_rational(&total),
                deficit: format_rational(&deficit),
            });
        }
        Ok(Lottery { mass })
    }

    /// The lottery assigning probability 1 to a single outcome.
    pub fn degenerate(o: Outcome) -> Self {
        let mut mass = BTreeMap::new();
        mass.insert(o, Rational::one());
        Lottery { mass }
    }

    /// Uniform lottery over a list of outcomes (duplicates merge their mass).
    pub fn uniform(outcomes: Vec<Outcome>) -> Result<Self> {
        if outcomes.is_empty() {
            return Err(Error::EmptySupport);
        }
        let n = outcomes.len() as i64;
        let p = Rational::new(1.into(), n.into());
        Lottery::new(outcomes.into_iter().map(|o| (o, p.clone())))
    }

    pub fn mass(&self) -> &BTreeMap<Outcome, Rational> {
        &self.mass
    }

    /// Probability of `o`, zero when `o` is outside the support.
    pub fn prob(&self, o: &Outcome) -> Rational {
        self.mass.get(o).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Outcome> {
        self.mass.keys()
    }

    pub fn support_len(&self) -> usize {
        self.mass.len()
    }

    pub fn dim(&self) -> usize {
        self.mass.keys().next().expect("non-empty").dim()
    }

    /// `Some(o)` when the lottery is the characteristic function of `o`.
    pub fn as_degenerate(&self) -> Option<&Outcome> {
        if self.mass.len() == 1 {
            self.mass.keys().next()
        } else {
            None
        }
    }

    /// Coordinate-wise expectation, exact.
    pub fn expectation(&self) -> Outcome {
        let dim = self.dim();
        let mut coords = vec![Rational::zero(); dim];
        for (o, p) in &self.mass {
            for (acc, c) in coords.iter_mut().zip(o.coords()) {
                *acc += p * c;
            }
        }
        Outcome::new(coords)
    }

    /// Marginal distribution of coordinate `i` (zero-based). Values sum to 1.
    pub fn projection(&self, i: usize) -> Result<BTreeMap<Rational, Rational>> {
        let dim = self.dim();
        if i >= dim {
            return Err(Error::DimensionOutOfRange { index: i, dim });
        }
        let mut marginal: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (o, p) in &self.mass {
            *marginal
                .entry(o.coord(i).clone())
                .or_insert_with(Rational::zero) += p;
        }
        Ok(marginal)
    }

    /// Every pair of support outcomes differs in at most one coordinate.
    pub fn is_unidimensional(&self) -> bool {
        let outcomes: Vec<&Outcome> = self.mass.keys().collect();
        for (idx, a) in outcomes.iter().enumerate() {
            for b in &outcomes[idx + 1..] {
                if !outcomes_unidimensional(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Every support outcome of `self` is unidimensional with every support
    /// outcome of `other`.
    pub fn is_unidimensional_with(&self, other: &Lottery) -> bool {
        self.support()
            .all(|a| other.support().all(|b| outcomes_unidimensional(a, b)))
    }

    /// Every pair of support outcomes is comparable under `order`.
    pub fn is_good(&self, order: &OutcomePreorder) -> Result<bool> {
        let outcomes: Vec<&Outcome> = self.mass.keys().collect();
        for (idx, a) in outcomes.iter().enumerate() {
            for b in &outcomes[idx + 1..] {
                if order.compare(a, b)?.is_incomparable() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

impl fmt::Display for Lottery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(o) = self.as_degenerate() {
            return write!(f, "{o}");
        }
        let parts: Vec<String> = self
            .mass
            .iter()
            .map(|(o, p)| format!("{o}:{}", format_rational(p)))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for Lottery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Pointwise mixture `alpha * f + (1 - alpha) * g`; zero-mass outcomes are
/// dropped so the result is a well-formed lottery. Requires `f` and `g` to
/// share a dimension and `alpha` in `[0, 1]`.
pub fn mix(f: &Lottery, g: &Lottery, alpha: &Rational) -> Result<Lottery> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            left: f.dim(),
            right: g.dim(),
        });
    }
    if alpha.is_negative() || alpha > &Rational::one() {
        return Err(Error::AlphaOutOfRange(format_rational(alpha)));
    }
    let beta = Rational::one() - alpha;
    let mut mass: BTreeMap<Outcome, Rational> = BTreeMap::new();
    if !alpha.is_zero() {
        for (o, p) in f.mass() {
            *mass.entry(o.clone()).or_insert_with(Rational::zero) += alpha * p;
        }
    }
    if !beta.is_zero() {
        for (o, p) in g.mass() {
            *mass.entry(o.clone()).or_insert_with(Rational::zero) += &beta * p;
        }
    }
    Ok(Lottery { mass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    pub(crate) fn o2(x: i64, y: i64) -> Outcome {
        Outcome::pair(rat_int(x), rat_int(y))
    }

    fn half() -> Rational {
        rat(1, 2)
    }

    #[test]
    fn mix_of_degenerates_is_uniform() {
        // (0,0)/(4,4), the left-hand lottery of the expectational example
        let f = mix(
            &Lottery::degenerate(o2(0, 0)),
            &Lottery::degenerate(o2(4, 4)),
            &half(),
        )
        .unwrap();
        assert_eq!(
            f,
            Lottery::new(vec![(o2(0, 0), half()), (o2(4, 4), half())]).unwrap()
        );
    }

    #[test]
    fn mix_is_idempotent() {
        let f = Lottery::uniform(vec![o2(4, -2), o2(-2, 4)]).unwrap();
        for a in [rat(1, 3), rat(0, 1), rat(1, 1), rat(2, 5)] {
            assert_eq!(mix(&f, &f, &a).unwrap(), f);
        }
    }

    #[test]
    fn mix_pointwise_arithmetic() {
        let g = Lottery::new(vec![(o2(0, 0), half()), (o2(1, 1), half())]).unwrap();
        let m = mix(&Lottery::degenerate(o2(0, 0)), &g, &half()).unwrap();
        assert_eq!(
            m,
            Lottery::new(vec![(o2(0, 0), rat(3, 4)), (o2(1, 1), rat(1, 4))]).unwrap()
        );
    }

    #[test]
    fn mix_rejects_bad_inputs() {
        let f = Lottery::degenerate(o2(0, 0));
        let g = Lottery::degenerate(Outcome::new(vec![rat_int(1)]));
        assert!(matches!(
            mix(&f, &g, &half()),
            Err(Error::DimensionMismatch { .. })
        ));
        let h = Lottery::degenerate(o2(1, 1));
        assert!(matches!(
            mix(&f, &h, &rat(3, 2)),
            Err(Error::AlphaOutOfRange(_))
        ));
        assert!(matches!(
            mix(&f, &h, &rat(-1, 2)),
            Err(Error::AlphaOutOfRange(_))
        ));
    }

    #[test]
    fn mixture_boundary_weights_drop_zero_mass() {
        let f = Lottery::degenerate(o2(0, 0));
        let g = Lottery::degenerate(o2(1, 1));
        assert_eq!(mix(&f, &g, &rat_int(1)).unwrap(), f);
        assert_eq!(mix(&f, &g, &rat(0, 1)).unwrap(), g);
    }

    #[test]
    fn expectation_of_the_orange_lottery() {
        // (4,-2)/(-2,4) has expected value one apple and one orange
        let f = Lottery::uniform(vec![o2(4, -2), o2(-2, 4)]).unwrap();
        assert_eq!(f.expectation(), o2(1, 1));
    }

    #[test]
    fn expectation_of_degenerate_is_the_outcome() {
        let o = Outcome::pair(rat(3, 7), rat(-5, 2));
        assert_eq!(Lottery::degenerate(o.clone()).expectation(), o);
    }

    #[test]
    fn expectation_of_diagonal_pair() {
        let f = Lottery::uniform(vec![o2(0, 0), o2(4, 4)]).unwrap();
        assert_eq!(f.expectation(), o2(2, 2));
    }

    #[test]
    fn projection_marginals() {
        let f = Lottery::uniform(vec![o2(4, -2), o2(-2, 4)]).unwrap();
        let m = f.projection(0).unwrap();
        assert_eq!(m.get(&rat_int(4)), Some(&half()));
        assert_eq!(m.get(&rat_int(-2)), Some(&half()));

        let d = Lottery::degenerate(o2(3, 7));
        assert_eq!(d.projection(1).unwrap().get(&rat_int(7)), Some(&rat_int(1)));

        // hand summation over a three-point support
        let g = Lottery::new(vec![
            (o2(0, 0), half()),
            (o2(0, 3), rat(1, 4)),
            (o2(3, 3), rat(1, 4)),
        ])
        .unwrap();
        let m = g.projection(0).unwrap();
        assert_eq!(m.get(&rat_int(0)), Some(&rat(3, 4)));
        assert_eq!(m.get(&rat_int(3)), Some(&rat(1, 4)));
        assert!(matches!(
            g.projection(2),
            Err(Error::DimensionOutOfRange { .. })
        ));
    }

    #[test]
    fn unidimensional_predicate() {
        assert!(Lottery::uniform(vec![o2(-3, 0), o2(3, 0)])
            .unwrap()
            .is_unidimensional());
        assert!(!Lottery::uniform(vec![o2(4, -2), o2(-2, 4)])
            .unwrap()
            .is_unidimensional());
        assert!(Lottery::degenerate(o2(5, 5)).is_unidimensional());
    }

    #[test]
    fn good_predicate_under_pareto_box() {
        let pareto = OutcomePreorder::pareto_box();
        let g_star = Lottery::uniform(vec![o2(4, 4), o2(-2, -2)]).unwrap();
        assert!(g_star.is_good(&pareto).unwrap());
        let chain = Lottery::uniform(vec![o2(0, 0), o2(0, 3), o2(3, 3)]).unwrap();
        assert!(chain.is_good(&pareto).unwrap());
        let f_star = Lottery::uniform(vec![o2(4, -2), o2(-2, 4)]).unwrap();
        assert!(!f_star.is_good(&pareto).unwrap());
    }

    #[test]
    fn every_unidimensional_lottery_is_good() {
        let pareto = OutcomePreorder::pareto_box();
        let f = Lottery::new(vec![
            (o2(2, 0), rat(1, 6)),
            (o2(2, 5), rat(1, 3)),
            (o2(2, -1), half()),
        ])
        .unwrap();
        assert!(f.is_unidimensional());
        assert!(f.is_good(&pareto).unwrap());
    }

    #[test]
    fn constructor_validates() {
        assert!(matches!(Lottery::new(vec![]), Err(Error::EmptySupport)));
        assert!(matches!(
            Lottery::new(vec![(o2(0, 0), rat_int(0)), (o2(1, 1), rat_int(1))]),
            Err(Error::NonPositiveProbability { .. })
        ));
        let err = Lottery::new(vec![(o2(0, 0), half()), (o2(1, 1), rat(1, 4))]);
        match err {
            Err(Error::MassNotOne { total, deficit }) => {
                assert_eq!(total, "3/4");
                assert_eq!(deficit, "1/4");
            }
            other => panic!("expected MassNotOne, got {other:?}"),
        }
        // duplicates merge before validation
        let merged = Lottery::new(vec![(o2(0, 0), half()), (o2(0, 0), half())]).unwrap();
        assert_eq!(merged, Lottery::degenerate(o2(0, 0)));
    }

    #[test]
    fn mixture_associativity_instance() {
        let f = Lottery::degenerate(o2(1, 0));
        let g = Lottery::degenerate(o2(2, 0));
        let h = Lottery::degenerate(o2(3, 0));
        let m = mix(&mix(&f, &g, &half()).unwrap(), &h, &half()).unwrap();
        assert_eq!(m.prob(&o2(1, 0)), rat(1, 4));
        assert_eq!(m.prob(&o2(2, 0)), rat(1, 4));
        assert_eq!(m.prob(&o2(3, 0)), half());
    }
}
