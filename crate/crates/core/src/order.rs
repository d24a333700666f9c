//! Pluggable preorders on outcomes: the Pareto/Converse-Pareto box order, the
//! two-line family, declared qualitative product orders, and the
//! k-incomparability classification for points on unidimensional segments.
//!
//! Comparators are immutable parameter records and all comparisons are pure
//! exact-inequality evaluations, so they are safe to share across threads.

use std::fmt;
use std::sync::Arc;

use num_traits::Signed;

use crate::lottery::{outcomes_unidimensional, Outcome};
use crate::qualitative::QualSpace;
use crate::rational::{format_rational, parse_rational, Rational};
use crate::{Error, Result};

/// Verdict of comparing two outcomes (or two lotteries in a relation).
/// Exactly one verdict holds per ordered pair, and the verdict of the
/// reversed pair is the mirror image.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Equivalent,
    StrictlyAbove,
    StrictlyBelow,
    Incomparable,
}

impl Verdict {
    /// Combines the two weak-preference directions into a verdict.
    pub fn from_directions(forward: bool, backward: bool) -> Verdict {
        match (forward, backward) {
            (true, true) => Verdict::Equivalent,
            (true, false) => Verdict::StrictlyAbove,
            (false, true) => Verdict::StrictlyBelow,
            (false, false) => Verdict::Incomparable,
        }
    }

    pub fn mirror(self) -> Verdict {
        match self {
            Verdict::StrictlyAbove => Verdict::StrictlyBelow,
            Verdict::StrictlyBelow => Verdict::StrictlyAbove,
            v => v,
        }
    }

    /// Weak preference in the forward direction.
    pub fn is_weakly_above(self) -> bool {
        matches!(self, Verdict::Equivalent | Verdict::StrictlyAbove)
    }

    pub fn is_incomparable(self) -> bool {
        matches!(self, Verdict::Incomparable)
    }

    /// Comparable in either direction.
    pub fn is_comparable(self) -> bool {
        !self.is_incomparable()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Equivalent => "equivalent",
            Verdict::StrictlyAbove => "strictly-above",
            Verdict::StrictlyBelow => "strictly-below",
            Verdict::Incomparable => "incomparable",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named comparator over outcomes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OutcomePreorder {
    /// Weak preference iff coordinate-wise dominance; tradeoffs are always
    /// incomparable. Works in any dimension.
    ParetoBox,
    /// Two-dimensional order from a pair of negative-slope lines: weak
    /// preference iff the displacement clears both `y = -l x` and `y = -m x`.
    Lines { l: Rational, m: Rational },
    /// Product of finitely many declared ordinal dimensions; weak preference
    /// iff dimension-wise weak preference on every coordinate.
    Qualitative(Arc<QualSpace>),
}

impl OutcomePreorder {
    pub fn pareto_box() -> Self {
        OutcomePreorder::ParetoBox
    }

    /// Validates the slopes: both positive, distinct.
    pub fn lines(l: Rational, m: Rational) -> Result<Self> {
        if !l.is_positive() || !m.is_positive() {
            return Err(Error::BadOrderSpec(format!(
                "lines slopes must be positive, got {} and {}",
                format_rational(&l),
                format_rational(&m)
            )));
        }
        if l == m {
            return Err(Error::BadOrderSpec(format!(
                "lines slopes must be distinct, got {} twice",
                format_rational(&l)
            )));
        }
        Ok(OutcomePreorder::Lines { l, m })
    }

    pub fn qualitative(space: Arc<QualSpace>) -> Self {
        OutcomePreorder::Qualitative(space)
    }

    /// Parses a CLI order spec: `"pareto"` or `"lines:L,M"`.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let s = spec.trim();
        if s == "pareto" {
            return Ok(OutcomePreorder::ParetoBox);
        }
        if let Some(rest) = s.strip_prefix("lines:") {
            let (l, m) = rest
                .split_once(',')
                .ok_or_else(|| Error::BadOrderSpec(format!("expected lines:L,M, got {spec:?}")))?;
            return OutcomePreorder::lines(parse_rational(l)?, parse_rational(m)?);
        }
        Err(Error::BadOrderSpec(format!(
            "expected \"pareto\" or \"lines:L,M\", got {spec:?}"
        )))
    }

    /// Human-readable spec string, inverse of `parse_spec` for CLI orders.
    pub fn spec_string(&self) -> String {
        match self {
            OutcomePreorder::ParetoBox => "pareto".to_string(),
            OutcomePreorder::Lines { l, m } => {
                format!("lines:{},{}", format_rational(l), format_rational(m))
            }
            OutcomePreorder::Qualitative(space) => format!("qualitative:{}", space.name()),
        }
    }

    /// Weak preference `a ⪰ b` under this order.
    pub fn weakly_prefers(&self, a: &Outcome, b: &Outcome) -> Result<bool> {
        if a.dim() != b.dim() {
            return Err(Error::DimensionMismatch {
                left: a.dim(),
                right: b.dim(),
            });
        }
        match self {
            OutcomePreorder::ParetoBox => Ok(a.dominates_weakly(b)),
            OutcomePreorder::Lines { l, m } => {
                if a.dim() != 2 {
                    return Err(Error::OrderUnsupported(format!(
                        "lines order is defined on dimension 2 only, got {}",
                        a.dim()
                    )));
                }
                let dx = a.coord(0) - b.coord(0);
                let dy = a.coord(1) - b.coord(1);
                // above both lines through b: dy >= -l dx and dy >= -m dx
                Ok(!(&dy + l * &dx).is_negative() && !(&dy + m * &dx).is_negative())
            }
            OutcomePreorder::Qualitative(space) => space.weakly_prefers(a, b),
        }
    }

    /// Full four-way comparison by exact inequality evaluation.
    pub fn compare(&self, a: &Outcome, b: &Outcome) -> Result<Verdict> {
        Ok(Verdict::from_directions(
            self.weakly_prefers(a, b)?,
            self.weakly_prefers(b, a)?,
        ))
    }
}

/// Which reading of the k-incomparability thresholds to apply.
///
/// The definition states forcing at distance `n/k` or more with an
/// incomparability interval of length `n/2k`; the worked fact derives forcing
/// at the boundary of a band of half-width `n/(2k)`. The two disagree, so
/// both are implemented; replays use the proof reading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum KInterpretation {
    #[default]
    ProofReading,
    LiteralDefinition,
}

/// What k-incomparability forces for a point on the segment of a two-point
/// uniform unidimensional lottery.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KVerdict {
    /// The lottery `a/b` is strictly preferred to the point.
    ForcedPreferred,
    /// The point is strictly preferred to the lottery `a/b`.
    ForcedDispreferred,
    ForcedIncomparable,
    Unconstrained,
}

impl KVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            KVerdict::ForcedPreferred => "forced-preferred",
            KVerdict::ForcedDispreferred => "forced-dispreferred",
            KVerdict::ForcedIncomparable => "forced-incomparable",
            KVerdict::Unconstrained => "unconstrained",
        }
    }
}

/// Classifies `c` on the closed segment between `a` and `b` (which must be
/// distinct and unidimensional with each other) relative to the uniform
/// lottery `a/b`, for a constraint parameter `k > 0`.
///
/// Orientation is fixed by the Pareto-strict direction along the segment:
/// displacement is signed positive toward the endpoint whose varying
/// coordinate is larger. Boundary points are forced, not unconstrained.
pub fn k_classify(
    k: &Rational,
    a: &Outcome,
    b: &Outcome,
    c: &Outcome,
    interp: KInterpretation,
) -> Result<KVerdict> {
    if !k.is_positive() {
        return Err(Error::BadOrderSpec(format!(
            "k must be positive, got {}",
            format_rational(k)
        )));
    }
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: b.dim(),
        });
    }
    if a == b {
        return Err(Error::BadSegment("endpoints are equal".to_string()));
    }
    if !outcomes_unidimensional(a, b) {
        return Err(Error::BadSegment(format!(
            "{a} and {b} are not unidimensional"
        )));
    }
    if c.dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: c.dim(),
        });
    }
    // the single varying coordinate
    let axis = (0..a.dim())
        .find(|&i| a.coord(i) != b.coord(i))
        .expect("distinct endpoints");
    for i in 0..a.dim() {
        if i != axis && c.coord(i) != a.coord(i) {
            return Err(Error::OffSegment(format!(
                "{c} leaves the segment at coordinate {i}"
            )));
        }
    }
    let (lo, hi) = if a.coord(axis) < b.coord(axis) {
        (a.coord(axis), b.coord(axis))
    } else {
        (b.coord(axis), a.coord(axis))
    };
    let v = c.coord(axis);
    if v < lo || v > hi {
        return Err(Error::OffSegment(format!("{c} is outside [{a}, {b}]")));
    }
    let length = hi - lo;
    let midpoint = (lo + hi) / crate::rational::rat_int(2);
    // signed displacement toward the Pareto-better (larger-coordinate) end
    let d = v - midpoint;
    let (incomparable_halfwidth, forcing_distance) = match interp {
        KInterpretation::ProofReading => {
            let h = &length / (crate::rational::rat_int(2) * k);
            (h.clone(), h)
        }
        KInterpretation::LiteralDefinition => {
            (&length / (crate::rational::rat_int(4) * k), &length / k)
        }
    };
    if d.abs() < incomparable_halfwidth {
        Ok(KVerdict::ForcedIncomparable)
    } else if d <= -forcing_distance.clone() {
        Ok(KVerdict::ForcedPreferred)
    } else if d >= forcing_distance {
        Ok(KVerdict::ForcedDispreferred)
    } else {
        Ok(KVerdict::Unconstrained)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn o2(x: i64, y: i64) -> Outcome {
        Outcome::pair(rat_int(x), rat_int(y))
    }

    #[test]
    fn pareto_box_examples() {
        let p = OutcomePreorder::pareto_box();
        assert_eq!(
            p.compare(&o2(1, 1), &o2(0, 0)).unwrap(),
            Verdict::StrictlyAbove
        );
        assert_eq!(
            p.compare(&o2(4, -2), &o2(0, 0)).unwrap(),
            Verdict::Incomparable
        );
        assert_eq!(
            p.compare(&o2(3, 3), &o2(3, 3)).unwrap(),
            Verdict::Equivalent
        );
        assert_eq!(
            p.compare(&o2(0, 0), &o2(1, 1)).unwrap(),
            Verdict::StrictlyBelow
        );
    }

    #[test]
    fn lines_direct_substitution() {
        // slopes 2 and 1/2: (2,-2) clears the shallow line in neither direction
        let lines = OutcomePreorder::lines(rat_int(2), rat(1, 2)).unwrap();
        assert_eq!(
            lines.compare(&o2(2, -2), &o2(0, 0)).unwrap(),
            Verdict::Incomparable
        );
        assert_eq!(
            lines.compare(&o2(1, 3), &o2(0, 0)).unwrap(),
            Verdict::StrictlyAbove
        );
        assert_eq!(
            lines.compare(&o2(0, 0), &o2(1, 3)).unwrap(),
            Verdict::StrictlyBelow
        );
        assert_eq!(
            lines.compare(&o2(0, 0), &o2(0, 0)).unwrap(),
            Verdict::Equivalent
        );
    }

    #[test]
    fn lines_validation() {
        assert!(OutcomePreorder::lines(rat_int(2), rat_int(2)).is_err());
        assert!(OutcomePreorder::lines(rat_int(-1), rat_int(2)).is_err());
        assert!(OutcomePreorder::lines(rat_int(0), rat_int(2)).is_err());
        let lines = OutcomePreorder::lines(rat_int(2), rat(1, 2)).unwrap();
        let o3 = Outcome::new(vec![rat_int(0), rat_int(0), rat_int(0)]);
        assert!(lines.compare(&o3, &o3).is_err());
    }

    #[test]
    fn order_spec_strings() {
        let p = OutcomePreorder::parse_spec("pareto").unwrap();
        assert_eq!(p, OutcomePreorder::ParetoBox);
        let l = OutcomePreorder::parse_spec("lines:2,1/2").unwrap();
        assert_eq!(l, OutcomePreorder::lines(rat_int(2), rat(1, 2)).unwrap());
        assert_eq!(l.spec_string(), "lines:2,1/2");
        assert!(OutcomePreorder::parse_spec("lines:2").is_err());
        assert!(OutcomePreorder::parse_spec("boxes").is_err());
    }

    #[test]
    fn k_classify_forced_preferred_at_boundary() {
        let v = k_classify(
            &rat_int(4),
            &o2(0, 4),
            &o2(0, -4),
            &o2(0, -1),
            KInterpretation::ProofReading,
        )
        .unwrap();
        assert_eq!(v, KVerdict::ForcedPreferred);
    }

    #[test]
    fn k_classify_midpoint_incomparable() {
        let v = k_classify(
            &rat_int(4),
            &o2(0, 4),
            &o2(0, -4),
            &o2(0, 0),
            KInterpretation::ProofReading,
        )
        .unwrap();
        assert_eq!(v, KVerdict::ForcedIncomparable);
    }

    #[test]
    fn k_classify_short_segment_midpoint() {
        // segment of length 4, half-width 1/2: the midpoint is inside the band
        let v = k_classify(
            &rat_int(4),
            &o2(4, 0),
            &o2(4, -4),
            &o2(4, -2),
            KInterpretation::ProofReading,
        )
        .unwrap();
        assert_eq!(v, KVerdict::ForcedIncomparable);
        // and the band boundary points force in each direction
        let above = Outcome::pair(rat_int(4), rat(-3, 2));
        let below = Outcome::pair(rat_int(4), rat(-5, 2));
        assert_eq!(
            k_classify(
                &rat_int(4),
                &o2(4, 0),
                &o2(4, -4),
                &above,
                KInterpretation::ProofReading
            )
            .unwrap(),
            KVerdict::ForcedDispreferred
        );
        assert_eq!(
            k_classify(
                &rat_int(4),
                &o2(4, 0),
                &o2(4, -4),
                &below,
                KInterpretation::ProofReading
            )
            .unwrap(),
            KVerdict::ForcedPreferred
        );
    }

    #[test]
    fn k_classify_literal_reading_differs() {
        // literal thresholds: band half-width n/(4k), forcing at n/k
        let k = rat_int(4);
        let (a, b) = (o2(0, 4), o2(0, -4));
        assert_eq!(
            k_classify(&k, &a, &b, &o2(0, -1), KInterpretation::LiteralDefinition).unwrap(),
            KVerdict::Unconstrained
        );
        assert_eq!(
            k_classify(&k, &a, &b, &o2(0, -2), KInterpretation::LiteralDefinition).unwrap(),
            KVerdict::ForcedPreferred
        );
        assert_eq!(
            k_classify(&k, &a, &b, &o2(0, 0), KInterpretation::LiteralDefinition).unwrap(),
            KVerdict::ForcedIncomparable
        );
    }

    #[test]
    fn k_classify_rejects_bad_segments() {
        let k = rat_int(4);
        assert!(matches!(
            k_classify(
                &k,
                &o2(0, 4),
                &o2(0, 4),
                &o2(0, 4),
                KInterpretation::ProofReading
            ),
            Err(Error::BadSegment(_))
        ));
        assert!(matches!(
            k_classify(
                &k,
                &o2(0, 4),
                &o2(4, 0),
                &o2(2, 2),
                KInterpretation::ProofReading
            ),
            Err(Error::BadSegment(_))
        ));
        assert!(matches!(
            k_classify(
                &k,
                &o2(0, 4),
                &o2(0, -4),
                &o2(0, 5),
                KInterpretation::ProofReading
            ),
            Err(Error::OffSegment(_))
        ));
        assert!(matches!(
            k_classify(
                &k,
                &o2(0, 4),
                &o2(0, -4),
                &o2(1, 0),
                KInterpretation::ProofReading
            ),
            Err(Error::OffSegment(_))
        ));
        assert!(matches!(
            k_classify(
                &rat_int(0),
                &o2(0, 4),
                &o2(0, -4),
                &o2(0, 0),
                KInterpretation::ProofReading
            ),
            Err(Error::BadOrderSpec(_))
        ));
    }
}
