//! Products of finitely many ordinal dimensions: declared dimension-level
//! preorders, dimension-level lottery facts, the qualitative Pareto /
//! Converse-Pareto lift, unanimous-equivalence forcing, and the
//! unidimensional-dimensional-separability checker.
//!
//! Qualitative outcomes are encoded as ordinary [`Outcome`] vectors whose
//! coordinate `i` is the integer position of a label in dimension `i`. The
//! full product space is available by construction, so Recombination holds:
//! any coordinate swap of valid outcomes is a valid outcome.

use std::sync::Arc;

use num_traits::ToPrimitive;

use crate::axioms::{AxiomReport, Verdict3, Witness};
use crate::lottery::{mix, Lottery, Outcome};
use crate::order::Verdict;
use crate::rational::{rat_int, Rational};
use crate::relation::{Relation, Universe};
use crate::{Error, Result};

/// Declared facts about dimension-level lotteries, the only two shapes the
/// appendix replays consume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimFact {
    /// `a α c ∼_i b` (label indices into the dimension).
    MixIndifferent {
        a: usize,
        c: usize,
        alpha: Rational,
        b: usize,
    },
    /// `c ⪰_i (b β d)`.
    OutcomeAboveMix {
        c: usize,
        b: usize,
        beta: Rational,
        d: usize,
    },
}

/// One ordinal dimension: labels, a declared weak order closed to a preorder,
/// and declared lottery facts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionSpec {
    name: String,
    labels: Vec<String>,
    /// weak[a * n + b] is `a ⪰_i b`; reflexive-transitive by construction.
    weak: Vec<bool>,
    facts: Vec<DimFact>,
}

impl DimensionSpec {
    /// Builds a dimension from declared weak pairs; the order is closed
    /// reflexively and transitively.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        declared_pairs: &[(usize, usize)],
    ) -> Result<Self> {
        let name = name.into();
        let n = labels.len();
        if n == 0 {
            return Err(Error::BadOrderSpec(format!(
                "dimension {name} has no labels"
            )));
        }
        let mut weak = vec![false; n * n];
        for i in 0..n {
            weak[i * n + i] = true;
        }
        for &(a, b) in declared_pairs {
            if a >= n || b >= n {
                return Err(Error::DanglingReference {
                    index: a.max(b),
                    len: n,
                });
            }
            weak[a * n + b] = true;
        }
        // Warshall closure
        for k in 0..n {
            for i in 0..n {
                if weak[i * n + k] {
                    for j in 0..n {
                        if weak[k * n + j] {
                            weak[i * n + j] = true;
                        }
                    }
                }
            }
        }
        Ok(DimensionSpec {
            name,
            labels,
            weak,
            facts: Vec::new(),
        })
    }

    /// A strict chain, best label first: `labels[0] ≻ labels[1] ≻ ...`.
    pub fn chain(name: impl Into<String>, labels: &[&str]) -> Result<Self> {
        let owned: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let mut pairs = Vec::new();
        for i in 0..owned.len() {
            for j in i + 1..owned.len() {
                pairs.push((i, j));
            }
        }
        DimensionSpec::new(name, owned, &pairs)
    }

    pub fn with_fact(mut self, fact: DimFact) -> Result<Self> {
        let n = self.labels.len();
        let refs: Vec<usize> = match &fact {
            DimFact::MixIndifferent { a, c, b, .. } => vec![*a, *c, *b],
            DimFact::OutcomeAboveMix { c, b, d, .. } => vec![*c, *b, *d],
        };
        for r in refs {
            if r >= n {
                return Err(Error::DanglingReference { index: r, len: n });
            }
        }
        self.facts.push(fact);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn facts(&self) -> &[DimFact] {
        &self.facts
    }

    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel {
                dimension: self.name.clone(),
                label: label.to_string(),
            })
    }

    pub fn weakly_prefers(&self, a: usize, b: usize) -> bool {
        self.weak[a * self.labels.len() + b]
    }
}

/// A finite product of dimensions, usable as an [`crate::order::OutcomePreorder`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QualSpace {
    name: String,
    dims: Vec<DimensionSpec>,
}

impl QualSpace {
    pub fn new(name: impl Into<String>, dims: Vec<DimensionSpec>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::BadOrderSpec(
                "qualitative space needs at least one dimension".into(),
            ));
        }
        Ok(QualSpace {
            name: name.into(),
            dims,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dims(&self) -> &[DimensionSpec] {
        &self.dims
    }

    /// Encodes labels (one per dimension) as an integer-coordinate outcome.
    pub fn outcome(&self, labels: &[&str]) -> Result<Outcome> {
        if labels.len() != self.dims.len() {
            return Err(Error::DimensionMismatch {
                left: labels.len(),
                right: self.dims.len(),
            });
        }
        let mut coords = Vec::with_capacity(labels.len());
        for (dim, label) in self.dims.iter().zip(labels) {
            coords.push(rat_int(dim.label_index(label)? as i64));
        }
        Ok(Outcome::new(coords))
    }

    /// Decodes coordinate `i` of an encoded outcome back to a label index.
    pub fn decode(&self, o: &Outcome, i: usize) -> Result<usize> {
        let dim = &self.dims[i];
        let c = o.coord(i);
        let idx = if c.is_integer() {
            c.numer().to_usize()
        } else {
            None
        };
        match idx {
            Some(idx) if idx < dim.labels.len() => Ok(idx),
            _ => Err(Error::UnknownLabel {
                dimension: dim.name.clone(),
                label: crate::rational::format_rational(c),
            }),
        }
    }

    /// Human-readable label tuple for an encoded outcome, e.g. `(a1,d2)`.
    pub fn display_outcome(&self, o: &Outcome) -> Result<String> {
        let mut parts = Vec::with_capacity(self.dims.len());
        for i in 0..self.dims.len() {
            parts.push(self.dims[i].labels[self.decode(o, i)?].clone());
        }
        Ok(format!("({})", parts.join(",")))
    }

    /// Weak preference iff dimension-wise weak preference in every coordinate
    /// (Pareto and Converse Pareto jointly make this exact).
    pub fn weakly_prefers(&self, a: &Outcome, b: &Outcome) -> Result<bool> {
        if a.dim() != self.dims.len() || b.dim() != self.dims.len() {
            return Err(Error::DimensionMismatch {
                left: a.dim(),
                right: self.dims.len(),
            });
        }
        for i in 0..self.dims.len() {
            if !self.dims[i].weakly_prefers(self.decode(a, i)?, self.decode(b, i)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Four-way comparison under the product order.
    pub fn compare(&self, a: &Outcome, b: &Outcome) -> Result<Verdict> {
        Ok(Verdict::from_directions(
            self.weakly_prefers(a, b)?,
            self.weakly_prefers(b, a)?,
        ))
    }
}

/// A product-level pair forced by Unanimous Equivalence:
/// `mix(u, v, alpha) ∼ target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcedPair {
    pub mixture: Lottery,
    pub target: Lottery,
}

/// Emits every product-level pair forced by Unanimous Equivalence at a common
/// mixing weight `alpha`: one usable dimension-level fact per dimension,
/// combined in all orientations. A dimension with no usable fact at `alpha`
/// forces nothing, so the result is empty.
pub fn derive_unanimous_equivalence(
    space: &QualSpace,
    alpha: &Rational,
) -> Result<Vec<ForcedPair>> {
    let one_minus = Rational::from_integer(1.into()) - alpha;
    // usable (u, v, b) per dimension: "u alpha v ∼ b"
    let mut usable: Vec<Vec<(usize, usize, usize)>> = Vec::new();
    for dim in space.dims() {
        let mut triples = Vec::new();
        for fact in dim.facts() {
            if let DimFact::MixIndifferent { a, c, alpha: w, b } = fact {
                if w == alpha {
                    triples.push((*a, *c, *b));
                }
                if *w == one_minus {
                    triples.push((*c, *a, *b));
                }
            }
        }
        if triples.is_empty() {
            return Ok(Vec::new());
        }
        triples.sort_unstable();
        triples.dedup();
        usable.push(triples);
    }
    // cartesian product over dimensions
    let mut combos: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new()];
    for triples in &usable {
        let mut next = Vec::new();
        for combo in &combos {
            for t in triples {
                let mut c = combo.clone();
                c.push(*t);
                next.push(c);
            }
        }
        combos = next;
    }
    let mut out = Vec::new();
    for combo in combos {
        let u = Outcome::new(combo.iter().map(|(u, _, _)| rat_int(*u as i64)).collect());
        let v = Outcome::new(combo.iter().map(|(_, v, _)| rat_int(*v as i64)).collect());
        let b = Outcome::new(combo.iter().map(|(_, _, b)| rat_int(*b as i64)).collect());
        let mixture = mix(&Lottery::degenerate(u), &Lottery::degenerate(v), alpha)?;
        out.push(ForcedPair {
            mixture,
            target: Lottery::degenerate(b),
        });
    }
    out.sort_by(|a, b| (&a.mixture, &a.target).cmp(&(&b.mixture, &b.target)));
    out.dedup();
    Ok(out)
}

/// Embeds a dimension-level lottery over dimension `i` at a fixed context
/// (labels for every other dimension, given as a full outcome whose
/// coordinate `i` is ignored).
fn embed(
    _space: &QualSpace,
    i: usize,
    parts: &[(usize, Rational)],
    context: &Outcome,
) -> Result<Lottery> {
    let entries = parts.iter().map(|(label, p)| {
        let mut coords: Vec<Rational> = context.coords().to_vec();
        coords[i] = rat_int(*label as i64);
        (Outcome::new(coords), p.clone())
    });
    Lottery::new(entries)
}

fn contexts(space: &QualSpace, skip: usize) -> Vec<Outcome> {
    let mut acc: Vec<Vec<Rational>> = vec![Vec::new()];
    for (d, dim) in space.dims().iter().enumerate() {
        let mut next = Vec::new();
        for prefix in &acc {
            if d == skip {
                // placeholder, overwritten by embed
                let mut c = prefix.clone();
                c.push(rat_int(0));
                next.push(c);
            } else {
                for l in 0..dim.labels().len() {
                    let mut c = prefix.clone();
                    c.push(rat_int(l as i64));
                    next.push(c);
                }
            }
        }
        acc = next;
    }
    acc.into_iter().map(Outcome::new).collect()
}

/// Checks Unidimensional Dimensional Separability against a closed relation:
/// every declared dimension-level fact, embedded at every context whose
/// embeddings are present in the universe, must be mirrored by the product
/// relation. Existence cannot be refuted on a finite universe, so a space
/// with no checkable embedding reports not-determinable.
pub fn check_uds(space: &QualSpace, universe: &Universe, rel: &Relation) -> Result<AxiomReport> {
    let mut report = AxiomReport::new("unidimensional-dimensional-separability");
    if space.dims().len() <= 1 {
        report.verdict = Verdict3::Holds;
        report
            .notes
            .push("single-dimension space: holds vacuously".into());
        return Ok(report);
    }
    if space.dims().iter().all(|d| d.facts().is_empty()) {
        report.verdict = Verdict3::NotDeterminable;
        report
            .notes
            .push("no declared dimension-level facts".into());
        return Ok(report);
    }
    let one = Rational::from_integer(1.into());
    let mut checked = 0usize;
    for (i, dim) in space.dims().iter().enumerate() {
        for fact in dim.facts() {
            for context in contexts(space, i) {
                let (lhs, rhs, want_equiv) = match fact {
                    DimFact::MixIndifferent { a, c, alpha, b } => {
                        let mixture = embed(
                            space,
                            i,
                            &[(*a, alpha.clone()), (*c, &one - alpha)],
                            &context,
                        )?;
                        let target = embed(space, i, &[(*b, one.clone())], &context)?;
                        (mixture, target, true)
                    }
                    DimFact::OutcomeAboveMix { c, b, beta, d } => {
                        let above = embed(space, i, &[(*c, one.clone())], &context)?;
                        let mixture =
                            embed(space, i, &[(*b, beta.clone()), (*d, &one - beta)], &context)?;
                        (above, mixture, false)
                    }
                };
                let (Some(li), Some(ri)) = (universe.position(&lhs), universe.position(&rhs))
                else {
                    continue;
                };
                checked += 1;
                let ok = if want_equiv {
                    rel.weak(li, ri) && rel.weak(ri, li)
                } else {
                    rel.weak(li, ri)
                };
                if !ok {
                    report.witnesses.push(Witness {
                        items: vec![li, ri],
                        outcomes: vec![],
                        note: format!(
                            "dimension {} fact embedded at context {} is not mirrored by the relation",
                            dim.name(),
                            space.display_outcome(&context)?
                        ),
                    });
                }
            }
        }
    }
    report
        .notes
        .push(format!("embedded instances checked: {checked}"));
    report.verdict = if !report.witnesses.is_empty() {
        Verdict3::Violated
    } else if checked == 0 {
        report
            .notes
            .push("no embedded instance present in the universe".into());
        Verdict3::NotDeterminable
    } else {
        Verdict3::Holds
    };
    Ok(report)
}

/// Convenience wrapper making a qualitative space usable wherever an outcome
/// preorder is expected.
pub fn qual_order(space: QualSpace) -> crate::order::OutcomePreorder {
    crate::order::OutcomePreorder::qualitative(Arc::new(space))
}

/// Builds the mixture weights map used by the appendix replays.
pub fn uniform_parts(a: usize, b: usize) -> Vec<(usize, Rational)> {
    let half = Rational::new(1.into(), 2.into());
    vec![(a, half.clone()), (b, half)]
}

/// Public embedding helper for replays: the unidimensional lottery over
/// dimension `i` with given label masses, at a fixed context.
pub fn embed_lottery(
    space: &QualSpace,
    i: usize,
    parts: &[(usize, Rational)],
    context: &Outcome,
) -> Result<Lottery> {
    embed(space, i, parts, context)
}

/// All product outcomes of the space, in canonical order.
pub fn all_outcomes(space: &QualSpace) -> Vec<Outcome> {
    let mut acc: Vec<Vec<Rational>> = vec![Vec::new()];
    for dim in space.dims() {
        let mut next = Vec::new();
        for prefix in &acc {
            for l in 0..dim.labels().len() {
                let mut c = prefix.clone();
                c.push(rat_int(l as i64));
                next.push(c);
            }
        }
        acc = next;
    }
    let mut v: Vec<Outcome> = acc.into_iter().map(Outcome::new).collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn two_chains() -> QualSpace {
        let d1 = DimensionSpec::chain("d1", &["a1", "b1", "c1", "d1"]).unwrap();
        let d2 = DimensionSpec::chain("d2", &["a2", "b2", "c2", "d2"]).unwrap();
        QualSpace::new("chains", vec![d1, d2]).unwrap()
    }

    #[test]
    fn qual_compare_chains() {
        let s = two_chains();
        let top = s.outcome(&["a1", "a2"]).unwrap();
        let bottom = s.outcome(&["d1", "d2"]).unwrap();
        assert_eq!(s.compare(&top, &bottom).unwrap(), Verdict::StrictlyAbove);
        let mixed = s.outcome(&["a1", "d2"]).unwrap();
        let mid = s.outcome(&["c1", "c2"]).unwrap();
        assert_eq!(s.compare(&mixed, &mid).unwrap(), Verdict::Incomparable);
        assert_eq!(s.compare(&mid, &mid).unwrap(), Verdict::Equivalent);
    }

    #[test]
    fn unknown_labels_are_rejected() {
        let s = two_chains();
        assert!(matches!(
            s.outcome(&["a1", "z9"]),
            Err(Error::UnknownLabel { .. })
        ));
        let bad = Outcome::pair(rat(1, 2), rat_int(0));
        assert!(s.weakly_prefers(&bad, &bad).is_err());
    }

    #[test]
    fn unanimous_equivalence_mixes_and_matches() {
        let half = rat(1, 2);
        let d1 = DimensionSpec::chain("d1", &["a1", "b1", "c1", "d1"])
            .unwrap()
            .with_fact(DimFact::MixIndifferent {
                a: 0,
                c: 3,
                alpha: half.clone(),
                b: 1,
            })
            .unwrap();
        let d2 = DimensionSpec::chain("d2", &["a2", "b2", "c2", "d2"])
            .unwrap()
            .with_fact(DimFact::MixIndifferent {
                a: 0,
                c: 3,
                alpha: half.clone(),
                b: 1,
            })
            .unwrap();
        let s = QualSpace::new("chains", vec![d1, d2]).unwrap();
        let forced = derive_unanimous_equivalence(&s, &half).unwrap();
        // straight and mixed-and-matched products
        let straight = mix(
            &Lottery::degenerate(s.outcome(&["a1", "a2"]).unwrap()),
            &Lottery::degenerate(s.outcome(&["d1", "d2"]).unwrap()),
            &half,
        )
        .unwrap();
        let crossed = mix(
            &Lottery::degenerate(s.outcome(&["a1", "d2"]).unwrap()),
            &Lottery::degenerate(s.outcome(&["d1", "a2"]).unwrap()),
            &half,
        )
        .unwrap();
        let target = Lottery::degenerate(s.outcome(&["b1", "b2"]).unwrap());
        assert!(forced
            .iter()
            .any(|p| p.mixture == straight && p.target == target));
        assert!(forced
            .iter()
            .any(|p| p.mixture == crossed && p.target == target));
    }

    #[test]
    fn unanimous_equivalence_needs_every_dimension() {
        let half = rat(1, 2);
        let d1 = DimensionSpec::chain("d1", &["a1", "b1", "c1", "d1"])
            .unwrap()
            .with_fact(DimFact::MixIndifferent {
                a: 0,
                c: 3,
                alpha: half.clone(),
                b: 1,
            })
            .unwrap();
        let d2 = DimensionSpec::chain("d2", &["a2", "b2", "c2", "d2"]).unwrap();
        let s = QualSpace::new("chains", vec![d1, d2]).unwrap();
        assert!(derive_unanimous_equivalence(&s, &half).unwrap().is_empty());
    }

    #[test]
    fn unanimous_equivalence_at_alpha_one_is_degenerate() {
        let one = rat_int(1);
        let d1 = DimensionSpec::chain("d1", &["a1", "b1"])
            .unwrap()
            .with_fact(DimFact::MixIndifferent {
                a: 0,
                c: 1,
                alpha: one.clone(),
                b: 1,
            })
            .unwrap();
        let s = QualSpace::new("one-dim", vec![d1]).unwrap();
        let forced = derive_unanimous_equivalence(&s, &one).unwrap();
        assert_eq!(forced.len(), 1);
        assert_eq!(
            forced[0].mixture,
            Lottery::degenerate(s.outcome(&["a1"]).unwrap())
        );
        assert_eq!(
            forced[0].target,
            Lottery::degenerate(s.outcome(&["b1"]).unwrap())
        );
    }

    #[test]
    fn check_uds_is_three_valued() {
        use crate::relation::{build_closure, GeneratorSet, Universe};
        // no declared facts: not-determinable
        let bare = two_chains();
        let items: Vec<Lottery> = all_outcomes(&bare)
            .into_iter()
            .map(Lottery::degenerate)
            .collect();
        let u = Universe::new(items).unwrap();
        let (rel, _) = build_closure(
            &u,
            &crate::order::OutcomePreorder::qualitative(std::sync::Arc::new(bare.clone())),
            &GeneratorSet::new(vec![]),
        )
        .unwrap();
        let report = check_uds(&bare, &u, &rel).unwrap();
        assert_eq!(report.verdict, Verdict3::NotDeterminable);

        // single dimension: holds vacuously
        let single =
            QualSpace::new("one", vec![DimensionSpec::chain("d", &["a", "b"]).unwrap()]).unwrap();
        let report = check_uds(&single, &u, &rel).unwrap();
        assert_eq!(report.verdict, Verdict3::Holds);

        // a declared fact whose embedding the relation contradicts: violated
        let half = rat(1, 2);
        let d1 = DimensionSpec::chain("d1", &["a1", "b1", "c1", "d1"])
            .unwrap()
            .with_fact(DimFact::MixIndifferent {
                a: 0,
                c: 3,
                alpha: half.clone(),
                b: 1,
            })
            .unwrap();
        let d2 = DimensionSpec::chain("d2", &["a2", "b2", "c2", "d2"]).unwrap();
        let space = QualSpace::new("facts", vec![d1, d2]).unwrap();
        let context = space.outcome(&["a1", "b2"]).unwrap();
        let embedded = embed_lottery(&space, 0, &uniform_parts(0, 3), &context).unwrap();
        let target = Lottery::degenerate(space.outcome(&["b1", "b2"]).unwrap());
        let mut items: Vec<Lottery> = all_outcomes(&space)
            .into_iter()
            .map(Lottery::degenerate)
            .collect();
        items.push(embedded);
        let u = Universe::new(items).unwrap();
        let order = crate::order::OutcomePreorder::qualitative(std::sync::Arc::new(space.clone()));
        // closed without the embedding pair: the biconditional fails
        let (rel, _) = build_closure(&u, &order, &GeneratorSet::new(vec![])).unwrap();
        let report = check_uds(&space, &u, &rel).unwrap();
        assert_eq!(report.verdict, Verdict3::Violated);
        // declaring the pair repairs it
        let mut gens = GeneratorSet::new(vec![]);
        gens.declare_both(u.len() - 1, u.position(&target).unwrap(), "uds");
        let (rel, _) = build_closure(&u, &order, &gens).unwrap();
        let report = check_uds(&space, &u, &rel).unwrap();
        assert_eq!(report.verdict, Verdict3::Holds);
    }

    #[test]
    fn recombination_by_construction() {
        let s = two_chains();
        let all = all_outcomes(&s);
        assert_eq!(all.len(), 16);
        // any coordinate swap of valid outcomes is a valid outcome
        for a in &all {
            for b in &all {
                let swapped = Outcome::pair(a.coord(0).clone(), b.coord(1).clone());
                assert!(all.contains(&swapped));
            }
        }
    }
}
