//! Finite universes of lotteries, generator rules, and the minimal
//! reflexive-transitive closure those generators induce — the object in which
//! the consistency theory and every impossibility replay are materialized.
//!
//! Universes are fully materialized and closures computed by dense bitset
//! transitive closure; the target scale is a few hundred lotteries.
//! Construction is single-threaded and deterministic; a finished [`Relation`]
//! is immutable and safe to share.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_traits::Signed;

use crate::dominance;
use crate::lottery::{mix, Lottery, Outcome};
use crate::order::{OutcomePreorder, Verdict};
use crate::rational::Rational;
use crate::{Error, Result};

/// A deduplicated sequence of lotteries sharing one dimension. Order is
/// preserved as given (builders emit canonical order; declared generator
/// pairs reference positions, so positions must be stable).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Universe {
    items: Vec<Lottery>,
    index: BTreeMap<Lottery, usize>,
}

impl Universe {
    pub fn new(items: Vec<Lottery>) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptySupport);
        }
        let dim = items[0].dim();
        let mut index = BTreeMap::new();
        for (i, l) in items.iter().enumerate() {
            if l.dim() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: l.dim(),
                });
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::BadInput(format!(
                    "duplicate lottery in universe: {l}"
                )));
            }
        }
        Ok(Universe { items, index })
    }

    /// Deduplicates and sorts into the canonical (lexicographic) order.
    pub fn canonical(items: Vec<Lottery>) -> Result<Self> {
        let mut set: BTreeSet<Lottery> = BTreeSet::new();
        set.extend(items);
        Universe::new(set.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn lottery(&self, i: usize) -> &Lottery {
        &self.items[i]
    }

    pub fn items(&self) -> &[Lottery] {
        &self.items
    }

    pub fn position(&self, l: &Lottery) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn dim(&self) -> usize {
        self.items[0].dim()
    }

    /// Position of the degenerate lottery on `o`, if present.
    pub fn degenerate_position(&self, o: &Outcome) -> Option<usize> {
        self.position(&Lottery::degenerate(o.clone()))
    }
}

/// Named rules contributing directed weak-preference pairs over a universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorRule {
    /// Degenerate lotteries ordered per the outcome preorder.
    OrderLift,
    /// `f ∼ exp(f)`, both directions, for every good `f`; requires the
    /// degenerate expectation to be present in the universe.
    GoodExpectations,
    /// A strict edge `f → g` whenever `f` stochastically dominates `g`.
    StochasticDominance,
}

impl GeneratorRule {
    pub fn as_str(self) -> &'static str {
        match self {
            GeneratorRule::OrderLift => "pareto-lift",
            GeneratorRule::GoodExpectations => "good-expectations",
            GeneratorRule::StochasticDominance => "stochastic-dominance",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "pareto-lift" => Ok(GeneratorRule::OrderLift),
            "good-expectations" => Ok(GeneratorRule::GoodExpectations),
            "stochastic-dominance" => Ok(GeneratorRule::StochasticDominance),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// An explicitly declared pair, e.g. an axiom-instance premise. The tag
/// documents which axiom instance the pair consumes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeclaredPair {
    pub from: usize,
    pub to: usize,
    pub both: bool,
    pub tag: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneratorSet {
    pub rules: Vec<GeneratorRule>,
    pub declared: Vec<DeclaredPair>,
}

impl GeneratorSet {
    pub fn new(rules: Vec<GeneratorRule>) -> Self {
        GeneratorSet {
            rules,
            declared: Vec::new(),
        }
    }

    pub fn declare(&mut self, from: usize, to: usize, tag: impl Into<String>) {
        self.declared.push(DeclaredPair {
            from,
            to,
            both: false,
            tag: tag.into(),
        });
    }

    pub fn declare_both(&mut self, from: usize, to: usize, tag: impl Into<String>) {
        self.declared.push(DeclaredPair {
            from,
            to,
            both: true,
            tag: tag.into(),
        });
    }
}

/// A finite reflexive-transitive boolean weak-preference matrix over a
/// universe, stored as bitset rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Relation {
    fn identity(n: usize) -> Self {
        let words = n.div_ceil(64);
        let mut rel = Relation {
            n,
            words,
            rows: vec![0; n * words],
        };
        for i in 0..n {
            rel.set(i, i);
        }
        rel
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    fn set(&mut self, i: usize, j: usize) {
        self.rows[i * self.words + j / 64] |= 1u64 << (j % 64);
    }

    fn clear(&mut self, i: usize, j: usize) {
        self.rows[i * self.words + j / 64] &= !(1u64 << (j % 64));
    }

    /// Weak preference `i ⪰ j`.
    pub fn weak(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn strict(&self, i: usize, j: usize) -> bool {
        self.weak(i, j) && !self.weak(j, i)
    }

    pub fn indifferent(&self, i: usize, j: usize) -> bool {
        self.weak(i, j) && self.weak(j, i)
    }

    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.weak(i, j) && !self.weak(j, i)
    }

    /// The four-way verdict for the ordered pair `(i, j)`.
    pub fn verdict(&self, i: usize, j: usize) -> Verdict {
        Verdict::from_directions(self.weak(i, j), self.weak(j, i))
    }

    fn close_transitively(&mut self) {
        let (n, words) = (self.n, self.words);
        for k in 0..n {
            let krow_start = k * words;
            for i in 0..n {
                if self.weak(i, k) {
                    let (irows, krows) = if i < k {
                        let (a, b) = self.rows.split_at_mut(krow_start);
                        (&mut a[i * words..i * words + words], &b[..words])
                    } else if i > k {
                        let (a, b) = self.rows.split_at_mut(i * words);
                        (&mut b[..words], &a[krow_start..krow_start + words])
                    } else {
                        continue;
                    };
                    for (iw, kw) in irows.iter_mut().zip(krows) {
                        *iw |= *kw;
                    }
                }
            }
        }
    }

    /// `true` when the matrix is reflexive and transitive (re-verification of
    /// the closure postcondition).
    pub fn is_preorder(&self) -> bool {
        self.reflexivity_witness().is_none() && self.transitivity_witness().is_none()
    }

    pub fn reflexivity_witness(&self) -> Option<usize> {
        (0..self.n).find(|&i| !self.weak(i, i))
    }

    pub fn transitivity_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for j in 0..self.n {
                if self.weak(i, j) {
                    for k in 0..self.n {
                        if self.weak(j, k) && !self.weak(i, k) {
                            return Some((i, j, k));
                        }
                    }
                }
            }
        }
        None
    }

    /// All ordered strict pairs, row-major.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.strict(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// All ordered indifferent pairs with distinct members.
    pub fn indifferent_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.indifferent(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    pub fn incomparable_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if i != j && self.incomparable(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Copy with one directed pair removed (no re-closure); used by the
    /// minimality probes.
    pub fn without_pair(&self, i: usize, j: usize) -> Relation {
        let mut copy = self.clone();
        copy.clear(i, j);
        copy
    }
}

/// The pairs a generator set contributed before closure, for audit.
#[derive(Clone, Debug, Default)]
pub struct GeneratedPairs {
    pub pairs: Vec<(usize, usize, String)>,
}

/// Builds the least reflexive-transitive superset of all generated pairs.
/// Deterministic; validates generator references and, for the
/// good-expectations rule, the presence of every needed expectation.
pub fn build_closure(
    universe: &Universe,
    order: &OutcomePreorder,
    generators: &GeneratorSet,
) -> Result<(Relation, GeneratedPairs)> {
    let n = universe.len();
    let mut rel = Relation::identity(n);
    let mut log = GeneratedPairs::default();
    let add = |rel: &mut Relation, i: usize, j: usize, tag: &str, log: &mut GeneratedPairs| {
        rel.set(i, j);
        log.pairs.push((i, j, tag.to_string()));
    };

    for rule in &generators.rules {
        match rule {
            GeneratorRule::OrderLift => {
                let degenerates: Vec<(usize, &Outcome)> = (0..n)
                    .filter_map(|i| universe.lottery(i).as_degenerate().map(|o| (i, o)))
                    .collect();
                for &(i, a) in &degenerates {
                    for &(j, b) in &degenerates {
                        if i != j && order.weakly_prefers(a, b)? {
                            add(&mut rel, i, j, "pareto-lift", &mut log);
                        }
                    }
                }
            }
            GeneratorRule::GoodExpectations => {
                for i in 0..n {
                    let f = universe.lottery(i);
                    if !f.is_good(order)? {
                        continue;
                    }
                    let e = f.expectation();
                    let j = universe.degenerate_position(&e).ok_or_else(|| {
                        Error::MissingExpectation {
                            lottery: f.to_string(),
                            expectation: e.to_string(),
                        }
                    })?;
                    if i != j {
                        add(&mut rel, i, j, "good-expectations", &mut log);
                        add(&mut rel, j, i, "good-expectations", &mut log);
                    }
                }
            }
            GeneratorRule::StochasticDominance => {
                let mut cache: BTreeMap<(usize, usize), Verdict> = BTreeMap::new();
                let outcome_ids: BTreeMap<&Outcome, usize> = {
                    let mut m = BTreeMap::new();
                    for l in universe.items() {
                        for o in l.support() {
                            let next = m.len();
                            m.entry(o).or_insert(next);
                        }
                    }
                    m
                };
                for i in 0..n {
                    for j in 0..n {
                        if i == j {
                            continue;
                        }
                        let f = universe.lottery(i);
                        let g = universe.lottery(j);
                        let verdict = dominance::check_stochastic_dominance_with(
                            f,
                            g,
                            &mut |a: &Outcome, b: &Outcome| {
                                let key = (outcome_ids[a], outcome_ids[b]);
                                if let Some(v) = cache.get(&key) {
                                    return Ok(*v);
                                }
                                let v = order.compare(a, b)?;
                                cache.insert(key, v);
                                Ok(v)
                            },
                        )?;
                        if verdict.dominates {
                            add(&mut rel, i, j, "stochastic-dominance", &mut log);
                        }
                    }
                }
            }
        }
    }

    for d in &generators.declared {
        for &idx in &[d.from, d.to] {
            if idx >= n {
                return Err(Error::DanglingReference { index: idx, len: n });
            }
        }
        add(&mut rel, d.from, d.to, &d.tag, &mut log);
        if d.both {
            add(&mut rel, d.to, d.from, &d.tag, &mut log);
        }
    }

    rel.close_transitively();
    debug_assert!(rel.is_preorder());
    Ok((rel, log))
}

/// The smallest universe containing `seeds` and closed under `mix(·,·,α)` for
/// the given weights, up to `depth` composition rounds. Output is canonical.
pub fn mixture_closure(
    seeds: &Universe,
    alphas: &[Rational],
    depth: usize,
    cap: usize,
) -> Result<Universe> {
    const MAX_DEPTH: usize = 3;
    if depth > MAX_DEPTH {
        return Err(Error::GuardExceeded {
            what: "mixture depth".into(),
            value: depth,
            limit: MAX_DEPTH,
        });
    }
    for alpha in alphas {
        if !alpha.is_positive() || alpha >= &Rational::from_integer(1.into()) {
            return Err(Error::AlphaOutOfRange(crate::rational::format_rational(
                alpha,
            )));
        }
    }
    let mut current: BTreeSet<Lottery> = seeds.items().iter().cloned().collect();
    for _ in 0..depth {
        let snapshot: Vec<Lottery> = current.iter().cloned().collect();
        for f in &snapshot {
            for g in &snapshot {
                for alpha in alphas {
                    let m = mix(f, g, alpha)?;
                    current.insert(m);
                    if current.len() > cap {
                        return Err(Error::GuardExceeded {
                            what: "mixture-closure size".into(),
                            value: current.len(),
                            limit: cap,
                        });
                    }
                }
            }
        }
    }
    Universe::new(current.into_iter().collect())
}

/// Default cap for [`mixture_closure`].
pub const DEFAULT_UNIVERSE_CAP: usize = 10_000;

/// Pre-pass for the auto-insert workflow: extends `items` with the degenerate
/// expectation of every good member (iterated to a fixpoint) and returns the
/// insertions for the manifest.
pub fn ensure_good_expectations(
    items: Vec<Lottery>,
    order: &OutcomePreorder,
) -> Result<(Vec<Lottery>, Vec<Lottery>)> {
    let mut all: Vec<Lottery> = Vec::new();
    let mut seen: BTreeSet<Lottery> = BTreeSet::new();
    for l in items {
        if seen.insert(l.clone()) {
            all.push(l);
        }
    }
    let mut inserted = Vec::new();
    let mut i = 0;
    while i < all.len() {
        let l = all[i].clone();
        if l.is_good(order)? {
            let e = Lottery::degenerate(l.expectation());
            if seen.insert(e.clone()) {
                all.push(e.clone());
                inserted.push(e);
            }
        }
        i += 1;
    }
    Ok((all, inserted))
}
