//! Coupling-based stochastic dominance, the naive upper-set check it
//! corrects, and a basis-enumeration oracle for property testing.
//!
//! `f` stochastically dominates `g` when some joint mass assignment carries
//! every unit of `f`'s mass onto weakly-dispreferred outcomes of `g`, with
//! strictly positive mass on at least one strictly-dispreferred pair. The
//! main checker decides feasibility by exact max-flow over the bipartite
//! transportation problem and reports the maximum strict-edge mass over the
//! full coupling polytope, computed by exact min-cost flow. The oracle
//! enumerates spanning-forest basic solutions instead and shares no flow code
//! with the checker.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::lottery::{Lottery, Outcome};
use crate::order::{OutcomePreorder, Verdict};
use crate::rational::Rational;
use crate::{Error, Result};

/// A joint mass assignment witnessing dominance: source marginals equal `f`,
/// target marginals equal `g`, every pair satisfies source ⪰ target, and
/// total mass is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coupling {
    pub entries: Vec<(Outcome, Outcome, Rational)>,
}

impl Coupling {
    /// Re-checks every invariant independently of the solver that produced
    /// the coupling. Returns the total mass carried by strict pairs.
    pub fn verify(&self, f: &Lottery, g: &Lottery, order: &OutcomePreorder) -> Result<Rational> {
        let mut source: BTreeMap<&Outcome, Rational> = BTreeMap::new();
        let mut target: BTreeMap<&Outcome, Rational> = BTreeMap::new();
        let mut strict = Rational::zero();
        for (s, t, mass) in &self.entries {
            if !mass.is_positive() {
                return Err(Error::BadInput(format!(
                    "coupling entry {s} -> {t} has non-positive mass"
                )));
            }
            match order.compare(s, t)? {
                Verdict::StrictlyAbove => strict += mass,
                Verdict::Equivalent => {}
                v => {
                    return Err(Error::BadInput(format!(
                        "coupling entry {s} -> {t} is not weakly preferred ({v})"
                    )))
                }
            }
            *source.entry(s).or_insert_with(Rational::zero) += mass;
            *target.entry(t).or_insert_with(Rational::zero) += mass;
        }
        for (o, p) in f.mass() {
            if source.get(o) != Some(p) {
                return Err(Error::BadInput(format!(
                    "source marginal at {o} differs from f"
                )));
            }
        }
        if source.len() != f.support_len() {
            return Err(Error::BadInput(
                "coupling uses sources outside supp(f)".into(),
            ));
        }
        for (o, p) in g.mass() {
            if target.get(o) != Some(p) {
                return Err(Error::BadInput(format!(
                    "target marginal at {o} differs from g"
                )));
            }
        }
        if target.len() != g.support_len() {
            return Err(Error::BadInput(
                "coupling uses targets outside supp(g)".into(),
            ));
        }
        Ok(strict)
    }
}

/// Outcome of a dominance query. `dominates` is true exactly when a witness
/// coupling exists with strictly positive strict-pair mass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominanceVerdict {
    pub dominates: bool,
    pub witness: Option<Coupling>,
    pub strict_mass: Rational,
}

impl DominanceVerdict {
    fn negative() -> Self {
        DominanceVerdict {
            dominates: false,
            witness: None,
            strict_mass: Rational::zero(),
        }
    }
}

/// Decides stochastic dominance of `f` over `g` under `order`.
pub fn check_stochastic_dominance(
    f: &Lottery,
    g: &Lottery,
    order: &OutcomePreorder,
) -> Result<DominanceVerdict> {
    check_stochastic_dominance_with(f, g, &mut |a, b| order.compare(a, b))
}

/// Same as [`check_stochastic_dominance`] but with a caller-supplied
/// comparison (used to cache outcome verdicts across many queries).
pub(crate) fn check_stochastic_dominance_with(
    f: &Lottery,
    g: &Lottery,
    compare: &mut dyn FnMut(&Outcome, &Outcome) -> Result<Verdict>,
) -> Result<DominanceVerdict> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            left: f.dim(),
            right: g.dim(),
        });
    }
    let sources: Vec<(&Outcome, &Rational)> = f.mass().iter().collect();
    let sinks: Vec<(&Outcome, &Rational)> = g.mass().iter().collect();
    // allowed edges with cost 1 on equivalent pairs, 0 on strict pairs;
    // minimizing equivalent mass maximizes strict mass
    let mut edges = Vec::new();
    let mut source_deg = vec![0usize; sources.len()];
    let mut sink_deg = vec![0usize; sinks.len()];
    for (si, (s, _)) in sources.iter().enumerate() {
        for (ti, (t, _)) in sinks.iter().enumerate() {
            match compare(s, t)? {
                Verdict::StrictlyAbove => edges.push((si, ti, 0i64)),
                Verdict::Equivalent => edges.push((si, ti, 1i64)),
                _ => continue,
            }
            source_deg[si] += 1;
            sink_deg[ti] += 1;
        }
    }
    // a source with no outlet (or sink with no inlet) makes the
    // transportation problem infeasible outright
    if source_deg.contains(&0) || sink_deg.contains(&0) {
        return Ok(DominanceVerdict::negative());
    }
    let mut net = McmfNetwork::new(sources.len() + sinks.len() + 2);
    let s_node = sources.len() + sinks.len();
    let t_node = s_node + 1;
    for (i, (_, p)) in sources.iter().enumerate() {
        net.add_edge(s_node, i, (*p).clone(), 0);
    }
    for (j, (_, p)) in sinks.iter().enumerate() {
        net.add_edge(sources.len() + j, t_node, (*p).clone(), 0);
    }
    let mut middle_edge_ids = Vec::with_capacity(edges.len());
    for &(si, ti, cost) in &edges {
        let id = net.add_edge(si, sources.len() + ti, Rational::one(), cost);
        middle_edge_ids.push((id, si, ti));
    }
    let flow_value = net.min_cost_max_flow(s_node, t_node);
    if !flow_value.is_one() {
        return Ok(DominanceVerdict::negative());
    }
    let mut entries = Vec::new();
    let mut strict_mass = Rational::zero();
    for &(id, si, ti) in &middle_edge_ids {
        let used = net.flow_on(id);
        if used.is_positive() {
            let (s, t) = (sources[si].0.clone(), sinks[ti].0.clone());
            if edges.iter().any(|&(a, b, c)| a == si && b == ti && c == 0) {
                strict_mass += &used;
            }
            entries.push((s, t, used));
        }
    }
    if strict_mass.is_positive() {
        Ok(DominanceVerdict {
            dominates: true,
            witness: Some(Coupling { entries }),
            strict_mass,
        })
    } else {
        Ok(DominanceVerdict {
            dominates: false,
            witness: None,
            strict_mass,
        })
    }
}

/// The textbook upper-set definition the coupling formulation corrects:
/// `f` assigns at least as much mass as `g` to the weak upper set of every
/// outcome in the union of supports, strictly more somewhere.
pub fn naive_upper_set_dominance(
    f: &Lottery,
    g: &Lottery,
    order: &OutcomePreorder,
) -> Result<bool> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            left: f.dim(),
            right: g.dim(),
        });
    }
    let mut strict_somewhere = false;
    let mut union: Vec<&Outcome> = f.support().chain(g.support()).collect();
    union.sort();
    union.dedup();
    for o in union {
        let mut fm = Rational::zero();
        for (x, p) in f.mass() {
            if order.weakly_prefers(x, o)? {
                fm += p;
            }
        }
        let mut gm = Rational::zero();
        for (x, p) in g.mass() {
            if order.weakly_prefers(x, o)? {
                gm += p;
            }
        }
        if fm < gm {
            return Ok(false);
        }
        if fm > gm {
            strict_somewhere = true;
        }
    }
    Ok(strict_somewhere)
}

/// Support-product guard for the brute-force oracle.
pub const ORACLE_GUARD: usize = 12;

/// Independent oracle: decides feasibility and maximum strict mass by exact
/// enumeration of the basic feasible solutions of the transportation
/// polytope (acyclic covering edge subsets, flows recovered by leaf
/// peeling). Shares no flow code with the main checker.
pub fn brute_force_dominance_oracle(
    f: &Lottery,
    g: &Lottery,
    order: &OutcomePreorder,
) -> Result<DominanceVerdict> {
    if f.dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            left: f.dim(),
            right: g.dim(),
        });
    }
    let product = f.support_len() * g.support_len();
    if product > ORACLE_GUARD {
        return Err(Error::OracleGuard {
            product,
            limit: ORACLE_GUARD,
        });
    }
    let sources: Vec<(&Outcome, &Rational)> = f.mass().iter().collect();
    let sinks: Vec<(&Outcome, &Rational)> = g.mass().iter().collect();
    let m = sources.len();
    let n = sinks.len();
    let mut edges: Vec<(usize, usize, bool)> = Vec::new(); // (source, sink, strict)
    for (si, (s, _)) in sources.iter().enumerate() {
        for (ti, (t, _)) in sinks.iter().enumerate() {
            match order.compare(s, t)? {
                Verdict::StrictlyAbove => edges.push((si, ti, true)),
                Verdict::Equivalent => edges.push((si, ti, false)),
                _ => {}
            }
        }
    }
    let mut best: Option<(Rational, Vec<(usize, Rational)>)> = None;
    'subset: for mask in 0u32..(1u32 << edges.len()) {
        let chosen: Vec<usize> = (0..edges.len()).filter(|&e| mask >> e & 1 == 1).collect();
        // every node must be covered and the subset must be acyclic
        let mut deg = vec![0usize; m + n];
        for &e in &chosen {
            deg[edges[e].0] += 1;
            deg[m + edges[e].1] += 1;
        }
        if deg.contains(&0) {
            continue;
        }
        if chosen.len() >= m + n {
            continue; // a forest on m+n nodes has at most m+n-1 edges
        }
        // leaf peeling determines the unique flow supported on the subset
        let mut balance: Vec<Rational> = sources
            .iter()
            .map(|(_, p)| (*p).clone())
            .chain(sinks.iter().map(|(_, p)| (*p).clone()))
            .collect();
        let mut remaining: Vec<usize> = chosen.clone();
        let mut flows: Vec<(usize, Rational)> = Vec::new();
        let mut live_deg = deg.clone();
        while !remaining.is_empty() {
            let leaf_pos = remaining
                .iter()
                .position(|&e| live_deg[edges[e].0] == 1 || live_deg[m + edges[e].1] == 1);
            let Some(pos) = leaf_pos else {
                continue 'subset; // a cycle: not a basic solution
            };
            let e = remaining.swap_remove(pos);
            let (s, t, _) = edges[e];
            let amount = if live_deg[s] == 1 {
                balance[s].clone()
            } else {
                balance[m + t].clone()
            };
            if amount.is_negative() {
                continue 'subset;
            }
            balance[s] -= &amount;
            balance[m + t] -= &amount;
            live_deg[s] -= 1;
            live_deg[m + t] -= 1;
            flows.push((e, amount));
        }
        if balance.iter().any(|b| !b.is_zero()) {
            continue;
        }
        let strict: Rational = flows
            .iter()
            .filter(|(e, _)| edges[*e].2)
            .map(|(_, amt)| amt.clone())
            .sum();
        if best.as_ref().is_none_or(|(b, _)| strict > *b) {
            best = Some((strict, flows));
        }
    }
    match best {
        None => Ok(DominanceVerdict::negative()),
        Some((strict, flows)) => {
            let entries: Vec<(Outcome, Outcome, Rational)> = flows
                .into_iter()
                .filter(|(_, amt)| amt.is_positive())
                .map(|(e, amt)| {
                    (
                        sources[edges[e].0].0.clone(),
                        sinks[edges[e].1].0.clone(),
                        amt,
                    )
                })
                .collect();
            if strict.is_positive() {
                Ok(DominanceVerdict {
                    dominates: true,
                    witness: Some(Coupling { entries }),
                    strict_mass: strict,
                })
            } else {
                Ok(DominanceVerdict {
                    dominates: false,
                    witness: None,
                    strict_mass: strict,
                })
            }
        }
    }
}

/// Composes two couplings through their shared middle lottery, yielding a
/// witness for transitivity of dominance.
pub fn compose_couplings(
    first: &Coupling,
    middle: &Lottery,
    second: &Coupling,
) -> Result<Coupling> {
    let mut entries: BTreeMap<(Outcome, Outcome), Rational> = BTreeMap::new();
    for (a, b, mass_ab) in &first.entries {
        let b_total = middle.prob(b);
        if !b_total.is_positive() {
            return Err(Error::BadInput(format!("middle lottery lacks outcome {b}")));
        }
        for (b2, c, mass_bc) in &second.entries {
            if b2 != b {
                continue;
            }
            let share = mass_ab * mass_bc / &b_total;
            if share.is_positive() {
                *entries
                    .entry((a.clone(), c.clone()))
                    .or_insert_with(Rational::zero) += share;
            }
        }
    }
    Ok(Coupling {
        entries: entries.into_iter().map(|((a, c), m)| (a, c, m)).collect(),
    })
}

/// Exact-rational successive-shortest-path min-cost max-flow. Costs are
/// small integers; capacities are rationals. Every augmentation moves a
/// multiple of 1/L for L the common denominator of the capacities, so the
/// loop terminates.
struct McmfNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<Rational>,
    cost: Vec<i64>,
}

impl McmfNetwork {
    fn new(nodes: usize) -> Self {
        McmfNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    /// Adds a forward/backward edge pair; returns the forward edge id.
    fn add_edge(&mut self, from: usize, to: usize, cap: Rational, cost: i64) -> usize {
        let id = self.to.len();
        self.adj[from].push(id);
        self.to.push(to);
        self.cap.push(cap);
        self.cost.push(cost);
        self.adj[to].push(id + 1);
        self.to.push(from);
        self.cap.push(Rational::zero());
        self.cost.push(-cost);
        id
    }

    /// Flow currently on forward edge `id` = residual of its twin.
    fn flow_on(&self, id: usize) -> Rational {
        self.cap[id ^ 1].clone()
    }

    fn min_cost_max_flow(&mut self, s: usize, t: usize) -> Rational {
        let n = self.adj.len();
        let mut total_flow = Rational::zero();
        loop {
            // Bellman-Ford over residual edges (costs may be -1 on reverses)
            let mut dist = vec![i64::MAX; n];
            let mut parent_edge = vec![usize::MAX; n];
            dist[s] = 0;
            for _ in 0..n {
                let mut changed = false;
                for u in 0..n {
                    if dist[u] == i64::MAX {
                        continue;
                    }
                    for &e in &self.adj[u] {
                        if self.cap[e].is_positive() && dist[u] + self.cost[e] < dist[self.to[e]] {
                            dist[self.to[e]] = dist[u] + self.cost[e];
                            parent_edge[self.to[e]] = e;
                            changed = true;
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            if dist[t] == i64::MAX {
                return total_flow;
            }
            // bottleneck along the path
            let mut bottleneck: Option<Rational> = None;
            let mut v = t;
            while v != s {
                let e = parent_edge[v];
                let c = &self.cap[e];
                bottleneck = Some(match bottleneck {
                    None => c.clone(),
                    Some(b) if c < &b => c.clone(),
                    Some(b) => b,
                });
                v = self.to[e ^ 1];
            }
            let push = bottleneck.expect("path has at least one edge");
            let mut v = t;
            while v != s {
                let e = parent_edge[v];
                self.cap[e] -= &push;
                self.cap[e ^ 1] += &push;
                v = self.to[e ^ 1];
            }
            total_flow += push;
        }
    }
}
