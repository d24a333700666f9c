//! Property suites for the algebraic invariants: mixture laws, order laws,
//! dominance against the basis-enumeration oracle, closure behavior, and
//! utility-family facts.

use proptest::prelude::*;

use negdom::axioms::{self, AxiomName, AxiomSpec, Verdict3};
use negdom::dominance::{
    brute_force_dominance_oracle, check_stochastic_dominance, compose_couplings,
    naive_upper_set_dominance,
};
use negdom::lottery::{mix, Lottery, Outcome};
use negdom::order::{k_classify, KInterpretation, OutcomePreorder, Verdict};
use negdom::qualitative::{DimensionSpec, QualSpace};
use negdom::rational::{rat, rat_int, Rational};
use negdom::relation::{build_closure, GeneratorRule, GeneratorSet, Universe};
use negdom::scenarios::{replay, ReplayParams, ScenarioId};
use negdom::utility::{eval_utility, Utility};

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| rat(n, d))
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(n, d)| rat(n, d))
}

fn outcome2() -> impl Strategy<Value = Outcome> {
    (small_rational(), small_rational()).prop_map(|(x, y)| Outcome::pair(x, y))
}

fn alpha01() -> impl Strategy<Value = Rational> {
    (0i64..=6, 1i64..=6).prop_map(|(n, d)| {
        let a = rat(n, d);
        if a > rat_int(1) {
            rat_int(1)
        } else {
            a
        }
    })
}

/// A lottery with support at most `max_support`, exact weights.
fn lottery(max_support: usize) -> impl Strategy<Value = Lottery> {
    prop::collection::vec((outcome2(), 1i64..=6), 1..=max_support).prop_map(|entries| {
        let total: i64 = entries.iter().map(|(_, w)| w).sum();
        Lottery::new(entries.into_iter().map(|(o, w)| (o, rat(w, total))))
            .expect("positive weights summing to one")
    })
}

/// A good lottery: supports drawn from a coordinate-wise increasing chain.
fn good_lottery() -> impl Strategy<Value = Lottery> {
    (
        outcome2(),
        prop::collection::vec(
            ((0i64..=4, 1i64..=3), (0i64..=4, 1i64..=3), 1i64..=6),
            1..=4,
        ),
    )
        .prop_map(|(base, increments)| {
            let mut current = base;
            let mut entries = Vec::new();
            let total: i64 = increments.iter().map(|(_, _, w)| w).sum();
            for ((nx, dx), (ny, dy), w) in increments {
                current = Outcome::pair(
                    current.coord(0) + rat(nx, dx),
                    current.coord(1) + rat(ny, dy),
                );
                entries.push((current.clone(), rat(w, total)));
            }
            Lottery::new(entries).expect("chain lottery")
        })
}

fn lines_order() -> impl Strategy<Value = OutcomePreorder> {
    ((1i64..=5, 1i64..=3), (1i64..=5, 1i64..=3))
        .prop_map(|((ln, ld), (mn, md))| (rat(ln, ld), rat(mn, md)))
        .prop_filter("distinct slopes", |(l, m)| l != m)
        .prop_map(|(l, m)| OutcomePreorder::lines(l, m).unwrap())
}

proptest! {
    #[test]
    fn mixture_support_and_mass(f in lottery(3), g in lottery(3), a in alpha01()) {
        let m = mix(&f, &g, &a).unwrap();
        let total: Rational = m.mass().values().cloned().sum();
        prop_assert_eq!(total, rat_int(1));
        for o in m.support() {
            prop_assert!(f.prob(o) > rat_int(0) || g.prob(o) > rat_int(0));
        }
    }

    #[test]
    fn expectation_is_linear_in_mixtures(f in lottery(3), g in lottery(3), a in alpha01()) {
        let m = mix(&f, &g, &a).unwrap();
        let ef = f.expectation();
        let eg = g.expectation();
        let expected = Outcome::pair(
            &a * ef.coord(0) + (rat_int(1) - &a) * eg.coord(0),
            &a * ef.coord(1) + (rat_int(1) - &a) * eg.coord(1),
        );
        prop_assert_eq!(m.expectation(), expected);
    }

    #[test]
    fn unidimensional_lotteries_are_good(base in outcome2(), axis in 0usize..2, deltas in prop::collection::vec((1i64..=5, 1i64..=3, 1i64..=6), 1..=3)) {
        let total: i64 = deltas.iter().map(|(_, _, w)| w).sum();
        let mut entries = Vec::new();
        let mut coord = base.coord(axis).clone();
        for (n, d, w) in deltas {
            coord += rat(n, d);
            let mut coords = base.coords().to_vec();
            coords[axis] = coord.clone();
            entries.push((Outcome::new(coords), rat(w, total)));
        }
        let f = Lottery::new(entries).unwrap();
        prop_assert!(f.is_unidimensional());
        prop_assert!(f.is_good(&OutcomePreorder::pareto_box()).unwrap());
    }

    #[test]
    fn compare_is_reflexive_and_mirror_consistent(o in outcome2(), o2 in outcome2(), lines in lines_order()) {
        for order in [OutcomePreorder::pareto_box(), lines] {
            prop_assert_eq!(order.compare(&o, &o).unwrap(), Verdict::Equivalent);
            let forward = order.compare(&o, &o2).unwrap();
            let backward = order.compare(&o2, &o).unwrap();
            prop_assert_eq!(forward.mirror(), backward);
        }
    }

    #[test]
    fn pareto_box_equivalence_is_identity(o in outcome2(), o2 in outcome2()) {
        let order = OutcomePreorder::pareto_box();
        if order.compare(&o, &o2).unwrap() == Verdict::Equivalent {
            prop_assert_eq!(o, o2);
        }
    }

    #[test]
    fn lines_is_transitive_on_constructed_chains(
        lines in lines_order(),
        o in outcome2(),
        d1 in (small_rational(), 0i64..=4, 1i64..=3),
        d2 in (small_rational(), 0i64..=4, 1i64..=3),
    ) {
        // o1 >= o, o2 >= o1 by construction: dy = max(-l dx, -m dx) + slack
        let (l, m) = match &lines {
            OutcomePreorder::Lines { l, m } => (l.clone(), m.clone()),
            _ => unreachable!(),
        };
        let lift = |from: &Outcome, dx: &Rational, slack: Rational| {
            let a = -&l * dx;
            let b = -&m * dx;
            let dy = if a > b { a } else { b } + slack;
            Outcome::pair(from.coord(0) + dx, from.coord(1) + dy)
        };
        let o1 = lift(&o, &d1.0, rat(d1.1, d1.2));
        let o2 = lift(&o1, &d2.0, rat(d2.1, d2.2));
        prop_assert!(lines.weakly_prefers(&o1, &o).unwrap());
        prop_assert!(lines.weakly_prefers(&o2, &o1).unwrap());
        prop_assert!(lines.weakly_prefers(&o2, &o).unwrap());
    }

    #[test]
    fn lines_reports_strict_on_dominating_pairs(
        lines in lines_order(),
        o in outcome2(),
        dx in (0i64..=5, 1i64..=3),
        dy in (0i64..=5, 1i64..=3),
    ) {
        let (dx, dy) = (rat(dx.0, dx.1), rat(dy.0, dy.1));
        prop_assume!(dx > rat_int(0) || dy > rat_int(0));
        let above = Outcome::pair(o.coord(0) + &dx, o.coord(1) + &dy);
        prop_assert_eq!(lines.compare(&above, &o).unwrap(), Verdict::StrictlyAbove);
    }

    #[test]
    fn k_classify_is_endpoint_order_independent(
        x in small_rational(),
        lo in small_rational(),
        len in (1i64..=6, 1i64..=3),
        k in (1i64..=6, 1i64..=3),
        t in 0i64..=8,
    ) {
        let k = rat(k.0, k.1);
        let hi = &lo + rat(len.0, len.1);
        let a = Outcome::pair(x.clone(), lo.clone());
        let b = Outcome::pair(x.clone(), hi.clone());
        let c = Outcome::pair(x, &lo + (&hi - &lo) * rat(t, 8));
        for interp in [KInterpretation::ProofReading, KInterpretation::LiteralDefinition] {
            let ab = k_classify(&k, &a, &b, &c, interp).unwrap();
            let ba = k_classify(&k, &b, &a, &c, interp).unwrap();
            prop_assert_eq!(ab, ba);
        }
    }

    #[test]
    fn dominance_agrees_with_the_oracle(f in lottery(3), g in lottery(3)) {
        let order = OutcomePreorder::pareto_box();
        let fast = check_stochastic_dominance(&f, &g, &order).unwrap();
        let slow = brute_force_dominance_oracle(&f, &g, &order).unwrap();
        prop_assert_eq!(fast.dominates, slow.dominates);
        prop_assert_eq!(&fast.strict_mass, &slow.strict_mass);
        if let Some(w) = &fast.witness {
            let strict = w.verify(&f, &g, &order).unwrap();
            prop_assert!(strict > rat_int(0));
        }
    }

    #[test]
    fn nothing_dominates_itself_randomized(f in lottery(4)) {
        let order = OutcomePreorder::pareto_box();
        prop_assert!(!check_stochastic_dominance(&f, &f, &order).unwrap().dominates);
        prop_assert!(!naive_upper_set_dominance(&f, &f, &order).unwrap());
    }

    #[test]
    fn dominance_composes_transitively(f in lottery(3), lift1 in (1i64..=4, 1i64..=2), lift2 in (1i64..=4, 1i64..=2)) {
        // shift all outcomes up to force a dominance chain
        let order = OutcomePreorder::pareto_box();
        let shift = |l: &Lottery, d: &Rational| {
            Lottery::new(l.mass().iter().map(|(o, p)| {
                (Outcome::pair(o.coord(0) + d, o.coord(1) + d), p.clone())
            }))
            .unwrap()
        };
        let d1 = rat(lift1.0, lift1.1);
        let d2 = rat(lift2.0, lift2.1);
        let mid = shift(&f, &d1);
        let top = shift(&mid, &d2);
        let ab = check_stochastic_dominance(&top, &mid, &order).unwrap();
        let bc = check_stochastic_dominance(&mid, &f, &order).unwrap();
        prop_assert!(ab.dominates && bc.dominates);
        let composed = compose_couplings(&ab.witness.unwrap(), &mid, &bc.witness.unwrap()).unwrap();
        let strict = composed.verify(&top, &f, &order).unwrap();
        prop_assert!(strict > rat_int(0));
        prop_assert!(check_stochastic_dominance(&top, &f, &order).unwrap().dominates);
    }

    #[test]
    fn good_lottery_sandwich(f in good_lottery()) {
        let order = OutcomePreorder::pareto_box();
        prop_assert!(f.is_good(&order).unwrap());
        let e = f.expectation();
        let above = f.support().any(|o| order.weakly_prefers(o, &e).unwrap());
        let below = f.support().any(|o| order.weakly_prefers(&e, o).unwrap());
        prop_assert!(above && below);
    }

    #[test]
    fn utility_evaluation_preserves_mixtures(
        f in lottery(3),
        g in lottery(3),
        a in alpha01(),
        ua in small_rational(),
        ub in small_rational(),
        uk in small_rational(),
        threshold in outcome2(),
    ) {
        let utilities = [
            Utility::linear(ua, ub, uk),
            Utility::step_plus(threshold.clone()),
            Utility::step_minus(threshold),
        ];
        let m = mix(&f, &g, &a).unwrap();
        for u in utilities {
            let mixed = eval_utility(&u, &m).unwrap();
            let split = &a * eval_utility(&u, &f).unwrap()
                + (rat_int(1) - &a) * eval_utility(&u, &g).unwrap();
            prop_assert_eq!(mixed, split);
        }
    }

    #[test]
    fn closure_partitions_ordered_pairs(pairs in prop::collection::vec((0usize..5, 0usize..5), 0..8)) {
        let items: Vec<Lottery> = (0..5)
            .map(|i| Lottery::degenerate(Outcome::pair(rat_int(i), rat_int(-i))))
            .collect();
        let u = Universe::new(items).unwrap();
        let mut gens = GeneratorSet::new(vec![]);
        for (i, j) in pairs {
            gens.declare(i, j, "random");
        }
        let (rel, _) = build_closure(&u, &OutcomePreorder::pareto_box(), &gens).unwrap();
        prop_assert!(rel.is_preorder());
        for i in 0..u.len() {
            for j in 0..u.len() {
                if i == j { continue; }
                let classes = [rel.strict(i, j), rel.strict(j, i), rel.indifferent(i, j), rel.incomparable(i, j)];
                prop_assert_eq!(classes.iter().filter(|&&b| b).count(), 1);
            }
        }
    }

    #[test]
    fn closure_minimality_probe(pairs in prop::collection::vec((0usize..4, 0usize..4), 1..6)) {
        // removing any non-generated, non-reflexive pair breaks transitivity
        let items: Vec<Lottery> = (0..4)
            .map(|i| Lottery::degenerate(Outcome::pair(rat_int(i), rat_int(10 - i))))
            .collect();
        let u = Universe::new(items).unwrap();
        let mut gens = GeneratorSet::new(vec![]);
        for &(i, j) in &pairs {
            gens.declare(i, j, "random");
        }
        let (rel, log) = build_closure(&u, &OutcomePreorder::pareto_box(), &gens).unwrap();
        for i in 0..u.len() {
            for j in 0..u.len() {
                if i == j || !rel.weak(i, j) {
                    continue;
                }
                if log.pairs.iter().any(|&(a, b, _)| (a, b) == (i, j)) {
                    continue;
                }
                let broken = rel.without_pair(i, j);
                prop_assert!(broken.transitivity_witness().is_some());
            }
        }
    }

    #[test]
    fn step_family_is_incomparable_on_incomparable_supports(
        star in outcome2(),
        picks in prop::collection::vec((prop::bool::ANY, (1i64..=5, 1i64..=3), (1i64..=5, 1i64..=3), 1i64..=6), 1..=3),
    ) {
        // supports strictly split around the reference in one direction each
        let total: i64 = picks.iter().map(|(_, _, _, w)| w).sum();
        let entries: Vec<(Outcome, Rational)> = picks
            .iter()
            .map(|(flip, (dxn, dxd), (dyn_, dyd), w)| {
                let dx = rat(*dxn, *dxd);
                let dy = rat(*dyn_, *dyd);
                let o = if *flip {
                    Outcome::pair(star.coord(0) + dx, star.coord(1) - dy)
                } else {
                    Outcome::pair(star.coord(0) - dx, star.coord(1) + dy)
                };
                (o, rat(*w, total))
            })
            .collect();
        let f = Lottery::new(entries).unwrap();
        let family = negdom::utility::UtilityFamily::new(vec![
            Utility::step_plus(star.clone()),
            Utility::step_minus(star.clone()),
        ])
        .unwrap();
        let verdict =
            negdom::utility::family_compare(&family, &f, &Lottery::degenerate(star.clone())).unwrap();
        prop_assert_eq!(verdict, Verdict::Incomparable);
    }

    #[test]
    fn qualitative_product_order_is_a_preorder(
        pairs1 in prop::collection::vec((0usize..4, 0usize..4), 0..6),
        pairs2 in prop::collection::vec((0usize..4, 0usize..4), 0..6),
        triple in (0usize..16, 0usize..16, 0usize..16),
    ) {
        let labels = ["p", "q", "r", "s"];
        let d1 = DimensionSpec::new("d1", labels.iter().map(|s| s.to_string()).collect(), &pairs1).unwrap();
        let d2 = DimensionSpec::new("d2", labels.iter().map(|s| s.to_string()).collect(), &pairs2).unwrap();
        let space = QualSpace::new("rand", vec![d1, d2]).unwrap();
        let all = negdom::qualitative::all_outcomes(&space);
        let (a, b, c) = (&all[triple.0], &all[triple.1], &all[triple.2]);
        prop_assert!(space.weakly_prefers(a, a).unwrap());
        if space.weakly_prefers(a, b).unwrap() && space.weakly_prefers(b, c).unwrap() {
            prop_assert!(space.weakly_prefers(a, c).unwrap());
        }
    }
}

#[test]
fn negative_dominance_witnesses_are_sound_on_replays() {
    for id in [
        ScenarioId::Prop1,
        ScenarioId::Prop2,
        ScenarioId::KFact,
        ScenarioId::Prop3,
    ] {
        let r = replay(id, &ReplayParams::default()).unwrap();
        let nd = r.report("negative-dominance").unwrap();
        assert_eq!(nd.verdict, Verdict3::Violated);
        for w in &nd.witnesses {
            let (i, j) = (w.items[0], w.items[1]);
            assert!(r.relation.strict(i, j), "{id}: witness pair is not strict");
            let f = r.universe.lottery(i);
            let g = r.universe.lottery(j);
            for a in f.support() {
                for b in g.support() {
                    // no support pair may be strict, judged as the checker does
                    let verdict = match (
                        r.universe.degenerate_position(a),
                        r.universe.degenerate_position(b),
                    ) {
                        (Some(x), Some(y)) => r.relation.verdict(x, y),
                        _ => r.order.compare(a, b).unwrap(),
                    };
                    assert_ne!(
                        verdict,
                        Verdict::StrictlyAbove,
                        "{id}: support pair {a} > {b}"
                    );
                }
            }
        }
    }
}

#[test]
fn monotone_refutation_survives_extra_strict_pairs() {
    // extend the expectationalism closure with an unrelated strict pair and
    // re-check: the same witness pair still violates
    let r = replay(ScenarioId::Prop1, &ReplayParams::default()).unwrap();
    let mut items: Vec<Lottery> = r.universe.items().to_vec();
    items.push(Lottery::degenerate(Outcome::pair(rat_int(9), rat_int(9))));
    let u = Universe::new(items).unwrap();
    let mut gens = r.generators.clone();
    gens.declare(u.len() - 1, 1, "extra strict pair");
    let (rel, _) = build_closure(&u, &r.order, &gens).unwrap();
    let nd = axioms::check_axiom(
        &rel,
        &u,
        &r.order,
        &AxiomSpec::new(AxiomName::NegativeDominance),
    )
    .unwrap();
    assert_eq!(nd.verdict, Verdict3::Violated);
    let f_star = Lottery::uniform(vec![
        Outcome::pair(rat_int(4), rat_int(-2)),
        Outcome::pair(rat_int(-2), rat_int(4)),
    ])
    .unwrap();
    let zero = Lottery::degenerate(Outcome::pair(rat_int(0), rat_int(0)));
    let (fi, zi) = (u.position(&f_star).unwrap(), u.position(&zero).unwrap());
    assert!(nd
        .witnesses
        .iter()
        .any(|w| w.items[0] == fi && w.items[1] == zi));
}

#[test]
fn divergence_pair_is_pinned() {
    // the corrected definition must disagree with the naive one here
    let order = OutcomePreorder::pareto_box();
    let f = Lottery::new(vec![
        (Outcome::pair(rat_int(2), rat_int(2)), rat(3, 4)),
        (Outcome::pair(rat_int(0), rat_int(0)), rat(1, 4)),
    ])
    .unwrap();
    let g = Lottery::uniform(vec![
        Outcome::pair(rat_int(2), rat_int(0)),
        Outcome::pair(rat_int(0), rat_int(2)),
        Outcome::pair(rat_int(2), rat_int(2)),
    ])
    .unwrap();
    assert!(naive_upper_set_dominance(&f, &g, &order).unwrap());
    assert!(
        !check_stochastic_dominance(&f, &g, &order)
            .unwrap()
            .dominates
    );
}

#[test]
fn consistent_theory_survives_random_universe_extensions() {
    // extend the consistency scenario's universe with random good lotteries
    // (plus their expectations) and re-check: the closure of the same three
    // generators must keep satisfying the suite
    use negdom::prng::SplitMix64;
    use negdom::relation::{ensure_good_expectations, GeneratorRule};

    let base = replay(ScenarioId::Prop9, &ReplayParams::default()).unwrap();
    let order = OutcomePreorder::pareto_box();
    let mut rng = SplitMix64::new(0xBEEF);
    for round in 0..3 {
        let mut items: Vec<Lottery> = base.universe.items().to_vec();
        for _ in 0..4 {
            // a random chain-supported lottery
            let mut current = Outcome::pair(rng.rational(3, 2), rng.rational(3, 2));
            let mut outcomes = vec![current.clone()];
            for _ in 0..rng.below(3) {
                current = Outcome::pair(
                    current.coord(0) + rng.positive_rational(3, 2),
                    current.coord(1) + rng.positive_rational(3, 2),
                );
                outcomes.push(current.clone());
            }
            items.push(Lottery::uniform(outcomes).unwrap());
        }
        let (items, _) = ensure_good_expectations(items, &order).unwrap();
        let universe = Universe::canonical(items).unwrap();
        let gens = GeneratorSet::new(vec![
            GeneratorRule::OrderLift,
            GeneratorRule::GoodExpectations,
            GeneratorRule::StochasticDominance,
        ]);
        let (rel, _) = build_closure(&universe, &order, &gens).unwrap();
        for name in [
            AxiomName::NegativeDominance,
            AxiomName::GoodExpectations,
            AxiomName::StochasticDominanceRespect,
        ] {
            let report =
                axioms::check_axiom(&rel, &universe, &order, &AxiomSpec::new(name)).unwrap();
            assert_eq!(
                report.verdict,
                Verdict3::Holds,
                "round {round}: {name} failed"
            );
        }
    }
}
