//! Structural properties of the constructed families and group actions.

use proptest::prelude::*;
use symdig::constructions::{
    borel_stabilizer_generators, build_hamming, build_paley, build_xq, build_xqn, hamming_action,
    orbital_graph, sl2_action, DeltaDomain, XqFamily, XqnFamily,
};
use symdig::digraph::{
    a2_sets, check_map_is_isomorphism, is_isomorphic, normal_quotient, Connectivity, Direction,
};
use symdig::permaction::{
    diagonal_permutation, orbit_length_duality, tuple_index, wreath_generators,
};
use symdig::{Digraph, FiniteField, GeneratedAction, Permutation};

fn gf(q: u64) -> FiniteField {
    FiniteField::with_order(q).unwrap()
}

#[test]
fn xq_is_regular_of_valency_q() {
    for q in [7u64, 11, 19, 23] {
        let g = build_xq(&gf(q)).unwrap();
        let q = q as usize;
        assert_eq!(g.vertex_count(), 2 * (q + 1));
        assert!((0..g.vertex_count()).all(|v| g.out_degree(v) == q && g.in_degree(v) == q));
        assert!(g.is_oriented());
        assert!(g.is_connected(Connectivity::Weak));
        assert!(g.is_connected(Connectivity::Strong));
    }
}

#[test]
fn sl2_group_orders() {
    for q in [7u64, 11, 19] {
        let delta = DeltaDomain::new(&gf(q)).unwrap();
        let h = sl2_action(&delta).unwrap();
        let q = q as usize;
        assert_eq!(h.enumerate_group(100_000).unwrap().len(), q * (q * q - 1));
    }
}

#[test]
fn sl2_generators_cover_extension_field() {
    // For q = 27 the transvections over the full additive basis are needed.
    let delta = DeltaDomain::new(&gf(27)).unwrap();
    let h = sl2_action(&delta).unwrap();
    assert_eq!(h.enumerate_group(100_000).unwrap().len(), 27 * (27 * 27 - 1));
}

#[test]
fn x7_pair_orbit_and_neighbourhoods() {
    let fam = XqFamily::new(&gf(7)).unwrap();
    let arcs = fam
        .action
        .pair_orbit((fam.delta.pos_infinity(), fam.delta.zero_one()))
        .unwrap();
    assert_eq!(arcs.len(), 112);
    let labels = fam.graph.labels().unwrap();
    let render = |vs: &[u32]| vs.iter().map(|&v| labels.render(v as usize)).collect::<Vec<_>>();
    let inf = fam.delta.pos_infinity();
    assert_eq!(
        render(fam.graph.neighbors(inf, Direction::Out).unwrap()),
        (0..7).map(|a| format!("[{a},1]")).collect::<Vec<_>>()
    );
    assert_eq!(
        render(fam.graph.neighbors(inf, Direction::In).unwrap()),
        (0..7).map(|a| format!("[{a},6]")).collect::<Vec<_>>()
    );
}

#[test]
fn x7_isomorphic_to_opp() {
    let g = build_xq(&gf(7)).unwrap();
    let opp = g.opp();
    assert_eq!(opp.opp(), g);
    let witness = is_isomorphic(&g, &opp, 512).unwrap().expect("X_7 ≅ X_7^opp");
    assert!(check_map_is_isomorphism(&g, &opp, &witness).unwrap());
    // Not equal as labelled digraphs.
    assert_ne!(g, opp);
}

#[test]
fn centre_quotient_and_blocks() {
    let fam = XqFamily::new(&gf(7)).unwrap();
    let centre = GeneratedAction::new(16, vec![fam.z()]).unwrap();
    let quotient = normal_quotient(&fam.graph, &centre).unwrap();
    assert_eq!(quotient.graph.vertex_count(), 8);
    assert!(quotient.graph.is_complete());
    let f = fam.field();
    for a in f.elements() {
        let block = vec![fam.delta.plus_class(a), fam.delta.minus_class(f.neg(a))];
        let mut sorted = block.clone();
        sorted.sort();
        assert!(quotient.blocks.contains(&sorted));
    }
    assert!(quotient
        .blocks
        .contains(&vec![fam.delta.pos_infinity(), fam.delta.neg_infinity()]));
}

#[test]
fn duality_on_delta() {
    let delta = DeltaDomain::new(&gf(7)).unwrap();
    let h = sl2_action(&delta).unwrap();
    let d = orbit_length_duality(&h, delta.pos_infinity(), delta.zero_one(), 10_000).unwrap();
    assert_eq!(d.eta_under_stab_nu, 7);
    assert_eq!(d.nu_under_stab_eta, 7);
    assert!(orbit_length_duality(&h, 3, 3, 10_000).unwrap().holds());
}

#[test]
fn orbit_stabilizer_on_transitive_actions() {
    let delta = DeltaDomain::new(&gf(7)).unwrap();
    let h = sl2_action(&delta).unwrap();
    let elements = h.enumerate_group(10_000).unwrap();
    let stab = elements.iter().filter(|g| g.apply(0) == 0).count();
    assert_eq!(elements.len(), h.degree() * stab);
    // The point stabilizer of [1,0] has the same order as the Borel
    // subgroup generated explicitly.
    let borel = borel_stabilizer_generators(&delta).unwrap();
    assert_eq!(borel.enumerate_group(10_000).unwrap().len(), 336 / 16);
}

#[test]
fn borel_orbit_of_zero_one() {
    let delta = DeltaDomain::new(&gf(7)).unwrap();
    let borel = borel_stabilizer_generators(&delta).unwrap();
    let orbit: Vec<String> = borel
        .orbit(delta.zero_one())
        .unwrap()
        .into_iter()
        .map(|i| delta.class(i).to_string())
        .collect();
    assert_eq!(orbit, (0..7).map(|a| format!("[{a},1]")).collect::<Vec<_>>());
}

#[test]
fn wreath_of_sl2_is_transitive_on_pairs_of_classes() {
    let delta = DeltaDomain::new(&gf(7)).unwrap();
    let w = wreath_generators(&sl2_action(&delta).unwrap(), 2).unwrap();
    assert_eq!(w.degree(), 256);
    assert!(w.is_transitive());
}

#[test]
fn orbital_graphs_are_invariant() {
    let fam = XqnFamily::new(&gf(7), 2).unwrap();
    assert!(fam.graph.is_invariant_under(&fam.wreath).unwrap());
    let h = hamming_action(3, 2).unwrap();
    let g = orbital_graph(&h, (0, 1)).unwrap();
    assert!(g.is_invariant_under(&h).unwrap());
    assert_eq!(g, build_hamming(3, 2, false).unwrap());
}

#[test]
fn a2_sets_closed_under_generators() {
    let fam = XqnFamily::new(&gf(7), 2).unwrap();
    let sets = a2_sets(&fam.graph);
    for g in fam.wreath.generators() {
        for set in [&sets.plus, &sets.mixed, &sets.minus] {
            assert!(set.pairs().iter().all(|&(u, v)| set.contains((g.apply(u), g.apply(v)))));
        }
    }
}

#[test]
fn xqn_basic_shape() {
    let (g, w) = build_xqn(&gf(7), 2).unwrap();
    assert_eq!(g.vertex_count(), 256);
    assert_eq!(w.degree(), 256);
    let fam = XqnFamily::new(&gf(7), 2).unwrap();
    assert_eq!(fam.graph.in_degree(fam.alpha), 14);
    assert_eq!(fam.graph.hamming_dist(fam.alpha, fam.beta).unwrap(), 1);
    let l = fam.graph.labels().unwrap();
    assert_eq!(l.render(fam.alpha), "[1,0]|[1,0]");
    assert_eq!(l.render(fam.beta), "[0,1]|[1,0]");
}

#[test]
fn xqn_with_one_coordinate_is_xq_up_to_swap() {
    // The seed (β, α) = ([0,1], [1,0]) runs against the X_q seed, so X_q(1)
    // is X_q with arcs reversed, and v ↦ v^o carries it onto X_q.
    let f = gf(7);
    let fam = XqFamily::new(&f).unwrap();
    let (x1, _) = build_xqn(&f, 1).unwrap();
    assert_eq!(x1, fam.graph.opp());
    let o = fam.o();
    let map: Vec<usize> = (0..16).map(|v| o.apply(v)).collect();
    assert!(check_map_is_isomorphism(&x1, &fam.graph, &map).unwrap());
}

#[test]
fn xqn_slice_reproduces_xq() {
    // Fix coordinate 2 at [1,0]; the slice through coordinate 1 carries
    // the arcs of X_q(1).
    let f = gf(7);
    let fam = XqnFamily::new(&f, 2).unwrap();
    let (x1, _) = build_xqn(&f, 1).unwrap();
    let inf = fam.base.delta.pos_infinity() as u32;
    let slice: Vec<usize> = (0..16u32).map(|x| tuple_index(&[x, inf], 16)).collect();
    let induced = fam.graph.induced(&slice).unwrap();
    assert_eq!(
        induced.arcs().collect::<Vec<_>>(),
        x1.arcs().collect::<Vec<_>>()
    );
}

#[test]
fn coordinatewise_swap_is_opp_isomorphism_for_xqn() {
    let fam = XqnFamily::new(&gf(7), 2).unwrap();
    let o = diagonal_permutation(&fam.base.o(), 2);
    let map: Vec<usize> = (0..256).map(|v| o.apply(v)).collect();
    assert!(check_map_is_isomorphism(&fam.graph, &fam.graph.opp(), &map).unwrap());
}

#[test]
fn paley_opp_is_nonsquare_scaling() {
    for q in [7u64, 11, 19, 27] {
        let f = gf(q);
        let (t, _) = build_paley(&f).unwrap();
        let nu = f.elements().skip(1).find(|&x| !f.is_square(x).unwrap()).unwrap();
        let map: Vec<usize> = f.elements().map(|a| f.mul(nu, a).code() as usize).collect();
        assert!(check_map_is_isomorphism(&t, &t.opp(), &map).unwrap());
    }
}

#[test]
fn hamming_distance_one_vs_two() {
    let h = build_hamming(3, 2, false).unwrap();
    let c = build_hamming(3, 2, true).unwrap();
    let n = h.vertex_count();
    for u in 0..n {
        for v in 0..n {
            if u != v {
                assert_ne!(h.has_arc(u, v), c.has_arc(u, v));
            }
        }
    }
    let labels = h.labels().unwrap();
    let a = labels.tuples().iter().position(|t| t == &[0, 0]).unwrap();
    let b = labels.tuples().iter().position(|t| t == &[1, 0]).unwrap();
    assert_eq!(h.hamming_dist(a, b).unwrap(), 1);
}

fn random_action() -> impl Strategy<Value = GeneratedAction> {
    (2usize..9).prop_flat_map(|n| {
        let perm = Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|p| Permutation::from_images(p).unwrap());
        proptest::collection::vec(perm, 0..3)
            .prop_map(move |gens| GeneratedAction::new(n, gens).unwrap())
    })
}

proptest! {
    #[test]
    fn orbits_partition_the_domain(a in random_action()) {
        let orbits = a.orbits();
        let mut all: Vec<usize> = orbits.iter().flatten().copied().collect();
        all.sort();
        prop_assert_eq!(all, (0..a.degree()).collect::<Vec<_>>());
        for o in &orbits {
            for g in a.generators() {
                prop_assert!(o.iter().all(|&x| o.contains(&g.apply(x))));
            }
        }
    }

    #[test]
    fn pair_orbits_are_closed(a in random_action(), s in 0usize..64, t in 0usize..64) {
        let n = a.degree();
        let orbit = a.pair_orbit((s % n, t % n)).unwrap();
        for g in a.generators() {
            for &(u, v) in &orbit {
                prop_assert!(orbit.binary_search(&(g.apply(u), g.apply(v))).is_ok());
            }
        }
    }

    #[test]
    fn orbit_stabilizer(a in random_action()) {
        let elements = a.enumerate_group(50_000).unwrap();
        let orbit = a.orbit(0).unwrap();
        let stab = elements.iter().filter(|g| g.apply(0) == 0).count();
        prop_assert_eq!(elements.len(), orbit.len() * stab);
    }

    #[test]
    fn degree_sums_match_arc_count(seed in any::<u64>()) {
        let n = 7;
        let arcs: Vec<_> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && (seed >> ((u * n + v) % 64)) & 1 == 1)
            .collect();
        let g = Digraph::from_arcs(n, arcs).unwrap();
        let outs: usize = (0..n).map(|v| g.out_degree(v)).sum();
        let ins: usize = (0..n).map(|v| g.in_degree(v)).sum();
        prop_assert_eq!(outs, g.arc_count());
        prop_assert_eq!(ins, g.arc_count());
        for (u, v) in g.arcs() {
            prop_assert!(g.in_neighbors(v).contains(&(u as u32)));
        }
    }
}
