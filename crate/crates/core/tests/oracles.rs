//! Brute-force oracles checked against the library routines.

use std::collections::BTreeSet;

use proptest::prelude::*;
use symdig::constructions::{canonicalize, DeltaDomain};
use symdig::digraph::{check_map_is_isomorphism, is_isomorphic};
use symdig::permaction::WreathElement;
use symdig::{Digraph, FiniteField, Permutation};

fn gf(q: u64) -> FiniteField {
    FiniteField::with_order(q).unwrap()
}

/// The orbit of `(a, b)` under multiplication by the nonzero squares.
fn square_class(f: &FiniteField, a: u32, b: u32) -> BTreeSet<(u32, u32)> {
    let squares: BTreeSet<_> = f.elements().skip(1).map(|x| f.mul(x, x)).collect();
    let (a, b) = (f.element(a as u64).unwrap(), f.element(b as u64).unwrap());
    squares
        .iter()
        .map(|&s| (f.mul(s, a).code(), f.mul(s, b).code()))
        .collect()
}

#[test]
fn canonicalize_matches_brute_force_orbits() {
    for q in [7u64, 11, 27] {
        let f = gf(q);
        let delta = DeltaDomain::new(&f).unwrap();
        let mut seen = BTreeSet::new();
        for a in 0..f.order() {
            for b in 0..f.order() {
                if a == 0 && b == 0 {
                    continue;
                }
                let c = canonicalize(&f, f.element(a as u64).unwrap(), f.element(b as u64).unwrap())
                    .unwrap();
                let orbit = square_class(&f, a, b);
                // The representative lies in the orbit and is one of Δ's
                // canonical forms.
                assert!(orbit.contains(&(c.a.code(), c.b.code())), "q={q} ({a},{b})");
                assert!(delta.classes().contains(&c));
                // Every orbit member canonicalizes identically.
                for &(x, y) in &orbit {
                    let d = canonicalize(&f, f.element(x as u64).unwrap(), f.element(y as u64).unwrap())
                        .unwrap();
                    assert_eq!(c, d);
                }
                seen.insert((c.a.code(), c.b.code()));
            }
        }
        assert_eq!(seen.len(), 2 * (q as usize + 1));
    }
}

#[test]
fn canonicalize_gf7_examples_against_orbit() {
    let f = gf(7);
    // (3,2) scaled by 4 = 2⁻¹ gives (5,1).
    assert!(square_class(&f, 3, 2).contains(&(5, 1)));
    let c = canonicalize(&f, f.from_int(3), f.from_int(2)).unwrap();
    assert_eq!((c.a.code(), c.b.code()), (5, 1));
}

#[test]
fn is_square_matches_enumeration() {
    for q in [7u64, 11, 19, 27] {
        let f = gf(q);
        let squares: BTreeSet<_> = f.elements().skip(1).map(|x| f.mul(x, x)).collect();
        assert_eq!(squares.len(), (q as usize - 1) / 2);
        for x in f.elements().skip(1) {
            assert_eq!(f.is_square(x).unwrap(), squares.contains(&x), "q={q} x={x}");
        }
    }
}

#[test]
fn square_cosets_partition_units() {
    for q in [7u64, 11, 19, 27, 49] {
        let f = gf(q);
        let nonsquare = f
            .elements()
            .skip(1)
            .find(|&x| !f.is_square(x).unwrap())
            .unwrap();
        for x in f.elements().skip(1) {
            assert!(f.is_square(x).unwrap() ^ f.is_square(f.mul(x, nonsquare)).unwrap());
        }
    }
}

/// Arc-preserving bijection by trying every permutation.
fn brute_force_iso(g1: &Digraph, g2: &Digraph) -> bool {
    let n = g1.vertex_count();
    if n != g2.vertex_count() || g1.arc_count() != g2.arc_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if g1.arcs().all(|(u, v)| g2.has_arc(perm[u], perm[v])) {
            return true;
        }
        // Next permutation in lexicographic order.
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return false;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

fn digraph_strategy() -> impl Strategy<Value = Digraph> {
    (1usize..=6).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs: Vec<_> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v])
                .collect();
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn relabel(g: &Digraph, perm: &[usize]) -> Digraph {
    Digraph::from_arcs(g.vertex_count(), g.arcs().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isomorphism_agrees_with_brute_force(g1 in digraph_strategy(), g2 in digraph_strategy()) {
        let found = is_isomorphic(&g1, &g2, 16).unwrap();
        prop_assert_eq!(found.is_some(), brute_force_iso(&g1, &g2));
        if let Some(f) = found {
            prop_assert!(check_map_is_isomorphism(&g1, &g2, &f).unwrap());
        }
    }

    #[test]
    fn relabelled_copies_are_isomorphic(g in digraph_strategy(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        prop_assert!(is_isomorphic(&g, &h, 16).unwrap().is_some());
    }
}

fn all_perms(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut p: Vec<u32> = (0..n as u32).collect();
    loop {
        out.push(Permutation::from_images(p.clone()).unwrap());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

#[test]
fn wreath_composition_is_coherent_exhaustive() {
    // Sym(3) wr Sym(2), every ordered pair of elements, every tuple.
    let base = all_perms(3);
    let tops = all_perms(2);
    let mut elements = Vec::new();
    for t in &tops {
        for h1 in &base {
            for h2 in &base {
                elements.push(WreathElement::new(t.clone(), vec![h1.clone(), h2.clone()]).unwrap());
            }
        }
    }
    assert_eq!(elements.len(), 72);
    let tuples: Vec<[u32; 2]> = (0..3).flat_map(|a| (0..3).map(move |b| [a, b])).collect();
    for g in &elements {
        for h in &elements {
            let gh = g.compose(h).unwrap();
            for t in &tuples {
                let lhs = gh.apply(t).unwrap();
                let rhs = h.apply(&g.apply(t).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

fn wreath4() -> impl Strategy<Value = WreathElement> {
    let perm = Just((0..4u32).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|p| Permutation::from_images(p).unwrap());
    (any::<bool>(), perm.clone(), perm).prop_map(|(swap, h1, h2)| {
        let top = if swap {
            Permutation::transposition(2, 0, 1)
        } else {
            Permutation::identity(2)
        };
        WreathElement::new(top, vec![h1, h2]).unwrap()
    })
}

proptest! {
    #[test]
    fn wreath_composition_coherent_on_four_points(g in wreath4(), h in wreath4()) {
        let gh = g.compose(&h).unwrap();
        for a in 0..4u32 {
            for b in 0..4u32 {
                let t = [a, b];
                prop_assert_eq!(gh.apply(&t).unwrap(), h.apply(&g.apply(&t).unwrap()).unwrap());
            }
        }
    }
}
