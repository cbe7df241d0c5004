use frobrw::cospan::{cospan_iso, interfaced_iso, Cospan, InterfacedGraph};
use frobrw::hypergraph::Hypergraph;
use frobrw::io::{cospan_from_json, cospan_to_json};
use frobrw::multifrob::{is_upsilon_normal, upsilon_normalize, upsilon_normalize_with, UpsilonOrder};
use frobrw::random::{random_ib_host, random_profile, random_term, random_two_colour_graph, rng};
use frobrw::semantics::{ib_subspace, FiniteModel, Subspace2};
use frobrw::signature::Signature;
use frobrw::strategies::group::{revlex_cmp, revlex_less};
use frobrw::strategies::ib::{ib_reduce, IB};
use frobrw::term::{interp, parse, Term};
use proptest::prelude::*;
use std::cmp::Ordering;

fn mono() -> Signature {
    Signature::parse("f : 1 -> 1\ng : 2 -> 1\nh : 1 -> 2\nk : 0 -> 1\n").unwrap()
}

fn group() -> Signature {
    Signature::parse("m : 2 -> 1\nu : 0 -> 1\ni : 1 -> 1\n").unwrap()
}

fn term(sig: &Signature, seed: u64, size: usize) -> Term {
    random_term(sig, size, &mut rng(seed))
}

/// Node `v` becomes `perm[v]`; edges are listed in reverse.
fn renumber(g: &InterfacedGraph, perm: &[usize]) -> InterfacedGraph {
    let mut h = Hypergraph::new();
    h.nodes = vec![0; perm.len()];
    for (v, &c) in g.graph.nodes.iter().enumerate() {
        h.nodes[perm[v]] = c;
    }
    for e in g.graph.edges.iter().rev() {
        let map = |vs: &[usize]| vs.iter().map(|&v| perm[v]).collect();
        h.add_edge(e.label, map(&e.sources), map(&e.targets));
    }
    InterfacedGraph::new(h, g.interface.iter().map(|&v| perm[v]).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn display_parses_back_to_the_same_diagram(seed in any::<u64>()) {
        let sig = mono();
        let t = term(&sig, seed, 8);
        let back = parse(&t.display(&sig), &sig).unwrap();
        prop_assert_eq!(t.type_of(&sig).unwrap(), back.type_of(&sig).unwrap());
        prop_assert!(cospan_iso(&interp(&sig, &t).unwrap(), &interp(&sig, &back).unwrap()));
    }

    #[test]
    fn interp_is_functorial(a in any::<u64>(), b in any::<u64>()) {
        let sig = mono();
        let s = term(&sig, a, 6);
        let t = term(&sig, b, 6);
        let (cs, ct) = (interp(&sig, &s).unwrap(), interp(&sig, &t).unwrap());
        prop_assert!(cospan_iso(&interp(&sig, &Term::par(s.clone(), t.clone())).unwrap(), &cs.tensor(&ct)));
        if let Ok(c) = cs.compose(&Cospan::identity(&cs.cod())) {
            prop_assert!(cospan_iso(&c, &cs));
        }
        let id = Term::Id(s.type_of(&sig).unwrap().1);
        prop_assert!(cospan_iso(&interp(&sig, &Term::seq(s, id)).unwrap(), &cs));
    }

    #[test]
    fn cospan_json_round_trips(seed in any::<u64>()) {
        let sig = mono();
        let c = interp(&sig, &term(&sig, seed, 10)).unwrap();
        prop_assert_eq!(cospan_from_json(&sig, &cospan_to_json(&sig, &c)).unwrap(), c);
    }

    #[test]
    fn iso_is_invariant_under_renumbering(seed in any::<u64>()) {
        let sig = mono();
        let t = term(&sig, seed, 8);
        let c = interp(&sig, &t).unwrap();
        let (g, n) = c.fold();
        let mut perm: Vec<usize> = (0..g.graph.node_count()).rev().collect();
        let k = seed as usize % perm.len().max(1);
        perm.rotate_left(k);
        let renamed = renumber(&g, &perm);
        prop_assert!(interfaced_iso(&g, &renamed));
        prop_assert!(cospan_iso(&Cospan::unfold(&renamed, n), &c));
    }

    #[test]
    fn upsilon_normal_forms_are_normal_and_stable(seed in any::<u64>()) {
        let g = random_two_colour_graph(&mut rng(seed), 8);
        let nf = upsilon_normalize(&g);
        prop_assert!(is_upsilon_normal(&nf));
        prop_assert!(interfaced_iso(&upsilon_normalize(&nf), &nf));
        let (other, _) = upsilon_normalize_with(&g, UpsilonOrder::Random(seed));
        prop_assert!(interfaced_iso(&other, &nf));
        prop_assert_eq!(nf.interface.len(), g.interface.len());
    }

    #[test]
    fn revlex_is_a_strict_total_order(a in any::<u64>()) {
        let mut r = rng(a);
        let (x, y, z) = (random_profile(&mut r, 5, 4), random_profile(&mut r, 5, 4), random_profile(&mut r, 5, 4));
        prop_assert!(!revlex_less(&x, &x));
        prop_assert_eq!(revlex_cmp(&x, &y), revlex_cmp(&y, &x).reverse());
        if revlex_less(&x, &y) && revlex_less(&y, &z) {
            prop_assert!(revlex_less(&x, &z));
        }
        prop_assert_eq!(revlex_cmp(&x, &y) == Ordering::Equal, x == y);
    }

    #[test]
    fn term_and_graph_evaluation_agree(seed in any::<u64>()) {
        let sig = group();
        let model = FiniteModel::cyclic_group(&sig, 3).unwrap();
        let t = term(&sig, seed, 6);
        prop_assert_eq!(model.eval_term(&sig, &t).unwrap(), model.eval_cospan(&sig, &interp(&sig, &t).unwrap()).unwrap());
    }

    #[test]
    fn orthogonal_complement_is_an_involution(seed in any::<u64>(), dim in 0usize..7) {
        let mut r = rng(seed);
        let vs: Vec<Vec<bool>> = (0..(seed % 5))
            .map(|_| (0..dim).map(|_| rand::Rng::gen_bool(&mut r, 0.5)).collect())
            .collect();
        let s = Subspace2::span(dim, &vs);
        let perp = s.orthogonal_complement();
        prop_assert_eq!(s.rank() + perp.rank(), dim);
        prop_assert_eq!(perp.orthogonal_complement(), s.clone());
        for v in s.basis() {
            prop_assert!(s.contains(&v));
        }
    }

    #[test]
    fn ib_elimination_preserves_the_subspace(seed in any::<u64>()) {
        let (g, n) = random_ib_host(&mut rng(seed), 4, 4, IB);
        let run = ib_reduce(&g, n, IB).unwrap();
        prop_assert_eq!(ib_subspace(&run.result, IB).unwrap(), ib_subspace(&g, IB).unwrap());
    }
}
