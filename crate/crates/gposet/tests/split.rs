mod common;

use common::{brute_split, induced};
use gposet::split::SplitStatus;
use gposet::{build_interval, split_classify, verify_disconnection_theorem, Canonicalizer, Graph};
use proptest::prelude::*;

fn graph_strategy(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

#[test]
fn d_v_constructions_disconnect() {
    let canon = Canonicalizer::new(10);
    // Connected, triangle-free and without pendants.
    for h in [Graph::cycle(4).unwrap(), Graph::cycle(5).unwrap(), Graph::complete_multipartite(&[2, 3])] {
        assert!(h.is_connected() && !h.contains_triangle() && !h.has_pendant());
        for v in 0..h.order() {
            let g = h.d_v_construction(v).unwrap();
            let iv = build_interval(&canon, &h, &g, false).unwrap();
            assert!(iv.interior_disconnected(), "{h:?} at {v}");
            let r = split_classify(&canon, &h, &g).unwrap();
            assert_eq!(r.occurrences.len(), 2);
            assert_eq!(r.status, SplitStatus::StronglyZeroSplit);
        }
    }
    // A pendant lets a third copy of P3 straddle both halves.
    let p3 = Graph::path(3).unwrap();
    let g = p3.d_v_construction(0).unwrap();
    assert!(split_classify(&canon, &p3, &g).unwrap().occurrences.len() > 2);
    assert!(verify_disconnection_theorem(&canon, &p3, &g).unwrap());
}

#[test]
fn single_occurrence_is_not_split() {
    let canon = Canonicalizer::new(10);
    let r = split_classify(&canon, &Graph::cycle(5).unwrap(), &Graph::cycle(5).unwrap()).unwrap();
    assert_eq!(r.status, SplitStatus::NotZeroSplit);
    assert!(split_classify(&canon, &Graph::complete(3), &Graph::cycle(5).unwrap()).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn classification_matches_brute_force(g in graph_strategy(3, 7), mask in any::<u32>()) {
        let canon = Canonicalizer::new(10);
        let h = induced(&g, mask & ((1 << g.order()) - 1));
        prop_assume!(h.order() > 0);
        let r = split_classify(&canon, &h, &g).unwrap();
        prop_assume!(r.occurrences.len() <= 14);
        let (zero, strong) = brute_split(&h, &g);
        prop_assert_eq!(r.status == SplitStatus::StronglyZeroSplit, strong);
        prop_assert_eq!(r.status != SplitStatus::NotZeroSplit, zero);
        if r.status == SplitStatus::ZeroSplitOnly {
            let w = r.witness.unwrap();
            let a = g.induced_subgraph(&w.eta.with(w.i)).unwrap();
            let b = g.induced_subgraph(&w.phi.with(w.j)).unwrap();
            prop_assert!(canon.is_isomorphic(&a, &b).unwrap());
        }
    }

    #[test]
    fn disconnection_theorem_holds(g in graph_strategy(4, 8), mask in any::<u32>()) {
        let canon = Canonicalizer::new(10);
        let h = induced(&g, mask & ((1 << g.order()) - 1));
        prop_assume!(h.order() > 0 && g.order() >= h.order() + 3);
        prop_assert!(verify_disconnection_theorem(&canon, &h, &g).unwrap());
    }
}
