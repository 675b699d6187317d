//! Property tests for the structural invariants: canonical-form invariance
//! under relabeling, monotonicity of component counts, round-trip identity of
//! both formats, and the mode/independence implications.

use proptest::prelude::*;

use cutdom_core::families;
use cutdom_core::io;
use cutdom_core::predicates::{self, Mode};
use cutdom_core::{EdgeSet, Graph};

/// Random graph on 1..=max_n vertices as (n, pairs), via a random subset of
/// the upper-triangle slots.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let slots = n * (n - 1) / 2;
        (Just(n), 0u64..(1u64 << slots)).prop_map(|(n, mask)| {
            let mut pairs = Vec::new();
            let (mut u, mut v) = (0, 1);
            for s in 0..n * (n - 1) / 2 {
                if mask >> s & 1 == 1 {
                    pairs.push((u, v));
                }
                u += 1;
                if u == v {
                    u = 0;
                    v += 1;
                }
            }
            Graph::new(n, &pairs).unwrap()
        })
    })
}

fn permuted(g: &Graph, perm: &[usize]) -> Graph {
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
    Graph::new(g.vertex_count(), &pairs).unwrap()
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant(
        g in arb_graph(6),
        seed in any::<u64>(),
    ) {
        // derive a permutation from the seed by repeated swaps
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = permuted(&g, &perm);
        prop_assert_eq!(g.canonical_form().unwrap(), h.canonical_form().unwrap());
    }

    #[test]
    fn component_count_is_monotone_in_the_removed_set(
        g in arb_graph(6),
        removal in any::<u64>(),
        extra in any::<u64>(),
    ) {
        let m = g.edge_count();
        let small = keep_bits(m, removal);
        let large = keep_bits(m, removal | extra);
        prop_assert!(small.is_subset_of(&large));
        prop_assert!(
            g.component_count(&small).unwrap() <= g.component_count(&large).unwrap()
        );
    }

    #[test]
    fn edge_neighbor_symmetry(g in arb_graph(6)) {
        for e in 0..g.edge_count() {
            for f in g.edge_neighbors(e).unwrap().iter() {
                prop_assert!(g.edge_neighbors(f).unwrap().contains(e));
            }
        }
    }

    #[test]
    fn format_round_trips(g in arb_graph(8)) {
        let el = io::write_edgelist(&g);
        prop_assert_eq!(&io::parse_edgelist(&el).unwrap(), &g);
        let g6 = io::write_graph6(&g).unwrap();
        prop_assert_eq!(&io::parse_graph6(&g6).unwrap(), &g);
        // writing what we parsed reproduces the bytes
        prop_assert_eq!(io::write_graph6(&io::parse_graph6(&g6).unwrap()).unwrap(), g6);
    }

    #[test]
    fn parsers_return_structured_errors_on_noise(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let text = String::from_utf8_lossy(&bytes).into_owned();
        // any outcome is fine as long as it is a Result, not a panic
        let _ = io::parse_edgelist(&text);
        let _ = io::parse_graph6(&text);
    }

    #[test]
    fn independence_implies_irredundance_and_strict_implies_literal(
        g in arb_graph(5).prop_filter("connected", |g| g.is_connected() && g.vertex_count() >= 2),
        sub in any::<u64>(),
    ) {
        let f = keep_bits(g.edge_count(), sub);
        for mode in [Mode::Literal, Mode::Strict] {
            if predicates::is_ec_independent(&g, &f, mode).unwrap() {
                prop_assert!(predicates::is_ec_irredundant(&g, &f, mode).unwrap());
            }
        }
        if predicates::is_ec_irredundant(&g, &f, Mode::Strict).unwrap() {
            prop_assert!(predicates::is_ec_irredundant(&g, &f, Mode::Literal).unwrap());
        }
        if predicates::is_ec_independent(&g, &f, Mode::Strict).unwrap() {
            prop_assert!(predicates::is_ec_independent(&g, &f, Mode::Literal).unwrap());
        }
    }
}

fn keep_bits(m: usize, raw: u64) -> EdgeSet {
    let indices: Vec<usize> = (0..m).filter(|&i| raw >> i & 1 == 1).collect();
    EdgeSet::from_indices(m, &indices).unwrap()
}

/// Every minimal edge cut dominating set is maximal edge cut irredundant;
/// exhaustive on the n <= 4 catalogue (the harness covers n <= 6).
#[test]
fn minimal_ecd_sets_are_maximal_ec_irredundant_small() {
    for n in 2..=4 {
        for g in families::all_connected_graphs(n).unwrap() {
            for f in cutdom_core::cutdom::enumerate_minimal_ecd(&g, 20).unwrap() {
                assert!(predicates::is_maximal_ec_irredundant(&g, &f, Mode::Literal).unwrap());
            }
        }
    }
}
