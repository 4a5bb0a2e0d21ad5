use proptest::prelude::*;

use tarlab::canon::canonical_form;
use tarlab::census::{uniqueness_classes_in, GraphSource};
use tarlab::feasibility::{closed_neighborhood, forcing_closure, is_feasible, leaf_strip, ForcingRule};
use tarlab::generate::{generate_nonisomorphic, GraphFilter};
use tarlab::graph6::{parse_graph6, write_graph6};
use tarlab::iso::IsoMethod;
use tarlab::tar::build_tar;
use tarlab::{Graph, ParameterKind, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v);
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn graph_and_set(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let full = (1u32 << g.order()) - 1;
        (Just(g), 0..=full, 0..=full).prop_map(|(g, a, b)| (g, VertexSet(a), VertexSet(b)))
    })
}

fn graph_and_perm(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.order()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

const RULES: [ForcingRule; 3] = [ForcingRule::Standard, ForcingRule::Psd, ForcingRule::Skew];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closure_is_idempotent_and_monotone((g, a, b) in graph_and_set(9)) {
        for rule in RULES {
            let ca = forcing_closure(rule, &g, a);
            prop_assert!(a.is_subset(ca));
            prop_assert_eq!(forcing_closure(rule, &g, ca), ca);
            let cab = forcing_closure(rule, &g, a.union(b));
            prop_assert!(ca.is_subset(cab));
        }
    }

    #[test]
    fn standard_closure_is_contained_in_psd_and_skew((g, a, _) in graph_and_set(9)) {
        let std = forcing_closure(ForcingRule::Standard, &g, a);
        prop_assert!(std.is_subset(forcing_closure(ForcingRule::Psd, &g, a)));
        prop_assert!(std.is_subset(forcing_closure(ForcingRule::Skew, &g, a)));
    }

    #[test]
    fn power_domination_is_forcing_from_the_closed_neighborhood((g, a, _) in graph_and_set(9)) {
        let expect = forcing_closure(ForcingRule::Standard, &g, closed_neighborhood(&g, a)) == g.all();
        prop_assert_eq!(is_feasible(ParameterKind::PowerDomination, &g, a).unwrap(), expect);
    }

    #[test]
    fn vertex_cover_complements_independent_sets((g, a, _) in graph_and_set(9)) {
        let cover = is_feasible(ParameterKind::VertexCover, &g, a).unwrap();
        let ind = is_feasible(ParameterKind::Independence, &g, a.complement(g.order())).unwrap();
        prop_assert_eq!(cover, ind);
    }

    #[test]
    fn graph6_round_trip(g in graph(32)) {
        let text = write_graph6(&g);
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in graph_and_perm(9)) {
        prop_assert_eq!(canonical_form(&g), canonical_form(&g.relabel(&perm)));
    }

    #[test]
    fn tar_canonical_form_ignores_labels((g, perm) in graph_and_perm(6)) {
        let h = g.relabel(&perm);
        for kind in [ParameterKind::Domination, ParameterKind::SkewZeroForcing, ParameterKind::Irredundance] {
            let a = build_tar(kind, &g).unwrap();
            let b = build_tar(kind, &h).unwrap();
            prop_assert_eq!(a.canonical_form(), b.canonical_form());
            prop_assert_eq!(a.values(), b.values());
        }
    }

    #[test]
    fn vertex_set_display_round_trip(bits in any::<u32>()) {
        let s = VertexSet(bits);
        prop_assert_eq!(s.to_string().parse::<VertexSet>().unwrap(), s);
    }

    #[test]
    fn leaf_strip_empties_iff_skew_forces_from_nothing(g in graph(10)) {
        let empties = leaf_strip(&g).is_none();
        let forced = forcing_closure(ForcingRule::Skew, &g, VertexSet(0)) == g.all();
        prop_assert_eq!(empties, forced);
    }

    #[test]
    fn tar_edges_join_sets_of_adjacent_parity(g in graph(6)) {
        for kind in ParameterKind::ALL {
            let Ok(t) = build_tar(kind, &g) else { continue };
            let sg = t.to_set_graph();
            for (a, b) in sg.edges() {
                let (x, y) = (sg.labels[a], sg.labels[b]);
                prop_assert_eq!(x.sym_diff(y).len(), 1);
            }
            prop_assert!(sg.bipartition().is_some());
        }
    }
}

#[test]
fn census_is_independent_of_thread_count() {
    let graphs = generate_nonisomorphic(6, GraphFilter::NoIsolated).unwrap();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| uniqueness_classes_in(ParameterKind::PsdZeroForcing, &graphs, Some(IsoMethod::SetSystem)).unwrap())
    };
    assert_eq!(run(1), run(4));
    let source = GraphSource::Builtin;
    let a = tarlab::census::run_census(ParameterKind::Domination, 6, &source).unwrap();
    let b = tarlab::census::run_census(ParameterKind::Domination, 6, &source).unwrap();
    assert_eq!(a, b);
}
