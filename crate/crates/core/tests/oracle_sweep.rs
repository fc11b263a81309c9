//! Cross-module invariant sweeps over a small catalog. The full-size
//! exhaustive runs live in the acceptance suite; these keep the same
//! invariants honest at a bound where `cargo test` stays fast.

use powergraph::bitset::BitSet;
use powergraph::catalog::{generate, CatalogSpec};
use powergraph::classify;
use powergraph::forbidden::{self, C4Mode, PatternGraph};
use powergraph::groups::{self, FiniteGroup};
use powergraph::numth;
use powergraph::pgraph::{self, power_graph};

const SWEEP_BOUND: usize = 60;

fn sweep_catalog() -> Vec<FiniteGroup> {
    generate(&CatalogSpec::all(SWEEP_BOUND)).expect("catalog generation")
}

#[test]
fn structural_predicates_match_search() {
    for g in sweep_catalog() {
        let graph = power_graph(&g);
        let claw = forbidden::is_claw_free(&graph);
        assert_eq!(
            classify::claw_free_structural(&g),
            claw.is_none(),
            "claw mismatch on {}",
            g.label()
        );
        let k14 = forbidden::is_k1r_free(&graph, 4);
        assert_eq!(
            classify::k14_free_structural(&g),
            k14.is_none(),
            "k14 mismatch on {}",
            g.label()
        );
        let c4 = forbidden::has_induced_c4(&graph);
        let all_pairs = forbidden::c4_free_structural(&g, C4Mode::AllPairs);
        let maximal = forbidden::c4_free_structural(&g, C4Mode::MaximalOnly);
        assert_eq!(all_pairs.is_none(), c4.is_none(), "c4 mismatch on {}", g.label());
        assert_eq!(all_pairs.is_none(), maximal.is_none(), "mode mismatch on {}", g.label());
        if let Some((x, y)) = all_pairs {
            assert!(forbidden::pair_violates(&g, x, y));
        }
        if let Some((x, y)) = maximal {
            assert!(forbidden::pair_violates(&g, x, y));
        }
    }
}

#[test]
fn specialized_detectors_agree_with_generic_search() {
    for g in sweep_catalog() {
        let graph = power_graph(&g);
        for (fast, pattern) in [
            (forbidden::is_k1r_free(&graph, 3), PatternGraph::claw()),
            (forbidden::is_k1r_free(&graph, 4), PatternGraph::star(4)),
            (forbidden::has_induced_c4(&graph), PatternGraph::c4()),
            (forbidden::is_triangle_free(&graph), PatternGraph::triangle()),
        ] {
            let generic = forbidden::find_induced(&graph, &pattern);
            assert_eq!(
                fast.is_none(),
                generic.is_none(),
                "{} on {}",
                pattern.name(),
                g.label()
            );
            for witness in [fast, generic].into_iter().flatten() {
                assert!(
                    forbidden::verify_witness(&graph, &pattern, &witness),
                    "witness for {} on {} does not re-verify",
                    pattern.name(),
                    g.label()
                );
            }
        }
    }
}

/// Exhaustive k-subset oracle, independent of the backtracking matcher:
/// a 4-set induces C4 iff it has 4 edges all of degree 2; a (r+1)-set
/// induces K_{1,r} iff degrees are {r, 1, .., 1}; a 3-set induces K3 iff
/// all pairs are adjacent.
fn subsets_with<F: FnMut(&[usize]) -> bool>(n: usize, k: usize, mut pred: F) -> bool {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return false;
    }
    loop {
        if pred(&idx) {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        if idx[i] == i + n - k {
            return false;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn induced_degrees(graph: &powergraph::pgraph::PowerGraph, vs: &[usize]) -> Vec<usize> {
    let mut degs: Vec<usize> = vs
        .iter()
        .map(|&u| vs.iter().filter(|&&w| w != u && graph.is_adjacent(u, w)).count())
        .collect();
    degs.sort_unstable();
    degs
}

#[test]
fn detectors_match_exhaustive_subset_scan() {
    for g in sweep_catalog().into_iter().filter(|g| g.order() <= 28) {
        let graph = power_graph(&g);
        let n = graph.vertex_count();

        let c4_brute = subsets_with(n, 4, |vs| induced_degrees(&graph, vs) == [2, 2, 2, 2]);
        assert_eq!(forbidden::has_induced_c4(&graph).is_some(), c4_brute, "{}", g.label());

        let claw_brute = subsets_with(n, 4, |vs| induced_degrees(&graph, vs) == [1, 1, 1, 3]);
        assert_eq!(forbidden::is_k1r_free(&graph, 3).is_some(), claw_brute, "{}", g.label());

        let k14_brute = subsets_with(n, 5, |vs| induced_degrees(&graph, vs) == [1, 1, 1, 1, 4]);
        assert_eq!(forbidden::is_k1r_free(&graph, 4).is_some(), k14_brute, "{}", g.label());

        let k3_brute = subsets_with(n, 3, |vs| induced_degrees(&graph, vs) == [2, 2, 2]);
        assert_eq!(forbidden::is_triangle_free(&graph).is_some(), k3_brute, "{}", g.label());
    }
}

#[test]
fn power_graph_construction_routes_agree() {
    for g in sweep_catalog() {
        let graph = power_graph(&g);
        let members: Vec<BitSet> = g
            .elements()
            .map(|x| groups::cyclic_subgroup(&g, x).members)
            .collect();
        let mut edges = 0usize;
        for x in g.elements() {
            for y in g.elements() {
                let naive = x != y && (members[y].contains(x) || members[x].contains(y));
                let (ox, oy) = (g.element_order(x), g.element_order(y));
                let shortcut = x != y
                    && ((oy % ox == 0 && members[y].contains(x))
                        || (ox % oy == 0 && members[x].contains(y)));
                assert_eq!(graph.is_adjacent(x, y), naive, "{} ({x},{y})", g.label());
                assert_eq!(naive, shortcut, "{} ({x},{y})", g.label());
                edges += usize::from(naive);
            }
        }
        assert_eq!(graph.edge_count() * 2, edges, "{}", g.label());
    }
}

#[test]
fn hughes_idempotence_restricted_and_recomputed() {
    for g in sweep_catalog() {
        for p in numth::factorize(g.order() as u64).unwrap().primes() {
            let h = groups::hughes_subgroup(&g, p);
            // recompute inside the carrier
            let again = groups::hughes_subgroup_within(&g, &h.bits, p);
            assert_eq!(again, h.bits, "{} p={p}", g.label());
            // recompute on the extracted subgroup and map back
            let (sub, map) = g.restrict_to_subgroup(&h.bits).unwrap();
            let inner = groups::hughes_subgroup(&sub, p);
            let mapped = BitSet::from_iter(g.order(), inner.bits.iter().map(|i| map[i]));
            assert_eq!(mapped, h.bits, "{} p={p}", g.label());
        }
    }
}

#[test]
fn sylow_orders_exact_over_catalog() {
    for g in sweep_catalog() {
        for p in numth::factorize(g.order() as u64).unwrap().primes() {
            let s = groups::sylow_subgroup(&g, p).expect("sylow search");
            assert_eq!(
                s.count() as u64,
                groups::p_part(g.order() as u64, p),
                "{} p={p}",
                g.label()
            );
            assert!(groups::is_subgroup_set(&g, &s.bits), "{} p={p}", g.label());
        }
    }
}

#[test]
fn maximal_cyclics_cover_every_group() {
    for g in sweep_catalog() {
        let subs = groups::maximal_cyclic_subgroups(&g);
        let mut cover = BitSet::new(g.order());
        for s in &subs {
            assert_eq!(s.members.count(), s.order);
            cover.union_with(&s.members);
        }
        assert_eq!(cover.count(), g.order(), "{}", g.label());
        // No returned subgroup contained in another.
        for (i, a) in subs.iter().enumerate() {
            for (j, b) in subs.iter().enumerate() {
                if i != j {
                    assert!(!a.members.is_subset(&b.members), "{}", g.label());
                }
            }
        }
    }
}

#[test]
fn product_spectra_are_lcm_sets() {
    let pairs = [
        (groups::cyclic(4).unwrap(), groups::cyclic(6).unwrap()),
        (groups::symmetric(3).unwrap(), groups::cyclic(2).unwrap()),
        (groups::generalized_quaternion(8).unwrap(), groups::cyclic(3).unwrap()),
    ];
    for (g, h) in pairs {
        let p = groups::direct_product(&g, &h).unwrap();
        let expected: std::collections::BTreeSet<u64> = groups::order_spectrum(&g)
            .into_iter()
            .flat_map(|a| {
                groups::order_spectrum(&h)
                    .into_iter()
                    .map(move |b| numth::lcm(a, b))
            })
            .collect();
        assert_eq!(groups::order_spectrum(&p), expected, "{}", p.label());
    }
}

#[test]
fn eppo_groups_are_c4_free_but_not_conversely() {
    let mut eppo_seen = 0;
    for g in sweep_catalog() {
        if classify::eppo(&g) {
            eppo_seen += 1;
            let graph = power_graph(&g);
            assert!(
                forbidden::has_induced_c4(&graph).is_none(),
                "{} is eppo but has a four-cycle",
                g.label()
            );
        }
    }
    assert!(eppo_seen > 10);
    // the converse direction fails on Z6 and is not asserted anywhere
    let z6 = groups::cyclic(6).unwrap();
    assert!(!classify::eppo(&z6));
    assert!(forbidden::has_induced_c4(&power_graph(&z6)).is_none());
}

#[test]
fn independence_number_brute_force_small() {
    for g in sweep_catalog().into_iter().filter(|g| g.order() <= 16) {
        let graph = power_graph(&g);
        let exact = pgraph::independence_number(&graph).unwrap();
        let n = graph.vertex_count();
        let brute = (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|u| {
                    mask >> u & 1 == 0
                        || (u + 1..n).all(|v| mask >> v & 1 == 0 || !graph.is_adjacent(u, v))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap();
        assert_eq!(exact, brute, "{}", g.label());
    }
}

#[test]
fn audits_have_no_disagreements_at_sweep_bound() {
    for g in sweep_catalog() {
        let report = classify::audit_group(&g);
        let bad: Vec<_> = report.disagreements().collect();
        assert!(bad.is_empty(), "{}: {bad:?}", g.label());
    }
}

/// Mixed products sit outside the catalog families; the audits must still
/// come back clean on them.
#[test]
fn audits_agree_on_exotic_products() {
    use powergraph::catalog::GroupDescriptor;
    for descriptor in [
        "Z4xS3",
        "Z8xS3",
        "Z6xS3",
        "D8xZ3",
        "Q8xZ3",
        "Q8xZ5",
        "Q8xQ8",
        "D8xD8",
        "SD16xZ3",
        "M27xZ2",
        "A4xZ2",
        "S3xS3",
        "Z9xZ7:Z3(2)",
        "Z3xZ3xZ7:Z3(2)",
        "Z2xZ2xD18",
        "Z5:Z4(2)xZ3",
    ] {
        let g = GroupDescriptor::parse(descriptor)
            .unwrap_or_else(|e| panic!("{descriptor}: {e}"))
            .build()
            .unwrap_or_else(|e| panic!("{descriptor}: {e}"));
        let report = classify::audit_group(&g);
        let bad: Vec<_> = report.disagreements().collect();
        assert!(bad.is_empty(), "{descriptor}: {bad:?}");
    }
}
