//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Everything runs over the full catalog at max order 200 (all families);
//! the shared per-group search results are computed once.

use powergraph::bitset::BitSet;
use powergraph::catalog::{generate, CatalogSpec, GroupDescriptor};
use powergraph::classify;
use powergraph::forbidden::{self, C4Mode, PatternGraph, Witness};
use powergraph::groups::{self, FiniteGroup};
use powergraph::numth;
use powergraph::pgraph::{self, PowerGraph};
use std::sync::OnceLock;
use std::time::Instant;

const MAX_ORDER: usize = 200;

struct Entry {
    group: FiniteGroup,
    graph: PowerGraph,
    claw: Option<Witness>,
    k14: Option<Witness>,
    c4: Option<Witness>,
    triangle: Option<Witness>,
}

fn catalog() -> &'static [Entry] {
    static CATALOG: OnceLock<Vec<Entry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        generate(&CatalogSpec::all(MAX_ORDER))
            .expect("catalog generation")
            .into_iter()
            .map(|group| {
                let graph = pgraph::power_graph(&group);
                Entry {
                    claw: forbidden::is_k1r_free(&graph, 3),
                    k14: forbidden::is_k1r_free(&graph, 4),
                    c4: forbidden::has_induced_c4(&graph),
                    triangle: forbidden::is_triangle_free(&graph),
                    graph,
                    group,
                }
            })
            .collect()
    })
}

fn build(descriptor: &str) -> FiniteGroup {
    GroupDescriptor::parse(descriptor)
        .expect("descriptor")
        .build()
        .expect("constructible")
}

#[test]
fn criterion_01_claw_free_classification() {
    // Timed fresh, end to end: catalog construction plus the claw sweep.
    let start = Instant::now();
    let cat = generate(&CatalogSpec::all(MAX_ORDER)).expect("catalog generation");
    let mut disagreements = Vec::new();
    for g in &cat {
        let graph = pgraph::power_graph(g);
        let brute_free = forbidden::is_k1r_free(&graph, 3).is_none();
        if classify::claw_free_structural(g) != brute_free {
            disagreements.push(g.label().to_string());
        }
    }
    let elapsed = start.elapsed();
    assert!(disagreements.is_empty(), "disagreements: {disagreements:?}");
    assert!(
        elapsed.as_secs() < 60,
        "claw sweep took {elapsed:?}, budget is 60s"
    );
    println!(
        "criterion 1 (claw-free classification, {} groups, {elapsed:.1?}): PASS",
        cat.len()
    );
}

#[test]
fn criterion_02_k14_free_classification() {
    let mut q8_like = 0;
    let mut klein_like = 0;
    for e in catalog() {
        let brute_free = e.k14.is_none();
        assert_eq!(
            classify::k14_free_structural(&e.group),
            brute_free,
            "k14 mismatch on {}",
            e.group.label()
        );
        if e.claw.is_none() {
            assert!(brute_free, "claw-free implies K1,4-free: {}", e.group.label());
        }
        if brute_free && !groups::is_cyclic(&e.group) {
            let g = &e.group;
            let involutions = g.elements().filter(|&x| g.element_order(x) == 2).count();
            if g.order() == 8 && involutions == 1 {
                q8_like += 1;
            } else if g.order() == 4 && groups::exponent(g) == 2 {
                klein_like += 1;
            } else {
                panic!("unexpected non-cyclic K1,4-free group {}", g.label());
            }
        }
    }
    assert!(q8_like >= 1 && klein_like >= 1);
    println!("criterion 2 (K1,4-free classification; non-cyclic passers are Q8/Klein only): PASS");
}

#[test]
fn criterion_03_c4_criterion_biconditional() {
    for e in catalog() {
        let all_pairs = forbidden::c4_free_structural(&e.group, C4Mode::AllPairs);
        let maximal = forbidden::c4_free_structural(&e.group, C4Mode::MaximalOnly);
        assert_eq!(
            e.c4.is_some(),
            all_pairs.is_some(),
            "search vs criterion on {}",
            e.group.label()
        );
        assert_eq!(
            all_pairs.is_some(),
            maximal.is_some(),
            "all_pairs vs maximal_only on {}",
            e.group.label()
        );
        for (x, y) in [all_pairs, maximal].into_iter().flatten() {
            assert!(
                forbidden::pair_violates(&e.group, x, y),
                "returned pair does not re-verify on {}",
                e.group.label()
            );
        }
    }
    println!("criterion 3 (four-cycle criterion biconditional and mode agreement): PASS");
}

#[test]
fn criterion_04_nilpotent_c4_classification() {
    for e in catalog() {
        if groups::is_nilpotent(&e.group) {
            let structural = classify::nilpotent_c4_structural(&e.group).expect("nilpotent");
            assert_eq!(
                structural,
                e.c4.is_none(),
                "nilpotent classification mismatch on {}",
                e.group.label()
            );
        }
    }

    let passing = build("Z6xZ2");
    assert!(classify::nilpotent_c4_structural(&passing).unwrap());
    assert!(forbidden::has_induced_c4(&pgraph::power_graph(&passing)).is_none());

    let failing = build("Z4xZ2xZ3");
    assert!(!classify::nilpotent_c4_structural(&failing).unwrap());
    let graph = pgraph::power_graph(&failing);
    let witness = forbidden::has_induced_c4(&graph).expect("four-cycle exists");
    assert!(forbidden::verify_witness(&graph, &PatternGraph::c4(), &witness));
    println!("criterion 4 (nilpotent four-cycle classification): PASS");
}

#[test]
fn criterion_05_eppo_groups_are_c4_free() {
    let mut eppo_labels = Vec::new();
    for e in catalog() {
        if classify::eppo(&e.group) {
            assert!(
                e.c4.is_none(),
                "{} has prime-power orders but an induced four-cycle",
                e.group.label()
            );
            eppo_labels.push(e.group.label().to_string());
        }
        if numth::is_prime_power(e.group.order() as u64) {
            assert!(classify::eppo(&e.group), "{}", e.group.label());
        }
    }
    for wanted in ["S3", "S4", "A4", "Z7:Z3(2)"] {
        assert!(eppo_labels.iter().any(|l| l == wanted), "missing {wanted}");
    }
    // The converse is explicitly not asserted: Z6 is four-cycle-free but
    // has an element of non-prime-power order.
    let z6 = catalog()
        .iter()
        .find(|e| e.group.label() == "Z6")
        .expect("Z6 in catalog");
    assert!(z6.c4.is_none() && !classify::eppo(&z6.group));
    println!(
        "criterion 5 (eppo groups four-cycle-free, {} eppo groups; Z6 converse not asserted): PASS",
        eppo_labels.len()
    );
}

#[test]
fn criterion_06_element_order_forms() {
    for e in catalog() {
        if e.c4.is_none() {
            assert_eq!(
                classify::order_spectrum_conforms(&e.group),
                None,
                "order-form violator in four-cycle-free {}",
                e.group.label()
            );
        }
    }
    let z60 = catalog()
        .iter()
        .find(|e| e.group.label() == "Z60")
        .expect("Z60 in catalog");
    let violator = classify::order_spectrum_conforms(&z60.group).expect("60 = 2^2*3*5");
    assert_eq!(z60.group.element_order(violator), 60);
    let witness = z60.c4.as_ref().expect("Z60 has an induced four-cycle");
    assert!(forbidden::verify_witness(&z60.graph, &PatternGraph::c4(), witness));
    println!("criterion 6 (element order forms under four-cycle-freeness): PASS");
}

#[test]
fn criterion_07_centralizer_and_center_audits() {
    let mut checked = 0usize;
    for e in catalog() {
        if e.c4.is_some() {
            continue;
        }
        let verdicts = classify::centralizer_audits(&e.group, &e.graph).expect("certified");
        for v in &verdicts {
            assert!(v.agrees, "{}: {v:?}", e.group.label());
        }
        checked += verdicts.len();
        if !numth::is_prime_power(e.group.order() as u64) {
            let (verdicts, _) = classify::center_audits(&e.group, &e.graph).expect("certified");
            for v in &verdicts {
                assert!(v.agrees, "{}: {v:?}", e.group.label());
            }
            checked += verdicts.len();
        }
    }
    assert!(checked > 500);
    println!("criterion 7 (centralizer/center audits, {checked} verdicts, zero failures): PASS");
}

#[test]
fn criterion_08_three_maximal_cyclics() {
    let mut seen = 0;
    for e in catalog() {
        if e.k14.is_some() || groups::is_cyclic(&e.group) {
            continue;
        }
        seen += 1;
        let g = &e.group;
        let maximal = groups::maximal_cyclic_subgroups(g);
        assert_eq!(maximal.len(), 3, "{}", g.label());
        assert!(
            maximal.iter().all(|m| g.order() == 2 * m.order),
            "{}: not all of index 2",
            g.label()
        );
        let meets: Vec<BitSet> = [(0, 1), (0, 2), (1, 2)]
            .iter()
            .map(|&(i, j)| maximal[i].members.intersection(&maximal[j].members))
            .collect();
        assert!(
            meets[0] == meets[1] && meets[1] == meets[2],
            "{}: pairwise intersections differ",
            g.label()
        );
    }
    assert!(seen >= 2, "expected Q8 and the Klein group to be exercised");
    println!("criterion 8 (three maximal cyclic subgroups, equal meets, index 2): PASS");
}

#[test]
fn criterion_09_independence_numbers() {
    let mut checked = 0;
    for e in catalog() {
        let g = &e.group;
        if g.order() > 128 || !groups::is_cyclic(g) {
            continue;
        }
        let f = numth::factorize(g.order() as u64).expect("positive order");
        let claw_shape = match f.pairs() {
            [] | [_] => true,
            &[(_, e1), (_, e2)] => e1.min(e2) <= 1,
            _ => false,
        };
        if !claw_shape {
            continue;
        }
        let alpha = pgraph::independence_number(&e.graph).expect("within bound");
        assert!(
            alpha == 1 || alpha == 2,
            "{}: alpha = {alpha}",
            g.label()
        );
        checked += 1;
    }
    assert!(checked > 50);

    let z6 = catalog()
        .iter()
        .find(|e| e.group.label() == "Z6")
        .expect("Z6 in catalog");
    assert_eq!(pgraph::independence_number(&z6.graph).unwrap(), 2);
    println!("criterion 9 (independence numbers of claw-free cyclic groups, {checked} groups): PASS");
}

#[test]
fn criterion_10_triangle_free_iff_elementary_2() {
    for e in catalog() {
        let elementary2 = groups::exponent(&e.group) <= 2;
        assert_eq!(
            e.triangle.is_none(),
            elementary2,
            "triangle-free mismatch on {}",
            e.group.label()
        );
        if elementary2 {
            // elementary abelian 2-groups commute
            let g = &e.group;
            assert!(g
                .elements()
                .all(|a| g.elements().all(|b| g.op(a, b) == g.op(b, a))));
        }
    }
    println!("criterion 10 (triangle-free iff elementary abelian 2-group): PASS");
}

#[test]
fn criterion_11_hughes_idempotence() {
    for e in catalog() {
        let g = &e.group;
        for p in numth::factorize(g.order() as u64).expect("positive").primes() {
            let h = groups::hughes_subgroup(g, p);
            let recomputed = groups::hughes_subgroup_within(g, &h.bits, p);
            assert_eq!(recomputed, h.bits, "{} p={p}", g.label());
            if g.order() <= 100 {
                // also recompute on the extracted subgroup and map back
                let (sub, map) = g.restrict_to_subgroup(&h.bits).expect("subgroup");
                let inner = groups::hughes_subgroup(&sub, p);
                let mapped = BitSet::from_iter(g.order(), inner.bits.iter().map(|i| map[i]));
                assert_eq!(mapped, h.bits, "{} p={p} (restricted)", g.label());
            }
        }
    }
    println!("criterion 11 (Hughes subgroup idempotence): PASS");
}

#[test]
fn criterion_12_audit_reports_byte_identical() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out1 = dir.path().join("audit1.json");
    let out2 = dir.path().join("audit2.json");
    for out in [&out1, &out2] {
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_powergraph"))
            .args(["audit", "--max-order", "200", "--out"])
            .arg(out)
            .stdout(std::process::Stdio::null())
            .status()
            .expect("run audit");
        assert!(status.success(), "audit run failed");
    }
    let a = std::fs::read(&out1).expect("first report");
    let b = std::fs::read(&out2).expect("second report");
    assert!(!a.is_empty() && a == b, "reports differ between runs");
    println!("criterion 12 (consecutive audit runs byte-identical, {} bytes): PASS", a.len());
}
