//! Forbidden induced subgraph detection: a generic small-pattern backtracking
//! search plus specialized fast paths for stars, four-cycles and triangles,
//! and the group-structural four-cycle criterion (a pair of incomparable
//! cyclic subgroups whose intersection order is not a prime power).
//!
//! Every detector returns a witness rather than a bare boolean: audits print
//! human-checkable counterexamples, and witnesses re-verify independently.

use crate::bitset::BitSet;
use crate::groups::{self, FiniteGroup};
use crate::numth;
use crate::pgraph::PowerGraph;

pub const MAX_PATTERN_VERTICES: usize = 6;

/// A small pattern graph (at most [`MAX_PATTERN_VERTICES`] vertices),
/// symmetric and loopless, with the adjacency kept as per-vertex bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternGraph {
    k: usize,
    adj: [u8; MAX_PATTERN_VERTICES],
    name: String,
}

impl PatternGraph {
    pub fn new(k: usize, name: &str, edges: &[(usize, usize)]) -> Self {
        assert!(k <= MAX_PATTERN_VERTICES, "patterns are capped at 6 vertices");
        let mut adj = [0u8; MAX_PATTERN_VERTICES];
        for &(u, v) in edges {
            assert!(u < k && v < k && u != v, "bad pattern edge ({u},{v})");
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        PatternGraph {
            k,
            adj,
            name: name.to_string(),
        }
    }

    /// The star `K_{1,r}`: vertex 0 is the center.
    pub fn star(r: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..=r).map(|leaf| (0, leaf)).collect();
        PatternGraph::new(r + 1, &format!("K1,{r}"), &edges)
    }

    pub fn claw() -> Self {
        Self::star(3)
    }

    pub fn c4() -> Self {
        PatternGraph::new(4, "C4", &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    pub fn triangle() -> Self {
        PatternGraph::new(3, "K3", &[(0, 1), (1, 2), (2, 0)])
    }

    pub fn vertex_count(&self) -> usize {
        self.k
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 != 0
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// The same pattern with vertices relabeled through `perm` (new index =
    /// `perm[old]`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let mut edges = Vec::new();
        for u in 0..self.k {
            for v in u + 1..self.k {
                if self.is_adjacent(u, v) {
                    edges.push((perm[u], perm[v]));
                }
            }
        }
        PatternGraph::new(self.k, &self.name, &edges)
    }
}

/// A located induced copy of a pattern: `vertices[i]` is the graph vertex
/// playing pattern vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pattern: String,
    pub vertices: Vec<usize>,
}

/// Check that the witness vertices induce exactly the pattern's adjacency.
pub fn verify_witness(graph: &PowerGraph, pattern: &PatternGraph, witness: &Witness) -> bool {
    let vs = &witness.vertices;
    if vs.len() != pattern.vertex_count() {
        return false;
    }
    let mut seen = std::collections::HashSet::new();
    if !vs.iter().all(|&v| v < graph.vertex_count() && seen.insert(v)) {
        return false;
    }
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if graph.is_adjacent(vs[i], vs[j]) != pattern.is_adjacent(i, j) {
                return false;
            }
        }
    }
    true
}

/// Backtracking induced-subgraph search. Pattern vertices are assigned in
/// descending pattern-degree order; candidates must match adjacency and
/// non-adjacency against everything already assigned (induced semantics)
/// and have enough graph degree. Candidate vertices are tried ascending, so
/// the first witness found is deterministic.
pub fn find_induced(graph: &PowerGraph, pattern: &PatternGraph) -> Option<Witness> {
    let k = pattern.vertex_count();
    assert!(k <= MAX_PATTERN_VERTICES);
    let n = graph.vertex_count();
    if k == 0 {
        return Some(Witness {
            pattern: pattern.name().to_string(),
            vertices: vec![],
        });
    }
    if k > n {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));

    let mut assigned: Vec<(usize, usize)> = Vec::with_capacity(k); // (pattern vertex, graph vertex)
    search(graph, pattern, &order, &mut assigned).map(|mapping| Witness {
        pattern: pattern.name().to_string(),
        vertices: (0..k).map(|pv| mapping[pv]).collect(),
    })
}

fn search(
    graph: &PowerGraph,
    pattern: &PatternGraph,
    order: &[usize],
    assigned: &mut Vec<(usize, usize)>,
) -> Option<Vec<usize>> {
    let depth = assigned.len();
    if depth == order.len() {
        let mut mapping = vec![0; order.len()];
        for &(pv, gv) in assigned.iter() {
            mapping[pv] = gv;
        }
        return Some(mapping);
    }
    let pu = order[depth];
    let n = graph.vertex_count();
    let mut candidates = BitSet::full(n);
    for &(pv, gv) in assigned.iter() {
        candidates.remove(gv);
        if pattern.is_adjacent(pu, pv) {
            candidates.intersect_with(graph.neighbors(gv));
        } else {
            candidates.difference_with(graph.neighbors(gv));
        }
    }
    let need = pattern.degree(pu);
    for cand in candidates.iter() {
        if graph.degree(cand) < need {
            continue;
        }
        assigned.push((pu, cand));
        if let Some(found) = search(graph, pattern, order, assigned) {
            return Some(found);
        }
        assigned.pop();
    }
    None
}

/// Specialized star search: for each vertex `v` (ascending), look for an
/// independent `r`-set inside `N(v)`. Returns the first witness, center
/// first.
pub fn is_k1r_free(graph: &PowerGraph, r: usize) -> Option<Witness> {
    assert!((2..MAX_PATTERN_VERTICES).contains(&r));
    for v in 0..graph.vertex_count() {
        if graph.degree(v) < r {
            continue;
        }
        let mut leaves = Vec::with_capacity(r);
        if pick_independent(graph, graph.neighbors(v), r, &mut leaves) {
            let mut vertices = vec![v];
            vertices.append(&mut leaves);
            return Some(Witness {
                pattern: format!("K1,{r}"),
                vertices,
            });
        }
    }
    None
}

fn pick_independent(graph: &PowerGraph, from: &BitSet, need: usize, acc: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if from.count() < need {
        return false;
    }
    for v in from.iter().collect::<Vec<_>>() {
        acc.push(v);
        let mut rest = from.clone();
        rest.difference_with(graph.neighbors(v));
        // leaves are chosen ascending, so drop everything up to v
        rest.remove_below(v + 1);
        if pick_independent(graph, &rest, need - 1, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

pub fn is_claw_free(graph: &PowerGraph) -> Option<Witness> {
    is_k1r_free(graph, 3)
}

/// Specialized induced four-cycle search: a nonadjacent pair `(u, w)` whose
/// common neighborhood contains a nonadjacent pair `(x, y)`. The witness is
/// in cycle order `u, x, w, y`.
pub fn has_induced_c4(graph: &PowerGraph) -> Option<Witness> {
    let n = graph.vertex_count();
    for u in 0..n {
        for w in u + 1..n {
            if graph.is_adjacent(u, w) {
                continue;
            }
            let common = graph.common_neighbors(u, w);
            if common.count() < 2 {
                continue;
            }
            for x in common.iter().collect::<Vec<_>>() {
                let mut rest = common.clone();
                rest.difference_with(graph.neighbors(x));
                rest.remove_below(x + 1);
                if let Some(y) = rest.first() {
                    return Some(Witness {
                        pattern: "C4".to_string(),
                        vertices: vec![u, x, w, y],
                    });
                }
            }
        }
    }
    None
}

/// First triangle in lexicographic vertex order, if any.
pub fn is_triangle_free(graph: &PowerGraph) -> Option<Witness> {
    let n = graph.vertex_count();
    for u in 0..n {
        for v in graph.neighbors(u).iter() {
            if v <= u {
                continue;
            }
            if let Some(w) = graph.common_neighbors(u, v).iter().find(|&w| w > v) {
                return Some(Witness {
                    pattern: "K3".to_string(),
                    vertices: vec![u, v, w],
                });
            }
        }
    }
    None
}

/// Scan mode for [`c4_free_structural`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C4Mode {
    /// Scan all pairs of nontrivial elements (the literal criterion).
    AllPairs,
    /// Scan maximal cyclic subgroups: distinct pairs by intersection order,
    /// plus a divisor-pair scan inside each single maximal cyclic subgroup
    /// (a violating pair can live inside one cyclic group, e.g. orders 12
    /// and 18 inside Z36).
    MaximalOnly,
}

/// Group-structural four-cycle criterion: returns a pair `(x, y)` of
/// nontrivial elements with `<x>` and `<y>` incomparable and `|<x> ∩ <y>|`
/// not a prime power, iff such a pair exists. The power graph has an induced
/// four-cycle exactly when this returns a pair.
pub fn c4_free_structural(g: &FiniteGroup, mode: C4Mode) -> Option<(usize, usize)> {
    match mode {
        C4Mode::AllPairs => {
            let members: Vec<BitSet> = g
                .elements()
                .map(|x| groups::cyclic_subgroup(g, x).members)
                .collect();
            for x in g.elements() {
                if x == g.identity() {
                    continue;
                }
                for y in x + 1..g.order() {
                    if y == g.identity() {
                        continue;
                    }
                    let incomparable = !members[x].contains(y) && !members[y].contains(x);
                    if incomparable
                        && !numth::is_prime_power(members[x].intersection_count(&members[y]) as u64)
                    {
                        return Some((x, y));
                    }
                }
            }
            None
        }
        C4Mode::MaximalOnly => {
            let maximal = groups::maximal_cyclic_subgroups(g);
            for (i, a) in maximal.iter().enumerate() {
                if let Some(pair) = violating_pair_within_cyclic(g, a) {
                    return Some(pair);
                }
                for b in &maximal[i + 1..] {
                    let meet = a.members.intersection_count(&b.members) as u64;
                    if !numth::is_prime_power(meet) {
                        return Some((a.generator.min(b.generator), a.generator.max(b.generator)));
                    }
                }
            }
            None
        }
    }
}

/// Inside one cyclic group of order `n`, a violating pair exists iff some
/// divisors `d1 < d2` of `n` have `d1` not dividing `d2` and a
/// non-prime-power gcd; the witnesses are the corresponding power elements.
fn violating_pair_within_cyclic(
    g: &FiniteGroup,
    sub: &groups::CyclicSubgroup,
) -> Option<(usize, usize)> {
    let n = sub.order as u64;
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    for (i, &d1) in divisors.iter().enumerate() {
        for &d2 in &divisors[i + 1..] {
            if d2 % d1 != 0 && !numth::is_prime_power(numth::gcd(d1, d2)) {
                let x = g.pow(sub.generator, n / d1);
                let y = g.pow(sub.generator, n / d2);
                return Some((x.min(y), x.max(y)));
            }
        }
    }
    None
}

/// Re-check that a pair returned by [`c4_free_structural`] really violates
/// the criterion.
pub fn pair_violates(g: &FiniteGroup, x: usize, y: usize) -> bool {
    let cx = groups::cyclic_subgroup(g, x).members;
    let cy = groups::cyclic_subgroup(g, y).members;
    x != g.identity()
        && y != g.identity()
        && !cx.is_subset(&cy)
        && !cy.is_subset(&cx)
        && !numth::is_prime_power(cx.intersection_count(&cy) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{abelian, cyclic, generalized_quaternion, symmetric};
    use crate::pgraph::power_graph;

    #[test]
    fn claw_in_klein_graph() {
        let pg = power_graph(&abelian(&[2, 2]).unwrap());
        let w = find_induced(&pg, &PatternGraph::claw()).expect("klein graph is a claw");
        assert!(verify_witness(&pg, &PatternGraph::claw(), &w));
        assert_eq!(w.vertices[0], 0); // the identity is the center

        let fast = is_claw_free(&pg).expect("specialized search agrees");
        assert!(verify_witness(&pg, &PatternGraph::claw(), &fast));
    }

    #[test]
    fn no_c4_in_complete_graph() {
        let pg = power_graph(&cyclic(9).unwrap());
        assert!(find_induced(&pg, &PatternGraph::c4()).is_none());
        assert!(has_induced_c4(&pg).is_none());
    }

    #[test]
    fn c4_in_z4xz2xz3() {
        let g = abelian(&[4, 2, 3]).unwrap();
        let pg = power_graph(&g);
        let w = find_induced(&pg, &PatternGraph::c4()).expect("C4 exists");
        assert!(verify_witness(&pg, &PatternGraph::c4(), &w));
        let fast = has_induced_c4(&pg).expect("specialized search agrees");
        assert!(verify_witness(&pg, &PatternGraph::c4(), &fast));
    }

    #[test]
    fn q8_star_results() {
        let pg = power_graph(&generalized_quaternion(8).unwrap());
        let claw = is_k1r_free(&pg, 3).expect("Q8 power graph has a claw");
        assert!(verify_witness(&pg, &PatternGraph::star(3), &claw));
        assert!(is_k1r_free(&pg, 4).is_none(), "Q8 power graph is K1,4-free");
    }

    #[test]
    fn z30_has_claw() {
        let pg = power_graph(&cyclic(30).unwrap());
        let w = is_claw_free(&pg).expect("three prime divisors force a claw");
        assert!(verify_witness(&pg, &PatternGraph::claw(), &w));
    }

    #[test]
    fn triangle_results() {
        let star = power_graph(&abelian(&[2, 2, 2]).unwrap());
        assert!(is_triangle_free(&star).is_none());

        let k3 = power_graph(&cyclic(3).unwrap());
        let w = is_triangle_free(&k3).expect("K3 is a triangle");
        assert_eq!(w.vertices, vec![0, 1, 2]);
        assert!(is_triangle_free(&power_graph(&cyclic(4).unwrap())).is_some());
    }

    #[test]
    fn structural_c4_examples() {
        let g = abelian(&[4, 2, 3]).unwrap();
        let pair = c4_free_structural(&g, C4Mode::AllPairs).expect("violating pair");
        assert!(pair_violates(&g, pair.0, pair.1));
        let pair = c4_free_structural(&g, C4Mode::MaximalOnly).expect("violating pair");
        assert!(pair_violates(&g, pair.0, pair.1));

        let q8 = generalized_quaternion(8).unwrap();
        assert_eq!(c4_free_structural(&q8, C4Mode::AllPairs), None);
        assert_eq!(c4_free_structural(&q8, C4Mode::MaximalOnly), None);

        let g = abelian(&[6, 2]).unwrap();
        assert_eq!(c4_free_structural(&g, C4Mode::AllPairs), None);
        assert_eq!(c4_free_structural(&g, C4Mode::MaximalOnly), None);
    }

    #[test]
    fn z36_violation_lives_inside_one_maximal_cyclic() {
        // orders 12 and 18 inside the single maximal cyclic subgroup
        let g = cyclic(36).unwrap();
        let all = c4_free_structural(&g, C4Mode::AllPairs).expect("Z36 has a violating pair");
        assert!(pair_violates(&g, all.0, all.1));
        let max = c4_free_structural(&g, C4Mode::MaximalOnly).expect("same verdict");
        assert!(pair_violates(&g, max.0, max.1));
    }

    #[test]
    fn search_is_invariant_under_pattern_automorphism() {
        let patterns = [
            (PatternGraph::claw(), vec![0usize, 2, 3, 1]), // permute leaves
            (PatternGraph::c4(), vec![1, 2, 3, 0]),        // rotate the cycle
            (PatternGraph::c4(), vec![3, 2, 1, 0]),        // reflect
            (PatternGraph::triangle(), vec![2, 0, 1]),
        ];
        for g in [cyclic(12).unwrap(), abelian(&[4, 2, 3]).unwrap(), symmetric(3).unwrap()] {
            let pg = power_graph(&g);
            for (pattern, perm) in &patterns {
                let permuted = pattern.permuted(perm);
                assert_eq!(
                    find_induced(&pg, pattern).is_some(),
                    find_induced(&pg, &permuted).is_some(),
                    "{} under {:?}",
                    pattern.name(),
                    perm
                );
            }
        }
    }

    #[test]
    fn witnesses_reverify() {
        for g in [
            cyclic(36).unwrap(),
            abelian(&[4, 2, 3]).unwrap(),
            abelian(&[2, 2]).unwrap(),
            symmetric(4).unwrap(),
        ] {
            let pg = power_graph(&g);
            for pattern in [
                PatternGraph::claw(),
                PatternGraph::star(4),
                PatternGraph::c4(),
                PatternGraph::triangle(),
            ] {
                if let Some(w) = find_induced(&pg, &pattern) {
                    assert!(verify_witness(&pg, &pattern, &w), "{} in {}", pattern.name(), g.label());
                }
            }
        }
    }
}
