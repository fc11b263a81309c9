//! Power graph construction and exact graph primitives.
//!
//! Vertices are the element indices of the owning group (no relabeling), so
//! graph witnesses map directly back to group elements in reports.

use crate::bitset::BitSet;
use crate::groups::{self, FiniteGroup};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exactness bound for the branch-and-bound independent set search.
pub const MIS_BOUND: usize = 256;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PgraphError {
    #[error("graph on {n} vertices exceeds the exact search bound {bound}")]
    TooLarge { n: usize, bound: usize },
    #[error("bad graph data: {0}")]
    BadData(String),
}

/// Symmetric loopless adjacency over the elements of a group, one bit row
/// per vertex. Distinct `x`, `y` are adjacent iff one generates the other
/// inside some cyclic subgroup; the identity is adjacent to everything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerGraph {
    n: usize,
    rows: Vec<BitSet>,
    group_label: String,
}

/// Build the power graph by sweeping cyclic subgroups: every member of
/// `<y>` other than `y` is adjacent to `y`.
pub fn power_graph(g: &FiniteGroup) -> PowerGraph {
    let n = g.order();
    let mut rows = vec![BitSet::new(n); n];
    for y in g.elements() {
        for m in groups::cyclic_subgroup(g, y).members.iter() {
            if m != y {
                rows[y].insert(m);
                rows[m].insert(y);
            }
        }
    }
    PowerGraph {
        n,
        rows,
        group_label: g.label().to_string(),
    }
}

impl PowerGraph {
    pub fn from_rows(rows: Vec<BitSet>, group_label: &str) -> Self {
        PowerGraph {
            n: rows.len(),
            rows,
            group_label: group_label.to_string(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn group_label(&self) -> &str {
        &self.group_label
    }

    pub fn is_adjacent(&self, u: usize, w: usize) -> bool {
        self.rows[u].contains(w)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn common_neighbors(&self, u: usize, w: usize) -> BitSet {
        self.rows[u].intersection(&self.rows[w])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// DOT rendering, undirected, vertex labels `index (ord k)`.
    /// Byte-deterministic: vertices ascending, edges sorted.
    pub fn to_dot(&self, orders: &[u64]) -> String {
        let mut out = String::new();
        out.push_str(&format!("graph \"{}\" {{\n", self.group_label));
        for (v, order) in orders.iter().enumerate().take(self.n) {
            out.push_str(&format!("  {v} [label=\"{v} (ord {order})\"];\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON rendering; re-importable via [`PowerGraph::from_json`].
    pub fn to_json(&self) -> String {
        let doc = PowerGraphJson {
            group: self.group_label.clone(),
            n: self.n,
            edges: self.edges(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serialization cannot fail");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, PgraphError> {
        let doc: PowerGraphJson =
            serde_json::from_str(text).map_err(|e| PgraphError::BadData(e.to_string()))?;
        let mut rows = vec![BitSet::new(doc.n); doc.n];
        for &(u, v) in &doc.edges {
            if u >= doc.n || v >= doc.n || u == v {
                return Err(PgraphError::BadData(format!("bad edge ({u}, {v})")));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(PowerGraph {
            n: doc.n,
            rows,
            group_label: doc.group,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct PowerGraphJson {
    group: String,
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Exact maximum independent set size.
///
/// Universal vertices (in a power graph, at least the identity) can never
/// sit in an independent set of size two, so they are deleted up front; the
/// remainder splits into connected components which are solved separately by
/// branch and bound with a greedy clique-cover bound.
pub fn independence_number(pg: &PowerGraph) -> Result<usize, PgraphError> {
    if pg.n > MIS_BOUND {
        return Err(PgraphError::TooLarge {
            n: pg.n,
            bound: MIS_BOUND,
        });
    }
    if pg.n == 0 {
        return Ok(0);
    }
    let mut remaining = BitSet::full(pg.n);
    for v in 0..pg.n {
        if pg.degree(v) == pg.n - 1 {
            remaining.remove(v);
        }
    }
    let mut total = 0;
    for comp in components(pg, &remaining) {
        let mut best = 0;
        branch(&pg.rows, &comp, 0, &mut best);
        total += best;
    }
    Ok(total.max(1))
}

fn components(pg: &PowerGraph, within: &BitSet) -> Vec<BitSet> {
    let mut unseen = within.clone();
    let mut comps = Vec::new();
    while let Some(start) = unseen.first() {
        let mut comp = BitSet::new(pg.n);
        let mut stack = vec![start];
        unseen.remove(start);
        comp.insert(start);
        while let Some(v) = stack.pop() {
            let mut frontier = pg.rows[v].intersection(&unseen);
            frontier.intersect_with(within);
            for w in frontier.iter() {
                unseen.remove(w);
                comp.insert(w);
                stack.push(w);
            }
        }
        comps.push(comp);
    }
    comps
}

fn branch(adj: &[BitSet], cand: &BitSet, cur: usize, best: &mut usize) {
    if cur > *best {
        *best = cur;
    }
    let Some(v) = cand.first() else { return };
    if cur + clique_cover_bound(adj, cand) <= *best {
        return;
    }
    let mut include = cand.clone();
    include.remove(v);
    include.difference_with(&adj[v]);
    branch(adj, &include, cur + 1, best);

    let mut exclude = cand.clone();
    exclude.remove(v);
    branch(adj, &exclude, cur, best);
}

/// Greedily partition the candidates into cliques; an independent set meets
/// each clique at most once, so the clique count bounds the set size.
fn clique_cover_bound(adj: &[BitSet], cand: &BitSet) -> usize {
    let mut cliques: Vec<BitSet> = Vec::new();
    for v in cand.iter() {
        match cliques.iter_mut().find(|c| c.is_subset(&adj[v])) {
            Some(c) => c.insert(v),
            None => cliques.push(BitSet::singleton(adj.len(), v)),
        }
    }
    cliques.len()
}
