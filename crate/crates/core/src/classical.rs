//! Exact computation of the classical edge parameters the solver compares
//! against: edge connectivity (lambda), matching number (beta1), edge
//! covering number (alpha1), and the edge domination number (gamma').

use crate::combi::each_k_subset;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph, UnionFind};

/// One parameter's exact value together with a witness set and a search
/// counter.
///
/// `subsets_examined` counts the candidate subsets tested by search-based
/// computations and is 0 for flow- or identity-based ones. Witnesses from
/// ascending-cardinality searches are the first hit in lexicographic
/// k-subset order, so output is deterministic across runs and platforms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamResult {
    pub name: &'static str,
    pub value: usize,
    pub witness: EdgeSet,
    pub subsets_examined: u64,
}

/// Edge connectivity of a connected graph with at least two vertices:
/// the minimum over v != 0 of the unit-capacity max flow from vertex 0 to v.
/// The witness is a minimum edge cut recovered from residual reachability.
pub fn edge_connectivity(g: &Graph) -> Result<ParamResult> {
    if g.vertex_count() < 2 {
        return Err(Error::TooFewVertices);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let n = g.vertex_count();
    let mut best = usize::MAX;
    let mut best_target = 1;
    for t in 1..n {
        let (value, _) = unit_max_flow(g, 0, t);
        if value < best {
            best = value;
            best_target = t;
        }
    }
    let (value, residual) = unit_max_flow(g, 0, best_target);
    debug_assert_eq!(value, best);
    let reachable = residual_reachable(g, 0, &residual);
    let mut witness = EdgeSet::empty(g.edge_count());
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        if reachable[u] != reachable[v] {
            witness.insert(i);
        }
    }
    assert_eq!(witness.len(), best, "min cut size must equal max flow");
    Ok(ParamResult {
        name: "lambda",
        value: best,
        witness,
        subsets_examined: 0,
    })
}

// Residual capacities per edge: dir 0 is low-to-high endpoint, dir 1 the
// reverse. Unit capacities keep every entry in 0..=2.
fn unit_max_flow(g: &Graph, s: usize, t: usize) -> (usize, Vec<[u8; 2]>) {
    let mut residual = vec![[1u8; 2]; g.edge_count()];
    let mut flow = 0;
    while augment(g, s, t, &mut residual) {
        flow += 1;
    }
    (flow, residual)
}

fn augment(g: &Graph, s: usize, t: usize, residual: &mut [[u8; 2]]) -> bool {
    let n = g.vertex_count();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n]; // (edge, dir)
    let mut visited = vec![false; n];
    visited[s] = true;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        if v == t {
            break;
        }
        for &e in g.incident_edges(v) {
            let (a, b) = g.edge(e);
            let (to, dir) = if v == a { (b, 0) } else { (a, 1) };
            if visited[to] || residual[e][dir] == 0 {
                continue;
            }
            visited[to] = true;
            parent[to] = Some((e, dir));
            queue.push_back(to);
        }
    }
    if !visited[t] {
        return false;
    }
    let mut v = t;
    while v != s {
        let (e, dir) = parent[v].expect("path recorded");
        residual[e][dir] -= 1;
        residual[e][1 - dir] += 1;
        let (a, b) = g.edge(e);
        v = if dir == 0 { a } else { b };
    }
    true
}

fn residual_reachable(g: &Graph, s: usize, residual: &[[u8; 2]]) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[s] = true;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &e in g.incident_edges(v) {
            let (a, b) = g.edge(e);
            let (to, dir) = if v == a { (b, 0) } else { (a, 1) };
            if !seen[to] && residual[e][dir] > 0 {
                seen[to] = true;
                queue.push_back(to);
            }
        }
    }
    seen
}

/// Matching number beta1: exact branch-and-bound over edges in index order
/// (include/exclude), bounded by half the free-vertex count.
pub fn max_matching(g: &Graph) -> ParamResult {
    let n = g.vertex_count();
    let mut used = vec![false; n];
    let mut cur = Vec::new();
    let mut best = Vec::new();
    let mut examined = 0u64;
    matching_search(g, 0, n, &mut used, &mut cur, &mut best, &mut examined);
    let witness = EdgeSet::from_indices(g.edge_count(), &best).expect("edge indices");
    ParamResult {
        name: "beta1",
        value: witness.len(),
        witness,
        subsets_examined: examined,
    }
}

fn matching_search(
    g: &Graph,
    i: usize,
    free: usize,
    used: &mut [bool],
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
    examined: &mut u64,
) {
    *examined += 1;
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    if i == g.edge_count() || cur.len() + free / 2 <= best.len() {
        return;
    }
    let (u, v) = g.edge(i);
    if !used[u] && !used[v] {
        used[u] = true;
        used[v] = true;
        cur.push(i);
        matching_search(g, i + 1, free - 2, used, cur, best, examined);
        cur.pop();
        used[u] = false;
        used[v] = false;
    }
    matching_search(g, i + 1, free, used, cur, best, examined);
}

/// Edge covering number via the identity alpha1 = n - beta1; the witness
/// extends a maximum matching with the lowest-index incident edge of every
/// unmatched vertex. Errors when an isolated vertex makes covering
/// impossible.
pub fn edge_cover_number(g: &Graph) -> Result<ParamResult> {
    for v in 0..g.vertex_count() {
        if g.degree(v) == 0 {
            return Err(Error::IsolatedVertex { vertex: v });
        }
    }
    let mm = max_matching(g);
    let mut witness = mm.witness.clone();
    let mut covered = vec![false; g.vertex_count()];
    for e in witness.iter() {
        let (u, v) = g.edge(e);
        covered[u] = true;
        covered[v] = true;
    }
    for v in 0..g.vertex_count() {
        if !covered[v] {
            witness.insert(g.incident_edges(v)[0]);
            covered[v] = true;
        }
    }
    let value = g.vertex_count() - mm.value;
    assert_eq!(witness.len(), value, "cover witness size must equal n - beta1");
    Ok(ParamResult {
        name: "alpha1",
        value,
        witness,
        subsets_examined: mm.subsets_examined,
    })
}

/// Edge domination number gamma': ascending-cardinality subset search; the
/// first dominating k-subset in lexicographic order wins.
pub fn edge_domination_number(g: &Graph) -> Result<ParamResult> {
    if g.edge_count() == 0 {
        return Err(Error::NoEdges);
    }
    let mut checker = DominationChecker::new(g);
    let mut examined = 0u64;
    for k in 1..=g.edge_count() {
        let mut hit: Option<Vec<usize>> = None;
        each_k_subset(g.edge_count(), k, |subset| {
            examined += 1;
            if checker.is_dominating(g, subset) {
                hit = Some(subset.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(subset) = hit {
            let witness = EdgeSet::from_indices(g.edge_count(), &subset).expect("edge indices");
            return Ok(ParamResult {
                name: "gamma_prime",
                value: k,
                witness,
                subsets_examined: examined,
            });
        }
    }
    unreachable!("the full edge set dominates every graph with an edge");
}

/// Stamp-versioned domination test; avoids clearing marker arrays inside
/// subset enumeration loops.
pub(crate) struct DominationChecker {
    vertex_stamp: Vec<u32>,
    edge_stamp: Vec<u32>,
    stamp: u32,
}

impl DominationChecker {
    pub(crate) fn new(g: &Graph) -> Self {
        DominationChecker {
            vertex_stamp: vec![0; g.vertex_count()],
            edge_stamp: vec![0; g.edge_count()],
            stamp: 0,
        }
    }

    pub(crate) fn is_dominating(&mut self, g: &Graph, subset: &[usize]) -> bool {
        self.stamp += 1;
        for &e in subset {
            let (u, v) = g.edge(e);
            self.vertex_stamp[u] = self.stamp;
            self.vertex_stamp[v] = self.stamp;
            self.edge_stamp[e] = self.stamp;
        }
        for x in 0..g.edge_count() {
            if self.edge_stamp[x] == self.stamp {
                continue;
            }
            let (u, v) = g.edge(x);
            if self.vertex_stamp[u] != self.stamp && self.vertex_stamp[v] != self.stamp {
                return false;
            }
        }
        true
    }
}

/// Shared by gamma_ct and the harness: connectivity of the graph with a
/// candidate subset removed, via a reusable union-find.
pub(crate) struct CutChecker {
    uf: UnionFind,
    edge_stamp: Vec<u32>,
    stamp: u32,
}

impl CutChecker {
    pub(crate) fn new(g: &Graph) -> Self {
        CutChecker {
            uf: UnionFind::new(g.vertex_count()),
            edge_stamp: vec![0; g.edge_count()],
            stamp: 0,
        }
    }

    /// True iff removing `subset` leaves at least two components.
    pub(crate) fn is_cut(&mut self, g: &Graph, subset: &[usize]) -> bool {
        self.stamp += 1;
        for &e in subset {
            self.edge_stamp[e] = self.stamp;
        }
        self.uf.reset(g.vertex_count());
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if self.edge_stamp[i] != self.stamp {
                self.uf.union(u, v);
            }
        }
        self.uf.components() >= 2
    }
}
