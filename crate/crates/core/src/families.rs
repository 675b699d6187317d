//! Deterministic generators for the graph families under study, two fixture
//! graphs with their named edge sets, and exhaustive enumerators of all small
//! trees and all small connected graphs up to isomorphism.

use crate::canon;
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Graph};

fn params_err(family: &'static str, reason: String) -> Error {
    Error::FamilyParams { family, reason }
}

/// Complete graph K_n.
pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(params_err("complete", format!("n must be >= 1, got {n}")));
    }
    let mut pairs = Vec::new();
    for v in 1..n {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    Graph::new(n, &pairs)
}

/// Cycle C_n with edges (i, i+1 mod n).
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(params_err("cycle", format!("n must be >= 3, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &pairs)
}

/// Path P_n with edges (i, i+1); P_1 is a single vertex.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(params_err("path", format!("n must be >= 1, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::new(n, &pairs)
}

/// Wheel W_n of order n+1: hub vertex `n` joined to every rim vertex, rim
/// forming C_n. Note the convention: the parameter is the rim size, so the
/// graph has n+1 vertices and 2n edges (the other convention, where W_n has
/// n vertices total, also appears in the literature).
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(params_err("wheel", format!("rim size must be >= 3, got {n}")));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    for i in 0..n {
        pairs.push((i, n));
    }
    Graph::new(n + 1, &pairs)
}

/// Complete bipartite graph K_{m,n} with parts {0..m} and {m..m+n}.
/// The caller must order the sides so `m >= n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(params_err(
            "complete_bipartite",
            format!("n must be >= 1, got {n}"),
        ));
    }
    if m < n {
        return Err(params_err(
            "complete_bipartite",
            format!("sides must satisfy m >= n, got m = {m}, n = {n}"),
        ));
    }
    let mut pairs = Vec::with_capacity(m * n);
    for u in 0..m {
        for v in m..m + n {
            pairs.push((u, v));
        }
    }
    Graph::new(m + n, &pairs)
}

/// Two cliques K_m on {0..m} and K_n on {m..m+n} joined by a path of length
/// 1 (the bridge (0, m)) or 2 (a middle vertex m+n with edges (0, m+n) and
/// (m, m+n)). Both clique orders must exceed 2.
pub fn two_cliques(m: usize, n: usize, path_len: usize) -> Result<Graph> {
    if m <= 2 || n <= 2 {
        return Err(params_err(
            "two_cliques",
            format!("clique orders must exceed 2, got m = {m}, n = {n}"),
        ));
    }
    if path_len != 1 && path_len != 2 {
        return Err(params_err(
            "two_cliques",
            format!("path length must be 1 or 2, got {path_len}"),
        ));
    }
    let mut pairs = Vec::new();
    for v in 1..m {
        for u in 0..v {
            pairs.push((u, v));
        }
    }
    for v in 1..n {
        for u in 0..v {
            pairs.push((m + u, m + v));
        }
    }
    let order = if path_len == 1 {
        pairs.push((0, m));
        m + n
    } else {
        pairs.push((0, m + n));
        pairs.push((m, m + n));
        m + n + 1
    };
    Graph::new(order, &pairs)
}

/// Fixture: six vertices in a row with a triangle-with-chord bump, plus the
/// named edge pair {a, b} = {(1,2), (2,3)}, which is maximal edge cut
/// irredundant but not edge cut dominating.
pub fn figure1() -> (Graph, EdgeSet) {
    let g = Graph::new(6, &[(0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (4, 5)]).expect("fixture");
    let named = g.edge_set_from_pairs(&[(1, 2), (2, 3)]).expect("fixture");
    (g, named)
}

/// Fixture: five vertices, plus the named edge set {a, b, c} =
/// {(1,2), (2,4), (3,4)}, which is a minimal edge cut dominating set but not
/// edge cut independent.
pub fn figure2() -> (Graph, EdgeSet) {
    let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)]).expect("fixture");
    let named = g.edge_set_from_pairs(&[(1, 2), (2, 4), (3, 4)]).expect("fixture");
    (g, named)
}

/// All non-isomorphic trees on `n` vertices (1 <= n <= 9), produced by
/// decoding every Pruefer sequence and keeping canonical representatives.
pub fn all_trees(n: usize) -> Result<Vec<Graph>> {
    if !(1..=9).contains(&n) {
        return Err(params_err("all_trees", format!("n must be in 1..=9, got {n}")));
    }
    if n == 1 {
        return Ok(vec![Graph::new(1, &[]).expect("K1")]);
    }
    let count = (n as u64).pow(n as u32 - 2);
    let mut out = Vec::new();
    let mut seq = [0usize; 7];
    for code in 0..count {
        let mut c = code;
        for s in seq.iter_mut().take(n - 2) {
            *s = (c % n as u64) as usize;
            c /= n as u64;
        }
        let mask = prufer_mask(n, &seq[..n - 2]);
        if canon::is_canonical_mask(n, mask) {
            out.push(Graph::from_mask(n, mask));
        }
    }
    Ok(out)
}

/// Decodes a Pruefer sequence over `0..n` into the edge slot mask of the
/// corresponding labeled tree.
pub(crate) fn prufer_mask(n: usize, seq: &[usize]) -> u64 {
    debug_assert_eq!(seq.len(), n - 2);
    let mut deg = [1usize; canon::MAX_N];
    for &x in seq {
        deg[x] += 1;
    }
    let mut mask = 0u64;
    for &x in seq {
        let leaf = (0..n).find(|&v| deg[v] == 1).expect("a leaf always remains");
        mask |= 1u64 << canon::slot_of(leaf.min(x), leaf.max(x));
        deg[leaf] = 0;
        deg[x] -= 1;
    }
    let mut rest = (0..n).filter(|&v| deg[v] == 1);
    let (a, b) = (rest.next().expect("two leaves remain"), rest.next().expect("two leaves remain"));
    mask |= 1u64 << canon::slot_of(a.min(b), a.max(b));
    mask
}

/// All non-isomorphic connected graphs on `n` vertices (2 <= n <= 7):
/// enumerate every labeled graph, filter connected, keep canonical
/// representatives. Deterministic order (ascending adjacency mask).
///
/// n = 7 walks 2^21 labeled graphs; callers should treat it as an explicit
/// opt-in.
pub fn all_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if !(2..=7).contains(&n) {
        return Err(params_err(
            "all_connected_graphs",
            format!("n must be in 2..=7, got {n}"),
        ));
    }
    let total = canon::slot_count(n);
    let mut out = Vec::new();
    for mask in 0..(1u64 << total) {
        if canon::mask_is_connected(n, mask) && canon::is_canonical_mask(n, mask) {
            out.push(Graph::from_mask(n, mask));
        }
    }
    Ok(out)
}
