//! Core graph representation and edge-subset machinery.
//!
//! Vertices are dense `0..n` integers. Edges are stored sorted
//! lexicographically as `(u, v)` pairs with `u < v`, and an edge's identity is
//! its index into that list; all higher modules work in terms of edge indices
//! so that subsets can live in bit vectors. Graphs and edge sets are immutable
//! once built and safe to share across threads.

use std::cmp::Ordering;
use std::fmt;

use crate::canon;
use crate::error::{Error, Result};

/// Simple undirected graph with stable edge indexing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from unordered vertex pairs.
    ///
    /// Pairs are normalized to `u < v` and sorted lexicographically, so edge
    /// indices are independent of input order. Loops and duplicate pairs
    /// (including `(v, u)` after `(u, v)`) are rejected.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a >= n {
                return Err(Error::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(Error::LoopEdge { vertex: a });
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(Error::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut incidence = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incidence[u].push(i);
            incidence[v].push(i);
        }
        Ok(Graph { n, edges, incidence })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Endpoints of edge `e`, always with the smaller vertex first.
    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    /// Index of the edge between `u` and `v`, if present.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    /// Indices of the edges incident to vertex `v`.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    /// True when edges `e` and `f` are distinct and share an endpoint.
    pub fn edges_adjacent(&self, e: usize, f: usize) -> bool {
        if e == f {
            return false;
        }
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    pub(crate) fn check_owner(&self, set: &EdgeSet) -> Result<()> {
        if set.owner_size() != self.edge_count() {
            return Err(Error::ForeignEdgeSet {
                set_m: set.owner_size(),
                graph_m: self.edge_count(),
            });
        }
        Ok(())
    }

    /// Number of connected components of the spanning subgraph on all `n`
    /// vertices once the edges in `removed` are deleted. Isolated vertices
    /// count as components.
    pub fn component_count(&self, removed: &EdgeSet) -> Result<usize> {
        self.check_owner(removed)?;
        let mut uf = UnionFind::new(self.n);
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if !removed.contains(i) {
                uf.union(u, v);
            }
        }
        Ok(uf.components())
    }

    /// True iff the graph has exactly one connected component. A single
    /// vertex with no edges is connected; the empty graph (n = 0) is not.
    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.components() == 1
    }

    /// All edges other than `e` that share an endpoint with `e`.
    pub fn edge_neighbors(&self, e: usize) -> Result<EdgeSet> {
        if e >= self.edge_count() {
            return Err(Error::EdgeIndexOutOfRange {
                index: e,
                m: self.edge_count(),
            });
        }
        let (u, v) = self.edges[e];
        let mut out = EdgeSet::empty(self.edge_count());
        for &i in self.incidence[u].iter().chain(self.incidence[v].iter()) {
            if i != e {
                out.insert(i);
            }
        }
        Ok(out)
    }

    /// Canonical byte string: the vertex count followed by the minimum
    /// adjacency-matrix upper-triangle bit string over all vertex
    /// permutations. Two graphs produce equal strings iff they are
    /// isomorphic. Limited to n <= 8 because it scans permutations.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        const MAX: usize = 8;
        if self.n > MAX {
            return Err(Error::TooManyVertices { n: self.n, max: MAX });
        }
        let mask = self.adjacency_mask();
        let canon = canon::canon_mask(self.n, mask);
        let slots = canon::slot_count(self.n);
        let mut bytes = vec![0u8; 1 + slots.div_ceil(8)];
        bytes[0] = self.n as u8;
        for s in 0..slots {
            if canon >> s & 1 == 1 {
                bytes[1 + s / 8] |= 1 << (7 - s % 8);
            }
        }
        Ok(bytes)
    }

    /// Lowercase hex rendering of `canonical_form`, used as a graph identity
    /// in reports.
    pub fn canonical_hex(&self) -> Result<String> {
        let bytes = self.canonical_form()?;
        let mut s = String::with_capacity(bytes.len() * 2);
        for b in bytes {
            s.push_str(&format!("{b:02x}"));
        }
        Ok(s)
    }

    /// Builds an edge set from explicit vertex pairs; every pair must be an
    /// edge of this graph.
    pub fn edge_set_from_pairs(&self, pairs: &[(usize, usize)]) -> Result<EdgeSet> {
        let mut set = EdgeSet::empty(self.edge_count());
        for &(u, v) in pairs {
            match self.edge_index(u, v) {
                Some(i) => set.insert(i),
                None => return Err(Error::NotAnEdge { u, v }),
            }
        }
        Ok(set)
    }

    /// Endpoint pairs of the edges in `set`, in edge-index order.
    pub fn pairs_of(&self, set: &EdgeSet) -> Vec<(usize, usize)> {
        set.iter().map(|e| self.edges[e]).collect()
    }

    /// Upper-triangle adjacency bitmask (slot order x(0,1), x(0,2), x(1,2),
    /// x(0,3), ...). Requires n(n-1)/2 <= 64.
    pub(crate) fn adjacency_mask(&self) -> u64 {
        debug_assert!(canon::slot_count(self.n) <= 64);
        let mut mask = 0u64;
        for &(u, v) in &self.edges {
            mask |= 1u64 << canon::slot_of(u, v);
        }
        mask
    }

    /// Inverse of `adjacency_mask`.
    pub(crate) fn from_mask(n: usize, mask: u64) -> Graph {
        let mut pairs = Vec::new();
        let (mut u, mut v) = (0usize, 1usize);
        for s in 0..canon::slot_count(n) {
            if mask >> s & 1 == 1 {
                pairs.push((u, v));
            }
            u += 1;
            if u == v {
                u = 0;
                v += 1;
            }
        }
        Graph::new(n, &pairs).expect("mask decodes to a simple graph")
    }
}

/// Subset of a graph's edges: a fixed-width bit vector indexed by edge index,
/// tagged with the edge count of the graph it belongs to.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    owner_m: usize,
    blocks: Vec<u64>,
}

impl EdgeSet {
    pub fn empty(owner_m: usize) -> Self {
        EdgeSet {
            owner_m,
            blocks: vec![0; owner_m.div_ceil(64).max(1)],
        }
    }

    pub fn full(owner_m: usize) -> Self {
        let mut s = Self::empty(owner_m);
        for i in 0..owner_m {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(owner_m: usize, indices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(owner_m);
        for &i in indices {
            if i >= owner_m {
                return Err(Error::EdgeIndexOutOfRange { index: i, m: owner_m });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Edge count of the owning graph (the width of the bit vector).
    pub fn owner_size(&self) -> usize {
        self.owner_m
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.owner_m && self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.owner_m, "edge index {i} out of range");
        self.blocks[i / 64] |= 1u64 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.owner_m, "edge index {i} out of range");
        self.blocks[i / 64] &= !(1u64 << (i % 64));
    }

    /// Copy of this set with `i` added.
    pub fn with(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.insert(i);
        s
    }

    /// Copy of this set with `i` removed.
    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = self.clone();
        for b in &mut s.blocks {
            *b = !*b;
        }
        // clear bits at and above owner_m
        for i in s.owner_m..s.blocks.len() * 64 {
            s.blocks[i / 64] &= !(1u64 << (i % 64));
        }
        s
    }

    pub fn is_subset_of(&self, other: &EdgeSet) -> bool {
        self.owner_m == other.owner_m
            && self
                .blocks
                .iter()
                .zip(other.blocks.iter())
                .all(|(a, b)| a & !b == 0)
    }

    /// Set bits in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks
            .iter()
            .enumerate()
            .flat_map(|(w, &bits)| BitIter { bits, base: w * 64 })
    }

    pub(crate) fn from_mask(owner_m: usize, mask: u64) -> Self {
        debug_assert!(owner_m <= 64);
        let mut s = Self::empty(owner_m);
        s.blocks[0] = mask;
        s
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdgeSet{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}/{}", self.owner_m)
    }
}

impl PartialOrd for EdgeSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sets compare by owner size, then as integers with edge 0 in the least
/// significant position, so "smaller" prefers low edge indices.
impl Ord for EdgeSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.owner_m.cmp(&other.owner_m).then_with(|| {
            for i in (0..self.blocks.len().max(other.blocks.len())).rev() {
                let a = self.blocks.get(i).copied().unwrap_or(0);
                let b = other.blocks.get(i).copied().unwrap_or(0);
                match a.cmp(&b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

struct BitIter {
    bits: u64,
    base: usize,
}

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let t = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.base + t)
    }
}

/// Union-find over `0..n`, rebuilt per connectivity query. Queries run inside
/// 2^m loops, so the structure is reusable via `reset`.
#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub(crate) fn reset(&mut self, n: usize) {
        self.parent.clear();
        self.parent.extend(0..n);
        self.size.clear();
        self.size.resize(n, 1);
        self.components = n;
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn c4() -> Graph {
        Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn new_graph_normalizes() {
        let g = c4();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
    }

    #[test]
    fn new_graph_rejects_bad_input() {
        assert!(matches!(
            Graph::new(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::new(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(Graph::new(3, &[(1, 1)]), Err(Error::LoopEdge { vertex: 1 })));
    }

    #[test]
    fn component_count_examples() {
        let g = c4();
        let removed = g.edge_set_from_pairs(&[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.component_count(&removed).unwrap(), 2);

        let k4 = families::complete(4).unwrap();
        assert_eq!(k4.component_count(&EdgeSet::empty(6)).unwrap(), 1);

        let (fig2, named) = families::figure2();
        assert_eq!(fig2.component_count(&named).unwrap(), 2);
    }

    #[test]
    fn component_count_rejects_foreign_set() {
        let g = c4();
        assert!(matches!(
            g.component_count(&EdgeSet::empty(3)),
            Err(Error::ForeignEdgeSet { .. })
        ));
    }

    #[test]
    fn connectivity_examples() {
        assert!(families::path(5).unwrap().is_connected());
        assert!(!Graph::new(2, &[]).unwrap().is_connected());
        assert!(Graph::new(1, &[]).unwrap().is_connected());
        let (fig1, _) = families::figure1();
        assert!(fig1.is_connected());
    }

    #[test]
    fn edge_neighbors_examples() {
        let p3 = families::path(3).unwrap();
        let nb = p3.edge_neighbors(0).unwrap();
        assert_eq!(nb.iter().collect::<Vec<_>>(), vec![1]);

        let k4 = families::complete(4).unwrap();
        for e in 0..6 {
            assert_eq!(k4.edge_neighbors(e).unwrap().len(), 4);
        }

        let (fig1, _) = families::figure1();
        let b = fig1.edge_index(2, 3).unwrap();
        let expected = fig1
            .edge_set_from_pairs(&[(1, 2), (2, 4), (3, 4)])
            .unwrap();
        assert_eq!(fig1.edge_neighbors(b).unwrap(), expected);

        assert!(fig1.edge_neighbors(6).is_err());
    }

    #[test]
    fn edge_neighbors_symmetric() {
        let (g, _) = families::figure2();
        for e in 0..g.edge_count() {
            let ne = g.edge_neighbors(e).unwrap();
            for f in ne.iter() {
                assert!(g.edge_neighbors(f).unwrap().contains(e));
            }
        }
    }

    #[test]
    fn component_count_with_all_edges_removed_is_n() {
        for g in [c4(), families::wheel(5).unwrap()] {
            let all = EdgeSet::full(g.edge_count());
            assert_eq!(g.component_count(&all).unwrap(), g.vertex_count());
        }
    }

    #[test]
    fn canonical_form_identifies_isomorphs() {
        let a = c4();
        let b = Graph::new(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());

        let p4 = families::path(4).unwrap();
        let star = families::complete_bipartite(3, 1).unwrap();
        assert_ne!(p4.canonical_form().unwrap(), star.canonical_form().unwrap());
    }

    #[test]
    fn canonical_form_constant_over_all_p3_labelings() {
        // every labeling of P3: choose the center vertex and the two ends
        let mut forms = Vec::new();
        for center in 0..3 {
            let others: Vec<usize> = (0..3).filter(|&v| v != center).collect();
            let g = Graph::new(3, &[(center, others[0]), (center, others[1])]).unwrap();
            forms.push(g.canonical_form().unwrap());
        }
        forms.dedup();
        assert_eq!(forms.len(), 1);
    }

    #[test]
    fn canonical_form_rejects_large_graphs() {
        let g = families::path(9).unwrap();
        assert!(matches!(
            g.canonical_form(),
            Err(Error::TooManyVertices { n: 9, max: 8 })
        ));
    }

    #[test]
    fn edge_set_basics() {
        let mut s = EdgeSet::empty(5);
        assert!(s.is_empty());
        s.insert(0);
        s.insert(3);
        assert_eq!(s.len(), 2);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3]);
        assert_eq!(s.complement().iter().collect::<Vec<_>>(), vec![1, 2, 4]);
        assert!(s.without(3).is_subset_of(&s));
        assert!(EdgeSet::from_indices(5, &[7]).is_err());
        // edge 0 is the least significant position
        let a = EdgeSet::from_indices(5, &[0, 1]).unwrap();
        let b = EdgeSet::from_indices(5, &[1, 2]).unwrap();
        assert!(a < b);
    }
}
