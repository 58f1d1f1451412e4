//! Bit-packed simple undirected graphs on at most 32 vertices.
//!
//! An adjacency row is a single `u32`, so a whole graph is a small `Copy`
//! value and every set operation used by the solvers is one or two machine
//! instructions.

use std::fmt;

use thiserror::Error;

/// Hard cap on the vertex count. Adjacency rows fit in one `u32`.
pub const MAX_VERTICES: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} out of range (must be 1..=32)")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty vertex set")]
    EmptySet,
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("vertex set has bits outside the graph of order {order}")]
    SetOutOfRange { order: usize },
}

/// A subset of `{0..n-1}` of some ambient graph, stored as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> VertexSet {
        debug_assert!((1..=MAX_VERTICES).contains(&n));
        if n == MAX_VERTICES {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1u32 << v)
    }

    pub fn from_bits(bits: u32) -> VertexSet {
        VertexSet(bits)
    }

    pub fn from_vertices(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 & (1u32 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u32 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u32 << v);
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | (1u32 << v))
    }

    pub fn without(self, v: usize) -> VertexSet {
        VertexSet(self.0 & !(1u32 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest vertex in the set, if any.
    pub fn lowest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> BitIter {
        BitIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Iterator over set bits, lowest first.
pub struct BitIter(u32);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }
}

/// An immutable simple undirected graph on `1..=32` vertices.
///
/// Invariants: no self-loops, symmetric adjacency, no bits at or above
/// position `n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0u32; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u,
                    order: n,
                });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    order: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u] |= 1u32 << v;
            g.adj[v] |= 1u32 << u;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::edgeless(n)?;
        let full = VertexSet::full(n).bits();
        for v in 0..n {
            g.adj[v] = full & !(1u32 << v);
        }
        Ok(g)
    }

    /// Path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Result<Graph, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        if n < 3 {
            return Err(GraphError::OrderOutOfRange(n));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1u32 << v) != 0
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Raw adjacency row of `v`.
    pub fn adj_bits(&self, v: usize) -> u32 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, in column-major order
    /// (sorted by `v`, then `u`) to match the graph6 bit layout.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for v in 1..self.n() {
            for u in 0..v {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Subgraph induced by `s`, relabeled by increasing original index.
    pub fn induced(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if !s.is_subset_of(self.vertex_set()) {
            return Err(GraphError::SetOutOfRange { order: self.n() });
        }
        let verts: Vec<usize> = s.iter().collect();
        let mut g = Graph::edgeless(verts.len())?;
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u32 << j;
                    g.adj[j] |= 1u32 << i;
                }
            }
        }
        Ok(g)
    }

    /// Graph with the same vertices and exactly the missing edges.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let full = VertexSet::full(n).bits();
        let mut g = Graph {
            n: self.n,
            adj: [0u32; MAX_VERTICES],
        };
        for v in 0..n {
            g.adj[v] = full & !self.adj[v] & !(1u32 << v);
        }
        g
    }

    /// Connected components as vertex sets, ordered by their least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen.contains(v) {
                continue;
            }
            let comp = self.reach(VertexSet::singleton(v), self.vertex_set());
            seen = seen | comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Vertices reachable from `start` moving only inside `allowed`.
    /// `start` must be a subset of `allowed`.
    pub(crate) fn reach(&self, start: VertexSet, allowed: VertexSet) -> VertexSet {
        let mut reached = start & allowed;
        loop {
            let mut frontier = VertexSet::EMPTY;
            for v in reached.iter() {
                frontier = frontier | self.neighbors(v);
            }
            let next = (reached | (frontier & allowed)) & allowed;
            if next == reached {
                return reached;
            }
            reached = next;
        }
    }

    /// Whether `s` induces a connected subgraph.
    pub fn is_connected_subset(&self, s: VertexSet) -> Result<bool, GraphError> {
        let first = s.lowest().ok_or(GraphError::EmptySet)?;
        if !s.is_subset_of(self.vertex_set()) {
            return Err(GraphError::SetOutOfRange { order: self.n() });
        }
        Ok(self.reach(VertexSet::singleton(first), s) == s)
    }

    /// Whether some edge joins disjoint nonempty sets `s` and `t`.
    pub fn sets_adjacent(&self, s: VertexSet, t: VertexSet) -> Result<bool, GraphError> {
        if s.is_empty() || t.is_empty() {
            return Err(GraphError::EmptySet);
        }
        if !s.is_disjoint(t) {
            return Err(GraphError::OverlappingSets);
        }
        for v in s.iter() {
            if !(self.neighbors(v) & t).is_empty() {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Induced subgraph on everything except `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n(),
            });
        }
        if self.n() == 1 {
            return Err(GraphError::EmptySet);
        }
        self.induced(self.vertex_set().without(v))
    }

    /// Relabeled copy: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = Graph {
            n: self.n,
            adj: [0u32; MAX_VERTICES],
        };
        for (u, v) in self.edges() {
            g.adj[perm[u]] |= 1u32 << perm[v];
            g.adj[perm[v]] |= 1u32 << perm[u];
        }
        g
    }

    /// Sorted degree sequence, ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.vertices().map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
