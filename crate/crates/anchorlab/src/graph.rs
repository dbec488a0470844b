//! Simple undirected graphs on a small, fixed vertex budget.
//!
//! Adjacency lives in one `u16` bit row per vertex, so every set-valued
//! operation (neighborhoods, induced subgraphs, cuts) is a couple of word
//! ops. The budget of [`MAX_VERTICES`] covers everything the rest of the
//! crate does; raising it requires widening the row type.

use crate::error::{Error, Result};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use std::fmt;

/// Hard vertex cap for [`Graph`].
pub const MAX_VERTICES: usize = 11;

/// A set of vertices, stored as a bitmask over `0..MAX_VERTICES`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(pub u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The full set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        VertexSet(((1u32 << n) - 1) as u16)
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(vs: I) -> VertexSet {
        let mut s = 0u16;
        for v in vs {
            s |= 1 << v;
        }
        VertexSet(s)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn minus(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iterator over the members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn min_element(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self` with exactly `k` members, in ascending mask order.
    pub fn subsets_of_size(self, k: usize) -> Vec<VertexSet> {
        let members = self.to_vec();
        if k > members.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            out.push(VertexSet::from_iter(idx.iter().map(|&i| members[i])));
            // next combination in lexicographic index order
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] != i + members.len() - k {
                    break;
                }
                if i == 0 {
                    return out;
                }
            }
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }

    /// All subsets of `self`, the empty set and `self` included.
    pub fn subsets(self) -> Vec<VertexSet> {
        let full = self.0;
        let mut out = Vec::with_capacity(1 << self.len());
        // standard subset-of-mask walk
        let mut sub = 0u16;
        loop {
            out.push(VertexSet(sub));
            if sub == full {
                break;
            }
            sub = (sub.wrapping_sub(full)) & full;
        }
        out
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

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for v in self.iter() {
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

/// Simple undirected graph on `n <= MAX_VERTICES` vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    rows: [u16; MAX_VERTICES],
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, cap: MAX_VERTICES });
        }
        Ok(Graph { n: n as u8, rows: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::InvalidArgument(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph> {
        Ok(Graph::empty(n)?.complement())
    }

    /// Path `0 - 1 - .. - (n-1)`.
    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges)
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs >= 3 vertices, got {n}")));
        }
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n as usize {
            return Err(Error::InvalidArgument(format!(
                "vertex {v} out of range for a graph on {} vertices",
                self.n
            )));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    /// Neighborhood of `v` as a bitmask.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.rows[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.n()].iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in VertexSet(self.rows[u]).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self) -> bool {
        let n = self.n();
        n == 0 || (1..n).all(|v| self.degree(v) == self.degree(0))
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n()).0;
        let mut rows = [0u16; MAX_VERTICES];
        for v in 0..self.n() {
            rows[v] = full & !self.rows[v] & !(1 << v);
        }
        Graph { n: self.n, rows }
    }

    /// Subgraph induced by `set`, with vertices relabelled `0..set.len()`
    /// in ascending original label order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        debug_assert!(set.is_subset_of(self.vertices()));
        let members = set.to_vec();
        let mut h = Graph { n: members.len() as u8, rows: [0; MAX_VERTICES] };
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        debug_assert!(self.vertices().contains(v));
        let mut set = self.vertices();
        set.remove(v);
        self.induced(set)
    }

    /// New graph with one extra vertex whose neighborhood is `mask`.
    pub fn with_new_vertex(&self, mask: VertexSet) -> Result<Graph> {
        let n = self.n() + 1;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, cap: MAX_VERTICES });
        }
        debug_assert!(mask.is_subset_of(self.vertices()));
        let mut g = Graph { n: n as u8, rows: self.rows };
        for v in mask.iter() {
            g.add_edge(v, n - 1);
        }
        Ok(g)
    }

    /// Relabel through `perm`: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n());
        let mut g = Graph { n: self.n, rows: [0; MAX_VERTICES] };
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertices reachable from `start` within `within` (which must contain it).
    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.neighbors(v).intersection(within).minus(seen));
            }
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// Connected components, each one a vertex set, ordered by minimum element.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = remaining.min_element() {
            let comp = self.reach(v, remaining);
            remaining = remaining.minus(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// BFS distance between `u` and `v`, `None` when disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        let mut seen = VertexSet::singleton(u);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            let mut next = VertexSet::EMPTY;
            for w in frontier.iter() {
                next = next.union(self.neighbors(w).minus(seen));
            }
            if next.contains(v) {
                return Some(d);
            }
            seen = seen.union(next);
            frontier = next;
        }
        None
    }

    /// Graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = *self;
        g.rows[u] &= !(1 << v);
        g.rows[v] &= !(1 << u);
        g
    }

    /// Number of edges with one end in `a` and the other in `b` (disjoint sets).
    pub fn cut_size(&self, a: VertexSet, b: VertexSet) -> usize {
        debug_assert!(a.intersection(b).is_empty());
        a.iter().map(|v| self.neighbors(v).intersection(b).len()).sum()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
