//! Slow reference implementations used by the test suite.
//!
//! Everything here works by exhaustive enumeration over permutations or
//! vertex subsets, with no shared machinery beyond [`Graph`] accessors, so
//! the fast implementations can be checked against an independent source
//! of truth. Sizes are capped accordingly; callers are tests.

use crate::graph::{Graph, VertexSet};

/// All permutations of `0..n` in lexicographic order. `n <= 8`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    assert!(n <= 8, "factorial blowup");
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
}

fn maps_onto(g: &Graph, h: &Graph, p: &[usize]) -> bool {
    let n = g.n();
    (0..n).all(|i| (i + 1..n).all(|j| g.has_edge(i, j) == h.has_edge(p[i], p[j])))
}

/// Isomorphism by trying every permutation.
pub fn isomorphic_brute(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    permutations(g.n()).iter().any(|p| maps_onto(g, h, p))
}

/// Number of automorphisms by trying every permutation.
pub fn automorphism_count_brute(g: &Graph) -> u64 {
    permutations(g.n()).iter().filter(|p| maps_onto(g, g, p)).count() as u64
}

/// Vertex orbits by unioning over every automorphism.
pub fn orbits_brute(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] == x {
            x
        } else {
            let r = find(parent, parent[x]);
            parent[x] = r;
            r
        }
    }
    for p in permutations(n) {
        if maps_onto(g, g, &p) {
            for v in 0..n {
                let (a, b) = (find(&mut parent, v), find(&mut parent, p[v]));
                if a != b {
                    parent[a] = b;
                }
            }
        }
    }
    let mut orbits: Vec<VertexSet> = Vec::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        if r == v {
            orbits.push(VertexSet::from_iter((0..n).filter(|&w| find(&mut parent, w) == r)));
        }
    }
    orbits.sort_by_key(|s| s.min_element());
    orbits
}

/// Count of induced subgraphs of `g` isomorphic to `h`, by checking every
/// vertex subset of the right size.
pub fn subgraph_count_brute(g: &Graph, h: &Graph) -> u64 {
    if h.n() > g.n() {
        return 0;
    }
    g.vertices()
        .subsets_of_size(h.n())
        .into_iter()
        .filter(|&s| isomorphic_brute(&g.induced(s), h))
        .count() as u64
}

/// One representative per isomorphism class on `n` vertices, by pairwise
/// comparison of all labelled graphs. `n <= 5`.
pub fn enumerate_brute(n: usize) -> Vec<Graph> {
    assert!(n <= 5, "labelled graph count blows up");
    let pairs: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        for j in 1..n {
            for i in 0..j {
                v.push((i, j));
            }
        }
        v
    };
    let mut reps: Vec<Graph> = Vec::new();
    for bits in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> =
            pairs.iter().enumerate().filter(|(k, _)| bits >> k & 1 == 1).map(|(_, &e)| e).collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        if !reps.iter().any(|r| isomorphic_brute(r, &g)) {
            reps.push(g);
        }
    }
    reps
}
