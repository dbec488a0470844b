//! Canonical labelling, isomorphism, vertex orbits, and automorphism groups.
//!
//! The canonical form comes from the usual two ingredients: iterated
//! equitable refinement of an ordered vertex partition, and a backtracking
//! search that individualizes one vertex of the first smallest non-singleton
//! cell at a time. A leaf of the search tree is a discrete partition, read
//! as a relabelling; the canonical labelling is the one whose relabelled
//! adjacency bits are lexicographically largest. Automorphisms discovered
//! when two leaves produce identical images prune sibling branches.
//!
//! Everything color-aware (shadow comparisons, orbit computations, the
//! stabilizer chain behind [`automorphism_group`]) reuses the same search
//! with a non-trivial initial partition. Two colored graphs with the same
//! cell size profile are isomorphic exactly when their leaf codes agree,
//! because cells occupy fixed position ranges in every leaf.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::graph6;
use std::collections::BTreeMap;

/// Automorphism groups are materialized as explicit element lists only up
/// to this order (8!); beyond it, generators are the only representation.
pub const MATERIALIZE_CAP: u64 = 40320;

/// A permutation of `0..n`, mapping vertex `v` to `map[v]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    n: u8,
    map: [u8; MAX_VERTICES],
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        let mut map = [0u8; MAX_VERTICES];
        for (v, m) in map.iter_mut().enumerate() {
            *m = v as u8;
        }
        Perm { n: n as u8, map }
    }

    pub fn from_map(map: &[usize]) -> Perm {
        let mut p = Perm::identity(map.len());
        for (v, &m) in map.iter().enumerate() {
            p.map[v] = m as u8;
        }
        debug_assert!(p.is_valid());
        p
    }

    fn is_valid(&self) -> bool {
        let mut seen = [false; MAX_VERTICES];
        for v in 0..self.n as usize {
            if seen[self.map[v] as usize] {
                return false;
            }
            seen[self.map[v] as usize] = true;
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn apply(&self, v: usize) -> usize {
        self.map[v] as usize
    }

    /// Image of a vertex set.
    pub fn apply_set(&self, s: VertexSet) -> VertexSet {
        VertexSet::from_iter(s.iter().map(|v| self.apply(v)))
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = Perm::identity(self.n());
        for v in 0..self.n() {
            inv.map[self.map[v] as usize] = v as u8;
        }
        inv
    }

    /// Composition applying `self` first: `x -> other(self(x))`.
    pub fn then(&self, other: &Perm) -> Perm {
        let mut out = Perm::identity(self.n());
        for v in 0..self.n() {
            out.map[v] = other.map[self.map[v] as usize];
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|v| self.map[v] as usize == v)
    }

    /// Multiplicative order: lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        let mut seen = [false; MAX_VERTICES];
        let mut ord = 1usize;
        for start in 0..self.n() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.apply(v);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }

    pub fn to_vec(&self) -> Vec<usize> {
        (0..self.n()).map(|v| self.apply(v)).collect()
    }
}

impl std::fmt::Debug for Perm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.to_vec())
    }
}

fn lcm(a: usize, b: usize) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Replace the partition with its coarsest equitable refinement.
///
/// Cells are bitmasks in a fixed order; a cell only ever splits in place
/// into sub-cells ordered by their (label-independent) neighbor-count
/// signatures, so the result is isomorphism-equivariant.
fn refine(g: &Graph, cells: &mut Vec<u16>) {
    loop {
        let snapshot = cells.clone();
        let mut next: Vec<u16> = Vec::with_capacity(cells.len());
        let mut changed = false;
        for &cell in cells.iter() {
            if cell.count_ones() <= 1 {
                next.push(cell);
                continue;
            }
            // signature of v: neighbor counts against every current cell,
            // packed 4 bits each (counts <= 11, cells <= 11)
            let mut members: Vec<(u64, u16)> = VertexSet(cell)
                .iter()
                .map(|v| {
                    let mut sig = 0u64;
                    for &c in &snapshot {
                        sig = sig << 4 | (g.neighbors(v).0 & c).count_ones() as u64;
                    }
                    (sig, 1u16 << v)
                })
                .collect();
            members.sort_unstable();
            let mut run_sig = members[0].0;
            let mut run_mask = 0u16;
            for &(sig, bit) in &members {
                if sig != run_sig {
                    next.push(run_mask);
                    run_mask = 0;
                    run_sig = sig;
                    changed = true;
                }
                run_mask |= bit;
            }
            next.push(run_mask);
        }
        *cells = next;
        if !changed {
            return;
        }
    }
}

fn first_smallest_nonsingleton(cells: &[u16]) -> Option<usize> {
    let mut pick: Option<(u32, usize)> = None;
    for (i, &c) in cells.iter().enumerate() {
        let size = c.count_ones();
        if size > 1 && pick.map_or(true, |(s, _)| size < s) {
            pick = Some((size, i));
        }
    }
    pick.map(|(_, i)| i)
}

/// Packed adjacency bits of the relabelled graph, upper triangle in
/// column-major order, first bit highest. Total order on leaf images.
fn image_code(g: &Graph, position_to_vertex: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for j in 1..n {
        for i in 0..j {
            code = code << 1 | g.has_edge(position_to_vertex[i], position_to_vertex[j]) as u64;
        }
    }
    code
}

struct Search<'a> {
    g: &'a Graph,
    prefix: Vec<usize>,
    autos: Vec<Perm>,
    first: Option<(u64, Perm)>,
    best: Option<(u64, Perm)>,
}

impl Search<'_> {
    fn run(&mut self, cells: &[u16]) {
        let mut cells = cells.to_vec();
        refine(self.g, &mut cells);
        let Some(t) = first_smallest_nonsingleton(&cells) else {
            self.leaf(&cells);
            return;
        };
        let members: Vec<usize> = VertexSet(cells[t]).iter().collect();
        let mut explored: Vec<usize> = Vec::new();
        for v in members {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(1u16 << v);
            child.push(cells[t] & !(1u16 << v));
            child.extend_from_slice(&cells[t + 1..]);
            self.prefix.push(v);
            self.run(&child);
            self.prefix.pop();
            explored.push(v);
        }
    }

    /// Branch pruning: skip `v` when a discovered automorphism that fixes
    /// the whole individualization prefix pointwise maps an already
    /// explored sibling onto `v`; the two subtrees have equal image sets.
    fn in_explored_orbit(&self, v: usize, explored: &[usize]) -> bool {
        let n = self.g.n();
        let mut parent: [u8; MAX_VERTICES] = [0; MAX_VERTICES];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        fn find(parent: &mut [u8; MAX_VERTICES], x: usize) -> usize {
            let mut x = x;
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        for a in &self.autos {
            if self.prefix.iter().any(|&p| a.apply(p) != p) {
                continue;
            }
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a.apply(x)));
                if rx != ry {
                    parent[rx] = ry as u8;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[u16]) {
        let n = self.g.n();
        let mut pos_to_vertex = [0usize; MAX_VERTICES];
        for (i, &c) in cells.iter().enumerate() {
            pos_to_vertex[i] = c.trailing_zeros() as usize;
        }
        let code = image_code(self.g, &pos_to_vertex[..n]);
        let mut sigma = Perm::identity(n);
        for (i, &v) in pos_to_vertex[..n].iter().enumerate() {
            sigma.map[v] = i as u8;
        }
        if let Some((fc, fs)) = &self.first {
            if code == *fc {
                let theta = sigma.then(&fs.inverse());
                self.push_auto(theta);
            }
        } else {
            self.first = Some((code, sigma));
        }
        match &self.best {
            None => self.best = Some((code, sigma)),
            Some((bc, bs)) => {
                if code > *bc {
                    self.best = Some((code, sigma));
                } else if code == *bc {
                    let theta = sigma.then(&bs.inverse());
                    self.push_auto(theta);
                }
            }
        }
    }

    fn push_auto(&mut self, theta: Perm) {
        if !theta.is_identity() && !self.autos.contains(&theta) {
            self.autos.push(theta);
        }
    }
}

/// Leaf code and relabelling for the canonical image of `g` under the
/// initial partition `cells` (empty cells are dropped; their order carries
/// the colors). All comparisons of such codes require equal size profiles.
fn canon_search(g: &Graph, cells: &[u16]) -> (u64, Perm) {
    let cells: Vec<u16> = cells.iter().copied().filter(|&c| c != 0).collect();
    debug_assert_eq!(
        cells.iter().map(|c| c.count_ones() as usize).sum::<usize>(),
        g.n(),
        "initial cells must partition the vertex set"
    );
    let mut s = Search { g, prefix: Vec::new(), autos: Vec::new(), first: None, best: None };
    s.run(&cells);
    s.best.unwrap_or((0, Perm::identity(0)))
}

/// Canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, sigma) = canon_search(g, &[g.vertices().0]);
    g.permuted(&sigma.to_vec())
}

/// Packed canonical image, cheaper than materializing the graph. Equal
/// codes for graphs of equal order mean isomorphic.
pub(crate) fn canon_code(g: &Graph) -> u64 {
    canon_search(g, &[g.vertices().0]).0
}

/// Canonical image code under a vertex coloring, for bucketing colored
/// graphs. Codes compare only between equal color-class size profiles.
pub(crate) fn colored_canon_code(g: &Graph, cells: &[VertexSet]) -> u64 {
    let masks: Vec<u16> = cells.iter().map(|c| c.0).collect();
    canon_search(g, &masks).0
}

/// Canonical code plus the vertex-to-position relabelling realizing it.
pub(crate) fn canon_code_and_perm(g: &Graph) -> (u64, Perm) {
    canon_search(g, &[g.vertices().0])
}

/// Do `u` and `v` lie in the same automorphism orbit?
pub(crate) fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let code = |w: usize| {
        let cell = VertexSet::singleton(w);
        canon_search(g, &[cell.0, g.vertices().minus(cell).0]).0
    };
    code(u) == code(v)
}

/// Canonical form: representative graph, its graph6 key, and the
/// relabelling that maps `g` onto the representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: Graph,
    pub key: String,
    pub relabeling: Perm,
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let (_, sigma) = canon_search(g, &[g.vertices().0]);
    let graph = g.permuted(&sigma.to_vec());
    CanonicalForm { graph, key: graph6::encode(&graph), relabeling: sigma }
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_graph(a) == canonical_graph(b)
}

/// Isomorphism of vertex-colored graphs. Color classes are listed in a
/// fixed order; class sizes must agree position-wise for a match.
pub fn colored_isomorphic(a: &Graph, a_cells: &[VertexSet], b: &Graph, b_cells: &[VertexSet]) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let asz: Vec<usize> = a_cells.iter().map(|c| c.len()).filter(|&s| s > 0).collect();
    let bsz: Vec<usize> = b_cells.iter().map(|c| c.len()).filter(|&s| s > 0).collect();
    if asz != bsz {
        return false;
    }
    let am: Vec<u16> = a_cells.iter().map(|c| c.0).collect();
    let bm: Vec<u16> = b_cells.iter().map(|c| c.0).collect();
    canon_search(a, &am).0 == canon_search(b, &bm).0
}

/// Vertex orbits under the automorphism group, ordered by minimum element.
pub fn orbits(g: &Graph) -> Vec<VertexSet> {
    orbits_colored(g, &[g.vertices()])
}

/// Orbits under color-preserving automorphisms.
pub fn orbits_colored(g: &Graph, cells: &[VertexSet]) -> Vec<VertexSet> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    // v ~ w iff individualizing v or w (inside its own color cell) yields
    // the same canonical code; the cell index keys apart distinct colors.
    let mut by_key: BTreeMap<(usize, u64), VertexSet> = BTreeMap::new();
    for (ci, &cell) in cells.iter().enumerate() {
        for v in cell.iter() {
            let mut split: Vec<u16> = Vec::with_capacity(cells.len() + 1);
            for (cj, &c) in cells.iter().enumerate() {
                if cj == ci {
                    split.push(1u16 << v);
                    split.push(c.0 & !(1u16 << v));
                } else {
                    split.push(c.0);
                }
            }
            let (code, _) = canon_search(g, &split);
            by_key.entry((ci, code)).or_default().insert(v);
        }
    }
    let mut out: Vec<VertexSet> = by_key.into_values().collect();
    out.sort_by_key(|s| s.min_element());
    out
}

pub fn is_vertex_transitive(g: &Graph) -> bool {
    orbits(g).len() <= 1
}

/// Automorphism group given by order and a strong generating set.
///
/// Built as a stabilizer chain: fix one vertex at a time and measure its
/// orbit under the stabilizer of the previously fixed ones. Orbit
/// membership is a colored-isomorphism question (individualize the
/// candidate next to the fixed prefix), and each member contributes a
/// witness generator, so `order` is exact and `generators` generate the
/// full group.
#[derive(Clone, Debug)]
pub struct AutomorphismGroup {
    n: usize,
    pub order: u64,
    pub generators: Vec<Perm>,
}

pub fn automorphism_group(g: &Graph) -> AutomorphismGroup {
    let n = g.n();
    let mut prefix: Vec<usize> = Vec::new();
    let mut order: u64 = 1;
    let mut generators: Vec<Perm> = Vec::new();
    loop {
        let mut cells: Vec<u16> = prefix.iter().map(|&p| 1u16 << p).collect();
        let rest = g.vertices().0 & !cells.iter().fold(0, |a, c| a | c);
        if rest != 0 {
            cells.push(rest);
        }
        let mut refined = cells.clone();
        refine(g, &mut refined);
        let Some(t) = first_smallest_nonsingleton(&refined) else {
            break; // stabilizer of the prefix is trivial
        };
        let members: Vec<usize> = VertexSet(refined[t]).iter().collect();
        let v = members[0];
        let with = |x: usize| -> Vec<u16> {
            let mut cs: Vec<u16> = prefix.iter().map(|&p| 1u16 << p).collect();
            cs.push(1u16 << x);
            cs.push(rest & !(1u16 << x));
            cs
        };
        let (code_v, pi_v) = canon_search(g, &with(v));
        let mut orbit_size: u64 = 1;
        for &w in &members[1..] {
            let (code_w, pi_w) = canon_search(g, &with(w));
            if code_w == code_v {
                orbit_size += 1;
                let theta = pi_v.then(&pi_w.inverse());
                debug_assert_eq!(theta.apply(v), w);
                if !generators.contains(&theta) {
                    generators.push(theta);
                }
            }
        }
        order *= orbit_size;
        prefix.push(v);
    }
    AutomorphismGroup { n, order, generators }
}

pub fn automorphism_order(g: &Graph) -> u64 {
    automorphism_group(g).order
}

impl AutomorphismGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Every group element, by closure over the generators.
    /// Refused above [`MATERIALIZE_CAP`].
    pub fn elements(&self) -> Result<Vec<Perm>> {
        if self.order > MATERIALIZE_CAP {
            return Err(Error::TooLarge {
                n: self.order as usize,
                cap: MATERIALIZE_CAP as usize,
            });
        }
        let mut seen: Vec<Perm> = vec![Perm::identity(self.n)];
        let mut frontier = seen.clone();
        while let Some(p) = frontier.pop() {
            for gen in &self.generators {
                let q = p.then(gen);
                if !seen.contains(&q) {
                    seen.push(q);
                    frontier.push(q);
                }
            }
        }
        debug_assert_eq!(seen.len() as u64, self.order);
        Ok(seen)
    }

    /// Multiset of element orders, as order -> multiplicity.
    pub fn element_orders(&self) -> Result<BTreeMap<usize, usize>> {
        let mut out = BTreeMap::new();
        for e in self.elements()? {
            *out.entry(e.order()).or_insert(0) += 1;
        }
        Ok(out)
    }

    /// Whether every element has order at most three.
    ///
    /// A subgroup of S11 whose elements all have order <= 3 has order of
    /// the form 2^a 3^b (Cauchy) with a <= 8 and b <= 4 (the 2- and 3-parts
    /// of 11!), hence order <= 20736; anything larger must contain an
    /// element of order >= 4 and is rejected without materializing.
    pub fn all_element_orders_at_most_three(&self) -> bool {
        if self.order > 20736 {
            return false;
        }
        self.elements()
            .expect("20736 < MATERIALIZE_CAP")
            .iter()
            .all(|e| e.order() <= 3)
    }
}
