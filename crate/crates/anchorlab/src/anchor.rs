//! Anchors and shadows.
//!
//! An anchor of `g` is a proper nonempty induced subgraph whose isomorphism
//! type occurs exactly once among induced subgraphs of its order. Because the
//! single copy can be located in every large enough vertex-deleted card, an
//! anchor pins down part of `g` across the deck; the machinery here measures
//! how far that grip extends (anchor number, covers, extension to maximal
//! anchors) and describes the attachment of the remaining vertices through
//! their shadows on the anchor.

use std::collections::HashMap;

use crate::canon::{self, canon_code, colored_canon_code};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// Rank of `v` among the ascending members of `hset`.
///
/// `Graph::induced` keeps ascending label order, so this is the label of `v`
/// inside the induced subgraph on `hset`.
fn local_index(hset: VertexSet, v: usize) -> usize {
    (hset.0 & ((1u16 << v) - 1)).count_ones() as usize
}

/// Map a subset of `hset` into the label space of `induced(hset)`.
fn to_local(hset: VertexSet, s: VertexSet) -> VertexSet {
    debug_assert!(s.is_subset_of(hset));
    VertexSet::from_iter(s.iter().map(|v| local_index(hset, v)))
}

/// Cheap isomorphism prefilter: edge count and sorted degree sequence,
/// packed so equal keys are necessary for isomorphism.
fn profile_key(g: &Graph) -> u64 {
    let mut degs: Vec<u64> = (0..g.n()).map(|v| g.degree(v) as u64).collect();
    degs.sort_unstable();
    let mut key = (g.edge_count() as u64) << 48;
    for (i, d) in degs.iter().enumerate() {
        key |= d << (4 * i);
    }
    key
}

/// True when no other subset of the same order induces a subgraph
/// isomorphic to `induced(s)`. Assumes `s` is a valid proper subset.
fn induced_is_unique(g: &Graph, s: VertexSet) -> bool {
    let pat = g.induced(s);
    let pkey = profile_key(&pat);
    let pcode = canon_code(&pat);
    for t in g.vertices().subsets_of_size(s.len()) {
        if t == s {
            continue;
        }
        let cand = g.induced(t);
        if profile_key(&cand) == pkey && canon_code(&cand) == pcode {
            return false;
        }
    }
    true
}

fn check_proper_subset(g: &Graph, s: VertexSet) -> Result<()> {
    if !s.is_subset_of(g.vertices()) {
        return Err(Error::InvalidArgument(format!(
            "vertex set {s} is not contained in a graph on {} vertices",
            g.n()
        )));
    }
    if s.is_empty() {
        return Err(Error::InvalidArgument(
            "anchor candidate must be non-empty".into(),
        ));
    }
    if s == g.vertices() {
        return Err(Error::InvalidArgument(
            "anchor candidate must be a proper subset".into(),
        ));
    }
    Ok(())
}

/// Does `s` induce an anchor of `g`?
pub fn is_anchor(g: &Graph, s: VertexSet) -> Result<bool> {
    check_proper_subset(g, s)?;
    Ok(induced_is_unique(g, s))
}

/// All anchor vertex sets of order `k`, ascending. Out-of-range `k` gives
/// an empty list.
pub fn anchors_of_order(g: &Graph, k: usize) -> Vec<VertexSet> {
    let n = g.n();
    if k == 0 || k >= n {
        return Vec::new();
    }
    // Two-stage bucketing: profile keys are cheap and split most classes;
    // canonical codes settle the rest. A subset alone in its bucket is an
    // anchor.
    let subsets = g.vertices().subsets_of_size(k);
    let mut by_profile: HashMap<u64, Vec<VertexSet>> = HashMap::new();
    for &s in &subsets {
        by_profile.entry(profile_key(&g.induced(s))).or_default().push(s);
    }
    let mut out = Vec::new();
    for group in by_profile.values() {
        if group.len() == 1 {
            out.push(group[0]);
            continue;
        }
        let mut by_code: HashMap<u64, (usize, VertexSet)> = HashMap::new();
        for &s in group {
            let e = by_code.entry(canon_code(&g.induced(s))).or_insert((0, s));
            e.0 += 1;
        }
        out.extend(by_code.values().filter(|(c, _)| *c == 1).map(|&(_, s)| s));
    }
    out.sort_unstable();
    out
}

/// The anchor number: order of a smallest anchor, or `n` when `g` is
/// anchor-free. Defined for `n >= 2`.
pub fn anchor_number(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidArgument(
            "anchor number requires at least two vertices".into(),
        ));
    }
    for k in 1..n {
        if !anchors_of_order(g, k).is_empty() {
            return Ok(k);
        }
    }
    Ok(n)
}

/// Convenience wrapper: `g` has no anchor at all. Graphs on at most one
/// vertex are anchor-free by convention.
pub fn is_anchor_free(g: &Graph) -> bool {
    g.n() <= 1 || anchor_number(g).expect("n >= 2 checked") == g.n()
}

/// Union of the vertex sets of every copy of `h` in `g`.
pub fn cover(g: &Graph, h: &Graph) -> Result<VertexSet> {
    if h.n() == 0 {
        return Err(Error::InvalidArgument("cover of the empty graph".into()));
    }
    if h.n() > g.n() {
        return Err(Error::PatternNotFound);
    }
    let hkey = profile_key(h);
    let hcode = canon_code(h);
    let mut union = VertexSet::EMPTY;
    let mut found = false;
    for s in g.vertices().subsets_of_size(h.n()) {
        let cand = g.induced(s);
        if profile_key(&cand) == hkey && canon_code(&cand) == hcode {
            union = union.union(s);
            found = true;
        }
    }
    if found {
        Ok(union)
    } else {
        Err(Error::PatternNotFound)
    }
}

/// Shadow of `v` on the host induced by `hset`: the neighbors of `v` inside
/// `hset`, expressed in the host's own labels (ascending relabeling).
pub fn shadow(g: &Graph, hset: VertexSet, v: usize) -> Result<VertexSet> {
    if v >= g.n() || !hset.is_subset_of(g.vertices()) || hset.is_empty() {
        return Err(Error::InvalidArgument(
            "shadow requires a vertex and a non-empty host inside the graph".into(),
        ));
    }
    if hset.contains(v) {
        return Err(Error::InvalidArgument(format!(
            "vertex {v} lies inside the host set"
        )));
    }
    Ok(to_local(hset, g.neighbors(v).intersection(hset)))
}

/// Are `s1` and `s2` related by an automorphism of the host?
pub fn shadow_isomorphic(h: &Graph, s1: VertexSet, s2: VertexSet) -> Result<bool> {
    if !s1.is_subset_of(h.vertices()) || !s2.is_subset_of(h.vertices()) {
        return Err(Error::HostMismatch);
    }
    if s1.len() != s2.len() {
        return Ok(false);
    }
    if s1 == s2 {
        return Ok(true);
    }
    let code = |s: VertexSet| colored_canon_code(h, &[s, h.vertices().minus(s)]);
    Ok(code(s1) == code(s2))
}

/// A shadow is fixed when every automorphism of the host maps it to itself,
/// i.e. when it is a union of vertex orbits.
pub fn is_shadow_fixed(h: &Graph, s: VertexSet) -> Result<bool> {
    if !s.is_subset_of(h.vertices()) {
        return Err(Error::HostMismatch);
    }
    Ok(canon::orbits(h)
        .iter()
        .all(|&o| o.is_subset_of(s) || o.intersection(s).is_empty()))
}

/// The shadows cast on a host graph by a list of outside vertices.
///
/// `host` is the induced subgraph on the host set in its own labels,
/// `entries[i]` the shadow of caster `i` in those labels, and `casters[i]`
/// the caster's label in the original graph (or a synthetic index for
/// shadow sets built directly from parts).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShadowSet {
    pub host: Graph,
    pub casters: Vec<usize>,
    pub entries: Vec<VertexSet>,
}

impl ShadowSet {
    /// Shadows of every vertex outside `hset` on the host it induces,
    /// casters ascending.
    pub fn of(g: &Graph, hset: VertexSet) -> Result<ShadowSet> {
        check_proper_subset(g, hset)?;
        let host = g.induced(hset);
        let mut casters = Vec::new();
        let mut entries = Vec::new();
        for v in g.vertices().minus(hset).iter() {
            casters.push(v);
            entries.push(to_local(hset, g.neighbors(v).intersection(hset)));
        }
        Ok(ShadowSet { host, casters, entries })
    }

    /// Assemble a shadow set from explicit parts; casters are synthetic.
    pub fn from_parts(host: Graph, entries: Vec<VertexSet>) -> Result<ShadowSet> {
        if entries.iter().any(|e| !e.is_subset_of(host.vertices())) {
            return Err(Error::HostMismatch);
        }
        let casters = (0..entries.len()).collect();
        Ok(ShadowSet { host, casters, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Host plus one marker vertex per chosen shadow, each marker adjacent to
/// its shadow's members. Color-preserving isomorphisms of these auxiliary
/// graphs are exactly host isomorphisms carrying one shadow multiset onto
/// the other.
fn shadow_aux(host: &Graph, entries: &[VertexSet]) -> Result<(Graph, [VertexSet; 2])> {
    let m = host.n();
    let total = m + entries.len();
    if total > MAX_VERTICES {
        return Err(Error::TooLarge { n: total, cap: MAX_VERTICES });
    }
    let mut aux = Graph::empty(total)?;
    for (u, v) in host.edges() {
        aux.add_edge(u, v);
    }
    for (i, e) in entries.iter().enumerate() {
        for v in e.iter() {
            aux.add_edge(m + i, v);
        }
    }
    let host_cell = VertexSet::full(m);
    let marker_cell = VertexSet::full(total).minus(host_cell);
    Ok((aux, [host_cell, marker_cell]))
}

fn subset_entries(ss: &ShadowSet, idx: VertexSet) -> Vec<VertexSet> {
    idx.iter().map(|i| ss.entries[i]).collect()
}

/// Canonical code of the auxiliary graph. Two shadow sets over hosts of
/// equal order are isomorphic iff their codes match, so this doubles as a
/// grouping key.
pub(crate) fn shadow_set_code(ss: &ShadowSet) -> Result<u64> {
    let (aux, cells) = shadow_aux(&ss.host, &ss.entries)?;
    Ok(canon::colored_canon_code(&aux, &cells))
}

/// Is there a host automorphism mapping the shadow multiset of `a` onto
/// that of `b`? Hosts must have equal order.
pub fn shadow_set_isomorphic(a: &ShadowSet, b: &ShadowSet) -> Result<bool> {
    if a.host.n() != b.host.n() {
        return Err(Error::HostMismatch);
    }
    if a.len() != b.len() {
        return Ok(false);
    }
    let mut sizes_a: Vec<usize> = a.entries.iter().map(|e| e.len()).collect();
    let mut sizes_b: Vec<usize> = b.entries.iter().map(|e| e.len()).collect();
    sizes_a.sort_unstable();
    sizes_b.sort_unstable();
    if sizes_a != sizes_b {
        return Ok(false);
    }
    let (aux_a, cells_a) = shadow_aux(&a.host, &a.entries)?;
    let (aux_b, cells_b) = shadow_aux(&b.host, &b.entries)?;
    Ok(canon::colored_isomorphic(&aux_a, &cells_a, &aux_b, &cells_b))
}

/// Every pair of shadows is exchanged by some automorphism of the host
/// fixing the whole multiset. True for fewer than two shadows.
pub fn is_shadow_transitive(ss: &ShadowSet) -> Result<bool> {
    if ss.len() <= 1 {
        return Ok(true);
    }
    let (aux, cells) = shadow_aux(&ss.host, &ss.entries)?;
    let orbits = canon::orbits_colored(&aux, &cells);
    let marker_cell = cells[1];
    Ok(orbits.iter().any(|&o| marker_cell.is_subset_of(o)))
}

/// Minimum-size index subset of the shadows with no other index subset
/// isomorphic to it (via a host automorphism, both taken as multisets).
/// The whole index set counts as a subset of itself, so a singleton shadow
/// set always has one.
pub fn find_shadow_anchor(ss: &ShadowSet) -> Result<Option<Vec<usize>>> {
    shadow_anchor_impl(ss, true)
}

/// Like [`find_shadow_anchor`], but restricted to proper subsets. This is
/// the variant with extension force: adding the casters of a proper shadow
/// anchor to the host's vertex set yields a larger anchor.
pub fn find_proper_shadow_anchor(ss: &ShadowSet) -> Result<Option<Vec<usize>>> {
    shadow_anchor_impl(ss, false)
}

fn shadow_anchor_impl(ss: &ShadowSet, include_full: bool) -> Result<Option<Vec<usize>>> {
    let k = ss.len();
    if k == 0 {
        return Ok(None);
    }
    let index_space = VertexSet::full(k);
    let max_t = if include_full { k } else { k - 1 };
    for t in 1..=max_t {
        let mut buckets: HashMap<u64, (usize, VertexSet)> = HashMap::new();
        for idx in index_space.subsets_of_size(t) {
            let (aux, cells) = shadow_aux(&ss.host, &subset_entries(ss, idx))?;
            let code = colored_canon_code(&aux, &cells);
            let e = buckets.entry(code).or_insert((0, idx));
            e.0 += 1;
        }
        let best = buckets
            .values()
            .filter(|(count, _)| *count == 1)
            .map(|&(_, idx)| idx)
            .min();
        if let Some(idx) = best {
            return Ok(Some(idx.to_vec()));
        }
    }
    Ok(None)
}

/// Result of growing an anchor as far as the extension rules reach.
#[derive(Clone, Debug)]
pub struct AnchorReport {
    pub anchor: VertexSet,
    pub residue: VertexSet,
    /// Shadows of the residue vertices on the final anchor.
    pub shadows: ShadowSet,
    pub order: usize,
    pub is_maximal: bool,
}

/// Grow the anchor induced by `hset` until neither extension rule applies:
/// first absorb a smallest anchor of the residue (ties broken by canonical
/// code, then by vertex set), else absorb the casters of a proper shadow
/// anchor of the residue's shadows. Both moves yield anchors again, so the
/// loop maintains the invariant and terminates.
pub fn extend_to_maximal(g: &Graph, hset: VertexSet) -> Result<AnchorReport> {
    if !is_anchor(g, hset)? {
        return Err(Error::InvalidArgument(format!(
            "{hset} does not induce an anchor"
        )));
    }
    let mut cur = hset;
    loop {
        let residue = g.vertices().minus(cur);
        debug_assert!(!residue.is_empty());
        let rg = g.induced(residue);
        let rv = residue.to_vec();
        let mut grown = false;
        for k in 1..rg.n() {
            let cands = anchors_of_order(&rg, k);
            if cands.is_empty() {
                continue;
            }
            let best = cands
                .into_iter()
                .min_by_key(|&s| (canon_code(&rg.induced(s)), s))
                .expect("non-empty");
            cur = cur.union(VertexSet::from_iter(best.iter().map(|i| rv[i])));
            grown = true;
            break;
        }
        if !grown {
            let ss = ShadowSet::of(g, cur)?;
            if let Some(indices) = find_proper_shadow_anchor(&ss)? {
                cur = cur.union(VertexSet::from_iter(indices.iter().map(|&i| ss.casters[i])));
                grown = true;
            }
        }
        if !grown {
            break;
        }
        debug_assert_eq!(is_anchor(g, cur), Ok(true));
    }
    let residue = g.vertices().minus(cur);
    let shadows = ShadowSet::of(g, cur)?;
    let is_maximal = is_maximal_anchor(g, cur)?;
    Ok(AnchorReport { anchor: cur, residue, shadows, order: cur.len(), is_maximal })
}

/// No proper superset of `hset` induces an anchor. `hset` itself must be
/// an anchor.
pub fn is_maximal_anchor(g: &Graph, hset: VertexSet) -> Result<bool> {
    if !is_anchor(g, hset)? {
        return Err(Error::InvalidArgument(format!(
            "{hset} does not induce an anchor"
        )));
    }
    let residue = g.vertices().minus(hset);
    for add in residue.subsets() {
        if add.is_empty() || add == residue {
            continue;
        }
        if induced_is_unique(g, hset.union(add)) {
            return Ok(false);
        }
    }
    Ok(true)
}
