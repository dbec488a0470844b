//! Exhaustive catalogs of small graphs and censuses over them.
//!
//! Enumeration works by canonical augmentation: each graph on `k + 1`
//! vertices is built from a parent on `k` by attaching a fresh vertex, and
//! a child is kept only when the new vertex could be the one removed to
//! reach its parent canonically. Every isomorphism class appears exactly
//! once, without any global duplicate table.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::anchor::{self, extend_to_maximal};
use crate::canon::{self, automorphism_group, canon_code_and_perm, Perm};
use crate::deck::Deck;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// Largest order the exhaustive enumeration accepts.
pub const ENUMERATION_CAP: usize = 10;

/// Orbit representatives of the subsets of an `n`-vertex graph under the
/// group generated by `gens`, lowest mask first.
fn subset_orbit_reps(n: usize, gens: &[Perm]) -> Vec<VertexSet> {
    let total = 1usize << n;
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    for m in 0..total as u16 {
        if seen[m as usize] {
            continue;
        }
        reps.push(VertexSet(m));
        let mut stack = vec![VertexSet(m)];
        seen[m as usize] = true;
        while let Some(s) = stack.pop() {
            for gen in gens {
                let t = gen.apply_set(s);
                if !seen[t.0 as usize] {
                    seen[t.0 as usize] = true;
                    stack.push(t);
                }
            }
        }
    }
    reps
}

/// Accept the child iff its newest vertex sits in the same orbit as the
/// vertex a canonical relabelling puts last.
fn augmentation_accepts(child: &Graph) -> bool {
    let last = child.n() - 1;
    let (_, sigma) = canon_code_and_perm(child);
    let vstar = (0..child.n()).find(|&v| sigma.apply(v) == last).expect("bijection");
    canon::same_orbit(child, vstar, last)
}

/// One representative per isomorphism class of graphs on `n` vertices.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > ENUMERATION_CAP {
        return Err(Error::TooLarge { n, cap: ENUMERATION_CAP });
    }
    let mut level = vec![Graph::empty(1)?];
    for k in 1..n {
        let mut next = Vec::new();
        for parent in &level {
            let gens = automorphism_group(parent).generators;
            for mask in subset_orbit_reps(k, &gens) {
                let child = parent.with_new_vertex(mask)?;
                if augmentation_accepts(&child) {
                    next.push(child);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// Anchor number distribution over all `n`-vertex graphs: map from anchor
/// number to class count. Requires `2 <= n <= 10`.
pub fn anchor_number_histogram(n: usize) -> Result<BTreeMap<usize, u64>> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "anchor numbers need at least two vertices".into(),
        ));
    }
    let mut hist = BTreeMap::new();
    for g in enumerate_graphs(n)? {
        *hist.entry(anchor::anchor_number(&g)?).or_insert(0u64) += 1;
    }
    Ok(hist)
}

/// The catalog of graphs with no anchor or almost none, split into the
/// structurally expected kinds and the leftovers.
#[derive(Clone, Debug)]
pub struct AnchorFreeStats {
    pub n: usize,
    /// Classes with anchor number `n`.
    pub anchor_free: u64,
    /// Classes with anchor number `n - 1`.
    pub almost_anchor_free: u64,
    /// Anchor-free classes that are vertex-transitive.
    pub vertex_transitive: u64,
    /// Anchor number `n - 1` classes where the graph or its complement has
    /// an isolated vertex.
    pub with_isolated_or_dominating: u64,
    /// Anchor number `n - 1` classes that are a disjoint union of an
    /// anchor-free graph with an isolated vertex, or the complement of one.
    /// A subset of the isolated-or-dominating count: the deleted vertex must
    /// leave an anchor-free remainder.
    pub isolated_union_anchor_free: u64,
    /// Anchor-free but not vertex-transitive, as graph6 keys.
    pub informal_anchor_free: Vec<String>,
    /// Anchor number `n - 1` without isolated or dominating vertex.
    pub informal_almost: Vec<String>,
}

impl AnchorFreeStats {
    pub fn total(&self) -> u64 {
        self.anchor_free + self.almost_anchor_free
    }

    pub fn formal(&self) -> u64 {
        self.vertex_transitive + self.with_isolated_or_dominating
    }

    pub fn informal(&self) -> u64 {
        self.total() - self.formal()
    }
}

fn has_isolated_or_dominating(g: &Graph) -> bool {
    (0..g.n()).any(|v| g.degree(v) == 0 || g.degree(v) == g.n() - 1)
}

/// Does deleting an isolated vertex of `g` or of its complement leave an
/// anchor-free graph? Remainders from different isolated vertices are
/// isomorphic, so checking one per side suffices.
fn is_isolated_union_anchor_free(g: &Graph) -> Result<bool> {
    for h in [g.clone(), g.complement()] {
        if let Some(v) = (0..h.n()).find(|&v| h.degree(v) == 0) {
            let rest = h.delete_vertex(v);
            if anchor::anchor_number(&rest)? == rest.n() {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

pub fn anchorfree_stats(n: usize) -> Result<AnchorFreeStats> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "anchor numbers need at least two vertices".into(),
        ));
    }
    let mut stats = AnchorFreeStats {
        n,
        anchor_free: 0,
        almost_anchor_free: 0,
        vertex_transitive: 0,
        with_isolated_or_dominating: 0,
        isolated_union_anchor_free: 0,
        informal_anchor_free: Vec::new(),
        informal_almost: Vec::new(),
    };
    for g in enumerate_graphs(n)? {
        let a = anchor::anchor_number(&g)?;
        if a == n {
            stats.anchor_free += 1;
            if canon::is_vertex_transitive(&g) {
                stats.vertex_transitive += 1;
            } else {
                stats.informal_anchor_free.push(graph6::encode(&canon::canonical_graph(&g)));
            }
        } else if a == n - 1 {
            stats.almost_anchor_free += 1;
            if has_isolated_or_dominating(&g) {
                stats.with_isolated_or_dominating += 1;
                if is_isolated_union_anchor_free(&g)? {
                    stats.isolated_union_anchor_free += 1;
                }
            } else {
                stats.informal_almost.push(graph6::encode(&canon::canonical_graph(&g)));
            }
        }
    }
    stats.informal_anchor_free.sort();
    stats.informal_almost.sort();
    Ok(stats)
}

/// Outcome of grouping all `n`-vertex classes by their decks.
#[derive(Clone, Debug)]
pub struct CensusReport {
    pub n: usize,
    pub classes: u64,
    /// Distinct decks observed.
    pub decks: u64,
    /// Groups of non-isomorphic graphs sharing a deck, as graph6 keys.
    pub colliding_groups: Vec<Vec<String>>,
}

impl CensusReport {
    pub fn collisions(&self) -> u64 {
        self.colliding_groups.len() as u64
    }
}

/// Group every `n`-vertex class by its deck and report collisions, i.e.
/// decks shared by non-isomorphic graphs. Requires `n >= 3`.
pub fn reconstruction_census(n: usize) -> Result<CensusReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(
            "deck comparison below three vertices is degenerate".into(),
        ));
    }
    let mut groups: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut classes = 0u64;
    for g in enumerate_graphs(n)? {
        classes += 1;
        // cards are canonical and sorted, so the lines are a deck key
        groups
            .entry(Deck::of(&g)?.to_graph6_lines())
            .or_default()
            .push(graph6::encode(&canon::canonical_graph(&g)));
    }
    let decks = groups.len() as u64;
    let colliding_groups: Vec<Vec<String>> =
        groups.into_values().filter(|v| v.len() > 1).collect();
    Ok(CensusReport { n, classes, decks, colliding_groups })
}

/// Uniform random graph on `n` vertices: every pair is an edge with
/// probability one half.
pub fn random_graph(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<bool>() {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

fn has_asymmetric_n2_anchor(g: &Graph) -> bool {
    matches!(crate::theorems::check_asymmetric_n2(g), Ok(Some(_)))
}

/// Over all `n`-vertex classes, how many have an anchor of order `n - 2`
/// inducing an asymmetric subgraph. Returns (hits, classes).
pub fn asymmetric_n2_fraction_exact(n: usize) -> Result<(u64, u64)> {
    let mut hits = 0u64;
    let mut total = 0u64;
    for g in enumerate_graphs(n)? {
        total += 1;
        if has_asymmetric_n2_anchor(&g) {
            hits += 1;
        }
    }
    Ok((hits, total))
}

/// Same measurement over `samples` random graphs, reproducible by seed.
pub fn asymmetric_n2_fraction_sampled(n: usize, samples: u64, seed: u64) -> Result<(u64, u64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0u64;
    for _ in 0..samples {
        if has_asymmetric_n2_anchor(&random_graph(n, &mut rng)?) {
            hits += 1;
        }
    }
    Ok((hits, samples))
}

/// Where the anchor extension stops, starting from a smallest anchor.
#[derive(Clone, Debug, Default)]
pub struct ExtensionCensus {
    pub n: usize,
    /// Classes that have an anchor at all.
    pub with_anchor: u64,
    /// Extensions whose fixed point is a maximal anchor.
    pub maximal: u64,
    /// Fixed points leaving at most two vertices outside.
    pub residue_at_most_two: u64,
    /// Fixed points whose residue is a single orbit of the graph with at
    /// least three vertices.
    pub residue_single_orbit: u64,
    /// Fixed points matching neither description.
    pub other: u64,
}

/// Extend a smallest anchor of every `n`-vertex class that has one and
/// classify the fixed points.
pub fn extension_census(n: usize) -> Result<ExtensionCensus> {
    if n < 2 {
        return Err(Error::InvalidArgument(
            "anchor numbers need at least two vertices".into(),
        ));
    }
    let mut census = ExtensionCensus { n, ..ExtensionCensus::default() };
    for g in enumerate_graphs(n)? {
        let a = anchor::anchor_number(&g)?;
        if a == n {
            continue;
        }
        census.with_anchor += 1;
        let seed = anchor::anchors_of_order(&g, a)
            .into_iter()
            .min_by_key(|&s| (canon::canon_code(&g.induced(s)), s))
            .expect("anchor number is attained");
        let report = extend_to_maximal(&g, seed)?;
        if report.is_maximal {
            census.maximal += 1;
        }
        let r = report.residue.len();
        if r <= 2 {
            census.residue_at_most_two += 1;
        } else if canon::orbits(&g).contains(&report.residue) {
            census.residue_single_orbit += 1;
        } else {
            census.other += 1;
        }
    }
    Ok(census)
}

/// Connected, non-regular graphs on at most `max_n` vertices whose
/// complement is also connected, keeping per complement pair the sparse
/// side: only graphs with at most half the possible edges are retained.
pub fn half_dense_family(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for g in enumerate_graphs(n)? {
            if g.is_regular() || !g.is_connected() || !g.complement().is_connected() {
                continue;
            }
            if g.edge_count() * 4 <= n * (n - 1) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use std::collections::BTreeSet;

    #[test]
    fn class_counts_match_known_values() {
        for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)] {
            assert_eq!(enumerate_graphs(n).unwrap().len(), want, "n = {n}");
        }
        assert!(enumerate_graphs(0).is_err());
        assert!(enumerate_graphs(11).is_err());
    }

    #[test]
    fn classes_match_brute_force() {
        for n in [3, 4] {
            let fast: BTreeSet<String> = enumerate_graphs(n)
                .unwrap()
                .iter()
                .map(|g| canon::canonical_form(g).key)
                .collect();
            let brute: BTreeSet<String> = oracle::enumerate_brute(n)
                .iter()
                .map(|g| canon::canonical_form(g).key)
                .collect();
            assert_eq!(fast, brute, "n = {n}");
        }
    }

    #[test]
    fn histogram_n5() {
        let hist = anchor_number_histogram(5).unwrap();
        let want: BTreeMap<usize, u64> = [(2, 2), (3, 17), (4, 12), (5, 3)].into_iter().collect();
        assert_eq!(hist, want);
    }

    #[test]
    fn stats_n5() {
        let stats = anchorfree_stats(5).unwrap();
        assert_eq!(stats.anchor_free, 3);
        assert_eq!(stats.almost_anchor_free, 12);
        // all three anchor-free classes on five vertices are transitive
        assert_eq!(stats.vertex_transitive, 3);
        assert!(stats.informal_anchor_free.is_empty());
        assert_eq!(stats.with_isolated_or_dominating, 10);
        // the K1,3 + K1 pair keeps an isolated vertex but not an anchor-free rest
        assert_eq!(stats.isolated_union_anchor_free, 8);
        assert_eq!(stats.total(), 15);
    }

    #[test]
    fn census_small_orders_have_no_collisions() {
        for n in [3, 4, 5] {
            let report = reconstruction_census(n).unwrap();
            assert_eq!(report.collisions(), 0, "n = {n}");
            assert_eq!(report.decks, report.classes);
        }
        assert!(reconstruction_census(2).is_err());
    }

    #[test]
    fn random_graphs_are_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        let g1 = random_graph(8, &mut a).unwrap();
        let g2 = random_graph(8, &mut b).unwrap();
        assert_eq!(g1, g2);
        let g3 = random_graph(8, &mut a).unwrap();
        assert_ne!(g1, g3, "consecutive draws should differ");
    }

    #[test]
    fn asymmetric_n2_search() {
        // Asymmetric graphs need six vertices, so orders below 8 never hit.
        let (hits, total) = asymmetric_n2_fraction_exact(5).unwrap();
        assert_eq!((hits, total), (0, 34));
        let (hits6, total6) = asymmetric_n2_fraction_exact(6).unwrap();
        assert_eq!((hits6, total6), (0, 156));
        let (s1, t1) = asymmetric_n2_fraction_sampled(9, 20, 11).unwrap();
        let (s2, _) = asymmetric_n2_fraction_sampled(9, 20, 11).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(t1, 20);
        assert!(s1 > 0, "a random 9-vertex graph almost always qualifies");
    }

    #[test]
    fn extension_census_buckets_partition() {
        let census = extension_census(5).unwrap();
        assert_eq!(census.with_anchor, 34 - 3);
        assert_eq!(
            census.residue_at_most_two + census.residue_single_orbit + census.other,
            census.with_anchor
        );
    }

    #[test]
    fn family_counts() {
        let family = half_dense_family(6).unwrap();
        for g in &family {
            assert!(g.is_connected() && g.complement().is_connected() && !g.is_regular());
            assert!(g.edge_count() * 4 <= g.n() * (g.n() - 1));
        }
        assert_eq!(family.len(), 39);
        let by_n: BTreeMap<usize, usize> = family.iter().fold(BTreeMap::new(), |mut m, g| {
            *m.entry(g.n()).or_default() += 1;
            m
        });
        assert_eq!(by_n, BTreeMap::from([(4, 1), (5, 5), (6, 33)]));
    }
}
