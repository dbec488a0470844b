//! Vertex-deleted decks, subgraph counting, and deck reconstruction.
//!
//! The deck of a graph on `n` vertices is the multiset of its `n`
//! vertex-deleted subgraphs, each taken up to isomorphism. Cards are kept
//! in canonical form, so two decks compare equal exactly when they agree
//! as multisets of isomorphism classes.

use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::graph6;
use std::collections::BTreeMap;

/// A multiset of canonical cards, all of order `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deck {
    n: usize,
    cards: BTreeMap<Graph, usize>,
}

impl Deck {
    /// The deck of `g`. The empty graph has no vertices to delete.
    pub fn of(g: &Graph) -> Result<Deck> {
        if g.n() == 0 {
            return Err(Error::InvalidArgument("the empty graph has no deck".into()));
        }
        let mut cards = BTreeMap::new();
        for v in g.vertices().iter() {
            *cards.entry(canonical_graph(&g.delete_vertex(v))).or_insert(0) += 1;
        }
        Ok(Deck { n: g.n(), cards })
    }

    /// Assemble a deck from loose cards. All cards must share one order
    /// `k`, and there must be exactly `k + 1` of them.
    pub fn from_cards<I: IntoIterator<Item = Graph>>(cards: I) -> Result<Deck> {
        let mut map = BTreeMap::new();
        let mut k: Option<usize> = None;
        let mut count = 0usize;
        for card in cards {
            match k {
                None => k = Some(card.n()),
                Some(k) if k != card.n() => {
                    return Err(Error::InvalidArgument(format!(
                        "cards of mixed orders {k} and {}",
                        card.n()
                    )));
                }
                _ => {}
            }
            *map.entry(canonical_graph(&card)).or_insert(0) += 1;
            count += 1;
        }
        let Some(k) = k else {
            return Err(Error::InvalidArgument("no cards".into()));
        };
        if count != k + 1 {
            return Err(Error::InvalidArgument(format!(
                "{count} cards of order {k}; a deck needs {}",
                k + 1
            )));
        }
        if k + 1 > MAX_VERTICES {
            return Err(Error::TooLarge { n: k + 1, cap: MAX_VERTICES });
        }
        Ok(Deck { n: k + 1, cards: map })
    }

    /// Order of the graph the deck came from.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Order of each card: `n - 1`.
    pub fn card_order(&self) -> usize {
        self.n - 1
    }

    /// Distinct cards with multiplicities, in canonical order.
    pub fn cards(&self) -> impl Iterator<Item = (&Graph, usize)> {
        self.cards.iter().map(|(g, &m)| (g, m))
    }

    pub fn card_count(&self) -> usize {
        self.cards.values().sum()
    }

    /// One graph6 line per card, repeated to multiplicity.
    pub fn to_graph6_lines(&self) -> String {
        let mut out = String::new();
        for (card, m) in self.cards() {
            for _ in 0..m {
                out.push_str(&graph6::encode(card));
                out.push('\n');
            }
        }
        out
    }

    /// Parse one graph6 card per non-empty line.
    pub fn from_graph6_lines(s: &str) -> Result<Deck> {
        let cards: Vec<Graph> = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(graph6::decode)
            .collect::<Result<_>>()?;
        Deck::from_cards(cards)
    }
}

/// Number of induced subgraphs of `g` isomorphic to `h`.
pub fn subgraph_count(g: &Graph, h: &Graph) -> u64 {
    if h.n() > g.n() {
        return 0;
    }
    let target = canonical_graph(h);
    let mut hd = h.degrees();
    hd.sort_unstable();
    let mut count = 0;
    for s in g.vertices().subsets_of_size(h.n()) {
        let sub = g.induced(s);
        if sub.edge_count() != h.edge_count() {
            continue;
        }
        let mut sd = sub.degrees();
        sd.sort_unstable();
        if sd == hd && canonical_graph(&sub) == target {
            count += 1;
        }
    }
    count
}

/// Number of induced subgraphs isomorphic to `h`, computed from the deck
/// alone: every copy of `h` survives in exactly `n - k` cards, so the card
/// counts sum to `(n - k)` times the host count.
///
/// Requires `h` smaller than the host. A division remainder means no graph
/// has this deck.
pub fn count_from_deck(deck: &Deck, h: &Graph) -> Result<u64> {
    let (n, k) = (deck.n(), h.n());
    if k >= n {
        return Err(Error::InvalidArgument(format!(
            "pattern of order {k} is not smaller than the host order {n}"
        )));
    }
    let total: u64 = deck.cards().map(|(card, m)| m as u64 * subgraph_count(card, h)).sum();
    let divisor = (n - k) as u64;
    if total % divisor != 0 {
        return Err(Error::InconsistentDeck(format!(
            "card counts for the pattern sum to {total}, not a multiple of {divisor}"
        )));
    }
    Ok(total / divisor)
}

/// Number of ways to split `V(g)` into parts that induce the connected
/// components of `h` with no edges between parts.
///
/// A part without outgoing edges is a union of connected components of
/// `g`, so this counts the unordered partitions of `g`'s components whose
/// unions realize `h`'s component multiset. `h` must have the same order
/// as `g`; the count is zero unless `g` is disconnected at least as finely
/// as `h` demands.
pub fn spanning_disconnected_count(g: &Graph, h: &Graph) -> Result<u64> {
    if g.n() != h.n() {
        return Err(Error::InvalidArgument(format!(
            "spanning pattern must match the host order ({} vs {})",
            h.n(),
            g.n()
        )));
    }
    if g.n() == 0 {
        return Ok(1);
    }
    let g_comps: Vec<VertexSet> = g.components();
    let mut h_multiset: BTreeMap<Graph, usize> = BTreeMap::new();
    for c in h.components() {
        *h_multiset.entry(canonical_graph(&h.induced(c))).or_insert(0) += 1;
    }
    let groups_needed = h_multiset.values().sum::<usize>();
    if groups_needed > g_comps.len() {
        return Ok(0);
    }

    // Grow unordered partitions of the component list: each component in
    // turn joins an existing group or opens a new one.
    fn recurse(
        g: &Graph,
        g_comps: &[VertexSet],
        next: usize,
        groups: &mut Vec<VertexSet>,
        max_groups: usize,
        target: &BTreeMap<Graph, usize>,
    ) -> u64 {
        if next == g_comps.len() {
            if groups.len() != max_groups {
                return 0;
            }
            let mut got: BTreeMap<Graph, usize> = BTreeMap::new();
            for &grp in groups.iter() {
                *got.entry(canonical_graph(&g.induced(grp))).or_insert(0) += 1;
            }
            return (got == *target) as u64;
        }
        let mut total = 0;
        for i in 0..groups.len() {
            let old = groups[i];
            groups[i] = old.union(g_comps[next]);
            total += recurse(g, g_comps, next + 1, groups, max_groups, target);
            groups[i] = old;
        }
        if groups.len() < max_groups {
            groups.push(g_comps[next]);
            total += recurse(g, g_comps, next + 1, groups, max_groups, target);
            groups.pop();
        }
        total
    }

    let mut groups = Vec::new();
    Ok(recurse(g, &g_comps, 0, &mut groups, groups_needed, &h_multiset))
}

/// Maximum order accepted by [`brute_force_reconstruct`].
pub const RECONSTRUCT_CAP: usize = 8;

/// Every graph with the given deck, up to isomorphism, in canonical form.
///
/// Any preimage restricted away from one vertex matches some fixed card,
/// so candidates are that card plus one vertex attached every possible
/// way; each candidate's own deck is then compared against the input.
pub fn brute_force_reconstruct(deck: &Deck) -> Result<Vec<Graph>> {
    let n = deck.n();
    if n > RECONSTRUCT_CAP {
        return Err(Error::TooLarge { n, cap: RECONSTRUCT_CAP });
    }
    if n == 1 {
        return Ok(vec![Graph::empty(1).unwrap()]);
    }
    // degree of the vertex deleted to make a card: total edges minus the
    // card's edges; total edges comes from summing edges over all cards,
    // each host edge surviving in n - 2 of them
    let card_edge_sum: u64 = deck.cards().map(|(c, m)| m as u64 * c.edge_count() as u64).sum();
    let (base, _) = deck.cards().next().expect("decks are never empty");
    let missing_degree = if n == 2 {
        // both graphs on two vertices share the all-K1 deck; try both
        None
    } else {
        if card_edge_sum % (n as u64 - 2) != 0 {
            return Ok(Vec::new());
        }
        let total_edges = card_edge_sum / (n as u64 - 2);
        let d = total_edges as i64 - base.edge_count() as i64;
        if d < 0 || d as usize > n - 1 {
            return Ok(Vec::new());
        }
        Some(d as usize)
    };
    let mut found: Vec<Graph> = Vec::new();
    for mask in base.vertices().subsets() {
        if missing_degree.is_some_and(|d| mask.len() != d) {
            continue;
        }
        let candidate = canonical_graph(&base.with_new_vertex(mask)?);
        if !found.contains(&candidate) && Deck::of(&candidate)? == *deck {
            found.push(candidate);
        }
    }
    found.sort();
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::isomorphic;
    use crate::oracle;

    #[test]
    fn deck_of_small_graphs() {
        let p3 = Graph::path(3).unwrap();
        let d = Deck::of(&p3).unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(d.card_order(), 2);
        let cards: Vec<(usize, usize)> = d.cards().map(|(c, m)| (c.edge_count(), m)).collect();
        // deleting the middle leaves two isolated vertices; an end leaves an edge
        assert_eq!(cards, vec![(0, 1), (1, 2)]);

        let k3 = Graph::complete(3).unwrap();
        let d = Deck::of(&k3).unwrap();
        assert_eq!(d.cards().collect::<Vec<_>>().len(), 1);
        assert_eq!(d.card_count(), 3);

        let c5 = Graph::cycle(5).unwrap();
        let d = Deck::of(&c5).unwrap();
        let p4 = canonical_graph(&Graph::path(4).unwrap());
        assert_eq!(d.cards().collect::<Vec<_>>(), vec![(&p4, 5)]);
    }

    #[test]
    fn from_cards_validates_shape() {
        let k2 = Graph::complete(2).unwrap();
        let e2 = Graph::empty(2).unwrap();
        assert!(Deck::from_cards([k2, k2, e2]).is_ok());
        assert!(matches!(Deck::from_cards([k2, k2]), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            Deck::from_cards([k2, Graph::empty(3).unwrap()]),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(Deck::from_cards(std::iter::empty()), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn graph6_lines_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)]).unwrap();
        let d = Deck::of(&g).unwrap();
        let lines = d.to_graph6_lines();
        assert_eq!(lines.lines().count(), 5);
        assert_eq!(Deck::from_graph6_lines(&lines).unwrap(), d);
    }

    #[test]
    fn subgraph_counts_match_known_values() {
        let p4 = Graph::path(4).unwrap();
        let k2 = Graph::complete(2).unwrap();
        assert_eq!(subgraph_count(&p4, &k2), 3);
        let k4 = Graph::complete(4).unwrap();
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(subgraph_count(&k4, &k3), 4);
        let c5 = Graph::cycle(5).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert_eq!(subgraph_count(&c5, &p3), 5);
        // a graph never counts as its own proper subgraph at full order
        assert_eq!(subgraph_count(&c5, &c5), 1);
        assert_eq!(subgraph_count(&c5, &Graph::cycle(4).unwrap()), 0);
    }

    #[test]
    fn subgraph_counts_match_brute_force() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (3, 5)])
            .unwrap();
        for h in oracle::enumerate_brute(3) {
            assert_eq!(subgraph_count(&g, &h), oracle::subgraph_count_brute(&g, &h));
        }
        for h in oracle::enumerate_brute(4) {
            assert_eq!(subgraph_count(&g, &h), oracle::subgraph_count_brute(&g, &h));
        }
    }

    #[test]
    fn deck_counts_agree_with_host_counts() {
        let c5 = Graph::cycle(5).unwrap();
        let d = Deck::of(&c5).unwrap();
        assert_eq!(count_from_deck(&d, &Graph::path(3).unwrap()).unwrap(), 5);

        // every pattern strictly smaller than the host, over all 4- and
        // 5-vertex hosts
        for g in oracle::enumerate_brute(5).into_iter().chain(oracle::enumerate_brute(4)) {
            let d = Deck::of(&g).unwrap();
            for k in 1..g.n() {
                for h in oracle::enumerate_brute(k) {
                    assert_eq!(
                        count_from_deck(&d, &h).unwrap(),
                        subgraph_count(&g, &h),
                        "host {g:?} pattern {h:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn deck_counts_reject_large_patterns() {
        let d = Deck::of(&Graph::cycle(5).unwrap()).unwrap();
        assert!(matches!(
            count_from_deck(&d, &Graph::cycle(5).unwrap()),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            count_from_deck(&d, &Graph::cycle(6).unwrap()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn spanning_disconnected_counts() {
        let k2_k1 = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(spanning_disconnected_count(&k2_k1, &k2_k1).unwrap(), 1);

        let p3 = Graph::path(3).unwrap();
        assert_eq!(spanning_disconnected_count(&p3, &k2_k1).unwrap(), 0);

        let two_k2 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(spanning_disconnected_count(&two_k2, &two_k2).unwrap(), 1);

        // three isolated vertices split as one-plus-edge: no edge exists
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(spanning_disconnected_count(&e3, &e3).unwrap(), 1);
        assert_eq!(spanning_disconnected_count(&e3, &k2_k1).unwrap(), 0);

        // connected spanning pattern degenerates to an isomorphism test
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(spanning_disconnected_count(&c5, &c5).unwrap(), 1);
        assert_eq!(spanning_disconnected_count(&c5, &Graph::path(5).unwrap()).unwrap(), 0);

        // order mismatch is a usage error
        assert!(spanning_disconnected_count(&c5, &p3).is_err());
    }

    #[test]
    fn spanning_count_distinguishes_partition_multiplicity() {
        // four isolated vertices seen as two empty pairs: 3 unordered pairings
        let e4 = Graph::empty(4).unwrap();
        let two_e2 = Graph::empty(4).unwrap(); // same graph, read as 2K1 + 2K1 split
        assert_eq!(spanning_disconnected_count(&e4, &two_e2).unwrap(), 1); // 4K1 pattern: one way
        let pair_pattern = Graph::from_edges(4, &[]).unwrap();
        assert_eq!(pair_pattern.components().len(), 4);

        // K2 + 2K1 inside K2 + 2K1: the two isolated vertices are
        // interchangeable but give the same partition
        let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
        assert_eq!(spanning_disconnected_count(&g, &g).unwrap(), 1);

        // 2K2 + K2: three edges, split into three singleton-component parts
        let m3 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(spanning_disconnected_count(&m3, &m3).unwrap(), 1);
        // read as one P2-pair part and one K2: sizes cannot match
        let k2_k2k2 = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(spanning_disconnected_count(&m3, &k2_k2k2).unwrap(), 1);
    }

    #[test]
    fn reconstruct_small_decks() {
        let p3 = Graph::path(3).unwrap();
        let got = brute_force_reconstruct(&Deck::of(&p3).unwrap()).unwrap();
        assert_eq!(got.len(), 1);
        assert!(isomorphic(&got[0], &p3));

        // order two is the classic failure: K2 and its complement share a deck
        let k2 = Graph::complete(2).unwrap();
        let got = brute_force_reconstruct(&Deck::of(&k2).unwrap()).unwrap();
        assert_eq!(got.len(), 2);

        let k1 = Graph::empty(1).unwrap();
        let got = brute_force_reconstruct(&Deck::of(&k1).unwrap()).unwrap();
        assert_eq!(got.len(), 1);
    }

    #[test]
    fn reconstruction_is_unique_on_five_vertices() {
        for g in oracle::enumerate_brute(5) {
            let got = brute_force_reconstruct(&Deck::of(&g).unwrap()).unwrap();
            assert_eq!(got.len(), 1, "{g:?}");
            assert!(isomorphic(&got[0], &g));
        }
    }

    #[test]
    fn reconstruct_rejects_oversized_decks() {
        let g = Graph::cycle(9).unwrap();
        let d = Deck::of(&g).unwrap();
        assert!(matches!(brute_force_reconstruct(&d), Err(Error::TooLarge { .. })));
    }
}
