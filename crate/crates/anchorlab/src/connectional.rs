//! Connections: a vertex subset viewed as the subgraph it induces, the rest
//! of the graph, and the shadows the subset casts on that rest. When no
//! other subset inducing the same pattern has a matching connection, the
//! copy is pinned down just as an anchor's single copy would be, even
//! though the pattern itself repeats. Such subsets act as *connectional
//! anchors*, provided the distinguished copy can actually be located from
//! the deck; [`find_connectional_anchor`] only reports copies backed by a
//! deck-inferable [`Certificate`].

use serde::Serialize;

use crate::anchor::{self, ShadowSet};
use crate::canon::canon_code;
use crate::deck;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A proper subset split into its induced subgraph, the graph induced on
/// the remaining vertices, and the shadows the subset's vertices cast
/// there. `shadows` has one entry per part vertex, casters ascending, so
/// entry `i` belongs to the part's local vertex `i`.
#[derive(Clone, Debug)]
pub struct Connection {
    pub part: Graph,
    pub rest: Graph,
    pub shadows: ShadowSet,
}

fn check_proper(g: &Graph, s: VertexSet) -> Result<()> {
    if s.is_empty() || !s.is_subset_of(g.vertices()) || s == g.vertices() {
        return Err(Error::InvalidArgument(
            "connection requires a proper non-empty vertex subset".into(),
        ));
    }
    Ok(())
}

/// The connection of `s` in `g`. Note the direction: the part's vertices
/// cast shadows on the rest, not the other way around.
pub fn connection(g: &Graph, s: VertexSet) -> Result<Connection> {
    check_proper(g, s)?;
    let rest_set = g.vertices().minus(s);
    Ok(Connection {
        part: g.induced(s),
        rest: g.induced(rest_set),
        shadows: ShadowSet::of(g, rest_set)?,
    })
}

/// Two subsets have similar connections when their parts are isomorphic
/// and some isomorphism of the rests carries one shadow multiset onto the
/// other (which subsumes the rests being isomorphic at all). Similar
/// connections are indistinguishable by any argument that looks only at a
/// part, its complement, and the edges between them.
pub fn connections_similar(g: &Graph, s1: VertexSet, s2: VertexSet) -> Result<bool> {
    check_proper(g, s1)?;
    check_proper(g, s2)?;
    if s1.len() != s2.len() {
        return Ok(false);
    }
    if canon_code(&g.induced(s1)) != canon_code(&g.induced(s2)) {
        return Ok(false);
    }
    let c1 = connection(g, s1)?;
    let c2 = connection(g, s2)?;
    anchor::shadow_set_isomorphic(&c1.shadows, &c2.shadows)
}

/// Sum of the degrees of `s` in `g`: twice the edges inside `s` plus the
/// edges leaving it. Vertices outside `g` are ignored.
pub fn f_value(g: &Graph, s: VertexSet) -> usize {
    s.intersection(g.vertices()).iter().map(|v| g.degree(v)).sum()
}

/// Edges with exactly one endpoint in `s`.
fn crossing(g: &Graph, s: VertexSet) -> usize {
    s.iter().map(|v| g.neighbors(v).minus(s).len()).sum()
}

/// How a chosen copy of a (possibly repeating) pattern is told apart from
/// the other copies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UniquenessKind {
    /// The induced pattern occurs exactly once; the set is an anchor.
    Structural,
    /// The pattern repeats but this copy's degree sum separates it.
    ConnectionalByEdgeCount,
    /// The connection is unique, with no edge-count argument behind it.
    ConnectionalOther,
    NotUnique,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeExtreme {
    Max,
    Min,
}

/// The set of maximum-degree vertices together with how its induced
/// pattern is told apart from other copies. Every vertex of the set has
/// degree exactly the maximum and any other copy of the pattern misses at
/// least one of them, so the set's degree sum strictly beats every rival
/// copy's; when the pattern repeats the copy is still identified by that
/// margin.
pub fn max_degree_unique_subgraph(g: &Graph) -> Result<(VertexSet, UniquenessKind)> {
    degree_extreme_unique_subgraph(g, DegreeExtreme::Max)
}

/// [`max_degree_unique_subgraph`] for either extreme; the minimum-degree
/// set is strictly degree-sum-minimal among copies by the mirrored
/// argument.
pub fn degree_extreme_unique_subgraph(
    g: &Graph,
    extreme: DegreeExtreme,
) -> Result<(VertexSet, UniquenessKind)> {
    if g.is_regular() {
        return Err(Error::RegularGraph);
    }
    let degrees = g.degrees();
    let target = match extreme {
        DegreeExtreme::Max => *degrees.iter().max().expect("non-regular is non-empty"),
        DegreeExtreme::Min => *degrees.iter().min().expect("non-regular is non-empty"),
    };
    let s = VertexSet::from_iter((0..g.n()).filter(|&v| degrees[v] == target));
    let kind = if deck::subgraph_count(g, &g.induced(s)) == 1 {
        UniquenessKind::Structural
    } else {
        UniquenessKind::ConnectionalByEdgeCount
    };
    Ok((s, kind))
}

/// Deck-inferable evidence that a connection-unique subset can be located
/// inside every card containing it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// The pattern itself occurs once; no counting needed.
    Structural,
    /// Deleting any vertex outside the copy leaves it with
    /// `retained_in_cards` crossing edges, strictly more than any rival
    /// copy has even in the full graph, so the copy with the most crossing
    /// edges in a card is always the distinguished one.
    EdgeCountMargin {
        retained_in_cards: usize,
        rival_max: usize,
    },
}

/// The key under which two subsets of equal size have similar connections
/// iff their keys are equal.
fn connection_key(g: &Graph, s: VertexSet) -> Result<(u64, u64)> {
    let part_code = canon_code(&g.induced(s));
    let shadow_code = anchor::shadow_set_code(&ShadowSet::of(g, g.vertices().minus(s))?)?;
    Ok((part_code, shadow_code))
}

fn margin_certificate(
    g: &Graph,
    s: VertexSet,
    rival_cross: impl IntoIterator<Item = usize>,
) -> Option<Certificate> {
    let rival_max = rival_cross.into_iter().max()?;
    let worst_loss = g
        .vertices()
        .minus(s)
        .iter()
        .map(|v| g.neighbors(v).intersection(s).len())
        .max()
        .unwrap_or(0);
    let retained_in_cards = crossing(g, s) - worst_loss;
    (retained_in_cards > rival_max).then_some(Certificate::EdgeCountMargin {
        retained_in_cards,
        rival_max,
    })
}

/// All certified connection-unique subsets of exactly `k` vertices.
pub(crate) fn certified_of_order(g: &Graph, k: usize) -> Result<Vec<(VertexSet, Certificate)>> {
    let mut out = Vec::new();
    if k == 0 || k >= g.n() {
        return Ok(out);
    }
    let subsets = g.vertices().subsets_of_size(k);
    let mut keys = Vec::with_capacity(subsets.len());
    for &s in &subsets {
        keys.push(connection_key(g, s)?);
    }
    for (i, &s) in subsets.iter().enumerate() {
        let rivals: Vec<usize> = (0..subsets.len())
            .filter(|&j| j != i && keys[j].0 == keys[i].0)
            .collect();
        if rivals.is_empty() {
            out.push((s, Certificate::Structural));
            continue;
        }
        if rivals.iter().any(|&j| keys[j].1 == keys[i].1) {
            continue;
        }
        let cross = rivals.iter().map(|&j| crossing(g, subsets[j]));
        if let Some(cert) = margin_certificate(g, s, cross) {
            out.push((s, cert));
        }
    }
    Ok(out)
}

/// Proper subsets of order at most `max_order` whose connection is unique
/// among all subsets inducing an isomorphic part, each with a certificate
/// that the copy is identifiable from the deck. Connection uniqueness
/// alone is not enough to emit: a unique copy nothing certifies is
/// silently dropped, so the result errs on the conservative side.
pub fn find_connectional_anchor(
    g: &Graph,
    max_order: usize,
) -> Result<Vec<(VertexSet, Certificate)>> {
    let mut out = Vec::new();
    for k in 1..=max_order.min(g.n().saturating_sub(1)) {
        out.extend(certified_of_order(g, k)?);
    }
    Ok(out)
}

/// Certificate for one subset, if any: [`Certificate::Structural`] when
/// the part occurs once, otherwise an edge-count margin when the copy
/// stays ahead of every rival in every card. `None` when the connection
/// is not unique or nothing conservative certifies it.
pub fn connectional_certificate(g: &Graph, s: VertexSet) -> Result<Option<Certificate>> {
    check_proper(g, s)?;
    let key = connection_key(g, s)?;
    let mut rival_cross = Vec::new();
    for t in g.vertices().subsets_of_size(s.len()) {
        if t == s {
            continue;
        }
        let tkey = connection_key(g, t)?;
        if tkey.0 != key.0 {
            continue;
        }
        if tkey.1 == key.1 {
            return Ok(None);
        }
        rival_cross.push(crossing(g, t));
    }
    if rival_cross.is_empty() {
        return Ok(Some(Certificate::Structural));
    }
    Ok(margin_certificate(g, s, rival_cross))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::enumerate_graphs;

    fn vs(vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(vs.iter().copied())
    }

    /// A central triangle whose vertices each found a private outer
    /// triangle. The central copy has six crossing edges, the outer ones
    /// two each.
    fn triangle_of_triangles() -> Graph {
        Graph::from_edges(
            9,
            &[
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (3, 4),
                (1, 5),
                (1, 6),
                (5, 6),
                (2, 7),
                (2, 8),
                (7, 8),
            ],
        )
        .unwrap()
    }

    /// Path 0-1-2-3 with an extra leaf 4 on vertex 1.
    fn chair() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap()
    }

    #[test]
    fn connection_of_path_center() {
        let g = Graph::path(3).unwrap();
        let c = connection(&g, VertexSet::singleton(1)).unwrap();
        assert_eq!(c.part.n(), 1);
        assert_eq!(c.rest.n(), 2);
        assert_eq!(c.rest.edge_count(), 0);
        assert_eq!(c.shadows.casters, vec![1]);
        assert_eq!(c.shadows.entries, vec![c.rest.vertices()]);
    }

    #[test]
    fn connection_rejects_improper_sets() {
        let g = Graph::path(3).unwrap();
        assert!(connection(&g, VertexSet::EMPTY).is_err());
        assert!(connection(&g, g.vertices()).is_err());
    }

    #[test]
    fn isolated_part_casts_empty_shadows() {
        let g = Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]).unwrap();
        let c = connection(&g, vs(&[0, 1, 2])).unwrap();
        assert!(c.shadows.entries.iter().all(|e| e.is_empty()));
    }

    #[test]
    fn complete_graph_pair_connection() {
        let g = Graph::complete(4).unwrap();
        let c = connection(&g, vs(&[1, 3])).unwrap();
        assert_eq!(c.part.edge_count(), 1);
        assert_eq!(c.rest.edge_count(), 1);
        assert!(c.shadows.entries.iter().all(|&e| e == c.rest.vertices()));
    }

    #[test]
    fn similarity_under_automorphism_and_not_otherwise() {
        let g = Graph::path(4).unwrap();
        // the two ends are swapped by the path's flip
        assert!(connections_similar(&g, vs(&[0]), vs(&[3])).unwrap());
        // end vs inner vertex: rests P3 and K1+K2 differ
        assert!(!connections_similar(&g, vs(&[0]), vs(&[1])).unwrap());
        // non-isomorphic parts
        assert!(!connections_similar(&g, vs(&[0, 1]), vs(&[0, 2])).unwrap());
    }

    #[test]
    fn central_triangle_unlike_outer_triangles() {
        let g = triangle_of_triangles();
        assert!(!connections_similar(&g, vs(&[0, 1, 2]), vs(&[0, 3, 4])).unwrap());
        assert!(connections_similar(&g, vs(&[0, 3, 4]), vs(&[1, 5, 6])).unwrap());
    }

    #[test]
    fn f_counts_degrees() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(f_value(&star, VertexSet::singleton(0)), 3);
        assert_eq!(f_value(&star, star.vertices()), 2 * star.edge_count());
        let g = triangle_of_triangles();
        assert_eq!(f_value(&g, vs(&[0, 1, 2])), 12);
        // 2 * inside + crossing, over every subset of a small graph
        let h = chair();
        for s in h.vertices().subsets() {
            let inside = h.induced(s).edge_count();
            assert_eq!(f_value(&h, s), 2 * inside + crossing(&h, s));
        }
    }

    #[test]
    fn max_degree_set_examples() {
        let (s, kind) = max_degree_unique_subgraph(&Graph::path(3).unwrap()).unwrap();
        assert_eq!(s, VertexSet::singleton(1));
        assert_eq!(kind, UniquenessKind::ConnectionalByEdgeCount);

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (s, kind) = max_degree_unique_subgraph(&star).unwrap();
        assert_eq!(s, VertexSet::singleton(0));
        assert_eq!(kind, UniquenessKind::ConnectionalByEdgeCount);
        // the center's degree sum strictly beats every other single vertex
        assert!((1..4).all(|v| f_value(&star, VertexSet::singleton(v))
            < f_value(&star, VertexSet::singleton(0))));

        // a single edge plus an isolated vertex: the two degree-1 vertices
        // induce the only K2, so the set is unique outright
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let (s, kind) = max_degree_unique_subgraph(&g).unwrap();
        assert_eq!(s, vs(&[0, 1]));
        assert_eq!(kind, UniquenessKind::Structural);

        assert!(matches!(
            max_degree_unique_subgraph(&Graph::cycle(5).unwrap()),
            Err(Error::RegularGraph)
        ));

        let (s, _) = degree_extreme_unique_subgraph(&star, DegreeExtreme::Min).unwrap();
        assert_eq!(s, vs(&[1, 2, 3]));
    }

    #[test]
    fn degree_extreme_copy_has_strictly_extreme_f() {
        // over every non-regular graph on up to 5 vertices, the extreme
        // set's degree sum strictly beats (resp. trails) every other copy
        // of its pattern
        for n in 2..=5 {
            for g in enumerate_graphs(n).unwrap() {
                if g.is_regular() {
                    continue;
                }
                for extreme in [DegreeExtreme::Max, DegreeExtreme::Min] {
                    let (s, _) = degree_extreme_unique_subgraph(&g, extreme).unwrap();
                    let code = canon_code(&g.induced(s));
                    for t in g.vertices().subsets_of_size(s.len()) {
                        if t == s || canon_code(&g.induced(t)) != code {
                            continue;
                        }
                        match extreme {
                            DegreeExtreme::Max => assert!(f_value(&g, t) < f_value(&g, s)),
                            DegreeExtreme::Min => assert!(f_value(&g, t) > f_value(&g, s)),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn central_triangle_certified_by_margin() {
        let g = triangle_of_triangles();
        let found = find_connectional_anchor(&g, 3).unwrap();
        assert_eq!(
            found,
            vec![(
                vs(&[0, 1, 2]),
                Certificate::EdgeCountMargin {
                    retained_in_cards: 5,
                    rival_max: 2
                }
            )]
        );
        assert_eq!(
            connectional_certificate(&g, vs(&[0, 1, 2])).unwrap(),
            Some(Certificate::EdgeCountMargin {
                retained_in_cards: 5,
                rival_max: 2
            })
        );
        // outer triangles are mutually similar, hence not unique at all
        assert_eq!(connectional_certificate(&g, vs(&[0, 3, 4])).unwrap(), None);
    }

    #[test]
    fn vertex_transitive_yields_nothing() {
        let g = Graph::cycle(5).unwrap();
        assert!(find_connectional_anchor(&g, 4).unwrap().is_empty());
    }

    #[test]
    fn anchors_are_certified_structurally() {
        let g = chair();
        // no subset of order <= 3 is certified ...
        assert!(find_connectional_anchor(&g, 3).unwrap().is_empty());
        // ... but each of the three 4-vertex anchors is
        let found = find_connectional_anchor(&g, 4).unwrap();
        assert_eq!(found.len(), 3);
        assert!(found.iter().all(|&(_, c)| c == Certificate::Structural));
        assert!(found.iter().any(|&(s, _)| s == vs(&[0, 1, 2, 4])));
    }

    #[test]
    fn unique_connection_without_certificate_is_dropped() {
        let g = chair();
        // the center with its two leaves is the only P3 whose rest is a
        // single edge, so its connection is unique ...
        let s = vs(&[0, 1, 4]);
        for t in [vs(&[0, 1, 2]), vs(&[1, 2, 4]), vs(&[1, 2, 3])] {
            assert!(!connections_similar(&g, s, t).unwrap());
        }
        // ... yet no edge-count margin certifies it, so it is not emitted
        assert_eq!(connectional_certificate(&g, s).unwrap(), None);
        assert!(!find_connectional_anchor(&g, 3)
            .unwrap()
            .iter()
            .any(|&(t, _)| t == s));
    }
}
