//! Source-preserving isomorphism of ms-graphs.
//!
//! Plain backtracking over vertex bijections. Candidates for each vertex are
//! pruned by an invariant signature (node label, source labels, sorted in-
//! and out-edge labels) and every partial assignment is checked against the
//! edge multiplicities between already-mapped vertices.

use std::collections::BTreeMap;

use crate::graph::{GraphError, MsGraph, SourceLabel, Symbol, VertexId};

pub const DEFAULT_MAX_VERTICES: usize = 64;

/// A vertex bijection from the first graph onto the second.
pub type Isomorphism = BTreeMap<VertexId, VertexId>;

pub fn is_isomorphic(g: &MsGraph, h: &MsGraph) -> Result<bool, GraphError> {
    find_isomorphism(g, h).map(|w| w.is_some())
}

pub fn find_isomorphism(g: &MsGraph, h: &MsGraph) -> Result<Option<Isomorphism>, GraphError> {
    find_isomorphism_bounded(g, h, DEFAULT_MAX_VERTICES)
}

pub fn find_isomorphism_bounded(
    g: &MsGraph,
    h: &MsGraph,
    max_vertices: usize,
) -> Result<Option<Isomorphism>, GraphError> {
    for graph in [g, h] {
        if graph.vertex_count() > max_vertices {
            return Err(GraphError::Capacity {
                vertices: graph.vertex_count(),
                bound: max_vertices,
            });
        }
    }
    if g.vertex_count() != h.vertex_count()
        || g.edge_count() != h.edge_count()
        || !g.sources().keys().eq(h.sources().keys())
    {
        return Ok(None);
    }

    let left = Indexed::new(g);
    let right = Indexed::new(h);
    let n = left.ids.len();

    let mut left_sigs: Vec<&Signature> = left.signatures.iter().collect();
    let mut right_sigs: Vec<&Signature> = right.signatures.iter().collect();
    left_sigs.sort();
    right_sigs.sort();
    if left_sigs != right_sigs {
        return Ok(None);
    }

    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| left.signatures[i] == right.signatures[j])
                .collect()
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (candidates[i].len(), i));

    let mut search = Search {
        left: &left,
        right: &right,
        candidates: &candidates,
        order: &order,
        mapping: vec![usize::MAX; n],
        used: vec![false; n],
    };
    if !search.extend(0) {
        return Ok(None);
    }
    Ok(Some(
        search
            .mapping
            .iter()
            .enumerate()
            .map(|(i, &j)| (left.ids[i].clone(), right.ids[j].clone()))
            .collect(),
    ))
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Signature<'a> {
    label: Option<&'a Symbol>,
    sources: Vec<&'a SourceLabel>,
    out_labels: Vec<&'a Symbol>,
    in_labels: Vec<&'a Symbol>,
}

struct Indexed<'a> {
    ids: Vec<&'a VertexId>,
    signatures: Vec<Signature<'a>>,
    /// Sorted edge labels per ordered vertex pair, row-major.
    adjacency: Vec<Vec<&'a Symbol>>,
}

impl<'a> Indexed<'a> {
    fn new(g: &'a MsGraph) -> Self {
        let ids: Vec<&VertexId> = g.base().vertex_ids().collect();
        let n = ids.len();
        let index = |v: &VertexId| ids.binary_search(&v).expect("valid graph");
        let mut signatures: Vec<Signature> = g
            .base()
            .vertices()
            .map(|(_, label)| Signature {
                label,
                sources: Vec::new(),
                out_labels: Vec::new(),
                in_labels: Vec::new(),
            })
            .collect();
        for (label, v) in g.sources() {
            signatures[index(v)].sources.push(label);
        }
        let mut adjacency: Vec<Vec<&Symbol>> = vec![Vec::new(); n * n];
        for e in g.base().edges() {
            let (a, b) = (index(&e.from), index(&e.to));
            signatures[a].out_labels.push(&e.label);
            signatures[b].in_labels.push(&e.label);
            adjacency[a * n + b].push(&e.label);
        }
        for sig in &mut signatures {
            sig.out_labels.sort();
            sig.in_labels.sort();
        }
        for labels in &mut adjacency {
            labels.sort();
        }
        Indexed {
            ids,
            signatures,
            adjacency,
        }
    }

    fn between(&self, a: usize, b: usize) -> &[&'a Symbol] {
        &self.adjacency[a * self.ids.len() + b]
    }
}

struct Search<'s, 'a> {
    left: &'s Indexed<'a>,
    right: &'s Indexed<'a>,
    candidates: &'s [Vec<usize>],
    order: &'s [usize],
    mapping: Vec<usize>,
    used: Vec<bool>,
}

impl Search<'_, '_> {
    fn extend(&mut self, depth: usize) -> bool {
        let Some(&u) = self.order.get(depth) else {
            return true;
        };
        for &v in &self.candidates[u] {
            if self.used[v] || !self.consistent(u, v, depth) {
                continue;
            }
            self.mapping[u] = v;
            self.used[v] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[v] = false;
            self.mapping[u] = usize::MAX;
        }
        false
    }

    fn consistent(&self, u: usize, v: usize, depth: usize) -> bool {
        if self.left.between(u, u) != self.right.between(v, v) {
            return false;
        }
        self.order[..depth].iter().all(|&w| {
            let x = self.mapping[w];
            self.left.between(u, w) == self.right.between(v, x)
                && self.left.between(w, u) == self.right.between(x, v)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn reflexive_on_fixtures() {
        for g in [
            fixtures::g_single(),
            fixtures::g_separate(),
            fixtures::wash_oneself(),
            fixtures::raven_washes_raven(),
            MsGraph::new(),
        ] {
            let w = find_isomorphism(&g, &g).unwrap().expect("self-isomorphic");
            assert!(w.iter().all(|(a, b)| g.base().node_label(a) == g.base().node_label(b)));
        }
    }

    #[test]
    fn vertex_count_mismatch() {
        assert!(!is_isomorphic(&fixtures::g_separate(), &fixtures::g_single()).unwrap());
    }

    #[test]
    fn renamed_vertices_are_isomorphic() {
        let mut g = MsGraph::new();
        g.add_vertex("p", Some("wash"));
        g.add_vertex("q", None);
        g.add_edge("p", "q", "ARG1");
        g.add_edge("p", "q", "ARG0");
        g.set_source("rt", "p");
        g.set_source("s", "q");
        let w = find_isomorphism(&g, &fixtures::wash_oneself()).unwrap().unwrap();
        assert_eq!(w[&VertexId::new("p")], VertexId::new("wash"));
    }

    #[test]
    fn sources_must_be_preserved() {
        let mut g = MsGraph::new();
        g.add_vertex("x", None);
        g.add_vertex("y", None);
        g.set_source("a", "x");
        let mut h = g.clone();
        h.set_source("a", "y");
        assert!(is_isomorphic(&g, &h).unwrap());
        h.set_source("b", "y");
        assert!(!is_isomorphic(&g, &h).unwrap());
        g.set_source("b", "x");
        // a and b share a vertex in g but not in h
        h.set_source("a", "x");
        assert!(!is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn edge_multiplicity_matters() {
        let one = fixtures::raven_washes_herself();
        let mut two = one.clone();
        two.add_edge("wash", "raven", "ARG1");
        assert!(!is_isomorphic(&one, &two).unwrap());
    }

    #[test]
    fn direction_matters() {
        // a 3-path and a 3-path with one edge flipped have equal label
        // multisets per vertex count but are not isomorphic
        let mut g = MsGraph::new();
        let mut h = MsGraph::new();
        for id in ["x", "y", "z"] {
            g.add_vertex(id, None);
            h.add_vertex(id, None);
        }
        g.add_edge("x", "y", "e");
        g.add_edge("y", "z", "e");
        h.add_edge("x", "y", "e");
        h.add_edge("z", "y", "e");
        assert!(!is_isomorphic(&g, &h).unwrap());
    }

    #[test]
    fn capacity_bound() {
        let mut g = MsGraph::new();
        for i in 0..5 {
            g.add_vertex(format!("v{i}"), None);
        }
        assert_eq!(
            find_isomorphism_bounded(&g, &g, 4),
            Err(GraphError::Capacity {
                vertices: 5,
                bound: 4
            })
        );
    }

    #[test]
    fn needs_backtracking() {
        // two disjoint 2-cycles vs one 4-cycle: all vertices look alike
        let mut g = MsGraph::new();
        let mut h = MsGraph::new();
        for i in 0..4 {
            g.add_vertex(format!("{i}"), None);
            h.add_vertex(format!("{i}"), None);
        }
        for (a, b) in [("0", "1"), ("1", "0"), ("2", "3"), ("3", "2")] {
            g.add_edge(a, b, "e");
        }
        for (a, b) in [("0", "1"), ("1", "2"), ("2", "3"), ("3", "0")] {
            h.add_edge(a, b, "e");
        }
        assert!(!is_isomorphic(&g, &h).unwrap());
        let mut k = MsGraph::new();
        for i in 0..4 {
            k.add_vertex(format!("{i}"), None);
        }
        for (a, b) in [("0", "2"), ("2", "0"), ("1", "3"), ("3", "1")] {
            k.add_edge(a, b, "e");
        }
        assert!(is_isomorphic(&g, &k).unwrap());
    }
}
