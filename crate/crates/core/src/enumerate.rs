//! Exhaustive enumeration of small graphs.
//!
//! Graphs come out in lexicographic order of (vertex count, node-label
//! assignment, source assignment, edge multiset). Vertices are named
//! `v0, v1, ...`, so two emitted graphs are never identical, though many
//! are isomorphic.

use serde::{Deserialize, Serialize};

use crate::graph::{BaseGraph, Edge, GraphError, MsGraph, SourceLabel, Symbol, VertexId};

pub const DEFAULT_BUDGET: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBounds {
    pub min_vertices: usize,
    pub max_vertices: usize,
    pub source_labels: Vec<SourceLabel>,
    pub node_labels: Vec<Symbol>,
    pub edge_labels: Vec<Symbol>,
    pub max_edges: usize,
    pub s_graphs_only: bool,
    pub budget: u128,
}

impl Default for EnumerationBounds {
    /// Up to 3 vertices, sources from `{a, b, rt}`, node label `l`, edge
    /// label `e`, at most 2 edges, s-graphs only.
    fn default() -> Self {
        EnumerationBounds {
            min_vertices: 0,
            max_vertices: 3,
            source_labels: ["a", "b", "rt"].into_iter().map(SourceLabel::new).collect(),
            node_labels: vec![Symbol::new("l")],
            edge_labels: vec![Symbol::new("e")],
            max_edges: 2,
            s_graphs_only: true,
            budget: DEFAULT_BUDGET,
        }
    }
}

impl EnumerationBounds {
    /// Exactly `n` vertices, no labels, no edges, s-graphs only.
    pub fn exact(n: usize) -> Self {
        EnumerationBounds {
            min_vertices: n,
            max_vertices: n,
            source_labels: Vec::new(),
            node_labels: Vec::new(),
            edge_labels: Vec::new(),
            max_edges: 0,
            s_graphs_only: true,
            budget: DEFAULT_BUDGET,
        }
    }

    /// Number of graphs [`enumerate_graphs`] would emit.
    pub fn count(&self) -> u128 {
        (self.min_vertices..=self.max_vertices)
            .map(|n| {
                let node = pow(self.node_labels.len() as u128 + 1, n);
                let src = source_assignments(self.source_labels.len(), n, self.s_graphs_only);
                let triples = (n * n * self.edge_labels.len()) as u128;
                let edges: u128 = (0..=self.max_edges as u128)
                    .map(|k| multisets(triples, k))
                    .sum();
                node.saturating_mul(src).saturating_mul(edges)
            })
            .fold(0u128, u128::saturating_add)
    }
}

fn pow(base: u128, exp: usize) -> u128 {
    (0..exp).fold(1u128, |acc, _| acc.saturating_mul(base))
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Multisets of size `k` over `n` items.
fn multisets(n: u128, k: u128) -> u128 {
    if k == 0 {
        1
    } else if n == 0 {
        0
    } else {
        binomial(n + k - 1, k)
    }
}

fn source_assignments(labels: usize, vertices: usize, injective: bool) -> u128 {
    if !injective {
        return pow(vertices as u128 + 1, labels);
    }
    // choose which labels are present, then place them injectively
    (0..=labels.min(vertices))
        .map(|k| {
            let falling = (0..k).fold(1u128, |acc, i| acc * (vertices - i) as u128);
            binomial(labels as u128, k as u128) * falling
        })
        .sum()
}

pub fn enumerate_graphs(bounds: &EnumerationBounds) -> Result<GraphEnumeration, GraphError> {
    let count = bounds.count();
    if count > bounds.budget {
        return Err(GraphError::BudgetExceeded {
            count,
            budget: bounds.budget,
        });
    }
    Ok(GraphEnumeration::new(bounds.clone()))
}

/// Iterator returned by [`enumerate_graphs`].
pub struct GraphEnumeration {
    bounds: EnumerationBounds,
    n: usize,
    ids: Vec<VertexId>,
    node: Vec<usize>,
    /// 0 = label absent, k = label on vertex k-1.
    src: Vec<usize>,
    edges: Vec<usize>,
    done: bool,
}

impl GraphEnumeration {
    fn new(bounds: EnumerationBounds) -> Self {
        let n = bounds.min_vertices;
        let done = bounds.min_vertices > bounds.max_vertices;
        let mut it = GraphEnumeration {
            n,
            ids: Vec::new(),
            node: Vec::new(),
            src: Vec::new(),
            edges: Vec::new(),
            done,
            bounds,
        };
        if !done {
            it.reset_vertex_count(n);
        }
        it
    }

    fn reset_vertex_count(&mut self, n: usize) {
        self.n = n;
        self.ids = (0..n).map(|i| VertexId::from(format!("v{i}"))).collect();
        self.node = vec![0; n];
        self.src = vec![0; self.bounds.source_labels.len()];
        self.edges.clear();
        if self.bounds.s_graphs_only && !self.src_injective() {
            self.advance_sources();
        }
    }

    fn triples(&self) -> usize {
        self.n * self.n * self.bounds.edge_labels.len()
    }

    fn src_injective(&self) -> bool {
        let mut seen = vec![false; self.n + 1];
        self.src.iter().all(|&s| {
            if s == 0 {
                return true;
            }
            !std::mem::replace(&mut seen[s], true)
        })
    }

    /// Next nondecreasing sequence, growing the length when exhausted.
    fn advance_edges(&mut self) -> bool {
        let t = self.triples();
        if t == 0 {
            return false;
        }
        let k = self.edges.len();
        if let Some(i) = (0..k).rev().find(|&i| self.edges[i] + 1 < t) {
            let next = self.edges[i] + 1;
            for e in &mut self.edges[i..] {
                *e = next;
            }
            return true;
        }
        if k < self.bounds.max_edges {
            self.edges = vec![0; k + 1];
            return true;
        }
        false
    }

    fn advance_sources(&mut self) -> bool {
        loop {
            if !odometer(&mut self.src, self.n + 1) {
                return false;
            }
            if !self.bounds.s_graphs_only || self.src_injective() {
                return true;
            }
        }
    }

    fn advance(&mut self) {
        if self.advance_edges() {
            return;
        }
        self.edges.clear();
        if self.advance_sources() {
            return;
        }
        // odometer wrapped src back to zeros, which is always injective
        if odometer(&mut self.node, self.bounds.node_labels.len() + 1) {
            return;
        }
        if self.n < self.bounds.max_vertices {
            self.reset_vertex_count(self.n + 1);
        } else {
            self.done = true;
        }
    }

    fn build(&self) -> MsGraph {
        let mut base = BaseGraph::new();
        for (i, id) in self.ids.iter().enumerate() {
            let label = match self.node[i] {
                0 => None,
                k => Some(self.bounds.node_labels[k - 1].clone()),
            };
            base.add_vertex(id.clone(), label);
        }
        let labels = self.bounds.edge_labels.len();
        for &t in &self.edges {
            let label = &self.bounds.edge_labels[t % labels];
            let pair = t / labels;
            base.add_edge(Edge {
                from: self.ids[pair / self.n].clone(),
                to: self.ids[pair % self.n].clone(),
                label: label.clone(),
            });
        }
        let sources = self
            .bounds
            .source_labels
            .iter()
            .zip(&self.src)
            .filter(|(_, &s)| s > 0)
            .map(|(label, &s)| (label.clone(), self.ids[s - 1].clone()))
            .collect();
        MsGraph::from_parts(base, sources)
    }
}

/// Increments a little-endian-from-the-right counter; returns `false` on
/// wrap-around (leaving all digits zero).
fn odometer(digits: &mut [usize], radix: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

impl Iterator for GraphEnumeration {
    type Item = MsGraph;

    fn next(&mut self) -> Option<MsGraph> {
        if self.done {
            return None;
        }
        let g = self.build();
        self.advance();
        Some(g)
    }
}
