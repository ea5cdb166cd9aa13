//! Scalable inputs for the benchmarks.

use msgraph_core::{AsGraph, GraphType, MsGraph, RenameMap, SourceLabel};

/// A directed path `v0 -> ... -> v{n-1}` with sources `s0..s{k-1}` spread
/// evenly over it. With `shared`, every second source sits on the same
/// vertex as its predecessor, so the graph is not an s-graph.
pub fn path(n: usize, sources: usize, shared: bool) -> MsGraph {
    let mut g = MsGraph::new();
    for i in 0..n {
        g.add_vertex(format!("v{i}"), None);
    }
    for i in 1..n {
        g.add_edge(format!("v{}", i - 1), format!("v{i}"), "e");
    }
    for j in 0..sources {
        let at = if shared && j % 2 == 1 { j - 1 } else { j };
        g.set_source(format!("s{j}"), format!("v{}", at * n.max(1) / sources.max(1)));
    }
    g
}

/// `path` with its vertex ids written backwards, isomorphic to the
/// original but with no id in common.
pub fn reversed_ids(g: &MsGraph) -> MsGraph {
    let n = g.vertex_count();
    let flip = |id: &str| format!("w{}", n - 1 - id[1..].parse::<usize>().expect("path id"));
    let mut out = MsGraph::new();
    for (id, label) in g.base().vertices() {
        out.add_vertex(flip(id.as_str()), label.map(|l| l.as_str()));
    }
    for e in g.base().edges() {
        out.add_edge(flip(e.from.as_str()), flip(e.to.as_str()), e.label.as_str());
    }
    for (label, v) in g.sources() {
        out.set_source(label, flip(v.as_str()));
    }
    out
}

/// A functor with `slots` open sources, each requesting the empty type.
pub fn functor(slots: usize) -> AsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("head", Some("pred"));
    g.set_source(SourceLabel::root(), "head");
    let mut ty = GraphType::empty();
    for j in 0..slots {
        let v = format!("arg{j}");
        g.add_vertex(v.clone(), None);
        g.add_edge("head", v.clone(), format!("ARG{j}"));
        g.set_source(format!("s{j}"), v);
        ty = ty.with(format!("s{j}"), GraphType::empty(), RenameMap::identity());
    }
    AsGraph::new(g, ty).expect("well-formed")
}

pub fn constant(label: &str) -> AsGraph {
    let mut g = MsGraph::new();
    g.add_vertex(label, Some(label));
    g.set_source(SourceLabel::root(), label);
    AsGraph::new(g, GraphType::empty()).expect("well-formed")
}
