//! Graphs with (possibly multiple) source labels per vertex.
//!
//! An [`MsGraph`] is a labeled directed multigraph together with a total
//! source assignment `src: tau -> V`. Nothing forces `src` to be injective,
//! so a single vertex may carry several source labels. When `src` happens to
//! be injective the graph is an ordinary s-graph, see [`MsGraph::is_s_graph`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

macro_rules! token_type {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(Arc<str>);

        impl $name {
            pub fn new(name: impl AsRef<str>) -> Self {
                $name(Arc::from(name.as_ref()))
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{:?}", &*self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                $name::new(s)
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                $name(Arc::from(s))
            }
        }

        impl From<&$name> for $name {
            fn from(s: &$name) -> Self {
                s.clone()
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                serializer.serialize_str(&self.0)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
                String::deserialize(deserializer).map($name::from)
            }
        }
    };
}

token_type!(
    /// A source label. The token `rt` is reserved for the root.
    SourceLabel
);
token_type!(
    /// Opaque vertex identifier, unique within one graph.
    VertexId
);
token_type!(
    /// Node or edge label.
    Symbol
);

impl SourceLabel {
    pub const ROOT: &'static str = "rt";

    pub fn root() -> Self {
        static ROOT: OnceLock<SourceLabel> = OnceLock::new();
        ROOT.get_or_init(|| SourceLabel::new(Self::ROOT)).clone()
    }

    pub fn is_root(&self) -> bool {
        &*self.0 == Self::ROOT
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("source label {0} is not in the type of the graph")]
    MissingSource(SourceLabel),
    #[error("graph has no root source")]
    MissingRoot,
    #[error("renaming onto {0} collides with an existing source label")]
    RenameCollision(SourceLabel),
    #[error("rename map is not injective: {0} is the image of two labels")]
    NonInjectiveRename(SourceLabel),
    #[error("graph has {vertices} vertices, above the bound of {bound}")]
    Capacity { vertices: usize, bound: usize },
    #[error("enumeration would produce {count} graphs, above the budget of {budget}")]
    BudgetExceeded { count: u128, budget: u128 },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub from: VertexId,
    pub to: VertexId,
    pub label: Symbol,
}

impl Edge {
    pub fn new(from: impl Into<VertexId>, to: impl Into<VertexId>, label: impl Into<Symbol>) -> Self {
        Edge {
            from: from.into(),
            to: to.into(),
            label: label.into(),
        }
    }
}

/// The underlying graph: vertices with optional labels and a list of
/// labeled edges. Parallel edges are kept; the edge list order is the
/// edge identity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BaseGraph {
    vertices: BTreeMap<VertexId, Option<Symbol>>,
    edges: Vec<Edge>,
}

impl BaseGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a vertex. Returns `false` (and leaves the graph untouched) if
    /// the id is already taken.
    pub fn add_vertex(&mut self, id: impl Into<VertexId>, label: Option<Symbol>) -> bool {
        let id = id.into();
        if self.vertices.contains_key(&id) {
            return false;
        }
        self.vertices.insert(id, label);
        true
    }

    pub fn add_edge(&mut self, edge: Edge) {
        self.edges.push(edge);
    }

    /// Replaces the label of an existing vertex; `false` if there is none.
    pub fn set_node_label(&mut self, id: &VertexId, label: Option<Symbol>) -> bool {
        match self.vertices.get_mut(id) {
            Some(slot) => {
                *slot = label;
                true
            }
            None => false,
        }
    }

    pub fn contains_vertex(&self, id: &VertexId) -> bool {
        self.vertices.contains_key(id)
    }

    /// Node label of `id`; `None` both for unknown and unlabeled vertices.
    pub fn node_label(&self, id: &VertexId) -> Option<&Symbol> {
        self.vertices.get(id).and_then(Option::as_ref)
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = (&VertexId, Option<&Symbol>)> + '_ {
        self.vertices.iter().map(|(id, label)| (id, label.as_ref()))
    }

    pub fn vertex_ids(&self) -> impl ExactSizeIterator<Item = &VertexId> + '_ {
        self.vertices.keys()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// An invariant violation found by [`MsGraph::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DanglingSource { label: SourceLabel, vertex: VertexId },
    DanglingEdge { edge: usize, vertex: VertexId },
    EmptySourceLabel { vertex: VertexId },
    EmptyVertexId,
    EmptyNodeLabel { vertex: VertexId },
    EmptyEdgeLabel { edge: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DanglingSource { label, vertex } => {
                write!(f, "dangling source: {label} points to missing vertex {vertex}")
            }
            Violation::DanglingEdge { edge, vertex } => {
                write!(f, "dangling edge: edge #{edge} touches missing vertex {vertex}")
            }
            Violation::EmptySourceLabel { vertex } => {
                write!(f, "empty source label on vertex {vertex}")
            }
            Violation::EmptyVertexId => f.write_str("empty vertex id"),
            Violation::EmptyNodeLabel { vertex } => write!(f, "empty node label on vertex {vertex}"),
            Violation::EmptyEdgeLabel { edge } => write!(f, "empty label on edge #{edge}"),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidityReport {
    pub violations: Vec<Violation>,
}

impl ValidityReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("ok");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A graph with possibly multiple source labels per vertex.
///
/// The type `tau` is the key set of the source map, so `src` is total on
/// `tau` by construction. Whether every image vertex exists is checked by
/// [`MsGraph::validate`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MsGraph {
    base: BaseGraph,
    sources: BTreeMap<SourceLabel, VertexId>,
}

impl MsGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_parts(base: BaseGraph, sources: BTreeMap<SourceLabel, VertexId>) -> Self {
        MsGraph { base, sources }
    }

    pub fn into_parts(self) -> (BaseGraph, BTreeMap<SourceLabel, VertexId>) {
        (self.base, self.sources)
    }

    pub fn add_vertex(&mut self, id: impl Into<VertexId>, label: Option<&str>) -> bool {
        self.base.add_vertex(id, label.map(Symbol::new))
    }

    pub fn add_edge(
        &mut self,
        from: impl Into<VertexId>,
        to: impl Into<VertexId>,
        label: impl Into<Symbol>,
    ) {
        self.base.add_edge(Edge::new(from, to, label));
    }

    /// Points `label` at `vertex`, replacing any previous assignment.
    pub fn set_source(&mut self, label: impl Into<SourceLabel>, vertex: impl Into<VertexId>) {
        self.sources.insert(label.into(), vertex.into());
    }

    pub fn base(&self) -> &BaseGraph {
        &self.base
    }

    pub fn sources(&self) -> &BTreeMap<SourceLabel, VertexId> {
        &self.sources
    }

    pub fn src(&self, label: &SourceLabel) -> Option<&VertexId> {
        self.sources.get(label)
    }

    pub fn tau(&self) -> BTreeSet<SourceLabel> {
        self.sources.keys().cloned().collect()
    }

    pub fn has_source(&self, label: &SourceLabel) -> bool {
        self.sources.contains_key(label)
    }

    pub fn vertex_count(&self) -> usize {
        self.base.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.base.edge_count()
    }

    pub fn validate(&self) -> ValidityReport {
        let mut violations = Vec::new();
        for (id, label) in self.base.vertices() {
            if id.as_str().is_empty() {
                violations.push(Violation::EmptyVertexId);
            }
            if label.is_some_and(|l| l.as_str().is_empty()) {
                violations.push(Violation::EmptyNodeLabel { vertex: id.clone() });
            }
        }
        for (i, edge) in self.base.edges().iter().enumerate() {
            for end in [&edge.from, &edge.to] {
                if !self.base.contains_vertex(end) {
                    violations.push(Violation::DanglingEdge {
                        edge: i,
                        vertex: end.clone(),
                    });
                }
            }
            if edge.label.as_str().is_empty() {
                violations.push(Violation::EmptyEdgeLabel { edge: i });
            }
        }
        for (label, vertex) in &self.sources {
            if !self.base.contains_vertex(vertex) {
                violations.push(Violation::DanglingSource {
                    label: label.clone(),
                    vertex: vertex.clone(),
                });
            }
            if label.as_str().is_empty() {
                violations.push(Violation::EmptySourceLabel {
                    vertex: vertex.clone(),
                });
            }
        }
        ValidityReport { violations }
    }

    /// `true` iff the source assignment is injective.
    pub fn is_s_graph(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.sources.values().all(|v| seen.insert(v))
    }

    /// Labels carried by `vertex` (the inverse of `src`).
    pub fn slab(&self, vertex: &VertexId) -> Result<BTreeSet<SourceLabel>, GraphError> {
        if !self.base.contains_vertex(vertex) {
            return Err(GraphError::UnknownVertex(vertex.clone()));
        }
        Ok(self.labels_at(vertex).cloned().collect())
    }

    pub(crate) fn labels_at<'a>(
        &'a self,
        vertex: &'a VertexId,
    ) -> impl Iterator<Item = &'a SourceLabel> + 'a {
        self.sources
            .iter()
            .filter(move |(_, v)| *v == vertex)
            .map(|(label, _)| label)
    }

    /// Union of [`slab`](Self::slab) over a vertex set. Vertices that carry
    /// no source, or do not exist, contribute nothing.
    pub fn slab_set<'a>(
        &self,
        vertices: impl IntoIterator<Item = &'a VertexId>,
    ) -> BTreeSet<SourceLabel> {
        let wanted: BTreeSet<&VertexId> = vertices.into_iter().collect();
        self.sources
            .iter()
            .filter(|(_, v)| wanted.contains(v))
            .map(|(label, _)| label.clone())
            .collect()
    }

    /// Simultaneous renaming of source labels along the identity extension
    /// of `map`. Fails if a renamed label lands on a label that stays put.
    pub fn rename(&self, map: &RenameMap) -> Result<MsGraph, GraphError> {
        let mut sources = BTreeMap::new();
        for (label, vertex) in &self.sources {
            let target = map.apply(label);
            if sources.insert(target.clone(), vertex.clone()).is_some() {
                return Err(GraphError::RenameCollision(target));
            }
        }
        Ok(MsGraph {
            base: self.base.clone(),
            sources,
        })
    }

    pub fn forget(&self, label: &SourceLabel) -> Result<MsGraph, GraphError> {
        if !self.sources.contains_key(label) {
            return Err(GraphError::MissingSource(label.clone()));
        }
        let mut out = self.clone();
        out.sources.remove(label);
        Ok(out)
    }

    /// Additional root labels: every label on the root vertex except `rt`.
    pub fn rlab(&self) -> Result<BTreeSet<SourceLabel>, GraphError> {
        let root = self
            .sources
            .get(&SourceLabel::root())
            .ok_or(GraphError::MissingRoot)?;
        Ok(self
            .labels_at(root)
            .filter(|l| !l.is_root())
            .cloned()
            .collect())
    }
}

/// A finite injective partial map on source labels.
///
/// [`apply`](Self::apply) extends it by the identity outside its domain.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RenameMap {
    mapping: BTreeMap<SourceLabel, SourceLabel>,
}

impl RenameMap {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn new<I, A, B>(pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<SourceLabel>,
        B: Into<SourceLabel>,
    {
        let mut mapping = BTreeMap::new();
        let mut images = BTreeSet::new();
        for (from, to) in pairs {
            let to = to.into();
            if !images.insert(to.clone()) {
                return Err(GraphError::NonInjectiveRename(to));
            }
            mapping.insert(from.into(), to);
        }
        Ok(RenameMap { mapping })
    }

    pub fn single(from: impl Into<SourceLabel>, to: impl Into<SourceLabel>) -> Self {
        let mut mapping = BTreeMap::new();
        mapping.insert(from.into(), to.into());
        RenameMap { mapping }
    }

    pub fn get(&self, label: &SourceLabel) -> Option<&SourceLabel> {
        self.mapping.get(label)
    }

    pub fn apply(&self, label: &SourceLabel) -> SourceLabel {
        self.mapping.get(label).unwrap_or(label).clone()
    }

    pub fn inverse(&self) -> RenameMap {
        RenameMap {
            mapping: self
                .mapping
                .iter()
                .map(|(a, b)| (b.clone(), a.clone()))
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.mapping.iter().all(|(a, b)| a == b)
    }

    pub fn is_empty(&self) -> bool {
        self.mapping.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SourceLabel, &SourceLabel)> + '_ {
        self.mapping.iter()
    }
}
