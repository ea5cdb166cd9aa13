//! Parallel composition.
//!
//! [`parallel_compose`] works for arbitrary ms-graphs: it copies the second
//! operand apart from the first, relates every pair of vertices that carry
//! the same source label, closes that relation into an equivalence, and
//! takes the quotient along a cross-section of the classes.
//!
//! [`parallel_compose_classic`] is the older gluing construction for
//! s-graphs. It shares no code with the quotient route and serves as its
//! oracle.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{BaseGraph, Edge, MsGraph, SourceLabel, Symbol, ValidityReport, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComposeError {
    #[error("{side} operand is not a valid graph: {report}")]
    InvalidOperand { side: Side, report: ValidityReport },
    #[error("{side} operand is not an s-graph")]
    NotAnSGraph { side: Side },
    #[error("operands share vertex {0}")]
    NotDisjoint(VertexId),
    #[error("vertex {0} is not in the universe of the partition")]
    OutsideUniverse(VertexId),
    #[error("partition universe does not match the vertex set")]
    PartitionMismatch,
    #[error("cannot merge vertex labels {first} and {second} (class of {vertex})")]
    NodeLabelConflict {
        vertex: VertexId,
        first: Symbol,
        second: Symbol,
    },
    #[error("source label {0} lands on two representatives")]
    IllDefinedSource(SourceLabel),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

fn check_valid(g: &MsGraph, side: Side) -> Result<(), ComposeError> {
    let report = g.validate();
    if report.is_ok() {
        Ok(())
    } else {
        Err(ComposeError::InvalidOperand { side, report })
    }
}

/// Copies `h` so that none of its vertex ids occur in `avoid`. Ids are kept
/// where possible; clashing ones get primes appended. Returns the copy and
/// the bijection from `h`'s ids to the copy's.
pub fn disjoint_copy(h: &MsGraph, avoid: &MsGraph) -> (MsGraph, BTreeMap<VertexId, VertexId>) {
    let taken = |id: &VertexId, used: &BTreeSet<VertexId>| {
        avoid.base().contains_vertex(id) || used.contains(id)
    };
    let mut used = BTreeSet::new();
    let mut bijection = BTreeMap::new();
    for id in h.base().vertex_ids() {
        let mut fresh = id.clone();
        while taken(&fresh, &used) {
            fresh = VertexId::from(format!("{fresh}'"));
        }
        used.insert(fresh.clone());
        bijection.insert(id.clone(), fresh);
    }
    let mut base = BaseGraph::new();
    for (id, label) in h.base().vertices() {
        base.add_vertex(bijection[id].clone(), label.cloned());
    }
    for e in h.base().edges() {
        base.add_edge(Edge {
            from: bijection[&e.from].clone(),
            to: bijection[&e.to].clone(),
            label: e.label.clone(),
        });
    }
    let sources = h
        .sources()
        .iter()
        .map(|(label, v)| (label.clone(), bijection[v].clone()))
        .collect();
    (MsGraph::from_parts(base, sources), bijection)
}

/// Pairs `(g-vertex, h'-vertex)` carrying a common source label.
pub fn merge_relation(
    g: &MsGraph,
    h_prime: &MsGraph,
) -> Result<BTreeSet<(VertexId, VertexId)>, ComposeError> {
    if let Some(shared) = g
        .base()
        .vertex_ids()
        .find(|v| h_prime.base().contains_vertex(v))
    {
        return Err(ComposeError::NotDisjoint(shared.clone()));
    }
    Ok(g.sources()
        .iter()
        .filter_map(|(label, v)| h_prime.src(label).map(|w| (v.clone(), w.clone())))
        .collect())
}

/// An equivalence relation on a finite vertex set, stored as its classes,
/// together with one chosen representative per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergePartition {
    classes: Vec<Vec<VertexId>>,
    representatives: Vec<VertexId>,
    class_of: BTreeMap<VertexId, usize>,
}

impl MergePartition {
    /// Classes in order of their smallest member; members sorted.
    pub fn classes(&self) -> &[Vec<VertexId>] {
        &self.classes
    }

    /// The cross-section, aligned with [`classes`](Self::classes).
    pub fn cross_section(&self) -> &[VertexId] {
        &self.representatives
    }

    pub fn universe(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.class_of.keys()
    }

    pub fn class_index(&self, v: &VertexId) -> Option<usize> {
        self.class_of.get(v).copied()
    }

    pub fn representative(&self, v: &VertexId) -> Option<&VertexId> {
        self.class_index(v).map(|i| &self.representatives[i])
    }

    pub fn class_of(&self, v: &VertexId) -> Option<&[VertexId]> {
        self.class_index(v).map(|i| self.classes[i].as_slice())
    }

    pub fn same_class(&self, a: &VertexId, b: &VertexId) -> bool {
        matches!((self.class_index(a), self.class_index(b)), (Some(x), Some(y)) if x == y)
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Structural sanity: nonempty disjoint covering classes, one
    /// representative inside each.
    pub fn is_well_formed(&self) -> bool {
        let mut seen = BTreeSet::new();
        for (i, class) in self.classes.iter().enumerate() {
            if class.is_empty() || !class.contains(&self.representatives[i]) {
                return false;
            }
            for v in class {
                if !seen.insert(v) || self.class_of.get(v) != Some(&i) {
                    return false;
                }
            }
        }
        seen.len() == self.class_of.len() && self.representatives.len() == self.classes.len()
    }
}

struct DisjointSets {
    parent: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as root so roots are class minima
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// Reflexive, symmetric, transitive closure of `relation` over `universe`.
///
/// Each class is represented by its smallest member from `preferred` if it
/// has one, otherwise by its smallest member.
pub fn equivalence_closure(
    relation: &BTreeSet<(VertexId, VertexId)>,
    universe: &BTreeSet<VertexId>,
    preferred: &BTreeSet<VertexId>,
) -> Result<MergePartition, ComposeError> {
    let ids: Vec<&VertexId> = universe.iter().collect();
    let index = |v: &VertexId| {
        ids.binary_search(&v)
            .map_err(|_| ComposeError::OutsideUniverse(v.clone()))
    };
    let mut sets = DisjointSets::new(ids.len());
    for (a, b) in relation {
        sets.union(index(a)?, index(b)?);
    }

    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    let mut slot_of_root = BTreeMap::new();
    let mut class_of = BTreeMap::new();
    for (i, id) in ids.iter().enumerate() {
        let root = sets.find(i);
        let slot = *slot_of_root.entry(root).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[slot].push((*id).clone());
        class_of.insert((*id).clone(), slot);
    }
    let representatives = classes
        .iter()
        .map(|class| {
            class
                .iter()
                .find(|v| preferred.contains(*v))
                .unwrap_or(&class[0])
                .clone()
        })
        .collect();
    Ok(MergePartition {
        classes,
        representatives,
        class_of,
    })
}

/// Quotient of `base` by `partition`, realised on the cross-section.
///
/// Edge endpoints are redirected to their representatives; every edge
/// survives. A class may contain at most one distinct node label.
pub fn quotient(base: &BaseGraph, partition: &MergePartition) -> Result<BaseGraph, ComposeError> {
    if !base.vertex_ids().eq(partition.universe()) {
        return Err(ComposeError::PartitionMismatch);
    }
    let mut out = BaseGraph::new();
    for (class, rep) in partition.classes().iter().zip(partition.cross_section()) {
        let mut label: Option<&Symbol> = None;
        for v in class {
            match (label, base.node_label(v)) {
                (_, None) => {}
                (None, Some(l)) => label = Some(l),
                (Some(a), Some(b)) if a == b => {}
                (Some(a), Some(b)) => {
                    return Err(ComposeError::NodeLabelConflict {
                        vertex: rep.clone(),
                        first: a.clone(),
                        second: b.clone(),
                    })
                }
            }
        }
        out.add_vertex(rep.clone(), label.cloned());
    }
    for e in base.edges() {
        let rep = |v: &VertexId| partition.representative(v).cloned().expect("checked universe");
        out.add_edge(Edge {
            from: rep(&e.from),
            to: rep(&e.to),
            label: e.label.clone(),
        });
    }
    Ok(out)
}

/// Everything [`parallel_compose`] computes along the way.
#[derive(Debug, Clone)]
pub struct Composition {
    pub graph: MsGraph,
    /// The copy of the right operand that was glued on.
    pub right_copy: MsGraph,
    pub partition: MergePartition,
}

pub fn parallel_compose(g: &MsGraph, h: &MsGraph) -> Result<MsGraph, ComposeError> {
    compose_traced(g, h).map(|c| c.graph)
}

pub fn compose_traced(g: &MsGraph, h: &MsGraph) -> Result<Composition, ComposeError> {
    check_valid(g, Side::Left)?;
    check_valid(h, Side::Right)?;
    let (h_prime, _) = disjoint_copy(h, g);
    let relation = merge_relation(g, &h_prime)?;

    let mut union = g.base().clone();
    for (id, label) in h_prime.base().vertices() {
        union.add_vertex(id.clone(), label.cloned());
    }
    for e in h_prime.base().edges() {
        union.add_edge(e.clone());
    }
    let universe: BTreeSet<VertexId> = union.vertex_ids().cloned().collect();
    let preferred: BTreeSet<VertexId> = g.base().vertex_ids().cloned().collect();
    let partition = equivalence_closure(&relation, &universe, &preferred)?;
    let base = quotient(&union, &partition)?;

    // slab of a representative is the union of the slabs of its class on
    // both sides; src is read back off it and must be single-valued
    let mut sources: BTreeMap<SourceLabel, VertexId> = BTreeMap::new();
    for operand in [g, &h_prime] {
        for (label, v) in operand.sources() {
            let rep = partition
                .representative(v)
                .ok_or_else(|| ComposeError::OutsideUniverse(v.clone()))?;
            if let Some(prev) = sources.insert(label.clone(), rep.clone()) {
                if &prev != rep {
                    return Err(ComposeError::IllDefinedSource(label.clone()));
                }
            }
        }
    }

    Ok(Composition {
        graph: MsGraph::from_parts(base, sources),
        right_copy: h_prime,
        partition,
    })
}

/// Gluing of two s-graphs at equally named sources: the right operand's
/// `a`-source is identified with the left's for every shared `a`, all other
/// right vertices are added fresh.
pub fn parallel_compose_classic(g: &MsGraph, h: &MsGraph) -> Result<MsGraph, ComposeError> {
    check_valid(g, Side::Left)?;
    check_valid(h, Side::Right)?;
    if !g.is_s_graph() {
        return Err(ComposeError::NotAnSGraph { side: Side::Left });
    }
    if !h.is_s_graph() {
        return Err(ComposeError::NotAnSGraph { side: Side::Right });
    }

    let mut placed: BTreeMap<&VertexId, VertexId> = BTreeMap::new();
    for (label, v) in h.sources() {
        if let Some(target) = g.src(label) {
            placed.insert(v, target.clone());
        }
    }
    let mut base = g.base().clone();
    let mut counter = 0usize;
    for (id, label) in h.base().vertices() {
        match placed.get(id) {
            Some(target) => {
                if let (Some(a), Some(b)) = (base.node_label(target), label) {
                    if a != b {
                        return Err(ComposeError::NodeLabelConflict {
                            vertex: target.clone(),
                            first: a.clone(),
                            second: b.clone(),
                        });
                    }
                }
                if base.node_label(target).is_none() && label.is_some() {
                    base.set_node_label(target, label.cloned());
                }
            }
            None => {
                let fresh = loop {
                    let candidate = VertexId::from(format!("h{counter}"));
                    counter += 1;
                    if !base.contains_vertex(&candidate) {
                        break candidate;
                    }
                };
                base.add_vertex(fresh.clone(), label.cloned());
                placed.insert(id, fresh);
            }
        }
    }
    for e in h.base().edges() {
        base.add_edge(Edge {
            from: placed[&e.from].clone(),
            to: placed[&e.to].clone(),
            label: e.label.clone(),
        });
    }
    let mut sources = g.sources().clone();
    for (label, v) in h.sources() {
        sources.entry(label.clone()).or_insert_with(|| placed[v].clone());
    }
    Ok(MsGraph::from_parts(base, sources))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::RenameMap;
    use crate::iso::is_isomorphic;

    fn labels(names: &[&str]) -> BTreeSet<SourceLabel> {
        names.iter().map(SourceLabel::new).collect()
    }

    fn ids(names: &[&str]) -> BTreeSet<VertexId> {
        names.iter().map(VertexId::new).collect()
    }

    fn self_as_o() -> MsGraph {
        fixtures::g_self()
            .graph()
            .rename(&RenameMap::single("rt", "o"))
            .unwrap()
    }

    #[test]
    fn copy_avoids_ids_and_keeps_slab() {
        let (copy, bij) = disjoint_copy(&fixtures::g_single(), &fixtures::g_separate());
        assert!(is_isomorphic(&copy, &fixtures::g_single()).unwrap());
        let v = &bij[&VertexId::new("ab")];
        assert!(!fixtures::g_separate().base().contains_vertex(v));
        assert_eq!(copy.slab(v).unwrap(), labels(&["A", "B"]));

        let (copy, _) = disjoint_copy(&fixtures::g_single(), &fixtures::g_single());
        assert_eq!(copy.base().vertex_ids().next().unwrap().as_str(), "ab'");

        let (empty, bij) = disjoint_copy(&MsGraph::new(), &fixtures::g_wash().graph().clone());
        assert_eq!(empty, MsGraph::new());
        assert!(bij.is_empty());
    }

    #[test]
    fn copy_handles_primed_ids_in_source() {
        let mut h = MsGraph::new();
        h.add_vertex("x", None);
        h.add_vertex("x'", None);
        let mut avoid = MsGraph::new();
        avoid.add_vertex("x", None);
        let (copy, bij) = disjoint_copy(&h, &avoid);
        assert_eq!(copy.vertex_count(), 2);
        assert_eq!(bij[&VertexId::new("x")].as_str(), "x'");
        assert_eq!(bij[&VertexId::new("x'")].as_str(), "x''");
    }

    #[test]
    fn relation_of_separate_and_single() {
        let (copy, _) = disjoint_copy(&fixtures::g_single(), &fixtures::g_separate());
        let rel = merge_relation(&fixtures::g_separate(), &copy).unwrap();
        let expected: BTreeSet<_> = [("a", "ab"), ("b", "ab")]
            .iter()
            .map(|(x, y)| (VertexId::new(x), VertexId::new(y)))
            .collect();
        assert_eq!(rel, expected);
    }

    #[test]
    fn relation_without_shared_labels_is_empty() {
        let mut h = MsGraph::new();
        h.add_vertex("z", None);
        h.set_source("c", "z");
        assert!(merge_relation(&fixtures::g_separate(), &h).unwrap().is_empty());
    }

    #[test]
    fn relation_of_wash_and_self() {
        let wash = fixtures::g_wash().graph().clone();
        let (copy, _) = disjoint_copy(&self_as_o(), &wash);
        let rel = merge_relation(&wash, &copy).unwrap();
        let expected: BTreeSet<_> = [("o", "self"), ("s", "self")]
            .iter()
            .map(|(x, y)| (VertexId::new(x), VertexId::new(y)))
            .collect();
        assert_eq!(rel, expected);
    }

    #[test]
    fn relation_requires_disjointness() {
        let g = fixtures::g_separate();
        assert_eq!(
            merge_relation(&g, &g),
            Err(ComposeError::NotDisjoint("a".into()))
        );
    }

    #[test]
    fn closure_of_separate_and_single() {
        let rel: BTreeSet<_> = [("a", "ab"), ("b", "ab")]
            .iter()
            .map(|(x, y)| (VertexId::new(x), VertexId::new(y)))
            .collect();
        let p = equivalence_closure(&rel, &ids(&["a", "b", "ab"]), &ids(&["a", "b"])).unwrap();
        assert!(p.is_well_formed());
        assert_eq!(p.len(), 1);
        assert_eq!(p.classes()[0].len(), 3);
        // two left vertices merge: the smaller one represents the class
        assert_eq!(p.cross_section(), &[VertexId::new("a")]);
    }

    #[test]
    fn closure_of_empty_relation_is_discrete() {
        let p = equivalence_closure(&BTreeSet::new(), &ids(&["x", "y", "z"]), &BTreeSet::new())
            .unwrap();
        assert!(p.is_well_formed());
        assert_eq!(p.len(), 3);
        assert!(p.classes().iter().all(|c| c.len() == 1));
    }

    #[test]
    fn closure_of_wash_and_self() {
        let rel: BTreeSet<_> = [("o", "self"), ("s", "self")]
            .iter()
            .map(|(x, y)| (VertexId::new(x), VertexId::new(y)))
            .collect();
        let p = equivalence_closure(&rel, &ids(&["wash", "s", "o", "self"]), &ids(&["wash", "s", "o"]))
            .unwrap();
        assert_eq!(p.len(), 2);
        assert!(p.same_class(&"o".into(), &"s".into()));
        assert!(p.same_class(&"s".into(), &"self".into()));
        assert_eq!(p.class_of(&"wash".into()).unwrap(), &[VertexId::new("wash")]);
        assert_eq!(p.representative(&"self".into()).unwrap().as_str(), "o");
    }

    #[test]
    fn closure_prefers_right_only_when_needed() {
        let rel: BTreeSet<_> = [(VertexId::new("z"), VertexId::new("a"))].into_iter().collect();
        let p = equivalence_closure(&rel, &ids(&["a", "z"]), &ids(&["z"])).unwrap();
        assert_eq!(p.cross_section(), &[VertexId::new("z")]);
        let p = equivalence_closure(&rel, &ids(&["a", "z"]), &BTreeSet::new()).unwrap();
        assert_eq!(p.cross_section(), &[VertexId::new("a")]);
    }

    #[test]
    fn closure_rejects_outside_pairs() {
        let rel: BTreeSet<_> = [(VertexId::new("q"), VertexId::new("a"))].into_iter().collect();
        assert_eq!(
            equivalence_closure(&rel, &ids(&["a"]), &BTreeSet::new()),
            Err(ComposeError::OutsideUniverse("q".into()))
        );
    }

    #[test]
    fn quotient_redirects_edges() {
        let mut base = fixtures::g_wash().graph().base().clone();
        base.add_vertex("self", None);
        let rel: BTreeSet<_> = [("o", "self"), ("s", "self")]
            .iter()
            .map(|(x, y)| (VertexId::new(x), VertexId::new(y)))
            .collect();
        let p = equivalence_closure(&rel, &ids(&["wash", "s", "o", "self"]), &ids(&["wash", "s", "o"]))
            .unwrap();
        let q = quotient(&base, &p).unwrap();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.edge_count(), 2);
        assert!(q.edges().iter().all(|e| e.from.as_str() == "wash" && e.to.as_str() == "o"));
    }

    #[test]
    fn quotient_by_discrete_partition_is_identity() {
        let base = fixtures::raven_washes_raven().base().clone();
        let universe: BTreeSet<_> = base.vertex_ids().cloned().collect();
        let p = equivalence_closure(&BTreeSet::new(), &universe, &BTreeSet::new()).unwrap();
        assert_eq!(quotient(&base, &p).unwrap(), base);
    }

    #[test]
    fn quotient_label_fusion() {
        let mut base = BaseGraph::new();
        base.add_vertex("x", Some(Symbol::new("raven")));
        base.add_vertex("y", None);
        base.add_vertex("z", Some(Symbol::new("raven")));
        let rel: BTreeSet<_> = [("x", "y"), ("y", "z")]
            .iter()
            .map(|(a, b)| (VertexId::new(a), VertexId::new(b)))
            .collect();
        let universe = ids(&["x", "y", "z"]);
        let p = equivalence_closure(&rel, &universe, &BTreeSet::new()).unwrap();
        let q = quotient(&base, &p).unwrap();
        assert_eq!(q.node_label(&"x".into()).unwrap().as_str(), "raven");

        let mut clash = base.clone();
        clash.set_node_label(&"z".into(), Some(Symbol::new("wash")));
        assert!(matches!(
            quotient(&clash, &p),
            Err(ComposeError::NodeLabelConflict { .. })
        ));
        let other = equivalence_closure(&BTreeSet::new(), &ids(&["x"]), &BTreeSet::new()).unwrap();
        assert_eq!(quotient(&base, &other), Err(ComposeError::PartitionMismatch));
    }

    #[test]
    fn separate_and_single_merge() {
        let out = parallel_compose(&fixtures::g_separate(), &fixtures::g_single()).unwrap();
        assert_eq!(out.vertex_count(), 1);
        assert_eq!(out.tau(), labels(&["A", "B"]));
        assert!(is_isomorphic(&out, &fixtures::g_single()).unwrap());
        assert!(out.validate().is_ok());
    }

    #[test]
    fn classic_refuses_shared_vertex() {
        assert_eq!(
            parallel_compose_classic(&fixtures::g_separate(), &fixtures::g_single()),
            Err(ComposeError::NotAnSGraph { side: Side::Right })
        );
        assert_eq!(
            parallel_compose_classic(&fixtures::g_single(), &fixtures::g_separate()),
            Err(ComposeError::NotAnSGraph { side: Side::Left })
        );
    }

    #[test]
    fn compose_with_empty_graph() {
        let g = fixtures::raven_washes_raven();
        let out = parallel_compose(&g, &MsGraph::new()).unwrap();
        assert_eq!(out, g);
        assert!(is_isomorphic(&parallel_compose(&MsGraph::new(), &g).unwrap(), &g).unwrap());
    }

    #[test]
    fn wash_with_self_before_forgetting() {
        let out = parallel_compose(fixtures::g_wash().graph(), &self_as_o()).unwrap();
        assert_eq!(out.vertex_count(), 2);
        assert_eq!(out.tau(), labels(&["rt", "s", "o"]));
        let merged = out.src(&"s".into()).unwrap();
        assert_eq!(out.src(&"o".into()).unwrap(), merged);
        assert_eq!(out.slab(merged).unwrap(), labels(&["s", "o"]));
        let mut edge_labels: Vec<&str> = out.base().edges().iter().map(|e| e.label.as_str()).collect();
        edge_labels.sort();
        assert_eq!(edge_labels, ["ARG0", "ARG1"]);
        assert!(out.base().edges().iter().all(|e| &e.to == merged));
    }

    #[test]
    fn classic_glues_shared_sources() {
        let mut g = MsGraph::new();
        g.add_vertex("x", None);
        g.set_source("a", "x");
        let mut h = MsGraph::new();
        h.add_vertex("y", Some("l"));
        h.set_source("a", "y");
        let out = parallel_compose_classic(&g, &h).unwrap();
        assert_eq!(out.vertex_count(), 1);
        assert_eq!(out.base().node_label(&"x".into()).unwrap().as_str(), "l");

        let mut k = MsGraph::new();
        k.add_vertex("y", None);
        k.set_source("b", "y");
        let out = parallel_compose_classic(&g, &k).unwrap();
        assert_eq!(out.vertex_count(), 2);
        assert!(out.is_s_graph());
    }

    #[test]
    fn self_composition_doubles_edges() {
        let g = fixtures::raven_washes_raven();
        let out = parallel_compose(&g, &g).unwrap();
        // only rt is shared, so the two wash vertices merge
        assert_eq!(out.vertex_count(), 5);
        assert_eq!(out.edge_count(), 4);
    }

    #[test]
    fn invalid_operand_rejected() {
        let mut bad = MsGraph::new();
        bad.set_source("a", "ghost");
        assert!(matches!(
            parallel_compose(&bad, &MsGraph::new()),
            Err(ComposeError::InvalidOperand { side: Side::Left, .. })
        ));
        assert!(matches!(
            parallel_compose_classic(&MsGraph::new(), &bad),
            Err(ComposeError::InvalidOperand { side: Side::Right, .. })
        ));
    }

    #[test]
    fn trace_exposes_cross_section() {
        let c = compose_traced(fixtures::g_wash().graph(), &self_as_o()).unwrap();
        assert!(c.partition.is_well_formed());
        assert_eq!(c.partition.len(), c.graph.vertex_count());
        for v in fixtures::g_wash().graph().base().vertex_ids() {
            if v.as_str() != "s" {
                assert!(c.graph.base().contains_vertex(v));
            }
        }
    }
}
