//! The apply operation of the AM-algebra and term evaluation.
//!
//! An [`AsGraph`] pairs an ms-graph that has a root source with a
//! [`GraphType`]: for every open source it records the type an argument
//! must have and the rename applied to that argument before it is glued on.
//!
//! Two flavours of apply are provided. The original one demands that the
//! argument's type equals the requested type exactly. The relaxed one lets
//! the argument carry extra labels on its root ("additional root labels"),
//! provided those labels are already open in the functor with the same
//! type, and forbids applying at an additional root label of the functor.
//! On graphs without additional root labels both coincide.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::compose::{parallel_compose, ComposeError};
use crate::graph::{GraphError, MsGraph, RenameMap, SourceLabel};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("cannot apply at the root label")]
    RootApplication,
    #[error("unknown lexeme {0:?}")]
    UnknownLexeme(String),
    #[error("malformed as-graph: {0}")]
    Malformed(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Compose(#[from] ComposeError),
}

/// What an open source expects: the argument's type and the rename applied
/// to the argument.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeEntry {
    pub requested: GraphType,
    pub rename: RenameMap,
}

/// A finite, acyclic, recursive map from source labels to [`TypeEntry`].
/// Equality is structural.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GraphType {
    entries: BTreeMap<SourceLabel, TypeEntry>,
}

impl GraphType {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: BTreeMap<SourceLabel, TypeEntry>) -> Result<Self, AlgebraError> {
        let ty = GraphType { entries };
        if ty.mentions_root() {
            return Err(AlgebraError::Malformed(
                "rt cannot be a key of a graph type".into(),
            ));
        }
        Ok(ty)
    }

    /// Builder-style insertion, mostly for lexica written in code.
    pub fn with(mut self, label: impl Into<SourceLabel>, requested: GraphType, rename: RenameMap) -> Self {
        self.entries.insert(label.into(), TypeEntry { requested, rename });
        self
    }

    pub fn entries(&self) -> &BTreeMap<SourceLabel, TypeEntry> {
        &self.entries
    }

    pub fn get(&self, label: &SourceLabel) -> Option<&TypeEntry> {
        self.entries.get(label)
    }

    pub fn keys(&self) -> impl Iterator<Item = &SourceLabel> + '_ {
        self.entries.keys()
    }

    pub fn contains(&self, label: &SourceLabel) -> bool {
        self.entries.contains_key(label)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.entries
            .values()
            .map(|e| 1 + e.requested.depth())
            .max()
            .unwrap_or(0)
    }

    fn mentions_root(&self) -> bool {
        self.entries
            .iter()
            .any(|(k, e)| k.is_root() || e.requested.mentions_root())
    }

    /// `T \ S`: drops the keys in `labels`.
    pub fn without<'a>(&self, labels: impl IntoIterator<Item = &'a SourceLabel>) -> GraphType {
        let drop: BTreeSet<&SourceLabel> = labels.into_iter().collect();
        GraphType {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| !drop.contains(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// `T|S`: keeps only the keys in `labels`.
    pub fn restricted_to<'a>(&self, labels: impl IntoIterator<Item = &'a SourceLabel>) -> GraphType {
        let keep: BTreeSet<&SourceLabel> = labels.into_iter().collect();
        GraphType {
            entries: self
                .entries
                .iter()
                .filter(|(k, _)| keep.contains(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }

    /// Re-keys every top-level entry along the identity extension of
    /// `rename` (`T ∘ r̄⁻¹`). Fails when a renamed key lands on a key that is
    /// not renamed, mirroring [`MsGraph::rename`].
    pub fn rekeyed(&self, rename: &RenameMap) -> Result<GraphType, GraphError> {
        let mut entries = BTreeMap::new();
        for (k, v) in &self.entries {
            let target = rename.apply(k);
            if entries.insert(target.clone(), v.clone()).is_some() {
                return Err(GraphError::RenameCollision(target));
            }
        }
        Ok(GraphType { entries })
    }

    /// Every entry of `self` occurs identically in `other`.
    pub fn is_submap_of(&self, other: &GraphType) -> bool {
        self.entries
            .iter()
            .all(|(k, v)| other.entries.get(k) == Some(v))
    }

    /// Union of two partial maps; `None` if they disagree on a shared key.
    pub fn union(&self, other: &GraphType) -> Option<GraphType> {
        let mut entries = self.entries.clone();
        for (k, v) in &other.entries {
            match entries.get(k) {
                Some(existing) if existing != v => return None,
                Some(_) => {}
                None => {
                    entries.insert(k.clone(), v.clone());
                }
            }
        }
        Some(GraphType { entries })
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, e)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}: {}", e.requested)?;
            if !e.rename.is_empty() {
                f.write_str(" [")?;
                for (j, (a, b)) in e.rename.iter().enumerate() {
                    if j > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}->{b}")?;
                }
                f.write_str("]")?;
            }
        }
        f.write_str("}")
    }
}

/// An ms-graph with a root source, annotated with a graph type whose keys
/// are exactly the non-root sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsGraph {
    graph: MsGraph,
    ty: GraphType,
}

impl AsGraph {
    pub fn new(graph: MsGraph, ty: GraphType) -> Result<Self, AlgebraError> {
        let report = graph.validate();
        if !report.is_ok() {
            return Err(AlgebraError::Malformed(report.to_string()));
        }
        if !graph.has_source(&SourceLabel::root()) {
            return Err(AlgebraError::Malformed("graph has no rt source".into()));
        }
        if ty.mentions_root() {
            return Err(AlgebraError::Malformed(
                "rt cannot be a key of a graph type".into(),
            ));
        }
        let open: Vec<&SourceLabel> = graph.sources().keys().filter(|l| !l.is_root()).collect();
        if !open.iter().copied().eq(ty.keys()) {
            return Err(AlgebraError::Malformed(format!(
                "type keys {:?} differ from non-root sources {:?}",
                ty.keys().collect::<Vec<_>>(),
                open
            )));
        }
        Ok(AsGraph { graph, ty })
    }

    pub fn graph(&self) -> &MsGraph {
        &self.graph
    }

    pub fn ty(&self) -> &GraphType {
        &self.ty
    }

    pub fn into_parts(self) -> (MsGraph, GraphType) {
        (self.graph, self.ty)
    }

    pub fn rlab(&self) -> BTreeSet<SourceLabel> {
        self.graph.rlab().expect("as-graphs have a root")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ApplyVariant {
    Original,
    #[default]
    Relaxed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ApplyMode {
    pub variant: ApplyVariant,
    /// Relaxed only: also refuse when the label is an additional root label
    /// of the argument.
    pub strict_root: bool,
}

impl ApplyMode {
    pub fn original() -> Self {
        ApplyMode {
            variant: ApplyVariant::Original,
            strict_root: false,
        }
    }

    pub fn relaxed() -> Self {
        ApplyMode::default()
    }

    pub fn relaxed_strict() -> Self {
        ApplyMode {
            variant: ApplyVariant::Relaxed,
            strict_root: true,
        }
    }
}

/// The definedness condition an application failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    /// (1) the functor has an open slot for the label.
    SlotExists,
    /// (2) the argument's type is exactly the requested type.
    ExactType,
    /// (2a) the argument's type minus its additional root labels is the
    /// requested type.
    TypeModuloRootLabels,
    /// (2b) the argument's additional root labels are typed the same way in
    /// the functor.
    RootLabelsAgree,
    /// (3) the result type is a well-defined partial map.
    ResultTypeDefined,
    /// (4) the label is not an additional root label of the functor.
    NotFunctorRootLabel,
    /// (4, strict) nor of the argument.
    NotArgumentRootLabel,
}

impl Condition {
    pub fn code(self) -> &'static str {
        match self {
            Condition::SlotExists => "1",
            Condition::ExactType => "2",
            Condition::TypeModuloRootLabels => "2a",
            Condition::RootLabelsAgree => "2b",
            Condition::ResultTypeDefined => "3",
            Condition::NotFunctorRootLabel => "4",
            Condition::NotArgumentRootLabel => "4-strict",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self {
            Condition::SlotExists => "the functor has no open source with this label",
            Condition::ExactType => "the argument does not have the type the slot asks for",
            Condition::TypeModuloRootLabels => {
                "apart from its additional root labels, the argument does not have the type the slot asks for"
            }
            Condition::RootLabelsAgree => {
                "the argument's additional root labels would change the functor's type"
            }
            Condition::ResultTypeDefined => "the result type is not a well-defined partial map",
            Condition::NotFunctorRootLabel => "the label is an additional root label of the functor",
            Condition::NotArgumentRootLabel => "the label is an additional root label of the argument",
        };
        write!(f, "condition {}: {what}", self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applied {
    Defined(AsGraph),
    Undefined(Condition),
}

impl Applied {
    pub fn defined(self) -> Option<AsGraph> {
        match self {
            Applied::Defined(g) => Some(g),
            Applied::Undefined(_) => None,
        }
    }

    pub fn condition(&self) -> Option<Condition> {
        match self {
            Applied::Defined(_) => None,
            Applied::Undefined(c) => Some(*c),
        }
    }
}

/// Checks the definedness conditions for `mode` in the order
/// 1, 2 (or 2a, 2b, 4), 3.
pub fn check_conditions(
    label: &SourceLabel,
    functor: &AsGraph,
    argument: &AsGraph,
    mode: ApplyMode,
) -> Result<(), Condition> {
    let slot = functor.ty.get(label).ok_or(Condition::SlotExists)?;
    match mode.variant {
        ApplyVariant::Original => {
            if slot.requested != argument.ty {
                return Err(Condition::ExactType);
            }
        }
        ApplyVariant::Relaxed => {
            let extra = argument.rlab();
            if slot.requested != argument.ty.without(&extra) {
                return Err(Condition::TypeModuloRootLabels);
            }
            if !argument.ty.restricted_to(&extra).is_submap_of(&functor.ty) {
                return Err(Condition::RootLabelsAgree);
            }
            if functor.rlab().contains(label) {
                return Err(Condition::NotFunctorRootLabel);
            }
            if mode.strict_root && extra.contains(label) {
                return Err(Condition::NotArgumentRootLabel);
            }
        }
    }
    Ok(())
}

/// Fills the `label`-source of `functor` with the root of `argument`.
///
/// The argument is renamed along the slot's rename, its root becomes
/// `label`, the two graphs are composed in parallel and `label` is
/// forgotten. The result type drops `label` from the functor's type and adds
/// the argument's type re-keyed along the slot's rename.
///
/// Failed definedness conditions come back as [`Applied::Undefined`];
/// rename collisions and node-label clashes are errors.
pub fn apply(
    label: &SourceLabel,
    functor: &AsGraph,
    argument: &AsGraph,
    mode: ApplyMode,
) -> Result<Applied, AlgebraError> {
    if label.is_root() {
        return Err(AlgebraError::RootApplication);
    }
    if let Err(condition) = check_conditions(label, functor, argument, mode) {
        return Ok(Applied::Undefined(condition));
    }
    let slot = &functor.ty.entries[label];

    let remaining = functor.ty.without([label]);
    let incoming = argument.ty.rekeyed(&slot.rename)?;
    let Some(ty) = remaining.union(&incoming) else {
        return Ok(Applied::Undefined(Condition::ResultTypeDefined));
    };

    let renamed = argument
        .graph
        .rename(&slot.rename)?
        .rename(&RenameMap::single(SourceLabel::root(), label.clone()))?;
    let composed = parallel_compose(&functor.graph, &renamed)?;
    let graph = composed.forget(label)?;
    AsGraph::new(graph, ty).map(Applied::Defined)
}

/// A term over lexicon entries and apply operations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Leaf(String),
    App {
        label: SourceLabel,
        functor: Box<Term>,
        argument: Box<Term>,
    },
}

impl Term {
    pub fn leaf(lexeme: impl Into<String>) -> Self {
        Term::Leaf(lexeme.into())
    }

    pub fn app(label: impl Into<SourceLabel>, functor: Term, argument: Term) -> Self {
        Term::App {
            label: label.into(),
            functor: Box::new(functor),
            argument: Box::new(argument),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Leaf(_) => 1,
            Term::App {
                functor, argument, ..
            } => 1 + functor.size() + argument.size(),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Leaf(lexeme) => f.write_str(lexeme),
            Term::App {
                label,
                functor,
                argument,
            } => write!(f, "app_{label}({functor},{argument})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Branch {
    Functor,
    Argument,
}

/// Position of a subterm, as the branches taken from the root.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermPath(pub Vec<Branch>);

impl fmt::Display for TermPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("root");
        }
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(match b {
                Branch::Functor => "functor",
                Branch::Argument => "argument",
            })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndefinedAt {
    pub path: TermPath,
    pub subterm: Term,
    pub label: SourceLabel,
    pub condition: Condition,
}

impl fmt::Display for UndefinedAt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} is undefined at {}: {}",
            self.subterm, self.path, self.condition
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Defined(AsGraph),
    Undefined(UndefinedAt),
}

impl Evaluation {
    pub fn defined(self) -> Option<AsGraph> {
        match self {
            Evaluation::Defined(g) => Some(g),
            Evaluation::Undefined(_) => None,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, AsGraph>,
}

impl Lexicon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, lexeme: impl Into<String>, graph: AsGraph) -> Option<AsGraph> {
        self.entries.insert(lexeme.into(), graph)
    }

    pub fn get(&self, lexeme: &str) -> Option<&AsGraph> {
        self.entries.get(lexeme)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &AsGraph)> + '_ {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Bottom-up evaluation. The functor is evaluated before the argument and
/// the first undefined application is reported.
pub fn evaluate(term: &Term, lexicon: &Lexicon, mode: ApplyMode) -> Result<Evaluation, AlgebraError> {
    let mut path = Vec::new();
    evaluate_at(term, lexicon, mode, &mut path)
}

fn evaluate_at(
    term: &Term,
    lexicon: &Lexicon,
    mode: ApplyMode,
    path: &mut Vec<Branch>,
) -> Result<Evaluation, AlgebraError> {
    match term {
        Term::Leaf(lexeme) => lexicon
            .get(lexeme)
            .cloned()
            .map(Evaluation::Defined)
            .ok_or_else(|| AlgebraError::UnknownLexeme(lexeme.clone())),
        Term::App {
            label,
            functor,
            argument,
        } => {
            if label.is_root() {
                return Err(AlgebraError::RootApplication);
            }
            path.push(Branch::Functor);
            let f = evaluate_at(functor, lexicon, mode, path)?;
            path.pop();
            let f = match f {
                Evaluation::Defined(g) => g,
                undefined => return Ok(undefined),
            };
            path.push(Branch::Argument);
            let a = evaluate_at(argument, lexicon, mode, path)?;
            path.pop();
            let a = match a {
                Evaluation::Defined(g) => g,
                undefined => return Ok(undefined),
            };
            Ok(match apply(label, &f, &a, mode)? {
                Applied::Defined(g) => Evaluation::Defined(g),
                Applied::Undefined(condition) => Evaluation::Undefined(UndefinedAt {
                    path: TermPath(path.clone()),
                    subterm: term.clone(),
                    label: label.clone(),
                    condition,
                }),
            })
        }
    }
}
