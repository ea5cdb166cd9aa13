//! JSON documents for graphs, lexica and as-graphs, the term syntax, and
//! DOT export.
//!
//! Graph document:
//!
//! ```json
//! { "vertices": [ { "id": "w", "label": "wash" } ],
//!   "edges":    [ { "from": "w", "to": "w", "label": "ARG0" } ],
//!   "sources":  { "rt": "w" } }
//! ```
//!
//! A lexicon maps lexemes to `{ "graph": <graph>, "type": <type> }` where a
//! type maps source labels to `{ "type": <type>, "rename": {..} }` and
//! `rename` may be omitted for the identity.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, AsGraph, GraphType, Lexicon, Term, TypeEntry};
use crate::graph::{BaseGraph, Edge, MsGraph, RenameMap, SourceLabel, Symbol, ValidityReport};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at {field}: {message}")]
    Schema { field: String, message: String },
    #[error("invalid graph: {0}")]
    Invalid(ValidityReport),
    #[error("term syntax error at offset {offset}: {message}")]
    Term { offset: usize, message: String },
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Json {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDocument {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeDocument {
    pub from: String,
    pub to: String,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: Vec<VertexDocument>,
    pub edges: Vec<EdgeDocument>,
    pub sources: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct TypeDocument(pub BTreeMap<String, TypeEntryDocument>);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypeEntryDocument {
    #[serde(rename = "type")]
    pub requested: TypeDocument,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub rename: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AsGraphDocument {
    pub graph: GraphDocument,
    #[serde(rename = "type")]
    pub ty: TypeDocument,
}

impl GraphDocument {
    pub fn from_graph(g: &MsGraph) -> Self {
        GraphDocument {
            vertices: g
                .base()
                .vertices()
                .map(|(id, label)| VertexDocument {
                    id: id.to_string(),
                    label: label.map(Symbol::to_string),
                })
                .collect(),
            edges: g
                .base()
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    from: e.from.to_string(),
                    to: e.to.to_string(),
                    label: e.label.to_string(),
                })
                .collect(),
            sources: g
                .sources()
                .iter()
                .map(|(l, v)| (l.to_string(), v.to_string()))
                .collect(),
        }
    }

    /// Builds the graph and checks its invariants.
    pub fn to_graph(&self) -> Result<MsGraph, IoError> {
        let mut base = BaseGraph::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if !base.add_vertex(v.id.as_str(), v.label.as_deref().map(Symbol::new)) {
                return Err(IoError::Schema {
                    field: format!("vertices[{i}].id"),
                    message: format!("duplicate vertex id {:?}", v.id),
                });
            }
        }
        for e in &self.edges {
            base.add_edge(Edge::new(e.from.as_str(), e.to.as_str(), e.label.as_str()));
        }
        let sources = self
            .sources
            .iter()
            .map(|(l, v)| (SourceLabel::new(l), v.as_str().into()))
            .collect();
        let g = MsGraph::from_parts(base, sources);
        let report = g.validate();
        if !report.is_ok() {
            return Err(IoError::Invalid(report));
        }
        Ok(g)
    }
}

impl TypeDocument {
    pub fn from_type(ty: &GraphType) -> Self {
        TypeDocument(
            ty.entries()
                .iter()
                .map(|(label, entry)| {
                    (
                        label.to_string(),
                        TypeEntryDocument {
                            requested: TypeDocument::from_type(&entry.requested),
                            rename: entry
                                .rename
                                .iter()
                                .map(|(a, b)| (a.to_string(), b.to_string()))
                                .collect(),
                        },
                    )
                })
                .collect(),
        )
    }

    pub fn to_type(&self) -> Result<GraphType, AlgebraError> {
        let mut entries = BTreeMap::new();
        for (label, entry) in &self.0 {
            let requested = entry.requested.to_type()?;
            let rename = RenameMap::new(entry.rename.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
            entries.insert(SourceLabel::new(label), TypeEntry { requested, rename });
        }
        GraphType::from_entries(entries)
    }
}

impl AsGraphDocument {
    pub fn from_as_graph(g: &AsGraph) -> Self {
        AsGraphDocument {
            graph: GraphDocument::from_graph(g.graph()),
            ty: TypeDocument::from_type(g.ty()),
        }
    }

    fn to_as_graph(&self) -> Result<AsGraph, IoError> {
        let graph = self.graph.to_graph()?;
        let ty = self.ty.to_type().map_err(|e| IoError::Schema {
            field: "type".into(),
            message: e.to_string(),
        })?;
        AsGraph::new(graph, ty).map_err(|e| IoError::Schema {
            field: "type".into(),
            message: e.to_string(),
        })
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("documents serialize");
    out.push('\n');
    out
}

pub fn parse_graph(text: &str) -> Result<MsGraph, IoError> {
    serde_json::from_str::<GraphDocument>(text)?.to_graph()
}

pub fn serialize_graph(g: &MsGraph) -> String {
    to_json(&GraphDocument::from_graph(g))
}

pub fn parse_as_graph(text: &str) -> Result<AsGraph, IoError> {
    serde_json::from_str::<AsGraphDocument>(text)?.to_as_graph()
}

pub fn serialize_as_graph(g: &AsGraph) -> String {
    to_json(&AsGraphDocument::from_as_graph(g))
}

pub fn parse_lexicon(text: &str) -> Result<Lexicon, IoError> {
    let doc: BTreeMap<String, AsGraphDocument> = serde_json::from_str(text)?;
    let mut lexicon = Lexicon::new();
    for (lexeme, entry) in doc {
        let graph = entry.to_as_graph().map_err(|e| match e {
            IoError::Schema { field, message } => IoError::Schema {
                field: format!("{lexeme}.{field}"),
                message,
            },
            IoError::Invalid(report) => IoError::Schema {
                field: format!("{lexeme}.graph"),
                message: report.to_string(),
            },
            other => other,
        })?;
        lexicon.insert(lexeme, graph);
    }
    Ok(lexicon)
}

pub fn serialize_lexicon(lexicon: &Lexicon) -> String {
    let doc: BTreeMap<&String, AsGraphDocument> = lexicon
        .iter()
        .map(|(k, g)| (k, AsGraphDocument::from_as_graph(g)))
        .collect();
    to_json(&doc)
}

/// Parses `term := IDENT | "app_" IDENT "(" term "," term ")"`.
pub fn parse_term(text: &str) -> Result<Term, IoError> {
    let mut p = TermParser { text, pos: 0 };
    let term = p.term()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.error("trailing input"));
    }
    Ok(term)
}

struct TermParser<'a> {
    text: &'a str,
    pos: usize,
}

impl TermParser<'_> {
    fn error(&self, message: impl Into<String>) -> IoError {
        IoError::Term {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        let rest = &self.text[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<(), IoError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected {c:?}")))
        }
    }

    fn ident(&mut self) -> Result<&str, IoError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected an identifier"));
        }
        if rest.as_bytes()[0].is_ascii_digit() {
            return Err(self.error("identifiers cannot start with a digit"));
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn term(&mut self) -> Result<Term, IoError> {
        let start = {
            self.skip_ws();
            self.pos
        };
        let name = self.ident()?.to_owned();
        self.skip_ws();
        if self.peek() != Some('(') {
            return Ok(Term::Leaf(name));
        }
        let Some(label) = name.strip_prefix("app_").filter(|l| !l.is_empty()) else {
            return Err(IoError::Term {
                offset: start,
                message: format!("{name:?} is not an application"),
            });
        };
        let label = SourceLabel::new(label);
        if label.is_root() {
            return Err(IoError::Term {
                offset: start,
                message: "rt is not applicable".into(),
            });
        }
        self.expect('(')?;
        let functor = self.term()?;
        self.expect(',')?;
        let argument = self.term()?;
        self.expect(')')?;
        Ok(Term::app(label, functor, argument))
    }
}

pub fn serialize_term(term: &Term) -> String {
    term.to_string()
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT rendering: each node shows its label followed by its source labels.
pub fn export_dot(g: &MsGraph) -> String {
    let mut slabs: BTreeMap<&crate::graph::VertexId, BTreeSet<&SourceLabel>> = BTreeMap::new();
    for (label, v) in g.sources() {
        slabs.entry(v).or_default().insert(label);
    }
    let mut out = String::from("digraph {\n");
    for (id, label) in g.base().vertices() {
        let mut parts: Vec<&str> = label.map(Symbol::as_str).into_iter().collect();
        if let Some(labels) = slabs.get(id) {
            parts.extend(labels.iter().map(|l| l.as_str()));
        }
        let _ = writeln!(
            out,
            "  \"{}\" [label=\"{}\"];",
            dot_escape(id.as_str()),
            dot_escape(&parts.join(", "))
        );
    }
    for e in g.base().edges() {
        let _ = writeln!(
            out,
            "  \"{}\" -> \"{}\" [label=\"{}\"];",
            dot_escape(e.from.as_str()),
            dot_escape(e.to.as_str()),
            dot_escape(e.label.as_str())
        );
    }
    out.push_str("}\n");
    out
}
