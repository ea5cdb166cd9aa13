//! The running example: the raven/wash/self lexicon, the reflexive and
//! non-reflexive sentence graphs, and the two graphs whose composition
//! breaks the classic definition.

use crate::algebra::{AsGraph, GraphType, Lexicon};
use crate::graph::{MsGraph, RenameMap};

pub fn g_raven() -> AsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("raven", Some("raven"));
    g.set_source("rt", "raven");
    AsGraph::new(g, GraphType::empty()).expect("raven lexeme is well-formed")
}

pub fn g_wash() -> AsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("wash", Some("wash"));
    g.add_vertex("s", None);
    g.add_vertex("o", None);
    g.add_edge("wash", "s", "ARG0");
    g.add_edge("wash", "o", "ARG1");
    g.set_source("rt", "wash");
    g.set_source("s", "s");
    g.set_source("o", "o");
    let ty = GraphType::empty()
        .with("s", GraphType::empty(), RenameMap::identity())
        .with("o", GraphType::empty(), RenameMap::identity());
    AsGraph::new(g, ty).expect("wash lexeme is well-formed")
}

/// One unlabeled vertex carrying both `rt` and `s`.
pub fn g_self() -> AsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("self", None);
    g.set_source("rt", "self");
    g.set_source("s", "self");
    let ty = GraphType::empty().with("s", GraphType::empty(), RenameMap::identity());
    AsGraph::new(g, ty).expect("self lexeme is well-formed")
}

pub fn lexicon() -> Lexicon {
    let mut lex = Lexicon::new();
    lex.insert("raven", g_raven());
    lex.insert("wash", g_wash());
    lex.insert("self", g_self());
    lex
}

/// Two unlabeled vertices, carrying `A` and `B` respectively.
pub fn g_separate() -> MsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("a", None);
    g.add_vertex("b", None);
    g.set_source("A", "a");
    g.set_source("B", "b");
    g
}

/// One unlabeled vertex carrying both `A` and `B`.
pub fn g_single() -> MsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("ab", None);
    g.set_source("A", "ab");
    g.set_source("B", "ab");
    g
}

/// "to wash oneself": both arguments of wash point at one `s`-vertex.
pub fn wash_oneself() -> MsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("wash", Some("wash"));
    g.add_vertex("s", None);
    g.add_edge("wash", "s", "ARG0");
    g.add_edge("wash", "s", "ARG1");
    g.set_source("rt", "wash");
    g.set_source("s", "s");
    g
}

/// "The raven washes the raven".
pub fn raven_washes_raven() -> MsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("wash", Some("wash"));
    g.add_vertex("raven0", Some("raven"));
    g.add_vertex("raven1", Some("raven"));
    g.add_edge("wash", "raven0", "ARG0");
    g.add_edge("wash", "raven1", "ARG1");
    g.set_source("rt", "wash");
    g
}

/// "The raven washes herself".
pub fn raven_washes_herself() -> MsGraph {
    let mut g = MsGraph::new();
    g.add_vertex("wash", Some("wash"));
    g.add_vertex("raven", Some("raven"));
    g.add_edge("wash", "raven", "ARG0");
    g.add_edge("wash", "raven", "ARG1");
    g.set_source("rt", "wash");
    g
}
