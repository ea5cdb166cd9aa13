//! Property campaigns.
//!
//! * [`check_composition_equivalence`]: on every ordered pair of enumerated
//!   s-graphs, the quotient-based composition agrees with the classic gluing
//!   up to isomorphism, has the union type, and keeps the left operand's
//!   sources where they were.
//! * [`check_apply_reduction`]: on random as-graphs without additional root
//!   labels, original and relaxed apply agree.
//! * [`check_algebraic_properties`]: commutativity and right identity on all
//!   pairs, associativity on sampled triples. Associativity violations are
//!   findings, not failures.
//!
//! Every recorded case carries its inputs as compact JSON so that
//! [`replay`] can re-run it in isolation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{apply, AlgebraError, Applied, ApplyMode, AsGraph, Condition, GraphType};
use crate::compose::{compose_traced, parallel_compose, parallel_compose_classic, ComposeError};
use crate::enumerate::{enumerate_graphs, EnumerationBounds};
use crate::graph::{GraphError, MsGraph, RenameMap, SourceLabel, Symbol, VertexId};
use crate::io::{AsGraphDocument, GraphDocument};
use crate::iso::is_isomorphic;

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("the classic composition is only defined on s-graphs; set s_graphs_only")]
    OracleUndefined,
    #[error("campaign needs {cases} cases, above the budget of {budget}")]
    BudgetExceeded { cases: u128, budget: u128 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cannot replay case: {0}")]
    Replay(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    /// Quotient composition is isomorphic to the classic gluing.
    ClassicAgreement,
    /// Composition result passes validation.
    ResultValid,
    /// Result type is the union of the operand types.
    TauUnion,
    /// Left operand's sources stay on the same vertices.
    SourceRestriction,
    /// Every left vertex is its own class representative.
    CrossSection,
    /// Original and relaxed apply agree on rlab-free inputs.
    ApplyReduction,
    Commutativity,
    RightIdentity,
    Associativity,
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().unwrap_or("?"))
    }
}

/// One violated property instance.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseRecord {
    pub property: Property,
    /// Compact JSON documents: graph documents for composition properties,
    /// as-graph documents for apply.
    pub inputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub expected: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignParameters {
    pub bounds: EnumerationBounds,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trials: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: String,
    pub parameters: CampaignParameters,
    pub cases_run: u64,
    /// Outcome tallies, e.g. how many applications were defined.
    pub outcomes: BTreeMap<String, u64>,
    pub failures: Vec<CaseRecord>,
    pub findings: Vec<CaseRecord>,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Bounds matching the acceptance population: up to 3 vertices, sources
/// from `{a, b, rt}`, unlabeled nodes, edge label `e`, at most 2 edges.
pub fn acceptance_bounds() -> EnumerationBounds {
    EnumerationBounds {
        node_labels: Vec::new(),
        ..EnumerationBounds::default()
    }
}

fn graph_json(g: &MsGraph) -> String {
    serde_json::to_string(&GraphDocument::from_graph(g)).expect("documents serialize")
}

fn as_graph_json(g: &AsGraph) -> String {
    serde_json::to_string(&AsGraphDocument::from_as_graph(g)).expect("documents serialize")
}

fn population(bounds: &EnumerationBounds, arity: u32) -> Result<Vec<MsGraph>, CampaignError> {
    let count = bounds.count();
    let cases = count.saturating_pow(arity);
    if cases > bounds.budget {
        return Err(CampaignError::BudgetExceeded {
            cases,
            budget: bounds.budget,
        });
    }
    Ok(enumerate_graphs(bounds)?.collect())
}

fn finish(
    campaign: &str,
    parameters: CampaignParameters,
    cases_run: u64,
    outcomes: BTreeMap<String, u64>,
    mut failures: Vec<CaseRecord>,
    mut findings: Vec<CaseRecord>,
) -> CampaignReport {
    failures.sort();
    findings.sort();
    CampaignReport {
        campaign: campaign.to_owned(),
        parameters,
        cases_run,
        outcomes,
        failures,
        findings,
    }
}

type Violations = Vec<(Property, String, String)>;

/// All composition-equivalence checks on one ordered pair.
pub fn composition_pair_violations(g: &MsGraph, h: &MsGraph) -> Violations {
    let mut out = Vec::new();
    let traced = compose_traced(g, h);
    let classic = parallel_compose_classic(g, h);
    let (traced, classic) = match (traced, classic) {
        (Ok(t), Ok(c)) => (t, c),
        (Err(a), Err(b)) if same_kind(&a, &b) => return out,
        (a, b) => {
            out.push((
                Property::ClassicAgreement,
                format!("{:?}", b.map(|g| graph_json(&g))),
                format!("{:?}", a.map(|c| graph_json(&c.graph))),
            ));
            return out;
        }
    };
    let result = &traced.graph;

    let report = result.validate();
    if !report.is_ok() {
        out.push((Property::ResultValid, "ok".into(), report.to_string()));
    }
    match is_isomorphic(result, &classic) {
        Ok(true) => {}
        Ok(false) => out.push((
            Property::ClassicAgreement,
            graph_json(&classic),
            graph_json(result),
        )),
        Err(e) => out.push((Property::ClassicAgreement, "comparable".into(), e.to_string())),
    }
    let union: BTreeSet<SourceLabel> = g.tau().union(&h.tau()).cloned().collect();
    if result.tau() != union {
        out.push((
            Property::TauUnion,
            format!("{union:?}"),
            format!("{:?}", result.tau()),
        ));
    }
    for (label, v) in g.sources() {
        if result.src(label) != Some(v) {
            out.push((
                Property::SourceRestriction,
                format!("{label} -> {v}"),
                format!("{label} -> {:?}", result.src(label)),
            ));
        }
    }
    let missing: Vec<&VertexId> = g
        .base()
        .vertex_ids()
        .filter(|v| !traced.partition.cross_section().contains(v))
        .collect();
    if !missing.is_empty() {
        out.push((
            Property::CrossSection,
            "all left vertices represented".into(),
            format!("missing {missing:?}"),
        ));
    }
    out
}

fn same_kind(a: &ComposeError, b: &ComposeError) -> bool {
    std::mem::discriminant(a) == std::mem::discriminant(b)
}

pub fn check_composition_equivalence(
    bounds: &EnumerationBounds,
) -> Result<CampaignReport, CampaignError> {
    if !bounds.s_graphs_only {
        return Err(CampaignError::OracleUndefined);
    }
    let graphs = population(bounds, 2)?;
    let failures: Vec<CaseRecord> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            graphs.iter().flat_map(move |h| {
                composition_pair_violations(g, h)
                    .into_iter()
                    .map(move |(property, expected, observed)| CaseRecord {
                        property,
                        inputs: vec![graph_json(g), graph_json(h)],
                        label: None,
                        expected,
                        observed,
                    })
            })
        })
        .collect();
    let n = graphs.len() as u64;
    let mut outcomes = BTreeMap::new();
    outcomes.insert("graphs".to_owned(), n);
    Ok(finish(
        "composition-equivalence",
        CampaignParameters {
            bounds: bounds.clone(),
            seed: None,
            trials: None,
        },
        n * n,
        outcomes,
        failures,
        Vec::new(),
    ))
}

/// How an application came out, with conditions from the two modes mapped
/// onto each other (2 and 2a coincide without additional root labels).
#[derive(Debug, Clone, PartialEq, Eq)]
enum ApplyOutcome {
    Defined(AsGraph),
    Undefined(&'static str),
    Error(AlgebraError),
}

fn outcome(result: Result<Applied, AlgebraError>) -> ApplyOutcome {
    match result {
        Ok(Applied::Defined(g)) => ApplyOutcome::Defined(g),
        Ok(Applied::Undefined(c)) => ApplyOutcome::Undefined(match c {
            Condition::ExactType | Condition::TypeModuloRootLabels => "2",
            other => other.code(),
        }),
        Err(e) => ApplyOutcome::Error(e),
    }
}

fn describe(o: &ApplyOutcome) -> String {
    match o {
        ApplyOutcome::Defined(g) => format!("defined {}", as_graph_json(g)),
        ApplyOutcome::Undefined(c) => format!("undefined (condition {c})"),
        ApplyOutcome::Error(e) => format!("error: {e}"),
    }
}

/// Compares the two apply modes on one instance. Returns the violation, if
/// any, and a tally key.
pub fn reduction_violation(
    label: &SourceLabel,
    functor: &AsGraph,
    argument: &AsGraph,
) -> (Option<(String, String)>, &'static str) {
    if !functor.rlab().is_empty() || !argument.rlab().is_empty() {
        return (
            Some(("rlab-free inputs".into(), "additional root labels present".into())),
            "invalid",
        );
    }
    let original = outcome(apply(label, functor, argument, ApplyMode::original()));
    let mut violation = None;
    for mode in [ApplyMode::relaxed(), ApplyMode::relaxed_strict()] {
        let relaxed = outcome(apply(label, functor, argument, mode));
        let agree = match (&original, &relaxed) {
            (ApplyOutcome::Defined(a), ApplyOutcome::Defined(b)) => {
                a.ty() == b.ty()
                    && is_isomorphic(a.graph(), b.graph()).unwrap_or(false)
                    && !b.graph().has_source(label)
            }
            (a, b) => a == b,
        };
        if !agree && violation.is_none() {
            violation = Some((describe(&original), describe(&relaxed)));
        }
    }
    let tally = match original {
        ApplyOutcome::Defined(_) => "defined",
        ApplyOutcome::Undefined(_) => "undefined",
        ApplyOutcome::Error(_) => "error",
    };
    (violation, tally)
}

/// Random rlab-free as-graphs for the reduction campaign.
struct AsGraphSampler<'a> {
    bounds: &'a EnumerationBounds,
    labels: Vec<SourceLabel>,
}

impl<'a> AsGraphSampler<'a> {
    fn new(bounds: &'a EnumerationBounds) -> Self {
        let mut labels: Vec<SourceLabel> = bounds
            .source_labels
            .iter()
            .filter(|l| !l.is_root())
            .cloned()
            .collect();
        if labels.is_empty() {
            labels = vec!["a".into(), "b".into()];
        }
        AsGraphSampler { bounds, labels }
    }

    fn small_type(&self, rng: &mut ChaCha8Rng, depth: usize) -> GraphType {
        let mut ty = GraphType::empty();
        if depth == 0 {
            return ty;
        }
        for label in &self.labels {
            if rng.gen_bool(0.3) {
                ty = ty.with(label, self.small_type(rng, depth - 1), RenameMap::identity());
            }
        }
        ty
    }

    fn rename(&self, rng: &mut ChaCha8Rng) -> RenameMap {
        if rng.gen_bool(0.8) {
            return RenameMap::identity();
        }
        let from = self.labels.choose(rng).expect("nonempty");
        let to = self.labels.choose(rng).expect("nonempty");
        RenameMap::single(from, to)
    }

    fn sample(&self, rng: &mut ChaCha8Rng) -> AsGraph {
        let n = rng.gen_range(1..=self.bounds.max_vertices.max(1));
        let ids: Vec<VertexId> = (0..n).map(|i| VertexId::from(format!("v{i}"))).collect();
        let mut g = MsGraph::new();
        for id in &ids {
            let label = if self.bounds.node_labels.is_empty() || rng.gen_bool(0.5) {
                None
            } else {
                self.bounds.node_labels.choose(rng).map(Symbol::as_str)
            };
            g.add_vertex(id.clone(), label);
        }
        if !self.bounds.edge_labels.is_empty() {
            for _ in 0..rng.gen_range(0..=self.bounds.max_edges) {
                let from = ids.choose(rng).expect("nonempty");
                let to = ids.choose(rng).expect("nonempty");
                let label = self.bounds.edge_labels.choose(rng).expect("nonempty");
                g.add_edge(from, to, label);
            }
        }
        // the root carries only rt; other labels may share non-root vertices
        g.set_source(SourceLabel::root(), &ids[0]);
        let mut ty = GraphType::empty();
        if n > 1 {
            for label in &self.labels {
                if rng.gen_bool(0.5) {
                    g.set_source(label, &ids[rng.gen_range(1..n)]);
                    ty = ty.with(label, self.small_type(rng, 1), self.rename(rng));
                }
            }
        }
        AsGraph::new(g, ty).expect("sampled as-graphs are well-formed")
    }

    /// A functor, an argument and a label. Most of the time the functor's
    /// slot is made to request exactly the argument's type, so that a good
    /// share of instances is defined.
    fn instance(&self, rng: &mut ChaCha8Rng) -> (SourceLabel, AsGraph, AsGraph) {
        let argument = self.sample(rng);
        let functor = self.sample(rng);
        let open: Vec<&SourceLabel> = functor.ty().keys().collect();
        let label = match open.choose(rng) {
            Some(l) if rng.gen_bool(0.9) => (*l).clone(),
            _ => self.labels.choose(rng).expect("nonempty").clone(),
        };
        if functor.ty().contains(&label) && rng.gen_bool(0.7) {
            let (g, ty) = functor.into_parts();
            let rename = ty.get(&label).expect("open").rename.clone();
            let ty = ty.with(&label, argument.ty().clone(), rename);
            let functor = AsGraph::new(g, ty).expect("same keys");
            return (label, functor, argument);
        }
        (label, functor, argument)
    }
}

pub fn check_apply_reduction(
    bounds: &EnumerationBounds,
    trials: u64,
    seed: u64,
) -> Result<CampaignReport, CampaignError> {
    if trials as u128 > bounds.budget {
        return Err(CampaignError::BudgetExceeded {
            cases: trials as u128,
            budget: bounds.budget,
        });
    }
    let sampler = AsGraphSampler::new(bounds);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let instances: Vec<_> = (0..trials).map(|_| sampler.instance(&mut rng)).collect();

    let results: Vec<(Option<CaseRecord>, &'static str)> = instances
        .par_iter()
        .map(|(label, functor, argument)| {
            let (violation, tally) = reduction_violation(label, functor, argument);
            let record = violation.map(|(expected, observed)| CaseRecord {
                property: Property::ApplyReduction,
                inputs: vec![as_graph_json(functor), as_graph_json(argument)],
                label: Some(label.to_string()),
                expected,
                observed,
            });
            (record, tally)
        })
        .collect();
    let mut outcomes = BTreeMap::new();
    let mut failures = Vec::new();
    for (record, tally) in results {
        *outcomes.entry(tally.to_owned()).or_insert(0) += 1;
        failures.extend(record);
    }
    Ok(finish(
        "apply-reduction",
        CampaignParameters {
            bounds: bounds.clone(),
            seed: Some(seed),
            trials: Some(trials),
        },
        trials,
        outcomes,
        failures,
        Vec::new(),
    ))
}

fn same_composition(
    a: Result<MsGraph, ComposeError>,
    b: Result<MsGraph, ComposeError>,
) -> Option<(String, String)> {
    match (a, b) {
        (Ok(x), Ok(y)) => match is_isomorphic(&x, &y) {
            Ok(true) => None,
            Ok(false) => Some((graph_json(&x), graph_json(&y))),
            Err(e) => Some((graph_json(&x), e.to_string())),
        },
        (Err(x), Err(y)) if same_kind(&x, &y) => None,
        (x, y) => Some((
            format!("{:?}", x.map(|g| graph_json(&g))),
            format!("{:?}", y.map(|g| graph_json(&g))),
        )),
    }
}

pub fn commutativity_violation(g: &MsGraph, h: &MsGraph) -> Option<(String, String)> {
    same_composition(parallel_compose(g, h), parallel_compose(h, g))
}

pub fn associativity_violation(g: &MsGraph, h: &MsGraph, k: &MsGraph) -> Option<(String, String)> {
    let left = parallel_compose(g, h).and_then(|gh| parallel_compose(&gh, k));
    let right = parallel_compose(h, k).and_then(|hk| parallel_compose(g, &hk));
    same_composition(left, right)
}

pub fn right_identity_violation(g: &MsGraph) -> Option<(String, String)> {
    same_composition(Ok(g.clone()), parallel_compose(g, &MsGraph::new()))
}

pub fn check_algebraic_properties(
    bounds: &EnumerationBounds,
    trials: u64,
    seed: u64,
) -> Result<CampaignReport, CampaignError> {
    let graphs = population(bounds, 2)?;
    if trials as u128 > bounds.budget {
        return Err(CampaignError::BudgetExceeded {
            cases: trials as u128,
            budget: bounds.budget,
        });
    }
    let record = |property, inputs: Vec<&MsGraph>, (expected, observed)| CaseRecord {
        property,
        inputs: inputs.into_iter().map(graph_json).collect(),
        label: None,
        expected,
        observed,
    };

    let mut failures: Vec<CaseRecord> = graphs
        .par_iter()
        .flat_map_iter(|g| {
            graphs.iter().filter_map(move |h| {
                commutativity_violation(g, h).map(|v| record(Property::Commutativity, vec![g, h], v))
            })
        })
        .collect();
    failures.extend(
        graphs
            .iter()
            .filter_map(|g| right_identity_violation(g).map(|v| record(Property::RightIdentity, vec![g], v))),
    );

    let mut findings = Vec::new();
    if !graphs.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let triples: Vec<[usize; 3]> = (0..trials)
            .map(|_| std::array::from_fn(|_| rng.gen_range(0..graphs.len())))
            .collect();
        findings = triples
            .par_iter()
            .filter_map(|&[i, j, k]| {
                let (g, h, x) = (&graphs[i], &graphs[j], &graphs[k]);
                associativity_violation(g, h, x).map(|v| record(Property::Associativity, vec![g, h, x], v))
            })
            .collect();
    }

    let n = graphs.len() as u64;
    let mut outcomes = BTreeMap::new();
    outcomes.insert("graphs".to_owned(), n);
    outcomes.insert("commutativity_pairs".to_owned(), n * n);
    outcomes.insert("associativity_triples".to_owned(), if n == 0 { 0 } else { trials });
    Ok(finish(
        "algebraic-properties",
        CampaignParameters {
            bounds: bounds.clone(),
            seed: Some(seed),
            trials: Some(trials),
        },
        n * n + n + if n == 0 { 0 } else { trials },
        outcomes,
        failures,
        findings,
    ))
}

/// Re-runs a recorded case from its serialized inputs. Returns the
/// `(expected, observed)` pair if the property still fails, `None` if it
/// now holds.
pub fn replay(case: &CaseRecord) -> Result<Option<(String, String)>, CampaignError> {
    let graphs = || -> Result<Vec<MsGraph>, CampaignError> {
        case.inputs
            .iter()
            .map(|text| {
                serde_json::from_str::<GraphDocument>(text)
                    .map_err(|e| CampaignError::Replay(e.to_string()))?
                    .to_graph()
                    .map_err(|e| CampaignError::Replay(e.to_string()))
            })
            .collect()
    };
    let arity = |n: usize| {
        if case.inputs.len() == n {
            Ok(())
        } else {
            Err(CampaignError::Replay(format!(
                "{} expects {n} inputs",
                case.property
            )))
        }
    };
    match case.property {
        Property::ClassicAgreement
        | Property::ResultValid
        | Property::TauUnion
        | Property::SourceRestriction
        | Property::CrossSection => {
            arity(2)?;
            let gs = graphs()?;
            Ok(composition_pair_violations(&gs[0], &gs[1])
                .into_iter()
                .find(|(p, _, _)| *p == case.property)
                .map(|(_, e, o)| (e, o)))
        }
        Property::Commutativity => {
            arity(2)?;
            let gs = graphs()?;
            Ok(commutativity_violation(&gs[0], &gs[1]))
        }
        Property::RightIdentity => {
            arity(1)?;
            Ok(right_identity_violation(&graphs()?[0]))
        }
        Property::Associativity => {
            arity(3)?;
            let gs = graphs()?;
            Ok(associativity_violation(&gs[0], &gs[1], &gs[2]))
        }
        Property::ApplyReduction => {
            arity(2)?;
            let parse = |text: &String| {
                crate::io::parse_as_graph(text).map_err(|e| CampaignError::Replay(e.to_string()))
            };
            let label = case
                .label
                .as_deref()
                .ok_or_else(|| CampaignError::Replay("missing apply label".into()))?;
            let (violation, _) =
                reduction_violation(&label.into(), &parse(&case.inputs[0])?, &parse(&case.inputs[1])?);
            Ok(violation)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn tiny() -> EnumerationBounds {
        EnumerationBounds {
            max_vertices: 2,
            source_labels: vec!["a".into(), "b".into()],
            node_labels: Vec::new(),
            edge_labels: Vec::new(),
            max_edges: 0,
            ..EnumerationBounds::default()
        }
    }

    #[test]
    fn two_vertex_equivalence_passes() {
        let report = check_composition_equivalence(&tiny()).unwrap();
        assert!(report.passed(), "{}", report.to_json());
        let n = tiny().count() as u64;
        assert_eq!(report.cases_run, n * n);
    }

    #[test]
    fn equivalence_refuses_ms_graphs() {
        let mut b = tiny();
        b.s_graphs_only = false;
        assert!(matches!(
            check_composition_equivalence(&b),
            Err(CampaignError::OracleUndefined)
        ));
    }

    #[test]
    fn budget_applies_to_pairs() {
        let mut b = tiny();
        b.budget = tiny().count();
        assert!(matches!(
            check_composition_equivalence(&b),
            Err(CampaignError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn shared_vertex_graph_is_never_enumerated() {
        let graphs: Vec<MsGraph> = enumerate_graphs(&tiny()).unwrap().collect();
        assert!(graphs.iter().all(MsGraph::is_s_graph));
        assert!(!graphs
            .iter()
            .any(|g| is_isomorphic(g, &fixtures::g_single()).unwrap()));
    }

    #[test]
    fn wash_raven_reduction() {
        let (violation, tally) = reduction_violation(&"o".into(), &fixtures::g_wash(), &fixtures::g_raven());
        assert_eq!(violation, None);
        assert_eq!(tally, "defined");
        let (violation, tally) = reduction_violation(&"x".into(), &fixtures::g_wash(), &fixtures::g_raven());
        assert_eq!(violation, None);
        assert_eq!(tally, "undefined");
    }

    #[test]
    fn reduction_rejects_rlab_inputs() {
        let (violation, _) = reduction_violation(&"o".into(), &fixtures::g_wash(), &fixtures::g_self());
        assert!(violation.is_some());
    }

    #[test]
    fn reduction_is_seeded() {
        let b = EnumerationBounds::default();
        let first = check_apply_reduction(&b, 300, 7).unwrap();
        let second = check_apply_reduction(&b, 300, 7).unwrap();
        assert_eq!(first, second);
        assert!(first.passed(), "{}", first.to_json());
        assert!(first.outcomes["defined"] > 30, "{:?}", first.outcomes);
        assert!(first.outcomes["undefined"] > 30, "{:?}", first.outcomes);
    }

    #[test]
    fn algebraic_on_ms_graphs() {
        let mut b = tiny();
        b.s_graphs_only = false;
        b.edge_labels = vec!["e".into()];
        b.max_edges = 1;
        let report = check_algebraic_properties(&b, 500, 3).unwrap();
        assert!(report.passed(), "{}", report.to_json());
        assert!(report.findings.is_empty(), "{}", report.to_json());
        assert_eq!(report, check_algebraic_properties(&b, 500, 3).unwrap());
    }

    #[test]
    fn separate_and_single_commute() {
        assert_eq!(commutativity_violation(&fixtures::g_separate(), &fixtures::g_single()), None);
    }

    #[test]
    fn replay_reproduces_a_failure() {
        // outside the s-graph population the classic oracle refuses, which
        // the pair check reports as disagreement
        let inputs = vec![graph_json(&fixtures::g_separate()), graph_json(&fixtures::g_single())];
        let case = CaseRecord {
            property: Property::ClassicAgreement,
            inputs: inputs.clone(),
            label: None,
            expected: String::new(),
            observed: String::new(),
        };
        let (expected, observed) = replay(&case).unwrap().expect("reproduces");
        assert!(expected.starts_with("Err(NotAnSGraph"), "{expected}");
        assert!(observed.starts_with("Ok("), "{observed}");

        let holds = CaseRecord {
            property: Property::Commutativity,
            ..case.clone()
        };
        assert_eq!(replay(&holds).unwrap(), None);
        let bad_arity = CaseRecord {
            inputs: vec![],
            ..case
        };
        assert!(replay(&bad_arity).is_err());
    }
}
