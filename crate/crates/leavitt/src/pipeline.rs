//! The decomposition pipeline: reduce a graph to a totally looped core
//! while tracking the class of an idempotent, then realize the corner it
//! cuts out as the algebra of an explicit graph.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph, VertexId};
use crate::monoid::amp_relation;
use crate::moves::{collapse, line_graph, sf_reduce, source_eliminate, MoveKind, MoveRecord};
use crate::projective::{end_graph, HairExtension, ProjectiveClass};

/// Outcome of reducing to a totally looped graph: `k` sinks split off as
/// one matrix summand each, and `f` carries the rest of the algebra.
#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub k: usize,
    pub removed_sinks: Vec<VertexId>,
    #[serde(rename = "F")]
    pub f: Graph,
    pub trace: Vec<MoveRecord>,
}

/// Reduces to the source-free form, then collapses the lexicographically
/// smallest regular vertex that is not the base of a loop until the graph
/// is totally looped. The trace records every move in order.
pub fn decompose(g: &Graph) -> Result<DecompositionReport> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    let r = sf_reduce(g);
    let mut trace = r.trace;
    let mut f = r.sf;
    if !f.is_trivial() {
        loop {
            let next = f
                .vertices()
                .iter()
                .filter(|v| f.is_regular(v) && !f.has_loop_at(v))
                .min()
                .cloned();
            match next {
                Some(v) => {
                    trace.push(MoveRecord {
                        kind: MoveKind::Collapse,
                        vertex: v.clone(),
                        detail: format!("collapsed {v}"),
                    });
                    f = collapse(&f, &v)?;
                }
                None => break,
            }
        }
    }
    Ok(DecompositionReport {
        k: r.removed_isolated.len(),
        removed_sinks: r.removed_isolated,
        f,
        trace,
    })
}

/// One replayed move together with the class it leaves behind. An empty
/// map means all remaining mass has been extracted into line summands.
#[derive(Clone, Debug, Serialize)]
pub struct TraceStep {
    #[serde(rename = "move")]
    pub mv: MoveRecord,
    pub class_after: BTreeMap<VertexId, u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CornerReport {
    pub line_sizes: Vec<u64>,
    #[serde(rename = "T")]
    pub t: Vec<VertexId>,
    #[serde(rename = "G")]
    pub g: Option<Graph>,
    pub output: Graph,
    pub trace: Vec<TraceStep>,
}

/// Builds the graph whose algebra is the corner cut out of the input's
/// algebra by an idempotent of class `eps`: replays the decomposition
/// trace on the class, peeling a line graph A_n whenever an isolated
/// vertex leaves carrying multiplicity n, and finishes the residual class
/// on the totally looped core through `end_graph`. The output is the
/// disjoint union of the pieces, returned bare when there is only one.
pub fn corner_graph(g: &Graph, eps: &ProjectiveClass) -> Result<CornerReport> {
    eps.check_supported(g)?;
    let rep = decompose(g)?;
    let mut cur = g.clone();
    let mut class: BTreeMap<VertexId, u64> = eps.coeffs().clone();
    let mut line_sizes: Vec<u64> = Vec::new();
    let mut trace: Vec<TraceStep> = Vec::new();
    for mv in &rep.trace {
        match mv.kind {
            MoveKind::SourceElim | MoveKind::Collapse => {
                let n = class.remove(&mv.vertex).unwrap_or(0);
                if n > 0 {
                    let sum = amp_relation(&cur, &mv.vertex)?;
                    for (u, k) in sum.entries() {
                        *class.entry(u.clone()).or_insert(0) += n * k;
                    }
                }
                cur = match mv.kind {
                    MoveKind::SourceElim => source_eliminate(&cur, &mv.vertex)?,
                    _ => collapse(&cur, &mv.vertex)?,
                };
            }
            MoveKind::IsolatedRemoval => {
                let n = class.remove(&mv.vertex).unwrap_or(0);
                if n > 0 {
                    line_sizes.push(n);
                }
                cur = source_eliminate(&cur, &mv.vertex)?;
            }
            MoveKind::MoveR | MoveKind::InSplit | MoveKind::OutSplit => {
                return Err(Error::UnsupportedMoveKind(mv.kind.to_string()));
            }
        }
        trace.push(TraceStep {
            mv: mv.clone(),
            class_after: class.clone(),
        });
    }
    if cur.vertex_count() > 0 {
        debug_assert_eq!(cur, rep.f);
    }

    let (t, g_part) = if class.is_empty() {
        if line_sizes.is_empty() {
            return Err(Error::ClassVanished);
        }
        (Vec::new(), None)
    } else {
        let h = HairExtension::all_ones(rep.f.clone())?;
        let residual = ProjectiveClass::new(class)?;
        let out = end_graph(&h, &residual)?;
        (out.normalized.t, Some(out.g))
    };

    let mut parts: Vec<Graph> = line_sizes
        .iter()
        .map(|&n| line_graph(n).expect("sizes are positive"))
        .collect();
    parts.extend(g_part.clone());
    let output = if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        disjoint_union(&parts)
    };
    Ok(CornerReport {
        line_sizes,
        t,
        g: g_part,
        output,
        trace,
    })
}

/// The class of the idempotent Σ_{v∈S} v.
pub fn vertex_sum_class(g: &Graph, s: &BTreeSet<VertexId>) -> Result<ProjectiveClass> {
    if s.is_empty() {
        return Err(Error::EmptySet);
    }
    for v in s {
        if !g.has_vertex(v) {
            return Err(Error::UnknownVertex(v.clone()));
        }
    }
    ProjectiveClass::new(s.iter().map(|v| (v.clone(), 1)).collect())
}

/// The class of the identity, 1 = Σ over all vertices.
pub fn identity_class(g: &Graph) -> Result<ProjectiveClass> {
    vertex_sum_class(g, &g.vertices().iter().cloned().collect())
}
