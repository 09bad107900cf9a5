//! Graph moves.
//!
//! Every move consumes a graph and produces a fresh graph, never mutating
//! its input. Composite edges created by Move (R) and by collapse are
//! labeled `[<e><f>]` for the incoming edge `e` and outgoing edge `f` they
//! concatenate. Copies created by in-splitting are labeled `<e>#<j>`, copies
//! created by out-splitting `<e>^<j>`, and hair strands use `<v>^<j>` for
//! vertices with `e_<v>^<j>` for the strand edges.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Graph, VertexId};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MoveKind {
    SourceElim,
    IsolatedRemoval,
    MoveR,
    Collapse,
    InSplit,
    OutSplit,
}

impl std::fmt::Display for MoveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MoveKind::SourceElim => "SourceElim",
            MoveKind::IsolatedRemoval => "IsolatedRemoval",
            MoveKind::MoveR => "MoveR",
            MoveKind::Collapse => "Collapse",
            MoveKind::InSplit => "InSplit",
            MoveKind::OutSplit => "OutSplit",
        };
        f.write_str(s)
    }
}

/// One applied move, for traces and class bookkeeping.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub vertex: VertexId,
    pub detail: String,
}

/// An ordered partition of an edge set into nonempty disjoint blocks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    pub blocks: Vec<Vec<EdgeId>>,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<EdgeId>>) -> Self {
        Partition { blocks }
    }

    /// Blocks must be nonempty, disjoint, and cover `expected` exactly.
    fn validate(&self, expected: &BTreeSet<EdgeId>) -> Result<()> {
        let mut seen = BTreeSet::new();
        for block in &self.blocks {
            if block.is_empty() {
                return Err(Error::BadPartition("empty block".into()));
            }
            for id in block {
                if !expected.contains(id) {
                    return Err(Error::BadPartition(format!(
                        "edge {id} is not in the partitioned set"
                    )));
                }
                if !seen.insert(id.clone()) {
                    return Err(Error::BadPartition(format!("edge {id} appears twice")));
                }
            }
        }
        if seen.len() != expected.len() {
            let missing = expected.difference(&seen).next().unwrap();
            return Err(Error::BadPartition(format!("edge {missing} is not covered")));
        }
        Ok(())
    }

    /// Block index (0-based) of each edge.
    fn block_of(&self) -> BTreeMap<EdgeId, usize> {
        let mut m = BTreeMap::new();
        for (i, block) in self.blocks.iter().enumerate() {
            for id in block {
                m.insert(id.clone(), i);
            }
        }
        m
    }
}

/// Lengths for hair extension, one positive entry per base vertex.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HairSpec(pub BTreeMap<VertexId, u64>);

impl HairSpec {
    pub fn uniform(g: &Graph, n: u64) -> Self {
        HairSpec(g.vertices().iter().map(|v| (v.clone(), n)).collect())
    }

    fn validate(&self, g: &Graph) -> Result<()> {
        for (v, &n) in &self.0 {
            if !g.has_vertex(v) {
                return Err(Error::BadSpec(format!("unknown vertex {v}")));
            }
            if n == 0 {
                return Err(Error::BadSpec(format!("length at {v} must be positive")));
            }
        }
        for v in g.vertices() {
            if !self.0.contains_key(v) {
                return Err(Error::BadSpec(format!("no length given for {v}")));
            }
        }
        Ok(())
    }
}

pub(crate) fn composite_id(e: &EdgeId, f: &EdgeId) -> EdgeId {
    EdgeId::new(format!("[{e}{f}]")).expect("concatenation of valid tokens")
}

/// Removes the source `v` together with everything it emits. May return the
/// empty graph.
pub fn source_eliminate(g: &Graph, v: &VertexId) -> Result<Graph> {
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    if !g.is_source(v) {
        return Err(Error::NotASource(v.clone()));
    }
    let vertices = g.vertices().iter().filter(|u| *u != v).cloned().collect();
    let edges = g
        .edges()
        .iter()
        .filter(|e| e.src != *v)
        .cloned()
        .collect();
    Graph::new(vertices, edges)
}

/// Result of reducing a graph to its source-free form.
#[derive(Clone, Debug, Serialize)]
pub struct SfReduction {
    pub sf: Graph,
    pub removed_isolated: Vec<VertexId>,
    pub trace: Vec<MoveRecord>,
}

/// Repeatedly eliminates the lexicographically smallest source that still
/// emits edges; once none is left, removes the isolated vertices (recorded
/// in `removed_isolated`, which ends up holding exactly the sinks of `g`
/// missing from `sf`). A graph emptied out this way is reported as the
/// trivial one-vertex graph; a trivial input is returned unchanged.
pub fn sf_reduce(g: &Graph) -> SfReduction {
    if g.is_trivial() {
        return SfReduction {
            sf: g.clone(),
            removed_isolated: Vec::new(),
            trace: Vec::new(),
        };
    }
    let mut cur = g.clone();
    let mut trace = Vec::new();
    loop {
        let next = cur
            .vertices()
            .iter()
            .filter(|v| cur.is_source(v) && !cur.is_sink(v))
            .min()
            .cloned();
        match next {
            Some(v) => {
                trace.push(MoveRecord {
                    kind: MoveKind::SourceElim,
                    vertex: v.clone(),
                    detail: format!("eliminated source {v}"),
                });
                cur = source_eliminate(&cur, &v).expect("source is present");
            }
            None => break,
        }
    }
    let isolated: Vec<VertexId> = cur
        .vertices()
        .iter()
        .filter(|v| cur.is_isolated(v))
        .cloned()
        .collect();
    for v in &isolated {
        trace.push(MoveRecord {
            kind: MoveKind::IsolatedRemoval,
            vertex: v.clone(),
            detail: format!("removed isolated vertex {v}"),
        });
        cur = source_eliminate(&cur, v).expect("isolated vertex is a source");
    }
    let sf = if cur.vertex_count() == 0 {
        Graph::trivial()
    } else {
        cur
    };
    SfReduction {
        sf,
        removed_isolated: isolated,
        trace,
    }
}

/// Move (R) at `w`: `w` must emit exactly one edge `f`, `f` must not be a
/// loop, and `w` must either be a source or receive from a single vertex.
/// `w` and `f` disappear; every incoming edge `e` is replaced by the
/// composite `[ef]` running from `src(e)` to `dst(f)`.
pub fn move_r(g: &Graph, w: &VertexId) -> Result<Graph> {
    if !g.has_vertex(w) {
        return Err(Error::UnknownVertex(w.clone()));
    }
    let not_applicable = |reason: &str| Error::MoveRNotApplicable {
        vertex: w.clone(),
        reason: reason.to_string(),
    };
    if g.out_degree(w) != 1 {
        return Err(not_applicable("it must emit exactly one edge"));
    }
    let f = g.out_edges(w).next().unwrap().clone();
    if f.is_loop() {
        return Err(not_applicable("its unique edge is a loop"));
    }
    let emitters: BTreeSet<&VertexId> = g.in_edges(w).map(|e| &e.src).collect();
    if emitters.len() > 1 {
        return Err(not_applicable(
            "it must be a source or receive from one vertex only",
        ));
    }
    let vertices = g.vertices().iter().filter(|u| *u != w).cloned().collect();
    let mut edges = Vec::new();
    for e in g.edges() {
        if e.dst == *w {
            edges.push(Edge {
                id: composite_id(&e.id, &f.id),
                src: e.src.clone(),
                dst: f.dst.clone(),
            });
        } else if e.id != f.id {
            edges.push(e.clone());
        }
    }
    Graph::new(vertices, edges)
}

/// Collapse at a regular vertex `v` that is not the base of a loop: `v` and
/// all edges touching it disappear, replaced by composites `[ef]` for every
/// incoming `e` and outgoing `f`.
pub fn collapse(g: &Graph, v: &VertexId) -> Result<Graph> {
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    if g.is_sink(v) {
        return Err(Error::SinkVertex(v.clone()));
    }
    if g.has_loop_at(v) {
        return Err(Error::LoopAtVertex(v.clone()));
    }
    let vertices = g.vertices().iter().filter(|u| *u != v).cloned().collect();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|e| e.src != *v && e.dst != *v)
        .cloned()
        .collect();
    for e in g.in_edges(v) {
        for f in g.out_edges(v) {
            edges.push(Edge {
                id: composite_id(&e.id, &f.id),
                src: e.src.clone(),
                dst: f.dst.clone(),
            });
        }
    }
    Graph::new(vertices, edges)
}

/// In-split at `v` along a partition of the edges received by `v`. The
/// vertex splits into `v_1 .. v_n`; edges received by `v` are rerouted to
/// the copy named by their block; edges emitted by `v` are duplicated once
/// per block as `<e>#<j>`.
pub fn in_split(g: &Graph, v: &VertexId, p: &Partition) -> Result<Graph> {
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    if g.is_source(v) {
        return Err(Error::SourceVertex(v.clone()));
    }
    let received: BTreeSet<EdgeId> = g.in_edges(v).map(|e| e.id.clone()).collect();
    p.validate(&received)?;
    let n = p.blocks.len();
    let block = p.block_of();
    let copy_vertex = |i: usize| VertexId::new(format!("{v}_{}", i + 1));
    let mut vertices: Vec<VertexId> = g.vertices().iter().filter(|u| *u != v).cloned().collect();
    for i in 0..n {
        vertices.push(copy_vertex(i)?);
    }
    // dst of an edge that pointed at v, in the split graph.
    let new_dst = |e: &Edge| -> Result<VertexId> {
        if e.dst == *v {
            copy_vertex(block[&e.id])
        } else {
            Ok(e.dst.clone())
        }
    };
    let mut edges = Vec::new();
    for e in g.edges() {
        if e.src == *v {
            for j in 0..n {
                edges.push(Edge {
                    id: EdgeId::new(format!("{}#{}", e.id, j + 1))?,
                    src: copy_vertex(j)?,
                    dst: new_dst(e)?,
                });
            }
        } else {
            edges.push(Edge {
                id: e.id.clone(),
                src: e.src.clone(),
                dst: new_dst(e)?,
            });
        }
    }
    Graph::new(vertices, edges)
}

/// Out-split at `v` along a partition of the edges emitted by `v`. The
/// vertex splits into `v^1 .. v^n`; edges emitted by `v` are re-sourced at
/// the copy named by their block; edges received by `v` are duplicated once
/// per block as `<e>^<j>`.
pub fn out_split(g: &Graph, v: &VertexId, p: &Partition) -> Result<Graph> {
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    if g.is_sink(v) {
        return Err(Error::SinkVertex(v.clone()));
    }
    let emitted: BTreeSet<EdgeId> = g.out_edges(v).map(|e| e.id.clone()).collect();
    p.validate(&emitted)?;
    let n = p.blocks.len();
    let block = p.block_of();
    let copy_vertex = |i: usize| VertexId::new(format!("{v}^{}", i + 1));
    let mut vertices: Vec<VertexId> = g.vertices().iter().filter(|u| *u != v).cloned().collect();
    for i in 0..n {
        vertices.push(copy_vertex(i)?);
    }
    let new_src = |e: &Edge| -> Result<VertexId> {
        if e.src == *v {
            copy_vertex(block[&e.id])
        } else {
            Ok(e.src.clone())
        }
    };
    let mut edges = Vec::new();
    for e in g.edges() {
        if e.dst == *v {
            for j in 0..n {
                edges.push(Edge {
                    id: EdgeId::new(format!("{}^{}", e.id, j + 1))?,
                    src: new_src(e)?,
                    dst: copy_vertex(j)?,
                });
            }
        } else {
            edges.push(Edge {
                id: e.id.clone(),
                src: new_src(e)?,
                dst: e.dst.clone(),
            });
        }
    }
    Graph::new(vertices, edges)
}

/// Hair extension: for every vertex `v` with length `n >= 2`, grow a strand
/// `v^{n-1} -> ... -> v^1 -> v` of new vertices feeding into `v`. Length 1
/// leaves a vertex bare, so all-ones is the identity.
pub fn hair_extend(g: &Graph, spec: &HairSpec) -> Result<Graph> {
    spec.validate(g)?;
    let mut vertices: Vec<VertexId> = g.vertices().to_vec();
    let mut edges: Vec<Edge> = g.edges().to_vec();
    for v in g.vertices() {
        let n = spec.0[v];
        for j in 1..n {
            vertices.push(VertexId::new(format!("{v}^{j}"))?);
            let upper = VertexId::new(format!("{v}^{j}"))?;
            let lower = if j == 1 {
                v.clone()
            } else {
                VertexId::new(format!("{v}^{}", j - 1))?
            };
            edges.push(Edge {
                id: EdgeId::new(format!("e_{v}^{j}"))?,
                src: upper,
                dst: lower,
            });
        }
    }
    Graph::new(vertices, edges)
}

/// Uniform hair extension of length `n` at every vertex.
pub fn m_n_graph(g: &Graph, n: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadSpec("length must be positive".into()));
    }
    hair_extend(g, &HairSpec::uniform(g, n))
}

/// The line graph A_n: `n` vertices `v{n-1} -> ... -> v0`, edge `e{i}`
/// pointing from `v{i}` to `v{i-1}`.
pub fn line_graph(n: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadSpec("line graph needs at least one vertex".into()));
    }
    let vertices: Vec<VertexId> = (0..n)
        .rev()
        .map(|i| VertexId::new(format!("v{i}")).unwrap())
        .collect();
    let edges: Vec<Edge> = (1..n)
        .rev()
        .map(|i| Edge::new(&format!("e{i}"), &format!("v{i}"), &format!("v{}", i - 1)).unwrap())
        .collect();
    Graph::new(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::iso::are_isomorphic;

    fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn eid(s: &str) -> EdgeId {
        EdgeId::new(s).unwrap()
    }

    fn edge_set(g: &Graph) -> BTreeSet<(String, String, String)> {
        g.edges()
            .iter()
            .map(|e| (e.id.to_string(), e.src.to_string(), e.dst.to_string()))
            .collect()
    }

    #[test]
    fn source_eliminate_removes_emissions() {
        let a3 = fixtures::line(3);
        let g = source_eliminate(&a3, &vid("v2")).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(matches!(
            source_eliminate(&a3, &vid("v1")),
            Err(Error::NotASource(_))
        ));
        let single = Graph::build(&["u", "w"], &[("e", "u", "w")]).unwrap();
        let elim = source_eliminate(&single, &vid("u")).unwrap();
        assert_eq!(elim.vertex_count(), 1);
    }

    #[test]
    fn sf_reduce_on_line_drains_to_trivial() {
        let r = sf_reduce(&fixtures::line(3));
        assert!(r.sf.is_trivial());
        assert_eq!(r.removed_isolated, vec![vid("v0")]);
        let kinds: Vec<MoveKind> = r.trace.iter().map(|m| m.kind).collect();
        assert_eq!(
            kinds,
            vec![MoveKind::SourceElim, MoveKind::SourceElim, MoveKind::IsolatedRemoval]
        );
        assert_eq!(r.trace[0].vertex, vid("v2"));
        assert_eq!(r.trace[1].vertex, vid("v1"));
    }

    #[test]
    fn sf_reduce_fixed_points() {
        let e = fixtures::collapse_example();
        let r = sf_reduce(&e);
        assert_eq!(r.sf, e);
        assert!(r.removed_isolated.is_empty());
        assert!(r.trace.is_empty());

        let trivial = Graph::build(&["v"], &[]).unwrap();
        let rt = sf_reduce(&trivial);
        assert_eq!(rt.sf, trivial);
        assert!(rt.removed_isolated.is_empty());
    }

    #[test]
    fn sf_reduce_records_exactly_missing_sinks() {
        // v1 -> v0 next to a cycle; v0 ends isolated and is recorded.
        let g = Graph::build(
            &["v0", "v1", "c"],
            &[("e", "v1", "v0"), ("l", "c", "c")],
        )
        .unwrap();
        let r = sf_reduce(&g);
        assert_eq!(r.removed_isolated, vec![vid("v0")]);
        assert_eq!(r.sf.vertices(), &[vid("c")]);
        for v in g.vertices() {
            let missing_sink = g.is_sink(v) && !r.sf.has_vertex(v);
            assert_eq!(missing_sink, r.removed_isolated.contains(v));
        }
    }

    #[test]
    fn move_r_on_line_end() {
        // A_3 at the middle vertex: composite [e2e1] spans v2 -> v0.
        let a3 = fixtures::line(3);
        let g = move_r(&a3, &vid("v1")).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(
            edge_set(&g),
            [("[e2e1]".to_string(), "v2".to_string(), "v0".to_string())].into()
        );
        // Source case: v2 emits one edge and receives nothing.
        let g2 = move_r(&a3, &vid("v2")).unwrap();
        assert!(are_isomorphic(&g2, &fixtures::line(2)));
    }

    #[test]
    fn move_r_rejections() {
        let rose = fixtures::rose(1);
        assert!(matches!(
            move_r(&rose, &vid("v")),
            Err(Error::MoveRNotApplicable { .. })
        ));
        // Receiving from two distinct vertices blocks the move.
        let g = Graph::build(
            &["a", "b", "w", "t"],
            &[("p", "a", "w"), ("q", "b", "w"), ("f", "w", "t")],
        )
        .unwrap();
        assert!(matches!(
            move_r(&g, &vid("w")),
            Err(Error::MoveRNotApplicable { .. })
        ));
        // Parallel edges from a single vertex are fine.
        let h = Graph::build(
            &["a", "w", "t"],
            &[("p", "a", "w"), ("q", "a", "w"), ("f", "w", "t")],
        )
        .unwrap();
        let moved = move_r(&h, &vid("w")).unwrap();
        assert_eq!(
            edge_set(&moved),
            [
                ("[pf]".to_string(), "a".to_string(), "t".to_string()),
                ("[qf]".to_string(), "a".to_string(), "t".to_string())
            ]
            .into()
        );
    }

    #[test]
    fn collapse_matches_golden_f1() {
        let e = fixtures::collapse_example();
        let f1 = collapse(&e, &vid("v1")).unwrap();
        assert_eq!(
            edge_set(&f1),
            [
                ("[e2e1]".to_string(), "v2".to_string(), "v2".to_string()),
                ("[e2f1]".to_string(), "v2".to_string(), "v3".to_string()),
                ("[e2f]".to_string(), "v2".to_string(), "v4".to_string()),
                ("[f2e1]".to_string(), "v3".to_string(), "v2".to_string()),
                ("[f2f1]".to_string(), "v3".to_string(), "v3".to_string()),
                ("[f2f]".to_string(), "v3".to_string(), "v4".to_string()),
            ]
            .into()
        );
        assert!(f1.is_totally_looped());
    }

    #[test]
    fn collapse_matches_golden_f2() {
        let e = fixtures::collapse_example();
        let after_v2 = collapse(&e, &vid("v2")).unwrap();
        let f2 = collapse(&after_v2, &vid("v3")).unwrap();
        assert_eq!(
            edge_set(&f2),
            [
                ("[e1e2]".to_string(), "v1".to_string(), "v1".to_string()),
                ("[f1f2]".to_string(), "v1".to_string(), "v1".to_string()),
                ("f".to_string(), "v1".to_string(), "v4".to_string()),
            ]
            .into()
        );
        let f1 = collapse(&e, &vid("v1")).unwrap();
        assert!(!are_isomorphic(&f1, &f2));
    }

    #[test]
    fn collapse_rejections() {
        let e = fixtures::collapse_example();
        assert!(matches!(
            collapse(&e, &vid("v4")),
            Err(Error::SinkVertex(_))
        ));
        assert!(matches!(
            collapse(&fixtures::rose(1), &vid("v")),
            Err(Error::LoopAtVertex(_))
        ));
    }

    #[test]
    fn in_split_rose_two_blocks() {
        let rose = fixtures::rose(2);
        let p = Partition::new(vec![vec![eid("e")], vec![eid("f")]]);
        let g = in_split(&rose, &vid("v"), &p).unwrap();
        assert_eq!(
            edge_set(&g),
            [
                ("e#1".to_string(), "v_1".to_string(), "v_1".to_string()),
                ("e#2".to_string(), "v_2".to_string(), "v_1".to_string()),
                ("f#1".to_string(), "v_1".to_string(), "v_2".to_string()),
                ("f#2".to_string(), "v_2".to_string(), "v_2".to_string()),
            ]
            .into()
        );
    }

    #[test]
    fn in_split_single_block_renames() {
        let e = fixtures::loop_tail();
        let p = Partition::new(vec![vec![eid("l")]]);
        let g = in_split(&e, &vid("v1"), &p).unwrap();
        assert!(are_isomorphic(&g, &e));
        assert!(g.has_vertex(&vid("v1_1")));
    }

    #[test]
    fn in_split_rejects_bad_input() {
        let rose = fixtures::rose(2);
        let missing = Partition::new(vec![vec![eid("e")]]);
        assert!(matches!(
            in_split(&rose, &vid("v"), &missing),
            Err(Error::BadPartition(_))
        ));
        let a2 = fixtures::line(2);
        assert!(matches!(
            in_split(&a2, &vid("v1"), &Partition::new(vec![])),
            Err(Error::SourceVertex(_))
        ));
    }

    #[test]
    fn out_split_rose_two_blocks() {
        let rose = fixtures::rose(2);
        let p = Partition::new(vec![vec![eid("e")], vec![eid("f")]]);
        let g = out_split(&rose, &vid("v"), &p).unwrap();
        assert_eq!(
            edge_set(&g),
            [
                ("e^1".to_string(), "v^1".to_string(), "v^1".to_string()),
                ("e^2".to_string(), "v^1".to_string(), "v^2".to_string()),
                ("f^1".to_string(), "v^2".to_string(), "v^1".to_string()),
                ("f^2".to_string(), "v^2".to_string(), "v^2".to_string()),
            ]
            .into()
        );
        assert!(matches!(
            out_split(&fixtures::line(2), &vid("v0"), &p),
            Err(Error::SinkVertex(_))
        ));
    }

    #[test]
    fn hair_extension_shapes() {
        let base = fixtures::loop_tail();
        let spec = HairSpec(
            [(vid("v1"), 3), (vid("v2"), 2)].into_iter().collect(),
        );
        let g = hair_extend(&base, &spec).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 5);
        assert!(g.edge(&eid("e_v1^2")).is_some());
        assert_eq!(g.edge(&eid("e_v1^1")).unwrap().dst, vid("v1"));
        assert!(g.is_complete_subgraph(&base).unwrap());

        // All-ones is the identity.
        assert_eq!(m_n_graph(&base, 1).unwrap(), base);
        // Uniform hair on the trivial graph gives a line.
        assert!(are_isomorphic(
            &m_n_graph(&Graph::trivial(), 4).unwrap(),
            &fixtures::line(4)
        ));
    }

    #[test]
    fn hair_spec_must_cover_all_vertices() {
        let base = fixtures::loop_tail();
        let partial = HairSpec([(vid("v1"), 2)].into_iter().collect());
        assert!(matches!(
            hair_extend(&base, &partial),
            Err(Error::BadSpec(_))
        ));
        let zero = HairSpec(
            [(vid("v1"), 0), (vid("v2"), 1)].into_iter().collect(),
        );
        assert!(matches!(hair_extend(&base, &zero), Err(Error::BadSpec(_))));
    }

    #[test]
    fn line_graph_shape() {
        let a4 = line_graph(4).unwrap();
        assert_eq!(a4.vertex_count(), 4);
        assert_eq!(a4.edge_count(), 3);
        assert!(a4.is_acyclic());
        assert_eq!(a4.vertices()[0], vid("v3"));
        assert!(line_graph(0).is_err());
    }
}
