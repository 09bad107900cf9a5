//! Finite directed multigraphs.
//!
//! A graph holds an ordered vertex set and an ordered edge list. Parallel
//! edges and loops are allowed. For an edge `e`, `src(e)` is the vertex
//! emitting `e` and `dst(e)` the vertex receiving it.
//!
//! Vertex vocabulary used throughout the crate:
//! * sink: emits no edge
//! * source: receives no edge
//! * isolated: both a sink and a source
//! * regular: emits at least one edge
//! * base of a loop: emits an edge to itself
//!
//! Wherever an operation must pick among several vertices or edges, ties are
//! broken lexicographically (byte-wise) on labels, so every operation in the
//! crate is deterministic.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn valid_token(s: &str) -> bool {
    // Labels stay free of separators so the textual syntaxes of the CLI
    // (multisets "v:2,w:1", partitions "e|f", element brackets) never need
    // quoting or escapes.
    !s.is_empty()
        && !s
            .chars()
            .any(|c| c.is_whitespace() || c == ',' || c == ':' || c == '|')
}

/// Vertex label. Nonempty, no whitespace, no `,`, `:` or `|`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexId(String);

impl VertexId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if valid_token(&label) {
            Ok(VertexId(label))
        } else {
            Err(Error::InvalidToken(label))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VertexId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        VertexId::new(s)
    }
}

impl From<VertexId> for String {
    fn from(v: VertexId) -> String {
        v.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{:?}", self.0)
    }
}

/// Edge label. Same token rules as [`VertexId`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct EdgeId(String);

impl EdgeId {
    pub fn new(label: impl Into<String>) -> Result<Self> {
        let label = label.into();
        if valid_token(&label) {
            Ok(EdgeId(label))
        } else {
            Err(Error::InvalidToken(label))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for EdgeId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        EdgeId::new(s)
    }
}

impl From<EdgeId> for String {
    fn from(e: EdgeId) -> String {
        e.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{:?}", self.0)
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub src: VertexId,
    pub dst: VertexId,
}

impl Edge {
    pub fn new(id: &str, src: &str, dst: &str) -> Result<Self> {
        Ok(Edge {
            id: EdgeId::new(id)?,
            src: VertexId::new(src)?,
            dst: VertexId::new(dst)?,
        })
    }

    pub fn is_loop(&self) -> bool {
        self.src == self.dst
    }
}

#[derive(Serialize, Deserialize)]
struct GraphData {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
}

impl From<Graph> for GraphData {
    fn from(g: Graph) -> GraphData {
        GraphData {
            vertices: g.vertices,
            edges: g.edges,
        }
    }
}

impl TryFrom<GraphData> for Graph {
    type Error = Error;
    fn try_from(d: GraphData) -> Result<Graph> {
        Graph::new(d.vertices, d.edges)
    }
}

/// Classification flags of a single vertex.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct VertexClass {
    pub is_sink: bool,
    pub is_source: bool,
    pub is_isolated: bool,
    pub is_regular: bool,
    pub is_base_of_loop: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SubsetProperties {
    pub hereditary: bool,
    pub saturated: bool,
}

/// A finite directed multigraph. Immutable once constructed; every move
/// produces a fresh graph. The JSON form is
/// `{"vertices": [...], "edges": [{"id", "src", "dst"}, ...]}`.
#[derive(Clone, Serialize, Deserialize)]
#[serde(try_from = "GraphData", into = "GraphData")]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    #[serde(skip)]
    vset: BTreeSet<VertexId>,
    #[serde(skip)]
    eidx: BTreeMap<EdgeId, usize>,
    // Adjacency lists hold edge indices sorted by edge id, so iteration is
    // always in lexicographic edge order.
    #[serde(skip)]
    out: BTreeMap<VertexId, Vec<usize>>,
    #[serde(skip)]
    inc: BTreeMap<VertexId, Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({} vertices, {} edges)", self.vertices.len(), self.edges.len())
    }
}

impl Graph {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Result<Self> {
        let mut vset = BTreeSet::new();
        for v in &vertices {
            if !vset.insert(v.clone()) {
                return Err(Error::DuplicateVertex(v.clone()));
            }
        }
        let mut eidx = BTreeMap::new();
        let mut out: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        let mut inc: BTreeMap<VertexId, Vec<usize>> = BTreeMap::new();
        for v in &vertices {
            out.insert(v.clone(), Vec::new());
            inc.insert(v.clone(), Vec::new());
        }
        for (i, e) in edges.iter().enumerate() {
            if eidx.insert(e.id.clone(), i).is_some() {
                return Err(Error::DuplicateEdge(e.id.to_string()));
            }
            if !vset.contains(&e.src) {
                return Err(Error::UnknownVertex(e.src.clone()));
            }
            if !vset.contains(&e.dst) {
                return Err(Error::UnknownVertex(e.dst.clone()));
            }
        }
        for &i in eidx.values() {
            out.get_mut(&edges[i].src).unwrap().push(i);
            inc.get_mut(&edges[i].dst).unwrap().push(i);
        }
        Ok(Graph {
            vertices,
            edges,
            vset,
            eidx,
            out,
            inc,
        })
    }

    /// Convenience constructor from plain string labels.
    pub fn build(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let vs = vertices
            .iter()
            .map(|v| VertexId::new(*v))
            .collect::<Result<Vec<_>>>()?;
        let es = edges
            .iter()
            .map(|(id, s, d)| Edge::new(id, s, d))
            .collect::<Result<Vec<_>>>()?;
        Graph::new(vs, es)
    }

    /// The graph with no vertices. Only raw source elimination can reach it;
    /// the pipeline never consumes one.
    pub fn empty() -> Self {
        Graph::new(Vec::new(), Vec::new()).unwrap()
    }

    /// The one-vertex edgeless graph, used as the conventional stand-in for
    /// a graph emptied out by source elimination.
    pub fn trivial() -> Self {
        Graph::build(&["*"], &[]).unwrap()
    }

    /// One vertex and no edges, up to the label.
    pub fn is_trivial(&self) -> bool {
        self.vertices.len() == 1 && self.edges.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vset.contains(v)
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&Edge> {
        self.eidx.get(id).map(|&i| &self.edges[i])
    }

    fn check_vertex(&self, v: &VertexId) -> Result<()> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.clone()))
        }
    }

    /// Edges emitted by `v`, in lexicographic edge-id order.
    pub fn out_edges(&self, v: &VertexId) -> impl Iterator<Item = &Edge> {
        self.out
            .get(v)
            .map(|ix| ix.as_slice())
            .unwrap_or(&[])
            .iter()
            .map(move |&i| &self.edges[i])
    }

    /// Edges received by `v`, in lexicographic edge-id order.
    pub fn in_edges(&self, v: &VertexId) -> impl Iterator<Item = &Edge> {
        self.inc
            .get(v)
            .map(|ix| ix.as_slice())
            .unwrap_or(&[])
            .iter()
            .map(move |&i| &self.edges[i])
    }

    pub fn out_degree(&self, v: &VertexId) -> usize {
        self.out.get(v).map_or(0, |x| x.len())
    }

    pub fn in_degree(&self, v: &VertexId) -> usize {
        self.inc.get(v).map_or(0, |x| x.len())
    }

    pub fn is_sink(&self, v: &VertexId) -> bool {
        self.out_degree(v) == 0
    }

    pub fn is_source(&self, v: &VertexId) -> bool {
        self.in_degree(v) == 0
    }

    pub fn is_isolated(&self, v: &VertexId) -> bool {
        self.is_sink(v) && self.is_source(v)
    }

    pub fn is_regular(&self, v: &VertexId) -> bool {
        self.out_degree(v) > 0
    }

    pub fn has_loop_at(&self, v: &VertexId) -> bool {
        self.out_edges(v).any(|e| e.is_loop())
    }

    pub fn classify_vertex(&self, v: &VertexId) -> Result<VertexClass> {
        self.check_vertex(v)?;
        Ok(VertexClass {
            is_sink: self.is_sink(v),
            is_source: self.is_source(v),
            is_isolated: self.is_isolated(v),
            is_regular: self.is_regular(v),
            is_base_of_loop: self.has_loop_at(v),
        })
    }

    /// Smallest vertex set containing `s` and closed under following edges
    /// forward: if a vertex is in the closure, everything it emits to is too.
    pub fn hereditary_closure(&self, s: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>> {
        for v in s {
            self.check_vertex(v)?;
        }
        let mut closure = s.clone();
        let mut queue: VecDeque<VertexId> = s.iter().cloned().collect();
        while let Some(v) = queue.pop_front() {
            for e in self.out_edges(&v) {
                if closure.insert(e.dst.clone()) {
                    queue.push_back(e.dst.clone());
                }
            }
        }
        Ok(closure)
    }

    /// `hereditary`: the set is closed under ranges of emitted edges.
    /// `saturated`: every regular vertex all of whose edge ranges lie in the
    /// set is itself in the set.
    pub fn subset_properties(&self, s: &BTreeSet<VertexId>) -> Result<SubsetProperties> {
        for v in s {
            self.check_vertex(v)?;
        }
        let hereditary = self
            .edges
            .iter()
            .all(|e| !s.contains(&e.src) || s.contains(&e.dst));
        let saturated = self.vertices.iter().all(|v| {
            if !self.is_regular(v) || s.contains(v) {
                return true;
            }
            !self.out_edges(v).all(|e| s.contains(&e.dst))
        });
        Ok(SubsetProperties {
            hereditary,
            saturated,
        })
    }

    /// Every regular vertex is the base of a loop.
    pub fn is_totally_looped(&self) -> bool {
        self.vertices
            .iter()
            .all(|v| !self.is_regular(v) || self.has_loop_at(v))
    }

    /// No directed cycle; loops count as cycles.
    pub fn is_acyclic(&self) -> bool {
        // Kahn peeling on out-degree.
        let mut deg: BTreeMap<&VertexId, usize> =
            self.vertices.iter().map(|v| (v, self.out_degree(v))).collect();
        let mut queue: VecDeque<&VertexId> = deg
            .iter()
            .filter(|(_, &d)| d == 0)
            .map(|(&v, _)| v)
            .collect();
        let mut seen = 0usize;
        while let Some(v) = queue.pop_front() {
            seen += 1;
            for e in self.in_edges(v) {
                let d = deg.get_mut(&e.src).unwrap();
                *d -= 1;
                if *d == 0 {
                    queue.push_back(&e.src);
                }
            }
        }
        seen == self.vertices.len()
    }

    /// The subgraph on a hereditary vertex set `h`: vertices `h`, edges all
    /// edges emitted by `h`. Heredity guarantees the ranges stay inside.
    pub fn restriction(&self, h: &BTreeSet<VertexId>) -> Result<Graph> {
        for v in h {
            self.check_vertex(v)?;
        }
        for e in &self.edges {
            if h.contains(&e.src) && !h.contains(&e.dst) {
                return Err(Error::NotHereditary(e.src.clone()));
            }
        }
        let vertices = self
            .vertices
            .iter()
            .filter(|v| h.contains(v))
            .cloned()
            .collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| h.contains(&e.src))
            .cloned()
            .collect();
        Graph::new(vertices, edges)
    }

    /// `sub` is a complete subgraph when every vertex of `sub` that emits
    /// edges in `sub` emits exactly the same edges there as in `self`.
    /// Errors if `sub` is not even a subgraph.
    pub fn is_complete_subgraph(&self, sub: &Graph) -> Result<bool> {
        for v in sub.vertices() {
            if !self.has_vertex(v) {
                return Err(Error::NotSubgraph(format!("vertex {v} is not present")));
            }
        }
        for e in sub.edges() {
            match self.edge(&e.id) {
                Some(mine) if mine.src == e.src && mine.dst == e.dst => {}
                Some(_) => {
                    return Err(Error::NotSubgraph(format!(
                        "edge {} has different endpoints",
                        e.id
                    )))
                }
                None => return Err(Error::NotSubgraph(format!("edge {} is not present", e.id))),
            }
        }
        for v in sub.vertices() {
            if sub.out_degree(v) == 0 {
                continue;
            }
            let theirs: BTreeSet<&EdgeId> = sub.out_edges(v).map(|e| &e.id).collect();
            let mine: BTreeSet<&EdgeId> = self.out_edges(v).map(|e| &e.id).collect();
            if theirs != mine {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Shortest directed path from `v` to `w` as an edge-id sequence, with
    /// ties broken lexicographically on the sequence. `Some(vec![])` when
    /// `v == w`, `None` when `w` is unreachable. A shortest path never
    /// repeats a vertex.
    pub fn shortest_simple_path(&self, v: &VertexId, w: &VertexId) -> Result<Option<Vec<EdgeId>>> {
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if v == w {
            return Ok(Some(Vec::new()));
        }
        // Backward distances to w, then a greedy forward walk that always
        // takes the least edge still on a shortest path.
        let mut dist: BTreeMap<&VertexId, usize> = BTreeMap::new();
        dist.insert(w, 0);
        let mut queue = VecDeque::new();
        queue.push_back(w.clone());
        while let Some(u) = queue.pop_front() {
            let du = dist[&u];
            for e in self.in_edges(&u).collect::<Vec<_>>() {
                if !dist.contains_key(&e.src) {
                    dist.insert(&e.src, du + 1);
                    queue.push_back(e.src.clone());
                }
            }
        }
        let Some(&d0) = dist.get(v) else {
            return Ok(None);
        };
        let mut path = Vec::with_capacity(d0);
        let mut cur = v.clone();
        let mut remaining = d0;
        while remaining > 0 {
            let step = self
                .out_edges(&cur)
                .find(|e| dist.get(&e.dst) == Some(&(remaining - 1)))
                .expect("distance labels admit a continuation");
            path.push(step.id.clone());
            cur = step.dst.clone();
            remaining -= 1;
        }
        Ok(Some(path))
    }

    /// GraphViz rendering with edge ids as labels. Deterministic: vertices
    /// and edges appear in stored order.
    pub fn to_dot(&self) -> String {
        fn quote(s: &str) -> String {
            format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
        }
        let mut dot = String::from("digraph {\n  rankdir=LR;\n");
        for v in &self.vertices {
            dot.push_str(&format!("  {};\n", quote(v.as_str())));
        }
        for e in &self.edges {
            dot.push_str(&format!(
                "  {} -> {} [label={}];\n",
                quote(e.src.as_str()),
                quote(e.dst.as_str()),
                quote(e.id.as_str())
            ));
        }
        dot.push_str("}\n");
        dot
    }
}

/// Disjoint union of graphs. Labels are namespaced `<partIndex>.<label>` so
/// parts never clash; the empty union is the empty graph.
pub fn disjoint_union(parts: &[Graph]) -> Graph {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for (i, g) in parts.iter().enumerate() {
        for v in g.vertices() {
            vertices.push(VertexId::new(format!("{i}.{v}")).unwrap());
        }
        for e in g.edges() {
            edges.push(Edge {
                id: EdgeId::new(format!("{i}.{}", e.id)).unwrap(),
                src: VertexId::new(format!("{i}.{}", e.src)).unwrap(),
                dst: VertexId::new(format!("{i}.{}", e.dst)).unwrap(),
            });
        }
    }
    Graph::new(vertices, edges).expect("namespaced parts cannot clash")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn vset(names: &[&str]) -> BTreeSet<VertexId> {
        names.iter().map(|s| vid(s)).collect()
    }

    #[test]
    fn token_rules() {
        assert!(VertexId::new("v1^2").is_ok());
        assert!(VertexId::new("[e2e1]").is_ok());
        assert!(VertexId::new("").is_err());
        assert!(VertexId::new("a b").is_err());
        assert!(VertexId::new("a,b").is_err());
        assert!(VertexId::new("a:b").is_err());
        assert!(VertexId::new("a|b").is_err());
    }

    #[test]
    fn construction_rejects_duplicates_and_dangling() {
        assert!(matches!(
            Graph::build(&["v", "v"], &[]),
            Err(Error::DuplicateVertex(_))
        ));
        assert!(matches!(
            Graph::build(&["v"], &[("e", "v", "v"), ("e", "v", "v")]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            Graph::build(&["v"], &[("e", "v", "w")]),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn classify_sink_of_iso_base() {
        let f = fixtures::iso_base();
        let c = f.classify_vertex(&vid("v3")).unwrap();
        assert!(c.is_sink);
        assert!(!c.is_source);
        assert!(!c.is_isolated);
        assert!(!c.is_regular);
        assert!(!c.is_base_of_loop);
        assert!(matches!(
            f.classify_vertex(&vid("nope")),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn hereditary_closure_of_v1() {
        let f = fixtures::iso_base();
        let t = f.hereditary_closure(&vset(&["v1"])).unwrap();
        assert_eq!(t, vset(&["v1", "v2", "v3"]));
    }

    #[test]
    fn closure_is_idempotent_and_monotone() {
        let f = fixtures::collapse_example();
        let s = vset(&["v2"]);
        let t = f.hereditary_closure(&s).unwrap();
        assert_eq!(f.hereditary_closure(&t).unwrap(), t);
        assert!(t.is_superset(&s));
    }

    #[test]
    fn subset_properties_on_a2() {
        let a2 = fixtures::line(2);
        let p = a2.subset_properties(&vset(&["v1"])).unwrap();
        assert!(!p.hereditary);
        assert!(p.saturated);
        let q = a2.subset_properties(&vset(&["v0"])).unwrap();
        assert!(q.hereditary);
        assert!(!q.saturated);
    }

    #[test]
    fn totally_looped_examples() {
        assert!(fixtures::iso_base().is_totally_looped());
        assert!(!fixtures::line(3).is_totally_looped());
        assert!(Graph::trivial().is_totally_looped());
    }

    #[test]
    fn restriction_checks_heredity() {
        let f = fixtures::iso_base();
        let g = f.restriction(&vset(&["v1", "v2", "v3"])).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 6);
        assert!(matches!(
            f.restriction(&vset(&["v1"])),
            Err(Error::NotHereditary(_))
        ));
        let a2 = fixtures::line(2);
        let r = a2.restriction(&vset(&["v0"])).unwrap();
        assert_eq!(r.vertex_count(), 1);
        assert_eq!(r.edge_count(), 0);
    }

    #[test]
    fn complete_subgraph_detection() {
        let f = fixtures::iso_base();
        let g = f.restriction(&vset(&["v1", "v2", "v3"])).unwrap();
        assert!(f.is_complete_subgraph(&g).unwrap());
        // Dropping one of v2's edges leaves an incomplete subgraph.
        let partial = Graph::build(
            &["v1", "v2", "v3"],
            &[
                ("l1", "v1", "v1"),
                ("a", "v1", "v2"),
                ("l2", "v2", "v2"),
                ("b", "v2", "v1"),
                ("c", "v2", "v3"),
            ],
        )
        .unwrap();
        assert!(!f.is_complete_subgraph(&partial).unwrap());
        let foreign = Graph::build(&["x"], &[]).unwrap();
        assert!(matches!(
            f.is_complete_subgraph(&foreign),
            Err(Error::NotSubgraph(_))
        ));
    }

    #[test]
    fn shortest_path_prefers_lex_least_edges() {
        let f = fixtures::iso_base();
        assert_eq!(
            f.shortest_simple_path(&vid("v1"), &vid("v3")).unwrap(),
            Some(vec![EdgeId::new("a").unwrap(), EdgeId::new("c").unwrap()])
        );
        assert_eq!(
            f.shortest_simple_path(&vid("v1"), &vid("v1")).unwrap(),
            Some(vec![])
        );
        assert_eq!(f.shortest_simple_path(&vid("v3"), &vid("v1")).unwrap(), None);
        // Two parallel routes of equal length: the lex-least edge sequence wins.
        let g = Graph::build(
            &["s", "m1", "m2", "t"],
            &[
                ("b", "s", "m1"),
                ("a", "s", "m2"),
                ("x", "m1", "t"),
                ("c", "m2", "t"),
            ],
        )
        .unwrap();
        assert_eq!(
            g.shortest_simple_path(&vid("s"), &vid("t")).unwrap(),
            Some(vec![EdgeId::new("a").unwrap(), EdgeId::new("c").unwrap()])
        );
    }

    #[test]
    fn acyclicity() {
        assert!(fixtures::line(4).is_acyclic());
        assert!(!fixtures::rose(2).is_acyclic());
        assert!(!fixtures::iso_base().is_acyclic());
        assert!(Graph::trivial().is_acyclic());
    }

    #[test]
    fn disjoint_union_namespaces() {
        let u = disjoint_union(&[fixtures::line(1), fixtures::line(1)]);
        assert_eq!(u.vertex_count(), 2);
        assert_eq!(u.edge_count(), 0);
        assert!(u.has_vertex(&vid("0.v0")));
        assert!(u.has_vertex(&vid("1.v0")));
        let u2 = disjoint_union(&[fixtures::line(2), fixtures::rose(2)]);
        assert_eq!(u2.vertex_count(), 3);
        assert_eq!(u2.edge_count(), 3);
        assert_eq!(disjoint_union(&[]).vertex_count(), 0);
    }

    #[test]
    fn json_round_trip() {
        let f = fixtures::collapse_example();
        let s = serde_json::to_string(&f).unwrap();
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert_eq!(serde_json::to_string(&back).unwrap(), s);
    }

    #[test]
    fn json_rejects_bad_graphs() {
        let bad = r#"{"vertices":["v"],"edges":[{"id":"e","src":"v","dst":"w"}]}"#;
        assert!(serde_json::from_str::<Graph>(bad).is_err());
        let bad_label = r#"{"vertices":["v w"],"edges":[]}"#;
        assert!(serde_json::from_str::<Graph>(bad_label).is_err());
    }

    #[test]
    fn dot_is_stable() {
        let a2 = fixtures::line(2);
        let dot = a2.to_dot();
        assert_eq!(
            dot,
            "digraph {\n  rankdir=LR;\n  \"v1\";\n  \"v0\";\n  \"v1\" -> \"v0\" [label=\"e1\"];\n}\n"
        );
    }
}
