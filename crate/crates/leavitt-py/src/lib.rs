//! Python bindings for the core crate. Graphs cross the boundary as an
//! opaque immutable handle; every report comes back as plain dicts, lists,
//! and tuples so the Python side needs no wrapper classes of its own.
//! Library errors surface as `ValueError` carrying the original message.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use leavitt::algebra::{normal_form, Gf, Scalar};
use leavitt::monoid::{congruent_within, MonoidElement, Verdict};
use leavitt::moves::{self, HairSpec, Partition};
use leavitt::projective::ProjectiveClass;
use leavitt::text;
use leavitt::{EdgeId, VertexId};

fn domain(e: leavitt::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vertex(label: &str) -> PyResult<VertexId> {
    VertexId::new(label).map_err(domain)
}

fn vertex_counts(m: BTreeMap<String, u64>) -> PyResult<BTreeMap<VertexId, u64>> {
    m.into_iter().map(|(k, n)| Ok((vertex(&k)?, n))).collect()
}

fn monoid_element(g: &leavitt::Graph, m: BTreeMap<String, u64>) -> PyResult<MonoidElement> {
    let x = MonoidElement::new(vertex_counts(m)?).map_err(domain)?;
    x.check_supported(g).map_err(domain)?;
    Ok(x)
}

fn counts_out(x: &MonoidElement) -> BTreeMap<String, u64> {
    x.entries().map(|(v, n)| (v.to_string(), n)).collect()
}

fn trace_out(trace: &[moves::MoveRecord]) -> Vec<(String, String)> {
    trace
        .iter()
        .map(|m| (m.kind.to_string(), m.vertex.to_string()))
        .collect()
}

/// Immutable directed graph handle. Moves return new graphs.
#[pyclass(frozen, skip_from_py_object)]
#[derive(Clone)]
struct Graph {
    inner: leavitt::Graph,
}

impl Graph {
    fn wrap(inner: leavitt::Graph) -> Self {
        Graph { inner }
    }
}

#[pymethods]
impl Graph {
    /// Graph(vertices, edges) with edges given as (id, source, range) triples.
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> PyResult<Self> {
        let vs: Vec<&str> = vertices.iter().map(String::as_str).collect();
        let es: Vec<(&str, &str, &str)> = edges
            .iter()
            .map(|(id, s, r)| (id.as_str(), s.as_str(), r.as_str()))
            .collect();
        Ok(Graph::wrap(leavitt::Graph::build(&vs, &es).map_err(domain)?))
    }

    #[staticmethod]
    fn from_json(data: &str) -> PyResult<Self> {
        serde_json::from_str(data)
            .map(Graph::wrap)
            .map_err(|e| PyValueError::new_err(format!("cannot parse graph: {e}")))
    }

    /// The line graph A_n with n vertices.
    #[staticmethod]
    fn line(n: u64) -> PyResult<Self> {
        Ok(Graph::wrap(moves::line_graph(n).map_err(domain)?))
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string_pretty(&self.inner).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    fn vertices(&self) -> Vec<String> {
        self.inner.vertices().iter().map(|v| v.to_string()).collect()
    }

    fn edges(&self) -> Vec<(String, String, String)> {
        self.inner
            .edges()
            .iter()
            .map(|e| (e.id.to_string(), e.src.to_string(), e.dst.to_string()))
            .collect()
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn is_trivial(&self) -> bool {
        self.inner.is_trivial()
    }

    fn is_acyclic(&self) -> bool {
        self.inner.is_acyclic()
    }

    fn is_totally_looped(&self) -> bool {
        self.inner.is_totally_looped()
    }

    /// Flags for one vertex: sink, source, isolated, regular, base_of_loop.
    fn classify(&self, v: &str) -> PyResult<BTreeMap<String, bool>> {
        let c = self.inner.classify_vertex(&vertex(v)?).map_err(domain)?;
        Ok(BTreeMap::from([
            ("sink".to_string(), c.is_sink),
            ("source".to_string(), c.is_source),
            ("isolated".to_string(), c.is_isolated),
            ("regular".to_string(), c.is_regular),
            ("base_of_loop".to_string(), c.is_base_of_loop),
        ]))
    }

    fn collapse(&self, v: &str) -> PyResult<Graph> {
        Ok(Graph::wrap(
            moves::collapse(&self.inner, &vertex(v)?).map_err(domain)?,
        ))
    }

    fn source_eliminate(&self, v: &str) -> PyResult<Graph> {
        Ok(Graph::wrap(
            moves::source_eliminate(&self.inner, &vertex(v)?).map_err(domain)?,
        ))
    }

    fn move_r(&self, v: &str) -> PyResult<Graph> {
        Ok(Graph::wrap(
            moves::move_r(&self.inner, &vertex(v)?).map_err(domain)?,
        ))
    }

    /// Partition blocks list the incoming edge ids of `v`.
    fn in_split(&self, v: &str, blocks: Vec<Vec<String>>) -> PyResult<Graph> {
        let p = Partition::new(collect_blocks(&blocks)?);
        Ok(Graph::wrap(
            moves::in_split(&self.inner, &vertex(v)?, &p).map_err(domain)?,
        ))
    }

    /// Partition blocks list the outgoing edge ids of `v`.
    fn out_split(&self, v: &str, blocks: Vec<Vec<String>>) -> PyResult<Graph> {
        let p = Partition::new(collect_blocks(&blocks)?);
        Ok(Graph::wrap(
            moves::out_split(&self.inner, &vertex(v)?, &p).map_err(domain)?,
        ))
    }

    /// Attaches a strand of the given length at each listed vertex.
    fn hair(&self, lengths: BTreeMap<String, u64>) -> PyResult<Graph> {
        let spec = HairSpec(vertex_counts(lengths)?);
        Ok(Graph::wrap(
            moves::hair_extend(&self.inner, &spec).map_err(domain)?,
        ))
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.inner)
    }

    fn __eq__(&self, other: &Graph) -> bool {
        self.inner == other.inner
    }
}

fn collect_blocks(blocks: &[Vec<String>]) -> PyResult<Vec<Vec<EdgeId>>> {
    blocks
        .iter()
        .map(|b| b.iter().map(|id| EdgeId::new(id).map_err(domain)).collect())
        .collect()
}

/// Removes sources until the graph is source-free.
/// Returns (graph, removed_isolated, trace).
#[pyfunction]
fn sf_reduce(g: &Graph) -> (Graph, Vec<String>, Vec<(String, String)>) {
    let r = moves::sf_reduce(&g.inner);
    let removed = r.removed_isolated.iter().map(|v| v.to_string()).collect();
    (Graph::wrap(r.sf), removed, trace_out(&r.trace))
}

/// Reduces to a totally looped graph. Keys: k, removed_sinks, F, trace.
#[pyfunction]
fn decompose(py: Python<'_>, g: &Graph) -> PyResult<Py<PyDict>> {
    let rep = leavitt::pipeline::decompose(&g.inner).map_err(domain)?;
    let d = PyDict::new(py);
    d.set_item("k", rep.k)?;
    d.set_item(
        "removed_sinks",
        rep.removed_sinks
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>(),
    )?;
    d.set_item("F", Graph::wrap(rep.f))?;
    d.set_item("trace", trace_out(&rep.trace))?;
    Ok(d.unbind())
}

/// Corner of the algebra at the projective class `eps`.
/// Keys: line_sizes, T, G (None when no residual class survives), output, trace.
#[pyfunction]
fn corner(py: Python<'_>, g: &Graph, eps: BTreeMap<String, u64>) -> PyResult<Py<PyDict>> {
    let class = ProjectiveClass::new(vertex_counts(eps)?).map_err(domain)?;
    let rep = leavitt::pipeline::corner_graph(&g.inner, &class).map_err(domain)?;
    let d = PyDict::new(py);
    d.set_item("line_sizes", rep.line_sizes.clone())?;
    d.set_item(
        "T",
        rep.t.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    )?;
    d.set_item("G", rep.g.clone().map(Graph::wrap))?;
    d.set_item("output", Graph::wrap(rep.output))?;
    let steps: Vec<(String, String, BTreeMap<String, u64>)> = rep
        .trace
        .iter()
        .map(|s| {
            let after = s
                .class_after
                .iter()
                .map(|(v, &n)| (v.to_string(), n))
                .collect();
            (s.mv.kind.to_string(), s.mv.vertex.to_string(), after)
        })
        .collect();
    d.set_item("trace", steps)?;
    Ok(d.unbind())
}

/// Bounded congruence search between two vertex multisets.
/// Returns (verdict, witness, states_explored) with the witness present
/// only on an equivalent verdict.
#[pyfunction(signature = (g, a, b, max_states = 100_000))]
fn monoid_eq(
    g: &Graph,
    a: BTreeMap<String, u64>,
    b: BTreeMap<String, u64>,
    max_states: usize,
) -> PyResult<(String, Option<Vec<BTreeMap<String, u64>>>, usize)> {
    let a = monoid_element(&g.inner, a)?;
    let b = monoid_element(&g.inner, b)?;
    let status = congruent_within(&g.inner, &a, &b, max_states).map_err(domain)?;
    let label = status.verdict.label().to_string();
    let witness = match &status.verdict {
        Verdict::Equivalent { witness } => Some(witness.iter().map(counts_out).collect()),
        _ => None,
    };
    Ok((label, witness, status.states_explored))
}

fn eval_over<S: Scalar>(g: &leavitt::Graph, expr: &str) -> PyResult<String> {
    let element = text::parse_element::<S>(g, expr).map_err(domain)?;
    let reduced = normal_form(g, &element).map_err(domain)?;
    Ok(text::render_element(&reduced))
}

/// Parses an algebra expression, reduces it to normal form, and renders it.
/// Characteristic 0 works over the rationals, a prime p in {2,3,5,7,11,13}
/// over the field with p elements.
#[pyfunction(signature = (g, expr, characteristic = 0))]
fn algebra_eval(g: &Graph, expr: &str, characteristic: u64) -> PyResult<String> {
    match characteristic {
        0 => eval_over::<num_rational::BigRational>(&g.inner, expr),
        2 => eval_over::<Gf<2>>(&g.inner, expr),
        3 => eval_over::<Gf<3>>(&g.inner, expr),
        5 => eval_over::<Gf<5>>(&g.inner, expr),
        7 => eval_over::<Gf<7>>(&g.inner, expr),
        11 => eval_over::<Gf<11>>(&g.inner, expr),
        13 => eval_over::<Gf<13>>(&g.inner, expr),
        other => Err(PyValueError::new_err(format!(
            "unsupported characteristic {other}: use 0 or one of 2,3,5,7,11,13"
        ))),
    }
}

/// Label-insensitive graph isomorphism.
#[pyfunction]
fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    leavitt::iso::are_isomorphic(&a.inner, &b.inner)
}

#[pymodule]
fn leavitt_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_function(wrap_pyfunction!(sf_reduce, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(corner, m)?)?;
    m.add_function(wrap_pyfunction!(monoid_eq, m)?)?;
    m.add_function(wrap_pyfunction!(algebra_eval, m)?)?;
    m.add_function(wrap_pyfunction!(are_isomorphic, m)?)?;
    Ok(())
}
