//! Algebra homomorphisms given on generators, and the three explicit maps
//! the rest of the crate needs: the inverse ψ of a Move (R), the in-split
//! map π, and the corner isomorphism Φ of a hair extension.
//!
//! A map stores one image per generator of its source graph and is extended
//! multiplicatively. Nothing here certifies that a map is well defined;
//! [`verify_generator_map`] checks exactly that, by pushing every defining
//! relation of the source through the map and normal-forming in the target.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::moves::{composite_id, in_split, move_r, Partition};
use crate::projective::HairExtension;

use super::element::{multiply, normal_form, AlgebraElement, Monomial, PathTerm};
use super::free::{defining_relations, FreeElement, FreeGen};
use super::scalar::Scalar;

#[derive(Clone, Debug)]
pub struct GeneratorMap<S: Scalar> {
    pub on_vertices: BTreeMap<VertexId, AlgebraElement<S>>,
    pub on_edges: BTreeMap<EdgeId, AlgebraElement<S>>,
    pub on_ghost_edges: BTreeMap<EdgeId, AlgebraElement<S>>,
}

impl<S: Scalar> GeneratorMap<S> {
    pub fn empty() -> Self {
        GeneratorMap {
            on_vertices: BTreeMap::new(),
            on_edges: BTreeMap::new(),
            on_ghost_edges: BTreeMap::new(),
        }
    }

    /// The identity map of `L(g)`, given on generators.
    pub fn identity(g: &Graph) -> Result<Self> {
        let mut m = GeneratorMap::empty();
        for v in g.vertices() {
            m.on_vertices
                .insert(v.clone(), AlgebraElement::vertex(g, v)?);
        }
        for e in g.edges() {
            m.on_edges
                .insert(e.id.clone(), AlgebraElement::real_edge(g, &e.id)?);
            m.on_ghost_edges
                .insert(e.id.clone(), AlgebraElement::ghost_edge(g, &e.id)?);
        }
        Ok(m)
    }

    /// Inserts the image of an edge together with the starred image of its
    /// adjoint.
    pub fn set_edge(&mut self, e: EdgeId, image: AlgebraElement<S>) {
        self.on_ghost_edges.insert(e.clone(), image.star());
        self.on_edges.insert(e, image);
    }

    pub fn image_of(&self, gen: &FreeGen) -> Result<&AlgebraElement<S>> {
        match gen {
            FreeGen::Vertex(v) => self
                .on_vertices
                .get(v)
                .ok_or_else(|| Error::UnknownVertex(v.clone())),
            FreeGen::Edge(e) => self
                .on_edges
                .get(e)
                .ok_or_else(|| Error::UnknownEdge(e.to_string())),
            FreeGen::Ghost(e) => self
                .on_ghost_edges
                .get(e)
                .ok_or_else(|| Error::UnknownEdge(format!("{e}*"))),
        }
    }

    /// Multiplicative extension: each word becomes the product of its letter
    /// images in `L(dst)`, the empty word becomes 1.
    pub fn evaluate(&self, dst: &Graph, x: &FreeElement<S>) -> Result<AlgebraElement<S>> {
        let mut acc = AlgebraElement::zero();
        for (word, c) in x.terms() {
            let mut prod = AlgebraElement::one(dst);
            for gen in word {
                prod = multiply(dst, &prod, self.image_of(gen)?)?;
                if prod.is_zero() {
                    break;
                }
            }
            acc = acc.add(&prod.scale(c));
        }
        Ok(acc)
    }

    /// Generators of `src` that have no image.
    fn missing_on(&self, src: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        for v in src.vertices() {
            if !self.on_vertices.contains_key(v) {
                out.push(format!("no image for vertex {v}"));
            }
        }
        for e in src.edges() {
            if !self.on_edges.contains_key(&e.id) {
                out.push(format!("no image for edge {}", e.id));
            }
            if !self.on_ghost_edges.contains_key(&e.id) {
                out.push(format!("no image for ghost edge {}*", e.id));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapReport {
    pub ok: bool,
    pub failures: Vec<String>,
}

/// Checks that `m` defines a homomorphism `L(src) -> L(dst)`: every defining
/// relation of `src` must evaluate to zero, and the image of 1 must be an
/// idempotent. Failures are reported, not raised.
pub fn verify_generator_map<S: Scalar>(
    src: &Graph,
    dst: &Graph,
    m: &GeneratorMap<S>,
) -> Result<MapReport> {
    let mut failures = m.missing_on(src);
    if failures.is_empty() {
        for rel in defining_relations::<S>(src) {
            let image = m.evaluate(dst, &rel.element)?;
            let reduced = normal_form(dst, &image)?;
            if !reduced.is_zero() {
                failures.push(format!("relation {} does not vanish", rel.label));
            }
        }
        let mut one_image = AlgebraElement::zero();
        for v in src.vertices() {
            one_image = one_image.add(&m.on_vertices[v]);
        }
        let square = multiply(dst, &one_image, &one_image)?;
        if normal_form(dst, &square)? != normal_form(dst, &one_image)? {
            failures.push("image of 1 is not an idempotent".into());
        }
    }
    Ok(MapReport {
        ok: failures.is_empty(),
        failures,
    })
}

/// The map ψ that undoes a Move (R) at `w`: it sends generators of the moved
/// graph into the algebra of `e_graph`. Vertices and untouched edges map to
/// themselves; the composite of an edge `e` into `w` with the unique edge
/// `f` out of `w` maps to the length-2 path `ef`.
pub fn move_r_psi<S: Scalar>(e_graph: &Graph, w: &VertexId) -> Result<GeneratorMap<S>> {
    let moved = move_r(e_graph, w)?;
    let f = e_graph.out_edges(w).next().expect("checked by move_r");
    let mut m = GeneratorMap::empty();
    for u in moved.vertices() {
        m.on_vertices
            .insert(u.clone(), AlgebraElement::vertex(e_graph, u)?);
    }
    for e in e_graph.edges() {
        if e.dst == *w {
            let path = PathTerm::new(e_graph, e.src.clone(), vec![e.id.clone(), f.id.clone()])?;
            m.set_edge(composite_id(&e.id, &f.id), AlgebraElement::path(path));
        } else if e.id != f.id {
            m.set_edge(e.id.clone(), AlgebraElement::real_edge(e_graph, &e.id)?);
        }
    }
    Ok(m)
}

/// The map π from the algebra of `e_graph` into the algebra of its in-split
/// at `v`. Each vertex goes to itself except `v`, which goes to its first
/// copy. An edge into `v` from block i trades its endpoint for a sum over
/// the out-edges `f` of `v`, pairing the copy `f_i` against `f_1`; an edge
/// also emitted by `v` contributes through its first copy; everything away
/// from `v` is fixed. Adjoints are the starred images.
pub fn in_split_pi<S: Scalar>(
    e_graph: &Graph,
    v: &VertexId,
    p: &Partition,
) -> Result<GeneratorMap<S>> {
    let split = in_split(e_graph, v, p)?;
    let mut block_index: BTreeMap<EdgeId, usize> = BTreeMap::new();
    for (i, block) in p.blocks.iter().enumerate() {
        for id in block {
            block_index.insert(id.clone(), i + 1);
        }
    }
    let copy_vertex = |j: usize| VertexId::new(format!("{v}_{j}"));
    let copy_edge = |e: &EdgeId, j: usize| EdgeId::new(format!("{e}#{j}"));
    let emitted: Vec<EdgeId> = e_graph.out_edges(v).map(|e| e.id.clone()).collect();

    let mut m = GeneratorMap::empty();
    for u in e_graph.vertices() {
        let image = if u == v {
            AlgebraElement::vertex(&split, &copy_vertex(1)?)?
        } else {
            AlgebraElement::vertex(&split, u)?
        };
        m.on_vertices.insert(u.clone(), image);
    }
    for e in e_graph.edges() {
        let image = if e.dst == *v {
            let i = block_index[&e.id];
            let first = if e.src == *v {
                // Loops at v enter through their own first copy.
                copy_edge(&e.id, 1)?
            } else {
                e.id.clone()
            };
            if emitted.is_empty() {
                AlgebraElement::real_edge(&split, &first)?
            } else {
                let mut sum = AlgebraElement::zero();
                for f in &emitted {
                    let p_path = PathTerm::from_edges(
                        &split,
                        &[first.clone(), copy_edge(f, i)?],
                    )?;
                    let q_path = PathTerm::from_edges(&split, &[copy_edge(f, 1)?])?;
                    sum = sum.add(&AlgebraElement::monomial(
                        Monomial::new(p_path, q_path)?,
                        S::one(),
                    ));
                }
                sum
            }
        } else if e.src == *v {
            AlgebraElement::real_edge(&split, &copy_edge(&e.id, 1)?)?
        } else {
            AlgebraElement::real_edge(&split, &e.id)?
        };
        m.set_edge(e.id.clone(), image);
    }
    Ok(m)
}

/// The strand path of `g` descending from depth `y` over `v` to `v` itself.
/// Depth 0 is the empty path at `v`.
fn strand_path(g: &Graph, v: &VertexId, depth: u64) -> Result<PathTerm> {
    if depth == 0 {
        return PathTerm::new(g, v.clone(), Vec::new());
    }
    let start = VertexId::new(format!("{v}^{depth}"))?;
    let edges: Vec<EdgeId> = (1..=depth)
        .rev()
        .map(|k| EdgeId::new(format!("e_{v}^{k}")))
        .collect::<Result<_>>()?;
    PathTerm::new(g, start, edges)
}

fn base_vertex(h: &HairExtension, index: usize) -> Result<VertexId> {
    h.base()
        .vertices()
        .get(index.wrapping_sub(1))
        .cloned()
        .ok_or_else(|| Error::BadSpec(format!("no base vertex with index {index}")))
}

/// The corner isomorphism of a hair extension, one matrix entry at a time.
/// `indices = (i, y, j, z)` names the row `(v_i, depth y)` and the column
/// `(v_j, depth z)` where `v_i` is the i-th base vertex (1-based) and depth
/// counts steps up the strand, depth 0 being the base vertex itself. For
/// `x` in the corner `v_i L v_j` of the algebra of `h.total()`, the image is
/// `p_i^y x (p_j^z)*` computed in the algebra of `g_out`, where `p_i^y` is
/// the strand path from depth `y` down to `v_i`.
pub fn end_iso_phi<S: Scalar>(
    h: &HairExtension,
    g_out: &Graph,
    indices: (usize, u64, usize, u64),
    x: &AlgebraElement<S>,
) -> Result<AlgebraElement<S>> {
    let (i, y, j, z) = indices;
    let vi = base_vertex(h, i)?;
    let vj = base_vertex(h, j)?;

    let total = h.total();
    let reduced = normal_form(total, x)?;
    let left = AlgebraElement::vertex(total, &vi)?;
    let right = AlgebraElement::vertex(total, &vj)?;
    let projected = multiply(total, &multiply(total, &left, &reduced)?, &right)?;
    if projected != reduced {
        return Err(Error::NotInCorner);
    }

    // The corner lives over the shared part of both graphs, so the terms
    // can be re-read over g_out verbatim.
    let mut carried = AlgebraElement::zero();
    for (mono, c) in reduced.terms() {
        let p = PathTerm::new(g_out, mono.p().start().clone(), mono.p().edges().to_vec())
            .map_err(|_| Error::NotInCorner)?;
        let q = PathTerm::new(g_out, mono.q().start().clone(), mono.q().edges().to_vec())
            .map_err(|_| Error::NotInCorner)?;
        carried = carried.add(&AlgebraElement::monomial(Monomial::new(p, q)?, c.clone()));
    }

    let row = AlgebraElement::path(strand_path(g_out, &vi, y)?);
    let col = AlgebraElement::path(strand_path(g_out, &vj, z)?).star();
    multiply(g_out, &multiply(g_out, &row, &carried)?, &col)
}
