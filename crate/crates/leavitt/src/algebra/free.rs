//! Formal words in the doubled generator set of a graph.
//!
//! The relations of the algebra live here rather than in monomial form:
//! a monomial `pq*` is already a product of generators, so writing a
//! relation like `e*f` as a monomial combination would silently evaluate
//! it to zero and there would be nothing left to push through a generator
//! map. A [`FreeElement`] keeps the letters separate; evaluating one
//! through a [`super::maps::GeneratorMap`] multiplies the letter images in
//! the target algebra, which is exactly the "extend multiplicatively" step
//! of the verification arguments.

use std::collections::BTreeMap;

use crate::graph::{EdgeId, Graph, VertexId};

use super::scalar::Scalar;

/// One generator letter: a vertex, an edge, or the adjoint of an edge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum FreeGen {
    Vertex(VertexId),
    Edge(EdgeId),
    Ghost(EdgeId),
}

/// A word in generator letters. Empty means the identity.
pub type FreeWord = Vec<FreeGen>;

/// A formal linear combination of words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeElement<S: Scalar> {
    terms: BTreeMap<FreeWord, S>,
}

impl<S: Scalar> FreeElement<S> {
    pub fn zero() -> Self {
        FreeElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn word(w: FreeWord) -> Self {
        FreeElement::from_terms([(w, S::one())])
    }

    pub fn gen(g: FreeGen) -> Self {
        FreeElement::word(vec![g])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (FreeWord, S)>) -> Self {
        let mut out = FreeElement::zero();
        for (w, c) in terms {
            out.insert(w, c);
        }
        out
    }

    fn insert(&mut self, w: FreeWord, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert(w.clone(), -c.clone());
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &S)> {
        self.terms.iter()
    }
}

/// A named instance of one defining relation, stated as LHS - RHS.
#[derive(Clone, Debug)]
pub struct Relation<S: Scalar> {
    pub label: String,
    pub element: FreeElement<S>,
}

/// Every instance of the four defining relations of the algebra of `g`:
///
/// 1. `v w = δ_{v,w} v` for vertices v, w
/// 2. `s(e) e = e = e r(e)` and the adjoint versions for each edge e
/// 3. `e* f = δ_{e,f} r(e)` for edges e, f
/// 4. `v = Σ_{e ∈ s⁻¹(v)} e e*` for each regular vertex v
pub fn defining_relations<S: Scalar>(g: &Graph) -> Vec<Relation<S>> {
    use FreeGen::{Edge, Ghost, Vertex};
    let mut out = Vec::new();
    let mut push = |label: String, element: FreeElement<S>| {
        out.push(Relation { label, element });
    };

    for v in g.vertices() {
        for w in g.vertices() {
            let prod = FreeElement::word(vec![Vertex(v.clone()), Vertex(w.clone())]);
            let rhs = if v == w {
                FreeElement::gen(Vertex(v.clone()))
            } else {
                FreeElement::zero()
            };
            push(format!("(1) {v}.{w}"), prod.sub(&rhs));
        }
    }

    for e in g.edges() {
        let real = FreeElement::gen(Edge(e.id.clone()));
        let ghost = FreeElement::gen(Ghost(e.id.clone()));
        push(
            format!("(2) s.{id}", id = e.id),
            FreeElement::word(vec![Vertex(e.src.clone()), Edge(e.id.clone())]).sub(&real),
        );
        push(
            format!("(2) {id}.r", id = e.id),
            FreeElement::word(vec![Edge(e.id.clone()), Vertex(e.dst.clone())]).sub(&real),
        );
        push(
            format!("(2) r.{id}*", id = e.id),
            FreeElement::word(vec![Vertex(e.dst.clone()), Ghost(e.id.clone())]).sub(&ghost),
        );
        push(
            format!("(2) {id}*.s", id = e.id),
            FreeElement::word(vec![Ghost(e.id.clone()), Vertex(e.src.clone())]).sub(&ghost),
        );
    }

    for e in g.edges() {
        for f in g.edges() {
            let prod = FreeElement::word(vec![Ghost(e.id.clone()), Edge(f.id.clone())]);
            let rhs = if e.id == f.id {
                FreeElement::gen(Vertex(e.dst.clone()))
            } else {
                FreeElement::zero()
            };
            push(format!("(3) {}*.{}", e.id, f.id), prod.sub(&rhs));
        }
    }

    for v in g.vertices() {
        if !g.is_regular(v) {
            continue;
        }
        let mut sum = FreeElement::zero();
        for e in g.out_edges(v) {
            sum = sum.add(&FreeElement::word(vec![
                Edge(e.id.clone()),
                Ghost(e.id.clone()),
            ]));
        }
        push(
            format!("(4) {v}"),
            FreeElement::gen(Vertex(v.clone())).sub(&sum),
        );
    }

    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn relation_census_for_the_trivial_graph() {
        let g = Graph::trivial();
        let rels = defining_relations::<BigRational>(&g);
        // One vertex, no edges: only the (1) instance v.v survives.
        assert_eq!(rels.len(), 1);
        assert!(rels[0].label.starts_with("(1)"));
    }

    #[test]
    fn relation_census_counts() {
        let g = crate::fixtures::rose(2);
        let rels = defining_relations::<BigRational>(&g);
        // 1 vertex pair, 4 per edge, 4 ghost-edge pairs, 1 regular vertex.
        assert_eq!(rels.len(), 1 + 8 + 4 + 1);
        assert!(rels.iter().any(|r| r.label == "(3) e*.f"));
        assert!(rels.iter().any(|r| r.label == "(4) v"));
    }

    #[test]
    fn sinks_contribute_no_relation_four() {
        let g = crate::fixtures::line(2);
        let rels = defining_relations::<BigRational>(&g);
        assert!(rels.iter().any(|r| r.label == "(4) v1"));
        assert!(!rels.iter().any(|r| r.label == "(4) v0"));
    }
}
