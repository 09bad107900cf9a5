//! Elements of the path algebra attached to a graph.
//!
//! An element is a finite linear combination of monomials `p q*` where `p`
//! and `q` are paths with the same range. Vertices count as paths of length
//! zero, so the monomial form covers vertices (`p = q = v`), real paths
//! (`q` trivial) and ghost paths (`p` trivial).
//!
//! Products are computed with the prefix rule for `q* p'` and then rewritten
//! to normal form: a monomial is reducible exactly when `p` and `q` both end
//! in the distinguished out-edge of its source (the lexicographically least
//! one), and the rewrite replaces that edge pair by the vertex relation it
//! came from. Normal forms are canonical, so equality of elements is
//! equality of their term maps.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeId, Graph, VertexId};

use super::scalar::Scalar;

/// A directed path, possibly of length zero. `start` is the source; the
/// range is stored so it stays available without a graph lookup.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct PathTerm {
    start: VertexId,
    edges: Vec<EdgeId>,
    end: VertexId,
}

impl PathTerm {
    pub fn vertex(v: VertexId) -> Self {
        PathTerm {
            start: v.clone(),
            edges: Vec::new(),
            end: v,
        }
    }

    pub fn new(g: &Graph, start: VertexId, edges: Vec<EdgeId>) -> Result<Self> {
        if !g.has_vertex(&start) {
            return Err(Error::UnknownVertex(start));
        }
        let mut at = start.clone();
        for id in &edges {
            let e = g
                .edge(id)
                .ok_or_else(|| Error::UnknownEdge(id.to_string()))?;
            if e.src != at {
                return Err(Error::BadPath(format!(
                    "edge {} starts at {}, expected {}",
                    id, e.src, at
                )));
            }
            at = e.dst.clone();
        }
        Ok(PathTerm {
            start,
            edges,
            end: at,
        })
    }

    pub fn from_edges(g: &Graph, edges: &[EdgeId]) -> Result<Self> {
        let first = edges
            .first()
            .ok_or_else(|| Error::BadPath("empty edge list".into()))?;
        let start = g
            .edge(first)
            .ok_or_else(|| Error::UnknownEdge(first.to_string()))?
            .src
            .clone();
        PathTerm::new(g, start, edges.to_vec())
    }

    pub fn start(&self) -> &VertexId {
        &self.start
    }

    pub fn end(&self) -> &VertexId {
        &self.end
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_vertex(&self) -> bool {
        self.edges.is_empty()
    }

    /// Extends by one edge whose source is already known to be `self.end`.
    fn extended(&self, e: &Edge) -> PathTerm {
        debug_assert_eq!(e.src, self.end);
        let mut edges = self.edges.clone();
        edges.push(e.id.clone());
        PathTerm {
            start: self.start.clone(),
            edges,
            end: e.dst.clone(),
        }
    }

    /// Drops the final edge; `new_end` must be its source.
    fn shortened(&self, new_end: VertexId) -> PathTerm {
        let mut edges = self.edges.clone();
        edges.pop();
        PathTerm {
            start: self.start.clone(),
            edges,
            end: new_end,
        }
    }

    fn checks_against(&self, g: &Graph) -> bool {
        PathTerm::new(g, self.start.clone(), self.edges.clone())
            .map(|p| p.end == self.end)
            .unwrap_or(false)
    }
}

/// `p q*` with `r(p) = r(q)`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Monomial {
    p: PathTerm,
    q: PathTerm,
}

impl Monomial {
    pub fn new(p: PathTerm, q: PathTerm) -> Result<Self> {
        if p.end != q.end {
            return Err(Error::BadPath(format!(
                "ranges differ: {} vs {}",
                p.end, q.end
            )));
        }
        Ok(Monomial { p, q })
    }

    fn raw(p: PathTerm, q: PathTerm) -> Self {
        debug_assert_eq!(p.end, q.end);
        Monomial { p, q }
    }

    pub fn vertex(v: VertexId) -> Self {
        Monomial::raw(PathTerm::vertex(v.clone()), PathTerm::vertex(v))
    }

    pub fn p(&self) -> &PathTerm {
        &self.p
    }

    pub fn q(&self) -> &PathTerm {
        &self.q
    }

    /// Grading degree `|p| - |q|`.
    pub fn degree(&self) -> i64 {
        self.p.len() as i64 - self.q.len() as i64
    }

    pub fn star(&self) -> Monomial {
        Monomial::raw(self.q.clone(), self.p.clone())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AlgebraElement<S: Scalar> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> AlgebraElement<S> {
    pub fn zero() -> Self {
        AlgebraElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut out = AlgebraElement::zero();
        for (m, c) in terms {
            out.insert(m, c);
        }
        out
    }

    pub fn monomial(m: Monomial, coeff: S) -> Self {
        AlgebraElement::from_terms([(m, coeff)])
    }

    pub fn vertex(g: &Graph, v: &VertexId) -> Result<Self> {
        if !g.has_vertex(v) {
            return Err(Error::UnknownVertex(v.clone()));
        }
        Ok(AlgebraElement::monomial(
            Monomial::vertex(v.clone()),
            S::one(),
        ))
    }

    pub fn path(p: PathTerm) -> Self {
        let q = PathTerm::vertex(p.end.clone());
        AlgebraElement::monomial(Monomial::raw(p, q), S::one())
    }

    pub fn real_edge(g: &Graph, e: &EdgeId) -> Result<Self> {
        let edge = g
            .edge(e)
            .ok_or_else(|| Error::UnknownEdge(e.to_string()))?;
        let p = PathTerm::new(g, edge.src.clone(), vec![e.clone()])?;
        Ok(AlgebraElement::path(p))
    }

    pub fn ghost_edge(g: &Graph, e: &EdgeId) -> Result<Self> {
        Ok(Self::real_edge(g, e)?.star())
    }

    /// The multiplicative identity, the sum of all vertices.
    pub fn one(g: &Graph) -> Self {
        AlgebraElement::from_terms(
            g.vertices()
                .iter()
                .map(|v| (Monomial::vertex(v.clone()), S::one())),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> S {
        self.terms.get(m).cloned().unwrap_or_else(S::zero)
    }

    fn insert(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
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
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), s.clone() * c.clone()))
                .collect(),
        }
    }

    /// The involution `p q* -> q p*` with conjugated coefficients.
    pub fn star(&self) -> Self {
        AlgebraElement::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.star(), c.conjugate())),
        )
    }

    fn check_over(&self, g: &Graph) -> Result<()> {
        for m in self.terms.keys() {
            if !m.p.checks_against(g) || !m.q.checks_against(g) {
                return Err(Error::GraphMismatch(format!(
                    "monomial [{:?}|{:?}] is not a path pair of the given graph",
                    m.p.edges, m.q.edges
                )));
            }
        }
        Ok(())
    }
}

/// Product of two monomials, before normalization. `q1* p2` is nonzero
/// exactly when one of `q1`, `p2` is a prefix of the other.
fn monomial_product(m1: &Monomial, m2: &Monomial) -> Option<Monomial> {
    let q1 = &m1.q;
    let p2 = &m2.p;
    if q1.start != p2.start {
        return None;
    }
    if p2.edges.starts_with(&q1.edges) {
        // q1* p2 is the remaining real path; append it to p1.
        let mut p = m1.p.clone();
        for id in &p2.edges[q1.edges.len()..] {
            p.edges.push(id.clone());
        }
        p.end = p2.end.clone();
        Some(Monomial::raw(p, m2.q.clone()))
    } else if q1.edges.starts_with(&p2.edges) {
        // q1* p2 is a leftover ghost path; append its reversal source to q2.
        let mut q = m2.q.clone();
        for id in &q1.edges[p2.edges.len()..] {
            q.edges.push(id.clone());
        }
        q.end = q1.end.clone();
        Some(Monomial::raw(m1.p.clone(), q))
    } else {
        None
    }
}

/// Product without the final rewrite to normal form. Exposed for building
/// relation witnesses in tests; almost all callers want [`multiply`].
pub fn multiply_raw<S: Scalar>(
    g: &Graph,
    a: &AlgebraElement<S>,
    b: &AlgebraElement<S>,
) -> Result<AlgebraElement<S>> {
    a.check_over(g)?;
    b.check_over(g)?;
    let mut out = AlgebraElement::zero();
    for (m1, c1) in &a.terms {
        for (m2, c2) in &b.terms {
            if let Some(m) = monomial_product(m1, m2) {
                out.insert(m, c1.clone() * c2.clone());
            }
        }
    }
    Ok(out)
}

pub fn multiply<S: Scalar>(
    g: &Graph,
    a: &AlgebraElement<S>,
    b: &AlgebraElement<S>,
) -> Result<AlgebraElement<S>> {
    let raw = multiply_raw(g, a, b)?;
    normal_form(g, &raw)
}

/// The distinguished out-edge of `v`: the lexicographically least one.
fn distinguished(g: &Graph, v: &VertexId) -> Option<EdgeId> {
    g.out_edges(v).next().map(|e| e.id.clone())
}

/// If the monomial ends in a distinguished edge pair, returns the shortened
/// pair and that edge's source.
fn reducible(g: &Graph, m: &Monomial) -> Option<(PathTerm, PathTerm, VertexId)> {
    let le = m.p.edges.last()?;
    let lq = m.q.edges.last()?;
    if le != lq {
        return None;
    }
    let v = g.edge(le)?.src.clone();
    if distinguished(g, &v).as_ref() != Some(le) {
        return None;
    }
    Some((m.p.shortened(v.clone()), m.q.shortened(v.clone()), v))
}

/// Rewrites every reducible monomial `p'γ (q'γ)*` into
/// `p' q'* - sum over the other out-edges e of (p'e)(q'e)*` until none is
/// left. The rewrite strictly shortens the reducible pair, so it terminates,
/// and the resulting term map is canonical.
pub fn normal_form<S: Scalar>(g: &Graph, a: &AlgebraElement<S>) -> Result<AlgebraElement<S>> {
    a.check_over(g)?;
    let mut pending: Vec<(Monomial, S)> = a
        .terms
        .iter()
        .map(|(m, c)| (m.clone(), c.clone()))
        .collect();
    let mut done: AlgebraElement<S> = AlgebraElement::zero();
    while let Some((m, c)) = pending.pop() {
        if c.is_zero() {
            continue;
        }
        match reducible(g, &m) {
            Some((p, q, v)) => {
                let gamma = m.p.edges.last().cloned();
                pending.push((Monomial::raw(p.clone(), q.clone()), c.clone()));
                for e in g.out_edges(&v) {
                    if Some(&e.id) == gamma.as_ref() {
                        continue;
                    }
                    pending.push((
                        Monomial::raw(p.extended(e), q.extended(e)),
                        -c.clone(),
                    ));
                }
            }
            None => done.insert(m, c),
        }
    }
    Ok(done)
}

/// Splits into graded components keyed by degree `|p| - |q|`.
pub fn degree_split<S: Scalar>(a: &AlgebraElement<S>) -> BTreeMap<i64, AlgebraElement<S>> {
    let mut out: BTreeMap<i64, AlgebraElement<S>> = BTreeMap::new();
    for (m, c) in &a.terms {
        out.entry(m.degree())
            .or_insert_with(AlgebraElement::zero)
            .insert(m.clone(), c.clone());
    }
    out
}

/// Equality in the algebra: the normal form of the difference vanishes.
pub fn equal<S: Scalar>(
    g: &Graph,
    a: &AlgebraElement<S>,
    b: &AlgebraElement<S>,
) -> Result<bool> {
    Ok(normal_form(g, &a.sub(b))?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::super::scalar::Scalar;
    use super::*;
    use crate::fixtures;
    use num_rational::BigRational;

    type Q = BigRational;

    fn v(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn e(s: &str) -> EdgeId {
        EdgeId::new(s).unwrap()
    }

    fn real(g: &Graph, id: &str) -> AlgebraElement<Q> {
        AlgebraElement::real_edge(g, &e(id)).unwrap()
    }

    fn ghost(g: &Graph, id: &str) -> AlgebraElement<Q> {
        AlgebraElement::ghost_edge(g, &e(id)).unwrap()
    }

    #[test]
    fn path_terms_validate_composability() {
        let g = fixtures::line(3);
        let p = PathTerm::new(&g, v("v2"), vec![e("e2"), e("e1")]).unwrap();
        assert_eq!(p.end(), &v("v0"));
        assert!(PathTerm::new(&g, v("v2"), vec![e("e1")]).is_err());
        assert!(PathTerm::new(&g, v("v0"), vec![e("missing")]).is_err());
    }

    #[test]
    fn single_out_edge_collapses_to_its_source() {
        // With one out-edge the vertex relation says ee* equals the source.
        let g = fixtures::line(2);
        let ee_star = multiply(&g, &real(&g, "e1"), &ghost(&g, "e1")).unwrap();
        let v1 = AlgebraElement::vertex(&g, &v("v1")).unwrap();
        assert_eq!(ee_star, v1);
    }

    #[test]
    fn rose_two_rewrites_only_the_distinguished_loop() {
        let g = fixtures::rose(2);
        let ee_star = multiply(&g, &real(&g, "e"), &ghost(&g, "e")).unwrap();
        // ee* rewrites to v - ff*; ff* is already in normal form.
        let vv = AlgebraElement::vertex(&g, &v("v")).unwrap();
        let ff_star = multiply(&g, &real(&g, "f"), &ghost(&g, "f")).unwrap();
        assert_eq!(ee_star, vv.sub(&ff_star));
        let f_mono = Monomial::new(
            PathTerm::new(&g, v("v"), vec![e("f")]).unwrap(),
            PathTerm::new(&g, v("v"), vec![e("f")]).unwrap(),
        )
        .unwrap();
        assert_eq!(ff_star.coeff(&f_mono), Scalar::one());
    }

    #[test]
    fn distinct_edges_annihilate() {
        let g = fixtures::rose(2);
        let prod = multiply(&g, &ghost(&g, "e"), &real(&g, "f")).unwrap();
        assert!(prod.is_zero());
        let same = multiply(&g, &ghost(&g, "e"), &real(&g, "e")).unwrap();
        assert_eq!(same, AlgebraElement::vertex(&g, &v("v")).unwrap());
    }

    #[test]
    fn vertices_are_orthogonal_idempotents_summing_to_one() {
        let g = fixtures::iso_base();
        let one = AlgebraElement::<Q>::one(&g);
        assert_eq!(multiply(&g, &one, &one).unwrap(), one);
        let v1 = AlgebraElement::vertex(&g, &v("v1")).unwrap();
        let v2 = AlgebraElement::vertex(&g, &v("v2")).unwrap();
        assert!(multiply(&g, &v1, &v2).unwrap().is_zero());
        assert_eq!(multiply(&g, &v1, &v1).unwrap(), v1);
        assert_eq!(multiply(&g, &one, &v2).unwrap(), v2);
    }

    #[test]
    fn product_respects_grading() {
        let g = fixtures::rose(2);
        let x = real(&g, "e").add(&ghost(&g, "f"));
        let split = degree_split(&x);
        assert_eq!(split.len(), 2);
        assert_eq!(split[&1], real(&g, "e"));
        assert_eq!(split[&-1], ghost(&g, "f"));
        let sq = multiply(&g, &x, &x).unwrap();
        for (d, part) in degree_split(&sq) {
            assert!(d % 2 == 0, "odd degree {d} in a square");
            assert!(!part.is_zero());
        }
    }

    #[test]
    fn involution_is_an_antihomomorphism() {
        let g = fixtures::iso_base();
        let a = real(&g, "a").add(&real(&g, "l1").scale(&Scalar::from_int(2)));
        let b = ghost(&g, "a").sub(&AlgebraElement::vertex(&g, &v("v2")).unwrap());
        let lhs = multiply(&g, &a, &b).unwrap().star();
        let rhs = multiply(&g, &b.star(), &a.star()).unwrap();
        assert!(equal(&g, &lhs, &rhs).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let g = fixtures::rose(2);
        let x = multiply_raw(&g, &real(&g, "e"), &ghost(&g, "e")).unwrap();
        let nf = normal_form(&g, &x).unwrap();
        assert_eq!(normal_form(&g, &nf).unwrap(), nf);
        let doubled = normal_form(&g, &x.scale(&Scalar::from_int(2))).unwrap();
        assert_eq!(doubled, nf.scale(&Scalar::from_int(2)));
    }

    #[test]
    fn graph_mismatch_is_reported() {
        let g = fixtures::rose(2);
        let h = fixtures::line(3);
        let x = real(&g, "e");
        let y = real(&h, "e1");
        assert!(matches!(
            multiply(&g, &x, &y),
            Err(Error::GraphMismatch(_))
        ));
    }
}
