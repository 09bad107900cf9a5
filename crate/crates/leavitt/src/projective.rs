//! Classes of finitely generated projectives over a hair extension of a
//! totally looped graph, as vertex multisets, and the graph whose algebra
//! realizes their endomorphism ring.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::moves::{hair_extend, HairSpec};

/// A totally looped base together with its hair extension. The strand map
/// sends each new vertex `v^j` to its base vertex and depth, covering
/// exactly the vertices of `total` outside `base`.
#[derive(Clone, Debug)]
pub struct HairExtension {
    base: Graph,
    spec: HairSpec,
    total: Graph,
    strand_map: BTreeMap<VertexId, (VertexId, u64)>,
}

impl HairExtension {
    pub fn new(base: Graph, spec: HairSpec) -> Result<Self> {
        if !base.is_totally_looped() {
            return Err(Error::BadSpec("hair base must be totally looped".into()));
        }
        let total = hair_extend(&base, &spec)?;
        let mut strand_map = BTreeMap::new();
        for v in base.vertices() {
            for j in 1..spec.0[v] {
                strand_map.insert(VertexId::new(format!("{v}^{j}"))?, (v.clone(), j));
            }
        }
        Ok(HairExtension {
            base,
            spec,
            total,
            strand_map,
        })
    }

    /// Wraps a totally looped graph as its own hair extension with every
    /// length 1.
    pub fn all_ones(base: Graph) -> Result<Self> {
        let spec = HairSpec::uniform(&base, 1);
        HairExtension::new(base, spec)
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn spec(&self) -> &HairSpec {
        &self.spec
    }

    pub fn total(&self) -> &Graph {
        &self.total
    }

    pub fn strand_map(&self) -> &BTreeMap<VertexId, (VertexId, u64)> {
        &self.strand_map
    }
}

/// A nonzero multiset of vertices naming the class ⊕ n_v · L·v. Zero
/// coefficients are accepted in input and dropped.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(transparent)]
pub struct ProjectiveClass {
    coeffs: BTreeMap<VertexId, u64>,
}

impl ProjectiveClass {
    pub fn new(coeffs: BTreeMap<VertexId, u64>) -> Result<Self> {
        let coeffs: BTreeMap<VertexId, u64> =
            coeffs.into_iter().filter(|&(_, n)| n > 0).collect();
        if coeffs.is_empty() {
            return Err(Error::ZeroClass);
        }
        Ok(ProjectiveClass { coeffs })
    }

    pub fn from_pairs(pairs: &[(&str, u64)]) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (v, n) in pairs {
            *coeffs.entry(VertexId::new(*v)?).or_insert(0) += n;
        }
        ProjectiveClass::new(coeffs)
    }

    pub fn get(&self, v: &VertexId) -> u64 {
        self.coeffs.get(v).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&VertexId, u64)> {
        self.coeffs.iter().map(|(v, &n)| (v, n))
    }

    pub fn support(&self) -> impl Iterator<Item = &VertexId> {
        self.coeffs.keys()
    }

    pub fn coeffs(&self) -> &BTreeMap<VertexId, u64> {
        &self.coeffs
    }

    pub fn check_supported(&self, g: &Graph) -> Result<()> {
        for v in self.coeffs.keys() {
            if !g.has_vertex(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        Ok(())
    }
}

/// A class rewritten onto a hereditary subset of the base, every listed
/// vertex carrying a positive multiplicity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NormalizedClass {
    #[serde(rename = "T")]
    pub t: Vec<VertexId>,
    pub mults: BTreeMap<VertexId, u64>,
}

/// Moves every coefficient at a strand vertex `v^j` down to its base
/// vertex `v`; the result is supported on the base.
pub fn descend_hair(h: &HairExtension, q: &ProjectiveClass) -> Result<ProjectiveClass> {
    q.check_supported(h.total())?;
    let mut coeffs = BTreeMap::new();
    for (v, n) in q.entries() {
        let target = match h.strand_map.get(v) {
            Some((b, _)) => b.clone(),
            None => v.clone(),
        };
        *coeffs.entry(target).or_insert(0) += n;
    }
    ProjectiveClass::new(coeffs)
}

/// One replacement step at `u` feeding edge `e_next`: `u` keeps its
/// multiplicity, the receiver of `e_next` gains one, and so does the
/// receiver of every other edge out of `u` except its smallest loop. This
/// is exactly a forward rewrite of one occurrence of `u` in the graph
/// monoid, since the loop term reproduces `u`.
fn replace_at(base: &Graph, mults: &mut BTreeMap<VertexId, u64>, u: &VertexId, e_next: &EdgeId) {
    let f = base
        .out_edges(u)
        .find(|e| e.is_loop())
        .expect("base is totally looped and u is regular")
        .id
        .clone();
    for e in base.out_edges(u) {
        if e.id != f && e.id != *e_next {
            *mults.entry(e.dst.clone()).or_insert(0) += 1;
        }
    }
    let target = base.edge(e_next).unwrap().dst.clone();
    *mults.entry(target).or_insert(0) += 1;
}

/// Rewrites the class onto the hereditary closure T of its support: while
/// some vertex of T is missing, pick the closest (support vertex, missing
/// vertex) pair, lexicographic on ties, and push copies down the shortest
/// path between them until the missing vertex gains one. Multiplicities
/// never decrease, so the result covers T with positive entries.
pub fn normalize(h: &HairExtension, q: &ProjectiveClass) -> Result<NormalizedClass> {
    let based = descend_hair(h, q)?;
    let base = h.base();
    let support: BTreeSet<VertexId> = based.support().cloned().collect();
    let t = base.hereditary_closure(&support)?;
    let mut mults: BTreeMap<VertexId, u64> = based.coeffs().clone();
    loop {
        let missing: Vec<&VertexId> = t
            .iter()
            .filter(|z| mults.get(*z).copied().unwrap_or(0) == 0)
            .collect();
        if missing.is_empty() {
            break;
        }
        let mut best: Option<(usize, VertexId, VertexId, Vec<EdgeId>)> = None;
        for v in mults.keys() {
            for z in &missing {
                if let Some(path) = base.shortest_simple_path(v, z)? {
                    let cand = (path.len(), v.clone(), (*z).clone(), path);
                    let better = match &best {
                        None => true,
                        Some((l, bv, bz, _)) => {
                            (cand.0, &cand.1, &cand.2) < (*l, bv, bz)
                        }
                    };
                    if better {
                        best = Some(cand);
                    }
                }
            }
        }
        let (_, v, z, path) =
            best.expect("closure vertices are reachable from the support");
        let mut u = v;
        for e in &path {
            replace_at(base, &mut mults, &u, e);
            u = base.edge(e).unwrap().dst.clone();
            if mults.get(&z).copied().unwrap_or(0) > 0 {
                break;
            }
        }
    }
    Ok(NormalizedClass {
        t: t.into_iter().collect(),
        mults,
    })
}

/// A class generates the module category exactly when its rewritten
/// support is the whole base.
pub fn is_generator(h: &HairExtension, q: &ProjectiveClass) -> Result<bool> {
    let n = normalize(h, q)?;
    let full: BTreeSet<&VertexId> = h.base().vertices().iter().collect();
    let got: BTreeSet<&VertexId> = n.t.iter().collect();
    Ok(full == got)
}

#[derive(Clone, Debug, Serialize)]
pub struct EndGraph {
    #[serde(rename = "G")]
    pub g: Graph,
    pub normalized: NormalizedClass,
}

/// The graph G whose algebra is the endomorphism ring of the class: the
/// restriction of the base to T, wearing one strand of length m_v at each
/// vertex.
pub fn end_graph(h: &HairExtension, q: &ProjectiveClass) -> Result<EndGraph> {
    let normalized = normalize(h, q)?;
    let tset: BTreeSet<VertexId> = normalized.t.iter().cloned().collect();
    let f_t = h.base().restriction(&tset)?;
    let g = hair_extend(&f_t, &HairSpec(normalized.mults.clone()))?;
    Ok(EndGraph { g, normalized })
}
