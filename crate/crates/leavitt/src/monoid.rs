//! The graph monoid M_E: the free abelian monoid on the vertices, modulo
//! `v = sum of r(e) over e emitted by v` for every regular vertex `v`.
//!
//! Elements are multisets of vertices. Congruence of two elements is
//! semidecidable by searching the rewrite graph in both directions at once;
//! `congruent_within` does exactly that, with a state budget, and returns a
//! witness chain when it finds one.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};
use crate::moves::{MoveKind, MoveRecord};

/// A nonzero element of the free abelian monoid on vertex labels:
/// multiplicities are positive, absent vertices have multiplicity zero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<VertexId, u64>", into = "BTreeMap<VertexId, u64>")]
pub struct MonoidElement {
    mults: BTreeMap<VertexId, u64>,
}

impl TryFrom<BTreeMap<VertexId, u64>> for MonoidElement {
    type Error = Error;

    fn try_from(m: BTreeMap<VertexId, u64>) -> Result<Self> {
        MonoidElement::new(m)
    }
}

impl From<MonoidElement> for BTreeMap<VertexId, u64> {
    fn from(x: MonoidElement) -> Self {
        x.mults
    }
}

impl fmt::Display for MonoidElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, n) in &self.mults {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{v}:{n}")?;
            first = false;
        }
        Ok(())
    }
}

impl MonoidElement {
    /// Zero multiplicities are rejected rather than normalized away so that
    /// accidental zeros in input surface as errors.
    pub fn new(mults: BTreeMap<VertexId, u64>) -> Result<Self> {
        if mults.is_empty() {
            return Err(Error::ZeroClass);
        }
        if mults.values().any(|&n| n == 0) {
            return Err(Error::ZeroClass);
        }
        Ok(MonoidElement { mults })
    }

    pub fn single(v: &VertexId) -> Self {
        MonoidElement {
            mults: [(v.clone(), 1)].into_iter().collect(),
        }
    }

    pub fn from_pairs(pairs: &[(&str, u64)]) -> Result<Self> {
        let mut m = BTreeMap::new();
        for (v, n) in pairs {
            *m.entry(VertexId::new(*v)?).or_insert(0) += n;
        }
        MonoidElement::new(m)
    }

    pub fn multiplicity(&self, v: &VertexId) -> u64 {
        self.mults.get(v).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &VertexId> {
        self.mults.keys()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&VertexId, u64)> {
        self.mults.iter().map(|(v, &n)| (v, n))
    }

    pub fn total(&self) -> u64 {
        self.mults.values().sum()
    }

    pub fn add(&self, other: &MonoidElement) -> MonoidElement {
        let mut mults = self.mults.clone();
        for (v, &n) in &other.mults {
            *mults.entry(v.clone()).or_insert(0) += n;
        }
        MonoidElement { mults }
    }

    /// Checks the support against a graph's vertex set.
    pub fn check_supported(&self, g: &Graph) -> Result<()> {
        for v in self.mults.keys() {
            if !g.has_vertex(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        Ok(())
    }

    /// Replaces one occurrence of `v` by the multiset `sum`. Returns None
    /// when the result would be zero (possible only when `sum` is empty,
    /// which regular vertices never produce).
    fn replace_one(&self, v: &VertexId, sum: &BTreeMap<VertexId, u64>) -> Option<MonoidElement> {
        let mut mults = self.mults.clone();
        match mults.get_mut(v) {
            Some(n) if *n > 1 => *n -= 1,
            Some(_) => {
                mults.remove(v);
            }
            None => return None,
        }
        for (u, &k) in sum {
            *mults.entry(u.clone()).or_insert(0) += k;
        }
        if mults.is_empty() {
            None
        } else {
            Some(MonoidElement { mults })
        }
    }
}

/// The multiset of receivers of `v`'s edges, the right side of the defining
/// relation at a regular vertex.
pub fn amp_relation(g: &Graph, v: &VertexId) -> Result<MonoidElement> {
    if !g.has_vertex(v) {
        return Err(Error::UnknownVertex(v.clone()));
    }
    if !g.is_regular(v) {
        return Err(Error::SinkVertex(v.clone()));
    }
    let mut mults = BTreeMap::new();
    for e in g.out_edges(v) {
        *mults.entry(e.dst.clone()).or_insert(0) += 1;
    }
    MonoidElement::new(mults)
}

fn receiver_sums(g: &Graph) -> BTreeMap<VertexId, BTreeMap<VertexId, u64>> {
    let mut sums = BTreeMap::new();
    for v in g.vertices() {
        if g.is_regular(v) {
            let mut m = BTreeMap::new();
            for e in g.out_edges(v) {
                *m.entry(e.dst.clone()).or_insert(0) += 1;
            }
            sums.insert(v.clone(), m);
        }
    }
    sums
}

/// All elements one relation step away from `x`, in either direction:
/// expanding an occurrence of a regular vertex, or folding a full receiver
/// multiset back into its vertex. Deduplicated and sorted.
pub fn step_neighbors(g: &Graph, x: &MonoidElement) -> Result<Vec<MonoidElement>> {
    x.check_supported(g)?;
    Ok(step_neighbors_with(&receiver_sums(g), x))
}

fn step_neighbors_with(
    sums: &BTreeMap<VertexId, BTreeMap<VertexId, u64>>,
    x: &MonoidElement,
) -> Vec<MonoidElement> {
    let mut out = BTreeSet::new();
    for v in x.support() {
        if let Some(sum) = sums.get(v) {
            if let Some(y) = x.replace_one(v, sum) {
                out.insert(y);
            }
        }
    }
    for (v, sum) in sums {
        if sum.iter().all(|(u, &k)| x.multiplicity(u) >= k) {
            let mut mults = x.mults.clone();
            for (u, &k) in sum {
                let n = mults.get_mut(u).unwrap();
                *n -= k;
                if *n == 0 {
                    mults.remove(u);
                }
            }
            *mults.entry(v.clone()).or_insert(0) += 1;
            out.insert(MonoidElement { mults });
        }
    }
    out.into_iter().collect()
}

/// Outcome of a bounded congruence search.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub enum Verdict {
    /// Congruent, with a chain of elements from `a` to `b`, each adjacent
    /// pair one relation step apart.
    Equivalent { witness: Vec<MonoidElement> },
    /// One side's congruence class was exhausted without meeting the other.
    Inequivalent,
    /// The state budget ran out first.
    Unknown,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Equivalent { .. } => "equivalent",
            Verdict::Inequivalent => "inequivalent",
            Verdict::Unknown => "unknown",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CongruenceStatus {
    pub verdict: Verdict,
    /// Distinct elements visited across both searches.
    pub states_explored: usize,
}

enum Side {
    A,
    B,
}

/// Decides whether `a` and `b` are congruent in M_E by breadth-first search
/// from both elements simultaneously, alternating expansions. Visiting at
/// most `max_states` distinct elements overall. Total multiplicity is
/// conserved only by folding steps, so classes can be infinite; exhaustion
/// of either frontier still settles the question, because that side's
/// entire class has then been enumerated.
pub fn congruent_within(
    g: &Graph,
    a: &MonoidElement,
    b: &MonoidElement,
    max_states: usize,
) -> Result<CongruenceStatus> {
    a.check_supported(g)?;
    b.check_supported(g)?;
    let sums = receiver_sums(g);

    // parent maps double as visited sets; roots map to themselves.
    let mut seen_a: HashMap<MonoidElement, MonoidElement> = HashMap::new();
    let mut seen_b: HashMap<MonoidElement, MonoidElement> = HashMap::new();
    seen_a.insert(a.clone(), a.clone());
    seen_b.insert(b.clone(), b.clone());

    let chain = |seen: &HashMap<MonoidElement, MonoidElement>, from: &MonoidElement| {
        let mut path = vec![from.clone()];
        let mut cur = from.clone();
        while seen[&cur] != cur {
            cur = seen[&cur].clone();
            path.push(cur.clone());
        }
        path
    };
    let witness = |seen_a: &HashMap<MonoidElement, MonoidElement>,
                   seen_b: &HashMap<MonoidElement, MonoidElement>,
                   meet: &MonoidElement| {
        let mut left = chain(seen_a, meet);
        left.reverse();
        let right = chain(seen_b, meet);
        left.extend(right.into_iter().skip(1));
        left
    };

    if a == b {
        return Ok(CongruenceStatus {
            verdict: Verdict::Equivalent {
                witness: vec![a.clone()],
            },
            states_explored: seen_a.len() + seen_b.len(),
        });
    }

    let mut queue_a: VecDeque<MonoidElement> = [a.clone()].into();
    let mut queue_b: VecDeque<MonoidElement> = [b.clone()].into();
    loop {
        let states = seen_a.len() + seen_b.len();
        if states > max_states {
            return Ok(CongruenceStatus {
                verdict: Verdict::Unknown,
                states_explored: states,
            });
        }
        // Expand whichever side is smaller; a side with an empty queue has
        // enumerated its whole class.
        let side = match (queue_a.is_empty(), queue_b.is_empty()) {
            (true, _) | (_, true) => {
                return Ok(CongruenceStatus {
                    verdict: Verdict::Inequivalent,
                    states_explored: states,
                });
            }
            _ if queue_a.len() <= queue_b.len() => Side::A,
            _ => Side::B,
        };
        let (queue, seen, other_seen) = match side {
            Side::A => (&mut queue_a, &mut seen_a, &seen_b),
            Side::B => (&mut queue_b, &mut seen_b, &seen_a),
        };
        let cur = queue.pop_front().unwrap();
        for next in step_neighbors_with(&sums, &cur) {
            if seen.contains_key(&next) {
                continue;
            }
            seen.insert(next.clone(), cur.clone());
            if other_seen.contains_key(&next) {
                let w = witness(&seen_a, &seen_b, &next);
                let states = seen_a.len() + seen_b.len();
                return Ok(CongruenceStatus {
                    verdict: Verdict::Equivalent { witness: w },
                    states_explored: states,
                });
            }
            match side {
                Side::A => queue_a.push_back(next),
                Side::B => queue_b.push_back(next),
            }
        }
    }
}

/// Transports a monoid element through a move that removes a vertex. For a
/// source elimination or a collapse at `v`, every occurrence of `v` is
/// replaced by the receiver multiset of `v` in the old graph. An isolated
/// removal simply drops the coefficient at `v` (the pipeline extracts it
/// first), failing only when nothing is left. Splitting moves change the
/// vertex set in ways with no canonical multiset image.
pub fn class_map_under_move(
    old: &Graph,
    mv: &MoveRecord,
    x: &MonoidElement,
) -> Result<MonoidElement> {
    x.check_supported(old)?;
    match mv.kind {
        MoveKind::SourceElim | MoveKind::Collapse => {
            let n = x.multiplicity(&mv.vertex);
            if n == 0 {
                return Ok(x.clone());
            }
            let sum = amp_relation(old, &mv.vertex)?;
            let mut cur = x.clone();
            for _ in 0..n {
                cur = cur
                    .replace_one(&mv.vertex, &sum.mults)
                    .ok_or(Error::ClassVanished)?;
            }
            Ok(cur)
        }
        MoveKind::IsolatedRemoval => {
            let mut mults = x.mults.clone();
            mults.remove(&mv.vertex);
            if mults.is_empty() {
                Err(Error::ClassVanished)
            } else {
                Ok(MonoidElement { mults })
            }
        }
        MoveKind::MoveR | MoveKind::InSplit | MoveKind::OutSplit => {
            Err(Error::UnsupportedMoveKind(mv.kind.to_string()))
        }
    }
}
