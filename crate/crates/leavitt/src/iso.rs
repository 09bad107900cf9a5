//! Graph isomorphism for small multigraphs.
//!
//! Two graphs are isomorphic when a vertex bijection matches the number of
//! parallel edges between every ordered vertex pair. Edge labels play no
//! role. The search is plain backtracking with degree-profile pruning; it is
//! meant for the graph sizes this crate works at (roughly up to a dozen
//! vertices), not for general graphs.

use std::collections::BTreeMap;

use crate::graph::{Graph, VertexId};

/// (out-degree, in-degree, loop count) of each vertex.
fn profiles(g: &Graph) -> BTreeMap<&VertexId, (usize, usize, usize)> {
    g.vertices()
        .iter()
        .map(|v| {
            let loops = g.out_edges(v).filter(|e| e.is_loop()).count();
            (v, (g.out_degree(v), g.in_degree(v), loops))
        })
        .collect()
}

fn weight_matrix<'g>(g: &'g Graph) -> BTreeMap<(&'g VertexId, &'g VertexId), usize> {
    let mut w = BTreeMap::new();
    for e in g.edges() {
        *w.entry((&e.src, &e.dst)).or_insert(0) += 1;
    }
    w
}

/// A vertex bijection realizing an isomorphism, if one exists.
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<BTreeMap<VertexId, VertexId>> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return None;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    {
        let mut ma: Vec<_> = pa.values().collect();
        let mut mb: Vec<_> = pb.values().collect();
        ma.sort();
        mb.sort();
        if ma != mb {
            return None;
        }
    }
    let wa = weight_matrix(a);
    let wb = weight_matrix(b);
    let avs: Vec<&VertexId> = a.vertices().iter().collect();
    let mut assigned: Vec<&VertexId> = Vec::new();
    let mut used: Vec<&VertexId> = Vec::new();

    fn extend<'g>(
        k: usize,
        avs: &[&'g VertexId],
        bvs: &[&'g VertexId],
        pa: &BTreeMap<&'g VertexId, (usize, usize, usize)>,
        pb: &BTreeMap<&'g VertexId, (usize, usize, usize)>,
        wa: &BTreeMap<(&'g VertexId, &'g VertexId), usize>,
        wb: &BTreeMap<(&'g VertexId, &'g VertexId), usize>,
        assigned: &mut Vec<&'g VertexId>,
        used: &mut Vec<&'g VertexId>,
    ) -> bool {
        if k == avs.len() {
            return true;
        }
        let va = avs[k];
        'cand: for &vb in bvs {
            if used.contains(&vb) || pa[va] != pb[vb] {
                continue;
            }
            for i in 0..k {
                let (ua, ub) = (avs[i], used[i]);
                if wa.get(&(va, ua)) != wb.get(&(vb, ub))
                    || wa.get(&(ua, va)) != wb.get(&(ub, vb))
                {
                    continue 'cand;
                }
            }
            if wa.get(&(va, va)) != wb.get(&(vb, vb)) {
                continue;
            }
            assigned.push(va);
            used.push(vb);
            if extend(k + 1, avs, bvs, pa, pb, wa, wb, assigned, used) {
                return true;
            }
            assigned.pop();
            used.pop();
        }
        false
    }

    let bvs: Vec<&VertexId> = b.vertices().iter().collect();
    if extend(
        0, &avs, &bvs, &pa, &pb, &wa, &wb, &mut assigned, &mut used,
    ) {
        Some(
            assigned
                .into_iter()
                .zip(used)
                .map(|(x, y)| (x.clone(), y.clone()))
                .collect(),
        )
    } else {
        None
    }
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    find_isomorphism(a, b).is_some()
}
