//! Textual syntaxes shared by the CLI: vertex multisets `v1:2,v2:1`, edge
//! partitions `e1,e2|e3`, and algebra elements `2*[e1.e2|f1] + 1*[v]`.
//!
//! Label tokens never contain whitespace, `,`, `:` or `|`, so those four
//! characters separate unconditionally. Dots inside bracket terms separate
//! path edges, but an edge id may itself contain dots (disjoint unions
//! produce `0.e1`), so path reading groups dot-separated tokens, preferring
//! the longest id that exists in the graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{AlgebraElement, Monomial, PathTerm, Scalar};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, VertexId};
use crate::moves::Partition;

pub fn parse_multiset(text: &str) -> Result<BTreeMap<VertexId, u64>> {
    let mut out = BTreeMap::new();
    for part in text.split(',') {
        let part = part.trim();
        let (label, count) = part
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected label:count, got {part:?}")))?;
        let v = VertexId::new(label.trim())?;
        let n: u64 = count
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad count {count:?}")))?;
        if out.insert(v.clone(), n).is_some() {
            return Err(Error::Parse(format!("vertex {v} listed twice")));
        }
    }
    Ok(out)
}

pub fn render_multiset(m: &BTreeMap<VertexId, u64>) -> String {
    m.iter()
        .map(|(v, n)| format!("{v}:{n}"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn parse_partition(text: &str) -> Result<Partition> {
    let blocks = text
        .split('|')
        .map(|block| {
            block
                .split(',')
                .map(|t| EdgeId::new(t.trim()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Partition::new(blocks))
}

/// Reads a dot-separated edge path. Tokens are grouped greedily: at each
/// point the longest token run naming an existing edge (with the right
/// source) is tried first, backtracking on failure.
fn read_path(g: &Graph, text: &str) -> Result<PathTerm> {
    let tokens: Vec<&str> = text.split('.').collect();
    if tokens.iter().any(|t| t.is_empty()) {
        return Err(Error::Parse(format!("bad path {text:?}")));
    }
    fn go(
        g: &Graph,
        tokens: &[&str],
        i: usize,
        expect: Option<&VertexId>,
        dead: &mut BTreeSet<(usize, Option<VertexId>)>,
        acc: &mut Vec<EdgeId>,
    ) -> bool {
        if i == tokens.len() {
            return true;
        }
        let key = (i, expect.cloned());
        if dead.contains(&key) {
            return false;
        }
        for j in (i + 1..=tokens.len()).rev() {
            let candidate = match EdgeId::new(tokens[i..j].join(".")) {
                Ok(id) => id,
                Err(_) => continue,
            };
            if let Some(e) = g.edge(&candidate) {
                if expect.map_or(true, |v| e.src == *v) {
                    acc.push(candidate);
                    let dst = e.dst.clone();
                    if go(g, tokens, j, Some(&dst), dead, acc) {
                        return true;
                    }
                    acc.pop();
                }
            }
        }
        dead.insert(key);
        false
    }
    let mut acc = Vec::new();
    if go(g, &tokens, 0, None, &mut BTreeSet::new(), &mut acc) {
        PathTerm::from_edges(g, &acc)
    } else {
        Err(Error::Parse(format!("cannot read {text:?} as a path")))
    }
}

/// One side of a bracket term: a vertex label, or an edge path. A vertex
/// of that exact name wins over a path reading.
fn read_side(g: &Graph, text: &str) -> Result<PathTerm> {
    if let Ok(v) = VertexId::new(text) {
        if g.has_vertex(&v) {
            return PathTerm::new(g, v, Vec::new());
        }
    }
    read_path(g, text)
}

fn read_monomial(g: &Graph, content: &str) -> Result<Monomial> {
    let sides: Vec<&str> = content.split('|').collect();
    let (p, q) = match sides.as_slice() {
        [p_text] => {
            let p = read_side(g, p_text)?;
            let q = PathTerm::new(g, p.end().clone(), Vec::new())?;
            (p, q)
        }
        [p_text, q_text] => (read_side(g, p_text)?, read_side(g, q_text)?),
        _ => {
            return Err(Error::Parse(format!(
                "expected at most one '|' in {content:?}"
            )))
        }
    };
    Monomial::new(p, q).map_err(|e| Error::Parse(format!("bad monomial {content:?}: {e}")))
}

/// One signed term `coeff*[p|q]`, already stripped of whitespace and sign.
fn read_term<S: Scalar>(g: &Graph, body: &str) -> Result<(S, Monomial)> {
    let open = body
        .find('[')
        .ok_or_else(|| Error::Parse(format!("term {body:?} has no bracket")))?;
    let coeff = if open == 0 {
        S::one()
    } else {
        let prefix = body[..open]
            .strip_suffix('*')
            .ok_or_else(|| Error::Parse(format!("expected '*[' in {body:?}")))?;
        S::parse(prefix)?
    };
    let mut depth = 0usize;
    let mut close = None;
    for (idx, c) in body.char_indices() {
        if idx < open {
            continue;
        }
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    close = Some(idx);
                    break;
                }
            }
            _ => {}
        }
    }
    let close = close.ok_or_else(|| Error::Parse(format!("unbalanced '[' in {body:?}")))?;
    if close != body.len() - 1 {
        return Err(Error::Parse(format!(
            "unexpected text after ']' in {body:?}"
        )));
    }
    let mono = read_monomial(g, &body[open + 1..close])?;
    Ok((coeff, mono))
}

/// Parses a linear combination of bracket terms. `+` and `-` separate terms
/// outside brackets; a sign may also lead the whole expression. The empty
/// sum is written `0`.
pub fn parse_element<S: Scalar>(g: &Graph, text: &str) -> Result<AlgebraElement<S>> {
    let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned == "0" {
        return Ok(AlgebraElement::zero());
    }
    if cleaned.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    let mut chunks: Vec<(bool, String)> = Vec::new();
    let mut depth = 0usize;
    let mut negative = false;
    let mut cur = String::new();
    for c in cleaned.chars() {
        match c {
            '[' => {
                depth += 1;
                cur.push(c);
            }
            ']' => {
                if depth == 0 {
                    return Err(Error::Parse(format!("unbalanced ']' in {text:?}")));
                }
                depth -= 1;
                cur.push(c);
            }
            '+' | '-' if depth == 0 => {
                if cur.is_empty() {
                    if c == '-' {
                        negative = !negative;
                    }
                } else {
                    chunks.push((negative, std::mem::take(&mut cur)));
                    negative = c == '-';
                }
            }
            _ => cur.push(c),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced '[' in {text:?}")));
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in {text:?}")));
    }
    chunks.push((negative, cur));

    let mut out = AlgebraElement::zero();
    for (neg, body) in chunks {
        let (coeff, mono) = read_term::<S>(g, &body)?;
        let coeff = if neg { -coeff } else { coeff };
        out = out.add(&AlgebraElement::monomial(mono, coeff));
    }
    Ok(out)
}

fn render_side(p: &PathTerm) -> String {
    if p.is_vertex() {
        p.start().to_string()
    } else {
        p.edges()
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Inverse of [`parse_element`] on normal terms: coefficients are always
/// written explicitly and terms join with " + ", negative coefficients
/// riding along in the scalar.
pub fn render_element<S: Scalar>(a: &AlgebraElement<S>) -> String {
    if a.is_zero() {
        return "0".into();
    }
    a.terms()
        .map(|(m, c)| {
            let body = if m.q().is_vertex() {
                render_side(m.p())
            } else {
                format!("{}|{}", render_side(m.p()), render_side(m.q()))
            };
            format!("{c}*[{body}]")
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

#[cfg(test)]
mod tests {
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

    #[test]
    fn multisets_round_trip() {
        let m = parse_multiset("v1:2, v2:1").unwrap();
        assert_eq!(m[&v("v1")], 2);
        assert_eq!(render_multiset(&m), "v1:2,v2:1");
        assert!(parse_multiset("v1").is_err());
        assert!(parse_multiset("v1:2,v1:3").is_err());
        assert!(parse_multiset("v1:x").is_err());
    }

    #[test]
    fn partitions_parse() {
        let p = parse_partition("e1,e2|e3").unwrap();
        assert_eq!(p.blocks.len(), 2);
        assert_eq!(p.blocks[0], vec![e("e1"), e("e2")]);
        assert!(parse_partition("e1,,e2").is_err());
    }

    #[test]
    fn elements_round_trip() {
        let g = fixtures::line(3);
        let x: AlgebraElement<Q> =
            parse_element(&g, "2*[e2.e1|e1] + 1*[v0] - 1/2*[v1|e2]").unwrap();
        assert_eq!(x.term_count(), 3);
        let rendered = render_element(&x);
        let back: AlgebraElement<Q> = parse_element(&g, &rendered).unwrap();
        assert_eq!(back, x);
    }

    #[test]
    fn bare_terms_and_signs() {
        let g = fixtures::rose(2);
        let x: AlgebraElement<Q> = parse_element(&g, "[e]").unwrap();
        assert_eq!(x, AlgebraElement::real_edge(&g, &e("e")).unwrap());
        let y: AlgebraElement<Q> = parse_element(&g, "-[v]").unwrap();
        assert_eq!(
            y,
            AlgebraElement::vertex(&g, &v("v")).unwrap().neg()
        );
        let zero: AlgebraElement<Q> = parse_element(&g, "[e] - [e]").unwrap();
        assert!(zero.is_zero());
        assert!(parse_element::<Q>(&g, "0").unwrap().is_zero());
    }

    #[test]
    fn ghost_sides_need_the_vertex_on_the_left() {
        let g = fixtures::rose(2);
        let x: AlgebraElement<Q> = parse_element(&g, "[v|f]").unwrap();
        assert_eq!(x, AlgebraElement::ghost_edge(&g, &e("f")).unwrap());
        assert_eq!(render_element(&x), "1*[v|f]");
    }

    #[test]
    fn dotted_edge_ids_prefer_the_longest_match() {
        let g = Graph::build(
            &["a", "b", "c"],
            &[("x", "a", "b"), ("y", "b", "c"), ("x.y", "a", "c")],
        )
        .unwrap();
        let p: AlgebraElement<Q> = parse_element(&g, "[x.y]").unwrap();
        assert_eq!(
            p,
            AlgebraElement::real_edge(&g, &e("x.y")).unwrap()
        );
        // The two-edge reading is still reachable when the long id breaks
        // composability.
        let g2 = Graph::build(
            &["a", "b", "c", "d"],
            &[("x", "a", "b"), ("y", "b", "c"), ("x.y", "d", "d")],
        )
        .unwrap();
        let p2: AlgebraElement<Q> = parse_element(&g2, "[x.y|x.y]").unwrap();
        let mono = Monomial::new(
            PathTerm::from_edges(&g2, &[e("x"), e("y")]).unwrap(),
            PathTerm::from_edges(&g2, &[e("x"), e("y")]).unwrap(),
        )
        .unwrap();
        // Each side alone prefers the loop x.y, and the loop composes with
        // itself, so the preference applies on both sides.
        let loop_mono = Monomial::new(
            PathTerm::from_edges(&g2, &[e("x.y")]).unwrap(),
            PathTerm::from_edges(&g2, &[e("x.y")]).unwrap(),
        )
        .unwrap();
        assert_eq!(p2.coeff(&loop_mono), crate::algebra::Scalar::one());
        assert!(p2.coeff(&mono).is_zero());
    }

    #[test]
    fn malformed_elements_are_rejected() {
        let g = fixtures::rose(2);
        for bad in [
            "",
            "[",
            "[e",
            "e]",
            "2[e]",
            "[e|f|e]",
            "[q]",
            "[e.f.",
            "1/0*[e]",
            "[e]x",
            "[e|v]x",
        ] {
            assert!(
                parse_element::<Q>(&g, bad).is_err(),
                "accepted {bad:?}"
            );
        }
        // Mismatched ranges read fine but do not form a monomial.
        let g2 = fixtures::line(3);
        assert!(parse_element::<Q>(&g2, "[e2|e1]").is_err());
    }

    #[test]
    fn composite_labels_nest_inside_brackets() {
        let g = Graph::build(&["u", "w"], &[("[ef]", "u", "w"), ("g", "w", "u")]).unwrap();
        let x: AlgebraElement<Q> = parse_element(&g, "3*[[ef].g]").unwrap();
        let mono = Monomial::new(
            PathTerm::from_edges(&g, &[e("[ef]"), e("g")]).unwrap(),
            PathTerm::new(&g, v("u"), vec![]).unwrap(),
        )
        .unwrap();
        assert_eq!(x.coeff(&mono), Scalar::from_int(3));
        let back: AlgebraElement<Q> = parse_element(&g, &render_element(&x)).unwrap();
        assert_eq!(back, x);
    }
}
