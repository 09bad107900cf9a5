//! Small graphs shared by unit tests across modules.

use crate::graph::Graph;

/// The line graph A_n: vertices v{n-1} -> ... -> v0.
pub fn line(n: usize) -> Graph {
    crate::moves::line_graph(n as u64).unwrap()
}

/// A single vertex `v` carrying `k` loops (`e`, then `f`, then `g3`...).
pub fn rose(k: usize) -> Graph {
    let names: Vec<String> = (0..k)
        .map(|i| match i {
            0 => "e".to_string(),
            1 => "f".to_string(),
            i => format!("g{}", i + 1),
        })
        .collect();
    let edges: Vec<(&str, &str, &str)> = names.iter().map(|n| (n.as_str(), "v", "v")).collect();
    Graph::build(&["v"], &edges).unwrap()
}

/// Totally looped 4-vertex graph: a loop at v1 feeding v2, two loops at v2
/// feeding back to v1 and on to the sink v3, and a looped v4 also feeding v3.
pub fn iso_base() -> Graph {
    Graph::build(
        &["v1", "v2", "v3", "v4"],
        &[
            ("l1", "v1", "v1"),
            ("a", "v1", "v2"),
            ("l2", "v2", "v2"),
            ("l2b", "v2", "v2"),
            ("b", "v2", "v1"),
            ("c", "v2", "v3"),
            ("l4", "v4", "v4"),
            ("d", "v4", "v3"),
        ],
    )
    .unwrap()
}

/// Source-free 4-vertex graph with a 2-cycle v1/v2, a 2-cycle v1/v3 and a
/// pendant sink v4. Collapsing at different vertices yields non-isomorphic
/// totally looped graphs.
pub fn collapse_example() -> Graph {
    Graph::build(
        &["v1", "v2", "v3", "v4"],
        &[
            ("e1", "v1", "v2"),
            ("e2", "v2", "v1"),
            ("f1", "v1", "v3"),
            ("f2", "v3", "v1"),
            ("f", "v1", "v4"),
        ],
    )
    .unwrap()
}

/// A loop at v1 followed by an exit edge to the sink v2.
pub fn loop_tail() -> Graph {
    Graph::build(&["v1", "v2"], &[("l", "v1", "v1"), ("t", "v1", "v2")]).unwrap()
}
