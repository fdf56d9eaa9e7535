//! Hasse diagrams of the weak orders as Graphviz DOT.

use std::fmt::{Display, Write};

use crate::cube::SignVector;
use crate::perm::Permutation;
use crate::tree::Tree;

/// Render nodes and cover edges as a DOT digraph. Nodes are numbered in the
/// given order; edges point upward.
pub fn to_dot<T: Display + Ord>(name: &str, nodes: &[T], covers: impl Fn(&T) -> Vec<T>) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (i, node) in nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{node}\"];").unwrap();
    }
    for (i, node) in nodes.iter().enumerate() {
        let mut targets: Vec<usize> = covers(node)
            .iter()
            .map(|c| nodes.binary_search(c).expect("cover outside node set"))
            .collect();
        targets.sort_unstable();
        for j in targets {
            writeln!(out, "  n{i} -> n{j};").unwrap();
        }
    }
    out.push_str("}\n");
    out
}

pub fn perm_dot(n: usize) -> String {
    to_dot(&format!("S{n}"), &Permutation::all(n), |p| p.up_covers())
}

pub fn tree_dot(n: usize) -> String {
    to_dot(&format!("Y{n}"), &Tree::enumerate(n), |t| t.up_covers())
}

/// The cube `Q_n` for `n ≥ 1`; `Q_0` is the single unit vertex.
pub fn cube_dot(n: usize) -> String {
    let nodes = if n == 0 {
        vec![SignVector::unit()]
    } else {
        SignVector::enumerate(n)
    };
    to_dot(&format!("Q{n}"), &nodes, |e| e.up_covers())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge_count(dot: &str) -> usize {
        dot.lines().filter(|l| l.contains("->")).count()
    }

    #[test]
    fn small_diagrams() {
        assert_eq!(
            perm_dot(2),
            "digraph S2 {\n  rankdir=BT;\n  n0 [label=\"1 2\"];\n  n1 [label=\"2 1\"];\n  n0 -> n1;\n}\n"
        );
        assert_eq!(edge_count(&perm_dot(4)), 36);
        assert_eq!(edge_count(&tree_dot(3)), 5);
        assert_eq!(edge_count(&cube_dot(4)), 12);
        assert_eq!(perm_dot(4), perm_dot(4));
    }

    #[test]
    fn cover_digraphs_are_acyclic() {
        for dot in [perm_dot(4), tree_dot(5), cube_dot(5)] {
            let nodes = dot.lines().filter(|l| l.contains("label")).count();
            let mut indegree = vec![0; nodes];
            let mut edges = vec![Vec::new(); nodes];
            for line in dot.lines().filter(|l| l.contains("->")) {
                let ids: Vec<usize> = line
                    .trim()
                    .trim_end_matches(';')
                    .split(" -> ")
                    .map(|s| s[1..].parse().unwrap())
                    .collect();
                edges[ids[0]].push(ids[1]);
                indegree[ids[1]] += 1;
            }
            let mut ready: Vec<usize> = (0..nodes).filter(|&i| indegree[i] == 0).collect();
            let mut seen = 0;
            while let Some(i) = ready.pop() {
                seen += 1;
                for &j in &edges[i] {
                    indegree[j] -= 1;
                    if indegree[j] == 0 {
                        ready.push(j);
                    }
                }
            }
            assert_eq!(seen, nodes);
        }
    }
}
