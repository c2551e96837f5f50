//! Weighted dual graph of the exceptional curves `E_1, ..., E_n`.

use std::fmt::Write;

use num_bigint::BigInt;

use crate::proximity::ProximityMatrix;

/// Vertex `i` has weight `w_i = -E_i·E_i`; `{i, j}` is an edge when `E_i` and
/// `E_j` meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualGraph {
    weights: Vec<usize>,
    multiplicities: Vec<BigInt>,
    edges: Vec<(usize, usize)>,
}

impl DualGraph {
    /// `w_i = 1 + reach(i) - i` and edges `{i, reach(i)}` for `i < n`.
    pub fn build(p: &ProximityMatrix) -> Self {
        let n = p.n();
        let weights = (1..=n).map(|i| 1 + p.reach(i) - i).collect();
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, p.reach(i))).collect();
        edges.sort_unstable();
        DualGraph { weights, multiplicities: p.inverse_row(n).to_vec(), edges }
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn weight(&self, i: usize) -> usize {
        self.weights[i - 1]
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    /// Edges `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(i, j)| i == v || j == v).count()
    }

    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(i, j)| {
                if i == v {
                    Some(j)
                } else if j == v {
                    Some(i)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Vertices of degree at least three, and of degree at most one.
    pub fn stars_and_ends(&self) -> (Vec<usize>, Vec<usize>) {
        let deg: Vec<usize> = (1..=self.n()).map(|v| self.degree(v)).collect();
        let stars = (1..=self.n()).filter(|&v| deg[v - 1] >= 3).collect();
        let ends = (1..=self.n()).filter(|&v| deg[v - 1] <= 1).collect();
        (stars, ends)
    }

    pub fn is_tree(&self) -> bool {
        let n = self.n();
        if self.edges.len() + 1 != n {
            return false;
        }
        let mut seen = vec![false; n + 1];
        let mut stack = vec![1];
        seen[1] = true;
        while let Some(v) = stack.pop() {
            for u in self.neighbours(v) {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen[1..].iter().all(|&s| s)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph dual {\n  node [shape=circle];\n");
        for i in 1..=self.n() {
            let _ =
                writeln!(out, "  e{i} [label=\"e{i} (w={}, a={})\"];", self.weights[i - 1], self.multiplicities[i - 1]);
        }
        for &(i, j) in &self.edges {
            let _ = writeln!(out, "  e{i} -- e{j};");
        }
        out.push_str("}\n");
        out
    }

    /// One line per vertex: label, then the sorted neighbour list.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.n() {
            let nb: Vec<String> = self.neighbours(i).iter().map(|j| format!("e{j}")).collect();
            let _ = writeln!(
                out,
                "e{i} (w={}, a={}): {}",
                self.weights[i - 1],
                self.multiplicities[i - 1],
                if nb.is_empty() { "-".to_string() } else { nb.join(" ") }
            );
        }
        out
    }
}
