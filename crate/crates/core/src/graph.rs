//! Simple undirected graphs and the generators used to build the corpus.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("vertex {0} has a loop")]
    Loop(usize),
    #[error("edge {0}-{1} listed more than once")]
    MultiEdge(usize, usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    OutOfRange(usize, usize, usize),
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
    #[error("hypercube dimension must be at least 2, got {0}")]
    HypercubeDimension(u32),
    #[error("Kneser parameters need n >= 2k > 0, got n={0}, k={1}")]
    KneserParameters(usize, usize),
}

/// Connected simple undirected graph on vertices `0..vertex_count`.
///
/// Neighbor lists are sorted, so iteration order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// disconnected inputs.
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::Empty);
        }
        let mut seen = BTreeSet::new();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(GraphError::OutOfRange(u, v, vertex_count));
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(GraphError::MultiEdge(key.0, key.1));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let graph = Graph { adjacency };
        graph.check_connected()?;
        Ok(graph)
    }

    fn check_connected(&self) -> Result<(), GraphError> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        match seen.iter().position(|s| !s) {
            Some(v) => Err(GraphError::Disconnected(v)),
            None => Ok(()),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }
}

/// The `n`-cube: vertices are `n`-bit labels, adjacent at Hamming distance 1.
pub fn generate_hypercube(n: u32) -> Result<Graph, GraphError> {
    if !(2..=20).contains(&n) {
        return Err(GraphError::HypercubeDimension(n));
    }
    let count = 1usize << n;
    let mut edges = Vec::with_capacity(count * n as usize / 2);
    for v in 0..count {
        for bit in 0..n {
            let w = v ^ (1 << bit);
            if v < w {
                edges.push((v, w));
            }
        }
    }
    Graph::from_edges(count, &edges)
}

/// Bipartite double: vertex `(v, side)` is stored at index `2v + side`, and
/// `(u, 0) ~ (w, 1)` exactly when `u ~ w` in `g`.
///
/// The double of a connected bipartite graph is two disjoint copies of it,
/// which is rejected as disconnected.
pub fn generate_bipartite_double(g: &Graph) -> Result<Graph, GraphError> {
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity(2 * g.edge_count());
    for (u, w) in g.edges() {
        edges.push((2 * u, 2 * w + 1));
        edges.push((2 * w, 2 * u + 1));
    }
    Graph::from_edges(2 * n, &edges)
}

/// Kneser graph `K(n, k)`: `k`-subsets of `0..n` in lexicographic order,
/// adjacent when disjoint.
pub fn generate_kneser(n: usize, k: usize) -> Result<Graph, GraphError> {
    if k == 0 || n < 2 * k || n > 24 {
        return Err(GraphError::KneserParameters(n, k));
    }
    let subsets: Vec<u32> = (0u32..(1 << n)).filter(|m| m.count_ones() as usize == k).collect();
    let mut edges = Vec::new();
    for (i, &a) in subsets.iter().enumerate() {
        for (j, &b) in subsets.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(subsets.len(), &edges)
}

/// The Petersen graph, realised as `K(5, 2)`.
pub fn generate_petersen() -> Graph {
    generate_kneser(5, 2).expect("K(5,2) is a valid Kneser graph")
}

/// The cycle `C_n` for `n >= 3`.
pub fn generate_cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::Empty);
    }
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_connected_graph() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn rejects_loops_and_multi_edges() {
        assert_eq!(Graph::from_edges(1, &[(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(Graph::from_edges(2, &[(0, 1), (1, 0)]), Err(GraphError::MultiEdge(0, 1)));
        assert_eq!(Graph::from_edges(3, &[(0, 1)]), Err(GraphError::Disconnected(2)));
    }

    #[test]
    fn hypercube_shapes() {
        let q2 = generate_hypercube(2).unwrap();
        assert_eq!(q2, generate_cycle(4).map(|c| relabel_c4(&c)).unwrap());
        let q4 = generate_hypercube(4).unwrap();
        assert_eq!(q4.vertex_count(), 16);
        assert_eq!(q4.edge_count(), 32);
        let q5 = generate_hypercube(5).unwrap();
        assert!((0..32).all(|v| q5.degree(v) == 5));
        assert_eq!(generate_hypercube(1), Err(GraphError::HypercubeDimension(1)));
    }

    // C4 as 0-1-2-3-0 versus Q2 as 0-1-3-2-0.
    fn relabel_c4(c: &Graph) -> Graph {
        let map = [0usize, 1, 3, 2];
        let edges: Vec<_> = c.edges().map(|(u, v)| (map[u], map[v])).collect();
        Graph::from_edges(4, &edges).unwrap()
    }

    #[test]
    fn double_of_bipartite_graph_is_disconnected() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(generate_bipartite_double(&k2), Err(GraphError::Disconnected(1)));
        let c5 = generate_cycle(5).unwrap();
        let c10 = generate_bipartite_double(&c5).unwrap();
        assert_eq!(c10.vertex_count(), 10);
        assert!((0..10).all(|v| c10.degree(v) == 2));
    }

    #[test]
    fn desargues_and_doubled_odd_sizes() {
        let desargues = generate_bipartite_double(&generate_petersen()).unwrap();
        assert_eq!(desargues.vertex_count(), 20);
        assert!((0..20).all(|v| desargues.degree(v) == 3));
        let odd = generate_bipartite_double(&generate_kneser(7, 3).unwrap()).unwrap();
        assert_eq!(odd.vertex_count(), 70);
        assert!((0..70).all(|v| odd.degree(v) == 4));
    }
}
