//! All-pairs shortest-path distances by breadth-first search.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Exact path-length distances between every pair of vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u32>,
    diameter: usize,
}

impl DistanceTable {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.n + v] as usize
    }

    /// Row of distances from `u`.
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// Vertices at distance exactly `i` from `u`, in increasing order.
    pub fn sphere(&self, u: usize, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&v| self.get(u, v) == i).collect()
    }

    /// Number of vertices at each distance `0..=D` from `u`.
    pub fn distribution(&self, u: usize) -> Vec<usize> {
        let mut counts = vec![0; self.diameter + 1];
        for &d in self.row(u) {
            counts[d as usize] += 1;
        }
        counts
    }
}

/// Runs one BFS per vertex. The graph is connected by construction.
pub fn bfs_distances(g: &Graph) -> DistanceTable {
    let n = g.vertex_count();
    let mut dist = vec![u32::MAX; n * n];
    let mut queue = VecDeque::with_capacity(n);
    let mut diameter = 0;
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == u32::MAX {
                    row[w] = du + 1;
                    diameter = diameter.max(du as usize + 1);
                    queue.push_back(w);
                }
            }
        }
    }
    DistanceTable { n, dist, diameter }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate_bipartite_double, generate_hypercube, generate_petersen};

    #[test]
    fn k2_distances() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let dt = bfs_distances(&g);
        assert_eq!(dt.get(0, 1), 1);
        assert_eq!(dt.diameter(), 1);
    }

    #[test]
    fn layer_counts() {
        let q4 = bfs_distances(&generate_hypercube(4).unwrap());
        for v in 0..16 {
            assert_eq!(q4.distribution(v), vec![1, 4, 6, 4, 1]);
        }
        let des = bfs_distances(&generate_bipartite_double(&generate_petersen()).unwrap());
        assert_eq!(des.diameter(), 5);
        assert_eq!(des.distribution(7), vec![1, 3, 6, 6, 3, 1]);
    }

    #[test]
    fn metric_axioms_on_q4() {
        let dt = bfs_distances(&generate_hypercube(4).unwrap());
        for u in 0..16 {
            assert_eq!(dt.get(u, u), 0);
            for v in 0..16 {
                assert_eq!(dt.get(u, v), dt.get(v, u));
                // Hamming distance on the bit labels.
                assert_eq!(dt.get(u, v), (u ^ v).count_ones() as usize);
                for w in 0..16 {
                    assert!(dt.get(u, w) <= dt.get(u, v) + dt.get(v, w));
                }
            }
        }
    }
}
