use alloc::vec::Vec;

use crate::distance::DistanceTable;
use crate::graph::Graph;

/// Counts for one triple with `∂(x,y) = 2`, `∂(x,z) = ∂(y,z) = i`:
/// `g1 = |Γ(x) ∩ Γ(y) ∩ Γ_{i−1}(z)|`, `g2 = |Γ_{i−1}(x) ∩ Γ_{i−1}(y) ∩ Γ(z)|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct TripleCountSample {
    pub i: usize,
    pub g1: i64,
    pub g2: i64,
    pub witness: (usize, usize, usize),
}

/// All level-`i` samples with first vertex `x`, in `(y, z)` order.
pub fn collect_triples_at(g: &Graph, dt: &DistanceTable, i: usize, x: usize) -> Vec<TripleCountSample> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    if i == 0 {
        return out;
    }
    for y in (0..n).filter(|&y| dt.get(x, y) == 2) {
        for z in (0..n).filter(|&z| dt.get(x, z) == i && dt.get(y, z) == i) {
            let g1 = g.neighbors(x).iter().filter(|&&w| g.is_adjacent(w, y) && dt.get(w, z) == i - 1).count();
            let g2 = g.neighbors(z).iter().filter(|&&w| dt.get(w, x) == i - 1 && dt.get(w, y) == i - 1).count();
            out.push(TripleCountSample { i, g1: g1 as i64, g2: g2 as i64, witness: (x, y, z) });
        }
    }
    out
}

/// Exhaustive level-`i` samples over every base vertex, sorted by witness.
pub fn collect_triples(g: &Graph, dt: &DistanceTable, i: usize) -> Vec<TripleCountSample> {
    (0..g.vertex_count()).flat_map(|x| collect_triples_at(g, dt, i, x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::bfs_distances;
    use crate::graph::generate_hypercube;

    #[test]
    fn q4_level_two_is_diagonal() {
        let g = generate_hypercube(4).unwrap();
        let dt = bfs_distances(&g);
        let s = collect_triples(&g, &dt, 2);
        // 16 · 6 pairs, each with p²_22 = 4 vertices z.
        assert_eq!(s.len(), 16 * 6 * 4);
        assert!(s.iter().all(|t| t.g1 == t.g2 && t.g1 == 1));
        assert!(s.windows(2).all(|w| w[0].witness < w[1].witness));
    }

    #[test]
    fn sample_bounds() {
        let g = generate_hypercube(5).unwrap();
        let dt = bfs_distances(&g);
        for t in collect_triples(&g, &dt, 3) {
            let (x, y, z) = t.witness;
            assert_eq!((dt.get(x, y), dt.get(x, z), dt.get(y, z)), (2, 3, 3));
            assert!((0..=2).contains(&t.g1) && (0..=3).contains(&t.g2));
        }
    }
}
