//! Distance-regularity certification and intersection numbers.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use thiserror::Error;

use crate::distance::{bfs_distances, DistanceTable};
use crate::graph::Graph;
use crate::linalg::IntMatrix;

/// Intersection numbers `p^h_{ij}` of a certified distance-regular graph,
/// with the usual derived sequences. Indices outside `0..=D` read as 0.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct IntersectionArray {
    diameter: usize,
    valency: i64,
    #[cfg_attr(feature = "serde", serde(skip))]
    p: Vec<i64>,
    c: Vec<i64>,
    b: Vec<i64>,
    a: Vec<i64>,
    k: Vec<i64>,
    bipartite: bool,
}

impl IntersectionArray {
    /// Builds the array from a full `(D+1)³` tensor indexed `[h][i][j]`.
    fn from_tensor(diameter: usize, p: Vec<i64>) -> Self {
        let d = diameter;
        let at = |h: usize, i: usize, j: usize| p[(h * (d + 1) + i) * (d + 1) + j];
        let c: Vec<i64> = (0..=d).map(|i| if i == 0 { 0 } else { at(i, 1, i - 1) }).collect();
        let b: Vec<i64> = (0..=d).map(|i| if i == d { 0 } else { at(i, 1, i + 1) }).collect();
        let a: Vec<i64> = (0..=d).map(|i| at(i, 1, i)).collect();
        let k: Vec<i64> = (0..=d).map(|i| at(0, i, i)).collect();
        let bipartite = a.iter().all(|&x| x == 0);
        IntersectionArray { diameter, valency: k[1.min(d)], p, c, b, a, k, bipartite }
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn valency(&self) -> i64 {
        self.valency
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartite
    }

    pub fn p(&self, h: usize, i: usize, j: usize) -> i64 {
        let d = self.diameter;
        if h > d || i > d || j > d {
            return 0;
        }
        self.p[(h * (d + 1) + i) * (d + 1) + j]
    }

    pub fn c(&self, i: usize) -> i64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn b(&self, i: usize) -> i64 {
        self.b.get(i).copied().unwrap_or(0)
    }

    pub fn a(&self, i: usize) -> i64 {
        self.a.get(i).copied().unwrap_or(0)
    }

    /// `k_i = |Γ_i(x)|`
    pub fn k(&self, i: usize) -> i64 {
        self.k.get(i).copied().unwrap_or(0)
    }

    /// `c_1 c_2 ⋯ c_i` (empty product is 1).
    pub fn c_product(&self, i: usize) -> i64 {
        (1..=i).map(|j| self.c(j)).product()
    }

    /// `{b_0, …, b_{D−1}; c_1, …, c_D}`
    pub fn b_sequence(&self) -> &[i64] {
        &self.b[..self.diameter]
    }

    pub fn c_sequence(&self) -> &[i64] {
        &self.c[1..]
    }

    pub fn layer_sizes(&self) -> &[i64] {
        &self.k
    }

    /// Checks the standard identities that every intersection array satisfies.
    /// A failure here means the certification itself is broken.
    pub fn check_invariants(&self, vertex_count: usize) -> Result<(), String> {
        let d = self.diameter;
        let k = self.valency;
        for i in 1..=d {
            if self.c(i) == 0 {
                return Err(alloc::format!("c_{i} = 0"));
            }
        }
        for i in 0..d {
            if self.b(i) == 0 {
                return Err(alloc::format!("b_{i} = 0"));
            }
        }
        for i in 0..=d {
            if self.c(i) + self.a(i) + self.b(i) != k {
                return Err(alloc::format!("c_{i} + a_{i} + b_{i} != k"));
            }
            let num: i64 = (0..i).map(|j| self.b(j)).product();
            if self.k(i) * self.c_product(i) != num {
                return Err(alloc::format!("k_{i} disagrees with b_0⋯b_{{i-1}}/(c_1⋯c_i)"));
            }
            if self.bipartite && self.b(i) + self.c(i) != k {
                return Err(alloc::format!("bipartite but b_{i} + c_{i} != k"));
            }
            for h in 0..=d {
                for j in 0..=d {
                    if self.p(h, i, j) != self.p(h, j, i) {
                        return Err(alloc::format!("p^{h}_{{{i}{j}}} != p^{h}_{{{j}{i}}}"));
                    }
                }
            }
        }
        if self.k.iter().sum::<i64>() != vertex_count as i64 {
            return Err(String::from("layer sizes do not sum to the vertex count"));
        }
        Ok(())
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: &[i64]| xs.iter().map(|x| alloc::format!("{x}")).collect::<Vec<_>>().join(",");
        write!(f, "{{{};{}}}", join(self.b_sequence()), join(self.c_sequence()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrgRejection {
    #[error("graph is not regular: vertex {vertex} has degree {degree}, vertex 0 has degree {expected}")]
    NotRegular { vertex: usize, degree: usize, expected: usize },
    #[error(
        "p^{h}_{{{i}{j}}} is not constant: pair ({x},{y}) gives {got}, first pair at distance {h} gave {expected}"
    )]
    CountMismatch { h: usize, i: usize, j: usize, x: usize, y: usize, expected: i64, got: i64 },
    #[error("intersection array invariant failed: {0}")]
    Invariant(String),
}

/// Counts `|Γ_i(x) ∩ Γ_j(y)|` for every pair and checks that the counts depend
/// only on `∂(x, y)`.
pub fn certify_drg(g: &Graph, dt: &DistanceTable) -> Result<IntersectionArray, DrgRejection> {
    let n = g.vertex_count();
    let expected = g.degree(0);
    if let Some(v) = (0..n).find(|&v| g.degree(v) != expected) {
        return Err(DrgRejection::NotRegular { vertex: v, degree: g.degree(v), expected });
    }
    let d = dt.diameter();
    let width = d + 1;
    let mut tensor: Vec<Option<Vec<i64>>> = vec![None; width];
    let mut counts = vec![0i64; width * width];
    for x in 0..n {
        let row_x = dt.row(x);
        for y in 0..n {
            let h = dt.get(x, y);
            let row_y = dt.row(y);
            counts.iter_mut().for_each(|c| *c = 0);
            for z in 0..n {
                counts[row_x[z] as usize * width + row_y[z] as usize] += 1;
            }
            match &tensor[h] {
                None => tensor[h] = Some(counts.clone()),
                Some(first) => {
                    if let Some(pos) = first.iter().zip(&counts).position(|(a, b)| a != b) {
                        return Err(DrgRejection::CountMismatch {
                            h,
                            i: pos / width,
                            j: pos % width,
                            x,
                            y,
                            expected: first[pos],
                            got: counts[pos],
                        });
                    }
                }
            }
        }
    }
    let p: Vec<i64> = tensor.into_iter().flat_map(|t| t.expect("every distance 0..=D is realised")).collect();
    let ia = IntersectionArray::from_tensor(d, p);
    ia.check_invariants(n).map_err(DrgRejection::Invariant)?;
    Ok(ia)
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
#[cfg_attr(feature = "serde", serde(tag = "verdict", content = "reason", rename_all = "snake_case"))]
pub enum GateVerdict {
    Pass,
    Fail(String),
}

impl GateVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, GateVerdict::Pass)
    }
}

/// Bipartite, diameter at least 4 and valency at least 3.
pub fn admissibility_gate(ia: &IntersectionArray) -> GateVerdict {
    if !ia.is_bipartite() {
        return GateVerdict::Fail(String::from("graph is not bipartite"));
    }
    if ia.diameter() < 4 {
        return GateVerdict::Fail(alloc::format!("diameter {} is below 4", ia.diameter()));
    }
    if ia.valency() < 3 {
        return GateVerdict::Fail(alloc::format!("valency {} is below 3", ia.valency()));
    }
    GateVerdict::Pass
}

/// A certified distance-regular graph with its distance matrices.
#[derive(Debug, Clone)]
pub struct Scheme {
    graph: Graph,
    distances: DistanceTable,
    ia: IntersectionArray,
    distance_matrices: Vec<IntMatrix>,
}

impl Scheme {
    pub fn certify(graph: Graph) -> Result<Self, DrgRejection> {
        let distances = bfs_distances(&graph);
        let ia = certify_drg(&graph, &distances)?;
        let n = graph.vertex_count();
        let distance_matrices =
            (0..=ia.diameter()).map(|i| IntMatrix::from_fn(n, n, |u, v| (distances.get(u, v) == i) as i64)).collect();
        Ok(Scheme { graph, distances, ia, distance_matrices })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceTable {
        &self.distances
    }

    pub fn ia(&self) -> &IntersectionArray {
        &self.ia
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn diameter(&self) -> usize {
        self.ia.diameter()
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.distances.get(u, v)
    }

    /// `A_i`; the zero matrix for `i > D`.
    pub fn distance_matrix(&self, i: usize) -> IntMatrix {
        self.distance_matrices
            .get(i)
            .cloned()
            .unwrap_or_else(|| IntMatrix::zeros(self.vertex_count(), self.vertex_count()))
    }

    pub fn distance_matrices(&self) -> &[IntMatrix] {
        &self.distance_matrices
    }

    /// `(E*_i A_j v)` for a real vector `v`: sums of `v` over `Γ_j(z)` for `z ∈ Γ_i(x)`.
    pub fn apply_distance(&self, j: usize, v: &[f64]) -> Vec<f64> {
        let n = self.vertex_count();
        (0..n)
            .map(|z| {
                let row = self.distances.row(z);
                (0..n).filter(|&w| row[w] as usize == j).map(|w| v[w]).sum()
            })
            .collect()
    }
}

/// The cells `D^i_j(x, y) = {z : ∂(x,z) = i, ∂(y,z) = j}` for `∂(x, y) = 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistancePartition {
    diameter: usize,
    cells: Vec<Vec<usize>>,
}

impl DistancePartition {
    pub fn cell(&self, i: usize, j: usize) -> &[usize] {
        if i > self.diameter || j > self.diameter {
            return &[];
        }
        &self.cells[i * (self.diameter + 1) + j]
    }

    pub fn len(&self, i: usize, j: usize) -> usize {
        self.cell(i, j).len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vertices {x} and {y} are at distance {distance}, not 2")]
pub struct NotAtDistanceTwo {
    pub x: usize,
    pub y: usize,
    pub distance: usize,
}

pub fn distance_partition(dt: &DistanceTable, x: usize, y: usize) -> Result<DistancePartition, NotAtDistanceTwo> {
    let distance = dt.get(x, y);
    if distance != 2 {
        return Err(NotAtDistanceTwo { x, y, distance });
    }
    let d = dt.diameter();
    let mut cells = vec![Vec::new(); (d + 1) * (d + 1)];
    for z in 0..dt.vertex_count() {
        cells[dt.get(x, z) * (d + 1) + dt.get(y, z)].push(z);
    }
    Ok(DistancePartition { diameter: d, cells })
}
