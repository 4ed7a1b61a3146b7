use alloc::vec::Vec;

use crate::drg::IntersectionArray;

/// `φ_i`, `ω_i` for `2 ≤ i ≤ D−2`, stored from index 2.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct PhiOmegaSequences {
    pub eta: f64,
    pub phi: Vec<f64>,
    pub omega: Vec<f64>,
    /// First `i` whose `φ_i` needed a division by `ω_{i−1} = 0`.
    pub undefined_from: Option<usize>,
}

impl PhiOmegaSequences {
    pub fn phi(&self, i: usize) -> Option<f64> {
        i.checked_sub(2).and_then(|j| self.phi.get(j).copied())
    }

    pub fn omega(&self, i: usize) -> Option<f64> {
        i.checked_sub(2).and_then(|j| self.omega.get(j).copied())
    }

    /// Whether `ω_2..ω_{D−3}` are all positive (beyond `zero_tol`).
    pub fn omega_positive(&self, diameter: usize, zero_tol: f64) -> bool {
        self.undefined_from.is_none_or(|i| i > diameter.saturating_sub(3))
            && (2..=diameter.saturating_sub(3)).all(|i| self.omega(i).is_some_and(|w| w > zero_tol))
    }
}

/// Runs the recurrence starting from `φ_2 = −(η+1)`, `ω_2 = b_2 − c_2 φ_2`.
/// Requires `D ≥ 4`; shorter diameters give empty sequences.
pub fn phi_omega(ia: &IntersectionArray, eta: f64) -> PhiOmegaSequences {
    let d = ia.diameter();
    let mut out = PhiOmegaSequences { eta, phi: Vec::new(), omega: Vec::new(), undefined_from: None };
    if d < 4 {
        return out;
    }
    let f = |x: i64| x as f64;
    let phi2 = -(eta + 1.0);
    out.phi.push(phi2);
    out.omega.push(f(ia.b(2)) - f(ia.c(2)) * phi2);
    for i in 3..=d - 2 {
        let prev_omega = out.omega[i - 3];
        if prev_omega == 0.0 {
            out.undefined_from = Some(i);
            break;
        }
        let prev_phi = out.phi[i - 3];
        let phi = f(ia.b(i + 1)) / prev_omega * prev_phi;
        out.phi.push(phi);
        out.omega.push(f(ia.c(i - 2)) * prev_phi + f(ia.b(i)) - f(ia.c(i)) * phi);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Psi {
    Finite(f64),
    Infinite,
}

/// `ψ = b_2 − b_2 b_3 / (1 + η)`, infinite at `η = −1`.
pub fn psi(ia: &IntersectionArray, eta: f64) -> Psi {
    if eta == -1.0 {
        return Psi::Infinite;
    }
    let (b2, b3) = (ia.b(2) as f64, ia.b(3) as f64);
    Psi::Finite(b2 - b2 * b3 / (1.0 + eta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::drg::Scheme;
    use crate::graph::{generate_bipartite_double, generate_hypercube, generate_kneser};

    #[test]
    fn q4_minus_two() {
        let s = Scheme::certify(generate_hypercube(4).unwrap()).unwrap();
        let po = phi_omega(s.ia(), -2.0);
        assert_eq!(po.phi, [1.0]);
        assert_eq!(po.omega, [0.0]);
        assert_eq!(po.undefined_from, None);
        assert!(po.omega_positive(4, 1e-9));
    }

    #[test]
    fn eta_minus_one() {
        let s = Scheme::certify(generate_hypercube(5).unwrap()).unwrap();
        assert_eq!(psi(s.ia(), -1.0), Psi::Infinite);
        let po = phi_omega(s.ia(), -1.0);
        assert_eq!(po.phi(2), Some(0.0));
        assert_eq!(psi(s.ia(), -2.0), Psi::Finite(3.0 + 3.0 * 2.0));
    }

    #[test]
    fn doubled_odd_sequences() {
        let s = Scheme::certify(generate_bipartite_double(&generate_kneser(7, 3).unwrap()).unwrap()).unwrap();
        let po = phi_omega(s.ia(), 2.0);
        let expect_phi = [-3.0, -1.0, -1.0, -1.0 / 3.0];
        let expect_omega = [6.0, 1.0, 3.0, 0.0];
        for (a, b) in po.phi.iter().zip(expect_phi) {
            assert!((a - b).abs() < 1e-12);
        }
        for (a, b) in po.omega.iter().zip(expect_omega) {
            assert!((a - b).abs() < 1e-12);
        }
        assert!(po.omega_positive(7, 1e-9));
    }
}
