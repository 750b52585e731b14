//! Vertex-side spectral theory of the weighted random walk `W(ε)` and its
//! connection to the arc-side walk `U(ε)`.
//!
//! For small `ε` the doubled eigenvalue 1 of the decoupled walk `W⁽⁰⁾` splits
//! into `1` and `cos θ(ε) = 1 + ε λ⁽¹⁾ + O(ε²)` with
//! `λ⁽¹⁾ = -(1/|A1| + 1/|A2|)`. Each vertex eigenvector lifts to a pair of
//! arc eigenvectors with eigenvalues `e^{±iθ}`.

mod jacobi;
mod lift;

use alloc::vec::Vec;

use crate::dense::Matrix;
use crate::graph::{BridgedGraph, Region};
use crate::{Error, Result};

pub use jacobi::{eigendecompose, MAX_SWEEPS, OFF_DIAGONAL_TOL};
pub use lift::{
    closed_form_lift, degree_weighted_lift, fixed_vector, lift_to_arc, overlaps, truncated_fixed_vector, ArcLift,
    OverlapReport, Sign,
};

/// Eigenvalues at or above `1 - TOP_EIGENVALUE_GAP` count as eigenvalue 1.
pub const TOP_EIGENVALUE_GAP: f64 = 1e-12;
/// Eigenvalues within this distance of `λ2` form its cluster.
pub const CLUSTER_TOL: f64 = 1e-8;

/// An eigenvalue with its eigenvector. `T = f64` on the vertex side,
/// `T = Complex64` on the arc side.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralPair<T> {
    pub value: T,
    pub vector: Vec<T>,
}

/// `W(ε)_{x,y} = w(x,y) / m(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TransitionMatrix {
    pub entries: Matrix,
    pub epsilon: f64,
}

/// `W_sym(ε)_{x,y} = w(x,y) / √(m(x) m(y)) = (d_ε S d_ε*)_{x,y}`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetrizedMatrix {
    pub entries: Matrix,
    pub epsilon: f64,
}

pub fn build_w(g: &BridgedGraph, epsilon: f64) -> TransitionMatrix {
    let n = g.vertex_count();
    let mut entries = Matrix::zeros(n, n);
    for a in g.arcs() {
        entries[(a.origin, a.terminal)] += g.transition_prob(a.index, epsilon);
    }
    TransitionMatrix { entries, epsilon }
}

pub fn symmetrize(g: &BridgedGraph, epsilon: f64) -> SymmetrizedMatrix {
    let n = g.vertex_count();
    let mut entries = Matrix::zeros(n, n);
    for a in g.arcs() {
        let m = g.out_weight(a.origin, epsilon) * g.out_weight(a.terminal, epsilon);
        entries[(a.origin, a.terminal)] += g.weight(a.index, epsilon) / libm::sqrt(m);
    }
    SymmetrizedMatrix { entries, epsilon }
}

/// The first two terms of `W(ε) = W⁽⁰⁾ + ε W⁽¹⁾ + O(ε²)`.
///
/// `W⁽⁰⁾` is the block-diagonal simple random walk on `H1` and `H2`.
/// `W⁽¹⁾` is nonzero only on the two boundary rows: `-1/deg(ξ)²` towards
/// interior neighbours and `1/deg(ξ)` across the bridge.
pub fn split_perturbation(g: &BridgedGraph) -> (Matrix, Matrix) {
    let n = g.vertex_count();
    let mut w0 = Matrix::zeros(n, n);
    let mut w1 = Matrix::zeros(n, n);
    for a in g.arcs() {
        let d = g.degree(a.origin) as f64;
        match g.region(a.index) {
            Region::Bridge => w1[(a.origin, a.terminal)] = 1.0 / d,
            _ => {
                w0[(a.origin, a.terminal)] = 1.0 / d;
                if g.is_boundary(a.origin) {
                    w1[(a.origin, a.terminal)] = -1.0 / (d * d);
                }
            }
        }
    }
    (w0, w1)
}

/// The first-order splitting of eigenvalue 1 obtained from `Π W⁽¹⁾ Π`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedSplitting {
    /// Action of `Π W⁽¹⁾ Π` on `Ran(Π)` in the basis `(1_{V1}, 1_{V2})`.
    pub reduced: [[f64; 2]; 2],
    /// The nonzero eigenvalue `λ⁽¹⁾`.
    pub lambda1: f64,
    /// Eigenvector of `λ⁽¹⁾` in the same basis, unit length, second
    /// component positive.
    pub eigenvector: [f64; 2],
}

/// Eigenprojection of `W⁽⁰⁾` at eigenvalue 1: `Π = diag(1_{V1}⟨π1|, 1_{V2}⟨π2|)`
/// with `π_j(x) = deg(x) / |A_j|`.
pub fn eigenprojection(g: &BridgedGraph) -> Matrix {
    let n = g.vertex_count();
    let mut pi = Matrix::zeros(n, n);
    for x in 0..n {
        for y in 0..n {
            let region = g.vertex_region(x);
            if g.vertex_region(y) == region {
                let arcs = if region == Region::H1 { g.a1() } else { g.a2() };
                pi[(x, y)] = g.degree(y) as f64 / arcs as f64;
            }
        }
    }
    pi
}

pub fn reduced_eigenvalue(g: &BridgedGraph) -> ReducedSplitting {
    let (_, w1) = split_perturbation(g);
    let pi = eigenprojection(g);
    let reduced_full = pi.mul(&w1).mul(&pi);

    let n = g.vertex_count();
    let indicator = |region: Region| -> Vec<f64> {
        (0..n)
            .map(|x| if g.vertex_region(x) == region { 1.0 } else { 0.0 })
            .collect()
    };
    let basis = [indicator(Region::H1), indicator(Region::H2)];
    // Ran(Π) vectors are constant on each block; read the block value through
    // the reversible measure, which sums to one.
    let mut reduced = [[0.0; 2]; 2];
    for (k, column) in basis.iter().enumerate() {
        let image = reduced_full.mul_vec(column);
        for (j, region) in [Region::H1, Region::H2].into_iter().enumerate() {
            let arcs = if region == Region::H1 { g.a1() } else { g.a2() };
            reduced[j][k] = (0..n)
                .filter(|&x| g.vertex_region(x) == region)
                .map(|x| g.degree(x) as f64 / arcs as f64 * image[x])
                .sum();
        }
    }

    let trace = reduced[0][0] + reduced[1][1];
    let det = reduced[0][0] * reduced[1][1] - reduced[0][1] * reduced[1][0];
    let disc = libm::sqrt((trace * trace - 4.0 * det).max(0.0));
    let roots = [(trace + disc) / 2.0, (trace - disc) / 2.0];
    let lambda1 = if libm::fabs(roots[0]) > libm::fabs(roots[1]) {
        roots[0]
    } else {
        roots[1]
    };

    let mut v = [reduced[0][1], lambda1 - reduced[0][0]];
    if libm::fabs(v[0]) + libm::fabs(v[1]) == 0.0 {
        v = [lambda1 - reduced[1][1], reduced[1][0]];
    }
    let norm = libm::sqrt(v[0] * v[0] + v[1] * v[1]);
    let sign = if v[1] < 0.0 { -1.0 } else { 1.0 };
    let eigenvector = [sign * v[0] / norm, sign * v[1] / norm];

    ReducedSplitting {
        reduced,
        lambda1,
        eigenvector,
    }
}

/// `-(1/|A1| + 1/|A2|)`.
pub fn lambda1_closed_form(g: &BridgedGraph) -> f64 {
    -(1.0 / g.a1() as f64 + 1.0 / g.a2() as f64)
}

/// The declination of the pulsation eigenvalue, numeric and asymptotic.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaReport {
    pub epsilon: f64,
    /// Largest eigenvalue of `W_sym`, 1 up to rounding.
    pub top: f64,
    pub cos_numeric: f64,
    pub theta_numeric: f64,
    /// `1 - (1/|A1| + 1/|A2|) ε`.
    pub cos_asymptotic: f64,
    pub theta_asymptotic: f64,
    /// Every eigenvalue within [`CLUSTER_TOL`] of `λ2`, including `λ2`.
    pub cluster: Vec<f64>,
    /// Unit eigenvector of `W_sym` for `λ2`, signed so its `H2` part sums to
    /// a nonnegative value.
    pub vector: Vec<f64>,
}

impl ThetaReport {
    pub fn is_simple(&self) -> bool {
        self.cluster.len() == 1
    }

    pub fn require_simple(&self) -> Result<&Self> {
        if self.is_simple() {
            Ok(self)
        } else {
            Err(Error::DegenerateSecondEigenvalue {
                cluster: self.cluster.len(),
            })
        }
    }

    /// `f = D_w^{-1/2} g`, the corresponding eigenvector of `W(ε)`, with
    /// `D_w = diag(m)`.
    pub fn transition_eigenvector(&self, g: &BridgedGraph) -> Vec<f64> {
        self.vector
            .iter()
            .enumerate()
            .map(|(x, v)| v / libm::sqrt(g.out_weight(x, self.epsilon)))
            .collect()
    }
}

/// `θ(ε) = arccos λ2` where `λ2` is the largest eigenvalue of `W_sym` below
/// `1 - TOP_EIGENVALUE_GAP`.
pub fn theta(g: &BridgedGraph, epsilon: f64) -> Result<ThetaReport> {
    if !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    let sym = symmetrize(g, epsilon);
    let pairs = eigendecompose(&sym.entries)?;
    let top = pairs[0].value;
    if pairs.len() < 2 || pairs[1].value >= 1.0 - TOP_EIGENVALUE_GAP {
        return Err(Error::DegenerateTopEigenvalue {
            second: pairs.get(1).map_or(f64::NAN, |p| p.value),
        });
    }
    let second = &pairs[1];
    let cluster: Vec<f64> = pairs[1..]
        .iter()
        .map(|p| p.value)
        .take_while(|v| libm::fabs(v - second.value) <= CLUSTER_TOL)
        .collect();

    let mut vector = second.vector.clone();
    let h2_sum: f64 = (0..g.vertex_count())
        .filter(|&x| g.vertex_region(x) == Region::H2)
        .map(|x| vector[x])
        .sum();
    if h2_sum < 0.0 {
        vector.iter_mut().for_each(|v| *v = -*v);
    }

    let cos_asymptotic = 1.0 + lambda1_closed_form(g) * epsilon;
    Ok(ThetaReport {
        epsilon,
        top,
        cos_numeric: second.value,
        theta_numeric: libm::acos(second.value.clamp(-1.0, 1.0)),
        cos_asymptotic,
        theta_asymptotic: libm::acos(cos_asymptotic.clamp(-1.0, 1.0)),
        cluster,
        vector,
    })
}

/// Numeric versus first-order eigenvalue splitting at one `ε`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationReport {
    pub lambda1: f64,
    pub cos_theta_numeric: f64,
    pub cos_theta_asymptotic: f64,
    /// `|cos θ_numeric - cos θ_asymptotic| / ε²`.
    pub residual_ratio: f64,
}

pub fn perturbation_report(g: &BridgedGraph, epsilon: f64) -> Result<PerturbationReport> {
    let split = reduced_eigenvalue(g);
    let t = theta(g, epsilon)?;
    let cos_theta_asymptotic = 1.0 + split.lambda1 * epsilon;
    Ok(PerturbationReport {
        lambda1: split.lambda1,
        cos_theta_numeric: t.cos_numeric,
        cos_theta_asymptotic,
        residual_ratio: libm::fabs(t.cos_numeric - cos_theta_asymptotic) / (epsilon * epsilon),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::{boundary_matrix, shift_matrix};
    use crate::GraphKind;

    fn k5k5() -> BridgedGraph {
        let k5 = GraphKind::Complete(5).generate().unwrap();
        BridgedGraph::new(k5.clone(), 0, k5, 0).unwrap()
    }

    fn k5k3() -> BridgedGraph {
        BridgedGraph::new(
            GraphKind::Complete(5).generate().unwrap(),
            0,
            GraphKind::Complete(3).generate().unwrap(),
            0,
        )
        .unwrap()
    }

    #[test]
    fn w_rows() {
        let g = k5k5();
        let w = build_w(&g, 0.01).entries;
        let interior: Vec<f64> = w.row(1)[..5].to_vec();
        assert_eq!(interior, alloc::vec![0.25, 0.0, 0.25, 0.25, 0.25]);
        assert!(w.row(1)[5..].iter().all(|&x| x == 0.0));
        let boundary = w.row(0);
        for &entry in &boundary[1..5] {
            assert!((entry - 1.0 / 4.01).abs() < 1e-15);
        }
        assert!((boundary[5] - 0.01 / 4.01).abs() < 1e-15);
        for x in 0..10 {
            assert!((w.row(x).iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn w_at_zero_is_block_diagonal() {
        let g = k5k3();
        let w = build_w(&g, 0.0).entries;
        let (w0, _) = split_perturbation(&g);
        assert!(w.max_abs_diff(&w0) < 1e-15);
        assert_eq!(w[(0, 5)], 0.0);
        assert_eq!(w[(5, 0)], 0.0);
    }

    #[test]
    fn symmetrized_matches_boundary_form() {
        let g = k5k3();
        let eps = 0.03;
        let d = boundary_matrix(&g, eps);
        let dsd = d.mul(&shift_matrix(&g)).mul(&d.transpose());
        let sym = symmetrize(&g, eps).entries;
        assert!(sym.max_abs_diff(&dsd) < 1e-15);
        assert!(sym.is_symmetric(1e-14));
    }

    #[test]
    fn perturbation_entries() {
        let g = k5k5();
        let (_, w1) = split_perturbation(&g);
        for y in 1..5 {
            assert_eq!(w1[(0, y)], -1.0 / 16.0);
        }
        assert_eq!(w1[(0, 5)], 0.25);
        for x in (1..5).chain(6..10) {
            assert!(w1.row(x).iter().all(|&v| v == 0.0));
        }
    }

    #[test]
    fn reduced_eigenvalue_values() {
        let s = reduced_eigenvalue(&k5k5());
        assert!((s.lambda1 + 0.1).abs() < 1e-15);
        // |A1| = |A2|: eigenvector ∝ (-1, 1)
        assert!((s.eigenvector[0] + s.eigenvector[1]).abs() < 1e-15);
        let s = reduced_eigenvalue(&k5k3());
        assert!((s.lambda1 + 13.0 / 60.0).abs() < 1e-15);
        // ∝ (-|A2|, |A1|) = (-6, 20)
        assert!((s.eigenvector[0] / s.eigenvector[1] + 6.0 / 20.0).abs() < 1e-14);
    }

    #[test]
    fn theta_k5k5() {
        let t = theta(&k5k5(), 0.01).unwrap();
        assert!((t.top - 1.0).abs() < 1e-12);
        assert!((t.cos_asymptotic - 0.999).abs() < 1e-15);
        assert!((t.theta_asymptotic - 0.0447251).abs() < 1e-7);
        assert!((t.cos_numeric - 0.999).abs() < 1e-5);
        assert!(t.is_simple());
        let k = theta(&k5k3(), 0.01).unwrap();
        assert!((k.cos_asymptotic - (1.0 - 13.0 / 6000.0)).abs() < 1e-15);
        assert!((k.cos_asymptotic - 0.9978333).abs() < 1e-7);
    }

    #[test]
    fn theta_rejects_bad_epsilon() {
        assert_eq!(theta(&k5k5(), 0.0).unwrap_err(), Error::InvalidEpsilon(0.0));
    }

    #[test]
    fn transition_eigenvector_is_eigenvector() {
        let g = k5k3();
        let t = theta(&g, 0.02).unwrap();
        let f = t.transition_eigenvector(&g);
        let wf = build_w(&g, 0.02).entries.mul_vec(&f);
        for (a, b) in wf.iter().zip(&f) {
            assert!((a - t.cos_numeric * b).abs() < 1e-12);
        }
        // sign: negative on H1, positive on H2
        assert!(f[..5].iter().all(|&v| v < 0.0));
        assert!(f[5..].iter().all(|&v| v > 0.0));
    }
}
