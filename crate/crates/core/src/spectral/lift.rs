//! Lifting vertex eigenvectors of `W(ε)` to arc eigenvectors of `U(ε)`.
//!
//! If `W_sym g = cos θ g` then `ψ = (I - e^{iθ} S) d* g` satisfies
//! `U ψ = e^{iθ} ψ` exactly, and `‖ψ‖² = 2 sin² θ`.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::{build_w, theta, SpectralPair};
use crate::graph::{BridgedGraph, Region};
use crate::walk::{WalkState, Walker};
use crate::{Error, Result};

/// Accepted `‖W f - cos θ f‖` for the input and `‖U ψ - e^{iθ} ψ‖` for the
/// output.
pub const LIFT_TOL: f64 = 1e-9;

/// Which of the conjugate pair `e^{±iθ}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn phase(self, theta: f64) -> Complex64 {
        match self {
            Sign::Plus => Complex64::from_polar(1.0, theta),
            Sign::Minus => Complex64::from_polar(1.0, -theta),
        }
    }
}

/// The two arc eigenpairs of `U(ε)` lifted from one vertex eigenvector.
/// When `cos θ = ±1` both entries hold the same real eigenpair.
#[derive(Debug, Clone, PartialEq)]
pub struct ArcLift {
    pub plus: SpectralPair<Complex64>,
    pub minus: SpectralPair<Complex64>,
    pub residual_plus: f64,
    pub residual_minus: f64,
}

/// Exact lift of `f ∈ Ker(W(ε) - cos θ)` to unit eigenvectors of `U(ε)`.
pub fn lift_to_arc(g: &BridgedGraph, epsilon: f64, cos_theta: f64, f: &[f64]) -> Result<ArcLift> {
    if f.len() != g.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: g.vertex_count(),
            got: f.len(),
        });
    }
    let walker = Walker::new(g, epsilon)?;

    // scale f so that g = D_w^{1/2} f is a unit vector
    let norm = libm::sqrt(
        f.iter()
            .enumerate()
            .map(|(x, v)| g.out_weight(x, epsilon) * v * v)
            .sum::<f64>(),
    );
    let f: Vec<f64> = f.iter().map(|v| v / norm).collect();
    let wf = build_w(g, epsilon).entries.mul_vec(&f);
    let input_residual = libm::sqrt(
        wf.iter()
            .zip(&f)
            .enumerate()
            .map(|(x, (a, b))| g.out_weight(x, epsilon) * (a - cos_theta * b) * (a - cos_theta * b))
            .sum::<f64>(),
    );
    if input_residual > LIFT_TOL {
        return Err(Error::EigenResidualTooLarge {
            residual: input_residual,
        });
    }
    let gvec: Vec<f64> = f
        .iter()
        .enumerate()
        .map(|(x, v)| libm::sqrt(g.out_weight(x, epsilon)) * v)
        .collect();

    let sqrt_p = walker.sqrt_p();
    // (d* g)(a) = √p(ā) g(t(a)),  (S d* g)(a) = √p(a) g(o(a))
    let dg: Vec<f64> = g
        .arcs()
        .iter()
        .map(|a| sqrt_p[g.inverse(a.index)] * gvec[a.terminal])
        .collect();
    let sdg: Vec<f64> = g.arcs().iter().map(|a| sqrt_p[a.index] * gvec[a.origin]).collect();

    let pair = |sign: Sign| -> Result<(SpectralPair<Complex64>, f64)> {
        let (value, mut vector) = if libm::fabs(cos_theta) >= 1.0 - super::TOP_EIGENVALUE_GAP {
            let value = Complex64::new(libm::copysign(1.0, cos_theta), 0.0);
            (value, dg.iter().map(|&v| Complex64::new(v, 0.0)).collect::<Vec<_>>())
        } else {
            let phase = sign.phase(libm::acos(cos_theta));
            let v = dg
                .iter()
                .zip(&sdg)
                .map(|(&a, &b)| Complex64::new(a, 0.0) - phase * b)
                .collect();
            (phase, v)
        };
        normalize(&mut vector);
        let residual = eigen_residual(&walker, &vector, value)?;
        if residual > LIFT_TOL {
            return Err(Error::EigenResidualTooLarge { residual });
        }
        Ok((SpectralPair { value, vector }, residual))
    };
    let (plus, residual_plus) = pair(Sign::Plus)?;
    let (minus, residual_minus) = pair(Sign::Minus)?;
    Ok(ArcLift {
        plus,
        minus,
        residual_plus,
        residual_minus,
    })
}

/// `‖U ψ - λ ψ‖`.
pub(crate) fn eigen_residual(walker: &Walker<'_>, psi: &[Complex64], value: Complex64) -> Result<f64> {
    let state = WalkState::from_amplitudes(psi.to_vec(), walker.epsilon());
    let image = walker.step(&state)?;
    Ok(libm::sqrt(
        image
            .amplitudes
            .iter()
            .zip(psi)
            .map(|(u, p)| (u - value * p).norm_sqr())
            .sum(),
    ))
}

fn normalize(v: &mut [Complex64]) {
    let norm = libm::sqrt(v.iter().map(|z| z.norm_sqr()).sum::<f64>());
    v.iter_mut().for_each(|z| *z /= norm);
}

/// Exact unit eigenvector of `U(ε)` for eigenvalue 1: `ψ(a) ∝ √w(a)`.
pub fn fixed_vector(g: &BridgedGraph, epsilon: f64) -> Vec<Complex64> {
    let mut v: Vec<Complex64> = (0..g.arc_count())
        .map(|a| Complex64::new(libm::sqrt(g.weight(a, epsilon)), 0.0))
        .collect();
    normalize(&mut v);
    v
}

/// `1/√(|A1|+|A2|)` on every non-bridge arc and 0 on the bridge: the
/// `ε → 0` truncation of [`fixed_vector`].
pub fn truncated_fixed_vector(g: &BridgedGraph) -> Vec<Complex64> {
    let c = 1.0 / libm::sqrt((g.a1() + g.a2()) as f64);
    g.regions()
        .iter()
        .map(|&r| Complex64::new(if r == Region::Bridge { 0.0 } else { c }, 0.0))
        .collect()
}

/// Approximate lift with unweighted degrees:
/// `ψ(a) = (f(t(a)) - e^{±iθ} f(o(a))) / (√(2(|A1|+|A2|)) |sin θ|)`,
/// `f` rescaled so that `Σ_x deg(x)/(|A1|+|A2|) f(x)² = 1`.
///
/// It agrees with the exact lift up to `O(ε)` on non-bridge arcs only; the
/// bridge arcs miss their `√ε` weight.
pub fn degree_weighted_lift(g: &BridgedGraph, cos_theta: f64, f: &[f64], sign: Sign) -> Vec<Complex64> {
    let total = (g.a1() + g.a2()) as f64;
    let norm = libm::sqrt(
        f.iter()
            .enumerate()
            .map(|(x, v)| g.degree(x) as f64 / total * v * v)
            .sum::<f64>(),
    );
    let theta = libm::acos(cos_theta);
    let phase = sign.phase(theta);
    let scale = 1.0 / (libm::sqrt(2.0 * total) * libm::fabs(libm::sin(theta)) * norm);
    g.arcs()
        .iter()
        .map(|a| (Complex64::new(f[a.terminal], 0.0) - phase * f[a.origin]) * scale)
        .collect()
}

/// Constant-per-region approximation of the pulsation eigenvector:
/// `(1 - e^{±iθ}) / (√(2|A1||A2|(|A1|+|A2|)) |sin θ|)` times `-|A2|` when
/// `t(a) ∈ V1` and `|A1|` when `t(a) ∈ V2`.
pub fn closed_form_lift(g: &BridgedGraph, theta: f64, sign: Sign) -> Vec<Complex64> {
    let (a1, a2) = (g.a1() as f64, g.a2() as f64);
    let prefactor = (Complex64::new(1.0, 0.0) - sign.phase(theta))
        / (libm::sqrt(2.0 * a1 * a2 * (a1 + a2)) * libm::fabs(libm::sin(theta)));
    g.arcs()
        .iter()
        .map(|a| match g.vertex_region(a.terminal) {
            Region::H1 => prefactor * -a2,
            _ => prefactor * a1,
        })
        .collect()
}

/// Overlaps of the initial state with the three pulsation eigenvectors.
#[derive(Debug, Clone, PartialEq)]
pub struct OverlapReport {
    /// `|⟨ψ1|ψ0⟩|` for the exact fixed vector.
    pub fixed: f64,
    /// `√(|A1|/(|A1|+|A2|))`.
    pub fixed_closed_form: f64,
    pub plus: f64,
    pub minus: f64,
    /// `√(|A2|/(|A1|+|A2|)) / √2`.
    pub oscillatory_closed_form: f64,
    /// `|⟨ψ1|ψ0⟩|² + |⟨ψ_θ|ψ0⟩|² + |⟨ψ_{-θ}|ψ0⟩|²`.
    pub squared_sum: f64,
    /// Residuals of the two exact lifted eigenvectors.
    pub residual_plus: f64,
    pub residual_minus: f64,
}

impl OverlapReport {
    /// Largest deviation of the numeric overlaps from their closed forms.
    pub fn max_deviation(&self) -> f64 {
        libm::fabs(self.fixed - self.fixed_closed_form)
            .max(libm::fabs(self.plus - self.oscillatory_closed_form))
            .max(libm::fabs(self.minus - self.oscillatory_closed_form))
    }
}

pub fn overlaps(g: &BridgedGraph, epsilon: f64) -> Result<OverlapReport> {
    let t = theta(g, epsilon)?;
    t.require_simple()?;
    let f = t.transition_eigenvector(g);
    let lift = lift_to_arc(g, epsilon, t.cos_numeric, &f)?;
    let psi0 = Walker::new(g, epsilon)?.initial_state().amplitudes;
    let inner = |v: &[Complex64]| -> f64 { v.iter().zip(&psi0).map(|(a, b)| a.conj() * b).sum::<Complex64>().norm() };
    let fixed = inner(&fixed_vector(g, epsilon));
    let plus = inner(&lift.plus.vector);
    let minus = inner(&lift.minus.vector);
    let (a1, a2) = (g.a1() as f64, g.a2() as f64);
    Ok(OverlapReport {
        fixed,
        fixed_closed_form: libm::sqrt(a1 / (a1 + a2)),
        plus,
        minus,
        oscillatory_closed_form: libm::sqrt(a2 / (a1 + a2)) / core::f64::consts::SQRT_2,
        squared_sum: fixed * fixed + plus * plus + minus * minus,
        residual_plus: lift.residual_plus,
        residual_minus: lift.residual_minus,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GraphKind;

    fn pair(a: GraphKind, b: GraphKind) -> BridgedGraph {
        BridgedGraph::new(a.generate().unwrap(), 0, b.generate().unwrap(), 0).unwrap()
    }

    #[test]
    fn fixed_vector_branch() {
        let g = pair(GraphKind::Complete(5), GraphKind::Complete(3));
        let eps = 0.01;
        let ones = alloc::vec![1.0; g.vertex_count()];
        let lift = lift_to_arc(&g, eps, 1.0, &ones).unwrap();
        assert_eq!(lift.plus.value, Complex64::new(1.0, 0.0));
        assert!(lift.residual_plus < 1e-12);
        let exact = fixed_vector(&g, eps);
        for (a, b) in lift.plus.vector.iter().zip(&exact) {
            assert!((a - b).norm() < 1e-14);
        }
        let bridge = g.arc_count() - 1;
        assert!((exact[bridge].re / exact[0].re - 0.1).abs() < 1e-14);
    }

    #[test]
    fn oscillatory_branch_is_exact() {
        let g = pair(GraphKind::Complete(5), GraphKind::Complete(5));
        let t = theta(&g, 0.01).unwrap();
        let f = t.transition_eigenvector(&g);
        let lift = lift_to_arc(&g, 0.01, t.cos_numeric, &f).unwrap();
        assert!(lift.residual_plus < 1e-12 && lift.residual_minus < 1e-12);
        assert!((lift.plus.value - Complex64::from_polar(1.0, t.theta_numeric)).norm() < 1e-15);
        for (p, m) in lift.plus.vector.iter().zip(&lift.minus.vector) {
            assert!((p.conj() - m).norm() < 1e-14);
        }
    }

    #[test]
    fn rejects_non_eigenvector() {
        let g = pair(GraphKind::Complete(4), GraphKind::Path(3));
        let f: Vec<f64> = (0..g.vertex_count()).map(|x| x as f64).collect();
        assert!(matches!(
            lift_to_arc(&g, 0.1, 0.5, &f),
            Err(Error::EigenResidualTooLarge { .. })
        ));
        assert!(matches!(
            lift_to_arc(&g, 0.1, 0.5, &[1.0]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn overlap_values() {
        let g = pair(GraphKind::Complete(5), GraphKind::Complete(3));
        let o = overlaps(&g, 0.01).unwrap();
        assert!((o.fixed_closed_form - 0.8770580).abs() < 1e-7);
        assert!(o.max_deviation() < 5.0 * 0.01);
        let g = pair(GraphKind::Complete(5), GraphKind::Complete(5));
        let o = overlaps(&g, 0.01).unwrap();
        assert!((o.oscillatory_closed_form - 0.5).abs() < 1e-15);
        assert!((o.plus - 0.5).abs() < 0.01);
        assert!((o.squared_sum - 1.0).abs() < 0.01);
    }

    #[test]
    fn truncated_fixed_vector_has_unit_norm() {
        let g = pair(GraphKind::Cycle(4), GraphKind::Star(3));
        let v = truncated_fixed_vector(&g);
        let n: f64 = v.iter().map(|z| z.norm_sqr()).sum();
        assert!((n - 1.0).abs() < 1e-14);
    }
}
