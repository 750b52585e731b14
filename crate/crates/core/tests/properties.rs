use proptest::prelude::*;

use pulsewalk_core::asymptotics::{half_period, mu_theory, mu_theory_equal_arcs, r_eff, tau_formula, TheoryParams};
use pulsewalk_core::dense::{evolution_matrix, Matrix};
use pulsewalk_core::spectral::{build_w, eigendecompose, symmetrize};
use pulsewalk_core::{BridgedGraph, Complex64, GraphKind, WalkState, Walker};

fn graph_kind() -> impl Strategy<Value = GraphKind> {
    prop_oneof![
        (2usize..7).prop_map(GraphKind::Complete),
        (3usize..10).prop_map(GraphKind::Cycle),
        (2usize..10).prop_map(GraphKind::Path),
        (2usize..8).prop_map(GraphKind::Star),
        (2usize..9, 0.3f64..0.9, any::<u64>()).prop_map(|(n, p, seed)| GraphKind::Random { n, p, seed }),
    ]
}

prop_compose! {
    fn bridged_graph()(k1 in graph_kind(), k2 in graph_kind(), r1 in any::<usize>(), r2 in any::<usize>())
        -> BridgedGraph
    {
        let h1 = k1.generate().unwrap();
        let h2 = k2.generate().unwrap();
        let xi1 = r1 % h1.vertex_count();
        let xi2 = r2 % h2.vertex_count();
        BridgedGraph::new(h1, xi1, h2, xi2).unwrap()
    }
}

fn random_state(len: usize, seed: u64) -> Vec<Complex64> {
    // cheap deterministic fill; proptest supplies the seed
    let mut x = seed | 1;
    (0..len)
        .map(|_| {
            let mut next = || {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                (x >> 11) as f64 / (1u64 << 53) as f64 - 0.5
            };
            Complex64::new(next(), next())
        })
        .collect()
}

proptest! {
    #[test]
    fn out_probabilities_sum_to_one(g in bridged_graph(), eps in 1e-6f64..=1.0) {
        let mut sums = vec![0.0; g.vertex_count()];
        for a in g.arcs() {
            sums[a.origin] += g.transition_prob(a.index, eps);
        }
        for s in sums {
            prop_assert!((s - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn arc_structure(g in bridged_graph(), eps in 0.0f64..=1.0) {
        prop_assert_eq!(g.a1(), 2 * g.h1().edge_count());
        prop_assert_eq!(g.a2(), 2 * g.h2().edge_count());
        prop_assert_eq!(g.arc_count(), g.a1() + g.a2() + 2);
        for a in g.arcs() {
            let b = g.inverse(a.index);
            prop_assert_eq!(g.inverse(b), a.index);
            prop_assert_eq!(g.weight(a.index, eps), g.weight(b, eps));
        }
    }

    #[test]
    fn step_is_unitary(g in bridged_graph(), eps in 0.0f64..=1.0, seed in any::<u64>()) {
        let walker = Walker::new(&g, eps).unwrap();
        let psi = WalkState::from_amplitudes(random_state(g.arc_count(), seed), eps);
        let next = walker.step(&psi).unwrap();
        prop_assert!((next.norm_sqr() - psi.norm_sqr()).abs() < 1e-12);
    }

    #[test]
    fn engine_matches_dense(g in bridged_graph(), eps in 0.0f64..=1.0, seed in any::<u64>()) {
        let walker = Walker::new(&g, eps).unwrap();
        let amps = random_state(g.arc_count(), seed);
        let dense = evolution_matrix(&g, eps).mul_complex(&amps);
        let engine = walker.step(&WalkState::from_amplitudes(amps, eps)).unwrap();
        for (a, b) in engine.amplitudes.iter().zip(&dense) {
            prop_assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_bridge_keeps_walker_home(g in bridged_graph()) {
        let series = Walker::new(&g, 0.0).unwrap().evolve(200);
        for p in &series.triples {
            prop_assert!((p.mu_h1 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn transition_matrix_is_stochastic_and_reversible(g in bridged_graph(), eps in 1e-4f64..=1.0) {
        let w = build_w(&g, eps).entries;
        let ones = vec![1.0; g.vertex_count()];
        for v in w.mul_vec(&ones) {
            prop_assert!((v - 1.0).abs() < 1e-12);
        }
        // D^{1/2} W D^{-1/2} with D the weighted stationary measure
        let m: Vec<f64> = (0..g.vertex_count()).map(|x| g.out_weight(x, eps)).collect();
        let total: f64 = m.iter().sum();
        let n = g.vertex_count();
        let mut similar = Matrix::zeros(n, n);
        for x in 0..n {
            for y in 0..n {
                similar[(x, y)] = (m[x] / total).sqrt() * w[(x, y)] / (m[y] / total).sqrt();
            }
        }
        prop_assert!(similar.is_symmetric(1e-12));
        prop_assert!(similar.max_abs_diff(&symmetrize(&g, eps).entries) < 1e-12);
    }

    #[test]
    fn jacobi_is_orthogonal_and_reconstructs(g in bridged_graph(), eps in 1e-3f64..=1.0) {
        let sym = symmetrize(&g, eps).entries;
        prop_assert!(sym.is_symmetric(1e-14));
        let pairs = eigendecompose(&sym).unwrap();
        let n = sym.rows();
        let mut v = Matrix::zeros(n, n);
        let mut l = Matrix::zeros(n, n);
        for (j, p) in pairs.iter().enumerate() {
            prop_assert!(p.value <= 1.0 + 1e-12 && p.value >= -1.0 - 1e-12);
            l[(j, j)] = p.value;
            for i in 0..n {
                v[(i, j)] = p.vector[i];
            }
        }
        prop_assert!(v.transpose().mul(&v).max_abs_diff(&Matrix::identity(n)) < 1e-10);
        prop_assert!(v.mul(&l).mul(&v.transpose()).max_abs_diff(&sym) < 1e-9);
        prop_assert!((pairs[0].value - 1.0).abs() < 1e-12);
        prop_assert!(pairs[1].value < 1.0 - 1e-12);
        for w in pairs.windows(2) {
            prop_assert!(w[0].value >= w[1].value);
        }
    }

    #[test]
    fn equal_arc_identity(half in 1usize..40, theta in 0.0f64..3.2, t in 0usize..500) {
        let p = TheoryParams::new(2 * half, 2 * half, 0.01).unwrap();
        let (a, b) = mu_theory(t, &p, theta);
        let (c, d) = mu_theory_equal_arcs(t, &p, theta).unwrap();
        prop_assert!((a - c).abs() < 1e-14 && (b - d).abs() < 1e-14);
    }

    #[test]
    fn envelope_bounds(h1 in 1usize..60, h2 in 1usize..60, theta in 0.0f64..3.2, t in 0usize..2000) {
        let p = TheoryParams::new(2 * h1, 2 * h2, 0.01).unwrap();
        let (m1, m2) = mu_theory(t, &p, theta);
        prop_assert!(m1 >= 0.0 && m2 >= 0.0);
        prop_assert!(m1 <= 1.0 + 1e-15 && m2 <= 1.0 + 1e-15);
        prop_assert!(m1 + m2 <= 1.0 + 1e-15);
    }

    #[test]
    fn period_formulas_agree(h1 in 1usize..60, h2 in 1usize..60, eps in 1e-4f64..0.05) {
        let p = TheoryParams::new(2 * h1, 2 * h2, eps).unwrap();
        let from_angle = half_period(p.asymptotic_theta());
        let from_resistance = std::f64::consts::PI / std::f64::consts::SQRT_2
            * (r_eff(p.a1, p.a2) / eps).sqrt();
        prop_assert!(((from_angle - from_resistance) / from_resistance).abs() <= eps);
        prop_assert_eq!(tau_formula(&p), from_resistance.floor() as usize);
    }

    #[test]
    fn mu1_vanishes_iff_second_graph_is_larger(h1 in 1usize..40, h2 in 1usize..40, eps in 1e-5f64..0.05) {
        let (a1, a2) = (2 * h1, 2 * h2);
        let gap = ((a1 as f64 - a2 as f64) / (a1 + a2) as f64).powi(2);
        prop_assume!(a2 >= a1 || eps < gap);
        let p = TheoryParams::new(a1, a2, eps).unwrap();
        let theta = p.asymptotic_theta();
        let period = (2.0 * std::f64::consts::PI / theta).ceil() as usize;
        let min = (0..=period).map(|t| mu_theory(t, &p, theta).0).fold(f64::INFINITY, f64::min);
        prop_assert_eq!(min <= eps, a2 >= a1);
    }
}

#[test]
fn named_instances_have_expected_arc_counts() {
    for (kind, arcs) in [
        (GraphKind::Complete(5), 20),
        (GraphKind::Complete(6), 30),
        (GraphKind::Cycle(15), 30),
        (GraphKind::Complete(3), 6),
        (GraphKind::Path(2), 2),
    ] {
        assert_eq!(kind.generate().unwrap().arc_count(), arcs);
    }
}
