use alloc::vec::Vec;

use super::SpectralPair;
use crate::dense::Matrix;
use crate::{Error, Result};

/// Maximum number of full cyclic sweeps.
pub const MAX_SWEEPS: usize = 100;
/// Convergence threshold on the off-diagonal Frobenius norm.
pub const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi
/// rotations.
///
/// Eigenvalues are returned in descending order, each with a unit
/// eigenvector. Only the lower triangle is assumed to mirror the upper one;
/// the caller is responsible for passing a symmetric matrix.
pub fn eigendecompose(m: &Matrix) -> Result<Vec<SpectralPair<f64>>> {
    let n = m.rows();
    if m.cols() != n {
        return Err(Error::NotSquare {
            rows: n,
            cols: m.cols(),
        });
    }
    let mut a = m.clone();
    let mut v = Matrix::identity(n);

    let mut off = off_diagonal_norm(&a);
    for sweep in 0..MAX_SWEEPS {
        if off < OFF_DIAGONAL_TOL {
            break;
        }
        // early sweeps only rotate the large entries
        let threshold = if sweep < 3 { 0.2 * off / (n * n) as f64 } else { 0.0 };
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq == 0.0 || libm::fabs(apq) <= threshold {
                    continue;
                }
                rotate(&mut a, &mut v, p, q);
            }
        }
        off = off_diagonal_norm(&a);
    }
    if off >= OFF_DIAGONAL_TOL {
        return Err(Error::NoConvergence {
            sweeps: MAX_SWEEPS,
            off_diagonal: off,
        });
    }

    let mut pairs: Vec<SpectralPair<f64>> = (0..n)
        .map(|j| SpectralPair {
            value: a[(j, j)],
            vector: (0..n).map(|i| v[(i, j)]).collect(),
        })
        .collect();
    pairs.sort_by(|x, y| y.value.total_cmp(&x.value));
    Ok(pairs)
}

fn off_diagonal_norm(a: &Matrix) -> f64 {
    let n = a.rows();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += a[(i, j)] * a[(i, j)];
            }
        }
    }
    libm::sqrt(sum)
}

// Zeroes a[p][q] with the rotation J(p, q, θ): A ← Jᵀ A J, V ← V J.
fn rotate(a: &mut Matrix, v: &mut Matrix, p: usize, q: usize) {
    let n = a.rows();
    let apq = a[(p, q)];
    let phi = (a[(q, q)] - a[(p, p)]) / (2.0 * apq);
    let t = libm::copysign(1.0, phi) / (libm::fabs(phi) + libm::sqrt(phi * phi + 1.0));
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;

    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = c * akp - s * akq;
        a[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = c * apk - s * aqk;
        a[(q, k)] = s * apk + c * aqk;
    }
    a[(p, q)] = 0.0;
    a[(q, p)] = 0.0;

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = c * vkp - s * vkq;
        v[(k, q)] = s * vkp + c * vkq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn two_by_two() {
        let m = Matrix::from_rows(2, 2, vec![2.0, 1.0, 1.0, 2.0]);
        let pairs = eigendecompose(&m).unwrap();
        assert!((pairs[0].value - 3.0).abs() < 1e-14);
        assert!((pairs[1].value - 1.0).abs() < 1e-14);
        let v = &pairs[0].vector;
        assert!((libm::fabs(v[0]) - libm::sqrt(0.5)).abs() < 1e-14);
        assert!((v[0] - v[1]).abs() < 1e-14);
    }

    #[test]
    fn diagonal_input_is_sorted() {
        let m = Matrix::from_rows(3, 3, vec![1.0, 0.0, 0.0, 0.0, 5.0, 0.0, 0.0, 0.0, -2.0]);
        let values: Vec<f64> = eigendecompose(&m).unwrap().iter().map(|p| p.value).collect();
        assert_eq!(values, vec![5.0, 1.0, -2.0]);
    }

    #[test]
    fn path_laplacian_spectrum() {
        // Adjacency of P_n has eigenvalues 2 cos(kπ/(n+1)).
        let n = 9;
        let mut m = Matrix::zeros(n, n);
        for i in 1..n {
            m[(i - 1, i)] = 1.0;
            m[(i, i - 1)] = 1.0;
        }
        let pairs = eigendecompose(&m).unwrap();
        for (k, p) in pairs.iter().enumerate() {
            let exact = 2.0 * libm::cos((k + 1) as f64 * core::f64::consts::PI / (n + 1) as f64);
            assert!((p.value - exact).abs() < 1e-12);
        }
    }

    #[test]
    fn not_square() {
        assert_eq!(
            eigendecompose(&Matrix::zeros(2, 3)).unwrap_err(),
            Error::NotSquare { rows: 2, cols: 3 }
        );
    }
}
