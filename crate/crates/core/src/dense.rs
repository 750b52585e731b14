//! Small dense real matrices and the explicit assembly of `d_ε`, `S` and
//! `U(ε)`. The walk engine never touches these; they exist to cross-check it
//! and to carry the vertex-side spectral computations.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;

use crate::graph::BridgedGraph;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: usize, cols: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul_complex(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(&a, &b)| b * a).sum())
            .collect()
    }

    /// `max |a_ij|`.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(libm::fabs(*x)))
    }

    pub fn max_abs_diff(&self, other: &Matrix) -> f64 {
        self.sub(other).max_abs()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.rows == self.cols && (0..self.rows).all(|i| (0..i).all(|j| libm::fabs(self[(i, j)] - self[(j, i)]) <= tol))
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// `(d_ε)_{x,a} = √p_ε(ā)` when `t(a) = x`.
pub fn boundary_matrix(g: &BridgedGraph, epsilon: f64) -> Matrix {
    let mut d = Matrix::zeros(g.vertex_count(), g.arc_count());
    for a in g.arcs() {
        d[(a.terminal, a.index)] = libm::sqrt(g.transition_prob(g.inverse(a.index), epsilon));
    }
    d
}

/// `S_{b,a} = δ_{a, b̄}`.
pub fn shift_matrix(g: &BridgedGraph) -> Matrix {
    let mut s = Matrix::zeros(g.arc_count(), g.arc_count());
    for a in g.arcs() {
        s[(a.index, g.inverse(a.index))] = 1.0;
    }
    s
}

/// `U(ε) = S (2 d* d - I)`.
pub fn evolution_matrix(g: &BridgedGraph, epsilon: f64) -> Matrix {
    let d = boundary_matrix(g, epsilon);
    let coin = d.transpose().mul(&d).scale(2.0).sub(&Matrix::identity(g.arc_count()));
    shift_matrix(g).mul(&coin)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GraphKind;

    #[test]
    fn boundary_is_coisometry() {
        let g = BridgedGraph::new(
            GraphKind::Complete(4).generate().unwrap(),
            1,
            GraphKind::Star(5).generate().unwrap(),
            2,
        )
        .unwrap();
        let d = boundary_matrix(&g, 0.07);
        let ddt = d.mul(&d.transpose());
        assert!(ddt.max_abs_diff(&Matrix::identity(g.vertex_count())) < 1e-14);
    }

    #[test]
    fn shift_squares_to_identity() {
        let g = BridgedGraph::new(
            GraphKind::Cycle(5).generate().unwrap(),
            0,
            GraphKind::Path(3).generate().unwrap(),
            1,
        )
        .unwrap();
        let s = shift_matrix(&g);
        assert_eq!(s.mul(&s), Matrix::identity(g.arc_count()));
    }

    #[test]
    fn evolution_is_orthogonal() {
        let g = BridgedGraph::new(
            GraphKind::Complete(3).generate().unwrap(),
            0,
            GraphKind::Complete(4).generate().unwrap(),
            3,
        )
        .unwrap();
        let u = evolution_matrix(&g, 0.2);
        let utu = u.transpose().mul(&u);
        assert!(utu.max_abs_diff(&Matrix::identity(g.arc_count())) < 1e-14);
    }
}
