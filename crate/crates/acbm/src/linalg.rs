//! Dense containers and exact linear algebra at the small dimensions the
//! geometric layer needs. Everything is dimension-generic; the geometry on
//! top pins the dimension to 3.

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use num_traits::{Signed, Zero};
use std::ops::{Index, IndexMut};

/// Row-major `dim x dim` matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> SquareMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![T::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_symmetric(&self) -> bool {
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                if self[(i, j)] != self[(j, i)] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| self[(i, j)].clone() * v[j].clone())
                    .fold(T::zero(), |a, b| a + b)
            })
            .collect()
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |i, j| {
            (0..self.dim)
                .map(|k| self[(i, k)].clone() * other[(k, j)].clone())
                .fold(T::zero(), |a, b| a + b)
        })
    }

    /// Bilinear form value `v^T M w`.
    pub fn pair(&self, v: &[T], w: &[T]) -> T {
        assert_eq!(v.len(), self.dim);
        assert_eq!(w.len(), self.dim);
        let mut acc = T::zero();
        for i in 0..self.dim {
            for j in 0..self.dim {
                acc = acc + v[i].clone() * self[(i, j)].clone() * w[j].clone();
            }
        }
        acc
    }

    /// Gauss-Jordan inverse with first-nonzero pivoting. Exact for rational
    /// entries; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a[(pivot, j)].clone();
                    a[(pivot, j)] = a[(col, j)].clone();
                    a[(col, j)] = tmp;
                    let tmp = inv[(pivot, j)].clone();
                    inv[(pivot, j)] = inv[(col, j)].clone();
                    inv[(col, j)] = tmp;
                }
            }
            let p = a[(col, col)].clone();
            for j in 0..n {
                a[(col, j)] = a[(col, j)].clone() / p.clone();
                inv[(col, j)] = inv[(col, j)].clone() / p.clone();
            }
            for r in 0..n {
                if r != col && !a[(r, col)].is_zero() {
                    let f = a[(r, col)].clone();
                    for j in 0..n {
                        a[(r, j)] = a[(r, j)].clone() - f.clone() * a[(col, j)].clone();
                        inv[(r, j)] = inv[(r, j)].clone() - f.clone() * inv[(col, j)].clone();
                    }
                }
            }
        }
        Some(inv)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> SquareMatrix<U> {
        SquareMatrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn max_abs(&self) -> T
    where
        T: PartialOrd,
    {
        max_abs(self.data.iter())
    }
}

impl<T> Index<(usize, usize)> for SquareMatrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.dim + j]
    }
}

impl<T> IndexMut<(usize, usize)> for SquareMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.dim + j]
    }
}

/// Dense rank-3 array with all sides equal to `dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor3<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> Tensor3<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![T::zero(); dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    data.push(f(i, j, k));
                }
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Tensor3<U> {
        Tensor3 {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// Trilinear evaluation on arbitrary vectors.
    pub fn eval(&self, x: &[T], y: &[T], z: &[T]) -> T {
        let n = self.dim;
        let mut acc = T::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                for k in 0..n {
                    acc = acc
                        + x[i].clone() * y[j].clone() * z[k].clone() * self[(i, j, k)].clone();
                }
            }
        }
        acc
    }

    pub fn max_abs(&self) -> T
    where
        T: PartialOrd,
    {
        max_abs(self.data.iter())
    }
}

impl<T> Index<(usize, usize, usize)> for Tensor3<T> {
    type Output = T;
    fn index(&self, (i, j, k): (usize, usize, usize)) -> &T {
        &self.data[(i * self.dim + j) * self.dim + k]
    }
}

impl<T> IndexMut<(usize, usize, usize)> for Tensor3<T> {
    fn index_mut(&mut self, (i, j, k): (usize, usize, usize)) -> &mut T {
        &mut self.data[(i * self.dim + j) * self.dim + k]
    }
}

/// Dense rank-4 array with all sides equal to `dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor4<T> {
    dim: usize,
    data: Vec<T>,
}

impl<T: Scalar> Tensor4<T> {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![T::zero(); dim * dim * dim * dim],
        }
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(dim * dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        data.push(f(i, j, k, l));
                    }
                }
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Tensor4<U> {
        Tensor4 {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn max_abs(&self) -> T
    where
        T: PartialOrd,
    {
        max_abs(self.data.iter())
    }
}

impl<T> Index<(usize, usize, usize, usize)> for Tensor4<T> {
    type Output = T;
    fn index(&self, (i, j, k, l): (usize, usize, usize, usize)) -> &T {
        &self.data[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }
}

impl<T> IndexMut<(usize, usize, usize, usize)> for Tensor4<T> {
    fn index_mut(&mut self, (i, j, k, l): (usize, usize, usize, usize)) -> &mut T {
        &mut self.data[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }
}

fn max_abs<'a, T: Scalar + PartialOrd + 'a>(values: impl Iterator<Item = &'a T>) -> T {
    let mut best = T::zero();
    for v in values {
        let a = v.abs();
        if a > best {
            best = a;
        }
    }
    best
}

/// Rank of a list of row vectors, by exact Gaussian elimination.
pub fn rank<T: Scalar>(rows: &[Vec<T>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m: Vec<Vec<T>> = rows.to_vec();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone() / pivot.clone();
                for j in c..cols {
                    m[i][j] = m[i][j].clone() - f.clone() * m[r][j].clone();
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Signature of a symmetric matrix by exact congruence diagonalization:
/// returns `(positive, negative, zero)` counts of the diagonalized form.
///
/// Uses symmetric row/column reduction; when every remaining diagonal entry
/// vanishes but an off-diagonal entry survives, a row+column addition makes
/// a nonzero pivot (valid away from characteristic 2).
pub fn signature(m: &SquareMatrix<Rational>) -> Result<(usize, usize, usize)> {
    if !m.is_symmetric() {
        return Err(Error::InvalidInput {
            message: "signature requires a symmetric matrix".to_string(),
        });
    }
    let n = m.dim();
    let mut a = m.clone();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            if let Some(l) = ((k + 1)..n).find(|&l| !a[(l, l)].is_zero()) {
                // swap rows and columns k <-> l
                for j in 0..n {
                    let tmp = a[(k, j)].clone();
                    a[(k, j)] = a[(l, j)].clone();
                    a[(l, j)] = tmp;
                }
                for i in 0..n {
                    let tmp = a[(i, k)].clone();
                    a[(i, k)] = a[(i, l)].clone();
                    a[(i, l)] = tmp;
                }
            } else if let Some(l) = ((k + 1)..n).find(|&l| !a[(k, l)].is_zero()) {
                // add row l to row k and column l to column k
                for j in 0..n {
                    let add = a[(l, j)].clone();
                    a[(k, j)] = a[(k, j)].clone() + add;
                }
                for i in 0..n {
                    let add = a[(i, l)].clone();
                    a[(i, k)] = a[(i, k)].clone() + add;
                }
            } else {
                continue; // row/column k is entirely zero from k on
            }
        }
        let pivot = a[(k, k)].clone();
        for i in (k + 1)..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = a[(i, k)].clone() / pivot.clone();
            for j in 0..n {
                let sub = f.clone() * a[(k, j)].clone();
                a[(i, j)] = a[(i, j)].clone() - sub;
            }
            for j in 0..n {
                let sub = f.clone() * a[(j, k)].clone();
                a[(j, i)] = a[(j, i)].clone() - sub;
            }
        }
    }
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    for k in 0..n {
        if a[(k, k)].is_zero() {
            zero += 1;
        } else if a[(k, k)].is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    Ok((pos, neg, zero))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn diag(entries: &[i64]) -> SquareMatrix<Rational> {
        let n = entries.len();
        SquareMatrix::from_fn(n, |i, j| if i == j { rat(entries[i]) } else { rat(0) })
    }

    #[test]
    fn inverse_of_diagonal() {
        let m = diag(&[1, 1, -1]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, diag(&[1, 1, -1]));
        assert_eq!(m.matmul(&inv), SquareMatrix::identity(3));
    }

    #[test]
    fn inverse_requires_nonsingular() {
        let m = diag(&[1, 0, 1]);
        assert!(m.inverse().is_none());
    }

    #[test]
    fn inverse_general_exact() {
        let mut m = SquareMatrix::zeros(2);
        m[(0, 0)] = rat(2);
        m[(0, 1)] = rat(1);
        m[(1, 0)] = rat(5);
        m[(1, 1)] = rat(3);
        let inv = m.inverse().unwrap();
        assert_eq!(inv[(0, 0)], rat(3));
        assert_eq!(inv[(0, 1)], rat(-1));
        assert_eq!(inv[(1, 0)], rat(-5));
        assert_eq!(inv[(1, 1)], rat(2));
    }

    #[test]
    fn signature_of_b_metric() {
        assert_eq!(signature(&diag(&[1, 1, -1])).unwrap(), (2, 1, 0));
        assert_eq!(signature(&diag(&[1, 1, 1])).unwrap(), (3, 0, 0));
        assert_eq!(signature(&diag(&[0, -2, 3])).unwrap(), (1, 1, 1));
    }

    #[test]
    fn signature_handles_zero_diagonal() {
        // hyperbolic plane pairing: eigenvalues +1, -1
        let mut m = SquareMatrix::zeros(2);
        m[(0, 1)] = rat(1);
        m[(1, 0)] = rat(1);
        assert_eq!(signature(&m).unwrap(), (1, 1, 0));
    }

    #[test]
    fn signature_of_associated_metric() {
        // gTilde for the standard structure: diag block {1} and antidiagonal -1
        let mut m = SquareMatrix::zeros(3);
        m[(0, 0)] = rat(1);
        m[(1, 2)] = rat(-1);
        m[(2, 1)] = rat(-1);
        assert_eq!(signature(&m).unwrap(), (2, 1, 0));
    }

    #[test]
    fn rank_detects_dependence() {
        let e1 = vec![rat(1), rat(0), rat(0)];
        let e2 = vec![rat(0), rat(1), rat(0)];
        let sum = vec![rat(1), rat(1), rat(0)];
        assert_eq!(rank(&[e1.clone(), e2.clone()]), 2);
        assert_eq!(rank(&[e1.clone(), e2.clone(), sum]), 2);
        assert_eq!(rank(&[e1.clone(), e1]), 1);
        assert_eq!(rank(&[vec![ratio(1, 2), rat(0)], vec![rat(2), rat(0)]]), 1);
    }
}
