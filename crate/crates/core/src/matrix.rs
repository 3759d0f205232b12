//! Dense matrices over exact rationals.

use crate::rational::{format_q, parse_q, ParseRationalError, Q};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(format_q).collect())
            .collect();
        write!(f, "RationalMatrix{:?}", rows)
    }
}

impl Index<(usize, usize)> for RationalMatrix {
    type Output = Q;
    fn index(&self, (i, j): (usize, usize)) -> &Q {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Q {
        &mut self.data[i * self.cols + j]
    }
}

/// Row-reduced echelon form together with the pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Builds from row vectors; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<Q>>) -> Option<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return None;
        }
        Some(RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| crate::rational::q(x)).collect()).collect())
            .expect("ragged rows")
    }

    /// Matrix whose columns are the given vectors, with `rows` rows.
    pub fn from_columns(rows: usize, cols: &[Vec<Q>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn parse(rows: &[Vec<String>]) -> Result<Self, ParseRationalError> {
        let parsed = rows
            .iter()
            .map(|r| r.iter().map(|s| parse_q(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_rows(parsed).ok_or_else(|| ParseRationalError("ragged matrix".into()))
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| self.row(i).iter().map(format_q).collect()).collect()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Q> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Self {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Block-diagonal sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(idx.len(), self.cols);
        for (r, &i) in idx.iter().enumerate() {
            for j in 0..self.cols {
                m[(r, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let v = &m[(r, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let Rref { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix[(r, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Columns of `self` at the pivot positions of its echelon form.
    pub fn column_space(&self) -> Vec<Vec<Q>> {
        self.rref().pivots.iter().map(|&c| self.column(c)).collect()
    }

    pub fn determinant(&self) -> Q {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else { return Q::zero() };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det *= &piv;
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = &m[(i, c)] / &piv;
                for j in c..n {
                    let v = &m[(c, j)] * &f;
                    m[(i, j)] -= v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Q::one();
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = matrix[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Unique solution of `self·x = b` when `self` has full column rank and
    /// `b` lies in the column space.
    pub fn solve(&self, b: &[Q]) -> Option<Vec<Q>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.contains(&self.cols) || pivots.len() < self.cols {
            return None;
        }
        Some((0..self.cols).map(|r| matrix[(r, self.cols)].clone()).collect())
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).fold(Q::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Characteristic polynomial `det(xI − A)`, lowest degree first, by the
    /// Faddeev–LeVerrier recursion.
    pub fn characteristic_polynomial(&self) -> Vec<Q> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Q::zero(); n + 1];
        coeffs[n] = Q::one();
        let id = Self::identity(n);
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            m = self.mul(&m).add(&id.scale(&coeffs[n - k + 1]));
            let t = self.mul(&m).trace();
            coeffs[n - k] = -t / Q::from_integer((k as i64).into());
        }
        coeffs
    }

    pub fn to_f64(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.rows, self.cols, |i, j| crate::rational::to_f64(&self[(i, j)]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{q, q_frac};

    #[test]
    fn rank_and_nullspace() {
        let m = RationalMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(m.mul_vec(&ns[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn determinant_and_inverse() {
        let m = RationalMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.determinant(), q(1));
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let s = RationalMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(s.inverse().is_none());
        assert_eq!(s.determinant(), q(0));
    }

    #[test]
    fn solve_overdetermined_consistent() {
        let m = RationalMatrix::from_i64(&[&[1, 0], &[0, 2], &[1, 1]]);
        let x = m.solve(&[q(1), q(1), q_frac(3, 2)]).unwrap();
        assert_eq!(x, vec![q(1), q_frac(1, 2)]);
        assert!(m.solve(&[q(1), q(1), q(0)]).is_none());
    }

    #[test]
    fn charpoly_of_diagonal() {
        let m = RationalMatrix::diagonal(&[q(2), q(3)]);
        // (x-2)(x-3) = 6 - 5x + x^2
        assert_eq!(m.characteristic_polynomial(), vec![q(6), q(-5), q(1)]);
    }
}
