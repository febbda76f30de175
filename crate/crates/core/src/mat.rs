//! Dense row-major matrices and exact vector arithmetic.
//!
//! The element type is generic so the same storage backs rational and
//! extended-valued problems; the numeric operations (products, determinant)
//! are provided for rational entries.

use std::ops::Index;

use num::bigint::BigInt;
use num::{Integer, One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::rat::Rat;

/// Dense `rows x cols` matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Mat<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Mat<T> {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        Mat { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Mat<T> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Builds from row vectors; all rows must have equal length.
    /// An empty list gives the 0x0 matrix.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Mat<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        assert!(i < self.rows, "row out of bounds");
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f(x)).collect(),
        }
    }
}

impl<T: Clone> Mat<T> {
    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn filled(rows: usize, cols: usize, value: T) -> Mat<T> {
        Mat {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    /// Assembles `[tl tr; bl br]`. Row counts must agree across each band
    /// and column counts down each side.
    pub fn from_blocks(tl: &Mat<T>, tr: &Mat<T>, bl: &Mat<T>, br: &Mat<T>) -> Mat<T> {
        assert_eq!(tl.rows, tr.rows, "top blocks: row mismatch");
        assert_eq!(bl.rows, br.rows, "bottom blocks: row mismatch");
        assert_eq!(tl.cols, bl.cols, "left blocks: column mismatch");
        assert_eq!(tr.cols, br.cols, "right blocks: column mismatch");
        Mat::from_fn(tl.rows + bl.rows, tl.cols + tr.cols, |i, j| {
            if i < tl.rows {
                if j < tl.cols {
                    tl.get(i, j).clone()
                } else {
                    tr.get(i, j - tl.cols).clone()
                }
            } else if j < tl.cols {
                bl.get(i - tl.rows, j).clone()
            } else {
                br.get(i - tl.rows, j - tl.cols).clone()
            }
        })
    }

    /// Inverse of `from_blocks` at the given split point.
    pub fn to_blocks(&self, row_split: usize, col_split: usize) -> (Mat<T>, Mat<T>, Mat<T>, Mat<T>) {
        assert!(row_split <= self.rows && col_split <= self.cols);
        let sub = |r0: usize, r1: usize, c0: usize, c1: usize| {
            Mat::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
        };
        (
            sub(0, row_split, 0, col_split),
            sub(0, row_split, col_split, self.cols),
            sub(row_split, self.rows, 0, col_split),
            sub(row_split, self.rows, col_split, self.cols),
        )
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        self.get(i, j)
    }
}

impl<T: Serialize> Serialize for Mat<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            seq.serialize_element(self.row(i))?;
        }
        seq.end()
    }
}

/// Exact dot product; empty vectors give zero.
pub fn dot(v: &[Rat], w: &[Rat]) -> Rat {
    assert_eq!(v.len(), w.len(), "dot: length mismatch");
    v.iter().zip(w).map(|(a, b)| a * b).sum()
}

impl Mat<Rat> {
    pub fn zeros(rows: usize, cols: usize) -> Mat<Rat> {
        Mat::filled(rows, cols, Rat::zero())
    }

    pub fn identity(n: usize) -> Mat<Rat> {
        Mat::from_fn(n, n, |i, j| {
            if i == j {
                Rat::one()
            } else {
                Rat::zero()
            }
        })
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols, "mul_vec: dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn mat_mul(&self, other: &Mat<Rat>) -> Mat<Rat> {
        assert_eq!(self.cols, other.rows, "mat_mul: dimension mismatch");
        Mat::from_fn(self.rows, other.cols, |i, k| {
            (0..self.cols)
                .map(|j| self.get(i, j) * other.get(j, k))
                .sum()
        })
    }

    pub fn neg(&self) -> Mat<Rat> {
        self.map(|x| -x)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    ///
    /// Denominators are cleared row by row first, so the elimination runs
    /// over integers; every interior division is exact.
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "det: matrix must be square");
        let n = self.rows;
        if n == 0 {
            return Rat::one();
        }

        let mut scale = BigInt::one();
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
        for i in 0..n {
            let l = self
                .row(i)
                .iter()
                .fold(BigInt::one(), |acc, q| acc.lcm(q.den()));
            let row = self
                .row(i)
                .iter()
                .map(|q| q.num() * (&l / q.den()))
                .collect();
            scale *= l;
            m.push(row);
        }

        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Rat::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    let (q, r) = t.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division must be exact");
                    m[i][j] = q;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }

        let det_int = &m[n - 1][n - 1] * BigInt::from(sign);
        Rat::mk_rat(det_int, scale.to_biguint().expect("positive scale"))
    }
}
