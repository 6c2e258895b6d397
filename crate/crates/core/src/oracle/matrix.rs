use std::fmt;

use super::field::FqField;
use crate::error::{Error, Result};

/// A dense matrix over a small finite field; entries are element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    field: &'static FqField,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl FqMatrix {
    pub fn zero(field: &'static FqField, rows: usize, cols: usize) -> Self {
        FqMatrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &'static FqField, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(field: &'static FqField, rows: &[Vec<u8>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Matrix("ragged rows".into()));
            }
            if let Some(&bad) = row.iter().find(|&&x| x as usize >= field.order()) {
                return Err(Error::Matrix(format!("entry {bad} outside F_{}", field.q())));
            }
            data.extend_from_slice(row);
        }
        Ok(FqMatrix {
            field,
            rows: r,
            cols: c,
            data,
        })
    }

    pub(crate) fn from_data(field: &'static FqField, rows: usize, cols: usize, data: Vec<u8>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        FqMatrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> &'static FqField {
        self.field
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

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &FqMatrix) -> FqMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = self.field;
        let mut out = FqMatrix::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &FqMatrix) -> FqMatrix {
        self.zip(other, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, other: &FqMatrix) -> FqMatrix {
        self.zip(other, |a, b| self.field.sub(a, b))
    }

    fn zip(&self, other: &FqMatrix, op: impl Fn(u8, u8) -> u8) -> FqMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "dimension mismatch");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| op(a, b)).collect();
        FqMatrix::from_data(self.field, self.rows, self.cols, data)
    }

    pub fn scale(&self, c: u8) -> FqMatrix {
        let data = self.data.iter().map(|&a| self.field.mul(c, a)).collect();
        FqMatrix::from_data(self.field, self.rows, self.cols, data)
    }

    pub fn pow(&self, mut e: usize) -> FqMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = FqMatrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `A v` for a column vector `v`.
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        let f = self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        row_reduce(self.field, self.data.clone(), self.rows, self.cols).len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `dim ker A`.
    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Evaluates `c_0 I + c_1 A + … + c_d A^d` by Horner's rule.
    pub fn eval_poly(&self, coeffs: &[u8]) -> FqMatrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut acc = FqMatrix::zero(self.field, n, n);
        for &c in coeffs.iter().rev() {
            acc = acc.mul(self).add(&FqMatrix::identity(self.field, n).scale(c));
        }
        acc
    }

    /// The upper-left `k × k` corner.
    pub fn corner(&self, k: usize) -> FqMatrix {
        let mut out = FqMatrix::zero(self.field, k, k);
        for i in 0..k {
            for j in 0..k {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }
}

/// Row-reduces `data` (`rows × cols`) in place and returns the nonzero rows
/// of the reduced row-echelon form.
pub(crate) fn row_reduce(f: &FqField, mut data: Vec<u8>, rows: usize, cols: usize) -> Vec<Vec<u8>> {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| data[r * cols + col] != 0) else {
            continue;
        };
        for j in 0..cols {
            data.swap(rank * cols + j, pivot * cols + j);
        }
        let inv = f.inv(data[rank * cols + col]).expect("nonzero pivot");
        for j in 0..cols {
            data[rank * cols + j] = f.mul(inv, data[rank * cols + j]);
        }
        for r in 0..rows {
            let c = data[r * cols + col];
            if r == rank || c == 0 {
                continue;
            }
            for j in 0..cols {
                let v = f.sub(data[r * cols + j], f.mul(c, data[rank * cols + j]));
                data[r * cols + j] = v;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    (0..rank).map(|r| data[r * cols..(r + 1) * cols].to_vec()).collect()
}

impl fmt::Debug for FqMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u8]> = (0..self.rows).map(|i| self.row(i)).collect();
        write!(f, "F{}{:?}", self.field.q(), rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_power() {
        let f = FqField::get(2).unwrap();
        let j = FqMatrix::from_rows(f, &[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]]).unwrap();
        let n = j.sub(&FqMatrix::identity(f, 3));
        assert_eq!(n.rank(), 2);
        assert_eq!(n.pow(2).rank(), 1);
        assert!(n.pow(3).is_zero());
        assert!(j.is_invertible());
        assert!(!n.is_invertible());
        assert_eq!(j.pow(4), FqMatrix::identity(f, 3));
    }

    #[test]
    fn eval_poly_companion() {
        // companion of x^2 + x + 1 over F_2 satisfies its polynomial
        let f = FqField::get(2).unwrap();
        let c = FqMatrix::from_rows(f, &[vec![0, 1], vec![1, 1]]).unwrap();
        assert!(c.eval_poly(&[1, 1, 1]).is_zero());
    }

    #[test]
    fn rejects_bad_entries() {
        let f = FqField::get(3).unwrap();
        assert!(FqMatrix::from_rows(f, &[vec![0, 3]]).is_err());
        assert!(FqMatrix::from_rows(f, &[vec![0, 1], vec![1]]).is_err());
    }
}
