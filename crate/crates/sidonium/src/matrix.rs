//! Dense square 0/1 matrices.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix01 {
    n: usize,
    bits: Vec<u8>,
}

impl SquareMatrix01 {
    pub fn zero(n: usize) -> Self {
        SquareMatrix01 {
            n,
            bits: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn ones(n: usize) -> Self {
        SquareMatrix01 {
            n,
            bits: vec![1; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len();
        let mut bits = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::invalid("matrix is not square"));
            }
            for &e in row {
                if e > 1 {
                    return Err(Error::invalid("entries must be 0 or 1"));
                }
                bits.push(e);
            }
        }
        Ok(SquareMatrix01 { n, bits })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j] == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.n + j] = v as u8;
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.n).filter(|&j| self.get(i, j)).count()
    }

    pub fn col_sum(&self, j: usize) -> usize {
        (0..self.n).filter(|&i| self.get(i, j)).count()
    }

    pub fn row_sums(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.row_sum(i)).collect()
    }

    pub fn col_sums(&self) -> Vec<usize> {
        (0..self.n).map(|j| self.col_sum(j)).collect()
    }
}
