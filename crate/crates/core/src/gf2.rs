//! Dense bit matrices over GF(2) with Gaussian elimination.

use crate::bits::BitVector;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Row-major packed bit matrix. Each row occupies `ceil(cols/8)` bytes with
/// the same LSB-first packing as [`BitVector`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GF2Matrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<u8>,
}

impl GF2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GF2Matrix {
            rows,
            cols,
            data: vec![0u8; rows * cols.div_ceil(8)],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from row bit-vectors; all rows must share one length.
    pub fn from_rows(rows: &[BitVector]) -> Result<Self> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::LengthMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            for j in 0..cols {
                m.set(i, j, r.get(j));
            }
        }
        Ok(m)
    }

    fn row_bytes(&self) -> usize {
        self.cols.div_ceil(8)
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        let idx = r * self.row_bytes() + c / 8;
        (self.data[idx] >> (c % 8)) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let rb = self.row_bytes();
        let idx = r * rb + c / 8;
        if v {
            self.data[idx] |= 1 << (c % 8);
        } else {
            self.data[idx] &= !(1 << (c % 8));
        }
    }

    pub fn row(&self, r: usize) -> BitVector {
        let rb = self.row_bytes();
        BitVector::from_bytes(&self.data[r * rb..(r + 1) * rb], self.cols).unwrap()
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        let rb = self.row_bytes();
        let (lo, hi) = if dst < src { (dst, src) } else { (src, dst) };
        let (a, b) = self.data.split_at_mut(hi * rb);
        let (dst_s, src_s) = if dst < src {
            (&mut a[dst * rb..dst * rb + rb], &b[..rb])
        } else {
            let lo_s = &a[lo * rb..lo * rb + rb];
            (&mut b[..rb], lo_s)
        };
        // borrow gymnastics: dst row and src row never alias
        for (d, s) in dst_s.iter_mut().zip(src_s.iter()) {
            *d ^= s;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let rb = self.row_bytes();
        for k in 0..rb {
            self.data.swap(a * rb + k, b * rb + k);
        }
    }

    /// Matrix-vector product over GF(2).
    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = BitVector::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = 0u32;
            let rb = self.row_bytes();
            for (a, b) in self.data[i * rb..(i + 1) * rb].iter().zip(v.as_bytes()) {
                acc ^= (a & b).count_ones();
            }
            out.set(i, acc & 1 == 1);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let (_, _, rank) = self.row_echelon();
        rank
    }

    /// Returns (echelon copy, pivot column per pivot row, rank).
    fn row_echelon(&self) -> (GF2Matrix, Vec<usize>, usize) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            if let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) {
                m.swap_rows(r, p);
                for i in 0..m.rows {
                    if i != r && m.get(i, c) {
                        m.xor_rows(i, r);
                    }
                }
                pivots.push(c);
                r += 1;
            }
        }
        (m, pivots, r)
    }
}

/// Solves `A x = b` over GF(2). Returns a particular solution together with
/// an independent basis of the kernel, or [`Error::NoSolution`].
pub fn gf2_solve(a: &GF2Matrix, b: &BitVector) -> Result<(BitVector, Vec<BitVector>)> {
    if b.len() != a.rows {
        return Err(Error::LengthMismatch {
            expected: a.rows,
            got: b.len(),
        });
    }
    // Eliminate on the augmented matrix [A | b].
    let mut aug = GF2Matrix::zeros(a.rows, a.cols + 1);
    for r in 0..a.rows {
        for c in 0..a.cols {
            aug.set(r, c, a.get(r, c));
        }
        aug.set(r, a.cols, b.get(r));
    }
    let (e, pivots, rank) = aug.row_echelon();
    if pivots.iter().any(|&c| c == a.cols) {
        return Err(Error::NoSolution);
    }
    let mut particular = BitVector::zeros(a.cols);
    for (row, &col) in pivots.iter().enumerate() {
        particular.set(col, e.get(row, a.cols));
    }
    let pivot_set: Vec<bool> = {
        let mut s = vec![false; a.cols];
        for &c in &pivots {
            s[c] = true;
        }
        s
    };
    let mut kernel = Vec::new();
    for free in 0..a.cols {
        if pivot_set[free] {
            continue;
        }
        let mut k = BitVector::zeros(a.cols);
        k.set(free, true);
        for (row, &col) in pivots.iter().enumerate() {
            if e.get(row, free) {
                k.set(col, true);
            }
        }
        kernel.push(k);
    }
    debug_assert_eq!(kernel.len(), a.cols - rank);
    Ok((particular, kernel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xof::DetRng;

    fn random_matrix(rng: &mut DetRng, rows: usize, cols: usize) -> GF2Matrix {
        let mut m = GF2Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, rng.bit());
            }
        }
        m
    }

    #[test]
    fn identity_solve() {
        let a = GF2Matrix::identity(5);
        let b = BitVector::from_u64(0b10110, 5);
        let (x, ker) = gf2_solve(&a, &b).unwrap();
        assert_eq!(x, b);
        assert!(ker.is_empty());
    }

    #[test]
    fn zero_matrix_kernel_is_standard_basis() {
        let a = GF2Matrix::zeros(3, 4);
        let (x, ker) = gf2_solve(&a, &BitVector::zeros(3)).unwrap();
        assert!(x.is_zero());
        assert_eq!(ker.len(), 4);
        for (i, k) in ker.iter().enumerate() {
            assert_eq!(k.count_ones(), 1);
            assert!(k.get(i));
        }
    }

    #[test]
    fn random_systems_multiply_back() {
        let mut rng = DetRng::from_u64(7);
        for _ in 0..50 {
            let a = random_matrix(&mut rng, 8, 12);
            let x0 = {
                let mut v = BitVector::zeros(12);
                for i in 0..12 {
                    v.set(i, rng.bit());
                }
                v
            };
            let b = a.mul_vec(&x0).unwrap();
            let (x, ker) = gf2_solve(&a, &b).unwrap();
            assert_eq!(a.mul_vec(&x).unwrap(), b);
            for k in &ker {
                assert!(a.mul_vec(k).unwrap().is_zero());
            }
            // rank-nullity
            assert_eq!(ker.len(), 12 - a.rank());
        }
    }

    #[test]
    fn inconsistent_system_reports_no_solution() {
        let mut a = GF2Matrix::zeros(2, 2);
        a.set(0, 0, true);
        a.set(1, 0, true);
        let mut b = BitVector::zeros(2);
        b.set(0, true);
        assert!(matches!(gf2_solve(&a, &b), Err(Error::NoSolution)));
    }

    #[test]
    fn kernel_basis_is_independent() {
        let mut rng = DetRng::from_u64(9);
        let a = random_matrix(&mut rng, 5, 10);
        let (_, ker) = gf2_solve(&a, &BitVector::zeros(5)).unwrap();
        let m = GF2Matrix::from_rows(&ker).unwrap();
        assert_eq!(m.rank(), ker.len());
    }
}
