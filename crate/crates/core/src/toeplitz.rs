//! Toeplitz universal hashing over GF(2).
//!
//! `f(r) = T r ⊕ offset` where the n×L matrix T has constant diagonals,
//! `T[i][j] = diag[i - j + L - 1]`. The family is 2-universal and linear,
//! which makes preimage sampling a solved linear system.

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::gf2::{gf2_solve, GF2Matrix};
use crate::xof::DetRng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToeplitzHash {
    pub in_len: usize,
    pub out_len: usize,
    pub diag: BitVector,
    pub offset: BitVector,
}

impl ToeplitzHash {
    pub fn new(in_len: usize, out_len: usize, diag: BitVector, offset: BitVector) -> Result<Self> {
        if diag.len() != in_len + out_len - 1 {
            return Err(Error::LengthMismatch {
                expected: in_len + out_len - 1,
                got: diag.len(),
            });
        }
        if offset.len() != out_len {
            return Err(Error::LengthMismatch {
                expected: out_len,
                got: offset.len(),
            });
        }
        Ok(ToeplitzHash {
            in_len,
            out_len,
            diag,
            offset,
        })
    }

    pub fn sample(in_len: usize, out_len: usize, rng: &mut DetRng) -> Self {
        ToeplitzHash {
            in_len,
            out_len,
            diag: rng.bits(in_len + out_len - 1),
            offset: rng.bits(out_len),
        }
    }

    /// The Toeplitz hash whose matrix projects onto the first `out_len`
    /// coordinates with zero offset.
    pub fn identity_embedding(in_len: usize, out_len: usize) -> Self {
        let mut diag = BitVector::zeros(in_len + out_len - 1);
        diag.set(in_len - 1, true);
        ToeplitzHash {
            in_len,
            out_len,
            diag,
            offset: BitVector::zeros(out_len),
        }
    }

    /// Dense matrix form of T.
    pub fn matrix(&self) -> GF2Matrix {
        let mut m = GF2Matrix::zeros(self.out_len, self.in_len);
        for i in 0..self.out_len {
            for j in 0..self.in_len {
                m.set(i, j, self.diag.get(i + self.in_len - 1 - j));
            }
        }
        m
    }

    pub fn has_full_row_rank(&self) -> bool {
        self.matrix().rank() == self.out_len
    }
}

pub fn universal_hash_eval(f: &ToeplitzHash, r: &BitVector) -> Result<BitVector> {
    if r.len() != f.in_len {
        return Err(Error::LengthMismatch {
            expected: f.in_len,
            got: r.len(),
        });
    }
    let mut out = BitVector::zeros(f.out_len);
    for i in 0..f.out_len {
        let mut acc = f.offset.get(i);
        for j in 0..f.in_len {
            if f.diag.get(i + f.in_len - 1 - j) && r.get(j) {
                acc = !acc;
            }
        }
        out.set(i, acc);
    }
    Ok(out)
}

/// Samples r uniformly from `{r : f(r) = m}` (particular solution ⊕ uniform
/// kernel element). Fails with a retryable error when T is rank deficient;
/// the caller resamples f.
pub fn universal_hash_sample_preimage(
    f: &ToeplitzHash,
    m: &BitVector,
    rng: &mut DetRng,
) -> Result<BitVector> {
    if m.len() != f.out_len {
        return Err(Error::LengthMismatch {
            expected: f.out_len,
            got: m.len(),
        });
    }
    let t = f.matrix();
    if t.rank() != f.out_len {
        return Err(Error::RankDeficient);
    }
    let target = m.xor(&f.offset)?;
    let (particular, kernel) = gf2_solve(&t, &target)?;
    let mut r = particular;
    for k in &kernel {
        if rng.bit() {
            r.xor_in_place(k);
        }
    }
    Ok(r)
}
