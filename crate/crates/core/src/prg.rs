//! Pseudorandom generator used inside Naor commitments.
//!
//! Two modes:
//! - `LinearToy`: G(s) = M·s over GF(2) for a public matrix M. Deliberately
//!   *not* pseudorandom (it is linear); it exists because Naor binding is a
//!   statistical property of the image of G, which lets toy-scale tests
//!   enumerate seeds exhaustively and keeps the decommitment relation an
//!   XOR-only circuit. Never use it where hiding matters.
//! - `Xof`: output drawn from the domain-separated XOF of the seed.

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::gf2::GF2Matrix;
use crate::xof::{xof_bits, DetRng, DOMAIN_PRG};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PrgMode {
    LinearToy { matrix: GF2Matrix },
    Xof,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrgSpec {
    pub mode: PrgMode,
    pub seed_len: usize,
    pub out_len: usize,
}

impl PrgSpec {
    pub fn xof(seed_len: usize, out_len: usize) -> Self {
        PrgSpec {
            mode: PrgMode::Xof,
            seed_len,
            out_len,
        }
    }

    pub fn linear_toy(matrix: GF2Matrix) -> Self {
        PrgSpec {
            seed_len: matrix.cols,
            out_len: matrix.rows,
            mode: PrgMode::LinearToy { matrix },
        }
    }

    /// Fresh random linear-toy spec with shape `out_len x seed_len`.
    pub fn random_linear(seed_len: usize, out_len: usize, rng: &mut DetRng) -> Self {
        let mut m = GF2Matrix::zeros(out_len, seed_len);
        for r in 0..out_len {
            for c in 0..seed_len {
                m.set(r, c, rng.bit());
            }
        }
        Self::linear_toy(m)
    }
}

pub fn prg_expand(spec: &PrgSpec, seed: &BitVector) -> Result<BitVector> {
    if seed.len() != spec.seed_len {
        return Err(Error::LengthMismatch {
            expected: spec.seed_len,
            got: seed.len(),
        });
    }
    match &spec.mode {
        PrgMode::LinearToy { matrix } => {
            if matrix.rows != spec.out_len || matrix.cols != spec.seed_len {
                return Err(Error::InvalidArgument("linear PRG matrix shape".into()));
            }
            matrix.mul_vec(seed)
        }
        PrgMode::Xof => {
            let mut data = Vec::with_capacity(4 + seed.as_bytes().len());
            data.extend_from_slice(&(spec.out_len as u32).to_le_bytes());
            data.extend_from_slice(seed.as_bytes());
            Ok(xof_bits(DOMAIN_PRG, &data, spec.out_len))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_zero_seed_maps_to_zero() {
        let mut rng = DetRng::from_u64(1);
        let spec = PrgSpec::random_linear(6, 18, &mut rng);
        let out = prg_expand(&spec, &BitVector::zeros(6)).unwrap();
        assert!(out.is_zero());
    }

    /// Hand multiply of the 6x2 matrix from the module contract:
    /// rows (over seed bits) 10,01,11,10,01,11 applied to seed 11.
    #[test]
    fn linear_hand_multiply() {
        let rows = [
            [true, false],
            [false, true],
            [true, true],
            [true, false],
            [false, true],
            [true, true],
        ];
        let mut m = GF2Matrix::zeros(6, 2);
        for (i, r) in rows.iter().enumerate() {
            for (j, &b) in r.iter().enumerate() {
                m.set(i, j, b);
            }
        }
        let spec = PrgSpec::linear_toy(m);
        let seed = BitVector::from_bits(&[true, true]);
        let out = prg_expand(&spec, &seed).unwrap();
        // rows 10,01,11,10,01,11 on seed (1,1): 1,1,0,1,1,0
        let want = BitVector::from_bits(&[true, true, false, true, true, false]);
        assert_eq!(out, want);
    }

    /// Golden vector generated once by the FIPS-202 reference SHAKE256.
    #[test]
    fn xof_mode_matches_reference() {
        let spec = PrgSpec::xof(4, 12);
        let seed = BitVector::from_u64(0b1011, 4);
        let out = prg_expand(&spec, &seed).unwrap();
        assert_eq!(out, BitVector::from_hex("2428", 12).unwrap());
    }

    #[test]
    fn pure_function() {
        let spec = PrgSpec::xof(16, 48);
        let seed = BitVector::from_u64(0xbeef, 16);
        assert_eq!(
            prg_expand(&spec, &seed).unwrap(),
            prg_expand(&spec, &seed).unwrap()
        );
    }

    #[test]
    fn seed_length_checked() {
        let spec = PrgSpec::xof(8, 24);
        assert!(prg_expand(&spec, &BitVector::zeros(7)).is_err());
    }
}
