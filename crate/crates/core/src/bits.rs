//! Packed bit vectors.
//!
//! All bitstrings in this crate use the same packing convention: bit `i`
//! lives in byte `i / 8` at position `i % 8`, i.e. LSB-first within each
//! byte. Every module that serializes bits goes through this type.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitVector {
    bytes: Vec<u8>,
    len: usize,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            bytes: vec![0u8; len.div_ceil(8)],
            len,
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    /// Interprets the lowest `len` bits of `x`, LSB first.
    pub fn from_u64(x: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut v = Self::zeros(len);
        for i in 0..len {
            v.set(i, (x >> i) & 1 == 1);
        }
        v
    }

    /// Reads `len` bits out of a packed byte slice.
    pub fn from_bytes(bytes: &[u8], len: usize) -> Result<Self> {
        if bytes.len() != len.div_ceil(8) {
            return Err(Error::LengthMismatch {
                expected: len.div_ceil(8),
                got: bytes.len(),
            });
        }
        let mut v = BitVector {
            bytes: bytes.to_vec(),
            len,
        };
        v.mask_tail();
        Ok(v)
    }

    fn mask_tail(&mut self) {
        let extra = self.len % 8;
        if extra != 0 {
            if let Some(last) = self.bytes.last_mut() {
                *last &= (1u8 << extra) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        (self.bytes[i / 8] >> (i % 8)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, b: bool) {
        assert!(i < self.len);
        if b {
            self.bytes[i / 8] |= 1 << (i % 8);
        } else {
            self.bytes[i / 8] &= !(1 << (i % 8));
        }
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn xor(&self, other: &BitVector) -> Result<BitVector> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len,
                got: other.len,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.bytes.iter_mut().zip(&other.bytes) {
            *a ^= b;
        }
        Ok(out)
    }

    pub fn xor_in_place(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len);
        for (a, b) in self.bytes.iter_mut().zip(&other.bytes) {
            *a ^= b;
        }
    }

    pub fn concat(&self, other: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.len + other.len);
        for i in 0..self.len {
            out.set(i, self.get(i));
        }
        for i in 0..other.len {
            out.set(self.len + i, other.get(i));
        }
        out
    }

    pub fn slice(&self, start: usize, len: usize) -> BitVector {
        assert!(start + len <= self.len);
        let mut out = BitVector::zeros(len);
        for i in 0..len {
            out.set(i, self.get(start + i));
        }
        out
    }

    pub fn count_ones(&self) -> usize {
        self.bytes.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.bytes.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Lowest `len` bits as an integer, LSB first. Panics if len > 64.
    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= 64);
        let mut x = 0u64;
        for i in 0..self.len {
            if self.get(i) {
                x |= 1 << i;
            }
        }
        x
    }

    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.bytes.len() * 2);
        for b in &self.bytes {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    pub fn from_hex(hex: &str, len: usize) -> Result<Self> {
        if hex.len() % 2 != 0 {
            return Err(Error::Malformed("odd hex length".into()));
        }
        let mut bytes = Vec::with_capacity(hex.len() / 2);
        for i in (0..hex.len()).step_by(2) {
            let b = u8::from_str_radix(&hex[i..i + 2], 16)
                .map_err(|_| Error::Malformed("bad hex digit".into()))?;
            bytes.push(b);
        }
        Self::from_bytes(&bytes, len)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector[")?;
        for b in self.iter() {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        write!(f, "]")
    }
}
