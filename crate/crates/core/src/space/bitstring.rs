use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::error::{contract, Error, Result};
use crate::space::RngStream;

/// A fixed-length binary string. Position 0 is the leftmost character of the
/// text rendering.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    bits: Vec<bool>,
}

impl BitString {
    pub fn from_bits(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(contract!("bit strings must have length >= 1"));
        }
        Ok(Self { bits })
    }

    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "bit strings must have length >= 1");
        Self {
            bits: vec![false; n],
        }
    }

    pub fn ones(n: usize) -> Self {
        assert!(n >= 1, "bit strings must have length >= 1");
        Self {
            bits: vec![true; n],
        }
    }

    /// Decodes the low `n` bits of `index`, most significant bit at position 0.
    pub fn from_index(n: usize, index: u64) -> Self {
        let mut x = Self::zeros(n);
        x.load_index(index);
        x
    }

    /// Overwrites the bits in place from `index`, keeping the length.
    pub(crate) fn load_index(&mut self, index: u64) {
        let n = self.bits.len();
        for (i, bit) in self.bits.iter_mut().enumerate() {
            *bit = (index >> (n - 1 - i)) & 1 == 1;
        }
    }

    /// Uniformly random string of length `n`.
    pub fn random(n: usize, rng: &mut RngStream) -> Result<Self> {
        if n == 0 {
            return Err(contract!("bit strings must have length >= 1"));
        }
        Ok(Self {
            bits: (0..n).map(|_| rng.random::<bool>()).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Always `false`; a bit string has at least one position.
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    pub fn hamming(&self, other: &Self) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Standard bit-wise mutation: every bit flips independently with
    /// probability `rate`. `self` is left untouched.
    pub fn mutate(&self, rate: f64, rng: &mut RngStream) -> Result<Self> {
        if !(0.0..=1.0).contains(&rate) {
            return Err(contract!("mutation rate must lie in [0, 1], got {rate}"));
        }
        Ok(Self {
            bits: self
                .bits
                .iter()
                .map(|&b| b ^ rng.random_bool(rate))
                .collect(),
        })
    }
}

/// Free-function form of [`BitString::random`].
pub fn random_bitstring(n: usize, rng: &mut RngStream) -> Result<BitString> {
    BitString::random(n, rng)
}

/// Free-function form of [`BitString::mutate`].
pub fn bitwise_mutate(x: &BitString, rate: f64, rng: &mut RngStream) -> Result<BitString> {
    x.mutate(rate, rng)
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(contract!("invalid bit character {other:?}")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bits(bits)
    }
}
