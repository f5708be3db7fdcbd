//! Fixed-length bit vectors.
//!
//! Bit `i` counts from the right: position 0 is the rightmost character of
//! the textual form, which is always written most-significant bit first.

use std::fmt;
use std::ops::{BitXor, Not};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    /// All-zero vector of the given length. Panics on length 0.
    pub fn zeros(len: usize) -> Self {
        assert!(len > 0, "bit vectors have length >= 1");
        BitVector {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        !Self::zeros(len)
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            if f(i) {
                v.set(i, true);
            }
        }
        v
    }

    /// The `width`-bit binary representation of `value`.
    pub fn from_index(value: u64, width: usize) -> Self {
        Self::from_fn(width, |i| i < 64 && (value >> i) & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    /// Integer value of the vector, if it fits in 64 bits.
    pub fn to_index(&self) -> Option<u64> {
        if self.len > 64 {
            return None;
        }
        Some(self.words[0])
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Copy of bits `start..start + len`.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        Self::from_fn(len, |i| self.get(start + i))
    }

    /// Concatenates `parts` so that `parts[0]` occupies the lowest positions
    /// (the rightmost characters of the text form).
    pub fn concat_low_first(parts: &[&BitVector]) -> Self {
        let len = parts.iter().map(|p| p.len).sum();
        let mut out = Self::zeros(len);
        let mut offset = 0;
        for p in parts {
            for i in 0..p.len {
                if p.get(i) {
                    out.set(offset + i, true);
                }
            }
            offset += p.len;
        }
        out
    }

    pub fn checked_xor(&self, other: &BitVector) -> Result<BitVector> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(BitVector {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        })
    }

    /// Hamming distance, i.e. `popcount(self ^ other)`.
    pub fn distance(&self, other: &BitVector) -> Result<usize> {
        self.checked_xor(other).map(|x| x.count_ones())
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// MSB-first text with a space every four bits.
    pub fn to_grouped_string(&self) -> String {
        let mut s = String::with_capacity(self.len + self.len / 4);
        for (k, i) in (0..self.len).rev().enumerate() {
            if k > 0 && (self.len - k).is_multiple_of(4) {
                s.push(' ');
            }
            s.push(if self.get(i) { '1' } else { '0' });
        }
        s
    }
}

impl Not for BitVector {
    type Output = BitVector;

    fn not(mut self) -> BitVector {
        for w in &mut self.words {
            *w = !*w;
        }
        self.clear_tail();
        self
    }
}

impl Not for &BitVector {
    type Output = BitVector;

    fn not(self) -> BitVector {
        !self.clone()
    }
}

impl BitXor for &BitVector {
    type Output = BitVector;

    /// Panics on length mismatch; use [`BitVector::checked_xor`] otherwise.
    fn bitxor(self, rhs: &BitVector) -> BitVector {
        self.checked_xor(rhs)
            .expect("xor of bit vectors of different lengths")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    /// Parses MSB-first `0`/`1` text; spaces and underscores are separators.
    fn from_str(s: &str) -> Result<Self> {
        let digits: Vec<bool> = s
            .chars()
            .filter(|c| *c != ' ' && *c != '_')
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<_>>()?;
        if digits.is_empty() {
            return Err(Error::Parse("empty bit string".into()));
        }
        let n = digits.len();
        Ok(Self::from_fn(n, |i| digits[n - 1 - i]))
    }
}

impl fmt::Display for BitVector {
    /// MSB-first; grouped by four for lengths of 16 and above.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len >= 16 {
            f.write_str(&self.to_grouped_string())
        } else {
            for i in (0..self.len).rev() {
                f.write_str(if self.get(i) { "1" } else { "0" })?;
            }
            Ok(())
        }
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl Serialize for BitVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BitVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
