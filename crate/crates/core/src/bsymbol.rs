//! b-symbol reads: every length-n word is observed as n overlapping width-b
//! windows with cyclic wraparound. Distance and weight live on those windows.
//!
//! Window i of u is (u_i, u_{i+1 mod n}, ..., u_{i+b-1 mod n}). For n < b a
//! window wraps more than once; reports flag such lengths as degenerate. The
//! empty word reads as an empty vector.

use crate::error::{Error, Result};
use crate::field::{Field, Word};

/// Channel parameters: read-window width b >= 1 and error budget t.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChannelParams {
    pub b: usize,
    pub t: usize,
}

impl ChannelParams {
    pub fn new(b: usize, t: usize) -> ChannelParams {
        assert!(b >= 1, "read width b must be at least 1");
        ChannelParams { b, t }
    }

    /// Definition of a validated code: cross-class codeword pairs need d_b >= 2t+1.
    pub fn correction_demand(&self) -> usize {
        2 * self.t + 1
    }
}

/// The sequence of width-b windows read from a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadVector {
    tuples: Vec<Vec<u8>>,
    b: usize,
    field: Field,
}

impl ReadVector {
    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn tuples(&self) -> &[Vec<u8>] {
        &self.tuples
    }

    /// Number of nonzero windows.
    pub fn weight(&self) -> usize {
        self.tuples
            .iter()
            .filter(|t| t.iter().any(|&s| s != 0))
            .count()
    }

    /// Windows at which the two read vectors differ.
    pub fn hamming_distance(&self, other: &ReadVector) -> Result<usize> {
        if self.field != other.field || self.b != other.b {
            return Err(Error::FieldMismatch);
        }
        if self.tuples.len() != other.tuples.len() {
            return Err(Error::LengthMismatch {
                left: self.tuples.len(),
                right: other.tuples.len(),
            });
        }
        Ok(self
            .tuples
            .iter()
            .zip(&other.tuples)
            .filter(|(a, b)| a != b)
            .count())
    }

    /// Window-wise field difference; reads are linear, so this equals the
    /// read vector of the word difference.
    pub fn sub(&self, other: &ReadVector) -> Result<ReadVector> {
        if self.field != other.field || self.b != other.b {
            return Err(Error::FieldMismatch);
        }
        if self.tuples.len() != other.tuples.len() {
            return Err(Error::LengthMismatch {
                left: self.tuples.len(),
                right: other.tuples.len(),
            });
        }
        let tuples = self
            .tuples
            .iter()
            .zip(&other.tuples)
            .map(|(a, b)| {
                a.iter()
                    .zip(b)
                    .map(|(&x, &y)| self.field.sub(x, y))
                    .collect()
            })
            .collect();
        Ok(ReadVector {
            tuples,
            b: self.b,
            field: self.field.clone(),
        })
    }

    /// Overwrite window i (channel-error injection; the new tuple need not be
    /// consistent with any word).
    pub fn set_tuple(&mut self, i: usize, tuple: Vec<u8>) -> Result<()> {
        if i >= self.tuples.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.tuples.len(),
            });
        }
        if tuple.len() != self.b {
            return Err(Error::LengthMismatch {
                left: tuple.len(),
                right: self.b,
            });
        }
        let q = self.field.q();
        if tuple.iter().any(|&s| s as usize >= q) {
            return Err(Error::Parse(format!("tuple symbol not in GF({q})")));
        }
        self.tuples[i] = tuple;
        Ok(())
    }

    /// True when the underlying length is shorter than the window, i.e. the
    /// windows wrap around more than once.
    pub fn is_degenerate(&self) -> bool {
        !self.tuples.is_empty() && self.tuples.len() < self.b
    }

    /// One digit string per window, for JSON dumps.
    pub fn tuple_strings(&self) -> Vec<String> {
        self.tuples
            .iter()
            .map(|t| {
                if self.field.q() <= 36 {
                    t.iter()
                        .map(|&s| char::from_digit(s as u32, 36).unwrap())
                        .collect()
                } else {
                    t.iter()
                        .map(|s| s.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            })
            .collect()
    }
}

/// The b-symbol read vector of a word: n windows of width b, cyclic.
pub fn read_vector(u: &Word, b: usize) -> ReadVector {
    assert!(b >= 1, "read width b must be at least 1");
    let n = u.len();
    let syms = u.syms();
    let tuples = (0..n)
        .map(|i| (0..b).map(|j| syms[(i + j) % n]).collect())
        .collect();
    ReadVector {
        tuples,
        b,
        field: u.field().clone(),
    }
}

/// Number of nonzero width-b windows of `u` (no allocation).
pub fn b_weight(u: &Word, b: usize) -> usize {
    b_weight_syms(u.syms(), b)
}

pub(crate) fn b_weight_syms(syms: &[u8], b: usize) -> usize {
    debug_assert!(b >= 1);
    let n = syms.len();
    (0..n)
        .filter(|&i| (0..b).any(|j| syms[(i + j) % n] != 0))
        .count()
}

/// Hamming distance between the read vectors of two words. Only symbol
/// equality is consulted, so mixed inputs are rejected up front and the
/// window comparison itself needs no field arithmetic.
pub fn b_distance(u: &Word, v: &Word, b: usize) -> Result<usize> {
    if u.field() != v.field() {
        return Err(Error::FieldMismatch);
    }
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    Ok(b_distance_syms(u.syms(), v.syms(), b))
}

pub(crate) fn b_distance_syms(u: &[u8], v: &[u8], b: usize) -> usize {
    debug_assert!(b >= 1);
    debug_assert_eq!(u.len(), v.len());
    let n = u.len();
    (0..n)
        .filter(|&i| (0..b).any(|j| u[(i + j) % n] != v[(i + j) % n]))
        .count()
}

/// Closed form for the sum of b-weights over all of GF(q)^k: each of the k
/// window positions is nonzero for exactly q^k - q^{k-b} words once k >= b.
pub fn total_b_weight(q: u64, k: usize, b: usize) -> Result<u128> {
    assert!(b >= 1, "read width b must be at least 1");
    if k < b {
        return Err(Error::LengthBelowWidth { k, b });
    }
    let qk = (q as u128)
        .checked_pow(k as u32)
        .ok_or(Error::DomainTooLarge {
            size: u128::MAX,
            cap: u128::MAX,
        })?;
    let qkb = (q as u128).pow((k - b) as u32);
    Ok(k as u128 * (qk - qkb))
}

/// The same sum by brute-force enumeration of GF(q)^k (desk scale only).
/// Unlike the closed form this also covers k < b.
pub fn total_b_weight_exhaustive(field: &Field, k: usize, b: usize) -> Result<u128> {
    let size = (field.q() as u128).pow(k as u32);
    const CAP: u128 = 1 << 20;
    if size > CAP {
        return Err(Error::DomainTooLarge { size, cap: CAP });
    }
    Ok(Word::enumerate(k, field)
        .map(|u| b_weight(&u, b) as u128)
        .sum())
}
