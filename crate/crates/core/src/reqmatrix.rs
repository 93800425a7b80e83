//! Pairwise distance-demand matrices over a message list.
//!
//! Given messages u_0..u_{M-1} and a classifier, entry (i, j) demands the
//! b-symbol distance that codewords for u_i and u_j must reach. Same-class
//! pairs demand nothing. Two thresholds matter downstream: 2t-b+2 (the
//! necessary side) and 2t+b (the sufficient side); both clip at zero.

use std::collections::HashSet;

use crate::bsymbol::{b_distance, ChannelParams};
use crate::error::{Error, Result};
use crate::field::Word;
use crate::linfunc::Classifier;

/// Largest supported message count for dense M x M storage.
pub const MESSAGE_CAP: u128 = 4096;

/// Positive part: demands never go negative.
pub fn plus_clip(x: i64) -> u32 {
    x.max(0) as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixKind {
    /// Threshold 2t - b + 2 on cross-class pairs (necessary demands).
    B1,
    /// Threshold 2t + b on cross-class pairs (sufficient demands).
    B2,
    Custom,
}

/// A symmetric, zero-diagonal matrix of non-negative distance demands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RequirementMatrix {
    entries: Vec<u32>, // row-major M x M
    m: usize,
    messages: Option<Vec<Word>>,
    kind: MatrixKind,
}

impl RequirementMatrix {
    /// Hand-built matrix. Must be square with a zero diagonal; symmetry is
    /// not forced here (some structural queries exist to detect its absence).
    pub fn custom(rows: Vec<Vec<u32>>) -> Result<RequirementMatrix> {
        let m = rows.len();
        if rows.iter().any(|r| r.len() != m) {
            let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
            return Err(Error::BadShape { rows: m, cols });
        }
        for (i, row) in rows.iter().enumerate() {
            if row[i] != 0 {
                return Err(Error::NonzeroDiagonal { index: i });
            }
        }
        Ok(RequirementMatrix {
            entries: rows.into_iter().flatten().collect(),
            m,
            messages: None,
            kind: MatrixKind::Custom,
        })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    /// The message list the rows/columns refer to, when built from one.
    pub fn messages(&self) -> Option<&[Word]> {
        self.messages.as_deref()
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        assert!(i < self.m && j < self.m);
        self.entries[i * self.m + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.m..(i + 1) * self.m]
    }

    pub fn max_entry(&self) -> u32 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Number of zeros in column j.
    pub fn column_zero_count(&self, j: usize) -> Result<usize> {
        if j >= self.m {
            return Err(Error::IndexOutOfRange {
                index: j,
                len: self.m,
            });
        }
        Ok((0..self.m).filter(|&i| self.get(i, j) == 0).count())
    }

    /// True iff every column holds the same multiset of entries.
    pub fn columns_are_permutations(&self) -> bool {
        if self.m == 0 {
            return true;
        }
        let sorted_col = |j: usize| {
            let mut col: Vec<u32> = (0..self.m).map(|i| self.get(i, j)).collect();
            col.sort_unstable();
            col
        };
        let first = sorted_col(0);
        (1..self.m).all(|j| sorted_col(j) == first)
    }

    pub fn entry_sum(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.m).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Entry-wise comparison; matrices of different sizes are incomparable.
    pub fn dominated_by(&self, other: &RequirementMatrix) -> bool {
        self.m == other.m
            && self
                .entries
                .iter()
                .zip(&other.entries)
                .all(|(&a, &b)| a <= b)
    }

    /// One row per line, comma-separated.
    pub fn to_csv(&self) -> String {
        (0..self.m)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn build_with_threshold(
    messages: &[Word],
    classify: &dyn Classifier,
    b: usize,
    threshold: i64,
    kind: MatrixKind,
) -> Result<RequirementMatrix> {
    let m = messages.len();
    if m as u128 > MESSAGE_CAP {
        return Err(Error::DomainTooLarge {
            size: m as u128,
            cap: MESSAGE_CAP,
        });
    }
    let mut seen = HashSet::with_capacity(m);
    for u in messages {
        if !seen.insert(u.syms().to_vec()) {
            return Err(Error::DuplicateMessage);
        }
    }
    let labels: Vec<usize> = messages.iter().map(|u| classify.class_of(u)).collect();
    let mut entries = vec![0u32; m * m];
    for i in 0..m {
        for j in 0..i {
            if labels[i] != labels[j] {
                // also validates equal lengths / same field
                let d = b_distance(&messages[i], &messages[j], b)?;
                let demand = plus_clip(threshold - d as i64);
                entries[i * m + j] = demand;
                entries[j * m + i] = demand;
            }
        }
    }
    Ok(RequirementMatrix {
        entries,
        m,
        messages: Some(messages.to_vec()),
        kind,
    })
}

/// Necessary demands: cross-class pairs must reach 2t - b + 2.
pub fn build_b1(
    messages: &[Word],
    classify: &dyn Classifier,
    params: ChannelParams,
) -> Result<RequirementMatrix> {
    let threshold = 2 * params.t as i64 - params.b as i64 + 2;
    build_with_threshold(messages, classify, params.b, threshold, MatrixKind::B1)
}

/// Sufficient demands: cross-class pairs must reach 2t + b.
pub fn build_b2(
    messages: &[Word],
    classify: &dyn Classifier,
    params: ChannelParams,
) -> Result<RequirementMatrix> {
    let threshold = 2 * params.t as i64 + params.b as i64;
    build_with_threshold(messages, classify, params.b, threshold, MatrixKind::B2)
}

/// Exact lower bound on entry_sum of the necessary-demand matrix at M = q^k
/// for a surjective linear classifier:
/// q^k * [ (2t-b+2)(q^k - q^{k-l}) - k(q^k - q^{k-b}) + s ].
/// May be negative (vacuous). Requires k >= b.
pub fn entry_sum_lower_bound(q: u64, k: usize, l: usize, b: usize, t: usize, s: u64) -> Result<i128> {
    if k < b {
        return Err(Error::LengthBelowWidth { k, b });
    }
    if l > k || l == 0 {
        return Err(Error::BadShape { rows: l, cols: k });
    }
    let qk = (q as i128).pow(k as u32);
    let demand = 2 * t as i128 - b as i128 + 2;
    let cross = qk - (q as i128).pow((k - l) as u32);
    let weight_total = k as i128 * (qk - (q as i128).pow((k - b) as u32));
    Ok(qk * (demand * cross - weight_total + s as i128))
}
