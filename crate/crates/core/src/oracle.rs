//! Ground truth at tiny scale: systematic encoders, their validity, the
//! exact optimal redundancy by exhaustive search, and an operational check
//! that drives every error pattern through a minimum-distance decoder.
//!
//! Everything here is deliberately brute force — it exists to certify the
//! analytic bounds and the constraint search, not to be fast.

use itertools::Itertools;

use crate::bsymbol::{b_distance_syms, read_vector, ChannelParams, ReadVector};
use crate::error::{Error, Result};
use crate::field::{next_syms, Field, Word};
use crate::linfunc::Classifier;

/// Message-space cap for exhaustive encoder work.
pub const ORACLE_CAP: u128 = 256;

/// A systematic encoder: Enc(u) = (u, p(u)) with a redundancy word per
/// message, stored in global message order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EncoderMap {
    field: Field,
    k: usize,
    r: usize,
    reds: Vec<Word>,
}

impl EncoderMap {
    /// `reds[i]` is the redundancy of the i-th message in global order;
    /// exactly q^k entries of common length r are required.
    pub fn new(field: &Field, k: usize, r: usize, reds: Vec<Word>) -> Result<EncoderMap> {
        let size = (field.q() as u128).pow(k as u32);
        if size > ORACLE_CAP {
            return Err(Error::DomainTooLarge {
                size,
                cap: ORACLE_CAP,
            });
        }
        if reds.len() as u128 != size {
            return Err(Error::SizeMismatch {
                expected: size as usize,
                got: reds.len(),
            });
        }
        for red in &reds {
            if red.field() != field {
                return Err(Error::FieldMismatch);
            }
            if red.len() != r {
                return Err(Error::LengthMismatch {
                    left: red.len(),
                    right: r,
                });
            }
        }
        Ok(EncoderMap {
            field: field.clone(),
            k,
            r,
            reds,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn message_count(&self) -> usize {
        self.reds.len()
    }

    pub fn redundancy(&self, u: &Word) -> Result<&Word> {
        if u.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if u.len() != self.k {
            return Err(Error::LengthMismatch {
                left: u.len(),
                right: self.k,
            });
        }
        Ok(&self.reds[u.index() as usize])
    }

    /// Enc(u) = message followed by its redundancy.
    pub fn encode(&self, u: &Word) -> Result<Word> {
        u.concat(self.redundancy(u)?)
    }

    /// All codewords as raw symbol buffers, in global message order.
    fn codewords(&self) -> Vec<Vec<u8>> {
        Word::enumerate(self.k, &self.field)
            .zip(&self.reds)
            .map(|(u, red)| {
                let mut c = u.syms().to_vec();
                c.extend_from_slice(red.syms());
                c
            })
            .collect()
    }

    /// (message digit string, redundancy digit string) pairs for dumps.
    pub fn table(&self) -> Vec<(String, String)> {
        Word::enumerate(self.k, &self.field)
            .zip(&self.reds)
            .map(|(u, red)| (u.digit_string(), red.digit_string()))
            .collect()
    }
}

/// Does every cross-class codeword pair reach read distance 2t+1?
pub fn is_valid_fcbsc(
    enc: &EncoderMap,
    classify: &dyn Classifier,
    params: ChannelParams,
) -> bool {
    let need = params.correction_demand();
    let labels: Vec<usize> = Word::enumerate(enc.k, &enc.field)
        .map(|u| classify.class_of(&u))
        .collect();
    let codewords = enc.codewords();
    for i in 0..codewords.len() {
        for j in 0..i {
            if labels[i] != labels[j]
                && b_distance_syms(&codewords[i], &codewords[j], params.b) < need
            {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleStatus {
    /// Every length below the answer (or below `refuted_below` if none was
    /// found within the cap) was exhaustively refuted.
    Exact,
    /// Budget ran out mid-search.
    Timeout,
}

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub status: OracleStatus,
    /// Smallest redundancy length admitting a valid encoder, if one was found
    /// within the cap.
    pub optimal_redundancy: Option<usize>,
    pub witness: Option<EncoderMap>,
    /// Every redundancy length strictly below this is refuted.
    pub refuted_below: usize,
    /// Pairwise constraint checks spent.
    pub encoders_examined: u64,
    /// The search stops after this redundancy length.
    pub cap: usize,
}

struct EncSearch<'a> {
    q: u8,
    b: usize,
    need: usize,
    labels: &'a [usize],
    messages: &'a [Vec<u8>],
    budget: u64,
    nodes: u64,
}

impl EncSearch<'_> {
    fn feasible(
        &mut self,
        codewords: &[Vec<u8>],
        cand: &[u8],
        i: usize,
    ) -> std::result::Result<bool, ()> {
        for (j, c) in codewords.iter().enumerate() {
            if self.labels[i] == self.labels[j] {
                continue;
            }
            if self.nodes >= self.budget {
                return Err(());
            }
            self.nodes += 1;
            if b_distance_syms(cand, c, self.b) < self.need {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn extend(
        &mut self,
        codewords: &mut Vec<Vec<u8>>,
        r: usize,
    ) -> std::result::Result<bool, ()> {
        let i = codewords.len();
        if i == self.messages.len() {
            return Ok(true);
        }
        let mut red = vec![0u8; r];
        loop {
            let mut cand = self.messages[i].clone();
            cand.extend_from_slice(&red);
            if self.feasible(codewords, &cand, i)? {
                codewords.push(cand);
                if self.extend(codewords, r)? {
                    return Ok(true);
                }
                codewords.pop();
            }
            if !next_syms(&mut red, self.q) {
                return Ok(false);
            }
        }
    }

    /// First valid encoder at redundancy length r in global order, with the
    /// first message's redundancy pinned to zero: subtracting a constant from
    /// every redundancy word shifts all codewords by one fixed word, and read
    /// distances are translation invariant.
    fn run(&mut self, r: usize) -> std::result::Result<Option<Vec<Vec<u8>>>, ()> {
        let mut codewords = vec![{
            let mut c = self.messages[0].clone();
            c.extend_from_slice(&vec![0u8; r]);
            c
        }];
        if self.extend(&mut codewords, r)? {
            Ok(Some(codewords))
        } else {
            Ok(None)
        }
    }
}

/// Exact optimal redundancy for (classify, k, b, t): the least r in 0..=cap
/// admitting a valid encoder, found by exhaustive assignment search with
/// every smaller r exhaustively refuted.
pub fn exact_optimal_redundancy(
    classify: &dyn Classifier,
    field: &Field,
    k: usize,
    params: ChannelParams,
    cap: usize,
    budget: u64,
) -> Result<OracleResult> {
    let size = (field.q() as u128).pow(k as u32);
    if size > ORACLE_CAP {
        return Err(Error::DomainTooLarge {
            size,
            cap: ORACLE_CAP,
        });
    }
    let messages: Vec<Word> = Word::enumerate(k, field).collect();
    let labels: Vec<usize> = messages.iter().map(|u| classify.class_of(u)).collect();
    let raw: Vec<Vec<u8>> = messages.iter().map(|u| u.syms().to_vec()).collect();
    let mut search = EncSearch {
        q: field.q() as u8,
        b: params.b,
        need: params.correction_demand(),
        labels: &labels,
        messages: &raw,
        budget,
        nodes: 0,
    };
    for r in 0..=cap {
        match search.run(r) {
            Ok(Some(codewords)) => {
                let reds = codewords
                    .into_iter()
                    .map(|c| {
                        Word::new(c[k..].to_vec(), field).expect("symbols in range")
                    })
                    .collect();
                let witness = EncoderMap::new(field, k, r, reds)?;
                return Ok(OracleResult {
                    status: OracleStatus::Exact,
                    optimal_redundancy: Some(r),
                    witness: Some(witness),
                    refuted_below: r,
                    encoders_examined: search.nodes,
                    cap,
                });
            }
            Ok(None) => continue,
            Err(()) => {
                return Ok(OracleResult {
                    status: OracleStatus::Timeout,
                    optimal_redundancy: None,
                    witness: None,
                    refuted_below: r,
                    encoders_examined: search.nodes,
                    cap,
                });
            }
        }
    }
    Ok(OracleResult {
        status: OracleStatus::Exact,
        optimal_redundancy: None,
        witness: None,
        refuted_below: cap + 1,
        encoders_examined: search.nodes,
        cap,
    })
}

/// Decoder output: a class label, or a tie between classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decoded {
    Class(usize),
    /// Two classes reach the minimum distance; correct inference is not
    /// guaranteed, so callers count this as a failure.
    Ambiguous,
}

/// Minimum-distance decoding over classes: find the class whose nearest
/// codeword read is closest to y. The received y is a raw read vector and
/// need not be consistent with any word.
pub fn decode_function(
    y: &ReadVector,
    enc: &EncoderMap,
    classify: &dyn Classifier,
) -> Result<Decoded> {
    if y.field() != &enc.field {
        return Err(Error::FieldMismatch);
    }
    if y.len() != enc.k + enc.r || y.b() == 0 {
        return Err(Error::ShapeMismatch {
            reason: "received read vector does not match codeword shape",
        });
    }
    let b = y.b();
    let mut best: Option<(usize, usize)> = None; // (distance, class)
    let mut tied = false;
    for u in Word::enumerate(enc.k, &enc.field) {
        let label = classify.class_of(&u);
        let code_read = read_vector(&enc.encode(&u)?, b);
        let d = code_read.hamming_distance(y)?;
        match best {
            None => best = Some((d, label)),
            Some((bd, bl)) => {
                if d < bd {
                    best = Some((d, label));
                    tied = false;
                } else if d == bd && label != bl {
                    tied = true;
                }
            }
        }
    }
    let (_, label) = best.expect("message space is nonempty");
    Ok(if tied {
        Decoded::Ambiguous
    } else {
        Decoded::Class(label)
    })
}

/// All q^b width-b tuples in global order.
fn all_tuples(q: usize, b: usize) -> Vec<Vec<u8>> {
    let mut tuples = Vec::with_capacity(q.pow(b as u32));
    let mut t = vec![0u8; b];
    loop {
        tuples.push(t.clone());
        if !next_syms(&mut t, q as u8) {
            return tuples;
        }
    }
}

/// Wrong or ambiguous decodings over every message and every error pattern
/// of exactly `weight` corrupted windows (each replaced by any of the
/// q^b - 1 other tuples).
pub fn decode_failures_at_weight(
    enc: &EncoderMap,
    classify: &dyn Classifier,
    params: ChannelParams,
    weight: usize,
    budget: u64,
) -> Result<u64> {
    let n = enc.k + enc.r;
    let b = params.b;
    let tuples = all_tuples(enc.field.q(), b);
    let wrong = tuples.len() - 1;
    let mut failures = 0u64;
    let mut decodes = 0u64;
    for u in Word::enumerate(enc.k, &enc.field) {
        let label = classify.class_of(&u);
        let clean = read_vector(&enc.encode(&u)?, b);
        for positions in (0..n).combinations(weight) {
            // odometer over the wrong-tuple choice at each corrupted window
            let mut choice = vec![0usize; weight];
            loop {
                let mut y = clean.clone();
                for (&pos, &c) in positions.iter().zip(&choice) {
                    let original = tuples
                        .iter()
                        .position(|t| t == &clean.tuples()[pos])
                        .expect("window tuple is enumerated");
                    let alt = if c < original { c } else { c + 1 };
                    y.set_tuple(pos, tuples[alt].clone())?;
                }
                decodes += 1;
                if decodes > budget {
                    return Err(Error::BudgetExhausted { budget });
                }
                if decode_function(&y, enc, classify)? != Decoded::Class(label) {
                    failures += 1;
                }
                // advance the mixed-radix choice vector
                let mut carry = true;
                for c in choice.iter_mut() {
                    *c += 1;
                    if *c < wrong {
                        carry = false;
                        break;
                    }
                    *c = 0;
                }
                if carry || weight == 0 {
                    break;
                }
            }
        }
    }
    Ok(failures)
}

/// Total failures over all error patterns of weight at most t. Zero exactly
/// when the encoder is valid: any cross-class pair at distance <= 2t admits
/// a midpoint read reachable from both sides within t window errors.
pub fn exhaustive_decode_check(
    enc: &EncoderMap,
    classify: &dyn Classifier,
    params: ChannelParams,
    budget: u64,
) -> Result<u64> {
    let mut total = 0u64;
    for w in 0..=params.t {
        total += decode_failures_at_weight(enc, classify, params, w, budget)?;
    }
    Ok(total)
}
