//! Minimal-length codebooks under pairwise distance demands.
//!
//! A codebook is an ordered list of equal-length words, one per matrix index
//! (repeats allowed — indices whose demand is zero may share a word). The
//! search finds the smallest length admitting a valid assignment by
//! depth-first extension with a greedy upper bound to bracket timeouts.

use crate::bsymbol::b_distance_syms;
use crate::error::{Error, Result};
use crate::field::{next_syms, Field, Word};
use crate::reqmatrix::RequirementMatrix;

/// Default search budget, counted in pairwise constraint checks.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// An ordered assignment of words to matrix indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Codebook {
    words: Vec<Word>,
    b: usize,
}

impl Codebook {
    pub fn new(words: Vec<Word>, b: usize) -> Result<Codebook> {
        assert!(b >= 1, "read width b must be at least 1");
        if let Some(first) = words.first() {
            for w in &words[1..] {
                if w.field() != first.field() {
                    return Err(Error::FieldMismatch);
                }
                if w.len() != first.len() {
                    return Err(Error::LengthMismatch {
                        left: w.len(),
                        right: first.len(),
                    });
                }
            }
        }
        Ok(Codebook { words, b })
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    /// Common word length r.
    pub fn word_length(&self) -> usize {
        self.words.first().map_or(0, |w| w.len())
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn digit_strings(&self) -> Vec<String> {
        self.words.iter().map(|w| w.digit_string()).collect()
    }

    /// Sum of pairwise read distances over all ordered pairs (i, j).
    pub fn distance_sum(&self) -> u64 {
        let mut total = 0u64;
        for i in 0..self.words.len() {
            for j in 0..i {
                total += 2 * b_distance_syms(
                    self.words[i].syms(),
                    self.words[j].syms(),
                    self.b,
                ) as u64;
            }
        }
        total
    }

    /// Subtract the first word from every word. Read distances are
    /// translation invariant, so validity against any demand matrix is
    /// preserved while pinning index 0 to the zero word.
    pub fn translate_to_zero(&self) -> Codebook {
        let Some(first) = self.words.first() else {
            return self.clone();
        };
        let words = self
            .words
            .iter()
            .map(|w| w.sub(first).expect("uniform length and field"))
            .collect();
        Codebook {
            words,
            b: self.b,
        }
    }
}

/// Does the fixed-order assignment meet every pairwise demand?
pub fn is_bb_code(p: &Codebook, demands: &RequirementMatrix) -> Result<bool> {
    let m = demands.size();
    if p.size() != m {
        return Err(Error::SizeMismatch {
            expected: m,
            got: p.size(),
        });
    }
    for i in 0..m {
        for j in 0..i {
            let need = demands.get(i, j).max(demands.get(j, i));
            if need == 0 {
                continue;
            }
            let d = b_distance_syms(p.words[i].syms(), p.words[j].syms(), p.b);
            if d < need as usize {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Zero diagonal, constant demand D everywhere else.
pub fn uniform_demand_matrix(m: usize, d: u32) -> Result<RequirementMatrix> {
    if m == 0 {
        return Err(Error::BadShape { rows: 0, cols: 0 });
    }
    let rows = (0..m)
        .map(|i| (0..m).map(|j| if i == j { 0 } else { d }).collect())
        .collect();
    RequirementMatrix::custom(rows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    /// min_length is the true minimum; all shorter lengths refuted.
    Exact,
    /// Budget ran out; only the bracket [refuted_below, upper_bound] is known.
    Timeout,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub status: SearchStatus,
    /// The minimal feasible length, when status is Exact.
    pub min_length: Option<usize>,
    /// A codebook attaining min_length.
    pub witness: Option<Codebook>,
    /// Every length strictly below this is proven infeasible.
    pub refuted_below: usize,
    /// A length known to be feasible (greedy construction).
    pub upper_bound: Option<usize>,
    /// Pairwise constraint checks spent.
    pub nodes_explored: u64,
}

/// Symmetrize demands: the metric is symmetric, so an ordered pair only ever
/// has to satisfy the larger of the two entries.
fn flat_demands(m: &RequirementMatrix) -> Vec<u32> {
    let n = m.size();
    let mut flat = vec![0u32; n * n];
    for i in 0..n {
        for j in 0..n {
            flat[i * n + j] = m.get(i, j).max(m.get(j, i));
        }
    }
    flat
}

struct Dfs<'a> {
    q: u8,
    b: usize,
    m: usize,
    demand: &'a [u32],
    budget: u64,
    nodes: u64,
}

enum Exhausted {
    Budget,
}

impl Dfs<'_> {
    fn feasible(
        &mut self,
        chosen: &[Vec<u8>],
        cand: &[u8],
        i: usize,
    ) -> std::result::Result<bool, Exhausted> {
        for (j, p) in chosen.iter().enumerate() {
            let need = self.demand[i * self.m + j];
            if need == 0 {
                continue;
            }
            if self.nodes >= self.budget {
                return Err(Exhausted::Budget);
            }
            self.nodes += 1;
            if b_distance_syms(cand, p, self.b) < need as usize {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn extend(
        &mut self,
        chosen: &mut Vec<Vec<u8>>,
        r: usize,
    ) -> std::result::Result<bool, Exhausted> {
        let i = chosen.len();
        if i == self.m {
            return Ok(true);
        }
        let mut cand = vec![0u8; r];
        loop {
            if self.feasible(chosen, &cand, i)? {
                chosen.push(cand.clone());
                if self.extend(chosen, r)? {
                    return Ok(true);
                }
                chosen.pop();
            }
            if !next_syms(&mut cand, self.q) {
                return Ok(false);
            }
        }
    }

    /// First valid assignment at length r in deterministic order, with the
    /// first word pinned to zero (sound by translation invariance).
    fn run(&mut self, r: usize) -> std::result::Result<Option<Vec<Vec<u8>>>, Exhausted> {
        let mut chosen = vec![vec![0u8; r]];
        if self.extend(&mut chosen, r)? {
            Ok(Some(chosen))
        } else {
            Ok(None)
        }
    }
}

fn greedy_at(demand: &[u32], m: usize, q: u8, b: usize, r: usize) -> Option<Vec<Vec<u8>>> {
    let mut chosen: Vec<Vec<u8>> = Vec::with_capacity(m);
    for i in 0..m {
        let mut cand = vec![0u8; r];
        loop {
            let ok = chosen.iter().enumerate().all(|(j, p)| {
                let need = demand[i * m + j];
                need == 0 || b_distance_syms(&cand, p, b) >= need as usize
            });
            if ok {
                chosen.push(cand);
                break;
            }
            if !next_syms(&mut cand, q) {
                return None;
            }
        }
    }
    Some(chosen)
}

/// First-fit construction: assign each index the first word (in global order)
/// meeting its demands against earlier indices, growing the length until the
/// whole assignment goes through. Always an upper bound on the true minimum;
/// terminates because at large enough length a word at Hamming distance (and
/// hence read distance) >= max demand from all chosen words must exist.
pub fn greedy_upper_bound(demands: &RequirementMatrix, field: &Field, b: usize) -> usize {
    assert!(b >= 1, "read width b must be at least 1");
    let m = demands.size();
    let max = demands.max_entry();
    if m == 0 || max == 0 {
        return 0;
    }
    let flat = flat_demands(demands);
    let q = field.q() as u8;
    // a length-r word has r read windows, so no length below the largest
    // demand can work
    let mut r = max as usize;
    loop {
        if greedy_at(&flat, m, q, b, r).is_some() {
            return r;
        }
        r += 1;
    }
}

/// Exact minimal length for the demand matrix over GF(q), by exhaustive
/// depth-first search per candidate length. On budget exhaustion the result
/// carries the proven bracket instead of an answer.
pub fn min_length_search(
    demands: &RequirementMatrix,
    field: &Field,
    b: usize,
    budget: u64,
) -> SearchResult {
    assert!(b >= 1, "read width b must be at least 1");
    let m = demands.size();
    let max = demands.max_entry();
    if m == 0 || max == 0 {
        // demand-free: the empty assignment works at length zero
        let words = (0..m).map(|_| Word::zero(0, field)).collect();
        return SearchResult {
            status: SearchStatus::Exact,
            min_length: Some(0),
            witness: Some(Codebook::new(words, b).expect("empty words are uniform")),
            refuted_below: 0,
            upper_bound: Some(0),
            nodes_explored: 0,
        };
    }
    let upper = greedy_upper_bound(demands, field, b);
    let flat = flat_demands(demands);
    let mut dfs = Dfs {
        q: field.q() as u8,
        b,
        m,
        demand: &flat,
        budget,
        nodes: 0,
    };
    // lengths below the largest demand are infeasible outright (r windows
    // cap the distance at r), so the scan starts there
    for r in max as usize..=upper {
        match dfs.run(r) {
            Ok(Some(raw)) => {
                let words = raw
                    .into_iter()
                    .map(|syms| Word::new(syms, field).expect("symbols in range"))
                    .collect();
                return SearchResult {
                    status: SearchStatus::Exact,
                    min_length: Some(r),
                    witness: Some(Codebook::new(words, b).expect("uniform length")),
                    refuted_below: r,
                    upper_bound: Some(upper),
                    nodes_explored: dfs.nodes,
                };
            }
            Ok(None) => continue,
            Err(Exhausted::Budget) => {
                return SearchResult {
                    status: SearchStatus::Timeout,
                    min_length: None,
                    witness: None,
                    refuted_below: r,
                    upper_bound: Some(upper),
                    nodes_explored: dfs.nodes,
                };
            }
        }
    }
    unreachable!("greedy construction certifies feasibility at the upper bound")
}
