//! Full-rank linear maps f(u) = F·u over GF(q), their kernels and cosets.
//!
//! A function partitions GF(q)^k into q^l classes (the fibers of f, i.e. the
//! cosets of ker f); downstream code only ever compares class labels, so the
//! partition interface is an opaque `Classifier`, with `LinearFunction` the
//! structured implementation.

use crate::bsymbol::b_weight;
use crate::error::{Error, Result};
use crate::field::{Field, Word};

/// Enumeration cap for anything that walks all of GF(q)^k.
pub const DOMAIN_CAP: u128 = 1 << 20;

/// Maps each message to an opaque class label. Two messages need mutual
/// distance protection exactly when their labels differ.
pub trait Classifier {
    fn class_of(&self, u: &Word) -> usize;
}

impl<F: Fn(&Word) -> usize> Classifier for F {
    fn class_of(&self, u: &Word) -> usize {
        self(u)
    }
}

/// A surjective linear map GF(q)^k -> GF(q)^l given by an l x k matrix of
/// full rank l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearFunction {
    rows: Vec<Vec<u8>>,
    k: usize,
    l: usize,
    field: Field,
}

/// Row reduce a copy of `rows` over `field`, returning (rank, rref)
/// with pivots normalized to 1 and cleared above and below.
fn row_reduce(rows: &[Vec<u8>], field: &Field) -> (usize, Vec<Vec<u8>>) {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = field.inv(m[rank][col]).expect("pivot is nonzero");
        for x in m[rank].iter_mut() {
            *x = field.mul(*x, inv);
        }
        for r in 0..nrows {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for c in 0..ncols {
                    let delta = field.mul(factor, m[rank][c]);
                    m[r][c] = field.sub(m[r][c], delta);
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    (rank, m)
}

impl LinearFunction {
    /// Validate shape (1 <= l <= k, rectangular, entries in GF(q)) and rank.
    pub fn new(rows: Vec<Vec<u8>>, field: &Field) -> Result<LinearFunction> {
        let l = rows.len();
        let k = rows.first().map_or(0, |r| r.len());
        if l == 0 || k == 0 || l > k {
            return Err(Error::BadShape { rows: l, cols: k });
        }
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::BadShape { rows: l, cols: k });
        }
        let q = field.q();
        if rows.iter().flatten().any(|&e| e as usize >= q) {
            return Err(Error::Parse(format!("matrix entry not in GF({q})")));
        }
        let (rank, _) = row_reduce(&rows, field);
        if rank < l {
            return Err(Error::RankDeficient);
        }
        Ok(LinearFunction {
            rows,
            k,
            l,
            field: field.clone(),
        })
    }

    /// The bijective case l = k.
    pub fn identity(k: usize, field: &Field) -> Result<LinearFunction> {
        let rows = (0..k)
            .map(|i| (0..k).map(|j| u8::from(i == j)).collect())
            .collect();
        LinearFunction::new(rows, field)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn is_bijective(&self) -> bool {
        self.l == self.k
    }

    /// f(u) = F·u.
    pub fn evaluate(&self, u: &Word) -> Result<Word> {
        if u.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if u.len() != self.k {
            return Err(Error::LengthMismatch {
                left: u.len(),
                right: self.k,
            });
        }
        let syms = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .zip(u.syms())
                    .fold(0u8, |acc, (&a, &x)| {
                        self.field.add(acc, self.field.mul(a, x))
                    })
            })
            .collect();
        Ok(Word::new(syms, &self.field).expect("image symbols are field elements"))
    }

    /// Class label: the global index of the image word, in [0, q^l).
    pub fn image_index(&self, u: &Word) -> Result<usize> {
        Ok(self.evaluate(u)?.index() as usize)
    }

    fn domain_size(&self) -> Result<u128> {
        let size = (self.field.q() as u128).pow(self.k as u32);
        if size > DOMAIN_CAP {
            return Err(Error::DomainTooLarge {
                size,
                cap: DOMAIN_CAP,
            });
        }
        Ok(size)
    }

    /// All fibers of f, indexed by image: q^l classes of q^{k-l} words each.
    pub fn coset_partition(&self) -> Result<CosetPartition> {
        self.domain_size()?;
        let class_count = self.field.q().pow(self.l as u32);
        let mut classes = vec![Vec::new(); class_count];
        for u in Word::enumerate(self.k, &self.field) {
            let label = self.image_index(&u).expect("enumerated word has length k");
            classes[label].push(u);
        }
        debug_assert!(classes
            .iter()
            .all(|c| c.len() == self.field.q().pow((self.k - self.l) as u32)));
        Ok(CosetPartition { classes })
    }

    /// ker f = the fiber of 0.
    pub fn kernel(&self) -> Result<Vec<Word>> {
        self.domain_size()?;
        Ok(Word::enumerate(self.k, &self.field)
            .filter(|u| self.evaluate(u).unwrap().is_zero())
            .collect())
    }

    /// s = sum of b-weights over the kernel; the function-dependent term of
    /// the redundancy bound. Zero exactly when f is bijective.
    pub fn kernel_weight_sum(&self, b: usize) -> Result<u64> {
        Ok(self
            .kernel()?
            .iter()
            .map(|u| b_weight(u, b) as u64)
            .sum())
    }

    /// Reduced row echelon form of F: a canonical basis of the row space.
    /// Two functions induce the same coset partition iff these agree.
    pub fn canonical_row_space(&self) -> Vec<Vec<u8>> {
        let (rank, rref) = row_reduce(&self.rows, &self.field);
        debug_assert_eq!(rank, self.l);
        rref
    }
}

impl Classifier for LinearFunction {
    fn class_of(&self, u: &Word) -> usize {
        self.image_index(u).expect("message length matches k")
    }
}

/// The fibers of a classifier over the full message space.
#[derive(Clone, Debug)]
pub struct CosetPartition {
    classes: Vec<Vec<Word>>,
}

impl CosetPartition {
    pub fn classes(&self) -> &[Vec<Word>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }
}
