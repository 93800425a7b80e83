//! Exact arithmetic in small finite fields GF(q), q = p^m <= 256, and words over them.
//!
//! Elements are canonical integers in `[0, q)`: the base-p digits of the integer are
//! the coefficients of the element's polynomial representation, constant term least
//! significant. That keeps words hashable and cheaply comparable, which the search
//! modules rely on. All operation tables are precomputed at construction.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order. Keeps every lookup table trivially small.
pub const MAX_ORDER: u64 = 256;

/// Monic irreducible polynomials (coefficients constant-first) used when the caller
/// does not supply a modulus. Lexicographically smallest choice per (p, m), so runs
/// are reproducible across versions.
const DEFAULT_MODULI: &[(u64, u32, &[u8])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 1, 0, 1, 1, 0, 0, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (5, 3, &[1, 1, 0, 1]),
    (7, 2, &[1, 0, 1]),
    (11, 2, &[1, 0, 1]),
    (13, 2, &[2, 0, 1]),
];

struct FieldData {
    p: u64,
    m: u32,
    q: usize,
    modulus: Vec<u8>, // empty for m == 1
    add: Vec<u8>,     // q*q, row-major
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>, // inv[0] unused
    exp: Vec<u8>, // generator powers, q-1 entries
    log: Vec<u8>, // log[a] for a != 0
    generator: u8,
}

/// A finite field GF(p^m). Cheap to clone (shared immutable tables), safe to share
/// across threads.
#[derive(Clone)]
pub struct Field {
    data: Arc<FieldData>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.p == other.data.p
                && self.data.m == other.data.m
                && self.data.modulus == other.data.modulus)
    }
}
impl Eq for Field {}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

// --- polynomial helpers over GF(p), coefficients constant-first ---

fn poly_trim(a: &mut Vec<u8>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_rem(a: &[u8], b: &[u8], p: u64) -> Vec<u8> {
    let mut rem: Vec<u8> = a.to_vec();
    poly_trim(&mut rem);
    let mut divisor = b.to_vec();
    poly_trim(&mut divisor);
    let db = divisor.len() - 1;
    let lead_inv = mod_inverse(divisor[db] as u64, p);
    while rem.len() > db {
        let da = rem.len() - 1;
        let coef = (rem[da] as u64 * lead_inv) % p;
        let shift = da - db;
        for (i, &bc) in divisor.iter().enumerate() {
            let sub = (coef * bc as u64) % p;
            let idx = i + shift;
            rem[idx] = (((rem[idx] as u64 + p) - sub) % p) as u8;
        }
        poly_trim(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    rem
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p is prime and a != 0 mod p; Fermat.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Exhaustive trial division by every monic polynomial of degree 1..=deg/2.
fn poly_is_irreducible(poly: &[u8], p: u64) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u128).pow(d as u32);
        for v in 0..count {
            let mut divisor = vec![0u8; d + 1];
            let mut rest = v;
            for c in divisor.iter_mut().take(d) {
                *c = (rest % p as u128) as u8;
                rest /= p as u128;
            }
            divisor[d] = 1;
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn element_to_digits(e: usize, p: u64, m: u32) -> Vec<u8> {
    let mut digits = vec![0u8; m as usize];
    let mut rest = e as u64;
    for d in digits.iter_mut() {
        *d = (rest % p) as u8;
        rest /= p;
    }
    digits
}

fn digits_to_element(digits: &[u8], p: u64) -> usize {
    let mut e = 0u64;
    for &d in digits.iter().rev() {
        e = e * p + d as u64;
    }
    e as usize
}

impl Field {
    /// Build GF(p^m). For m > 1 a monic irreducible modulus of degree m is required;
    /// when omitted, a fixed built-in polynomial for (p, m) is used. The modulus is
    /// checked for irreducibility by exhaustive divisor search.
    pub fn new(p: u64, m: u32, modulus: Option<&[u8]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::CompositeCharacteristic { p });
        }
        if m == 0 {
            return Err(Error::UnsupportedOrder { q: 1 });
        }
        let q = (p as u128).checked_pow(m).filter(|&q| q <= MAX_ORDER as u128);
        let q = match q {
            Some(q) => q as usize,
            None => return Err(Error::UnsupportedOrder { q: u64::MAX }),
        };

        let modulus: Vec<u8> = if m == 1 {
            Vec::new() // reduction is plain mod p
        } else {
            let coeffs: Vec<u8> = match modulus {
                Some(c) => c.to_vec(),
                None => DEFAULT_MODULI
                    .iter()
                    .find(|&&(dp, dm, _)| dp == p && dm == m)
                    .map(|&(_, _, c)| c.to_vec())
                    .expect("default modulus exists for every supported (p, m)"),
            };
            if coeffs.len() != m as usize + 1 {
                return Err(Error::InvalidModulus {
                    reason: "degree must equal the extension degree m",
                });
            }
            if coeffs.iter().any(|&c| c as u64 >= p) {
                return Err(Error::InvalidModulus {
                    reason: "coefficients must lie in [0, p)",
                });
            }
            if coeffs[m as usize] != 1 {
                return Err(Error::InvalidModulus {
                    reason: "polynomial must be monic",
                });
            }
            if !poly_is_irreducible(&coeffs, p) {
                return Err(Error::ReduciblePolynomial { p });
            }
            coeffs
        };

        // Addition/negation are digit-wise mod p; multiplication reduces the
        // coefficient convolution by the modulus.
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = element_to_digits(a, p, m);
            let nd: Vec<u8> = da.iter().map(|&d| ((p - d as u64) % p) as u8).collect();
            neg[a] = digits_to_element(&nd, p) as u8;
            for b in 0..q {
                let db = element_to_digits(b, p, m);
                let sum: Vec<u8> = da
                    .iter()
                    .zip(&db)
                    .map(|(&x, &y)| ((x as u64 + y as u64) % p) as u8)
                    .collect();
                add[a * q + b] = digits_to_element(&sum, p) as u8;
                mul[a * q + b] = if m == 1 {
                    ((a as u64 * b as u64) % p) as u8
                } else {
                    let mut conv = vec![0u8; 2 * m as usize - 1];
                    for (i, &x) in da.iter().enumerate() {
                        for (j, &y) in db.iter().enumerate() {
                            conv[i + j] =
                                ((conv[i + j] as u64 + x as u64 * y as u64) % p) as u8;
                        }
                    }
                    let mut rem = poly_rem(&conv, &modulus, p);
                    rem.resize(m as usize, 0);
                    digits_to_element(&rem, p) as u8
                };
            }
        }

        let mut inv = vec![0u8; q];
        for a in 1..q {
            for b in 1..q {
                if mul[a * q + b] == 1 {
                    inv[a] = b as u8;
                    break;
                }
            }
            debug_assert_eq!(mul[a * q + inv[a] as usize], 1);
        }

        // The multiplicative group is cyclic; take the first element of full order.
        let mut generator = 1u8;
        'outer: for g in 1..q {
            let mut x = g;
            let mut order = 1;
            while x != 1 {
                x = mul[x * q + g] as usize;
                order += 1;
            }
            if order == q - 1 {
                generator = g as u8;
                break 'outer;
            }
        }
        let mut exp = vec![0u8; q - 1];
        let mut log = vec![0u8; q];
        let mut x = 1usize;
        for (i, e) in exp.iter_mut().enumerate() {
            *e = x as u8;
            log[x] = i as u8;
            x = mul[x * q + generator as usize] as usize;
        }

        Ok(Field {
            data: Arc::new(FieldData {
                p,
                m,
                q,
                modulus,
                add,
                mul,
                neg,
                inv,
                exp,
                log,
                generator,
            }),
        })
    }

    /// GF(q) for a prime power q, with the built-in modulus when q is not prime.
    pub fn of_order(q: u64) -> Result<Field> {
        if q < 2 || q > MAX_ORDER {
            return Err(Error::UnsupportedOrder { q });
        }
        let mut p = 2;
        while q % p != 0 {
            p += 1;
        }
        let mut m = 0;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            m += 1;
        }
        if rest != 1 {
            // q has two distinct prime factors, so it is no prime power
            return Err(Error::CompositeCharacteristic { p: q });
        }
        Field::new(p, m, None)
    }

    pub fn p(&self) -> u64 {
        self.data.p
    }

    pub fn m(&self) -> u32 {
        self.data.m
    }

    pub fn q(&self) -> usize {
        self.data.q
    }

    /// Modulus coefficients, constant-first; empty for prime fields.
    pub fn modulus(&self) -> &[u8] {
        &self.data.modulus
    }

    fn check(&self, a: u8) {
        assert!((a as usize) < self.data.q, "symbol {a} not in GF({})", self.data.q);
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.check(a);
        self.check(b);
        self.data.add[a as usize * self.data.q + b as usize]
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.check(a);
        self.check(b);
        self.data.mul[a as usize * self.data.q + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        self.check(a);
        self.data.neg[a as usize]
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        self.check(a);
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.data.inv[a as usize])
    }

    /// generator^i, with i reduced mod q-1.
    pub fn exp(&self, i: u64) -> u8 {
        self.data.exp[(i % (self.data.q as u64 - 1)) as usize]
    }

    /// Discrete log base the fixed generator.
    pub fn log(&self, a: u8) -> Result<u64> {
        self.check(a);
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.data.log[a as usize] as u64)
    }

    pub fn generator(&self) -> u8 {
        self.data.generator
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.data.q).map(|e| e as u8)
    }
}

/// Advance a raw symbol buffer to its successor in the global word order
/// (position 0 varies fastest). Returns false after wrapping past the last
/// word. Shared by the exhaustive searches, which iterate candidate words
/// without allocating.
pub(crate) fn next_syms(w: &mut [u8], q: u8) -> bool {
    for s in w.iter_mut() {
        if *s + 1 < q {
            *s += 1;
            return true;
        }
        *s = 0;
    }
    false
}

/// A vector over GF(q). Length zero is permitted: it is the codeword of an
/// empty redundancy assignment and behaves as the identity for concatenation.
#[derive(Clone)]
pub struct Word {
    syms: Vec<u8>,
    field: Field,
}

impl Word {
    pub fn new(syms: Vec<u8>, field: &Field) -> Result<Word> {
        let q = field.q();
        if let Some(&bad) = syms.iter().find(|&&s| s as usize >= q) {
            return Err(Error::Parse(format!("symbol {bad} not in GF({q})")));
        }
        Ok(Word {
            syms,
            field: field.clone(),
        })
    }

    pub fn zero(n: usize, field: &Field) -> Word {
        Word {
            syms: vec![0; n],
            field: field.clone(),
        }
    }

    /// The word whose base-q digits (u_0 least significant) equal `index`.
    /// This fixes the global enumeration order used by every search table.
    pub fn from_index(index: u128, n: usize, field: &Field) -> Word {
        let q = field.q() as u128;
        let mut syms = vec![0u8; n];
        let mut rest = index;
        for s in syms.iter_mut() {
            *s = (rest % q) as u8;
            rest /= q;
        }
        assert!(rest == 0, "index {index} out of range for length {n}");
        Word {
            syms,
            field: field.clone(),
        }
    }

    /// Position in the global word order: sum of u_i * q^i.
    pub fn index(&self) -> u128 {
        let q = self.field.q() as u128;
        self.syms
            .iter()
            .rev()
            .fold(0u128, |acc, &s| acc * q + s as u128)
    }

    /// All q^n words of length n, in global order.
    pub fn enumerate(n: usize, field: &Field) -> impl Iterator<Item = Word> {
        let field = field.clone();
        let total = (field.q() as u128).pow(n as u32);
        (0..total).map(move |i| Word::from_index(i, n, &field))
    }

    pub fn len(&self) -> usize {
        self.syms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syms.is_empty()
    }

    pub fn syms(&self) -> &[u8] {
        &self.syms
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.syms.iter().all(|&s| s == 0)
    }

    fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.syms.len() != other.syms.len() {
            return Err(Error::LengthMismatch {
                left: self.syms.len(),
                right: other.syms.len(),
            });
        }
        Ok(())
    }

    /// Element-wise difference in GF(q).
    pub fn sub(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let syms = self
            .syms
            .iter()
            .zip(&other.syms)
            .map(|(&a, &b)| self.field.sub(a, b))
            .collect();
        Ok(Word {
            syms,
            field: self.field.clone(),
        })
    }

    pub fn add(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        let syms = self
            .syms
            .iter()
            .zip(&other.syms)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(Word {
            syms,
            field: self.field.clone(),
        })
    }

    pub fn scale(&self, c: u8) -> Word {
        let syms = self.syms.iter().map(|&a| self.field.mul(a, c)).collect();
        Word {
            syms,
            field: self.field.clone(),
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let mut syms = self.syms.clone();
        syms.extend_from_slice(&other.syms);
        Ok(Word {
            syms,
            field: self.field.clone(),
        })
    }

    /// Compact rendering: one base-36 digit per symbol for q <= 36 (u_0 first),
    /// comma-separated decimal beyond that.
    pub fn digit_string(&self) -> String {
        if self.field.q() <= 36 {
            self.syms
                .iter()
                .map(|&s| char::from_digit(s as u32, 36).unwrap())
                .collect()
        } else {
            self.syms
                .iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn from_digit_string(s: &str, field: &Field) -> Result<Word> {
        let syms: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<u8>()
                        .map_err(|_| Error::Parse(format!("bad symbol {part:?}")))
                })
                .collect::<Result<_>>()?
        } else if s.is_empty() {
            Vec::new()
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(36)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Word::new(syms, field)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.digit_string())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.digit_string())
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.syms == other.syms
    }
}
impl Eq for Word {}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.q().hash(state);
        self.syms.hash(state);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        let f = Field::new(2, 1, None).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.mul(1, 1), 1);
    }

    #[test]
    fn gf4_with_explicit_modulus() {
        // x^2 + x + 1, irreducible over GF(2) (no root in {0, 1})
        let f = Field::new(2, 2, Some(&[1, 1, 1])).unwrap();
        assert_eq!(f.q(), 4);
        // (x)(x+1) = x^2 + x = 1 mod x^2+x+1
        assert_eq!(f.mul(2, 3), 1);
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(
            Field::new(4, 1, None).unwrap_err(),
            Error::CompositeCharacteristic { p: 4 }
        );
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x+1)^2 over GF(2)
        assert_eq!(
            Field::new(2, 2, Some(&[1, 0, 1])).unwrap_err(),
            Error::ReduciblePolynomial { p: 2 }
        );
        // x^2 + x = x(x+1): caught by the degree-1 divisor scan
        assert_eq!(
            Field::new(2, 2, Some(&[0, 1, 1])).unwrap_err(),
            Error::ReduciblePolynomial { p: 2 }
        );
    }

    #[test]
    fn oversized_order_rejected() {
        assert!(matches!(
            Field::new(2, 9, Some(&[1; 10])),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert!(matches!(
            Field::of_order(512),
            Err(Error::UnsupportedOrder { .. })
        ));
    }

    #[test]
    fn of_order_factors_prime_powers() {
        let f = Field::of_order(9).unwrap();
        assert_eq!((f.p(), f.m()), (3, 2));
        assert!(matches!(
            Field::of_order(12),
            Err(Error::CompositeCharacteristic { .. })
        ));
    }

    #[test]
    fn mul_examples() {
        let gf5 = Field::new(5, 1, None).unwrap();
        assert_eq!(gf5.mul(2, 3), 1);
        let gf4 = Field::new(2, 2, None).unwrap();
        assert_eq!(gf4.mul(2, 3), 1);
    }

    #[test]
    fn inv_examples() {
        let gf2 = Field::new(2, 1, None).unwrap();
        assert_eq!(gf2.inv(1).unwrap(), 1);
        let gf7 = Field::new(7, 1, None).unwrap();
        assert_eq!(gf7.inv(3).unwrap(), 5);
        assert_eq!(gf7.inv(0).unwrap_err(), Error::ZeroInverse);
    }

    #[test]
    fn default_moduli_all_construct() {
        for &(p, m, _) in DEFAULT_MODULI {
            let f = Field::new(p, m, None).unwrap();
            assert_eq!(f.q() as u64, p.pow(m));
        }
    }

    /// Field axioms, exhaustively for every supported field of order <= 16.
    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            let f = Field::of_order(q).unwrap();
            let q = f.q() as u8;
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    /// mul/inv consistency over every field order the crate supports.
    #[test]
    fn inverse_consistency_all_orders() {
        let orders: Vec<u64> = (2..=MAX_ORDER).filter(|&q| Field::of_order(q).is_ok()).collect();
        assert!(orders.contains(&256) && orders.contains(&251) && orders.contains(&243));
        for q in orders {
            let f = Field::of_order(q).unwrap();
            for a in 1..f.q() as u16 {
                let a = a as u8;
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1, "q={q} a={a}");
            }
        }
    }

    #[test]
    fn exp_log_roundtrip() {
        for q in [2u64, 4, 9, 16, 27] {
            let f = Field::of_order(q).unwrap();
            for a in 1..f.q() as u16 {
                let a = a as u8;
                assert_eq!(f.exp(f.log(a).unwrap()), a);
            }
        }
    }

    #[test]
    fn word_sub_examples() {
        let gf2 = Field::of_order(2).unwrap();
        let u = Word::new(vec![0, 1, 0], &gf2).unwrap();
        let v = Word::new(vec![1, 0, 0], &gf2).unwrap();
        assert_eq!(u.sub(&v).unwrap().syms(), &[1, 1, 0]);
        assert!(u.sub(&u).unwrap().is_zero());

        let gf3 = Field::of_order(3).unwrap();
        let a = Word::new(vec![2, 1], &gf3).unwrap();
        let b = Word::new(vec![1, 2], &gf3).unwrap();
        assert_eq!(a.sub(&b).unwrap().syms(), &[1, 2]);
    }

    #[test]
    fn word_sub_rejects_mismatches() {
        let gf2 = Field::of_order(2).unwrap();
        let gf3 = Field::of_order(3).unwrap();
        let u = Word::new(vec![0, 1], &gf2).unwrap();
        let v = Word::new(vec![0, 1, 1], &gf2).unwrap();
        let w = Word::new(vec![0, 1], &gf3).unwrap();
        assert!(matches!(u.sub(&v), Err(Error::LengthMismatch { .. })));
        assert_eq!(u.sub(&w).unwrap_err(), Error::FieldMismatch);
    }

    /// word_sub(u, v) + v == u, exhaustively for small words.
    #[test]
    fn sub_add_roundtrip_exhaustive() {
        for q in [2u64, 3] {
            let f = Field::of_order(q).unwrap();
            for u in Word::enumerate(3, &f) {
                for v in Word::enumerate(3, &f) {
                    assert_eq!(u.sub(&v).unwrap().add(&v).unwrap(), u);
                }
            }
        }
    }

    #[test]
    fn global_order_is_little_endian() {
        let gf2 = Field::of_order(2).unwrap();
        let w = Word::from_index(1, 2, &gf2);
        assert_eq!(w.syms(), &[1, 0]); // u_0 is the least significant digit
        assert_eq!(w.index(), 1);
        let all: Vec<String> = Word::enumerate(2, &gf2).map(|w| w.digit_string()).collect();
        assert_eq!(all, ["00", "10", "01", "11"]);
    }

    #[test]
    fn digit_string_roundtrip() {
        let gf16 = Field::of_order(16).unwrap();
        let w = Word::new(vec![0, 10, 15], &gf16).unwrap();
        assert_eq!(w.digit_string(), "0af");
        assert_eq!(Word::from_digit_string("0af", &gf16).unwrap(), w);
        let empty = Word::from_digit_string("", &gf16).unwrap();
        assert!(empty.is_empty());
    }
}
