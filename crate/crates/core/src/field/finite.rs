use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::{is_prime, text, ExactField, FieldSpec};
use crate::error::{Error, Result};

/// Stored defining polynomials (low degree first) for `GF(p^k)`, `k ≥ 2`.
pub(crate) fn stored_poly(q: u64) -> Option<&'static [u64]> {
    Some(match q {
        4 => &[1, 1, 1],
        8 => &[1, 1, 0, 1],
        16 => &[1, 1, 0, 0, 1],
        32 => &[1, 0, 1, 0, 0, 1],
        64 => &[1, 1, 0, 0, 0, 0, 1],
        9 => &[1, 0, 1],
        27 => &[1, 2, 0, 1],
        25 => &[2, 0, 1],
        49 => &[1, 0, 1],
        _ => return None,
    })
}

#[derive(Debug)]
struct Tables {
    p: u64,
    k: u32,
    q: u32,
    poly: Vec<u64>,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    inv: Vec<u32>,
}

/// A finite field of order at most 64.
///
/// An element is encoded as the integer whose base-`p` digits are the
/// coefficients of its residue, low degree first; for prime fields this is
/// the least non-negative residue.
#[derive(Debug, Clone)]
pub struct FiniteField {
    t: Arc<Tables>,
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.t.p == other.t.p && self.t.poly == other.t.poly
    }
}

impl Eq for FiniteField {}

fn digits(mut a: u32, p: u64, k: u32) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = a as u64 % p;
            a /= p as u32;
            d
        })
        .collect()
}

fn undigits(d: &[u64], p: u64) -> u32 {
    d.iter().rev().fold(0u64, |acc, &c| acc * p + c) as u32
}

impl FiniteField {
    pub fn prime(p: u64) -> Result<Self> {
        Self::with_poly(p, &[0, 1])
    }

    /// `GF(p^k)` from a monic polynomial over `GF(p)` of degree `k`.
    pub fn with_poly(p: u64, poly: &[u64]) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidFieldSpec(format!("characteristic {p} is not prime")));
        }
        let k = poly.len() as u32 - 1;
        if k == 0 || poly[k as usize] != 1 || poly.iter().any(|&c| c >= p) {
            return Err(Error::InvalidFieldSpec(format!("bad polynomial over GF({p})")));
        }
        let q64 = p.checked_pow(k).filter(|&q| q <= 64);
        let Some(q64) = q64 else {
            return Err(Error::InvalidFieldSpec(format!("GF({p}^{k}) exceeds the supported order 64")));
        };
        let q = q64 as u32;
        let n = q as usize;
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        let mut neg = vec![0u32; n];
        for a in 0..q {
            let da = digits(a, p, k);
            neg[a as usize] = undigits(&da.iter().map(|&c| (p - c) % p).collect::<Vec<_>>(), p);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a as usize * n + b as usize] = undigits(&s, p);
                let mut prod = vec![0u64; 2 * k as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for e in (k as usize..prod.len()).rev() {
                    let c = prod[e];
                    if c == 0 {
                        continue;
                    }
                    prod[e] = 0;
                    for (i, &f) in poly.iter().enumerate().take(k as usize) {
                        let idx = e - k as usize + i;
                        prod[idx] = (prod[idx] + c * (p - f)) % p;
                    }
                }
                mul[a as usize * n + b as usize] = undigits(&prod[..k as usize], p);
            }
        }
        let mut inv = vec![0u32; n];
        for a in 1..q {
            match (1..q).find(|&b| mul[(a * q + b) as usize] == 1) {
                Some(b) => inv[a as usize] = b,
                None => {
                    return Err(Error::InvalidFieldSpec(format!(
                        "{} is reducible over GF({p})",
                        text::format_poly(&poly.iter().map(|&c| BigRational::from_integer(c.into())).collect::<Vec<_>>())
                    )))
                }
            }
        }
        Ok(FiniteField {
            t: Arc::new(Tables {
                p,
                k,
                q,
                poly: poly.to_vec(),
                add,
                mul,
                neg,
                inv,
            }),
        })
    }

    pub fn order(&self) -> u64 {
        self.t.q as u64
    }

    /// The element with the given integer encoding.
    pub fn elem(&self, code: u32) -> Result<u32> {
        if code < self.t.q {
            Ok(code)
        } else {
            Err(Error::OutOfRange(format!("{code} is not an element of GF({})", self.t.q)))
        }
    }

    fn reduce_int(&self, n: &num_bigint::BigInt) -> u32 {
        let p = num_bigint::BigInt::from(self.t.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        r.to_u32().unwrap_or(0)
    }
}

impl ExactField for FiniteField {
    type Elem = u32;

    fn spec(&self) -> FieldSpec {
        if self.t.k == 1 {
            FieldSpec::prime_field(self.t.p)
        } else {
            FieldSpec::prime_power_field(self.t.p, &self.t.poly)
        }
    }

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.t.p as i64) as u32
    }

    fn from_rational(&self, q: &BigRational) -> Result<u32> {
        let n = self.reduce_int(q.numer());
        let d = self.reduce_int(q.denom());
        if d == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul(&n, &self.t.inv[d as usize]))
    }

    fn generator(&self) -> Option<u32> {
        (self.t.k > 1).then_some(self.t.p as u32)
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        self.t.add[(*a * self.t.q + *b) as usize]
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        self.add(a, &self.t.neg[*b as usize])
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.t.mul[(*a * self.t.q + *b) as usize]
    }

    fn neg(&self, a: &u32) -> u32 {
        self.t.neg[*a as usize]
    }

    fn inv(&self, a: &u32) -> Result<u32> {
        if *a == 0 {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.t.inv[*a as usize])
        }
    }

    fn characteristic(&self) -> u64 {
        self.t.p
    }

    fn elements(&self) -> Option<Vec<u32>> {
        Some((0..self.t.q).collect())
    }

    fn format_elem(&self, a: &u32) -> String {
        if self.t.k == 1 {
            return a.to_string();
        }
        let d: Vec<BigRational> = digits(*a, self.t.p, self.t.k)
            .into_iter()
            .map(|c| BigRational::from_integer(c.into()))
            .collect();
        text::format_poly(&super::poly::trimmed(&d))
    }

    fn parse_elem(&self, s: &str) -> Result<u32> {
        let coeffs = text::parse_poly(s)?;
        if self.t.k == 1 && coeffs.len() > 1 {
            return Err(Error::Parse(format!("'{s}' is not an element of GF({})", self.t.p)));
        }
        let x = self.generator().unwrap_or(0);
        let mut acc = 0;
        for c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, &x), &self.from_rational(c)?);
        }
        Ok(acc)
    }

    fn real_roots(&self) -> Result<Vec<f64>> {
        Err(Error::NoRealRoot)
    }

    fn real_embedding(&self, _a: &u32, _root_index: usize) -> Result<f64> {
        Err(Error::NoRealRoot)
    }

    fn validate(&self, a: &u32) -> Result<()> {
        self.elem(*a).map(|_| ())
    }
}
