//! Exact fields: the rationals, number fields `Q[x]/(f)` and small finite
//! fields, all with canonical element representatives.

mod any;
pub mod cyclotomic;
mod finite;
mod number_field;
pub mod poly;
mod rational;
pub mod text;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

pub use any::{AnyField, Scalar};
pub use cyclotomic::{cyclotomic_minpoly, real_cyclotomic_minpoly};
pub use finite::FiniteField;
pub use number_field::NumberField;
pub use rational::Rationals;

/// A field with exactly comparable elements.
///
/// Elements are plain values; all arithmetic goes through the field handle so
/// that number fields and finite fields can carry their modulus at runtime.
pub trait ExactField: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + fmt::Debug + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem>;
    /// The class of `x`; absent for prime fields and the rationals.
    fn generator(&self) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn characteristic(&self) -> u64;

    /// All elements, for finite fields.
    fn elements(&self) -> Option<Vec<Self::Elem>>;

    fn format_elem(&self, a: &Self::Elem) -> String;
    fn parse_elem(&self, s: &str) -> Result<Self::Elem>;

    /// Real roots of the defining polynomial, increasing.
    fn real_roots(&self) -> Result<Vec<f64>>;

    /// Floating value of `a` under the chosen real embedding.
    fn real_embedding(&self, a: &Self::Elem, root_index: usize) -> Result<f64>;

    /// The triple scaled to coprime integers, when all entries are rational
    /// numbers of a field of characteristic 0.
    fn integer_triple(&self, _t: &[Self::Elem; 3]) -> Option<[BigInt; 3]> {
        None
    }

    /// Checks that `a` is a well-formed element of this field.
    fn validate(&self, _a: &Self::Elem) -> Result<()> {
        Ok(())
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Evaluates a rational polynomial (low degree first) at `a`.
    fn eval_poly(&self, coeffs: &[BigRational], a: &Self::Elem) -> Result<Self::Elem> {
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, a), &self.from_rational(c)?);
        }
        Ok(acc)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rationals,
    NumberField,
    PrimeField,
    PrimePowerField,
}

/// Description of a field: its kind, defining polynomial and characteristic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    pub kind: FieldKind,
    /// Monic defining polynomial, low degree first. Empty for prime fields
    /// and the rationals.
    pub min_poly: Vec<BigRational>,
    pub characteristic: u64,
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec {
            kind: FieldKind::Rationals,
            min_poly: Vec::new(),
            characteristic: 0,
        }
    }

    pub fn number_field(min_poly: Vec<BigRational>) -> Self {
        FieldSpec {
            kind: FieldKind::NumberField,
            min_poly,
            characteristic: 0,
        }
    }

    pub fn number_field_int(min_poly: &[i64]) -> Self {
        Self::number_field(min_poly.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn prime_field(p: u64) -> Self {
        FieldSpec {
            kind: FieldKind::PrimeField,
            min_poly: Vec::new(),
            characteristic: p,
        }
    }

    /// `GF(p^k)` with an explicit defining polynomial over `GF(p)`.
    pub fn prime_power_field(p: u64, min_poly: &[u64]) -> Self {
        FieldSpec {
            kind: FieldKind::PrimePowerField,
            min_poly: min_poly.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
            characteristic: p,
        }
    }

    /// `GF(q)` using the stored polynomial for prime powers.
    pub fn galois(q: u64) -> Result<Self> {
        let (p, k) = prime_power(q).ok_or_else(|| Error::InvalidFieldSpec(format!("{q} is not a prime power")))?;
        if k == 1 {
            return Ok(Self::prime_field(p));
        }
        let poly = finite::stored_poly(q).ok_or_else(|| Error::InvalidFieldSpec(format!("no stored polynomial for GF({q})")))?;
        Ok(Self::prime_power_field(p, poly))
    }

    pub fn degree(&self) -> usize {
        self.min_poly.len().saturating_sub(1).max(1)
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u64> {
        match self.kind {
            FieldKind::Rationals | FieldKind::NumberField => None,
            FieldKind::PrimeField => Some(self.characteristic),
            FieldKind::PrimePowerField => Some(self.characteristic.pow(self.degree() as u32)),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.order().is_some()
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rationals => write!(f, "Q"),
            FieldKind::NumberField => write!(f, "Q[x]/({})", text::format_poly(&self.min_poly)),
            FieldKind::PrimeField => write!(f, "GF({})", self.characteristic),
            FieldKind::PrimePowerField => write!(
                f,
                "GF({};{})",
                self.order().unwrap_or(0),
                text::format_poly(&self.min_poly)
            ),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::InvalidFieldSpec(s.to_string());
        if t == "Q" || t == "QQ" {
            return Ok(Self::rationals());
        }
        if let Some(rest) = t.strip_prefix("Q[x]/(") {
            let body = rest.strip_suffix(')').ok_or_else(bad)?;
            let poly = text::parse_poly(body).map_err(|_| bad())?;
            return Ok(Self::number_field(poly));
        }
        if let Some(rest) = t.strip_prefix("GF(") {
            let body = rest.strip_suffix(')').ok_or_else(bad)?;
            let (qs, ps) = match body.split_once(';') {
                Some((a, b)) => (a, Some(b)),
                None => (body, None),
            };
            let q: u64 = qs.parse().map_err(|_| bad())?;
            let (p, k) = prime_power(q).ok_or_else(bad)?;
            return match ps {
                None => Self::galois(q),
                Some(poly) => {
                    let coeffs = text::parse_poly(poly).map_err(|_| bad())?;
                    let mut out = Vec::with_capacity(coeffs.len());
                    for c in coeffs {
                        if !c.is_integer() {
                            return Err(bad());
                        }
                        let v = c.to_integer() % BigInt::from(p);
                        let v = if v.is_negative() { v + BigInt::from(p) } else { v };
                        out.push(v.to_u64().ok_or_else(bad)?);
                    }
                    if out.len() != k as usize + 1 {
                        return Err(Error::InvalidFieldSpec(format!("{s}: polynomial degree does not match order")));
                    }
                    if k == 1 {
                        return Ok(Self::prime_field(p));
                    }
                    Ok(Self::prime_power_field(p, &out))
                }
            };
        }
        Err(bad())
    }
}

/// Builds a field handle from a spec, validating it.
pub fn field_make(spec: &FieldSpec) -> Result<AnyField> {
    AnyField::new(spec)
}

pub(crate) fn is_prime(n: u64) -> bool {
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

/// `(p, k)` with `q = p^k`, if `q` is a prime power.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Scales rationals to coprime integers with the same ratios.
pub(crate) fn primitive_integers(v: &[BigRational; 3]) -> [BigInt; 3] {
    use num_integer::Integer;
    use num_traits::{One, Zero};
    let l = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = v.clone().map(|c| (c * BigRational::from_integer(l.clone())).to_integer());
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.map(|c| c / &g)
    }
}

#[cfg(test)]
pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
