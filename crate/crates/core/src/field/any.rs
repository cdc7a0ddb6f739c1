use std::fmt;

use num_rational::BigRational;

use super::{ExactField, FieldKind, FieldSpec, FiniteField, NumberField, Rationals};
use crate::error::{Error, Result};

/// A field chosen at runtime from a [`FieldSpec`].
#[derive(Debug, Clone, PartialEq)]
pub enum AnyField {
    Rationals(Rationals),
    Number(NumberField),
    Finite(FiniteField),
}

/// An element of an [`AnyField`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Alg(Vec<BigRational>),
    Fin(u32),
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Alg(c) => write!(f, "{}", super::text::format_poly(c)),
            Scalar::Fin(n) => write!(f, "#{n}"),
        }
    }
}

impl AnyField {
    pub fn new(spec: &FieldSpec) -> Result<Self> {
        Ok(match spec.kind {
            FieldKind::Rationals => AnyField::Rationals(Rationals),
            FieldKind::NumberField => AnyField::Number(NumberField::new(spec.min_poly.clone())?),
            FieldKind::PrimeField => AnyField::Finite(FiniteField::prime(spec.characteristic)?),
            FieldKind::PrimePowerField => {
                let mut coeffs = Vec::with_capacity(spec.min_poly.len());
                for c in &spec.min_poly {
                    if !c.is_integer() {
                        return Err(Error::InvalidFieldSpec(spec.to_string()));
                    }
                    let v: i64 = c.to_integer().try_into().map_err(|_| Error::InvalidFieldSpec(spec.to_string()))?;
                    coeffs.push(v.rem_euclid(spec.characteristic.max(1) as i64) as u64);
                }
                AnyField::Finite(FiniteField::with_poly(spec.characteristic, &coeffs)?)
            }
        })
    }

    pub fn rationals() -> Self {
        AnyField::Rationals(Rationals)
    }

    /// Parses a spec like `Q[x]/(x^2+x+1)` and builds the field.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(&s.parse()?)
    }

    pub fn number_field(min_poly: &[i64]) -> Result<Self> {
        Self::new(&FieldSpec::number_field_int(min_poly))
    }

    pub fn galois(q: u64) -> Result<Self> {
        Self::new(&FieldSpec::galois(q)?)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, AnyField::Finite(_))
    }

    pub fn order(&self) -> Option<u64> {
        match self {
            AnyField::Finite(f) => Some(f.order()),
            _ => None,
        }
    }

    /// Scalar from a list of rational coefficients in the generator.
    pub fn from_coeffs(&self, coeffs: &[BigRational]) -> Result<Scalar> {
        let x = self.generator();
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            let xc = match &x {
                Some(x) => self.mul(&acc, x),
                None if acc == self.zero() => acc.clone(),
                None => return Err(Error::Parse("field has no generator".into())),
            };
            acc = self.add(&xc, &self.from_rational(c)?);
        }
        Ok(acc)
    }
}

fn mismatch(a: &Scalar) -> ! {
    panic!("scalar {a:?} used with a field of a different kind")
}

impl ExactField for AnyField {
    type Elem = Scalar;

    fn spec(&self) -> FieldSpec {
        match self {
            AnyField::Rationals(f) => f.spec(),
            AnyField::Number(f) => f.spec(),
            AnyField::Finite(f) => f.spec(),
        }
    }

    fn zero(&self) -> Scalar {
        match self {
            AnyField::Rationals(f) => Scalar::Rat(f.zero()),
            AnyField::Number(f) => Scalar::Alg(f.zero()),
            AnyField::Finite(f) => Scalar::Fin(f.zero()),
        }
    }

    fn one(&self) -> Scalar {
        match self {
            AnyField::Rationals(f) => Scalar::Rat(f.one()),
            AnyField::Number(f) => Scalar::Alg(f.one()),
            AnyField::Finite(f) => Scalar::Fin(f.one()),
        }
    }

    fn from_i64(&self, n: i64) -> Scalar {
        match self {
            AnyField::Rationals(f) => Scalar::Rat(f.from_i64(n)),
            AnyField::Number(f) => Scalar::Alg(f.from_i64(n)),
            AnyField::Finite(f) => Scalar::Fin(f.from_i64(n)),
        }
    }

    fn from_rational(&self, q: &BigRational) -> Result<Scalar> {
        Ok(match self {
            AnyField::Rationals(f) => Scalar::Rat(f.from_rational(q)?),
            AnyField::Number(f) => Scalar::Alg(f.from_rational(q)?),
            AnyField::Finite(f) => Scalar::Fin(f.from_rational(q)?),
        })
    }

    fn generator(&self) -> Option<Scalar> {
        match self {
            AnyField::Rationals(_) => None,
            AnyField::Number(f) => f.generator().map(Scalar::Alg),
            AnyField::Finite(f) => f.generator().map(Scalar::Fin),
        }
    }

    fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(q) => num_traits::Zero::is_zero(q),
            Scalar::Alg(c) => c.is_empty(),
            Scalar::Fin(n) => *n == 0,
        }
    }

    fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (AnyField::Rationals(f), Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(f.add(x, y)),
            (AnyField::Number(f), Scalar::Alg(x), Scalar::Alg(y)) => Scalar::Alg(f.add(x, y)),
            (AnyField::Finite(f), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(f.add(x, y)),
            _ => mismatch(a),
        }
    }

    fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (AnyField::Rationals(f), Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(f.sub(x, y)),
            (AnyField::Number(f), Scalar::Alg(x), Scalar::Alg(y)) => Scalar::Alg(f.sub(x, y)),
            (AnyField::Finite(f), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(f.sub(x, y)),
            _ => mismatch(a),
        }
    }

    fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (AnyField::Rationals(f), Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(f.mul(x, y)),
            (AnyField::Number(f), Scalar::Alg(x), Scalar::Alg(y)) => Scalar::Alg(f.mul(x, y)),
            (AnyField::Finite(f), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(f.mul(x, y)),
            _ => mismatch(a),
        }
    }

    fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (AnyField::Rationals(f), Scalar::Rat(x)) => Scalar::Rat(f.neg(x)),
            (AnyField::Number(f), Scalar::Alg(x)) => Scalar::Alg(f.neg(x)),
            (AnyField::Finite(f), Scalar::Fin(x)) => Scalar::Fin(f.neg(x)),
            _ => mismatch(a),
        }
    }

    fn inv(&self, a: &Scalar) -> Result<Scalar> {
        Ok(match (self, a) {
            (AnyField::Rationals(f), Scalar::Rat(x)) => Scalar::Rat(f.inv(x)?),
            (AnyField::Number(f), Scalar::Alg(x)) => Scalar::Alg(f.inv(x)?),
            (AnyField::Finite(f), Scalar::Fin(x)) => Scalar::Fin(f.inv(x)?),
            _ => mismatch(a),
        })
    }

    fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(match (self, a, b) {
            (AnyField::Rationals(f), Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(f.div(x, y)?),
            (AnyField::Number(f), Scalar::Alg(x), Scalar::Alg(y)) => Scalar::Alg(f.div(x, y)?),
            (AnyField::Finite(f), Scalar::Fin(x), Scalar::Fin(y)) => Scalar::Fin(f.div(x, y)?),
            _ => mismatch(a),
        })
    }

    fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(q) => num_traits::One::is_one(q),
            Scalar::Alg(c) => c.len() == 1 && num_traits::One::is_one(&c[0]),
            Scalar::Fin(n) => *n == 1,
        }
    }

    fn characteristic(&self) -> u64 {
        match self {
            AnyField::Finite(f) => f.characteristic(),
            _ => 0,
        }
    }

    fn elements(&self) -> Option<Vec<Scalar>> {
        match self {
            AnyField::Finite(f) => f.elements().map(|v| v.into_iter().map(Scalar::Fin).collect()),
            _ => None,
        }
    }

    fn format_elem(&self, a: &Scalar) -> String {
        match (self, a) {
            (AnyField::Rationals(f), Scalar::Rat(x)) => f.format_elem(x),
            (AnyField::Number(f), Scalar::Alg(x)) => f.format_elem(x),
            (AnyField::Finite(f), Scalar::Fin(x)) => f.format_elem(x),
            _ => mismatch(a),
        }
    }

    fn parse_elem(&self, s: &str) -> Result<Scalar> {
        Ok(match self {
            AnyField::Rationals(f) => Scalar::Rat(f.parse_elem(s)?),
            AnyField::Number(f) => Scalar::Alg(f.parse_elem(s)?),
            AnyField::Finite(f) => Scalar::Fin(f.parse_elem(s)?),
        })
    }

    fn real_roots(&self) -> Result<Vec<f64>> {
        match self {
            AnyField::Rationals(f) => f.real_roots(),
            AnyField::Number(f) => f.real_roots(),
            AnyField::Finite(f) => f.real_roots(),
        }
    }

    fn real_embedding(&self, a: &Scalar, root_index: usize) -> Result<f64> {
        match (self, a) {
            (AnyField::Rationals(f), Scalar::Rat(x)) => f.real_embedding(x, root_index),
            (AnyField::Number(f), Scalar::Alg(x)) => f.real_embedding(x, root_index),
            (AnyField::Finite(f), Scalar::Fin(x)) => f.real_embedding(x, root_index),
            _ => Err(self.kind_mismatch(a)),
        }
    }

    fn integer_triple(&self, t: &[Scalar; 3]) -> Option<[num_bigint::BigInt; 3]> {
        match t {
            [Scalar::Rat(a), Scalar::Rat(b), Scalar::Rat(c)] => {
                Some(super::primitive_integers(&[a.clone(), b.clone(), c.clone()]))
            }
            [Scalar::Alg(a), Scalar::Alg(b), Scalar::Alg(c)] if a.len() <= 1 && b.len() <= 1 && c.len() <= 1 => {
                let r = |v: &Vec<BigRational>| v.first().cloned().unwrap_or_else(num_traits::Zero::zero);
                Some(super::primitive_integers(&[r(a), r(b), r(c)]))
            }
            _ => None,
        }
    }

    fn validate(&self, a: &Scalar) -> Result<()> {
        match (self, a) {
            (AnyField::Rationals(_), Scalar::Rat(_)) => Ok(()),
            (AnyField::Number(f), Scalar::Alg(x)) => f.validate(x),
            (AnyField::Finite(f), Scalar::Fin(x)) => f.validate(x),
            _ => Err(self.kind_mismatch(a)),
        }
    }
}

impl AnyField {
    fn kind_mismatch(&self, a: &Scalar) -> Error {
        let kind = match a {
            Scalar::Rat(_) => "rational scalar",
            Scalar::Alg(_) => "number-field scalar",
            Scalar::Fin(_) => "finite-field scalar",
        };
        Error::FieldMismatch(self.spec().to_string(), kind.to_string())
    }
}
