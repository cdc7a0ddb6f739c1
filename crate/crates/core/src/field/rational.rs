use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{text, ExactField, FieldSpec};
use crate::error::{Error, Result};

/// The field of rational numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl ExactField for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::rationals()
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn from_rational(&self, q: &BigRational) -> Result<BigRational> {
        Ok(q.clone())
    }

    fn generator(&self) -> Option<BigRational> {
        None
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }

    fn div(&self, a: &BigRational, b: &BigRational) -> Result<BigRational> {
        if b.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a / b)
        }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn elements(&self) -> Option<Vec<BigRational>> {
        None
    }

    fn format_elem(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational> {
        let p = text::parse_poly(s)?;
        match p.len() {
            0 => Ok(BigRational::zero()),
            1 => Ok(p[0].clone()),
            _ => Err(Error::Parse(format!("'{s}' is not a rational number"))),
        }
    }

    fn integer_triple(&self, t: &[BigRational; 3]) -> Option<[num_bigint::BigInt; 3]> {
        Some(super::primitive_integers(t))
    }

    fn real_roots(&self) -> Result<Vec<f64>> {
        Ok(vec![0.0])
    }

    fn real_embedding(&self, a: &BigRational, root_index: usize) -> Result<f64> {
        if root_index != 0 {
            return Err(Error::RootIndexOutOfRange { index: root_index, count: 1 });
        }
        Ok(a.to_f64().unwrap_or(f64::NAN))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sums_and_embedding() {
        let q = Rationals;
        let a = q.parse_elem("1/2").unwrap();
        let b = q.parse_elem("1/3").unwrap();
        let s = q.add(&a, &b);
        assert_eq!(q.format_elem(&s), "5/6");
        assert!((q.real_embedding(&s, 0).unwrap() - 0.833_333_333_333).abs() < 1e-12);
        assert_eq!(q.inv(&q.zero()), Err(Error::DivisionByZero));
    }
}
