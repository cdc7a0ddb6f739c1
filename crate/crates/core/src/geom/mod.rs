//! Points, lines and conics of the projective plane over an exact field.

mod conic;
pub mod linalg;
mod projectivity;

use crate::error::{Error, Result};
use crate::field::ExactField;

pub use conic::{conic_contains, conic_through, rich_conics, Conic, RichConic};
pub use projectivity::{projectivity_from_line_frames, Projectivity};

pub type Triple<E> = [E; 3];

/// Scales a triple so that its leftmost nonzero entry is 1.
pub fn normalize<F: ExactField>(field: &F, v: Triple<F::Elem>) -> Result<Triple<F::Elem>> {
    let i = v.iter().position(|c| !field.is_zero(c)).ok_or(Error::ZeroTriple)?;
    if field.is_one(&v[i]) {
        return Ok(v);
    }
    let s = field.inv(&v[i])?;
    let [a, b, c] = v;
    Ok([field.mul(&a, &s), field.mul(&b, &s), field.mul(&c, &s)])
}

pub fn cross<F: ExactField>(field: &F, a: &Triple<F::Elem>, b: &Triple<F::Elem>) -> Triple<F::Elem> {
    let m = |x: &F::Elem, y: &F::Elem, z: &F::Elem, w: &F::Elem| field.sub(&field.mul(x, y), &field.mul(z, w));
    [
        m(&a[1], &b[2], &a[2], &b[1]),
        m(&a[2], &b[0], &a[0], &b[2]),
        m(&a[0], &b[1], &a[1], &b[0]),
    ]
}

pub fn dot<F: ExactField>(field: &F, a: &Triple<F::Elem>, b: &Triple<F::Elem>) -> F::Elem {
    let s = field.add(&field.mul(&a[0], &b[0]), &field.mul(&a[1], &b[1]));
    field.add(&s, &field.mul(&a[2], &b[2]))
}

/// Normalized cross product, or `None` when the inputs are proportional.
pub fn normalized_cross<F: ExactField>(field: &F, a: &Triple<F::Elem>, b: &Triple<F::Elem>) -> Option<Triple<F::Elem>> {
    normalize(field, cross(field, a, b)).ok()
}

macro_rules! proj_type {
    ($name:ident, $what:literal) => {
        #[doc = concat!("A ", $what, " of the projective plane in normalized homogeneous coordinates.")]
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name<E> {
            coords: [E; 3],
        }

        impl<E: Clone> $name<E> {
            pub fn new<F: ExactField<Elem = E>>(field: &F, coords: [E; 3]) -> Result<Self> {
                Ok($name {
                    coords: normalize(field, coords)?,
                })
            }

            pub fn from_ints<F: ExactField<Elem = E>>(field: &F, c: [i64; 3]) -> Result<Self> {
                Self::new(field, c.map(|x| field.from_i64(x)))
            }

            /// Wraps an already normalized triple.
            pub(crate) fn from_normalized(coords: [E; 3]) -> Self {
                $name { coords }
            }

            pub fn coords(&self) -> &[E; 3] {
                &self.coords
            }

            pub fn into_coords(self) -> [E; 3] {
                self.coords
            }
        }
    };
}

proj_type!(ProjPoint, "point");
proj_type!(ProjLine, "line");

/// The line through two distinct points.
pub fn join<F: ExactField>(field: &F, p: &ProjPoint<F::Elem>, q: &ProjPoint<F::Elem>) -> Result<ProjLine<F::Elem>> {
    normalized_cross(field, &p.coords, &q.coords)
        .map(ProjLine::from_normalized)
        .ok_or(Error::IdenticalInputs)
}

/// The intersection point of two distinct lines.
pub fn meet<F: ExactField>(field: &F, l: &ProjLine<F::Elem>, m: &ProjLine<F::Elem>) -> Result<ProjPoint<F::Elem>> {
    normalized_cross(field, &l.coords, &m.coords)
        .map(ProjPoint::from_normalized)
        .ok_or(Error::IdenticalInputs)
}

pub fn incident<F: ExactField>(field: &F, p: &ProjPoint<F::Elem>, l: &ProjLine<F::Elem>) -> bool {
    field.is_zero(&dot(field, &p.coords, &l.coords))
}

/// The line with the point's coordinates as coefficients.
pub fn dual_line<E: Clone>(p: &ProjPoint<E>) -> ProjLine<E> {
    ProjLine::from_normalized(p.coords.clone())
}

/// The point with the line's coefficients as coordinates.
pub fn dual_point<E: Clone>(l: &ProjLine<E>) -> ProjPoint<E> {
    ProjPoint::from_normalized(l.coords.clone())
}

pub fn format_triple<F: ExactField>(field: &F, t: &Triple<F::Elem>) -> [String; 3] {
    [field.format_elem(&t[0]), field.format_elem(&t[1]), field.format_elem(&t[2])]
}

pub fn parse_triple<F: ExactField, S: AsRef<str>>(field: &F, t: &[S]) -> Result<Triple<F::Elem>> {
    if t.len() != 3 {
        return Err(Error::Parse(format!("expected 3 coordinates, got {}", t.len())));
    }
    Ok([
        field.parse_elem(t[0].as_ref())?,
        field.parse_elem(t[1].as_ref())?,
        field.parse_elem(t[2].as_ref())?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{AnyField, Rationals};

    #[test]
    fn join_and_meet() {
        let q = Rationals;
        let p = ProjPoint::from_ints(&q, [1, 0, 0]).unwrap();
        let r = ProjPoint::from_ints(&q, [0, 1, 0]).unwrap();
        assert_eq!(join(&q, &p, &r).unwrap(), ProjLine::from_ints(&q, [0, 0, 1]).unwrap());
        let x = ProjLine::from_ints(&q, [1, 0, 0]).unwrap();
        let y = ProjLine::from_ints(&q, [0, 1, 0]).unwrap();
        assert_eq!(meet(&q, &x, &y).unwrap(), ProjPoint::from_ints(&q, [0, 0, 1]).unwrap());
        assert_eq!(join(&q, &p, &p), Err(Error::IdenticalInputs));
    }

    #[test]
    fn incidence_over_eisenstein() {
        let k = AnyField::parse("Q[x]/(x^2+x+1)").unwrap();
        let w = k.generator().unwrap();
        let (zero, one) = (k.zero(), k.one());
        // −ωx + z and −x + y meet at (1:1:ω).
        let l = ProjLine::new(&k, [k.neg(&w), zero.clone(), one.clone()]).unwrap();
        let m = ProjLine::new(&k, [k.neg(&one), one.clone(), zero.clone()]).unwrap();
        let p = meet(&k, &l, &m).unwrap();
        assert_eq!(p, ProjPoint::new(&k, [one.clone(), one.clone(), w.clone()]).unwrap());
        let n = ProjLine::new(&k, [zero, k.neg(&w), one]).unwrap();
        assert!(incident(&k, &p, &n));
    }

    #[test]
    fn simple_incidence() {
        let q = Rationals;
        let p = ProjPoint::from_ints(&q, [0, 0, 1]).unwrap();
        assert!(!incident(&q, &p, &ProjLine::from_ints(&q, [0, 0, 1]).unwrap()));
        let p = ProjPoint::from_ints(&q, [1, 1, 1]).unwrap();
        assert!(incident(&q, &p, &ProjLine::from_ints(&q, [1, -1, 0]).unwrap()));
        let x = ProjLine::from_ints(&q, [1, 0, 0]).unwrap();
        assert_eq!(dual_point(&x), ProjPoint::from_ints(&q, [1, 0, 0]).unwrap());
        assert_eq!(dual_line(&dual_point(&x)), x);
    }

    #[test]
    fn normalization_is_canonical() {
        let q = Rationals;
        let a = ProjPoint::from_ints(&q, [0, 3, -6]).unwrap();
        let b = ProjPoint::from_ints(&q, [0, -1, 2]).unwrap();
        assert_eq!(a, b);
        assert_eq!(ProjPoint::from_ints(&q, [0, 0, 0]), Err(Error::ZeroTriple));
    }
}
