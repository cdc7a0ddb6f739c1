use std::collections::BTreeMap;

use super::linalg::{det3, nullspace};
use super::ProjPoint;
use crate::error::{Error, Result};
use crate::field::ExactField;

/// `a x² + b y² + c z² + d xy + e xz + f yz = 0`, coefficients normalized so
/// that the first nonzero one is 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Conic<E> {
    coeffs: [E; 6],
}

/// A conic found by [`rich_conics`] with the indices of the points it holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RichConic<E> {
    pub conic: Conic<E>,
    pub points: Vec<usize>,
    pub irreducible: bool,
}

fn monomials<F: ExactField>(f: &F, p: &ProjPoint<F::Elem>) -> [F::Elem; 6] {
    let [x, y, z] = p.coords();
    [
        f.mul(x, x),
        f.mul(y, y),
        f.mul(z, z),
        f.mul(x, y),
        f.mul(x, z),
        f.mul(y, z),
    ]
}

impl<E: Clone> Conic<E> {
    pub fn new<F: ExactField<Elem = E>>(f: &F, coeffs: [E; 6]) -> Result<Self> {
        let i = coeffs.iter().position(|c| !f.is_zero(c)).ok_or(Error::ZeroTriple)?;
        let s = f.inv(&coeffs[i])?;
        Ok(Conic {
            coeffs: coeffs.map(|c| f.mul(&c, &s)),
        })
    }

    pub fn coeffs(&self) -> &[E; 6] {
        &self.coeffs
    }

    /// Nonzero determinant of the associated symmetric form.
    pub fn is_irreducible<F: ExactField<Elem = E>>(&self, f: &F) -> bool {
        let [a, b, c, d, e, g] = &self.coeffs;
        let two = f.from_i64(2);
        let m = [
            [f.mul(&two, a), d.clone(), e.clone()],
            [d.clone(), f.mul(&two, b), g.clone()],
            [e.clone(), g.clone(), f.mul(&two, c)],
        ];
        !f.is_zero(&det3(f, &m))
    }
}

pub fn conic_contains<F: ExactField>(f: &F, c: &Conic<F::Elem>, p: &ProjPoint<F::Elem>) -> bool {
    let m = monomials(f, p);
    let s = m.iter().zip(c.coeffs()).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)));
    f.is_zero(&s)
}

/// The unique conic through five points.
pub fn conic_through<F: ExactField>(f: &F, pts: &[ProjPoint<F::Elem>; 5]) -> Result<Conic<F::Elem>> {
    let rows: Vec<Vec<F::Elem>> = pts.iter().map(|p| monomials(f, p).to_vec()).collect();
    let ns = nullspace(f, &rows);
    if ns.len() != 1 {
        return Err(Error::NonUniqueConic);
    }
    let v = &ns[0];
    Conic::new(f, std::array::from_fn(|i| v[i].clone()))
}

pub const RICH_CONIC_LIMIT: usize = 30;

/// Conics through five of the points that contain at least `min` of them.
pub fn rich_conics<F: ExactField>(f: &F, pts: &[ProjPoint<F::Elem>], min: usize) -> Result<Vec<RichConic<F::Elem>>> {
    if pts.len() > RICH_CONIC_LIMIT {
        return Err(Error::TooLarge(format!(
            "{} points (conic search is limited to {RICH_CONIC_LIMIT})",
            pts.len()
        )));
    }
    let n = pts.len();
    let mut found: BTreeMap<Conic<F::Elem>, Vec<usize>> = BTreeMap::new();
    let mut idx = [0usize, 1, 2, 3, 4];
    if n < 5 {
        return Ok(Vec::new());
    }
    loop {
        let five: [ProjPoint<F::Elem>; 5] = idx.map(|i| pts[i].clone());
        if let Ok(c) = conic_through(f, &five) {
            if !found.contains_key(&c) {
                let on: Vec<usize> = (0..n).filter(|&i| conic_contains(f, &c, &pts[i])).collect();
                found.insert(c, on);
            }
        }
        // next 5-subset in lexicographic order
        let mut k = 5;
        loop {
            if k == 0 {
                let mut out: Vec<RichConic<F::Elem>> = found
                    .into_iter()
                    .filter(|(_, on)| on.len() >= min)
                    .map(|(conic, points)| RichConic {
                        irreducible: conic.is_irreducible(f),
                        conic,
                        points,
                    })
                    .collect();
                out.sort_by(|a, b| a.points.cmp(&b.points));
                return Ok(out);
            }
            k -= 1;
            if idx[k] < n - 5 + k {
                idx[k] += 1;
                for j in k + 1..5 {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}
