use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{poly, text, ExactField, FieldSpec};
use crate::error::{Error, Result};

#[derive(Debug)]
struct Data {
    /// Monic, low degree first.
    min_poly: Vec<BigRational>,
    deg: usize,
    /// `x^(deg+i) mod f` for `i < deg - 1`.
    reductions: Vec<Vec<BigRational>>,
    real_roots: Vec<f64>,
}

/// `Q[x]/(f)` for a monic squarefree `f` of degree at least 2.
///
/// Elements are residues of degree below `deg f`, stored low degree first
/// without trailing zeros (zero is the empty vector).
#[derive(Debug, Clone)]
pub struct NumberField {
    data: Arc<Data>,
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data.min_poly == other.data.min_poly
    }
}

impl Eq for NumberField {}

impl NumberField {
    pub fn new(min_poly: Vec<BigRational>) -> Result<Self> {
        let f = poly::trimmed(&min_poly);
        let shown = text::format_poly(&f);
        let deg = poly::degree(&f).unwrap_or(0);
        if deg < 2 {
            return Err(Error::InvalidFieldSpec(format!("{shown}: degree must be at least 2")));
        }
        if !f[deg].is_one() {
            return Err(Error::InvalidFieldSpec(format!("{shown}: not monic")));
        }
        let g = poly::gcd(&f, &poly::derivative(&f));
        if poly::degree(&g) != Some(0) {
            return Err(Error::InvalidFieldSpec(format!("{shown}: not squarefree")));
        }
        if deg <= 4 && has_rational_root(&f) {
            return Err(Error::InvalidFieldSpec(format!("{shown}: has a rational root")));
        }
        let mut reductions = Vec::new();
        // x^deg = -(f - x^deg)
        let mut cur: Vec<BigRational> = f[..deg].iter().map(|c| -c).collect();
        poly::trim(&mut cur);
        for _ in 0..deg.saturating_sub(1) {
            reductions.push(cur.clone());
            let mut shifted = vec![BigRational::zero()];
            shifted.extend(cur.iter().cloned());
            let top = if shifted.len() > deg { shifted.pop().unwrap() } else { BigRational::zero() };
            cur = poly::add(&shifted, &poly::scale(&reductions[0], &top));
        }
        let fl: Vec<f64> = f.iter().map(|c| c.to_f64().unwrap_or(0.0)).collect();
        let real_roots = real_roots_f64(&fl);
        Ok(NumberField {
            data: Arc::new(Data {
                min_poly: f,
                deg,
                reductions,
                real_roots,
            }),
        })
    }

    pub fn min_poly(&self) -> &[BigRational] {
        &self.data.min_poly
    }

    pub fn degree(&self) -> usize {
        self.data.deg
    }

    /// Builds an element from a coefficient list, reducing modulo `f`.
    pub fn elem(&self, coeffs: &[BigRational]) -> Vec<BigRational> {
        let c = poly::trimmed(coeffs);
        if c.len() <= self.data.deg {
            c
        } else {
            poly::div_rem(&c, &self.data.min_poly).1
        }
    }

    fn reduce_product(&self, prod: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.data.deg;
        if prod.len() <= d {
            return prod;
        }
        let mut out: Vec<BigRational> = prod[..d].to_vec();
        for (i, c) in prod[d..].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, r) in self.data.reductions[i].iter().enumerate() {
                out[j] += c * r;
            }
        }
        poly::trim(&mut out);
        out
    }
}

fn has_rational_root(f: &[BigRational]) -> bool {
    // Clear denominators, then apply the rational root test.
    let l = f.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.iter().map(|c| (c * BigRational::from_integer(l.clone())).to_integer()).collect();
    if ints[0].is_zero() {
        return true;
    }
    let a0 = ints[0].abs().to_u64();
    let an = ints.last().unwrap().abs().to_u64();
    let (Some(a0), Some(an)) = (a0, an) else {
        return false;
    };
    if a0 > 1_000_000 || an > 1_000_000 {
        return false;
    }
    let divisors = |n: u64| (1..=n).filter(move |d| n % d == 0);
    for p in divisors(a0) {
        for q in divisors(an) {
            for s in [1i64, -1] {
                let r = BigRational::new(BigInt::from(p) * s, BigInt::from(q));
                let fr: BigRational = poly::eval(f, &r);
                if fr.is_zero() {
                    return true;
                }
            }
        }
    }
    false
}

/// Real roots of a squarefree real polynomial (low degree first), increasing.
pub(crate) fn real_roots_f64(f: &[f64]) -> Vec<f64> {
    let mut f = f.to_vec();
    while f.len() > 1 && *f.last().unwrap() == 0.0 {
        f.pop();
    }
    let n = f.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![-f[0] / f[1]];
    }
    let lead = f[n];
    let bound = 1.0 + f[..n].iter().map(|c| (c / lead).abs()).fold(0.0, f64::max);
    let df: Vec<f64> = f.iter().enumerate().skip(1).map(|(i, c)| c * i as f64).collect();
    let mut cuts = vec![-bound];
    cuts.extend(real_roots_f64(&df).into_iter().filter(|r| r.abs() < bound));
    cuts.push(bound);
    let eval = |x: f64| f.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let mut roots = Vec::new();
    for w in cuts.windows(2) {
        let (mut lo, mut hi) = (w[0], w[1]);
        let (flo, fhi) = (eval(lo), eval(hi));
        if flo == 0.0 {
            if roots.last().map_or(true, |r: &f64| (r - lo).abs() > 1e-12) {
                roots.push(lo);
            }
            continue;
        }
        if flo.signum() == fhi.signum() {
            continue;
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = eval(mid);
            if fm == 0.0 {
                lo = mid;
                hi = mid;
                break;
            }
            if fm.signum() == flo.signum() {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        roots.push(0.5 * (lo + hi));
    }
    roots
}

impl ExactField for NumberField {
    type Elem = Vec<BigRational>;

    fn spec(&self) -> FieldSpec {
        FieldSpec::number_field(self.data.min_poly.clone())
    }

    fn zero(&self) -> Self::Elem {
        Vec::new()
    }

    fn one(&self) -> Self::Elem {
        vec![BigRational::one()]
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        poly::trimmed(&[BigRational::from_integer(n.into())])
    }

    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem> {
        Ok(poly::trimmed(std::slice::from_ref(q)))
    }

    fn generator(&self) -> Option<Self::Elem> {
        Some(vec![BigRational::zero(), BigRational::one()])
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.is_empty()
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::add(a, b)
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        poly::sub(a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        if a.len() == 1 {
            return poly::scale(b, &a[0]);
        }
        if b.len() == 1 {
            return poly::scale(a, &b[0]);
        }
        self.reduce_product(poly::mul(a, b))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|c| -c).collect()
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem> {
        if a.is_empty() {
            return Err(Error::DivisionByZero);
        }
        if a.len() == 1 {
            return Ok(vec![a[0].recip()]);
        }
        let f = &self.data.min_poly;
        if self.data.deg == 2 {
            // (a0 + a1 x)^-1 for f = x^2 + p x + q via the norm.
            let (p, q) = (&f[1], &f[0]);
            let (a0, a1) = (&a[0], &a[1]);
            let norm = a0 * a0 - a0 * a1 * p + a1 * a1 * q;
            if norm.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let c0 = (a0 - a1 * p) / &norm;
            let c1 = -a1 / &norm;
            return Ok(poly::trimmed(&[c0, c1]));
        }
        let (g, s) = poly::ext_gcd_inverse_part(a, f);
        if poly::degree(&g) != Some(0) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.elem(&s))
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn format_elem(&self, a: &Self::Elem) -> String {
        text::format_poly(a)
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem> {
        Ok(self.elem(&text::parse_poly(s)?))
    }

    fn real_roots(&self) -> Result<Vec<f64>> {
        if self.data.real_roots.is_empty() {
            Err(Error::NoRealRoot)
        } else {
            Ok(self.data.real_roots.clone())
        }
    }

    fn real_embedding(&self, a: &Self::Elem, root_index: usize) -> Result<f64> {
        let roots = &self.data.real_roots;
        if roots.is_empty() {
            return Err(Error::NoRealRoot);
        }
        let r = *roots.get(root_index).ok_or(Error::RootIndexOutOfRange {
            index: root_index,
            count: roots.len(),
        })?;
        Ok(a.iter().rev().fold(0.0, |acc, c| acc * r + c.to_f64().unwrap_or(f64::NAN)))
    }

    fn validate(&self, a: &Self::Elem) -> Result<()> {
        if a.len() > self.data.deg || a.last().is_some_and(|c| c.is_zero()) {
            return Err(Error::Parse(format!("non-canonical residue {a:?}")));
        }
        Ok(())
    }
}
