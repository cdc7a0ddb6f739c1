//! Dense univariate polynomials over any `num_traits::Num` coefficient type.
//!
//! Coefficients are stored low degree first. The zero polynomial is the
//! empty vector; every other polynomial has a nonzero last coefficient.

use num_traits::Num;

pub fn trim<C: Num>(p: &mut Vec<C>) {
    while matches!(p.last(), Some(c) if c.is_zero()) {
        p.pop();
    }
}

pub fn trimmed<C: Num + Clone>(p: &[C]) -> Vec<C> {
    let mut v = p.to_vec();
    trim(&mut v);
    v
}

/// Degree, or `None` for the zero polynomial.
pub fn degree<C: Num>(p: &[C]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn add<C: Num + Clone>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(C::zero);
        let y = b.get(i).cloned().unwrap_or_else(C::zero);
        out.push(x + y);
    }
    trim(&mut out);
    out
}

pub fn sub<C: Num + Clone>(a: &[C], b: &[C]) -> Vec<C> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(C::zero);
        let y = b.get(i).cloned().unwrap_or_else(C::zero);
        out.push(x - y);
    }
    trim(&mut out);
    out
}

pub fn mul<C: Num + Clone>(a: &[C], b: &[C]) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(&mut out);
    out
}

pub fn scale<C: Num + Clone>(a: &[C], s: &C) -> Vec<C> {
    let mut out: Vec<C> = a.iter().map(|c| c.clone() * s.clone()).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder. The coefficient type must divide exactly by the
/// leading coefficient of `b` (a field, or a monic divisor over a ring).
pub fn div_rem<C: Num + Clone>(a: &[C], b: &[C]) -> (Vec<C>, Vec<C>) {
    let db = degree(b).expect("polynomial division by zero");
    let lead = b[db].clone();
    let mut rem = trimmed(a);
    let Some(da) = degree(&rem) else {
        return (Vec::new(), Vec::new());
    };
    if da < db {
        return (Vec::new(), rem);
    }
    let mut quot = vec![C::zero(); da - db + 1];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let coef = rem[dr].clone() / lead.clone();
        let shift = dr - db;
        for (i, c) in b.iter().enumerate().take(db + 1) {
            rem[i + shift] = rem[i + shift].clone() - coef.clone() * c.clone();
        }
        quot[shift] = coef;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub fn derivative<C: Num + Clone>(a: &[C]) -> Vec<C> {
    let mut out = Vec::with_capacity(a.len().saturating_sub(1));
    let mut k = C::one();
    for c in a.iter().skip(1) {
        out.push(c.clone() * k.clone());
        k = k + C::one();
    }
    trim(&mut out);
    out
}

pub fn make_monic<C: Num + Clone>(a: &[C]) -> Vec<C> {
    match degree(a) {
        None => Vec::new(),
        Some(d) => {
            let lead = a[d].clone();
            a[..=d].iter().map(|c| c.clone() / lead.clone()).collect()
        }
    }
}

/// Monic gcd over a field of coefficients.
pub fn gcd<C: Num + Clone>(a: &[C], b: &[C]) -> Vec<C> {
    let mut x = trimmed(a);
    let mut y = trimmed(b);
    while !y.is_empty() {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    make_monic(&x)
}

/// Extended Euclid: returns `(g, s)` with `s·a ≡ g (mod m)`, `g` monic.
pub fn ext_gcd_inverse_part<C: Num + Clone>(a: &[C], m: &[C]) -> (Vec<C>, Vec<C>) {
    let mut r0 = trimmed(m);
    let mut r1 = trimmed(a);
    let mut s0: Vec<C> = Vec::new();
    let mut s1: Vec<C> = vec![C::one()];
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s = sub(&s0, &mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    match degree(&r0) {
        None => (Vec::new(), Vec::new()),
        Some(d) => {
            let lead = r0[d].clone();
            let g = make_monic(&r0);
            let s = s0.iter().map(|c| c.clone() / lead.clone()).collect();
            (g, s)
        }
    }
}

pub fn eval<C: Num + Clone>(a: &[C], x: &C) -> C {
    a.iter()
        .rev()
        .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
}
