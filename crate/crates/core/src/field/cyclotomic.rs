//! Cyclotomic polynomials and the minimal polynomials of `2cos(2π/m)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly;
use crate::error::{Error, Result};

fn phi_int(n: u32) -> Vec<BigInt> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let (q, r) = poly::div_rem(&num, &phi_int(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

/// The `n`-th cyclotomic polynomial, low degree first, for `2 ≤ n ≤ 30`.
pub fn cyclotomic_minpoly(n: u32) -> Result<Vec<BigInt>> {
    if !(2..=30).contains(&n) {
        return Err(Error::OutOfRange(format!("cyclotomic index {n} not in 2..=30")));
    }
    Ok(phi_int(n))
}

/// Minimal polynomial of `2cos(2π/m)` over `Q`, low degree first.
///
/// Obtained by rewriting the palindromic `Φ_m` in `y = x + 1/x`. For
/// `m ∈ {3, 4, 6}` the result has degree 1.
pub fn real_cyclotomic_minpoly(m: u32) -> Result<Vec<BigRational>> {
    if !(3..=60).contains(&m) {
        return Err(Error::OutOfRange(format!("polygon order {m} not in 3..=60")));
    }
    let phi = phi_int(m);
    let r = (phi.len() - 1) / 2;
    let to_q = |v: &[BigInt]| -> Vec<BigRational> { v.iter().map(|c| BigRational::from_integer(c.clone())).collect() };
    // D_0 = 2, D_1 = y, D_k = y D_{k-1} - D_{k-2} with x^k + x^-k = D_k(y).
    let y = vec![BigRational::zero(), BigRational::one()];
    let mut d_prev = vec![BigRational::from_integer(2.into())];
    let mut d_cur = y.clone();
    let coeffs = to_q(&phi);
    let mut out = poly::trimmed(&coeffs[r..=r]);
    for k in 1..=r {
        out = poly::add(&out, &poly::scale(&d_cur, &coeffs[r + k]));
        let next = poly::sub(&poly::mul(&y, &d_cur), &d_prev);
        d_prev = d_cur;
        d_cur = next;
    }
    Ok(out)
}
