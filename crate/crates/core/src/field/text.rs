//! Text form of polynomials in `x` with rational coefficients, e.g.
//! `x^2+x+1`, `-1/2*x+3`, `2x^3-x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Parses a polynomial into coefficients, low degree first (trimmed).
pub fn parse_poly(s: &str) -> Result<Vec<BigRational>> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let t = t.strip_prefix('(').and_then(|u| u.strip_suffix(')')).map(str::to_string).unwrap_or(t);
    if t.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    let bytes = t.as_bytes();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' && bytes[i - 1] != b'/' {
            terms.push(&t[start..i]);
            start = i;
        }
    }
    terms.push(&t[start..]);
    let mut coeffs: Vec<BigRational> = Vec::new();
    for term in terms {
        let (c, e) = parse_term(term).ok_or_else(|| Error::Parse(format!("bad term '{term}' in '{s}'")))?;
        if coeffs.len() <= e {
            coeffs.resize(e + 1, BigRational::zero());
        }
        coeffs[e] += c;
    }
    super::poly::trim(&mut coeffs);
    Ok(coeffs)
}

fn parse_term(term: &str) -> Option<(BigRational, usize)> {
    let (neg, body) = match term.as_bytes().first()? {
        b'-' => (true, &term[1..]),
        b'+' => (false, &term[1..]),
        _ => (false, term),
    };
    let (coef_s, exp) = match body.find('x') {
        None => (body, 0usize),
        Some(pos) => {
            let rest = &body[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')?.parse().ok()?
            };
            let c = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
            (c, exp)
        }
    };
    let coef = if coef_s.is_empty() {
        if exp == 0 {
            return None;
        }
        BigRational::one()
    } else {
        parse_rational(coef_s)?
    };
    Some((if neg { -coef } else { coef }, exp))
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.strip_prefix('(').and_then(|u| u.strip_suffix(')')).unwrap_or(s);
    match s.split_once('/') {
        None => Some(BigRational::from_integer(s.parse::<BigInt>().ok()?)),
        Some((a, b)) => {
            let d: BigInt = b.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(a.parse().ok()?, d))
        }
    }
}

/// Formats coefficients (low degree first) highest degree first.
pub fn format_poly(coeffs: &[BigRational]) -> String {
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        let mono = match e {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{e}"),
        };
        if e == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{a}*{mono}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
