use std::collections::BTreeMap;
use std::fmt;

use num_integer::Roots;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::incidence::multiplicity_counts;
use super::predicates::{classify_degenerate, Degeneracy};
use super::Arrangement;
use crate::error::{Error, Result};
use crate::field::ExactField;

/// Line count and the number `t_k` of points of each multiplicity `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Profile {
    pub d: usize,
    /// Only nonzero counts are stored.
    pub t: BTreeMap<usize, usize>,
}

impl Profile {
    pub fn new(d: usize, t: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Profile {
            d,
            t: t.into_iter().filter(|&(_, n)| n > 0).collect(),
        }
    }

    pub fn t(&self, k: usize) -> usize {
        self.t.get(&k).copied().unwrap_or(0)
    }

    /// Number of singular points.
    pub fn points(&self) -> usize {
        self.t.values().sum()
    }

    /// `Σ C(k,2) t_k == C(d,2)`.
    pub fn is_consistent(&self) -> bool {
        if self.d < 2 {
            return self.t.is_empty();
        }
        let pairs: usize = self.t.iter().map(|(&k, &n)| k * (k - 1) / 2 * n).sum();
        pairs == self.d * (self.d - 1) / 2
    }

    /// `H = (d² − Σ m² t_m) / Σ t_m`.
    pub fn h_constant(&self) -> Result<BigRational> {
        let pts = self.points();
        if pts == 0 {
            return Err(Error::NoSingularPoints);
        }
        let d = self.d as i64;
        let sq: i64 = self.t.iter().map(|(&k, &n)| (k * k * n) as i64).sum();
        Ok(BigRational::new((d * d - sq).into(), (pts as i64).into()))
    }

    /// `H` as a float.
    pub fn h_approx(&self) -> Option<f64> {
        self.h_constant().ok().and_then(|h| h.to_f64())
    }

    /// Whether the profile has `d` lines and exactly the counts `t`.
    pub fn matches(&self, d: usize, t: &[(usize, usize)]) -> bool {
        *self == Profile::new(d, t.iter().copied())
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={}", self.d)?;
        for (k, n) in &self.t {
            write!(f, " t{k}={n}")?;
        }
        Ok(())
    }
}

pub fn profile<F: ExactField>(l: &Arrangement<F>) -> Profile {
    Profile {
        d: l.len(),
        t: multiplicity_counts(l.field(), &l.triples()),
    }
}

/// A signed slack `LHS − RHS` and whether the inequality applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slack {
    pub value: i64,
    pub applicable: bool,
    /// Applies formally but is only reported (positive characteristic).
    pub informational: bool,
}

/// Slacks of the classical inequalities for one arrangement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InequalityReport {
    pub profile: Profile,
    pub class: Degeneracy,
    /// `t₂ + t₃ − d − Σ_{k≥5} (k−4) t_k`.
    pub hirzebruch: Slack,
    /// `t₂ − 3 − Σ_{r≥3} (r−3) t_r`.
    pub melchior: Slack,
    /// `3 + Σ_r (r−3) t_r`; zero exactly for combinatorially simplicial profiles.
    pub simpliciality: Slack,
    /// Number of singular points minus `d`.
    pub de_bruijn_erdos: Slack,
}

pub fn inequality_report<F: ExactField>(l: &Arrangement<F>, real: bool) -> InequalityReport {
    let pr = profile(l);
    let class = classify_degenerate(l);
    let d = pr.d as i64;
    let t = |k: usize| pr.t(k) as i64;
    let positive_char = l.field().characteristic() > 0;
    let nondegenerate = !matches!(class, Degeneracy::Empty | Degeneracy::Trivial | Degeneracy::QuasiTrivial);
    let not_pencil = !matches!(class, Degeneracy::Empty | Degeneracy::Trivial);
    let sum_over = |from: usize, shift: i64| -> i64 { pr.t.iter().filter(|(&k, _)| k >= from).map(|(&k, &n)| (k as i64 - shift) * n as i64).sum() };
    let hirz = t(2) + t(3) - d - sum_over(5, 4);
    let melchior = t(2) - 3 - sum_over(3, 3);
    let simp = 3 + sum_over(2, 3);
    let dbe = pr.points() as i64 - d;
    InequalityReport {
        hirzebruch: Slack {
            value: hirz,
            applicable: nondegenerate,
            informational: positive_char,
        },
        melchior: Slack {
            value: melchior,
            applicable: real && !positive_char && pr.d >= 3 && not_pencil,
            informational: positive_char,
        },
        simpliciality: Slack {
            value: simp,
            applicable: pr.d >= 3 && not_pencil,
            informational: false,
        },
        de_bruijn_erdos: Slack {
            value: dbe,
            applicable: pr.d >= 3 && not_pencil,
            informational: false,
        },
        profile: pr,
        class,
    }
}

/// Integer roots of `T² + (1−d)T + 1 − d + Σ (k−1) t_k`, when it splits over `Z`.
pub fn freeness_necessary(pr: &Profile) -> Option<(i64, i64)> {
    let d = pr.d as i64;
    let b = 1 - d;
    let c = 1 - d + pr.t.iter().map(|(&k, &n)| (k as i64 - 1) * n as i64).sum::<i64>();
    let disc = b * b - 4 * c;
    if disc < 0 {
        return None;
    }
    let s = disc.sqrt();
    if s * s != disc || (-b + s) % 2 != 0 {
        return None;
    }
    Some(((-b - s) / 2, (-b + s) / 2))
}
