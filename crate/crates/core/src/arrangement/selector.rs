use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A set of multiplicities `k ≥ 2`: finitely many exact values and an
/// optional "at least" threshold.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Selector {
    exact: BTreeSet<usize>,
    at_least: Option<usize>,
}

impl Selector {
    pub fn new(exact: impl IntoIterator<Item = usize>, at_least: Option<usize>) -> Result<Self> {
        let exact: BTreeSet<usize> = exact.into_iter().collect();
        if exact.is_empty() && at_least.is_none() {
            return Err(Error::InvalidSelector("empty selector".into()));
        }
        if exact.iter().chain(at_least.iter()).any(|&k| k < 2) {
            return Err(Error::InvalidSelector("multiplicities must be at least 2".into()));
        }
        Ok(Selector { exact, at_least })
    }

    /// `{k}`.
    pub fn exactly(k: usize) -> Self {
        Self::new([k], None).expect("k ≥ 2")
    }

    /// `{k, k+1, ...}`.
    pub fn at_least(k: usize) -> Self {
        Self::new([], Some(k)).expect("k ≥ 2")
    }

    pub fn of(ks: &[usize]) -> Self {
        Self::new(ks.iter().copied(), None).expect("valid multiplicities")
    }

    pub fn contains(&self, k: usize) -> bool {
        self.exact.contains(&k) || self.at_least.is_some_and(|a| k >= a)
    }

    /// Smallest member.
    pub fn min(&self) -> usize {
        self.exact.iter().chain(self.at_least.iter()).copied().min().expect("selector is nonempty")
    }

    pub fn is_finite(&self) -> bool {
        self.at_least.is_none()
    }

    pub fn exact(&self) -> &BTreeSet<usize> {
        &self.exact
    }

    pub fn threshold(&self) -> Option<usize> {
        self.at_least
    }

    /// Every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &Selector) -> bool {
        let exact_ok = self.exact.iter().all(|&k| other.contains(k));
        let tail_ok = match (self.at_least, other.at_least) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(a), Some(b)) => a >= b || (a..b).all(|k| other.exact.contains(&k)),
        };
        exact_ok && tail_ok
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.exact.iter().map(|k| k.to_string()).collect();
        if let Some(a) = self.at_least {
            parts.push(format!(">={a}"));
        }
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut exact = Vec::new();
        let mut at_least: Option<usize> = None;
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::InvalidSelector(format!("bad selector item '{part}'"));
            if let Some(rest) = part.strip_prefix(">=").or_else(|| part.strip_prefix('≥')) {
                let k: usize = rest.trim().parse().map_err(|_| bad())?;
                at_least = Some(at_least.map_or(k, |a| a.min(k)));
            } else {
                exact.push(part.parse::<usize>().map_err(|_| bad())?);
            }
        }
        Selector::new(exact, at_least)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_membership() {
        let s: Selector = "2, >=5".parse().unwrap();
        assert!(s.contains(2) && !s.contains(3) && s.contains(7));
        assert_eq!(s.to_string(), "2,>=5");
        assert_eq!(s.min(), 2);
        assert!("1".parse::<Selector>().is_err());
        assert!("".parse::<Selector>().is_err());
    }

    #[test]
    fn subsets() {
        assert!(Selector::exactly(3).is_subset(&Selector::at_least(2)));
        assert!(!Selector::at_least(2).is_subset(&Selector::at_least(3)));
        assert!(Selector::at_least(3).is_subset(&"2,>=3".parse().unwrap()));
        assert!(Selector::at_least(2).is_subset(&"2,>=3".parse().unwrap()));
    }
}
