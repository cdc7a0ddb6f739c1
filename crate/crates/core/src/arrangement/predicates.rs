use super::incidence::for_each_group;
use super::{incidence_index, lambda_op, Arrangement, Selector};
use crate::error::{Error, Result};
use crate::field::ExactField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degeneracy {
    Empty,
    /// All lines concurrent.
    Trivial,
    /// A pencil of `d − 1` lines plus one line off its center.
    QuasiTrivial,
    /// Every line of a finite projective plane.
    FinitePlane,
    Other,
}

impl Degeneracy {
    pub fn name(self) -> &'static str {
        match self {
            Degeneracy::Empty => "empty",
            Degeneracy::Trivial => "trivial",
            Degeneracy::QuasiTrivial => "quasi-trivial",
            Degeneracy::FinitePlane => "finite-plane",
            Degeneracy::Other => "other",
        }
    }
}

pub fn classify_degenerate<F: ExactField>(l: &Arrangement<F>) -> Degeneracy {
    let d = l.len();
    if d == 0 {
        return Degeneracy::Empty;
    }
    if d <= 2 {
        return Degeneracy::Trivial;
    }
    let mut max = 0;
    for_each_group(l.field(), &l.triples(), |_, m| max = max.max(m.len()));
    if max == d {
        return Degeneracy::Trivial;
    }
    if max == d - 1 {
        return Degeneracy::QuasiTrivial;
    }
    if let Some(q) = l.field().elements().map(|e| e.len()) {
        if d == q * q + q + 1 {
            return Degeneracy::FinitePlane;
        }
    }
    Degeneracy::Other
}

/// Outcome of [`is_km_configuration`]: `r` k-points and `s` lines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KmConfiguration {
    pub holds: bool,
    pub r: usize,
    pub s: usize,
}

/// True iff every line of `L` holds exactly `m` of the `k`-points.
///
/// Every `k`-point lies on exactly `k` lines by definition, so the line
/// condition is the only one to test.
pub fn is_km_configuration<F: ExactField>(l: &Arrangement<F>, k: usize, m: usize) -> KmConfiguration {
    let idx = incidence_index(l);
    let mut per_line = vec![0usize; l.len()];
    let mut r = 0;
    for (_, lines) in &idx.entries {
        if lines.len() == k {
            r += 1;
            for &i in lines {
                per_line[i] += 1;
            }
        }
    }
    KmConfiguration {
        holds: r > 0 && per_line.iter().all(|&c| c == m),
        r,
        s: l.len(),
    }
}

/// Whether the `k`-points form one class when joined along lines of `L`.
pub fn configuration_connected<F: ExactField>(l: &Arrangement<F>, k: usize) -> bool {
    let idx = incidence_index(l);
    let kpts: Vec<&Vec<usize>> = idx.entries.iter().map(|e| &e.1).filter(|m| m.len() == k).collect();
    if kpts.is_empty() {
        return true;
    }
    let mut parent: Vec<usize> = (0..kpts.len()).collect();
    fn root(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut first_on_line: Vec<Option<usize>> = vec![None; l.len()];
    for (pi, lines) in kpts.iter().enumerate() {
        for &li in lines.iter() {
            match first_on_line[li] {
                None => first_on_line[li] = Some(pi),
                Some(o) => {
                    let (a, b) = (root(&mut parent, o), root(&mut parent, pi));
                    parent[a] = b;
                }
            }
        }
    }
    let r0 = root(&mut parent, 0);
    (0..kpts.len()).all(|i| root(&mut parent, i) == r0)
}

/// Checks `Λ_{n,m}(L) = ⋃_{a∈n, b∈m} Λ_{{a},{b}}(L)` for finite selectors.
pub fn lambda_decomposition_check<F: ExactField>(nsel: &Selector, msel: &Selector, l: &Arrangement<F>) -> Result<bool> {
    if !nsel.is_finite() || !msel.is_finite() {
        return Err(Error::InvalidSelector("decomposition needs finite selectors".into()));
    }
    let whole = lambda_op(nsel, msel, l);
    let mut union = Arrangement::new(l.field().clone());
    for &a in nsel.exact() {
        for &b in msel.exact() {
            union = union.union(&lambda_op(&Selector::exactly(a), &Selector::exactly(b), l));
        }
    }
    Ok(union == whole)
}
