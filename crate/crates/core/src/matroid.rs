//! Rank-3 matroids of labelled line arrangements.
//!
//! A matroid is stored by its rank-2 flats of size at least 3; the
//! non-bases are exactly the 3-subsets of these flats.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::arrangement::{incidence::for_each_group, Arrangement};
use crate::error::{Error, Result};
use crate::field::ExactField;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matroid3 {
    m: usize,
    flats: Vec<Vec<usize>>,
}

impl Matroid3 {
    /// Checks that flats have at least 3 elements below `m` and meet
    /// pairwise in at most one element.
    pub fn from_flats(m: usize, flats: Vec<Vec<usize>>) -> Result<Self> {
        let mut flats: Vec<Vec<usize>> = flats
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        flats.sort();
        flats.dedup();
        for f in &flats {
            if f.len() < 3 {
                return Err(Error::Parse(format!("flat {f:?} has fewer than 3 elements")));
            }
            if f.iter().any(|&e| e >= m) {
                return Err(Error::OutOfRange(format!("flat {f:?} exceeds ground set of size {m}")));
            }
        }
        for (i, f) in flats.iter().enumerate() {
            for g in &flats[i + 1..] {
                if f.iter().filter(|e| g.binary_search(e).is_ok()).count() > 1 {
                    return Err(Error::Parse(format!("flats {f:?} and {g:?} share two elements")));
                }
            }
        }
        Ok(Matroid3 { m, flats })
    }

    /// The uniform matroid on `m` elements.
    pub fn uniform(m: usize) -> Self {
        Matroid3 { m, flats: Vec::new() }
    }

    pub fn ground_size(&self) -> usize {
        self.m
    }

    pub fn flats(&self) -> &[Vec<usize>] {
        &self.flats
    }

    pub fn is_non_basis(&self, a: usize, b: usize, c: usize) -> bool {
        self.flats
            .iter()
            .any(|f| [a, b, c].iter().all(|e| f.binary_search(e).is_ok()))
    }

    pub fn non_bases(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for f in &self.flats {
            for (i, &a) in f.iter().enumerate() {
                for (j, &b) in f.iter().enumerate().skip(i + 1) {
                    for &c in &f[j + 1..] {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// `k ↦ number of flats of size k`.
    pub fn flat_sizes(&self) -> BTreeMap<usize, usize> {
        let mut t = BTreeMap::new();
        for f in &self.flats {
            *t.entry(f.len()).or_insert(0) += 1;
        }
        t
    }

    /// Same matroid with only the flats of the given size.
    pub fn restrict_flat_size(&self, size: usize) -> Self {
        Matroid3 {
            m: self.m,
            flats: self.flats.iter().filter(|f| f.len() == size).cloned().collect(),
        }
    }

    /// Relabels element `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let flats = self.flats.iter().map(|f| f.iter().map(|&e| perm[e]).collect()).collect();
        Matroid3::from_flats(self.m, flats).expect("relabelling keeps flats valid")
    }

    pub fn to_json(&self) -> Value {
        json!({ "ground": self.m, "flats": self.flats })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("matroid JSON needs 'ground' and 'flats'".into());
        let m = v.get("ground").and_then(Value::as_u64).ok_or_else(bad)? as usize;
        let flats = v
            .get("flats")
            .and_then(Value::as_array)
            .ok_or_else(bad)?
            .iter()
            .map(|f| {
                f.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|e| e.as_u64().map(|e| e as usize).ok_or_else(bad))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matroid3::from_flats(m, flats)
    }

    /// Per element: sorted sizes of the flats through it.
    fn element_invariants(&self) -> Vec<Vec<usize>> {
        let mut inv = vec![Vec::new(); self.m];
        for f in &self.flats {
            for &e in f {
                inv[e].push(f.len());
            }
        }
        for v in &mut inv {
            v.sort_unstable();
        }
        inv
    }

    /// `table[a][b]` is the flat through `a` and `b`, if any.
    fn pair_table(&self) -> Vec<Vec<Option<usize>>> {
        let mut t = vec![vec![None; self.m]; self.m];
        for (id, f) in self.flats.iter().enumerate() {
            for &a in f {
                for &b in f {
                    if a != b {
                        t[a][b] = Some(id);
                    }
                }
            }
        }
        t
    }
}

/// Flats are the points of multiplicity at least 3, given by the (0-based)
/// indices of the lines through them.
pub fn extract_matroid<F: ExactField>(l: &Arrangement<F>) -> Matroid3 {
    let items: Vec<_> = l.iter().map(|x| x.coords().clone()).collect();
    let mut flats = Vec::new();
    for_each_group(l.field(), &items, |_, members| {
        if members.len() >= 3 {
            flats.push(members.to_vec());
        }
    });
    Matroid3::from_flats(l.len(), flats).expect("concurrency classes form flats")
}

struct Search<'a> {
    a: &'a Matroid3,
    b: &'a Matroid3,
    pa: Vec<Vec<Option<usize>>>,
    pb: Vec<Vec<Option<usize>>>,
    inv_a: Vec<Vec<usize>>,
    inv_b: Vec<Vec<usize>>,
    order: Vec<usize>,
    fwd: Vec<Option<usize>>,
    back: Vec<Option<usize>>,
}

impl Search<'_> {
    fn consistent(&self, x: usize, y: usize) -> bool {
        for (a, img) in self.fwd.iter().enumerate() {
            let Some(sa) = *img else { continue };
            match (self.pa[a][x], self.pb[sa][y]) {
                (None, None) => {}
                (Some(f), Some(g)) => {
                    let (f, g) = (&self.a.flats[f], &self.b.flats[g]);
                    if f.len() != g.len() {
                        return false;
                    }
                    if f.iter().any(|&e| self.fwd[e].is_some_and(|s| g.binary_search(&s).is_err())) {
                        return false;
                    }
                    if g.iter().any(|&e| self.back[e].is_some_and(|s| f.binary_search(&s).is_err())) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }

    fn run(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        for y in 0..self.b.m {
            if self.back[y].is_some() || self.inv_a[x] != self.inv_b[y] || !self.consistent(x, y) {
                continue;
            }
            self.fwd[x] = Some(y);
            self.back[y] = Some(x);
            if self.run(depth + 1) {
                return true;
            }
            self.fwd[x] = None;
            self.back[y] = None;
        }
        false
    }
}

/// A bijection `σ` of ground sets sending the flats of `a` exactly onto the
/// flats of `b`, as the vector `i ↦ σ(i)`.
pub fn matroid_isomorphic(a: &Matroid3, b: &Matroid3) -> Option<Vec<usize>> {
    if a.m != b.m || a.flat_sizes() != b.flat_sizes() {
        return None;
    }
    let (inv_a, inv_b) = (a.element_invariants(), b.element_invariants());
    let mut sa = inv_a.clone();
    let mut sb = inv_b.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    // Visit elements so that each new one shares a flat with earlier ones
    // whenever possible, starting from the richest.
    let pa = a.pair_table();
    let mut order: Vec<usize> = Vec::with_capacity(a.m);
    let mut placed = vec![false; a.m];
    while order.len() < a.m {
        let next = (0..a.m)
            .filter(|&e| !placed[e])
            .max_by_key(|&e| {
                let links = order.iter().filter(|&&o| pa[o][e].is_some()).count();
                (links, inv_a[e].len(), std::cmp::Reverse(e))
            })
            .expect("unplaced element");
        placed[next] = true;
        order.push(next);
    }
    let mut s = Search {
        a,
        b,
        pa,
        pb: b.pair_table(),
        inv_a,
        inv_b,
        order,
        fwd: vec![None; a.m],
        back: vec![None; b.m],
    };
    s.run(0)
        .then(|| s.fwd.iter().map(|x| x.expect("complete bijection")).collect())
}

/// A 0/1 matrix whose rows are concurrency sets and whose columns are lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    pub rows: Vec<Vec<u8>>,
}

impl IncidenceMatrix {
    pub fn ncols(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn to_matroid(&self) -> Matroid3 {
        let flats = self
            .rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| **v == 1).map(|(i, _)| i).collect())
            .collect();
        Matroid3::from_flats(self.ncols(), flats).expect("incidence rows are flats")
    }

    pub fn to_text(&self) -> String {
        self.rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The `(n²+1) × 3n` matrix with row blocks `C_k | I_n | G^{k-1}` for
/// `k = 1..n` (`C_k` is 1 on column `k`, `G` the cyclic shift `e_i ↦ e_{i+1}`)
/// and a last row marking the `n`-point of the middle block.
pub fn flashing_incidence(n: usize) -> Result<IncidenceMatrix> {
    if n < 3 {
        return Err(Error::Parameter(format!("flashing incidence needs n >= 3, got {n}")));
    }
    let mut rows = Vec::with_capacity(n * n + 1);
    for k in 0..n {
        for i in 0..n {
            let mut r = vec![0u8; 3 * n];
            r[k] = 1;
            r[n + i] = 1;
            r[2 * n + (i + n - k) % n] = 1;
            rows.push(r);
        }
    }
    let mut last = vec![0u8; 3 * n];
    last[n..2 * n].fill(1);
    rows.push(last);
    Ok(IncidenceMatrix { rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fano() -> Matroid3 {
        Matroid3::from_flats(
            7,
            vec![
                vec![0, 1, 2],
                vec![0, 3, 4],
                vec![0, 5, 6],
                vec![1, 3, 5],
                vec![1, 4, 6],
                vec![2, 3, 6],
                vec![2, 4, 5],
            ],
        )
        .unwrap()
    }

    #[test]
    fn relabelled_fano() {
        let f = fano();
        let perm = [3, 6, 0, 5, 1, 4, 2];
        let g = f.relabel(&perm);
        let s = matroid_isomorphic(&f, &g).unwrap();
        assert_eq!(f.relabel(&s), g);
        assert_eq!(matroid_isomorphic(&f, &f).unwrap(), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn rejects_bad_flats() {
        assert!(Matroid3::from_flats(5, vec![vec![0, 1, 2], vec![0, 1, 3]]).is_err());
        assert!(Matroid3::from_flats(3, vec![vec![0, 1]]).is_err());
    }

    #[test]
    fn flashing_rows() {
        let m = flashing_incidence(4).unwrap();
        assert_eq!(m.rows.len(), 17);
        assert!(m.rows[..16].iter().all(|r| r.iter().map(|&v| v as usize).sum::<usize>() == 3));
        let sizes = m.to_matroid().flat_sizes();
        assert_eq!(sizes.into_iter().collect::<Vec<_>>(), vec![(3, 16), (4, 1)]);
        assert!(flashing_incidence(2).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = fano();
        assert_eq!(Matroid3::from_json(&f.to_json()).unwrap(), f);
    }
}
