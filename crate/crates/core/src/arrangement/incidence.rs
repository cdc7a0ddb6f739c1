//! Pair-grouping incidence engine shared by the point and line operators.
//!
//! For a list of distinct normalized triples (lines or points), every pair is
//! combined by the cross product and the results are grouped by their
//! canonical key. Each group is reported once together with the sorted list
//! of item indices it contains.
//!
//! Groups are discovered from their smallest member ("anchor"): the anchor
//! sees all other members in its own pass, and later members skip keys that
//! are already known to be rich. Only groups of three or more members are
//! remembered across anchors, so memory stays proportional to the number of
//! non-simple intersections.

use std::collections::BTreeMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rustc_hash::{FxHashMap, FxHashSet};

use crate::field::ExactField;
use crate::geom::{normalized_cross, Triple};

fn group_by<K, C, V>(n: usize, mut combine: C, mut visit: V)
where
    K: Hash + Eq,
    C: FnMut(usize, usize) -> Option<K>,
    V: FnMut(&K, &[usize]),
{
    let mut rich: FxHashSet<K> = FxHashSet::default();
    let mut local: FxHashMap<K, Vec<usize>> = FxHashMap::default();
    let mut members: Vec<usize> = Vec::new();
    for i in 0..n {
        local.clear();
        for j in i + 1..n {
            let Some(key) = combine(i, j) else {
                continue;
            };
            if !rich.is_empty() && rich.contains(&key) {
                continue;
            }
            local.entry(key).or_default().push(j);
        }
        for (key, js) in local.drain() {
            members.clear();
            members.push(i);
            members.extend_from_slice(&js);
            visit(&key, &members);
            if js.len() >= 2 {
                rich.insert(key);
            }
        }
    }
}

type IntTriple = [i128; 3];

const SMALL: i128 = 1 << 62;

/// Coprime integer forms of rational inputs, when every entry is small
/// enough for cross products to fit in `i128`.
fn small_integer_form<F: ExactField>(field: &F, items: &[Triple<F::Elem>]) -> Option<Vec<IntTriple>> {
    items
        .iter()
        .map(|t| {
            let v = field.integer_triple(t)?;
            let w = [v[0].to_i128()?, v[1].to_i128()?, v[2].to_i128()?];
            w.iter().all(|c| c.abs() < SMALL).then_some(w)
        })
        .collect()
}

fn int_cross(a: &IntTriple, b: &IntTriple) -> Option<IntTriple> {
    let mut v = [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]];
    let g = v[0].gcd(&v[1]).gcd(&v[2]);
    if g == 0 {
        return None;
    }
    let lead = v.iter().find(|c| **c != 0).copied().unwrap_or(1);
    let g = if lead < 0 { -g } else { g };
    for c in &mut v {
        *c /= g;
    }
    Some(v)
}

fn int_to_triple<F: ExactField>(field: &F, v: &IntTriple) -> Triple<F::Elem> {
    let lead = v.iter().find(|c| **c != 0).copied().expect("nonzero key");
    v.map(|c| {
        let q = BigRational::new(BigInt::from(c), BigInt::from(lead));
        field.from_rational(&q).expect("rational entries embed in characteristic 0")
    })
}

/// Calls `visit(key, members)` once per intersection (or join) of at least
/// two items; `members` is sorted increasingly and `key` is normalized.
pub fn for_each_group<F, V>(field: &F, items: &[Triple<F::Elem>], mut visit: V)
where
    F: ExactField,
    V: FnMut(&Triple<F::Elem>, &[usize]),
{
    if let Some(ints) = small_integer_form(field, items) {
        group_by(
            ints.len(),
            |i, j| int_cross(&ints[i], &ints[j]),
            |k, m| visit(&int_to_triple(field, k), m),
        );
        return;
    }
    group_by(items.len(), |i, j| normalized_cross(field, &items[i], &items[j]), visit);
}

/// Multiplicity histogram `k ↦ t_k`.
pub fn multiplicity_counts<F: ExactField>(field: &F, items: &[Triple<F::Elem>]) -> BTreeMap<usize, usize> {
    let mut t = BTreeMap::new();
    if let Some(ints) = small_integer_form(field, items) {
        group_by(ints.len(), |i, j| int_cross(&ints[i], &ints[j]), |_, m| *t.entry(m.len()).or_insert(0) += 1);
    } else {
        group_by(
            items.len(),
            |i, j| normalized_cross(field, &items[i], &items[j]),
            |_, m| *t.entry(m.len()).or_insert(0) += 1,
        );
    }
    t
}

/// Same grouping without the integer shortcut; kept for cross-checking.
pub fn multiplicity_counts_generic<F: ExactField>(field: &F, items: &[Triple<F::Elem>]) -> BTreeMap<usize, usize> {
    let mut t = BTreeMap::new();
    group_by(
        items.len(),
        |i, j| normalized_cross(field, &items[i], &items[j]),
        |_, m| *t.entry(m.len()).or_insert(0) += 1,
    );
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn triples(q: &Rationals, v: &[[i64; 3]]) -> Vec<Triple<num_rational::BigRational>> {
        v.iter()
            .map(|c| crate::geom::normalize(q, c.map(|x| q.from_i64(x))).unwrap())
            .collect()
    }

    fn brute(q: &Rationals, items: &[Triple<num_rational::BigRational>]) -> Vec<Vec<usize>> {
        let mut keys: Vec<Triple<num_rational::BigRational>> = Vec::new();
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                let k = normalized_cross(q, &items[i], &items[j]).unwrap();
                if !keys.contains(&k) {
                    keys.push(k);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = keys
            .iter()
            .map(|k| (0..items.len()).filter(|&i| q.is_zero(&crate::geom::dot(q, k, &items[i]))).collect())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force() {
        let q = Rationals;
        // complete quadrilateral plus a few extra lines
        let items = triples(
            &q,
            &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1], [1, 1, 1], [1, 2, 3], [2, 1, 0]],
        );
        let mut got = Vec::new();
        for_each_group(&q, &items, |_, m| got.push(m.to_vec()));
        got.sort();
        assert_eq!(got, brute(&q, &items));
    }

    #[test]
    fn pencil_is_one_group() {
        let q = Rationals;
        let items = triples(&q, &[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [1, 3, 0]]);
        let t = multiplicity_counts(&q, &items);
        assert_eq!(t.into_iter().collect::<Vec<_>>(), vec![(5, 1)]);
    }

    #[test]
    fn integer_path_agrees_with_generic() {
        let q = Rationals;
        let mut items = Vec::new();
        for a in -3i64..=3 {
            for b in [1i64, 2, -5] {
                items.push(crate::geom::normalize(&q, [a, b, 1].map(|x| q.from_i64(x))).unwrap());
                items.push(crate::geom::normalize(&q, [1, a, b].map(|x| q.from_i64(x))).unwrap());
            }
        }
        items.sort();
        items.dedup();
        assert_eq!(multiplicity_counts(&q, &items), multiplicity_counts_generic(&q, &items));
    }
}
