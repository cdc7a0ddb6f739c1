use super::incidence::for_each_group;
use super::{Arrangement, PointConfig, Selector};
use crate::field::ExactField;
use crate::geom::{ProjLine, ProjPoint, Triple};

fn select<F: ExactField>(field: &F, items: &[Triple<F::Elem>], sel: &Selector) -> Vec<Triple<F::Elem>> {
    let mut out = Vec::new();
    for_each_group(field, items, |key, members| {
        if sel.contains(members.len()) {
            out.push(key.clone());
        }
    });
    out.sort();
    out
}

/// `𝒫_sel(L)`: the points lying on a number of lines of `L` that belongs to `sel`.
pub fn points_operator<F: ExactField>(sel: &Selector, l: &Arrangement<F>) -> PointConfig<F> {
    let pts = select(l.field(), &l.triples(), sel);
    PointConfig::from_items(l.field().clone(), pts.into_iter().map(ProjPoint::from_normalized))
}

/// `ℒ_sel(P)`: the lines containing a number of points of `P` that belongs to `sel`.
pub fn lines_operator<F: ExactField>(sel: &Selector, p: &PointConfig<F>) -> Arrangement<F> {
    let lines = select(p.field(), &p.triples(), sel);
    Arrangement::from_items(p.field().clone(), lines.into_iter().map(ProjLine::from_normalized))
}

/// `Λ_{n,m} = ℒ_m ∘ 𝒫_n`.
pub fn lambda_op<F: ExactField>(nsel: &Selector, msel: &Selector, l: &Arrangement<F>) -> Arrangement<F> {
    lines_operator(msel, &points_operator(nsel, l))
}

/// `Ψ_{n,m} = 𝒫_m ∘ ℒ_n`.
pub fn psi_op<F: ExactField>(nsel: &Selector, msel: &Selector, p: &PointConfig<F>) -> PointConfig<F> {
    points_operator(msel, &lines_operator(nsel, p))
}

/// `𝒟` on arrangements: each line becomes the point with the same coordinates.
pub fn dualize_lines<F: ExactField>(l: &Arrangement<F>) -> PointConfig<F> {
    PointConfig::from_items(l.field().clone(), l.iter().map(crate::geom::dual_point))
}

/// `𝒟` on point configurations.
pub fn dualize_points<F: ExactField>(p: &PointConfig<F>) -> Arrangement<F> {
    Arrangement::from_items(p.field().clone(), p.iter().map(crate::geom::dual_line))
}

/// `𝒟_sel = ℒ_sel ∘ 𝒟`.
pub fn dual_lines_op<F: ExactField>(sel: &Selector, l: &Arrangement<F>) -> Arrangement<F> {
    lines_operator(sel, &dualize_lines(l))
}

/// Every intersection point of an arrangement with the indices of the lines
/// through it, sorted by point.
#[derive(Debug, Clone)]
pub struct IncidenceIndex<E> {
    pub entries: Vec<(ProjPoint<E>, Vec<usize>)>,
}

impl<E: Ord> IncidenceIndex<E> {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, p: &ProjPoint<E>) -> usize {
        self.entries
            .binary_search_by(|(q, _)| q.cmp(p))
            .map_or(0, |i| self.entries[i].1.len())
    }
}

pub fn incidence_index<F: ExactField>(l: &Arrangement<F>) -> IncidenceIndex<F::Elem> {
    let mut entries = Vec::new();
    for_each_group(l.field(), &l.triples(), |key, members| {
        entries.push((ProjPoint::from_normalized(key.clone()), members.to_vec()));
    });
    entries.sort();
    IncidenceIndex { entries }
}
