//! Line arrangements, point configurations and the incidence operators.

mod equivalence;
pub mod incidence;
pub mod json;
mod operators;
mod predicates;
mod profile;
mod selector;

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;

use crate::error::Result;
use crate::field::ExactField;
use crate::geom::{ProjLine, ProjPoint, Triple};

pub use equivalence::projectively_equivalent;
pub use operators::{
    dual_lines_op, dualize_lines, dualize_points, incidence_index, lambda_op, lines_operator, points_operator, psi_op,
    IncidenceIndex,
};
pub use predicates::{
    classify_degenerate, configuration_connected, is_km_configuration, lambda_decomposition_check, Degeneracy,
    KmConfiguration,
};
pub use profile::{freeness_necessary, inequality_report, profile, InequalityReport, Profile, Slack};
pub use selector::Selector;

macro_rules! object_set {
    ($name:ident, $item:ident, $what:literal) => {
        #[doc = concat!("A finite set of distinct ", $what, "s over one field.")]
        ///
        /// Insertion order is kept (it labels the elements) but equality is
        /// set equality.
        #[derive(Debug, Clone)]
        pub struct $name<F: ExactField> {
            field: F,
            items: IndexSet<$item<F::Elem>, FxBuildHasher>,
        }

        impl<F: ExactField> PartialEq for $name<F> {
            fn eq(&self, other: &Self) -> bool {
                self.field == other.field && self.items == other.items
            }
        }

        impl<F: ExactField> $name<F> {
            pub fn new(field: F) -> Self {
                $name {
                    field,
                    items: IndexSet::default(),
                }
            }

            pub fn from_items(field: F, items: impl IntoIterator<Item = $item<F::Elem>>) -> Self {
                let mut s = Self::new(field);
                s.items.extend(items);
                s
            }

            /// Normalizes and deduplicates raw triples; also returns the
            /// number of duplicates dropped.
            pub fn from_triples(field: F, triples: impl IntoIterator<Item = Triple<F::Elem>>) -> Result<(Self, usize)> {
                let mut s = Self::new(field);
                let mut dropped = 0;
                for t in triples {
                    for c in &t {
                        s.field.validate(c)?;
                    }
                    let obj = $item::new(&s.field, t)?;
                    if !s.items.insert(obj) {
                        dropped += 1;
                    }
                }
                Ok((s, dropped))
            }

            pub fn from_ints(field: F, triples: &[[i64; 3]]) -> Result<Self> {
                let ts: Vec<Triple<F::Elem>> = triples.iter().map(|t| t.map(|x| field.from_i64(x))).collect();
                Ok(Self::from_triples(field, ts)?.0)
            }

            pub fn field(&self) -> &F {
                &self.field
            }

            pub fn len(&self) -> usize {
                self.items.len()
            }

            pub fn is_empty(&self) -> bool {
                self.items.is_empty()
            }

            pub fn iter(&self) -> impl ExactSizeIterator<Item = &$item<F::Elem>> {
                self.items.iter()
            }

            pub fn get(&self, i: usize) -> Option<&$item<F::Elem>> {
                self.items.get_index(i)
            }

            pub fn index_of(&self, x: &$item<F::Elem>) -> Option<usize> {
                self.items.get_index_of(x)
            }

            pub fn contains(&self, x: &$item<F::Elem>) -> bool {
                self.items.contains(x)
            }

            /// Adds an element; returns false if it was already present.
            pub fn insert(&mut self, x: $item<F::Elem>) -> bool {
                self.items.insert(x)
            }

            pub fn union(&self, other: &Self) -> Self {
                let mut s = self.clone();
                s.items.extend(other.items.iter().cloned());
                s
            }

            pub fn intersection(&self, other: &Self) -> Self {
                Self::from_items(self.field.clone(), self.items.iter().filter(|x| other.contains(x)).cloned())
            }

            pub fn difference(&self, other: &Self) -> Self {
                Self::from_items(self.field.clone(), self.items.iter().filter(|x| !other.contains(x)).cloned())
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.items.iter().all(|x| other.contains(x))
            }

            /// The same set in canonical (sorted) order.
            pub fn canonical(&self) -> Self {
                let mut v: Vec<$item<F::Elem>> = self.items.iter().cloned().collect();
                v.sort();
                Self::from_items(self.field.clone(), v)
            }

            pub fn sorted(&self) -> Vec<&$item<F::Elem>> {
                let mut v: Vec<&$item<F::Elem>> = self.items.iter().collect();
                v.sort();
                v
            }

            pub(crate) fn triples(&self) -> Vec<Triple<F::Elem>> {
                self.items.iter().map(|x| x.coords().clone()).collect()
            }

            /// Coordinates as text, in insertion order.
            pub fn to_strings(&self) -> Vec<[String; 3]> {
                self.items.iter().map(|x| crate::geom::format_triple(&self.field, x.coords())).collect()
            }
        }
    };
}

object_set!(Arrangement, ProjLine, "line");
object_set!(PointConfig, ProjPoint, "point");

impl<F: ExactField> Arrangement<F> {
    pub fn apply(&self, g: &crate::geom::Projectivity<F::Elem>) -> Self {
        Self::from_items(self.field.clone(), self.iter().map(|l| g.apply_line(&self.field, l)))
    }
}

impl<F: ExactField> PointConfig<F> {
    pub fn apply(&self, g: &crate::geom::Projectivity<F::Elem>) -> Self {
        Self::from_items(self.field.clone(), self.iter().map(|p| g.apply_point(&self.field, p)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn duplicates_dropped() {
        let q = Rationals;
        let ts = vec![[1, 0, 0], [2, 0, 0]].into_iter().map(|t: [i64; 3]| t.map(|x| q.from_i64(x)));
        let (a, dropped) = Arrangement::from_triples(q, ts).unwrap();
        assert_eq!((a.len(), dropped), (1, 1));
    }

    #[test]
    fn order_independent_equality() {
        let q = Rationals;
        let a = Arrangement::from_ints(q, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        let b = Arrangement::from_ints(q, &[[0, 1, 0], [1, 0, 0]]).unwrap();
        assert_eq!(a, b);
        assert!(Arrangement::from_ints(q, &[[0, 0, 0]]).is_err());
    }
}
