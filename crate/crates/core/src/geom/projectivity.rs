use super::linalg::{apply3, det3, inverse3, mul3, transpose3, Mat3};
use super::{normalize, ProjLine, ProjPoint, Triple};
use crate::error::{Error, Result};
use crate::field::ExactField;

/// An invertible 3×3 matrix acting on points by multiplication and on
/// lines by the inverse transpose.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projectivity<E> {
    matrix: Mat3<E>,
    line_matrix: Mat3<E>,
}

impl<E: Clone> Projectivity<E> {
    pub fn new<F: ExactField<Elem = E>>(field: &F, matrix: Mat3<E>) -> Result<Self> {
        let inv = inverse3(field, &matrix)?;
        Ok(Projectivity {
            line_matrix: transpose3(&inv),
            matrix,
        })
    }

    pub fn identity<F: ExactField<Elem = E>>(field: &F) -> Self {
        let m: Mat3<E> =
            std::array::from_fn(|i| std::array::from_fn(|j| if i == j { field.one() } else { field.zero() }));
        Projectivity {
            matrix: m.clone(),
            line_matrix: m,
        }
    }

    pub fn matrix(&self) -> &Mat3<E> {
        &self.matrix
    }

    pub fn apply_point<F: ExactField<Elem = E>>(&self, field: &F, p: &ProjPoint<E>) -> ProjPoint<E> {
        let v = apply3(field, &self.matrix, p.coords());
        ProjPoint::from_normalized(normalize(field, v).expect("invertible image is nonzero"))
    }

    pub fn apply_line<F: ExactField<Elem = E>>(&self, field: &F, l: &ProjLine<E>) -> ProjLine<E> {
        let v = apply3(field, &self.line_matrix, l.coords());
        ProjLine::from_normalized(normalize(field, v).expect("invertible image is nonzero"))
    }

    pub fn compose<F: ExactField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        Projectivity {
            matrix: mul3(field, &self.matrix, &other.matrix),
            line_matrix: mul3(field, &self.line_matrix, &other.line_matrix),
        }
    }

    pub fn inverse<F: ExactField<Elem = E>>(&self, field: &F) -> Self {
        Projectivity {
            matrix: inverse3(field, &self.matrix).expect("projectivity is invertible"),
            line_matrix: inverse3(field, &self.line_matrix).expect("projectivity is invertible"),
        }
    }

    /// Equality as projective transformations (matrices up to scale).
    pub fn same_as<F: ExactField<Elem = E>>(&self, field: &F, other: &Self) -> bool {
        let flat = |m: &Mat3<E>| -> Vec<E> { m.iter().flatten().cloned().collect() };
        let (a, b) = (flat(&self.matrix), flat(&other.matrix));
        let Some(i) = a.iter().position(|x| !field.is_zero(x)) else {
            return false;
        };
        if field.is_zero(&b[i]) {
            return false;
        }
        let s = field.div(&b[i], &a[i]).expect("nonzero");
        a.iter().zip(&b).all(|(x, y)| field.is_zero(&field.sub(&field.mul(x, &s), y)))
    }
}

/// Matrix sending the standard frame `e1, e2, e3, (1,1,1)` to the four
/// given vectors (as columns, up to scale).
fn frame_matrix<F: ExactField>(field: &F, v: &[Triple<F::Elem>; 4]) -> Result<Mat3<F::Elem>> {
    for skip in 0..4 {
        let rows: Vec<&Triple<F::Elem>> = (0..4).filter(|&i| i != skip).map(|i| &v[i]).collect();
        let m: Mat3<F::Elem> = [rows[0].clone(), rows[1].clone(), rows[2].clone()];
        if field.is_zero(&det3(field, &m)) {
            return Err(Error::DegenerateFrame("three of the four lines are concurrent".into()));
        }
    }
    let cols: Mat3<F::Elem> = transpose3(&[v[0].clone(), v[1].clone(), v[2].clone()]);
    let lambda = apply3(field, &inverse3(field, &cols)?, &v[3]);
    Ok(std::array::from_fn(|i| std::array::from_fn(|j| field.mul(&cols[i][j], &lambda[j]))))
}

/// The projectivity taking each source line to the destination line of the
/// same index.
pub fn projectivity_from_line_frames<F: ExactField>(
    field: &F,
    src: &[ProjLine<F::Elem>; 4],
    dst: &[ProjLine<F::Elem>; 4],
) -> Result<Projectivity<F::Elem>> {
    let s = frame_matrix(field, &src.clone().map(|l| l.into_coords()))?;
    let d = frame_matrix(field, &dst.clone().map(|l| l.into_coords()))?;
    // Line coordinates move by n = d s^-1; points by n^-T.
    let n = mul3(field, &d, &inverse3(field, &s)?);
    let point_matrix = transpose3(&inverse3(field, &n)?);
    Ok(Projectivity {
        matrix: point_matrix,
        line_matrix: n,
    })
}
