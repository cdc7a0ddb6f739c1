//! Small dense linear algebra over an exact field.

use crate::error::{Error, Result};
use crate::field::ExactField;

pub type Mat3<E> = [[E; 3]; 3];

pub fn det3<F: ExactField>(f: &F, m: &Mat3<F::Elem>) -> F::Elem {
    let minor = |a: usize, b: usize, c: usize, d: usize| f.sub(&f.mul(&m[1][a], &m[2][b]), &f.mul(&m[1][c], &m[2][d]));
    let t0 = f.mul(&m[0][0], &minor(1, 2, 2, 1));
    let t1 = f.mul(&m[0][1], &minor(0, 2, 2, 0));
    let t2 = f.mul(&m[0][2], &minor(0, 1, 1, 0));
    f.add(&f.sub(&t0, &t1), &t2)
}

/// Adjugate: `adj(m) · m = det(m) · I`.
pub fn adjugate3<F: ExactField>(f: &F, m: &Mat3<F::Elem>) -> Mat3<F::Elem> {
    let c = |r0: usize, r1: usize, c0: usize, c1: usize| f.sub(&f.mul(&m[r0][c0], &m[r1][c1]), &f.mul(&m[r0][c1], &m[r1][c0]));
    let cof = |i: usize, j: usize| {
        let rows: Vec<usize> = (0..3).filter(|&r| r != i).collect();
        let cols: Vec<usize> = (0..3).filter(|&k| k != j).collect();
        let v = c(rows[0], rows[1], cols[0], cols[1]);
        if (i + j) % 2 == 1 {
            f.neg(&v)
        } else {
            v
        }
    };
    // adj[i][j] = cofactor[j][i]
    [
        [cof(0, 0), cof(1, 0), cof(2, 0)],
        [cof(0, 1), cof(1, 1), cof(2, 1)],
        [cof(0, 2), cof(1, 2), cof(2, 2)],
    ]
}

pub fn inverse3<F: ExactField>(f: &F, m: &Mat3<F::Elem>) -> Result<Mat3<F::Elem>> {
    let d = det3(f, m);
    if f.is_zero(&d) {
        return Err(Error::SingularMatrix);
    }
    let di = f.inv(&d)?;
    let adj = adjugate3(f, m);
    Ok(adj.map(|row| row.map(|x| f.mul(&x, &di))))
}

pub fn mul3<F: ExactField>(f: &F, a: &Mat3<F::Elem>, b: &Mat3<F::Elem>) -> Mat3<F::Elem> {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let s = f.add(&f.mul(&a[i][0], &b[0][j]), &f.mul(&a[i][1], &b[1][j]));
            f.add(&s, &f.mul(&a[i][2], &b[2][j]))
        })
    })
}

pub fn apply3<F: ExactField>(f: &F, m: &Mat3<F::Elem>, v: &[F::Elem; 3]) -> [F::Elem; 3] {
    std::array::from_fn(|i| {
        let s = f.add(&f.mul(&m[i][0], &v[0]), &f.mul(&m[i][1], &v[1]));
        f.add(&s, &f.mul(&m[i][2], &v[2]))
    })
}

pub fn transpose3<E: Clone>(m: &Mat3<E>) -> Mat3<E> {
    std::array::from_fn(|i| std::array::from_fn(|j| m[j][i].clone()))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<F: ExactField>(f: &F, m: &mut [Vec<F::Elem>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !f.is_zero(&m[i][c])) else {
            continue;
        };
        m.swap(r, p);
        let inv = f.inv(&m[r][c]).expect("pivot is nonzero");
        for k in c..cols {
            m[r][k] = f.mul(&m[r][k], &inv);
        }
        for i in 0..rows {
            if i != r && !f.is_zero(&m[i][c]) {
                let factor = m[i][c].clone();
                for k in c..cols {
                    let t = f.mul(&factor, &m[r][k]);
                    m[i][k] = f.sub(&m[i][k], &t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<F: ExactField>(f: &F, m: &[Vec<F::Elem>]) -> usize {
    let mut w = m.to_vec();
    rref(f, &mut w).len()
}

/// Basis of the right null space.
pub fn nullspace<F: ExactField>(f: &F, m: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut w = m.to_vec();
    let pivots = rref(f, &mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![f.zero(); cols];
            v[fc] = f.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(&w[r][fc]);
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    fn m(q: &Rationals, v: [[i64; 3]; 3]) -> Mat3<num_rational::BigRational> {
        v.map(|r| r.map(|x| q.from_i64(x)))
    }

    #[test]
    fn inverse_round_trip() {
        let q = Rationals;
        let a = m(&q, [[2, 1, 0], [1, 3, 1], [0, 1, 4]]);
        let inv = inverse3(&q, &a).unwrap();
        assert_eq!(mul3(&q, &a, &inv), m(&q, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
        assert_eq!(det3(&q, &a), q.from_i64(18));
        let s = m(&q, [[1, 2, 3], [2, 4, 6], [0, 1, 1]]);
        assert_eq!(inverse3(&q, &s), Err(Error::SingularMatrix));
    }

    #[test]
    fn kernel() {
        let q = Rationals;
        let rows: Vec<Vec<_>> = vec![vec![q.from_i64(1), q.from_i64(1), q.from_i64(1)]];
        let ns = nullspace(&q, &rows);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s = v.iter().fold(q.zero(), |a, b| q.add(&a, b));
            assert!(q.is_zero(&s));
        }
    }
}
