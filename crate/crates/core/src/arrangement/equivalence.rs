use super::{incidence_index, Arrangement};
use crate::error::{Error, Result};
use crate::field::ExactField;
use crate::geom::linalg::det3;
use crate::geom::{projectivity_from_line_frames, ProjLine, Projectivity};

/// Combinatorial data used to prune the search: for each line, the sorted
/// multiplicities of the points on it, and for each pair of lines the
/// multiplicity of their meet.
struct Shape {
    signature: Vec<Vec<usize>>,
    pair: Vec<usize>,
    d: usize,
}

fn shape<F: ExactField>(lines: &[ProjLine<F::Elem>], field: &F) -> Shape {
    let a = Arrangement::from_items(field.clone(), lines.iter().cloned());
    let d = lines.len();
    let mut signature = vec![Vec::new(); d];
    let mut pair = vec![0; d * d];
    for (_, members) in incidence_index(&a).entries {
        for &i in &members {
            signature[i].push(members.len());
            for &j in &members {
                pair[i * d + j] = members.len();
            }
        }
    }
    for s in &mut signature {
        s.sort_unstable();
    }
    Shape { signature, pair, d }
}

fn general_position<F: ExactField>(field: &F, q: [&ProjLine<F::Elem>; 4]) -> bool {
    (0..4).all(|skip| {
        let rows: Vec<&ProjLine<F::Elem>> = (0..4).filter(|&i| i != skip).map(|i| q[i]).collect();
        let m = [rows[0].coords().clone(), rows[1].coords().clone(), rows[2].coords().clone()];
        !field.is_zero(&det3(field, &m))
    })
}

/// Searches for a projectivity `g` with `g(A) = B`.
///
/// A fixed general-position quadruple of `A` (the first in sorted order) is
/// matched against ordered quadruples of `B` in lexicographic order of the
/// sorted lines of `B`; the first success is returned.
pub fn projectively_equivalent<F: ExactField>(
    a: &Arrangement<F>,
    b: &Arrangement<F>,
) -> Result<Option<Projectivity<F::Elem>>> {
    let field = a.field();
    if field != b.field() {
        return Err(Error::FieldMismatch(field.spec().to_string(), b.field().spec().to_string()));
    }
    if a.len() != b.len() {
        return Ok(None);
    }
    let la: Vec<ProjLine<F::Elem>> = a.sorted().into_iter().cloned().collect();
    let lb: Vec<ProjLine<F::Elem>> = b.sorted().into_iter().cloned().collect();
    let d = la.len();
    let quad = find_frame(field, &la)
        .ok_or_else(|| Error::DegenerateFrame("no four lines in general position".into()))?;
    let sa = shape(&la, field);
    let sb = shape(&lb, field);
    let mut ma = sa.signature.clone();
    let mut mb = sb.signature.clone();
    ma.sort();
    mb.sort();
    if ma != mb {
        return Ok(None);
    }
    let src = quad.map(|i| la[i].clone());
    let cands: Vec<Vec<usize>> = quad
        .iter()
        .map(|&i| (0..d).filter(|&j| sb.signature[j] == sa.signature[i]).collect())
        .collect();
    let pair_ok = |chosen: &[usize], next: usize| -> bool {
        let k = chosen.len();
        chosen.iter().enumerate().all(|(pos, &c)| c != next && sa.pair[quad[pos] * sa.d + quad[k]] == sb.pair[c * sb.d + next])
    };
    let mut chosen: Vec<usize> = Vec::with_capacity(4);
    let mut stack: Vec<usize> = vec![0];
    while let Some(pos) = stack.last_mut() {
        let level = chosen.len();
        if *pos >= cands[level].len() {
            stack.pop();
            chosen.pop();
            continue;
        }
        let next = cands[level][*pos];
        *pos += 1;
        if !pair_ok(&chosen, next) {
            continue;
        }
        chosen.push(next);
        if chosen.len() == 4 {
            let dst = [0, 1, 2, 3].map(|i| lb[chosen[i]].clone());
            if let Ok(g) = projectivity_from_line_frames(field, &src, &dst) {
                if la.iter().all(|l| b.contains(&g.apply_line(field, l))) {
                    return Ok(Some(g));
                }
            }
            chosen.pop();
        } else {
            stack.push(0);
        }
    }
    Ok(None)
}

fn find_frame<F: ExactField>(field: &F, lines: &[ProjLine<F::Elem>]) -> Option<[usize; 4]> {
    let d = lines.len();
    for i in 0..d {
        for j in i + 1..d {
            for k in j + 1..d {
                for l in k + 1..d {
                    if general_position(field, [&lines[i], &lines[j], &lines[k], &lines[l]]) {
                        return Some([i, j, k, l]);
                    }
                }
            }
        }
    }
    None
}
