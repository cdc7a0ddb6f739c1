//! Named arrangements. Every entry with a known singularity profile checks
//! it on construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{dualize_points, lambda_op, lines_operator, profile, Arrangement, PointConfig, Selector};
use crate::error::{Error, Result};
use crate::field::cyclotomic::{cyclotomic_minpoly, real_cyclotomic_minpoly};
use crate::field::{AnyField, ExactField, FieldSpec, Scalar};
use crate::geom::{join, Projectivity, ProjLine, ProjPoint};

pub type Arr = Arrangement<AnyField>;
pub type Points = PointConfig<AnyField>;

/// Description of a catalog entry.
#[derive(Debug, Clone, Copy)]
pub struct EntryInfo {
    pub name: &'static str,
    pub params: &'static str,
    pub field: &'static str,
    pub profile: Option<&'static str>,
    pub forbidden: Option<&'static str>,
    pub summary: &'static str,
}

pub const ENTRIES: &[EntryInfo] = &[
    EntryInfo {
        name: "trivial",
        params: "n",
        field: "Q",
        profile: Some("t_n=1"),
        forbidden: None,
        summary: "n concurrent lines",
    },
    EntryInfo {
        name: "quasi-trivial",
        params: "n>=3",
        field: "Q",
        profile: Some("t2=n-1, t_{n-1}=1"),
        forbidden: None,
        summary: "a pencil of n-1 lines plus one line",
    },
    EntryInfo {
        name: "generic",
        params: "n, seed",
        field: "Q",
        profile: Some("t2=n(n-1)/2"),
        forbidden: None,
        summary: "n lines in general position, seeded",
    },
    EntryInfo {
        name: "complete-quadrilateral",
        params: "",
        field: "Q",
        profile: Some("t2=3, t3=4"),
        forbidden: None,
        summary: "the six lines through four general points",
    },
    EntryInfo {
        name: "ceva",
        params: "n>=2",
        field: "Q(zeta_n)",
        profile: Some("t3=n^2, t_n=3"),
        forbidden: None,
        summary: "(x^n-y^n)(x^n-z^n)(y^n-z^n)=0",
    },
    EntryInfo {
        name: "ceva-ext",
        params: "n>=2",
        field: "Q(zeta_n)",
        profile: Some("t2=3n, t3=n^2, t_{n+2}=3"),
        forbidden: None,
        summary: "ceva(n) together with xyz=0",
    },
    EntryInfo {
        name: "dual-hesse",
        params: "",
        field: "Q[x]/(x^2+x+1)",
        profile: Some("t3=12"),
        forbidden: None,
        summary: "nine lines with twelve triple points",
    },
    EntryInfo {
        name: "maclane",
        params: "",
        field: "Q[x]/(x^2+x+1)",
        profile: Some("t2=4, t3=8"),
        forbidden: None,
        summary: "dual Hesse without the line -x+z (8_3 configuration)",
    },
    EntryInfo {
        name: "hesse",
        params: "",
        field: "Q[x]/(x^2+x+1)",
        profile: Some("t2=12, t4=9"),
        forbidden: None,
        summary: "L{3;>=2} image of the MacLane arrangement",
    },
    EntryInfo {
        name: "grid6",
        params: "",
        field: "Q",
        profile: Some("t2=9, t3=2"),
        forbidden: None,
        summary: "x, x+z, x-z, y, y+z, y-z",
    },
    EntryInfo {
        name: "parallel-pairs6",
        params: "",
        field: "Q",
        profile: Some("t2=15"),
        forbidden: None,
        summary: "three pairs of parallel lines",
    },
    EntryInfo {
        name: "polygonal",
        params: "n=2m, m>=3",
        field: "Q(2cos(2pi/m))",
        profile: Some("t2=m, t3=m(m-1)/2, t_m=1"),
        forbidden: None,
        summary: "edges and symmetry axes of a regular m-gon",
    },
    EntryInfo {
        name: "polygonal-ext",
        params: "n=4k+1, k>=2",
        field: "Q(2cos(2pi/2k))",
        profile: Some("t2=3k, t3=2k(k-1), t4=k, t_2k=1"),
        forbidden: None,
        summary: "polygonal(4k) with the line at infinity z=0",
    },
    EntryInfo {
        name: "klein",
        params: "",
        field: "Q[x]/(x^2+x+2)",
        profile: Some("t3=28, t4=21"),
        forbidden: None,
        summary: "mirrors of the order 168 group",
    },
    EntryInfo {
        name: "grunbaum-rigby",
        params: "",
        field: "Q[x]/(x^3+x^2-2x-1)",
        profile: Some("t2=63, t3=7, t4=21"),
        forbidden: None,
        summary: "three rotation orbits of seven lines with dihedral symmetry",
    },
    EntryInfo {
        name: "flashing3",
        params: "t (default 3), field",
        field: "Q or given",
        profile: Some("t2=12, t3=1"),
        forbidden: Some("{0, 1, -1, 1/2, 2, roots of t^2-t+1}"),
        summary: "six lines swapped with their L{2;3} image",
    },
    EntryInfo {
        name: "flashing4",
        params: "t (default 3), field",
        field: "Q or given",
        profile: Some("t2=22, t4=1"),
        forbidden: Some("{0, 1, -1, 1/2, 2, roots of 2t^2-2t+1}"),
        summary: "eight lines swapped with their L{2;4} image",
    },
    EntryInfo {
        name: "flashing4-ambient",
        params: "t (default 3), field",
        field: "Q or given",
        profile: Some("t2=12, t3=16, t4=1"),
        forbidden: Some("{0, 1, -1, 1/2, 2, roots of 2t^2-2t+1}"),
        summary: "all twelve lines of the eight-line flashing family",
    },
    EntryInfo {
        name: "unassuming",
        params: "t (default 3), field",
        field: "Q or given",
        profile: Some("t2=15"),
        forbidden: Some("{0, 1, -1, roots of t^4-18t^2+1}"),
        summary: "six lines whose dual points lie on no conic",
    },
    EntryInfo {
        name: "gv13",
        params: "a (default 2), sign (+1/-1), field",
        field: "Q or given",
        profile: Some("t2=25, t3=11, t5=2"),
        forbidden: Some("parameters creating extra incidences"),
        summary: "thirteen lines with two realization components ab=+1, ab=-1",
    },
    EntryInfo {
        name: "pappus",
        params: "",
        field: "Q",
        profile: Some("t2=9, t3=9"),
        forbidden: None,
        summary: "the Pappus 9_3 configuration",
    },
    EntryInfo {
        name: "hexagon-on-conic",
        params: "seed",
        field: "Q",
        profile: Some("t2=15"),
        forbidden: None,
        summary: "sides of a hexagon inscribed in a conic",
    },
    EntryInfo {
        name: "desargues9",
        params: "",
        field: "Q",
        profile: Some("t2=15, t3=7"),
        forbidden: None,
        summary: "two perspective triangles and the three rays",
    },
    EntryInfo {
        name: "finite-plane",
        params: "q",
        field: "GF(q)",
        profile: Some("t_{q+1}=q^2+q+1"),
        forbidden: None,
        summary: "all lines of the projective plane over GF(q)",
    },
    EntryInfo {
        name: "reye",
        params: "",
        field: "Q",
        profile: Some("t2=18, t3=16"),
        forbidden: None,
        summary: "dual of a planar projection of the Reye configuration",
    },
];

pub fn entry(name: &str) -> Option<&'static EntryInfo> {
    let key = name.replace('_', "-");
    ENTRIES.iter().find(|e| e.name == key)
}

/// Build parameters; unused fields are ignored by entries that take none.
#[derive(Debug, Clone, Default)]
pub struct Params {
    pub n: Option<usize>,
    pub q: Option<u64>,
    pub t: Option<String>,
    pub a: Option<String>,
    pub sign: Option<i64>,
    pub seed: Option<u64>,
    pub field: Option<String>,
    /// Build even when the parameter lies in the forbidden set.
    pub allow_degenerate: bool,
}

#[derive(Debug, Clone)]
pub struct Built {
    pub arrangement: Arr,
    /// The seed actually used by seeded entries.
    pub seed: Option<u64>,
    pub warning: Option<String>,
}

impl Built {
    fn plain(arrangement: Arr) -> Self {
        Built {
            arrangement,
            seed: None,
            warning: None,
        }
    }
}

pub fn build(name: &str, p: &Params) -> Result<Built> {
    let e = entry(name).ok_or_else(|| Error::UnknownEntry(name.to_string()))?;
    let need_n = || p.n.ok_or_else(|| Error::Parameter(format!("{} needs n", e.name)));
    let field = || -> Result<AnyField> { AnyField::parse(p.field.as_deref().unwrap_or("Q")) };
    let scalar = |f: &AnyField, s: &Option<String>, default: &str| f.parse_elem(s.as_deref().unwrap_or(default));
    Ok(match e.name {
        "trivial" => Built::plain(trivial(need_n()?)?),
        "quasi-trivial" => Built::plain(quasi_trivial(need_n()?)?),
        "generic" => {
            let (a, seed) = generic(need_n()?, p.seed.unwrap_or(0))?;
            Built {
                arrangement: a,
                seed: Some(seed),
                warning: None,
            }
        }
        "complete-quadrilateral" => Built::plain(complete_quadrilateral()),
        "ceva" => Built::plain(ceva(need_n()?)?),
        "ceva-ext" => Built::plain(ceva_ext(need_n()?)?),
        "dual-hesse" => Built::plain(dual_hesse()),
        "maclane" => Built::plain(maclane()),
        "hesse" => Built::plain(hesse()?),
        "grid6" => Built::plain(grid6()),
        "parallel-pairs6" => Built::plain(parallel_pairs6()?),
        "polygonal" => Built::plain(polygonal(need_n()?)?),
        "polygonal-ext" => Built::plain(polygonal_ext(need_n()?)?),
        "klein" => Built::plain(klein()?),
        "grunbaum-rigby" => Built::plain(grunbaum_rigby()?),
        "flashing3" | "flashing4" | "flashing4-ambient" | "unassuming" => {
            let f = field()?;
            let t = scalar(&f, &p.t, "3")?;
            let family = match e.name {
                "flashing3" => Family::Flashing3,
                "flashing4" => Family::Flashing4,
                "flashing4-ambient" => Family::Flashing4Ambient,
                _ => Family::Unassuming,
            };
            family_build(family, &f, &t, p.allow_degenerate)?
        }
        "gv13" => {
            let f = field()?;
            let a = scalar(&f, &p.a, "2")?;
            Built::plain(gv13(&f, &a, p.sign.unwrap_or(1))?)
        }
        "pappus" => Built::plain(pappus()?),
        "hexagon-on-conic" => {
            let (a, seed) = hexagon_on_conic(p.seed.unwrap_or(0))?;
            Built {
                arrangement: a,
                seed: Some(seed),
                warning: None,
            }
        }
        "desargues9" => Built::plain(desargues9()?),
        "finite-plane" => Built::plain(finite_plane(p.q.or(p.n.map(|n| n as u64)).unwrap_or(2))?),
        "reye" => Built::plain(reye()?),
        _ => unreachable!("every listed entry has a builder"),
    })
}

fn check(name: &str, a: Arr, t: &[(usize, usize)]) -> Result<Arr> {
    let pr = profile(&a);
    if pr.matches(pr.d, t) {
        Ok(a)
    } else {
        let expected: Vec<String> = t.iter().map(|(k, n)| format!("t{k}={n}")).collect();
        Err(Error::ProfileMismatch {
            name: name.to_string(),
            expected: expected.join(" "),
            got: pr.to_string(),
        })
    }
}

fn ints(f: &AnyField, rows: &[[i64; 3]]) -> Arr {
    Arrangement::from_ints(f.clone(), rows).expect("integer rows are valid lines")
}

fn from_rows(f: &AnyField, rows: Vec<[Scalar; 3]>) -> Result<Arr> {
    Ok(Arrangement::from_triples(f.clone(), rows)?.0)
}

fn parse_rows(f: &AnyField, rows: &[[&str; 3]]) -> Result<Vec<[Scalar; 3]>> {
    rows.iter()
        .map(|r| Ok([f.parse_elem(r[0])?, f.parse_elem(r[1])?, f.parse_elem(r[2])?]))
        .collect()
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

pub fn trivial(n: usize) -> Result<Arr> {
    let q = AnyField::rationals();
    let rows: Vec<[i64; 3]> = (0..n as i64).map(|k| if k == 0 { [0, 1, 0] } else { [1, k - 1, 0] }).collect();
    let a = ints(&q, &rows);
    if n >= 2 {
        check("trivial", a, &[(n, 1)])
    } else {
        Ok(a)
    }
}

pub fn quasi_trivial(n: usize) -> Result<Arr> {
    if n < 3 {
        return Err(Error::Parameter("quasi-trivial needs n >= 3".into()));
    }
    let mut a = trivial(n - 1)?;
    a.insert(ProjLine::from_ints(a.field(), [0, 0, 1])?);
    if n == 3 {
        check("quasi-trivial", a, &[(2, 3)])
    } else {
        check("quasi-trivial", a, &[(2, n - 1), (n - 1, 1)])
    }
}

/// `n` lines in general position with coefficients drawn from the seed;
/// returns the seed that produced them.
pub fn generic(n: usize, seed: u64) -> Result<(Arr, u64)> {
    let q = AnyField::rationals();
    for s in seed..seed.saturating_add(32) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let rows: Vec<[i64; 3]> = (0..n)
            .map(|_| loop {
                let r = [rng.gen_range(-30..=30), rng.gen_range(-30..=30), rng.gen_range(-30..=30)];
                if r != [0, 0, 0] {
                    break r;
                }
            })
            .collect();
        let a = ints(&q, &rows);
        if a.len() == n && profile(&a).matches(n, &[(2, binom2(n))]) {
            return Ok((a, s));
        }
    }
    Err(Error::GenericityUnattainable { seed })
}

pub fn complete_quadrilateral() -> Arr {
    let q = AnyField::rationals();
    ints(&q, &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]])
}

/// `Q(ζ_n)` and `ζ_n` (the rationals and `-1` for `n = 2`).
fn cyclotomic_field(n: usize) -> Result<(AnyField, Scalar)> {
    if n == 2 {
        let q = AnyField::rationals();
        let z = q.from_i64(-1);
        return Ok((q, z));
    }
    let phi = cyclotomic_minpoly(n as u32)?;
    let coeffs: Vec<BigRational> = phi.into_iter().map(BigRational::from_integer).collect();
    let f = AnyField::new(&FieldSpec::number_field(coeffs))?;
    let z = f.generator().expect("number fields have a generator");
    Ok((f, z))
}

fn ceva_rows(n: usize) -> Result<(AnyField, Vec<[Scalar; 3]>)> {
    if n < 2 {
        return Err(Error::Parameter("ceva needs n >= 2".into()));
    }
    let (f, z) = cyclotomic_field(n)?;
    let (o, zero) = (f.one(), f.zero());
    let mut rows = Vec::new();
    let mut zk = f.one();
    for _ in 0..n {
        let m = f.neg(&zk);
        rows.push([o.clone(), m.clone(), zero.clone()]);
        rows.push([o.clone(), zero.clone(), m.clone()]);
        rows.push([zero.clone(), o.clone(), m]);
        zk = f.mul(&zk, &z);
    }
    Ok((f, rows))
}

pub fn ceva(n: usize) -> Result<Arr> {
    let (f, rows) = ceva_rows(n)?;
    let a = from_rows(&f, rows)?;
    match n {
        2 => check("ceva", a, &[(2, 3), (3, 4)]),
        3 => check("ceva", a, &[(3, 12)]),
        _ => check("ceva", a, &[(3, n * n), (n, 3)]),
    }
}

pub fn ceva_ext(n: usize) -> Result<Arr> {
    let (f, mut rows) = ceva_rows(n)?;
    let (o, z) = (f.one(), f.zero());
    rows.push([o.clone(), z.clone(), z.clone()]);
    rows.push([z.clone(), o.clone(), z.clone()]);
    rows.push([z.clone(), z, o]);
    let a = from_rows(&f, rows)?;
    if n == 3 {
        check("ceva-ext", a, &[(2, 9), (3, 9), (5, 3)])
    } else {
        let mut t = vec![(2, 3 * n), (3, n * n), (n + 2, 3)];
        if n == 2 {
            t = vec![(2, 6), (3, 4), (4, 3)];
        }
        check("ceva-ext", a, &t)
    }
}

fn eisenstein() -> AnyField {
    AnyField::number_field(&[1, 1, 1]).expect("x^2+x+1 is irreducible")
}

const DUAL_HESSE: [[&str; 3]; 9] = [
    ["-1", "0", "1"],
    ["-1", "1", "0"],
    ["0", "-1", "1"],
    ["-x", "0", "1"],
    ["-x", "1", "0"],
    ["1+x", "0", "1"],
    ["1+x", "1", "0"],
    ["0", "1+x", "1"],
    ["0", "-x", "1"],
];

/// The nine lines `-x+z, -x+y, -y+z, -ωx+z, ...` over `Q(ω)`.
pub fn dual_hesse() -> Arr {
    let f = eisenstein();
    let a = from_rows(&f, parse_rows(&f, &DUAL_HESSE).expect("valid scalars")).expect("valid lines");
    check("dual-hesse", a, &[(3, 12)]).expect("dual Hesse profile")
}

/// The dual Hesse arrangement with its first listed line `-x+z` removed.
pub fn maclane() -> Arr {
    let f = eisenstein();
    let a = from_rows(&f, parse_rows(&f, &DUAL_HESSE[1..]).expect("valid scalars")).expect("valid lines");
    check("maclane", a, &[(2, 4), (3, 8)]).expect("MacLane profile")
}

pub fn hesse() -> Result<Arr> {
    let a = lambda_op(&Selector::at_least(3), &Selector::at_least(2), &maclane());
    check("hesse", a, &[(2, 12), (4, 9)])
}

pub fn grid6() -> Arr {
    let q = AnyField::rationals();
    let a = ints(&q, &[[1, 0, 0], [1, 0, 1], [1, 0, -1], [0, 1, 0], [0, 1, 1], [0, 1, -1]]);
    check("grid6", a, &[(2, 9), (3, 2)]).expect("grid profile")
}

/// `{x, x-z}, {y, y-z}, {x+y+2z, x+y+3z}`.
///
/// The third pair sits one step off the diagonal of the square so that its
/// `Λ_{≥2,≥3}`-orbit starts 6, 10, 13, 28, 946.
pub fn parallel_pairs6() -> Result<Arr> {
    let q = AnyField::rationals();
    let a = ints(&q, &[[1, 0, 0], [1, 0, -1], [0, 1, 0], [0, 1, -1], [1, 1, 2], [1, 1, 3]]);
    check("parallel-pairs6", a, &[(2, 15)])
}

/// `Q(2cos(2π/m))` and `c = 2cos(2π/m)`.
fn real_cyclotomic_field(m: usize) -> Result<(AnyField, Scalar)> {
    let mp = real_cyclotomic_minpoly(m as u32)?;
    if mp.len() == 2 {
        let q = AnyField::rationals();
        let c = q.from_rational(&(-&mp[0] / &mp[1]))?;
        return Ok((q, c));
    }
    let f = AnyField::new(&FieldSpec::number_field(mp))?;
    let c = f.generator().expect("number fields have a generator");
    Ok((f, c))
}

/// Vertices `ω^k` of the regular `m`-gon in the real basis `{1, ω}`, where
/// `ω² = cω - 1`.
fn polygon_vertices(f: &AnyField, c: &Scalar, m: usize) -> Vec<[Scalar; 2]> {
    let mut v = vec![[f.one(), f.zero()]];
    for _ in 1..m {
        let [a, b] = v.last().expect("nonempty").clone();
        v.push([f.neg(&b), f.add(&a, &f.mul(c, &b))]);
    }
    v
}

fn affine(f: &AnyField, p: &[Scalar; 2]) -> Result<ProjPoint<Scalar>> {
    ProjPoint::new(f, [p[0].clone(), p[1].clone(), f.one()])
}

fn polygonal_lines(m: usize) -> Result<Arr> {
    if m < 3 {
        return Err(Error::Parameter("polygonal needs at least 6 lines".into()));
    }
    let (f, c) = real_cyclotomic_field(m)?;
    let v = polygon_vertices(&f, &c, m);
    let origin = affine(&f, &[f.zero(), f.zero()])?;
    let half = f.inv(&f.from_i64(2))?;
    let mut a = Arrangement::new(f.clone());
    for k in 0..m {
        let p = affine(&f, &v[k])?;
        let q = affine(&f, &v[(k + 1) % m])?;
        a.insert(join(&f, &p, &q)?);
    }
    for k in 0..m {
        let w = &v[(k + 1) % m];
        let mid = [f.mul(&f.add(&v[k][0], &w[0]), &half), f.mul(&f.add(&v[k][1], &w[1]), &half)];
        a.insert(join(&f, &origin, &affine(&f, &v[k])?)?);
        a.insert(join(&f, &origin, &affine(&f, &mid)?)?);
    }
    Ok(a)
}

/// `A₁(2m)`: the `m` edges and `m` symmetry axes of a regular `m`-gon, in
/// affine coordinates `(s, t)` for the point `s + tω`.
pub fn polygonal(n: usize) -> Result<Arr> {
    if n % 2 != 0 || n < 6 {
        return Err(Error::Parameter(format!("polygonal needs an even n >= 6, got {n}")));
    }
    let m = n / 2;
    let a = polygonal_lines(m)?;
    if m == 3 {
        check("polygonal", a, &[(2, 3), (3, 4)])
    } else {
        check("polygonal", a, &[(2, m), (3, m * (m - 1) / 2), (m, 1)])
    }
}

/// `A₁(4k+1)`: `A₁(4k)` together with the line at infinity `z = 0`.
pub fn polygonal_ext(n: usize) -> Result<Arr> {
    if n % 4 != 1 || n < 9 {
        return Err(Error::Parameter(format!("polygonal-ext needs n = 4k+1 >= 9, got {n}")));
    }
    let k = (n - 1) / 4;
    let mut a = polygonal_lines(2 * k)?;
    a.insert(ProjLine::from_ints(a.field(), [0, 0, 1])?);
    let mut t = std::collections::BTreeMap::new();
    for (kk, v) in [(2, 3 * k), (3, 2 * k * (k - 1)), (4, k), (2 * k, 1)] {
        *t.entry(kk).or_insert(0) += v;
    }
    let t: Vec<(usize, usize)> = t.into_iter().filter(|(_, v)| *v > 0).collect();
    check("polygonal-ext", a, &t)
}

const KLEIN_GENERATORS: [[[&str; 3]; 3]; 3] = [
    [["1", "1", "-1/2*x"], ["0", "2", "1/2-1/4*x"], ["-1+x", "-3-x", "-1+x"]],
    [["1", "-1", "-1/2-1/4*x"], ["1+x", "-1", "1/2*x"], ["-2-2*x", "0", "0"]],
    [["1", "1+x", "1"], ["1+x", "1", "1"], ["-2-2*x", "-2-2*x", "-2-x"]],
];

/// Orbit of `x = 0` under the order-168 group acting on the plane over
/// `Q(√-7) = Q[x]/(x²+x+2)`.
pub fn klein() -> Result<Arr> {
    let f = AnyField::number_field(&[2, 1, 1])?;
    let gens: Vec<Projectivity<Scalar>> = KLEIN_GENERATORS
        .iter()
        .map(|m| {
            let rows = parse_rows(&f, m)?;
            Projectivity::new(&f, [rows[0].clone(), rows[1].clone(), rows[2].clone()])
        })
        .collect::<Result<_>>()?;
    let mut a = Arrangement::new(f.clone());
    a.insert(ProjLine::from_ints(&f, [1, 0, 0])?);
    let mut i = 0;
    while i < a.len() {
        let l = a.get(i).expect("in range").clone();
        for g in &gens {
            a.insert(g.apply_line(&f, &l));
        }
        i += 1;
    }
    check("klein", a, &[(3, 28), (4, 21)])
}

/// Three rotation orbits of seven lines. With `u_k = 2cos(2πk/7)` and
/// affine coordinates `(s, t)` for `s + tω`, the line with normal angle
/// `2πa/7` at signed distance `r` is `(u_a, u_{1-a}, -2r)`; the radii are
/// `1, u₁/u₃, u₁/u₂`.
pub fn grunbaum_rigby() -> Result<Arr> {
    let (f, c) = real_cyclotomic_field(7)?;
    let mut u = vec![f.from_i64(2), c.clone()];
    for k in 2..7 {
        let next = f.sub(&f.mul(&c, &u[k - 1]), &u[k - 2]);
        u.push(next);
    }
    let radii = [f.one(), f.div(&u[1], &u[3])?, f.div(&u[1], &u[2])?];
    let mut rows = Vec::new();
    for r in &radii {
        let m2r = f.mul(&f.from_i64(-2), r);
        for a in 0..7 {
            rows.push([u[a].clone(), u[(8 - a) % 7].clone(), m2r.clone()]);
        }
    }
    check("grunbaum-rigby", from_rows(&f, rows)?, &[(2, 63), (3, 7), (4, 21)])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Flashing3,
    Flashing4,
    Flashing4Ambient,
    Unassuming,
}

fn poly_at(f: &AnyField, coeffs: &[i64], t: &Scalar) -> Scalar {
    coeffs
        .iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, t), &f.from_i64(*c)))
}

/// Name of the forbidden-set member `t` hits, if any.
pub fn forbidden_member(family: Family, f: &AnyField, t: &Scalar) -> Option<String> {
    let is = |n: i64, d: i64| f.mul(t, &f.from_i64(d)) == f.from_i64(n);
    let mut simple: Vec<(i64, i64, &str)> = vec![(0, 1, "0"), (1, 1, "1"), (-1, 1, "-1")];
    if family != Family::Unassuming {
        simple.extend([(1, 2, "1/2"), (2, 1, "2")]);
    }
    for (n, d, name) in simple {
        if is(n, d) {
            return Some(name.to_string());
        }
    }
    let (root_poly, name): (&[i64], &str) = match family {
        Family::Flashing3 => (&[1, -1, 1], "a root of t^2-t+1"),
        Family::Flashing4 | Family::Flashing4Ambient => (&[1, -2, 2], "a root of 2t^2-2t+1"),
        Family::Unassuming => (&[1, 0, -18, 0, 1], "a root of t^4-18t^2+1"),
    };
    f.is_zero(&poly_at(f, root_poly, t)).then(|| name.to_string())
}

fn forbidden_text(family: Family) -> &'static str {
    let name = match family {
        Family::Flashing3 => "flashing3",
        Family::Flashing4 => "flashing4",
        Family::Flashing4Ambient => "flashing4-ambient",
        Family::Unassuming => "unassuming",
    };
    entry(name).and_then(|e| e.forbidden).expect("families list a forbidden set")
}

/// Normal vectors (as columns) of the parametrized families.
pub fn family_rows(family: Family, f: &AnyField, t: &Scalar) -> Result<Vec<[Scalar; 3]>> {
    let i = |n: i64| f.from_i64(n);
    let half = f.inv(&i(2))?;
    let t2 = f.mul(t, t);
    let lin = |a: i64, b: i64, c: i64| f.add(&f.add(&f.mul(&i(a), &t2), &f.mul(&i(b), t)), &i(c));
    Ok(match family {
        Family::Flashing3 => vec![
            [i(0), i(1), i(0)],
            [i(1), i(1), i(1)],
            [i(1), t.clone(), i(1)],
            [i(1), i(0), i(0)],
            [i(0), i(0), i(1)],
            [i(1), lin(1, -1, 1), t.clone()],
        ],
        Family::Flashing4 | Family::Flashing4Ambient => {
            let ht = f.mul(&half, t);
            let rows = vec![
                [i(1), i(0), i(0)],
                [i(0), i(0), i(1)],
                [f.sub(&t2, &ht), f.add(&lin(1, -1, 0), &half), f.sub(&t2, &ht)],
                [lin(2, 0, 0), lin(2, -2, 1), t2.clone()],
                [i(1), i(1), i(1)],
                [i(0), i(1), t.clone()],
                [t.clone(), lin(0, 1, -1), i(0)],
                [f.mul(&i(2), t), lin(0, 2, -1), t.clone()],
                [i(0), i(1), i(0)],
                [lin(2, -1, 0), lin(2, -3, 1), lin(1, -1, 0)],
                [t.clone(), f.sub(t, &half), f.sub(t, &half)],
                [i(1), i(1), t.clone()],
            ];
            if family == Family::Flashing4 {
                rows.into_iter().take(8).collect()
            } else {
                rows
            }
        }
        Family::Unassuming => {
            let p = f.mul(&half, &f.add(&i(1), t));
            let m = f.mul(&half, &f.sub(&i(1), t));
            vec![
                [i(1), i(0), i(0)],
                [i(0), i(1), i(0)],
                [i(0), i(0), i(1)],
                [i(1), i(1), i(1)],
                [p.clone(), m.clone(), i(1)],
                [m, p, i(1)],
            ]
        }
    })
}

/// Builds a family member; a forbidden `t` is an error unless
/// `allow_degenerate`, in which case the profile check is skipped and a
/// warning is returned.
pub fn family_build(family: Family, f: &AnyField, t: &Scalar, allow_degenerate: bool) -> Result<Built> {
    let bad = forbidden_member(family, f, t);
    if let Some(member) = &bad {
        if !allow_degenerate {
            return Err(Error::DegenerateParameter {
                value: f.format_elem(t),
                set: forbidden_text(family).to_string(),
            });
        }
        let a = from_rows(f, family_rows(family, f, t)?)?;
        return Ok(Built {
            arrangement: a,
            seed: None,
            warning: Some(format!("degenerate parameter t = {} ({member})", f.format_elem(t))),
        });
    }
    let a = from_rows(f, family_rows(family, f, t)?)?;
    let a = match family {
        Family::Flashing3 => check("flashing3", a, &[(2, 12), (3, 1)])?,
        Family::Flashing4 => check("flashing4", a, &[(2, 22), (4, 1)])?,
        Family::Flashing4Ambient => check("flashing4-ambient", a, &[(2, 12), (3, 16), (4, 1)])?,
        Family::Unassuming => check("unassuming", a, &[(2, 15)])?,
    };
    Ok(Built::plain(a))
}

pub fn flashing3(t: i64) -> Result<Arr> {
    let q = AnyField::rationals();
    Ok(family_build(Family::Flashing3, &q, &q.from_i64(t), false)?.arrangement)
}

pub fn flashing4(t: i64) -> Result<Arr> {
    let q = AnyField::rationals();
    Ok(family_build(Family::Flashing4, &q, &q.from_i64(t), false)?.arrangement)
}

pub fn flashing4_ambient(t: i64) -> Result<Arr> {
    let q = AnyField::rationals();
    Ok(family_build(Family::Flashing4Ambient, &q, &q.from_i64(t), false)?.arrangement)
}

pub fn unassuming(t: i64) -> Result<Arr> {
    let q = AnyField::rationals();
    Ok(family_build(Family::Unassuming, &q, &q.from_i64(t), false)?.arrangement)
}

/// The thirteen lines with normals
/// `(1,0,0), (0,1,0), (0,0,1), (1,1,1), (1,1,a²), (1,a²,a²), (1,b²,1),
/// (1,a²,a), (1,a,a), (1,a,1), (1,b²,b), (1,b,1), (1,b,b)` and `b = sign/a`.
pub fn gv13(f: &AnyField, a: &Scalar, sign: i64) -> Result<Arr> {
    if sign != 1 && sign != -1 {
        return Err(Error::Parameter(format!("gv13 sign must be +1 or -1, got {sign}")));
    }
    if f.is_zero(a) {
        return Err(Error::DegenerateParameter {
            value: "0".into(),
            set: "a != 0".into(),
        });
    }
    let o = f.one();
    let z = f.zero();
    let b = f.mul(&f.from_i64(sign), &f.inv(a)?);
    let (a2, b2) = (f.mul(a, a), f.mul(&b, &b));
    let rows = vec![
        [o.clone(), z.clone(), z.clone()],
        [z.clone(), o.clone(), z.clone()],
        [z.clone(), z, o.clone()],
        [o.clone(), o.clone(), o.clone()],
        [o.clone(), o.clone(), a2.clone()],
        [o.clone(), a2.clone(), a2.clone()],
        [o.clone(), b2.clone(), o.clone()],
        [o.clone(), a2, a.clone()],
        [o.clone(), a.clone(), a.clone()],
        [o.clone(), a.clone(), o.clone()],
        [o.clone(), b2, b.clone()],
        [o.clone(), b.clone(), o.clone()],
        [o, b.clone(), b],
    ];
    let arr = from_rows(f, rows)?;
    let pr = profile(&arr);
    if arr.len() != 13 || !pr.matches(13, &[(2, 25), (3, 11), (5, 2)]) {
        return Err(Error::DegenerateParameter {
            value: f.format_elem(a),
            set: format!("the open set where the profile is t2=25 t3=11 t5=2 (got {pr})"),
        });
    }
    Ok(arr)
}

/// The six points `(a_i : 0 : 1)` and `(0 : b_j : 1)` on the lines
/// `y = 0` and `x = 0`.
pub fn pappus_points() -> Points {
    let q = AnyField::rationals();
    PointConfig::from_ints(q, &[[1, 0, 1], [2, 0, 1], [3, 0, 1], [0, 1, 1], [0, 2, 1], [0, 5, 1]])
        .expect("valid points")
}

/// The two carrier lines, the six cross joins `A_iB_j` (`i ≠ j`) and the
/// Pappus line.
pub fn pappus() -> Result<Arr> {
    let p = pappus_points();
    let f = p.field().clone();
    let pt = |i: usize| p.get(i).expect("six points").clone();
    let mut a = Arrangement::new(f.clone());
    a.insert(ProjLine::from_ints(&f, [0, 1, 0])?);
    a.insert(ProjLine::from_ints(&f, [1, 0, 0])?);
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                a.insert(join(&f, &pt(i), &pt(3 + j))?);
            }
        }
    }
    let cross = |i: usize, j: usize| -> Result<ProjPoint<Scalar>> {
        let l1 = join(&f, &pt(i), &pt(3 + j))?;
        let l2 = join(&f, &pt(j), &pt(3 + i))?;
        crate::geom::meet(&f, &l1, &l2)
    };
    a.insert(join(&f, &cross(0, 1)?, &cross(0, 2)?)?);
    check("pappus", a, &[(2, 9), (3, 9)])
}

/// `n` points `(1 : s : s²)` on the conic `y² = xz`, with distinct integer
/// `s` drawn from the seed. The joins must meet only in the given points
/// and in double points; otherwise the seed is advanced (32 rounds).
pub fn generic_points_on_conic(n: usize, seed: u64) -> Result<(Points, u64)> {
    if n == 0 {
        return Err(Error::Parameter("need at least one point".into()));
    }
    let q = AnyField::rationals();
    for s in seed..seed.saturating_add(32) {
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let mut vals: Vec<i64> = Vec::new();
        while vals.len() < n {
            let v = rng.gen_range(-40..=40);
            if !vals.contains(&v) {
                vals.push(v);
            }
        }
        let rows: Vec<[i64; 3]> = vals.iter().map(|&v| [1, v, v * v]).collect();
        let p = PointConfig::from_ints(q.clone(), &rows)?;
        if n < 4 {
            return Ok((p, s));
        }
        let joins = lines_operator(&Selector::exactly(2), &p);
        let m = joins.len();
        let pr = profile(&joins);
        let expected_t2 = binom2(m) - n * binom2(n - 1);
        let ok = if n == 4 {
            pr.matches(m, &[(2, 3), (3, 4)])
        } else {
            pr.matches(m, &[(2, expected_t2), (n - 1, n)])
        };
        if ok {
            return Ok((p, s));
        }
    }
    Err(Error::GenericityUnattainable { seed })
}

/// The six vertices `(±1 : 0 : 1), (±1/2 : ±√3/2 : 1)` over `Q(√3)`.
pub fn regular_hexagon_points() -> Points {
    let f = AnyField::number_field(&[-3, 0, 1]).expect("x^2-3 is irreducible");
    let rows = [
        ["1", "0", "1"],
        ["1/2", "1/2*x", "1"],
        ["-1/2", "1/2*x", "1"],
        ["-1", "0", "1"],
        ["-1/2", "-1/2*x", "1"],
        ["1/2", "-1/2*x", "1"],
    ];
    let rows = parse_rows(&f, &rows).expect("valid scalars");
    PointConfig::from_triples(f, rows).expect("valid points").0
}

/// Sides `P_i P_{i+1}` of a hexagon on a conic (vertices in sampling
/// order).
pub fn hexagon_on_conic(seed: u64) -> Result<(Arr, u64)> {
    let (p, s) = generic_points_on_conic(6, seed)?;
    let f = p.field().clone();
    let mut a = Arrangement::new(f.clone());
    for i in 0..6 {
        a.insert(join(&f, p.get(i).expect("six"), p.get((i + 1) % 6).expect("six"))?);
    }
    Ok((check("hexagon-on-conic", a, &[(2, 15)])?, s))
}

/// Rays `y = 0`, `x = 0`, `x = y` through the origin and the sides of the
/// triangles `(1,0), (0,1), (1,1)` and `(-4,0), (0,-3), (2,2)`.
pub fn desargues9() -> Result<Arr> {
    let q = AnyField::rationals();
    let pts = PointConfig::from_ints(q.clone(), &[[1, 0, 1], [0, 1, 1], [1, 1, 1], [-4, 0, 1], [0, -3, 1], [2, 2, 1]])?;
    let pt = |i: usize| pts.get(i).expect("six points").clone();
    let mut a = ints(&q, &[[0, 1, 0], [1, 0, 0], [1, -1, 0]]);
    for tri in [0, 3] {
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            a.insert(join(&q, &pt(tri + i), &pt(tri + j))?);
        }
    }
    check("desargues9", a, &[(2, 15), (3, 7)])
}

pub fn finite_plane(q: u64) -> Result<Arr> {
    let f = AnyField::galois(q)?;
    let els = f.elements().expect("finite field");
    let (o, z) = (f.one(), f.zero());
    let mut rows = vec![[z.clone(), z.clone(), o.clone()]];
    for a in &els {
        rows.push([z.clone(), o.clone(), a.clone()]);
        for b in &els {
            rows.push([o.clone(), a.clone(), b.clone()]);
        }
    }
    let n = (q * q + q + 1) as usize;
    check("finite-plane", from_rows(&f, rows)?, &[(q as usize + 1, n)])
}

/// Points of the Reye configuration in projective 3-space: the cube
/// vertices, its centre and the three axis directions.
fn reye_space_points() -> Vec<[i64; 4]> {
    let mut v = Vec::new();
    for x in [-1, 1] {
        for y in [-1, 1] {
            for z in [-1, 1] {
                v.push([x, y, z, 1]);
            }
        }
    }
    v.extend([[0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
    v
}

const REYE_PROJECTION: [[i64; 4]; 3] = [[1, 2, 3, 5], [2, -1, 4, 7], [3, 5, -2, 11]];

/// The twelve Reye points projected to the plane (by a fixed matrix chosen
/// to create no further collinearities).
pub fn reye_points() -> Result<Points> {
    let q = AnyField::rationals();
    let rows: Vec<[i64; 3]> = reye_space_points()
        .iter()
        .map(|p| std::array::from_fn(|i| (0..4).map(|j| REYE_PROJECTION[i][j] * p[j]).sum()))
        .collect();
    let p = PointConfig::from_ints(q, &rows)?;
    let rich = lines_operator(&Selector::at_least(3), &p);
    if p.len() != 12 || rich.len() != 16 || lines_operator(&Selector::exactly(3), &p).len() != 16 {
        return Err(Error::ProfileMismatch {
            name: "reye".into(),
            expected: "12 points on 16 lines of 3".into(),
            got: format!("{} points, {} rich lines", p.len(), rich.len()),
        });
    }
    Ok(p)
}

/// The Reye configuration as twelve lines with sixteen triple points.
pub fn reye() -> Result<Arr> {
    check("reye", dualize_points(&reye_points()?), &[(2, 18), (3, 16)])
}

/// `BigInt` helper for callers that pass integer parameters as text.
pub fn parse_int(s: &str) -> Result<i64> {
    s.trim()
        .parse::<BigInt>()
        .ok()
        .and_then(|b| b.to_i64())
        .ok_or_else(|| Error::Parameter(format!("not an integer: {s}")))
}
