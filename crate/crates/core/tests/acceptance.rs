//! Acceptance checks: one PASS/FAIL line per criterion.
//!
//! A criterion whose only failures are listed as known discrepancies is
//! printed as `FAIL (known)`; the process exits nonzero only on other
//! failures.

use std::collections::{BTreeSet, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use lineop::arrangement::{
    classify_degenerate, dual_lines_op, incidence_index, dualize_lines, dualize_points, freeness_necessary, inequality_report,
    is_km_configuration, lambda_decomposition_check, lambda_op, lines_operator, points_operator, profile,
    projectively_equivalent, psi_op, Arrangement, Degeneracy, PointConfig, Selector,
};
use lineop::catalog::{self, Family, Params};
use lineop::dynamics::{orbit_over_finite_field, run_sequence, Budgets, Operator, SequenceTrace, Verdict};
use lineop::geom::{rich_conics, ProjPoint, Projectivity};
use lineop::matroid::{extract_matroid, matroid_isomorphic};
use lineop::{AnyField, ExactField, Result, Scalar};

type Arr = Arrangement<AnyField>;

fn ex(k: usize) -> Selector {
    Selector::exactly(k)
}

fn ge(k: usize) -> Selector {
    Selector::at_least(k)
}

fn lam(n: Selector, m: Selector, a: &Arr) -> Arr {
    lambda_op(&n, &m, a)
}

fn has(a: &Arr, d: usize, t: &[(usize, usize)]) -> bool {
    profile(a).matches(d, t)
}

fn desc(a: &Arr) -> String {
    profile(a).to_string()
}

#[derive(Default)]
struct Crit {
    failures: Vec<String>,
    known: Vec<String>,
    notes: Vec<String>,
}

impl Crit {
    fn ok(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.failures.push(what.into());
        }
    }

    /// A check that is expected to fail for a recorded reason.
    fn known(&mut self, cond: bool, what: impl Into<String>) {
        if !cond {
            self.known.push(what.into());
        }
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

/// Arrangements and traces gathered for the property suites.
#[derive(Default)]
struct Pool {
    arrs: Vec<(String, Arr)>,
    traces: Vec<(String, Operator, Vec<Arr>)>,
}

const POOL_MAX: usize = 500;

impl Pool {
    fn keep(&mut self, name: &str, a: &Arr) {
        if a.len() <= POOL_MAX {
            self.arrs.push((name.to_string(), a.clone()));
        }
    }

    fn keep_trace(&mut self, name: &str, t: &SequenceTrace<AnyField>) {
        for (i, a) in t.history.iter().enumerate() {
            self.keep(&format!("{name}[{i}]"), a);
        }
        self.traces.push((name.to_string(), t.op.clone(), t.history.clone()));
    }
}

struct Harness {
    pool: Pool,
    unexpected: usize,
}

impl Harness {
    fn run(&mut self, id: u32, title: &str, body: impl FnOnce(&mut Crit, &mut Pool) -> Result<()>) {
        let start = Instant::now();
        let mut c = Crit::default();
        let pool = &mut self.pool;
        match catch_unwind(AssertUnwindSafe(|| body(&mut c, pool))) {
            Ok(Ok(())) => {}
            Ok(Err(e)) => c.failures.push(format!("error: {e}")),
            Err(_) => c.failures.push("panicked".into()),
        }
        let secs = start.elapsed().as_secs_f64();
        let status = if !c.failures.is_empty() {
            self.unexpected += 1;
            "FAIL"
        } else if !c.known.is_empty() {
            "FAIL (known)"
        } else {
            "PASS"
        };
        println!("{status} {id:>2}. {title} [{secs:.1}s]");
        for f in &c.failures {
            println!("      failed: {f}");
        }
        for k in &c.known {
            println!("      known discrepancy: {k}");
        }
        for n in &c.notes {
            println!("      note: {n}");
        }
    }
}

fn steps(op: &Operator, a: &Arr, n: usize) -> SequenceTrace<AnyField> {
    run_sequence(
        op,
        a,
        Budgets {
            max_steps: n,
            max_lines: 50_000,
            profile_lines: 3_000,
        },
    )
}

/// `(d² − Σ k² t_k) / Σ t_k` straight from the counts, as a float.
fn h_value(d: usize, t: &[(usize, usize)]) -> f64 {
    let sq: usize = t.iter().map(|(k, n)| k * k * n).sum();
    let pts: usize = t.iter().map(|(_, n)| n).sum();
    (d * d) as f64 / pts as f64 - sq as f64 / pts as f64
}

fn rat_coords(p: &[Scalar; 3]) -> [BigRational; 3] {
    p.clone().map(|s| match s {
        Scalar::Rat(q) => q,
        _ => panic!("rational coordinates expected"),
    })
}

/// Distinct lines through two of the points, computed with plain integer
/// cross products.
fn count_joins_rational(pts: &[[BigRational; 3]]) -> usize {
    let ints: Vec<[BigInt; 3]> = pts
        .iter()
        .map(|p| {
            let den = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            p.clone().map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        })
        .collect();
    let mut seen = HashSet::new();
    for i in 0..ints.len() {
        for j in i + 1..ints.len() {
            let (a, b) = (&ints[i], &ints[j]);
            let mut l = [
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ];
            let g = l.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
            let lead = l.iter().find(|c| !c.is_zero()).expect("distinct points").is_negative();
            for c in l.iter_mut() {
                *c = &*c / &g;
                if lead {
                    *c = -&*c;
                }
            }
            seen.insert(l);
        }
    }
    seen.len()
}

fn parse_point(f: &AnyField, c: [&str; 3]) -> Result<ProjPoint<Scalar>> {
    ProjPoint::new(f, [f.parse_elem(c[0])?, f.parse_elem(c[1])?, f.parse_elem(c[2])?])
}

fn c1_quadrilateral(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let quad = catalog::complete_quadrilateral();
    let tr = steps(&Operator::lambda_at_least(2, 2), &quad, 3);
    pool.keep_trace("quadrilateral Λ2", &tr);
    let counts = tr.counts();
    c.ok(counts.len() == 4 && counts[..3] == [6, 9, 25], format!("counts {counts:?}"));
    c.known(
        counts == [6, 9, 25, 1471],
        format!("fourth count is {} (1471 expected; 1741 is the computed value)", counts.get(3).copied().unwrap_or(0)),
    );
    c.ok(counts.get(3) == Some(&1741), "fourth count regression value 1741");
    let l2 = &tr.history[2];
    let pts: Vec<[BigRational; 3]> = points_operator(&ge(2), l2).iter().map(|p| rat_coords(p.coords())).collect();
    c.ok(
        count_joins_rational(&pts) == counts[3],
        "independent join count of the 97 points of L2 agrees with step 3",
    );
    c.ok(has(&tr.history[1], 9, &[(2, 6), (3, 4), (4, 3)]), format!("L1 {}", desc(&tr.history[1])));
    c.ok(
        has(&tr.history[2], 25, &[(2, 60), (3, 24), (4, 3), (6, 10)]),
        format!("L2 {}", desc(&tr.history[2])),
    );
    let expected_h = [-1.714, -2.077, -2.464];
    let oracle = [
        h_value(6, &[(2, 3), (3, 4)]),
        h_value(9, &[(2, 6), (3, 4), (4, 3)]),
        h_value(25, &[(2, 60), (3, 24), (4, 3), (6, 10)]),
    ];
    for i in 0..3 {
        let got = tr.steps[i].profile.as_ref().and_then(|p| p.h_approx()).unwrap_or(f64::NAN);
        c.ok(
            (got - expected_h[i]).abs() < 5e-4 && (got - oracle[i]).abs() < 1e-12,
            format!("H of L{i} is {got:.4}"),
        );
    }
    Ok(())
}

fn c2_parallel_pairs(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let c0 = catalog::parallel_pairs6()?;
    let op = Operator::lambda_at_least(2, 3);
    let tr = steps(&op, &c0, 3);
    pool.keep_trace("parallel pairs Λ2,3", &tr);
    c.ok(tr.counts() == [6, 10, 13, 28], format!("counts {:?}", tr.counts()));
    let table: [(usize, &[(usize, usize)]); 4] = [
        (6, &[(2, 15)]),
        (10, &[(2, 9), (3, 6), (4, 3)]),
        (13, &[(2, 12), (3, 16), (4, 3)]),
        (28, &[(2, 87), (3, 31), (4, 15), (6, 3), (7, 3)]),
    ];
    for (i, (d, t)) in table.iter().enumerate() {
        if let Some(a) = tr.history.get(i) {
            c.ok(has(a, *d, t), format!("C{i} {}", desc(a)));
        }
    }
    let c4 = op.apply(&tr.history[3]);
    c.ok(c4.len() == 946, format!("C4 has {} lines", c4.len()));
    Ok(())
}

fn c3_dual_hesse_divergence(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let op = Operator::lambda_at_least(3, 2);
    let tr = steps(&op, &catalog::dual_hesse(), 2);
    pool.keep_trace("dual Hesse Λ3,2", &tr);
    c.ok(tr.counts() == [9, 21, 57], format!("counts {:?}", tr.counts()));
    let next = op.apply(&tr.history[2]);
    c.ok(next.len() == 7401, format!("fourth count {}", next.len()));
    Ok(())
}

fn c4_hesse(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let dh = catalog::dual_hesse();
    let h = catalog::hesse()?;
    pool.keep("dual Hesse", &dh);
    pool.keep("Hesse", &h);
    c.ok(lam(ge(3), ge(3), &h) == h, "Hesse is Λ3-fixed");
    c.ok(lam(ge(3), ge(3), &dh) == dh, "dual Hesse is Λ3-fixed");
    c.ok(has(&dh, 9, &[(3, 12)]), format!("dual Hesse {}", desc(&dh)));
    let f = dh.field().clone();
    let listed = [
        ["1", "0", "0"],
        ["0", "1", "0"],
        ["0", "0", "1"],
        ["1", "1", "1"],
        ["1", "1", "x"],
        ["1", "1", "-1-x"],
        ["1", "x", "1"],
        ["1", "-1-x", "1"],
        ["x", "1", "1"],
        ["-1-x", "1", "1"],
        ["x", "-1-x", "1"],
        ["-1-x", "x", "1"],
    ];
    let listed = PointConfig::from_items(f.clone(), listed.into_iter().map(|p| parse_point(&f, p)).collect::<Result<Vec<_>>>()?);
    c.ok(points_operator(&ge(3), &dh) == listed, "triple points are the twelve listed points");
    let h21 = lam(ge(3), ge(2), &dh);
    pool.keep("Λ3,2(dual Hesse)", &h21);
    c.ok(has(&h21, 21, &[(2, 36), (4, 9), (5, 12)]), format!("Λ3,2 image {}", desc(&h21)));
    let lit = lam(ex(2), ex(4), &dh);
    c.known(
        projectively_equivalent(&lit, &dh)?.is_some(),
        format!("Λ{{2}},{{4}}(dual Hesse) has {} lines; the dual Hesse has no double points", lit.len()),
    );
    let back = lam(ex(2), ex(4), &h21);
    c.ok(
        projectively_equivalent(&back, &dh)?.is_some(),
        "Λ{2},{4} of the 21-line image is equivalent to the dual Hesse",
    );
    c.ok(freeness_necessary(&profile(&h)) == Some((4, 7)), "Hesse freeness roots 4, 7");
    Ok(())
}

fn flashing3_at(t: &str, f: &AnyField, degenerate: bool) -> Result<Arr> {
    Ok(catalog::family_build(Family::Flashing3, f, &f.parse_elem(t)?, degenerate)?.arrangement)
}

fn c5_flashing(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let q = AnyField::rationals();
    let op = Operator::lambda_exact(2, 3);
    for t in ["3", "5", "-1/3"] {
        let f0 = flashing3_at(t, &q, false)?;
        let tr = steps(&op, &f0, 6);
        pool.keep_trace(&format!("flashing3 t={t}"), &tr);
        c.ok(
            tr.verdict == Verdict::Cycle { preperiod: 0, period: 2 },
            format!("t={t}: verdict {}", tr.verdict),
        );
        let tv = q.parse_elem(t)?;
        let new_normals = [
            [q.one(), q.one(), q.zero()],
            [q.one(), tv.clone(), tv.clone()],
            [q.zero(), tv.clone(), q.one()],
        ];
        let expected = Arrangement::from_triples(q.clone(), new_normals)?.0;
        let f1 = &tr.history[1];
        c.ok(f1.difference(&f0) == expected, format!("t={t}: new normals"));
        let u = f0.union(f1);
        c.ok(has(&u, 9, &[(2, 6), (3, 10)]), format!("t={t}: union {}", desc(&u)));
        let o = q.one();
        let one_minus = q.sub(&o, &tv);
        let gamma = Projectivity::new(
            &q,
            [
                [q.neg(&o), o.clone(), one_minus.clone()],
                [q.neg(&tv), tv.clone(), one_minus],
                [q.neg(&tv), o.clone(), q.zero()],
            ],
        )?;
        let g2 = gamma.compose(&q, &gamma);
        c.ok(g2.same_as(&q, &Projectivity::identity(&q)), format!("t={t}: γ² = Id"));
        let as_lines = f0.apply(&gamma) == *f1;
        let as_normals = dualize_points(&dualize_lines(&f0).apply(&gamma)) == *f1;
        c.ok(as_lines || as_normals, format!("t={t}: γF0 = F1"));
        if t == "3" {
            c.note(format!(
                "γ maps F0 to F1 acting on lines: {as_lines}; acting on normals: {as_normals}"
            ));
        }
    }
    for t in ["2", "1/2"] {
        let f0 = flashing3_at(t, &q, true)?;
        let tr = steps(&op, &f0, 4);
        pool.keep_trace(&format!("flashing3 t={t}"), &tr);
        c.ok(
            tr.counts() == [6, 7, 0] && tr.verdict == Verdict::Extinguished { length: 2 },
            format!("t={t}: counts {:?}, {}", tr.counts(), tr.verdict),
        );
    }
    let w = AnyField::number_field(&[1, 1, 1])?;
    let f0 = flashing3_at("-x", &w, true)?;
    let img = lam(ex(2), ex(3), &f0);
    let ceva3 = profile(&catalog::ceva(3)?);
    pool.keep("flashing3 t=τ", &f0);
    c.ok(
        profile(&img) == ceva3 || profile(&f0.union(&img)) == ceva3,
        format!("t=τ: image {}, union {}", desc(&img), desc(&f0.union(&img))),
    );
    Ok(())
}

fn c6_flashing_duals(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let f0 = catalog::flashing3(3)?;
    let a0 = dual_lines_op(&ex(2), &f0);
    c.ok(has(&a0, 12, &[(2, 18), (3, 6), (5, 3)]), format!("𝒟{{2}}(F0) {}", desc(&a0)));
    let tr = steps(&Operator::lambda_exact(3, 2), &a0, 6);
    pool.keep_trace("𝒟{2}(F0) Λ{3},{2}", &tr);
    c.ok(tr.verdict == Verdict::Cycle { preperiod: 0, period: 2 }, format!("Λ{{3}},{{2}}: {}", tr.verdict));

    let c0 = catalog::flashing4(3)?;
    let tr = steps(&Operator::lambda_exact(2, 4), &c0, 6);
    pool.keep_trace("C0 Λ{2},{4}", &tr);
    c.ok(tr.verdict == Verdict::Cycle { preperiod: 0, period: 2 }, format!("Λ{{2}},{{4}}: {}", tr.verdict));
    let c1 = tr.history[1].clone();
    c.ok(projectively_equivalent(&c0, &c1)?.is_some(), "C0 and C1 are projectively equivalent");
    let amb = c0.union(&c1);
    c.ok(amb == catalog::flashing4_ambient(3)?, "C0 ∪ C1 is the 12-line set");
    let km = is_km_configuration(&amb, 3, 4);
    c.ok(
        km.holds && km.r == 16 && km.s == 12,
        format!("(16_3, 12_4): r={} s={} holds={}", km.r, km.s, km.holds),
    );
    let d0 = dual_lines_op(&ex(2), &c0);
    let d1 = dual_lines_op(&ex(2), &c1);
    for (i, d) in [&d0, &d1].into_iter().enumerate() {
        pool.keep(&format!("𝒟{{2}}(C{i})"), d);
        c.ok(has(d, 22, &[(2, 99), (4, 8), (7, 4)]), format!("𝒟{{2}}(C{i}) {}", desc(d)));
    }
    c.ok(lam(ex(4), ex(2), &d0) == d1, "Λ{4},{2} maps the dual of C0 to the dual of C1");
    let u = d0.union(&d1);
    pool.keep("dual union", &u);
    c.ok(has(&u, 28, &[(2, 180), (4, 5), (7, 8)]), format!("dual union {}", desc(&u)));
    Ok(())
}

fn unassuming_conditions(c: &mut Crit, a: &Arr, label: &str) -> Result<()> {
    c.ok(has(a, 6, &[(2, 15)]), format!("{label}: {}", desc(a)));
    let d = dual_lines_op(&ex(2), a);
    c.ok(has(&d, 15, &[(2, 27), (3, 6), (5, 6)]), format!("{label}: 𝒟{{2}} {}", desc(&d)));
    let pts: Vec<_> = dualize_lines(a).iter().cloned().collect();
    c.ok(rich_conics(a.field(), &pts, 6)?.is_empty(), format!("{label}: the six dual points lie on a conic"));
    Ok(())
}

fn c7_unassuming(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let u = catalog::unassuming(3)?;
    unassuming_conditions(c, &u, "C0")?;
    let tr = steps(&Operator::lambda_exact(2, 3), &u, 5);
    pool.keep_trace("unassuming Λ{2},{3}", &tr);
    c.ok(tr.history.len() == 6, format!("{} steps computed", tr.history.len()));
    for (i, a) in tr.history.iter().enumerate().skip(1) {
        unassuming_conditions(c, a, &format!("C{i}"))?;
    }
    let doubles: Vec<_> = points_operator(&ex(2), &u).iter().cloned().collect();
    let conics = rich_conics(u.field(), &doubles, 6)?;
    let irreducible: Vec<_> = conics.iter().filter(|r| r.irreducible).collect();
    c.ok(
        irreducible.len() == 12 && irreducible.iter().all(|r| r.points.len() == 6),
        format!("{} irreducible rich conics", irreducible.len()),
    );
    Ok(())
}

fn c8_gv13(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let q = AnyField::rationals();
    let a = q.from_i64(2);
    let plus = catalog::gv13(&q, &a, 1)?;
    let minus = catalog::gv13(&q, &a, -1)?;
    pool.keep("gv13+", &plus);
    pool.keep("gv13-", &minus);
    let (p, m) = (lam(ex(3), ex(2), &plus), lam(ex(3), ex(2), &minus));
    c.ok(p.len() == 18 && m.len() == 30, format!("Λ{{3}},{{2}}: {} and {} lines", p.len(), m.len()));
    let (pl, ml) = (lam(ex(3), ge(2), &plus), lam(ex(3), ge(2), &minus));
    c.known(
        pl.len() == 18 && ml.len() == 30,
        format!("Λ{{3}},≥2 gives {} and {} lines", pl.len(), ml.len()),
    );
    let listed: [&[usize]; 13] = [
        &[1, 5, 7],
        &[1, 8, 10],
        &[1, 11, 12],
        &[2, 5, 6],
        &[2, 8, 9],
        &[2, 11, 13],
        &[3, 4, 5],
        &[3, 6, 8],
        &[3, 7, 11],
        &[3, 9, 10],
        &[3, 12, 13],
        &[2, 4, 7, 10, 12],
        &[1, 4, 6, 9, 13],
    ];
    let want: BTreeSet<Vec<usize>> = listed.iter().map(|f| f.iter().map(|i| i - 1).collect()).collect();
    for (name, arr) in [("+", &plus), ("-", &minus)] {
        let got: BTreeSet<Vec<usize>> = extract_matroid(arr).flats().iter().cloned().collect();
        c.ok(got == want, format!("gv13{name} flats"));
    }
    Ok(())
}

fn c9_classical(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let (hex, seed) = catalog::hexagon_on_conic(0)?;
    pool.keep("hexagon", &hex);
    let pascal = lam(ex(2), ex(3), &hex);
    c.ok(pascal.len() == 1, format!("Pascal: {} lines (seed {seed})", pascal.len()));

    let (p6, _) = catalog::generic_points_on_conic(6, 0)?;
    let l15 = lines_operator(&ex(2), &p6);
    pool.keep("hexagrammum generic", &l15);
    let img = lam(ex(2), ex(3), &l15);
    c.ok(l15.len() == 15 && img.len() == 60, format!("hexagrammum generic: {} lines", img.len()));
    let reg = lines_operator(&ex(2), &catalog::regular_hexagon_points());
    pool.keep("hexagrammum regular", &reg);
    let img = lam(ex(2), ex(3), &reg);
    c.ok(reg.len() == 15 && img.len() == 67, format!("hexagrammum regular: {} lines", img.len()));

    let l9 = lines_operator(&ex(2), &catalog::pappus_points());
    pool.keep("Pappus joins", &l9);
    let img = lam(ex(2), ex(3), &l9);
    c.ok(img.len() == 6, format!("Pappus: {} lines", img.len()));
    c.ok(
        has(&catalog::pappus()?, 9, &[(2, 9), (3, 9)]),
        "Pappus configuration profile",
    );

    let d9 = catalog::desargues9()?;
    pool.keep("Desargues", &d9);
    let axis = lam(ex(2), ex(3), &d9);
    c.ok(axis.len() == 1, format!("Desargues: {} lines", axis.len()));
    let l10 = lam(ge(2), ge(3), &d9);
    pool.keep("Desargues L10", &l10);
    let km = is_km_configuration(&l10, 3, 3);
    c.ok(
        l10.len() == 10 && km.holds && km.r == 10,
        format!("L10: {} (10_3 holds={})", desc(&l10), km.holds),
    );
    c.ok(lam(ge(3), ge(3), &l10) == l10, "Λ3(L10) = L10");
    Ok(())
}

fn c10_klein(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let k = catalog::klein()?;
    pool.keep("Klein", &k);
    c.ok(has(&k, 21, &[(3, 28), (4, 21)]), format!("Klein {}", desc(&k)));
    c.ok(lam(ge(4), ge(4), &k) == k, "Klein is Λ4-fixed");
    let k3 = lam(ge(3), ge(3), &k);
    pool.keep("Λ3(Klein)", &k3);
    c.ok(
        has(&k3, 133, &[(2, 2436), (3, 588), (4, 84), (5, 168), (9, 28), (12, 21)]),
        format!("Λ3 image {}", desc(&k3)),
    );
    let k43 = lam(ge(4), ge(3), &k);
    pool.keep("Λ4,3(Klein)", &k43);
    c.ok(has(&k43, 49, &[(2, 252), (3, 112), (8, 21)]), format!("Λ4,3 image {}", desc(&k43)));
    c.ok(lam(ge(4), ge(4), &k43) == k, "Λ4 of the 49 lines is Klein");
    c.note("Wiman Λ4,5 stretch item not run: no Wiman coordinates are built");
    Ok(())
}

fn c11_grunbaum_rigby(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let g = catalog::grunbaum_rigby()?;
    pool.keep("GR", &g);
    c.ok(has(&g, 21, &[(2, 63), (3, 7), (4, 21)]), format!("GR {}", desc(&g)));
    c.ok(lam(ge(4), ge(4), &g) == g, "GR is Λ4-fixed");
    let g3 = lam(ge(3), ge(3), &g);
    pool.keep("Λ3(GR)", &g3);
    let pr = profile(&g3);
    c.ok(g3.len() == 50, format!("Λ3 image has {} lines", g3.len()));
    c.ok(pr.t(7) == 29, format!("Λ3 image t7 = {}", pr.t(7)));
    c.known(
        pr.matches(50, &[(2, 259), (3, 119), (7, 29)]),
        format!("Λ3 image {pr} (printed profile t2=259 t3=119 t7=29)"),
    );
    let g43 = lam(ge(4), ge(4), &g3);
    pool.keep("Λ4Λ3(GR)", &g43);
    c.ok(g43.len() == 29, format!("Λ4∘Λ3 image {}", desc(&g43)));
    let l4 = lines_operator(&ge(4), &points_operator(&ge(3), &g));
    pool.keep("ℒ4(P1)", &l4);
    c.known(l4.len() == 28, format!("ℒ4(P1) is {}: the 7 triple points are collinear", desc(&l4)));
    let axis = lines_operator(&ge(7), &points_operator(&ex(3), &g));
    c.ok(axis.len() == 1 && l4 == g.union(&axis), "ℒ4(P1) is L0 and the line through the triple points");
    let l28 = g43.difference(&axis);
    pool.keep("Λ4Λ3(GR) minus axis", &l28);
    let km = is_km_configuration(&l28, 3, 3);
    c.ok(
        has(&l28, 28, &[(2, 63), (3, 28), (5, 21), (7, 1)]) && km.holds && km.r == 28,
        format!("28 lines {} (28_3 holds={})", desc(&l28), km.holds),
    );
    c.ok(lam(ge(4), ge(4), &l28) == l28, "the 28 lines are Λ4-fixed");
    c.ok(lam(ge(4), ge(3), &g3) == g3, "Λ3 image is Λ4,3-fixed");
    let h = profile(&l28).h_constant()?;
    c.ok(h == BigRational::new((-294).into(), 113.into()), format!("28 lines H = {h}"));
    let h29 = profile(&g43).h_constant()?;
    c.ok(h29 == BigRational::new((-157).into(), 60.into()), format!("29 lines H = {h29}"));
    let quad = |a: &Arr| extract_matroid(a).restrict_flat_size(4);
    c.ok(
        matroid_isomorphic(&quad(&g), &quad(&catalog::klein()?)).is_some(),
        "the 21_4 structures of GR and Klein are isomorphic",
    );
    Ok(())
}

fn c12_generic(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let op = Operator::lambda_exact(2, 2);
    let (g4, _) = catalog::generic(4, 0)?;
    let tr = steps(&op, &g4, 4);
    pool.keep_trace("4 generic Λ{2},{2}", &tr);
    c.ok(
        tr.counts() == [4, 3, 3] && tr.verdict == Verdict::Fixed { at: 1 },
        format!("4 lines: {:?} {}", tr.counts(), tr.verdict),
    );
    let (g5, seed) = catalog::generic(5, 0)?;
    let l1 = op.apply(&g5);
    let l2 = op.apply(&l1);
    pool.keep("5 generic", &g5);
    pool.keep("5 generic L1", &l1);
    c.ok(l1.len() == 15 && l2.len() == 2070, format!("5 lines (seed {seed}): 15 → {} → {}", l1.len(), l2.len()));
    let disjoint = g5.intersection(&l1).is_empty() && g5.intersection(&l2).is_empty() && l1.intersection(&l2).is_empty();
    c.ok(disjoint, "the three arrangements are pairwise line-disjoint");
    Ok(())
}

/// `(preperiod, period)` by storing the whole orbit.
fn naive_orbit(op: &Operator, a: &Arr) -> (usize, usize) {
    let mut seen = vec![a.clone()];
    loop {
        let next = op.apply(seen.last().expect("nonempty"));
        if let Some(i) = seen.iter().position(|x| *x == next) {
            return (i, seen.len() - i);
        }
        seen.push(next);
    }
}

fn c13_finite(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    for q in 2..=5u64 {
        let plane = catalog::finite_plane(q)?;
        pool.keep(&format!("P2(F{q})"), &plane);
        for n in 2..=q as usize + 1 {
            for m in 2..=q as usize + 1 {
                c.ok(lam(ge(n), ge(m), &plane) == plane, format!("F{q}: Λ≥{n},≥{m} moves the plane"));
            }
        }
    }
    let f2 = AnyField::galois(2)?;
    let quad = Arrangement::from_ints(f2.clone(), &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, -1, 0], [1, 0, -1], [0, 1, -1]])?;
    let fano = catalog::finite_plane(2)?;
    let lit = lam(ge(3), ge(3), &quad);
    c.known(lit == fano, format!("Λ3 of the quadrilateral over F2 has {} lines", lit.len()));
    c.ok(lam(ge(2), ge(3), &quad) == fano, "Λ≥2,≥3 of the quadrilateral over F2 is the Fano plane");

    let f3 = AnyField::galois(3)?;
    let all: Vec<_> = catalog::finite_plane(3)?.iter().cloned().collect();
    let ops = [
        Operator::lambda_at_least(2, 2),
        Operator::lambda_at_least(2, 3),
        Operator::lambda_at_least(3, 2),
        Operator::lambda_at_least(3, 3),
        Operator::lambda_exact(2, 3),
    ];
    let mut checked = 0;
    let mut bad = 0;
    for mask in 0u32..(1 << all.len()) {
        let a = Arrangement::from_items(f3.clone(), (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i].clone()));
        for op in &ops {
            checked += 1;
            if orbit_over_finite_field(op, &a)? != naive_orbit(op, &a) {
                bad += 1;
            }
        }
    }
    c.ok(bad == 0, format!("{bad} of {checked} F3 orbits disagree with the stored-orbit count"));
    c.note(format!("{checked} F3 orbits checked"));
    Ok(())
}

/// Point selector `≥k` with `k` the least threshold keeping at most
/// `limit` points, so the check stays cheap on large arrangements.
fn cheap_threshold(a: &Arr, limit: usize) -> usize {
    let pr = profile(a);
    let mut k = 2;
    while pr.t.iter().filter(|(&m, _)| m >= k).map(|(_, n)| n).sum::<usize>() > limit {
        k += 1;
    }
    k
}

/// `Λ≥2,≥2(L) = L` iff every line holds two singular points and every two
/// singular points lie on a common line of `L`.
fn lambda2_fixed_by_incidence(a: &Arr) -> bool {
    let idx = incidence_index(a);
    let mut per_line = vec![0usize; a.len()];
    for (_, lines) in &idx.entries {
        for &i in lines {
            per_line[i] += 1;
        }
    }
    let p = idx.len();
    let joined: usize = per_line.iter().map(|n| n * n.saturating_sub(1) / 2).sum();
    per_line.iter().all(|&n| n >= 2) && joined == p * p.saturating_sub(1) / 2
}

fn c14_properties(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let builds: Vec<(&str, Params)> = catalog::ENTRIES
        .iter()
        .flat_map(|e| {
            let base = Params::default();
            match e.name {
                "trivial" | "quasi-trivial" | "generic" => vec![(e.name, Params { n: Some(5), ..base })],
                "ceva" | "ceva-ext" => (2..=5).map(|n| (e.name, Params { n: Some(n), ..base.clone() })).collect(),
                "polygonal" => [6, 8, 10, 12].map(|n| (e.name, Params { n: Some(n), ..base.clone() })).to_vec(),
                "polygonal-ext" => [9, 13, 17].map(|n| (e.name, Params { n: Some(n), ..base.clone() })).to_vec(),
                "finite-plane" => (2..=5).map(|q| (e.name, Params { q: Some(q), ..base.clone() })).collect(),
                _ => vec![(e.name, base)],
            }
        })
        .collect();
    for (name, p) in &builds {
        let b = catalog::build(name, p)?;
        pool.keep(&format!("catalog {name}"), &b.arrangement);
    }
    let mut count = [0usize; 8];
    let mut literal_misses = 0;
    for (name, a) in &pool.arrs {
        let pr = profile(a);
        let d = a.len();
        let pairs: usize = pr.t.iter().map(|(k, n)| k * (k - 1) / 2 * n).sum();
        c.ok(pairs == d * d.saturating_sub(1) / 2, format!("{name}: Σ C(k,2) t_k = {pairs}"));
        count[0] += 1;

        let k = cheap_threshold(a, 60);
        let (n, m) = (ge(k), ge(2));
        let left = dualize_lines(&lambda_op(&n, &m, a));
        let right = psi_op(&n, &m, &dualize_lines(a));
        c.ok(left == right, format!("{name}: 𝒟∘Λ≥{k},≥2 ≠ Ψ∘𝒟"));
        count[1] += 1;

        let (ns, ms) = (Selector::of(&[k, k + 1]), Selector::of(&[2, 3]));
        if !lambda_decomposition_check(&ns, &ms, a)? {
            literal_misses += 1;
        }
        let whole = lambda_op(&ns, &ms, a);
        let by_m = lambda_op(&ns, &ex(2), a).union(&lambda_op(&ns, &ex(3), a));
        c.ok(whole == by_m, format!("{name}: Λ{{{k},{}}},{{2,3}} is not the union over m", k + 1));
        let (pk, pk1) = (points_operator(&ex(k), a), points_operator(&ex(k + 1), a));
        c.ok(
            pk.intersection(&pk1).is_empty() && pk.union(&pk1) == points_operator(&ns, a),
            format!("{name}: 𝒫{{{k},{}}} is not the disjoint union", k + 1),
        );
        count[2] += 1;

        let f = a.field();
        let real = f.characteristic() == 0 && f.real_roots().map(|r| !r.is_empty()).unwrap_or(false);
        let rep = inequality_report(a, real);
        if rep.de_bruijn_erdos.applicable {
            c.ok(rep.de_bruijn_erdos.value >= 0, format!("{name}: De Bruijn–Erdős slack {}", rep.de_bruijn_erdos.value));
            count[3] += 1;
        }
        if rep.melchior.applicable {
            c.ok(rep.melchior.value >= 0, format!("{name}: Melchior slack {}", rep.melchior.value));
            count[4] += 1;
        }
        if rep.hirzebruch.applicable && !rep.hirzebruch.informational {
            c.ok(rep.hirzebruch.value >= 0, format!("{name}: Hirzebruch slack {}", rep.hirzebruch.value));
            count[5] += 1;
        }
        let fixed = lambda2_fixed_by_incidence(a);
        if d <= 30 {
            c.ok(fixed == (lam(ge(2), ge(2), a) == *a), format!("{name}: Λ2-fixed test disagrees with Λ2"));
        }
        if fixed {
            let class = classify_degenerate(a);
            c.ok(
                matches!(class, Degeneracy::Empty | Degeneracy::QuasiTrivial | Degeneracy::FinitePlane),
                format!("{name}: Λ2-fixed but {}", class.name()),
            );
            count[6] += 1;
        }
    }
    for (name, op, hist) in &pool.traces {
        let Some((n, m)) = op.as_lambda() else { continue };
        let bound = n.min() * m.min();
        for w in hist.windows(2) {
            c.ok(w[1].is_subset(&w[0]) || w[0].len() >= bound, format!("{name}: growth from {} lines", w[0].len()));
        }
        count[7] += 1;
    }
    c.known(
        literal_misses == 0,
        format!(
            "Λ over selector sets equals the union of single-value Λ on {} of {} arrangements; a line through one double and one triple point breaks it",
            count[2] - literal_misses,
            count[2]
        ),
    );
    c.note(format!(
        "{} arrangements: {} duality, {} decomposition, {} DBE, {} Melchior, {} Hirzebruch, {} Λ2-fixed; {} traces",
        count[0], count[1], count[2], count[3], count[4], count[5], count[6], count[7]
    ));
    Ok(())
}

fn c15_polygonal(c: &mut Crit, pool: &mut Pool) -> Result<()> {
    let l3 = |a: &Arr| lam(ge(3), ge(3), a);
    let a10 = catalog::polygonal(10)?;
    let a12 = catalog::polygonal(12)?;
    let a13 = catalog::polygonal_ext(13)?;
    let a9 = catalog::polygonal_ext(9)?;
    for (n, a) in [("A1(10)", &a10), ("A1(12)", &a12), ("A1(13)", &a13), ("A1(9)", &a9)] {
        pool.keep(n, a);
    }
    c.ok(l3(&a10) == a10, "A1(10) is Λ3-fixed");
    c.ok(l3(&a12) == a13, "Λ3(A1(12)) = A1(13)");
    c.ok(l3(&a13) == a13, "A1(13) is Λ3-fixed");
    let img = l3(&a9);
    c.ok(has(&img, 6, &[(2, 3), (3, 4)]), format!("Λ3(A1(9)) {}", desc(&img)));
    Ok(())
}

fn main() {
    let mut h = Harness {
        pool: Pool::default(),
        unexpected: 0,
    };
    h.run(1, "Λ2 orbit of the complete quadrilateral", c1_quadrilateral);
    h.run(2, "Λ2,3 orbit of three parallel pairs", c2_parallel_pairs);
    h.run(3, "Λ3,2 orbit of the dual Hesse", c3_dual_hesse_divergence);
    h.run(4, "Hesse and dual Hesse", c4_hesse);
    h.run(5, "six-line flashing family", c5_flashing);
    h.run(6, "flashing duals and the eight-line family", c6_flashing_duals);
    h.run(7, "unassuming arrangements", c7_unassuming);
    h.run(8, "thirteen-line Zariski pair", c8_gv13);
    h.run(9, "Pascal, hexagrammum, Pappus and Desargues", c9_classical);
    h.run(10, "Klein arrangement", c10_klein);
    h.run(11, "Grünbaum–Rigby arrangement", c11_grunbaum_rigby);
    h.run(12, "generic four and five lines", c12_generic);
    h.run(13, "finite planes", c13_finite);
    h.run(14, "property suites", c14_properties);
    h.run(15, "polygonal arrangements", c15_polygonal);
    if h.unexpected > 0 {
        println!("{} criteria failed", h.unexpected);
        std::process::exit(1);
    }
}
