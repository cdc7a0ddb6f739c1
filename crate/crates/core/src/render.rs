//! SVG pictures of real arrangements on an affine chart.

use std::fmt::Write as _;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::arrangement::{incidence::for_each_group, Arrangement};
use crate::error::{Error, Result};
use crate::field::ExactField;

const TOL: f64 = 1e-9;

const STYLE: &str = "line{stroke-width:1.5;fill:none}\
.step0{stroke:black}.step1{stroke:blue}.step2{stroke:red}.step3{stroke:green}\
circle{fill:black;stroke:none}rect.frame{fill:white;stroke:#999}";

#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub x_range: (BigRational, BigRational),
    pub y_range: (BigRational, BigRational),
    /// Index of the homogeneous coordinate set to 1.
    pub chart: usize,
    pub root_index: usize,
    pub mark_points: bool,
    /// Width and height of the picture in pixels.
    pub size: u32,
}

impl Default for RenderSpec {
    fn default() -> Self {
        let r = |n: i64| BigRational::from_integer(n.into());
        RenderSpec {
            x_range: (r(-2), r(2)),
            y_range: (r(-2), r(2)),
            chart: 2,
            root_index: 0,
            mark_points: true,
            size: 600,
        }
    }
}

impl RenderSpec {
    /// The square window `[-r, r]²` on the chart `z = 1`.
    pub fn square(r: i64) -> Self {
        let r = BigRational::from_integer(r.into());
        RenderSpec {
            x_range: (-r.clone(), r.clone()),
            y_range: (-r.clone(), r),
            ..RenderSpec::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Segment {
    pub class: String,
    pub from: (f64, f64),
    pub to: (f64, f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Marker {
    pub at: (f64, f64),
    pub multiplicity: usize,
}

#[derive(Debug, Clone)]
pub struct Rendered {
    pub svg: String,
    pub segments: Vec<Segment>,
    pub markers: Vec<Marker>,
    /// Lines equal to the line at infinity of the chart.
    pub omitted: usize,
    /// Lines that miss the window.
    pub outside: usize,
}

struct Window {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
}

impl Window {
    fn contains(&self, (x, y): (f64, f64)) -> bool {
        x >= self.x0 - TOL && x <= self.x1 + TOL && y >= self.y0 - TOL && y <= self.y1 + TOL
    }

    /// Part of the line `a x + b y + c = 0` inside the window.
    fn clip(&self, a: f64, b: f64, c: f64) -> Option<((f64, f64), (f64, f64))> {
        let mut hits: Vec<(f64, f64)> = Vec::new();
        if b.abs() > TOL * a.abs().max(1.0) {
            for x in [self.x0, self.x1] {
                hits.push((x, -(a * x + c) / b));
            }
        }
        if a.abs() > TOL * b.abs().max(1.0) {
            for y in [self.y0, self.y1] {
                hits.push((-(b * y + c) / a, y));
            }
        }
        hits.retain(|p| self.contains(*p));
        let clamp = |(x, y): (f64, f64)| (x.clamp(self.x0, self.x1), y.clamp(self.y0, self.y1));
        let hits: Vec<(f64, f64)> = hits.into_iter().map(clamp).collect();
        // extreme points along the line direction (-b, a)
        let key = |p: &(f64, f64)| -b * p.0 + a * p.1;
        let lo = hits.iter().copied().min_by(|p, q| key(p).total_cmp(&key(q)))?;
        let hi = hits.iter().copied().max_by(|p, q| key(p).total_cmp(&key(q)))?;
        let span = (hi.0 - lo.0).abs().max((hi.1 - lo.1).abs());
        (span > TOL).then_some((lo, hi))
    }
}

fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Renders the layers, each drawn with its CSS class, and marks every point
/// where at least two of the drawn lines meet.
pub fn render_svg<F: ExactField>(layers: &[(&Arrangement<F>, &str)], spec: &RenderSpec) -> Result<Rendered> {
    let w = Window {
        x0: to_f64(&spec.x_range.0),
        x1: to_f64(&spec.x_range.1),
        y0: to_f64(&spec.y_range.0),
        y1: to_f64(&spec.y_range.1),
    };
    if !(w.x0 < w.x1 && w.y0 < w.y1) {
        return Err(Error::EmptyWindow);
    }
    if spec.chart > 2 {
        return Err(Error::OutOfRange(format!("chart index {} is not 0, 1 or 2", spec.chart)));
    }
    let (ci, cj, cc) = match spec.chart {
        0 => (1, 2, 0),
        1 => (0, 2, 1),
        _ => (0, 1, 2),
    };
    let mut segments = Vec::new();
    let (mut omitted, mut outside) = (0, 0);
    let mut all: Option<Arrangement<F>> = None;
    for (arr, class) in layers {
        let f = arr.field();
        if !arr.is_empty() {
            f.real_roots()?;
        }
        let emb = |e: &F::Elem| f.real_embedding(e, spec.root_index);
        for l in arr.iter() {
            let c = l.coords();
            let (a, b, k) = (emb(&c[ci])?, emb(&c[cj])?, emb(&c[cc])?);
            if f.is_zero(&c[ci]) && f.is_zero(&c[cj]) {
                omitted += 1;
                continue;
            }
            match w.clip(a, b, k) {
                Some((from, to)) => segments.push(Segment {
                    class: class.to_string(),
                    from,
                    to,
                }),
                None => outside += 1,
            }
        }
        all = Some(match all {
            None => (*arr).clone(),
            Some(u) => u.union(arr),
        });
    }
    let mut markers = Vec::new();
    if let (true, Some(u)) = (spec.mark_points, &all) {
        let f = u.field();
        let items: Vec<_> = u.iter().map(|l| l.coords().clone()).collect();
        let mut err = None;
        for_each_group(f, &items, |p, members| {
            if f.is_zero(&p[cc]) || err.is_some() {
                return;
            }
            let coord = |i: usize| -> Result<f64> {
                Ok(f.real_embedding(&p[i], spec.root_index)? / f.real_embedding(&p[cc], spec.root_index)?)
            };
            match (coord(ci), coord(cj)) {
                (Ok(x), Ok(y)) if w.contains((x, y)) => markers.push(Marker {
                    at: (x, y),
                    multiplicity: members.len(),
                }),
                (Err(e), _) | (_, Err(e)) => err = Some(e),
                _ => {}
            }
        });
        if let Some(e) = err {
            return Err(e);
        }
        markers.sort_by(|a, b| a.at.0.total_cmp(&b.at.0).then(a.at.1.total_cmp(&b.at.1)));
    }
    let svg = emit(&w, spec.size, &segments, &markers);
    Ok(Rendered {
        svg,
        segments,
        markers,
        omitted,
        outside,
    })
}

fn emit(w: &Window, size: u32, segments: &[Segment], markers: &[Marker]) -> String {
    let s = size as f64;
    let px = |(x, y): (f64, f64)| ((x - w.x0) / (w.x1 - w.x0) * s, (w.y1 - y) / (w.y1 - w.y0) * s);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let _ = writeln!(out, "<style>{STYLE}</style>");
    let _ = writeln!(out, r#"<rect class="frame" x="0" y="0" width="{size}" height="{size}"/>"#);
    for seg in segments {
        let (a, b) = (px(seg.from), px(seg.to));
        let _ = writeln!(
            out,
            r#"<line class="{}" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#,
            seg.class, a.0, a.1, b.0, b.1
        );
    }
    for m in markers {
        let p = px(m.at);
        let r = 1.0 + m.multiplicity as f64;
        let _ = writeln!(
            out,
            r#"<circle class="mult{}" cx="{:.3}" cy="{:.3}" r="{:.1}"/>"#,
            m.multiplicity, p.0, p.1, r
        );
    }
    out.push_str("</svg>\n");
    out
}
