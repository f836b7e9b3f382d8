//! Sampling of `Φ` on grids in `t`-space and export of the samples.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::casimir::{product_d, CasimirMap, SpectralParams};
use crate::error::{Error, Result};
use crate::poly::{printed, MultiPoly};
use crate::rootdata::{Family, LieType, RootDatum};

/// Largest supported grid extent in `t`.
pub const MAX_RANGE: f64 = 5.0;
pub const DEFAULT_RANGE: f64 = 2.0;

pub fn default_steps(rank: usize) -> usize {
    if rank <= 2 {
        200
    } else {
        40
    }
}

/// Per-axis grid `t = range · j / (steps - 1)`, `j = 0..steps`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridSpec {
    pub range: f64,
    pub steps: usize,
}

impl GridSpec {
    pub fn new(range: f64, steps: usize) -> Result<Self> {
        if !(range > 0.0 && range <= MAX_RANGE) {
            return Err(Error::RangeOutsideSupport(range));
        }
        if steps < 2 {
            return Err(Error::TooFewSteps(steps));
        }
        Ok(Self { range, steps })
    }

    pub fn value(&self, j: usize) -> f64 {
        if j + 1 == self.steps {
            self.range
        } else {
            self.range * j as f64 / (self.steps - 1) as f64
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SampleKind {
    Region,
    /// The face `t_i = 0` for node index `i`.
    Boundary(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionRow {
    pub t: Vec<f64>,
    pub c: Vec<f64>,
    pub d: f64,
    pub d_s: f64,
    pub d_l: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RegionSample {
    pub lie_type: LieType,
    pub grid: GridSpec,
    pub kind: SampleKind,
    /// `Φ(0)`, the cusp.
    pub dims: Vec<u64>,
    pub rows: Vec<RegionRow>,
}

impl RegionSample {
    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// Rows lying on the face `t_i = 0`.
    pub fn face_rows(&self, i: usize) -> impl Iterator<Item = &RegionRow> {
        self.rows.iter().filter(move |r| r.t[i] == 0.0)
    }
}

fn grid_points(rank: usize, grid: &GridSpec, fixed_zero: Option<usize>) -> Vec<Vec<f64>> {
    let free: Vec<usize> = (0..rank).filter(|&i| Some(i) != fixed_zero).collect();
    let total = grid.steps.pow(free.len() as u32);
    (0..total)
        .map(|mut idx| {
            let mut t = vec![0.0; rank];
            for &axis in free.iter().rev() {
                t[axis] = grid.value(idx % grid.steps);
                idx /= grid.steps;
            }
            t
        })
        .collect()
}

fn sample(map: &CasimirMap, grid: GridSpec, kind: SampleKind) -> Result<RegionSample> {
    let d = map.datum();
    let fixed = match kind {
        SampleKind::Boundary(i) => {
            d.check_node(i)?;
            Some(i)
        }
        SampleKind::Region => None,
    };
    let points = grid_points(d.rank(), &grid, fixed);
    let rows = points
        .into_par_iter()
        .map(|t| {
            let c = map.eval(&t)?;
            let p = product_d(d, &SpectralParams::new(t.clone()));
            Ok(RegionRow {
                t,
                c,
                d: p.d,
                d_s: p.d_s,
                d_l: p.d_l,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RegionSample {
        lie_type: d.lie_type(),
        grid,
        kind,
        dims: map.dims(),
        rows,
    })
}

/// Grid over the face `t_i = 0`; every row has `D = 0`.
pub fn sample_boundary(map: &CasimirMap, i: usize, range: f64, steps: usize) -> Result<RegionSample> {
    sample(map, GridSpec::new(range, steps)?, SampleKind::Boundary(i))
}

/// Full grid over `[0, range]^n`.
pub fn sample_region(map: &CasimirMap, range: f64, steps: usize) -> Result<RegionSample> {
    sample(map, GridSpec::new(range, steps)?, SampleKind::Region)
}

/// Printed boundary curve traced by the face `t_i = 0` for the rank-2 types
/// where one is known.
pub fn boundary_curve(t: LieType, i: usize) -> Option<MultiPoly> {
    match (t.family(), t.rank(), i) {
        (Family::A, 2, 0 | 1) => Some(printed::a2_boundary()),
        (Family::B, 2, 0) => Some(printed::b2_curves().0),
        (Family::B, 2, 1) => Some(printed::b2_curves().1),
        (Family::G, 2, 0) => Some(printed::g2_d_l()),
        (Family::G, 2, 1) => Some(printed::g2_d_s()),
        _ => None,
    }
}

/// Distance of `c` to the zero set of `f` to first order, `|f| / |∇f|`,
/// relative to `max(1, |c|)`.
pub fn curve_residual(f: &MultiPoly, c: &[f64]) -> f64 {
    let norm = c.iter().map(|x| x * x).sum::<f64>().sqrt().max(1.0);
    let grad = f.gradient_norm(c);
    let value = f.eval(c).abs();
    if value == 0.0 {
        0.0
    } else {
        value / (grad * norm)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SvgOptions {
    pub log_axes: bool,
}

pub fn emit(sample: &RegionSample, format: Format, svg: SvgOptions) -> Result<Vec<u8>> {
    match format {
        Format::Csv => Ok(emit_csv(sample).into_bytes()),
        Format::Json => Ok(emit_json(sample).into_bytes()),
        Format::Svg => emit_svg(sample, svg).map(String::into_bytes),
    }
}

fn column_names(n: usize) -> Vec<String> {
    let mut cols: Vec<String> = (1..=n).map(|i| format!("t_{i}")).collect();
    cols.extend((1..=n).map(|i| format!("C_{i}")));
    cols.extend(["D", "D_s", "D_l"].map(String::from));
    cols
}

fn row_values(r: &RegionRow) -> impl Iterator<Item = f64> + '_ {
    r.t.iter()
        .chain(&r.c)
        .copied()
        .chain([r.d, r.d_s, r.d_l])
}

pub fn emit_csv(sample: &RegionSample) -> String {
    let mut out = column_names(sample.rank()).join(",");
    out.push('\n');
    for r in &sample.rows {
        let line: Vec<String> = row_values(r).map(|v| v.to_string()).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn emit_json(sample: &RegionSample) -> String {
    let cols = column_names(sample.rank());
    let rows: Vec<Value> = sample
        .rows
        .iter()
        .map(|r| {
            let obj: Map<String, Value> = cols
                .iter()
                .cloned()
                .zip(row_values(r).map(Value::from))
                .collect();
            Value::Object(obj)
        })
        .collect();
    serde_json::to_string_pretty(&Value::Array(rows)).expect("serializable")
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 480.0;
const MARGIN: f64 = 56.0;

struct Axis {
    lo: f64,
    hi: f64,
    log: bool,
}

impl Axis {
    fn new(values: impl Iterator<Item = f64>, log: bool) -> Self {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for v in values.filter(|v| v.is_finite() && (!log || *v > 0.0)) {
            let v = if log { v.log10() } else { v };
            lo = lo.min(v);
            hi = hi.max(v);
        }
        if !lo.is_finite() {
            (lo, hi) = (0.0, 1.0);
        }
        if hi - lo < 1e-12 {
            hi = lo + 1.0;
        }
        Self { lo, hi, log }
    }

    fn frac(&self, v: f64) -> f64 {
        let v = if self.log { v.log10() } else { v };
        (v - self.lo) / (self.hi - self.lo)
    }
}

fn emit_svg(sample: &RegionSample, opts: SvgOptions) -> Result<String> {
    if sample.rank() != 2 {
        return Err(Error::SvgRank(sample.rank()));
    }
    let cusp = [sample.dims[0] as f64, sample.dims[1] as f64];
    let xs = sample.rows.iter().map(|r| r.c[0]).chain([cusp[0]]);
    let ys = sample.rows.iter().map(|r| r.c[1]).chain([cusp[1]]);
    let ax = Axis::new(xs, opts.log_axes);
    let ay = Axis::new(ys, opts.log_axes);
    let px = |x: f64| MARGIN + ax.frac(x) * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - ay.frac(y) * (HEIGHT - 2.0 * MARGIN);

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" data-type="{}" data-scale="{}">"#,
        sample.lie_type,
        if opts.log_axes { "log" } else { "linear" }
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<g stroke="black" stroke-width="1"><line x1="{m}" y1="{b}" x2="{r}" y2="{b}"/><line x1="{m}" y1="{b}" x2="{m}" y2="{m}"/></g>"#,
        m = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" font-size="14" text-anchor="middle">C_1</text>"#,
        WIDTH / 2.0,
        HEIGHT - 16.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{}" font-size="14" text-anchor="middle" transform="rotate(-90 16 {})">C_2</text>"#,
        HEIGHT / 2.0,
        HEIGHT / 2.0
    );
    let colors = ["#1f77b4", "#d62728"];
    for (face, color) in colors.iter().enumerate() {
        let other = 1 - face;
        let mut pts: Vec<&RegionRow> = sample.face_rows(face).collect();
        pts.sort_by(|a, b| a.t[other].total_cmp(&b.t[other]));
        if pts.is_empty() {
            continue;
        }
        let coords: Vec<String> = pts
            .iter()
            .filter(|r| r.c.iter().all(|v| v.is_finite()))
            .map(|r| format!("{:.3},{:.3}", px(r.c[0]), py(r.c[1])))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline class="boundary" data-face="{}" fill="none" stroke="{color}" stroke-width="1.5" points="{}"/>"#,
            sample.lie_type.label(face),
            coords.join(" ")
        );
    }
    let _ = writeln!(
        s,
        r#"<circle class="cusp" cx="{:.3}" cy="{:.3}" r="4" fill="black" data-c1="{}" data-c2="{}"/>"#,
        px(cusp[0]),
        py(cusp[1]),
        sample.dims[0],
        sample.dims[1]
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" font-size="12">({}, {})</text>"#,
        px(cusp[0]) + 6.0,
        py(cusp[1]) - 6.0,
        sample.dims[0],
        sample.dims[1]
    );
    s.push_str("</svg>\n");
    Ok(s)
}

/// Convenience wrapper building the map for `d`.
pub fn region_for(d: &RootDatum, range: f64, steps: usize) -> Result<RegionSample> {
    sample_region(&CasimirMap::new(d)?, range, steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(s: &str) -> CasimirMap {
        CasimirMap::new(&RootDatum::new(s.parse().unwrap())).unwrap()
    }

    #[test]
    fn grid_validation() {
        assert_eq!(GridSpec::new(0.0, 10), Err(Error::RangeOutsideSupport(0.0)));
        assert_eq!(GridSpec::new(5.5, 10), Err(Error::RangeOutsideSupport(5.5)));
        assert!(GridSpec::new(f64::NAN, 10).is_err());
        assert_eq!(GridSpec::new(1.0, 1), Err(Error::TooFewSteps(1)));
        let g = GridSpec::new(2.0, 5).unwrap();
        assert_eq!((0..5).map(|j| g.value(j)).collect::<Vec<_>>(), [0.0, 0.5, 1.0, 1.5, 2.0]);
    }

    #[test]
    fn boundary_rows_have_zero_d_and_contain_cusp() {
        let m = map("A2");
        let s = sample_boundary(&m, 1, 2.0, 11).unwrap();
        assert_eq!(s.rows.len(), 11);
        assert!(s.rows.iter().all(|r| r.d == 0.0 && r.t[1] == 0.0));
        assert_eq!(s.rows[0].c, [3.0, 3.0]);
        let curve = boundary_curve(s.lie_type, 1).unwrap();
        for r in &s.rows {
            assert!(curve_residual(&curve, &r.c) < 1e-6);
        }
    }

    #[test]
    fn b2_faces_follow_their_curves() {
        let m = map("B2");
        let short = sample_boundary(&m, 0, 2.0, 50).unwrap();
        let long = sample_boundary(&m, 1, 2.0, 50).unwrap();
        let (parabola, line) = printed::b2_curves();
        for r in &short.rows {
            assert!(curve_residual(&parabola, &r.c) < 1e-6, "{:?}", r);
            assert_eq!(r.d_s, 0.0);
        }
        for r in &long.rows {
            assert!(curve_residual(&line, &r.c) < 1e-6, "{:?}", r);
            assert_eq!(r.d_l, 0.0);
        }
        // the line does not describe the short face
        assert!(short.rows.iter().skip(1).any(|r| curve_residual(&line, &r.c) > 1e-3));
    }

    #[test]
    fn region_grid_shape_and_lower_bound() {
        let m = map("A2");
        let s = sample_region(&m, 2.0, 50).unwrap();
        assert_eq!(s.rows.len(), 2500);
        assert!(s.rows.iter().all(|r| r.c[0] >= 3.0 && r.c[1] >= 3.0));
        assert_eq!(s.rows[0].c, [3.0, 3.0]);
        assert_eq!(s.rows[1].t, [0.0, 2.0 / 49.0]);
        let b2 = sample_region(&map("B2"), 1.0, 20).unwrap();
        assert!(b2.rows.iter().all(|r| r.d_s >= 0.0 || r.d_s.abs() < 1e-9));
    }

    #[test]
    fn emit_formats() {
        let m = map("B2");
        let s = sample_region(&m, 1.0, 3).unwrap();
        let csv = emit_csv(&s);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("t_1,t_2,C_1,C_2,D,D_s,D_l"));
        assert_eq!(lines.next(), Some("0,0,4,5,0,0,0"));
        assert_eq!(csv.lines().count(), 10);
        let json: Value = serde_json::from_str(&emit_json(&s)).unwrap();
        let first = json[0].as_object().unwrap();
        let keys: Vec<&str> = first.keys().map(String::as_str).collect();
        assert_eq!(keys, ["t_1", "t_2", "C_1", "C_2", "D", "D_s", "D_l"]);
        let svg = String::from_utf8(emit(&s, Format::Svg, SvgOptions::default()).unwrap()).unwrap();
        assert!(svg.contains(r#"data-c1="4" data-c2="5""#));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(emit_csv(&s), emit_csv(&s.clone()));
    }

    #[test]
    fn empty_sample_and_rank_errors() {
        let m = map("A3");
        let mut s = sample_region(&m, 1.0, 2).unwrap();
        assert_eq!(s.rows.len(), 8);
        assert!(matches!(emit(&s, Format::Svg, SvgOptions::default()), Err(Error::SvgRank(3))));
        s.rows.clear();
        assert_eq!(emit_csv(&s), "t_1,t_2,t_3,C_1,C_2,C_3,D,D_s,D_l\n");
        assert_eq!(emit_json(&s), "[]");
    }

    #[test]
    fn overflow_is_reported() {
        let m = map("F4");
        assert_eq!(sample_region(&m, 5.0, 2).unwrap_err(), Error::Overflow);
    }

    #[test]
    fn monotone_escape_along_diagonal() {
        for s in ["A2", "B2", "G2", "C3", "D4"] {
            let m = map(s);
            let n = m.datum().rank();
            let mut prev = m.dims().iter().map(|&x| x as f64).collect::<Vec<_>>();
            for j in 1..=100 {
                let c = m.eval(&vec![j as f64 / 100.0; n]).unwrap();
                assert!(c.iter().zip(&prev).all(|(a, b)| a > b), "{s} at step {j}");
                prev = c;
            }
        }
    }

    mod props {
        use super::*;
        use crate::casimir::product_scale;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn face_rows_have_vanishing_d(
                idx in 0usize..5,
                node in 0usize..3,
                range in 0.1f64..2.0,
                steps in 2usize..8,
            ) {
                let s = ["A2", "B2", "G2", "B3", "C3"][idx];
                let m = map(s);
                let node = node % m.datum().rank();
                let sample = sample_boundary(&m, node, range, steps).unwrap();
                for r in &sample.rows {
                    let scale = product_scale(m.datum(), &SpectralParams::new(r.t.clone()));
                    prop_assert!(r.d.abs() <= 1e-8 * scale);
                    prop_assert!(r.c.iter().zip(m.dims()).all(|(c, d)| *c >= d as f64));
                }
            }
        }
    }
}
