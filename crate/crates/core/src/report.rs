//! Convergence CSV and the limiting-shape figure as SVG.
//!
//! The SVG uses a fixed 600×600 canvas with a 40 px margin and a uniform
//! scale on both axes; the y axis points up. The root element records the
//! plot transform in `data-origin-x`, `data-origin-y` and `data-unit` so
//! readers can map drawn coordinates back to the plane.

use std::fmt::Write;

use num_traits::ToPrimitive;

use crate::ginlab::GinStaircase;
use crate::polytope::{ConvergenceRow, LimitShape, Rational};

pub const CONVERGENCE_HEADER: &str = "m,alpha,lambda0,gamma1_m,gamma2_m,dev1,dev2,covol_scaled";

pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from(CONVERGENCE_HEADER);
    out.push('\n');
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.m, r.alpha, r.lambda0, r.gamma1_m, r.gamma2_m, r.dev1, r.dev2, r.covol_scaled
        )
        .unwrap();
    }
    out
}

/// Staircase CSV with header `a,lambda_a`.
pub fn staircase_csv(s: &GinStaircase) -> String {
    let mut out = String::from("a,lambda_a\n");
    for (a, l) in s.lambdas().iter().enumerate() {
        writeln!(out, "{a},{l}").unwrap();
    }
    out
}

pub const CANVAS: f64 = 600.0;
pub const MARGIN: f64 = 40.0;

/// Maps plane coordinates to SVG user coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlotFrame {
    pub unit: f64,
    pub extent: u32,
}

impl PlotFrame {
    /// Square frame covering `[0, extent]²`.
    pub fn covering(extent: u32) -> Self {
        let extent = extent.max(1);
        PlotFrame { unit: (CANVAS - 2.0 * MARGIN) / extent as f64, extent }
    }

    pub fn to_svg(&self, u: f64, v: f64) -> (f64, f64) {
        (MARGIN + u * self.unit, CANVAS - MARGIN - v * self.unit)
    }

    pub fn from_svg(&self, px: f64, py: f64) -> (f64, f64) {
        ((px - MARGIN) / self.unit, (CANVAS - MARGIN - py) / self.unit)
    }
}

fn f(q: Rational) -> f64 {
    q.to_f64().expect("finite rational")
}

/// Scaled staircases `(1/m) P_gin` in light strokes and the limit boundary in
/// a heavy stroke.
pub fn limit_svg(r: u32, staircases: &[(u32, GinStaircase)], limit: &LimitShape) -> String {
    let mut extent = f(limit.gamma1).max(f(limit.gamma2));
    for (m, s) in staircases {
        extent = extent.max(s.alpha() as f64 / *m as f64).max(s.lambda0() as f64 / *m as f64);
    }
    let frame = PlotFrame::covering(extent.ceil() as u32);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="600" height="600" viewBox="0 0 600 600" data-origin-x="{MARGIN:.2}" data-origin-y="{:.2}" data-unit="{:.4}">"#,
        CANVAS - MARGIN,
        frame.unit
    )
    .unwrap();
    writeln!(out, r#"<title>Limiting shape for r = {r}</title>"#).unwrap();
    writeln!(out, r#"<rect width="600" height="600" fill="white"/>"#).unwrap();

    let (ox, oy) = frame.to_svg(0.0, 0.0);
    let (xe, _) = frame.to_svg(frame.extent as f64, 0.0);
    let (_, ye) = frame.to_svg(0.0, frame.extent as f64);
    writeln!(out, r#"<g class="axes" stroke="black" stroke-width="1">"#).unwrap();
    writeln!(out, r#"<line x1="{ox:.2}" y1="{oy:.2}" x2="{xe:.2}" y2="{oy:.2}"/>"#).unwrap();
    writeln!(out, r#"<line x1="{ox:.2}" y1="{oy:.2}" x2="{ox:.2}" y2="{ye:.2}"/>"#).unwrap();
    for k in 0..=frame.extent {
        let (tx, _) = frame.to_svg(k as f64, 0.0);
        let (_, ty) = frame.to_svg(0.0, k as f64);
        writeln!(out, r#"<line x1="{tx:.2}" y1="{oy:.2}" x2="{tx:.2}" y2="{:.2}"/>"#, oy + 5.0).unwrap();
        writeln!(out, r#"<line x1="{ox:.2}" y1="{ty:.2}" x2="{:.2}" y2="{ty:.2}"/>"#, ox - 5.0).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g class="ticks" font-family="sans-serif" font-size="12" fill="black">"#).unwrap();
    for k in 0..=frame.extent {
        let (tx, _) = frame.to_svg(k as f64, 0.0);
        let (_, ty) = frame.to_svg(0.0, k as f64);
        writeln!(out, r#"<text x="{tx:.2}" y="{:.2}" text-anchor="middle">{k}</text>"#, oy + 18.0).unwrap();
        writeln!(out, r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{k}</text>"#, ox - 8.0, ty + 4.0).unwrap();
    }
    writeln!(out, "</g>").unwrap();

    for (m, s) in staircases {
        let scale = 1.0 / *m as f64;
        let mut pts = Vec::new();
        let mut push = |u: f64, v: f64| {
            let (px, py) = frame.to_svg(u * scale, v * scale);
            pts.push(format!("{px:.2},{py:.2}"));
        };
        push(0.0, s.lambda0() as f64);
        for (a, &l) in s.lambdas().iter().enumerate() {
            push(a as f64 + 1.0, l as f64);
            let next = s.lambdas().get(a + 1).copied().unwrap_or(0);
            push(a as f64 + 1.0, next as f64);
        }
        writeln!(
            out,
            r##"<polyline class="staircase" data-m="{m}" fill="none" stroke="#9a9a9a" stroke-width="1" points="{}"/>"##,
            pts.join(" ")
        )
        .unwrap();
    }

    let (x1, y1) = frame.to_svg(f(limit.gamma1), 0.0);
    let (x2, y2) = frame.to_svg(0.0, f(limit.gamma2));
    writeln!(
        out,
        r#"<line class="limit" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="black" stroke-width="3"/>"#
    )
    .unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}
