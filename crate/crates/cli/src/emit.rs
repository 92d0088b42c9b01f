//! Deterministic DOT and SVG writers.
//!
//! SVG figures live on a fixed 600×600 canvas with the origin at the
//! center. Lines and rays are drawn in input order, then labels; all
//! coordinates are printed with two decimals.

use std::fmt::Write;

use chamberwalk_core::exactlin::{RatMat, RatVec, Rational};
use num_traits::ToPrimitive;

use crate::error::CliError;

const SIZE: f64 = 600.0;
const CENTER: f64 = 300.0;
const LINE_RADIUS: f64 = 270.0;
const LABEL_RADIUS: f64 = 170.0;

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().expect("finite rational")
}

/// An orthonormal (floating-point) basis of a 2-dimensional subspace
/// `{x : E·x = 0}`, used only for drawing.
#[derive(Debug, Clone)]
pub struct Plane {
    basis: [Vec<f64>; 2],
}

impl Plane {
    pub fn new(dim: usize, equalities: &[RatVec]) -> Result<Plane, CliError> {
        let kernel = if equalities.is_empty() {
            (0..dim).map(|i| RatVec::unit(dim, i)).collect()
        } else {
            RatMat::from_vecs(equalities, dim).expect("shape").kernel()
        };
        if kernel.len() != 2 {
            return Err(CliError::NotPlanar(kernel.len()));
        }
        let a: Vec<f64> = kernel[0].coords().iter().map(to_f64).collect();
        let b: Vec<f64> = kernel[1].coords().iter().map(to_f64).collect();
        let a = normalize(&a);
        let proj: f64 = inner(&a, &b);
        let b: Vec<f64> = b.iter().zip(&a).map(|(x, y)| x - proj * y).collect();
        Ok(Plane {
            basis: [a, normalize(&b)],
        })
    }

    /// Plane coordinates of a point of the subspace.
    pub fn point(&self, x: &RatVec) -> [f64; 2] {
        let x: Vec<f64> = x.coords().iter().map(to_f64).collect();
        [inner(&x, &self.basis[0]), inner(&x, &self.basis[1])]
    }

    /// Direction of the line where the covector vanishes.
    pub fn kernel_direction(&self, covector: &RatVec) -> [f64; 2] {
        let c = self.point(covector);
        [-c[1], c[0]]
    }
}

fn inner(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &[f64]) -> Vec<f64> {
    let n = inner(v, v).sqrt();
    v.iter().map(|x| x / n).collect()
}

fn unit(v: [f64; 2]) -> [f64; 2] {
    let n = (v[0] * v[0] + v[1] * v[1]).sqrt();
    if n == 0.0 {
        v
    } else {
        [v[0] / n, v[1] / n]
    }
}

/// What to draw: full lines, half-lines from the origin and text labels,
/// all given by plane directions.
#[derive(Debug, Clone, Default)]
pub struct Figure {
    pub title: String,
    pub lines: Vec<(String, [f64; 2])>,
    pub rays: Vec<[f64; 2]>,
    pub labels: Vec<(String, [f64; 2])>,
}

fn coord(v: f64) -> String {
    let v = if v.abs() < 0.005 { 0.0 } else { v };
    format!("{v:.2}")
}

fn screen(d: [f64; 2], radius: f64) -> (String, String) {
    let u = unit(d);
    (coord(CENTER + radius * u[0]), coord(CENTER - radius * u[1]))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

pub fn svg(fig: &Figure) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(out, "<title>{}</title>", escape(&fig.title));
    let _ = writeln!(
        out,
        r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#
    );
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="1.5">"#);
    for (_, d) in &fig.lines {
        let (x1, y1) = screen(*d, LINE_RADIUS);
        let (x2, y2) = screen([-d[0], -d[1]], LINE_RADIUS);
        let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
    }
    for d in &fig.rays {
        let (x, y) = screen(*d, LINE_RADIUS);
        let _ = writeln!(
            out,
            r#"<line x1="{CENTER}" y1="{CENTER}" x2="{x}" y2="{y}"/>"#
        );
    }
    let _ = writeln!(out, "</g>");
    let _ = writeln!(
        out,
        r#"<g font-family="monospace" font-size="14" text-anchor="middle">"#
    );
    for (name, d) in &fig.lines {
        let (x, y) = screen(*d, LINE_RADIUS + 12.0);
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{y}" fill="gray">{}</text>"#,
            escape(name)
        );
    }
    for (text, d) in &fig.labels {
        let (x, y) = screen(*d, LABEL_RADIUS);
        let _ = writeln!(out, r#"<text x="{x}" y="{y}">{}</text>"#, escape(text));
    }
    let _ = writeln!(out, "</g>");
    out.push_str("</svg>\n");
    out
}

/// An undirected graph for DOT output.
#[derive(Debug, Clone, Default)]
pub struct DotGraph {
    pub name: String,
    /// `(label, highlighted)`; node `i` is written `c{i}`.
    pub nodes: Vec<(String, bool)>,
    /// `(a, b, label, highlighted)`.
    pub edges: Vec<(usize, usize, String, bool)>,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn dot(g: &DotGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(&g.name));
    let _ = writeln!(out, "  node [shape=box, fontname=monospace];");
    for (i, (label, hl)) in g.nodes.iter().enumerate() {
        let style = if *hl {
            ", style=filled, fillcolor=lightgray"
        } else {
            ""
        };
        let _ = writeln!(out, "  c{i} [label={}{style}];", quote(label));
    }
    for (a, b, label, hl) in &g.edges {
        let style = if *hl { ", penwidth=2" } else { "" };
        let _ = writeln!(out, "  c{a} -- c{b} [label={}{style}];", quote(label));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plane_of_sum_zero_subspace() {
        let p = Plane::new(3, &[RatVec::from_ints(&[1, 1, 1])]).unwrap();
        let a = p.point(&RatVec::from_ints(&[1, -1, 0]));
        assert!((a[0] * a[0] + a[1] * a[1] - 2.0).abs() < 1e-9);
        assert!(matches!(Plane::new(3, &[]), Err(CliError::NotPlanar(3))));
    }

    #[test]
    fn single_line_figure() {
        let fig = Figure {
            title: "one line".into(),
            lines: vec![("H0".into(), [0.0, 1.0])],
            rays: vec![],
            labels: vec![("C0".into(), [1.0, 0.0]), ("C1".into(), [-1.0, 0.0])],
        };
        let s = svg(&fig);
        assert_eq!(s.matches("<line").count(), 1);
        assert!(s.contains(r#"<line x1="300.00" y1="30.00" x2="300.00" y2="570.00"/>"#));
        assert_eq!(s.matches("<text").count(), 3);
        assert!(s.starts_with("<svg") && s.ends_with("</svg>\n"));
    }

    #[test]
    fn dot_escapes_labels() {
        let g = DotGraph {
            name: "g".into(),
            nodes: vec![("a\"b".into(), true), ("c".into(), false)],
            edges: vec![(0, 1, "H0".into(), false)],
        };
        let s = dot(&g);
        assert!(s.contains(r#"c0 [label="a\"b", style=filled, fillcolor=lightgray];"#));
        assert!(s.contains(r#"c0 -- c1 [label="H0"];"#));
    }
}
