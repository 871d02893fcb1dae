//! SVG pictures of instances and answers. Coordinates are rounded to six
//! decimals here and nowhere else.

use crate::cell::Face;
use crate::error::{Error, Result};
use crate::geom::rat::to_f64;
use crate::geom::{ArcSet, Color, Line, Point, Segment};
use crate::io::Instance;
use crate::lattice::{LLine, Ray};
use crate::wedge::DoubleWedge;
use serde_json::Value;
use std::fmt::Write;

fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.to_string()
    }
}

fn stroke(c: Color) -> &'static str {
    c.svg_stroke()
}

struct Canvas {
    min: (f64, f64),
    max: (f64, f64),
    body: String,
}

impl Canvas {
    fn around(pts: &[(f64, f64)]) -> Canvas {
        let (mut lo, mut hi) = ((f64::MAX, f64::MAX), (f64::MIN, f64::MIN));
        for &(x, y) in pts {
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if pts.is_empty() {
            lo = (-1.0, -1.0);
            hi = (1.0, 1.0);
        }
        let pad = ((hi.0 - lo.0).max(hi.1 - lo.1) * 0.15).max(1.0);
        Canvas { min: (lo.0 - pad, lo.1 - pad), max: (hi.0 + pad, hi.1 + pad), body: String::new() }
    }

    fn width(&self) -> f64 {
        (self.max.0 - self.min.0).max(self.max.1 - self.min.1)
    }

    fn line_width(&self) -> String {
        num(self.width() / 300.0)
    }

    fn segment(&mut self, a: (f64, f64), b: (f64, f64), color: &str, scale: f64) {
        let w = num(self.width() / 300.0 * scale);
        let _ = writeln!(
            self.body,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="{w}"/>"#,
            num(a.0),
            num(-a.1),
            num(b.0),
            num(-b.1)
        );
    }

    fn dot(&mut self, p: (f64, f64), color: &str) {
        let r = num(self.width() / 120.0);
        let _ = writeln!(self.body, r#"<circle cx="{}" cy="{}" r="{r}" fill="{color}"/>"#, num(p.0), num(-p.1));
    }

    fn polygon(&mut self, pts: &[(f64, f64)], fill: &str) {
        let list: Vec<String> = pts.iter().map(|p| format!("{},{}", num(p.0), num(-p.1))).collect();
        let _ = writeln!(self.body, r#"<polygon points="{}" fill="{fill}" fill-opacity="0.35" stroke="none"/>"#, list.join(" "));
    }

    /// The part of `l` inside the canvas box.
    fn infinite_line(&mut self, l: &Line, color: &str) {
        let (a, b, c) = (to_f64(&l.a), to_f64(&l.b), to_f64(&l.c));
        let (x0, x1) = (self.min.0, self.max.0);
        let (y0, y1) = (self.min.1, self.max.1);
        let ends = if b.abs() > a.abs() {
            ((x0, -(a * x0 + c) / b), (x1, -(a * x1 + c) / b))
        } else {
            ((-(b * y0 + c) / a, y0), (-(b * y1 + c) / a, y1))
        };
        self.segment(ends.0, ends.1, color, 1.0);
    }

    fn finish(self) -> String {
        let w = self.width();
        format!(
            "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n{}</svg>\n",
            num(self.min.0),
            num(-self.max.1),
            num(w),
            num(w),
            num(self.min.0),
            num(-self.max.1),
            num(w),
            num(w),
            self.body
        )
    }
}

fn fp(p: &Point) -> (f64, f64) {
    (to_f64(&p.x), to_f64(&p.y))
}

fn answer_field<T: serde::de::DeserializeOwned>(answer: Option<&Value>, key: &str) -> Option<T> {
    answer?.get(key).and_then(|v| serde_json::from_value(v.clone()).ok())
}

/// Draw an instance, plus the parts of a solver answer that have a picture.
pub fn render(inst: &Instance, answer: Option<&Value>) -> Result<String> {
    match inst {
        Instance::Lines { lines } => {
            let mut near = Vec::new();
            for (i, a) in lines.iter().enumerate() {
                for b in &lines[i + 1..] {
                    if let Some(p) = a.line.intersection(&b.line) {
                        near.push(fp(&p));
                    }
                }
            }
            let mut cv = Canvas::around(&near);
            if let Some(face) = answer_field::<Face>(answer, "face") {
                let pts: Vec<(f64, f64)> = face.vertices.iter().map(fp).collect();
                cv.polygon(&pts, "#f0c000");
            }
            for l in lines {
                cv.infinite_line(&l.line, stroke(l.color));
            }
            if let Some(s) = answer_field::<Segment>(answer, "segment") {
                cv.segment(fp(&s.p), fp(&s.q), "black", 3.0);
            }
            Ok(cv.finish())
        }
        Instance::Points { points } => {
            let pts: Vec<(f64, f64)> = points.iter().map(|p| fp(&p.pos)).collect();
            let mut cv = Canvas::around(&pts);
            if let Some(w) = answer_field::<DoubleWedge>(answer, "wedge") {
                cv.infinite_line(&w.line1, "black");
                cv.infinite_line(&w.line2, "black");
                cv.dot(fp(&w.apex), "black");
            }
            for p in points {
                cv.dot(fp(&p.pos), stroke(p.color));
            }
            Ok(cv.finish())
        }
        Instance::Circle { points } => {
            let mut cv = Canvas::around(&[(-1.0, -1.0), (1.0, 1.0)]);
            let at = |t: f64| ((t * std::f64::consts::TAU).cos(), (t * std::f64::consts::TAU).sin());
            let _ = writeln!(cv.body, r#"<circle cx="0" cy="0" r="1" fill="none" stroke="gray" stroke-width="{}"/>"#, cv.line_width());
            if let Some(a) = answer_field::<ArcSet>(answer, "arcs") {
                for (lo, hi) in a.arcs() {
                    let (lo, hi) = (to_f64(lo), to_f64(hi));
                    let steps = ((hi - lo) * 200.0).ceil().max(2.0) as usize;
                    for i in 0..steps {
                        let t0 = lo + (hi - lo) * i as f64 / steps as f64;
                        let t1 = lo + (hi - lo) * (i + 1) as f64 / steps as f64;
                        cv.segment(at(t0), at(t1), "black", 4.0);
                    }
                }
            }
            for p in points {
                cv.dot(at(to_f64(&p.t)), stroke(p.color));
            }
            Ok(cv.finish())
        }
        Instance::Lattice { points } => {
            let pts: Vec<(f64, f64)> = points.iter().map(|p| (p.x as f64, p.y as f64)).collect();
            let mut cv = Canvas::around(&pts);
            if let Some(l) = answer_field::<LLine>(answer, "lline") {
                let c = (to_f64(&l.corner.0), to_f64(&l.corner.1));
                let reach = cv.width() * 2.0;
                for r in l.rays {
                    let (dx, dy) = Ray::direction(r);
                    cv.segment(c, (c.0 + dx as f64 * reach, c.1 + dy as f64 * reach), "black", 2.0);
                }
            }
            for p in points {
                cv.dot((p.x as f64, p.y as f64), stroke(p.color));
            }
            Ok(cv.finish())
        }
        Instance::Triangulation(_) => Err(Error::Precondition("triangulations have no planar picture".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen::{generate, GenKind, GenSpec};
    use crate::solver::{SolveParams, SolverRegistry};

    #[test]
    fn rounding() {
        assert_eq!(num(1.0 / 3.0), "0.333333");
        assert_eq!(num(2.0), "2");
        assert_eq!(num(-0.0000001), "0");
    }

    #[test]
    fn renders_every_planar_kind() {
        let reg = SolverRegistry::default();
        for (kind, n, solver, k) in [
            (GenKind::SimpleLines3C, 6, "cell", None),
            (GenKind::BalancedPoints3C, 1, "wedge", None),
            (GenKind::CirclePoints3C, 4, "arcs", Some(2)),
            (GenKind::LatticeRedHull, 4, "lline", None),
        ] {
            let inst = generate(&GenSpec::new(kind, n, 2)).unwrap();
            let ans = reg.get(solver).unwrap().solve(&inst, &SolveParams { k }).unwrap();
            let svg = render(&inst, Some(&ans)).unwrap();
            assert!(svg.starts_with("<?xml") && svg.trim_end().ends_with("</svg>"));
            assert!(svg.contains("<circle") || svg.contains("<line"));
            // Rendering reads the data and leaves it alone.
            assert_eq!(inst, generate(&GenSpec::new(kind, n, 2)).unwrap());
        }
    }
}
