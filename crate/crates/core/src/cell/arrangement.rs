//! Face structure of a simple arrangement of colored lines.
//!
//! Unbounded faces are closed off by an axis-aligned box placed one unit
//! outside every vertex; box edges carry no line label.

use crate::error::{Error, Result, SimplicityWitness};
use crate::geom::rat::int;
use crate::geom::{Color, ColoredLine, Point, Rat};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: usize,
    pub bounded: bool,
    /// Line index of each boundary edge in counterclockwise order; `None` on the box.
    pub lines: Vec<Option<usize>>,
    /// Color of each boundary edge, parallel to `lines`.
    pub colors: Vec<Option<Color>>,
    /// Start point of each boundary edge.
    pub vertices: Vec<Point>,
}

impl Face {
    /// Distinct colors of the lines bounding this face.
    pub fn color_set(&self) -> BTreeSet<Color> {
        self.colors.iter().flatten().copied().collect()
    }

    /// Strict interior test for the (convex, clipped) face polygon.
    pub fn contains(&self, p: &Point) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| crate::geom::orient(&self.vertices[i], &self.vertices[(i + 1) % n], p) > 0)
    }

    pub fn centroid(&self) -> Point {
        let n = int(self.vertices.len() as i64);
        let sx = self.vertices.iter().fold(Rat::zero(), |a, v| a + &v.x);
        let sy = self.vertices.iter().fold(Rat::zero(), |a, v| a + &v.y);
        Point::new(sx / &n, sy / n)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Arrangement {
    pub lines: Vec<ColoredLine>,
    /// Pairwise intersection points.
    pub vertices: Vec<Point>,
    /// Half-width of the clipping box `[-m, m]^2`.
    #[serde(with = "crate::geom::rat::rat_str")]
    pub box_half_width: Rat,
    pub faces: Vec<Face>,
    /// Counts of the clipped planar graph (vertices, edges), box included.
    pub graph_vertices: usize,
    pub graph_edges: usize,
}

/// Rejects parallel pairs and triple points.
pub fn check_simple(lines: &[ColoredLine]) -> Result<()> {
    let mut seen: HashMap<Point, (usize, usize)> = HashMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let Some(p) = lines[i].line.intersection(&lines[j].line) else {
                return Err(Error::NotSimple(SimplicityWitness::Parallel(i, j)));
            };
            if let Some(&(a, b)) = seen.get(&p) {
                let third = if a != i && a != j { a } else { b };
                let mut w = [i, j, third];
                w.sort_unstable();
                return Err(Error::NotSimple(SimplicityWitness::TriplePoint(w[0], w[1], w[2])));
            }
            seen.insert(p, (i, j));
        }
    }
    Ok(())
}

/// Counterclockwise angular comparison of direction vectors.
pub(crate) fn angle_cmp(u: &(Rat, Rat), v: &(Rat, Rat)) -> Ordering {
    let half = |d: &(Rat, Rat)| -> u8 {
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(u).cmp(&half(v)).then_with(|| {
        let c = &u.0 * &v.1 - &u.1 * &v.0;
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

struct Graph {
    points: Vec<Point>,
    index: HashMap<Point, usize>,
    // undirected edges (u, v, label)
    edges: Vec<(usize, usize, Option<usize>)>,
}

impl Graph {
    fn node(&mut self, p: Point) -> usize {
        if let Some(&i) = self.index.get(&p) {
            return i;
        }
        self.points.push(p.clone());
        self.index.insert(p, self.points.len() - 1);
        self.points.len() - 1
    }
}

fn box_crossings(l: &crate::geom::Line, m: &Rat) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::new();
    let neg = -m.clone();
    for x in [neg.clone(), m.clone()] {
        if !l.b.is_zero() {
            let y = l.y_at(&x).unwrap();
            if y >= neg && &y <= m {
                out.push(Point::new(x.clone(), y));
            }
        }
    }
    for y in [neg.clone(), m.clone()] {
        if !l.a.is_zero() {
            let x = -(&l.b * &y + &l.c) / &l.a;
            if x >= neg && &x <= m {
                out.push(Point::new(x, y.clone()));
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Position along the box perimeter, counterclockwise from the corner `(m, -m)`.
fn perimeter_key(p: &Point, m: &Rat) -> (u8, Rat) {
    let neg = -m.clone();
    if p.x == *m && p.y < *m {
        (0, p.y.clone())
    } else if p.y == *m && p.x > neg {
        (1, -p.x.clone())
    } else if p.x == neg && p.y > neg {
        (2, -p.y.clone())
    } else {
        (3, p.x.clone())
    }
}

pub fn build_arrangement(lines: &[ColoredLine]) -> Result<Arrangement> {
    if lines.is_empty() {
        return Err(Error::Precondition("empty line set".into()));
    }
    check_simple(lines)?;
    let n = lines.len();
    let mut vertices = Vec::new();
    let mut on_line: Vec<Vec<Point>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            let p = lines[i].line.intersection(&lines[j].line).expect("checked simple");
            on_line[i].push(p.clone());
            on_line[j].push(p.clone());
            vertices.push(p);
        }
    }
    let mut anchors: Vec<Point> = vertices.clone();
    if anchors.is_empty() {
        let l = &lines[0].line;
        anchors.push(match l.y_at(&Rat::zero()) {
            Some(y) => Point::new(Rat::zero(), y),
            None => Point::new(-&l.c / &l.a, Rat::zero()),
        });
    }
    let m = anchors
        .iter()
        .flat_map(|p| [p.x.abs(), p.y.abs()])
        .max()
        .unwrap_or_else(Rat::zero)
        + int(1);

    let mut g = Graph { points: Vec::new(), index: HashMap::new(), edges: Vec::new() };
    let mut perimeter: Vec<Point> = Vec::new();
    for (i, cl) in lines.iter().enumerate() {
        let l = &cl.line;
        let mut pts = on_line[i].clone();
        let ends = box_crossings(l, &m);
        if ends.len() != 2 {
            return Err(Error::internal(format!("line {i} meets the clipping box {} times", ends.len())));
        }
        perimeter.extend(ends.iter().cloned());
        pts.extend(ends);
        let dir = l.direction();
        pts.sort_by_cached_key(|p| &p.x * &dir.0 + &p.y * &dir.1);
        let ids: Vec<usize> = pts.into_iter().map(|p| g.node(p)).collect();
        for w in ids.windows(2) {
            g.edges.push((w[0], w[1], Some(i)));
        }
    }
    let neg = -m.clone();
    for (x, y) in [(&m, &neg), (&m, &m), (&neg, &m), (&neg, &neg)] {
        perimeter.push(Point::new(x.clone(), y.clone()));
    }
    perimeter.sort_by_key(|p| perimeter_key(p, &m));
    perimeter.dedup();
    let ring: Vec<usize> = perimeter.into_iter().map(|p| g.node(p)).collect();
    for k in 0..ring.len() {
        g.edges.push((ring[k], ring[(k + 1) % ring.len()], None));
    }

    // half-edge 2e: u -> v, 2e+1: v -> u
    let h_count = g.edges.len() * 2;
    let origin = |h: usize| if h.is_multiple_of(2) { g.edges[h / 2].0 } else { g.edges[h / 2].1 };
    let target = |h: usize| if h.is_multiple_of(2) { g.edges[h / 2].1 } else { g.edges[h / 2].0 };
    let mut outgoing: Vec<Vec<usize>> = vec![Vec::new(); g.points.len()];
    for h in 0..h_count {
        outgoing[origin(h)].push(h);
    }
    let dirs: Vec<(Rat, Rat)> = (0..h_count).map(|h| g.points[target(h)].sub(&g.points[origin(h)])).collect();
    let mut slot = vec![0usize; h_count];
    for out in outgoing.iter_mut() {
        out.sort_by(|&a, &b| angle_cmp(&dirs[a], &dirs[b]));
        for (k, &h) in out.iter().enumerate() {
            slot[h] = k;
        }
    }
    let next = |h: usize| {
        let twin = h ^ 1;
        let v = target(h);
        let out = &outgoing[v];
        out[(slot[twin] + out.len() - 1) % out.len()]
    };

    let mut visited = vec![false; h_count];
    let mut faces = Vec::new();
    for start in 0..h_count {
        if visited[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut h = start;
        while !visited[h] {
            visited[h] = true;
            cycle.push(h);
            h = next(h);
        }
        let pts: Vec<&Point> = cycle.iter().map(|&h| &g.points[origin(h)]).collect();
        let mut area = Rat::zero();
        for k in 0..pts.len() {
            let (a, b) = (pts[k], pts[(k + 1) % pts.len()]);
            area += &a.x * &b.y - &a.y * &b.x;
        }
        if !area.is_positive() {
            continue; // outside of the clipping box
        }
        let labels: Vec<Option<usize>> = cycle.iter().map(|&h| g.edges[h / 2].2).collect();
        faces.push(Face {
            id: faces.len(),
            bounded: labels.iter().all(Option::is_some),
            colors: labels.iter().map(|l| l.map(|i| lines[i].color)).collect(),
            lines: labels,
            vertices: pts.into_iter().cloned().collect(),
        });
    }
    Ok(Arrangement {
        lines: lines.to_vec(),
        vertices,
        box_half_width: m,
        faces,
        graph_vertices: g.points.len(),
        graph_edges: g.edges.len(),
    })
}

impl Arrangement {
    pub fn bounded_faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(|f| f.bounded)
    }

    /// The face whose interior contains `p`, if `p` is inside the clipping box and on no line.
    pub fn locate(&self, p: &Point) -> Option<&Face> {
        self.faces.iter().find(|f| f.contains(p))
    }

    pub fn face(&self, id: usize) -> Option<&Face> {
        self.faces.get(id)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{rat, Line};

    fn cl(m: Rat, i: Rat, c: Color) -> ColoredLine {
        ColoredLine::new(Line::from_slope_intercept(m, i), c)
    }

    fn triangle() -> Vec<ColoredLine> {
        vec![
            cl(int(0), int(0), Color::Red),
            cl(int(1), int(1), Color::Green),
            cl(int(-1), int(3), Color::Blue),
        ]
    }

    #[test]
    fn three_lines_make_one_triangle() {
        let a = build_arrangement(&triangle()).unwrap();
        assert_eq!(a.bounded_faces().count(), 1);
        assert_eq!(a.faces.len(), 7);
        let t = a.bounded_faces().next().unwrap();
        assert_eq!(t.lines.len(), 3);
    }

    #[test]
    fn parallel_pair_is_rejected() {
        let lines = vec![cl(int(1), int(0), Color::Red), cl(int(1), int(2), Color::Green)];
        assert!(matches!(
            build_arrangement(&lines),
            Err(Error::NotSimple(SimplicityWitness::Parallel(0, 1)))
        ));
    }

    #[test]
    fn triple_point_is_rejected() {
        let lines = vec![
            cl(int(1), int(0), Color::Red),
            cl(int(-1), int(0), Color::Green),
            cl(int(2), int(0), Color::Blue),
        ];
        assert!(matches!(
            build_arrangement(&lines),
            Err(Error::NotSimple(SimplicityWitness::TriplePoint(0, 1, 2)))
        ));
    }

    #[test]
    fn four_lines_face_count_matches_euler() {
        let mut lines = triangle();
        lines.push(cl(rat(1, 3), rat(-1, 2), Color::Red));
        let a = build_arrangement(&lines).unwrap();
        assert_eq!(a.faces.len(), 1 + 4 + 6);
        assert_eq!(a.bounded_faces().count(), 3);
        // V - E + F = 2 for the clipped graph, counting the outer face
        let f = a.faces.len() as i64 + 1;
        assert_eq!(a.graph_vertices as i64 - a.graph_edges as i64 + f, 2);
    }

    #[test]
    fn single_and_vertical_lines() {
        let one = vec![ColoredLine::new(Line::new(int(1), int(0), int(-50)).unwrap(), Color::Red)];
        let a = build_arrangement(&one).unwrap();
        assert_eq!(a.faces.len(), 2);
        let two = vec![one[0].clone(), cl(int(1), int(0), Color::Blue)];
        let b = build_arrangement(&two).unwrap();
        assert_eq!(b.faces.len(), 4);
        assert_eq!(b.bounded_faces().count(), 0);
    }
}
