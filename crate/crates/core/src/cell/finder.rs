//! Complete face by incremental insertion.
//!
//! Start from the triangle of one line per color and insert the remaining
//! lines one at a time. When a line cuts the tracked cell in two, the
//! bichromatic count of the two colors other than the new line's is split
//! between the halves, so exactly one half keeps odd parities.

use super::arrangement::{build_arrangement, Arrangement, Face};
use super::parity::{cycle_parity, DualCycle};
use crate::error::{Error, Result, SimplicityWitness};
use crate::geom::{Color, ColoredLine, Point};

/// Convex cell of a partial arrangement: edge `i` runs from `vertices[i]`
/// to `vertices[i + 1]` along line `edge_lines[i]`.
#[derive(Debug, Clone)]
pub struct TrackedCell {
    pub vertices: Vec<Point>,
    pub edge_lines: Vec<usize>,
}

impl TrackedCell {
    fn dual_cycle(&self, lines: &[ColoredLine]) -> Result<DualCycle> {
        DualCycle::new(self.edge_lines.iter().map(|&i| lines[i].color).collect())
    }

    fn is_complete(&self, lines: &[ColoredLine]) -> Result<bool> {
        Ok(cycle_parity(&self.dual_cycle(lines)?) == (1, 1, 1))
    }

    /// Cut by line `l`; `None` when `l` misses the interior.
    fn split(&self, l: usize, lines: &[ColoredLine]) -> Result<Option<(TrackedCell, TrackedCell)>> {
        let cut = &lines[l].line;
        let sides: Vec<i8> = self.vertices.iter().map(|v| cut.side(v)).collect();
        if sides.contains(&0) {
            return Err(Error::internal("inserted line passes through a cell vertex"));
        }
        if sides.iter().all(|&s| s == sides[0]) {
            return Ok(None);
        }
        let m = self.vertices.len();
        let mut halves = [
            TrackedCell { vertices: Vec::new(), edge_lines: Vec::new() },
            TrackedCell { vertices: Vec::new(), edge_lines: Vec::new() },
        ];
        for (h, want) in [(0usize, 1i8), (1, -1)] {
            let out = &mut halves[h];
            for i in 0..m {
                let j = (i + 1) % m;
                if sides[i] == want {
                    out.vertices.push(self.vertices[i].clone());
                    out.edge_lines.push(self.edge_lines[i]);
                }
                if sides[i] != sides[j] {
                    let x = cut
                        .intersection(&lines[self.edge_lines[i]].line)
                        .ok_or_else(|| Error::internal("cut parallel to a cell edge"))?;
                    out.vertices.push(x);
                    // leaving the half continues along the cut, entering continues along edge i
                    out.edge_lines.push(if sides[i] == want { l } else { self.edge_lines[i] });
                }
            }
        }
        let [a, b] = halves;
        Ok(Some((a, b)))
    }

    pub fn centroid(&self) -> Point {
        let face = Face {
            id: 0,
            bounded: true,
            lines: vec![],
            colors: vec![],
            vertices: self.vertices.clone(),
        };
        face.centroid()
    }
}

fn first_of(lines: &[ColoredLine], c: Color) -> Result<usize> {
    lines.iter().position(|l| l.color == c).ok_or(Error::MissingColor(c))
}

/// Runs the insertion and returns the tracked cell, without building the
/// full arrangement.
pub fn track_complete_cell(lines: &[ColoredLine]) -> Result<TrackedCell> {
    if let Some(l) = lines.iter().find(|l| l.color == Color::Black) {
        return Err(Error::Precondition(format!("line {} is not red, green or blue", l.line)));
    }
    let seeds = [first_of(lines, Color::Red)?, first_of(lines, Color::Green)?, first_of(lines, Color::Blue)?];
    let [r, g, b] = seeds;
    let corner = |i: usize, j: usize| {
        lines[i].line.intersection(&lines[j].line).ok_or(Error::NotSimple(SimplicityWitness::Parallel(i.min(j), i.max(j))))
    };
    // triangle vertices rg, gb, br; edges run along g, b, r
    let mut cell = TrackedCell { vertices: vec![corner(r, g)?, corner(g, b)?, corner(b, r)?], edge_lines: vec![g, b, r] };
    match crate::geom::orient(&cell.vertices[0], &cell.vertices[1], &cell.vertices[2]) {
        0 => {
            let mut t = seeds;
            t.sort_unstable();
            return Err(Error::NotSimple(SimplicityWitness::TriplePoint(t[0], t[1], t[2])));
        }
        -1 => {
            cell.vertices = vec![cell.vertices[0].clone(), cell.vertices[2].clone(), cell.vertices[1].clone()];
            cell.edge_lines = vec![r, b, g];
        }
        _ => {}
    }
    for l in (0..lines.len()).filter(|i| !seeds.contains(i)) {
        if let Some((a, b)) = cell.split(l, lines)? {
            cell = match (a.is_complete(lines)?, b.is_complete(lines)?) {
                (true, _) => a,
                (false, true) => b,
                (false, false) => return Err(Error::internal(format!("neither half is complete after inserting line {l}"))),
            };
        }
    }
    Ok(cell)
}

/// A complete bounded face of the arrangement.
pub fn find_complete_face(lines: &[ColoredLine]) -> Result<Face> {
    let arr = build_arrangement(lines)?;
    complete_face_in(&arr)
}

pub fn complete_face_in(arr: &Arrangement) -> Result<Face> {
    let cell = track_complete_cell(&arr.lines)?;
    let face = arr
        .locate(&cell.centroid())
        .ok_or_else(|| Error::internal("tracked cell is not a face of the arrangement"))?;
    let mut a: Vec<usize> = face.lines.iter().flatten().copied().collect();
    let mut b = cell.edge_lines.clone();
    a.sort_unstable();
    b.sort_unstable();
    if !face.bounded || a != b {
        return Err(Error::internal("tracked cell disagrees with the arrangement face"));
    }
    Ok(face.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cell::parity::is_complete;
    use crate::geom::{int, rat, Line, Rat};

    fn cl(m: Rat, i: Rat, c: Color) -> ColoredLine {
        ColoredLine::new(Line::from_slope_intercept(m, i), c)
    }

    #[test]
    fn one_line_per_color_gives_the_triangle() {
        let lines = vec![cl(int(0), int(0), Color::Red), cl(int(1), int(1), Color::Green), cl(int(-1), int(3), Color::Blue)];
        let f = find_complete_face(&lines).unwrap();
        assert!(f.bounded);
        assert_eq!(f.lines.len(), 3);
        assert!(is_complete(&f).unwrap());
    }

    #[test]
    fn star_of_nine_lines() {
        // lines tangent to a circle-like polygon, colors cycling R, G, B
        let mut lines = Vec::new();
        for i in 0..9i64 {
            let m = rat(2 * i - 9, 3);
            lines.push(cl(m.clone(), -(&m * &m) / int(4) + rat(i, 97), Color::RGB[(i % 3) as usize]));
        }
        let arr = build_arrangement(&lines).unwrap();
        let f = complete_face_in(&arr).unwrap();
        assert!(is_complete(&f).unwrap());
        assert!(arr.bounded_faces().any(|g| g.id == f.id));
    }

    #[test]
    fn missing_color_is_reported() {
        let lines = vec![cl(int(0), int(0), Color::Red), cl(int(1), int(1), Color::Green), cl(int(2), int(3), Color::Green)];
        assert!(matches!(find_complete_face(&lines), Err(Error::MissingColor(Color::Blue))));
    }
}
