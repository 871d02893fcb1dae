//! Colored points on the integer lattice and their orthogonal convex hull.

use crate::error::{Error, Result};
use crate::geom::{Color, ColorCounts};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeColoredPoint {
    pub x: i64,
    pub y: i64,
    pub color: Color,
}

impl LatticeColoredPoint {
    pub fn new(x: i64, y: i64, color: Color) -> Self {
        LatticeColoredPoint { x, y, color }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePointSet {
    pub points: Vec<LatticeColoredPoint>,
}

impl LatticePointSet {
    pub fn new(points: Vec<LatticeColoredPoint>) -> Self {
        LatticePointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// No two points share a row or a column.
    pub fn in_general_position(&self) -> bool {
        let xs: HashSet<i64> = self.points.iter().map(|p| p.x).collect();
        let ys: HashSet<i64> = self.points.iter().map(|p| p.y).collect();
        xs.len() == self.len() && ys.len() == self.len()
    }

    pub fn counts(&self) -> ColorCounts {
        ColorCounts::tally(self.points.iter().map(|p| p.color))
    }

    /// Points per color, after checking general position and balance.
    pub fn validate(&self) -> Result<usize> {
        if !self.in_general_position() {
            return Err(Error::Precondition("two lattice points share a row or a column".into()));
        }
        if self.points.iter().any(|p| p.color == Color::Black) {
            return Err(Error::Precondition("only red, green and blue are allowed".into()));
        }
        let c = self.counts();
        c.balanced().ok_or_else(|| Error::Precondition(format!("color classes are unequal: {c}")))
    }
}

/// Indices of the points with at least one empty open quadrant.
pub fn ortho_hull(s: &LatticePointSet) -> Vec<usize> {
    let pts = &s.points;
    (0..pts.len())
        .filter(|&i| {
            let p = pts[i];
            let mut occupied = [false; 4];
            for q in pts {
                let (dx, dy) = (q.x - p.x, q.y - p.y);
                if dx == 0 || dy == 0 {
                    continue;
                }
                occupied[((dx < 0) as usize) * 2 + (dy < 0) as usize] = true;
            }
            occupied.iter().any(|o| !o)
        })
        .collect()
}

/// The color of every hull point, if they agree.
pub fn hull_color(s: &LatticePointSet) -> Option<Color> {
    let hull = ortho_hull(s);
    let first = s.points[*hull.first()?].color;
    hull.iter().all(|&i| s.points[i].color == first).then_some(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Color::*;

    fn set(v: &[(i64, i64, Color)]) -> LatticePointSet {
        LatticePointSet::new(v.iter().map(|&(x, y, c)| LatticeColoredPoint::new(x, y, c)).collect())
    }

    #[test]
    fn staircase_is_all_hull() {
        let s = set(&[(0, 0, Red), (1, 1, Green), (2, 2, Blue)]);
        assert_eq!(ortho_hull(&s), vec![0, 1, 2]);
    }

    #[test]
    fn ring_around_a_center() {
        let s = set(&[(0, 3, Red), (1, 0, Red), (4, 1, Red), (3, 4, Red), (2, 2, Blue)]);
        assert_eq!(ortho_hull(&s), vec![0, 1, 2, 3]);
        assert_eq!(hull_color(&s), Some(Red));
    }

    #[test]
    fn single_point() {
        let s = set(&[(5, 5, Green)]);
        assert_eq!(ortho_hull(&s), vec![0]);
    }

    #[test]
    fn validation() {
        assert!(set(&[(0, 0, Red), (0, 1, Green), (2, 2, Blue)]).validate().is_err());
        assert_eq!(set(&[(0, 0, Red), (1, 1, Green), (2, 2, Blue)]).validate().unwrap(), 1);
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    /// Any point off the hull sees hull points in all four quadrants, so a
    /// hull of at most three points means every point is on it.
    #[test]
    fn small_hulls_leave_no_interior() {
        for m in [6usize, 9] {
            for perm in permutations(m) {
                let s = LatticePointSet::new(perm.iter().enumerate().map(|(x, &y)| LatticeColoredPoint::new(x as i64, y as i64, Red)).collect());
                let h = ortho_hull(&s).len();
                assert!(h >= 4 || h == m);
            }
        }
    }
}
