//! L-lines: two axis-parallel rays from a common corner.

use super::points::LatticePointSet;
use crate::geom::rat::rat_pair;
use crate::geom::{int, ColorCounts, Rat};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ray {
    Up,
    Down,
    Left,
    Right,
}

impl Ray {
    pub const ALL: [Ray; 4] = [Ray::Up, Ray::Down, Ray::Left, Ray::Right];

    pub fn direction(self) -> (i64, i64) {
        match self {
            Ray::Up => (0, 1),
            Ray::Down => (0, -1),
            Ray::Left => (-1, 0),
            Ray::Right => (1, 0),
        }
    }

    pub fn from_direction(d: (i64, i64)) -> Option<Ray> {
        Ray::ALL.into_iter().find(|r| r.direction() == d)
    }
}

/// The six unordered ray pairs, in canonical order.
pub const RAY_PAIRS: [[Ray; 2]; 6] = [
    [Ray::Up, Ray::Down],
    [Ray::Up, Ray::Left],
    [Ray::Up, Ray::Right],
    [Ray::Down, Ray::Left],
    [Ray::Down, Ray::Right],
    [Ray::Left, Ray::Right],
];

/// Region 1 is the quadrant between the rays for a bent L-line, the upper
/// side of a horizontal one and the left side of a vertical one.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LLine {
    #[serde(with = "rat_pair")]
    pub corner: (Rat, Rat),
    pub rays: [Ray; 2],
}

impl LLine {
    /// Rays are stored sorted; equal rays are rejected.
    pub fn new(corner: (Rat, Rat), a: Ray, b: Ray) -> Option<LLine> {
        match a.cmp(&b) {
            Ordering::Less => Some(LLine { corner, rays: [a, b] }),
            Ordering::Greater => Some(LLine { corner, rays: [b, a] }),
            Ordering::Equal => None,
        }
    }

    pub fn is_straight(&self) -> bool {
        matches!(self.rays, [Ray::Up, Ray::Down] | [Ray::Left, Ray::Right])
    }

    pub fn region_of_lattice(&self, x: i64, y: i64) -> Option<bool> {
        self.region_of(&int(x), &int(y))
    }

    /// `Some(true)` for region 1, `Some(false)` for region 2, `None` on the L-line.
    pub fn region_of(&self, x: &Rat, y: &Rat) -> Option<bool> {
        let (cx, cy) = &self.corner;
        let dx = x - cx;
        let dy = y - cy;
        let on_ray = |r: Ray| match r {
            Ray::Up => dx.is_zero() && !dy.is_negative(),
            Ray::Down => dx.is_zero() && !dy.is_positive(),
            Ray::Left => dy.is_zero() && !dx.is_positive(),
            Ray::Right => dy.is_zero() && !dx.is_negative(),
        };
        if on_ray(self.rays[0]) || on_ray(self.rays[1]) {
            return None;
        }
        let (l, r, u, d) = (dx.is_negative(), dx.is_positive(), dy.is_positive(), dy.is_negative());
        Some(match self.rays {
            [Ray::Up, Ray::Down] => l,
            [Ray::Left, Ray::Right] => u,
            [Ray::Up, Ray::Left] => l && u,
            [Ray::Up, Ray::Right] => r && u,
            [Ray::Down, Ray::Left] => l && d,
            [Ray::Down, Ray::Right] => r && d,
            _ => unreachable!("rays are sorted and distinct"),
        })
    }
}

/// Color counts in region 1 and region 2. Points on the L-line are skipped;
/// lattice inputs with half-integer corners never hit it.
pub fn lline_counts(l: &LLine, s: &LatticePointSet) -> (ColorCounts, ColorCounts) {
    let mut one = ColorCounts::default();
    let mut two = ColorCounts::default();
    for p in &s.points {
        match l.region_of_lattice(p.x, p.y) {
            Some(true) => one.add(p.color),
            Some(false) => two.add(p.color),
            None => {}
        }
    }
    (one, two)
}

/// `Some(k)` when region 1 holds exactly `k` points of each color, `0 < k < n`.
pub fn balanced_split(l: &LLine, s: &LatticePointSet, n: usize) -> Option<usize> {
    let (one, two) = lline_counts(l, s);
    let k = one.balanced()?;
    (k > 0 && k < n && two.balanced() == Some(n - k)).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{half, Color};
    use crate::lattice::points::LatticeColoredPoint;

    fn corner(x: i64, y: i64) -> (Rat, Rat) {
        (int(x) + half(), int(y) + half())
    }

    #[test]
    fn region_table() {
        let c = corner(0, 0);
        let probe = |rays: [Ray; 2], x: i64, y: i64| LLine::new(c.clone(), rays[0], rays[1]).unwrap().region_of(&int(x), &int(y)).unwrap();
        assert!(probe([Ray::Up, Ray::Left], 0, 1));
        assert!(!probe([Ray::Up, Ray::Left], 1, 1));
        assert!(probe([Ray::Up, Ray::Right], 1, 1));
        assert!(probe([Ray::Down, Ray::Left], 0, 0));
        assert!(probe([Ray::Down, Ray::Right], 1, 0));
        assert!(!probe([Ray::Down, Ray::Right], 1, 1));
        assert!(probe([Ray::Left, Ray::Right], 7, 1));
        assert!(!probe([Ray::Left, Ray::Right], 7, 0));
        assert!(probe([Ray::Up, Ray::Down], 0, 9));
        assert!(!probe([Ray::Up, Ray::Down], 1, 9));
    }

    #[test]
    fn boundary_points_are_skipped() {
        let l = LLine::new((int(0), int(0)), Ray::Up, Ray::Right).unwrap();
        assert_eq!(l.region_of(&int(0), &int(3)), None);
        assert_eq!(l.region_of(&int(2), &int(0)), None);
        assert_eq!(l.region_of(&int(0), &int(0)), None);
        assert_eq!(l.region_of(&int(0), &int(-3)), Some(false));
    }

    #[test]
    fn counts_and_json() {
        let s = LatticePointSet::new(vec![
            LatticeColoredPoint::new(0, 0, Color::Red),
            LatticeColoredPoint::new(1, 3, Color::Green),
            LatticeColoredPoint::new(2, 1, Color::Blue),
        ]);
        let l = LLine::new(corner(0, 0), Ray::Right, Ray::Up).unwrap();
        let (a, b) = lline_counts(&l, &s);
        assert_eq!(a.as_tuple(), (0, 1, 1));
        assert_eq!(b.as_tuple(), (1, 0, 0));
        let js = serde_json::to_string(&l).unwrap();
        assert_eq!(js, r#"{"corner":["1/2","1/2"],"rays":["up","right"]}"#);
        assert_eq!(serde_json::from_str::<LLine>(&js).unwrap(), l);
    }
}
