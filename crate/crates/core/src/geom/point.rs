use super::color::Color;
use super::rat::{int, rat_str, sign, Rat};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    #[serde(with = "rat_str")]
    pub x: Rat,
    #[serde(with = "rat_str")]
    pub y: Rat,
}

impl Point {
    pub fn new(x: Rat, y: Rat) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point { x: int(x), y: int(y) }
    }

    pub fn sub(&self, o: &Point) -> (Rat, Rat) {
        (&self.x - &o.x, &self.y - &o.y)
    }

    /// `self + s * dir`.
    pub fn offset(&self, dir: &(Rat, Rat), s: &Rat) -> Point {
        Point { x: &self.x + s * &dir.0, y: &self.y + s * &dir.1 }
    }

    pub fn lerp(&self, o: &Point, t: &Rat) -> Point {
        Point { x: &self.x + t * (&o.x - &self.x), y: &self.y + t * (&o.y - &self.y) }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredPoint {
    #[serde(flatten)]
    pub pos: Point,
    pub color: Color,
}

impl ColoredPoint {
    pub fn new(pos: Point, color: Color) -> Self {
        ColoredPoint { pos, color }
    }

    pub fn from_ints(x: i64, y: i64, color: Color) -> Self {
        ColoredPoint { pos: Point::from_ints(x, y), color }
    }
}

pub fn cross(u: &(Rat, Rat), v: &(Rat, Rat)) -> Rat {
    &u.0 * &v.1 - &u.1 * &v.0
}

/// Sign of the determinant of `(q - p, r - p)`; `+1` when `p, q, r` turn
/// counterclockwise.
pub fn orient(p: &Point, q: &Point, r: &Point) -> i8 {
    sign(&cross(&q.sub(p), &r.sub(p)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneralPosition {
    NoThreeCollinear,
    DistinctXY,
}

pub fn check_general_position(points: &[Point], mode: GeneralPosition) -> bool {
    match mode {
        GeneralPosition::DistinctXY => {
            let mut xs: Vec<&Rat> = points.iter().map(|p| &p.x).collect();
            let mut ys: Vec<&Rat> = points.iter().map(|p| &p.y).collect();
            xs.sort();
            ys.sort();
            xs.windows(2).all(|w| w[0] != w[1]) && ys.windows(2).all(|w| w[0] != w[1])
        }
        GeneralPosition::NoThreeCollinear => {
            let n = points.len();
            for i in 0..n {
                for j in i + 1..n {
                    if points[i] == points[j] {
                        return false;
                    }
                    for k in j + 1..n {
                        if orient(&points[i], &points[j], &points[k]) == 0 {
                            return false;
                        }
                    }
                }
            }
            true
        }
    }
}
