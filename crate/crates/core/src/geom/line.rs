use super::color::Color;
use super::point::Point;
use super::rat::{rat_str, sign, Rat};
use crate::error::{Error, Result};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The line `a*x + b*y + c = 0`, scaled so the first nonzero of `(a, b)` is
/// positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLine")]
pub struct Line {
    #[serde(with = "rat_str")]
    pub a: Rat,
    #[serde(with = "rat_str")]
    pub b: Rat,
    #[serde(with = "rat_str")]
    pub c: Rat,
}

#[derive(Deserialize)]
struct RawLine {
    #[serde(with = "rat_str")]
    a: Rat,
    #[serde(with = "rat_str")]
    b: Rat,
    #[serde(with = "rat_str")]
    c: Rat,
}

impl TryFrom<RawLine> for Line {
    type Error = Error;
    fn try_from(r: RawLine) -> Result<Line> {
        Line::new(r.a, r.b, r.c)
    }
}

impl Line {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Result<Line> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::Precondition("line with a = b = 0".into()));
        }
        let flip = if a.is_zero() { b.is_negative() } else { a.is_negative() };
        Ok(if flip { Line { a: -a, b: -b, c: -c } } else { Line { a, b, c } })
    }

    /// The line `y = m*x + i`.
    pub fn from_slope_intercept(m: Rat, i: Rat) -> Line {
        Line::new(m, Rat::from_integer((-1).into()), i).expect("b = -1")
    }

    /// Line through `p` with slope `m`.
    pub fn with_slope(p: &Point, m: &Rat) -> Line {
        let i = &p.y - m * &p.x;
        Line::from_slope_intercept(m.clone(), i)
    }

    pub fn through(p: &Point, q: &Point) -> Result<Line> {
        if p == q {
            return Err(Error::Precondition("line through coincident points".into()));
        }
        let a = &q.y - &p.y;
        let b = &p.x - &q.x;
        let c = -(&a * &p.x + &b * &p.y);
        Line::new(a, b, c)
    }

    pub fn eval(&self, p: &Point) -> Rat {
        &self.a * &p.x + &self.b * &p.y + &self.c
    }

    /// Which side of the (normalized) line `p` is on.
    pub fn side(&self, p: &Point) -> i8 {
        sign(&self.eval(p))
    }

    pub fn is_vertical(&self) -> bool {
        self.b.is_zero()
    }

    pub fn slope(&self) -> Option<Rat> {
        (!self.b.is_zero()).then(|| -&self.a / &self.b)
    }

    /// `y` value at the given `x` for a non-vertical line.
    pub fn y_at(&self, x: &Rat) -> Option<Rat> {
        (!self.b.is_zero()).then(|| -(&self.a * x + &self.c) / &self.b)
    }

    pub fn is_parallel(&self, o: &Line) -> bool {
        (&self.a * &o.b - &self.b * &o.a).is_zero()
    }

    pub fn same_as(&self, o: &Line) -> bool {
        self.is_parallel(o) && (&self.a * &o.c - &self.c * &o.a).is_zero() && (&self.b * &o.c - &self.c * &o.b).is_zero()
    }

    pub fn intersection(&self, o: &Line) -> Option<Point> {
        let det = &self.a * &o.b - &self.b * &o.a;
        if det.is_zero() {
            return None;
        }
        let x = (&self.b * &o.c - &self.c * &o.b) / &det;
        let y = (&self.c * &o.a - &self.a * &o.c) / &det;
        Some(Point::new(x, y))
    }

    /// A direction vector along the line.
    pub fn direction(&self) -> (Rat, Rat) {
        (self.b.clone(), -self.a.clone())
    }

    /// Parameter `s` where `from + s*dir` meets this line, if not parallel.
    pub fn hit_parameter(&self, from: &Point, dir: &(Rat, Rat)) -> Option<Rat> {
        let denom = &self.a * &dir.0 + &self.b * &dir.1;
        if denom.is_zero() {
            return None;
        }
        Some(-self.eval(from) / denom)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x + {}y + {} = 0", self.a, self.b, self.c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ColoredLine {
    #[serde(flatten)]
    pub line: Line,
    pub color: Color,
}

impl ColoredLine {
    pub fn new(line: Line, color: Color) -> Self {
        ColoredLine { line, color }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat::{int, rat};

    #[test]
    fn normalization_makes_leading_coefficient_positive() {
        let l = Line::new(int(-2), int(3), int(1)).unwrap();
        assert_eq!((l.a, l.b, l.c), (int(2), int(-3), int(-1)));
        let h = Line::new(int(0), int(-1), int(5)).unwrap();
        assert_eq!((h.a, h.b, h.c), (int(0), int(1), int(-5)));
        assert!(Line::new(int(0), int(0), int(1)).is_err());
    }

    #[test]
    fn intersection_and_slope() {
        let l1 = Line::from_slope_intercept(int(1), int(0));
        let l2 = Line::from_slope_intercept(int(-1), int(2));
        assert_eq!(l1.intersection(&l2), Some(Point::from_ints(1, 1)));
        assert_eq!(l1.slope(), Some(int(1)));
        assert!(l1.intersection(&Line::from_slope_intercept(int(1), int(3))).is_none());
        let t = Line::through(&Point::from_ints(0, 0), &Point::from_ints(2, 1)).unwrap();
        assert_eq!(t.slope(), Some(rat(1, 2)));
        assert_eq!(t.side(&Point::from_ints(1, 0)), -t.side(&Point::from_ints(0, 1)));
    }

    #[test]
    fn json_uses_rational_strings() {
        let l = ColoredLine::new(Line::from_slope_intercept(rat(1, 2), int(-3)), Color::Green);
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"{"a":"1/2","b":"-1","c":"-3","color":"G"}"#);
        let back: ColoredLine = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<ColoredLine>(r#"{"a":"0","b":"0","c":"1","color":"R"}"#).is_err());
    }
}
