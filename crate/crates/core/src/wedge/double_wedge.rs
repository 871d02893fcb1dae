//! Double wedges and their exact membership predicate.

use crate::error::{Error, Result};
use crate::geom::{dual_line_to_point, midpoint, Affine, ColorCounts, ColoredPoint, Line, Point, Rat, Segment};
use serde::{Deserialize, Serialize};

/// Which pair of opposite sectors is taken: `pair-1` holds the points on
/// opposite sides of the two boundary lines, `pair-2` those on equal sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sector {
    #[serde(rename = "pair-1")]
    Pair1,
    #[serde(rename = "pair-2")]
    Pair2,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleWedge {
    pub apex: Point,
    pub line1: Line,
    pub line2: Line,
    pub sector: Sector,
}

fn sector_of(l1: &Line, l2: &Line, p: &Point) -> Result<Sector> {
    match l1.side(p) * l2.side(p) {
        0 => Err(Error::OnBoundary),
        s if s < 0 => Ok(Sector::Pair1),
        _ => Ok(Sector::Pair2),
    }
}

impl DoubleWedge {
    /// The double wedge bounded by two distinct lines through a common
    /// point, taking the pair of sectors that holds `witness`.
    pub fn containing(line1: Line, line2: Line, witness: &Point) -> Result<DoubleWedge> {
        let apex = line1
            .intersection(&line2)
            .ok_or_else(|| Error::Precondition("double wedge boundaries must cross".into()))?;
        let sector = sector_of(&line1, &line2, witness)?;
        Ok(DoubleWedge { apex, line1, line2, sector })
    }

    /// Boundary lines through `apex` with slopes `s1 != s2`; `between`
    /// selects the sectors whose directions have slopes between the two.
    pub fn from_slopes(apex: &Point, s1: &Rat, s2: &Rat, between: bool) -> Result<DoubleWedge> {
        let l1 = Line::with_slope(apex, s1);
        let l2 = Line::with_slope(apex, s2);
        let probe = Point::new(&apex.x + Rat::from_integer(1.into()), &apex.y + midpoint(s1, s2));
        let mut w = DoubleWedge::containing(l1, l2, &probe)?;
        if !between {
            w.sector = match w.sector {
                Sector::Pair1 => Sector::Pair2,
                Sector::Pair2 => Sector::Pair1,
            };
        }
        Ok(w)
    }

    pub fn contains(&self, p: &Point) -> Result<bool> {
        Ok(sector_of(&self.line1, &self.line2, p)? == self.sector)
    }

    pub fn membership(&self, points: &[ColoredPoint]) -> Result<Vec<bool>> {
        points.iter().map(|q| self.contains(&q.pos)).collect()
    }

    pub fn counts(&self, points: &[ColoredPoint]) -> Result<ColorCounts> {
        let inside = self.membership(points)?;
        Ok(ColorCounts::tally(points.iter().zip(inside).filter(|(_, b)| *b).map(|(q, _)| q.color)))
    }

    /// Image under an affine map; `witness` is any point of the (original) wedge.
    pub fn mapped(&self, t: &Affine, witness: &Point) -> Result<DoubleWedge> {
        DoubleWedge::containing(t.apply_line(&self.line1), t.apply_line(&self.line2), &t.apply(witness))
    }

    /// The segment joining the dual points of the two boundary lines. It
    /// crosses exactly the duals of the wedge's points when the wedge takes
    /// the sectors between the boundary slopes and neither boundary is vertical.
    pub fn dual_segment(&self) -> Option<Segment> {
        let (s1, s2) = (self.line1.slope()?, self.line2.slope()?);
        let probe = Point::new(&self.apex.x + Rat::from_integer(1.into()), &self.apex.y + midpoint(&s1, &s2));
        if !self.contains(&probe).ok()? {
            return None;
        }
        Some(Segment::new(dual_line_to_point(&self.line1).ok()?, dual_line_to_point(&self.line2).ok()?))
    }
}

/// Exact membership of `p` in `w`.
pub fn wedge_contains(w: &DoubleWedge, p: &Point) -> Result<bool> {
    w.contains(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{dual_colored_points, int, Color};

    fn xwedge() -> DoubleWedge {
        DoubleWedge::containing(
            Line::from_slope_intercept(int(1), int(0)),
            Line::from_slope_intercept(int(-1), int(0)),
            &Point::from_ints(5, 1),
        )
        .unwrap()
    }

    #[test]
    fn horizontal_sectors() {
        let w = xwedge();
        assert_eq!(w.apex, Point::from_ints(0, 0));
        assert!(wedge_contains(&w, &Point::from_ints(2, 0)).unwrap());
        assert!(wedge_contains(&w, &Point::from_ints(-2, 0)).unwrap());
        assert!(!wedge_contains(&w, &Point::from_ints(0, 2)).unwrap());
        assert!(matches!(wedge_contains(&w, &Point::from_ints(3, 3)), Err(Error::OnBoundary)));
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(xwedge()).unwrap();
        assert_eq!(v["sector"], "pair-2");
        assert_eq!(v["apex"]["x"], "0");
        let back: DoubleWedge = serde_json::from_value(v).unwrap();
        assert_eq!(back, xwedge());
    }

    #[test]
    fn dual_segment_crosses_duals_of_members() {
        let w = DoubleWedge::from_slopes(&Point::from_ints(0, -1), &int(-2), &int(3), true).unwrap();
        let pts: Vec<ColoredPoint> = [(1, 0), (2, 9), (-1, 3), (3, 1), (-2, -4)]
            .iter()
            .map(|&(x, y)| ColoredPoint::from_ints(x, y, Color::Red))
            .collect();
        let seg = w.dual_segment().unwrap();
        let lines = dual_colored_points(&pts);
        let crossed = seg.crossed_lines(&lines).unwrap();
        let inside: Vec<usize> = (0..pts.len()).filter(|&i| w.contains(&pts[i].pos).unwrap()).collect();
        assert_eq!(crossed, inside);
        let outer = DoubleWedge::from_slopes(&Point::from_ints(0, -1), &int(-2), &int(3), false).unwrap();
        assert!(outer.dual_segment().is_none());
    }

    #[test]
    fn mapping_keeps_membership() {
        let w = xwedge();
        let t = Affine::shear_x(int(3));
        let m = w.mapped(&t, &Point::from_ints(5, 1)).unwrap();
        for (x, y) in [(2, 0), (0, 2), (-7, 1), (4, -5)] {
            let p = Point::from_ints(x, y);
            assert_eq!(w.contains(&p).unwrap(), m.contains(&t.apply(&p)).unwrap());
        }
    }
}
