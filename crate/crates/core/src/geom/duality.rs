//! Point-line duality: the point `(a, b)` maps to the line `y = a*x - b`.
//!
//! Incidence and above/below relations are preserved, so the lines meeting a
//! segment on a line `L` dualize to the points of a double wedge with apex `L*`.

use super::line::{ColoredLine, Line};
use super::point::{ColoredPoint, Point};
use crate::error::{Error, Result};

pub fn dual_point_to_line(p: &Point) -> Line {
    Line::from_slope_intercept(p.x.clone(), -p.y.clone())
}

pub fn dual_line_to_point(l: &Line) -> Result<Point> {
    let m = l.slope().ok_or(Error::VerticalLine)?;
    let i = l.y_at(&num_traits::Zero::zero()).ok_or(Error::VerticalLine)?;
    Ok(Point::new(m, -i))
}

pub fn dual_colored_points(points: &[ColoredPoint]) -> Vec<ColoredLine> {
    points.iter().map(|p| ColoredLine::new(dual_point_to_line(&p.pos), p.color)).collect()
}

pub fn dual_colored_lines(lines: &[ColoredLine]) -> Result<Vec<ColoredPoint>> {
    lines
        .iter()
        .map(|l| Ok(ColoredPoint::new(dual_line_to_point(&l.line)?, l.color)))
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat::{int, rat};
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let l = dual_point_to_line(&Point::from_ints(2, 3));
        assert_eq!(l, Line::from_slope_intercept(int(2), int(-3)));
        let z = dual_point_to_line(&Point::from_ints(0, 0));
        assert_eq!(z, Line::from_slope_intercept(int(0), int(0)));
        let p = Point::new(int(-5), rat(7, 2));
        assert_eq!(dual_line_to_point(&dual_point_to_line(&p)).unwrap(), p);
    }

    #[test]
    fn vertical_line_has_no_dual() {
        let v = Line::new(int(1), int(0), int(-3)).unwrap();
        assert!(matches!(dual_line_to_point(&v), Err(Error::VerticalLine)));
    }

    #[test]
    fn incidence_is_preserved() {
        let p = Point::from_ints(1, 4);
        let q = Point::from_ints(-2, 3);
        let pq = Line::through(&p, &q).unwrap();
        let apex = dual_line_to_point(&pq).unwrap();
        assert_eq!(dual_point_to_line(&p).side(&apex), 0);
        assert_eq!(dual_point_to_line(&q).side(&apex), 0);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn round_trip(a in -1000i64..1000, b in 1i64..50, c in -1000i64..1000, d in 1i64..50) {
            let p = Point::new(rat(a, b), rat(c, d));
            prop_assert_eq!(dual_line_to_point(&dual_point_to_line(&p)).unwrap(), p);
        }
    }
}
