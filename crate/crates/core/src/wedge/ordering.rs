//! Points sorted by the slope of their line to an apex.

use crate::error::{Error, Result};
use crate::geom::{Color, ColoredPoint, Point, Rat};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlopeOrdering {
    pub apex: Point,
    /// Input indices by increasing slope.
    pub order: Vec<usize>,
    /// Slope of the line from the apex to each point of `order`.
    #[serde(skip)]
    pub slopes: Vec<Rat>,
    /// Color of each point of `order`.
    pub colors: Vec<Color>,
}

pub(crate) fn slope(apex: &Point, q: &Point) -> Rat {
    (&q.y - &apex.y) / (&q.x - &apex.x)
}

pub fn ordering_at(p: &Point, points: &[ColoredPoint]) -> Result<SlopeOrdering> {
    if points.iter().any(|q| q.pos.x == p.x) {
        return Err(Error::DegenerateApex);
    }
    let mut keyed: Vec<(Rat, usize)> = points.iter().enumerate().map(|(i, q)| (slope(p, &q.pos), i)).collect();
    keyed.sort();
    if keyed.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::DegenerateApex);
    }
    Ok(SlopeOrdering {
        apex: p.clone(),
        colors: keyed.iter().map(|&(_, i)| points[i].color).collect(),
        order: keyed.iter().map(|&(_, i)| i).collect(),
        slopes: keyed.into_iter().map(|(s, _)| s).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::int;

    fn pts() -> Vec<ColoredPoint> {
        [(0, 5, Color::Red), (3, 1, Color::Green), (-4, 2, Color::Blue), (7, 8, Color::Red), (-1, -3, Color::Green)]
            .iter()
            .map(|&(x, y, c)| ColoredPoint::from_ints(x, y, c))
            .collect()
    }

    /// Left of the apex by decreasing x, then right of it by decreasing x.
    fn far_below_rule(apex_x: i64, s: &[ColoredPoint]) -> Vec<usize> {
        let mut left: Vec<usize> = (0..s.len()).filter(|&i| s[i].pos.x < int(apex_x)).collect();
        let mut right: Vec<usize> = (0..s.len()).filter(|&i| s[i].pos.x > int(apex_x)).collect();
        left.sort_by(|&a, &b| s[b].pos.x.cmp(&s[a].pos.x));
        right.sort_by(|&a, &b| s[b].pos.x.cmp(&s[a].pos.x));
        left.extend(right);
        left
    }

    #[test]
    fn far_below_and_far_above() {
        let s = pts();
        let below = ordering_at(&Point::from_ints(1, -10_000), &s).unwrap();
        assert_eq!(below.order, far_below_rule(1, &s));
        let above = ordering_at(&Point::from_ints(1, 10_000), &s).unwrap();
        let mut rev = below.order.clone();
        rev.reverse();
        assert_eq!(above.order, rev);
    }

    #[test]
    fn matches_pairwise_slope_comparison() {
        let s: Vec<ColoredPoint> = pts().into_iter().take(3).collect();
        let p = Point::from_ints(1, 0);
        let o = ordering_at(&p, &s).unwrap();
        // a before b iff (a - p) x (b - p) cross term with sign of x-offsets says slope(a) < slope(b)
        for w in o.order.windows(2) {
            let (a, b) = (&s[w[0]].pos, &s[w[1]].pos);
            let (ax, ay) = (&a.x - &p.x, &a.y - &p.y);
            let (bx, by) = (&b.x - &p.x, &b.y - &p.y);
            let lhs = &ay * &bx;
            let rhs = &by * &ax;
            let flip = (&ax * &bx) < int(0);
            assert!(if flip { lhs > rhs } else { lhs < rhs });
        }
    }

    #[test]
    fn degenerate_apexes() {
        let s = pts();
        assert!(matches!(ordering_at(&Point::from_ints(0, 0), &s), Err(Error::DegenerateApex)));
        // (3,1) and (7,8) lie on a line through (-1, -6)
        assert!(matches!(ordering_at(&Point::from_ints(-1, -6), &s), Err(Error::DegenerateApex)));
    }
}
