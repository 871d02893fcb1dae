//! Closed polygons on `Z^2` and exact winding numbers around a lattice point.

use crate::error::{Error, Result};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

pub type LatticePoint = (i64, i64);

/// Closed polygon given by its cyclic vertex list (the closing edge is implicit).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticePolygon {
    pub vertices: Vec<LatticePoint>,
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

fn on_segment(a: LatticePoint, b: LatticePoint, p: LatticePoint) -> bool {
    cross(a, b, p) == 0
        && p.0 >= a.0.min(b.0)
        && p.0 <= a.0.max(b.0)
        && p.1 >= a.1.min(b.1)
        && p.1 <= a.1.max(b.1)
}

impl LatticePolygon {
    pub fn new(vertices: Vec<LatticePoint>) -> Self {
        LatticePolygon { vertices }
    }

    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    pub fn reversed(&self) -> LatticePolygon {
        let mut v = self.vertices.clone();
        v.reverse();
        LatticePolygon { vertices: v }
    }

    /// True if `p` lies on a vertex or edge of the polygon.
    pub fn touches(&self, p: LatticePoint) -> bool {
        self.edges().any(|(a, b)| on_segment(a, b, p))
    }

    /// Net counterclockwise turns around `p`, counted as signed crossings of
    /// the ray from `p` towards `+x`.
    pub fn winding_around(&self, p: LatticePoint) -> Result<i64> {
        if self.touches(p) {
            return Err(Error::OriginOnCurve);
        }
        let mut w = 0;
        for (a, b) in self.edges() {
            if a.1 <= p.1 {
                if b.1 > p.1 && cross(a, b, p) > 0 {
                    w += 1;
                }
            } else if b.1 <= p.1 && cross(a, b, p) < 0 {
                w -= 1;
            }
        }
        Ok(w)
    }

    /// Every edge vector has coordinate gcd at most 1, so no edge has a
    /// lattice point in its relative interior.
    pub fn edges_are_primitive(&self) -> bool {
        self.edges().all(|(a, b)| (b.0 - a.0).gcd(&(b.1 - a.1)) <= 1)
    }

    /// Vertex `i + m` equals `-vertex i` where `m` is half the vertex count.
    pub fn is_centrally_symmetric(&self) -> bool {
        let n = self.vertices.len();
        if !n.is_multiple_of(2) {
            return false;
        }
        let m = n / 2;
        (0..m).all(|i| {
            let (x, y) = self.vertices[i];
            self.vertices[i + m] == (-x, -y)
        })
    }
}

pub fn winding_number(c: &LatticePolygon) -> Result<i64> {
    c.winding_around((0, 0))
}

/// Strict interior test for a closed lattice polygon (nonzero winding, not on the boundary).
pub fn strictly_inside(c: &LatticePolygon, p: LatticePoint) -> bool {
    matches!(c.winding_around(p), Ok(w) if w != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: accumulate signed quarter turns by quadrant.
    fn quadrant_oracle(c: &LatticePolygon) -> i64 {
        fn quad(p: LatticePoint) -> i64 {
            if p.0 > 0 && p.1 >= 0 {
                0
            } else if p.0 <= 0 && p.1 > 0 {
                1
            } else if p.0 < 0 && p.1 <= 0 {
                2
            } else {
                3
            }
        }
        let mut total = 0;
        for (a, b) in c.edges() {
            let (qa, qb) = (quad(a), quad(b));
            let mut d = (qb - qa).rem_euclid(4);
            if d == 3 {
                d = -1;
            } else if d == 2 {
                d = if cross((0, 0), a, b) > 0 { 2 } else { -2 };
            }
            total += d;
        }
        total / 4
    }

    #[test]
    fn square_examples() {
        let sq = LatticePolygon::new(vec![(1, 1), (-1, 1), (-1, -1), (1, -1)]);
        assert_eq!(winding_number(&sq).unwrap(), 1);
        let moved = LatticePolygon::new(vec![(3, 1), (2, 1), (2, 0), (3, 0)]);
        assert_eq!(winding_number(&moved).unwrap(), 0);
        let twice = LatticePolygon::new([sq.vertices.clone(), sq.vertices.clone()].concat());
        assert_eq!(quadrant_oracle(&twice), 2);
        assert_eq!(winding_number(&twice).unwrap(), 2);
    }

    #[test]
    fn origin_on_curve_is_reported() {
        let through = LatticePolygon::new(vec![(-1, 0), (1, 0), (0, 1)]);
        assert!(matches!(winding_number(&through), Err(Error::OriginOnCurve)));
        let vertex = LatticePolygon::new(vec![(0, 0), (1, 0), (0, 1)]);
        assert!(matches!(winding_number(&vertex), Err(Error::OriginOnCurve)));
    }

    #[test]
    fn symmetry_and_primitive_edges() {
        let c = LatticePolygon::new(vec![(1, 0), (0, 1), (-1, 0), (0, -1)]);
        assert!(c.is_centrally_symmetric());
        assert!(c.edges_are_primitive());
        let long = LatticePolygon::new(vec![(2, 0), (-2, 0)]);
        assert!(!long.edges_are_primitive());
    }

    proptest! {
        #[test]
        fn reversal_negates_winding(v in prop::collection::vec((-4i64..5, -4i64..5), 3..12)) {
            let c = LatticePolygon::new(v);
            if let Ok(w) = winding_number(&c) {
                prop_assert_eq!(winding_number(&c.reversed()).unwrap(), -w);
                prop_assert_eq!(quadrant_oracle(&c), w);
            }
        }
    }
}
