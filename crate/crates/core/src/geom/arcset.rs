//! Unions of half-open arcs on the circle parameterized by `[0, 1)`.

use super::color::{Color, ColorCounts};
use super::rat::{frac, rat_pair, rat_str, Rat};
use crate::error::{Error, Result};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// A colored point on the circle, identified by its parameter `t` in `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CirclePoint {
    #[serde(with = "rat_str")]
    pub t: Rat,
    pub color: Color,
}

impl CirclePoint {
    pub fn new(t: Rat, color: Color) -> Self {
        CirclePoint { t: frac(&t), color }
    }
}

/// Canonical form: each arc is `[lo, hi)` with `0 <= lo < 1` and
/// `lo < hi <= lo + 1`; `hi > 1` marks the arc that wraps through `0`.
/// Arcs are sorted by `lo`, pairwise disjoint, and no two share an endpoint.
/// The whole circle is the single arc `[0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<ArcRepr>", into = "Vec<ArcRepr>")]
pub struct ArcSet {
    arcs: Vec<(Rat, Rat)>,
}

#[derive(Serialize, Deserialize)]
#[serde(transparent)]
struct ArcRepr(#[serde(with = "rat_pair")] (Rat, Rat));

impl TryFrom<Vec<ArcRepr>> for ArcSet {
    type Error = Error;
    fn try_from(v: Vec<ArcRepr>) -> Result<ArcSet> {
        for ArcRepr((lo, hi)) in &v {
            if hi <= lo || hi - lo > Rat::one() {
                return Err(Error::Precondition(format!("malformed arc [{lo}, {hi})")));
            }
        }
        Ok(ArcSet::from_arcs(v.into_iter().map(|a| a.0)))
    }
}

impl From<ArcSet> for Vec<ArcRepr> {
    fn from(a: ArcSet) -> Self {
        a.arcs.into_iter().map(ArcRepr).collect()
    }
}

impl ArcSet {
    pub fn empty() -> Self {
        ArcSet { arcs: Vec::new() }
    }

    pub fn full() -> Self {
        ArcSet { arcs: vec![(Rat::zero(), Rat::one())] }
    }

    /// Builds the union of arbitrary arcs `[lo, hi)` with `lo < hi <= lo + 1`.
    /// `lo` may be any rational; it is reduced modulo 1.
    pub fn from_arcs<I: IntoIterator<Item = (Rat, Rat)>>(arcs: I) -> Self {
        let mut pieces = Vec::new();
        for (lo, hi) in arcs {
            if hi <= lo {
                continue;
            }
            if &hi - &lo >= Rat::one() {
                return ArcSet::full();
            }
            let l = frac(&lo);
            let h = &l + (&hi - &lo);
            if h > Rat::one() {
                pieces.push((l, Rat::one()));
                pieces.push((Rat::zero(), h - Rat::one()));
            } else {
                pieces.push((l, h));
            }
        }
        ArcSet::from_linear(pieces)
    }

    /// Canonicalizes a list of intervals inside `[0, 1]`.
    fn from_linear(mut pieces: Vec<(Rat, Rat)>) -> Self {
        pieces.sort();
        let mut merged: Vec<(Rat, Rat)> = Vec::new();
        for (lo, hi) in pieces {
            match merged.last_mut() {
                Some(last) if lo <= last.1 => {
                    if hi > last.1 {
                        last.1 = hi;
                    }
                }
                _ => merged.push((lo, hi)),
            }
        }
        if merged.len() == 1 && merged[0].0.is_zero() && merged[0].1.is_one() {
            return ArcSet::full();
        }
        if merged.len() >= 2 && merged[0].0.is_zero() && merged.last().unwrap().1.is_one() {
            let first = merged.remove(0);
            let last = merged.last_mut().unwrap();
            last.1 = Rat::one() + first.1;
        }
        ArcSet { arcs: merged }
    }

    pub fn arcs(&self) -> &[(Rat, Rat)] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.arcs.len() == 1 && self.arcs[0].0.is_zero() && self.arcs[0].1.is_one()
    }

    /// Pieces of the set as intervals inside `[0, 1)` (a wrapping arc is split).
    pub fn linear_pieces(&self) -> Vec<(Rat, Rat)> {
        let mut out = Vec::new();
        for (lo, hi) in &self.arcs {
            if *hi > Rat::one() {
                out.push((Rat::zero(), hi - Rat::one()));
                out.push((lo.clone(), Rat::one()));
            } else {
                out.push((lo.clone(), hi.clone()));
            }
        }
        out.sort();
        out
    }

    pub fn complement(&self) -> ArcSet {
        let mut gaps = Vec::new();
        let mut cursor = Rat::zero();
        for (lo, hi) in self.linear_pieces() {
            if lo > cursor {
                gaps.push((cursor.clone(), lo));
            }
            cursor = hi;
        }
        if cursor < Rat::one() {
            gaps.push((cursor, Rat::one()));
        }
        ArcSet::from_linear(gaps)
    }

    pub fn contains(&self, t: &Rat) -> bool {
        let t = frac(t);
        let t1 = &t + Rat::one();
        self.arcs.iter().any(|(lo, hi)| (lo <= &t && &t < hi) || (lo <= &t1 && &t1 < hi))
    }

    pub fn component_count(&self) -> usize {
        self.arcs.len()
    }

    /// Arc endpoints reduced into `[0, 1)`.
    pub fn endpoints(&self) -> Vec<Rat> {
        if self.is_full() {
            return Vec::new();
        }
        self.arcs.iter().flat_map(|(lo, hi)| [frac(lo), frac(hi)]).collect()
    }

    /// Exact per-color membership counts. Fails if a point sits on an arc endpoint.
    pub fn color_counts(&self, points: &[CirclePoint]) -> Result<ColorCounts> {
        let ends = self.endpoints();
        let mut out = ColorCounts::default();
        for p in points {
            let t = frac(&p.t);
            if ends.contains(&t) {
                return Err(Error::BoundaryPoint(t));
            }
            if self.contains(&t) {
                out.add(p.color);
            }
        }
        Ok(out)
    }

    /// Shift every parameter by `delta` (mod 1).
    pub fn rotate(&self, delta: &Rat) -> ArcSet {
        if self.is_full() {
            return self.clone();
        }
        ArcSet::from_arcs(self.arcs.iter().map(|(lo, hi)| (lo + delta, hi + delta)))
    }

    /// Total length of the set, in units of the full circle.
    pub fn measure(&self) -> Rat {
        self.arcs.iter().fold(Rat::zero(), |acc, (lo, hi)| acc + (hi - lo))
    }
}

/// Shift point parameters and an arc set by `delta` (mod 1); memberships are preserved.
pub fn rotate_parameters(points: &[CirclePoint], arcs: &ArcSet, delta: &Rat) -> (Vec<CirclePoint>, ArcSet) {
    let moved = points.iter().map(|p| CirclePoint::new(&p.t + delta, p.color)).collect();
    (moved, arcs.rotate(delta))
}

/// Reduced parameter `t + delta` in `[0, 1)`.
pub fn shifted(t: &Rat, delta: &Rat) -> Rat {
    frac(&(t + delta))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat::rat;
    use proptest::prelude::*;

    #[test]
    fn complement_examples() {
        assert!(ArcSet::full().complement().is_empty());
        assert!(ArcSet::empty().complement().is_full());
        let a = ArcSet::from_arcs([(rat(1, 10), rat(2, 5))]);
        assert_eq!(a.complement().arcs(), &[(rat(2, 5), rat(11, 10))]);
        assert_eq!(a.complement().complement(), a);
    }

    #[test]
    fn counts_example() {
        let a = ArcSet::from_arcs([(rat(0, 1), rat(1, 2))]);
        let pts = [CirclePoint::new(rat(1, 4), Color::Red), CirclePoint::new(rat(3, 4), Color::Green)];
        assert_eq!(a.color_counts(&pts).unwrap(), ColorCounts::new(1, 0, 0));
        let on_end = [CirclePoint::new(rat(1, 2), Color::Red)];
        assert!(matches!(a.color_counts(&on_end), Err(Error::BoundaryPoint(_))));
    }

    #[test]
    fn merging_and_wrapping() {
        let a = ArcSet::from_arcs([(rat(9, 10), rat(11, 10)), (rat(1, 10), rat(1, 5))]);
        assert_eq!(a.arcs(), &[(rat(9, 10), rat(6, 5))]);
        assert_eq!(a.component_count(), 1);
        let b = ArcSet::from_arcs([(rat(0, 1), rat(1, 2)), (rat(1, 2), rat(1, 1))]);
        assert!(b.is_full());
        assert!(a.contains(&rat(0, 1)) && a.contains(&rat(19, 20)) && !a.contains(&rat(1, 2)));
    }

    #[test]
    fn rotation_keeps_counts() {
        let pts: Vec<_> = (0..6)
            .map(|i| CirclePoint::new(rat(2 * i + 1, 12), Color::RGB[i as usize % 3]))
            .collect();
        let a = ArcSet::from_arcs([(rat(1, 24), rat(7, 24)), (rat(17, 24), rat(21, 24))]);
        let before = a.color_counts(&pts).unwrap();
        for d in [rat(0, 1), rat(1, 2), rat(5, 7)] {
            let (p2, a2) = rotate_parameters(&pts, &a, &d);
            assert_eq!(a2.color_counts(&p2).unwrap(), before);
        }
        let (p2, a2) = rotate_parameters(&pts, &a, &rat(1, 2));
        let (p3, a3) = rotate_parameters(&p2, &a2, &rat(1, 2));
        assert_eq!((p3, a3), (pts, a));
    }

    fn arb_arcset() -> impl Strategy<Value = ArcSet> {
        prop::collection::vec((0i64..97, 1i64..60), 0..4).prop_map(|v| {
            ArcSet::from_arcs(v.into_iter().map(|(lo, len)| (rat(lo, 97), rat(lo + len, 97))))
        })
    }

    proptest! {
        #[test]
        fn complement_partitions_circle(a in arb_arcset(), t in 0i64..1000) {
            // odd/2000 never equals an endpoint with denominator 97
            let t = rat(2 * t + 1, 2000);
            let c = a.complement();
            prop_assert!(a.contains(&t) ^ c.contains(&t));
            prop_assert_eq!(c.complement(), a.clone());
            prop_assert_eq!(a.measure() + c.measure(), Rat::one());
        }
    }
}
