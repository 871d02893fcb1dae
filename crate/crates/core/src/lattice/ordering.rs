//! Sided orderings of a lattice point set and the sequence that walks from
//! the bottom-to-top order to its reverse.

use super::points::LatticePointSet;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Clockwise rotation applied before reading off the ordering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theta {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "pi/2")]
    HalfPi,
    #[serde(rename = "pi")]
    Pi,
    #[serde(rename = "3pi/2")]
    ThreeHalfPi,
}

impl Theta {
    pub fn rotate(self, (x, y): (i64, i64)) -> (i64, i64) {
        match self {
            Theta::Zero => (x, y),
            Theta::HalfPi => (y, -x),
            Theta::Pi => (-x, -y),
            Theta::ThreeHalfPi => (-y, x),
        }
    }

    pub fn unrotate(self, (x, y): (i64, i64)) -> (i64, i64) {
        match self {
            Theta::Zero => (x, y),
            Theta::HalfPi => (-y, x),
            Theta::Pi => (-x, -y),
            Theta::ThreeHalfPi => (y, -x),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidedOrdering {
    /// Index of the point `p` the ordering is anchored at.
    pub anchor: usize,
    pub theta: Theta,
    pub order: Vec<usize>,
    /// How many leading entries come from the block at or above `p`.
    pub top: usize,
}

/// After rotating, points with `y >= p.y` by decreasing `y`, then the rest
/// by increasing `x`.
pub fn sided_ordering(s: &LatticePointSet, anchor: usize, theta: Theta) -> SidedOrdering {
    let rot: Vec<(i64, i64)> = s.points.iter().map(|p| theta.rotate((p.x, p.y))).collect();
    let py = rot[anchor].1;
    let (mut upper, mut lower): (Vec<usize>, Vec<usize>) = (0..s.len()).partition(|&i| rot[i].1 >= py);
    upper.sort_by_key(|&i| std::cmp::Reverse(rot[i].1));
    lower.sort_by_key(|&i| rot[i].0);
    let top = upper.len();
    upper.extend(lower);
    SidedOrdering { anchor, theta, order: upper, top }
}

fn sorted_by<F: Fn(usize) -> i64>(s: &LatticePointSet, key: F) -> Vec<usize> {
    let mut v: Vec<usize> = (0..s.len()).collect();
    v.sort_by_key(|&i| key(i));
    v
}

/// `(anchor, theta)` pairs from bottom-to-top to top-to-bottom:
/// by `pi` anchored at each point from the top down, then by `3pi/2` at
/// each point from the left, then the plain top-to-bottom order.
pub fn transformation_sequence(s: &LatticePointSet) -> Vec<(usize, Theta)> {
    let by_y = sorted_by(s, |i| s.points[i].y);
    let by_x = sorted_by(s, |i| s.points[i].x);
    let mut seq: Vec<(usize, Theta)> = by_y.iter().rev().map(|&i| (i, Theta::Pi)).collect();
    seq.extend(by_x.iter().map(|&i| (i, Theta::ThreeHalfPi)));
    if let Some(&low) = by_y.first() {
        seq.push((low, Theta::Zero));
    }
    seq
}

/// A single element moved from position `from` to position `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockMove {
    pub from: usize,
    pub to: usize,
}

/// `Ok(None)` for identical orders, the move if exactly one element was
/// relocated, an error otherwise.
pub fn block_move(a: &[usize], b: &[usize]) -> Result<Option<BlockMove>> {
    if a.len() != b.len() {
        return Err(Error::internal("orderings of different lengths"));
    }
    let Some(i) = (0..a.len()).find(|&i| a[i] != b[i]) else {
        return Ok(None);
    };
    let j = (0..a.len()).rev().find(|&j| a[j] != b[j]).expect("a difference exists");
    if b[i] == a[j] && b[i + 1..=j] == a[i..j] {
        return Ok(Some(BlockMove { from: j, to: i }));
    }
    if b[j] == a[i] && b[i..j] == a[i + 1..=j] {
        return Ok(Some(BlockMove { from: i, to: j }));
    }
    Err(Error::internal(format!("consecutive orderings differ by more than one move between positions {i} and {j}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Color;
    use crate::lattice::points::LatticeColoredPoint;
    use proptest::prelude::*;

    fn from_perm(ys: &[i64]) -> LatticePointSet {
        LatticePointSet::new(ys.iter().enumerate().map(|(x, &y)| LatticeColoredPoint::new(x as i64, y, Color::RGB[x % 3])).collect())
    }

    #[test]
    fn rotations_invert() {
        for t in [Theta::Zero, Theta::HalfPi, Theta::Pi, Theta::ThreeHalfPi] {
            assert_eq!(t.unrotate(t.rotate((3, -7))), (3, -7));
        }
        assert_eq!(Theta::HalfPi.rotate((1, 0)), (0, -1));
    }

    #[test]
    fn small_example() {
        let s = from_perm(&[2, 0, 3, 1]);
        let o = sided_ordering(&s, 3, Theta::Zero);
        assert_eq!(o.order, vec![2, 0, 3, 1]);
        assert_eq!(o.top, 3);
        let o = sided_ordering(&s, 0, Theta::Zero);
        assert_eq!(o.order, vec![2, 0, 1, 3]);
    }

    #[test]
    fn move_detection() {
        assert_eq!(block_move(&[0, 1, 2, 3], &[0, 1, 2, 3]).unwrap(), None);
        assert_eq!(block_move(&[0, 1, 2, 3], &[0, 3, 1, 2]).unwrap(), Some(BlockMove { from: 3, to: 1 }));
        assert_eq!(block_move(&[0, 1, 2, 3], &[1, 2, 0, 3]).unwrap(), Some(BlockMove { from: 0, to: 2 }));
        assert!(block_move(&[0, 1, 2, 3], &[1, 0, 3, 2]).is_err());
    }

    proptest! {
        #[test]
        fn sequence_ends_and_steps(perm in Just((0..12i64).collect::<Vec<_>>()).prop_shuffle()) {
            let s = from_perm(&perm);
            let seq = transformation_sequence(&s);
            prop_assert_eq!(seq.len(), 2 * s.len() + 1);
            let orders: Vec<Vec<usize>> = seq.iter().map(|&(a, t)| sided_ordering(&s, a, t).order).collect();
            let mut bottom_up: Vec<usize> = (0..s.len()).collect();
            bottom_up.sort_by_key(|&i| s.points[i].y);
            prop_assert_eq!(&orders[0], &bottom_up);
            bottom_up.reverse();
            prop_assert_eq!(orders.last().unwrap(), &bottom_up);
            for w in orders.windows(2) {
                prop_assert!(block_move(&w[0], &w[1]).is_ok());
            }
        }
    }
}
