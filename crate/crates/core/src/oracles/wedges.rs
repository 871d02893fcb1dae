//! Double-wedge subsets as symmetric differences of halfplane subsets.

use crate::error::{Error, Result};
use crate::geom::{Color, ColoredPoint, Rat};
use num_traits::Zero;
use std::collections::BTreeSet;

pub const MAX_WEDGE_POINTS: usize = 20;

fn turn(a: &ColoredPoint, b: &ColoredPoint, c: &ColoredPoint) -> Rat {
    let (ax, ay) = (&b.pos.x - &a.pos.x, &b.pos.y - &a.pos.y);
    let (bx, by) = (&c.pos.x - &a.pos.x, &c.pos.y - &a.pos.y);
    ax * by - ay * bx
}

/// Every subset cut off by an open halfplane, as bitmasks. Points must have
/// no three on a line.
pub fn halfplane_subsets(points: &[ColoredPoint]) -> Result<Vec<u64>> {
    let m = points.len();
    if m > 63 {
        return Err(Error::Precondition("halfplane oracle limited to 63 points".into()));
    }
    let mut out = BTreeSet::new();
    out.insert(0u64);
    out.insert(if m == 0 { 0 } else { u64::MAX >> (64 - m) });
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let mut left = 0u64;
            for q in 0..m {
                if q == i || q == j {
                    continue;
                }
                let t = turn(&points[i], &points[j], &points[q]);
                if t.is_zero() {
                    return Err(Error::Precondition(format!("points {i}, {j} and {q} are collinear")));
                }
                if t > Rat::zero() {
                    left |= 1 << q;
                }
            }
            for extra in [0, 1 << i, 1 << j, (1 << i) | (1 << j)] {
                out.insert(left | extra);
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn mask_counts(points: &[ColoredPoint], mask: u64) -> [usize; 3] {
    let mut c = [0; 3];
    for (i, p) in points.iter().enumerate() {
        if mask >> i & 1 == 1 {
            match p.color {
                Color::Red => c[0] += 1,
                Color::Green => c[1] += 1,
                Color::Blue => c[2] += 1,
                Color::Black => {}
            }
        }
    }
    c
}

/// Bitmasks of every double-wedge subset holding exactly `k` points per color.
pub fn brute_oracle_wedges(points: &[ColoredPoint], k: usize) -> Result<Vec<u64>> {
    if points.len() > MAX_WEDGE_POINTS {
        return Err(Error::Precondition(format!("wedge oracle limited to {MAX_WEDGE_POINTS} points")));
    }
    let h = halfplane_subsets(points)?;
    let mut out = BTreeSet::new();
    for (a, &x) in h.iter().enumerate() {
        for &y in &h[a..] {
            let w = x ^ y;
            if mask_counts(points, w) == [k; 3] {
                out.insert(w);
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Bitmask of the points a membership vector marks as inside.
pub fn mask_of(inside: &[bool]) -> u64 {
    inside.iter().enumerate().filter(|(_, &b)| b).fold(0, |m, (i, _)| m | 1 << i)
}
