//! All unions of at most two arcs that hold `k` points of each color.

use crate::error::{Error, Result};
use crate::geom::rat::frac;
use crate::geom::{midpoint, ArcSet, CirclePoint, Color, Rat};
use num_traits::One;

pub const MAX_ARC_POINTS: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcCandidate {
    /// Bit `i` set when input point `i` is covered.
    pub mask: u64,
    pub components: usize,
    pub arcs: ArcSet,
}

/// Covered-point mask of an arc set, by direct parameter tests.
pub fn arcset_mask(a: &ArcSet, points: &[CirclePoint]) -> u64 {
    let mut mask = 0;
    for (i, p) in points.iter().enumerate() {
        let inside = a.arcs().iter().any(|(lo, hi)| {
            let t = if &p.t < lo { &p.t + Rat::one() } else { p.t.clone() };
            &t >= lo && &t < hi
        });
        if inside {
            mask |= 1 << i;
        }
    }
    mask
}

/// Enumerate cut positions at the gaps between circularly consecutive
/// points: no cut, two cuts (one arc or its complement) and four cuts (two
/// arcs in either alternation).
pub fn enumerate_2arc_sets(points: &[CirclePoint], k: usize) -> Result<Vec<ArcCandidate>> {
    let m = points.len();
    if m > MAX_ARC_POINTS {
        return Err(Error::Precondition(format!("arc oracle limited to {MAX_ARC_POINTS} points")));
    }
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by(|&a, &b| points[a].t.cmp(&points[b].t));
    let gaps: Vec<Rat> = (0..m)
        .map(|i| {
            let a = &points[idx[i]].t;
            if i + 1 < m {
                midpoint(a, &points[idx[i + 1]].t)
            } else {
                frac(&midpoint(a, &(&points[idx[0]].t + Rat::one())))
            }
        })
        .collect();
    // Sorted position ranges (i, j] become bitmasks over input indices.
    let run = |from: usize, to: usize| -> u64 {
        let mut mask = 0;
        let mut s = (from + 1) % m;
        loop {
            mask |= 1u64 << idx[s];
            if s == to {
                break;
            }
            s = (s + 1) % m;
        }
        mask
    };
    let arc = |i: usize, j: usize| -> (Rat, Rat) {
        let (lo, hi) = (gaps[i].clone(), gaps[j].clone());
        if lo < hi {
            (lo, hi)
        } else {
            (lo, hi + Rat::one())
        }
    };
    let class = |c: Color| points.iter().enumerate().filter(|(_, p)| p.color == c).fold(0u64, |acc, (i, _)| acc | 1 << i);
    let classes = [class(Color::Red), class(Color::Green), class(Color::Blue)];
    let balanced = |mask: u64| classes.iter().all(|c| (mask & c).count_ones() as usize == k);
    let mut out = Vec::new();
    let mut push = |mask: u64, components: usize, arcs: &dyn Fn() -> Vec<(Rat, Rat)>| {
        if balanced(mask) {
            out.push(ArcCandidate { mask, components, arcs: ArcSet::from_arcs(arcs()) });
        }
    };
    push(0, 0, &Vec::new);
    if m > 0 {
        push((1u64 << m) - 1, 1, &|| vec![(Rat::from_integer(0.into()), Rat::one())]);
    }
    let runs: Vec<Vec<u64>> = (0..m).map(|i| (0..m).map(|j| if i == j { 0 } else { run(i, j) }).collect()).collect();
    for i in 0..m {
        for j in i + 1..m {
            push(runs[i][j], 1, &|| vec![arc(i, j)]);
            push(runs[j][i], 1, &|| vec![arc(j, i)]);
            for l in j + 1..m {
                for q in l + 1..m {
                    push(runs[i][j] | runs[l][q], 2, &|| vec![arc(i, j), arc(l, q)]);
                    push(runs[j][l] | runs[q][i], 2, &|| vec![arc(j, l), arc(q, i)]);
                }
            }
        }
    }
    Ok(out)
}
