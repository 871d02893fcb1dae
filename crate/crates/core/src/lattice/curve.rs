//! Prefix-count curves of sided orderings.

use super::ordering::BlockMove;
use super::points::LatticePointSet;
use crate::error::{Error, Result};
use crate::geom::{strictly_inside, Color, LatticePoint, LatticePolygon};
use serde::{Deserialize, Serialize};

/// Which input color plays each part. The hull color is always `red`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorRoles {
    pub red: Color,
    pub blue: Color,
    pub green: Color,
}

impl ColorRoles {
    pub fn with_red(red: Color) -> ColorRoles {
        let mut rest = Color::RGB.into_iter().filter(|&c| c != red);
        let blue = rest.next().expect("two colors remain");
        let green = rest.next().expect("two colors remain");
        ColorRoles { red, blue, green }
    }

    pub fn step(&self, c: Color) -> LatticePoint {
        if c == self.blue {
            (2, -1)
        } else if c == self.green {
            (-1, 2)
        } else {
            (-1, -1)
        }
    }
}

pub const LATTICE_STEPS: [LatticePoint; 3] = [(-1, -1), (2, -1), (-1, 2)];

/// `prefix[L] = (3b - L, 3g - L)` over the first `L` points, for `L` in `0..=3n`.
/// The curve itself uses `L` in `1..3n` followed by the negations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeCurve {
    pub n: usize,
    pub prefix: Vec<LatticePoint>,
    /// Prefix lengths whose vertex is the origin.
    pub zeros: Vec<usize>,
}

impl LatticeCurve {
    pub fn from_prefix(prefix: Vec<LatticePoint>) -> LatticeCurve {
        let len = prefix.len() - 1;
        let zeros = (1..len).filter(|&l| prefix[l] == (0, 0)).collect();
        LatticeCurve { n: len / 3, prefix, zeros }
    }

    /// `q_1 .. q_{3n-1}`.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.prefix[1..self.prefix.len() - 1]
    }

    pub fn polygon(&self) -> LatticePolygon {
        let v = self.vertices();
        let mut all = v.to_vec();
        all.extend(v.iter().map(|&(x, y)| (-x, -y)));
        LatticePolygon::new(all)
    }

    pub fn steps_are_allowed(&self) -> bool {
        self.prefix.windows(2).all(|w| LATTICE_STEPS.contains(&(w[1].0 - w[0].0, w[1].1 - w[0].1)))
    }

    /// Endpoint and symmetry conditions that follow from a red hull.
    pub fn check_shape(&self) -> Result<()> {
        let v = self.vertices();
        if v.first() != Some(&(-1, -1)) || v.last() != Some(&(1, 1)) {
            return Err(Error::internal(format!("curve endpoints {:?} .. {:?} are not (-1,-1) .. (1,1)", v.first(), v.last())));
        }
        if !self.steps_are_allowed() {
            return Err(Error::internal("curve has a step outside the three color vectors"));
        }
        if self.prefix[self.prefix.len() - 1] != (0, 0) {
            return Err(Error::internal("full prefix is not the origin"));
        }
        if !self.polygon().is_centrally_symmetric() {
            return Err(Error::internal("curve is not centrally symmetric"));
        }
        Ok(())
    }

    pub fn winding(&self) -> Result<i64> {
        self.polygon().winding_around((0, 0))
    }
}

pub fn lattice_curve(s: &LatticePointSet, order: &[usize], roles: &ColorRoles) -> LatticeCurve {
    let mut prefix = Vec::with_capacity(order.len() + 1);
    let mut cur = (0, 0);
    prefix.push(cur);
    for &i in order {
        let (dx, dy) = roles.step(s.points[i].color);
        cur = (cur.0 + dx, cur.1 + dy);
        prefix.push(cur);
    }
    LatticeCurve::from_prefix(prefix)
}

/// The prefix vector after moving one element, derived from the old one.
pub fn moved_prefix(old: &[LatticePoint], mv: BlockMove, c: LatticePoint) -> Vec<LatticePoint> {
    let mut out = old.to_vec();
    if mv.from > mv.to {
        for l in mv.to + 1..=mv.from {
            out[l] = (old[l - 1].0 + c.0, old[l - 1].1 + c.1);
        }
    } else {
        for l in mv.from + 1..=mv.to {
            out[l] = (old[l + 1].0 - c.0, old[l + 1].1 - c.1);
        }
    }
    out
}

/// Parallelograms swept when one element moves. `base` is the prefix vector
/// of the ordering in which the element sits later, and `mv.from > mv.to`.
pub fn swept_parallelograms(base: &[LatticePoint], mv: BlockMove, c: LatticePoint) -> Vec<[LatticePoint; 4]> {
    let last = base.len() - 2;
    (mv.to + 1..=mv.from)
        .filter(|&i| i >= 2 && i <= last)
        .map(|i| {
            let (a, b) = (base[i - 1], base[i]);
            [a, b, (b.0 + c.0, b.1 + c.1), (a.0 + c.0, a.1 + c.1)]
        })
        .collect()
}

pub fn interior_lattice_points(quad: &[LatticePoint; 4]) -> Vec<LatticePoint> {
    let poly = LatticePolygon::new(quad.to_vec());
    let (x0, x1) = (quad.iter().map(|p| p.0).min().unwrap(), quad.iter().map(|p| p.0).max().unwrap());
    let (y0, y1) = (quad.iter().map(|p| p.1).min().unwrap(), quad.iter().map(|p| p.1).max().unwrap());
    let mut out = Vec::new();
    for x in x0..=x1 {
        for y in y0..=y1 {
            if strictly_inside(&poly, (x, y)) {
                out.push((x, y));
            }
        }
    }
    out
}

/// The origin is not swept, and every lattice point that is has
/// coordinates that disagree mod 3.
pub fn check_sweep(base: &[LatticePoint], mv: BlockMove, c: LatticePoint) -> Result<()> {
    for quad in swept_parallelograms(base, mv, c) {
        for p in interior_lattice_points(&quad) {
            if (p.0 - p.1).rem_euclid(3) == 0 {
                return Err(Error::internal(format!("swept parallelogram {quad:?} contains {p:?} with equal residues")));
            }
        }
    }
    Ok(())
}
