//! The sliding-window curve of a slope ordering.

use super::ordering::SlopeOrdering;
use crate::error::{Error, Result};
use crate::geom::{strictly_inside, Color, ColorCounts, LatticePoint, LatticePolygon};
use serde::{Deserialize, Serialize};

/// Vertex `k` is `(b - n, g - n)` for the cyclic window of `3n` points
/// starting at position `k`. Window `k + 3n` is the complement of window `k`,
/// so the closed vertex cycle is already centrally symmetric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeCurve {
    pub n: usize,
    pub vertices: Vec<LatticePoint>,
    /// Window starts whose vertex is the origin.
    pub zeros: Vec<usize>,
}

pub(crate) fn contribution(c: Color) -> LatticePoint {
    match c {
        Color::Blue => (1, 0),
        Color::Green => (0, 1),
        _ => (0, 0),
    }
}

/// The seven possible steps between consecutive vertices.
pub const WEDGE_STEPS: [LatticePoint; 7] = [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];

pub(crate) fn balanced_half(colors: &[Color]) -> Result<usize> {
    let counts = ColorCounts::tally(colors.iter().copied());
    match counts.balanced() {
        Some(m) if m % 2 == 0 && m > 0 && counts.total() == colors.len() => Ok(m / 2),
        _ => Err(Error::Precondition(format!("need 6n points with 2n of each color, got {counts}"))),
    }
}

pub fn curve_from_colors(colors: &[Color]) -> Result<WedgeCurve> {
    let n = balanced_half(colors)?;
    let len = colors.len();
    let w = 3 * n;
    let mut vertices = Vec::with_capacity(len);
    let mut cur = (0i64, 0i64);
    for c in &colors[..w] {
        let d = contribution(*c);
        cur = (cur.0 + d.0, cur.1 + d.1);
    }
    for k in 0..len {
        vertices.push((cur.0 - n as i64, cur.1 - n as i64));
        let (out, inn) = (contribution(colors[k]), contribution(colors[(k + w) % len]));
        cur = (cur.0 - out.0 + inn.0, cur.1 - out.1 + inn.1);
    }
    let zeros = (0..len).filter(|&k| vertices[k] == (0, 0)).collect();
    Ok(WedgeCurve { n, vertices, zeros })
}

pub fn wedge_curve(sigma: &SlopeOrdering) -> Result<WedgeCurve> {
    curve_from_colors(&sigma.colors)
}

impl WedgeCurve {
    pub fn polygon(&self) -> LatticePolygon {
        LatticePolygon::new(self.vertices.clone())
    }

    pub fn is_centrally_symmetric(&self) -> bool {
        self.polygon().is_centrally_symmetric()
    }

    pub fn steps_are_allowed(&self) -> bool {
        self.polygon().edges().all(|(a, b)| WEDGE_STEPS.contains(&(b.0 - a.0, b.1 - a.1)))
    }

    /// Winding number around the origin, `None` if a vertex sits on it.
    pub fn winding(&self) -> Option<i64> {
        self.polygon().winding_around((0, 0)).ok()
    }
}

/// True if some lattice point lies strictly inside the closed quadrilateral `quad`.
pub fn quad_has_interior_lattice_point(quad: [LatticePoint; 4]) -> bool {
    let poly = LatticePolygon::new(quad.to_vec());
    let (x0, x1) = (quad.iter().map(|p| p.0).min().unwrap(), quad.iter().map(|p| p.0).max().unwrap());
    let (y0, y1) = (quad.iter().map(|p| p.1).min().unwrap(), quad.iter().map(|p| p.1).max().unwrap());
    (x0..=x1).any(|x| (y0..=y1).any(|y| strictly_inside(&poly, (x, y))))
}
