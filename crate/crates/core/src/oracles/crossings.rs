//! Segment and line crossings.

use crate::error::{Error, Result};
use crate::geom::{ColorCounts, ColoredLine, Rat, Segment};
use num_traits::Zero;

/// Per-color count of lines the segment crosses properly.
pub fn count_segment_crossings(seg: &Segment, lines: &[ColoredLine]) -> Result<ColorCounts> {
    let mut counts = ColorCounts::default();
    for (i, l) in lines.iter().enumerate() {
        let at = |x: &Rat, y: &Rat| &l.line.a * x + &l.line.b * y + &l.line.c;
        let prod = at(&seg.p.x, &seg.p.y) * at(&seg.q.x, &seg.q.y);
        if prod.is_zero() {
            return Err(Error::EndpointOnLine(i));
        }
        if prod < Rat::zero() {
            counts.add(l.color);
        }
    }
    Ok(counts)
}
