use super::line::ColoredLine;
use super::point::Point;
use super::color::ColorCounts;
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Closed segment between two points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub p: Point,
    pub q: Point,
}

impl Segment {
    pub fn new(p: Point, q: Point) -> Self {
        Segment { p, q }
    }

    /// Indices of the lines the segment properly crosses: both endpoints lie
    /// strictly on opposite sides.
    pub fn crossed_lines(&self, lines: &[ColoredLine]) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for (i, l) in lines.iter().enumerate() {
            let sp = l.line.side(&self.p);
            let sq = l.line.side(&self.q);
            if sp == 0 || sq == 0 {
                return Err(Error::EndpointOnLine(i));
            }
            if sp != sq {
                out.push(i);
            }
        }
        Ok(out)
    }

    pub fn crossing_counts(&self, lines: &[ColoredLine]) -> Result<ColorCounts> {
        Ok(ColorCounts::tally(self.crossed_lines(lines)?.into_iter().map(|i| lines[i].color)))
    }
}
