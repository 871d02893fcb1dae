//! Bichromatic edge counts of colored cycles.

use super::arrangement::Face;
use crate::error::{Error, Result};
use crate::geom::Color;
use serde::{Deserialize, Serialize};

/// Cyclic sequence of red/green/blue labels, one per bounding line of a
/// bounded face.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualCycle {
    colors: Vec<Color>,
}

/// Number of cycle edges of each type.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeTypeCounts {
    pub rr: usize,
    pub gg: usize,
    pub bb: usize,
    pub rg: usize,
    pub rb: usize,
    pub gb: usize,
}

impl EdgeTypeCounts {
    pub fn total(&self) -> usize {
        self.rr + self.gg + self.bb + self.rg + self.rb + self.gb
    }
}

impl DualCycle {
    pub fn new(colors: Vec<Color>) -> Result<Self> {
        if colors.len() < 3 {
            return Err(Error::Precondition(format!("dual cycle of length {}", colors.len())));
        }
        if let Some(c) = colors.iter().find(|c| c.rgb_index().is_none()) {
            return Err(Error::Precondition(format!("dual cycle uses color {c}")));
        }
        Ok(DualCycle { colors })
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn edge_types(&self) -> EdgeTypeCounts {
        use Color::*;
        let mut t = EdgeTypeCounts::default();
        let n = self.colors.len();
        for i in 0..n {
            match (self.colors[i], self.colors[(i + 1) % n]) {
                (Red, Red) => t.rr += 1,
                (Green, Green) => t.gg += 1,
                (Blue, Blue) => t.bb += 1,
                (Red, Green) | (Green, Red) => t.rg += 1,
                (Red, Blue) | (Blue, Red) => t.rb += 1,
                (Green, Blue) | (Blue, Green) => t.gb += 1,
                _ => unreachable!("validated in DualCycle::new"),
            }
        }
        t
    }
}

/// Parities `(n_rg, n_rb, n_gb) mod 2`; always three equal values.
pub fn cycle_parity(c: &DualCycle) -> (u8, u8, u8) {
    let t = c.edge_types();
    ((t.rg % 2) as u8, (t.rb % 2) as u8, (t.gb % 2) as u8)
}

pub fn dual_cycle(f: &Face) -> Result<DualCycle> {
    if !f.bounded {
        return Err(Error::UnboundedFace);
    }
    DualCycle::new(f.colors.iter().map(|c| c.expect("bounded faces have no box edges")).collect())
}

/// A bounded face is complete when all three bichromatic edge counts of its
/// dual cycle are odd.
pub fn is_complete(f: &Face) -> Result<bool> {
    Ok(cycle_parity(&dual_cycle(f)?) == (1, 1, 1))
}
