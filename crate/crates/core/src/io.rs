//! JSON instance files, tagged by `kind`.

use crate::cell::ColoredTriangulation;
use crate::error::{Error, Result};
use crate::geom::{CirclePoint, ColoredLine, ColoredPoint};
use crate::lattice::{LatticeColoredPoint, LatticePointSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Instance {
    Lines { lines: Vec<ColoredLine> },
    Points { points: Vec<ColoredPoint> },
    Circle { points: Vec<CirclePoint> },
    Lattice { points: Vec<LatticeColoredPoint> },
    Triangulation(ColoredTriangulation),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Lines { .. } => "lines",
            Instance::Points { .. } => "points",
            Instance::Circle { .. } => "circle",
            Instance::Lattice { .. } => "lattice",
            Instance::Triangulation(_) => "triangulation",
        }
    }

    pub fn from_json(s: &str) -> Result<Instance> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances hold plain data")
    }

    fn wrong(&self, want: &str) -> Error {
        Error::Precondition(format!("expected a {want} instance, got {}", self.kind()))
    }

    pub fn lines(&self) -> Result<&[ColoredLine]> {
        match self {
            Instance::Lines { lines } => Ok(lines),
            _ => Err(self.wrong("lines")),
        }
    }

    pub fn points(&self) -> Result<&[ColoredPoint]> {
        match self {
            Instance::Points { points } => Ok(points),
            _ => Err(self.wrong("points")),
        }
    }

    pub fn circle(&self) -> Result<&[CirclePoint]> {
        match self {
            Instance::Circle { points } => Ok(points),
            _ => Err(self.wrong("circle")),
        }
    }

    pub fn lattice(&self) -> Result<LatticePointSet> {
        match self {
            Instance::Lattice { points } => Ok(LatticePointSet::new(points.clone())),
            _ => Err(self.wrong("lattice")),
        }
    }

    pub fn triangulation(&self) -> Result<&ColoredTriangulation> {
        match self {
            Instance::Triangulation(t) => Ok(t),
            _ => Err(self.wrong("triangulation")),
        }
    }
}
