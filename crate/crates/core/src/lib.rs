//! Constructive balanced bipartitions of 3-colored geometric sets.
//!
//! Everything is computed with exact rational or integer arithmetic:
//!
//! * [`cell`]: complete faces in colored line arrangements and `(1,1,1)` segments,
//! * [`wedge`]: balanced double wedges for point sets and halving segments for lines,
//! * [`jordan`]: 2-arc sets on the circle holding exactly `k` points of each color,
//! * [`lattice`]: balanced L-lines for lattice points with a monochromatic
//!   orthogonal convex hull,
//! * [`oracles`]: brute-force verifiers used as ground truth,
//! * [`gen`]: seeded instance generators and fixtures,
//! * [`solver`]: every solver behind one trait, registered by name.

pub mod cell;
pub mod error;
pub mod gen;
pub mod geom;
pub mod io;
pub mod jordan;
pub mod lattice;
pub mod oracles;
pub mod solver;
pub mod svg;
pub mod wedge;

pub use error::{Error, Result};
