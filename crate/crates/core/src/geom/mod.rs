//! Exact arithmetic substrate: rationals, points, lines, orientation,
//! duality, circular arc sets and lattice winding numbers.

pub mod affine;
pub mod arcset;
pub mod color;
pub mod duality;
pub mod line;
pub mod point;
pub mod rat;
pub mod segment;
pub mod winding;

pub use affine::Affine;
pub use arcset::{rotate_parameters, ArcSet, CirclePoint};
pub use color::{Color, ColorCounts};
pub use duality::{dual_colored_lines, dual_colored_points, dual_line_to_point, dual_point_to_line};
pub use line::{ColoredLine, Line};
pub use point::{check_general_position, orient, ColoredPoint, GeneralPosition, Point};
pub use rat::{half, int, midpoint, rat, Rat};
pub use segment::Segment;
pub use winding::{strictly_inside, winding_number, LatticePoint, LatticePolygon};
