//! Balanced L-lines for colored lattice points with a one-color orthogonal hull.

pub mod curve;
pub mod lline;
pub mod ordering;
pub mod points;
pub mod solver;

pub use curve::{lattice_curve, ColorRoles, LatticeCurve};
pub use lline::{balanced_split, lline_counts, LLine, Ray, RAY_PAIRS};
pub use ordering::{block_move, sided_ordering, transformation_sequence, BlockMove, SidedOrdering, Theta};
pub use points::{hull_color, ortho_hull, LatticeColoredPoint, LatticePointSet};
pub use solver::{find_balanced_lline, lline_preconditions, prefix_lline, walk_sequence, LLineSolution, SequenceStep};
