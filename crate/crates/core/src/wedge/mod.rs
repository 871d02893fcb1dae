//! Balanced double wedges of colored points and balanced segments in line arrangements.

pub mod curve;
pub mod double_wedge;
pub mod dual;
pub mod ordering;
pub mod sweep;

pub use curve::{curve_from_colors, wedge_curve, WedgeCurve};
pub use double_wedge::{wedge_contains, DoubleWedge, Sector};
pub use dual::{find_111_wedge, halving_segment};
pub use ordering::{ordering_at, SlopeOrdering};
pub use sweep::{sweep_balanced_wedge, window_wedge, BalancedWedge};
