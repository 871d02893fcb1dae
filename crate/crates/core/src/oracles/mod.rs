//! Exhaustive checkers used as ground truth by the tests and `verify`.

pub mod arcs;
pub mod crossings;
pub mod faces;
pub mod llines;
pub mod report;
pub mod wedges;

pub use arcs::{arcset_mask, enumerate_2arc_sets, ArcCandidate};
pub use crossings::count_segment_crossings;
pub use faces::{scan_all_complete_faces, scan_four_colored_faces};
pub use llines::{brute_oracle_llines, snap_lline};
pub use report::VerificationReport;
pub use wedges::{brute_oracle_wedges, halfplane_subsets, mask_of};
