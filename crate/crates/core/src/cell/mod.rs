//! Colored line arrangements and complete faces.

pub mod arrangement;
pub mod finder;
pub mod parity;
pub mod perturb;
pub mod segment;
pub mod shield;
pub mod triangulation;

pub use arrangement::{build_arrangement, check_simple, Arrangement, Face};
pub use finder::{complete_face_in, find_complete_face, track_complete_cell};
pub use parity::{cycle_parity, dual_cycle, is_complete, DualCycle};
pub use perturb::perturb_to_simple;
pub use segment::extract_111_segment;
pub use shield::gen_shielded_counterexample;
pub use triangulation::{parity_audit, ColoredTriangulation, Parity};
