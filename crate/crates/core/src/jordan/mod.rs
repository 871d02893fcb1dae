//! Balanced arc sets on the circle.

pub mod driver;
pub mod halve;
pub mod plan;

pub use driver::{find_k_arcset, find_k_arcset_observed, halve_step, halve_step_observed, validate_circle_points};
pub use halve::{moment_halve, Cut, CutProfile, Halving};
pub use plan::{bfs_distances, length_bound, plan_ops, Op, OpPlan};
