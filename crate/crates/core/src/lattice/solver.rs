//! Walk the transformation sequence until some prefix is balanced.

use super::curve::{check_sweep, lattice_curve, moved_prefix, ColorRoles, LatticeCurve};
use super::lline::{balanced_split, LLine, Ray};
use super::ordering::{block_move, sided_ordering, transformation_sequence, BlockMove, SidedOrdering};
use super::points::{hull_color, LatticePointSet};
use crate::error::{Error, Result};
use crate::geom::{rat, Rat};
use serde::{Deserialize, Serialize};
use serde_json::json;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LLineSolution {
    pub lline: LLine,
    /// Points of each color in region 1.
    pub k: usize,
    pub ordering: SidedOrdering,
    pub prefix_len: usize,
}

/// One ordering of the sequence, its curve, and how it was reached.
#[derive(Debug, Clone)]
pub struct SequenceStep {
    pub ordering: SidedOrdering,
    pub curve: LatticeCurve,
    pub moved: Option<BlockMove>,
}

fn half_point(doubled: (i64, i64)) -> (Rat, Rat) {
    (rat(doubled.0, 2), rat(doubled.1, 2))
}

fn unrotate_ray(o: &SidedOrdering, r: Ray) -> Ray {
    Ray::from_direction(o.theta.unrotate(r.direction())).expect("rotations map axis directions to axis directions")
}

/// An L-line with the first `len` points of the ordering on one side.
pub fn prefix_lline(s: &LatticePointSet, o: &SidedOrdering, len: usize) -> LLine {
    let rot = |i: usize| o.theta.rotate((s.points[i].x, s.points[i].y));
    let last = rot(o.order[len - 1]);
    let (corner, a, b) = if len <= o.top {
        ((2 * last.0 + 1, 2 * last.1 - 1), Ray::Left, Ray::Right)
    } else {
        let py = rot(o.anchor).1;
        ((2 * last.0 + 1, 2 * py - 1), Ray::Right, Ray::Down)
    };
    let corner = half_point(o.theta.unrotate(corner));
    LLine::new(corner, unrotate_ray(o, a), unrotate_ray(o, b)).expect("distinct rays stay distinct")
}

/// Validated `n` and the roles induced by the hull color.
pub fn lline_preconditions(s: &LatticePointSet) -> Result<(usize, ColorRoles)> {
    let n = s.validate()?;
    if n < 2 {
        return Err(Error::Precondition("need at least two points of each color".into()));
    }
    let red = hull_color(s).ok_or_else(|| Error::Precondition("orthogonal convex hull is not monochromatic".into()))?;
    Ok((n, ColorRoles::with_red(red)))
}

/// Every ordering of the sequence with its curve, checking each curve's
/// shape, that consecutive orderings differ by one move, that the moved
/// prefix vector matches a fresh recount, and that the swept region misses
/// the origin.
pub fn walk_sequence(s: &LatticePointSet, roles: &ColorRoles) -> Result<Vec<SequenceStep>> {
    let mut steps: Vec<SequenceStep> = Vec::new();
    for (idx, (anchor, theta)) in transformation_sequence(s).into_iter().enumerate() {
        let ordering = sided_ordering(s, anchor, theta);
        let curve = lattice_curve(s, &ordering.order, roles);
        let trace = || json!({ "step": idx, "anchor": anchor, "theta": theta, "order": ordering.order });
        let fail = |e: Error| match e {
            Error::Internal { message, .. } => Error::Internal { message, trace: Some(trace()) },
            other => other,
        };
        curve.check_shape().map_err(fail)?;
        let mut moved = None;
        if let Some(prev) = steps.last() {
            moved = block_move(&prev.ordering.order, &ordering.order).map_err(fail)?;
            if let Some(mv) = moved {
                let c = roles.step(s.points[ordering.order[mv.to]].color);
                if moved_prefix(&prev.curve.prefix, mv, c) != curve.prefix {
                    return Err(fail(Error::internal("moved prefix vector disagrees with a fresh recount")));
                }
                let res = if mv.from > mv.to {
                    check_sweep(&prev.curve.prefix, mv, c)
                } else {
                    check_sweep(&curve.prefix, BlockMove { from: mv.to, to: mv.from }, c)
                };
                res.map_err(fail)?;
            } else if prev.curve != curve {
                return Err(fail(Error::internal("equal orderings with different curves")));
            }
        }
        steps.push(SequenceStep { ordering, curve, moved });
    }
    Ok(steps)
}

pub fn find_balanced_lline(s: &LatticePointSet) -> Result<LLineSolution> {
    let (n, roles) = lline_preconditions(s)?;
    let steps = walk_sequence(s, &roles)?;
    for step in &steps {
        if let Some(&len) = step.curve.zeros.first() {
            let lline = prefix_lline(s, &step.ordering, len);
            let k = balanced_split(&lline, s, n).ok_or_else(|| Error::Internal {
                message: "L-line built from a balanced prefix does not split evenly".into(),
                trace: Some(json!({ "ordering": step.ordering, "prefix_len": len, "lline": lline })),
            })?;
            return Ok(LLineSolution { lline, k, ordering: step.ordering.clone(), prefix_len: len });
        }
    }
    let first = steps.first().map(|s| s.curve.winding().ok());
    let last = steps.last().map(|s| s.curve.winding().ok());
    Err(Error::Internal {
        message: "no ordering in the sequence has a balanced prefix".into(),
        trace: Some(json!({ "orderings": steps.len(), "first_winding": first, "last_winding": last })),
    })
}
