//! Wedges from segments and segments from wedges, through point-line duality.

use super::double_wedge::DoubleWedge;
use super::sweep::sweep_balanced_wedge;
use crate::cell::{build_arrangement, check_simple, complete_face_in, extract_111_segment};
use crate::error::{Error, Result};
use crate::geom::affine::candidate_parameters;
use crate::geom::{
    check_general_position, dual_colored_lines, int, dual_colored_points, dual_point_to_line, Affine, Color, ColorCounts,
    ColoredLine, ColoredPoint, GeneralPosition, Point, Segment,
};
use std::collections::HashSet;

fn require_colors(colors: impl Iterator<Item = Color> + Clone) -> Result<()> {
    if colors.clone().any(|c| c == Color::Black) {
        return Err(Error::Precondition("only red, green and blue are allowed".into()));
    }
    for c in Color::RGB {
        if !colors.clone().any(|d| d == c) {
            return Err(Error::MissingColor(c));
        }
    }
    Ok(())
}

fn distinct_x(points: &[ColoredPoint]) -> bool {
    let xs: HashSet<_> = points.iter().map(|p| &p.pos.x).collect();
    xs.len() == points.len()
}

fn transformed_points(t: &Affine, points: &[ColoredPoint]) -> Vec<ColoredPoint> {
    points.iter().map(|p| ColoredPoint::new(t.apply(&p.pos), p.color)).collect()
}

/// A double wedge holding exactly one point of each color.
///
/// The points are sheared first if two of them share an x-coordinate, since
/// their dual lines would be parallel.
pub fn find_111_wedge(points: &[ColoredPoint]) -> Result<DoubleWedge> {
    require_colors(points.iter().map(|p| p.color))?;
    let pos: Vec<Point> = points.iter().map(|p| p.pos.clone()).collect();
    if !check_general_position(&pos, GeneralPosition::NoThreeCollinear) {
        return Err(Error::Precondition("three points are collinear".into()));
    }
    let t = std::iter::once(Affine::identity())
        .chain(candidate_parameters().map(Affine::shear_x))
        .find(|t| distinct_x(&transformed_points(t, points)))
        .expect("some shear separates the x-coordinates");
    let tp = transformed_points(&t, points);
    let lines = dual_colored_points(&tp);
    let arr = build_arrangement(&lines)?;
    let face = complete_face_in(&arr)?;
    let seg = extract_111_segment(&arr, &face)?;
    let crossed = seg.crossed_lines(&lines)?;
    let witness = &tp[crossed[0]].pos;
    let mut wedge = DoubleWedge::containing(dual_point_to_line(&seg.p), dual_point_to_line(&seg.q), witness)?;
    if !t.is_identity() {
        wedge = wedge.mapped(&t.inverse(), witness)?;
    }
    let counts = wedge.counts(points).map_err(|_| Error::internal("an input point lies on the wedge boundary"))?;
    if counts != ColorCounts::uniform(1) {
        return Err(Error::internal(format!("wedge holds {counts} instead of (1,1,1)")));
    }
    Ok(wedge)
}

fn halving_ready(lines: &[ColoredLine]) -> bool {
    if lines.iter().any(|l| l.line.is_vertical()) {
        return false;
    }
    match dual_colored_lines(lines) {
        Ok(pts) => {
            let ys: HashSet<_> = pts.iter().map(|p| &p.pos.y).collect();
            ys.len() == pts.len()
        }
        Err(_) => false,
    }
}

fn transformed_lines(t: &Affine, lines: &[ColoredLine]) -> Vec<ColoredLine> {
    lines.iter().map(|l| ColoredLine::new(t.apply_line(&l.line), l.color)).collect()
}

/// A segment crossing exactly `n` lines of each color among `6n` lines.
///
/// The plane is sheared and shifted first when a line is vertical or two
/// lines would have dual points at equal height.
pub fn halving_segment(lines: &[ColoredLine]) -> Result<Segment> {
    check_simple(lines)?;
    let t = std::iter::once(Affine::identity())
        .chain(candidate_parameters().flat_map(|s| {
            let shift = Affine::translation(s.clone(), int(0));
            [shift.clone(), shift.compose(&Affine::shear_x(s))]
        }))
        .find(|t| halving_ready(&transformed_lines(t, lines)))
        .expect("some affine map removes vertical lines and height ties");
    let tl = transformed_lines(&t, lines);
    let points = dual_colored_lines(&tl)?;
    let bw = sweep_balanced_wedge(&points)?;
    let seg = bw
        .straight_wedge()?
        .dual_segment()
        .ok_or_else(|| Error::internal("straight window has no dual segment"))?;
    let inv = t.inverse();
    let seg = Segment::new(inv.apply(&seg.p), inv.apply(&seg.q));
    let counts = seg.crossing_counts(lines).map_err(|_| Error::internal("segment endpoint lies on an input line"))?;
    if counts != ColorCounts::uniform(bw.n) {
        return Err(Error::internal(format!("segment crosses {counts} lines")));
    }
    Ok(seg)
}
