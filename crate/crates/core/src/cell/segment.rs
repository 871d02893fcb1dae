//! A segment crossing exactly one line of each color, cut out of a complete face.

use super::arrangement::{Arrangement, Face};
use super::parity::is_complete;
use crate::error::{Error, Result};
use crate::geom::{int, rat, ColorCounts, Point, Rat, Segment};
use num_traits::{Signed, Zero};

/// Smallest positive parameter at which a ray from `from` along `dir` meets
/// a line not listed in `skip`.
fn nearest_hit(arr: &Arrangement, from: &Point, dir: &(Rat, Rat), skip: &[usize]) -> Option<Rat> {
    arr.lines
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .filter_map(|(_, l)| l.line.hit_parameter(from, dir))
        .filter(|t| t.is_positive())
        .min()
}

fn extension(arr: &Arrangement, from: &Point, dir: &(Rat, Rat), skip: &[usize]) -> Rat {
    nearest_hit(arr, from, dir, skip).map_or_else(|| int(1), |t| t / int(2))
}

/// Joins a bichromatic corner of `f` to a point on an edge of the missing
/// color, then pushes both ends just past the lines they sit on.
///
/// Vertical segments are avoided so the result always has a dual apex.
pub fn extract_111_segment(arr: &Arrangement, f: &Face) -> Result<Segment> {
    if !is_complete(f)? {
        return Err(Error::Precondition(format!("face {} is not complete", f.id)));
    }
    let m = f.lines.len();
    let line_of = |e: usize| f.lines[e % m].expect("bounded face");
    let fractions = [rat(1, 2), rat(1, 3), rat(2, 3), rat(1, 4), rat(3, 4)];
    for i in 0..m {
        let (e_in, e_out) = (line_of(i + m - 1), line_of(i));
        let (c_in, c_out) = (arr.lines[e_in].color, arr.lines[e_out].color);
        if c_in == c_out {
            continue;
        }
        let v = &f.vertices[i];
        for j in 0..m {
            let e = line_of(j);
            let c = arr.lines[e].color;
            if c == c_in || c == c_out {
                continue;
            }
            let (a, b) = (&f.vertices[j], &f.vertices[(j + 1) % m]);
            for t in &fractions {
                let target = a.lerp(b, t);
                let dir = target.sub(v);
                if dir.0.is_zero() {
                    continue;
                }
                let far = target.offset(&dir, &extension(arr, &target, &dir, &[e]));
                let back = (-dir.0.clone(), -dir.1.clone());
                let near = v.offset(&back, &extension(arr, v, &back, &[e_in, e_out]));
                let seg = Segment::new(near, far);
                if seg.crossing_counts(&arr.lines)? != ColorCounts::uniform(1) {
                    return Err(Error::internal("extracted segment does not cross one line of each color"));
                }
                return Ok(seg);
            }
        }
    }
    Err(Error::internal("complete face without a usable corner and opposite edge"))
}
