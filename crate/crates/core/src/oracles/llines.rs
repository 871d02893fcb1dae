//! Every balanced L-line over the grid of gaps between input coordinates.

use crate::error::{Error, Result};
use crate::geom::{rat, Color, Rat};
use crate::lattice::{LLine, LatticePointSet, Ray, RAY_PAIRS};

pub const MAX_LLINE_POINTS: usize = 24;

/// Doubled grid positions: one below the minimum, the midpoints between
/// consecutive distinct values, one above the maximum.
fn doubled_grid(mut v: Vec<i64>) -> Vec<i64> {
    v.sort_unstable();
    v.dedup();
    let mut g = Vec::with_capacity(v.len() + 1);
    if let (Some(&lo), Some(&hi)) = (v.first(), v.last()) {
        g.push(2 * lo - 1);
        g.extend(v.windows(2).map(|w| w[0] + w[1]));
        g.push(2 * hi + 1);
    }
    g
}

/// Region-1 test in doubled coordinates.
fn in_region_one(rays: [Ray; 2], cx: i64, cy: i64, x: i64, y: i64) -> bool {
    let (west, north) = (x < cx, y > cy);
    match rays {
        [Ray::Up, Ray::Down] => west,
        [Ray::Left, Ray::Right] => north,
        [Ray::Up, Ray::Left] => west && north,
        [Ray::Up, Ray::Right] => !west && north,
        [Ray::Down, Ray::Left] => west && !north,
        [Ray::Down, Ray::Right] => !west && !north,
        _ => unreachable!(),
    }
}

fn grid_rat(d: i64) -> Rat {
    rat(d, 2)
}

/// All `(L-line, k)` with `k` points of each color in region 1, `0 < k < n`.
/// Points must have distinct x and distinct y.
pub fn brute_oracle_llines(s: &LatticePointSet) -> Result<Vec<(LLine, usize)>> {
    if s.len() > MAX_LLINE_POINTS {
        return Err(Error::Precondition(format!("L-line oracle limited to {MAX_LLINE_POINTS} points")));
    }
    let n = s.len() / 3;
    let gx = doubled_grid(s.points.iter().map(|p| p.x).collect());
    let gy = doubled_grid(s.points.iter().map(|p| p.y).collect());
    let mut out = Vec::new();
    for &cx in &gx {
        for &cy in &gy {
            for rays in RAY_PAIRS {
                let mut c = [0usize; 3];
                for p in &s.points {
                    if in_region_one(rays, cx, cy, 2 * p.x, 2 * p.y) {
                        match p.color {
                            Color::Red => c[0] += 1,
                            Color::Green => c[1] += 1,
                            Color::Blue => c[2] += 1,
                            Color::Black => {}
                        }
                    }
                }
                let k = c[0];
                if c == [k; 3] && k > 0 && k < n {
                    let l = LLine::new((grid_rat(cx), grid_rat(cy)), rays[0], rays[1]).expect("pairs are distinct");
                    out.push((l, k));
                }
            }
        }
    }
    Ok(out)
}

/// Move the corner onto the oracle grid without changing which points fall
/// on which side.
pub fn snap_lline(l: &LLine, s: &LatticePointSet) -> LLine {
    let snap = |c: &Rat, vals: Vec<i64>| {
        let below = {
            let mut v = vals.clone();
            v.sort_unstable();
            v.dedup();
            v.iter().filter(|&&x| Rat::from_integer(x.into()) < *c).count()
        };
        grid_rat(doubled_grid(vals)[below])
    };
    let cx = snap(&l.corner.0, s.points.iter().map(|p| p.x).collect());
    let cy = snap(&l.corner.1, s.points.iter().map(|p| p.y).collect());
    LLine { corner: (cx, cy), rays: l.rays }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{find_balanced_lline, lline_counts, LatticeColoredPoint};
    use Color::*;

    fn set(v: &[(i64, i64, Color)]) -> LatticePointSet {
        LatticePointSet::new(v.iter().map(|&(x, y, c)| LatticeColoredPoint::new(x, y, c)).collect())
    }

    fn diagonal(n: i64) -> LatticePointSet {
        let cs = [Red, Green, Blue];
        set(&(0..3 * n).map(|i| (i + 1, i + 1, cs[(i / n) as usize])).collect::<Vec<_>>())
    }

    #[test]
    fn grid_size() {
        assert_eq!(doubled_grid(vec![3, 1, 7]), vec![1, 4, 10, 15]);
    }

    #[test]
    fn diagonal_has_none() {
        for n in 1..=5 {
            assert!(brute_oracle_llines(&diagonal(n)).unwrap().is_empty());
        }
    }

    #[test]
    fn oracle_counts_agree_with_lline_counts() {
        let s = set(&[(0, 20, Red), (1, 0, Red), (21, 1, Red), (20, 21, Red), (2, 5, Green), (3, 9, Blue), (4, 2, Green), (5, 14, Blue), (6, 7, Green), (7, 3, Blue), (8, 11, Green), (9, 6, Blue)]);
        let all = brute_oracle_llines(&s).unwrap();
        assert!(!all.is_empty());
        for (l, k) in &all {
            assert_eq!(lline_counts(l, &s).0.balanced(), Some(*k));
        }
        let sol = find_balanced_lline(&s).unwrap();
        let snapped = snap_lline(&sol.lline, &s);
        assert_eq!(lline_counts(&snapped, &s), lline_counts(&sol.lline, &s));
        assert!(all.contains(&(snapped, sol.k)));
    }
}
