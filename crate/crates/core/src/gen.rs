//! Seeded instance generators and named fixtures.

use crate::cell::{check_simple, gen_shielded_counterexample, perturb_to_simple, ColoredTriangulation};
use crate::error::{Error, Result};
use crate::geom::{dual_colored_points, orient, rat, CirclePoint, Color, ColoredLine, ColoredPoint, Line, Point};
use crate::io::Instance;
use crate::lattice::{hull_color, LatticeColoredPoint, LatticePointSet};
use crate::oracles::halfplane_subsets;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

const RETRY_BUDGET: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenKind {
    /// `n` lines, simple arrangement, every color present.
    #[serde(rename = "simple-lines-3c")]
    SimpleLines3C,
    /// `6n` lines, `2n` per color, duals in general position.
    #[serde(rename = "balanced-lines-3c")]
    BalancedLines3C,
    /// The fixed 9-line shielded arrangement; `n` is ignored.
    #[serde(rename = "simple-lines-4c-shielded")]
    SimpleLines4CShielded,
    /// `n` points, no three collinear, every color present.
    #[serde(rename = "points-3c")]
    Points3C,
    /// `6n` points, `2n` per color, distinct coordinates, no three collinear.
    #[serde(rename = "balanced-points-3c")]
    BalancedPoints3C,
    /// `6n` points on a parabola, `2n` per color.
    #[serde(rename = "points-3c-convex")]
    Points3CConvex,
    /// `3n` points on the circle, `n` per color.
    #[serde(rename = "circle-points-3c")]
    CirclePoints3C,
    /// `3n` lattice points whose orthogonal hull is red; needs `n >= 4`.
    LatticeRedHull,
    /// `3n` lattice points on a rising diagonal in red, green, blue blocks.
    LatticeDiagonalCounterexample,
    /// `3n` points in three tiny one-color clusters at triangle corners.
    ThreeDiskTriangle,
    /// Random colored triangulation of the sphere of dimension `n - 1`.
    ColoredSphere,
}

impl GenKind {
    pub const ALL: [GenKind; 11] = [
        GenKind::SimpleLines3C,
        GenKind::BalancedLines3C,
        GenKind::SimpleLines4CShielded,
        GenKind::Points3C,
        GenKind::BalancedPoints3C,
        GenKind::Points3CConvex,
        GenKind::CirclePoints3C,
        GenKind::LatticeRedHull,
        GenKind::LatticeDiagonalCounterexample,
        GenKind::ThreeDiskTriangle,
        GenKind::ColoredSphere,
    ];
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = serde_json::to_value(self).expect("unit variant");
        f.write_str(v.as_str().expect("unit variants serialize as strings"))
    }
}

impl FromStr for GenKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<GenKind> {
        GenKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown generator kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenSpec { kind, n, seed }
    }
}

fn colors_with_each(count: usize, rng: &mut ChaCha8Rng) -> Vec<Color> {
    let mut c: Vec<Color> = (0..count).map(|i| if i < 3 { Color::RGB[i] } else { Color::RGB[rng.gen_range(0..3)] }).collect();
    c.shuffle(rng);
    c
}

fn balanced_colors(per: usize, rng: &mut ChaCha8Rng) -> Vec<Color> {
    let mut c: Vec<Color> = Color::RGB.iter().flat_map(|&c| std::iter::repeat_n(c, per)).collect();
    c.shuffle(rng);
    c
}

fn need(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

/// Points with no three collinear, optionally with distinct x and y, drawn
/// from `[-r, r]^2` one at a time.
fn general_points(count: usize, distinct_xy: bool, rng: &mut ChaCha8Rng) -> Result<Vec<Point>> {
    let r = 10 * count as i64 + 20;
    let mut pts: Vec<Point> = Vec::with_capacity(count);
    let mut tries = 0;
    while pts.len() < count {
        tries += 1;
        if tries > RETRY_BUDGET * count.max(1) {
            return Err(Error::GenerationFailed("could not place points in general position".into()));
        }
        let p = Point::from_ints(rng.gen_range(-r..=r), rng.gen_range(-r..=r));
        if pts.iter().any(|q| q == &p || (distinct_xy && (q.x == p.x || q.y == p.y))) {
            continue;
        }
        let collinear = (0..pts.len()).any(|i| (i + 1..pts.len()).any(|j| orient(&pts[i], &pts[j], &p) == 0));
        if !collinear {
            pts.push(p);
        }
    }
    Ok(pts)
}

fn simple_lines(count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<ColoredLine>> {
    need(count >= 3, "need at least three lines")?;
    let lines: Vec<ColoredLine> = colors_with_each(count, rng)
        .into_iter()
        .map(|c| {
            let slope = rat(rng.gen_range(-60..=60), rng.gen_range(1..=7));
            let icpt = rat(rng.gen_range(-30..=30), rng.gen_range(1..=5));
            ColoredLine::new(Line::from_slope_intercept(slope, icpt), c)
        })
        .collect();
    perturb_to_simple(&lines)
}

fn lattice_red_hull(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<LatticeColoredPoint>> {
    if n < 4 {
        return Err(Error::GenerationFailed(format!(
            "a red orthogonal hull needs n >= 4: any point off the hull sees four distinct hull points, so with n = {n} no valid set exists"
        )));
    }
    for _ in 0..RETRY_BUDGET {
        let m = 3 * n;
        // Each red sits in one corner region around the central box; the
        // first four cover all four corners.
        let corners: Vec<(bool, bool)> =
            (0..n).map(|i| if i < 4 { (i % 2 == 1, i / 2 == 1) } else { (rng.gen(), rng.gen()) }).collect();
        let coords = |rng: &mut ChaCha8Rng, low: usize, high: usize| -> (Vec<i64>, Vec<i64>, Vec<i64>) {
            let mut pool: Vec<i64> = (0..10 * m as i64).collect();
            pool.shuffle(rng);
            let mut v = pool[..m].to_vec();
            v.sort_unstable();
            let (lo, rest) = v.split_at(low);
            let (mid, hi) = rest.split_at(m - low - high);
            let mut out = (lo.to_vec(), mid.to_vec(), hi.to_vec());
            out.0.shuffle(rng);
            out.1.shuffle(rng);
            out.2.shuffle(rng);
            out
        };
        let east = corners.iter().filter(|c| c.0).count();
        let north = corners.iter().filter(|c| c.1).count();
        let (mut xw, mut xm, mut xe) = coords(rng, n - east, east);
        let (mut ys, mut ym, mut yn) = coords(rng, n - north, north);
        let mut pts = Vec::with_capacity(m);
        for &(e, no) in &corners {
            let x = if e { xe.pop() } else { xw.pop() }.expect("sized by corner counts");
            let y = if no { yn.pop() } else { ys.pop() }.expect("sized by corner counts");
            pts.push(LatticeColoredPoint::new(x, y, Color::Red));
        }
        let mut inner = balanced_colors(n, rng);
        inner.retain(|&c| c != Color::Red);
        for c in inner {
            pts.push(LatticeColoredPoint::new(xm.pop().unwrap(), ym.pop().unwrap(), c));
        }
        pts.shuffle(rng);
        let s = LatticePointSet::new(pts);
        if s.validate().is_ok() && hull_color(&s) == Some(Color::Red) {
            return Ok(s.points);
        }
    }
    Err(Error::GenerationFailed("retry budget exhausted".into()))
}

fn lattice_diagonal(n: usize) -> Vec<LatticeColoredPoint> {
    (0..3 * n).map(|i| LatticeColoredPoint::new(i as i64 + 1, i as i64 + 1, Color::RGB[i / n])).collect()
}

fn three_disks(n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<ColoredPoint>> {
    let centers = [(0, 0), (1000, 0), (500, 866)];
    let r = 3.max(n as i64);
    for _ in 0..RETRY_BUDGET {
        let mut pts: Vec<Point> = Vec::new();
        for &(cx, cy) in &centers {
            let mut placed = 0;
            while placed < n {
                let p = Point::from_ints(cx + rng.gen_range(-r..=r), cy + rng.gen_range(-r..=r));
                if !pts.contains(&p) {
                    pts.push(p);
                    placed += 1;
                }
            }
        }
        let colored: Vec<ColoredPoint> = pts.into_iter().enumerate().map(|(i, p)| ColoredPoint::new(p, Color::RGB[i / n])).collect();
        if halfplane_subsets(&colored).is_ok() {
            return Ok(colored);
        }
    }
    Err(Error::GenerationFailed("retry budget exhausted".into()))
}

pub fn generate(spec: &GenSpec) -> Result<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let n = spec.n;
    let positive = || need(n >= 1, "n must be positive");
    Ok(match spec.kind {
        GenKind::SimpleLines3C => Instance::Lines { lines: simple_lines(n, &mut rng)? },
        GenKind::SimpleLines4CShielded => Instance::Lines { lines: gen_shielded_counterexample() },
        GenKind::BalancedLines3C => {
            positive()?;
            let pts = general_points(6 * n, true, &mut rng)?;
            let colors = balanced_colors(2 * n, &mut rng);
            let cp: Vec<ColoredPoint> = pts.into_iter().zip(colors).map(|(p, c)| ColoredPoint::new(p, c)).collect();
            let lines = dual_colored_points(&cp);
            check_simple(&lines).map_err(|e| Error::GenerationFailed(e.to_string()))?;
            Instance::Lines { lines }
        }
        GenKind::Points3C => {
            need(n >= 3, "need at least three points")?;
            let pts = general_points(n, false, &mut rng)?;
            let colors = colors_with_each(n, &mut rng);
            Instance::Points { points: pts.into_iter().zip(colors).map(|(p, c)| ColoredPoint::new(p, c)).collect() }
        }
        GenKind::BalancedPoints3C => {
            positive()?;
            let pts = general_points(6 * n, true, &mut rng)?;
            let colors = balanced_colors(2 * n, &mut rng);
            Instance::Points { points: pts.into_iter().zip(colors).map(|(p, c)| ColoredPoint::new(p, c)).collect() }
        }
        GenKind::Points3CConvex => {
            positive()?;
            let mut xs: Vec<i64> = (1..=60 * n as i64).collect();
            xs.shuffle(&mut rng);
            let colors = balanced_colors(2 * n, &mut rng);
            let points = xs.into_iter().zip(colors).map(|(x, c)| ColoredPoint::from_ints(x, x * x, c)).collect();
            Instance::Points { points }
        }
        GenKind::CirclePoints3C => {
            positive()?;
            let d = (1000).max(30 * n as i64);
            let mut ts: Vec<i64> = (0..d).collect();
            ts.shuffle(&mut rng);
            let colors = balanced_colors(n, &mut rng);
            Instance::Circle { points: colors.into_iter().zip(ts).map(|(c, t)| CirclePoint::new(rat(t, d), c)).collect() }
        }
        GenKind::LatticeRedHull => Instance::Lattice { points: lattice_red_hull(n, &mut rng)? },
        GenKind::LatticeDiagonalCounterexample => {
            positive()?;
            Instance::Lattice { points: lattice_diagonal(n) }
        }
        GenKind::ThreeDiskTriangle => {
            positive()?;
            Instance::Points { points: three_disks(n, &mut rng)? }
        }
        GenKind::ColoredSphere => {
            need(n >= 2, "sphere dimension n - 1 must be at least 1")?;
            let subs = rng.gen_range(0..30);
            let t = ColoredTriangulation::random_sphere(n, subs, &mut rng);
            t.validate().map_err(|e| Error::GenerationFailed(e.to_string()))?;
            Instance::Triangulation(t)
        }
    })
}
