//! Splitting the points of an arc set in half with a plane through the
//! lifted curve `t -> (t, t^2, t^3)`.
//!
//! A plane meets that curve where a cubic vanishes, so the side of each
//! point is fixed by at most three cut parameters. Searching over cut
//! placements between (or on) the points of the arc set therefore covers
//! every halving plane.

use crate::error::{Error, Result};
use crate::geom::{midpoint, ArcSet, CirclePoint, Color, ColorCounts, Rat};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cut {
    /// Between two consecutive points, at this parameter.
    #[serde(with = "crate::geom::rat::rat_str")]
    Gap(Rat),
    /// Through the point with this parameter, which joins neither side.
    #[serde(with = "crate::geom::rat::rat_str")]
    OnPoint(Rat),
}

impl Cut {
    pub fn parameter(&self) -> &Rat {
        match self {
            Cut::Gap(t) | Cut::OnPoint(t) => t,
        }
    }
}

/// Cuts in increasing parameter order; points before the first cut are on side `sign`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutProfile {
    pub cuts: Vec<Cut>,
    pub sign: i8,
}

impl CutProfile {
    /// Sign of `sign * (-1)^c * prod (t - cut)`: positive before the first cut.
    pub fn cubic_side(&self, t: &Rat) -> i8 {
        let mut v = Rat::from_integer(self.sign.into());
        for c in &self.cuts {
            v *= c.parameter() - t;
        }
        if v.is_zero() {
            0
        } else if v > Rat::zero() {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Halving {
    pub profile: CutProfile,
    /// Points on the positive side.
    pub m1: ArcSet,
    /// Points on the negative side.
    pub m2: ArcSet,
}

impl Halving {
    /// `m1` when it has at most two arcs, otherwise `m2`.
    pub fn pick(&self) -> &ArcSet {
        if self.m1.component_count() <= 2 {
            &self.m1
        } else {
            &self.m2
        }
    }

    pub fn total_components(&self) -> usize {
        self.m1.component_count() + self.m2.component_count()
    }
}

/// Prefix counts per color over a sequence of colors.
struct Prefix(Vec<[usize; 3]>);

impl Prefix {
    fn new(colors: &[Color]) -> Self {
        let mut v = vec![[0; 3]];
        for c in colors {
            let mut next = *v.last().unwrap();
            next[c.rgb_index().expect("rgb point")] += 1;
            v.push(next);
        }
        Prefix(v)
    }

    fn range(&self, a: usize, b: usize) -> [usize; 3] {
        let (x, y) = (self.0[a], self.0[b]);
        [y[0] - x[0], y[1] - x[1], y[2] - x[2]]
    }
}

/// Side of each position given cut boundaries: `segments` lists `(start, end)`
/// ranges of positions, alternating in side starting with `sign`.
fn positive_counts(prefix: &Prefix, segments: &[(usize, usize)], sign: i8) -> ([usize; 3], [usize; 3]) {
    let mut pos = [0; 3];
    let mut neg = [0; 3];
    for (i, &(a, b)) in segments.iter().enumerate() {
        let c = prefix.range(a, b);
        let side = if i % 2 == 0 { sign } else { -sign };
        let target = if side > 0 { &mut pos } else { &mut neg };
        for j in 0..3 {
            target[j] += c[j];
        }
    }
    (pos, neg)
}

/// All points whose label is `want`, grouped into arcs over runs of
/// consecutive circle points, each arc reaching halfway to the neighbours.
fn runs_to_arcs(sorted: &[CirclePoint], labels: &[i8], want: i8) -> ArcSet {
    let m = sorted.len();
    let mut arcs = Vec::new();
    // gap i sits between points i-1 and i, unwrapped so that gaps increase
    let gap = |i: usize| {
        if i == 0 {
            midpoint(&(&sorted[m - 1].t - Rat::one()), &sorted[0].t)
        } else if i == m {
            midpoint(&sorted[m - 1].t, &(&sorted[0].t + Rat::one()))
        } else {
            midpoint(&sorted[i - 1].t, &sorted[i].t)
        }
    };
    let mut i = 0;
    while i < m {
        if labels[i] != want {
            i += 1;
            continue;
        }
        let start = i;
        while i < m && labels[i] == want {
            i += 1;
        }
        arcs.push((gap(start), gap(i)));
    }
    ArcSet::from_arcs(arcs)
}

/// Halves the `k` points per color inside `a` with at most three cuts.
///
/// For even `k` every cut falls in a gap; for odd `k` exactly three cuts go
/// through points, one of each color. The parameter `0` must lie outside `a`,
/// or `a` is the whole circle and no point sits at `0`.
pub fn moment_halve(a: &ArcSet, points: &[CirclePoint], k: usize) -> Result<Halving> {
    if a.is_full() {
        if points.iter().any(|p| p.t.is_zero()) {
            return Err(Error::Precondition("a point sits at parameter 0 of the whole circle".into()));
        }
    } else if a.contains(&Rat::zero()) {
        return Err(Error::Precondition("parameter 0 lies inside the arc set".into()));
    }
    let counts = a.color_counts(points)?;
    if counts != ColorCounts::uniform(k) || k == 0 {
        return Err(Error::Precondition(format!("arc set holds {counts}, not ({k},{k},{k})")));
    }
    let mut sorted: Vec<CirclePoint> = points.iter().map(|p| CirclePoint::new(p.t.clone(), p.color)).collect();
    sorted.sort_by(|x, y| x.t.cmp(&y.t));
    let inside: Vec<usize> = (0..sorted.len()).filter(|&i| a.contains(&sorted[i].t)).collect();
    let colors: Vec<Color> = inside.iter().map(|&i| sorted[i].color).collect();
    let m = inside.len();
    let prefix = Prefix::new(&colors);
    let half = k / 2;
    let want = [half; 3];

    let mut found: Option<(Vec<usize>, bool, i8)> = None;
    'search: {
        if k.is_multiple_of(2) {
            // cut positions g mean "between inside[g-1] and inside[g]", 1 <= g < m
            let mut cutsets: Vec<Vec<usize>> = vec![vec![]];
            for g1 in 1..m {
                cutsets.push(vec![g1]);
                for g2 in g1 + 1..m {
                    cutsets.push(vec![g1, g2]);
                    for g3 in g2 + 1..m {
                        cutsets.push(vec![g1, g2, g3]);
                    }
                }
            }
            for cs in cutsets {
                let mut bounds = vec![0];
                bounds.extend(&cs);
                bounds.push(m);
                let segs: Vec<(usize, usize)> = bounds.windows(2).map(|w| (w[0], w[1])).collect();
                for sign in [1i8, -1] {
                    let (p, n) = positive_counts(&prefix, &segs, sign);
                    if p == want && n == want {
                        found = Some((cs, false, sign));
                        break 'search;
                    }
                }
            }
        } else {
            let by_color = |c: Color| -> Vec<usize> { (0..m).filter(|&i| colors[i] == c).collect() };
            let (reds, greens, blues) = (by_color(Color::Red), by_color(Color::Green), by_color(Color::Blue));
            for &r in &reds {
                for &g in &greens {
                    for &b in &blues {
                        let mut cs = vec![r, g, b];
                        cs.sort_unstable();
                        let segs = [(0, cs[0]), (cs[0] + 1, cs[1]), (cs[1] + 1, cs[2]), (cs[2] + 1, m)];
                        for sign in [1i8, -1] {
                            let (p, n) = positive_counts(&prefix, &segs, sign);
                            if p == want && n == want {
                                found = Some((cs, true, sign));
                                break 'search;
                            }
                        }
                    }
                }
            }
        }
    }
    let (cs, on_point, sign) = found.ok_or(Error::NoCutFound)?;

    let cuts: Vec<Cut> = cs
        .iter()
        .map(|&g| {
            if on_point {
                Cut::OnPoint(sorted[inside[g]].t.clone())
            } else {
                Cut::Gap(midpoint(&sorted[inside[g - 1]].t, &sorted[inside[g]].t))
            }
        })
        .collect();
    let profile = CutProfile { cuts, sign };

    let mut labels = vec![0i8; sorted.len()];
    let mut side = sign;
    let mut next_cut = 0;
    for (j, &i) in inside.iter().enumerate() {
        if on_point {
            if next_cut < cs.len() && cs[next_cut] == j {
                next_cut += 1;
                side = -side;
                continue;
            }
        } else {
            while next_cut < cs.len() && cs[next_cut] == j {
                next_cut += 1;
                side = -side;
            }
        }
        labels[i] = side;
    }
    for (j, &i) in inside.iter().enumerate() {
        if profile.cubic_side(&sorted[i].t) != labels[i] {
            return Err(Error::internal(format!("cut profile disagrees with its cubic at inside point {j}")));
        }
    }
    let m1 = runs_to_arcs(&sorted, &labels, 1);
    let m2 = runs_to_arcs(&sorted, &labels, -1);
    let halving = Halving { profile, m1, m2 };
    if halving.total_components() > 5 || halving.pick().component_count() > 2 {
        return Err(Error::internal(format!(
            "halving left {} + {} arcs",
            halving.m1.component_count(),
            halving.m2.component_count()
        )));
    }
    for side in [&halving.m1, &halving.m2] {
        if side.color_counts(points)? != ColorCounts::uniform(half) {
            return Err(Error::internal("halving side has the wrong counts"));
        }
    }
    Ok(halving)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;
    use proptest::prelude::*;
    use Color::*;

    fn circle(colors: &[Color]) -> Vec<CirclePoint> {
        let m = colors.len() as i64;
        colors.iter().enumerate().map(|(i, &c)| CirclePoint::new(rat(2 * i as i64 + 1, 2 * m), c)).collect()
    }

    #[test]
    fn alternating_six_points() {
        let p = circle(&[Red, Green, Blue, Red, Green, Blue]);
        let h = moment_halve(&ArcSet::full(), &p, 2).unwrap();
        assert!(h.profile.cuts.len() <= 3);
        assert_eq!(h.m1.color_counts(&p).unwrap(), ColorCounts::uniform(1));
        assert_eq!(h.m2.color_counts(&p).unwrap(), ColorCounts::uniform(1));
        assert!(h.total_components() <= 5);
    }

    #[test]
    fn odd_k_cuts_one_point_per_color() {
        let p = circle(&[Red, Blue, Green]);
        let h = moment_halve(&ArcSet::full(), &p, 1).unwrap();
        assert!(h.m1.is_empty() && h.m2.is_empty());
        let mut on: Vec<Color> = h
            .profile
            .cuts
            .iter()
            .map(|c| match c {
                Cut::OnPoint(t) => p.iter().find(|q| &q.t == t).unwrap().color,
                Cut::Gap(_) => panic!("gap cut for odd k"),
            })
            .collect();
        on.sort();
        assert_eq!(on, vec![Red, Green, Blue]);
    }

    #[test]
    fn zero_inside_is_refused() {
        let p = circle(&[Red, Green, Blue, Red, Green, Blue]);
        // [9/12, 1/12 + 1) wraps through 0 and holds the points at 11/12, 1/12
        let a = ArcSet::from_arcs([(rat(7, 12), rat(17, 12))]);
        assert!(matches!(moment_halve(&a, &p, 2), Err(Error::Precondition(_))));
    }

    #[test]
    fn cubic_matches_alternation() {
        let prof = CutProfile { cuts: vec![Cut::Gap(rat(1, 4)), Cut::OnPoint(rat(1, 2)), Cut::Gap(rat(3, 4))], sign: -1 };
        assert_eq!(prof.cubic_side(&rat(1, 8)), -1);
        assert_eq!(prof.cubic_side(&rat(3, 8)), 1);
        assert_eq!(prof.cubic_side(&rat(1, 2)), 0);
        assert_eq!(prof.cubic_side(&rat(5, 8)), -1);
        assert_eq!(prof.cubic_side(&rat(7, 8)), 1);
    }

    fn arb_circle() -> impl Strategy<Value = Vec<CirclePoint>> {
        (1usize..=5).prop_flat_map(|n| {
            let mut base = Vec::new();
            for c in Color::RGB {
                base.extend(std::iter::repeat_n(c, n));
            }
            Just(base).prop_shuffle().prop_map(|cs| circle(&cs))
        })
    }

    proptest! {
        #[test]
        fn whole_circle_halves(p in arb_circle()) {
            let n = p.len() / 3;
            let h = moment_halve(&ArcSet::full(), &p, n).unwrap();
            prop_assert!(h.profile.cuts.len() <= 3);
            prop_assert!(h.total_components() <= 5);
            prop_assert!(h.pick().component_count() <= 2);
            for c in &h.profile.cuts {
                prop_assert_eq!(matches!(c, Cut::OnPoint(_)), n % 2 == 1);
            }
        }
    }
}
