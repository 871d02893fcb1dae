//! Arc sets with `k` points of each color, built by following an op plan.

use super::halve::{moment_halve, Halving};
use super::plan::{plan_ops, Op};
use crate::error::{Error, Result};
use crate::geom::{int, rotate_parameters, ArcSet, CirclePoint, Color, ColorCounts, Rat};
use num_traits::Zero;
use std::collections::HashSet;

/// Checks distinct parameters in `[0, 1)` and equal color classes; returns `n`.
pub fn validate_circle_points(points: &[CirclePoint]) -> Result<usize> {
    if points.iter().any(|p| p.t < Rat::zero() || p.t >= int(1)) {
        return Err(Error::Precondition("circle parameters must lie in [0, 1)".into()));
    }
    let distinct: HashSet<&Rat> = points.iter().map(|p| &p.t).collect();
    if distinct.len() != points.len() {
        return Err(Error::Precondition("two circle points share a parameter".into()));
    }
    if points.iter().any(|p| p.color == Color::Black) {
        return Err(Error::Precondition("only red, green and blue are allowed".into()));
    }
    let counts = ColorCounts::tally(points.iter().map(|p| p.color));
    counts
        .balanced()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::Precondition(format!("color classes are unequal: {counts}")))
}

/// A parameter outside `a` and off every point; `a` must not be the whole circle.
fn free_parameter(a: &ArcSet, points: &[CirclePoint]) -> Rat {
    let taken: HashSet<&Rat> = points.iter().map(|p| &p.t).collect();
    let (lo, hi) = a.complement().arcs()[0].clone();
    (1..)
        .map(|j| crate::geom::rat::frac(&(&lo + (&hi - &lo) / int(j + 1))))
        .find(|u| !taken.contains(u))
        .expect("an arc holds infinitely many parameters")
}

/// A parameter off every point, for rotating the whole circle.
fn gap_parameter(points: &[CirclePoint]) -> Rat {
    let mut ts: Vec<&Rat> = points.iter().map(|p| &p.t).collect();
    ts.sort();
    match ts.len() {
        0 => Rat::zero(),
        1 => crate::geom::rat::frac(&(ts[0] + crate::geom::half())),
        _ => crate::geom::midpoint(ts[0], ts[1]),
    }
}

/// Halves `a`, first rotating the parameterization so that `0` lies outside it.
pub fn halve_step(a: &ArcSet, points: &[CirclePoint], k: usize) -> Result<ArcSet> {
    halve_step_observed(a, points, k, &mut |_| {})
}

/// `halve_step`, handing every halving it computes to `observe`.
pub fn halve_step_observed(a: &ArcSet, points: &[CirclePoint], k: usize, observe: &mut dyn FnMut(&Halving)) -> Result<ArcSet> {
    let needs_turn = if a.is_full() { points.iter().any(|p| p.t.is_zero()) } else { a.contains(&Rat::zero()) };
    if !needs_turn {
        let h = moment_halve(a, points, k)?;
        observe(&h);
        return Ok(h.pick().clone());
    }
    let u = if a.is_full() { gap_parameter(points) } else { free_parameter(a, points) };
    let (p2, a2) = rotate_parameters(points, a, &-u.clone());
    let h = moment_halve(&a2, &p2, k)?;
    observe(&h);
    Ok(h.pick().rotate(&u))
}

/// At most two arcs holding exactly `k` points of each color.
pub fn find_k_arcset(points: &[CirclePoint], k: usize) -> Result<ArcSet> {
    find_k_arcset_observed(points, k, &mut |_| {})
}

/// `find_k_arcset`, handing every halving along the way to `observe`.
pub fn find_k_arcset_observed(points: &[CirclePoint], k: usize, observe: &mut dyn FnMut(&Halving)) -> Result<ArcSet> {
    let n = validate_circle_points(points)?;
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    if k == 0 {
        return Ok(ArcSet::empty());
    }
    if k == n {
        return Ok(ArcSet::full());
    }
    let plan = plan_ops(n, k)?;
    let mut a = ArcSet::full();
    let mut cur = n;
    for op in &plan.ops {
        match op {
            Op::Complement => a = a.complement(),
            Op::Halve => a = halve_step_observed(&a, points, cur, observe)?,
        }
        cur = op.apply(n, cur);
        if a.color_counts(points)? != ColorCounts::uniform(cur) {
            return Err(Error::internal(format!("arc set drifted from ({cur},{cur},{cur}) while following {plan}")));
        }
        if a.component_count() > 2 {
            return Err(Error::internal(format!("arc set grew to {} arcs", a.component_count())));
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::rat;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn random_circle(n: usize, seed: u64) -> Vec<CirclePoint> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut colors: Vec<Color> = Color::RGB.iter().flat_map(|&c| std::iter::repeat_n(c, n)).collect();
        colors.shuffle(&mut rng);
        let mut ts: Vec<i64> = (0..1000).collect();
        ts.shuffle(&mut rng);
        colors.iter().zip(ts).map(|(&c, t)| CirclePoint::new(rat(t, 1000), c)).collect()
    }

    #[test]
    fn k_equals_n_is_the_circle() {
        let p = random_circle(5, 1);
        assert!(find_k_arcset(&p, 5).unwrap().is_full());
    }

    #[test]
    fn random_instances() {
        for n in 2..=6 {
            for seed in 0..5 {
                let p = random_circle(n, seed);
                for k in 1..=n {
                    let a = find_k_arcset(&p, k).unwrap();
                    assert!(a.component_count() <= 2);
                    assert_eq!(a.color_counts(&p).unwrap(), ColorCounts::uniform(k));
                }
            }
        }
    }

    #[test]
    fn point_at_zero_forces_rotation() {
        let p: Vec<CirclePoint> = [(0, Color::Red), (1, Color::Green), (2, Color::Blue), (3, Color::Blue), (4, Color::Red), (5, Color::Green)]
            .iter()
            .map(|&(i, c)| CirclePoint::new(rat(i, 6), c))
            .collect();
        let a = find_k_arcset(&p, 1).unwrap();
        assert_eq!(a.color_counts(&p).unwrap(), ColorCounts::uniform(1));
    }

    #[test]
    fn complement_counts() {
        let p = random_circle(7, 3);
        for k in 1..7 {
            let a = find_k_arcset(&p, k).unwrap();
            assert_eq!(a.complement().color_counts(&p).unwrap(), ColorCounts::uniform(7 - k));
        }
    }

    #[test]
    fn invalid_inputs() {
        let mut p = random_circle(3, 0);
        assert!(find_k_arcset(&p, 4).is_err());
        p[1].t = p[0].t.clone();
        assert!(matches!(find_k_arcset(&p, 1), Err(Error::Precondition(_))));
    }
}
