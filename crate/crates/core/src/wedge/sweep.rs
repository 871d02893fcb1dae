//! Balanced double wedge by sweeping an apex down a vertical line.
//!
//! The apex starts above every line through two input points, so the slope
//! ordering is the reverse of the far-below one. Each time the apex crosses
//! such a line the two points swap places, which moves one window vertex and
//! its antipode. The first vertex to land on the origin gives the answer.

use super::curve::{balanced_half, contribution, curve_from_colors, quad_has_interior_lattice_point, WEDGE_STEPS};
use super::double_wedge::DoubleWedge;
use super::ordering::{ordering_at, SlopeOrdering};
use crate::error::{Error, Result};
use crate::geom::rat::format_rat;
use crate::geom::{check_general_position, half, int, midpoint, ColoredPoint, GeneralPosition, LatticePoint, LatticePolygon, Point, Rat};
use num_traits::One;
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Clone, Serialize)]
pub struct BalancedWedge {
    pub wedge: DoubleWedge,
    /// Ordering at the apex.
    pub ordering: SlopeOrdering,
    /// First position of the balanced window of `3n` consecutive points.
    pub start: usize,
    pub n: usize,
    /// Events crossed before the answer, every one of them checked.
    pub events: usize,
}

/// Slopes just outside positions `a..b` of the ordering, `b > a`.
fn window_slopes(o: &SlopeOrdering, a: usize, b: usize) -> (Rat, Rat) {
    let s = &o.slopes;
    let lo = if a == 0 { &s[0] - Rat::one() } else { midpoint(&s[a - 1], &s[a]) };
    let hi = if b == s.len() { &s[b - 1] + Rat::one() } else { midpoint(&s[b - 1], &s[b]) };
    (lo, hi)
}

/// The double wedge at `o.apex` holding exactly the cyclic window of `len`
/// positions starting at `start`.
pub fn window_wedge(o: &SlopeOrdering, start: usize, len: usize) -> Result<DoubleWedge> {
    let total = o.order.len();
    if len == 0 || len >= total || start >= total {
        return Err(Error::Precondition(format!("window {start}+{len} of {total} points")));
    }
    if start + len <= total {
        let (lo, hi) = window_slopes(o, start, start + len);
        DoubleWedge::from_slopes(&o.apex, &lo, &hi, true)
    } else {
        let (lo, hi) = window_slopes(o, start + len - total, start);
        DoubleWedge::from_slopes(&o.apex, &lo, &hi, false)
    }
}

impl BalancedWedge {
    pub fn window(&self) -> Vec<usize> {
        let total = self.ordering.order.len();
        (0..3 * self.n).map(|j| self.ordering.order[(self.start + j) % total]).collect()
    }

    /// The same partition read from the window that does not wrap; its
    /// wedge takes the sectors between the boundary slopes.
    pub fn straight_wedge(&self) -> Result<DoubleWedge> {
        let w = 3 * self.n;
        let start = if self.start <= w { self.start } else { self.start - w };
        window_wedge(&self.ordering, start, w)
    }
}

struct Event {
    y: Rat,
    pair: (usize, usize),
}

fn events_at(points: &[ColoredPoint], x0: &Rat) -> Vec<Event> {
    let mut ev = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let (p, q) = (&points[i].pos, &points[j].pos);
            let y = &p.y + (&q.y - &p.y) / (&q.x - &p.x) * (x0 - &p.x);
            ev.push(Event { y, pair: (i, j) });
        }
    }
    ev.sort_by(|a, b| b.y.cmp(&a.y));
    ev
}

fn pt(p: LatticePoint) -> serde_json::Value {
    json!([p.0, p.1])
}

struct Sweep {
    total: usize,
    w: usize,
    order: Vec<usize>,
    pos: Vec<usize>,
    colors: Vec<crate::geom::Color>,
    q: Vec<LatticePoint>,
    trace: Vec<serde_json::Value>,
}

impl Sweep {
    fn fail(&self, message: String, x0: &Rat) -> Error {
        Error::Internal {
            message,
            trace: Some(json!({ "x0": format_rat(x0), "events": self.trace })),
        }
    }

    fn check_curve(&self) -> std::result::Result<(), String> {
        let poly = LatticePolygon::new(self.q.clone());
        if !poly.is_centrally_symmetric() {
            return Err("curve lost central symmetry".into());
        }
        if let Some((a, b)) = poly.edges().find(|(a, b)| !WEDGE_STEPS.contains(&(b.0 - a.0, b.1 - a.1))) {
            return Err(format!("step {a:?} -> {b:?} is not an allowed type"));
        }
        if let Ok(wn) = poly.winding_around((0, 0)) {
            if wn.rem_euclid(2) != 1 {
                return Err(format!("origin-free curve has even winding {wn}"));
            }
        }
        Ok(())
    }

    /// Swap positions `i` and `i + 1` and return the changed vertices.
    fn swap(&mut self, i: usize) -> [(usize, LatticePoint, LatticePoint); 2] {
        let (a, b) = (self.colors[i + 1], self.colors[i]);
        self.order.swap(i, i + 1);
        self.colors.swap(i, i + 1);
        self.pos[self.order[i]] = i;
        self.pos[self.order[i + 1]] = i + 1;
        let (ca, cb) = (contribution(a), contribution(b));
        let k1 = i + 1;
        let k2 = (i + 1 + self.w) % self.total;
        let o1 = self.q[k1];
        let o2 = self.q[k2];
        // window k1 now has b at position i+1 instead of a; window k2 the reverse
        self.q[k1] = (o1.0 - ca.0 + cb.0, o1.1 - ca.1 + cb.1);
        self.q[k2] = (o2.0 - cb.0 + ca.0, o2.1 - cb.1 + ca.1);
        [(k1, o1, self.q[k1]), (k2, o2, self.q[k2])]
    }

    fn quad_ok(&self, k: usize, old: LatticePoint, new: LatticePoint) -> bool {
        let prev = self.q[(k + self.total - 1) % self.total];
        let next = self.q[(k + 1) % self.total];
        !quad_has_interior_lattice_point([prev, old, next, new])
    }
}

pub fn sweep_balanced_wedge(points: &[ColoredPoint]) -> Result<BalancedWedge> {
    let colors: Vec<_> = points.iter().map(|p| p.color).collect();
    let n = balanced_half(&colors)?;
    let pos: Vec<Point> = points.iter().map(|p| p.pos.clone()).collect();
    if !check_general_position(&pos, GeneralPosition::DistinctXY) {
        return Err(Error::Precondition("two points share an x- or y-coordinate".into()));
    }
    if !check_general_position(&pos, GeneralPosition::NoThreeCollinear) {
        return Err(Error::Precondition("three points are collinear".into()));
    }
    let min_x = pos.iter().map(|p| p.x.clone()).min().expect("nonempty");
    let mut x0 = min_x - int(1);
    let mut events = events_at(points, &x0);
    let mut retries = 0;
    while events.windows(2).any(|e| e[0].y == e[1].y) {
        retries += 1;
        if retries > 10_000 {
            return Err(Error::internal("could not place the sweep line off every event tie"));
        }
        x0 -= half();
        events = events_at(points, &x0);
    }

    let top = Point::new(x0.clone(), &events[0].y + int(1));
    let first = ordering_at(&top, points)?;
    let curve = curve_from_colors(&first.colors)?;
    let total = 6 * n;
    let mut s = Sweep {
        total,
        w: 3 * n,
        pos: {
            let mut v = vec![0; total];
            for (i, &p) in first.order.iter().enumerate() {
                v[p] = i;
            }
            v
        },
        order: first.order.clone(),
        colors: first.colors.clone(),
        q: curve.vertices,
        trace: Vec::new(),
    };
    if let Some(&k) = curve.zeros.first() {
        let wedge = window_wedge(&first, k, 3 * n)?;
        return Ok(BalancedWedge { wedge, ordering: first, start: k, n, events: 0 });
    }
    s.check_curve().map_err(|m| s.fail(m, &x0))?;

    for (e, ev) in events.iter().enumerate() {
        let (pa, pb) = (s.pos[ev.pair.0], s.pos[ev.pair.1]);
        let i = pa.min(pb);
        if pa.max(pb) != i + 1 {
            return Err(s.fail(format!("event {e} swaps non-adjacent positions {pa} and {pb}"), &x0));
        }
        let changed = s.swap(i);
        s.trace.push(json!({
            "event": e,
            "pair": [ev.pair.0, ev.pair.1],
            "position": i,
            "changed": changed.iter().map(|(k, o, nw)| json!([k, pt(*o), pt(*nw)])).collect::<Vec<_>>(),
        }));
        for &(k, o, nw) in &changed {
            if !s.quad_ok(k, o, nw) {
                return Err(s.fail(format!("event {e} sweeps a lattice point at vertex {k}"), &x0));
            }
        }
        if changed[0].2 == (0, 0) {
            let y = match events.get(e + 1) {
                Some(next) => midpoint(&ev.y, &next.y),
                None => &ev.y - int(1),
            };
            let ordering = ordering_at(&Point::new(x0.clone(), y), points)?;
            if ordering.order != s.order {
                return Err(s.fail(format!("maintained ordering drifted at event {e}"), &x0));
            }
            let start = changed[0].0.min(changed[1].0);
            let wedge = window_wedge(&ordering, start, 3 * n)?;
            return Ok(BalancedWedge { wedge, ordering, start, n, events: e + 1 });
        }
        s.check_curve().map_err(|m| s.fail(format!("after event {e}: {m}"), &x0))?;
    }
    Err(s.fail("sweep ended without a balanced window".into(), &x0))
}
