use super::line::Line;
use super::point::Point;
use super::rat::{int, Rat};
use num_traits::{One, Zero};

/// Invertible affine map `p -> M p + t` with rational entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Affine {
    m: [[Rat; 2]; 2],
    t: (Rat, Rat),
}

impl Affine {
    pub fn identity() -> Self {
        Affine { m: [[Rat::one(), Rat::zero()], [Rat::zero(), Rat::one()]], t: (Rat::zero(), Rat::zero()) }
    }

    pub fn translation(dx: Rat, dy: Rat) -> Self {
        Affine { t: (dx, dy), ..Affine::identity() }
    }

    /// `(x, y) -> (x + s*y, y)`.
    pub fn shear_x(s: Rat) -> Self {
        Affine { m: [[Rat::one(), s], [Rat::zero(), Rat::one()]], t: (Rat::zero(), Rat::zero()) }
    }

    /// `(x, y) -> (x, y + s*x)`.
    pub fn shear_y(s: Rat) -> Self {
        Affine { m: [[Rat::one(), Rat::zero()], [s, Rat::one()]], t: (Rat::zero(), Rat::zero()) }
    }

    pub fn is_identity(&self) -> bool {
        *self == Affine::identity()
    }

    fn det(&self) -> Rat {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    /// `self` applied after `first`.
    pub fn compose(&self, first: &Affine) -> Affine {
        let a = &self.m;
        let b = &first.m;
        let m = [
            [&a[0][0] * &b[0][0] + &a[0][1] * &b[1][0], &a[0][0] * &b[0][1] + &a[0][1] * &b[1][1]],
            [&a[1][0] * &b[0][0] + &a[1][1] * &b[1][0], &a[1][0] * &b[0][1] + &a[1][1] * &b[1][1]],
        ];
        let tp = self.apply(&Point::new(first.t.0.clone(), first.t.1.clone()));
        Affine { m, t: (tp.x, tp.y) }
    }

    pub fn inverse(&self) -> Affine {
        let d = self.det();
        let m = &self.m;
        let inv = [
            [&m[1][1] / &d, -&m[0][1] / &d],
            [-&m[1][0] / &d, &m[0][0] / &d],
        ];
        let tx = -(&inv[0][0] * &self.t.0 + &inv[0][1] * &self.t.1);
        let ty = -(&inv[1][0] * &self.t.0 + &inv[1][1] * &self.t.1);
        Affine { m: inv, t: (tx, ty) }
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(
            &self.m[0][0] * &p.x + &self.m[0][1] * &p.y + &self.t.0,
            &self.m[1][0] * &p.x + &self.m[1][1] * &p.y + &self.t.1,
        )
    }

    /// Image of a line, as the set of images of its points.
    pub fn apply_line(&self, l: &Line) -> Line {
        let inv = self.inverse();
        // n' = M^{-T} n, c' = c + n . t_inv
        let a = &inv.m[0][0] * &l.a + &inv.m[1][0] * &l.b;
        let b = &inv.m[0][1] * &l.a + &inv.m[1][1] * &l.b;
        let c = &l.c + &l.a * &inv.t.0 + &l.b * &inv.t.1;
        Line::new(a, b, c).expect("invertible map keeps a line a line")
    }
}

/// Small positive rationals tried in order when a generic transform is needed.
pub fn candidate_parameters() -> impl Iterator<Item = Rat> {
    (1..).map(|i: i64| int(i) / int(7 + i))
}
