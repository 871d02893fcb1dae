//! Four colors are too many: a red, green, blue triangle whose lines are
//! each flanked by two black lines, so no face meets all four colors.

use crate::geom::{int, rat, Color, ColoredLine, Line, Rat};

/// Slope offset of the shields; they meet their base line about `Q` units away.
pub const SHIELD_SLOPE_DENOMINATOR: i64 = 1_000_000;

fn shields(m: &Rat, i: &Rat) -> [ColoredLine; 2] {
    let eps = rat(1, SHIELD_SLOPE_DENOMINATOR);
    let delta = rat(1, 10);
    [
        ColoredLine::new(Line::from_slope_intercept(m + &eps, i + &delta), Color::Black),
        // a wider gap on this side keeps the two shields of one line from
        // crossing on the base line
        ColoredLine::new(Line::from_slope_intercept(m - &eps, i - delta * int(2)), Color::Black),
    ]
}

/// Three base lines followed by their six shields.
pub fn gen_shielded_counterexample() -> Vec<ColoredLine> {
    let base = [(int(0), int(0), Color::Red), (int(2), int(0), Color::Green), (int(-1), int(4), Color::Blue)];
    let mut out: Vec<ColoredLine> =
        base.iter().map(|(m, i, c)| ColoredLine::new(Line::from_slope_intercept(m.clone(), i.clone()), *c)).collect();
    for (m, i, _) in &base {
        out.extend(shields(m, i));
    }
    out
}
