//! Deterministic rational perturbation toward a simple arrangement, used only
//! by the instance generators.

use super::arrangement::check_simple;
use crate::error::{Error, Result};
use crate::geom::{int, ColoredLine, Line, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};

/// Writes `l` as `y = m*x + i` (`(-1, m, -i)` coefficients `(b, a, c)`), or
/// as `x = -c` with `a = 1` when vertical.
fn normalized(l: &Line) -> Line {
    if l.b.is_zero() {
        Line::new(int(1), Rat::zero(), &l.c / &l.a).expect("a != 0")
    } else {
        let s = -&l.b;
        Line::new(&l.a / &s, int(-1), &l.c / &s).expect("b != 0")
    }
}

fn shifted(l: &Line, i: usize, eps: &Rat) -> Line {
    let k = int(i as i64);
    let (lin, quad) = (&k * eps, &k * &k * eps);
    if l.b.is_zero() {
        Line::new(l.a.clone(), quad, &l.c + lin).expect("a != 0")
    } else {
        Line::new(&l.a + quad, l.b.clone(), &l.c + lin).expect("b != 0")
    }
}

/// Line `i` gets `i * eps` added to its offset and `i^2 * eps` to its slope
/// (to its tilt when vertical). `eps` starts at `1 / (2 L (n^2 + 1))`, `L` the
/// lcm of all coefficient denominators, and is halved until the lines are
/// simple; each failure is a root of one of finitely many polynomials in `eps`.
pub fn perturb_to_simple(lines: &[ColoredLine]) -> Result<Vec<ColoredLine>> {
    if check_simple(lines).is_ok() {
        return Ok(lines.to_vec());
    }
    let norm: Vec<Line> = lines.iter().map(|l| normalized(&l.line)).collect();
    let lcm = norm
        .iter()
        .flat_map(|l| [l.a.denom().clone(), l.b.denom().clone(), l.c.denom().clone()])
        .fold(num_bigint::BigInt::one(), |acc, d| acc.lcm(&d));
    let n = lines.len() as i64;
    let mut eps = Rat::new(1.into(), lcm * (2 * (n * n + 1)));
    for _ in 0..256 {
        let out: Vec<ColoredLine> =
            norm.iter().enumerate().map(|(i, l)| ColoredLine::new(shifted(l, i, &eps), lines[i].color)).collect();
        if check_simple(&out).is_ok() {
            return Ok(out);
        }
        eps /= int(2);
    }
    Err(Error::GenerationFailed("perturbation did not reach a simple arrangement".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Color;
    use num_traits::Signed;

    fn cl(m: i64, i: i64, c: Color) -> ColoredLine {
        ColoredLine::new(Line::from_slope_intercept(int(m), int(i)), c)
    }

    #[test]
    fn simple_input_is_untouched() {
        let lines = vec![cl(0, 0, Color::Red), cl(1, 0, Color::Green), cl(-1, 3, Color::Blue)];
        assert_eq!(perturb_to_simple(&lines).unwrap(), lines);
    }

    #[test]
    fn parallel_and_concurrent_lines_are_separated() {
        let lines = vec![
            cl(1, 0, Color::Red),
            cl(1, 2, Color::Green),
            cl(-1, 0, Color::Blue),
            cl(0, 0, Color::Red),
            ColoredLine::new(Line::new(int(1), int(0), int(0)).unwrap(), Color::Green),
            ColoredLine::new(Line::new(int(1), int(0), int(-2)).unwrap(), Color::Blue),
        ];
        assert!(check_simple(&lines).is_err());
        let out = perturb_to_simple(&lines).unwrap();
        assert!(check_simple(&out).is_ok());
        assert_eq!(out.iter().map(|l| l.color).collect::<Vec<_>>(), lines.iter().map(|l| l.color).collect::<Vec<_>>());
        assert_eq!(perturb_to_simple(&lines).unwrap(), out);
    }

    #[test]
    fn perturbation_is_small() {
        let lines = vec![cl(2, 1, Color::Red), cl(2, 5, Color::Green), cl(2, -3, Color::Blue)];
        let out = perturb_to_simple(&lines).unwrap();
        for (a, b) in lines.iter().zip(&out) {
            let (sa, sb) = (a.line.slope().unwrap(), b.line.slope().unwrap());
            assert!((sa - sb).abs() < Rat::new(1.into(), 2.into()));
        }
    }
}
