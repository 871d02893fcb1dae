//! Exhaustive face scans.

use crate::cell::{Arrangement, Face};
use crate::geom::Color;

fn pair_changes(colors: &[Color], a: Color, b: Color) -> usize {
    let n = colors.len();
    (0..n)
        .filter(|&i| {
            let (x, y) = (colors[i], colors[(i + 1) % n]);
            (x == a && y == b) || (x == b && y == a)
        })
        .count()
}

/// Bounded faces whose boundary color cycle has an odd number of each
/// bichromatic adjacency.
pub fn scan_all_complete_faces(a: &Arrangement) -> Vec<Face> {
    use Color::*;
    a.faces
        .iter()
        .filter(|f| f.bounded)
        .filter(|f| {
            let colors: Vec<Color> = f.colors.iter().flatten().copied().collect();
            [(Red, Green), (Red, Blue), (Green, Blue)].iter().all(|&(x, y)| pair_changes(&colors, x, y) % 2 == 1)
        })
        .cloned()
        .collect()
}

/// Faces touched by lines of four distinct colors.
pub fn scan_four_colored_faces(a: &Arrangement) -> Vec<Face> {
    a.faces
        .iter()
        .filter(|f| {
            let mut seen = [false; 4];
            for c in f.colors.iter().flatten() {
                seen[*c as usize] = true;
            }
            seen.iter().all(|&s| s)
        })
        .cloned()
        .collect()
}
