use serde::{Deserialize, Serialize};
use std::fmt;

/// Color tag carried by every input atom.
///
/// `Black` only appears in the 4-colored shield construction; every solver
/// works over red, green and blue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "G")]
    Green,
    #[serde(rename = "B")]
    Blue,
    #[serde(rename = "K")]
    Black,
}

impl Color {
    pub const RGB: [Color; 3] = [Color::Red, Color::Green, Color::Blue];

    /// Index into an `(r, g, b)` triple; `None` for black.
    pub fn rgb_index(self) -> Option<usize> {
        match self {
            Color::Red => Some(0),
            Color::Green => Some(1),
            Color::Blue => Some(2),
            Color::Black => None,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Color::Red => 'R',
            Color::Green => 'G',
            Color::Blue => 'B',
            Color::Black => 'K',
        }
    }

    pub fn svg_stroke(self) -> &'static str {
        match self {
            Color::Red => "#d62728",
            Color::Green => "#2ca02c",
            Color::Blue => "#1f77b4",
            Color::Black => "#222222",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Per-color tally in `(red, green, blue)` order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ColorCounts {
    pub r: usize,
    pub g: usize,
    pub b: usize,
}

impl ColorCounts {
    pub fn new(r: usize, g: usize, b: usize) -> Self {
        ColorCounts { r, g, b }
    }

    pub fn uniform(k: usize) -> Self {
        ColorCounts { r: k, g: k, b: k }
    }

    pub fn add(&mut self, c: Color) {
        match c {
            Color::Red => self.r += 1,
            Color::Green => self.g += 1,
            Color::Blue => self.b += 1,
            Color::Black => {}
        }
    }

    pub fn tally<I: IntoIterator<Item = Color>>(colors: I) -> Self {
        let mut out = ColorCounts::default();
        for c in colors {
            out.add(c);
        }
        out
    }

    pub fn get(&self, c: Color) -> usize {
        match c {
            Color::Red => self.r,
            Color::Green => self.g,
            Color::Blue => self.b,
            Color::Black => 0,
        }
    }

    pub fn total(&self) -> usize {
        self.r + self.g + self.b
    }

    /// `Some(k)` when all three counts equal `k`.
    pub fn balanced(&self) -> Option<usize> {
        (self.r == self.g && self.g == self.b).then_some(self.r)
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.r, self.g, self.b)
    }
}

impl fmt::Display for ColorCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.r, self.g, self.b)
    }
}
