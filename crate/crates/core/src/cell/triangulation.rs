//! Colored closed pseudomanifolds and the good-type parity audit.

use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// A pure `(d-1)`-dimensional simplicial complex with vertex colors in `0..=d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredTriangulation {
    pub d: usize,
    /// Each simplex is a sorted list of `d` vertex ids.
    pub simplices: Vec<Vec<usize>>,
    /// Serialized as `{"vertex": color}`.
    #[serde(with = "color_map")]
    pub colors: BTreeMap<usize, usize>,
}

mod color_map {
    use serde::de::Error;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(m: &BTreeMap<usize, usize>, s: S) -> Result<S::Ok, S::Error> {
        m.serialize(s)
    }

    // Keys arrive as strings when the map sits inside a tagged enum.
    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<usize, usize>, D::Error> {
        BTreeMap::<String, usize>::deserialize(d)?
            .into_iter()
            .map(|(k, c)| k.parse().map(|v| (v, c)).map_err(|_| D::Error::custom(format!("vertex id {k:?} is not an integer"))))
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Parity {
    AllEven,
    AllOdd,
}

impl ColoredTriangulation {
    pub fn new(d: usize, simplices: Vec<Vec<usize>>, colors: BTreeMap<usize, usize>) -> Self {
        let simplices = simplices
            .into_iter()
            .map(|mut s| {
                s.sort_unstable();
                s
            })
            .collect();
        ColoredTriangulation { d, simplices, colors }
    }

    /// Boundary of the `d`-simplex on vertices `0..=d`, vertex `i` colored `i`.
    pub fn simplex_boundary(d: usize) -> Self {
        let simplices = (0..=d).map(|skip| (0..=d).filter(|&v| v != skip).collect()).collect();
        ColoredTriangulation::new(d, simplices, (0..=d).map(|v| (v, v)).collect())
    }

    /// Every ridge lies in exactly two simplices and every vertex has a color in `0..=d`.
    pub fn validate(&self) -> Result<()> {
        if self.d < 2 {
            return Err(Error::NotPseudomanifold(format!("dimension {} is below 2", self.d)));
        }
        if self.simplices.is_empty() {
            return Err(Error::NotPseudomanifold("no simplices".into()));
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for s in &self.simplices {
            if s.len() != self.d || s.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotPseudomanifold(format!("simplex {s:?} does not have {} distinct vertices", self.d)));
            }
            for v in s {
                match self.colors.get(v) {
                    Some(&c) if c <= self.d => {}
                    Some(&c) => return Err(Error::NotPseudomanifold(format!("vertex {v} has color {c} outside 0..={}", self.d))),
                    None => return Err(Error::NotPseudomanifold(format!("vertex {v} has no color"))),
                }
            }
            for skip in 0..s.len() {
                let r: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                *ridges.entry(r).or_default() += 1;
            }
        }
        if let Some((r, c)) = ridges.iter().find(|(_, &c)| c != 2) {
            return Err(Error::NotPseudomanifold(format!("ridge {r:?} lies in {c} simplices")));
        }
        Ok(())
    }

    /// `n_S` for each good type, indexed by the missing color.
    pub fn good_type_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.d + 1];
        for s in &self.simplices {
            let mut seen = vec![false; self.d + 1];
            for v in s {
                seen[self.colors[v]] = true;
            }
            if seen.iter().filter(|&&b| b).count() == self.d {
                let missing = seen.iter().position(|&b| !b).expect("d of d+1 colors seen");
                counts[missing] += 1;
            }
        }
        counts
    }

    /// Stellar subdivision of simplex `idx` by a new vertex of color `color`.
    pub fn subdivide(&mut self, idx: usize, color: usize) {
        let facet = self.simplices.swap_remove(idx);
        let v = self.colors.keys().next_back().map_or(0, |m| m + 1);
        self.colors.insert(v, color);
        for skip in 0..facet.len() {
            let mut s: Vec<usize> = facet.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &u)| u).collect();
            s.push(v);
            s.sort_unstable();
            self.simplices.push(s);
        }
    }

    /// Random subdivided sphere boundary with uniformly random vertex colors.
    pub fn random_sphere<R: Rng>(d: usize, subdivisions: usize, rng: &mut R) -> Self {
        let mut t = ColoredTriangulation::simplex_boundary(d);
        for _ in 0..subdivisions {
            let idx = rng.gen_range(0..t.simplices.len());
            t.subdivide(idx, 0);
        }
        for c in t.colors.values_mut() {
            *c = rng.gen_range(0..=d);
        }
        t.simplices.shuffle(rng);
        t
    }
}

/// Checks that every good type occurs with the same parity and returns it.
pub fn parity_audit(t: &ColoredTriangulation) -> Result<Parity> {
    t.validate()?;
    let counts = t.good_type_counts();
    let p = counts[0] % 2;
    if counts.iter().any(|c| c % 2 != p) {
        return Err(Error::MixedParity(format!("good type counts {counts:?}")));
    }
    Ok(if p == 0 { Parity::AllEven } else { Parity::AllOdd })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn colored_triangle_is_odd() {
        assert_eq!(parity_audit(&ColoredTriangulation::simplex_boundary(2)).unwrap(), Parity::AllOdd);
    }

    #[test]
    fn tetrahedron_is_odd() {
        assert_eq!(parity_audit(&ColoredTriangulation::simplex_boundary(3)).unwrap(), Parity::AllOdd);
    }

    #[test]
    fn octahedron_with_antipodal_colors() {
        // vertices 2c and 2c+1 are antipodal and share color c
        let mut simplices = Vec::new();
        for mask in 0..8usize {
            simplices.push((0..3).map(|c| 2 * c + ((mask >> c) & 1)).collect());
        }
        let colors = (0..6).map(|v| (v, v / 2)).collect();
        let t = ColoredTriangulation::new(3, simplices, colors);
        // every facet sees colors {0,1,2}: eight of that type, none of the others
        assert_eq!(t.good_type_counts(), vec![0, 0, 0, 8]);
        assert_eq!(parity_audit(&t).unwrap(), Parity::AllEven);
    }

    #[test]
    fn json_shape() {
        let t: ColoredTriangulation =
            serde_json::from_str(r#"{"d":2,"simplices":[[0,1],[1,2],[0,2]],"colors":{"0":0,"1":1,"2":2}}"#).unwrap();
        assert_eq!(parity_audit(&t).unwrap(), Parity::AllOdd);
        let inst = crate::io::Instance::Triangulation(t.clone());
        let text = inst.to_json();
        assert!(text.contains(r#""0": 0"#), "{text}");
        assert_eq!(crate::io::Instance::from_json(&text).unwrap(), inst);
    }

    #[test]
    fn open_complex_is_rejected() {
        let t = ColoredTriangulation::new(2, vec![vec![0, 1], vec![1, 2]], (0..3).map(|v| (v, v)).collect());
        assert!(matches!(parity_audit(&t), Err(Error::NotPseudomanifold(_))));
    }

    #[test]
    fn out_of_range_color_is_rejected() {
        let mut t = ColoredTriangulation::simplex_boundary(2);
        t.colors.insert(0, 3);
        assert!(matches!(parity_audit(&t), Err(Error::NotPseudomanifold(_))));
    }

    #[test]
    fn subdivision_keeps_pseudomanifold() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let t = ColoredTriangulation::random_sphere(4, 30, &mut rng);
        t.validate().unwrap();
        assert_eq!(t.simplices.len(), 5 + 30 * 3);
    }

    proptest! {
        #[test]
        fn random_spheres_never_mix(seed in any::<u64>(), d in 2usize..=4, subs in 0usize..25) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = ColoredTriangulation::random_sphere(d, subs, &mut rng);
            prop_assert!(parity_audit(&t).is_ok());
        }
    }
}
