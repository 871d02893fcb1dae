//! Reaching `k` from `n` with `f(x) = x / 2` (rounded down) and `g(x) = n - x`.

use crate::error::{Error, Result};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::VecDeque;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Op {
    Halve,
    Complement,
}

impl Op {
    pub fn letter(self) -> char {
        match self {
            Op::Halve => 'f',
            Op::Complement => 'g',
        }
    }

    pub fn apply(self, n: usize, x: usize) -> usize {
        match self {
            Op::Halve => x / 2,
            Op::Complement => n - x,
        }
    }
}

/// Operations applied left to right, starting from `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpPlan {
    pub n: usize,
    pub k: usize,
    #[serde(serialize_with = "ops_ser", deserialize_with = "ops_de")]
    pub ops: Vec<Op>,
}

fn ops_ser<S: Serializer>(ops: &[Op], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&ops.iter().map(|o| o.letter()).collect::<String>())
}

fn ops_de<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Op>, D::Error> {
    let s = String::deserialize(d)?;
    s.chars()
        .map(|c| match c {
            'f' => Ok(Op::Halve),
            'g' => Ok(Op::Complement),
            other => Err(serde::de::Error::custom(format!("unknown op {other:?}"))),
        })
        .collect()
}

impl fmt::Display for OpPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.ops.iter().map(|o| o.letter()).collect();
        write!(f, "{} -[{}]-> {}", self.n, s, self.k)
    }
}

impl OpPlan {
    pub fn evaluate(&self) -> usize {
        self.ops.iter().fold(self.n, |x, op| op.apply(self.n, x))
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    pub fn has_double_complement(&self) -> bool {
        self.ops.windows(2).any(|w| w == [Op::Complement, Op::Complement])
    }
}

/// `2 * ceil(log2 n) + 4`.
pub fn length_bound(n: usize) -> usize {
    let ceil_log = if n <= 1 { 0 } else { (usize::BITS - (n - 1).leading_zeros()) as usize };
    2 * ceil_log + 4
}

/// Grows an interval of starting values around `k` by preimages until it
/// holds `n / 2`, then prepends one halving of `n`.
pub fn plan_ops(n: usize, k: usize) -> Result<OpPlan> {
    if n < 2 || k < 1 || k > n {
        return Err(Error::Precondition(format!("need n >= 2 and 1 <= k <= n, got n={n} k={k}")));
    }
    if k == n {
        return Ok(OpPlan { n, k, ops: Vec::new() });
    }
    let m = n / 2;
    let (mut l, mut r) = (k, k);
    // backwards[i] is the op that takes the interval after step i into the one before it
    let mut backwards = Vec::new();
    while !(l <= m && m <= r) {
        if r < m {
            backwards.push(Op::Halve);
            (l, r) = (2 * l, 2 * r + 1);
        } else {
            backwards.push(Op::Complement);
            (l, r) = (n - r, n - l);
        }
    }
    let mut ops = vec![Op::Halve];
    ops.extend(backwards.into_iter().rev());
    Ok(OpPlan { n, k, ops })
}

/// Fewest operations taking `n` to each value in `0..=n`, `None` if unreachable.
pub fn bfs_distances(n: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; n + 1];
    dist[n] = Some(0);
    let mut queue = VecDeque::from([n]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].expect("queued values are reached");
        for op in [Op::Halve, Op::Complement] {
            let y = op.apply(n, x);
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                queue.push_back(y);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(plan_ops(2, 1).unwrap().ops, vec![Op::Halve]);
        assert!(plan_ops(5, 5).unwrap().ops.is_empty());
        let p = plan_ops(7, 2).unwrap();
        assert_eq!(p.evaluate(), 2);
        assert!(p.len() <= length_bound(7));
        assert!(p.len() >= bfs_distances(7)[2].unwrap());
    }

    #[test]
    fn bound_values() {
        assert_eq!(length_bound(2), 6);
        assert_eq!(length_bound(7), 10);
        assert_eq!(length_bound(8), 10);
        assert_eq!(length_bound(9), 12);
    }

    #[test]
    fn out_of_range() {
        assert!(plan_ops(1, 1).is_err());
        assert!(plan_ops(5, 0).is_err());
        assert!(plan_ops(5, 6).is_err());
    }

    #[test]
    fn json_is_a_string_of_letters() {
        let p = plan_ops(7, 2).unwrap();
        let v = serde_json::to_value(&p).unwrap();
        let s = v["ops"].as_str().unwrap();
        assert!(s.chars().all(|c| c == 'f' || c == 'g'));
        assert_eq!(serde_json::from_value::<OpPlan>(v).unwrap(), p);
    }

    #[test]
    fn small_n_exhaustive() {
        for n in 2..=300 {
            let dist = bfs_distances(n);
            for (k, d) in dist.iter().enumerate().skip(1) {
                let p = plan_ops(n, k).unwrap();
                assert_eq!(p.evaluate(), k);
                assert!(!p.has_double_complement());
                assert!(p.len() <= length_bound(n), "{p}");
                assert!(d.unwrap() <= p.len());
            }
        }
    }
}
