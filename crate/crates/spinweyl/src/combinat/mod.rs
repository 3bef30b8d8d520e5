//! Partitions and bipartitions: Littlewood-Richardson coefficients, hooks,
//! characters of S_n and W(B_n), one-W-type predicates and the tableau rule
//! for central characters.

mod central;
mod characters;
mod lr;
mod predict;
#[cfg(test)]
mod tests;

pub use central::{central_character_tableau, CentralCharacter, Linear};
pub use characters::{bn_character, bn_class_type, dn_character, sn_character, SignedCycleType};
pub use lr::{lr_coefficient, lr_expand, rectangular_lr_partitions};
pub use predict::{
    delta, hook_partition, is_odd_strict, one_wtype_candidates, rectangular_rules_hold, refl_tensor_b, spin_degree,
    t2_admissible, type_a_spin_tensor, type_a_spin_tensor_printed, type_b_spin_decomposition, Candidate, SpinConstituent, SpinSign,
};

use crate::error::{Error, Result};
use std::fmt;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `rows` rows of length `width`, written width x rows.
    pub fn rectangle(width: usize, rows: usize) -> Self {
        Self::new(vec![width; rows])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part i (0-based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let w = self.part(0);
        Self((0..w).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// (width, rows) when the partition is a nonempty rectangle.
    pub fn rectangle_shape(&self) -> Option<(usize, usize)> {
        (!self.is_empty() && self.is_rectangle()).then(|| (self.0[0], self.0.len()))
    }

    pub fn distinct_parts(&self) -> usize {
        let mut p = self.0.clone();
        p.dedup();
        p.len()
    }

    /// Contents j - i of the boxes, row by row.
    pub fn contents(&self) -> Vec<i64> {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| j as i64 - i as i64)).collect()
    }

    /// Number of standard Young tableaux (hook length formula).
    pub fn dimension(&self) -> u128 {
        let t = self.transpose();
        let mut num: u128 = (1..=self.size() as u128).product();
        let mut den: u128 = 1;
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                den *= (p - j + t.part(j) - i - 1) as u128;
            }
            let g = num_integer::gcd(num, den);
            num /= g;
            den /= g;
        }
        num / den
    }

    /// All partitions of n in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions obtained by removing one box.
    pub fn remove_box(&self) -> Vec<Partition> {
        (0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| {
                let mut p = self.0.clone();
                p[i] -= 1;
                Partition::new(p)
            })
            .collect()
    }

    /// Partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .map(|i| {
                let mut p = self.0.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                Partition::new(p)
            })
            .collect()
    }

    /// Parse `3,2,1`, `(3,2,1)`, `2^2 1` style is not accepted; `-` or empty
    /// is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        if t.is_empty() || t == "-" || t == "0" {
            return Ok(Self::empty());
        }
        let parts = t
            .split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad partition {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("partition {s:?} is not decreasing")));
        }
        Ok(Self::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Irreducible W(B_n)-representations; `n x 0` is trivial, `0 x 1^n` is
/// the sign and `(n-1) x 1` the reflection representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Self { left, right }
    }

    pub fn size(&self) -> usize {
        self.left.size() + self.right.size()
    }

    pub fn all(n: usize) -> Vec<Bipartition> {
        (0..=n)
            .rev()
            .flat_map(|a| {
                let rights = Partition::all(n - a);
                Partition::all(a).into_iter().flat_map(move |l| rights.clone().into_iter().map(move |r| Bipartition::new(l.clone(), r)))
            })
            .collect()
    }

    /// Degree: binomial(n, |left|) dim(left) dim(right).
    pub fn dimension(&self) -> u128 {
        let n = self.size() as u128;
        let a = self.left.size() as u128;
        let binom = (1..=a).fold(1u128, |acc, i| acc * (n - a + i) / i);
        binom * self.left.dimension() * self.right.dimension()
    }

    /// Parse `2,1 x 1` or `(2,1)x(1)`; `0` or `-` for an empty side.
    pub fn parse(s: &str) -> Result<Self> {
        let (l, r) = s.split_once(['x', '×']).ok_or_else(|| Error::InvalidInput(format!("bad bipartition {s:?}")))?;
        Ok(Self::new(Partition::parse(l)?, Partition::parse(r)?))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |p: &Partition| if p.is_empty() { "0".to_string() } else { p.to_string() };
        write!(f, "{}x{}", side(&self.left), side(&self.right))
    }
}
