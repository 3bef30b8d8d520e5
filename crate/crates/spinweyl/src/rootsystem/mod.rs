//! Crystallographic root systems in explicit rational coordinates and their
//! Weyl groups.

mod build;
mod weyl;

pub use weyl::{WeylElement, WeylGroup};

use crate::error::{Error, Result};
use crate::group::Perm;
use crate::linalg::QMatrix;
use crate::scalars::{CyclotomicNumber, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
}

impl CartanType {
    pub fn new(letter: &str, rank: usize) -> Result<Self> {
        let t = match (letter.to_ascii_uppercase().as_str(), rank) {
            ("A", n) if n >= 1 => CartanType::A(n),
            ("B", n) if n >= 2 => CartanType::B(n),
            ("C", n) if n >= 2 => CartanType::C(n),
            ("D", n) if n >= 3 => CartanType::D(n),
            ("E", 6) => CartanType::E6,
            ("E", 7) => CartanType::E7,
            ("E", 8) => CartanType::E8,
            ("F", 4) => CartanType::F4,
            ("G", 2) => CartanType::G2,
            _ => return Err(Error::UnsupportedType(format!("{letter}{rank}"))),
        };
        Ok(t)
    }

    /// Parses names such as `A3`, `B4`, `E6`, `G2`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::UnsupportedType(s.to_string());
        if s.len() < 2 {
            return Err(bad());
        }
        let (l, r) = s.split_at(1);
        let rank: usize = r.trim_start_matches('_').parse().map_err(|_| bad())?;
        Self::new(l, rank)
    }

    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::E6 => 6,
            CartanType::E7 => 7,
            CartanType::E8 => 8,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    pub fn letter(&self) -> char {
        match self {
            CartanType::A(_) => 'A',
            CartanType::B(_) => 'B',
            CartanType::C(_) => 'C',
            CartanType::D(_) => 'D',
            CartanType::E6 | CartanType::E7 | CartanType::E8 => 'E',
            CartanType::F4 => 'F',
            CartanType::G2 => 'G',
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self, CartanType::A(_) | CartanType::D(_) | CartanType::E6 | CartanType::E7 | CartanType::E8)
    }

    /// |W| as an integer (fits u128 for every supported type up to rank 20).
    pub fn weyl_order(&self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match *self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1u128 << n) * fact(n),
            CartanType::D(n) => (1u128 << (n - 1)) * fact(n),
            CartanType::E6 => 51_840,
            CartanType::E7 => 2_903_040,
            CartanType::E8 => 696_729_600,
            CartanType::F4 => 1_152,
            CartanType::G2 => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

/// Parameter function on roots, constant on root lengths. In simply-laced
/// types every root counts as long.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParameterFunction {
    pub k_short: Rational,
    pub k_long: Rational,
}

impl ParameterFunction {
    pub fn new(k_short: Rational, k_long: Rational) -> Self {
        Self { k_short, k_long }
    }

    pub fn equal(k: Rational) -> Self {
        Self { k_short: k.clone(), k_long: k }
    }

    pub fn one() -> Self {
        Self::equal(Rational::one())
    }
}

impl fmt::Display for ParameterFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k=({},{})", self.k_short, self.k_long)
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    ambient: usize,
    simple: Vec<Vec<Rational>>,
    roots: Vec<Vec<Rational>>,
    npos: usize,
    heights: Vec<i64>,
    lookup: HashMap<Vec<Rational>, usize>,
    coweights: Vec<Vec<Rational>>,
    simple_perms: Vec<Perm>,
    long_sq: Rational,
}

pub fn dot(u: &[Rational], v: &[Rational]) -> Rational {
    u.iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
}

pub fn reflect(alpha: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let c = Rational::from_integer(2.into()) * dot(alpha, v) / dot(alpha, alpha);
    v.iter().zip(alpha).map(|(x, a)| x - &c * a).collect()
}

impl RootSystem {
    pub fn build(cartan_type: CartanType) -> Result<Self> {
        let (ambient, simple) = build::simple_roots(cartan_type)?;
        Ok(Self::from_simple_roots(cartan_type, ambient, simple))
    }

    fn from_simple_roots(cartan_type: CartanType, ambient: usize, simple: Vec<Vec<Rational>>) -> Self {
        let n = simple.len();
        let gram = QMatrix::from_fn(n, n, |i, j| dot(&simple[i], &simple[j]));
        let ginv = gram.inverse().expect("simple roots must be independent");
        let coweights: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..ambient)
                    .map(|c| (0..n).fold(Rational::zero(), |acc, k| acc + &ginv[(i, k)] * &simple[k][c]))
                    .collect()
            })
            .collect();
        // closure under simple reflections
        let mut all: Vec<Vec<Rational>> = simple.clone();
        let mut seen: HashMap<Vec<Rational>, ()> = all.iter().map(|r| (r.clone(), ())).collect();
        let mut head = 0;
        while head < all.len() {
            let r = all[head].clone();
            for a in &simple {
                let s = reflect(a, &r);
                if !seen.contains_key(&s) {
                    seen.insert(s.clone(), ());
                    all.push(s);
                }
            }
            head += 1;
        }
        let height = |r: &Vec<Rational>| -> Rational { coweights.iter().map(|w| dot(r, w)).sum() };
        let mut pos: Vec<Vec<Rational>> = all.iter().filter(|r| height(r).is_positive()).cloned().collect();
        pos.sort_by(|a, b| height(a).cmp(&height(b)).then_with(|| simple_coords_cmp(&coweights, a, b)));
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        let heights = roots.iter().map(|r| height(r).to_integer().try_into().unwrap()).collect();
        let lookup: HashMap<Vec<Rational>, usize> = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        let simple_perms = simple
            .iter()
            .map(|a| Perm(roots.iter().map(|r| lookup[&reflect(a, r)] as u16).collect()))
            .collect();
        let long_sq = roots.iter().map(|r| dot(r, r)).max().unwrap();
        Self { cartan_type, ambient, simple, roots, npos, heights, lookup, coweights, simple_perms, long_sq }
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// Dimension of the coordinate space containing V.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn simple_roots(&self) -> &[Vec<Rational>] {
        &self.simple
    }

    pub fn simple_roots_cyclotomic(&self) -> Vec<Vec<CyclotomicNumber>> {
        self.simple.iter().map(|r| r.iter().map(|x| CyclotomicNumber::from_rational(x.clone())).collect()).collect()
    }

    /// All roots: positive roots by increasing height, then their negatives
    /// in the same order.
    pub fn roots(&self) -> &[Vec<Rational>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<Rational>] {
        &self.roots[..self.npos]
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    pub fn root(&self, i: usize) -> &[Rational] {
        &self.roots[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.heights[i]
    }

    pub fn root_index(&self, v: &[Rational]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub fn negative_index(&self, i: usize) -> usize {
        if i < self.npos {
            i + self.npos
        } else {
            i - self.npos
        }
    }

    pub fn is_long(&self, i: usize) -> bool {
        dot(&self.roots[i], &self.roots[i]) == self.long_sq
    }

    pub fn coroot(&self, i: usize) -> Vec<Rational> {
        let r = &self.roots[i];
        let c = Rational::from_integer(2.into()) / dot(r, r);
        r.iter().map(|x| x * &c).collect()
    }

    pub fn k_alpha<'a>(&self, k: &'a ParameterFunction, i: usize) -> &'a Rational {
        if self.is_long(i) {
            &k.k_long
        } else {
            &k.k_short
        }
    }

    /// Cartan matrix a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = Rational::from_integer(2.into()) * dot(&self.simple[i], &self.simple[j]) / dot(&self.simple[i], &self.simple[i]);
                        c.to_integer().try_into().unwrap()
                    })
                    .collect()
            })
            .collect()
    }

    /// Coxeter exponents m(alpha_i, alpha_j).
    pub fn coxeter_matrix(&self) -> Vec<Vec<usize>> {
        let a = self.cartan_matrix();
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            return 1;
                        }
                        match a[i][j] * a[j][i] {
                            0 => 2,
                            1 => 3,
                            2 => 4,
                            3 => 6,
                            x => panic!("not crystallographic: {x}"),
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Vectors omega_i of V with (alpha_j, omega_i) = delta_ij.
    pub fn fundamental_coweights(&self) -> &[Vec<Rational>] {
        &self.coweights
    }

    /// Fundamental weights, dual to the simple coroots.
    pub fn fundamental_weights(&self) -> Vec<Vec<Rational>> {
        self.coweights
            .iter()
            .zip(&self.simple)
            .map(|(w, a)| {
                let c = dot(a, a) / Rational::from_integer(2.into());
                w.iter().map(|x| x * &c).collect()
            })
            .collect()
    }

    pub fn simple_reflection_perms(&self) -> &[Perm] {
        &self.simple_perms
    }

    /// Orthogonal projection of an ambient vector onto V.
    pub fn project_to_v(&self, v: &[Rational]) -> Vec<Rational> {
        let coeffs: Vec<Rational> = self.coweights.iter().map(|w| dot(v, w)).collect();
        (0..self.ambient)
            .map(|c| coeffs.iter().zip(&self.simple).fold(Rational::zero(), |acc, (k, a)| acc + k * &a[c]))
            .collect()
    }

    /// The dominant representative of the W-orbit of a vector of V.
    pub fn dominant(&self, v: &[Rational]) -> Vec<Rational> {
        let mut v = v.to_vec();
        'outer: loop {
            for a in &self.simple {
                if dot(a, &v).is_negative() {
                    v = reflect(a, &v);
                    continue 'outer;
                }
            }
            return v;
        }
    }

    pub fn same_orbit(&self, u: &[Rational], v: &[Rational]) -> bool {
        self.dominant(u) == self.dominant(v)
    }

    /// Word (simple reflection indices) of the reflection in root `i`.
    pub fn reflection_word(&self, i: usize) -> Vec<usize> {
        let i = if i >= self.npos { i - self.npos } else { i };
        if let Some(s) = self.simple.iter().position(|a| *a == self.roots[i]) {
            return vec![s];
        }
        let r = &self.roots[i];
        let s = self.simple.iter().position(|a| dot(a, r).is_positive()).unwrap();
        let lower = self.root_index(&reflect(&self.simple[s], r)).unwrap();
        let mut w = vec![s];
        w.extend(self.reflection_word(lower));
        w.push(s);
        w
    }

    /// Ambient matrix of s_alpha for an arbitrary vector alpha.
    pub fn reflection_matrix(alpha: &[Rational]) -> QMatrix {
        let n = alpha.len();
        QMatrix::from_fn(n, n, |i, j| {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::one();
            reflect(alpha, &e)[i].clone()
        })
    }

    /// Ambient matrix of the Weyl group element given by a root permutation.
    pub fn perm_matrix(&self, p: &Perm) -> QMatrix {
        let w = self.word_of_perm(p);
        self.word_matrix(&w)
    }

    pub fn word_matrix(&self, word: &[usize]) -> QMatrix {
        word.iter().fold(QMatrix::identity(self.ambient), |acc, &s| acc.matmul(&Self::reflection_matrix(&self.simple[s])))
    }

    pub fn word_perm(&self, word: &[usize]) -> Perm {
        word.iter().fold(Perm::identity(self.roots.len()), |acc, &s| acc.compose(&self.simple_perms[s]))
    }

    /// A reduced word for the element acting on roots by `p`.
    pub fn word_of_perm(&self, p: &Perm) -> Vec<usize> {
        // peel off descents on the right: w(alpha_s) < 0 iff l(w s) < l(w)
        let mut cur = p.clone();
        let mut rev = Vec::new();
        loop {
            let Some(s) = (0..self.rank()).find(|&s| cur.apply(s_index(self, s)) >= self.npos) else { break };
            rev.push(s);
            cur = cur.compose(&self.simple_perms[s]);
        }
        rev.reverse();
        rev
    }

    pub fn weyl_group(&self, limit: usize) -> Result<WeylGroup> {
        WeylGroup::new(self.clone(), limit)
    }
}

fn s_index(rs: &RootSystem, s: usize) -> usize {
    rs.lookup[&rs.simple[s]]
}

fn simple_coords_cmp(coweights: &[Vec<Rational>], a: &[Rational], b: &[Rational]) -> std::cmp::Ordering {
    let ca: Vec<Rational> = coweights.iter().map(|w| dot(a, w)).collect();
    let cb: Vec<Rational> = coweights.iter().map(|w| dot(b, w)).collect();
    cb.cmp(&ca)
}

#[cfg(test)]
mod tests;
