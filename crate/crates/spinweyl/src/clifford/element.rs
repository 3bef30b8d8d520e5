use crate::scalars::{CyclotomicNumber, Rational};
use std::collections::BTreeMap;
use std::fmt;

/// An element of the Clifford algebra of R^N with the relations
/// e_i e_j + e_j e_i = -2 delta_ij, stored on the monomial basis
/// e_{i1} ... e_{ik} (i1 < ... < ik), monomials encoded as bit masks.
#[derive(Clone, Debug, PartialEq)]
pub struct CliffordElement {
    dim: usize,
    terms: BTreeMap<u32, CyclotomicNumber>,
}

/// Sign of e_A e_B relative to e_{A xor B}.
pub fn monomial_sign(a: u32, b: u32) -> i64 {
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    swaps += (a & b).count_ones();
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl CliffordElement {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 16, "Clifford algebras up to dimension 16");
        Self { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: CyclotomicNumber) -> Self {
        let mut x = Self::zero(dim);
        x.add_term(0, c);
        x
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, CyclotomicNumber::one())
    }

    /// The basis vector e_i.
    pub fn basis(dim: usize, i: usize) -> Self {
        Self::monomial(dim, 1 << i, CyclotomicNumber::one())
    }

    pub fn monomial(dim: usize, mask: u32, c: CyclotomicNumber) -> Self {
        let mut x = Self::zero(dim);
        x.add_term(mask, c);
        x
    }

    pub fn from_vector(v: &[CyclotomicNumber]) -> Self {
        let mut x = Self::zero(v.len());
        for (i, c) in v.iter().enumerate() {
            x.add_term(1 << i, c.clone());
        }
        x
    }

    pub fn from_rational_vector(v: &[Rational]) -> Self {
        Self::from_vector(&v.iter().map(|r| CyclotomicNumber::from_rational(r.clone())).collect::<Vec<_>>())
    }

    fn add_term(&mut self, mask: u32, c: CyclotomicNumber) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(x) => {
                *x += &c;
                if x.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &CyclotomicNumber)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn coefficient(&self, mask: u32) -> CyclotomicNumber {
        self.terms.get(&mask).cloned().unwrap_or_else(CyclotomicNumber::zero)
    }

    pub fn scalar_part(&self) -> CyclotomicNumber {
        self.coefficient(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    pub fn is_odd(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 1)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_even() || self.is_odd()
    }

    fn check_dim(&self, o: &Self) {
        assert_eq!(self.dim, o.dim, "Clifford elements over different spaces");
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_dim(o);
        let mut out = Self::zero(self.dim);
        for (&a, x) in &self.terms {
            for (&b, y) in &o.terms {
                let c = x * y;
                out.add_term(a ^ b, if monomial_sign(a, b) == 1 { c } else { -c });
            }
        }
        out
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_dim(o);
        let mut out = self.clone();
        for (&m, c) in &o.terms {
            out.add_term(m, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&CyclotomicNumber::from_int(-1))
    }

    pub fn scale(&self, c: &CyclotomicNumber) -> Self {
        let mut out = Self::zero(self.dim);
        for (&m, x) in &self.terms {
            out.add_term(m, x * c);
        }
        out
    }

    fn map_by_degree(&self, f: impl Fn(u32) -> bool) -> Self {
        let mut out = Self::zero(self.dim);
        for (&m, x) in &self.terms {
            out.add_term(m, if f(m.count_ones()) { -x.clone() } else { x.clone() });
        }
        out
    }

    /// The grading automorphism: +1 on even, -1 on odd elements.
    pub fn epsilon(&self) -> Self {
        self.map_by_degree(|k| k % 2 == 1)
    }

    /// The anti-involution extending v -> -v.
    pub fn transpose(&self) -> Self {
        // (e_A)^t = (-1)^k (-1)^{k(k-1)/2} e_A
        self.map_by_degree(|k| (k + k * (k.max(1) - 1) / 2) % 2 == 1)
    }

    /// Complex conjugation of the coefficients.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (&m, x) in &self.terms {
            out.add_term(m, x.conj());
        }
        out
    }

    /// Coefficient vector when the element is a pure vector.
    pub fn as_vector(&self) -> Option<Vec<CyclotomicNumber>> {
        if self.terms.keys().any(|m| m.count_ones() != 1) {
            return None;
        }
        Some((0..self.dim).map(|i| self.coefficient(1 << i)).collect())
    }

    /// Bilinear pairing in which distinct monomials are orthogonal and each
    /// monomial has norm one.
    pub fn pairing(&self, o: &Self) -> CyclotomicNumber {
        self.terms.iter().filter_map(|(m, x)| o.terms.get(m).map(|y| x * y)).sum()
    }
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&m, c)| {
                let idx: Vec<String> = (0..self.dim).filter(|i| m >> i & 1 == 1).map(|i| format!("e{}", i + 1)).collect();
                if idx.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", idx.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
