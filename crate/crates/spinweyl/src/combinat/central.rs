use super::Partition;
use crate::rootsystem::{ParameterFunction, RootSystem};
use crate::scalars::{fmt_rational, Rational};
use num_traits::{Signed, Zero};
use std::fmt;

/// `ks * k_s + kl * k_l` with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Linear {
    pub ks: Rational,
    pub kl: Rational,
}

impl Linear {
    pub fn new(ks: Rational, kl: Rational) -> Self {
        Self { ks, kl }
    }

    pub fn eval(&self, k: &ParameterFunction) -> Rational {
        &self.ks * &k.k_short + &self.kl * &k.k_long
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.ks.is_zero(), self.kl.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}*ks", fmt_rational(&self.ks)),
            (true, false) => write!(f, "{}*kl", fmt_rational(&self.kl)),
            _ => write!(f, "{}*ks{}{}*kl", fmt_rational(&self.ks), if self.kl.is_negative() { "" } else { "+" }, fmt_rational(&self.kl)),
        }
    }
}

/// A vector in V whose entries are linear in (k_s, k_l); it stands for its
/// W-orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacter {
    pub entries: Vec<Linear>,
}

impl CentralCharacter {
    pub fn eval(&self, k: &ParameterFunction) -> Vec<Rational> {
        self.entries.iter().map(|e| e.eval(k)).collect()
    }

    /// (nu, nu) in the standard form of the ambient space, as the
    /// coefficients of k_s^2, k_s k_l, k_l^2.
    pub fn norm_squared(&self) -> [Rational; 3] {
        let mut out = [Rational::zero(), Rational::zero(), Rational::zero()];
        for e in &self.entries {
            out[0] += &e.ks * &e.ks;
            out[1] += Rational::from_integer(2.into()) * &e.ks * &e.kl;
            out[2] += &e.kl * &e.kl;
        }
        out
    }

    /// W(B_n)-orbit representative at the given parameters: absolute values
    /// in decreasing order.
    pub fn bn_orbit(&self, k: &ParameterFunction) -> Vec<Rational> {
        let mut v: Vec<Rational> = self.eval(k).into_iter().map(|x| x.abs()).collect();
        v.sort_by(|a, b| b.cmp(a));
        v
    }

    pub fn same_bn_orbit(&self, other: &Self, k: &ParameterFunction) -> bool {
        self.bn_orbit(k) == other.bn_orbit(k)
    }

    /// Orbit equality under the Weyl group of `rs` (vectors in its ambient
    /// coordinates).
    pub fn same_orbit(&self, other: &Self, rs: &RootSystem, k: &ParameterFunction) -> bool {
        rs.same_orbit(&self.eval(k), &other.eval(k))
    }
}

impl fmt::Display for CentralCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", s.join(", "))
    }
}

/// Boxes of lambda labelled k_s in the corner, +k_l along rows and -k_l
/// down columns; the labels read row by row give a vector in R^n.
pub fn central_character_tableau(lambda: &Partition) -> CentralCharacter {
    let entries = lambda
        .contents()
        .into_iter()
        .map(|c| Linear::new(Rational::from_integer(1.into()), Rational::from_integer(c.into())))
        .collect();
    CentralCharacter { entries }
}
