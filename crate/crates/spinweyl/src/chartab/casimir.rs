use crate::clifford::{root_norm, FastCover};
use crate::error::{Error, Result};
use crate::rootsystem::ParameterFunction;
use crate::scalars::{CyclotomicNumber, Rational};
use std::fmt;

/// A quadratic form `ss k_s^2 + sl k_s k_l + ll k_l^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CasimirScalar {
    pub ss: CyclotomicNumber,
    pub sl: CyclotomicNumber,
    pub ll: CyclotomicNumber,
}

impl CasimirScalar {
    pub fn zero() -> Self {
        Self { ss: CyclotomicNumber::zero(), sl: CyclotomicNumber::zero(), ll: CyclotomicNumber::zero() }
    }

    pub fn from_rationals(ss: Rational, sl: Rational, ll: Rational) -> Self {
        Self { ss: ss.into(), sl: sl.into(), ll: ll.into() }
    }

    pub fn eval(&self, k: &ParameterFunction) -> CyclotomicNumber {
        let ks = CyclotomicNumber::from(k.k_short.clone());
        let kl = CyclotomicNumber::from(k.k_long.clone());
        &(&self.ss * &ks) * &ks + &(&(&self.sl * &ks) * &kl) + &(&self.ll * &kl) * &kl
    }

    /// Coefficients as rationals, when they are.
    pub fn to_rationals(&self) -> Option<[Rational; 3]> {
        Some([self.ss.to_rational()?, self.sl.to_rational()?, self.ll.to_rational()?])
    }
}

impl fmt::Display for CasimirScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*ks^2 + ({})*ks*kl + ({})*kl^2", self.ss, self.sl, self.ll)
    }
}

/// Scalar by which `z (sum_a k_a |a^vee| s_a)^2` acts on a W~-irrep with
/// character `chi` (values over the classes of the cover), the sum over
/// positive roots with `s_a` the lift `a/|a|` and `|a^vee| = 2/|a|`.
///
/// Roots and the V-action of H share one Euclidean space here, so the
/// length that enters is the coroot length; with it the value on every
/// constituent of X (x) S is 4 (nu, nu) for a one-W-type module X.
pub fn casimir_polynomial(cover: &FastCover, chi: &[CyclotomicNumber]) -> Result<CasimirScalar> {
    let rs = cover.root_system();
    let classes = cover.classes();
    if chi.len() != classes.len() {
        return Err(Error::DimensionMismatch("character length differs from class count".into()));
    }
    let npos = rs.num_positive();
    let lifts: Vec<usize> = (0..npos).map(|i| cover.reflection_lift_index(i)).collect::<Result<_>>()?;
    let norms: Vec<CyclotomicNumber> = (0..npos).map(|i| root_norm(rs.root(i)).inv().scale(&Rational::from_integer(2.into()))).collect();
    let group = cover.group();
    let z = cover.z_index();
    let mut out = CasimirScalar::zero();
    for a in 0..npos {
        let za = group.mul(z, lifts[a]);
        for b in 0..npos {
            let c = classes.class_of[group.mul(za, lifts[b])] as usize;
            let term = &(&norms[a] * &norms[b]) * &chi[c];
            let slot = match (rs.is_long(a), rs.is_long(b)) {
                (false, false) => &mut out.ss,
                (true, true) => &mut out.ll,
                _ => &mut out.sl,
            };
            *slot += term;
        }
    }
    let deg = chi[0].to_rational().ok_or_else(|| Error::Internal("degree is not rational".into()))?;
    let inv = Rational::from_integer(1.into()) / deg;
    for slot in [&mut out.ss, &mut out.sl, &mut out.ll] {
        *slot = slot.scale(&inv).canonical();
    }
    Ok(out)
}
