use super::ntheory::{cyclotomic_poly, factorize, gcd, lcm, square_part, totient};
use super::{fmt_rational, parse_rational, PrimeField, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, z, ..., z^(phi(N)-1) reduced modulo the N-th cyclotomic polynomial.
#[derive(Clone, Debug)]
pub struct CyclotomicNumber {
    n: u64,
    c: Vec<Rational>,
}

fn reduce(mut v: Vec<Rational>, n: u64) -> Vec<Rational> {
    let phi = cyclotomic_poly(n);
    let deg = phi.len() - 1;
    if v.len() > deg {
        for i in (deg..v.len()).rev() {
            if v[i].is_zero() {
                continue;
            }
            let top = std::mem::replace(&mut v[i], Rational::zero());
            for (j, &pj) in phi.iter().enumerate().take(deg) {
                if pj != 0 {
                    v[i - deg + j] -= &top * Rational::from_integer(BigInt::from(pj));
                }
            }
        }
    }
    v.resize(deg, Rational::zero());
    v
}

/// Sum of `coef * z^e` over pairs, taken modulo `n`, then reduced.
fn from_exponents(pairs: impl IntoIterator<Item = (u64, Rational)>, n: u64) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n as usize];
    for (e, r) in pairs {
        v[(e % n) as usize] += r;
    }
    reduce(v, n)
}

fn solve_rational(cols: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = rhs.len();
    let ncols = cols.len();
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[r].clone()).collect();
            row.push(rhs[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][ncols].clone();
    }
    Some(x)
}

impl CyclotomicNumber {
    pub fn zero() -> Self {
        Self { n: 1, c: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Self { n: 1, c: vec![r] }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(k)))
    }

    /// Builds a value from coordinates in the power basis of zeta_n; longer
    /// inputs are reduced.
    pub fn from_coords(n: u64, coords: Vec<Rational>) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let mut x = Self { n, c: reduce(coords, n) };
        x.normalize();
        x
    }

    /// zeta_n^k.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as u64;
        Self::from_coords(n, from_exponents([(e, Rational::one())], n))
    }

    pub fn zeta(n: u64) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// Sum of integer multiplicities times powers of zeta_n.
    pub fn from_powers(n: u64, mults: &[i64]) -> Self {
        let pairs = mults
            .iter()
            .enumerate()
            .filter(|(_, &m)| m != 0)
            .map(|(j, &m)| (j as u64, Rational::from_integer(BigInt::from(m))));
        Self::from_coords(n, from_exponents(pairs, n))
    }

    pub fn i() -> Self {
        Self::zeta(4)
    }

    pub fn sqrt2() -> Self {
        Self::zeta(8) + Self::zeta_pow(8, -1)
    }

    pub fn sqrt3() -> Self {
        -Self::i() * (Self::zeta(3) - Self::zeta_pow(3, -1))
    }

    /// Principal square root of a squarefree positive integer built from
    /// quadratic Gauss sums.
    fn sqrt_squarefree(m: u64) -> Self {
        let mut out = Self::one();
        for (p, _) in factorize(m) {
            let s = if p == 2 {
                Self::sqrt2()
            } else {
                let mut g = Self::zero();
                for a in 1..p {
                    let leg = super::ntheory::pow_mod(a, (p - 1) / 2, p);
                    let sign = if leg == 1 { 1 } else { -1 };
                    g += Self::zeta_pow(p, a as i64) * Self::from_int(sign);
                }
                if p % 4 == 1 {
                    g
                } else {
                    -Self::i() * g
                }
            };
            out = out * s;
        }
        out
    }

    /// Principal square root of a rational; negative inputs give i*sqrt(|r|).
    pub fn sqrt_rational(r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        let neg = r.is_negative();
        let a = r.abs();
        let num = a.numer().to_u64().expect("numerator too large for sqrt");
        let den = a.denom().to_u64().expect("denominator too large for sqrt");
        let (s, m) = square_part(num * den);
        let root = Self::sqrt_squarefree(m) * Self::from_rational(Rational::new(BigInt::from(s), BigInt::from(den)));
        if neg {
            root * Self::i()
        } else {
            root
        }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coords(&self) -> &[Rational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.c.iter().skip(1).all(|x| x.is_zero())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.c[0].clone())
    }

    /// Integer value, when this is a rational integer.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    fn normalize(&mut self) {
        if self.n > 1 && self.is_rational() {
            self.c.truncate(1);
            self.n = 1;
        }
    }

    /// Re-expresses the value in Q(zeta_m) for a multiple m of the conductor.
    pub fn embed(&self, m: u64) -> Self {
        assert!(m.is_multiple_of(self.n), "conductor {} does not divide {}", self.n, m);
        if m == self.n {
            return self.clone();
        }
        let step = m / self.n;
        let pairs = self.c.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i as u64 * step, x.clone()));
        Self { n: m, c: from_exponents(pairs, m) }
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        let m = lcm(self.n, other.n);
        (self.embed(m), other.embed(m))
    }

    /// The Galois automorphism zeta -> zeta^k, k coprime to the conductor.
    pub fn galois(&self, k: i64) -> Self {
        let k = k.rem_euclid(self.n as i64) as u64;
        assert_eq!(gcd(k.max(1), self.n), 1, "exponent not coprime to conductor");
        let pairs = self.c.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i as u64 * k, x.clone()));
        let mut out = Self { n: self.n, c: from_exponents(pairs, self.n) };
        out.normalize();
        out
    }

    pub fn conj(&self) -> Self {
        if self.n <= 2 {
            return self.clone();
        }
        self.galois(-1)
    }

    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // product of the other conjugates is N(a)/a
        let mut prod = Self::one();
        for k in 2..self.n {
            if gcd(k, self.n) == 1 {
                prod = prod * self.galois(k as i64);
            }
        }
        let norm = (&prod * self).to_rational().expect("norm must be rational");
        Ok(prod * Self::from_rational(norm.recip()))
    }

    pub fn inv(&self) -> Self {
        self.try_inv().expect("inverse of zero")
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.try_inv()?)
    }

    pub fn pow(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.inv() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        let mut out = Self { n: self.n, c: self.c.iter().map(|x| x * r).collect() };
        out.normalize();
        out
    }

    /// Numerical value under zeta_N -> exp(2 pi i / N).
    pub fn to_float(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let v = x.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * k as f64 / self.n as f64;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    fn restrict(&self, d: u64) -> Option<Self> {
        let n = self.n;
        // quick Galois test: fixed by every k = 1 mod d
        let mut k = 1 + d;
        while k < n {
            if gcd(k, n) == 1 && self.galois(k as i64) != *self {
                return None;
            }
            k += d;
        }
        let step = n / d;
        let cols: Vec<Vec<Rational>> = (0..totient(d))
            .map(|j| from_exponents([(j * step, Rational::one())], n))
            .collect();
        let x = solve_rational(&cols, &self.c)?;
        let mut out = Self { n: d, c: x };
        out.normalize();
        Some(out)
    }

    /// The same value written over the smallest possible conductor.
    pub fn canonical(&self) -> Self {
        let mut cur = self.clone();
        cur.normalize();
        'outer: loop {
            if cur.n == 1 {
                return cur;
            }
            for (p, _) in factorize(cur.n) {
                if let Some(r) = cur.restrict(cur.n / p) {
                    cur = r;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Image under the ring map sending zeta_N to the chosen N-th root of
    /// unity of the prime field.
    pub fn to_mod_p(&self, f: &PrimeField) -> u64 {
        let z = f.root_of_unity(self.n);
        let mut acc = 0u64;
        let mut zp = 1u64;
        for x in &self.c {
            if !x.is_zero() {
                acc = f.add(acc, f.mul(f.from_rational(x), zp));
            }
            zp = f.mul(zp, z);
        }
        acc
    }

    /// Total order compatible with equality, driven by the numerical value.
    pub fn cmp_canonical(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (a, b) = (self.to_float(), other.to_float());
        let tol = 1e-9;
        if (a.0 - b.0).abs() > tol {
            return a.0.partial_cmp(&b.0).unwrap();
        }
        if (a.1 - b.1).abs() > tol {
            return a.1.partial_cmp(&b.1).unwrap();
        }
        let (x, y) = (self.canonical(), other.canonical());
        x.n.cmp(&y.n).then_with(|| x.c.cmp(&y.c))
    }

    /// Serialization `c0 + c1*z + c2*z^2@N` over the minimal conductor.
    pub fn serialize(&self) -> String {
        let x = self.canonical();
        let terms: Vec<String> = x
            .c
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                1 => format!("{}*z", fmt_rational(c)),
                _ => format!("{}*z^{}", fmt_rational(c), k),
            })
            .collect();
        let body = if terms.is_empty() { "0".to_string() } else { terms.join(" + ") };
        format!("{}@{}", body, x.n)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("cannot parse cyclotomic number {s:?}"));
        let (body, n) = s.rsplit_once('@').ok_or_else(bad)?;
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        let mut pairs = Vec::new();
        for term in body.split(" + ") {
            let term = term.trim();
            let (coef, exp) = match term.split_once("*z") {
                None => (term, 0),
                Some((c, "")) => (c, 1),
                Some((c, e)) => (c, e.strip_prefix('^').and_then(|e| e.parse().ok()).ok_or_else(bad)?),
            };
            pairs.push((exp, parse_rational(coef).ok_or_else(bad)?));
        }
        Ok(Self::from_coords(n, from_exponents(pairs, n)))
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.c == other.c;
        }
        if self.is_rational() && other.is_rational() {
            return self.c[0] == other.c[0];
        }
        let (a, b) = self.unify(other);
        a.c == b.c
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl From<Rational> for CyclotomicNumber {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for CyclotomicNumber {
    fn from(k: i64) -> Self {
        Self::from_int(k)
    }
}

fn add_impl(a: &CyclotomicNumber, b: &CyclotomicNumber, sign: bool) -> CyclotomicNumber {
    let combine = |x: &Rational, y: &Rational| if sign { x + y } else { x - y };
    let mut out = if a.n == b.n {
        CyclotomicNumber { n: a.n, c: a.c.iter().zip(&b.c).map(|(x, y)| combine(x, y)).collect() }
    } else if b.n == 1 {
        let mut c = a.c.clone();
        c[0] = combine(&c[0], &b.c[0]);
        CyclotomicNumber { n: a.n, c }
    } else if a.n == 1 {
        let mut c: Vec<Rational> = if sign { b.c.clone() } else { b.c.iter().map(|x| -x).collect() };
        c[0] += &a.c[0];
        CyclotomicNumber { n: b.n, c }
    } else {
        let (x, y) = a.unify(b);
        return add_impl(&x, &y, sign);
    };
    out.normalize();
    out
}

fn mul_impl(a: &CyclotomicNumber, b: &CyclotomicNumber) -> CyclotomicNumber {
    if b.n == 1 {
        return a.scale(&b.c[0]);
    }
    if a.n == 1 {
        return b.scale(&a.c[0]);
    }
    if a.n != b.n {
        let (x, y) = a.unify(b);
        return mul_impl(&x, &y);
    }
    let len = a.c.len();
    let mut v = vec![Rational::zero(); 2 * len - 1];
    for (i, x) in a.c.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.c.iter().enumerate() {
            if !y.is_zero() {
                v[i + j] += x * y;
            }
        }
    }
    let mut out = CyclotomicNumber { n: a.n, c: reduce(v, a.n) };
    out.normalize();
    out
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber { n: self.n, c: self.c.into_iter().map(|x| -x).collect() }
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -self.clone()
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                $body(self, rhs)
            }
        }
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                $body(&self, &rhs)
            }
        }
        impl $tr<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                $body(&self, rhs)
            }
        }
        impl $tr<CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                $body(self, &rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| add_impl(a, b, true));
binop!(Sub, sub, |a, b| add_impl(a, b, false));
binop!(Mul, mul, mul_impl);
binop!(Div, div, |a: &CyclotomicNumber, b: &CyclotomicNumber| a.try_div(b).expect("division by zero"));

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = add_impl(self, rhs, true);
    }
}

impl AddAssign for CyclotomicNumber {
    fn add_assign(&mut self, rhs: CyclotomicNumber) {
        *self = add_impl(self, &rhs, true);
    }
}

impl SubAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn sub_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = add_impl(self, rhs, false);
    }
}

impl MulAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn mul_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = mul_impl(self, rhs);
    }
}

impl Zero for CyclotomicNumber {
    fn zero() -> Self {
        CyclotomicNumber::zero()
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
}

impl One for CyclotomicNumber {
    fn one() -> Self {
        CyclotomicNumber::one()
    }
}

impl std::iter::Sum for CyclotomicNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for CyclotomicNumber {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use proptest::prelude::*;

    type C = CyclotomicNumber;

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
    }

    #[test]
    fn defining_relations() {
        assert_eq!(C::sqrt2() * C::sqrt2(), C::from_int(2));
        assert_eq!(C::sqrt3() * C::sqrt3(), C::from_int(3));
        assert_eq!(C::i() * C::i(), C::from_int(-1));
        assert_eq!(C::zeta(24).pow(24), C::one());
        assert_ne!(C::zeta(24).pow(12), C::one());
    }

    #[test]
    fn difference_of_squares() {
        let a = C::sqrt2() + C::sqrt3();
        let b = C::sqrt2() - C::sqrt3();
        assert_eq!(a * b, C::from_int(-1));
    }

    #[test]
    fn floats() {
        assert!(close(C::sqrt2().to_float(), (2f64.sqrt(), 0.0)));
        assert!(close(C::from_int(-1).to_float(), (-1.0, 0.0)));
        let h = 0.5f64.sqrt();
        assert!(close(C::zeta(8).to_float(), (h, h)));
        assert!(close(C::sqrt3().to_float(), (3f64.sqrt(), 0.0)));
    }

    #[test]
    fn gauss_sum_roots() {
        for n in [2i64, 3, 5, 6, 7, 10, 15, 30, 8, 12] {
            let r = C::sqrt_rational(&rat(n, 1));
            assert_eq!(&r * &r, C::from_int(n));
            assert!(close(r.to_float(), ((n as f64).sqrt(), 0.0)), "sqrt {n}");
        }
        let r = C::sqrt_rational(&rat(3, 8));
        assert_eq!(&r * &r, C::from_rational(rat(3, 8)));
        let r = C::sqrt_rational(&rat(-3, 1));
        assert!(close(r.to_float(), (0.0, 3f64.sqrt())));
    }

    #[test]
    fn canonical_conductor() {
        let x = C::sqrt2().embed(24);
        assert_eq!(x.conductor(), 24);
        assert_eq!(x.canonical().conductor(), 8);
        let y = C::zeta(3).embed(6 * 4);
        assert_eq!(y.canonical().conductor(), 3);
        assert_eq!(C::zeta(6).canonical().conductor(), 3);
        assert_eq!(C::sqrt3().canonical().conductor(), 12);
    }

    #[test]
    fn serialization_round_trip() {
        for x in [C::sqrt2(), C::zeta(5) * C::from_rational(rat(-3, 7)), C::from_int(4), C::zero(), C::sqrt3() + C::i()] {
            let s = x.serialize();
            assert_eq!(C::parse(&s).unwrap(), x, "{s}");
        }
        assert_eq!(C::from_int(-2).serialize(), "-2@1");
        assert_eq!(C::zeta(4).serialize(), "1*z@4");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(C::one().try_div(&C::zero()), Err(Error::DivisionByZero)));
    }

    #[test]
    fn modular_image_is_a_ring_map() {
        let f = PrimeField::with_roots_of_unity(24, 1000);
        let a = C::sqrt2() + C::zeta(3);
        let b = C::sqrt3() - C::i();
        let lhs = (&a * &b).to_mod_p(&f);
        assert_eq!(lhs, f.mul(a.to_mod_p(&f), b.to_mod_p(&f)));
        assert_eq!(f.mul(C::sqrt2().to_mod_p(&f), C::sqrt2().to_mod_p(&f)), 2);
    }

    fn arb_cyc() -> impl Strategy<Value = C> {
        (prop::sample::select(vec![1u64, 3, 4, 5, 8, 12, 15, 24]), prop::collection::vec(-6i64..6, 8), 1i64..4).prop_map(
            |(n, v, d)| {
                let coords = v.iter().map(|&k| rat(k, d)).collect();
                C::from_coords(n, coords)
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn field_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a + &b, &b + &a);
            if !a.is_zero() {
                prop_assert_eq!(&a * a.inv(), C::one());
            }
        }

        #[test]
        fn unification_is_coherent(a in arb_cyc(), b in arb_cyc()) {
            let m = lcm(a.conductor(), b.conductor()) * 2;
            let direct = &a * &b + &a;
            let lifted = &a.embed(m) * &b.embed(m) + a.embed(m);
            prop_assert_eq!(direct, lifted);
        }

        #[test]
        fn conjugation_is_an_involutive_automorphism(a in arb_cyc(), b in arb_cyc(), r in -5i64..5) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
            prop_assert_eq!((&a + &b).conj(), a.conj() + b.conj());
            prop_assert_eq!(C::from_int(r).conj(), C::from_int(r));
        }

        #[test]
        fn embedding_round_trip(a in arb_cyc()) {
            let big = a.embed(a.conductor() * 6);
            prop_assert_eq!(big.canonical(), a.canonical());
            prop_assert_eq!(big, a);
        }
    }
}
