use super::ntheory::{factorize, is_prime, pow_mod};
use super::Rational;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

/// The field Z/pZ together with a fixed primitive root, which pins the ring
/// map Q(zeta_N) -> F_p used for every reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    pub p: u64,
    pub g: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Self {
        assert!(is_prime(p), "{p} is not prime");
        assert!(p < (1 << 28), "prime too large for matrix kernels");
        let fac = factorize(p - 1);
        let g = (2..p)
            .find(|&g| fac.iter().all(|&(q, _)| pow_mod(g, (p - 1) / q, p) != 1))
            .unwrap_or(1);
        Self { p, g }
    }

    /// Smallest prime `p > lower` with `p = 1 mod m`.
    pub fn with_roots_of_unity(m: u64, lower: u64) -> Self {
        let mut p = (lower / m + 1) * m + 1;
        while !is_prime(p) {
            p += m;
        }
        Self::new(p)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, a: u64, e: u64) -> u64 {
        pow_mod(a, e, self.p)
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero mod {}", self.p);
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn from_i64(&self, a: i64) -> u64 {
        a.rem_euclid(self.p as i64) as u64
    }

    fn from_bigint(&self, a: &BigInt) -> u64 {
        let r = a.abs() % BigInt::from(self.p);
        let r = r.to_u64().unwrap();
        if a.is_negative() {
            self.neg(r)
        } else {
            r
        }
    }

    pub fn from_rational(&self, r: &Rational) -> u64 {
        let n = self.from_bigint(r.numer());
        let d = self.from_bigint(r.denom());
        self.mul(n, self.inv(d))
    }

    /// The image of zeta_n: g^((p-1)/n).
    pub fn root_of_unity(&self, n: u64) -> u64 {
        assert!((self.p - 1).is_multiple_of(n), "F_{} has no primitive {}-th root of unity", self.p, n);
        self.pow(self.g, (self.p - 1) / n)
    }

    /// Symmetric lift into (-p/2, p/2].
    pub fn lift(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }

    /// Distinct roots in F_p of a polynomial given lowest degree first,
    /// in increasing order (Cantor-Zassenhaus).
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        let f = self.poly_trim(poly.to_vec());
        if f.len() <= 1 {
            return Vec::new();
        }
        let xp = self.poly_powmod(&[0, 1], self.p, &f);
        let mut xpx = xp;
        xpx.resize(xpx.len().max(2), 0);
        xpx[1] = self.sub(xpx[1], 1);
        let g = self.poly_gcd(f, self.poly_trim(xpx));
        let mut out = Vec::new();
        self.split(g, 1, &mut out);
        out.sort_unstable();
        out
    }

    fn split(&self, f: Vec<u64>, mut a: u64, out: &mut Vec<u64>) {
        match f.len() {
            0 | 1 => {}
            2 => out.push(self.mul(self.neg(f[0]), self.inv(f[1]))),
            _ => loop {
                let mut h = self.poly_powmod(&[a, 1], (self.p - 1) / 2, &f);
                h.resize(h.len().max(1), 0);
                h[0] = self.sub(h[0], 1);
                let d = self.poly_gcd(f.clone(), self.poly_trim(h));
                a += 1;
                if d.len() > 1 && d.len() < f.len() {
                    let (q, _) = self.poly_divrem(&f, &d);
                    self.split(d, a, out);
                    self.split(q, a, out);
                    return;
                }
            },
        }
    }

    fn poly_trim(&self, mut f: Vec<u64>) -> Vec<u64> {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    fn poly_divrem(&self, f: &[u64], g: &[u64]) -> (Vec<u64>, Vec<u64>) {
        let mut r = f.to_vec();
        let dg = g.len() - 1;
        let lead = self.inv(g[dg]);
        if r.len() < g.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![0; r.len() - dg];
        for i in (0..q.len()).rev() {
            let c = self.mul(r[i + dg], lead);
            q[i] = c;
            if c != 0 {
                for j in 0..=dg {
                    r[i + j] = self.sub(r[i + j], self.mul(c, g[j]));
                }
            }
        }
        r.truncate(dg);
        (q, self.poly_trim(r))
    }

    fn poly_mulmod(&self, a: &[u64], b: &[u64], m: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut prod = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = self.add(prod[i + j], self.mul(x, y));
            }
        }
        self.poly_divrem(&prod, m).1
    }

    fn poly_powmod(&self, base: &[u64], mut e: u64, m: &[u64]) -> Vec<u64> {
        let mut acc = self.poly_divrem(&[1], m).1;
        let mut b = self.poly_divrem(base, m).1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mulmod(&acc, &b, m);
            }
            b = self.poly_mulmod(&b, &b, m);
            e >>= 1;
        }
        acc
    }

    fn poly_gcd(&self, mut a: Vec<u64>, mut b: Vec<u64>) -> Vec<u64> {
        while !b.is_empty() {
            let r = self.poly_divrem(&a, &b).1;
            a = b;
            b = r;
        }
        if let Some(&l) = a.last() {
            let li = self.inv(l);
            a.iter_mut().for_each(|x| *x = self.mul(*x, li));
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_search() {
        let f = PrimeField::with_roots_of_unity(24, 100);
        assert_eq!(f.p, 193);
        let z = f.root_of_unity(24);
        assert_eq!(f.pow(z, 24), 1);
        assert_ne!(f.pow(z, 12), 1);
        assert_ne!(f.pow(z, 8), 1);
    }

    #[test]
    fn roots_of_split_polynomials() {
        let f = PrimeField::new(10007);
        // (x-3)(x-5)^2(x-9000)(x^2+1) has x^2+1 irreducible since 10007 = 3 mod 4
        let mut poly = vec![1u64];
        for factor in [vec![f.neg(3), 1], vec![f.neg(5), 1], vec![f.neg(5), 1], vec![f.neg(9000), 1], vec![1, 0, 1]] {
            let mut next = vec![0u64; poly.len() + factor.len() - 1];
            for (i, &a) in poly.iter().enumerate() {
                for (j, &b) in factor.iter().enumerate() {
                    next[i + j] = f.add(next[i + j], f.mul(a, b));
                }
            }
            poly = next;
        }
        assert_eq!(f.roots(&poly), vec![3, 5, 9000]);
        assert_eq!(f.roots(&[0, 0, 1]), vec![0]);
        assert!(f.roots(&[7]).is_empty());
    }
}
