//! Dense exact linear algebra over rationals and cyclotomic fields.

use crate::scalars::{CyclotomicNumber, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Self;
    fn from_i64(k: i64) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_i64(k: i64) -> Self {
        Rational::from_integer(BigInt::from(k))
    }
}

impl Field for CyclotomicNumber {
    fn zero() -> Self {
        CyclotomicNumber::zero()
    }
    fn one() -> Self {
        CyclotomicNumber::one()
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Self {
        CyclotomicNumber::inv(self)
    }
    fn from_i64(k: i64) -> Self {
        CyclotomicNumber::from_int(k)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type QMatrix = Matrix<Rational>;
pub type CMatrix = Matrix<CyclotomicNumber>;

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &T) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_cols(cols: &[Vec<T>]) -> Self {
        let c = cols.len();
        let r = cols.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add(&self[(i, i)]))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn matmul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "matrix product dimension mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(T::zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc.add(&a.mul(b)) }))
            .collect()
    }

    pub fn kron(&self, o: &Self) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self[(i / o.rows, j / o.cols)].mul(&o[(i % o.rows, j % o.cols)])
        })
    }

    pub fn commutator(&self, o: &Self) -> Self {
        &self.matmul(o) - &o.matmul(self)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::identity(self.rows), |acc, _| acc.matmul(self))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let t = f.mul(&m[(r, j)]);
                        if !t.is_zero() {
                            m[(i, j)] = m[(i, j)].sub(&t);
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space {v : M v = 0}.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = r[(i, f)].neg();
                }
                v
            })
            .collect()
    }

    /// A basis of the column space, taken from the pivot columns.
    pub fn column_space(&self) -> Vec<Vec<T>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&c| self.col(c)).collect()
    }

    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = T::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// Solves `self * X = b` for `X`, when a solution exists.
    pub fn solve(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows);
        let n = self.cols;
        let mut aug = Self::zeros(self.rows, n + b.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..b.cols {
                aug[(i, n + j)] = b[(i, j)].clone();
            }
        }
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Self::zeros(n, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = r[(i, n + j)].clone();
            }
        }
        Some(x)
    }

    /// Matrix of the restriction of `self` to an invariant subspace spanned
    /// by the given columns.
    pub fn restrict_to(&self, basis: &[Vec<T>]) -> Option<Self> {
        let b = Self::from_cols(basis);
        b.solve(&self.matmul(&b))
    }

    /// Intersection of the spans of two families of vectors.
    pub fn intersect(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut cols: Vec<Vec<T>> = a.to_vec();
        cols.extend(b.iter().map(|v| v.iter().map(|x| x.neg()).collect()));
        let m = Self::from_cols(&cols);
        let ker = m.kernel();
        let am = Self::from_cols(a);
        let vecs: Vec<Vec<T>> = ker.iter().map(|k| am.apply(&k[..a.len()])).collect();
        if vecs.is_empty() {
            return vecs;
        }
        Self::from_cols(&vecs).column_space()
    }

    /// Characteristic polynomial det(xI - M), lowest degree first, by the
    /// division-free Berkowitz recursion.
    pub fn charpoly(&self) -> Vec<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut poly = vec![T::one()];
        for k in 0..n {
            // leading (k+1)x(k+1) block: a = M[k][k], r = M[k][0..k], c = M[0..k][k], A = M[0..k][0..k]
            let a = self[(k, k)].clone();
            let r: Vec<T> = (0..k).map(|j| self[(k, j)].clone()).collect();
            let mut c: Vec<T> = (0..k).map(|i| self[(i, k)].clone()).collect();
            // Toeplitz column: 1, -a, -r c, -r A c, ...
            let mut t = vec![T::one(), a.neg()];
            for _ in 0..k {
                let rc = r.iter().zip(&c).fold(T::zero(), |acc, (x, y)| acc.add(&x.mul(y)));
                t.push(rc.neg());
                c = (0..k).map(|i| (0..k).fold(T::zero(), |acc, j| acc.add(&self[(i, j)].mul(&c[j])))).collect();
            }
            // new poly (highest degree first) = Toeplitz(t) * old poly (highest first)
            let old: Vec<T> = poly.iter().rev().cloned().collect();
            let mut new = vec![T::zero(); k + 2];
            for (i, slot) in new.iter_mut().enumerate() {
                for (j, o) in old.iter().enumerate() {
                    if i >= j && i - j < t.len() {
                        *slot = slot.add(&t[i - j].mul(o));
                    }
                }
            }
            poly = new.into_iter().rev().collect();
        }
        poly
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Field> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.add(b)).collect() }
    }
}

impl<T: Field> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a.sub(b)).collect() }
    }
}

impl<T: Field> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, o: &Matrix<T>) -> Matrix<T> {
        self.matmul(o)
    }
}

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| x.neg())
    }
}

pub fn to_cyclotomic(m: &QMatrix) -> CMatrix {
    m.map(|x| CyclotomicNumber::from_rational(x.clone()))
}

/// Rational roots of a polynomial with rational coefficients (lowest degree
/// first), with multiplicity. Roots are located numerically, largest first,
/// and only kept once they divide the polynomial exactly; the search stops
/// at the first root that is not rational.
pub fn rational_roots(poly: &[Rational]) -> Vec<Rational> {
    let mut p: Vec<Rational> = poly.to_vec();
    while p.len() > 1 && Zero::is_zero(p.last().unwrap()) {
        p.pop();
    }
    let mut roots = Vec::new();
    while p.len() > 1 && Zero::is_zero(&p[0]) {
        roots.push(<Rational as Zero>::zero());
        p.remove(0);
    }
    let mut cur = p;
    while cur.len() > 1 {
        let Some(r) = largest_real_root(&cur).and_then(|x| rationalize(&cur, x)) else { break };
        loop {
            let (q, rem) = synthetic_division(&cur, &r);
            if !Zero::is_zero(&rem) {
                break;
            }
            roots.push(r.clone());
            cur = q;
            if cur.len() <= 1 {
                break;
            }
        }
    }
    roots
}

fn horner(p: &[Rational], x: &Rational) -> (Rational, Rational) {
    let (mut f, mut df) = (<Rational as Zero>::zero(), <Rational as Zero>::zero());
    for c in p.iter().rev() {
        df = &df * x + &f;
        f = &f * x + c;
    }
    (f, df)
}

/// Newton's method from above the Fujiwara bound, in exact arithmetic with
/// iterates rounded to multiples of 2^-80. For a polynomial with only real
/// roots the iterates decrease monotonically to the largest root.
fn largest_real_root(p: &[Rational]) -> Option<Rational> {
    use num_traits::ToPrimitive;
    let n = p.len() - 1;
    let lead = p.last()?;
    let bound = (1..=n).map(|i| (&p[n - i] / lead).to_f64().map(|a| a.abs().powf(1.0 / i as f64))).collect::<Option<Vec<f64>>>()?.into_iter().fold(0.0, f64::max);
    let scale: BigInt = BigInt::one() << 80usize;
    let round = |x: Rational| Rational::new((x * Rational::from_integer(scale.clone())).floor().to_integer(), scale.clone());
    let mut x = Rational::from_integer(BigInt::from((2.0 * bound).ceil() as i64 + 1));
    let tol = Rational::new(BigInt::one(), BigInt::one() << 60usize);
    for _ in 0..5_000 {
        let (f, df) = horner(p, &x);
        if Zero::is_zero(&f) || Zero::is_zero(&df) {
            break;
        }
        let step = f / df;
        x = round(&x - &step);
        if num_traits::Signed::abs(&step) < tol {
            break;
        }
    }
    Some(x)
}

/// The first continued fraction convergent of x that is an exact root.
fn rationalize(p: &[Rational], x: Rational) -> Option<Rational> {
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut y = x;
    let limit = BigInt::from(1_000_000_000_000i64);
    loop {
        let a = y.floor().to_integer();
        (h0, h1) = (h1.clone(), &a * &h1 + &h0);
        (k0, k1) = (k1.clone(), &a * &k1 + &k0);
        let r = Rational::new(h1.clone(), k1.clone());
        if Zero::is_zero(&synthetic_division(p, &r).1) {
            return Some(r);
        }
        let frac = &y - Rational::from_integer(a);
        if Zero::is_zero(&frac) || k1 > limit {
            return None;
        }
        y = frac.recip();
    }
}

fn synthetic_division(p: &[Rational], c: &Rational) -> (Vec<Rational>, Rational) {
    let n = p.len();
    let mut q = vec![<Rational as Zero>::zero(); n - 1];
    let mut acc = <Rational as Zero>::zero();
    for i in (0..n).rev() {
        acc = &acc * c + &p[i];
        if i > 0 {
            q[i - 1] = acc.clone();
        }
    }
    (q, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{int, rat};

    fn q(rows: Vec<Vec<i64>>) -> QMatrix {
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect())
    }

    #[test]
    fn kernel_and_rank() {
        let m = q(vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn inverse_and_solve() {
        let m = q(vec![vec![2, 1], vec![1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(2));
        assert!(q(vec![vec![1, 1], vec![1, 1]]).inverse().is_none());
    }

    #[test]
    fn characteristic_polynomial() {
        let m = q(vec![vec![2, 1, 0], vec![0, 3, 0], vec![1, 0, 1]]);
        // (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert_eq!(m.charpoly(), vec![int(-6), int(11), int(-6), int(1)]);
        let mut roots = rational_roots(&m.charpoly());
        roots.sort();
        assert_eq!(roots, vec![int(1), int(2), int(3)]);
        assert_eq!(rational_roots(&[rat(-1, 4), int(0), int(1)]).len(), 2);
        // x^2 + 1 and x^2 - 2 have no rational roots
        assert!(rational_roots(&[int(1), int(0), int(1)]).is_empty());
        assert!(rational_roots(&[int(-2), int(0), int(1)]).is_empty());
    }

    #[test]
    fn roots_beyond_machine_integers() {
        // prod (x - r) over 25 roots, constant term far outside u64
        let wanted: Vec<Rational> = (1..=25).map(|i| rat(2 * i + 1, 2)).chain([rat(-7, 3), int(0), int(0)]).collect();
        let mut poly = vec![int(1)];
        for r in &wanted {
            let mut next = vec![int(0); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * r;
            }
            poly = next;
        }
        let mut got = rational_roots(&poly);
        got.sort();
        let mut want = wanted;
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn intersection() {
        let a = vec![vec![int(1), int(0), int(0)], vec![int(0), int(1), int(0)]];
        let b = vec![vec![int(0), int(1), int(1)], vec![int(0), int(1), int(0)]];
        assert_eq!(Matrix::intersect(&a, &b).len(), 1);
    }
}
