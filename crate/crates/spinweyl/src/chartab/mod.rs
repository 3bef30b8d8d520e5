//! Character tables of W and of its pin cover, inner products, spin tensor
//! decompositions and the central Casimir element.

mod cache;
mod casimir;
mod cover;
mod dixon;
mod labels;
#[cfg(test)]
mod tests;

pub use cache::{cache_dir_from_env, cached_table, CACHE_ENV};
pub use casimir::{casimir_polynomial, CasimirScalar};
pub use cover::{CoverTables, Decomposition};
pub use labels::{b_values, class_determinants, db_labels, fake_degrees};
pub use dixon::{characters_mod_p, choose_prime, dixon_schneider, dixon_schneider_gated, lift_character, DEFAULT_GATE};

use crate::error::{Error, Result};
use crate::group::Classes;
use crate::scalars::{CyclotomicNumber, Rational};
use num_traits::ToPrimitive;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub group_id: String,
    pub order: usize,
    pub sizes: Vec<usize>,
    pub orders: Vec<usize>,
    pub inverse: Vec<usize>,
    /// Irreducible characters, each a vector of values over the classes.
    pub irreps: Vec<Vec<CyclotomicNumber>>,
}

impl CharacterTable {
    /// Rows are put in canonical order: by degree, then lexicographically
    /// by values.
    pub fn new(group_id: &str, order: usize, classes: &Classes, irreps: Vec<Vec<CyclotomicNumber>>) -> Self {
        let mut irreps: Vec<Vec<CyclotomicNumber>> =
            irreps.into_iter().map(|row| row.iter().map(|x| x.canonical()).collect()).collect();
        irreps.sort_by(|a, b| cmp_rows(a, b));
        Self {
            group_id: group_id.to_string(),
            order,
            sizes: classes.sizes.clone(),
            orders: classes.orders.clone(),
            inverse: classes.inverse.clone(),
            irreps,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.sizes.len()
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn degree(&self, i: usize) -> i64 {
        self.irreps[i][0].to_integer().and_then(|d| d.to_i64()).expect("degree is an integer")
    }

    pub fn degrees(&self) -> Vec<i64> {
        (0..self.len()).map(|i| self.degree(i)).collect()
    }

    pub fn character(&self, i: usize) -> &[CyclotomicNumber] {
        &self.irreps[i]
    }

    /// (1/|G|) sum over classes of |C| chi1 conj(chi2).
    pub fn inner_product_exact(&self, a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> Result<Rational> {
        if a.len() != self.num_classes() || b.len() != self.num_classes() {
            return Err(Error::DimensionMismatch("class function has the wrong length".into()));
        }
        let mut acc = CyclotomicNumber::zero();
        for c in 0..self.num_classes() {
            acc += (&a[c] * &b[c].conj()).scale(&Rational::from_integer((self.sizes[c] as i64).into()));
        }
        let acc = acc.scale(&Rational::new(1.into(), (self.order as i64).into()));
        acc.to_rational().ok_or_else(|| Error::NonIntegral(format!("inner product {acc} is not rational")))
    }

    /// Inner product of two characters, certified to be an integer.
    pub fn inner_product(&self, a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> Result<i64> {
        let r = self.inner_product_exact(a, b)?;
        if !r.is_integer() {
            return Err(Error::NonIntegral(format!("inner product {r} is not an integer")));
        }
        Ok(r.to_integer().to_i64().unwrap())
    }

    /// Multiplicities of the irreducible characters in `chi`.
    pub fn decompose(&self, chi: &[CyclotomicNumber]) -> Result<Vec<i64>> {
        let m = self.irreps.iter().map(|row| self.inner_product(chi, row)).collect::<Result<Vec<_>>>()?;
        if m.iter().any(|&x| x < 0) {
            return Err(Error::NonIntegral("negative multiplicity".into()));
        }
        Ok(m)
    }

    pub fn tensor(a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> Vec<CyclotomicNumber> {
        a.iter().zip(b).map(|(x, y)| x * y).collect()
    }

    /// Index of the row equal to `chi`.
    pub fn find(&self, chi: &[CyclotomicNumber]) -> Option<usize> {
        self.irreps.iter().position(|row| row.as_slice() == chi)
    }

    /// Row and column orthogonality and the sum of squared degrees.
    pub fn check(&self) -> Result<()> {
        for i in 0..self.len() {
            for j in 0..self.len() {
                let ip = self.inner_product(&self.irreps[i], &self.irreps[j])?;
                if ip != (i == j) as i64 {
                    return Err(Error::Mismatch(format!("rows {i},{j} have inner product {ip}")));
                }
            }
        }
        for c in 0..self.num_classes() {
            for d in 0..self.num_classes() {
                let s: CyclotomicNumber = self.irreps.iter().map(|row| &row[c] * &row[d].conj()).sum();
                let expect = if c == d { (self.order / self.sizes[c]) as i64 } else { 0 };
                if s != CyclotomicNumber::from_int(expect) {
                    return Err(Error::Mismatch(format!("columns {c},{d} are not orthogonal")));
                }
            }
        }
        let sq: i64 = self.degrees().iter().map(|d| d * d).sum();
        if sq as usize != self.order {
            return Err(Error::Mismatch(format!("squared degrees sum to {sq}, not {}", self.order)));
        }
        Ok(())
    }

    /// Tab-separated table: a header of class sizes and orders, then one
    /// row per irreducible character.
    pub fn to_tsv(&self, labels: Option<&[String]>) -> String {
        let mut out = String::new();
        let head: Vec<String> = (0..self.num_classes()).map(|c| format!("{}:{}", self.sizes[c], self.orders[c])).collect();
        out.push_str(&format!("#{}\tsize:order\t{}\n", self.group_id, head.join("\t")));
        for (i, row) in self.irreps.iter().enumerate() {
            let label = labels.map_or_else(|| format!("chi{i}"), |l| l[i].clone());
            let vals: Vec<String> = row.iter().map(|x| x.serialize()).collect();
            out.push_str(&format!("{label}\t{}\t{}\n", self.degree(i), vals.join("\t")));
        }
        out
    }
}

fn cmp_rows(a: &[CyclotomicNumber], b: &[CyclotomicNumber]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        let o = x.cmp_canonical(y);
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}
