//! Finite groups given by explicit generators: closure by breadth-first
//! search, conjugacy classes, power maps.

use crate::error::{Error, Result};
use rayon::prelude::*;
use std::collections::HashMap;
use std::hash::Hash;

pub trait GroupElem: Clone + Send + Sync {
    type Key: Hash + Eq + Clone + Send + Sync;
    fn mul(&self, other: &Self) -> Self;
    fn key(&self) -> Self::Key;
}

/// A finite group enumerated from generators. Element 0 is the identity and
/// every element stores the lexicographically first shortest word reaching
/// it (right multiplication by generators).
pub struct FiniteGroup<E: GroupElem> {
    gens: Vec<E>,
    gen_inv: Vec<usize>,
    elems: Vec<E>,
    index: HashMap<E::Key, u32>,
    parent: Vec<(u32, u8)>,
    depth: Vec<u16>,
}

#[derive(Clone, Debug)]
pub struct Classes {
    pub class_of: Vec<u32>,
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub orders: Vec<usize>,
    /// Class of the inverse.
    pub inverse: Vec<usize>,
    /// `powers[c][l]` is the class of `g^l` for the representative g of c,
    /// for `l` in `0..orders[c]`.
    pub powers: Vec<Vec<usize>>,
}

impl Classes {
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Class of `g^e` for any integer exponent.
    pub fn power(&self, c: usize, e: i64) -> usize {
        let o = self.orders[c] as i64;
        self.powers[c][e.rem_euclid(o) as usize]
    }

    pub fn exponent(&self) -> usize {
        self.orders.iter().fold(1, |a, &b| num_integer::lcm(a, b))
    }

    /// Class members, listed per class.
    pub fn members(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new(); self.len()];
        for (x, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(x as u32);
        }
        out
    }
}

impl<E: GroupElem> FiniteGroup<E> {
    pub fn generate(identity: E, gens: Vec<E>, limit: usize) -> Result<Self> {
        assert!(gens.len() < 256);
        let mut elems = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity.key(), 0u32);
        let mut parent = vec![(0u32, 0u8)];
        let mut depth = vec![0u16];
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head].clone();
            for (g, s) in gens.iter().enumerate() {
                let y = x.mul(s);
                let k = y.key();
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(k) {
                    if elems.len() >= limit {
                        return Err(Error::GroupTooLarge { order: elems.len() + 1, limit });
                    }
                    e.insert(elems.len() as u32);
                    elems.push(y);
                    parent.push((head as u32, g as u8));
                    depth.push(depth[head] + 1);
                }
            }
            head += 1;
        }
        let mut grp = Self { gens, gen_inv: Vec::new(), elems, index, parent, depth };
        grp.gen_inv = (0..grp.gens.len()).map(|g| grp.inverse_of(grp.index_of(&grp.gens[g]).unwrap())).collect();
        Ok(grp)
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn gens(&self) -> &[E] {
        &self.gens
    }

    pub fn elem(&self, i: usize) -> &E {
        &self.elems[i]
    }

    pub fn elems(&self) -> &[E] {
        &self.elems
    }

    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.index.get(&x.key()).map(|&i| i as usize)
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index_of(&self.elems[a].mul(&self.elems[b])).expect("group not closed")
    }

    /// Word in the generators, as generator indices, with
    /// `elem(i) = gens[w0] * gens[w1] * ...`.
    pub fn word(&self, mut i: usize) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.depth[i] as usize);
        while i != 0 {
            let (p, g) = self.parent[i];
            w.push(g as usize);
            i = p as usize;
        }
        w.reverse();
        w
    }

    pub fn length(&self, i: usize) -> usize {
        self.depth[i] as usize
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut x = self.elems[i].clone();
        let mut o = 1;
        while self.index_of(&x) != Some(0) {
            x = x.mul(&self.elems[i]);
            o += 1;
        }
        o
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        let o = self.element_order(i);
        let mut x = self.elems[0].clone();
        for _ in 0..o - 1 {
            x = x.mul(&self.elems[i]);
        }
        self.index_of(&x).unwrap()
    }

    /// `table[x][s]` is the index of `elem(x) * gens[s]`.
    pub fn right_mul_table(&self) -> Vec<Vec<u32>> {
        (0..self.order())
            .into_par_iter()
            .map(|x| self.gens.iter().map(|s| self.index_of(&self.elems[x].mul(s)).expect("not closed") as u32).collect())
            .collect()
    }

    /// Conjugacy classes, ordered by their first element in enumeration
    /// order (so the identity class comes first).
    pub fn conjugacy_classes(&self) -> Classes {
        let n = self.order();
        let conj: Vec<Vec<u32>> = (0..self.gens.len())
            .map(|g| {
                let s = &self.gens[g];
                let si = &self.elems[self.gen_inv[g]];
                (0..n)
                    .into_par_iter()
                    .map(|x| self.index_of(&si.mul(&self.elems[x]).mul(s)).expect("not closed") as u32)
                    .collect()
            })
            .collect();
        let mut class_of = vec![u32::MAX; n];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = reps.len() as u32;
            reps.push(start);
            class_of[start] = c;
            let mut stack = vec![start];
            let mut size = 1;
            while let Some(x) = stack.pop() {
                for table in &conj {
                    let y = table[x] as usize;
                    if class_of[y] == u32::MAX {
                        class_of[y] = c;
                        size += 1;
                        stack.push(y);
                    }
                }
            }
            sizes.push(size);
        }
        let mut orders = Vec::new();
        let mut powers = Vec::new();
        for &r in &reps {
            let mut pw = vec![0usize];
            let mut x = self.elems[r].clone();
            loop {
                let i = self.index_of(&x).unwrap();
                if i == 0 {
                    break;
                }
                pw.push(class_of[i] as usize);
                x = x.mul(&self.elems[r]);
            }
            orders.push(pw.len());
            powers.push(pw);
        }
        let inverse = (0..reps.len()).map(|c| powers[c][orders[c] - 1]).collect();
        Classes { class_of, reps, sizes, orders, inverse, powers }
    }
}

/// A permutation of a finite set, composed as functions: `(a*b)(i) = a(b(i))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm(pub Vec<u16>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u16).collect())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut v = vec![0u16; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            v[j as usize] = i as u16;
        }
        Perm(v)
    }
}

impl GroupElem for Perm {
    type Key = Vec<u16>;
    fn mul(&self, other: &Self) -> Self {
        self.compose(other)
    }
    fn key(&self) -> Vec<u16> {
        self.0.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> FiniteGroup<Perm> {
        let gens = (0..n - 1)
            .map(|i| {
                let mut p = Perm::identity(n);
                p.0.swap(i, i + 1);
                p
            })
            .collect();
        FiniteGroup::generate(Perm::identity(n), gens, 10_000).unwrap()
    }

    #[test]
    fn symmetric_group_classes() {
        let g = sym(4);
        assert_eq!(g.order(), 24);
        let c = g.conjugacy_classes();
        assert_eq!(c.len(), 5);
        assert_eq!(c.sizes.iter().sum::<usize>(), 24);
        assert_eq!(c.sizes[0], 1);
        let mut sizes = c.sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        assert_eq!(c.exponent(), 12);
    }

    #[test]
    fn words_multiply_back() {
        let g = sym(4);
        for i in 0..g.order() {
            let w = g.word(i);
            let x = w.iter().fold(Perm::identity(4), |acc, &k| acc.compose(&g.gens()[k]));
            assert_eq!(g.index_of(&x), Some(i));
        }
        assert_eq!(g.word(g.order() - 1).len(), 6);
    }

    #[test]
    fn gate_is_enforced() {
        let gens = sym(5).gens().to_vec();
        assert!(matches!(FiniteGroup::generate(Perm::identity(5), gens, 100), Err(Error::GroupTooLarge { .. })));
    }
}
