use super::RootSystem;
use crate::error::Result;
use crate::group::{Classes, FiniteGroup, Perm};
use crate::linalg::{to_cyclotomic, CMatrix, QMatrix};
use crate::scalars::Rational;
use num_traits::Zero;

/// A Weyl group element as an orthogonal matrix on the ambient space (the
/// identity on the orthogonal complement of V) together with a reduced word.
#[derive(Clone, Debug, PartialEq)]
pub struct WeylElement {
    pub matrix: QMatrix,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn cyclotomic_matrix(&self) -> CMatrix {
        to_cyclotomic(&self.matrix)
    }

    pub fn is_orthogonal(&self) -> bool {
        self.matrix.transpose().matmul(&self.matrix) == QMatrix::identity(self.matrix.rows())
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }
}

/// W as a permutation group on the roots, with its conjugacy classes.
pub struct WeylGroup {
    rs: RootSystem,
    group: FiniteGroup<Perm>,
    classes: Classes,
}

impl WeylGroup {
    pub fn new(rs: RootSystem, limit: usize) -> Result<Self> {
        let n = rs.roots().len();
        let group = FiniteGroup::generate(Perm::identity(n), rs.simple_reflection_perms().to_vec(), limit)?;
        let classes = group.conjugacy_classes();
        Ok(Self { rs, group, classes })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn group(&self) -> &FiniteGroup<Perm> {
        &self.group
    }

    pub fn classes(&self) -> &Classes {
        &self.classes
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn element(&self, i: usize) -> WeylElement {
        let word = self.group.word(i);
        WeylElement { matrix: self.rs.word_matrix(&word), word }
    }

    pub fn index_of_perm(&self, p: &Perm) -> Option<usize> {
        self.group.index_of(p)
    }

    pub fn class_of_word(&self, word: &[usize]) -> usize {
        let i = self.group.index_of(&self.rs.word_perm(word)).expect("word outside W");
        self.classes.class_of[i] as usize
    }

    pub fn class_rep_word(&self, c: usize) -> Vec<usize> {
        self.group.word(self.classes.reps[c])
    }

    /// Trace of the class representative on V (reflection character).
    pub fn reflection_character(&self, c: usize) -> Rational {
        let m = self.rs.word_matrix(&self.class_rep_word(c));
        let extra = (self.rs.ambient_dim() - self.rs.rank()) as i64;
        m.trace() - Rational::from_integer(extra.into())
    }

    /// Classes of the sign character value -1.
    pub fn sign(&self, c: usize) -> i64 {
        if self.class_rep_word(c).len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn longest_index(&self) -> usize {
        self.group.index_of(&self.rs.longest_perm()).unwrap()
    }
}

impl RootSystem {
    pub fn longest_perm(&self) -> Perm {
        let npos = self.num_positive();
        let simple_idx: Vec<usize> = (0..self.rank()).map(|s| self.root_index(&self.simple_roots()[s]).unwrap()).collect();
        let mut w = Perm::identity(self.roots().len());
        while let Some(s) = (0..self.rank()).find(|&s| w.apply(simple_idx[s]) < npos) {
            w = w.compose(&self.simple_reflection_perms()[s]);
        }
        w
    }

    pub fn longest_element(&self) -> WeylElement {
        let word = self.word_of_perm(&self.longest_perm());
        WeylElement { matrix: self.word_matrix(&word), word }
    }

    /// True when w_0 acts on V as -1.
    pub fn w0_central(&self) -> bool {
        let w0 = self.longest_perm();
        self.simple_roots().iter().all(|a| {
            let i = self.root_index(a).unwrap();
            self.root(w0.apply(i)).iter().zip(a).all(|(x, y)| (x + y).is_zero())
        })
    }

    /// All group elements with matrices; refuses groups above `max_order`.
    pub fn enumerate_group(&self, max_order: usize) -> Result<Vec<WeylElement>> {
        if self.cartan_type().weyl_order() > max_order as u128 {
            return Err(crate::error::Error::GroupTooLarge { order: self.cartan_type().weyl_order() as usize, limit: max_order });
        }
        let g = FiniteGroup::generate(Perm::identity(self.roots().len()), self.simple_reflection_perms().to_vec(), max_order)?;
        Ok((0..g.order())
            .map(|i| {
                let word = g.word(i);
                WeylElement { matrix: self.word_matrix(&word), word }
            })
            .collect())
    }
}
