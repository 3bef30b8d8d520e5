use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rootsystem::{RootSystem, WeylGroup};
use crate::scalars::Rational;
use num_traits::Zero;

/// An explicit representation of W: matrices for the simple reflections and
/// a positive definite W-invariant form.
#[derive(Clone, Debug)]
pub struct WRepresentation {
    pub label: String,
    pub generators: Vec<QMatrix>,
    /// Gram matrix of the invariant form, G = sigma(w)^T G sigma(w).
    pub gram: QMatrix,
}

impl WRepresentation {
    pub fn new(label: impl Into<String>, generators: Vec<QMatrix>, gram: QMatrix) -> Self {
        Self { label: label.into(), generators, gram }
    }

    pub fn trivial(rank: usize) -> Self {
        Self::new("trivial", vec![QMatrix::identity(1); rank], QMatrix::identity(1))
    }

    pub fn sign(rank: usize) -> Self {
        Self::new("sign", vec![QMatrix::identity(1).scale(&Rational::from_integer((-1).into())); rank], QMatrix::identity(1))
    }

    pub fn dimension(&self) -> usize {
        self.gram.rows()
    }

    pub fn word_matrix(&self, word: &[usize]) -> QMatrix {
        word.iter().fold(QMatrix::identity(self.dimension()), |acc, &s| acc.matmul(&self.generators[s]))
    }

    /// sigma(s_alpha) for every positive root, in root order.
    pub fn reflection_matrices(&self, rs: &RootSystem) -> Vec<QMatrix> {
        (0..rs.num_positive()).map(|i| self.word_matrix(&rs.reflection_word(i))).collect()
    }

    /// Adjoint with respect to the invariant form: G^-1 A^T G.
    pub fn adjoint(&self, a: &QMatrix) -> QMatrix {
        let ginv = self.gram.inverse().expect("invariant form is nondegenerate");
        ginv.matmul(&a.transpose()).matmul(&self.gram)
    }

    /// Character values over the classes of W.
    pub fn character(&self, w: &WeylGroup) -> Vec<Rational> {
        (0..w.classes().len()).map(|c| self.word_matrix(&w.class_rep_word(c)).trace()).collect()
    }

    /// Checks (s_i s_j)^{m_ij} = 1, the invariance of the form and its
    /// positivity.
    pub fn check(&self, rs: &RootSystem) -> Result<()> {
        let m = rs.coxeter_matrix();
        let n = self.dimension();
        let id = QMatrix::identity(n);
        for i in 0..self.generators.len() {
            for j in i..self.generators.len() {
                let p = self.generators[i].matmul(&self.generators[j]).pow(m[i][j] as u32);
                if p != id {
                    return Err(Error::Internal(format!("{}: Coxeter relation fails for ({i},{j})", self.label)));
                }
            }
            let g = &self.generators[i];
            if g.transpose().matmul(&self.gram).matmul(g) != self.gram {
                return Err(Error::Internal(format!("{}: form is not invariant under s_{i}", self.label)));
            }
        }
        if !is_positive_definite(&self.gram) {
            return Err(Error::Internal(format!("{}: form is not positive definite", self.label)));
        }
        Ok(())
    }
}

/// Sylvester's criterion, by symmetric elimination.
pub fn is_positive_definite(g: &QMatrix) -> bool {
    let n = g.rows();
    if g.transpose() != *g {
        return false;
    }
    let mut m = g.clone();
    for k in 0..n {
        let p = m[(k, k)].clone();
        if p <= Rational::zero() {
            return false;
        }
        for i in k + 1..n {
            let f = &m[(i, k)] / &p;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = &f * &m[(k, j)];
                m[(i, j)] = &m[(i, j)] - &t;
            }
        }
    }
    true
}
