use super::element::CliffordElement;
use super::pin::PinElement;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Matrix};
use crate::rootsystem::{dot, RootSystem};
use crate::scalars::{CyclotomicNumber, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

type C = CyclotomicNumber;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    Unique,
    Plus,
    Minus,
}

impl Variant {
    pub fn for_dim(dim_v: usize) -> Vec<Variant> {
        if dim_v % 2 == 1 {
            vec![Variant::Plus, Variant::Minus]
        } else {
            vec![Variant::Unique]
        }
    }
}

fn pauli() -> [CMatrix; 4] {
    let z = C::zero;
    let one = C::one;
    let i = C::i;
    [
        Matrix::from_rows(vec![vec![one(), z()], vec![z(), one()]]),
        Matrix::from_rows(vec![vec![z(), one()], vec![one(), z()]]),
        Matrix::from_rows(vec![vec![z(), -i()], vec![i(), z()]]),
        Matrix::from_rows(vec![vec![one(), z()], vec![z(), -one()]]),
    ]
}

/// Matrices gamma_1..gamma_n with gamma_i gamma_j + gamma_j gamma_i =
/// -2 delta_ij, of size 2^(n/2) (rounded down), entries in {0, +-1, +-i}.
/// For odd n the last matrix is multiplied by `last_sign`.
pub fn ambient_gammas(n: usize, last_sign: i64) -> Vec<CMatrix> {
    let [id, s1, s2, s3] = pauli();
    let m = n / 2;
    let tensor = |fs: Vec<&CMatrix>| -> CMatrix {
        fs.into_iter().fold(Matrix::identity(1), |acc, f| acc.kron(f))
    };
    let mut out = Vec::with_capacity(n);
    for k in 0..m {
        for s in [&s1, &s2] {
            let mut fs: Vec<&CMatrix> = vec![&s3; k];
            fs.push(s);
            fs.extend(std::iter::repeat_n(&id, m - k - 1));
            out.push(tensor(fs).scale(&C::i()));
        }
    }
    if n % 2 == 1 {
        let fs: Vec<&CMatrix> = vec![&s3; m];
        out.push(tensor(fs).scale(&(C::i() * C::from_int(last_sign))));
    }
    out
}

/// Rational orthogonal basis of V obtained from the simple roots by
/// Gram-Schmidt, followed by one for the orthogonal complement in the
/// ambient space.
pub fn orthogonal_bases(rs: &RootSystem) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let gs = |vs: Vec<Vec<Rational>>| -> Vec<Vec<Rational>> {
        let mut out: Vec<Vec<Rational>> = Vec::new();
        for v in vs {
            let mut w = v.clone();
            for f in &out {
                let c = dot(&v, f) / dot(f, f);
                w = w.iter().zip(f).map(|(a, b)| a - &c * b).collect();
            }
            if w.iter().any(|x| !x.is_zero()) {
                out.push(w);
            }
        }
        out
    };
    let v_basis = gs(rs.simple_roots().to_vec());
    let n = rs.ambient_dim();
    let perp_candidates = (0..n)
        .map(|j| {
            let mut e = vec![Rational::zero(); n];
            e[j] = Rational::from_integer(1.into());
            let p = rs.project_to_v(&e);
            e.iter().zip(&p).map(|(a, b)| a - b).collect()
        })
        .collect();
    (v_basis, gs(perp_candidates))
}

fn normalize(v: &[Rational]) -> Vec<C> {
    let inv = C::sqrt_rational(&dot(v, v)).inv();
    v.iter().map(|x| C::from_rational(x.clone()) * &inv).collect()
}

/// A simple module of C(V) realized inside a module of the Clifford algebra
/// of the ambient coordinate space.
#[derive(Clone, Debug)]
pub struct SpinModule {
    variant: Variant,
    dim_v: usize,
    ambient: Vec<CMatrix>,
    basis: CMatrix,
    left_inv: CMatrix,
    onb: Vec<Vec<C>>,
    gamma: Vec<CMatrix>,
    vol: CliffordElement,
}

impl SpinModule {
    pub fn new(rs: &RootSystem, variant: Variant) -> Result<Self> {
        let n = rs.rank();
        let big = rs.ambient_dim();
        if (n % 2 == 1) == (variant == Variant::Unique) {
            return Err(Error::InvalidInput(format!("variant {variant:?} does not fit dim V = {n}")));
        }
        let (vb, pb) = orthogonal_bases(rs);
        let onb: Vec<Vec<C>> = vb.iter().map(|v| normalize(v)).collect();
        let perp: Vec<Vec<C>> = pb.iter().map(|v| normalize(v)).collect();
        let vol = onb.iter().fold(CliffordElement::one(big), |acc, u| acc.mul(&CliffordElement::from_vector(u)));
        let c_plus = if n % 4 == 3 { C::one() } else { C::i() };
        let target_eig = match variant {
            Variant::Plus => c_plus.clone(),
            Variant::Minus => -c_plus.clone(),
            Variant::Unique => C::zero(),
        };
        let mut ambient = ambient_gammas(big, 1);
        let vec_matrix = |g: &[CMatrix], v: &[C]| -> CMatrix {
            let d = g[0].rows();
            g.iter().zip(v).fold(Matrix::zeros(d, d), |acc, (m, c)| if c.is_zero() { acc } else { &acc + &m.scale(c) })
        };
        if big == n && n % 2 == 1 {
            let volm = onb.iter().fold(Matrix::identity(ambient[0].rows()), |acc, u| acc.matmul(&vec_matrix(&ambient, u)));
            if volm[(0, 0)] != target_eig {
                ambient = ambient_gammas(big, -1);
            }
        }
        let d_amb = ambient[0].rows();
        let target = 1usize << (n / 2);
        let mut basis: Vec<Vec<C>> = (0..d_amb).map(|j| (0..d_amb).map(|i| if i == j { C::one() } else { C::zero() }).collect()).collect();
        let split = |basis: &Vec<Vec<C>>, op: &CMatrix, eig: &C| -> Vec<Vec<C>> {
            let b = CMatrix::from_cols(basis);
            let r = op.restrict_to(basis).expect("operator must preserve the subspace");
            let shifted = &r - &Matrix::scalar(r.rows(), eig);
            shifted.kernel().iter().map(|k| b.apply(k)).collect()
        };
        let mut k = 0;
        while basis.len() > target && k + 1 < perp.len() {
            let j = vec_matrix(&ambient, &perp[k]).matmul(&vec_matrix(&ambient, &perp[k + 1]));
            basis = split(&basis, &j, &C::i());
            k += 2;
        }
        if basis.len() > target {
            if n.is_multiple_of(2) {
                return Err(Error::Internal("cannot split spin module".into()));
            }
            let volm = onb.iter().fold(Matrix::identity(d_amb), |acc, u| acc.matmul(&vec_matrix(&ambient, u)));
            basis = split(&basis, &volm, &target_eig);
        }
        if basis.len() != target {
            return Err(Error::Internal(format!("spin module of dimension {} instead of {}", basis.len(), target)));
        }
        let b = CMatrix::from_cols(&basis);
        let bh = b.transpose().map(|x| x.conj());
        let left_inv = bh.matmul(&b).inverse().expect("full rank").matmul(&bh);
        let gamma = onb.iter().map(|u| left_inv.matmul(&vec_matrix(&ambient, u)).matmul(&b)).collect();
        Ok(Self { variant, dim_v: n, ambient, basis: b, left_inv, onb, gamma, vol })
    }

    pub fn dimension(&self) -> usize {
        self.basis.cols()
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    /// gamma matrices of the orthonormal basis of V.
    pub fn gamma(&self) -> &[CMatrix] {
        &self.gamma
    }

    pub fn orthonormal_basis(&self) -> &[Vec<C>] {
        &self.onb
    }

    pub fn ambient_gammas(&self) -> &[CMatrix] {
        &self.ambient
    }

    /// Orthogonal projector of the ambient module onto this submodule.
    pub fn projector(&self) -> CMatrix {
        self.basis.matmul(&self.left_inv)
    }

    /// The normalized volume element of V.
    pub fn volume(&self) -> &CliffordElement {
        &self.vol
    }

    pub fn ambient_action(&self, x: &CliffordElement) -> CMatrix {
        let d = self.ambient[0].rows();
        let mut out = Matrix::zeros(d, d);
        for (mask, c) in x.terms() {
            let mono = (0..x.dim())
                .filter(|i| mask >> i & 1 == 1)
                .fold(Matrix::identity(d), |acc, i| acc.matmul(&self.ambient[i]));
            out = &out + &mono.scale(c);
        }
        out
    }

    /// Action of an element of C(V) on the module.
    pub fn act(&self, x: &CliffordElement) -> CMatrix {
        self.left_inv.matmul(&self.ambient_action(x)).matmul(&self.basis)
    }

    /// gamma(v) for an ambient vector v of V.
    pub fn vector_action(&self, v: &[Rational]) -> CMatrix {
        self.act(&CliffordElement::from_rational_vector(v))
    }

    pub fn character(&self, x: &PinElement) -> C {
        self.act(&x.value).trace()
    }

    /// Trace through the closed formula 2^(n/2) (x_0 + [n odd] c x_vol).
    pub fn character_formula(&self, x: &CliffordElement) -> C {
        let scale = C::from_int(1 << (self.dim_v / 2));
        let mut t = x.scalar_part();
        if self.dim_v % 2 == 1 {
            let c_plus = if self.dim_v % 4 == 3 { C::one() } else { C::i() };
            let c = if self.variant == Variant::Plus { c_plus } else { -c_plus };
            t += c * x.pairing(&self.vol);
        }
        scale * t
    }
}
