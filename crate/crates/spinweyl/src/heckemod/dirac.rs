use super::onewtype::OneWTypeModule;
use crate::chartab::{CharacterTable, CoverTables, Decomposition};
use crate::clifford::SpinModule;
use crate::error::{Error, Result};
use crate::linalg::{to_cyclotomic, CMatrix, Matrix};
use crate::scalars::CyclotomicNumber;

#[derive(Clone, Debug)]
pub struct DiracData {
    /// D_X = sum_i pi(omega~_i) (x) gamma(omega_i) on X (x) S.
    pub operator: CMatrix,
    pub kernel_dim: usize,
    pub image_dim: usize,
    /// dim (ker D / (ker D cap im D)).
    pub cohomology_dim: usize,
}

impl DiracData {
    pub fn is_zero(&self) -> bool {
        self.operator.is_zero()
    }
}

/// pi(omega~) for a vector of V with cyclotomic coordinates.
fn omega_tilde_c(x: &OneWTypeModule, v: &[CyclotomicNumber]) -> CMatrix {
    let rs = x.root_system();
    let d = x.dimension();
    let mut out = Matrix::zeros(d, d);
    for (i, w) in rs.fundamental_coweights().iter().enumerate() {
        // coordinate of v along omega_i is (alpha_i, v)
        let c = rs.simple_roots()[i].iter().zip(v).fold(CyclotomicNumber::zero(), |acc, (a, b)| acc + b * &CyclotomicNumber::from_rational(a.clone()));
        if !c.is_zero() {
            out = &out + &to_cyclotomic(&x.omega_tilde(w)).scale(&c);
        }
    }
    out
}

/// The Dirac operator in the orthonormal basis of V carried by `spin`.
pub fn dirac_operator(x: &OneWTypeModule, spin: &SpinModule) -> DiracData {
    dirac_operator_in_basis(x, spin.orthonormal_basis(), spin.gamma())
}

/// The Dirac operator for an arbitrary orthonormal basis of V and the
/// corresponding gamma matrices.
pub fn dirac_operator_in_basis(x: &OneWTypeModule, basis: &[Vec<CyclotomicNumber>], gamma: &[CMatrix]) -> DiracData {
    let d = x.dimension() * gamma[0].rows();
    let mut op = Matrix::zeros(d, d);
    for (u, g) in basis.iter().zip(gamma) {
        op = &op + &omega_tilde_c(x, u).kron(g);
    }
    let kernel = op.kernel();
    let image = op.column_space();
    let meet = Matrix::intersect(&kernel, &image).len();
    DiracData { kernel_dim: kernel.len(), image_dim: image.len(), cohomology_dim: kernel.len() - meet, operator: op }
}

/// The W~-character of the Dirac cohomology, decomposed into irreducibles
/// of the cover. The cohomology of a one-W-type module is all of X (x) S.
pub fn cohomology_character(dirac: &DiracData, sigma_row: usize, variant: usize, tables: &CoverTables) -> Result<Decomposition> {
    if !dirac.is_zero() {
        return Err(Error::UnsupportedRepresentation("Dirac cohomology is only computed for one-W-type modules".into()));
    }
    let chi = CharacterTable::tensor(&tables.inflate(tables.weyl.character(sigma_row)), &tables.spin[variant]);
    let dim: i64 = chi[0].to_rational().and_then(|r| r.to_integer().try_into().ok()).unwrap_or(-1);
    if dim != dirac.cohomology_dim as i64 {
        return Err(Error::Internal("cohomology dimension differs from dim X * dim S".into()));
    }
    tables.decompose(&chi)
}
