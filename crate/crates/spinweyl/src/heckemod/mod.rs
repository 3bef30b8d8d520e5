//! Explicit W-representations, the operators p_omega, one-W-type modules of
//! the graded Hecke algebra and their Dirac cohomology.

mod build;
mod dirac;
mod induce;
mod onewtype;
mod seminormal;
mod wrep;

pub use build::{build_irrep, build_irrep_from_character, classical_class_types, extended_candidates, rational_row};
pub use dirac::{cohomology_character, dirac_operator, dirac_operator_in_basis, DiracData};
pub use induce::{induced_irrep, restriction_multiplicity, search_irrep, SubgroupData};
pub use onewtype::{commutator_test, diagonal_eigenvalues, extend_to_hecke, p_omega, OneWTypeModule};
pub use seminormal::{seminormal_irrep, standard_tableaux};
pub use wrep::{is_positive_definite, WRepresentation};

use crate::chartab::{casimir_polynomial, CharacterTable, CoverTables};
use crate::error::{Error, Result};
use crate::rootsystem::dot;
use crate::scalars::{int, CyclotomicNumber, Rational};

/// Central character of a one-W-type module, recomputed from the joint
/// spectrum of the V-action: the dominant weight, checked against pi(Omega).
pub fn central_character(x: &OneWTypeModule) -> Result<Vec<Rational>> {
    x.compute_central_character()
}

/// dim Hom_W(sigma (x) refl, sigma) for a row of the W table.
pub fn refl_tensor_mult(sigma: usize, tables: &CoverTables) -> Result<i64> {
    let chi = tables.weyl.character(sigma);
    let t = CharacterTable::tensor(chi, &tables.reflection_character());
    tables.weyl.inner_product(&t, chi)
}

/// Row of the W table carrying the character of an explicit model.
pub fn weyl_row(rep: &WRepresentation, tables: &CoverTables) -> Result<usize> {
    let chi: Vec<CyclotomicNumber> = rep.character(tables.cover.weyl()).into_iter().map(CyclotomicNumber::from_rational).collect();
    tables.weyl.find(&chi).ok_or_else(|| Error::Internal(format!("{} is not irreducible", rep.label)))
}

/// For every constituent of X (x) S, compares 4 (nu, nu) with the scalar
/// by which the Casimir of W~ acts. Returns the constituents checked.
pub fn squared_dirac_check(x: &OneWTypeModule, tables: &CoverTables, variant: usize) -> Result<Vec<usize>> {
    let row = weyl_row(&x.sigma, tables)?;
    let nu = &x.central_char;
    let target = CyclotomicNumber::from_rational(int(4) * dot(nu, nu));
    let dec = tables.decompose_spin_tensor(row, variant)?;
    for &(c, _) in &dec.constituents {
        let cas = casimir_polynomial(&tables.cover, tables.table.character(c))?.eval(&x.params);
        if cas != target {
            return Err(Error::Mismatch(format!("{}: Casimir {} differs from 4(nu,nu) = {}", x.sigma.label, cas, target)));
        }
    }
    Ok(dec.constituents.iter().map(|&(c, _)| c).collect())
}
