use super::dixon::{dixon_schneider_gated, lift_character};
use super::cache::cached_table;
use super::{CharacterTable, DEFAULT_GATE};
use std::path::Path;
use crate::clifford::FastCover;
use crate::error::{Error, Result};
use crate::rootsystem::RootSystem;
use crate::scalars::CyclotomicNumber;
use rayon::join;

/// Constituents of a W~-character, as (row of the cover table, multiplicity).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub constituents: Vec<(usize, i64)>,
}

impl Decomposition {
    pub fn total_degree(&self, table: &CharacterTable) -> i64 {
        self.constituents.iter().map(|&(i, m)| m * table.degree(i)).sum()
    }
}

/// Character tables of W and W~ computed together, with the spin
/// characters of W~ and the inflation map between classes.
pub struct CoverTables {
    pub cover: FastCover,
    pub weyl: CharacterTable,
    pub table: CharacterTable,
    /// Characters of the spin modules over the classes of W~.
    pub spin: Vec<Vec<CyclotomicNumber>>,
}

impl CoverTables {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        Self::build_gated(rs, DEFAULT_GATE)
    }

    pub fn build_gated(rs: &RootSystem, gate: usize) -> Result<Self> {
        Self::build_cached(rs, gate, None)
    }

    /// As [`CoverTables::build_gated`], reading and writing computed
    /// character tables in `cache` when given.
    pub fn build_cached(rs: &RootSystem, gate: usize, cache: Option<&Path>) -> Result<Self> {
        let cover = FastCover::build(rs, gate)?;
        let id = rs.cartan_type().to_string();
        let (wid, cid) = (format!("W({id})"), format!("W~({id})"));
        let w = cover.weyl();
        let (weyl, table) = join(
            || cached_table(cache, &wid, w.order(), w.classes(), || dixon_schneider_gated(w.group(), w.classes(), &wid, gate)),
            || cached_table(cache, &cid, cover.order(), cover.classes(), || dixon_schneider_gated(cover.group(), cover.classes(), &cid, gate)),
        );
        let (weyl, table) = (weyl?, table?);
        let classes = cover.classes();
        let spin = (0..cover.spin_modules().len())
            .map(|v| {
                let values: Vec<u64> = classes.reps.iter().map(|&r| cover.spin_trace(v, r)).collect();
                lift_character(&values, cover.spin_modules()[v].dimension() as u64, classes, cover.field())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { cover, weyl, table, spin })
    }

    pub fn root_system(&self) -> &RootSystem {
        self.cover.root_system()
    }

    /// W-character pulled back to W~.
    pub fn inflate(&self, chi: &[CyclotomicNumber]) -> Vec<CyclotomicNumber> {
        (0..self.table.num_classes()).map(|c| chi[self.cover.w_class(c)].clone()).collect()
    }

    pub fn is_genuine(&self, i: usize) -> bool {
        let row = self.table.character(i);
        row[self.cover.z_class()] == -row[0].clone()
    }

    pub fn genuine(&self) -> Vec<usize> {
        (0..self.table.len()).filter(|&i| self.is_genuine(i)).collect()
    }

    /// Rows of the cover table that are inflated from W, in the order of the
    /// W table.
    pub fn inflated_rows(&self) -> Result<Vec<usize>> {
        (0..self.weyl.len())
            .map(|i| {
                self.table
                    .find(&self.inflate(self.weyl.character(i)))
                    .ok_or_else(|| Error::Internal("inflated character missing from the cover table".into()))
            })
            .collect()
    }

    /// The spin module of the given variant index as a row of the cover table.
    pub fn spin_row(&self, variant: usize) -> Result<usize> {
        self.table.find(&self.spin[variant]).ok_or_else(|| Error::Internal("spin character is not irreducible".into()))
    }

    pub fn decompose(&self, chi: &[CyclotomicNumber]) -> Result<Decomposition> {
        let m = self.table.decompose(chi)?;
        Ok(Decomposition { constituents: m.into_iter().enumerate().filter(|&(_, x)| x != 0).collect() })
    }

    /// sigma (a row of the W table) tensored with a spin module.
    pub fn decompose_spin_tensor(&self, sigma: usize, variant: usize) -> Result<Decomposition> {
        if sigma >= self.weyl.len() || variant >= self.spin.len() {
            return Err(Error::InvalidInput("no such representation".into()));
        }
        let chi = CharacterTable::tensor(&self.inflate(self.weyl.character(sigma)), &self.spin[variant]);
        self.decompose(&chi)
    }

    /// Reflection character of W, over the classes of W.
    pub fn reflection_character(&self) -> Vec<CyclotomicNumber> {
        let w = self.cover.weyl();
        (0..w.classes().len()).map(|c| w.reflection_character(c).into()).collect()
    }

    /// Sign character of W.
    pub fn sign_character(&self) -> Vec<CyclotomicNumber> {
        let w = self.cover.weyl();
        (0..w.classes().len()).map(|c| CyclotomicNumber::from_int(w.sign(c))).collect()
    }
}
