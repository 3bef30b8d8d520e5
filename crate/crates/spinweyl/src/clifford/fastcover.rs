//! The pin cover realized by matrices over a prime field. Reduction along a
//! fixed ring map Q(zeta_N) -> F_p is injective on the cover (checked by its
//! order), which makes groups of order ~10^5 practical.

use super::pin::{lift_reflection, PinElement};
use super::spin::{SpinModule, Variant};
use crate::error::{Error, Result};
use crate::group::{Classes, FiniteGroup, GroupElem, Perm};
use crate::linalg::CMatrix;
use crate::rootsystem::{RootSystem, WeylGroup};
use crate::scalars::ntheory::lcm;
use crate::scalars::PrimeField;

#[derive(Clone, Debug)]
pub struct PinModP {
    pub perm: Perm,
    pub mat: Vec<u32>,
    d: u8,
    rank: u8,
    p: u32,
}

impl PinModP {
    pub fn dim(&self) -> usize {
        self.d as usize
    }

    pub fn trace_with(&self, proj: &[u32]) -> u64 {
        let d = self.d as usize;
        let p = self.p as u64;
        let mut t = 0u64;
        for i in 0..d {
            for k in 0..d {
                t += self.mat[i * d + k] as u64 * proj[k * d + i] as u64 % p;
            }
        }
        t % p
    }
}

fn matmul_mod(a: &[u32], b: &[u32], d: usize, p: u64) -> Vec<u32> {
    let mut out = vec![0u32; d * d];
    for i in 0..d {
        let row = &a[i * d..(i + 1) * d];
        for j in 0..d {
            let mut acc = 0u64;
            for k in 0..d {
                acc += row[k] as u64 * b[k * d + j] as u64;
            }
            out[i * d + j] = (acc % p) as u32;
        }
    }
    out
}

impl GroupElem for PinModP {
    type Key = (Vec<u16>, u32);
    fn mul(&self, o: &Self) -> Self {
        Self {
            perm: self.perm.compose(&o.perm),
            mat: matmul_mod(&self.mat, &o.mat, self.d as usize, self.p as u64),
            d: self.d,
            rank: self.rank,
            p: self.p,
        }
    }
    fn key(&self) -> Self::Key {
        let lead = *self.mat.iter().find(|&&x| x != 0).expect("invertible matrix");
        (self.perm.0[..self.rank as usize].to_vec(), lead)
    }
}

fn reduce_matrix(m: &CMatrix, f: &PrimeField) -> Vec<u32> {
    m.entries().iter().map(|x| x.to_mod_p(f) as u32).collect()
}

// Spin modules built on different ambient gamma matrices (odd N = n) are
// carried side by side as diagonal blocks.
fn block_diag(blocks: &[Vec<u32>], sizes: &[usize]) -> Vec<u32> {
    let d: usize = sizes.iter().sum();
    let mut out = vec![0u32; d * d];
    let mut off = 0;
    for (b, &n) in blocks.iter().zip(sizes) {
        for i in 0..n {
            out[(off + i) * d + off..(off + i) * d + off + n].copy_from_slice(&b[i * n..(i + 1) * n]);
        }
        off += n;
    }
    out
}

fn lift_mod_p(spin: &[SpinModule], ambient: &[usize], x: &super::CliffordElement, f: &PrimeField) -> Vec<u32> {
    let blocks: Vec<Vec<u32>> = ambient.iter().map(|&a| reduce_matrix(&spin[a].ambient_action(x), f)).collect();
    let sizes: Vec<usize> = ambient.iter().map(|&a| spin[a].ambient_gammas()[0].rows()).collect();
    block_diag(&blocks, &sizes)
}

pub struct FastCover {
    rs: RootSystem,
    weyl: WeylGroup,
    field: PrimeField,
    group: FiniteGroup<PinModP>,
    classes: Classes,
    z_index: usize,
    w_class: Vec<usize>,
    spin: Vec<SpinModule>,
    ambient: Vec<usize>,
    projectors: Vec<Vec<u32>>,
}

impl FastCover {
    pub fn build(rs: &RootSystem, limit: usize) -> Result<Self> {
        let w_order = rs.cartan_type().weyl_order();
        if 2 * w_order > limit as u128 {
            return Err(Error::GroupTooLarge { order: (2 * w_order) as usize, limit });
        }
        let weyl = rs.weyl_group(limit)?;
        let spin: Vec<SpinModule> = Variant::for_dim(rs.rank()).into_iter().map(|v| SpinModule::new(rs, v)).collect::<Result<_>>()?;
        let lifts: Vec<PinElement> = (0..rs.rank()).map(|s| lift_reflection(rs, s)).collect::<Result<_>>()?;
        let mut modulus = 2 * weyl.classes().exponent() as u64;
        for s in &spin {
            for x in s.projector().entries().iter().chain(s.ambient_gammas().iter().flat_map(|g| g.entries())) {
                modulus = lcm(modulus, x.conductor());
            }
        }
        for l in &lifts {
            for (_, c) in l.value.terms() {
                modulus = lcm(modulus, c.conductor());
            }
        }
        let lower = (2.0 * (2.0 * w_order as f64).sqrt()).ceil() as u64 + 1;
        let field = PrimeField::with_roots_of_unity(modulus, lower.max(1000));
        let mut ambient: Vec<usize> = Vec::new();
        for (v, s) in spin.iter().enumerate() {
            if !ambient.iter().any(|&a| spin[a].ambient_gammas() == s.ambient_gammas()) {
                ambient.push(v);
            }
        }
        let sizes: Vec<usize> = ambient.iter().map(|&a| spin[a].ambient_gammas()[0].rows()).collect();
        let d: usize = sizes.iter().sum();
        let ident = PinModP {
            perm: Perm::identity(rs.roots().len()),
            mat: reduce_matrix(&CMatrix::identity(d), &field),
            d: d as u8,
            rank: rs.rank() as u8,
            p: field.p as u32,
        };
        let gens: Vec<PinModP> = lifts
            .iter()
            .map(|l| PinModP { perm: l.perm.clone(), mat: lift_mod_p(&spin, &ambient, &l.value, &field), ..ident.clone() })
            .collect();
        let group = FiniteGroup::generate(ident.clone(), gens, limit)?;
        if group.order() as u128 != 2 * w_order {
            return Err(Error::Internal(format!("reduction mod {} is not faithful: order {}", field.p, group.order())));
        }
        let minus: Vec<u32> = ident.mat.iter().map(|&x| field.neg(x as u64) as u32).collect();
        let z_index = group.index_of(&PinModP { mat: minus, ..ident.clone() }).ok_or_else(|| Error::Internal("z missing".into()))?;
        let classes = group.conjugacy_classes();
        let w_class = classes
            .reps
            .iter()
            .map(|&r| weyl.classes().class_of[weyl.index_of_perm(&group.elem(r).perm).unwrap()] as usize)
            .collect();
        let projectors = spin
            .iter()
            .map(|s| {
                let blocks: Vec<Vec<u32>> = ambient
                    .iter()
                    .zip(&sizes)
                    .map(|(&a, &n)| if spin[a].ambient_gammas() == s.ambient_gammas() { reduce_matrix(&s.projector(), &field) } else { vec![0; n * n] })
                    .collect();
                block_diag(&blocks, &sizes)
            })
            .collect();
        Ok(Self { rs: rs.clone(), weyl, field, group, classes, z_index, w_class, spin, ambient, projectors })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn group(&self) -> &FiniteGroup<PinModP> {
        &self.group
    }

    pub fn classes(&self) -> &Classes {
        &self.classes
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn z_index(&self) -> usize {
        self.z_index
    }

    pub fn z_class(&self) -> usize {
        self.classes.class_of[self.z_index] as usize
    }

    /// Class in W of the image of each class of the cover.
    pub fn w_class(&self, c: usize) -> usize {
        self.w_class[c]
    }

    pub fn spin_modules(&self) -> &[SpinModule] {
        &self.spin
    }

    /// Trace of a group element on the chosen spin module, reduced mod p.
    pub fn spin_trace(&self, variant: usize, elem: usize) -> u64 {
        self.group.elem(elem).trace_with(&self.projectors[variant])
    }

    /// The element of the cover given by a word in the simple lifts.
    pub fn word_index(&self, word: &[usize]) -> usize {
        let x = word.iter().fold(self.group.elem(0).clone(), |acc, &s| acc.mul(&self.group.gens()[s]));
        self.group.index_of(&x).expect("word outside the cover")
    }

    /// Index of the lift alpha/|alpha| of the reflection in root `i`.
    pub fn reflection_lift_index(&self, i: usize) -> Result<usize> {
        let l = lift_reflection(&self.rs, i)?;
        let x = PinModP { perm: l.perm.clone(), mat: lift_mod_p(&self.spin, &self.ambient, &l.value, &self.field), ..self.group.elem(0).clone() };
        self.group.index_of(&x).ok_or_else(|| Error::Internal("lift outside the cover".into()))
    }
}
