//! Irreducible W-modules cut out of monomial representations
//! Ind_H^W(psi), H a reflection subgroup and psi a linear character, by the
//! central idempotent of the target character.

use super::wrep::WRepresentation;
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rootsystem::WeylGroup;
use crate::scalars::{PrimeField, Rational};
use num_traits::{ToPrimitive, Zero};
use std::collections::HashMap;

/// Generators of a reflection subgroup, as (root index, value of psi).
pub type SubgroupData = Vec<(usize, i64)>;

fn reflection_element(w: &WeylGroup, root: usize) -> usize {
    let rs = w.root_system();
    w.index_of_perm(&rs.word_perm(&rs.reflection_word(root))).expect("reflection lies in W")
}

/// Elements of H with the values of psi, or None when psi is not a
/// character of H.
fn enumerate_subgroup(w: &WeylGroup, gens: &[(usize, i64)]) -> Option<HashMap<usize, i64>> {
    let g = w.group();
    let gen_elems: Vec<(usize, i64)> = gens.iter().map(|&(r, v)| (reflection_element(w, r), v)).collect();
    let mut psi = HashMap::from([(0usize, 1i64)]);
    let mut queue = vec![0usize];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &(s, v) in &gen_elems {
            let y = g.mul(x, s);
            let val = psi[&x] * v;
            match psi.get(&y) {
                Some(&old) if old != val => return None,
                Some(_) => {}
                None => {
                    psi.insert(y, val);
                    queue.push(y);
                }
            }
        }
    }
    Some(psi)
}

/// <Res_H chi, psi>_H together with the index [W:H].
pub fn restriction_multiplicity(w: &WeylGroup, chi: &[Rational], gens: &[(usize, i64)]) -> Option<(Rational, usize)> {
    let psi = enumerate_subgroup(w, gens)?;
    let classes = w.classes();
    let sum = psi.iter().fold(Rational::zero(), |acc, (&h, &v)| acc + &chi[classes.class_of[h] as usize] * Rational::from_integer(v.into()));
    Some((sum / Rational::from_integer((psi.len() as i64).into()), w.order() / psi.len()))
}

fn to_i64(x: &Rational) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::NonIntegral(x.to_string()));
    }
    x.to_integer().to_i64().ok_or_else(|| Error::Internal("character value overflow".into()))
}

// Greedy choice of independent vectors modulo a large prime.
fn independent_mod_p(vectors: impl Iterator<Item = (usize, Vec<i64>)>, want: usize, f: &PrimeField) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (idx, v) in vectors {
        let mut r: Vec<u64> = v.iter().map(|&x| f.from_i64(x)).collect();
        for (piv, b) in &basis {
            let c = r[*piv];
            if c != 0 {
                for (x, y) in r.iter_mut().zip(b) {
                    *x = f.sub(*x, f.mul(c, *y));
                }
            }
        }
        if let Some(piv) = r.iter().position(|&x| x != 0) {
            let inv = f.inv(r[piv]);
            r.iter_mut().for_each(|x| *x = f.mul(*x, inv));
            basis.push((piv, r));
            chosen.push(idx);
            if chosen.len() == want {
                break;
            }
        }
    }
    chosen
}

/// The irreducible constituent with character `chi` (values over the
/// classes of W) of Ind_H^W(psi), which must contain it exactly once.
pub fn induced_irrep(w: &WeylGroup, chi: &[Rational], gens: &[(usize, i64)], label: &str) -> Result<WRepresentation> {
    let degree = to_i64(&chi[0])? as usize;
    let psi = enumerate_subgroup(w, gens).ok_or_else(|| Error::InvalidInput("psi is not a character of H".into()))?;
    let g = w.group();
    let n = g.order();
    let mut coset_of = vec![u32::MAX; n];
    let mut reps = Vec::new();
    for x in 0..n {
        if coset_of[x] == u32::MAX {
            let c = reps.len() as u32;
            reps.push(x);
            for &h in psi.keys() {
                coset_of[g.mul(x, h)] = c;
            }
        }
    }
    let m = reps.len();
    let rep_inv: Vec<usize> = reps.iter().map(|&t| w.index_of_perm(&g.elem(t).inverse()).unwrap()).collect();
    // x t_i = t_j h  gives  rho(x) e_i = psi(h) e_j
    let monomial = |x: usize| -> Vec<(usize, i64)> {
        reps.iter()
            .map(|&t| {
                let y = g.mul(x, t);
                let j = coset_of[y] as usize;
                (j, psi[&g.mul(rep_inv[j], y)])
            })
            .collect()
    };
    let classes = w.classes();
    let chi_int: Vec<i64> = chi.iter().map(to_i64).collect::<Result<_>>()?;
    let mut proj = vec![0i64; m * m];
    for x in 0..n {
        let c = chi_int[classes.class_of[x] as usize];
        if c == 0 {
            continue;
        }
        for (i, (j, s)) in monomial(x).into_iter().enumerate() {
            proj[j * m + i] += c * s;
        }
    }
    let field = PrimeField::with_roots_of_unity(2, 200_000_000);
    let cols = independent_mod_p((0..m).map(|c| (c, (0..m).map(|r| proj[r * m + c]).collect())), degree, &field);
    if cols.len() != degree {
        return Err(Error::Internal(format!("{label}: image of the idempotent has rank {} instead of {degree}", cols.len())));
    }
    let basis = QMatrix::from_fn(m, degree, |r, k| Rational::from_integer(proj[r * m + cols[k]].into()));
    let rows = independent_mod_p(
        (0..m).map(|r| (r, cols.iter().map(|&c| proj[r * m + c]).collect())),
        degree,
        &field,
    );
    let square = QMatrix::from_fn(degree, degree, |a, b| basis[(rows[a], b)].clone());
    let square_inv = square.inverse().ok_or_else(|| Error::Internal("singular row selection".into()))?;
    let generators = (0..g.gens().len())
        .map(|s| {
            let sx = g.index_of(&g.gens()[s]).unwrap();
            let mut image = QMatrix::zeros(m, degree);
            for (i, (j, sign)) in monomial(sx).into_iter().enumerate() {
                for k in 0..degree {
                    image[(j, k)] = &basis[(i, k)] * Rational::from_integer(sign.into());
                }
            }
            let sel = QMatrix::from_fn(degree, degree, |a, b| image[(rows[a], b)].clone());
            let mat = square_inv.matmul(&sel);
            if basis.matmul(&mat) != image {
                return Err(Error::Internal(format!("{label}: subspace is not W-stable")));
            }
            Ok(mat)
        })
        .collect::<Result<Vec<_>>>()?;
    let gram = basis.transpose().matmul(&basis);
    Ok(WRepresentation::new(label, generators, gram))
}

/// Tries the candidates in order of increasing index [W:H] and builds the
/// representation from the first one containing `chi` exactly once.
pub fn search_irrep(w: &WeylGroup, chi: &[Rational], candidates: &[SubgroupData], label: &str) -> Result<WRepresentation> {
    let one = Rational::from_integer(1.into());
    let mut good: Vec<(usize, &SubgroupData)> = candidates
        .iter()
        .filter_map(|c| match restriction_multiplicity(w, chi, c) {
            Some((mult, index)) if mult == one => Some((index, c)),
            _ => None,
        })
        .collect();
    good.sort_by_key(|&(index, c)| (index, c.len()));
    let (_, best) = good.first().ok_or_else(|| Error::UnsupportedRepresentation(format!("{label}: no monomial model among the candidates")))?;
    induced_irrep(w, chi, best, label)
}
