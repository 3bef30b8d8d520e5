//! Dixon-Schneider over a prime field, followed by an exact lift of every
//! character to Q(zeta_o) through the power maps.

use super::CharacterTable;
use crate::error::{Error, Result};
use crate::group::{Classes, FiniteGroup, GroupElem};
use crate::scalars::ntheory::is_prime;
use crate::scalars::{CyclotomicNumber, PrimeField};
use rayon::prelude::*;

/// Largest group handled by default.
pub const DEFAULT_GATE: usize = 250_000;

/// The smallest prime p = 1 mod e above 2 * (largest class) * sqrt|G|.
pub fn choose_prime(order: usize, classes: &Classes) -> Result<PrimeField> {
    let e = classes.exponent() as u64;
    let maxc = *classes.sizes.iter().max().unwrap() as f64;
    let lower = (2.0 * maxc * (order as f64).sqrt()).ceil() as u64;
    let mut p = (lower / e + 1) * e + 1;
    while !is_prime(p) {
        p += e;
    }
    if p >= 1 << 28 {
        return Err(Error::GroupTooLarge { order, limit: DEFAULT_GATE });
    }
    Ok(PrimeField::new(p))
}

// Row-reduced basis of a subspace of F_p^r, with pivot columns.
#[derive(Clone)]
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn rref(f: &PrimeField, mut rows: Vec<Vec<u64>>) -> Space {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = f.inv(rows[r][c]);
        rows[r].iter_mut().for_each(|x| *x = f.mul(*x, inv));
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let m = rows[k][c];
                for j in 0..ncols {
                    let t = f.mul(m, rows[r][j]);
                    rows[k][j] = f.sub(rows[k][j], t);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Space { basis: rows, pivots }
}

// Null space of a square matrix (row-major).
fn kernel(f: &PrimeField, a: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = a.len();
    let red = rref(f, a.to_vec());
    let free: Vec<usize> = (0..n).filter(|c| !red.pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in red.basis.iter().zip(&red.pivots) {
                v[pc] = f.neg(row[fc]);
            }
            v
        })
        .collect()
}

// Faddeev-LeVerrier, lowest degree first.
fn charpoly(f: &PrimeField, a: &[Vec<u64>]) -> Vec<u64> {
    let d = a.len();
    let mut c = vec![0u64; d + 1];
    c[d] = 1;
    let mut m = vec![vec![0u64; d]; d];
    for k in 1..=d {
        let mut next = vec![vec![0u64; d]; d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u64;
                for l in 0..d {
                    acc = (acc + a[i][l] * m[l][j]) % f.p;
                }
                next[i][j] = acc;
            }
            next[i][i] = f.add(next[i][i], c[d - k + 1]);
        }
        let mut tr = 0u64;
        for i in 0..d {
            for l in 0..d {
                tr = (tr + a[i][l] * next[l][i]) % f.p;
            }
        }
        c[d - k] = f.mul(f.neg(tr), f.inv(k as u64));
        m = next;
    }
    c
}

/// Class matrix `m[i][k] = #{x in C_j : x g_i in C_k}`; the column of
/// character values is an eigenvector with eigenvalue |C_j| chi(g_j)/chi(1).
fn class_matrix(members: &[u32], table: &[Vec<u32>], rep_words: &[Vec<usize>], class_of: &[u32]) -> Vec<Vec<u64>> {
    let r = rep_words.len();
    rep_words
        .par_iter()
        .map(|w| {
            let mut row = vec![0u64; r];
            for &x in members {
                let y = w.iter().fold(x, |acc, &s| table[acc as usize][s]);
                row[class_of[y as usize] as usize] += 1;
            }
            row
        })
        .collect()
}

/// Character values mod p of all irreducible characters, as columns over
/// classes, together with their degrees.
pub fn characters_mod_p<E: GroupElem>(
    group: &FiniteGroup<E>,
    classes: &Classes,
    f: &PrimeField,
) -> Result<Vec<(u64, Vec<u64>)>> {
    let r = classes.len();
    let n = group.order();
    let table = group.right_mul_table();
    let members = classes.members();
    let rep_words: Vec<Vec<usize>> = classes.reps.iter().map(|&x| group.word(x)).collect();
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|j| (i == j) as u64).collect()).collect();
    let mut spaces = vec![rref(f, identity)];
    let mut order: Vec<usize> = (1..r).collect();
    order.sort_by_key(|&j| (classes.sizes[j], j));
    for j in order {
        if spaces.iter().all(|s| s.basis.len() == 1) {
            break;
        }
        let m = class_matrix(&members[j], &table, &rep_words, &classes.class_of);
        let m: Vec<Vec<u64>> = m.into_iter().map(|row| row.into_iter().map(|x| x % f.p).collect()).collect();
        let mut next = Vec::new();
        for sp in spaces {
            let d = sp.basis.len();
            if d == 1 {
                next.push(sp);
                continue;
            }
            // restricted action: (M b_c) read off at the pivots
            let images: Vec<Vec<u64>> = sp
                .basis
                .iter()
                .map(|b| (0..r).map(|i| (0..r).fold(0, |acc, k| (acc + m[i][k] * b[k]) % f.p)).collect())
                .collect();
            let a: Vec<Vec<u64>> = (0..d).map(|i| (0..d).map(|c| images[c][sp.pivots[i]]).collect()).collect();
            let roots = f.roots(&charpoly(f, &a));
            if roots.len() == 1 {
                next.push(sp);
                continue;
            }
            let mut total = 0;
            for lam in roots {
                let shifted: Vec<Vec<u64>> = (0..d)
                    .map(|i| (0..d).map(|c| if i == c { f.sub(a[i][c], lam) } else { a[i][c] }).collect())
                    .collect();
                let ker = kernel(f, &shifted);
                total += ker.len();
                let vecs = ker
                    .iter()
                    .map(|u| (0..r).map(|k| (0..d).fold(0, |acc, c| (acc + u[c] * sp.basis[c][k]) % f.p)).collect())
                    .collect();
                next.push(rref(f, vecs));
            }
            if total != d {
                return Err(Error::Internal("class matrix is not diagonalizable mod p".into()));
            }
        }
        spaces = next;
    }
    if spaces.len() != r {
        return Err(Error::Internal("Dixon-Schneider did not converge".into()));
    }
    spaces
        .into_iter()
        .map(|sp| {
            let v = &sp.basis[0];
            if v[0] == 0 {
                return Err(Error::Internal("eigenvector vanishes at the identity".into()));
            }
            let inv0 = f.inv(v[0]);
            let v: Vec<u64> = v.iter().map(|&x| f.mul(x, inv0)).collect();
            let s = (0..r).fold(0, |acc, k| f.add(acc, f.mul(f.from_i64(classes.sizes[k] as i64), f.mul(v[k], v[classes.inverse[k]]))));
            let d2 = f.mul(f.from_i64(n as i64), f.inv(s));
            let deg = (1..=(n as f64).sqrt() as u64 + 1)
                .find(|&d| d * d % f.p == d2)
                .ok_or_else(|| Error::Internal("no integral degree".into()))?;
            Ok((deg, v.iter().map(|&x| f.mul(x, deg)).collect()))
        })
        .collect()
}

/// Lift a character given mod p to exact values: on a class of order o the
/// eigenvalue multiplicities are recovered by a discrete Fourier transform
/// over the powers of the representative.
pub fn lift_character(values: &[u64], degree: u64, classes: &Classes, f: &PrimeField) -> Result<Vec<CyclotomicNumber>> {
    (0..classes.len())
        .map(|c| {
            let o = classes.orders[c];
            let z = f.root_of_unity(o as u64);
            let oinv = f.inv(o as u64 % f.p);
            let mults = (0..o)
                .map(|t| {
                    let zt = f.pow(f.inv(z), t as u64);
                    let mut acc = 0u64;
                    let mut zp = 1u64;
                    for l in 0..o {
                        acc = f.add(acc, f.mul(values[classes.powers[c][l]], zp));
                        zp = f.mul(zp, zt);
                    }
                    let m = f.mul(acc, oinv);
                    if m > degree {
                        Err(Error::Internal(format!("eigenvalue multiplicity {m} exceeds degree {degree}")))
                    } else {
                        Ok(m as i64)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CyclotomicNumber::from_powers(o as u64, &mults))
        })
        .collect()
}

/// The character table of a group given by explicit elements.
pub fn dixon_schneider<E: GroupElem>(group: &FiniteGroup<E>, classes: &Classes, group_id: &str) -> Result<CharacterTable> {
    dixon_schneider_gated(group, classes, group_id, DEFAULT_GATE)
}

pub fn dixon_schneider_gated<E: GroupElem>(
    group: &FiniteGroup<E>,
    classes: &Classes,
    group_id: &str,
    gate: usize,
) -> Result<CharacterTable> {
    if group.order() > gate {
        return Err(Error::GroupTooLarge { order: group.order(), limit: gate });
    }
    let f = choose_prime(group.order(), classes)?;
    let chars = characters_mod_p(group, classes, &f)?
        .into_iter()
        .map(|(d, v)| lift_character(&v, d, classes, &f))
        .collect::<Result<Vec<_>>>()?;
    Ok(CharacterTable::new(group_id, group.order(), classes, chars))
}
