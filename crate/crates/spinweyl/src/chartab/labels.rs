use super::CharacterTable;
use crate::rootsystem::WeylGroup;
use crate::scalars::{int, Rational};
use num_traits::{One, ToPrimitive, Zero};

/// det(1 - t w) on V for the representative of each class of W, lowest
/// degree first.
pub fn class_determinants(w: &WeylGroup) -> Vec<Vec<Rational>> {
    let rs = w.root_system();
    let extra = rs.ambient_dim() - rs.rank();
    (0..w.classes().len())
        .map(|c| {
            let m = rs.word_matrix(&w.class_rep_word(c));
            let mut poly: Vec<Rational> = m.charpoly().into_iter().rev().collect();
            // divide out (1 - t)^extra from the fixed complement of V
            for _ in 0..extra {
                let mut q = vec![Rational::zero(); poly.len() - 1];
                let mut carry = Rational::zero();
                for (i, slot) in q.iter_mut().enumerate() {
                    carry += &poly[i];
                    *slot = carry.clone();
                }
                debug_assert!((carry + &poly[poly.len() - 1]).is_zero());
                poly = q;
            }
            poly
        })
        .collect()
}

fn invert_series(p: &[Rational], terms: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); terms];
    let inv0 = Rational::one() / &p[0];
    for i in 0..terms {
        let mut acc = if i == 0 { Rational::one() } else { Rational::zero() };
        for j in 1..=i.min(p.len() - 1) {
            acc -= &p[j] * &out[i - j];
        }
        out[i] = acc * &inv0;
    }
    out
}

/// Multiplicities of each irreducible of W in S^i(V) for i up to the
/// number of positive roots (the fake degrees).
pub fn fake_degrees(w: &WeylGroup, table: &CharacterTable) -> Vec<Vec<i64>> {
    let terms = w.root_system().num_positive() + 1;
    let series: Vec<Vec<Rational>> = class_determinants(w).iter().map(|p| invert_series(p, terms)).collect();
    let order = int(table.order as i64);
    table
        .irreps
        .iter()
        .map(|chi| {
            (0..terms)
                .map(|i| {
                    let mut acc = Rational::zero();
                    for c in 0..table.num_classes() {
                        let x = chi[c].to_rational().expect("Weyl group characters are rational");
                        acc += x * int(table.sizes[c] as i64) * &series[c][i];
                    }
                    let v = acc / &order;
                    assert!(v.is_integer());
                    v.to_integer().to_i64().unwrap()
                })
                .collect()
        })
        .collect()
}

/// The b-value: lowest degree i with the irreducible occurring in S^i(V).
pub fn b_values(w: &WeylGroup, table: &CharacterTable) -> Vec<usize> {
    fake_degrees(w, table)
        .iter()
        .map(|f| f.iter().position(|&m| m != 0).expect("every irreducible occurs in the coinvariants"))
        .collect()
}

/// Labels `(d,b)`, with `'`, `''` appended (in table order) when several
/// irreducibles share d and b.
pub fn db_labels(w: &WeylGroup, table: &CharacterTable) -> Vec<String> {
    let b = b_values(w, table);
    let db: Vec<(i64, usize)> = (0..table.len()).map(|i| (table.degree(i), b[i])).collect();
    db.iter()
        .enumerate()
        .map(|(i, key)| {
            let same: Vec<usize> = (0..db.len()).filter(|&j| db[j] == *key).collect();
            let base = format!("({},{})", key.0, key.1);
            if same.len() == 1 {
                base
            } else {
                let pos = same.iter().position(|&j| j == i).unwrap();
                format!("{base}{}", "'".repeat(pos + 1))
            }
        })
        .collect()
}
