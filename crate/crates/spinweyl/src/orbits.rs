//! Nilpotent orbit labels and middle elements of Lie triples, used to read
//! central characters at equal parameters.

use crate::chartab::{casimir_polynomial, CoverTables};
use crate::combinat::{central_character_tableau, Partition};
use crate::error::{Error, Result};
use crate::rootsystem::{dot, ParameterFunction};
use crate::scalars::{int, CyclotomicNumber, Rational};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitKind {
    /// Jordan type of a classical orbit.
    Classical(Partition),
    /// A Bala-Carter label, kept verbatim.
    Exceptional(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitLabel {
    pub kind: OrbitKind,
    pub middle_h: Option<Vec<Rational>>,
}

impl OrbitLabel {
    /// The orbit of sl_n with Jordan type lambda.
    pub fn type_a(lambda: &Partition) -> Self {
        Self { middle_h: Some(middle_element_type_a(lambda)), kind: OrbitKind::Classical(lambda.clone()) }
    }

    /// The orbit attached to lambda by the tableau rule in type B, with
    /// middle element twice the tableau vector at k = 1.
    pub fn type_b_tableau(lambda: &Partition) -> Self {
        let h = central_character_tableau(lambda).eval(&ParameterFunction::one()).into_iter().map(|x| x * int(2)).collect();
        Self { middle_h: Some(h), kind: OrbitKind::Classical(lambda.clone()) }
    }

    pub fn exceptional(label: &str) -> Self {
        Self { kind: OrbitKind::Exceptional(label.trim().to_string()), middle_h: None }
    }

    /// (h, h), when the middle element is known.
    pub fn h_squared(&self) -> Option<Rational> {
        self.middle_h.as_ref().map(|h| dot(h, h))
    }
}

impl fmt::Display for OrbitLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrbitKind::Classical(p) => write!(f, "({p})"),
            OrbitKind::Exceptional(s) => f.write_str(s),
        }
    }
}

/// Middle element of the Lie triple of Jordan type lambda in sl_n: the
/// strings p-1, p-3, ..., 1-p for every part p, in decreasing order.
pub fn middle_element_type_a(lambda: &Partition) -> Vec<Rational> {
    let mut h: Vec<i64> = lambda.parts().iter().flat_map(|&p| (0..p).map(move |i| p as i64 - 1 - 2 * i as i64)).collect();
    h.sort_by(|a, b| b.cmp(a));
    h.into_iter().map(int).collect()
}

/// The central character h/2 attached to an orbit at k = 1.
pub fn identcc(label: &OrbitLabel) -> Result<Vec<Rational>> {
    let h = label.middle_h.as_ref().ok_or_else(|| Error::InvalidInput(format!("no middle element stored for {label}")))?;
    Ok(h.iter().map(|x| x / int(2)).collect())
}

/// Whether the Casimir of the cover acts on the row `sigma` of the cover
/// table by (h, h) at k = 1.
pub fn casimir_matches_hh(sigma: usize, label: &OrbitLabel, tables: &CoverTables) -> Result<bool> {
    let hh = label.h_squared().ok_or_else(|| Error::InvalidInput(format!("no middle element stored for {label}")))?;
    let cas = casimir_polynomial(&tables.cover, tables.table.character(sigma))?.eval(&ParameterFunction::one());
    Ok(cas == CyclotomicNumber::from_rational(hh))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{hook_partition, Bipartition};
    use crate::heckemod::classical_class_types;
    use crate::rootsystem::{CartanType, RootSystem};
    use num_traits::Zero;
    use proptest::prelude::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn middle_elements() {
        assert_eq!(middle_element_type_a(&Partition::new(vec![2])), q(&[1, -1]));
        assert_eq!(middle_element_type_a(&Partition::new(vec![3, 1])), q(&[2, 0, 0, -2]));
        assert_eq!(middle_element_type_a(&Partition::new(vec![1; 4])), q(&[0, 0, 0, 0]));
    }

    #[test]
    fn identcc_examples() {
        let hook = OrbitLabel::type_a(&Partition::new(vec![3, 1]));
        assert_eq!(identcc(&hook).unwrap(), q(&[1, 0, 0, -1]));
        assert!(identcc(&OrbitLabel::type_a(&Partition::new(vec![1; 3]))).unwrap().iter().all(|x| x.is_zero()));
        let regular = identcc(&OrbitLabel::type_a(&Partition::new(vec![4]))).unwrap();
        assert_eq!(regular, vec![Rational::new(3.into(), 2.into()), Rational::new(1.into(), 2.into()), Rational::new((-1).into(), 2.into()), Rational::new((-3).into(), 2.into())]);
        assert!(identcc(&OrbitLabel::exceptional("F4(a_3)")).is_err());
    }

    proptest! {
        #[test]
        fn middle_element_sums_to_zero(parts in proptest::collection::vec(1usize..6, 1..5)) {
            let lambda = Partition::new(parts);
            let h = middle_element_type_a(&lambda);
            prop_assert_eq!(h.len(), lambda.size());
            prop_assert!(h.iter().fold(Rational::zero(), |a, b| a + b).is_zero());
            prop_assert!(h.windows(2).all(|w| w[0] >= w[1]));
        }
    }

    #[test]
    fn casimir_on_hook_orbits() {
        for n in 2..=6usize {
            let rs = RootSystem::build(CartanType::A(n - 1)).unwrap();
            let tables = CoverTables::build(&rs).unwrap();
            for d in (1..=n).filter(|d| n % d == 0) {
                let rect = Partition::rectangle(d, n / d);
                let row = crate::heckemod::weyl_row(&crate::heckemod::build_irrep(&rs, &rect.to_string()).unwrap(), &tables).unwrap();
                let label = OrbitLabel::type_a(&hook_partition(d, n / d));
                for v in 0..tables.spin.len() {
                    for (c, _) in tables.decompose_spin_tensor(row, v).unwrap().constituents {
                        assert!(casimir_matches_hh(c, &label, &tables).unwrap(), "n={n} d={d}");
                    }
                }
            }
        }
    }

    #[test]
    fn casimir_on_type_b_tableaux() {
        for n in 2..=5usize {
            let rs = RootSystem::build(CartanType::B(n)).unwrap();
            let tables = CoverTables::build(&rs).unwrap();
            let types = classical_class_types(tables.cover.weyl()).unwrap();
            for lambda in Partition::all(n) {
                let b = Bipartition::new(lambda.clone(), Partition::empty());
                let chi: Vec<CyclotomicNumber> = types.iter().map(|t| CyclotomicNumber::from_int(crate::combinat::bn_character(&b, t))).collect();
                let row = tables.weyl.find(&chi).unwrap();
                let label = OrbitLabel::type_b_tableau(&lambda);
                for v in 0..tables.spin.len() {
                    for (c, _) in tables.decompose_spin_tensor(row, v).unwrap().constituents {
                        assert!(casimir_matches_hh(c, &label, &tables).unwrap(), "B{n} {lambda}");
                    }
                }
            }
        }
    }

    #[test]
    fn trivial_pairs_with_zero_orbit() {
        let label = OrbitLabel::type_a(&Partition::new(vec![1; 3]));
        assert_eq!(label.h_squared(), Some(Rational::zero()));
        let rs = RootSystem::build(CartanType::A(2)).unwrap();
        let tables = CoverTables::build(&rs).unwrap();
        let vanishing: Vec<usize> = tables.genuine().into_iter().filter(|&c| casimir_matches_hh(c, &label, &tables).unwrap()).collect();
        assert!(vanishing.is_empty());
    }
}
