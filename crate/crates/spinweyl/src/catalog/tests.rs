use super::*;
use crate::chartab::DEFAULT_GATE;
use crate::heckemod::{build_irrep, commutator_test};
use crate::rootsystem::{CartanType, ParameterFunction, RootSystem};
use crate::scalars::int;

#[test]
fn golden_rows_load() {
    let rows = load_tables().unwrap();
    assert_eq!(rows_for(CartanType::G2).unwrap().len(), 3);
    assert_eq!(rows_for(CartanType::F4).unwrap().len(), 8);
    let e8 = rows.iter().find(|r| r.cartan_type == CartanType::E8 && r.sigma_labels.contains(&"(448,9)".to_string())).unwrap();
    assert_eq!(e8.constituents, vec![("7168_s".to_string(), 1)]);
    assert_eq!(e8.orbit, "E8(b_5)");
    let f4 = rows.iter().find(|r| r.sigma_labels.contains(&"(8,3)'".to_string())).unwrap();
    assert!(f4.chi_unequal_is_no());
    let e7 = rows.iter().find(|r| r.sigma_labels.contains(&"(210,10)".to_string())).unwrap();
    assert_eq!(e7.constituents, vec![("112_ss".to_string(), 1), ("560_s".to_string(), 2), ("448_s".to_string(), 1)]);
}

#[test]
fn chi_parsing() {
    let c = parse_chi("kl*w2+(-kl+ks)*w4", 4).unwrap();
    let ChiColumn::Weights(v) = c else { panic!() };
    assert_eq!(v[1].kl, int(1));
    assert_eq!((v[3].ks.clone(), v[3].kl.clone()), (int(1), int(-1)));
    assert_eq!(parse_chi("no", 2).unwrap(), ChiColumn::No);
    assert!(parse_chi("kl*w5", 4).is_err());
}

#[test]
fn g2_table() {
    let r = verify_table(CartanType::G2, Mode::Full, DEFAULT_GATE).unwrap();
    assert_eq!((r.passed, r.total), (3, 3), "{:?}", r.first_failure());
}

#[test]
fn exceptional_dims_only() {
    for ct in [CartanType::E6, CartanType::E7, CartanType::E8, CartanType::F4, CartanType::G2] {
        let r = verify_dims(ct).unwrap();
        assert!(r.all_passed(), "{ct}: {:?}", r.first_failure());
    }
}

#[test]
fn f4_no_rows_extend_at_ratio_two() {
    let rs = RootSystem::build(CartanType::F4).unwrap();
    for l in ["(4,7)'", "(4,7)''", "(6,6)''"] {
        let s = build_irrep(&rs, l).unwrap();
        assert!(commutator_test(&s, &rs, &ParameterFunction::new(int(1), int(2))));
        for (ks, kl) in GENERIC_PARAMETERS {
            assert!(!commutator_test(&s, &rs, &ParameterFunction::new(int(ks), int(kl))));
        }
    }
}

#[test]
fn g2_no_row_extends_at_ratio_three() {
    let rs = RootSystem::build(CartanType::G2).unwrap();
    let s = build_irrep(&rs, "(2,2)").unwrap();
    assert!(commutator_test(&s, &rs, &ParameterFunction::new(int(1), int(3))));
    assert!(!commutator_test(&s, &rs, &ParameterFunction::new(int(1), int(2))));
}
