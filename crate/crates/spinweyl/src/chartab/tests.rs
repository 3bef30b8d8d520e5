use super::*;
use crate::group::{FiniteGroup, Perm};
use crate::rootsystem::{CartanType, ParameterFunction, RootSystem};
use crate::scalars::{int, CyclotomicNumber as C};

fn rs(s: &str) -> RootSystem {
    RootSystem::build(CartanType::parse(s).unwrap()).unwrap()
}

fn sorted(mut v: Vec<i64>) -> Vec<i64> {
    v.sort();
    v
}

#[test]
fn symmetric_group_s3() {
    let g = FiniteGroup::generate(Perm::identity(3), vec![Perm(vec![1, 0, 2]), Perm(vec![0, 2, 1])], 100).unwrap();
    let cl = g.conjugacy_classes();
    let t = dixon_schneider(&g, &cl, "S3").unwrap();
    assert_eq!(t.degrees(), vec![1, 1, 2]);
    t.check().unwrap();
}

#[test]
fn cyclic_group_has_irrational_values() {
    let g = FiniteGroup::generate(Perm::identity(5), vec![Perm(vec![1, 2, 3, 4, 0])], 100).unwrap();
    let cl = g.conjugacy_classes();
    let t = dixon_schneider(&g, &cl, "C5").unwrap();
    assert_eq!(t.degrees(), vec![1; 5]);
    t.check().unwrap();
    assert!(t.irreps.iter().flatten().any(|x| x.conductor() == 5));
}

#[test]
fn weyl_tables() {
    for (t, n) in [("A3", 5), ("B3", 10), ("G2", 6), ("D4", 13)] {
        let r = rs(t);
        let w = r.weyl_group(10_000).unwrap();
        let tab = dixon_schneider(w.group(), w.classes(), t).unwrap();
        assert_eq!(tab.len(), n);
        tab.check().unwrap();
        // Weyl group characters are rational
        assert!(tab.irreps.iter().flatten().all(|x| x.is_rational()));
    }
}

#[test]
fn g2_cover() {
    let ct = CoverTables::build(&rs("G2")).unwrap();
    ct.table.check().unwrap();
    let gen: Vec<i64> = ct.genuine().iter().map(|&i| ct.table.degree(i)).collect();
    assert_eq!(gen, vec![2, 2, 2]);
    assert_eq!(ct.inflated_rows().unwrap().len(), 6);
    let s = ct.spin_row(0).unwrap();
    assert!(ct.is_genuine(s));
    // trivial tensor S is S
    let triv = ct.weyl.irreps.iter().position(|r| r.iter().all(|x| *x == C::one())).unwrap();
    assert_eq!(ct.decompose_spin_tensor(triv, 0).unwrap().constituents, vec![(s, 1)]);
    for sigma in 0..ct.weyl.len() {
        let d = ct.decompose_spin_tensor(sigma, 0).unwrap();
        assert_eq!(d.total_degree(&ct.table), 2 * ct.weyl.degree(sigma));
        assert!(d.constituents.iter().all(|&(i, _)| ct.is_genuine(i)));
    }
}

#[test]
fn f4_genuine_degrees() {
    let ct = CoverTables::build(&rs("F4")).unwrap();
    let gen: Vec<i64> = ct.genuine().iter().map(|&i| ct.table.degree(i)).collect();
    assert_eq!(sorted(gen), vec![4, 4, 8, 8, 8, 8, 12, 12, 24]);
    assert_eq!(ct.weyl.len(), 25);
}

#[test]
fn inner_products() {
    let ct = CoverTables::build(&rs("B3")).unwrap();
    let refl = ct.reflection_character();
    let triv = vec![C::one(); refl.len()];
    assert_eq!(ct.weyl.inner_product(&triv, &refl).unwrap(), 0);
    assert_eq!(ct.weyl.inner_product(&refl, &refl).unwrap(), 1);
    assert_eq!(ct.weyl.inner_product(&triv, &ct.sign_character()).unwrap(), 0);
    // the two spin modules of B3 are associate
    let a = ct.spin_row(0).unwrap();
    let b = ct.spin_row(1).unwrap();
    assert_ne!(a, b);
    let sgn = ct.inflate(&ct.sign_character());
    assert_eq!(ct.table.find(&CharacterTable::tensor(&ct.spin[0], &sgn)), Some(b));
}

#[test]
fn casimir_values() {
    let a1 = CoverTables::build(&rs("A1")).unwrap();
    let s = a1.spin_row(0).unwrap();
    let cas = casimir_polynomial(&a1.cover, a1.table.character(s)).unwrap();
    assert_eq!(cas.eval(&ParameterFunction::one()), C::from_int(2));
    assert_eq!(cas.eval(&ParameterFunction::equal(int(0))), C::zero());
    let g2 = CoverTables::build(&rs("G2")).unwrap();
    for i in g2.genuine() {
        let cas = casimir_polynomial(&g2.cover, g2.table.character(i)).unwrap();
        assert!(cas.eval(&ParameterFunction::one()).is_rational());
        assert!(cas.to_rationals().is_some(), "{cas}");
    }
}

#[test]
fn carter_labels() {
    let r = rs("G2");
    let w = r.weyl_group(100).unwrap();
    let t = dixon_schneider(w.group(), w.classes(), "G2").unwrap();
    let mut l = db_labels(&w, &t);
    l.sort();
    assert_eq!(l, vec!["(1,0)", "(1,3)'", "(1,3)''", "(1,6)", "(2,1)", "(2,2)"]);
    let r = rs("F4");
    let w = r.weyl_group(2000).unwrap();
    let t = dixon_schneider(w.group(), w.classes(), "F4").unwrap();
    let l = db_labels(&w, &t);
    for want in ["(1,0)", "(1,24)", "(1,12)'", "(1,12)''", "(4,8)", "(4,7)'", "(4,7)''", "(6,6)'", "(6,6)''", "(8,3)'", "(8,9)''", "(16,5)", "(12,4)", "(9,2)"] {
        assert!(l.iter().any(|x| x == want), "{want} missing from {l:?}");
    }
}

#[test]
fn table_cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("spinweyl-cache-test-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let g2 = rs("G2");
    let fresh = CoverTables::build_cached(&g2, DEFAULT_GATE, Some(&dir)).unwrap();
    assert_eq!(std::fs::read_dir(&dir).unwrap().count(), 2);
    let again = CoverTables::build_cached(&g2, DEFAULT_GATE, Some(&dir)).unwrap();
    assert_eq!(fresh.table.irreps, again.table.irreps);
    assert_eq!(fresh.weyl.irreps, again.weyl.irreps);
    for entry in std::fs::read_dir(&dir).unwrap() {
        std::fs::write(entry.unwrap().path(), "{}").unwrap();
    }
    let rebuilt = CoverTables::build_cached(&g2, DEFAULT_GATE, Some(&dir)).unwrap();
    assert_eq!(rebuilt.table.irreps, fresh.table.irreps);
    std::fs::remove_dir_all(&dir).unwrap();
}
