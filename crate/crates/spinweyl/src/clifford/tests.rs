use super::*;
use crate::group::GroupElem;
use crate::linalg::{to_cyclotomic, CMatrix};
use crate::rootsystem::{CartanType, RootSystem};
use crate::scalars::CyclotomicNumber as C;

fn rs(s: &str) -> RootSystem {
    RootSystem::build(CartanType::parse(s).unwrap()).unwrap()
}

#[test]
fn clifford_relations() {
    let e1 = CliffordElement::basis(3, 0);
    let e2 = CliffordElement::basis(3, 1);
    assert_eq!(e1.mul(&e1), CliffordElement::scalar(3, C::from_int(-1)));
    assert_eq!(e1.mul(&e2), e2.mul(&e1).neg());
    let e12 = e1.mul(&e2);
    assert_eq!(e12.transpose(), e12.neg());
    assert_eq!(e12.transpose(), e2.transpose().mul(&e1.transpose()));
    assert!(e12.is_even() && e1.is_odd());
    assert_eq!(e1.epsilon(), e1.neg());
}

#[test]
fn transpose_is_an_anti_involution() {
    let a = CliffordElement::from_vector(&[C::from_int(1), C::from_int(2), C::from_int(-1), C::from_int(3)]);
    let b = CliffordElement::from_vector(&[C::from_int(0), C::sqrt2(), C::from_int(1), C::from_int(0)]);
    let ab = a.mul(&b).add(&CliffordElement::one(4));
    let c = ab.mul(&a);
    assert_eq!(c.transpose(), a.transpose().mul(&ab.transpose()));
    assert_eq!(c.transpose().transpose(), c);
}

#[test]
fn lifted_reflections_satisfy_the_cover_presentation() {
    for t in ["G2", "F4", "B3", "C3", "D4", "A3", "E6"] {
        let r = rs(t);
        let z = PinElement::z(&r);
        let lifts: Vec<PinElement> = (0..r.rank()).map(|s| lift_reflection(&r, s).unwrap()).collect();
        let m = r.coxeter_matrix();
        for i in 0..r.rank() {
            assert_eq!(lifts[i].mul(&lifts[i]).value, z.value, "{t}");
            let proj = lifts[i].projection_matrix().unwrap();
            assert_eq!(proj, to_cyclotomic(&RootSystem::reflection_matrix(&r.simple_roots()[i])));
            for j in 0..r.rank() {
                if i == j {
                    continue;
                }
                let st = lifts[i].mul(&lifts[j]);
                let p = (0..m[i][j]).fold(PinElement::identity(&r), |acc, _| acc.mul(&st));
                assert_eq!(p.value, z.value, "{t} {i} {j}");
            }
        }
    }
}

#[test]
fn small_covers() {
    let a1 = PinCover::build(&rs("A1"), 100).unwrap();
    assert_eq!(a1.order(), 4);
    let s = &a1.group().gens()[0];
    assert_eq!(a1.group().element_order(a1.group().index_of(s).unwrap()), 4);
    let g2 = PinCover::build(&rs("G2"), 100).unwrap();
    assert_eq!(g2.order(), 24);
    for x in g2.elements() {
        assert!(x.is_unit_norm());
        assert!(x.value.is_homogeneous());
        let m = x.projection_matrix().unwrap();
        assert_eq!(m, to_cyclotomic(&g2.root_system().perm_matrix(&x.perm)));
    }
    assert!(PinCover::build(&rs("E6"), 1000).is_err());
}

#[test]
fn section_is_a_cocycle() {
    let r = rs("B3");
    let cover = PinCover::build(&r, 1000).unwrap();
    assert_eq!(cover.order(), 96);
    let w = r.weyl_group(100).unwrap();
    let z = cover.z().clone();
    for a in (0..w.order()).step_by(5) {
        for b in (0..w.order()).step_by(7) {
            let wa = w.group().word(a);
            let wb = w.group().word(b);
            let prod = cover.section(&wa).mul(&cover.section(&wb));
            let ab = w.group().word(w.group().mul(a, b));
            let s = cover.section(&ab);
            assert!(prod.key() == s.key() || prod.key() == s.mul(&z).key());
        }
    }
}

#[test]
fn spin_module_dimensions() {
    assert_eq!(SpinModule::new(&rs("F4"), Variant::Unique).unwrap().dimension(), 4);
    assert_eq!(SpinModule::new(&rs("E6"), Variant::Unique).unwrap().dimension(), 8);
    assert_eq!(SpinModule::new(&rs("E7"), Variant::Plus).unwrap().dimension(), 8);
    assert_eq!(SpinModule::new(&rs("G2"), Variant::Unique).unwrap().dimension(), 2);
    for v in [Variant::Plus, Variant::Minus] {
        assert_eq!(SpinModule::new(&rs("B3"), v).unwrap().dimension(), 2);
        assert_eq!(SpinModule::new(&rs("A3"), v).unwrap().dimension(), 2);
    }
    assert!(SpinModule::new(&rs("B3"), Variant::Unique).is_err());
    assert!(SpinModule::new(&rs("F4"), Variant::Plus).is_err());
}

#[test]
fn gamma_relations() {
    for (t, v) in [("G2", Variant::Unique), ("A3", Variant::Minus), ("E6", Variant::Unique), ("B3", Variant::Plus)] {
        let s = SpinModule::new(&rs(t), v).unwrap();
        let g = s.gamma();
        let d = s.dimension();
        for i in 0..g.len() {
            for j in 0..g.len() {
                let ac = &g[i].matmul(&g[j]) + &g[j].matmul(&g[i]);
                let expect = if i == j { CMatrix::scalar(d, &C::from_int(-2)) } else { CMatrix::zeros(d, d) };
                assert_eq!(ac, expect, "{t} {i} {j}");
            }
        }
    }
}

#[test]
fn spin_characters() {
    for (t, variants) in [("G2", vec![Variant::Unique]), ("B3", vec![Variant::Plus, Variant::Minus]), ("A3", vec![Variant::Plus, Variant::Minus])] {
        let r = rs(t);
        let cover = PinCover::build(&r, 10_000).unwrap();
        let mut chars = Vec::new();
        for v in variants {
            let s = SpinModule::new(&r, v).unwrap();
            let dim = C::from_int(s.dimension() as i64);
            assert_eq!(s.character(&PinElement::identity(&r)), dim);
            assert_eq!(s.character(cover.z()), -dim.clone());
            let mut norm = C::zero();
            let mut vals = Vec::new();
            for x in cover.elements() {
                let t1 = s.character(x);
                assert_eq!(t1, s.character_formula(&x.value));
                norm += &t1 * &t1.conj();
                vals.push(t1);
            }
            // irreducible on the cover
            assert_eq!(norm, C::from_int(cover.order() as i64));
            chars.push(vals);
        }
        if chars.len() == 2 {
            assert_ne!(chars[0], chars[1]);
        }
    }
    let g2 = rs("G2");
    let s = SpinModule::new(&g2, Variant::Unique).unwrap();
    for i in 0..g2.num_positive() {
        assert!(s.character(&lift_reflection(&g2, i).unwrap()).is_zero());
    }
}

#[test]
fn fast_cover_matches_exact_cover() {
    for t in ["G2", "B3", "A3"] {
        let r = rs(t);
        let exact = PinCover::build(&r, 10_000).unwrap();
        let fast = FastCover::build(&r, 10_000).unwrap();
        assert_eq!(fast.order(), exact.order());
        let f = fast.field();
        for (i, x) in exact.elements().iter().enumerate() {
            let word = exact.group().word(i);
            let j = fast.word_index(&word);
            for (v, s) in fast.spin_modules().iter().enumerate() {
                assert_eq!(fast.spin_trace(v, j), s.character(x).to_mod_p(f), "{t}");
            }
        }
        assert_eq!(fast.classes().sizes[fast.z_class()], 1);
    }
}

#[test]
fn f4_cover_order() {
    let fast = FastCover::build(&rs("F4"), 10_000).unwrap();
    assert_eq!(fast.order(), 2304);
}
