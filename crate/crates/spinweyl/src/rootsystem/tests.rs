use super::*;
use crate::scalars::int;

fn rs(s: &str) -> RootSystem {
    RootSystem::build(CartanType::parse(s).unwrap()).unwrap()
}

#[test]
fn positive_root_counts() {
    for (t, n) in [("A1", 1), ("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36), ("E7", 63), ("E8", 120)] {
        assert_eq!(rs(t).num_positive(), n, "{t}");
    }
    let f4 = rs("F4");
    let long = (0..24).filter(|&i| f4.is_long(i)).count();
    assert_eq!((long, 24 - long), (12, 12));
    assert_eq!(f4.roots().len(), 48);
}

#[test]
fn axioms_hold() {
    for t in ["A4", "B3", "C3", "D4", "G2", "F4", "E6"] {
        let r = rs(t);
        for a in r.roots() {
            for b in r.roots() {
                assert!(r.root_index(&reflect(a, b)).is_some());
                let c = int(2) * dot(a, b) / dot(a, a);
                assert!(c.is_integer());
            }
            let double: Vec<_> = a.iter().map(|x| x * int(2)).collect();
            assert!(r.root_index(&double).is_none());
        }
    }
}

#[test]
fn a1_reflection_is_minus_one_on_v() {
    let r = rs("A1");
    assert_eq!(r.num_positive(), 1);
    let a = r.positive_roots()[0].clone();
    let m = RootSystem::reflection_matrix(&a);
    let image = m.apply(&a);
    assert_eq!(image, a.iter().map(|x| -x).collect::<Vec<_>>());
}

#[test]
fn group_orders() {
    for t in ["G2", "B3", "A3", "D4", "C3", "F4", "A5", "B4"] {
        let r = rs(t);
        let w = r.weyl_group(100_000).unwrap();
        assert_eq!(w.order() as u128, r.cartan_type().weyl_order(), "{t}");
    }
}

#[test]
fn class_counts() {
    let g2 = rs("G2").weyl_group(100).unwrap();
    assert_eq!(g2.classes().len(), 6);
    let a2 = rs("A2").weyl_group(100).unwrap();
    let mut sizes = a2.classes().sizes.clone();
    sizes.sort();
    assert_eq!(sizes, vec![1, 2, 3]);
    let f4 = rs("F4").weyl_group(2000).unwrap();
    assert_eq!(f4.classes().len(), 25);
    assert_eq!(f4.classes().sizes.iter().sum::<usize>(), 1152);
    assert_eq!(f4.classes().sizes[0], 1);
}

#[test]
fn coxeter_relations_and_invariance() {
    for t in ["G2", "F4", "B3", "D4", "E6"] {
        let r = rs(t);
        let m = r.coxeter_matrix();
        for i in 0..r.rank() {
            for j in 0..r.rank() {
                let word: Vec<usize> = (0..m[i][j]).flat_map(|_| [i, j]).collect();
                assert_eq!(r.word_matrix(&word), QMatrix::identity(r.ambient_dim()), "{t} {i} {j}");
            }
            let s = RootSystem::reflection_matrix(&r.simple_roots()[i]);
            assert_eq!(s.transpose().matmul(&s), QMatrix::identity(r.ambient_dim()));
        }
    }
}

#[test]
fn enumerated_elements_are_orthogonal() {
    let els = rs("B3").enumerate_group(100).unwrap();
    assert_eq!(els.len(), 48);
    assert!(els.iter().all(|w| w.is_orthogonal()));
    assert!(rs("E7").enumerate_group(1_000_000).is_err());
}

#[test]
fn longest_elements() {
    let b3 = rs("B3").longest_element();
    assert_eq!(b3.matrix, QMatrix::identity(3).scale(&int(-1)));
    let a2 = rs("A2").longest_element();
    assert_eq!(a2.word, vec![0, 1, 0]);
    for t in ["B3", "C4", "D4", "D6", "E7", "E8", "F4", "G2"] {
        assert!(rs(t).w0_central(), "{t}");
    }
    for t in ["A2", "A4", "E6", "D5"] {
        assert!(!rs(t).w0_central(), "{t}");
    }
    // -w0 permutes the simple roots of E6 nontrivially
    let e6 = rs("E6");
    let w0 = e6.longest_element();
    let moved = e6
        .simple_roots()
        .iter()
        .filter(|a| {
            let img: Vec<_> = w0.matrix.apply(a).iter().map(|x| -x).collect();
            assert!(e6.simple_roots().contains(&img));
            img != **a
        })
        .count();
    assert_eq!(moved, 4);
    assert_eq!(w0.length(), 36);
}

#[test]
fn coweights_are_dual_to_simple_roots() {
    for t in ["F4", "G2", "E8", "C3"] {
        let r = rs(t);
        for (i, w) in r.fundamental_coweights().iter().enumerate() {
            for (j, a) in r.simple_roots().iter().enumerate() {
                assert_eq!(dot(w, a), if i == j { int(1) } else { int(0) });
            }
        }
    }
}

#[test]
fn reflection_words() {
    let r = rs("F4");
    for i in 0..r.num_positive() {
        let w = r.reflection_word(i);
        assert_eq!(r.word_matrix(&w), RootSystem::reflection_matrix(r.root(i)));
    }
}
