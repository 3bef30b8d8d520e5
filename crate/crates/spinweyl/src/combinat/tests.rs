use super::*;
use crate::rootsystem::ParameterFunction;
use crate::scalars::{int, rat, Rational};
use proptest::prelude::*;

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec())
}

fn z(cycles: &[usize]) -> i64 {
    let mut out = 1i64;
    let mut c = cycles.to_vec();
    c.sort();
    for (len, group) in &itertools::Itertools::chunk_by(c.iter(), |x| **x) {
        let m = group.count() as i64;
        out *= (len as i64).pow(m as u32) * (1..=m).product::<i64>();
    }
    out
}

// <chi_lambda, Ind(chi_mu x chi_nu)> through characters only
fn lr_by_characters(lambda: &Partition, mu: &Partition, nu: &Partition) -> i64 {
    let a = mu.size();
    let mut num = Rational::from_integer(0.into());
    for rho in Partition::all(lambda.size()) {
        let cyc = rho.parts();
        let mut ind = 0;
        for mask in 0u32..(1 << cyc.len()) {
            let left: Vec<usize> = (0..cyc.len()).filter(|i| mask >> i & 1 == 1).map(|i| cyc[i]).collect();
            if left.iter().sum::<usize>() != a {
                continue;
            }
            let right: Vec<usize> = (0..cyc.len()).filter(|i| mask >> i & 1 == 0).map(|i| cyc[i]).collect();
            ind += sn_character(mu, &left) * sn_character(nu, &right);
        }
        num += rat(sn_character(lambda, cyc) * ind, z(cyc));
    }
    assert!(num.is_integer());
    num.to_integer().try_into().unwrap()
}

#[test]
fn partitions() {
    assert_eq!(Partition::all(5).len(), 7);
    assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
    assert_eq!(p(&[3, 2]).dimension(), 5);
    assert_eq!(p(&[4, 2, 1]).dimension(), 35);
    assert_eq!(Partition::parse("(3,2,1)").unwrap(), p(&[3, 2, 1]));
    assert!(Partition::parse("1,2").is_err());
    assert_eq!(Bipartition::parse("2,1 x 1").unwrap().to_string(), "(2,1)x(1)");
    assert_eq!(Bipartition::all(3).len(), 10);
    assert_eq!(Bipartition::parse("(1)x(1)").unwrap().dimension(), 2);
}

#[test]
fn hooks() {
    assert_eq!(hook_partition(2, 2), p(&[3, 1]));
    assert_eq!(hook_partition(1, 5), p(&[5]));
    assert_eq!(hook_partition(3, 2), p(&[4, 2]));
    for d in 1..6 {
        for k in 1..6 {
            let h = hook_partition(d, k);
            assert!(h.is_strict());
            assert_eq!(h.size(), d * k);
            assert_eq!(h.len(), d.min(k));
            assert_eq!(h, hook_partition(k, d));
        }
    }
}

#[test]
fn murnaghan_nakayama_s4() {
    // columns: 1^4, 2 1^2, 2^2, 3 1, 4
    let classes: [&[usize]; 5] = [&[1, 1, 1, 1], &[2, 1, 1], &[2, 2], &[3, 1], &[4]];
    let expect = [
        (p(&[4]), [1, 1, 1, 1, 1]),
        (p(&[3, 1]), [3, 1, -1, 0, -1]),
        (p(&[2, 2]), [2, 0, 2, -1, 0]),
        (p(&[2, 1, 1]), [3, -1, -1, 0, 1]),
        (p(&[1, 1, 1, 1]), [1, -1, 1, 1, -1]),
    ];
    for (lambda, row) in expect {
        for (c, v) in classes.iter().zip(row) {
            assert_eq!(sn_character(&lambda, c), v, "{lambda} at {c:?}");
        }
    }
}

#[test]
fn lr_examples() {
    assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1])).unwrap(), 1);
    assert_eq!(lr_coefficient(&p(&[1, 1]), &p(&[1]), &p(&[1])).unwrap(), 1);
    assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
    assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[2, 1])).unwrap(), 2);
    assert!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[1])).is_err());
}

#[test]
fn lr_matches_induced_characters() {
    for n in 1..=6 {
        for a in 0..=n {
            for mu in Partition::all(a) {
                for nu in Partition::all(n - a) {
                    for lambda in Partition::all(n) {
                        let c = lr_coefficient(&lambda, &mu, &nu).unwrap() as i64;
                        assert_eq!(c, lr_by_characters(&lambda, &mu, &nu), "{lambda} {mu} {nu}");
                        assert_eq!(c, lr_coefficient(&lambda, &nu, &mu).unwrap() as i64);
                    }
                }
            }
        }
    }
}

#[test]
fn rectangular_examples() {
    assert_eq!(rectangular_lr_partitions(2, 1, 1, 1), vec![p(&[2, 1]), p(&[3])]);
    assert_eq!(rectangular_lr_partitions(1, 1, 1, 1), vec![p(&[1, 1]), p(&[2])]);
    for (d1, m1, d2, m2) in [(2, 2, 1, 3), (1, 3, 2, 2), (3, 1, 3, 1), (2, 3, 3, 1)] {
        assert!(rectangular_rules_hold(d1, m1, d2, m2), "{d1} {m1} {d2} {m2}");
    }
}

#[test]
fn tableau_rule() {
    let one = ParameterFunction::one();
    let row = central_character_tableau(&p(&[4]));
    assert_eq!(row.eval(&one), vec![int(1), int(2), int(3), int(4)]);
    let col = central_character_tableau(&p(&[1, 1, 1]));
    let k = ParameterFunction::new(int(3), int(2));
    assert_eq!(col.eval(&k), vec![int(3), int(1), int(-1)]);
    let hook = central_character_tableau(&p(&[2, 1]));
    assert_eq!(hook.eval(&one), vec![int(1), int(2), int(0)]);
    assert_eq!(hook.entries[1], Linear::new(int(1), int(1)));
    assert_eq!(hook.entries[2], Linear::new(int(1), int(-1)));
    assert_eq!(hook.to_string(), "(1*ks, 1*ks+1*kl, 1*ks-1*kl)");
}

#[test]
fn reflection_tensor_moves() {
    let b = Bipartition::parse("1 x 1").unwrap();
    let got: Vec<String> = refl_tensor_b(&b).iter().map(|x| x.to_string()).collect();
    assert_eq!(got, vec!["0x(1,1)", "0x(2)", "(1,1)x0", "(2)x0"]);
    let triv = Bipartition::parse("3 x 0").unwrap();
    assert!(refl_tensor_b(&triv).contains(&Bipartition::parse("2 x 1").unwrap()));
    for bp in Bipartition::all(4) {
        let moves = refl_tensor_b(&bp);
        assert!(!moves.contains(&bp));
        let dim: u128 = moves.iter().map(|m| m.dimension()).sum();
        assert_eq!(dim, bp.dimension() * 4);
    }
}

#[test]
fn hyperoctahedral_characters_are_orthonormal() {
    // class sizes of W(B_n) from signed cycle types
    let n = 3;
    let mut types = Vec::new();
    for a in 0..=n {
        for pos in Partition::all(a) {
            for neg in Partition::all(n - a) {
                types.push(SignedCycleType { pos: pos.parts().to_vec(), neg: neg.parts().to_vec() });
            }
        }
    }
    let zb = |t: &SignedCycleType| -> i64 {
        let all: Vec<usize> = t.pos.iter().chain(&t.neg).copied().collect();
        let both: i64 = [&t.pos, &t.neg].iter().map(|c| z(c)).product();
        both * 2i64.pow(all.len() as u32)
    };
    let irreps = Bipartition::all(n);
    for x in &irreps {
        for y in &irreps {
            let s: Rational = types.iter().map(|t| rat(bn_character(x, t) * bn_character(y, t), zb(t))).sum();
            assert_eq!(s, int((x == y) as i64), "{x} {y}");
        }
        let id = SignedCycleType { pos: vec![1; n], neg: vec![] };
        assert_eq!(bn_character(x, &id) as u128, x.dimension());
    }
    let refl = Bipartition::parse("2 x 1").unwrap();
    assert_eq!(bn_character(&refl, &SignedCycleType { pos: vec![1, 1], neg: vec![1] }), 1);
}

#[test]
fn type_b_lemma_shapes() {
    let t1 = type_b_spin_decomposition(&Bipartition::parse("2,1 x 0").unwrap(), SpinSign::Plus);
    assert_eq!(t1, vec![SpinConstituent { lambda: p(&[2, 1]), sign: SpinSign::Plus, mult: 1 }]);
    let t1r = type_b_spin_decomposition(&Bipartition::parse("0 x 2,1").unwrap(), SpinSign::Plus);
    assert_eq!(t1r, vec![SpinConstituent { lambda: p(&[2, 1]), sign: SpinSign::Minus, mult: 1 }]);
    let mixed = type_b_spin_decomposition(&Bipartition::parse("2 x 1").unwrap(), SpinSign::Plus);
    let lambdas: Vec<Partition> = mixed.iter().map(|c| c.lambda.clone()).collect();
    assert_eq!(lambdas, vec![p(&[2, 1]), p(&[3])]);
}

#[test]
fn type_a_formula_dimensions() {
    for n in 2..=10 {
        for d in (1..=n).filter(|d| n % d == 0) {
            let k = n / d;
            let pred = type_a_spin_tensor(d, k, SpinSign::Plus);
            let dim: u128 = pred.iter().map(|c| c.mult as u128 * spin_degree(&c.lambda)).sum();
            let spin = 1u128 << ((n - 1) / 2);
            assert_eq!(dim, Partition::rectangle(d, k).dimension() * spin, "d={d} k={k}");
        }
    }
    // the printed powers of two overshoot already for the sign of S_3
    let printed = type_a_spin_tensor_printed(1, 3, SpinSign::Single);
    assert_eq!(printed[0].mult as u128 * spin_degree(&printed[0].lambda), 4);
}

#[test]
fn candidates() {
    let a3 = one_wtype_candidates(crate::rootsystem::CartanType::A(3), &ParameterFunction::one()).unwrap();
    let labels: Vec<&str> = a3.iter().map(|c| c.label.as_str()).collect();
    assert_eq!(labels, vec!["(1,1,1,1)", "(2,2)", "(4)"]);
    let g2 = one_wtype_candidates(crate::rootsystem::CartanType::G2, &ParameterFunction::one()).unwrap();
    let labels: Vec<&str> = g2.iter().map(|c| c.label.as_str()).collect();
    assert_eq!(labels, vec!["(1,0)", "(1,6)", "(1,3)'", "(1,3)''", "(2,2)"]);
    let b2 = one_wtype_candidates(crate::rootsystem::CartanType::B(2), &ParameterFunction::new(int(0), int(1))).unwrap();
    assert!(b2.iter().any(|c| c.label == "(1)x(1)"));
    let b2 = one_wtype_candidates(crate::rootsystem::CartanType::B(2), &ParameterFunction::one()).unwrap();
    assert!(!b2.iter().any(|c| c.label == "(1)x(1)"));
}

proptest! {
    #[test]
    fn lr_is_symmetric(a in 0usize..5, b in 0usize..5, i in 0usize..30, j in 0usize..30, l in 0usize..60) {
        let mus = Partition::all(a);
        let nus = Partition::all(b);
        let lams = Partition::all(a + b);
        let (mu, nu, lambda) = (&mus[i % mus.len()], &nus[j % nus.len()], &lams[l % lams.len()]);
        prop_assert_eq!(lr_coefficient(lambda, mu, nu).unwrap(), lr_coefficient(lambda, nu, mu).unwrap());
        prop_assert_eq!(
            lr_coefficient(lambda, mu, nu).unwrap(),
            lr_coefficient(&lambda.transpose(), &mu.transpose(), &nu.transpose()).unwrap()
        );
    }

    #[test]
    fn central_character_is_linear(parts in proptest::collection::vec(1usize..5, 1..4), ks in -5i64..5, kl in -5i64..5) {
        let lambda = Partition::new(parts);
        let c = central_character_tableau(&lambda);
        let k = ParameterFunction::new(int(ks), int(kl));
        let v = c.eval(&k);
        let sum: Rational = v.iter().sum();
        let expect: i64 = lambda.contents().iter().map(|x| ks + kl * x).sum();
        prop_assert_eq!(sum, int(expect));
    }
}
