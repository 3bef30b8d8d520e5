use super::{lr_coefficient, lr_expand, Bipartition, Partition};
use crate::catalog;
use crate::error::{Error, Result};
use crate::rootsystem::{CartanType, ParameterFunction};
use crate::scalars::Rational;
use num_traits::Zero;
use std::fmt;

/// hook(d x k) = (d+k-1, d+k-3, ..., |d-k|+1).
pub fn hook_partition(d: usize, k: usize) -> Partition {
    assert!(d >= 1 && k >= 1);
    Partition::new((0..d.min(k)).map(|i| d + k - 1 - 2 * i).collect())
}

/// A strict partition is even or odd with n - (number of parts).
pub fn is_odd_strict(lambda: &Partition) -> bool {
    (lambda.size() - lambda.len()) % 2 == 1
}

/// Degree of the spin representation of the double cover of S_n attached
/// to a strict partition (Schur): 2^[(n-l)/2] times the number of shifted
/// standard tableaux.
pub fn spin_degree(lambda: &Partition) -> u128 {
    assert!(lambda.is_strict());
    let n = lambda.size();
    let l = lambda.len();
    let mut num = Rational::from_integer((1..=n as i64).product::<i64>().into());
    for &p in lambda.parts() {
        num /= Rational::from_integer((1..=p as i64).product::<i64>().into());
    }
    for i in 0..l {
        for j in i + 1..l {
            let (a, b) = (lambda.part(i) as i64, lambda.part(j) as i64);
            num *= Rational::new((a - b).into(), (a + b).into());
        }
    }
    assert!(num.is_integer());
    let g: u128 = num.to_integer().try_into().unwrap();
    g << ((n - l) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpinSign {
    Plus,
    Minus,
    /// Only one spin module (or one associate) exists.
    Single,
}

impl SpinSign {
    pub fn flip(self) -> Self {
        match self {
            SpinSign::Plus => SpinSign::Minus,
            SpinSign::Minus => SpinSign::Plus,
            SpinSign::Single => SpinSign::Single,
        }
    }
}

impl fmt::Display for SpinSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinSign::Plus => "+",
            SpinSign::Minus => "-",
            SpinSign::Single => "",
        })
    }
}

/// A genuine irreducible indexed by a partition and an associate sign,
/// with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpinConstituent {
    pub lambda: Partition,
    pub sign: SpinSign,
    pub mult: u64,
}

/// sigma_{d x k} tensor S^eps for S_n, n = dk, with S a spin module of the
/// reflection representation: genuine irreducibles attached to hook(d x k).
/// For n even there are two modules S^+, S^-; an odd hook then appears once,
/// and its two associates are told apart by
/// sigma_{d x k} (x) S^eps = sigma_{k x d} (x) S^-eps, the one for d >= k
/// being named after eps. For n odd an odd hook brings both associates.
pub fn type_a_spin_tensor(d: usize, k: usize, eps: SpinSign) -> Vec<SpinConstituent> {
    let lambda = hook_partition(d, k);
    let n = d * k;
    let signs = if !is_odd_strict(&lambda) {
        vec![SpinSign::Single]
    } else if n % 2 == 1 {
        vec![SpinSign::Plus, SpinSign::Minus]
    } else if d >= k {
        vec![eps]
    } else {
        vec![eps.flip()]
    };
    let total = Partition::rectangle(d, k).dimension() << ((n - 1) / 2);
    let per = spin_degree(&lambda) * signs.len() as u128;
    assert_eq!(total % per, 0);
    let mult = (total / per) as u64;
    signs.into_iter().map(|sign| SpinConstituent { lambda: lambda.clone(), sign, mult }).collect()
}

/// The tensor product rule with the multiplicities printed for type A:
/// 2^((k-1)/2) (sigma~+ + sigma~-) for k odd and d even, 2^[k/2] sigma~eps
/// otherwise.
pub fn type_a_spin_tensor_printed(d: usize, k: usize, eps: SpinSign) -> Vec<SpinConstituent> {
    let lambda = hook_partition(d, k);
    if k % 2 == 1 && d.is_multiple_of(2) {
        let m = 1 << ((k - 1) / 2);
        vec![
            SpinConstituent { lambda: lambda.clone(), sign: SpinSign::Plus, mult: m },
            SpinConstituent { lambda, sign: SpinSign::Minus, mult: m },
        ]
    } else {
        let sign = if is_odd_strict(&lambda) { eps } else { SpinSign::Single };
        vec![SpinConstituent { lambda, sign, mult: 1 << (k / 2) }]
    }
}

/// (L x R) tensor S^eps in W~(B_n) as a sum of (lambda x 0) tensor S^eps'
/// with Littlewood-Richardson multiplicities c^lambda_{L, R^t}; for n odd,
/// eps' = eps when |R| is even and -eps when |R| is odd.
pub fn type_b_spin_decomposition(b: &Bipartition, eps: SpinSign) -> Vec<SpinConstituent> {
    let n = b.size();
    let s = b.right.size();
    let sign = if n.is_multiple_of(2) {
        SpinSign::Single
    } else if s.is_multiple_of(2) {
        eps
    } else {
        eps.flip()
    };
    lr_expand(&b.left, &b.right.transpose())
        .into_iter()
        .map(|(lambda, mult)| SpinConstituent { lambda, sign, mult })
        .collect()
}

/// All bipartitions reached by moving one box between the two diagrams.
pub fn refl_tensor_b(b: &Bipartition) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for l in b.left.remove_box() {
        for r in b.right.add_box() {
            out.push(Bipartition::new(l.clone(), r));
        }
    }
    for r in b.right.remove_box() {
        for l in b.left.add_box() {
            out.push(Bipartition::new(l, r.clone()));
        }
    }
    out.sort();
    out
}

/// (T2): L = m1 rows of d1, R = m2 rows of d2, and m1 - d1 = m2 - d2 + delta.
pub fn t2_admissible(d1: usize, m1: usize, d2: usize, m2: usize, delta: &Rational) -> bool {
    Rational::from_integer((m1 as i64 - d1 as i64).into()) == Rational::from_integer((m2 as i64 - d2 as i64).into()) + delta
}

/// A W-representation label that can carry a one-W-type module; `certain`
/// is false where the classification is only known at equal parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub label: String,
    pub certain: bool,
}

/// delta = 2 k_s / k_l for B_n; for C_n the roles of the root lengths are
/// exchanged and the coroot of 2e_i halves, giving k_l / k_s.
pub fn delta(ct: CartanType, k: &ParameterFunction) -> Result<Rational> {
    match ct {
        CartanType::B(_) if !k.k_long.is_zero() => Ok(Rational::from_integer(2.into()) * &k.k_short / &k.k_long),
        CartanType::C(_) if !k.k_short.is_zero() => Ok(&k.k_long / &k.k_short),
        _ => Err(Error::InvalidInput(format!("delta is not defined for {ct} with these parameters"))),
    }
}

pub fn one_wtype_candidates(ct: CartanType, k: &ParameterFunction) -> Result<Vec<Candidate>> {
    let certain = |label: String| Candidate { label, certain: true };
    match ct {
        CartanType::A(r) => {
            let n = r + 1;
            Ok((1..=n).filter(|d| n % d == 0).map(|d| certain(Partition::rectangle(d, n / d).to_string())).collect())
        }
        CartanType::B(n) | CartanType::C(n) => {
            let dl = delta(ct, k)?;
            let mut out: Vec<Candidate> = Vec::new();
            for lambda in Partition::all(n) {
                out.push(certain(Bipartition::new(lambda.clone(), Partition::empty()).to_string()));
                out.push(certain(Bipartition::new(Partition::empty(), lambda).to_string()));
            }
            for a in 1..n {
                for left in Partition::all(a).into_iter().filter(|p| p.is_rectangle()) {
                    for right in Partition::all(n - a).into_iter().filter(|p| p.is_rectangle()) {
                        let (d1, m1) = left.rectangle_shape().unwrap();
                        let (d2, m2) = right.rectangle_shape().unwrap();
                        if t2_admissible(d1, m1, d2, m2, &dl) {
                            out.push(certain(Bipartition::new(left.clone(), right).to_string()));
                        }
                    }
                }
            }
            Ok(out)
        }
        CartanType::E6 | CartanType::E7 | CartanType::E8 | CartanType::F4 | CartanType::G2 => {
            let equal = k.k_short == k.k_long;
            let rows = catalog::load_tables()?;
            Ok(rows
                .iter()
                .filter(|r| r.cartan_type == ct)
                .flat_map(|r| {
                    let ok = equal || !r.chi_unequal_is_no();
                    r.sigma_labels.iter().map(move |l| Candidate { label: l.clone(), certain: ok })
                })
                .collect())
        }
        CartanType::D(_) => Err(Error::UnsupportedType("one-W-type classification for D_n".into())),
    }
}

/// Independent check of a rectangular instance: every lambda returned by
/// the explicit rules has c = 1 and nothing else occurs.
pub fn rectangular_rules_hold(d1: usize, m1: usize, d2: usize, m2: usize) -> bool {
    let left = Partition::rectangle(d1, m1);
    let rt = Partition::rectangle(d2, m2).transpose();
    let full = lr_expand(&left, &rt);
    let expanded: Vec<Partition> = full.keys().cloned().collect();
    let rules = super::rectangular_lr_partitions(d1, m1, d2, m2);
    rules == expanded && full.values().all(|&c| c == 1) && rules.iter().all(|l| lr_coefficient(l, &left, &rt).unwrap() == 1)
}
