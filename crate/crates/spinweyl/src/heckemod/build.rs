use super::induce::{search_irrep, SubgroupData};
use super::seminormal::seminormal_irrep;
use super::wrep::WRepresentation;
use crate::chartab::{db_labels, dixon_schneider, CharacterTable, DEFAULT_GATE};
use crate::combinat::{bn_character, bn_class_type, dn_character, Bipartition, Partition, SignedCycleType};
use crate::error::{Error, Result};
use crate::rootsystem::{CartanType, RootSystem, WeylGroup};
use crate::scalars::{int, Rational};
use num_traits::Zero;

/// Signed cycle types of the classes of a classical Weyl group, read off
/// the ambient matrices of the class representatives.
pub fn classical_class_types(w: &WeylGroup) -> Result<Vec<SignedCycleType>> {
    let rs = w.root_system();
    (0..w.classes().len()).map(|c| bn_class_type(&rs.word_matrix(&w.class_rep_word(c)))).collect()
}

fn unit_root(rs: &RootSystem, j: usize, sign: i64) -> Option<usize> {
    let n = rs.ambient_dim();
    [1, 2].iter().find_map(|&scale| {
        let mut v = vec![Rational::zero(); n];
        v[j] = int(scale * sign);
        rs.root_index(&v)
    })
}

fn young_generators(rs: &RootSystem, lambda: &Partition, offset: usize, value: i64) -> SubgroupData {
    let n = rs.ambient_dim();
    let mut out = Vec::new();
    let mut start = offset;
    for &p in lambda.parts() {
        for j in start..start + p - 1 {
            let mut v = vec![Rational::zero(); n];
            v[j] = int(1);
            v[j + 1] = int(-1);
            out.push((rs.root_index(&v).expect("e_j - e_j+1 is a root"), value));
        }
        start += p;
    }
    out
}

/// Subgroups (S_mu x| Z2^a) x (S_nu x| Z2^b) of W(B_n), with psi trivial or
/// the sign on the symmetric factors and -1 on the sign changes of the
/// right block.
fn bn_candidates(rs: &RootSystem, b: &Bipartition) -> Vec<SubgroupData> {
    let a = b.left.size();
    let mut out = Vec::new();
    for (left, lv) in [(b.left.clone(), 1), (b.left.transpose(), -1)] {
        for (right, rv) in [(b.right.clone(), 1), (b.right.transpose(), -1)] {
            let mut gens = young_generators(rs, &left, 0, lv);
            gens.extend(young_generators(rs, &right, a, rv));
            for j in 0..rs.ambient_dim() {
                gens.push((unit_root(rs, j, 1).expect("type B or C"), if j < a { 1 } else { -1 }));
            }
            out.push(gens);
        }
    }
    out
}

/// Reflection subgroups generated by subsets of the simple roots, the
/// highest root and the highest short root, with every sign pattern.
pub fn extended_candidates(rs: &RootSystem) -> Vec<SubgroupData> {
    let mut roots: Vec<usize> = rs.simple_roots().iter().map(|a| rs.root_index(a).unwrap()).collect();
    let npos = rs.num_positive();
    roots.push(npos - 1);
    if let Some(short) = (0..npos).rev().find(|&i| !rs.is_long(i)) {
        if !roots.contains(&short) {
            roots.push(short);
        }
    }
    let mut out = Vec::new();
    for mask in 1u32..(1 << roots.len()) {
        let chosen: Vec<usize> = (0..roots.len()).filter(|&i| mask >> i & 1 == 1).map(|i| roots[i]).collect();
        for signs in 0u32..(1 << chosen.len()) {
            out.push(chosen.iter().enumerate().map(|(i, &r)| (r, if signs >> i & 1 == 1 { -1 } else { 1 })).collect());
        }
    }
    out
}

/// The irreducible of W with the given character (values over the classes
/// of W), by a search over monomial models.
pub fn build_irrep_from_character(w: &WeylGroup, chi: &[Rational], label: &str) -> Result<WRepresentation> {
    let rep = search_irrep(w, chi, &extended_candidates(w.root_system()), label)?;
    verify_character(&rep, w, chi)?;
    Ok(rep)
}

fn verify_character(rep: &WRepresentation, w: &WeylGroup, chi: &[Rational]) -> Result<()> {
    rep.check(w.root_system())?;
    if rep.character(w) != chi {
        return Err(Error::Internal(format!("{}: character does not match", rep.label)));
    }
    Ok(())
}

fn bn_irrep(rs: &RootSystem, b: &Bipartition) -> Result<WRepresentation> {
    if b.size() != rs.rank() {
        return Err(Error::InvalidInput(format!("{b} is not a bipartition of {}", rs.rank())));
    }
    let w = rs.weyl_group(DEFAULT_GATE)?;
    let chi: Vec<Rational> = classical_class_types(&w)?.iter().map(|t| int(bn_character(b, t))).collect();
    let rep = search_irrep(&w, &chi, &bn_candidates(rs, b), &b.to_string())?;
    verify_character(&rep, &w, &chi)?;
    Ok(rep)
}

fn dn_irrep(rs: &RootSystem, b: &Bipartition) -> Result<WRepresentation> {
    let n = rs.rank();
    let t = bn_irrep(&RootSystem::build(CartanType::B(n))?, b)?;
    let mut gens = t.generators[..n - 1].to_vec();
    gens.push(t.generators[n - 1].matmul(&t.generators[n - 2]).matmul(&t.generators[n - 1]));
    let rep = WRepresentation::new(b.to_string(), gens, t.gram);
    let w = rs.weyl_group(DEFAULT_GATE)?;
    let chi: Vec<Rational> = classical_class_types(&w)?.iter().map(|t| dn_character(b, t).map(int)).collect::<Result<_>>()?;
    verify_character(&rep, &w, &chi)?;
    Ok(rep)
}

/// Builds an explicit model of an irreducible W-representation.
///
/// Labels: a partition of n+1 for A_n (`"2,2"` or `"(2,2)"`), a
/// bipartition for B_n, C_n, D_n (`"2,1 x 1"`), and a `(d,b)` label as
/// produced by [`db_labels`] for G2 and F4. E6, E7, E8 are not supported.
pub fn build_irrep(rs: &RootSystem, label: &str) -> Result<WRepresentation> {
    match rs.cartan_type() {
        CartanType::A(n) => {
            let lambda = Partition::parse(label)?;
            if lambda.size() != n + 1 {
                return Err(Error::InvalidInput(format!("{lambda} is not a partition of {}", n + 1)));
            }
            let rep = seminormal_irrep(&lambda);
            rep.check(rs)?;
            Ok(rep)
        }
        CartanType::B(_) | CartanType::C(_) => bn_irrep(rs, &Bipartition::parse(label)?),
        CartanType::D(_) => dn_irrep(rs, &Bipartition::parse(label)?),
        CartanType::G2 | CartanType::F4 => {
            let w = rs.weyl_group(DEFAULT_GATE)?;
            let table = dixon_schneider(w.group(), w.classes(), &format!("W({})", rs.cartan_type()))?;
            let row = find_label(&w, &table, label)?;
            build_irrep_from_character(&w, &rational_row(&table, row)?, label)
        }
        t => Err(Error::UnsupportedRepresentation(format!("explicit models for {t} are out of scope"))),
    }
}

fn find_label(w: &WeylGroup, table: &CharacterTable, label: &str) -> Result<usize> {
    let wanted: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    db_labels(w, table)
        .iter()
        .position(|l| *l == wanted)
        .ok_or_else(|| Error::InvalidInput(format!("no irreducible labelled {label}")))
}

/// A row of a Weyl group character table as rationals.
pub fn rational_row(table: &CharacterTable, row: usize) -> Result<Vec<Rational>> {
    table
        .character(row)
        .iter()
        .map(|x| x.to_rational().ok_or_else(|| Error::Internal("irrational Weyl group character".into())))
        .collect()
}
