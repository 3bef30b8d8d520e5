use super::{Bipartition, Partition};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use num_traits::{One, Signed, Zero};

/// Lengths of the positive and negative cycles of a signed permutation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycleType {
    pub pos: Vec<usize>,
    pub neg: Vec<usize>,
}

impl SignedCycleType {
    pub fn size(&self) -> usize {
        self.pos.iter().sum::<usize>() + self.neg.iter().sum::<usize>()
    }
}

/// Signed cycle type of a signed permutation matrix (columns are images
/// of the coordinate vectors).
pub fn bn_class_type(m: &QMatrix) -> Result<SignedCycleType> {
    let n = m.rows();
    let mut image = vec![(0usize, false); n];
    for c in 0..n {
        let nz: Vec<usize> = (0..n).filter(|&r| !m[(r, c)].is_zero()).collect();
        if nz.len() != 1 || !m[(nz[0], c)].abs().is_one() {
            return Err(Error::InvalidInput("not a signed permutation matrix".into()));
        }
        image[c] = (nz[0], m[(nz[0], c)].is_negative());
    }
    let mut seen = vec![false; n];
    let mut t = SignedCycleType { pos: Vec::new(), neg: Vec::new() };
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let (mut i, mut len, mut negs) = (start, 0, 0);
        while !seen[i] {
            seen[i] = true;
            len += 1;
            negs += image[i].1 as usize;
            i = image[i].0;
        }
        if negs % 2 == 0 {
            t.pos.push(len);
        } else {
            t.neg.push(len);
        }
    }
    t.pos.sort_unstable_by(|a, b| b.cmp(a));
    t.neg.sort_unstable_by(|a, b| b.cmp(a));
    Ok(t)
}

/// chi^lambda at a permutation of the given cycle type (Murnaghan-Nakayama
/// on beta-sets).
pub fn sn_character(lambda: &Partition, cycles: &[usize]) -> i64 {
    assert_eq!(lambda.size(), cycles.iter().sum::<usize>(), "cycle type of the wrong size");
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + l - 1 - i).collect();
    let mut cyc = cycles.to_vec();
    cyc.sort_unstable_by(|a, b| b.cmp(a));
    mn(&beta, &cyc)
}

fn mn(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else { return 1 };
    let mut total = 0;
    for (k, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - r && x < b).count();
        let mut nb = beta.to_vec();
        nb[k] = b - r;
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&nb, rest);
    }
    total
}

/// Character of the W(B_n)-irreducible `left x right` at a signed cycle
/// type: induced from W(B_a) x W(B_b) of left (x) (right tensor the sign
/// on the Z/2 factors).
pub fn bn_character(b: &Bipartition, t: &SignedCycleType) -> i64 {
    assert_eq!(b.size(), t.size(), "class of the wrong rank");
    let cycles: Vec<(usize, bool)> = t.pos.iter().map(|&c| (c, false)).chain(t.neg.iter().map(|&c| (c, true))).collect();
    let a = b.left.size();
    let mut total = 0;
    for mask in 0u32..(1 << cycles.len()) {
        let left: Vec<usize> = (0..cycles.len()).filter(|i| mask >> i & 1 == 1).map(|i| cycles[i].0).collect();
        if left.iter().sum::<usize>() != a {
            continue;
        }
        let right: Vec<usize> = (0..cycles.len()).filter(|i| mask >> i & 1 == 0).map(|i| cycles[i].0).collect();
        let negs = (0..cycles.len()).filter(|i| mask >> i & 1 == 0 && cycles[*i].1).count();
        let sign = if negs % 2 == 0 { 1 } else { -1 };
        total += sign * sn_character(&b.left, &left) * sn_character(&b.right, &right);
    }
    total
}

/// Character of W(D_n) restricted from `left x right` (irreducible when
/// left != right).
pub fn dn_character(b: &Bipartition, t: &SignedCycleType) -> Result<i64> {
    if b.left == b.right {
        return Err(Error::UnsupportedRepresentation(format!("{b} splits on restriction to D_n")));
    }
    if t.neg.len() % 2 == 1 {
        return Err(Error::InvalidInput("class is not in W(D_n)".into()));
    }
    Ok(bn_character(b, t))
}
