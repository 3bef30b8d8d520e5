use super::Partition;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

struct Filler<'a> {
    lambda: &'a Partition,
    mu: &'a Partition,
    nu: &'a Partition,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<usize>>,
    count: Vec<usize>,
}

impl Filler<'_> {
    fn run(&mut self, k: usize) -> u64 {
        if k == self.cells.len() {
            return 1;
        }
        let (i, j) = self.cells[k];
        // reading order is right to left, so the right neighbour is filled
        let hi = if j + 1 < self.lambda.part(i) { self.grid[i][j + 1] } else { usize::MAX };
        let lo = if i > 0 && j >= self.mu.part(i - 1) { Some(self.grid[i - 1][j]) } else { None };
        let mut total = 0;
        for v in 0..self.nu.len() {
            if v > hi || lo.is_some_and(|l| v <= l) {
                continue;
            }
            if self.count[v] == self.nu.part(v) || (v > 0 && self.count[v] == self.count[v - 1]) {
                continue;
            }
            self.count[v] += 1;
            self.grid[i][j] = v;
            total += self.run(k + 1);
            self.count[v] -= 1;
        }
        total
    }
}

/// Littlewood-Richardson coefficient c^lambda_{mu,nu}: the number of skew
/// tableaux of shape lambda/mu and content nu whose reverse reading word is
/// a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    if mu.size() + nu.size() != lambda.size() {
        return Err(Error::InvalidInput(format!("|{mu}| + |{nu}| != |{lambda}|")));
    }
    if (0..mu.len()).any(|i| mu.part(i) > lambda.part(i)) {
        return Ok(0);
    }
    let mut cells = Vec::new();
    for i in 0..lambda.len() {
        for j in (mu.part(i)..lambda.part(i)).rev() {
            cells.push((i, j));
        }
    }
    let mut f = Filler {
        lambda,
        mu,
        nu,
        cells,
        grid: (0..lambda.len()).map(|i| vec![0; lambda.part(i)]).collect(),
        count: vec![0; nu.len()],
    };
    Ok(f.run(0))
}

/// The product s_mu s_nu expanded in Schur functions.
pub fn lr_expand(mu: &Partition, nu: &Partition) -> BTreeMap<Partition, u64> {
    let n = mu.size() + nu.size();
    Partition::all(n)
        .into_iter()
        .filter(|l| (0..mu.len()).all(|i| mu.part(i) <= l.part(i)) && (0..nu.len()).all(|i| nu.part(i) <= l.part(i)))
        .filter_map(|l| {
            let c = lr_coefficient(&l, mu, nu).unwrap();
            (c > 0).then_some((l, c))
        })
        .collect()
}

/// The partitions lambda with c^lambda_{L, R^t} = 1, for the rectangles
/// L = m1 rows of length d1 and R = m2 rows of length d2, read off from the
/// explicit rules for rectangles.
pub fn rectangular_lr_partitions(d1: usize, m1: usize, d2: usize, m2: usize) -> Vec<Partition> {
    if d1 == 0 || m1 == 0 {
        return vec![Partition::rectangle(m2, d2)];
    }
    if d2 == 0 || m2 == 0 {
        return vec![Partition::rectangle(d1, m1)];
    }
    if m1 < d2 {
        // exchange the roles of L and R^t
        return rectangular_lr_partitions(m2, d2, m1, d1);
    }
    let len = m1 + d2;
    let (lo, hi) = (d1.max(m2), d1 + m2);
    let mut out = Vec::new();
    let mut head = vec![0usize; d2];
    fn rec(pos: usize, max: usize, lo: usize, head: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if pos == head.len() {
            out.push(head.clone());
            return;
        }
        for v in (lo..=max).rev() {
            head[pos] = v;
            rec(pos + 1, v, lo, head, out);
        }
    }
    let mut heads = Vec::new();
    rec(0, hi, lo, &mut head, &mut heads);
    for h in heads {
        let mut lambda = vec![0usize; len];
        for j in 0..d2 {
            lambda[j] = h[j];
            lambda[len - 1 - j] = d1 + m2 - h[j];
        }
        for slot in lambda.iter_mut().take(m1).skip(d2) {
            *slot = d1;
        }
        out.push(Partition::new(lambda));
    }
    out.sort();
    out
}
