//! Young's seminormal form for the symmetric group.

use super::wrep::WRepresentation;
use crate::combinat::Partition;
use crate::linalg::QMatrix;
use crate::scalars::Rational;
use num_traits::{One, Zero};
use std::collections::HashMap;

/// Standard tableaux of a shape, each given by the (row, column) of the
/// entries 1..n in order.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Vec<(usize, usize)>> {
    fn grow(lambda: &Partition, filled: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if cur.len() == lambda.size() {
            out.push(cur.clone());
            return;
        }
        for r in 0..lambda.len() {
            let c = filled[r];
            if c < lambda.part(r) && (r == 0 || filled[r - 1] > c) {
                filled[r] += 1;
                cur.push((r, c));
                grow(lambda, filled, cur, out);
                cur.pop();
                filled[r] -= 1;
            }
        }
    }
    let mut out = Vec::new();
    grow(lambda, &mut vec![0; lambda.len()], &mut Vec::new(), &mut out);
    out
}

fn content(p: (usize, usize)) -> i64 {
    p.1 as i64 - p.0 as i64
}

/// sigma_lambda with s_i acting as the transposition (i+1, i+2), together
/// with its diagonal invariant form.
pub fn seminormal_irrep(lambda: &Partition) -> WRepresentation {
    let tabs = standard_tableaux(lambda);
    let index: HashMap<Vec<(usize, usize)>, usize> = tabs.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let n = lambda.size();
    let dim = tabs.len();
    let one = Rational::one();
    let mut generators = Vec::new();
    // edges[T] lists (T', G_T' / G_T) for the pairs with r > 0
    let mut edges: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
    for i in 0..n.saturating_sub(1) {
        let mut m = QMatrix::zeros(dim, dim);
        for (t, tab) in tabs.iter().enumerate() {
            let r = content(tab[i + 1]) - content(tab[i]);
            let rinv = Rational::new(1.into(), r.into());
            m[(t, t)] = rinv.clone();
            if r.abs() == 1 {
                continue;
            }
            let mut swapped = tab.clone();
            swapped.swap(i, i + 1);
            let u = index[&swapped];
            let coeff = if r > 0 { one.clone() } else { &one - &rinv * &rinv };
            m[(u, t)] = coeff;
            if r > 0 {
                edges[t].push((u, &one - &rinv * &rinv));
            }
        }
        generators.push(m);
    }
    let mut g = vec![Rational::zero(); dim];
    if dim > 0 {
        g[0] = one.clone();
        let mut stack = vec![0usize];
        let mut seen = vec![false; dim];
        seen[0] = true;
        // edges are oriented; walk them both ways
        let mut back: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); dim];
        for (t, es) in edges.iter().enumerate() {
            for (u, q) in es {
                back[*u].push((t, q.recip()));
            }
        }
        while let Some(t) = stack.pop() {
            for (u, q) in edges[t].iter().chain(&back[t]) {
                if !seen[*u] {
                    seen[*u] = true;
                    g[*u] = &g[t] * q;
                    stack.push(*u);
                }
            }
        }
    }
    let mut gram = QMatrix::zeros(dim, dim);
    for (t, x) in g.into_iter().enumerate() {
        gram[(t, t)] = x;
    }
    WRepresentation::new(lambda.to_string(), generators, gram)
}
