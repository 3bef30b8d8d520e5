use super::CartanType;
use crate::error::{Error, Result};
use crate::scalars::{rat, Rational};

fn e(n: usize, coeffs: &[(usize, i64)]) -> Vec<Rational> {
    let mut v = vec![rat(0, 1); n];
    for &(i, c) in coeffs {
        v[i] = rat(c, 1);
    }
    v
}

fn halves(v: [i64; 8]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x, 2)).collect()
}

/// E8 simple roots in Bourbaki numbering; E7 and E6 use the first 7 or 6.
fn e8_simple() -> Vec<Vec<Rational>> {
    let mut s = vec![halves([1, -1, -1, -1, -1, -1, -1, 1]), e(8, &[(0, 1), (1, 1)]), e(8, &[(0, -1), (1, 1)])];
    for i in 1..6 {
        s.push(e(8, &[(i, -1), (i + 1, 1)]));
    }
    s
}

/// Ambient dimension and simple roots of the standard coordinate models.
/// G2 is numbered with the long root first.
pub(super) fn simple_roots(t: CartanType) -> Result<(usize, Vec<Vec<Rational>>)> {
    let chain = |n: usize, m: usize| -> Vec<Vec<Rational>> { (0..m).map(|i| e(n, &[(i, 1), (i + 1, -1)])).collect() };
    let out = match t {
        CartanType::A(n) => (n + 1, chain(n + 1, n)),
        CartanType::B(n) => {
            let mut s = chain(n, n - 1);
            s.push(e(n, &[(n - 1, 1)]));
            (n, s)
        }
        CartanType::C(n) => {
            let mut s = chain(n, n - 1);
            s.push(e(n, &[(n - 1, 2)]));
            (n, s)
        }
        CartanType::D(n) => {
            let mut s = chain(n, n - 1);
            s.push(e(n, &[(n - 2, 1), (n - 1, 1)]));
            (n, s)
        }
        CartanType::E6 => (8, e8_simple()[..6].to_vec()),
        CartanType::E7 => (8, e8_simple()[..7].to_vec()),
        CartanType::E8 => (8, e8_simple()),
        CartanType::F4 => (
            4,
            vec![
                e(4, &[(1, 1), (2, -1)]),
                e(4, &[(2, 1), (3, -1)]),
                e(4, &[(3, 1)]),
                vec![rat(1, 2), rat(-1, 2), rat(-1, 2), rat(-1, 2)],
            ],
        ),
        CartanType::G2 => (3, vec![e(3, &[(0, -2), (1, 1), (2, 1)]), e(3, &[(0, 1), (1, -1)])]),
    };
    if out.1.is_empty() {
        return Err(Error::UnsupportedType(t.to_string()));
    }
    Ok(out)
}
