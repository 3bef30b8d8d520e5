use super::wrep::WRepresentation;
use crate::error::{Error, Result};
use crate::linalg::{rational_roots, QMatrix};
use crate::rootsystem::{dot, ParameterFunction, RootSystem};
use crate::scalars::{int, Rational};
use num_traits::{One, Zero};

/// ((omega - s_alpha omega) / alpha) = 2 (alpha, omega) / (alpha, alpha).
fn difference_quotient(alpha: &[Rational], omega: &[Rational]) -> Rational {
    int(2) * dot(alpha, omega) / dot(alpha, alpha)
}

fn p_omega_with(rs: &RootSystem, refl: &[QMatrix], omega: &[Rational], k: &ParameterFunction) -> QMatrix {
    let d = refl[0].rows();
    let half = Rational::new(1.into(), 2.into());
    let mut out = QMatrix::zeros(d, d);
    for (i, m) in refl.iter().enumerate() {
        let c = difference_quotient(rs.root(i), omega) * rs.k_alpha(k, i) * &half;
        if !c.is_zero() {
            out = &out + &m.scale(&c);
        }
    }
    out
}

/// sigma(p_omega) = 1/2 sum_{alpha > 0} k_alpha 2(alpha, omega)/(alpha, alpha) sigma(s_alpha).
pub fn p_omega(sigma: &WRepresentation, rs: &RootSystem, omega: &[Rational], k: &ParameterFunction) -> QMatrix {
    p_omega_with(rs, &sigma.reflection_matrices(rs), omega, k)
}

/// Whether the operators sigma(p_omega_i) commute pairwise.
pub fn commutator_test(sigma: &WRepresentation, rs: &RootSystem, k: &ParameterFunction) -> bool {
    let refl = sigma.reflection_matrices(rs);
    let ps: Vec<QMatrix> = rs.fundamental_coweights().iter().map(|w| p_omega_with(rs, &refl, w, k)).collect();
    pairwise_commute(&ps)
}

fn pairwise_commute(ms: &[QMatrix]) -> bool {
    (0..ms.len()).all(|i| (i + 1..ms.len()).all(|j| ms[i].commutator(&ms[j]).is_zero()))
}

/// An H-module whose restriction to W is irreducible. The action of V is
/// stored on the basis omega_i of V with (alpha_j, omega_i) = delta_ij.
#[derive(Clone, Debug)]
pub struct OneWTypeModule {
    pub sigma: WRepresentation,
    pub params: ParameterFunction,
    pub omega_action: Vec<QMatrix>,
    /// Dominant representative nu of the central character.
    pub central_char: Vec<Rational>,
    rs: RootSystem,
    refl: Vec<QMatrix>,
}

/// Extends sigma to H by pi(omega) = sigma(p_omega), after checking the
/// commutator criterion, and verifies the defining relations.
pub fn extend_to_hecke(sigma: &WRepresentation, rs: &RootSystem, k: &ParameterFunction) -> Result<OneWTypeModule> {
    let refl = sigma.reflection_matrices(rs);
    let omega_action: Vec<QMatrix> = rs.fundamental_coweights().iter().map(|w| p_omega_with(rs, &refl, w, k)).collect();
    if !pairwise_commute(&omega_action) {
        return Err(Error::NoExtension(format!("{}: the operators p_omega do not commute", sigma.label)));
    }
    let mut x = OneWTypeModule::from_parts(sigma.clone(), rs, k.clone(), omega_action);
    x.check_relations()?;
    let nu = x.compute_central_character()?;
    x.central_char = nu;
    Ok(x)
}

impl OneWTypeModule {
    /// Assembles a module from an arbitrary V-action without any check
    /// (for tests of the verification routines).
    pub fn from_parts(sigma: WRepresentation, rs: &RootSystem, params: ParameterFunction, omega_action: Vec<QMatrix>) -> Self {
        let refl = sigma.reflection_matrices(rs);
        Self { sigma, params, omega_action, central_char: Vec::new(), rs: rs.clone(), refl }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn dimension(&self) -> usize {
        self.sigma.dimension()
    }

    /// pi(v) for an ambient vector v of V.
    pub fn action(&self, v: &[Rational]) -> QMatrix {
        let d = self.dimension();
        self.rs.simple_roots().iter().zip(&self.omega_action).fold(QMatrix::zeros(d, d), |acc, (a, m)| {
            let c = dot(a, v);
            if c.is_zero() {
                acc
            } else {
                &acc + &m.scale(&c)
            }
        })
    }

    pub fn p_omega(&self, v: &[Rational]) -> QMatrix {
        p_omega_with(&self.rs, &self.refl, v, &self.params)
    }

    /// pi(omega~) = pi(omega) - sigma(p_omega).
    pub fn omega_tilde(&self, v: &[Rational]) -> QMatrix {
        &self.action(v) - &self.p_omega(v)
    }

    /// Relations of the graded Hecke algebra: commuting V-action and
    /// pi(omega) sigma(s) - sigma(s) pi(s(omega)) = k_alpha <alpha^vee, omega>.
    pub fn check_relations(&self) -> Result<()> {
        if !pairwise_commute(&self.omega_action) {
            return Err(Error::Internal("V acts by non-commuting operators".into()));
        }
        let d = self.dimension();
        for (j, alpha) in self.rs.simple_roots().iter().enumerate() {
            let s = &self.sigma.generators[j];
            let root = self.rs.root_index(alpha).unwrap();
            for w in self.rs.fundamental_coweights() {
                let sw = crate::rootsystem::reflect(alpha, w);
                let lhs = &self.action(w).matmul(s) - &s.matmul(&self.action(&sw));
                let c = self.rs.k_alpha(&self.params, root) * difference_quotient(alpha, w);
                if lhs != QMatrix::scalar(d, &c) {
                    return Err(Error::Internal(format!("cross relation fails for s_{j}")));
                }
            }
        }
        Ok(())
    }

    /// Star-invariance of the W-invariant form: sigma(s)^dagger = sigma(s)
    /// and pi(omega)^dagger = pi(omega^*) with
    /// omega^* = -t_{w0} w0(omega) t_{w0}.
    pub fn verify_star_hermitian(&self) -> bool {
        if self.sigma.generators.iter().any(|s| self.sigma.adjoint(s) != *s) {
            return false;
        }
        let w0 = self.rs.word_of_perm(&self.rs.longest_perm());
        let w0m = self.rs.word_matrix(&w0);
        let t0 = self.sigma.word_matrix(&w0);
        self.rs.fundamental_coweights().iter().all(|w| {
            let image = w0m.apply(w);
            let star = -&t0.matmul(&self.action(&image)).matmul(&t0);
            self.sigma.adjoint(&self.action(w)) == star
        })
    }

    /// Weights of the V-action with multiplicities, as vectors nu of V with
    /// pi(omega) = (nu, omega) on the weight space.
    pub fn weights(&self) -> Result<Vec<(Vec<Rational>, usize)>> {
        let d = self.dimension();
        let primes = [2i64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        let generic = self.rs.fundamental_coweights().iter().zip(primes.iter()).fold(
            vec![Rational::zero(); self.rs.ambient_dim()],
            |acc, (w, &p)| acc.iter().zip(w).map(|(a, b)| a + b * int(p)).collect(),
        );
        let a = self.action(&generic);
        let mut out = Vec::new();
        let mut total = 0;
        for r in diagonal_eigenvalues(&a)? {
            let space = (&a - &QMatrix::scalar(d, &r)).kernel();
            total += space.len();
            split_weight_space(self, space, 0, &mut out)?;
        }
        if total != d {
            return Err(Error::Internal("V does not act semisimply".into()));
        }
        Ok(out)
    }

    pub(crate) fn compute_central_character(&self) -> Result<Vec<Rational>> {
        let weights = self.weights()?;
        let nu = self.rs.dominant(&weights[0].0);
        if weights.iter().any(|(v, _)| self.rs.dominant(v) != nu) {
            return Err(Error::Internal("weights lie in several W-orbits".into()));
        }
        let omega = self.casimir_action();
        if omega != QMatrix::scalar(self.dimension(), &dot(&nu, &nu)) {
            return Err(Error::Internal("Casimir does not act by (nu, nu)".into()));
        }
        Ok(nu)
    }

    /// pi(Omega) = sum_i pi(e_i)^2 over an orthonormal basis of V.
    pub fn casimir_action(&self) -> QMatrix {
        let cw = self.rs.fundamental_coweights();
        let n = cw.len();
        let gram = QMatrix::from_fn(n, n, |i, j| dot(&cw[i], &cw[j]));
        let ginv = gram.inverse().unwrap();
        let d = self.dimension();
        let mut out = QMatrix::zeros(d, d);
        for i in 0..n {
            for j in 0..n {
                if !ginv[(i, j)].is_zero() {
                    out = &out + &self.omega_action[i].matmul(&self.omega_action[j]).scale(&ginv[(i, j)]);
                }
            }
        }
        out
    }
}

fn split_weight_space(x: &OneWTypeModule, space: Vec<Vec<Rational>>, from: usize, out: &mut Vec<(Vec<Rational>, usize)>) -> Result<()> {
    let rs = x.root_system();
    for i in from..rs.rank() {
        let r = x.omega_action[i].restrict_to(&space).ok_or_else(|| Error::Internal("weight space is not stable".into()))?;
        if r != QMatrix::scalar(space.len(), &r[(0, 0)]) {
            let b = QMatrix::from_cols(&space);
            for e in diagonal_eigenvalues(&r)? {
                let sub: Vec<Vec<Rational>> = (&r - &QMatrix::scalar(r.rows(), &e)).kernel().iter().map(|k| b.apply(k)).collect();
                split_weight_space(x, sub, i + 1, out)?;
            }
            return Ok(());
        }
    }
    let mu: Vec<Rational> = x.omega_action.iter().map(|m| m.restrict_to(&space).unwrap()[(0, 0)].clone()).collect();
    let nu = rs.simple_roots().iter().zip(&mu).fold(vec![Rational::zero(); rs.ambient_dim()], |acc, (a, c)| {
        acc.iter().zip(a).map(|(s, t)| s + t * c).collect()
    });
    out.push((nu, space.len()));
    Ok(())
}

/// Distinct eigenvalues of a diagonalizable matrix with rational spectrum,
/// from minimal polynomials of Krylov sequences.
pub fn diagonal_eigenvalues(a: &QMatrix) -> Result<Vec<Rational>> {
    let d = a.rows();
    let mut found: Vec<Rational> = Vec::new();
    for start in 0..=d {
        let v: Vec<Rational> = if start == 0 { (0..d).map(|i| int(i as i64 + 1)).collect() } else { (0..d).map(|i| if i + 1 == start { Rational::one() } else { Rational::zero() }).collect() };
        let poly = krylov_minimal_polynomial(a, &v);
        let roots = rational_roots(&poly);
        if roots.len() + 1 != poly.len() {
            return Err(Error::Internal("irrational eigenvalues".into()));
        }
        for r in roots {
            if !found.contains(&r) {
                found.push(r);
            }
        }
        let covered: usize = found.iter().map(|r| d - (a - &QMatrix::scalar(d, r)).rank()).sum();
        if covered == d {
            found.sort();
            return Ok(found);
        }
    }
    Err(Error::Internal("matrix is not diagonalizable".into()))
}

/// Monic polynomial (lowest degree first) of least degree killing v.
fn krylov_minimal_polynomial(a: &QMatrix, v: &[Rational]) -> Vec<Rational> {
    let mut seq = vec![v.to_vec()];
    loop {
        let next = a.apply(seq.last().unwrap());
        let m = QMatrix::from_cols(&seq);
        let rhs = QMatrix::from_cols(std::slice::from_ref(&next));
        if let Some(x) = m.solve(&rhs) {
            let mut poly: Vec<Rational> = (0..seq.len()).map(|i| -&x[(i, 0)]).collect();
            poly.push(Rational::one());
            return poly;
        }
        seq.push(next);
    }
}
