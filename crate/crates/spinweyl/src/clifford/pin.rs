use super::element::CliffordElement;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupElem, Perm};
use crate::linalg::CMatrix;
use crate::rootsystem::{dot, RootSystem};
use crate::scalars::CyclotomicNumber;

/// An element of the pin cover: a Clifford element together with the root
/// permutation of its image in W.
#[derive(Clone, Debug)]
pub struct PinElement {
    pub value: CliffordElement,
    pub perm: Perm,
    rank: usize,
}

impl PinElement {
    pub fn identity(rs: &RootSystem) -> Self {
        Self { value: CliffordElement::one(rs.ambient_dim()), perm: Perm::identity(rs.roots().len()), rank: rs.rank() }
    }

    pub fn z(rs: &RootSystem) -> Self {
        let mut x = Self::identity(rs);
        x.value = x.value.neg();
        x
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self { value: self.value.mul(&o.value), perm: self.perm.compose(&o.perm), rank: self.rank }
    }

    pub fn neg(&self) -> Self {
        Self { value: self.value.neg(), perm: self.perm.clone(), rank: self.rank }
    }

    /// The inverse, equal to the transpose for pin elements.
    pub fn inverse(&self) -> Self {
        Self { value: self.value.transpose(), perm: self.perm.inverse(), rank: self.rank }
    }

    /// Checks x x^t = 1.
    pub fn is_unit_norm(&self) -> bool {
        self.value.mul(&self.value.transpose()) == CliffordElement::one(self.value.dim())
    }

    /// The orthogonal map v -> eps(x) v x^{-1}, as an ambient matrix; `None`
    /// when some image is not a vector.
    pub fn projection_matrix(&self) -> Option<CMatrix> {
        let n = self.value.dim();
        let eps = self.value.epsilon();
        let inv = self.value.transpose();
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let img = eps.mul(&CliffordElement::basis(n, i)).mul(&inv);
            cols.push(img.as_vector()?);
        }
        Some(CMatrix::from_cols(&cols))
    }

    /// Distinguishes x from -x: the sign of the leading coefficient.
    fn sign_bit(&self) -> bool {
        let (_, c) = self.value.terms().next().expect("pin element is nonzero");
        let c = c.canonical();
        c.coords().iter().find(|x| !num_traits::Zero::is_zero(*x)).map(num_traits::Signed::is_positive).unwrap()
    }
}

impl GroupElem for PinElement {
    type Key = (Vec<u16>, bool);
    fn mul(&self, o: &Self) -> Self {
        PinElement::mul(self, o)
    }
    fn key(&self) -> Self::Key {
        (self.perm.0[..self.rank].to_vec(), self.sign_bit())
    }
}

/// |alpha| as a cyclotomic number.
pub fn root_norm(alpha: &[crate::scalars::Rational]) -> CyclotomicNumber {
    CyclotomicNumber::sqrt_rational(&dot(alpha, alpha))
}

/// The lift alpha/|alpha| of the reflection in root `i`.
pub fn lift_reflection(rs: &RootSystem, i: usize) -> Result<PinElement> {
    if i >= rs.roots().len() {
        return Err(Error::NotARoot(format!("index {i}")));
    }
    let alpha = rs.root(i);
    let inv_norm = root_norm(alpha).inv();
    let v: Vec<CyclotomicNumber> = alpha.iter().map(|x| CyclotomicNumber::from_rational(x.clone()) * &inv_norm).collect();
    let word = rs.reflection_word(i);
    Ok(PinElement { value: CliffordElement::from_vector(&v), perm: rs.word_perm(&word), rank: rs.rank() })
}

/// Lift of a vector of V that is a root, given by coordinates.
pub fn lift_root_vector(rs: &RootSystem, alpha: &[crate::scalars::Rational]) -> Result<PinElement> {
    let i = rs.root_index(alpha).ok_or_else(|| Error::NotARoot(format!("{alpha:?}")))?;
    lift_reflection(rs, i)
}

/// The pin cover W~ realized inside the Clifford algebra, enumerated exactly.
pub struct PinCover {
    rs: RootSystem,
    group: FiniteGroup<PinElement>,
    z_index: usize,
}

impl PinCover {
    pub fn build(rs: &RootSystem, limit: usize) -> Result<Self> {
        let w_order = rs.cartan_type().weyl_order();
        if 2 * w_order > limit as u128 {
            return Err(Error::GroupTooLarge { order: (2 * w_order) as usize, limit });
        }
        let gens = (0..rs.rank()).map(|s| lift_reflection(rs, s)).collect::<Result<Vec<_>>>()?;
        let group = FiniteGroup::generate(PinElement::identity(rs), gens, limit)?;
        let z_index = group.index_of(&PinElement::z(rs)).ok_or_else(|| Error::Internal("z not in cover".into()))?;
        Ok(Self { rs: rs.clone(), group, z_index })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn group(&self) -> &FiniteGroup<PinElement> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn elements(&self) -> &[PinElement] {
        self.group.elems()
    }

    pub fn z(&self) -> &PinElement {
        self.group.elem(self.z_index)
    }

    pub fn z_index(&self) -> usize {
        self.z_index
    }

    /// The preimage of a Weyl group element (given by a word) obtained by
    /// multiplying the simple lifts along the word.
    pub fn section(&self, word: &[usize]) -> PinElement {
        word.iter().fold(PinElement::identity(&self.rs), |acc, &s| acc.mul(&self.group.gens()[s]))
    }
}
