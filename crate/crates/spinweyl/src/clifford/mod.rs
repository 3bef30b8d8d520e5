//! Clifford algebras, the pin double cover of a Weyl group and spin modules.

mod element;
pub mod fastcover;
mod pin;
mod spin;

pub use element::{monomial_sign, CliffordElement};
pub use fastcover::{FastCover, PinModP};
pub use pin::{lift_reflection, lift_root_vector, root_norm, PinCover, PinElement};
pub use spin::{ambient_gammas, orthogonal_bases, SpinModule, Variant};

#[cfg(test)]
mod tests;
