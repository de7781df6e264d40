//! Exact arithmetic for the sign groups attached to reduced words: scalars
//! of the form m / 2^(e/2), signed generator monomials, elements of the
//! algebra they span, their rotation matrices, and the orbit and subgroup
//! structure used by the cell counts.

mod action;
mod clifford;
mod hgroup;
mod quat;
mod scalar;
mod signed;

pub use action::{Orbit, TranslateOrbits};
pub use clifford::CliffordElement;
pub use hgroup::{h_member, h_size, strand_sign, thin_stats, StrandPartition, ThinStats};
pub use quat::QuatMonomial;
pub use scalar::DyadicRootScalar;
pub use signed::SignedPermMatrix;
