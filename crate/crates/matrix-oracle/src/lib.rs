//! Exact rational matrix side of the stratification: unit lower triangular
//! products of one-parameter generators, rank-jump permutations, signed cell
//! extraction, inversion-supported factorization, positivity witnesses, and
//! embedded closed-loop path fixtures.

mod cell;
mod checks;
mod error;
mod factor;
mod gamma;
mod matrix;

pub use cell::{bruhat_perm, bruhat_perm_rows, signed_cell, signed_cell_rows};
pub use checks::{dominated_minors, lambda_cell_crosscheck, PositiveWitness};
pub use error::{Error, Result};
pub use factor::{lo_factorize, supported_on_inversions};
pub use gamma::{
    gamma_fixture, gamma_fixture_check, GammaFamily, GammaFamilyReport, GammaFixture, GammaPath,
    GammaReport,
};
pub use matrix::{lambda_product, RationalLowerTriangular};
