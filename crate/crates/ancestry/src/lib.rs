//! Enumeration of the sign vectors attached to reduced words, together with
//! the closed-form count predictions they must satisfy.

mod counts;
mod enumerate;
mod eps;
mod error;

pub use counts::{joined_partition, predicted_count, predicted_count_for_multiplier, CountPrediction};
pub use enumerate::{
    click_applies, click_units, dim_bound_check, enumerate_ancestries, enumerate_preancestries,
    is_thin, replay, upper_set_dim1, Ancestry, Preancestry,
};
pub use eps::{EpsVec, MAX_LEN};
pub use error::{Error, Result};
