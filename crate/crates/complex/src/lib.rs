//! Cell complexes of signed strata: per-translate censuses, 1-skeletons,
//! connected components, Euler characteristics, and whole-permutation
//! reports grouped by symmetry orbit.

mod census;
mod dot;
mod error;
mod report;

pub use census::{build_census, euler_check, CellCensus, ComponentCensus, Enumeration};
pub use dot::skeleton_dot;
pub use error::{Error, Result};
pub use report::{
    censuses_for_all_translates, component_report, component_report_for_word, ComponentReport,
    OrbitReport, SigmaCensus,
};
