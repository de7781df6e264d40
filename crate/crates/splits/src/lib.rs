//! Decomposition of wiring diagrams into independent factors: block
//! decomposition, the three split types, and census-level verification of
//! the product identities they induce.

mod error;
mod moves;
mod verify;

pub use error::{Error, Result};
pub use moves::{
    apply, apply_block, apply_split1, apply_split2, available_moves, detect_apply_split3,
    detect_split1, detect_tourists, on_region_boundary, Side, Split1Witness, SplitMove,
};
pub use verify::{cells_per_dim, verify_product_lemma};
