//! Standard algebras, their Cartans, flag stabilizers and incidence models.

mod algebras;
mod classical;
mod incidence;

pub use algebras::{abelian, gl, orthogonal_coordinate_names, orthogonal_gram, sl, so, two_dim_nonabelian};
pub use classical::{is_isotropic, Classical, Family, FlagSpec};
pub use incidence::{admissible_model, subsets_model};
