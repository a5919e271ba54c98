//! Finite-scale uniform Roe algebra machinery: propagation, ball
//! compressions, ghost profiles, sparse-diagonal assembly, nonnegative top
//! eigenvectors and the `h^γ` correction.

mod compression;
mod ghost;
mod h_gamma;
mod operator;
mod spectral;

pub use compression::{compress, BallCompression};
pub use ghost::{
    block_constant_ghost, block_constant_projection, ghost_profile, sparse_diagonal,
    ComponentBound, GhostProfile, SparseFamily, BLOCK_NORM_TOL,
};
pub use h_gamma::{h_gamma, translate, HGamma, DEFAULT_FLOOR};
pub use operator::{propagation, PropOperator, SparseOperatorJson};
pub use spectral::{
    hermitian_eigen, nonneg_top_eigenvector, operator_norm, TopEigenvector, DENSE_NORM_LIMIT,
};
