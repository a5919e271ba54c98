//! Finite checks of the Hilbert-Schmidt identities: left-right action,
//! diagonal embedding, norm reduction, the three-part lemma and the
//! compression-state identity.

mod compression_identity;
mod hs;
mod lemma;
mod report;

pub use compression_identity::{
    compression_state_identity, ghost_vanishing, truncate_to_propagation,
    CompressionIdentityReport, GhostVanishingReport,
};
pub use hs::{
    diag_embed, diag_embed_real, left_right_apply, norm_reduction, HSMatrix, VecValuedMatrix,
};
pub use lemma::{
    fixed_point_residual, lemma_inequalities, twisted_conjugate, twisted_conjugate_vec,
    LemmaReport, UNIT_TOL,
};
pub use report::CheckReport;
