//! Group actions by permutations, partial translations, Schreier graphs,
//! box spaces, the decomposition of a ulf relation into involutions, and
//! the 2×2 trick.

mod box_space;
mod coloring;
mod schreier;
mod translation;

pub use box_space::{box_space, BoxSpace, BoxSpaceJson};
pub use coloring::{
    edge_color_decompose, greedy_edge_coloring, realize_as_action, two_by_two, EdgeColoring,
};
pub use schreier::{schreier_graph, ActionGenerators, ActionJson, GeneratorJson, NamedGenerator};
pub use translation::{is_involution, PartialTranslation};
