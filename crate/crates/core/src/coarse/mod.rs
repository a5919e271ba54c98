//! Ulf graphs, entourages, filtrations and extended metrics on dense
//! ground sets `0..n`.

mod entourage;
mod filtration;
mod graph;
mod metric;

pub use entourage::{Entourage, EntourageJson};
pub use filtration::{filtration_from_generators, metric_from_filtration, Filtration};
pub use graph::{graph_metric, GraphJson, UlfGraph};
pub use metric::{Dist, ExtendedMetric};
