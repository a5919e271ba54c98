//! Property-A witnesses at finite scale and the smoothing of probability
//! measures along a ulf graph.

mod measure;
mod smoothing;
mod witness;

pub use measure::{ProbMeasure, NORMALIZATION_TOL};
pub use smoothing::{
    smooth, smooth_with_constant, smoothing_constant, verify_smoothing,
    verify_smoothing_with_tolerance, Smoothed, SmoothingReport, SMOOTHING_TOL,
};
pub use witness::{ball_average_witness, witness_quality, witness_quality_on, Witness};
