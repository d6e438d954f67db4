//! Graphic approximation of integer degree sequences.
//!
//! A degree sequence drawn at random is often not realizable as a simple
//! graph. [`approximate()`] repairs it in one pass by taking the majorization
//! meet with the maximal threshold sequence `T(n, s)`, which is graphic and
//! dominates every graphic sequence it is compared against. The remaining
//! modules supply the machinery to check that claim: graphicality tests,
//! Havel–Hakimi realization, sequence and distribution distances, seeded
//! samplers and an experiment harness.

pub mod approximate;
pub mod error;
pub mod harness;
pub mod majorization;
pub mod metrics;
pub mod realize;
pub mod sampling;
pub mod sequence;
pub mod threshold;

pub use approximate::approximate;
pub use error::{Error, Result};
pub use majorization::{majorizes, meet, strictly_majorizes};
pub use metrics::{degree_pmf, discrepancy, total_variation, total_variation_l1, DegreePmf, ZeroBin};
pub use realize::{degrees_of, havel_hakimi, Graph};
pub use sequence::{Degree, DegreeSequence};
pub use threshold::{
    threshold_graph, threshold_params, threshold_sequence, threshold_sequence_recursive, threshold_value,
    ThresholdParams,
};
