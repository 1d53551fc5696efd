//! Reduced density matrices, von Neumann entropy and the four-qubit
//! concurrence.

mod concurrence;
mod density;

pub use concurrence::{concurrence_operator_check, concurrence_tau, ConcurrenceOperatorReport};
pub use density::{
    partial_trace, unnormalized_entropy_magnitude, von_neumann_entropy, DensityMatrix, LogBase,
};
