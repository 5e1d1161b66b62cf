//! Weight systems of quasihomogeneous isolated hypersurface singularities:
//! exact invariants, the combinatorial existence criteria, maps `κ` and their
//! types, degree bounds, and complete enumeration by Milnor number.

pub mod arith;
pub mod bounds;
pub mod cli;
pub mod conditions;
pub mod enumerate;
pub mod error;
pub mod graphs;
pub mod output;
pub mod weights;

pub use error::{Error, Result};
pub use weights::WeightSystem;
