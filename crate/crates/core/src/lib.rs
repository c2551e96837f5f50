//! Exact computations for simple complete ideals of finite colength in a
//! two-dimensional regular local ring.
//!
//! An ideal is given by its point basis `(a_1, ..., a_n)`, the multiplicities
//! at its base points. From it the crate derives the proximity matrix, the dual
//! graph of the resolution, the exceptional divisor lattice, multiplier ideals,
//! and the set of jumping numbers, both by a closed formula and by brute force.
//!
//! All public indices are 1-based. All arithmetic is exact.

pub mod closed_form;
pub mod corpus;
pub mod curve;
pub mod divisor;
pub mod dual_graph;
pub mod oracle;
pub mod proximity;
pub mod rational;

pub use closed_form::{generators, invert_jumping_numbers, Jump, JumpDecomposition, JumpError, JumpingSetDescription};
pub use curve::{CharacteristicPairs, CurveError, EquisingularityClass, IdealDatum, MultiplicitySequence};
pub use divisor::{CompleteIdealVector, Divisor, Lattice, LatticeError};
pub use dual_graph::DualGraph;
pub use oracle::{oracle_jumping_numbers, OracleError};
pub use proximity::{GammaStructure, PointBasis, ProximityError, ProximityMatrix, SimpleIdeal, Span};
pub use rational::Rational;

pub use num_bigint::BigInt;
