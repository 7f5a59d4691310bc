//! Finite orthomodular lattices, ring-like structures of events, binary
//! lattice terms, and exact state spaces.
//!
//! Lattice and ring code is combinatorial over element indices. The state
//! space code is generic over an exact [`Scalar`]; [`Rational`] is the
//! default instantiation.

pub mod corpus;
pub mod error;
pub mod format;
pub mod identity;
pub mod lattice;
pub mod poset;
pub mod rlse;
pub mod states;
pub mod suite;
pub mod terms;

pub use error::{Error, Result};
pub use identity::{AxiomReport, Element, Failure};
pub use lattice::{check_oml, direct_product, FiniteOml, OmlFailure, OmlLaw, OmlReport};
pub use poset::FinitePoset;
pub use rlse::{derived_lattice, rlse_from_oml, Plus, Rlse, RlseTables};
pub use states::Scalar;
pub use terms::Term;

/// Arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// A state with rational values.
pub type State = states::State<Rational>;
/// A numerical event set with rational values.
pub type NumericalEventSet = states::NumericalEventSet<Rational>;
