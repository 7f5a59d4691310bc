use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_traits::{NumAssignRef, NumRef, Signed};

/// Exact ordered field used for state values and the simplex.
///
/// Implemented for every type with exact, totally ordered arithmetic, e.g.
/// [`num_rational::BigRational`] and `Ratio<i64>`. Floating point types are
/// excluded on purpose (they are not `Ord`): additivity and the Boolean test
/// are exact identities.
pub trait Scalar:
    Clone + Ord + Debug + Display + FromStr + NumRef + NumAssignRef + Signed
{
}

impl<T> Scalar for T where
    T: Clone + Ord + Debug + Display + FromStr + NumRef + NumAssignRef + Signed
{
}
