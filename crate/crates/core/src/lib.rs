//! Littlewood-Richardson tableaux, box moves and poles, with a finite-field
//! engine for invariant subspaces of nilpotent operators.

pub mod boxmove;
pub mod error;
pub mod field;
pub mod linalg;
pub mod nilmod;
pub mod partition;
pub mod poles;
pub mod tableau;

pub use error::{Error, Result};
pub use field::{FiniteField, Fp, Scalar};
pub use linalg::{Matrix, Subspace};
pub use partition::Partition;
pub use tableau::{enumerate, Column, LrTableau, Shape};

pub type F2 = Fp<2>;
pub type F3 = Fp<3>;
pub type F5 = Fp<5>;
pub type F7 = Fp<7>;
pub type Rational = num_rational::BigRational;
