mod bits;
pub mod corpus;
pub mod flag;
pub mod ncpoly;
pub mod poset;
pub mod simplicial;
pub mod transforms;
pub mod verify;

pub type Rational = num_rational::BigRational;
