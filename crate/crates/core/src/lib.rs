//! Exact irreducibility test for plane algebraic curves at a point and at
//! infinity, driven by Newton diagrams of discriminants.

pub mod exactpoly;
pub mod parser;
pub mod resultant;

pub use exactpoly::{Coefficient, FormMode, Monomial, Polynomial, Var};
pub use parser::{parse_polynomial, ParseError};
pub mod cli;
pub mod criteria;
pub mod merle;
pub mod newton;
