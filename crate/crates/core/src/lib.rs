//! Border-rank bounds for monomials and partially symmetric tensors on
//! products of projective spaces, via multigraded apolarity.

pub mod apolarity;
pub mod binomial;
pub mod bounds;
pub mod error;
pub mod ideals;
pub mod io;
pub mod linalg;
pub mod macaulay;
pub mod movefit;
pub mod poly;
pub mod ring;

pub use apolarity::{Convention, Tensor};
pub use error::{Error, ErrorKind, Result};
pub use ideals::{GradedIdeal, HilbertRecord, HilbertValue, Ideal, MonomialIdeal};
pub use ring::{FactorShape, Monomial, MultiDegree};
