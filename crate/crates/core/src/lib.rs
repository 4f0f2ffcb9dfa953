//! Exact construction of the Laguerre-constellation families and mechanical
//! verification of the identities they satisfy.

pub mod arith;
pub mod engine;
pub mod error;
pub mod families;
pub mod identities;
pub mod lc;
pub mod ops;
pub mod poly;
pub mod series;

pub use arith::{Rational, Symbol};
pub use error::{Error, Result};
pub use families::{FamilyId, ParamPoint};
pub use poly::Poly;
