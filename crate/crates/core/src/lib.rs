//! Exact computation of Volkenborn and fermionic p-adic integrals of
//! polynomials, the special numbers they produce, and an executable catalog
//! of identities among them.
//!
//! Everything is exact: scalars are reduced rationals and every identity is
//! compared for equality, never within a tolerance.

pub mod catalog;
mod error;
pub mod families;
pub mod integrate;
pub mod par;
pub mod poly;
pub mod rational;
pub mod series;

pub use error::Error;
pub use integrate::Functional;
pub use poly::{BiPolynomial, Basis, Polynomial};
pub use rational::{ord_p, p_norm, PAdicValuation, Prime, Rational};
pub use series::{StdSeries, TruncatedSeries};
