//! Numerical audit of definite integrals of logarithmic and inverse
//! hyperbolic tangent integrands against Hurwitz zeta closed forms.

pub(crate) mod cnum_serde;
pub mod cli;
pub mod identities;
pub mod quad;
pub mod verify;
pub mod specfun;
