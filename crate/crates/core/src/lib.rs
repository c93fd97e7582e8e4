//! Exact computational toolkit for multiplicity bounds of finite reductive
//! groups acting on spherical spaces.
//!
//! The library is organized around a handful of exact layers:
//! cyclotomic arithmetic ([`cyclo`]), concrete finite groups and their
//! character tables ([`group`], [`chartab`]), root systems and closed
//! subsystems ([`roots`]), families of unipotent characters with their
//! non-abelian Fourier matrices ([`families`]), the bound constants
//! ([`bounds`]), a brute-force GL2 oracle ([`gl2`]) and a point-counting
//! component estimator ([`estimator`]).

#[macro_use]
extern crate serde;

pub mod error;
pub mod linalg;
pub mod cyclo;
pub mod perm;
pub mod group;
pub mod classfn;
pub mod chartab;
pub mod roots;
pub mod subsystems;
pub mod families;

pub use error::{Error, Result};
