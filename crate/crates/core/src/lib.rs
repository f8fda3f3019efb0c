//! Universal denominators of Hilbert series of invariant rings.
//!
//! Denominators are always products of cyclotomic polynomials and are carried
//! as [`CycloFactored`] values. The crate covers three families of actions:
//!
//! * finite groups, through eigenvalue data of their elements ([`molien`]),
//! * diagonal torus actions, through subsets of weights ([`torus`]),
//! * `SL_2` on binary forms, through its maximal torus ([`binary_forms`]).
//!
//! Molien series are computed exactly and serve as an independent check on
//! the finite-group results.

pub mod binary_forms;
pub mod cyclo;
pub mod degree;
pub mod error;
pub mod factored;
pub mod molien;
pub mod poly;
pub mod rational;
pub mod torus;

pub use cyclo::{cyclo_expand, cyclo_expand_with, cyclotomic, factor_one_minus, CycloKey, CycloSource, ExactCyclo};
pub use degree::{vec_divides, vec_lcm, DegreeVector};
pub use error::{Error, Result};
pub use factored::{CycloFactored, SignedFactored};
pub use poly::SparsePoly;
pub use rational::{rational_sum, reduce_rational, series_expand, RationalFn};
