//! Exact length-area generating functions for height-restricted Motzkin
//! meanders.
//!
//! A meander takes unit steps up, down or sideways between a floor and a
//! ceiling. Everything here is exact arithmetic over a fixed variable
//! set: `z` weighs vertical steps, `zh` horizontal ones, and `qh` (a
//! formal square root of the area weight) tracks doubled areas. The crate
//! computes the secular determinant of the transfer matrix by four
//! independent routes, propagator matrix elements in closed cofactor
//! form, boundary-marker refinements, cluster expansions of the logs, and
//! a brute-force path enumerator that cross-checks all of it.

pub mod cluster;
pub mod enumeration;
pub mod error;
pub mod markers;
pub mod matrix;
pub mod motzkin;
pub mod poly;
pub mod qseries;
pub mod report;
pub mod series;
pub mod symm;
pub mod vars;
pub mod verify;

pub use error::{Error, Result};
pub use matrix::PolyMatrix;
pub use poly::{Coef, Poly};
pub use series::Series;
pub use vars::{Mono, Var, NUM_PUBLIC_VARS, NUM_VARS};
