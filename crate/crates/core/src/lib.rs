//! Exact quantum Laurent expansions of cluster variables for triangulated
//! surfaces without punctures, computed both from perfect matchings of snake
//! graphs and from canonical submodules of string modules over the gentle
//! algebra of the triangulation.

pub mod cli;
pub mod error;
pub mod expansion;
pub mod kronecker;
pub mod laurent;
pub mod matrix;
pub mod seeds;
pub mod skein_mult;
pub mod snake;
pub mod strings;
pub mod surface;
pub mod torus;
pub mod valuation;

pub use error::{Error, Result};
