//! Exact computations for unipotent traces of the infinite triangular
//! groups over finite fields: Hall–Littlewood machinery, character values
//! of `GL(n, q)`, central measures, and a brute-force finite-field oracle.

pub mod error;
pub mod partition;
pub mod poly;
pub mod rational;
pub mod symfunc;
pub mod traces;
pub mod measures;
pub mod oracle;
pub mod verify;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::TPolynomial;
pub use rational::Rational;
