//! Numerical invariants of curves on K3 surfaces, of their moduli, and of
//! the Fano varieties that extend them, together with a registry that
//! re-derives a fixed list of such numbers and reports on each.

pub mod curves;
pub mod error;
pub mod moduli;
pub mod mukai;
pub mod parse;
pub mod registry;
pub mod series;
pub mod surfaces;
pub mod wps;

pub use error::{Error, Result};
