//! Exact hyperfield arithmetic and the polynomial hyperstructure over a hyperfield.

pub mod assoc;
pub mod carriers;
pub mod cli;
pub mod divide;
pub mod error;
pub mod polyalg;
pub mod repro;
pub mod tropical;

pub use error::{Error, Result};
