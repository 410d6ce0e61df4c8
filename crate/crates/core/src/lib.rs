//! Arithmetic in purely cubic function fields of characteristic three.

pub mod error;
pub mod ff;
pub mod poly;
pub mod residue;
pub mod curve;
pub mod order;
pub mod places;
pub mod ideal;
pub mod oracle;
pub mod sample;
pub mod classgroup;
pub mod example;
pub mod text;
pub mod report;

pub use error::{Error, Result};
pub use ff::{Fe, Field, FieldCtx};
pub use poly::{Deg, Poly};
