//! Exact invariants of central toric arrangements.

pub mod error;
pub mod exactlin;
pub mod polyring;
pub mod arithmat;
pub mod cohom;
pub mod layers;
pub mod named;
pub mod resonance;
pub mod covering;

pub use error::{Error, Result};
