pub mod error;
pub mod exactmath;
pub mod nclattice;
pub mod orthopoly;
pub mod roots;
pub mod skewgrowth;

pub use error::{Error, Result};
