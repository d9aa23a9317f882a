pub mod cli;
pub mod config;
pub mod error;
pub mod expr;
pub mod geometry;
pub mod grassmann;
pub mod json;
pub mod liesuper;
pub mod linalg;
pub mod matrix;
pub mod random;
pub mod rational;
pub mod realform;
pub mod scalar;
pub mod superflag;
pub mod supermatrix;
pub mod verify;

pub use error::{Error, Result};
pub use grassmann::{GrassmannAlgebra, Parity, SuperNumber};
pub use scalar::GaussianRational;
