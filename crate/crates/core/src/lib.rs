pub mod cli;
pub mod error;
pub mod gf2linalg;
pub mod grammar;
pub mod milnor;
pub mod motivic;
pub mod polyring;
pub mod rings;
pub mod weightfilt;

pub use error::{Error, Result};
