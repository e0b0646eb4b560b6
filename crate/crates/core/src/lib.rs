//! Exact computation in surface mixed braid groups and their abelian and
//! class-2 nilpotent quotients.

pub mod cli;
pub mod error;
pub mod homs;
pub mod oracle;
pub mod par;
pub mod presentations;
pub mod quotients;
pub mod random;
pub mod words;

pub use error::{Error, Result};
pub use par::Exec;
pub use words::{GroupParams, Word};
