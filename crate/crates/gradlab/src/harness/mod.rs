//! Random instance generation and the implication suite.

pub mod generate;
pub mod run;
pub mod suite;
