//! File formats, fixture verification, implication fuzzing and report
//! rendering on top of `gradlab-core`.

pub mod error;
pub mod format;
pub mod checks;
pub mod render;
pub mod verify;
pub mod harness;
