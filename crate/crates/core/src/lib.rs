#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]
//! Exact decision procedures for group-graded rings and modules over finite
//! and monomial backends.

extern crate alloc;

pub mod abelian;
pub mod error;
pub mod graded;
pub mod group;
pub mod monomial;
pub mod periodic;
pub mod report;
pub mod ring;
pub mod ring_props;
pub mod module;
pub mod module_props;
pub mod fixtures;
