//! Exact finite-group cohomology, cyclotomic arithmetic, twisted Drinfeld
//! doubles and anomaly bookkeeping.
//!
//! The crate is `no_std` with `alloc`; enable the `std` feature for the
//! process-wide cyclotomic level cache and floating-point diagnostics.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod abelian_gauging;
pub mod arith;
pub mod azumaya;
pub mod caps;
pub mod characters;
pub mod cohomology;
pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod linalg;
pub mod twisted_double;

pub use caps::Caps;
pub use cyclotomic::{CycloLevel, CycloNumber, GaloisTwist, MuElement};
pub use error::{Error, Result};
pub use group::FiniteGroup;
