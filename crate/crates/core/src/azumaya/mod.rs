//! Matrix algebras with finite group actions: Skolem–Noether witnesses, the
//! anomaly 2-cocycle, graded commutants, gauging and the Galois law.

pub mod action;
pub mod commutant;
pub mod examples;
pub mod gauge;
pub mod matrix;

pub use action::{anomaly_cocycle, anomaly_from_witnesses, inner_witness, AlgebraAction, AnomalyCocycle2, Automorphism};
pub use commutant::{graded_commutant, GradedCommutant};
pub use gauge::{galois_twist_check, gauge_algebra, regauging_search, GaloisTwistReport, Gauged};
pub use matrix::{Matrix, MatrixAlgebra};
