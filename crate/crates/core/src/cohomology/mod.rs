//! Bar-complex cohomology of finite groups with trivial Z/m coefficients,
//! modelling `μ_m ⊂ μ`.

mod engine;

pub mod cochain;
pub mod galois;
pub mod group;
pub mod maps;
pub mod slant;

pub use cochain::{coboundary, Cochain};
pub use galois::{galois_act_class, galois_fixed_exponent, FixedSubgroup};
pub use group::{class_add, cohomology_group, trivialize, ClassCoordinates, CohomologyClass, CohomologyGroup};
pub use maps::{inflate, inflation_kill_check, kill_search, mu_trivialization, restrict, KillReport, KillSearch};
pub use slant::{slant2, slant3, slant_linearity_check};
