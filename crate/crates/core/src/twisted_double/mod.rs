//! Twisted Drinfeld doubles `D^α(G)`: simple modules and modular data of
//! `Z(Vect^α[G])`.

pub mod algebra;
pub mod equivalence;
pub mod modular;
pub mod modules;

pub use algebra::{build_double, TwistedDoubleAlgebra};
pub use equivalence::{find_label_equivalence, galois_squared_check, GaloisSquaredReport, LabelEquivalence};
pub use modular::{check_identities, conjugate_modular_data, modular_data, verlinde_check, verlinde_fusion, Fusion, ModularData, DOUBLE_SEED};
pub use modules::{simple_modules, SimpleLabel};
