//! Exact linear algebra back ends: integer Smith normal form, elimination over
//! Z/p^e and over prime fields, and Gaussian elimination over cyclotomic fields.

pub mod field;
pub mod fp;
pub mod snf;
pub mod zmod;
