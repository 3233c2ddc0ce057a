//! Resource caps shared by the size-sensitive operations.

use crate::error::{domain, Result};

/// Limits on how large a computation may grow before it is refused with [`Error::Size`].
///
/// [`Error::Size`]: crate::Error::Size
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest group produced by closing a set of generators.
    pub max_group_order: usize,
    /// Largest cochain degree accepted by the cohomology engine.
    pub max_degree: usize,
    /// Largest number of normalized cochains in the degree whose cocycles are computed.
    pub max_cochains: usize,
    /// Largest dense cochain table (|G|^k entries).
    pub max_table: usize,
    /// Largest φ(N) for a cyclotomic level.
    pub max_phi: usize,
    /// Largest rows×columns product for a dense modular solve.
    pub max_solve: usize,
    /// Groups up to this order get exhaustive associativity checks on the twisted double.
    pub exhaustive_double_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_group_order: 10_000,
            max_degree: 4,
            max_cochains: 2_000,
            max_table: 1 << 24,
            max_phi: 64,
            max_solve: 200_000_000,
            exhaustive_double_order: 24,
        }
    }
}

impl Caps {
    /// Parse overrides of the form `order=5000,cochains=4000,phi=96`.
    pub fn with_overrides(mut self, spec: &str) -> Result<Caps> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| domain!("cap override `{item}` is not key=value"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| domain!("cap override `{item}` has a non-integer value"))?;
            match key.trim() {
                "order" => self.max_group_order = value,
                "degree" => self.max_degree = value,
                "cochains" => self.max_cochains = value,
                "table" => self.max_table = value,
                "phi" => self.max_phi = value,
                "solve" => self.max_solve = value,
                "double" => self.exhaustive_double_order = value,
                other => return Err(domain!("unknown cap `{other}`")),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = Caps::default().with_overrides("order=12, phi=8").unwrap();
        assert_eq!(caps.max_group_order, 12);
        assert_eq!(caps.max_phi, 8);
        assert!(Caps::default().with_overrides("bogus=1").is_err());
        assert!(Caps::default().with_overrides("order").is_err());
    }
}
