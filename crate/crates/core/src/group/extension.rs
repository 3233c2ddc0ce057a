//! Abelian extensions `1 → A → E → G → 1`.

use alloc::vec::Vec;

use super::{FiniteGroup, Subgroup};
use crate::error::{domain, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionData {
    pub total: FiniteGroup,
    pub kernel: Subgroup,
    /// Image in the base of each element of the total group.
    pub quotient_map: Vec<usize>,
    pub base: FiniteGroup,
}

impl ExtensionData {
    /// Validate a surjective homomorphism with abelian kernel.
    pub fn new(total: FiniteGroup, base: FiniteGroup, quotient_map: Vec<usize>) -> Result<ExtensionData> {
        if !total.is_homomorphism(&base, &quotient_map) {
            return Err(domain!("quotient map is not a homomorphism"));
        }
        let mut hit = alloc::vec![false; base.order()];
        for &x in &quotient_map {
            hit[x] = true;
        }
        if hit.iter().any(|h| !h) {
            return Err(domain!("quotient map is not surjective"));
        }
        let kernel_elems: Vec<usize> = (0..total.order())
            .filter(|&x| quotient_map[x] == base.identity())
            .collect();
        let kernel = Subgroup::from_elements(&total, &kernel_elems)?;
        if !kernel.group().is_abelian() {
            return Err(domain!("extension kernel is not abelian"));
        }
        debug_assert!(kernel.is_normal());
        Ok(ExtensionData {
            total,
            kernel,
            quotient_map,
            base,
        })
    }

    /// `E = G` with the identity quotient map.
    pub fn identity(base: &FiniteGroup) -> ExtensionData {
        let map = (0..base.order()).collect();
        ExtensionData::new(base.clone(), base.clone(), map).expect("identity extension is valid")
    }

    pub fn is_central(&self) -> bool {
        self.kernel
            .elements()
            .iter()
            .all(|&a| (0..self.total.order()).all(|x| self.total.commute(a, x)))
    }
}

/// The central extension of `base` by `Z/k` with normalized 2-cocycle `c`
/// (table over `base × base`, values mod `k`).
///
/// `E = Z/k × G` with `(a, g)(b, h) = (a + b + c(g, h), gh)`; the pair `(a, g)`
/// has index `g·k + a`.
pub fn central_extension(base: &FiniteGroup, k: u64, cocycle: &[u64]) -> Result<ExtensionData> {
    let n = base.order();
    if cocycle.len() != n * n {
        return Err(domain!("2-cochain table has length {} instead of {}", cocycle.len(), n * n));
    }
    let ku = k as usize;
    let size = n * ku;
    let mut mult = Vec::with_capacity(size * size);
    for x in 0..size {
        let (g, a) = (x / ku, x % ku);
        for y in 0..size {
            let (h, b) = (y / ku, y % ku);
            let c = (a as u64 + b as u64 + cocycle[g * n + h] % k) % k;
            mult.push((base.mul(g, h) * ku + c as usize) as u32);
        }
    }
    // Associativity of this table is the cocycle condition; from_flat checks it.
    let total = FiniteGroup::from_flat(size, mult, None)
        .map_err(|e| domain!("extension table is not a group ({e}); is the 2-cochain a normalized cocycle?"))?;
    let map = (0..size).map(|x| x / ku).collect();
    ExtensionData::new(total, base.clone(), map)
}
