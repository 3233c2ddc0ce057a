//! Restriction, inflation, and the inflation-kill check.

use alloc::vec;
use alloc::vec::Vec;

use super::cochain::Cochain;
use super::engine::check_size;
use super::group::{cohomology_group, trivialize};
use crate::caps::Caps;
use crate::error::{domain, Result};
use crate::group::extension::central_extension;
use crate::group::{ExtensionData, Subgroup};

/// Restrict along the embedding of a subgroup.
pub fn restrict(c: &Cochain, h: &Subgroup) -> Result<Cochain> {
    c.group().mismatch(h.parent(), "restriction")?;
    let el = h.elements();
    Ok(Cochain::from_fn(h.group(), c.degree(), c.modulus(), |a| {
        let args: Vec<usize> = a.iter().map(|&x| el[x]).collect();
        c.value(&args) as i64
    }))
}

/// Pull back along the quotient map `E ↠ G`.
pub fn inflate(c: &Cochain, ext: &ExtensionData) -> Result<Cochain> {
    if c.group() != &ext.base {
        return Err(domain!("cochain is not defined on the base of the extension"));
    }
    let q = &ext.quotient_map;
    let k = c.degree();
    let n = ext.total.order();
    let mut table = vec![0u64; n.pow(k as u32)];
    let mut args = vec![0usize; k];
    for (idx, slot) in table.iter_mut().enumerate() {
        let mut r = idx;
        for a in args.iter_mut().rev() {
            *a = q[r % n];
            r /= n;
        }
        *slot = c.value(&args);
    }
    Cochain::new(&ext.total, k, c.modulus(), table)
}

/// `λ` with `dλ = |G|·c` modulo `m·|G|`, i.e. `d(λ/(m|G|)) = c/m` in `Q/Z`.
///
/// Exists exactly when the class of `c` vanishes in `H^k(G; μ)`.
pub fn mu_trivialization(c: &Cochain, caps: &Caps) -> Result<Option<Cochain>> {
    c.require_cocycle()?;
    if c.degree() == 0 {
        return Ok(c.is_zero().then(|| c.clone()));
    }
    check_size(c.group(), c.degree() - 1, caps)?;
    let big = c.modulus() * c.group().order() as u64;
    trivialize(&c.lift_modulus(big)?)
}

/// Outcome of [`inflation_kill_check`].
#[derive(Clone, Debug)]
pub struct KillReport {
    pub killed: bool,
    /// Trivializing 2-cochain on `E` with values in `Z/(m·|E|)`, read as `λ/(m·|E|) ∈ Q/Z`.
    pub witness: Option<Cochain>,
}

/// Whether the inflation of `alpha` to `E` vanishes in `H³(E; μ)`.
pub fn inflation_kill_check(ext: &ExtensionData, alpha: &Cochain, caps: &Caps) -> Result<KillReport> {
    if alpha.degree() != 3 {
        return Err(domain!("the kill check takes a 3-cocycle"));
    }
    alpha.require_cocycle()?;
    check_size(&ext.total, 2, caps)?;
    let inflated = inflate(alpha, ext)?;
    let witness = mu_trivialization(&inflated, caps)?;
    Ok(KillReport {
        killed: witness.is_some(),
        witness,
    })
}

/// Result of a bounded [`kill_search`].
#[derive(Clone, Debug)]
pub struct KillSearch {
    /// The first killing extension, with its kernel order and `H²(G; Z/k)` coordinates.
    pub found: Option<(ExtensionData, u64, Vec<u64>, KillReport)>,
    /// Extensions examined.
    pub examined: usize,
}

/// Search central extensions `1 → Z/k → E → G → 1`, `k ≤ max_kernel`, in
/// order of `k` and then of `H²(G; Z/k)` coordinates, for one killing `alpha`.
/// An empty result is inconclusive.
pub fn kill_search(alpha: &Cochain, max_kernel: u64, max_extensions: usize, caps: &Caps) -> Result<KillSearch> {
    let g = alpha.group();
    let mut examined = 0;
    for k in 1..=max_kernel.max(1) {
        let exts: Vec<(Vec<u64>, Vec<u64>)> = if k == 1 {
            vec![(Vec::new(), vec![0; g.order() * g.order()])]
        } else {
            let h2 = cohomology_group(g, 2, k, caps)?;
            super::group::CohomologyGroup::enumerate(h2.invariant_factors())
                .into_iter()
                .map(|coords| {
                    let c = h2.cocycle(&coords).expect("coordinates match");
                    (coords, c.table().to_vec())
                })
                .collect()
        };
        for (coords, table) in exts {
            if examined >= max_extensions {
                return Ok(KillSearch { found: None, examined });
            }
            examined += 1;
            let ext = central_extension(g, k, &table)?;
            if check_size(&ext.total, 2, caps).is_err() {
                continue;
            }
            let report = inflation_kill_check(&ext, alpha, caps)?;
            if report.killed {
                return Ok(KillSearch {
                    found: Some((ext, k, coords, report)),
                    examined,
                });
            }
        }
    }
    Ok(KillSearch { found: None, examined })
}
