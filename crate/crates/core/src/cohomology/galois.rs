//! Galois actions `x ↦ n^i·x` on cohomology with coefficients in `μ^{⊗i}`.

use alloc::vec::Vec;

use super::group::{CohomologyClass, CohomologyGroup};
use crate::arith::{gcd, lcm, pow_mod, units};
use crate::cyclotomic::GaloisTwist;
use crate::error::{domain, Result};

/// Multiply the class by `n^i`.
pub fn galois_act_class(c: &CohomologyClass, twist: &GaloisTwist) -> Result<CohomologyClass> {
    let m = c.parent().modulus();
    let n = twist.unit() % m.max(1);
    if gcd(twist.unit(), m) != 1 {
        return Err(domain!("{} is not a unit modulo {m}", twist.unit()));
    }
    let factor = pow_mod(n, twist.exponent() as u64, m);
    let rep = c.representative().scale(factor as i64);
    CohomologyClass::of(c.parent(), rep)
}

/// Fixed subgroup of `H^k(G; μ)` under `x ↦ n^i x` for all units `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSubgroup {
    pub invariant_factors: Vec<u64>,
    pub exponent: u64,
}

/// Largest `f | d` such that `(n^i − 1)·x = 0` on `Z/d` forces `x ∈ (d/f)·Z/d`.
fn fixed_part(d: u64, i: u32) -> u64 {
    units(d)
        .into_iter()
        .fold(d, |acc, n| gcd(acc, (pow_mod(n, i as u64, d) + d - 1) % d))
}

/// Invariant factors and exponent of the classes of `H^k(G; μ)` fixed by every
/// `n ∈ Ẑ^×` acting as `n^i`. The action is diagonal in the cyclic
/// decomposition, so each factor `Z/d` contributes its fixed cyclic subgroup.
pub fn galois_fixed_exponent(h: &CohomologyGroup, i: u32) -> FixedSubgroup {
    let parts: Vec<u64> = h
        .mu_factors()
        .iter()
        .map(|&d| if i == 0 { d } else { fixed_part(d, i) })
        .filter(|&f| f > 1)
        .collect();
    FixedSubgroup {
        exponent: parts.iter().fold(1, |a, &b| lcm(a, b)),
        invariant_factors: normalize_factors(&parts),
    }
}

/// Rewrite a list of cyclic orders as invariant factors `d₁ | d₂ | …`.
pub fn normalize_factors(orders: &[u64]) -> Vec<u64> {
    let mut by_prime: alloc::collections::BTreeMap<u64, Vec<u64>> = Default::default();
    for &o in orders {
        for (p, e) in crate::arith::factorize(o) {
            by_prime.entry(p).or_default().push(p.pow(e));
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut out = alloc::vec![1u64; len];
    for list in by_prime.values_mut() {
        list.sort_unstable();
        let pad = len - list.len();
        for (j, &q) in list.iter().enumerate() {
            out[pad + j] *= q;
        }
    }
    out
}
