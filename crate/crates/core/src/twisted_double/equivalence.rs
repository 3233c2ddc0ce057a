//! Label bijections between modular data, and the `γ²` consistency
//! experiment for Galois-conjugated twists.

use alloc::vec;
use alloc::vec::Vec;

use super::algebra::build_double;
use super::modular::{check_identities, conjugate_modular_data, modular_data, ModularData};
use crate::arith::{gcd, pow_mod};
use crate::caps::Caps;
use crate::cohomology::{galois_act_class, CohomologyClass};
use crate::cyclotomic::{CycloNumber, GaloisTwist};
use crate::error::{domain, Result};

/// A bijection `π` with signs `ε` such that `T2[π(i)] = T1[i]` and
/// `S2[π(i)][π(j)] = ε_i ε_j S1[i][j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabelEquivalence {
    pub permutation: Vec<usize>,
    pub signs: Vec<i8>,
}

fn canonical_up_to_sign(v: &CycloNumber) -> CycloNumber {
    let n = -v;
    if n < *v {
        n
    } else {
        v.clone()
    }
}

fn fingerprints(md: &ModularData) -> Vec<Vec<CycloNumber>> {
    md.s
        .iter()
        .map(|row| {
            let mut f: Vec<CycloNumber> = row.iter().map(canonical_up_to_sign).collect();
            f.sort();
            f
        })
        .collect()
}

struct Search<'a> {
    a: &'a ModularData,
    b: &'a ModularData,
    neg_a: Vec<Vec<CycloNumber>>,
    candidates: Vec<Vec<usize>>,
    perm: Vec<usize>,
    signs: Vec<i8>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, i: usize, j: usize, sign: i8) -> bool {
        let b = &self.b.s;
        if b[j][j] != self.a.s[i][i] {
            return false;
        }
        (0..i).all(|k| {
            let want = if sign * self.signs[k] > 0 { &self.a.s[i][k] } else { &self.neg_a[i][k] };
            b[j][self.perm[k]] == *want
        })
    }

    fn run(&mut self, i: usize) -> bool {
        if i == self.perm.len() {
            return true;
        }
        for ci in 0..self.candidates[i].len() {
            let j = self.candidates[i][ci];
            if self.used[j] {
                continue;
            }
            let signs: &[i8] = if i == 0 { &[1] } else { &[1, -1] };
            for &sign in signs {
                if !self.consistent(i, j, sign) {
                    continue;
                }
                self.perm[i] = j;
                self.signs[i] = sign;
                self.used[j] = true;
                if self.run(i + 1) {
                    return true;
                }
                self.used[j] = false;
            }
        }
        false
    }
}

/// First bijection in lexicographic order of candidates, or `None`.
pub fn find_label_equivalence(a: &ModularData, b: &ModularData) -> Option<LabelEquivalence> {
    let r = a.rank();
    if r != b.rank() {
        return None;
    }
    let fa = fingerprints(a);
    let fb = fingerprints(b);
    let candidates: Vec<Vec<usize>> = (0..r)
        .map(|i| (0..r).filter(|&j| a.t[i] == b.t[j] && fa[i] == fb[j]).collect())
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return None;
    }
    let neg_a = a.s.iter().map(|row| row.iter().map(|v| -v).collect()).collect();
    let mut search = Search { a, b, neg_a, candidates, perm: vec![0; r], signs: vec![1; r], used: vec![false; r] };
    search.run(0).then(|| LabelEquivalence { permutation: search.perm, signs: search.signs })
}

/// Outcome of comparing `MD(n²α)` with `σ_{n²}(MD(α))`.
#[derive(Clone, Debug)]
pub struct GaloisSquaredReport {
    pub n: i64,
    /// `n² mod m`, the factor applied to the class.
    pub factor: u64,
    /// Coordinates of `α` and `n²α` in the μ-part.
    pub class: Vec<u64>,
    pub twisted_class: Vec<u64>,
    /// Equivalence is predicted independently of the conjecture (`α = 0` or
    /// `n²α = α`).
    pub forced: bool,
    pub equivalence: Option<LabelEquivalence>,
    /// Whether the conjugated data still passes the identity suite without
    /// the positivity condition.
    pub conjugate_identities: bool,
}

pub fn galois_squared_check(alpha: &CohomologyClass, n: i64, caps: &Caps) -> Result<GaloisSquaredReport> {
    let h = alpha.parent();
    let g = h.group();
    let m = h.modulus();
    let bound = m * g.order() as u64;
    if gcd(n.rem_euclid(bound as i64) as u64, bound) != 1 {
        return Err(domain!("n = {n} must be coprime to m·|G| = {bound}"));
    }
    let unit = n.rem_euclid(m as i64);
    let twisted = galois_act_class(alpha, &GaloisTwist::new(m, unit, 2)?)?;
    let factor = pow_mod(unit as u64, 2, m);
    let md_alpha = modular_data(&build_double(g, alpha.representative(), caps)?)?;
    let md_a = modular_data(&build_double(g, twisted.representative(), caps)?)?;
    let nn = n.rem_euclid(md_alpha.level as i64);
    let md_b = conjugate_modular_data(&md_alpha, nn * nn % md_alpha.level as i64)?;
    let conjugate_identities = check_identities(&md_b, false).is_ok();
    Ok(GaloisSquaredReport {
        n,
        factor,
        class: alpha.mu_coordinates(),
        twisted_class: twisted.mu_coordinates(),
        forced: alpha.is_zero() || twisted.coordinates() == alpha.coordinates(),
        equivalence: find_label_equivalence(&md_a, &md_b),
        conjugate_identities,
    })
}
