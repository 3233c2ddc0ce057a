//! Sector bookkeeping for gauging an abelian group: `W //^β A ≅ ⊕_a W_a^{ι_aβ}`
//! as labels, the Galois transformation rule and the reindexing identity
//! `^γ(W //^β A) ≅ ^γW //^{n²β} A`.

use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::arith::{gcd, inv_mod, lcm};
use crate::caps::Caps;
use crate::cohomology::{
    coboundary, cohomology_group, galois_act_class, galois_fixed_exponent, slant_linearity_check, Cochain,
    CohomologyClass, CohomologyGroup, FixedSubgroup,
};
use crate::cohomology::slant::slant2_unchecked;
use crate::cyclotomic::GaloisTwist;
use crate::error::{domain, Result};
use crate::group::FiniteGroup;
use crate::twisted_double::{galois_squared_check, GaloisSquaredReport};

/// `(a, ι_aβ)`; the character is stored as its value table on `A`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SectorLabel {
    pub sector: usize,
    pub twist_character: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugedDecomposition {
    pub group: FiniteGroup,
    pub beta: Cochain,
    pub modulus: u64,
    /// One label per element, ordered by sector index.
    pub labels: Vec<SectorLabel>,
}

/// Multiplication by a unit `n` on `μ_m` together with `n⁻¹` on `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugationRule {
    pub n: u64,
    pub n_inv: u64,
    /// `lcm(m, exponent(A))`, the modulus `n` is reduced by.
    pub modulus: u64,
}

impl ConjugationRule {
    pub fn new(n: i64, m: u64, exponent: u64) -> Result<ConjugationRule> {
        let modulus = lcm(m, exponent);
        let r = n.rem_euclid(modulus as i64) as u64;
        if gcd(r, modulus) != 1 || gcd(r, m * exponent) != 1 {
            return Err(domain!("n = {n} is not a unit modulo m·exponent = {}", m * exponent));
        }
        let n_inv = inv_mod(r % exponent.max(1), exponent.max(1)).unwrap_or(0);
        Ok(ConjugationRule { n: r, n_inv, modulus })
    }

    pub fn for_decomposition(n: i64, dec: &GaugedDecomposition) -> Result<ConjugationRule> {
        ConjugationRule::new(n, dec.modulus, dec.group.exponent() as u64)
    }
}

fn require_abelian(a: &FiniteGroup) -> Result<()> {
    if !a.is_abelian() {
        return Err(domain!("abelian gauging needs an abelian group"));
    }
    Ok(())
}

pub fn gauged_decomposition(a: &FiniteGroup, beta: &Cochain) -> Result<GaugedDecomposition> {
    require_abelian(a)?;
    a.mismatch(beta.group(), "gauged decomposition")?;
    if beta.degree() != 2 {
        return Err(domain!("β must be a 2-cochain"));
    }
    beta.require_cocycle()?;
    let labels = (0..a.order())
        .map(|x| {
            // For abelian A the centralizer is A with the same element order.
            let character = slant2_unchecked(beta, x)?;
            Ok(SectorLabel { sector: x, twist_character: character.table().to_vec() })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GaugedDecomposition { group: a.clone(), beta: beta.clone(), modulus: beta.modulus(), labels })
}

/// `(a, χ) ↦ (n⁻¹a, n·χ)`, re-sorted by sector.
pub fn galois_transform(dec: &GaugedDecomposition, rule: &ConjugationRule) -> GaugedDecomposition {
    let g = &dec.group;
    let m = dec.modulus;
    let mut labels: Vec<SectorLabel> = dec
        .labels
        .iter()
        .map(|l| SectorLabel {
            sector: g.pow(l.sector, rule.n_inv as i64),
            twist_character: l.twist_character.iter().map(|&v| v * (rule.n % m) % m).collect(),
        })
        .collect();
    labels.sort();
    GaugedDecomposition { group: g.clone(), beta: dec.beta.scale(rule.n as i64), modulus: m, labels }
}

/// Outcome of one reindexing comparison; `mismatch` is the first sector where
/// the two sides differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReindexOutcome {
    pub holds: bool,
    pub mismatch: Option<usize>,
}

/// `galois_transform(dec(β), n) = dec(n²β)` as multisets of labels.
pub fn reindex_check(a: &FiniteGroup, beta: &Cochain, rule: &ConjugationRule) -> Result<ReindexOutcome> {
    let lhs = galois_transform(&gauged_decomposition(a, beta)?, rule);
    let n2 = (rule.n * rule.n % beta.modulus()) as i64;
    let rhs = gauged_decomposition(a, &beta.scale(n2))?;
    let mismatch = lhs.labels.iter().zip(&rhs.labels).find(|(x, y)| x != y).map(|(x, _)| x.sector);
    Ok(ReindexOutcome { holds: mismatch.is_none() && lhs.labels.len() == rhs.labels.len(), mismatch })
}

/// Everything known about `α` under `ζ ↦ ζⁿ`: `n²α`, the fixed exponent of
/// `x ↦ n²x` on the μ-part, and the modular-data comparison for small groups.
#[derive(Clone, Debug)]
pub struct TransportReport {
    pub n: i64,
    pub class: Vec<u64>,
    pub twisted_class: Vec<u64>,
    pub fixed: FixedSubgroup,
    pub galois_squared: Option<GaloisSquaredReport>,
}

pub fn anomaly_transport_demo(alpha: &CohomologyClass, n: i64, caps: &Caps) -> Result<TransportReport> {
    let h = alpha.parent();
    let m = h.modulus();
    let twisted = galois_act_class(alpha, &GaloisTwist::new(m, n.rem_euclid(m as i64), 2)?)?;
    let g = h.group();
    let small = g.order() <= caps.exhaustive_double_order;
    let coprime = gcd(n.rem_euclid((m * g.order() as u64) as i64) as u64, m * g.order() as u64) == 1;
    let galois_squared = if small && coprime && h.degree() == 3 { Some(galois_squared_check(alpha, n, caps)?) } else { None };
    Ok(TransportReport {
        n,
        class: alpha.coordinates().to_vec(),
        twisted_class: twisted.coordinates().to_vec(),
        fixed: galois_fixed_exponent(h, 2),
        galois_squared,
    })
}

/// Campaign group shapes.
pub const SHAPES: [&str; 4] = ["(Z/3)^2", "(Z/5)^2", "Z/4xZ/8", "(Z/2)^3"];

/// A random normalized 2-cocycle with values in `Z/m`: a random class plus a
/// random coboundary.
pub fn random_cocycle(h: &CohomologyGroup, rng: &mut ChaCha8Rng) -> Result<Cochain> {
    let (a, m) = (h.group(), h.modulus());
    let coords: Vec<u64> = h.invariant_factors().iter().map(|&d| rng.next_u64() % d).collect();
    let class = h.cocycle(&coords)?;
    let lambda = Cochain::from_fn(a, 1, m, |_| (rng.next_u64() % m) as i64);
    class.add(&coboundary(&lambda))
}

/// One campaign instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignInstance {
    pub shape: String,
    pub seed: u64,
    pub n: u64,
    pub reindex: ReindexOutcome,
    pub slant_linear: bool,
}

/// `count` randomized reindexing and slant-linearity checks on `a`, instance
/// `i` seeded with `seed + i`.
pub fn campaign(shape: &str, a: &FiniteGroup, count: usize, seed: u64, caps: &Caps) -> Result<Vec<CampaignInstance>> {
    require_abelian(a)?;
    let m = a.exponent() as u64;
    let modulus = lcm(m, a.exponent() as u64);
    let h = cohomology_group(a, 2, m, caps)?;
    (0..count as u64)
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(i));
            let beta = random_cocycle(&h, &mut rng)?;
            let n = loop {
                let c = rng.next_u64() % (modulus * 8) + 1;
                if gcd(c, m * a.exponent() as u64) == 1 {
                    break c;
                }
            };
            let rule = ConjugationRule::new(n as i64, m, a.exponent() as u64)?;
            let slant_n = (rng.next_u64() % (2 * m)) as i64 - m as i64;
            Ok(CampaignInstance {
                shape: shape.into(),
                seed: seed.wrapping_add(i),
                n,
                reindex: reindex_check(a, &beta, &rule)?,
                slant_linear: slant_linearity_check(a, &beta, slant_n)?,
            })
        })
        .collect()
}
