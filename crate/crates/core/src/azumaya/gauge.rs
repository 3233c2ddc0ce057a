//! Gauging by a trivialized anomaly, re-gauging searches and the first-power
//! Galois law.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::action::{anomaly_cocycle, AlgebraAction, AnomalyCocycle2};
use super::matrix::{span_rank, Matrix, MatrixAlgebra};
use crate::arith::{gcd, lcm};
use crate::caps::Caps;
use crate::cohomology::{cohomology_group, CohomologyClass};
use crate::cyclotomic::{CycloNumber, MuElement};
use crate::error::{consistency, domain, size_err, Error, Result};
use crate::linalg::field;

/// `A //^β G` realized as the corner `eAe`, `e = |G|⁻¹ Σ β_g`.
#[derive(Clone, Debug)]
pub struct Gauged {
    pub idempotent: Matrix,
    pub rank: usize,
    /// `None` for the zero algebra.
    pub corner: Option<MatrixAlgebra>,
}

pub fn gauge_algebra(act: &AlgebraAction) -> Result<Gauged> {
    let beta = act.lift().ok_or_else(|| Error::NotTrivialized("the action has no lift β".into()))?;
    let g = act.group();
    for x in 0..g.order() {
        for y in 0..g.order() {
            if beta[x].mul(&beta[y]) != beta[g.mul(x, y)] {
                return Err(Error::NotTrivialized(format!("β_{x}·β_{y} ≠ β_{}", g.mul(x, y))));
            }
        }
    }
    let a = act.algebra();
    let lv = a.field();
    let mut sum = Matrix::zero(a.size(), &lv);
    for b in beta {
        sum = sum.add(b);
    }
    let inv_order = CycloNumber::from_rational(&lv, BigInt::from(1), BigInt::from(g.order()))?;
    let e = sum.scale(&inv_order);
    if e.mul(&e) != e {
        return Err(consistency!("averaged lift is not idempotent"));
    }
    let trace = e.trace().to_integer().ok_or_else(|| consistency!("trace of an idempotent is not an integer"))?;
    let rank = usize::try_from(trace).map_err(|_| consistency!("negative idempotent trace"))?;
    if rank == 0 {
        if !e.is_zero() {
            return Err(consistency!("trace-zero idempotent is nonzero"));
        }
        return Ok(Gauged { idempotent: e, rank, corner: None });
    }
    let corner: Vec<Matrix> = a.units().iter().map(|u| e.mul(u).mul(&e)).collect();
    if span_rank(&corner) != rank * rank {
        return Err(consistency!("eAe has dimension {} instead of {}", span_rank(&corner), rank * rank));
    }
    // eAe ≅ Mat_k needs a one-dimensional centre.
    let mut rows: Vec<Vec<CycloNumber>> = corner.iter().map(Matrix::to_vector).collect();
    let pivots = field::rref(&mut rows);
    let basis: Vec<Matrix> = rows[..pivots.len()]
        .iter()
        .map(|r| Matrix::from_entries(a.size(), r.clone()).expect("square"))
        .collect();
    let zero = CycloNumber::zero(&lv);
    let d = basis.len();
    let mut eqs: Vec<Vec<CycloNumber>> = Vec::new();
    for y in &basis {
        let comms: Vec<Matrix> = basis.iter().map(|x| x.mul(y).sub(&y.mul(x))).collect();
        for k in 0..a.dimension() {
            eqs.push((0..d).map(|i| comms[i].entries()[k].clone()).collect());
        }
    }
    let centre = field::nullspace(&eqs, d, &zero).len();
    if centre != 1 {
        return Err(consistency!("eAe has a centre of dimension {centre}"));
    }
    Ok(Gauged { idempotent: e, rank, corner: Some(MatrixAlgebra::new(rank, a.level())?) })
}

/// Exhaustive search for `λ: G → μ_k` with `λ_e = 1` making `c·dλ ≡ 1`.
pub fn regauging_search(c: &AnomalyCocycle2, k: u64, caps: &Caps) -> Result<Option<Vec<MuElement>>> {
    let g = &c.group;
    let n = g.order();
    let Some(mu) = &c.mu else { return Ok(None) };
    let total = k.checked_pow(n as u32 - 1);
    if total.map_or(true, |t| t > caps.max_solve as u64) {
        return Err(size_err!("μ_{k} re-gauging search over {n} elements exceeds the cap"));
    }
    let free: Vec<usize> = (0..n).filter(|&x| x != g.identity()).collect();
    let mut digits = vec![0u64; free.len()];
    loop {
        let mut lambda = vec![MuElement::zero(); n];
        for (&x, &d) in free.iter().zip(&digits) {
            lambda[x] = MuElement::new(d as i64, k);
        }
        let ok = (0..n).all(|x| {
            (0..n).all(|y| (mu[x * n + y] + lambda[x] + lambda[y] + -lambda[g.mul(x, y)]) == MuElement::zero())
        });
        if ok {
            return Ok(Some(lambda));
        }
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(None);
            }
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone, Debug)]
pub struct GaloisTwistReport {
    pub n: i64,
    /// Coefficient modulus of the comparison, `H²(G; μ_m)`.
    pub modulus: u64,
    pub invariant_factors: Vec<u64>,
    pub before: Vec<u64>,
    pub after: Vec<u64>,
    /// `n·before`.
    pub expected: Vec<u64>,
    pub holds: bool,
}

/// Applies `σ_n` to the action data, recomputes the anomaly and compares it
/// with `n·[α]`.
pub fn galois_twist_check(act: &AlgebraAction, n: i64, caps: &Caps) -> Result<GaloisTwistReport> {
    let level = act.algebra().level();
    if gcd(n.unsigned_abs(), level) != 1 {
        return Err(domain!("n = {n} is not coprime to the level {level}"));
    }
    let old = anomaly_cocycle(&act.without_lift())?;
    let new = anomaly_cocycle(&act.without_lift().galois(n)?)?;
    let m_old = old.mu_level().ok_or_else(|| domain!("anomaly values are not roots of unity"))?;
    let m_new = new.mu_level().ok_or_else(|| domain!("twisted anomaly values are not roots of unity"))?;
    let m = lcm(m_old, m_new);
    let h = Arc::new(cohomology_group(act.group(), 2, m, caps)?);
    let before = CohomologyClass::of(&h, old.cochain(m)?)?;
    let after = CohomologyClass::of(&h, new.cochain(m)?)?;
    let expected = before.scale(n);
    Ok(GaloisTwistReport {
        n,
        modulus: m,
        invariant_factors: h.invariant_factors().to_vec(),
        before: before.coordinates().to_vec(),
        after: after.coordinates().to_vec(),
        expected: expected.coordinates().to_vec(),
        holds: after.coordinates() == expected.coordinates(),
    })
}
