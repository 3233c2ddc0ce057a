//! Linear algebra on the normalized bar complex over Z/p^e.
//!
//! Tall differentials are compressed by a seeded random row projection before
//! elimination. Every answer obtained this way is verified against the full
//! sparse differential, so the projection only affects speed, never results.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use super::cochain::{for_each_diff_row, NormalBasis};
use crate::caps::Caps;
use crate::error::{size_err, Result};
use crate::group::FiniteGroup;
use crate::linalg::zmod::{solve, Kernel, PrimePower, ZMat};

/// Rows kept beyond the column count when projecting.
const SLACK: usize = 40;
const ATTEMPTS: u64 = 4;

pub(crate) fn check_size(group: &FiniteGroup, k: usize, caps: &Caps) -> Result<()> {
    if k > caps.max_degree {
        return Err(size_err!("degree {k} exceeds the cap {}", caps.max_degree));
    }
    let cols = (group.order() - 1).checked_pow(k as u32).unwrap_or(usize::MAX);
    if cols > caps.max_cochains {
        return Err(size_err!(
            "{cols} normalized degree-{k} cochains on a group of order {} exceed the cap {}",
            group.order(),
            caps.max_cochains
        ));
    }
    let table = group.order().checked_pow(k as u32 + 1).unwrap_or(usize::MAX);
    if table > caps.max_table {
        return Err(size_err!("cochain tables of size {table} exceed the cap {}", caps.max_table));
    }
    Ok(())
}

/// `D_k` on normalized cochains, dense, reduced mod `q`.
pub(crate) fn differential_dense(group: &FiniteGroup, k: usize, q: u64) -> ZMat {
    let rows = NormalBasis::new(group, k + 1).len();
    let cols = NormalBasis::new(group, k).len();
    let mut m = ZMat::zeros(rows, cols);
    for_each_diff_row(group, k, |row, terms| {
        for &(col, s) in terms {
            let v = m.get(row, col) as i64 + s;
            m.set(row, col, v.rem_euclid(q as i64) as u64);
        }
    });
    m
}

/// `R·D_k` for a random `(cols + SLACK) × rows` matrix `R`, and the image `R·b` of each `b`.
fn projected(group: &FiniteGroup, k: usize, q: u64, seed: u64, rhs: &[Vec<u64>]) -> (ZMat, Vec<Vec<u64>>) {
    let cols = NormalBasis::new(group, k).len();
    let height = cols + SLACK;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = ZMat::zeros(height, cols);
    let mut rb = vec![vec![0u64; height]; rhs.len()];
    let mut r = vec![0u64; height];
    for_each_diff_row(group, k, |row, terms| {
        for x in r.iter_mut() {
            *x = rng.next_u64() % q;
        }
        for &(col, s) in terms {
            for (h, &rv) in r.iter().enumerate() {
                if rv == 0 {
                    continue;
                }
                let cur = out.data[h * cols + col];
                out.data[h * cols + col] = if s > 0 { (cur + rv) % q } else { (cur + q - rv) % q };
            }
        }
        for (b, acc) in rhs.iter().zip(rb.iter_mut()) {
            let bv = b[row] % q;
            if bv != 0 {
                for (a, &rv) in acc.iter_mut().zip(&r) {
                    *a = (*a + rv * bv) % q;
                }
            }
        }
    });
    (out, rb)
}

fn seed_for(group: &FiniteGroup, k: usize, q: u64, attempt: u64) -> u64 {
    (group.order() as u64)
        .wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((k as u64) << 40)
        .wrapping_add(q << 8)
        .wrapping_add(attempt)
}

fn is_tall(group: &FiniteGroup, k: usize) -> bool {
    let rows = NormalBasis::new(group, k + 1).len();
    let cols = NormalBasis::new(group, k).len();
    rows > cols + 2 * SLACK
}

/// `D_k·x mod q`.
pub(crate) fn apply_differential(group: &FiniteGroup, k: usize, x: &[u64], q: u64) -> Vec<u64> {
    let mut out = vec![0u64; NormalBasis::new(group, k + 1).len()];
    for_each_diff_row(group, k, |row, terms| {
        let s: i128 = terms.iter().map(|&(c, sg)| sg as i128 * x[c] as i128).sum();
        out[row] = s.rem_euclid(q as i128) as u64;
    });
    out
}

/// `D_k·x` over the integers.
pub(crate) fn apply_differential_int(group: &FiniteGroup, k: usize, x: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; NormalBasis::new(group, k + 1).len()];
    for_each_diff_row(group, k, |row, terms| {
        out[row] = terms.iter().map(|&(c, sg)| sg * x[c]).sum();
    });
    out
}

fn in_kernel(group: &FiniteGroup, k: usize, x: &[u64], q: u64) -> bool {
    let mut ok = true;
    for_each_diff_row(group, k, |_, terms| {
        if ok {
            let s: i128 = terms.iter().map(|&(c, sg)| sg as i128 * x[c] as i128).sum();
            ok = s.rem_euclid(q as i128) == 0;
        }
    });
    ok
}

/// Normalized k-cocycles mod `q`.
pub(crate) fn cocycle_kernel(group: &FiniteGroup, k: usize, pp: PrimePower) -> Kernel {
    if !is_tall(group, k) {
        return Kernel::of(differential_dense(group, k, pp.q), pp);
    }
    for attempt in 0..ATTEMPTS {
        let (m, _) = projected(group, k, pp.q, seed_for(group, k, pp.q, attempt), &[]);
        let ker = Kernel::of(m, pp);
        if ker.gens.iter().all(|g| in_kernel(group, k, g, pp.q)) {
            return ker;
        }
    }
    Kernel::of(differential_dense(group, k, pp.q), pp)
}

/// Solve `D_k·x ≡ b (mod q)` for each right-hand side.
pub(crate) fn solve_differential(group: &FiniteGroup, k: usize, pp: PrimePower, rhs: &[Vec<u64>]) -> Vec<Option<Vec<u64>>> {
    if rhs.is_empty() {
        return Vec::new();
    }
    if !is_tall(group, k) {
        return solve(differential_dense(group, k, pp.q), rhs, pp);
    }
    let mut answers: Vec<Option<Option<Vec<u64>>>> = vec![None; rhs.len()];
    for attempt in 0..ATTEMPTS {
        let pending: Vec<usize> = (0..rhs.len()).filter(|&i| answers[i].is_none()).collect();
        if pending.is_empty() {
            break;
        }
        let sub: Vec<Vec<u64>> = pending.iter().map(|&i| rhs[i].clone()).collect();
        let (m, rb) = projected(group, k, pp.q, seed_for(group, k, pp.q, attempt), &sub);
        let sols = solve(m, &rb, pp);
        for (&i, sol) in pending.iter().zip(sols) {
            match sol {
                // Unsolvable after projection implies unsolvable.
                None => answers[i] = Some(None),
                Some(x) => {
                    if apply_differential(group, k, &x, pp.q)
                        .iter()
                        .zip(&rhs[i])
                        .all(|(a, b)| *a == b % pp.q)
                    {
                        answers[i] = Some(Some(x));
                    }
                }
            }
        }
    }
    let pending: Vec<usize> = (0..rhs.len()).filter(|&i| answers[i].is_none()).collect();
    if !pending.is_empty() {
        let sub: Vec<Vec<u64>> = pending.iter().map(|&i| rhs[i].clone()).collect();
        let sols = solve(differential_dense(group, k, pp.q), &sub, pp);
        for (&i, sol) in pending.iter().zip(sols) {
            answers[i] = Some(sol);
        }
    }
    answers.into_iter().map(|a| a.expect("every system answered")).collect()
}
