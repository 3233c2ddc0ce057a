//! Invariant-factor decomposition of finite abelian groups.

use alloc::vec;
use alloc::vec::Vec;

use super::FiniteGroup;
use crate::error::{domain, Result};
use crate::linalg::snf::smith;

/// An explicit isomorphism `A ≅ Z/d₁ × … × Z/d_r` with `d₁ | d₂ | …` and all `dᵢ > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianStructure {
    pub invariant_factors: Vec<u64>,
    /// `basis[i]` has coordinates equal to the i-th unit vector.
    pub basis: Vec<usize>,
    /// Coordinates of each element.
    pub coordinates: Vec<Vec<u64>>,
    pub exponent: u64,
    element_of: Vec<usize>,
}

impl AbelianStructure {
    /// Element with the given coordinates (reduced modulo the factors).
    pub fn element(&self, coords: &[u64]) -> usize {
        let mut idx = 0usize;
        for (c, &d) in coords.iter().zip(&self.invariant_factors) {
            idx = idx * d as usize + (c % d) as usize;
        }
        self.element_of[idx]
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

pub fn abelian_structure(a: &FiniteGroup) -> Result<AbelianStructure> {
    if !a.is_abelian() {
        return Err(domain!("group is not abelian"));
    }
    let n = a.order();
    // Greedy chain of generators with mixed-radix coordinates.
    let mut chain: Vec<usize> = Vec::new();
    let mut radix: Vec<u64> = Vec::new();
    let mut chain_coord: Vec<Option<Vec<u64>>> = vec![None; n];
    chain_coord[a.identity()] = Some(Vec::new());
    let mut span: Vec<usize> = vec![a.identity()];
    let mut relations: Vec<(u64, Vec<u64>)> = Vec::new();
    while span.len() < n {
        let s = (0..n).find(|&x| chain_coord[x].is_none()).expect("span is proper");
        // smallest k with k·s in the current span
        let mut k = 1u64;
        let mut x = s;
        while chain_coord[x].is_none() {
            x = a.mul(x, s);
            k += 1;
        }
        let rel = chain_coord[x].clone().expect("landed in span");
        relations.push((k, rel));
        let old = span.clone();
        let mut step = a.identity();
        for j in 0..k {
            for &y in &old {
                let z = a.mul(y, step);
                if j > 0 {
                    let mut c = chain_coord[y].clone().expect("old element");
                    c.resize(chain.len(), 0);
                    c.push(j);
                    chain_coord[z] = Some(c);
                    span.push(z);
                }
            }
            step = a.mul(step, s);
        }
        chain.push(s);
        radix.push(k);
    }
    let r = chain.len();
    let full = |c: &Vec<u64>| -> Vec<u64> {
        let mut v = c.clone();
        v.resize(r, 0);
        v
    };
    // Row i: k_i·e_i − (coordinates of k_i·s_i).
    let mut rel = vec![vec![0i128; r]; r];
    for (i, (k, c)) in relations.iter().enumerate() {
        for (j, &cj) in full(c).iter().enumerate() {
            rel[i][j] -= cj as i128;
        }
        rel[i][i] += *k as i128;
    }
    let snf = smith(&rel, r, r);
    let keep: Vec<usize> = (0..r).filter(|&i| snf.diagonal[i] != 1).collect();
    let invariant_factors: Vec<u64> = keep.iter().map(|&i| snf.diagonal[i] as u64).collect();
    let coordinates: Vec<Vec<u64>> = (0..n)
        .map(|x| {
            let c = full(chain_coord[x].as_ref().expect("all elements reached"));
            keep.iter()
                .map(|&i| {
                    let d = snf.diagonal[i];
                    let s: i128 = (0..r).map(|j| c[j] as i128 * snf.v[j][i]).sum();
                    s.rem_euclid(d) as u64
                })
                .collect()
        })
        .collect();
    let mut element_of = vec![usize::MAX; n];
    for (x, c) in coordinates.iter().enumerate() {
        let mut idx = 0usize;
        for (ci, &d) in c.iter().zip(&invariant_factors) {
            idx = idx * d as usize + *ci as usize;
        }
        element_of[idx] = x;
    }
    let basis = (0..invariant_factors.len())
        .map(|i| {
            let mut e = vec![0u64; invariant_factors.len()];
            e[i] = 1;
            let mut idx = 0usize;
            for (ci, &d) in e.iter().zip(&invariant_factors) {
                idx = idx * d as usize + *ci as usize;
            }
            element_of[idx]
        })
        .collect();
    let exponent = invariant_factors.last().copied().unwrap_or(1);
    Ok(AbelianStructure {
        invariant_factors,
        basis,
        coordinates,
        exponent,
        element_of,
    })
}
