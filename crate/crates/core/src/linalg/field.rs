//! Gaussian elimination over a cyclotomic field.

use alloc::vec::Vec;

use crate::cyclotomic::CycloNumber;

/// Row-reduce `m` in place to reduced echelon form; returns pivot columns.
pub fn rref(m: &mut [Vec<CycloNumber>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, pr);
        let inv = m[r][c].inverse().expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<CycloNumber>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// A basis of `{x : m·x = 0}`.
pub fn nullspace(m: &[Vec<CycloNumber>], cols: usize, zero: &CycloNumber) -> Vec<Vec<CycloNumber>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let one = CycloNumber::one(zero.level_data());
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = alloc::vec![zero.clone(); cols];
        v[free] = one.clone();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&work[r][free];
        }
        basis.push(v);
    }
    basis
}

/// One solution of `m·x = b`, or `None` when inconsistent.
pub fn solve(m: &[Vec<CycloNumber>], b: &[CycloNumber], zero: &CycloNumber) -> Option<Vec<CycloNumber>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut work: Vec<Vec<CycloNumber>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut work);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = alloc::vec![zero.clone(); cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = work[r][cols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::CycloLevel;

    #[test]
    fn solve_small_system() {
        let lvl = CycloLevel::get(4);
        let i = CycloNumber::zeta_power(&lvl, 1);
        let one = CycloNumber::one(&lvl);
        let zero = CycloNumber::zero(&lvl);
        // [[1, i], [i, 1]] x = [1, 0]
        let m = alloc::vec![alloc::vec![one.clone(), i.clone()], alloc::vec![i.clone(), one.clone()]];
        let x = solve(&m, &[one.clone(), zero.clone()], &zero).unwrap();
        let r0 = &(&m[0][0] * &x[0]) + &(&m[0][1] * &x[1]);
        let r1 = &(&m[1][0] * &x[0]) + &(&m[1][1] * &x[1]);
        assert!(r0.is_one() && r1.is_zero());
        assert_eq!(rank(&m), 2);
        let sing = alloc::vec![alloc::vec![one.clone(), i.clone()], alloc::vec![i.clone(), -&one]];
        assert_eq!(rank(&sing), 1);
        assert_eq!(nullspace(&sing, 2, &zero).len(), 1);
    }
}
