//! Dense linear algebra over a prime field F_p, sized for class-algebra
//! eigenproblems (dimension = number of conjugacy classes).

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::inv_mod;

pub type Vector = Vec<u64>;
pub type Matrix = Vec<Vec<u64>>;

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut Matrix, p: u64) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let inv = inv_mod(m[r][c], p).expect("nonzero in a field");
        for x in m[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = sub_mod(*x, f * y % p, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space `{x : m·x = 0}`.
pub fn nullspace(m: &Matrix, cols: usize, p: u64) -> Vec<Vector> {
    let mut a = m.clone();
    let pivots = rref(&mut a, p);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][f]) % p;
            }
            v
        })
        .collect()
}

pub fn mat_vec(m: &Matrix, v: &[u64], p: u64) -> Vector {
    m.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (&a, &b)| (acc + a * b) % p))
        .collect()
}

/// Express `v` in the basis `basis` (vectors assumed independent); `None` if `v` is outside the span.
pub fn coordinates_in(basis: &[Vector], v: &[u64], p: u64) -> Option<Vector> {
    let d = basis.len();
    let n = v.len();
    // Augmented system with the basis vectors as columns.
    let mut a: Matrix = (0..n)
        .map(|i| {
            let mut row: Vec<u64> = basis.iter().map(|b| b[i]).collect();
            row.push(v[i]);
            row
        })
        .collect();
    let pivots = rref(&mut a, p);
    if pivots.contains(&d) {
        return None;
    }
    let mut x = vec![0u64; d];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = a[r][d];
    }
    Some(x)
}

/// Characteristic polynomial (coefficients low→high, monic) via Hessenberg reduction.
pub fn charpoly(m: &Matrix, p: u64) -> Vector {
    let n = m.len();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(i) = (j + 1..n).find(|&i| h[i][j] != 0) else {
            continue;
        };
        if i != j + 1 {
            h.swap(i, j + 1);
            for row in h.iter_mut() {
                row.swap(i, j + 1);
            }
        }
        let inv = inv_mod(h[j + 1][j], p).unwrap();
        for k in j + 2..n {
            if h[k][j] == 0 {
                continue;
            }
            let f = h[k][j] * inv % p;
            for c in 0..n {
                let y = h[j + 1][c];
                h[k][c] = sub_mod(h[k][c], f * y % p, p);
            }
            for row in h.iter_mut() {
                let y = row[k];
                row[j + 1] = (row[j + 1] + f * y) % p;
            }
        }
    }
    // polys[m] = characteristic polynomial of the leading m×m block.
    let mut polys: Vec<Vector> = vec![vec![1]];
    for mm in 0..n {
        // (x - h[mm][mm]) * polys[mm]
        let prev = &polys[mm];
        let mut next = vec![0u64; mm + 2];
        for (k, &c) in prev.iter().enumerate() {
            next[k + 1] = (next[k + 1] + c) % p;
            next[k] = sub_mod(next[k], c * h[mm][mm] % p, p);
        }
        let mut t = 1u64;
        for i in (0..mm).rev() {
            t = t * h[i + 1][i] % p;
            let coef = h[i][mm] * t % p;
            for (k, &c) in polys[i].iter().enumerate() {
                next[k] = sub_mod(next[k], coef * c % p, p);
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Distinct roots in F_p by exhaustive evaluation.
pub fn roots(poly: &[u64], p: u64) -> Vec<u64> {
    (0..p)
        .filter(|&x| poly.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p) == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_companion() {
        // x^2 - 3x + 2 over F_7 has roots 1, 2.
        let m = vec![vec![0, 5], vec![1, 3]];
        let cp = charpoly(&m, 7);
        assert_eq!(cp, vec![2, 4, 1]);
        assert_eq!(roots(&cp, 7), vec![1, 2]);
    }

    #[test]
    fn charpoly_three_by_three() {
        let p = 101;
        let m = vec![vec![2, 1, 0], vec![0, 3, 1], vec![1, 0, 5]];
        let cp = charpoly(&m, p);
        // Evaluate det(xI - M) directly at several points.
        for x in [0u64, 1, 7, 50] {
            let a = |i: usize, j: usize| {
                let d = if i == j { x } else { 0 };
                (d + p - m[i][j]) % p
            };
            let det = (a(0, 0) * ((a(1, 1) * a(2, 2) + p * p - a(1, 2) * a(2, 1)) % p) % p
                + p * p
                - a(0, 1) * ((a(1, 0) * a(2, 2) + p * p - a(1, 2) * a(2, 0)) % p) % p
                + a(0, 2) * ((a(1, 0) * a(2, 1) + p * p - a(1, 1) * a(2, 0)) % p) % p)
                % p;
            let val = cp.iter().rev().fold(0u64, |acc, &c| (acc * x + c) % p);
            assert_eq!(val, det);
        }
    }

    #[test]
    fn nullspace_and_coordinates() {
        let p = 11;
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = nullspace(&m, 3, p);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(mat_vec(&m, v, p).iter().all(|&x| x == 0));
        }
        let basis = vec![vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(coordinates_in(&basis, &[3, 4, 7], p), Some(vec![3, 4]));
        assert_eq!(coordinates_in(&basis, &[3, 4, 8], p), None);
    }
}
