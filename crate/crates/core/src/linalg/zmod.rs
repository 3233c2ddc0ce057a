//! Diagonalization over Z/p^e.
//!
//! Z/p^e is a local principal ideal ring: an entry of minimal p-adic valuation
//! divides every other entry, so full pivoting on valuation yields a diagonal
//! form `P·A·Q = D` with `D = diag(p^v_0, p^v_1, ...)`, `v_0 <= v_1 <= ...`,
//! using only elementary operations.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{factorize, inv_mod, valuation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
    pub q: u64,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Self {
        PrimePower {
            p,
            e,
            q: p.pow(e),
        }
    }

    /// Primary decomposition of `Z/m`.
    pub fn of_modulus(m: u64) -> Vec<PrimePower> {
        factorize(m)
            .into_iter()
            .map(|(p, e)| PrimePower::new(p, e))
            .collect()
    }

    #[inline]
    pub fn valuation(&self, x: u64) -> u32 {
        valuation(x, self.p, self.e)
    }

    /// The unit part `u` of `x = p^v·u`, inverted modulo q.
    fn unit_inverse(&self, x: u64, v: u32) -> u64 {
        let u = x / self.p.pow(v);
        inv_mod(u % self.q, self.q).expect("unit part is invertible")
    }
}

/// Dense row-major matrix with entries in `0..q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl ZMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ZMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ZMat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<u64>], cols: usize) -> Self {
        let mut m = ZMat::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            m.data[i * cols..(i + 1) * cols].copy_from_slice(r);
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.cols {
                self.data.swap(i * self.cols + k, j * self.cols + k);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + i, r * self.cols + j);
            }
        }
    }

    /// row_dst -= f * row_src (mod q), restricted to columns `from..`.
    fn sub_row(&mut self, dst: usize, src: usize, f: u64, q: u64, from: usize) {
        if f == 0 || dst == src {
            return;
        }
        let cols = self.cols;
        let (a, b) = if dst < src {
            let (lo, hi) = self.data.split_at_mut(src * cols);
            (&mut lo[dst * cols..(dst + 1) * cols], &hi[..cols])
        } else {
            let (lo, hi) = self.data.split_at_mut(dst * cols);
            (&mut hi[..cols], &lo[src * cols..(src + 1) * cols])
        };
        for k in from..cols {
            let s = b[k];
            if s != 0 {
                let t = f * s % q;
                let x = a[k] + q - t;
                a[k] = if x >= q { x - q } else { x };
            }
        }
    }

    fn scale_row(&mut self, i: usize, f: u64, q: u64) {
        for x in &mut self.data[i * self.cols..(i + 1) * self.cols] {
            *x = *x * f % q;
        }
    }

    /// Matrix-vector product modulo q.
    pub fn apply(&self, x: &[u64], q: u64) -> Vec<u64> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b % q) % q)
            })
            .collect()
    }
}

/// Which transforms to record during [`diagonalize`].
#[derive(Clone, Debug, Default)]
pub struct Track {
    pub rows: bool,
    pub cols: bool,
    /// Extra right-hand-side columns that receive every row operation.
    pub rhs: Option<ZMat>,
}

/// `P·A·Q = diag(p^v_t)` for `t < rank`, zero elsewhere.
#[derive(Clone, Debug)]
pub struct Diagonal {
    pub pp: PrimePower,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    /// Valuations of the pivots, nondecreasing.
    pub valuations: Vec<u32>,
    /// `P` (rows × rows).
    pub p: Option<ZMat>,
    /// `P^{-1}` stored transposed, so row `t` is column `t` of `P^{-1}`.
    pub p_inv_t: Option<ZMat>,
    /// `Q` stored transposed, so row `t` is column `t` of `Q`.
    pub q_t: Option<ZMat>,
    /// `Q^{-1}` (cols × cols).
    pub q_inv: Option<ZMat>,
    /// `P·B` for the tracked right-hand sides.
    pub rhs: Option<ZMat>,
}

pub fn diagonalize(mut a: ZMat, pp: PrimePower, track: Track) -> Diagonal {
    let q = pp.q;
    let (rows, cols) = (a.rows, a.cols);
    let mut p = track.rows.then(|| ZMat::identity(rows));
    let mut p_inv_t = track.rows.then(|| ZMat::identity(rows));
    let mut q_t = track.cols.then(|| ZMat::identity(cols));
    let mut q_inv = track.cols.then(|| ZMat::identity(cols));
    let mut rhs = track.rhs;
    let mut valuations = Vec::new();
    let limit = rows.min(cols);
    for t in 0..limit {
        // Pivot: first unit found, otherwise the entry of least valuation.
        let mut best: Option<(usize, usize, u32)> = None;
        'search: for i in t..rows {
            let row = a.row(i);
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x == 0 {
                    continue;
                }
                let v = pp.valuation(x);
                if best.map_or(true, |(_, _, bv)| v < bv) {
                    best = Some((i, j, v));
                    if v == 0 {
                        break 'search;
                    }
                }
            }
        }
        let Some((pi, pj, v)) = best else {
            break;
        };
        a.swap_rows(t, pi);
        if let Some(m) = p.as_mut() {
            m.swap_rows(t, pi);
        }
        if let Some(m) = p_inv_t.as_mut() {
            m.swap_rows(t, pi);
        }
        if let Some(m) = rhs.as_mut() {
            m.swap_rows(t, pi);
        }
        a.swap_cols(t, pj);
        if let Some(m) = q_t.as_mut() {
            m.swap_rows(t, pj);
        }
        if let Some(m) = q_inv.as_mut() {
            m.swap_rows(t, pj);
        }
        // Normalize the pivot to p^v.
        let x = a.get(t, t);
        let uinv = pp.unit_inverse(x, v);
        if uinv != 1 {
            a.scale_row(t, uinv, q);
            if let Some(m) = p.as_mut() {
                m.scale_row(t, uinv, q);
            }
            if let Some(m) = p_inv_t.as_mut() {
                let u = inv_mod(uinv, q).unwrap();
                m.scale_row(t, u, q);
            }
            if let Some(m) = rhs.as_mut() {
                m.scale_row(t, uinv, q);
            }
        }
        let pv = pp.p.pow(v);
        for i in t + 1..rows {
            let x = a.get(i, t);
            if x == 0 {
                continue;
            }
            let f = x / pv;
            a.sub_row(i, t, f, q, t);
            if let Some(m) = p.as_mut() {
                m.sub_row(i, t, f, q, 0);
            }
            if let Some(m) = p_inv_t.as_mut() {
                // P^{-1} gains col_t += f * col_i, i.e. row_t of the transpose.
                m.sub_row(t, i, (q - f % q) % q, q, 0);
            }
            if let Some(m) = rhs.as_mut() {
                m.sub_row(i, t, f, q, 0);
            }
        }
        for j in t + 1..cols {
            let x = a.get(t, j);
            if x == 0 {
                continue;
            }
            let f = x / pv;
            // Column t is zero below the pivot, so only row t of A changes.
            a.set(t, j, 0);
            if let Some(m) = q_t.as_mut() {
                m.sub_row(j, t, f, q, 0);
            }
            if let Some(m) = q_inv.as_mut() {
                m.sub_row(t, j, (q - f % q) % q, q, 0);
            }
        }
        valuations.push(v);
    }
    Diagonal {
        pp,
        rows,
        cols,
        rank: valuations.len(),
        valuations,
        p,
        p_inv_t,
        q_t,
        q_inv,
        rhs,
    }
}

/// Generators of `{x : A·x ≡ 0 mod q}` together with a coordinate map.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub pp: PrimePower,
    /// Generator vectors; the kernel is their internal direct sum.
    pub gens: Vec<Vec<u64>>,
    /// Additive order of each generator (a power of p).
    pub orders: Vec<u64>,
    /// For generator `i`, the row of `Q^{-1}` that reads off its coefficient.
    coord_rows: Vec<Vec<u64>>,
    /// `p^{e - v}` divisor applied to that row.
    scales: Vec<u64>,
}

impl Kernel {
    /// Kernel of `a` modulo `pp.q`.
    pub fn of(a: ZMat, pp: PrimePower) -> Kernel {
        let cols = a.cols;
        let d = diagonalize(
            a,
            pp,
            Track {
                cols: true,
                ..Track::default()
            },
        );
        let q_t = d.q_t.expect("tracked");
        let q_inv = d.q_inv.expect("tracked");
        let mut gens = Vec::new();
        let mut orders = Vec::new();
        let mut coord_rows = Vec::new();
        let mut scales = Vec::new();
        for t in 0..cols {
            let (order, scale) = if t < d.rank {
                let v = d.valuations[t];
                if v == 0 {
                    continue;
                }
                (pp.p.pow(v), pp.p.pow(pp.e - v))
            } else {
                (pp.q, 1)
            };
            gens.push(q_t.row(t).iter().map(|&x| x * scale % pp.q).collect());
            orders.push(order);
            coord_rows.push(q_inv.row(t).to_vec());
            scales.push(scale);
        }
        Kernel {
            pp,
            gens,
            orders,
            coord_rows,
            scales,
        }
    }

    /// Coefficients `c_i` (mod `orders[i]`) with `x = Σ c_i gens[i]`, assuming `x` lies in the kernel.
    pub fn coordinates(&self, x: &[u64]) -> Option<Vec<u64>> {
        let q = self.pp.q;
        self.coord_rows
            .iter()
            .zip(&self.scales)
            .zip(&self.orders)
            .map(|((row, &scale), &order)| {
                let y = row
                    .iter()
                    .zip(x)
                    .fold(0u64, |acc, (&a, &b)| (acc + a * b % q) % q);
                (y % scale == 0).then_some((y / scale) % order)
            })
            .collect()
    }
}

/// Solve `A·x ≡ b (mod q)` for each right-hand side; `None` when unsolvable.
pub fn solve(a: ZMat, rhs: &[Vec<u64>], pp: PrimePower) -> Vec<Option<Vec<u64>>> {
    let (rows, cols) = (a.rows, a.cols);
    let mut b = ZMat::zeros(rows, rhs.len());
    for (k, v) in rhs.iter().enumerate() {
        for i in 0..rows {
            b.set(i, k, v[i] % pp.q);
        }
    }
    let d = diagonalize(
        a,
        pp,
        Track {
            cols: true,
            rhs: Some(b),
            ..Track::default()
        },
    );
    let pb = d.rhs.expect("tracked");
    let q_t = d.q_t.expect("tracked");
    (0..rhs.len())
        .map(|k| {
            if (d.rank..rows).any(|t| pb.get(t, k) != 0) {
                return None;
            }
            let mut x = vec![0u64; cols];
            for t in 0..d.rank {
                let pv = pp.p.pow(d.valuations[t]);
                let r = pb.get(t, k);
                if r % pv != 0 {
                    return None;
                }
                let y = r / pv;
                if y == 0 {
                    continue;
                }
                for (xi, &qi) in x.iter_mut().zip(q_t.row(t)) {
                    *xi = (*xi + y * qi) % pp.q;
                }
            }
            Some(x)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[u64]]) -> ZMat {
        let cols = rows[0].len();
        ZMat::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), cols)
    }

    #[test]
    fn diagonal_form_reconstructs() {
        let pp = PrimePower::new(2, 3);
        let a = mat(&[&[2, 4, 6], &[4, 1, 0], &[0, 2, 4]]);
        let d = diagonalize(
            a.clone(),
            pp,
            Track {
                rows: true,
                cols: true,
                rhs: None,
            },
        );
        let p = d.p.unwrap();
        let q_t = d.q_t.unwrap();
        // P·A·Q entry (i, j) = row_i(P)·A·col_j(Q).
        for i in 0..3 {
            for j in 0..3 {
                let aq = a.apply(q_t.row(j), 8);
                let v = p.row(i).iter().zip(&aq).map(|(x, y)| x * y).sum::<u64>() % 8;
                let expected = if i == j && i < d.rank {
                    2u64.pow(d.valuations[i])
                } else {
                    0
                };
                assert_eq!(v, expected, "entry {i},{j}");
            }
        }
        // P · P^{-1} = I and Q · Q^{-1} = I.
        let p_inv_t = d.p_inv_t.unwrap();
        let q_inv = d.q_inv.unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let pp_ij = p.row(i).iter().zip(p_inv_t.row(j)).map(|(x, y)| x * y).sum::<u64>() % 8;
                assert_eq!(pp_ij, u64::from(i == j));
                let qq_ij = q_inv.row(i).iter().zip(q_t.row(j)).map(|(x, y)| x * y).sum::<u64>() % 8;
                assert_eq!(qq_ij, u64::from(i == j));
            }
        }
    }

    #[test]
    fn kernel_of_multiplication_by_two_mod_four() {
        let pp = PrimePower::new(2, 2);
        let k = Kernel::of(mat(&[&[2]]), pp);
        assert_eq!(k.orders, vec![2]);
        assert_eq!(k.gens, vec![vec![2]]);
        assert_eq!(k.coordinates(&[2]), Some(vec![1]));
        assert_eq!(k.coordinates(&[0]), Some(vec![0]));
    }

    #[test]
    fn kernel_counts_match_brute_force() {
        let pp = PrimePower::new(3, 2);
        let a = mat(&[&[3, 6, 0], &[0, 3, 3]]);
        let k = Kernel::of(a.clone(), pp);
        let size: u64 = k.orders.iter().product();
        let mut brute = 0;
        for x0 in 0..9 {
            for x1 in 0..9 {
                for x2 in 0..9 {
                    if a.apply(&[x0, x1, x2], 9).iter().all(|&v| v == 0) {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(size, brute);
        for g in &k.gens {
            assert!(a.apply(g, 9).iter().all(|&v| v == 0));
        }
    }

    #[test]
    fn solve_detects_unsolvable() {
        let pp = PrimePower::new(2, 2);
        let a = mat(&[&[2, 0], &[0, 0]]);
        let sols = solve(a.clone(), &[vec![2, 0], vec![1, 0], vec![0, 1]], pp);
        let x = sols[0].clone().unwrap();
        assert_eq!(a.apply(&x, 4), vec![2, 0]);
        assert!(sols[1].is_none());
        assert!(sols[2].is_none());
    }
}
