//! Smith normal form over Z for the small relation matrices that present finite
//! abelian groups.

use alloc::vec;
use alloc::vec::Vec;

/// Result of `U * A * V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | ... ` and all `d_i >= 0`.
#[derive(Clone, Debug)]
pub struct Smith {
    pub diagonal: Vec<i128>,
    pub u: Vec<Vec<i128>>,
    pub u_inv: Vec<Vec<i128>>,
    pub v: Vec<Vec<i128>>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

struct Work {
    a: Vec<Vec<i128>>,
    u: Vec<Vec<i128>>,
    u_inv: Vec<Vec<i128>>,
    v: Vec<Vec<i128>>,
}

impl Work {
    // row_i += f * row_j
    fn add_row(&mut self, i: usize, j: usize, f: i128) {
        if f == 0 {
            return;
        }
        for k in 0..self.a[0].len() {
            let x = self.a[j][k];
            self.a[i][k] += f * x;
        }
        for k in 0..self.u.len() {
            let x = self.u[j][k];
            self.u[i][k] += f * x;
        }
        // U^{-1} picks up the inverse column operation: col_j -= f * col_i.
        for row in self.u_inv.iter_mut() {
            row[j] -= f * row[i];
        }
    }

    fn add_col(&mut self, i: usize, j: usize, f: i128) {
        if f == 0 {
            return;
        }
        for row in self.a.iter_mut() {
            row[i] += f * row[j];
        }
        for row in self.v.iter_mut() {
            row[i] += f * row[j];
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
            for row in self.u_inv.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in self.a.iter_mut() {
                row.swap(i, j);
            }
            for row in self.v.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -*x;
        }
        for x in self.u[i].iter_mut() {
            *x = -*x;
        }
        for row in self.u_inv.iter_mut() {
            row[i] = -row[i];
        }
    }
}

/// Smith normal form of an `rows × cols` integer matrix (given row-major).
pub fn smith(matrix: &[Vec<i128>], rows: usize, cols: usize) -> Smith {
    let mut w = Work {
        a: if rows == 0 {
            Vec::new()
        } else {
            matrix.to_vec()
        },
        u: identity(rows),
        u_inv: identity(rows),
        v: identity(cols),
    };
    if rows == 0 || cols == 0 {
        return Smith {
            diagonal: Vec::new(),
            u: w.u,
            u_inv: w.u_inv,
            v: w.v,
        };
    }
    let n = rows.min(cols);
    let mut diagonal = vec![0i128; n];
    for t in 0..n {
        loop {
            // Smallest nonzero entry of the trailing block goes to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    let x = w.a[i][j];
                    if x != 0 && best.map_or(true, |(bi, bj)| x.abs() < w.a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                break;
            };
            w.swap_rows(t, bi);
            w.swap_cols(t, bj);
            let pivot = w.a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let q = w.a[i][t].div_euclid(pivot);
                w.add_row(i, t, -q);
                if w.a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = w.a[t][j].div_euclid(pivot);
                w.add_col(j, t, -q);
                if w.a[t][j] != 0 {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let mut bad_row = None;
            'outer: for i in t + 1..rows {
                for j in t + 1..cols {
                    if w.a[i][j] % pivot != 0 {
                        bad_row = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad_row {
                Some(i) => w.add_row(t, i, 1),
                None => break,
            }
        }
        if w.a[t][t] < 0 {
            w.negate_row(t);
        }
        diagonal[t] = w.a[t][t];
    }
    Smith {
        diagonal,
        u: w.u,
        u_inv: w.u_inv,
        v: w.v,
    }
}
