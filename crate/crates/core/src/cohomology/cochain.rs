//! Normalized bar cochains with trivial Z/m coefficients.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{domain, Error, Result};
use crate::group::FiniteGroup;

/// A normalized k-cochain `G^k → Z/m`, stored densely in lexicographic
/// argument order (the last argument varies fastest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    group: FiniteGroup,
    degree: usize,
    modulus: u64,
    table: Vec<u64>,
}

fn table_len(n: usize, k: usize) -> Result<usize> {
    n.checked_pow(k as u32)
        .ok_or_else(|| Error::Size(alloc::format!("|G|^{k} overflows")))
}

impl Cochain {
    /// Validate length, reduce values mod `modulus` and check normalization.
    pub fn new(group: &FiniteGroup, degree: usize, modulus: u64, table: Vec<u64>) -> Result<Cochain> {
        if modulus == 0 {
            return Err(domain!("coefficient modulus must be positive"));
        }
        let len = table_len(group.order(), degree)?;
        if table.len() != len {
            return Err(domain!(
                "degree-{degree} table needs {len} entries, got {}",
                table.len()
            ));
        }
        let c = Cochain {
            group: group.clone(),
            degree,
            modulus,
            table: table.into_iter().map(|v| v % modulus).collect(),
        };
        if let Some(args) = c.first_unnormalized() {
            return Err(domain!("cochain is not normalized: value at {args:?} is nonzero"));
        }
        Ok(c)
    }

    pub fn zero(group: &FiniteGroup, degree: usize, modulus: u64) -> Cochain {
        let len = table_len(group.order(), degree).expect("table size fits in memory");
        Cochain {
            group: group.clone(),
            degree,
            modulus,
            table: vec![0; len],
        }
    }

    /// Tabulate `f`, forcing the value 0 wherever an argument is the identity.
    pub fn from_fn(group: &FiniteGroup, degree: usize, modulus: u64, mut f: impl FnMut(&[usize]) -> i64) -> Cochain {
        let mut c = Cochain::zero(group, degree, modulus);
        let e = group.identity();
        let mut args = vec![0usize; degree];
        for idx in 0..c.table.len() {
            c.unindex(idx, &mut args);
            if !args.contains(&e) {
                c.table[idx] = crate::arith::reduce(f(&args), modulus);
            }
        }
        c
    }

    pub(crate) fn from_raw(group: &FiniteGroup, degree: usize, modulus: u64, table: Vec<u64>) -> Cochain {
        debug_assert_eq!(table.len(), group.order().pow(degree as u32));
        Cochain {
            group: group.clone(),
            degree,
            modulus,
            table,
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn table(&self) -> &[u64] {
        &self.table
    }

    pub fn index(&self, args: &[usize]) -> usize {
        let n = self.group.order();
        args.iter().fold(0, |acc, &a| acc * n + a)
    }

    pub(crate) fn unindex(&self, mut idx: usize, args: &mut [usize]) {
        let n = self.group.order();
        for slot in args.iter_mut().rev() {
            *slot = idx % n;
            idx /= n;
        }
    }

    /// Value at the argument tuple.
    pub fn value(&self, args: &[usize]) -> u64 {
        debug_assert_eq!(args.len(), self.degree);
        self.table[self.index(args)]
    }

    fn first_unnormalized(&self) -> Option<Vec<usize>> {
        let e = self.group.identity();
        let mut args = vec![0usize; self.degree];
        for (idx, &v) in self.table.iter().enumerate() {
            if v != 0 {
                self.unindex(idx, &mut args);
                if args.contains(&e) {
                    return Some(args);
                }
            }
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.table.iter().all(|&v| v == 0)
    }

    fn compatible(&self, other: &Cochain) -> Result<()> {
        self.group.mismatch(&other.group, "cochain arithmetic")?;
        if self.degree != other.degree || self.modulus != other.modulus {
            return Err(Error::Mismatch(alloc::format!(
                "cochains of degree/modulus {}/{} and {}/{}",
                self.degree,
                self.modulus,
                other.degree,
                other.modulus
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.compatible(other)?;
        let m = self.modulus;
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(a, b)| (a + b) % m)
            .collect();
        Ok(Cochain::from_raw(&self.group, self.degree, m, table))
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.add(&other.scale(-1))
    }

    /// Multiply every value by `k`.
    pub fn scale(&self, k: i64) -> Cochain {
        let m = self.modulus;
        let f = crate::arith::reduce(k, m) as u128;
        let table = self
            .table
            .iter()
            .map(|&v| (v as u128 * f % m as u128) as u64)
            .collect();
        Cochain::from_raw(&self.group, self.degree, m, table)
    }

    /// Embed `Z/m ↪ Z/m'` (`m | m'`) by multiplication with `m'/m`.
    pub fn lift_modulus(&self, target: u64) -> Result<Cochain> {
        if target == 0 || target % self.modulus != 0 {
            return Err(domain!("cannot embed Z/{} into Z/{target}", self.modulus));
        }
        let f = target / self.modulus;
        let table = self.table.iter().map(|&v| v * f).collect();
        Ok(Cochain::from_raw(&self.group, self.degree, target, table))
    }

    /// Reduce values modulo a divisor of the modulus.
    pub fn reduce_modulus(&self, target: u64) -> Result<Cochain> {
        if target == 0 || self.modulus % target != 0 {
            return Err(domain!("Z/{target} is not a quotient of Z/{}", self.modulus));
        }
        let table = self.table.iter().map(|&v| v % target).collect();
        Ok(Cochain::from_raw(&self.group, self.degree, target, table))
    }

    pub fn is_cocycle(&self) -> bool {
        coboundary(self).is_zero()
    }

    pub(crate) fn require_cocycle(&self) -> Result<()> {
        if self.is_cocycle() {
            Ok(())
        } else {
            Err(domain!("degree-{} cochain is not a cocycle", self.degree))
        }
    }
}

/// Bar differential with trivial action:
/// `(df)(g₁..g_{k+1}) = f(g₂..) + Σᵢ (−1)ⁱ f(..gᵢg_{i+1}..) + (−1)^{k+1} f(g₁..g_k)`.
pub fn coboundary(c: &Cochain) -> Cochain {
    let g = &c.group;
    let n = g.order();
    let k = c.degree;
    let m = c.modulus;
    let len = n.pow(k as u32 + 1);
    let mut out = vec![0u64; len];
    let e = g.identity();
    let mut args = vec![0usize; k + 1];
    let mut sub = vec![0usize; k];
    let at = |sub: &[usize]| sub.iter().fold(0usize, |acc, &a| acc * n + a);
    for (idx, slot) in out.iter_mut().enumerate() {
        let mut r = idx;
        for a in args.iter_mut().rev() {
            *a = r % n;
            r /= n;
        }
        if args.contains(&e) {
            continue;
        }
        let mut acc: i128 = c.table[at(&args[1..])] as i128;
        for i in 1..=k {
            sub[..i - 1].copy_from_slice(&args[..i - 1]);
            sub[i - 1] = g.mul(args[i - 1], args[i]);
            sub[i..].copy_from_slice(&args[i + 1..]);
            let v = c.table[at(&sub)] as i128;
            acc += if i % 2 == 0 { v } else { -v };
        }
        let v = c.table[at(&args[..k])] as i128;
        acc += if (k + 1) % 2 == 0 { v } else { -v };
        *slot = acc.rem_euclid(m as i128) as u64;
    }
    Cochain::from_raw(g, k + 1, m, out)
}

/// Indexing of normalized cochains: tuples of non-identity elements.
#[derive(Clone, Debug)]
pub(crate) struct NormalBasis {
    pub n: usize,
    pub k: usize,
    pub nonid: Vec<usize>,
    pos: Vec<usize>,
}

impl NormalBasis {
    pub fn new(group: &FiniteGroup, k: usize) -> NormalBasis {
        let e = group.identity();
        let nonid: Vec<usize> = (0..group.order()).filter(|&x| x != e).collect();
        let mut pos = vec![usize::MAX; group.order()];
        for (i, &x) in nonid.iter().enumerate() {
            pos[x] = i;
        }
        NormalBasis {
            n: group.order(),
            k,
            nonid,
            pos,
        }
    }

    pub fn len(&self) -> usize {
        (self.n - 1).pow(self.k as u32)
    }

    pub fn col_of(&self, args: &[usize]) -> Option<usize> {
        let b = self.n - 1;
        let mut idx = 0;
        for &a in args {
            let p = self.pos[a];
            if p == usize::MAX {
                return None;
            }
            idx = idx * b + p;
        }
        Some(idx)
    }

    pub fn tuple_of(&self, mut col: usize, out: &mut [usize]) {
        let b = self.n - 1;
        for slot in out.iter_mut().rev() {
            *slot = self.nonid[col % b];
            col /= b;
        }
    }

    /// Normalized coordinates of a cochain, reduced mod `q`.
    pub fn to_vector(&self, c: &Cochain, q: u64) -> Vec<u64> {
        let mut args = vec![0usize; self.k];
        (0..self.len())
            .map(|col| {
                self.tuple_of(col, &mut args);
                c.value(&args) % q
            })
            .collect()
    }

    /// Table of the cochain with the given normalized coordinates.
    pub fn to_table(&self, v: &[u64]) -> Vec<u64> {
        let mut table = vec![0u64; self.n.pow(self.k as u32)];
        let mut args = vec![0usize; self.k];
        for (col, &x) in v.iter().enumerate() {
            self.tuple_of(col, &mut args);
            let idx = args.iter().fold(0usize, |acc, &a| acc * self.n + a);
            table[idx] = x;
        }
        table
    }
}

/// Sparse rows of the differential on normalized cochains of degree `k`:
/// calls `visit(row, terms)` for every normalized `(k+1)`-tuple, where each
/// term is `(column, ±1)`.
pub(crate) fn for_each_diff_row(
    group: &FiniteGroup,
    k: usize,
    mut visit: impl FnMut(usize, &[(usize, i64)]),
) {
    let src = NormalBasis::new(group, k);
    let dst = NormalBasis::new(group, k + 1);
    let mut args = vec![0usize; k + 1];
    let mut sub = vec![0usize; k];
    let mut terms: Vec<(usize, i64)> = Vec::with_capacity(k + 2);
    for row in 0..dst.len() {
        dst.tuple_of(row, &mut args);
        terms.clear();
        let mut push = |col: Option<usize>, s: i64| {
            if let Some(c) = col {
                terms.push((c, s));
            }
        };
        push(src.col_of(&args[1..]), 1);
        for i in 1..=k {
            sub[..i - 1].copy_from_slice(&args[..i - 1]);
            sub[i - 1] = group.mul(args[i - 1], args[i]);
            sub[i..].copy_from_slice(&args[i + 1..]);
            push(src.col_of(&sub), if i % 2 == 0 { 1 } else { -1 });
        }
        push(src.col_of(&args[..k]), if (k + 1) % 2 == 0 { 1 } else { -1 });
        visit(row, &terms);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_one_cochain_coboundary() {
        let z2 = FiniteGroup::cyclic(2);
        let lam = Cochain::new(&z2, 1, 4, vec![0, 1]).unwrap();
        let d = coboundary(&lam);
        assert_eq!(d.value(&[1, 1]), 2);
        assert!(coboundary(&d).is_zero());
    }

    #[test]
    fn unnormalized_rejected() {
        let z2 = FiniteGroup::cyclic(2);
        assert!(Cochain::new(&z2, 1, 4, vec![1, 1]).is_err());
        assert!(Cochain::new(&z2, 2, 4, vec![0, 0, 0]).is_err());
    }

    #[test]
    fn sparse_rows_match_dense_coboundary() {
        let g = crate::group::catalog::named("S3").unwrap();
        let c = Cochain::from_fn(&g, 2, 7, |a| (a[0] * 3 + a[1] * 5) as i64);
        let basis = NormalBasis::new(&g, 2);
        let v = basis.to_vector(&c, 7);
        let dense = coboundary(&c);
        let out = NormalBasis::new(&g, 3);
        let mut args = vec![0; 3];
        for_each_diff_row(&g, 2, |row, terms| {
            let s: i64 = terms.iter().map(|&(col, sg)| sg * v[col] as i64).sum();
            out.tuple_of(row, &mut args);
            assert_eq!(s.rem_euclid(7) as u64, dense.value(&args));
        });
    }
}
