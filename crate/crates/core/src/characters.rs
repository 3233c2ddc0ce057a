//! Ordinary character tables by the Dixon–Schneider method.
//!
//! Class-multiplication matrices are simultaneously diagonalized over a prime
//! field `F_p` with `p ≡ 1 (mod exponent)`; the resulting values are lifted to
//! exact sums of roots of unity by counting eigenvalue multiplicities.

use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{inv_mod, pow_mod, prime_one_mod, primitive_root};
use crate::error::{consistency, Result};
use crate::group::{conjugacy_classes, ConjugacyData, FiniteGroup};
use crate::linalg::fp;

/// A character value `Σ_k counts[k]·ζ_e^k` at the table's level `e`.
pub type PowerSum = Vec<i64>;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub classes: ConjugacyData,
    /// Level of the power sums (the group exponent).
    pub level: u64,
    /// `values[χ][class]`.
    pub values: Vec<Vec<PowerSum>>,
    pub degrees: Vec<u64>,
}

impl CharacterTable {
    /// Value of character `chi` at element `g`.
    pub fn value(&self, chi: usize, g: usize) -> &PowerSum {
        &self.values[chi][self.classes.class_of[g]]
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = 0u64;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Character table of `g`, characters sorted by degree and then by values.
pub fn character_table(g: &FiniteGroup) -> Result<CharacterTable> {
    let h = g.order() as u64;
    let e = g.exponent() as u64;
    let classes = conjugacy_classes(g);
    let mut lower = 2 * isqrt(h) + 2;
    for _ in 0..8 {
        let p = prime_one_mod(e, lower);
        if let Some(t) = table_mod_p(g, &classes, e, p) {
            return Ok(t);
        }
        lower = p;
    }
    Err(consistency!("character table did not split over any tried prime"))
}

fn table_mod_p(g: &FiniteGroup, cd: &ConjugacyData, e: u64, p: u64) -> Option<CharacterTable> {
    let r = cd.len();
    let h = g.order() as u64;
    let id_class = cd.class_of[g.identity()];
    // c[i][j][k] = #{x ∈ K_i : x⁻¹·z_k ∈ K_j}
    let mut c = vec![vec![vec![0u64; r]; r]; r];
    for (k, &z) in cd.representatives.iter().enumerate() {
        for x in 0..g.order() {
            let i = cd.class_of[x];
            let j = cd.class_of[g.mul(g.inv(x), z)];
            c[i][j][k] += 1;
        }
    }
    let mut spaces: Vec<Vec<fp::Vector>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for i in 0..r {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        if i == id_class {
            continue;
        }
        let m: fp::Matrix = (0..r).map(|j| (0..r).map(|k| c[i][j][k] % p).collect()).collect();
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            let images: Vec<fp::Vector> = basis.iter().map(|b| fp::mat_vec(&m, b, p)).collect();
            let mut a = vec![vec![0u64; d]; d];
            for (s, img) in images.iter().enumerate() {
                let coords = fp::coordinates_in(&basis, img, p)?;
                for t in 0..d {
                    a[t][s] = coords[t];
                }
            }
            let cp = fp::charpoly(&a, p);
            let mut total = 0;
            for lam in fp::roots(&cp, p) {
                let mut shifted = a.clone();
                for (t, row) in shifted.iter_mut().enumerate() {
                    row[t] = (row[t] + p - lam) % p;
                }
                let null = fp::nullspace(&shifted, d, p);
                total += null.len();
                let vecs: Vec<fp::Vector> = null
                    .iter()
                    .map(|co| {
                        let mut v = vec![0u64; r];
                        for (coef, b) in co.iter().zip(&basis) {
                            for (x, y) in v.iter_mut().zip(b) {
                                *x = (*x + coef * y) % p;
                            }
                        }
                        v
                    })
                    .collect();
                next.push(vecs);
            }
            if total != d {
                return None;
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return None;
    }
    let inv_class: Vec<usize> = cd.representatives.iter().map(|&x| cd.class_of[g.inv(x)]).collect();
    let w = pow_mod(primitive_root(p), (p - 1) / e, p);
    let mut chars: Vec<(u64, Vec<PowerSum>)> = Vec::with_capacity(r);
    for s in spaces {
        let v = &s[0];
        let norm = inv_mod(v[id_class], p)?;
        let omega: Vec<u64> = v.iter().map(|&x| x * norm % p).collect();
        let mut sum = 0u64;
        for i in 0..r {
            let size = cd.classes[i].len() as u64;
            sum = (sum + omega[i] * omega[inv_class[i]] % p * inv_mod(size % p, p)?) % p;
        }
        let d2 = h % p * inv_mod(sum, p)? % p;
        let d = (1..=isqrt(h)).find(|&d| d * d % p == d2)?;
        let values: Vec<u64> = (0..r)
            .map(|i| omega[i] * d % p * inv_mod(cd.classes[i].len() as u64 % p, p).unwrap() % p)
            .collect();
        let mut lifted = Vec::with_capacity(r);
        for &z in &cd.representatives {
            let o = g.element_order(z) as u64;
            let wo = pow_mod(w, e / o, p);
            let o_inv = inv_mod(o % p, p)?;
            let mut counts = vec![0i64; e as usize];
            let mut total = 0u64;
            for t in 0..o {
                let mut acc = 0u64;
                let mut power = g.identity();
                for l in 0..o {
                    let val = values[cd.class_of[power]];
                    let root = pow_mod(wo, (o - (t * l) % o) % o, p);
                    acc = (acc + val * root) % p;
                    power = g.mul(power, z);
                }
                let mu = acc * o_inv % p;
                if mu > d {
                    return None;
                }
                total += mu;
                counts[(t * (e / o)) as usize] = mu as i64;
            }
            if total != d {
                return None;
            }
            lifted.push(counts);
        }
        chars.push((d, lifted));
    }
    chars.sort();
    if chars.iter().map(|(d, _)| d * d).sum::<u64>() != h {
        return None;
    }
    let degrees = chars.iter().map(|(d, _)| *d).collect();
    let values = chars.into_iter().map(|(_, v)| v).collect();
    Some(CharacterTable {
        classes: cd.clone(),
        level: e,
        values,
        degrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::{CycloLevel, CycloNumber};
    use crate::group::catalog::named;

    fn exact(t: &CharacterTable, v: &PowerSum) -> CycloNumber {
        CycloNumber::from_small_power_sum(&CycloLevel::get(t.level), v, 1)
    }

    #[test]
    fn degrees_of_small_groups() {
        for (name, degrees) in [
            ("Z/4", vec![1, 1, 1, 1]),
            ("S3", vec![1, 1, 2]),
            ("Q8", vec![1, 1, 1, 1, 2]),
            ("D4", vec![1, 1, 1, 1, 2]),
            ("A4", vec![1, 1, 1, 3]),
            ("S4", vec![1, 1, 2, 3, 3]),
        ] {
            let t = character_table(&named(name).unwrap()).unwrap();
            assert_eq!(t.degrees, degrees, "{name}");
        }
    }

    #[test]
    fn first_orthogonality_is_exact() {
        for name in ["S3", "Q8", "A4", "Z/2xZ/4"] {
            let g = named(name).unwrap();
            let t = character_table(&g).unwrap();
            let lvl = CycloLevel::get(t.level);
            for a in 0..t.degrees.len() {
                for b in 0..t.degrees.len() {
                    let mut acc = CycloNumber::zero(&lvl);
                    for x in 0..g.order() {
                        acc = &acc + &(&exact(&t, t.value(a, x)) * &exact(&t, t.value(b, x)).conj());
                    }
                    let expect = if a == b { g.order() as i64 } else { 0 };
                    assert_eq!(acc, CycloNumber::from_integer(&lvl, expect), "{name} {a} {b}");
                }
            }
        }
    }
}
