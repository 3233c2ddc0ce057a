//! Finite groups as explicit multiplication tables.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{domain, size_err, Error, Result};

pub mod abelian;
pub mod catalog;
pub mod extension;
pub mod subgroup;

pub use abelian::AbelianStructure;
pub use extension::ExtensionData;
pub use subgroup::{centralizer, conjugacy_classes, ConjugacyData, Subgroup};

#[derive(Debug, PartialEq, Eq)]
struct GroupData {
    order: usize,
    mult: Vec<u32>,
    identity: usize,
    inv: Vec<u32>,
    name: Option<String>,
}

/// A finite group on the element indices `0..order`.
///
/// Cloning is cheap: the table is shared.
#[derive(Clone, Debug)]
pub struct FiniteGroup(Arc<GroupData>);

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order && self.0.mult == other.0.mult)
    }
}

impl Eq for FiniteGroup {}

/// Exhaustive associativity is checked up to this order; above it a fixed
/// deterministic sample of triples is used.
const EXHAUSTIVE_ASSOC: usize = 256;

impl FiniteGroup {
    /// Validate a multiplication table (`table[a][b] = a·b`) and build the group.
    pub fn from_table(table: &[Vec<usize>], name: Option<String>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(domain!("a group needs at least one element"));
        }
        let mut mult = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(domain!("row {a} has length {} instead of {n}", row.len()));
            }
            for &c in row {
                if c >= n {
                    return Err(domain!("entry {c} in row {a} is out of range"));
                }
                mult.push(c as u32);
            }
        }
        FiniteGroup::from_flat(n, mult, name)
    }

    pub(crate) fn from_flat(n: usize, mult: Vec<u32>, name: Option<String>) -> Result<FiniteGroup> {
        let at = |a: usize, b: usize| mult[a * n + b] as usize;
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or_else(|| domain!("table has no two-sided identity"))?;
        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| at(x, y) == identity)
                .ok_or_else(|| domain!("element {x} has no inverse"))?;
            if at(y, x) != identity {
                return Err(domain!("inverse of {x} is one-sided"));
            }
            inv[x] = y as u32;
        }
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(domain!("table is not associative at ({a}, {b}, {c})"));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOC {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            // Light-style spot check on a deterministic pseudo-random sample.
            let mut s: u64 = 0x9e37_79b9_7f4a_7c15;
            for _ in 0..100_000 {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let a = (s >> 33) as usize % n;
                let b = (s >> 17) as usize % n;
                let c = (s >> 5) as usize % n;
                check(a, b, c)?;
            }
        }
        Ok(FiniteGroup(Arc::new(GroupData {
            order: n,
            mult,
            identity,
            inv,
            name,
        })))
    }

    /// Closure of permutations of `0..degree` under composition.
    ///
    /// Element 0 is the identity; the rest appear in breadth-first order,
    /// extending each element on the right by the generators in input order.
    /// The product is composition `(a·b)(i) = a(b(i))`.
    pub fn from_generators(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<FiniteGroup> {
        for (k, g) in generators.iter().enumerate() {
            if g.len() != degree {
                return Err(domain!("generator {k} has length {} instead of {degree}", g.len()));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || core::mem::replace(&mut seen[x], true) {
                    return Err(domain!("generator {k} is not a permutation of 0..{degree}"));
                }
            }
        }
        let compose = |a: &[u32], b: &[u32]| -> Vec<u32> { b.iter().map(|&i| a[i as usize]).collect() };
        let gens: Vec<Vec<u32>> = generators
            .iter()
            .map(|g| g.iter().map(|&x| x as u32).collect())
            .collect();
        let mut elements: Vec<Vec<u32>> = vec![(0..degree as u32).collect()];
        let mut index: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        index.insert(elements[0].clone(), 0);
        let mut head = 0;
        while head < elements.len() {
            for s in &gens {
                let next = compose(&elements[head], s);
                if !index.contains_key(&next) {
                    if elements.len() >= cap {
                        return Err(size_err!("permutation closure exceeds the order cap {cap}"));
                    }
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            head += 1;
        }
        let n = elements.len();
        let mut mult = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                mult.push(index[&compose(a, b)] as u32);
            }
        }
        FiniteGroup::from_flat(n, mult, None)
    }

    pub fn with_name(self, name: impl Into<String>) -> FiniteGroup {
        let mut data = Arc::try_unwrap(self.0).unwrap_or_else(|a| GroupData {
            order: a.order,
            mult: a.mult.clone(),
            identity: a.identity,
            inv: a.inv.clone(),
            name: None,
        });
        data.name = Some(name.into());
        FiniteGroup(Arc::new(data))
    }

    /// The cyclic group Z/n with element k standing for k.
    pub fn cyclic(n: usize) -> FiniteGroup {
        assert!(n >= 1, "cyclic group order must be positive");
        let mult = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
        FiniteGroup::from_flat(n, mult, Some(alloc::format!("Z/{n}"))).expect("cyclic table is a group")
    }

    /// Direct product; the pair `(g, h)` has index `g·|H| + h`.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let (n1, n2) = (self.order(), other.order());
        let n = n1 * n2;
        let mut mult = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                let g = self.mul(a / n2, b / n2);
                let h = other.mul(a % n2, b % n2);
                mult.push((g * n2 + h) as u32);
            }
        }
        let name = match (self.name(), other.name()) {
            (Some(x), Some(y)) => Some(alloc::format!("{x}x{y}")),
            _ => None,
        };
        FiniteGroup::from_flat(n, mult, name).expect("product of groups is a group")
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> usize {
        self.0.identity
    }

    pub fn name(&self) -> Option<&str> {
        self.0.name.as_deref()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.mult[a * self.0.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.0.inv[a] as usize
    }

    /// `g·x·g⁻¹`.
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).fold(1, |acc, a| crate::arith::lcm(acc as u64, self.element_order(a) as u64) as usize)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.commute(a, b)))
    }

    /// The table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order() {
            Ok(())
        } else {
            Err(domain!("element {a} is out of range for a group of order {}", self.order()))
        }
    }

    /// Whether `map` (indexed by elements of `self`) is a homomorphism into `target`.
    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order()
            && map.iter().all(|&x| x < target.order())
            && (0..self.order()).all(|a| {
                (0..self.order()).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b]))
            })
    }

    pub(crate) fn mismatch(&self, other: &FiniteGroup, what: &str) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::Mismatch(alloc::format!("{what}: groups differ")))
        }
    }
}

/// See [`FiniteGroup::from_generators`].
pub fn group_from_generators(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<FiniteGroup> {
    FiniteGroup::from_generators(degree, generators, cap)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = group_from_generators(1, &[], 10).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn closure_cap_is_enforced() {
        let s4 = [vec![1, 2, 3, 0], vec![1, 0, 2, 3]];
        assert!(matches!(group_from_generators(4, &s4, 23), Err(Error::Size(_))));
        assert_eq!(group_from_generators(4, &s4, 24).unwrap().order(), 24);
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(FiniteGroup::from_table(&[vec![0, 1], vec![1, 1]], None).is_err());
        assert!(FiniteGroup::from_table(&[vec![0, 2], vec![1, 0]], None).is_err());
        assert!(group_from_generators(3, &[vec![0, 0, 1]], 10).is_err());
    }

    #[test]
    fn products_and_powers() {
        let z6 = FiniteGroup::cyclic(6);
        assert_eq!(z6.pow(1, 5), 5);
        assert_eq!(z6.pow(1, -1), 5);
        assert_eq!(z6.element_order(2), 3);
        let p = z6.direct_product(&FiniteGroup::cyclic(2));
        assert_eq!(p.order(), 12);
        assert_eq!(p.exponent(), 6);
        assert!(p.is_abelian());
    }
}
