//! Cohomology groups `H^k(G; Z/m)` and their images in `H^k(G; μ)`.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::cochain::{Cochain, NormalBasis};
use super::engine::{apply_differential, apply_differential_int, check_size, cocycle_kernel, solve_differential};
use crate::arith::{crt, inv_mod};
use crate::caps::Caps;
use crate::error::{domain, Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::zmod::{diagonalize, Kernel, PrimePower, Track, ZMat};

/// A finite abelian p-group given as cocycles modulo relations, diagonalized.
#[derive(Clone, Debug)]
struct Presentation {
    /// Orders `p^v` of the cyclic factors, nondecreasing, all > 1.
    factors: Vec<u64>,
    /// Dot with kernel coordinates to read off factor t.
    coord_rows: Vec<Vec<u64>>,
    /// Generator cocycles as normalized vectors mod q.
    gens: Vec<Vec<u64>>,
}

impl Presentation {
    fn build(kernel: &Kernel, relations: &[Vec<u64>], pp: PrimePower) -> Presentation {
        let r = kernel.gens.len();
        let mut rows: Vec<Vec<u64>> = relations.to_vec();
        for (i, &o) in kernel.orders.iter().enumerate() {
            if o < pp.q {
                let mut row = vec![0u64; r];
                row[i] = o % pp.q;
                rows.push(row);
            }
        }
        let d = diagonalize(
            ZMat::from_rows(&rows, r),
            pp,
            Track {
                rows: false,
                cols: true,
                rhs: None,
            },
        );
        let q_t = d.q_t.expect("tracked");
        let q_inv = d.q_inv.expect("tracked");
        let mut out = Presentation {
            factors: Vec::new(),
            coord_rows: Vec::new(),
            gens: Vec::new(),
        };
        for t in 0..r {
            let factor = if t < d.rank { pp.p.pow(d.valuations[t]) } else { pp.q };
            if factor == 1 {
                continue;
            }
            // Relations are rows: coordinates are x·Q, generators rows of Q⁻¹.
            out.factors.push(factor);
            out.coord_rows.push(q_t.row(t).to_vec());
            let coef = q_inv.row(t);
            let mut v = vec![0u64; kernel.gens.first().map_or(0, Vec::len)];
            for (c, g) in coef.iter().zip(&kernel.gens) {
                if *c == 0 {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(g) {
                    *x = (*x + c * y) % pp.q;
                }
            }
            out.gens.push(v);
        }
        out
    }

    fn coordinates(&self, kc: &[u64], q: u64) -> Vec<u64> {
        self.coord_rows
            .iter()
            .zip(&self.factors)
            .map(|(row, &f)| row.iter().zip(kc).fold(0u64, |acc, (a, b)| (acc + a * b % q) % q) % f)
            .collect()
    }
}

#[derive(Clone, Debug)]
struct PrimePart {
    pp: PrimePower,
    kernel: Kernel,
    full: Presentation,
    mu: Presentation,
}

/// Alignment of per-prime factors into invariant factors `d₁ | d₂ | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Combined {
    factors: Vec<u64>,
    /// For each combined factor and prime part, the index of the p-factor used.
    slots: Vec<Vec<Option<usize>>>,
}

impl Combined {
    fn new(lists: &[&[u64]]) -> Combined {
        let len = lists.iter().map(|l| l.len()).max().unwrap_or(0);
        let mut factors = Vec::with_capacity(len);
        let mut slots = Vec::with_capacity(len);
        for j in 0..len {
            let mut f = 1u64;
            let mut s = Vec::with_capacity(lists.len());
            for l in lists {
                let pad = len - l.len();
                if j >= pad {
                    f *= l[j - pad];
                    s.push(Some(j - pad));
                } else {
                    s.push(None);
                }
            }
            factors.push(f);
            slots.push(s);
        }
        Combined { factors, slots }
    }
}

/// `H^k(G; Z/m)` with basis cocycles and a coordinate solver; also the image
/// of `H^k(G; Z/m) → H^k(G; μ)` under `Z/m = μ_m ⊂ μ`.
#[derive(Clone, Debug)]
pub struct CohomologyGroup {
    group: FiniteGroup,
    degree: usize,
    modulus: u64,
    parts: Vec<PrimePart>,
    full: Combined,
    mu: Combined,
    basis: Vec<Cochain>,
    mu_basis: Vec<Cochain>,
}

/// Coordinates of a class together with a trivializing cochain when the class is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCoordinates {
    pub coordinates: Vec<u64>,
    /// `λ` with `dλ = c`, present exactly when all coordinates vanish and `k ≥ 1`.
    pub witness: Option<Cochain>,
}

fn crt_embed(v: &[u64], q: u64, m: u64) -> Vec<u64> {
    let cof = m / q;
    let e = (cof as u128 * inv_mod(cof % q, q).unwrap_or(0) as u128 % m as u128) as u64;
    v.iter().map(|&x| ((x as u128 * e as u128) % m as u128) as u64).collect()
}

/// Compute `H^k(G; Z/m)`.
pub fn cohomology_group(group: &FiniteGroup, k: usize, m: u64, caps: &Caps) -> Result<CohomologyGroup> {
    if m == 0 {
        return Err(domain!("coefficient modulus must be positive"));
    }
    check_size(group, k, caps)?;
    if k > 0 {
        check_size(group, k - 1, caps)?;
    }
    let order = group.order() as u64;
    let mut parts = Vec::new();
    for pp in PrimePower::of_modulus(m) {
        let kernel = cocycle_kernel(group, k, pp);
        let mut relations: Vec<Vec<u64>> = Vec::new();
        if k > 0 {
            // Coboundaries of the basis (k-1)-cochains.
            let prev = NormalBasis::new(group, k - 1);
            let mut unit = vec![0u64; prev.len()];
            for j in 0..prev.len() {
                unit[j] = 1;
                let img = apply_differential(group, k - 1, &unit, pp.q);
                unit[j] = 0;
                let kc = kernel
                    .coordinates(&img)
                    .ok_or_else(|| Error::Consistency("coboundary outside the cocycle kernel".into()))?;
                relations.push(kc);
            }
        }
        let full = Presentation::build(&kernel, &relations, pp);
        // Bockstein images of H^{k-1}(G; Z/p^v), v = v_p(|G|), span the kernel to μ.
        let v = crate::arith::valuation(order, pp.p, 64);
        if k > 0 && v > 0 {
            let pv = PrimePower::new(pp.p, v);
            let w = cocycle_kernel(group, k - 1, pv);
            for g in &w.gens {
                let lift: Vec<i64> = g.iter().map(|&x| x as i64).collect();
                let img = apply_differential_int(group, k - 1, &lift);
                let delta: Vec<u64> = img
                    .iter()
                    .map(|&y| {
                        debug_assert_eq!(y.rem_euclid(pv.q as i64), 0);
                        (y / pv.q as i64).rem_euclid(pp.q as i64) as u64
                    })
                    .collect();
                let kc = kernel
                    .coordinates(&delta)
                    .ok_or_else(|| Error::Consistency("Bockstein image is not a cocycle".into()))?;
                relations.push(kc);
            }
        }
        let mu = Presentation::build(&kernel, &relations, pp);
        parts.push(PrimePart { pp, kernel, full, mu });
    }
    let full = Combined::new(&parts.iter().map(|p| p.full.factors.as_slice()).collect::<Vec<_>>());
    let mu = Combined::new(&parts.iter().map(|p| p.mu.factors.as_slice()).collect::<Vec<_>>());
    let mut h = CohomologyGroup {
        group: group.clone(),
        degree: k,
        modulus: m,
        parts,
        full,
        mu,
        basis: Vec::new(),
        mu_basis: Vec::new(),
    };
    h.basis = (0..h.full.factors.len()).map(|j| h.assemble(j, false)).collect();
    h.mu_basis = (0..h.mu.factors.len()).map(|j| h.assemble(j, true)).collect();
    Ok(h)
}

impl CohomologyGroup {
    fn assemble(&self, j: usize, mu: bool) -> Cochain {
        let nb = NormalBasis::new(&self.group, self.degree);
        let combined = if mu { &self.mu } else { &self.full };
        let mut v = vec![0u64; nb.len()];
        for (part, slot) in self.parts.iter().zip(&combined.slots[j]) {
            if let Some(s) = slot {
                let pres = if mu { &part.mu } else { &part.full };
                let emb = crt_embed(&pres.gens[*s], part.pp.q, self.modulus);
                for (x, y) in v.iter_mut().zip(emb) {
                    *x = (*x + y) % self.modulus;
                }
            }
        }
        Cochain::from_raw(&self.group, self.degree, self.modulus, nb.to_table(&v))
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

    /// Invariant factors of `H^k(G; Z/m)`.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.full.factors
    }

    /// One cocycle per invariant factor.
    pub fn basis(&self) -> &[Cochain] {
        &self.basis
    }

    /// Invariant factors of the image in `H^k(G; μ)`.
    pub fn mu_factors(&self) -> &[u64] {
        &self.mu.factors
    }

    pub fn mu_basis(&self) -> &[Cochain] {
        &self.mu_basis
    }

    pub fn order(&self) -> u64 {
        self.full.factors.iter().product()
    }

    pub fn mu_order(&self) -> u64 {
        self.mu.factors.iter().product()
    }

    fn check(&self, c: &Cochain) -> Result<()> {
        c.group().mismatch(&self.group, "class coordinates")?;
        if c.degree() != self.degree || c.modulus() != self.modulus {
            return Err(domain!(
                "expected a degree-{} cochain mod {}, got degree {} mod {}",
                self.degree,
                self.modulus,
                c.degree(),
                c.modulus()
            ));
        }
        c.require_cocycle()
    }

    fn coords_with(&self, c: &Cochain, mu: bool) -> Result<Vec<u64>> {
        self.check(c)?;
        let nb = NormalBasis::new(&self.group, self.degree);
        let combined = if mu { &self.mu } else { &self.full };
        let per_part: Vec<Vec<u64>> = self
            .parts
            .iter()
            .map(|part| {
                let x = nb.to_vector(c, part.pp.q);
                let kc = part
                    .kernel
                    .coordinates(&x)
                    .ok_or_else(|| Error::Consistency("cocycle outside the computed kernel".into()))?;
                let pres = if mu { &part.mu } else { &part.full };
                Ok(pres.coordinates(&kc, part.pp.q))
            })
            .collect::<Result<_>>()?;
        Ok(combined
            .slots
            .iter()
            .map(|slots| {
                let residues: Vec<(u64, u64)> = slots
                    .iter()
                    .zip(&self.parts)
                    .zip(&per_part)
                    .filter_map(|((s, part), coords)| {
                        s.map(|s| {
                            let pres = if mu { &part.mu } else { &part.full };
                            (coords[s], pres.factors[s])
                        })
                    })
                    .collect();
                crt(&residues).0
            })
            .collect())
    }

    /// Coordinates of `[c]` in `H^k(G; Z/m)`.
    pub fn coordinates(&self, c: &Cochain) -> Result<Vec<u64>> {
        self.coords_with(c, false)
    }

    /// Coordinates of the image of `[c]` in `H^k(G; μ)`.
    pub fn mu_coordinates(&self, c: &Cochain) -> Result<Vec<u64>> {
        self.coords_with(c, true)
    }

    /// Coordinates plus, for the zero class, a cochain `λ` with `dλ = c`.
    pub fn class_coordinates(&self, c: &Cochain) -> Result<ClassCoordinates> {
        let coordinates = self.coordinates(c)?;
        let witness = if self.degree > 0 && coordinates.iter().all(|&x| x == 0) {
            Some(self.trivialize(c)?.ok_or_else(|| {
                Error::Consistency("zero class without a trivializing cochain".into())
            })?)
        } else {
            None
        };
        Ok(ClassCoordinates { coordinates, witness })
    }

    /// A cochain `λ` with `dλ = c`, if one exists.
    pub fn trivialize(&self, c: &Cochain) -> Result<Option<Cochain>> {
        self.check(c)?;
        trivialize(c)
    }

    /// Cocycle `Σ coords[j]·basis[j]`.
    pub fn cocycle(&self, coords: &[u64]) -> Result<Cochain> {
        combine(&self.group, self.degree, self.modulus, &self.basis, coords)
    }

    /// Cocycle `Σ coords[j]·mu_basis[j]`.
    pub fn mu_cocycle(&self, coords: &[u64]) -> Result<Cochain> {
        combine(&self.group, self.degree, self.modulus, &self.mu_basis, coords)
    }

    /// All coordinate tuples of a product of cyclic groups, in lexicographic order.
    pub fn enumerate(factors: &[u64]) -> Vec<Vec<u64>> {
        let mut out = vec![Vec::new()];
        for &f in factors {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..f).map(move |x| {
                        let mut v = prefix.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out
    }
}

fn combine(group: &FiniteGroup, k: usize, m: u64, basis: &[Cochain], coords: &[u64]) -> Result<Cochain> {
    if coords.len() != basis.len() {
        return Err(domain!("expected {} coordinates, got {}", basis.len(), coords.len()));
    }
    let mut acc = Cochain::zero(group, k, m);
    for (b, &x) in basis.iter().zip(coords) {
        acc = acc.add(&b.scale(x as i64))?;
    }
    Ok(acc)
}

/// Solve `dλ = c` over Z/m (prime power by prime power).
pub fn trivialize(c: &Cochain) -> Result<Option<Cochain>> {
    let k = c.degree();
    if k == 0 {
        return Ok(c.is_zero().then(|| c.clone()));
    }
    let group = c.group();
    let m = c.modulus();
    let nb = NormalBasis::new(group, k);
    let prev = NormalBasis::new(group, k - 1);
    let mut lam = vec![0u64; prev.len()];
    for pp in PrimePower::of_modulus(m) {
        let b = nb.to_vector(c, pp.q);
        let Some(x) = solve_differential(group, k - 1, pp, &[b]).pop().flatten() else {
            return Ok(None);
        };
        for (acc, y) in lam.iter_mut().zip(crt_embed(&x, pp.q, m)) {
            *acc = (*acc + y) % m;
        }
    }
    Ok(Some(Cochain::from_raw(group, k - 1, m, prev.to_table(&lam))))
}

/// An element of a computed [`CohomologyGroup`].
#[derive(Clone, Debug)]
pub struct CohomologyClass {
    parent: Arc<CohomologyGroup>,
    coordinates: Vec<u64>,
    representative: Cochain,
}

impl PartialEq for CohomologyClass {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.parent, &other.parent) || self.parent.same_as(&other.parent))
            && self.coordinates == other.coordinates
    }
}

impl CohomologyGroup {
    fn same_as(&self, other: &CohomologyGroup) -> bool {
        self.group == other.group
            && self.degree == other.degree
            && self.modulus == other.modulus
            && self.full == other.full
    }
}

impl CohomologyClass {
    pub fn of(parent: &Arc<CohomologyGroup>, representative: Cochain) -> Result<CohomologyClass> {
        let coordinates = parent.coordinates(&representative)?;
        Ok(CohomologyClass {
            parent: parent.clone(),
            coordinates,
            representative,
        })
    }

    pub fn from_coordinates(parent: &Arc<CohomologyGroup>, coords: &[u64]) -> Result<CohomologyClass> {
        let reduced: Vec<u64> = coords
            .iter()
            .zip(parent.invariant_factors())
            .map(|(x, f)| x % f)
            .collect();
        let representative = parent.cocycle(coords)?;
        Ok(CohomologyClass {
            parent: parent.clone(),
            coordinates: reduced,
            representative,
        })
    }

    pub fn zero(parent: &Arc<CohomologyGroup>) -> CohomologyClass {
        let n = parent.invariant_factors().len();
        CohomologyClass::from_coordinates(parent, &vec![0; n]).expect("zero coordinates")
    }

    pub fn parent(&self) -> &Arc<CohomologyGroup> {
        &self.parent
    }

    pub fn coordinates(&self) -> &[u64] {
        &self.coordinates
    }

    pub fn representative(&self) -> &Cochain {
        &self.representative
    }

    pub fn mu_coordinates(&self) -> Vec<u64> {
        self.parent
            .mu_coordinates(&self.representative)
            .expect("representative is a cocycle of the parent")
    }

    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(|&x| x == 0)
    }

    /// Additive order of the class.
    pub fn order(&self) -> u64 {
        self.coordinates
            .iter()
            .zip(self.parent.invariant_factors())
            .fold(1, |acc, (&x, &f)| crate::arith::lcm(acc, f / crate::arith::gcd(x, f)))
    }

    /// `k·[c]`.
    pub fn scale(&self, k: i64) -> CohomologyClass {
        let representative = self.representative.scale(k);
        let coordinates = self
            .coordinates
            .iter()
            .zip(self.parent.invariant_factors())
            .map(|(&x, &f)| ((x as i128 * k as i128).rem_euclid(f as i128)) as u64)
            .collect();
        CohomologyClass {
            parent: self.parent.clone(),
            coordinates,
            representative,
        }
    }
}

/// Sum of classes in the same group.
pub fn class_add(a: &CohomologyClass, b: &CohomologyClass) -> Result<CohomologyClass> {
    if !(Arc::ptr_eq(&a.parent, &b.parent) || a.parent.same_as(&b.parent)) {
        return Err(Error::Mismatch("classes live in different cohomology groups".into()));
    }
    let coordinates = a
        .coordinates
        .iter()
        .zip(&b.coordinates)
        .zip(a.parent.invariant_factors())
        .map(|((x, y), f)| (x + y) % f)
        .collect();
    Ok(CohomologyClass {
        parent: a.parent.clone(),
        coordinates,
        representative: a.representative.add(&b.representative)?,
    })
}
