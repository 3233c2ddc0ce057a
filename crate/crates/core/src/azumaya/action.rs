//! Group actions on matrix algebras, Skolem–Noether witnesses and the
//! anomaly 2-cocycle.

use alloc::format;
use alloc::vec::Vec;

use super::matrix::{Matrix, MatrixAlgebra};
use crate::cyclotomic::{CycloNumber, MuElement};
use crate::error::{domain, Error, Result};
use crate::group::FiniteGroup;
use crate::linalg::field;

/// A linear map of `Mat_n` stored by its images of the matrix units,
/// `images[i·n + j] = φ(E_ij)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    images: Vec<Matrix>,
}

impl Automorphism {
    /// Checks `φ(E_ij)φ(E_kl) = δ_jk φ(E_il)` and `φ(1) = 1`.
    pub fn new(algebra: &MatrixAlgebra, images: Vec<Matrix>) -> Result<Automorphism> {
        let n = algebra.size();
        if images.len() != n * n || images.iter().any(|m| m.size() != n) {
            return Err(Error::NotAutomorphism(format!("need {} images of size {n}", n * n)));
        }
        let lv = algebra.field();
        let zero = Matrix::zero(n, &lv);
        let mut unit = zero.clone();
        for i in 0..n {
            unit = unit.add(&images[i * n + i]);
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        let lhs = images[i * n + j].mul(&images[k * n + l]);
                        let rhs = if j == k { &images[i * n + l] } else { &zero };
                        if lhs != *rhs {
                            return Err(Error::NotAutomorphism(format!(
                                "φ(E_{i}{j})·φ(E_{k}{l}) breaks multiplicativity"
                            )));
                        }
                    }
                }
            }
        }
        if unit != Matrix::identity(n, &lv) {
            return Err(Error::NotAutomorphism("φ(1) ≠ 1".into()));
        }
        Ok(Automorphism { images })
    }

    pub fn identity(algebra: &MatrixAlgebra) -> Automorphism {
        Automorphism { images: algebra.units() }
    }

    /// `b ↦ f·b·f⁻¹`.
    pub fn conjugation(algebra: &MatrixAlgebra, f: &Matrix) -> Result<Automorphism> {
        let inv = f.inverse().ok_or_else(|| domain!("conjugating matrix is singular"))?;
        Ok(Automorphism { images: algebra.units().iter().map(|e| f.mul(e).mul(&inv)).collect() })
    }

    pub fn images(&self) -> &[Matrix] {
        &self.images
    }

    pub fn apply(&self, b: &Matrix) -> Matrix {
        let n = b.size();
        let mut out = Matrix::zero(n, b.get(0, 0).level_data());
        for (k, img) in self.images.iter().enumerate() {
            let c = b.get(k / n, k % n);
            if !c.is_zero() {
                out = out.add(&img.scale(c));
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism { images: other.images.iter().map(|m| self.apply(m)).collect() }
    }

    /// Entrywise `σ_n` on the stored images.
    pub fn galois(&self, n: i64) -> Result<Automorphism> {
        Ok(Automorphism { images: self.images.iter().map(|m| m.map(|x| x.galois(n))).collect::<Result<_>>()? })
    }
}

/// `G → Aut(Mat_n)`, optionally with a lift `g ↦ f_g`.
#[derive(Clone, Debug)]
pub struct AlgebraAction {
    algebra: MatrixAlgebra,
    group: FiniteGroup,
    maps: Vec<Automorphism>,
    lift: Option<Vec<Matrix>>,
}

impl AlgebraAction {
    pub fn new(
        algebra: MatrixAlgebra,
        group: FiniteGroup,
        maps: Vec<Automorphism>,
        lift: Option<Vec<Matrix>>,
    ) -> Result<AlgebraAction> {
        if maps.len() != group.order() {
            return Err(domain!("need one automorphism per group element"));
        }
        if maps[group.identity()] != Automorphism::identity(&algebra) {
            return Err(domain!("the identity must act trivially"));
        }
        for g in 0..group.order() {
            for h in 0..group.order() {
                if maps[g].compose(&maps[h]) != maps[group.mul(g, h)] {
                    return Err(domain!("φ_{g}∘φ_{h} ≠ φ_{}", group.mul(g, h)));
                }
            }
        }
        if let Some(lift) = &lift {
            if lift.len() != group.order() {
                return Err(domain!("need one lift matrix per group element"));
            }
            for (g, f) in lift.iter().enumerate() {
                if Automorphism::conjugation(&algebra, f)? != maps[g] {
                    return Err(domain!("lift of element {g} does not implement its automorphism"));
                }
            }
        }
        Ok(AlgebraAction { algebra, group, maps, lift })
    }

    /// Action by conjugation with the given matrices, which become the lift.
    pub fn by_conjugation(algebra: MatrixAlgebra, group: FiniteGroup, f: Vec<Matrix>) -> Result<AlgebraAction> {
        let maps = f.iter().map(|m| Automorphism::conjugation(&algebra, m)).collect::<Result<_>>()?;
        AlgebraAction::new(algebra, group, maps, Some(f))
    }

    pub fn algebra(&self) -> &MatrixAlgebra {
        &self.algebra
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn maps(&self) -> &[Automorphism] {
        &self.maps
    }

    pub fn lift(&self) -> Option<&[Matrix]> {
        self.lift.as_deref()
    }

    pub fn without_lift(&self) -> AlgebraAction {
        AlgebraAction { lift: None, ..self.clone() }
    }

    pub fn with_lift(&self, lift: Vec<Matrix>) -> Result<AlgebraAction> {
        AlgebraAction::new(self.algebra.clone(), self.group.clone(), self.maps.clone(), Some(lift))
    }

    /// The model of `^γA`: `σ_n` applied entrywise to every automorphism and lift.
    pub fn galois(&self, n: i64) -> Result<AlgebraAction> {
        let maps = self.maps.iter().map(|m| m.galois(n)).collect::<Result<Vec<_>>>()?;
        let lift = match &self.lift {
            Some(l) => Some(l.iter().map(|m| m.map(|x| x.galois(n))).collect::<Result<Vec<_>>>()?),
            None => None,
        };
        AlgebraAction::new(self.algebra.clone(), self.group.clone(), maps, lift)
    }
}

/// Normalize so the first nonzero entry (row-major) is 1.
fn normalize(v: Vec<CycloNumber>) -> Vec<CycloNumber> {
    match v.iter().find(|x| !x.is_zero()).map(|x| x.inverse().expect("nonzero")) {
        Some(s) => v.iter().map(|x| x * &s).collect(),
        None => v,
    }
}

/// Solution space `{b : L(b) = 0}` for a linear map given by its values on
/// matrix units, as matrices.
pub(crate) fn solve_linear(algebra: &MatrixAlgebra, equations: impl Fn(&Matrix) -> Vec<Matrix>) -> Vec<Matrix> {
    let units = algebra.units();
    let images: Vec<Vec<Matrix>> = units.iter().map(&equations).collect();
    let rows = images.first().map_or(0, Vec::len) * algebra.dimension();
    let cols = units.len();
    let lv = algebra.field();
    let zero = CycloNumber::zero(&lv);
    let mut m = alloc::vec![alloc::vec![zero.clone(); cols]; rows];
    for (c, imgs) in images.iter().enumerate() {
        for (block, img) in imgs.iter().enumerate() {
            for (k, v) in img.entries().iter().enumerate() {
                m[block * algebra.dimension() + k][c] = v.clone();
            }
        }
    }
    field::nullspace(&m, cols, &zero)
        .into_iter()
        .map(|v| Matrix::from_entries(algebra.size(), v).expect("dimension matches"))
        .collect()
}

/// The Skolem–Noether witness `f` with `φ(b) = f·b·f⁻¹`, scaled so its first
/// nonzero entry is 1.
pub fn inner_witness(algebra: &MatrixAlgebra, phi: &Automorphism) -> Result<Matrix> {
    let units = algebra.units();
    // f ↦ (φ(E_k)·f − f·E_k)_k
    let space = solve_linear(algebra, |f| units.iter().zip(phi.images()).map(|(e, pe)| pe.mul(f).sub(&f.mul(e))).collect());
    if space.len() != 1 {
        return Err(Error::NotAutomorphism(format!("witness space has dimension {}", space.len())));
    }
    let f = Matrix::from_entries(algebra.size(), normalize(space[0].to_vector()))?;
    if f.inverse().is_none() {
        return Err(Error::NotAutomorphism("witness is singular".into()));
    }
    Ok(f)
}

/// `c(g,h) = f_g f_h f_{gh}⁻¹` as scalars, with its additive μ-table when
/// every value is a root of unity.
#[derive(Clone, Debug)]
pub struct AnomalyCocycle2 {
    pub group: FiniteGroup,
    /// `values[g·|G| + h]`.
    pub values: Vec<CycloNumber>,
    /// Additive table in `Q/Z`.
    pub mu: Option<Vec<MuElement>>,
    pub witnesses: Vec<Matrix>,
}

impl AnomalyCocycle2 {
    pub fn value(&self, g: usize, h: usize) -> &CycloNumber {
        &self.values[g * self.group.order() + h]
    }

    /// Smallest `m` with all values in `μ_m`.
    pub fn mu_level(&self) -> Option<u64> {
        self.mu.as_ref().map(|t| t.iter().fold(1, |acc, x| crate::arith::lcm(acc, x.order())))
    }

    /// The additive cochain with values in `Z/m`, `m` a multiple of the
    /// value level.
    pub fn cochain(&self, m: u64) -> Result<crate::cohomology::Cochain> {
        let mu = self.mu.as_ref().ok_or_else(|| domain!("anomaly values are not roots of unity"))?;
        let table = mu
            .iter()
            .map(|x| x.to_residue(m).ok_or_else(|| domain!("value {}/{} is not in μ_{m}", x.numerator(), x.denominator())))
            .collect::<Result<Vec<_>>>()?;
        crate::cohomology::Cochain::new(&self.group, 2, m, table)
    }

    pub fn is_cocycle(&self) -> bool {
        let g = &self.group;
        let n = g.order();
        (0..n).all(|a| {
            (0..n).all(|b| {
                (0..n).all(|c| {
                    self.value(a, b) * self.value(g.mul(a, b), c) == self.value(b, c) * self.value(a, g.mul(b, c))
                })
            })
        })
    }

    /// `c(g,h)/c(h,g)` on commuting pairs: a coboundary-invariant detector.
    pub fn commutator_pairing(&self) -> Vec<(usize, usize, CycloNumber)> {
        let g = &self.group;
        let mut out = Vec::new();
        for a in 0..g.order() {
            for b in 0..g.order() {
                if g.commute(a, b) {
                    let q = self.value(a, b).checked_div(self.value(b, a)).expect("values are units");
                    out.push((a, b, q));
                }
            }
        }
        out
    }

    /// Multiply by the coboundary of `λ`: `c(g,h)·λ_g λ_h / λ_{gh}`.
    pub fn regauge(&self, lambda: &[CycloNumber]) -> Result<AnomalyCocycle2> {
        let g = &self.group;
        let n = g.order();
        let mut values = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                values.push((&(self.value(a, b) * &lambda[a]) * &lambda[b]).checked_div(&lambda[g.mul(a, b)])?);
            }
        }
        let mu = values.iter().map(CycloNumber::as_root_of_unity).collect();
        let witnesses = self.witnesses.iter().zip(lambda).map(|(f, l)| f.scale(l)).collect();
        Ok(AnomalyCocycle2 { group: g.clone(), values, mu, witnesses })
    }
}

/// Anomaly from witnesses chosen by [`inner_witness`].
pub fn anomaly_cocycle(act: &AlgebraAction) -> Result<AnomalyCocycle2> {
    let a = act.algebra();
    let witnesses = act.maps().iter().map(|phi| inner_witness(a, phi)).collect::<Result<Vec<_>>>()?;
    anomaly_from_witnesses(act, witnesses)
}

/// Anomaly from given witnesses (e.g. a lift), which must implement the action.
pub fn anomaly_from_witnesses(act: &AlgebraAction, witnesses: Vec<Matrix>) -> Result<AnomalyCocycle2> {
    let g = act.group();
    let n = g.order();
    let inverses = witnesses
        .iter()
        .map(|f| f.inverse().ok_or_else(|| domain!("singular witness")))
        .collect::<Result<Vec<_>>>()?;
    let mut values = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let c = witnesses[x].mul(&witnesses[y]).mul(&inverses[g.mul(x, y)]);
            values.push(c.as_scalar().ok_or_else(|| domain!("f_g f_h f_gh⁻¹ is not scalar; witnesses do not implement the action"))?);
        }
    }
    let mu = values.iter().map(CycloNumber::as_root_of_unity).collect();
    let out = AnomalyCocycle2 { group: g.clone(), values, mu, witnesses };
    if !out.is_cocycle() {
        return Err(crate::error::consistency!("anomaly fails the 2-cocycle identity"));
    }
    Ok(out)
}
