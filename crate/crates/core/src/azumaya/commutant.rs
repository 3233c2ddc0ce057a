//! The graded commutant `B = ⊕ B_g` and the fixed algebra `A^G`.

use alloc::vec::Vec;

use super::action::{solve_linear, AlgebraAction};
use super::matrix::{span_rank, Matrix};
use crate::error::{consistency, Result};

#[derive(Clone, Debug)]
pub struct GradedCommutant {
    /// `components[g]` is a basis of `B_g = {b : b·a = φ_g(a)·b}`.
    pub components: Vec<Vec<Matrix>>,
    /// Basis of `A^G`.
    pub fixed: Vec<Matrix>,
}

impl GradedCommutant {
    pub fn dimensions(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }
}

fn contained(space: &[Matrix], x: &Matrix) -> bool {
    let mut with = space.to_vec();
    with.push(x.clone());
    span_rank(&with) == span_rank(space)
}

fn same_span(a: &[Matrix], b: &[Matrix]) -> bool {
    let mut both = a.to_vec();
    both.extend_from_slice(b);
    let r = span_rank(&both);
    r == span_rank(a) && r == span_rank(b)
}

/// Computes every `B_g` and `A^G`, then checks `B_e` = scalars,
/// `B_g B_h ⊆ B_gh`, that `A^G` is a subalgebra, and that `A^G` is the
/// commutant of `⊕ B_g`.
pub fn graded_commutant(act: &AlgebraAction) -> Result<GradedCommutant> {
    let a = act.algebra();
    let g = act.group();
    let units = a.units();
    let components: Vec<Vec<Matrix>> = act
        .maps()
        .iter()
        .map(|phi| solve_linear(a, |b| units.iter().zip(phi.images()).map(|(e, pe)| b.mul(e).sub(&pe.mul(b))).collect()))
        .collect();
    let fixed = solve_linear(a, |b| act.maps().iter().map(|phi| phi.apply(b).sub(b)).collect());

    let scalars = [Matrix::identity(a.size(), &a.field())];
    if !same_span(&components[g.identity()], &scalars) {
        return Err(consistency!("B_e is not the scalars"));
    }
    for x in 0..g.order() {
        for y in 0..g.order() {
            let target = &components[g.mul(x, y)];
            for bx in &components[x] {
                for by in &components[y] {
                    if !contained(target, &bx.mul(by)) {
                        return Err(consistency!("B_{x}·B_{y} is not inside B_{}", g.mul(x, y)));
                    }
                }
            }
        }
    }
    for u in &fixed {
        for v in &fixed {
            if !contained(&fixed, &u.mul(v)) {
                return Err(consistency!("A^G is not closed under products"));
            }
        }
    }
    let all_b: Vec<Matrix> = components.iter().flatten().cloned().collect();
    let commutant = solve_linear(a, |x| all_b.iter().map(|b| x.mul(b).sub(&b.mul(x))).collect());
    if !same_span(&commutant, &fixed) {
        return Err(consistency!("A^G differs from the commutant of ⊕B_g"));
    }
    Ok(GradedCommutant { components, fixed })
}
