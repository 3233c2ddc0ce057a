//! Standard actions on small matrix algebras.

use alloc::vec;
use alloc::vec::Vec;

use super::action::AlgebraAction;
use super::matrix::{Matrix, MatrixAlgebra};
use crate::cyclotomic::CycloNumber;
use crate::error::Result;
use crate::group::FiniteGroup;

/// Clock `Z = diag(ζ^j)` and shift `X e_j = e_{j+1}` on `Mat_n` at level `level`.
fn clock_shift(n: usize, level: u64) -> (Matrix, Matrix) {
    let lv = crate::cyclotomic::CycloLevel::get(level);
    let mut x = Matrix::zero(n, &lv);
    let mut z = Matrix::zero(n, &lv);
    let step = (level / n as u64) as i64;
    for j in 0..n {
        x.set((j + 1) % n, j, CycloNumber::one(&lv));
        z.set(j, j, CycloNumber::zeta_power(&lv, step * j as i64));
    }
    (x, z)
}

fn power(m: &Matrix, k: usize) -> Matrix {
    let mut out = Matrix::identity(m.size(), m.get(0, 0).level_data());
    for _ in 0..k {
        out = out.mul(m);
    }
    out
}

/// `Z/n × Z/n` acting on `Mat_n` by conjugation with `X^a Z^b`; the element
/// `(a, b)` has index `a·n + b`. The anomaly has order `n`.
pub fn heisenberg_action(n: usize) -> Result<AlgebraAction> {
    heisenberg_at(n, if n % 2 == 0 { n as u64 } else { 2 * n as u64 })
}

fn heisenberg_at(n: usize, level: u64) -> Result<AlgebraAction> {
    let algebra = MatrixAlgebra::new(n, level)?;
    let (x, z) = clock_shift(n, level);
    let group = FiniteGroup::cyclic(n).direct_product(&FiniteGroup::cyclic(n)).with_name(alloc::format!("Z/{n}xZ/{n}"));
    let lift: Vec<Matrix> = (0..n * n).map(|i| power(&x, i / n).mul(&power(&z, i % n))).collect();
    Ok(AlgebraAction::by_conjugation(algebra, group, lift)?.without_lift())
}

/// The Pauli action of `(Z/2)²` on `Mat₂` over `Q(i)`.
pub fn pauli_action() -> Result<AlgebraAction> {
    heisenberg_at(2, 4)
}

/// `Z/2` acting on `Mat₂` by conjugation with `diag(1, −1)`, lifted by
/// `β(1) = diag(1, −1)`.
pub fn diagonal_z2_action() -> Result<AlgebraAction> {
    let algebra = MatrixAlgebra::new(2, 1)?;
    let lv = algebra.field();
    let mut d = Matrix::identity(2, &lv);
    d.set(1, 1, CycloNumber::from_integer(&lv, -1));
    AlgebraAction::by_conjugation(algebra, FiniteGroup::cyclic(2), vec![Matrix::identity(2, &lv), d])
}

/// The trivial `Z/2` action on `Mat₂` with lift `β(1) = −1`; gauging gives zero.
pub fn sign_z2_action() -> Result<AlgebraAction> {
    let algebra = MatrixAlgebra::new(2, 1)?;
    let lv = algebra.field();
    let minus = Matrix::scalar(2, &CycloNumber::from_integer(&lv, -1));
    AlgebraAction::by_conjugation(algebra, FiniteGroup::cyclic(2), vec![Matrix::identity(2, &lv), minus])
}

/// `Z/n` acting on `Mat_n` through powers of the clock matrix; anomaly-free.
pub fn clock_action(n: usize) -> Result<AlgebraAction> {
    let level = n as u64;
    let algebra = MatrixAlgebra::new(n, level)?;
    let (_, z) = clock_shift(n, level);
    AlgebraAction::by_conjugation(algebra, FiniteGroup::cyclic(n), (0..n).map(|k| power(&z, k)).collect())
}

/// Actions used by the Galois checks, with names.
pub fn catalog_actions() -> Result<Vec<(&'static str, AlgebraAction)>> {
    Ok(vec![
        ("pauli", pauli_action()?),
        ("heisenberg3", heisenberg_action(3)?),
        ("heisenberg4", heisenberg_action(4)?),
        ("diagonal-z2", diagonal_z2_action()?),
        ("clock3", clock_action(3)?),
        ("clock4", clock_action(4)?),
    ])
}
