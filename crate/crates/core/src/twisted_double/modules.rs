//! Simple modules of the twisted double, one block per conjugacy class.
//!
//! The simple modules over the class of `a` are induced from irreducible
//! projective representations of `C(a)` with factor set `θ_a = ι_aα`. Those
//! are read off the ordinary character table of the central extension
//! `Z/m_a ×_{θ_a} C(a)` as the characters on which the central generator acts
//! by `ζ_{m_a}`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use super::algebra::TwistedDoubleAlgebra;
use crate::arith::{gcd, lcm};
use crate::characters::{character_table, PowerSum};
use crate::cyclotomic::{CycloLevel, CycloNumber, MuElement};
use crate::error::{Error, Result};
use crate::group::extension::central_extension;
use crate::group::{centralizer, conjugacy_classes, Subgroup};

/// One simple object `(a, χ)` of `Z(Vect^α[G])`.
#[derive(Clone, Debug)]
pub struct SimpleLabel {
    /// Conjugacy class representative `a` (smallest index in its class).
    pub class_rep: usize,
    pub class_size: usize,
    pub centralizer: Subgroup,
    /// Left coset representatives of `C(a)`, the identity first.
    pub cosets: Vec<usize>,
    /// Projective character on `C(a)` (indexed like the subgroup's elements),
    /// as power sums at `char_level`.
    pub character: Vec<PowerSum>,
    pub char_level: u64,
    /// Degree of the projective representation.
    pub dimension: u64,
    /// `T = χ(a)/χ(e)`, a root of unity.
    pub twist: MuElement,
}

impl SimpleLabel {
    /// Exact character value at the centralizer element with subgroup index `i`.
    pub fn character_value(&self, i: usize) -> CycloNumber {
        CycloNumber::from_small_power_sum(&CycloLevel::get(self.char_level), &self.character[i], 1)
    }

    /// Quantum dimension `|class|·dim`.
    pub fn quantum_dimension(&self) -> u64 {
        self.class_size as u64 * self.dimension
    }

    pub fn is_unit(&self, identity: usize) -> bool {
        self.class_rep == identity
            && self.dimension == 1
            && self.character.iter().all(|v| v.first() == Some(&1) && v[1..].iter().all(|&c| c == 0))
    }
}

fn left_cosets(d: &TwistedDoubleAlgebra, c: &Subgroup) -> Vec<usize> {
    let g = d.group();
    let mut covered = vec![false; g.order()];
    let mut reps = Vec::new();
    let order: Vec<usize> = core::iter::once(g.identity())
        .chain((0..g.order()).filter(|&x| x != g.identity()))
        .collect();
    for r in order {
        if covered[r] {
            continue;
        }
        for &x in c.elements() {
            covered[g.mul(r, x)] = true;
        }
        reps.push(r);
    }
    reps
}

/// All simple modules, the unit first, then ordered by class representative,
/// twist, dimension and character values.
pub fn simple_modules(d: &TwistedDoubleAlgebra) -> Result<Vec<SimpleLabel>> {
    let g = d.group();
    let m = d.modulus();
    let cd = conjugacy_classes(g);
    let mut labels = Vec::new();
    for (ci, &a) in cd.representatives.iter().enumerate() {
        let c = centralizer(g, a)?;
        let el = c.elements();
        let k = c.order();
        // ι_aα on C(a), reduced to the smallest modulus carrying its values.
        let raw: Vec<u64> = (0..k * k).map(|i| d.theta(a, el[i / k], el[i % k])).collect();
        let content = raw.iter().fold(m, |acc, &v| gcd(acc, v));
        let ma = m / content;
        let table: Vec<u64> = raw.iter().map(|&v| v / content).collect();
        let ext = central_extension(c.group(), ma, &table)?;
        let ct = character_table(&ext.total)?;
        let e_hat = ct.level;
        let z = c.group().identity() * ma as usize + (1 % ma) as usize;
        let want = (e_hat / ma) as usize % e_hat as usize;
        let cosets = left_cosets(d, &c);
        let a_pos = c.position(a).expect("a ∈ C(a)");
        for chi in 0..ct.degrees.len() {
            let deg = ct.degrees[chi];
            let at_z = ct.value(chi, z);
            let central = at_z
                .iter()
                .enumerate()
                .all(|(i, &v)| v == if i == want { deg as i64 } else { 0 });
            if !central {
                continue;
            }
            let character: Vec<PowerSum> = (0..k)
                .map(|i| ct.value(chi, i * ma as usize).clone())
                .collect();
            let at_a = &character[a_pos];
            let nz: Vec<usize> = (0..at_a.len()).filter(|&i| at_a[i] != 0).collect();
            let twist = match nz.as_slice() {
                [t] if at_a[*t] == deg as i64 => MuElement::new(*t as i64, e_hat),
                _ => {
                    return Err(Error::Convention(alloc::format!(
                        "ρ(a) is not scalar for class representative {a}"
                    )))
                }
            };
            labels.push(SimpleLabel {
                class_rep: a,
                class_size: cd.classes[ci].len(),
                centralizer: c.clone(),
                cosets: cosets.clone(),
                character,
                char_level: e_hat,
                dimension: deg,
                twist,
            });
        }
    }
    check_orthogonality(&labels)?;
    let identity = g.identity();
    let level = labels.iter().fold(1, |acc, l| lcm(acc, l.char_level));
    let lvl = CycloLevel::get(level);
    let key_t = |l: &SimpleLabel| {
        CycloNumber::zeta_power(&lvl, (l.twist.numerator() * (level / l.twist.denominator())) as i64)
    };
    labels.sort_by(|x, y| {
        y.is_unit(identity)
            .cmp(&x.is_unit(identity))
            .then(x.class_rep.cmp(&y.class_rep))
            .then_with(|| key_t(x).cmp(&key_t(y)))
            .then(x.dimension.cmp(&y.dimension))
            .then_with(|| compare_chars(x, y, level))
    });
    let total: u64 = labels.iter().map(|l| l.quantum_dimension().pow(2)).sum();
    let n = g.order() as u64;
    if total != n * n {
        return Err(Error::Consistency(alloc::format!(
            "simple modules have Σ dim² = {total}, expected {}",
            n * n
        )));
    }
    Ok(labels)
}

fn compare_chars(x: &SimpleLabel, y: &SimpleLabel, level: u64) -> Ordering {
    let lift = |l: &SimpleLabel, v: &PowerSum| -> Vec<i64> {
        let step = (level / l.char_level) as usize;
        let mut out = vec![0i64; level as usize];
        for (i, &c) in v.iter().enumerate() {
            out[i * step] = c;
        }
        out
    };
    for (a, b) in x.character.iter().zip(&y.character) {
        let o = lift(x, a).cmp(&lift(y, b));
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

/// Projective orthogonality `Σ_c χ_i(c)·χ̄_j(c) = |C|·δ_ij` within each
/// block, evaluated on exact power sums.
fn check_orthogonality(labels: &[SimpleLabel]) -> Result<()> {
    for (i, x) in labels.iter().enumerate() {
        for y in labels[i..].iter().take_while(|y| y.class_rep == x.class_rep) {
            let e = x.char_level as usize;
            let mut acc = vec![0i64; e];
            for (u, v) in x.character.iter().zip(&y.character) {
                for (a, &cu) in u.iter().enumerate().filter(|p| *p.1 != 0) {
                    for (b, &cv) in v.iter().enumerate().filter(|p| *p.1 != 0) {
                        acc[(a + e - b) % e] += cu * cv;
                    }
                }
            }
            let value = CycloNumber::from_small_power_sum(&CycloLevel::get(x.char_level), &acc, 1);
            let expected = if core::ptr::eq(x, y) { x.centralizer.order() as i64 } else { 0 };
            if value != CycloNumber::from_integer(&CycloLevel::get(1), expected) {
                return Err(Error::Consistency(alloc::format!(
                    "projective characters at class {} violate orthogonality",
                    x.class_rep
                )));
            }
        }
    }
    Ok(())
}
