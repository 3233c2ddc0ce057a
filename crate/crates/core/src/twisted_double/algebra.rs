//! The twisted double `D^α(G)` as structure constants.

use alloc::vec::Vec;

use crate::caps::Caps;
use crate::cohomology::Cochain;
use crate::error::{consistency, domain, Result};
use crate::group::FiniteGroup;

/// Basis `P_g x` (written `(g, x)`), product
/// `(g,x)·(h,y) = [g = xhx⁻¹]·θ_g(x,y)·(g, xy)` and coproduct
/// `Δ(g,x) = Σ_{hk=g} γ_x(h,k)·(h,x)⊗(k,x)`.
///
/// Phases are stored additively in `Z/m`, standing for `exp(2πi·v/m)`.
#[derive(Clone, Debug)]
pub struct TwistedDoubleAlgebra {
    group: FiniteGroup,
    alpha: Cochain,
    theta: Vec<u32>,
    gamma: Vec<u32>,
}

/// Triples checked when the group is too large for the exhaustive check.
const SAMPLES: usize = 100_000;

impl TwistedDoubleAlgebra {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn alpha(&self) -> &Cochain {
        &self.alpha
    }

    pub fn modulus(&self) -> u64 {
        self.alpha.modulus()
    }

    pub fn dimension(&self) -> usize {
        self.group.order() * self.group.order()
    }

    /// `θ_g(x,y) = α(g,x,y) − α(x,x⁻¹gx,y) + α(x,y,(xy)⁻¹g(xy))`.
    #[inline]
    pub fn theta(&self, g: usize, x: usize, y: usize) -> u64 {
        let n = self.group.order();
        self.theta[(g * n + x) * n + y] as u64
    }

    /// `γ_x(h,k) = α(h,k,x) + α(x,x⁻¹hx,x⁻¹kx) − α(h,x,x⁻¹kx)`.
    #[inline]
    pub fn gamma(&self, x: usize, h: usize, k: usize) -> u64 {
        let n = self.group.order();
        self.gamma[(x * n + h) * n + k] as u64
    }

    /// Product of basis elements: phase and basis element, or `None` for zero.
    pub fn product(&self, a: (usize, usize), b: (usize, usize)) -> Option<(u64, (usize, usize))> {
        let gr = &self.group;
        let ((g, x), (h, y)) = (a, b);
        (gr.conj(x, h) == g).then(|| (self.theta(g, x, y), (g, gr.mul(x, y))))
    }

    fn assoc_at(&self, g: usize, x: usize, y: usize, z: usize) -> bool {
        let gr = &self.group;
        let m = self.modulus();
        let h = gr.conj(gr.inv(x), g);
        let lhs = self.theta(g, x, y) + self.theta(g, gr.mul(x, y), z);
        let rhs = self.theta(h, y, z) + self.theta(g, x, gr.mul(y, z));
        lhs % m == rhs % m
    }

    fn coproduct_at(&self, x: usize, y: usize, g1: usize, g2: usize) -> bool {
        let gr = &self.group;
        let m = self.modulus();
        let xi = gr.inv(x);
        let (h1, h2) = (gr.conj(xi, g1), gr.conj(xi, g2));
        let lhs = self.theta(g1, x, y) + self.theta(g2, x, y) + self.gamma(x, g1, g2) + self.gamma(y, h1, h2);
        let rhs = self.theta(gr.mul(g1, g2), x, y) + self.gamma(gr.mul(x, y), g1, g2);
        lhs % m == rhs % m
    }

    /// Associativity of the product and multiplicativity of the coproduct,
    /// exhaustive up to `limit`, sampled above.
    pub fn verify(&self, limit: usize) -> Result<()> {
        let n = self.group.order();
        let check = |a: usize, b: usize, c: usize, d: usize| -> Result<()> {
            if !self.assoc_at(a, b, c, d) {
                return Err(consistency!("double product is not associative at ({a},{b}),({c}),({d})"));
            }
            if !self.coproduct_at(a, b, c, d) {
                return Err(consistency!("double coproduct is not multiplicative at x={a}, y={b}, ({c},{d})"));
            }
            Ok(())
        };
        if n <= limit {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        for d in 0..n {
                            check(a, b, c, d)?;
                        }
                    }
                }
            }
        } else {
            let mut s: u64 = super::modular::DOUBLE_SEED;
            for _ in 0..SAMPLES {
                let mut next = || {
                    s ^= s << 13;
                    s ^= s >> 7;
                    s ^= s << 17;
                    (s % n as u64) as usize
                };
                let (a, b, c, d) = (next(), next(), next(), next());
                check(a, b, c, d)?;
            }
        }
        let e = self.group.identity();
        for h in 0..n {
            for y in 0..n {
                if self.theta(h, e, y) != 0 || self.theta(h, y, e) != 0 {
                    return Err(consistency!("Σ_g (g,e) is not a two-sided unit"));
                }
            }
        }
        Ok(())
    }
}

/// Assemble `D^α(G)` and verify its structure.
pub fn build_double(group: &FiniteGroup, alpha: &Cochain, caps: &Caps) -> Result<TwistedDoubleAlgebra> {
    group.mismatch(alpha.group(), "twisted double")?;
    if alpha.degree() != 3 {
        return Err(domain!("the double needs a 3-cocycle, got degree {}", alpha.degree()));
    }
    alpha.require_cocycle()?;
    let n = group.order();
    if n.pow(3) > caps.max_table {
        return Err(crate::error::size_err!("double of a group of order {n} exceeds the table cap"));
    }
    let m = alpha.modulus();
    let a = |x: usize, y: usize, z: usize| alpha.value(&[x, y, z]);
    let mut theta = Vec::with_capacity(n * n * n);
    let mut gamma = Vec::with_capacity(n * n * n);
    for g in 0..n {
        for x in 0..n {
            let xi = group.inv(x);
            for y in 0..n {
                let xy = group.mul(x, y);
                let v = a(g, x, y) + (m - a(x, group.conj(xi, g), y)) + a(x, y, group.conj(group.inv(xy), g));
                theta.push((v % m) as u32);
            }
        }
    }
    for x in 0..n {
        let xi = group.inv(x);
        for h in 0..n {
            for k in 0..n {
                let kx = group.conj(xi, k);
                let v = a(h, k, x) + a(x, group.conj(xi, h), kx) + (m - a(h, x, kx));
                gamma.push((v % m) as u32);
            }
        }
    }
    let d = TwistedDoubleAlgebra {
        group: group.clone(),
        alpha: alpha.clone(),
        theta,
        gamma,
    };
    d.verify(caps.exhaustive_double_order)?;
    Ok(d)
}
