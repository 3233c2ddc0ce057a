//! Slant products `ι_g` restricted to centralizers.

use super::cochain::Cochain;
use crate::error::{domain, Result};
use crate::group::{centralizer, FiniteGroup};

/// `(ι_gα)(x, y) = α(g,x,y) − α(x,g,y) + α(x,y,g)` on `C(g)`.
///
/// The result lives on `centralizer(G, g).group()`.
pub fn slant3(alpha: &Cochain, g: usize) -> Result<Cochain> {
    if alpha.degree() != 3 {
        return Err(domain!("slant3 needs a 3-cochain, got degree {}", alpha.degree()));
    }
    alpha.require_cocycle()?;
    slant3_unchecked(alpha, g)
}

pub(crate) fn slant3_unchecked(alpha: &Cochain, g: usize) -> Result<Cochain> {
    let c = centralizer(alpha.group(), g)?;
    let el = c.elements();
    Ok(Cochain::from_fn(c.group(), 2, alpha.modulus(), |a| {
        let (x, y) = (el[a[0]], el[a[1]]);
        alpha.value(&[g, x, y]) as i64 - alpha.value(&[x, g, y]) as i64 + alpha.value(&[x, y, g]) as i64
    }))
}

/// `(ι_gβ)(x) = β(g,x) − β(x,g)` on `C(g)`.
pub fn slant2(beta: &Cochain, g: usize) -> Result<Cochain> {
    if beta.degree() != 2 {
        return Err(domain!("slant2 needs a 2-cochain, got degree {}", beta.degree()));
    }
    beta.require_cocycle()?;
    slant2_unchecked(beta, g)
}

pub(crate) fn slant2_unchecked(beta: &Cochain, g: usize) -> Result<Cochain> {
    let c = centralizer(beta.group(), g)?;
    let el = c.elements();
    Ok(Cochain::from_fn(c.group(), 1, beta.modulus(), |a| {
        let x = el[a[0]];
        beta.value(&[g, x]) as i64 - beta.value(&[x, g]) as i64
    }))
}

/// `ι_{x^n}β = n·ι_xβ` for every `x` of the abelian group.
pub fn slant_linearity_check(a: &FiniteGroup, beta: &Cochain, n: i64) -> Result<bool> {
    if !a.is_abelian() {
        return Err(domain!("slant linearity is stated for abelian groups"));
    }
    a.mismatch(beta.group(), "slant linearity")?;
    if beta.degree() != 2 {
        return Err(domain!("slant linearity needs a 2-cochain"));
    }
    beta.require_cocycle()?;
    for x in 0..a.order() {
        let lhs = slant2_unchecked(beta, a.pow(x, n))?;
        let rhs = slant2_unchecked(beta, x)?.scale(n);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
