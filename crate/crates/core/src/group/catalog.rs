//! Named groups.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use super::FiniteGroup;
use crate::error::{domain, Result};

/// Generators of the regular representation of Q8 on the units `±1, ±i, ±j, ±k`
/// (point `2u + s` is unit `u ∈ {1,i,j,k}` with sign `(-1)^s`).
fn q8_generators() -> Vec<Vec<usize>> {
    // left multiplication tables: unit index products for i·u and j·u
    // (sign, unit) pairs
    let i_times = [(0, 1), (1, 0), (0, 3), (1, 2)]; // i·1=i, i·i=-1, i·j=k, i·k=-j
    let j_times = [(0, 2), (1, 3), (1, 0), (0, 1)]; // j·1=j, j·i=-k, j·j=-1, j·k=i
    let build = |t: &[(usize, usize); 4]| -> Vec<usize> {
        (0..8)
            .map(|p| {
                let (u, s) = (p / 2, p % 2);
                let (s2, u2) = t[u];
                2 * u2 + (s ^ s2)
            })
            .collect()
    };
    vec![build(&i_times), build(&j_times)]
}

fn cycle(degree: usize, points: &[usize]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..degree).collect();
    for w in 0..points.len() {
        p[points[w]] = points[(w + 1) % points.len()];
    }
    p
}

/// Product of cyclic groups as disjoint cycles.
fn abelian_from_factors(factors: &[usize]) -> Result<FiniteGroup> {
    let degree: usize = factors.iter().sum();
    let mut gens = Vec::new();
    let mut start = 0;
    for &f in factors {
        let pts: Vec<usize> = (start..start + f).collect();
        gens.push(cycle(degree.max(1), &pts));
        start += f;
    }
    FiniteGroup::from_generators(degree.max(1), &gens, 10_000)
}

fn parse_cyclic(s: &str) -> Option<usize> {
    s.trim().strip_prefix("Z/")?.trim().parse().ok()
}

/// Look up a catalog group: `Z/n` (n ≤ 16), products such as `Z/2xZ/4`,
/// powers such as `(Z/2)^3`, and `S3`, `S4`, `D4`, `Q8`, `A4`.
pub fn named(name: &str) -> Result<FiniteGroup> {
    let name = name.trim();
    let g = match name {
        "S3" => FiniteGroup::from_generators(3, &[cycle(3, &[0, 1, 2]), cycle(3, &[0, 1])], 10_000)?,
        "S4" => FiniteGroup::from_generators(4, &[cycle(4, &[0, 1, 2, 3]), cycle(4, &[0, 1])], 10_000)?,
        "D4" => FiniteGroup::from_generators(4, &[cycle(4, &[0, 1, 2, 3]), cycle(4, &[1, 3])], 10_000)?,
        "A4" => FiniteGroup::from_generators(4, &[cycle(4, &[0, 1, 2]), cycle(4, &[1, 2, 3])], 10_000)?,
        "Q8" => FiniteGroup::from_generators(8, &q8_generators(), 10_000)?,
        _ => {
            let factors = parse_factors(name).ok_or_else(|| domain!("unknown group name {name:?}"))?;
            if factors.iter().any(|&n| n == 0 || n > 16) {
                return Err(domain!("cyclic factors must have order between 1 and 16 in {name:?}"));
            }
            abelian_from_factors(&factors)?
        }
    };
    Ok(g.with_name(name.to_string()))
}

fn parse_factors(name: &str) -> Option<Vec<usize>> {
    if let Some(rest) = name.strip_prefix('(') {
        let (inner, power) = rest.split_once(")^")?;
        let n = parse_cyclic(inner)?;
        let k: usize = power.trim().parse().ok()?;
        return (k >= 1 && k <= 8).then(|| vec![n; k]);
    }
    name.split('x').map(parse_cyclic).collect()
}

/// Names used by the exhaustive catalog runs.
pub const CATALOG: &[&str] = &["Z/2", "Z/3", "Z/4", "Z/6", "Z/2xZ/2", "S3", "D4", "Q8", "A4"];
