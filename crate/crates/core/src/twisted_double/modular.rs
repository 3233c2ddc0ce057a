//! Modular data `(S, T)` of `Z(Vect^α[G])` and Verlinde fusion.
//!
//! Fusion multiplicities come from characters of tensor products of the
//! induced modules, evaluated in a prime field that contains the needed roots
//! of unity. `S` is then fixed by the balancing relation
//! `θ_a θ_b S_ab = |G|⁻¹ Σ_c N_{a*b}^c θ_c d_c`, and every modular identity is
//! checked in exact arithmetic before anything is returned.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::algebra::TwistedDoubleAlgebra;
use super::modules::{simple_modules, SimpleLabel};
use crate::arith::{gcd, lcm, pow_mod, prime_one_mod, primitive_root};
use crate::cyclotomic::{CycloLevel, CycloNumber};
use crate::error::{Error, Result};

/// Seed of the sampled associativity check used for groups above the
/// exhaustive bound. Recorded in every output.
pub const DOUBLE_SEED: u64 = 0x2545_F491_4F6C_DD1D;

/// Fusion tensor, `n[i][j][k] = N_{ij}^k`.
pub type Fusion = Vec<Vec<Vec<u64>>>;

#[derive(Clone, Debug)]
pub struct ModularData {
    pub labels: Vec<SimpleLabel>,
    pub s: Vec<Vec<CycloNumber>>,
    pub t: Vec<CycloNumber>,
    /// Cyclotomic level carrying every entry of `S` and `T`.
    pub level: u64,
    pub seed: u64,
    /// Fusion rules from tensor-product characters (before any conjugation).
    pub fusion: Fusion,
}

impl ModularData {
    pub fn rank(&self) -> usize {
        self.t.len()
    }
}

fn convention(identity: &str, detail: String) -> Error {
    Error::Convention(format!("{identity} fails: {detail}"))
}

struct Field {
    p: u64,
    /// `ω^k` for a primitive `L`-th root `ω`.
    powers: Vec<u64>,
}

impl Field {
    fn new(level: u64) -> Field {
        let p = prime_one_mod(level, 1 << 20);
        let w = pow_mod(primitive_root(p), (p - 1) / level, p);
        let mut powers = Vec::with_capacity(level as usize);
        let mut acc = 1u64;
        for _ in 0..level {
            powers.push(acc);
            acc = acc * w % p;
        }
        Field { p, powers }
    }

    fn root(&self, k: u64) -> u64 {
        self.powers[(k % self.powers.len() as u64) as usize]
    }
}

/// Character of the induced module on every basis element `P_g x`, flat
/// index `g·n + x`, in the prime field. `conj` evaluates the complex conjugate.
fn induced_character(d: &TwistedDoubleAlgebra, label: &SimpleLabel, f: &Field, level: u64, conj: bool) -> Vec<u64> {
    let g = d.group();
    let n = g.order();
    let m = d.modulus();
    let a = label.class_rep;
    let step = level / label.char_level;
    let mut out = vec![0u64; n * n];
    let sign = |e: u64| if conj { (level - e % level) % level } else { e % level };
    for &r in &label.cosets {
        let gi = g.conj(r, a);
        let ri = g.inv(r);
        for x in 0..n {
            if !g.commute(x, gi) {
                continue;
            }
            let c = g.mul(g.mul(ri, x), r);
            let pos = label.centralizer.position(c).expect("r⁻¹xr centralizes a");
            let phase = (d.theta(gi, x, r) + m - d.theta(gi, r, c)) % m * (level / m);
            let mut v = 0u64;
            for (k, &cnt) in label.character[pos].iter().enumerate() {
                if cnt == 0 {
                    continue;
                }
                let w = f.root(sign(k as u64 * step + phase));
                let cf = cnt.rem_euclid(f.p as i64) as u64;
                v = (v + cf * w) % f.p;
            }
            out[gi * n + x] = v;
        }
    }
    out
}

fn fusion_rules(d: &TwistedDoubleAlgebra, labels: &[SimpleLabel], level: u64) -> Result<Fusion> {
    let g = d.group();
    let n = g.order();
    let m = d.modulus();
    let f = Field::new(level);
    let p = f.p;
    let chars: Vec<Vec<u64>> = labels.iter().map(|l| induced_character(d, l, &f, level, false)).collect();
    let conjs: Vec<Vec<u64>> = labels.iter().map(|l| induced_character(d, l, &f, level, true)).collect();
    let class_support: Vec<Vec<usize>> = labels
        .iter()
        .map(|l| {
            let mut v: Vec<usize> = l.cosets.iter().map(|&r| g.conj(r, l.class_rep)).collect();
            v.sort_unstable();
            v
        })
        .collect();
    let inv_order = crate::arith::inv_mod(n as u64 % p, p).expect("p exceeds |G|");
    let r = labels.len();
    let mut fusion = vec![vec![vec![0u64; r]; r]; r];
    let mut tensor = vec![0u64; n * n];
    for i in 0..r {
        for j in i..r {
            tensor.iter_mut().for_each(|v| *v = 0);
            for &h in &class_support[i] {
                for &k in &class_support[j] {
                    let gk = g.mul(h, k);
                    for x in 0..n {
                        let va = chars[i][h * n + x];
                        if va == 0 {
                            continue;
                        }
                        let vb = chars[j][k * n + x];
                        if vb == 0 {
                            continue;
                        }
                        let w = f.root(d.gamma(x, h, k) * (level / m));
                        let t = &mut tensor[gk * n + x];
                        *t = (*t + va * vb % p * w) % p;
                    }
                }
            }
            let mut total = 0u64;
            for c in 0..r {
                let mut acc = 0u64;
                for &gc in &class_support[c] {
                    for x in 0..n {
                        let t = tensor[gc * n + x];
                        if t != 0 {
                            acc = (acc + t * conjs[c][gc * n + x]) % p;
                        }
                    }
                }
                let mult = acc * inv_order % p;
                if mult > (n * n) as u64 {
                    return Err(convention("fusion integrality", format!("N_{{{i},{j}}}^{c} is not a small integer")));
                }
                fusion[i][j][c] = mult;
                fusion[j][i][c] = mult;
                total += mult * labels[c].quantum_dimension();
            }
            if total != labels[i].quantum_dimension() * labels[j].quantum_dimension() {
                return Err(convention(
                    "fusion dimension count",
                    format!("labels {i} ⊗ {j} decompose into total dimension {total}"),
                ));
            }
        }
    }
    Ok(fusion)
}

fn zeta(level: &Arc<CycloLevel>, k: i64) -> CycloNumber {
    CycloNumber::zeta_power(level, k)
}

fn twist_exponent(label: &SimpleLabel, level: u64) -> i64 {
    (label.twist.numerator() * (level / label.twist.denominator())) as i64
}

/// Modular data of the double, with every identity of the modular suite
/// verified before return.
pub fn modular_data(d: &TwistedDoubleAlgebra) -> Result<ModularData> {
    let labels = simple_modules(d)?;
    let level = labels.iter().fold(d.modulus(), |acc, l| lcm(acc, l.char_level));
    let fusion = fusion_rules(d, &labels, level)?;
    let r = labels.len();
    let lv = CycloLevel::get(level);
    let dual: Vec<usize> = (0..r)
        .map(|i| {
            (0..r).find(|&j| fusion[i][j][0] == 1).ok_or_else(|| {
                convention("duality", format!("label {i} has no dual"))
            })
        })
        .collect::<Result<_>>()?;
    let t_exp: Vec<i64> = labels.iter().map(|l| twist_exponent(l, level)).collect();
    let order = BigInt::from(d.group().order());
    let one = BigInt::from(1);
    let mut s = vec![vec![CycloNumber::zero(&lv); r]; r];
    for a in 0..r {
        for b in a..r {
            let mut counts = vec![BigInt::from(0); level as usize];
            for c in 0..r {
                let nn = fusion[dual[a]][b][c];
                if nn == 0 {
                    continue;
                }
                let e = (t_exp[c] - t_exp[a] - t_exp[b]).rem_euclid(level as i64) as usize;
                counts[e] += BigInt::from(nn * labels[c].quantum_dimension());
            }
            let v = CycloNumber::from_power_sum(&lv, &counts, one.clone()).scale(&one, &order);
            s[b][a] = v.clone();
            s[a][b] = v;
        }
    }
    // S has few distinct entries; reduce each once.
    let mut reduced: BTreeMap<CycloNumber, CycloNumber> = BTreeMap::new();
    let mut reduce = |v: &CycloNumber| reduced.entry(v.clone()).or_insert_with(|| v.reduce_level()).clone();
    let s: Vec<Vec<CycloNumber>> = s.iter().map(|row| row.iter().map(&mut reduce).collect()).collect();
    let t: Vec<CycloNumber> = t_exp.iter().map(|&e| reduce(&zeta(&lv, e))).collect();
    let level = s.iter().flatten().chain(&t).fold(1, |acc, x| lcm(acc, x.level()));
    let md = ModularData { labels, s, t, level, seed: DOUBLE_SEED, fusion };
    check_identities(&md, true)?;
    verlinde_check(&md)?;
    Ok(md)
}

/// Every entry re-expressed at the lcm of the entry levels.
fn common_level(a: &[Vec<CycloNumber>]) -> Vec<Vec<CycloNumber>> {
    let level = CycloLevel::get(a.iter().flatten().fold(1, |acc, x| lcm(acc, x.level())));
    a.iter().map(|row| row.iter().map(|x| x.lift(&level).expect("lcm level")).collect()).collect()
}

/// A matrix as machine-integer numerators over one denominator, all entries
/// at one level.
struct Dense {
    den: BigInt,
    num: Vec<Vec<Vec<i64>>>,
}

impl Dense {
    fn of(a: &[Vec<CycloNumber>]) -> Option<Dense> {
        use num_traits::ToPrimitive;
        let den = a.iter().flatten().fold(BigInt::from(1), |acc, x| num_integer::Integer::lcm(&acc, x.denominator()));
        let num = a
            .iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        let f = &den / x.denominator();
                        x.numerators().iter().map(|c| (c * &f).to_i64().filter(|v| v.unsigned_abs() < 1 << 40)).collect()
                    })
                    .collect()
            })
            .collect::<Option<_>>()?;
        Some(Dense { den, num })
    }
}

/// `a·b` with unreduced `i128` convolutions; `None` on overflow.
fn dense_mul(a: &Dense, b: &Dense, level: &Arc<CycloLevel>) -> Option<Vec<Vec<CycloNumber>>> {
    let r = a.num.len();
    let phi = level.phi();
    let poly = level.polynomial();
    let den = &a.den * &b.den;
    let mut out = Vec::with_capacity(r);
    for i in 0..r {
        let mut row = Vec::with_capacity(r);
        for j in 0..r {
            let mut acc = vec![0i128; 2 * phi - 1];
            for k in 0..r {
                let (x, y) = (&a.num[i][k], &b.num[k][j]);
                for (p, &xp) in x.iter().enumerate() {
                    if xp == 0 {
                        continue;
                    }
                    for (q, &yq) in y.iter().enumerate() {
                        if yq != 0 {
                            acc[p + q] = acc[p + q].checked_add(xp as i128 * yq as i128)?;
                        }
                    }
                }
            }
            for k in (phi..2 * phi - 1).rev() {
                let c = core::mem::take(&mut acc[k]);
                if c == 0 {
                    continue;
                }
                for (t, &pt) in poly[..phi].iter().enumerate() {
                    if pt != 0 {
                        acc[k - phi + t] = acc[k - phi + t].checked_sub(c.checked_mul(pt as i128)?)?;
                    }
                }
            }
            acc.truncate(phi);
            row.push(CycloNumber::from_basis(level, acc.into_iter().map(BigInt::from).collect(), den.clone()));
        }
        out.push(row);
    }
    Some(out)
}

fn mat_mul(a: &[Vec<CycloNumber>], b: &[Vec<CycloNumber>], zero: &CycloNumber) -> Vec<Vec<CycloNumber>> {
    let r = a.len();
    let mut both: Vec<Vec<CycloNumber>> = a.to_vec();
    both.extend_from_slice(b);
    let both = common_level(&both);
    let (a, b) = both.split_at(r);
    let level = both[0][0].level_data();
    if let (Some(da), Some(db)) = (Dense::of(a), Dense::of(b)) {
        if let Some(product) = dense_mul(&da, &db, level) {
            return product;
        }
    }
    let zero = &zero.lift(both[0][0].level_data()).unwrap_or_else(|_| CycloNumber::zero(both[0][0].level_data()));
    (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let mut acc = zero.clone();
                    for (k, bk) in b.iter().enumerate() {
                        if !a[i][k].is_zero() && !bk[j].is_zero() {
                            acc = &acc + &(&a[i][k] * &bk[j]);
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// The modular identity suite. `positive_unit_row` is dropped for
/// Galois conjugates, where the positive row may move.
pub fn check_identities(md: &ModularData, positive_unit_row: bool) -> Result<()> {
    let r = md.rank();
    let s = &md.s;
    if r == 0 || s.len() != r || s.iter().any(|row| row.len() != r) {
        return Err(convention("shape", format!("S is not {r}×{r}")));
    }
    let zero = CycloNumber::zero(&CycloLevel::get(1));
    let one = CycloNumber::one(&CycloLevel::get(1));
    for i in 0..r {
        for j in 0..i {
            if s[i][j] != s[j][i] {
                return Err(convention("S symmetry", format!("S[{i}][{j}] ≠ S[{j}][{i}]")));
            }
        }
    }
    for (i, t) in md.t.iter().enumerate() {
        if t.as_root_of_unity().is_none() {
            return Err(convention("T roots of unity", format!("T[{i}] = {t}")));
        }
    }
    let sbar_t: Vec<Vec<CycloNumber>> = (0..r).map(|i| (0..r).map(|j| s[j][i].conj()).collect()).collect();
    let unit = mat_mul(s, &sbar_t, &zero);
    for (i, row) in unit.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if *v != if i == j { one.clone() } else { zero.clone() } {
                return Err(convention("unitarity S·S̄ᵀ = 1", format!("entry ({i},{j}) = {v}")));
            }
        }
    }
    let s2 = mat_mul(s, s, &zero);
    for (i, row) in s2.iter().enumerate() {
        let ones = row.iter().filter(|v| **v == one).count();
        let zeros = row.iter().filter(|v| v.is_zero()).count();
        if ones != 1 || zeros != r - 1 {
            return Err(convention("S² permutation", format!("row {i} of S² is not a permutation row")));
        }
    }
    let st: Vec<Vec<CycloNumber>> = s
        .iter()
        .map(|row| row.iter().zip(&md.t).map(|(x, t)| x * t).collect())
        .collect();
    let st3 = mat_mul(&mat_mul(&st, &st, &zero), &st, &zero);
    if st3 != s2 {
        return Err(convention("(ST)³ = S²", "matrices differ".into()));
    }
    if positive_unit_row {
        for (j, v) in s[0].iter().enumerate() {
            match v.to_rational() {
                Some(q) if q > num_rational::BigRational::from_integer(0.into()) => {}
                _ => return Err(convention("positive unit row", format!("S[0][{j}] = {v}"))),
            }
        }
        if md.t[0] != one {
            return Err(convention("unit twist", format!("T[0] = {}", md.t[0])));
        }
    }
    Ok(())
}

/// Exact check that `md.fusion` satisfies the Verlinde formula, in the
/// equivalent form `N_i S = S D_i` with `D_i = diag(S_il / S_0l)`. Needs a
/// unitary `S`, which [`check_identities`] establishes.
pub fn verlinde_check(md: &ModularData) -> Result<()> {
    let r = md.rank();
    let s = common_level(&md.s);
    let inv0: Vec<CycloNumber> = s[0]
        .iter()
        .enumerate()
        .map(|(l, v)| v.inverse().map_err(|_| convention("Verlinde formula", format!("S[0][{l}] = 0"))))
        .collect::<Result<_>>()?;
    let zero = CycloNumber::zero(s[0][0].level_data());
    for i in 0..r {
        let d: Vec<CycloNumber> = (0..r).map(|l| &s[i][l] * &inv0[l]).collect();
        for j in 0..r {
            let outputs: Vec<(usize, i64)> =
                (0..r).filter(|&k| md.fusion[i][j][k] != 0).map(|k| (k, md.fusion[i][j][k] as i64)).collect();
            for l in 0..r {
                let mut lhs = zero.clone();
                for &(k, n) in &outputs {
                    lhs = &lhs + &s[k][l].scale(&n.into(), &1.into());
                }
                if lhs != &s[j][l] * &d[l] {
                    return Err(convention("Verlinde formula", format!("(N_{i} S)[{j}][{l}] ≠ (S D_{i})[{j}][{l}]")));
                }
            }
        }
    }
    Ok(())
}

/// `N_ij^k = Σ_l S_il S_jl S̄_kl / S_0l`, exact. Every entry must be a
/// nonnegative integer.
pub fn verlinde_fusion(md: &ModularData) -> Result<Fusion> {
    let r = md.rank();
    let s = &md.s;
    let inv0: Vec<CycloNumber> = s[0]
        .iter()
        .enumerate()
        .map(|(l, v)| v.inverse().map_err(|_| convention("Verlinde formula", format!("S[0][{l}] = 0"))))
        .collect::<Result<_>>()?;
    let sbar: Vec<Vec<CycloNumber>> = s.iter().map(|row| row.iter().map(|v| v.conj()).collect()).collect();
    let mut out = vec![vec![vec![0u64; r]; r]; r];
    for i in 0..r {
        for j in i..r {
            let w: Vec<CycloNumber> = (0..r).map(|l| &(&s[i][l] * &s[j][l]) * &inv0[l]).collect();
            for k in 0..r {
                let mut acc = CycloNumber::zero(s[0][0].level_data());
                for l in 0..r {
                    acc = &acc + &(&w[l] * &sbar[k][l]);
                }
                let value = acc.to_integer().filter(|v| *v >= BigInt::from(0)).ok_or_else(|| {
                    convention("Verlinde integrality", format!("N_{{{i},{j}}}^{k} = {acc}"))
                })?;
                let v: u64 = value
                    .try_into()
                    .map_err(|_| convention("Verlinde integrality", format!("N_{{{i},{j}}}^{k} is too large")))?;
                out[i][j][k] = v;
                out[j][i][k] = v;
            }
        }
    }
    Ok(out)
}

/// Entrywise `σ_n` on `S` and `T`; labels and fusion are kept.
pub fn conjugate_modular_data(md: &ModularData, n: i64) -> Result<ModularData> {
    if gcd(n.rem_euclid(md.level as i64) as u64, md.level) != 1 {
        return Err(Error::Domain(format!("n = {n} is not coprime to the level {}", md.level)));
    }
    let s = md
        .s
        .iter()
        .map(|row| row.iter().map(|v| v.galois(n)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let t = md.t.iter().map(|v| v.galois(n)).collect::<Result<Vec<_>>>()?;
    Ok(ModularData { labels: md.labels.clone(), s, t, level: md.level, seed: md.seed, fusion: md.fusion.clone() })
}
