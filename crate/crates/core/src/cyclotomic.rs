//! Exact arithmetic in cyclotomic fields Q(ζ_N).
//!
//! An element is stored as integer numerators over a common positive
//! denominator, in the power basis `1, ζ, …, ζ^{φ(N)-1}` reduced modulo the
//! cyclotomic polynomial Φ_N. The representation is canonical: equal field
//! elements at the same level have identical numerators and denominator.
//! Operands at different levels are lifted to the lcm level before combining.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{divisors, euler_phi, gcd, lcm, mobius, reduce};
use crate::error::{domain, Error, Result};

/// Precomputed data for one level N: Φ_N and the reductions of `x^k` for `k < N`.
#[derive(Debug)]
pub struct CycloLevel {
    n: u64,
    phi: usize,
    /// Coefficients of Φ_N, low to high, monic.
    poly: Vec<i64>,
    /// `powers[k]` = coefficients of `x^k mod Φ_N`.
    powers: Vec<Vec<i64>>,
}

fn poly_mul_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic integer polynomial.
fn poly_div_monic_i64(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() <= db {
        return vec![0];
    }
    let mut quot = vec![0i64; rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db];
        quot[k] = c;
        if c != 0 {
            for (j, &y) in b.iter().enumerate() {
                rem[k + j] -= c * y;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0));
    quot
}

fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // Φ_n = Π_{d | n} (x^d - 1)^{μ(n/d)}
    let mut numer = vec![1i64];
    let mut denom = vec![1i64];
    for d in divisors(n) {
        let mut f = vec![0i64; d as usize + 1];
        f[0] = -1;
        f[d as usize] = 1;
        match mobius(n / d) {
            1 => numer = poly_mul_i64(&numer, &f),
            -1 => denom = poly_mul_i64(&denom, &f),
            _ => {}
        }
    }
    poly_div_monic_i64(&numer, &denom)
}

impl CycloLevel {
    fn build(n: u64) -> CycloLevel {
        assert!(n >= 1, "cyclotomic level must be positive");
        let poly = cyclotomic_polynomial(n);
        let phi = poly.len() - 1;
        debug_assert_eq!(phi as u64, euler_phi(n));
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce the overflow coefficient
            let top = cur[phi - 1];
            for k in (1..phi).rev() {
                cur[k] = cur[k - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for k in 0..phi {
                    cur[k] -= top * poly[k];
                }
            }
        }
        CycloLevel {
            n,
            phi,
            poly,
            powers,
        }
    }

    /// Shared level data for `Q(ζ_n)`.
    pub fn get(n: u64) -> Arc<CycloLevel> {
        #[cfg(feature = "std")]
        {
            use std::collections::BTreeMap;
            use std::sync::{Mutex, OnceLock};
            static CACHE: OnceLock<Mutex<BTreeMap<u64, Arc<CycloLevel>>>> = OnceLock::new();
            let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
            let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
            guard
                .entry(n)
                .or_insert_with(|| Arc::new(CycloLevel::build(n)))
                .clone()
        }
        #[cfg(not(feature = "std"))]
        {
            Arc::new(CycloLevel::build(n))
        }
    }

    /// Like [`CycloLevel::get`] but refuses levels with φ(n) above `max_phi`.
    pub fn checked(n: u64, max_phi: usize) -> Result<Arc<CycloLevel>> {
        if n == 0 {
            return Err(domain!("cyclotomic level must be positive"));
        }
        let phi = euler_phi(n) as usize;
        if phi > max_phi {
            return Err(Error::Size(alloc::format!(
                "level {n} has φ = {phi} above the cap {max_phi}"
            )));
        }
        Ok(CycloLevel::get(n))
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    /// Coefficients of Φ_N, low to high.
    pub fn polynomial(&self) -> &[i64] {
        &self.poly
    }
}

/// An exact element of Q(ζ_N).
#[derive(Clone)]
pub struct CycloNumber {
    level: Arc<CycloLevel>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        if !self.den.is_one() {
            write!(f, "(")?;
        }
        for (k, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z{}^{k}", self.level.n)?,
                (_, false) => write!(f, "{a}*z{}^{k}", self.level.n)?,
            }
        }
        if !self.den.is_one() {
            write!(f, ")/{}", self.den)?;
        }
        Ok(())
    }
}

impl CycloNumber {
    fn from_parts(level: Arc<CycloLevel>, num: Vec<BigInt>, den: BigInt) -> CycloNumber {
        let mut x = CycloNumber { level, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -core::mem::take(&mut self.den);
            for c in self.num.iter_mut() {
                *c = -core::mem::take(c);
            }
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if !g.is_one() {
            for c in self.num.iter_mut() {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero(level: &Arc<CycloLevel>) -> CycloNumber {
        CycloNumber {
            level: level.clone(),
            num: vec![BigInt::zero(); level.phi],
            den: BigInt::one(),
        }
    }

    pub fn one(level: &Arc<CycloLevel>) -> CycloNumber {
        CycloNumber::from_integer(level, 1)
    }

    pub fn from_integer(level: &Arc<CycloLevel>, value: i64) -> CycloNumber {
        CycloNumber::from_rational(level, BigInt::from(value), BigInt::one())
            .expect("denominator is one")
    }

    pub fn from_rational(level: &Arc<CycloLevel>, num: BigInt, den: BigInt) -> Result<CycloNumber> {
        if den.is_zero() {
            return Err(Error::Arithmetic("zero denominator".into()));
        }
        let mut coeffs = vec![BigInt::zero(); level.phi];
        coeffs[0] = num;
        Ok(CycloNumber::from_parts(level.clone(), coeffs, den))
    }

    /// Build from per-coefficient fractions in the power basis.
    pub fn from_fractions(level: &Arc<CycloLevel>, coeffs: &[(BigInt, BigInt)]) -> Result<CycloNumber> {
        if coeffs.len() != level.phi {
            return Err(domain!(
                "level {} needs {} coefficients, got {}",
                level.n,
                level.phi,
                coeffs.len()
            ));
        }
        let mut den = BigInt::one();
        for (_, d) in coeffs {
            if d.is_zero() {
                return Err(Error::Arithmetic("zero denominator".into()));
            }
            den = den.lcm(d);
        }
        let num = coeffs.iter().map(|(n, d)| n * (&den / d)).collect();
        Ok(CycloNumber::from_parts(level.clone(), num, den))
    }

    /// `ζ_N^k`.
    pub fn zeta_power(level: &Arc<CycloLevel>, k: i64) -> CycloNumber {
        let idx = reduce(k, level.n) as usize;
        CycloNumber {
            level: level.clone(),
            num: level.powers[idx].iter().map(|&c| BigInt::from(c)).collect(),
            den: BigInt::one(),
        }
    }

    /// `Σ_k counts[k]·ζ_N^k / den` for an exponent-indexed integer vector of length N.
    pub fn from_power_sum(level: &Arc<CycloLevel>, counts: &[BigInt], den: BigInt) -> CycloNumber {
        debug_assert_eq!(counts.len() as u64, level.n);
        let mut num = vec![BigInt::zero(); level.phi];
        for (k, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (acc, &r) in num.iter_mut().zip(&level.powers[k]) {
                if r != 0 {
                    *acc += c * r;
                }
            }
        }
        CycloNumber::from_parts(level.clone(), num, den)
    }

    /// Same as [`CycloNumber::from_power_sum`] with machine-integer counts.
    pub fn from_small_power_sum(level: &Arc<CycloLevel>, counts: &[i64], den: i64) -> CycloNumber {
        let mut num = vec![0i64; level.phi];
        for (k, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (acc, &r) in num.iter_mut().zip(&level.powers[k]) {
                *acc += c * r;
            }
        }
        CycloNumber::from_parts(
            level.clone(),
            num.into_iter().map(BigInt::from).collect(),
            BigInt::from(den),
        )
    }

    /// From power-basis numerators over a common denominator.
    pub(crate) fn from_basis(level: &Arc<CycloLevel>, num: Vec<BigInt>, den: BigInt) -> CycloNumber {
        debug_assert_eq!(num.len(), level.phi);
        CycloNumber::from_parts(level.clone(), num, den)
    }

    pub fn level(&self) -> u64 {
        self.level.n
    }

    pub fn level_data(&self) -> &Arc<CycloLevel> {
        &self.level
    }

    pub fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Per-coefficient reduced fractions.
    pub fn coefficients(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|n| BigRational::new(n.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(Zero::is_zero)
    }

    /// The rational value when the element lies in Q.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.num[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// The integer value when the element lies in Z.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(|r| r.is_integer())
            .map(|r| r.to_integer())
    }

    /// Re-express at level `target`, which must be a multiple of the current level.
    pub fn lift(&self, target: &Arc<CycloLevel>) -> Result<CycloNumber> {
        if target.n == self.level.n {
            return Ok(self.clone());
        }
        if target.n % self.level.n != 0 {
            return Err(domain!(
                "cannot lift level {} to non-multiple {}",
                self.level.n,
                target.n
            ));
        }
        let step = (target.n / self.level.n) as usize;
        let mut num = vec![BigInt::zero(); target.phi];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (acc, &r) in num.iter_mut().zip(&target.powers[i * step]) {
                if r != 0 {
                    *acc += c * r;
                }
            }
        }
        Ok(CycloNumber {
            level: target.clone(),
            num,
            den: self.den.clone(),
        })
    }

    fn common(a: &CycloNumber, b: &CycloNumber) -> (CycloNumber, CycloNumber) {
        if a.level.n == b.level.n {
            return (a.clone(), b.clone());
        }
        let level = CycloLevel::get(lcm(a.level.n, b.level.n));
        (a.lift(&level).unwrap(), b.lift(&level).unwrap())
    }

    fn add_same(a: &CycloNumber, b: &CycloNumber, negate: bool) -> CycloNumber {
        let num = if a.den == b.den {
            a.num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| if negate { x - y } else { x + y })
                .collect()
        } else {
            a.num
                .iter()
                .zip(&b.num)
                .map(|(x, y)| {
                    let l = x * &b.den;
                    let r = y * &a.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if a.den == b.den {
            a.den.clone()
        } else {
            &a.den * &b.den
        };
        CycloNumber::from_parts(a.level.clone(), num, den)
    }

    fn mul_same(a: &CycloNumber, b: &CycloNumber) -> CycloNumber {
        let level = &a.level;
        let phi = level.phi;
        if a.is_zero() || b.is_zero() {
            return CycloNumber::zero(level);
        }
        if let Some(prod) = Self::mul_small(level, &a.num, &b.num) {
            return CycloNumber::from_parts(level.clone(), prod, &a.den * &b.den);
        }
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.num.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.num.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        // reduce the high part against Φ_N
        for k in (phi..2 * phi - 1).rev() {
            let c = core::mem::take(&mut prod[k]);
            if c.is_zero() {
                continue;
            }
            for (j, &pj) in level.poly[..phi].iter().enumerate() {
                if pj != 0 {
                    prod[k - phi + j] -= &c * pj;
                }
            }
        }
        prod.truncate(phi);
        CycloNumber::from_parts(level.clone(), prod, &a.den * &b.den)
    }

    /// Numerator product in `i128` when every step fits; `None` otherwise.
    fn mul_small(level: &CycloLevel, a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        use num_traits::ToPrimitive;
        let phi = level.phi;
        let small = |v: &[BigInt]| -> Option<Vec<i128>> {
            v.iter().map(|c| c.to_i64().filter(|x| x.unsigned_abs() < 1 << 40).map(i128::from)).collect()
        };
        let (a, b) = (small(a)?, small(b)?);
        let mut prod = vec![0i128; 2 * phi - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = prod[i + j].checked_add(x * y)?;
            }
        }
        for k in (phi..2 * phi - 1).rev() {
            let c = core::mem::take(&mut prod[k]);
            if c == 0 {
                continue;
            }
            for (j, &pj) in level.poly[..phi].iter().enumerate() {
                if pj != 0 {
                    prod[k - phi + j] = prod[k - phi + j].checked_sub(c.checked_mul(pj as i128)?)?;
                }
            }
        }
        prod.truncate(phi);
        Some(prod.into_iter().map(BigInt::from).collect())
    }

    pub fn checked_div(&self, other: &CycloNumber) -> Result<CycloNumber> {
        Ok(self * &other.inverse()?)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_N.
    pub fn inverse(&self) -> Result<CycloNumber> {
        if self.is_zero() {
            return Err(Error::Arithmetic("division by zero".into()));
        }
        let level = &self.level;
        let to_rat = |v: &[BigInt], den: &BigInt| -> Vec<BigRational> {
            v.iter()
                .map(|c| BigRational::new(c.clone(), den.clone()))
                .collect()
        };
        let modulus: Vec<BigRational> = level
            .poly
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect();
        let a = to_rat(&self.num, &self.den);
        // Invariant: s_i * a ≡ r_i (mod Φ).
        let (mut r0, mut r1) = (modulus, poly::trim(a));
        let (mut s0, mut s1) = (Vec::<BigRational>::new(), vec![BigRational::one()]);
        while !(r1.len() == 1) {
            let (q, r) = poly::divmod(&r0, &r1);
            let s2 = poly::sub(&s0, &poly::mul(&q, &s1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                return Err(consistency_zero_divisor());
            }
        }
        let c = r1[0].clone();
        let inv: Vec<BigRational> = s1.iter().map(|x| x / &c).collect();
        let mut den = BigInt::one();
        for x in &inv {
            den = den.lcm(x.denom());
        }
        let mut num = vec![BigInt::zero(); level.phi];
        for (k, x) in inv.iter().enumerate() {
            num[k] = x.numer() * (&den / x.denom());
        }
        Ok(CycloNumber::from_parts(level.clone(), num, den))
    }

    /// The automorphism σ_n: ζ_N ↦ ζ_N^n.
    pub fn galois(&self, n: i64) -> Result<CycloNumber> {
        let big_n = self.level.n;
        let nn = reduce(n, big_n);
        if gcd(nn, big_n) != 1 && big_n > 1 {
            return Err(domain!("σ_{n} is undefined on Q(ζ_{big_n}): gcd ≠ 1"));
        }
        let mut num = vec![BigInt::zero(); self.level.phi];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let k = (i as u64 * nn % big_n) as usize;
            for (acc, &r) in num.iter_mut().zip(&self.level.powers[k]) {
                if r != 0 {
                    *acc += c * r;
                }
            }
        }
        Ok(CycloNumber {
            level: self.level.clone(),
            num,
            den: self.den.clone(),
        })
    }

    /// Complex conjugation, σ_{-1}.
    pub fn conj(&self) -> CycloNumber {
        self.galois(-1).expect("-1 is a unit")
    }

    /// Multiply by a rational `num/den`.
    pub fn scale(&self, num: &BigInt, den: &BigInt) -> CycloNumber {
        CycloNumber::from_parts(
            self.level.clone(),
            self.num.iter().map(|c| c * num).collect(),
            &self.den * den,
        )
    }

    pub fn pow(&self, mut e: u64) -> CycloNumber {
        let mut base = self.clone();
        let mut acc = CycloNumber::one(&self.level);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// When the element is a root of unity, its additive μ-representative.
    pub fn as_root_of_unity(&self) -> Option<MuElement> {
        if !self.den.is_one() {
            return None;
        }
        let n = self.level.n;
        for k in 0..n {
            let p = &self.level.powers[k as usize];
            if self.num.iter().zip(p).all(|(a, &b)| *a == BigInt::from(b)) {
                return Some(MuElement::new(k as i64, n));
            }
            if self.num.iter().zip(p).all(|(a, &b)| *a == BigInt::from(-b)) {
                // -ζ_N^k = ζ_{2N}^{2k+N}
                return Some(MuElement::new(2 * k as i64 + n as i64, 2 * n));
            }
        }
        None
    }

    /// Smallest level `d | N` whose field contains this element (odd `d` preferred
    /// to `2d`, since Q(ζ_d) = Q(ζ_{2d}) for odd d), and the element there.
    pub fn reduce_level(&self) -> CycloNumber {
        let n = self.level.n;
        for d in divisors(n) {
            if d % 4 == 2 {
                continue;
            }
            // Fixed by {σ_k : k ≡ 1 mod d} ⇔ in Q(ζ_d).
            let fixed = (0..n)
                .filter(|&k| k % d == 1 % d && gcd(k, n) == 1)
                .all(|k| &self.galois(k as i64).unwrap() == self);
            if fixed {
                if let Some(x) = self.descend(d) {
                    return x;
                }
            }
        }
        self.clone()
    }

    fn descend(&self, d: u64) -> Option<CycloNumber> {
        let small = CycloLevel::get(d);
        let step = (self.level.n / d) as usize;
        // Columns: images of the small power basis; solve for coefficients over Q.
        let rows = self.level.phi;
        let cols = small.phi;
        let mut m: Vec<Vec<BigRational>> = (0..rows)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..cols)
                    .map(|c| BigRational::from_integer(BigInt::from(self.level.powers[c * step][r])))
                    .collect();
                row.push(BigRational::new(self.num[r].clone(), self.den.clone()));
                row
            })
            .collect();
        let pivots = poly::rref(&mut m, cols + 1);
        if pivots.contains(&cols) {
            return None;
        }
        let mut fr = vec![(BigInt::zero(), BigInt::one()); cols];
        for (r, &pc) in pivots.iter().enumerate() {
            fr[pc] = (m[r][cols].numer().clone(), m[r][cols].denom().clone());
        }
        CycloNumber::from_fractions(&small, &fr).ok()
    }

    /// Approximate complex value (diagnostics only).
    #[cfg(feature = "std")]
    pub fn to_complex(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let n = self.level.n as f64;
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let angle = 2.0 * core::f64::consts::PI * k as f64 / n;
            re += c * angle.cos();
            im += c * angle.sin();
        }
        (re, im)
    }
}

fn consistency_zero_divisor() -> Error {
    Error::Consistency("Φ_N shares a factor with a nonzero element".into())
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.level.n == other.level.n {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = CycloNumber::common(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycloNumber {}

impl PartialOrd for CycloNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CycloNumber {
    /// Lexicographic on power-basis coefficients at the common level.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = CycloNumber::common(self, other);
        for (x, y) in a.num.iter().zip(&b.num) {
            let o = (x * &b.den).cmp(&(y * &a.den));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    }
}

impl<'a> Add<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        if self.level.n == rhs.level.n {
            CycloNumber::add_same(self, rhs, false)
        } else {
            let (a, b) = CycloNumber::common(self, rhs);
            CycloNumber::add_same(&a, &b, false)
        }
    }
}

impl<'a> Sub<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        if self.level.n == rhs.level.n {
            CycloNumber::add_same(self, rhs, true)
        } else {
            let (a, b) = CycloNumber::common(self, rhs);
            CycloNumber::add_same(&a, &b, true)
        }
    }
}

impl<'a> Mul<&'a CycloNumber> for &'a CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        if self.level.n == rhs.level.n {
            CycloNumber::mul_same(self, rhs)
        } else {
            let (a, b) = CycloNumber::common(self, rhs);
            CycloNumber::mul_same(&a, &b)
        }
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            level: self.level.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// The four field operations of [`cyclo_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycloOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Apply one field operation, lifting to the lcm level.
pub fn cyclo_arith(a: &CycloNumber, b: &CycloNumber, op: CycloOp) -> Result<CycloNumber> {
    Ok(match op {
        CycloOp::Add => a + b,
        CycloOp::Sub => a - b,
        CycloOp::Mul => a * b,
        CycloOp::Div => a.checked_div(b)?,
    })
}

/// An element of μ ≅ Q/Z written additively as a reduced fraction `num/den`, `0 <= num < den`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MuElement {
    num: u64,
    den: u64,
}

impl MuElement {
    pub fn new(num: i64, den: u64) -> MuElement {
        assert!(den > 0, "μ element needs a positive denominator");
        let a = reduce(num, den);
        let g = gcd(a, den);
        let g = if g == 0 { den } else { g };
        MuElement {
            num: a / g,
            den: den / g,
        }
    }

    pub fn zero() -> MuElement {
        MuElement { num: 0, den: 1 }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    /// Additive order, equal to the reduced denominator.
    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn scale(&self, k: i64) -> MuElement {
        let prod = (self.num as i128 * k as i128).rem_euclid(self.den as i128) as i64;
        MuElement::new(prod, self.den)
    }

    /// The residue `x·m` in Z/m; `None` when the order does not divide `m`.
    pub fn to_residue(&self, m: u64) -> Option<u64> {
        (m % self.den == 0).then(|| self.num * (m / self.den))
    }
}

impl Add for MuElement {
    type Output = MuElement;
    fn add(self, rhs: MuElement) -> MuElement {
        let d = lcm(self.den, rhs.den);
        MuElement::new(
            (self.num * (d / self.den) + rhs.num * (d / rhs.den)) as i64,
            d,
        )
    }
}

impl Neg for MuElement {
    type Output = MuElement;
    fn neg(self) -> MuElement {
        MuElement::new(-(self.num as i64), self.den)
    }
}

/// `x = a/b ↦ exp(2πi x) = ζ_b^a`.
pub fn root_embed(x: MuElement) -> CycloNumber {
    CycloNumber::zeta_power(&CycloLevel::get(x.den), x.num as i64)
}

/// Apply σ_n.
pub fn galois_sigma(n: i64, z: &CycloNumber) -> Result<CycloNumber> {
    z.galois(n)
}

/// The action `x ↦ n^i·x` of a cyclotomic Galois element on μ^{⊗i} modulo `modulus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisTwist {
    modulus: u64,
    unit: u64,
    exponent: u32,
}

impl GaloisTwist {
    pub fn new(modulus: u64, unit: i64, exponent: u32) -> Result<GaloisTwist> {
        if modulus == 0 {
            return Err(domain!("Galois twist modulus must be positive"));
        }
        let n = reduce(unit, modulus);
        if gcd(n, modulus) != 1 && modulus > 1 {
            return Err(domain!("{unit} is not a unit modulo {modulus}"));
        }
        Ok(GaloisTwist {
            modulus,
            unit: n,
            exponent,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn unit(&self) -> u64 {
        self.unit
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `n^i mod modulus`.
    pub fn factor(&self) -> u64 {
        crate::arith::pow_mod(self.unit, self.exponent as u64, self.modulus)
    }
}

/// Dense polynomial helpers over Q (coefficients low to high, trimmed).
pub(crate) mod poly {
    use super::*;

    pub fn trim(mut a: Vec<BigRational>) -> Vec<BigRational> {
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        a
    }

    pub fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let z = BigRational::zero();
        trim(
            (0..n)
                .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(out)
    }

    pub fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = trim(a.to_vec());
        let db = b.len() - 1;
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let lead = b[db].clone();
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + db] / &lead;
            if !c.is_zero() {
                for (j, y) in b.iter().enumerate() {
                    rem[k + j] -= &c * y;
                }
            }
            quot[k] = c;
        }
        (trim(quot), trim(rem))
    }

    /// Row-reduce a rational matrix with `cols` columns; returns pivot columns.
    pub fn rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
        let rows = m.len();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, pr);
            let inv = m[r][c].recip();
            for x in m[r].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = m[r].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i != r && !row[c].is_zero() {
                    let f = row[c].clone();
                    for (x, y) in row.iter_mut().zip(&pivot_row) {
                        *x = &*x - &(&f * y);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }
}
