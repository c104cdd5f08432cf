//! Exact arithmetic in cyclotomic fields `Q(ζ_n)`.
//!
//! A [`CycNum`] stores rational coordinates in the power basis
//! `1, ζ_n, …, ζ_n^{φ(n)−1}` modulo the `n`-th cyclotomic polynomial, with `n`
//! always the minimal conductor of the value. Equality is therefore structural.

mod galois;
mod poly;
pub mod table;

pub use galois::{GaloisAut, SubfieldSpec};
pub use poly::CycPoly;

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use table::{lcm, prime_factors, table};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} is not compatible with {1}")]
    IncompatibleConductor(u64, u64),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("malformed cyclotomic value: {0}")]
    Malformed(String),
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycNum {
    n: u64,
    coeffs: Vec<BigRational>,
}

fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// Reduce a vector of coefficients of `ζ_n^e`, `0 <= e < n`, to the power basis.
fn reduce_root_sums(n: u64, sums: &[BigRational]) -> Vec<BigRational> {
    let t = table(n);
    let mut out = vec![BigRational::zero(); t.phi];
    for (e, c) in sums.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if e < t.phi {
            out[e] += c;
            continue;
        }
        for (j, &w) in t.pow[e].iter().enumerate() {
            match w {
                0 => {}
                1 => out[j] += c,
                -1 => out[j] -= c,
                w => out[j] += c * rat(w),
            }
        }
    }
    out
}

/// Coordinates of a conductor-`m` value inside `Q(ζ_n)`, `m | n`.
fn embed_coeffs(m: u64, coeffs: &[BigRational], n: u64) -> Vec<BigRational> {
    if m == n {
        return coeffs.to_vec();
    }
    let step = n / m;
    let mut sums = vec![BigRational::zero(); n as usize];
    for (j, c) in coeffs.iter().enumerate() {
        if !c.is_zero() {
            sums[(j as u64 * step % n) as usize] += c;
        }
    }
    reduce_root_sums(n, &sums)
}

/// `p` divides `n` exactly once: project onto `Q(ζ_{n/p})` with the trace of
/// `Q(ζ_n)/Q(ζ_{n/p})` and keep the result only if it reproduces the input.
fn project_down(n: u64, p: u64, coeffs: &[BigRational]) -> Option<Vec<BigRational>> {
    let m = n / p;
    // ζ_n = ζ_p^u ζ_m^v with u·m + v·p = 1
    let v = if m == 1 { 0 } else { modinv(p % m, m) };
    let minus = -BigRational::new(BigInt::one(), BigInt::from(p - 1));
    let mut sums = vec![BigRational::zero(); m as usize];
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let slot = ((v * e as u64) % m) as usize;
        if e as u64 % p == 0 {
            sums[slot] += c;
        } else {
            sums[slot] += c * &minus;
        }
    }
    let y = reduce_root_sums(m, &sums);
    if embed_coeffs(m, &y, n) == coeffs {
        Some(y)
    } else {
        None
    }
}

pub(crate) fn modinv(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} is not invertible mod {m}");
    old_s.rem_euclid(m as i128) as u64
}

fn minimize(mut n: u64, mut c: Vec<BigRational>) -> CycNum {
    'outer: loop {
        if n == 1 {
            break;
        }
        if c[1..].iter().all(Zero::is_zero) {
            c.truncate(1);
            n = 1;
            break;
        }
        for p in prime_factors(n) {
            let m = n / p;
            if m % p == 0 {
                let pu = p as usize;
                if c.iter().enumerate().all(|(i, x)| i % pu == 0 || x.is_zero()) {
                    c = c.into_iter().step_by(pu).collect();
                    n = m;
                    continue 'outer;
                }
            } else if let Some(y) = project_down(n, p, &c) {
                c = y;
                n = m;
                continue 'outer;
            }
        }
        break;
    }
    CycNum { n, coeffs: c }
}

impl CycNum {
    pub fn zero() -> Self {
        CycNum { n: 1, coeffs: vec![BigRational::zero()] }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(i: i64) -> Self {
        CycNum { n: 1, coeffs: vec![rat(i)] }
    }

    pub fn from_rational(q: BigRational) -> Self {
        CycNum { n: 1, coeffs: vec![q] }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `ζ_n^e` for any integer exponent.
    pub fn root_of_unity(n: u64, e: i64) -> Self {
        assert!(n > 0, "conductor must be positive");
        let e = e.rem_euclid(n as i64) as usize;
        let mut sums = vec![BigRational::zero(); n as usize];
        sums[e] = BigRational::one();
        Self::from_root_sums(n, sums)
    }

    pub fn zeta(n: u64) -> Self {
        Self::root_of_unity(n, 1)
    }

    /// Build `Σ_e sums[e]·ζ_n^e` from a length-`n` coefficient vector.
    pub fn from_root_sums(n: u64, sums: Vec<BigRational>) -> Self {
        assert_eq!(sums.len() as u64, n);
        minimize(n, reduce_root_sums(n, &sums))
    }

    /// Build from power-basis coordinates in `Q(ζ_n)`; `terms` are `(exponent,
    /// coefficient)` pairs with any exponent, reduced on the way in.
    pub fn from_terms(n: u64, terms: &[(u64, BigRational)]) -> Self {
        assert!(n > 0, "conductor must be positive");
        let mut sums = vec![BigRational::zero(); n as usize];
        for (e, c) in terms {
            sums[(e % n) as usize] += c;
        }
        Self::from_root_sums(n, sums)
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Power-basis coordinates (length `φ(conductor)`).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Nonzero power-basis terms, exponents increasing.
    pub fn terms(&self) -> Vec<(u64, BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as u64, c.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.n == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Rational integer value, if the number is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// The minimal conductor; kept for API symmetry since values are always stored reduced.
    pub fn reduce_conductor(&self) -> u64 {
        self.n
    }

    /// Coordinates of this value inside `Q(ζ_n)`. Fails if the conductor does not divide `n`.
    pub fn coords_in(&self, n: u64) -> Result<Vec<BigRational>, CycError> {
        if n % self.n != 0 {
            return Err(CycError::IncompatibleConductor(self.n, n));
        }
        Ok(embed_coeffs(self.n, &self.coeffs, n))
    }

    /// Inverse of [`CycNum::coords_in`].
    pub fn from_coords(n: u64, coords: Vec<BigRational>) -> Self {
        assert_eq!(coords.len(), table(n).phi);
        minimize(n, coords)
    }

    fn binary(
        &self,
        other: &Self,
        f: impl FnOnce(u64, Vec<BigRational>, Vec<BigRational>) -> Vec<BigRational>,
    ) -> Self {
        let n = lcm(self.n, other.n);
        let a = embed_coeffs(self.n, &self.coeffs, n);
        let b = embed_coeffs(other.n, &other.coeffs, n);
        minimize(n, f(n, a, b))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.n == 1 && other.n == 1 {
            return Self::from_rational(&self.coeffs[0] * &other.coeffs[0]);
        }
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.n == 1 || other.n == 1 {
            let (q, x) = if self.n == 1 { (&self.coeffs[0], other) } else { (&other.coeffs[0], self) };
            let coeffs = x.coeffs.iter().map(|c| c * q).collect();
            return CycNum { n: x.n, coeffs };
        }
        self.binary(other, |n, a, b| {
            let mut sums = vec![BigRational::zero(); n as usize];
            for (i, x) in a.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (j, y) in b.iter().enumerate() {
                    if !y.is_zero() {
                        sums[(i + j) % n as usize] += x * y;
                    }
                }
            }
            reduce_root_sums(n, &sums)
        })
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.n == 1 && other.n == 1 {
            return Self::from_rational(&self.coeffs[0] + &other.coeffs[0]);
        }
        self.binary(other, |_, mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        })
    }

    fn sub_ref(&self, other: &Self) -> Self {
        if self.n == 1 && other.n == 1 {
            return Self::from_rational(&self.coeffs[0] - &other.coeffs[0]);
        }
        self.binary(other, |_, mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x -= y;
            }
            a
        })
    }

    /// Multiplicative inverse, by solving `self · x = 1` in the power basis.
    pub fn inv(&self) -> Result<Self, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if self.n == 1 {
            return Ok(Self::from_rational(self.coeffs[0].recip()));
        }
        let n = self.n;
        let phi = self.coeffs.len();
        // column j holds the coordinates of self·ζ^j
        let mut cols: Vec<Vec<BigRational>> = Vec::with_capacity(phi);
        for j in 0..phi {
            let mut sums = vec![BigRational::zero(); n as usize];
            for (i, c) in self.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    sums[(i + j) % n as usize] += c;
                }
            }
            cols.push(reduce_root_sums(n, &sums));
        }
        let mut aug: Vec<Vec<BigRational>> = (0..phi)
            .map(|r| {
                let mut row: Vec<BigRational> = (0..phi).map(|c| cols[c][r].clone()).collect();
                row.push(if r == 0 { BigRational::one() } else { BigRational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi)
                .find(|&r| !aug[r][col].is_zero())
                .expect("multiplication by a nonzero field element is invertible");
            aug.swap(col, piv);
            let inv = aug[col][col].recip();
            for x in aug[col].iter_mut() {
                *x *= &inv;
            }
            let pivot_row = aug[col].clone();
            for (r, row) in aug.iter_mut().enumerate() {
                if r == col || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        let x = aug.into_iter().map(|mut row| row.pop().unwrap()).collect();
        Ok(minimize(n, x))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CycError> {
        Ok(self.mul_ref(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<Self, CycError> {
        let mut base = if e < 0 { self.inv()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_ref(&base);
            }
            base = base.mul_ref(&base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// The automorphism `ζ_n ↦ ζ_n^k` of `Q(ζ_n)`, `n` a multiple of the conductor.
    pub(crate) fn apply_unit(&self, k: u64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n;
        let k = k % n;
        let mut sums = vec![BigRational::zero(); n as usize];
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                sums[(k * e as u64 % n) as usize] += c;
            }
        }
        minimize(n, reduce_root_sums(n, &sums))
    }

    /// Complex conjugate (the automorphism `ζ ↦ ζ^{-1}`).
    pub fn conj(&self) -> Self {
        if self.n <= 2 {
            return self.clone();
        }
        self.apply_unit(self.n - 1)
    }

    /// Field norm down to `Q` — product of all Galois conjugates.
    pub fn norm(&self) -> BigRational {
        if self.n == 1 {
            return self.coeffs[0].clone();
        }
        let prod = table::units_mod(self.n)
            .into_iter()
            .fold(Self::one(), |acc, k| acc.mul_ref(&self.apply_unit(k)));
        prod.to_rational().expect("norm is rational")
    }

    /// Numerical value `(re, im)` under `ζ_n ↦ exp(2πi/n)`. Diagnostic only.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (e, c) in self.coeffs.iter().enumerate() {
            let v = ratio_to_f64(c);
            let a = 2.0 * std::f64::consts::PI * e as f64 / self.n as f64;
            re += v * a.cos();
            im += v * a.sin();
        }
        (re, im)
    }
}

fn ratio_to_f64(q: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(f64::NAN)
}

impl Default for CycNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycNum {
    fn from(i: i64) -> Self {
        Self::from_integer(i)
    }
}

impl From<BigRational> for CycNum {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                self.$imp(rhs)
            }
        }
        impl $tr<CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$imp(&rhs)
            }
        }
        impl $tr<&CycNum> for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                self.$imp(rhs)
            }
        }
        impl $tr<CycNum> for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                self.$imp(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

/// Panics on division by zero; use [`CycNum::checked_div`] for a `Result`.
impl Div<&CycNum> for &CycNum {
    type Output = CycNum;
    fn div(self, rhs: &CycNum) -> CycNum {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div<CycNum> for CycNum {
    type Output = CycNum;
    fn div(self, rhs: CycNum) -> CycNum {
        &self / &rhs
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(mut self) -> CycNum {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -self.clone()
    }
}

impl AddAssign<&CycNum> for CycNum {
    fn add_assign(&mut self, rhs: &CycNum) {
        if self.n == 1 && rhs.n == 1 {
            self.coeffs[0] += &rhs.coeffs[0];
        } else if self.n == rhs.n && self.n > 1 {
            for (x, y) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                *x += y;
            }
            let c = std::mem::take(&mut self.coeffs);
            *self = minimize(self.n, c);
        } else {
            *self = self.add_ref(rhs);
        }
    }
}

impl SubAssign<&CycNum> for CycNum {
    fn sub_assign(&mut self, rhs: &CycNum) {
        if self.n == 1 && rhs.n == 1 {
            self.coeffs[0] -= &rhs.coeffs[0];
        } else {
            *self = self.sub_ref(rhs);
        }
    }
}

impl std::iter::Sum for CycNum {
    fn sum<I: Iterator<Item = CycNum>>(iter: I) -> CycNum {
        iter.fold(CycNum::zero(), |mut a, b| {
            a += &b;
            a
        })
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i > 0 {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            } else if neg {
                write!(f, "-")?;
            }
            match (*e, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "z{}", self.n)?,
                (1, false) => write!(f, "{a}*z{}", self.n)?,
                (e, true) => write!(f, "z{}^{e}", self.n)?,
                (e, false) => write!(f, "{a}*z{}^{e}", self.n)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64, e: i64) -> CycNum {
        CycNum::root_of_unity(n, e)
    }

    #[test]
    fn primitive_cube_roots_sum_to_minus_one() {
        assert_eq!(z(3, 1) + z(3, 2), CycNum::from(-1));
    }

    #[test]
    fn conductor_is_minimised() {
        assert_eq!(z(6, 2), z(3, 1));
        assert_eq!(z(6, 1).conductor(), 3);
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(12, 3), z(4, 1));
        assert_eq!(z(2, 1), CycNum::from(-1));
        // ζ₈ + ζ₈⁻¹ = √2 stays at conductor 8
        let s = z(8, 1) + z(8, 7);
        assert_eq!(s.conductor(), 8);
        assert_eq!(&s * &s, CycNum::from(2));
        // ζ₁₅⁵ = ζ₃
        assert_eq!(z(15, 5), z(3, 1));
        assert_eq!((z(15, 1) * z(15, 14)).conductor(), 1);
    }

    #[test]
    fn inverse_and_division() {
        let a = CycNum::from(2) + z(5, 1);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(CycNum::zero().inv(), Err(CycError::DivisionByZero));
        assert_eq!(z(7, 3).pow(-3).unwrap(), z(7, -9));
    }

    #[test]
    fn conjugation_and_norm() {
        assert_eq!(z(5, 1).conj(), z(5, 4));
        assert_eq!((CycNum::one() + z(4, 1)).norm(), BigRational::from_integer(2.into()));
    }

    #[test]
    fn display() {
        assert_eq!(format!("{}", z(3, 1)), "z3");
        assert_eq!(format!("{}", z(3, 2)), "-1 - z3");
        assert_eq!(format!("{}", CycNum::from_ratio(-1, 2)), "-1/2");
    }
}
