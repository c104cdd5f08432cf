//! Integer data attached to a conductor `n`: Euler phi, the cyclotomic
//! polynomial and the reduced coordinates of every power of `ζ_n`.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Distinct prime divisors, ascending.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn euler_phi(n: u64) -> u64 {
    prime_factors(n)
        .into_iter()
        .fold(n, |acc, p| acc / p * (p - 1))
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n) == [n]
}

/// Units of `Z/n`, ascending. For `n = 1` this is `[0]`, the single residue.
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_poly(n: u64) -> Vec<i64> {
    // Φ_n = Π_{d | n} (x^d − 1)^{μ(n/d)}; multiply the positive factors first so
    // every division is exact.
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    let mut num: Vec<i64> = vec![1];
    let mut den: Vec<u64> = Vec::new();
    for &d in &divisors {
        match mobius(n / d) {
            1 => num = mul_xd_minus_one(&num, d as usize),
            -1 => den.push(d),
            _ => {}
        }
    }
    for d in den {
        num = div_xd_minus_one(&num, d as usize);
    }
    num
}

fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn mul_xd_minus_one(p: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + d];
    for (i, &c) in p.iter().enumerate() {
        out[i] -= c;
        out[i + d] += c;
    }
    out
}

fn div_xd_minus_one(p: &[i64], d: usize) -> Vec<i64> {
    // q·(x^d − 1) = p  ⇒  q[i] = q[i − d] − p[i]
    let qlen = p.len() - d;
    let mut q = vec![0i64; qlen];
    for i in 0..qlen {
        let prev = if i >= d { q[i - d] } else { 0 };
        q[i] = prev - p[i];
    }
    debug_assert!(p[qlen..]
        .iter()
        .enumerate()
        .all(|(j, &c)| c == if qlen + j >= d { q[qlen + j - d] } else { 0 }));
    q
}

#[derive(Debug)]
pub struct CycloTable {
    pub n: u64,
    pub phi: usize,
    /// `pow[e][j]` is the coefficient of `ζ^j` in the reduction of `ζ^e`, `0 <= e < n`.
    pub pow: Vec<Vec<i64>>,
}

impl CycloTable {
    fn build(n: u64) -> Self {
        let poly = cyclotomic_poly(n);
        let phi = poly.len() - 1;
        let mut pow = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            pow.push(cur.clone());
            // multiply by ζ and reduce the overflow term with the monic Φ_n
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for (j, slot) in cur.iter_mut().enumerate() {
                    *slot -= top * poly[j];
                }
            }
        }
        CycloTable { n, phi, pow }
    }
}

thread_local! {
    static TABLES: RefCell<HashMap<u64, Rc<CycloTable>>> = RefCell::new(HashMap::new());
}

/// Memoised per thread; the table is a pure function of `n`.
pub fn table(n: u64) -> Rc<CycloTable> {
    TABLES.with(|t| {
        t.borrow_mut()
            .entry(n)
            .or_insert_with(|| Rc::new(CycloTable::build(n)))
            .clone()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        let p105 = cyclotomic_poly(105);
        assert_eq!(p105.len() - 1, 48);
        assert!(p105.contains(&-2));
    }

    #[test]
    fn phi_and_units() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(units_mod(8), vec![1, 3, 5, 7]);
        assert!(is_prime(61));
        assert!(!is_prime(91));
    }

    #[test]
    fn power_table_wraps() {
        let t = table(5);
        assert_eq!(t.pow[4], vec![-1, -1, -1, -1]);
        let t = table(4);
        assert_eq!(t.pow[2], vec![-1, 0]);
        assert_eq!(t.pow[3], vec![0, -1]);
    }
}
