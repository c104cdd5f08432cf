use std::fmt;

use super::{CycError, CycNum};

/// Dense univariate polynomial over the cyclotomic numbers, constant term first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycPoly {
    coeffs: Vec<CycNum>,
}

impl CycPoly {
    pub fn new(mut coeffs: Vec<CycNum>) -> Self {
        while coeffs.last().is_some_and(CycNum::is_zero) {
            coeffs.pop();
        }
        CycPoly { coeffs }
    }

    pub fn zero() -> Self {
        CycPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: CycNum) -> Self {
        Self::new(vec![c])
    }

    /// `T − root`.
    pub fn linear(root: &CycNum) -> Self {
        Self::new(vec![-root, CycNum::one()])
    }

    /// `Π (T − r)` over the given roots (with repetition).
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a CycNum>) -> Self {
        roots
            .into_iter()
            .fold(Self::constant(CycNum::one()), |acc, r| &acc * &Self::linear(r))
    }

    pub fn coeffs(&self) -> &[CycNum] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&CycNum> {
        self.coeffs.last()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &CycNum::from(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &CycNum) -> CycNum {
        self.coeffs
            .iter()
            .rev()
            .fold(CycNum::zero(), |acc, c| &(&acc * x) + c)
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &CycPoly) -> Result<(CycPoly, CycPoly), CycError> {
        let dd = d.degree().ok_or(CycError::ZeroPolynomial)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((CycPoly::zero(), self.clone()));
        }
        let mut q = vec![CycNum::zero(); r.len() - dd];
        for i in (dd..r.len()).rev() {
            if r[i].is_zero() {
                continue;
            }
            let f = &r[i] * &lead_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let slot = &mut r[i - dd + j];
                *slot = &*slot - &(&f * dc);
            }
            q[i - dd] = f;
        }
        r.truncate(dd);
        Ok((CycPoly::new(q), CycPoly::new(r)))
    }

    pub fn rem(&self, d: &CycPoly) -> Result<CycPoly, CycError> {
        Ok(self.div_rem(d)?.1)
    }

    /// Whether `self` has a root of multiplicity exactly one, decided by
    /// `f ∤ f′²`.
    pub fn has_simple_root(&self) -> Result<bool, CycError> {
        if self.is_zero() {
            return Err(CycError::ZeroPolynomial);
        }
        let d = self.derivative();
        let d2 = &d * &d;
        Ok(!d2.rem(self)?.is_zero())
    }

    /// Multiplicity of `root` as a root, by repeated synthetic division.
    pub fn root_multiplicity(&self, root: &CycNum) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut mult = 0;
        let mut cur = self.clone();
        loop {
            if cur.is_zero() || !cur.eval(root).is_zero() {
                return mult;
            }
            // synthetic division by (T − root)
            let n = cur.coeffs.len();
            let mut q = vec![CycNum::zero(); n - 1];
            let mut carry = CycNum::zero();
            for i in (1..n).rev() {
                carry = &cur.coeffs[i] + &(&carry * root);
                q[i - 1] = carry.clone();
            }
            cur = CycPoly::new(q);
            mult += 1;
        }
    }
}

impl std::ops::Mul<&CycPoly> for &CycPoly {
    type Output = CycPoly;
    fn mul(self, rhs: &CycPoly) -> CycPoly {
        if self.is_zero() || rhs.is_zero() {
            return CycPoly::zero();
        }
        let mut out = vec![CycNum::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        CycPoly::new(out)
    }
}

impl fmt::Debug for CycPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("({c})"),
                1 => format!("({c})T"),
                _ => format!("({c})T^{i}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
