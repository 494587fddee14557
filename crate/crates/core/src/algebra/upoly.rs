//! Dense univariate polynomials over `CycloScalar`, used as the coefficient
//! ring when a bivariate polynomial is viewed as a polynomial in `t` over K[q].

use std::ops::{Add, Mul, Neg, Sub};

use super::cyclo::CycloScalar;

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UPoly {
    /// Constant term first, no trailing zeros.
    c: Vec<CycloScalar>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn constant(a: CycloScalar) -> Self {
        Self::from_coeffs(vec![a])
    }

    pub fn one() -> Self {
        Self::constant(CycloScalar::one())
    }

    /// c·x^k
    pub fn monomial(a: CycloScalar, k: usize) -> Self {
        let mut c = vec![CycloScalar::zero(); k + 1];
        c[k] = a;
        Self::from_coeffs(c)
    }

    pub fn from_coeffs(mut c: Vec<CycloScalar>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn coeffs(&self) -> &[CycloScalar] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<CycloScalar> {
        self.c
    }

    pub fn coeff(&self, k: usize) -> CycloScalar {
        self.c.get(k).cloned().unwrap_or_else(CycloScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> CycloScalar {
        self.c.last().cloned().unwrap_or_else(CycloScalar::zero)
    }

    /// Lowest power of x with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|x| !x.is_zero())
    }

    pub fn scale(&self, a: &CycloScalar) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        UPoly { c: self.c.iter().map(|x| x * a).collect() }
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![CycloScalar::zero(); k];
        c.extend(self.c.iter().cloned());
        UPoly { c }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lead().inv().expect("nonzero leading coefficient");
        self.scale(&inv)
    }

    /// Division with remainder over the coefficient field.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let inv = d.lead().inv().expect("nonzero leading coefficient");
        let mut rem = self.c.clone();
        let mut quo = vec![CycloScalar::zero(); rem.len() - dd];
        for k in (0..quo.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let f = top * &inv;
            for (j, dj) in d.c.iter().enumerate() {
                let v = &rem[k + j] - &(&f * dj);
                rem[k + j] = v;
            }
            quo[k] = f;
        }
        (Self::from_coeffs(quo), Self::from_coeffs(rem))
    }

    /// Quotient when `d` divides `self` exactly.
    pub fn exact_div(&self, d: &UPoly) -> Option<UPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if !self.is_zero() && !other.is_zero() {
            if let Some(g) = super::modgcd::upoly_gcd(self, other) {
                return g;
            }
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &CycloScalar) -> CycloScalar {
        let mut acc = CycloScalar::zero();
        for a in self.c.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    pub fn pow(&self, k: u32) -> UPoly {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }
}

impl Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        let zero = CycloScalar::zero();
        let c = (0..n)
            .map(|k| self.c.get(k).unwrap_or(&zero) + rhs.c.get(k).unwrap_or(&zero))
            .collect();
        UPoly::from_coeffs(c)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.c.len().max(rhs.c.len());
        let zero = CycloScalar::zero();
        let c = (0..n)
            .map(|k| self.c.get(k).unwrap_or(&zero) - rhs.c.get(k).unwrap_or(&zero))
            .collect();
        UPoly::from_coeffs(c)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;
    fn neg(self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }
}

impl Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut c = vec![CycloScalar::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    let v = &c[i + j] + &(a * b);
                    c[i + j] = v;
                }
            }
        }
        UPoly::from_coeffs(c)
    }
}
