//! Elements of the cyclotomic field Q(ζ_e), stored in the power basis
//! 1, ζ, …, ζ^(φ(e)−1) modulo the e-th cyclotomic polynomial.
//!
//! Rational values are always normalized to order 1, so that mixing a
//! rational constant with an element of any Q(ζ_e) needs no bookkeeping.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloScalar {
    order: u32,
    coords: Vec<Rational>,
}

fn phi_cache() -> &'static RwLock<HashMap<u32, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Coefficients (constant term first) of the e-th cyclotomic polynomial.
pub fn cyclotomic_poly(e: u32) -> Arc<Vec<BigInt>> {
    assert!(e >= 1, "cyclotomic order must be positive");
    if let Some(p) = phi_cache().read().unwrap().get(&e) {
        return p.clone();
    }
    // x^e - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); e as usize + 1];
    num[0] = BigInt::from(-1);
    num[e as usize] = BigInt::one();
    for d in 1..e {
        if e.is_multiple_of(d) {
            let div = cyclotomic_poly(d);
            num = exact_monic_div(&num, &div);
        }
    }
    let p = Arc::new(num);
    phi_cache().write().unwrap().insert(e, p.clone());
    p
}

fn exact_monic_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quo = vec![BigInt::zero(); num.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dn].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &c * dj;
        }
        quo[k] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quo
}

/// Euler's totient.
pub fn totient(e: u32) -> usize {
    cyclotomic_poly(e).len() - 1
}

impl CycloScalar {
    pub fn zero() -> Self {
        CycloScalar { order: 1, coords: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(r: Rational) -> Self {
        if r.is_zero() {
            Self::zero()
        } else {
            CycloScalar { order: 1, coords: vec![r] }
        }
    }

    /// Builds an element of Q(ζ_e) from power-basis coordinates of any length;
    /// the input is reduced modulo Φ_e.
    pub fn from_coords(e: u32, coords: Vec<Rational>) -> Self {
        let mut s = CycloScalar { order: e.max(1), coords };
        s.reduce();
        s
    }

    /// ζ_e^k, reduced.
    pub fn zeta_pow(e: u32, k: i64) -> Self {
        let e = e.max(1);
        let k = k.rem_euclid(e as i64) as usize;
        let mut coords = vec![Rational::zero(); k + 1];
        coords[k] = Rational::one();
        Self::from_coords(e, coords)
    }

    pub fn zeta(e: u32) -> Self {
        Self::zeta_pow(e, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coords.len() == 1 && self.coords[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.coords.len() <= 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coords.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }

    fn reduce(&mut self) {
        let e = self.order;
        if e > 2 {
            let phi = cyclotomic_poly(e);
            let d = phi.len() - 1;
            while self.coords.len() > d {
                let top = self.coords.pop().unwrap();
                if top.is_zero() {
                    continue;
                }
                let base = self.coords.len() - d;
                for (j, pj) in phi.iter().take(d).enumerate() {
                    if !pj.is_zero() {
                        self.coords[base + j] -= &top * Rational::from_integer(pj.clone());
                    }
                }
            }
        } else if e == 2 {
            // ζ = -1
            let mut acc = Rational::zero();
            for (k, c) in self.coords.drain(..).enumerate() {
                if k % 2 == 0 {
                    acc += c;
                } else {
                    acc -= c;
                }
            }
            self.coords.push(acc);
        } else {
            let acc = self.coords.drain(..).fold(Rational::zero(), |a, c| a + c);
            self.coords.push(acc);
        }
        while self.coords.last().is_some_and(|c| c.is_zero()) {
            self.coords.pop();
        }
        if self.coords.len() <= 1 {
            self.order = 1;
        }
    }

    fn common_order(&self, other: &Self) -> u32 {
        match (self.order, other.order) {
            (1, o) | (o, 1) => o,
            (a, b) if a == b => a,
            (a, b) => panic!("mixing elements of Q(ζ_{a}) and Q(ζ_{b})"),
        }
    }

    pub fn conjugate(&self) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let e = self.order as usize;
        let mut out = vec![Rational::zero(); e];
        for (j, c) in self.coords.iter().enumerate() {
            out[(e - j) % e] += c;
        }
        Self::from_coords(self.order, out)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // Solve (multiplication by self) · x = 1 over Q.
        let e = self.order;
        let d = totient(e);
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(d);
        let mut power = Self::one();
        let z = Self::zeta(e);
        for _ in 0..d {
            let prod = self * &power;
            let mut c = prod.coords.clone();
            c.resize(d, Rational::zero());
            cols.push(c);
            power = &power * &z;
        }
        let mut m: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rational> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..d {
            let piv = (col..d).find(|&r| !m[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(col, piv);
            let p = m[col][col].clone();
            for v in m[col].iter_mut() {
                *v /= &p;
            }
            for r in 0..d {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[col].clone();
                    for (v, pv) in m[r].iter_mut().zip(pivot_row.iter()) {
                        *v -= &f * pv;
                    }
                }
            }
        }
        let x = m.into_iter().map(|row| row[d].clone()).collect();
        Ok(Self::from_coords(e, x))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CycloScalar { order: self.order, coords: self.coords.iter().map(|c| c * r).collect() }
    }

    /// Printed form as a polynomial in `z`, the root of Φ_e.
    pub fn to_text(&self) -> String {
        if self.coords.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let zpart = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if zpart.is_empty() {
                out.push_str(&format_rational(&a));
            } else if a.is_one() {
                out.push_str(&zpart);
            } else {
                out.push_str(&format!("{}*{}", format_rational(&a), zpart));
            }
        }
        out
    }
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &CycloScalar {
    type Output = CycloScalar;
    fn add(self, rhs: &CycloScalar) -> CycloScalar {
        let order = self.common_order(rhs);
        let n = self.coords.len().max(rhs.coords.len());
        let mut coords = Vec::with_capacity(n);
        for k in 0..n {
            let v = match (self.coords.get(k), rhs.coords.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            coords.push(v);
        }
        let mut s = CycloScalar { order, coords };
        while s.coords.last().is_some_and(|c| c.is_zero()) {
            s.coords.pop();
        }
        if s.coords.len() <= 1 {
            s.order = 1;
        }
        s
    }
}

impl Sub for &CycloScalar {
    type Output = CycloScalar;
    fn sub(self, rhs: &CycloScalar) -> CycloScalar {
        self + &(-rhs)
    }
}

impl Neg for &CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        CycloScalar { order: self.order, coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloScalar {
    type Output = CycloScalar;
    fn neg(self) -> CycloScalar {
        -&self
    }
}

impl Mul for &CycloScalar {
    type Output = CycloScalar;
    fn mul(self, rhs: &CycloScalar) -> CycloScalar {
        if self.is_zero() || rhs.is_zero() {
            return CycloScalar::zero();
        }
        if self.coords.len() == 1 {
            return rhs.scale(&self.coords[0]);
        }
        if rhs.coords.len() == 1 {
            return self.scale(&rhs.coords[0]);
        }
        let order = self.common_order(rhs);
        let mut coords = vec![Rational::zero(); self.coords.len() + rhs.coords.len() - 1];
        for (i, a) in self.coords.iter().enumerate() {
            for (j, b) in rhs.coords.iter().enumerate() {
                coords[i + j] += a * b;
            }
        }
        let mut s = CycloScalar { order, coords };
        s.reduce();
        s
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloScalar {
            type Output = CycloScalar;
            fn $m(self, rhs: CycloScalar) -> CycloScalar {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn z(e: u32) -> CycloScalar {
        CycloScalar::zeta(e)
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |e| cyclotomic_poly(e).iter().map(|c| i64::try_from(c).unwrap()).collect::<Vec<_>>();
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(2), vec![1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(totient(12), 4);
    }

    #[test]
    fn arithmetic_examples() {
        // e=2: ζ·ζ = 1
        assert!((&z(2) * &z(2)).is_one());
        // e=3: (1+ζ)(1+ζ²) = 1
        let one = CycloScalar::one();
        let a = &one + &z(3);
        let b = &one + &CycloScalar::zeta_pow(3, 2);
        assert!((&a * &b).is_one());
        // e=4: ζ² + 1 = 0
        assert!((&CycloScalar::zeta_pow(4, 2) + &one).is_zero());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(z(2).conjugate(), z(2));
        let expect = CycloScalar::from_coords(3, vec![int(-1), int(-1)]);
        assert_eq!(z(3).conjugate(), expect);
        let r = CycloScalar::from_rational(rat(5, 3));
        assert_eq!(r.conjugate(), r);
    }

    #[test]
    fn division() {
        let a = CycloScalar::from_coords(5, vec![int(2), int(-1), rat(1, 3)]);
        let inv = a.inv().unwrap();
        assert!((&a * &inv).is_one());
        assert_eq!(CycloScalar::zero().inv(), Err(Error::DivisionByZero));
        let q = a.div(&z(5)).unwrap();
        assert_eq!(&q * &z(5), a);
    }

    #[test]
    fn printing() {
        let a = CycloScalar::from_coords(3, vec![int(1), rat(-2, 3)]);
        assert_eq!(a.to_text(), "1 - 2/3*z");
        assert_eq!(z(3).to_text(), "z");
        assert_eq!(CycloScalar::from_int(-4).to_text(), "-4");
    }
}
