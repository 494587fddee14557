//! Rational functions in q and t: the coefficient field of every matrix.
//!
//! Values are kept fully reduced (gcd(num, den) = 1) with a denominator whose
//! leading coefficient is one, so structural equality is mathematical equality.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::cyclo::CycloScalar;
use super::qtpoly::{Mono, QTPoly, Subst};
use super::rational::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QTRational {
    num: QTPoly,
    den: QTPoly,
}

impl Default for QTRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl QTRational {
    pub fn zero() -> Self {
        QTRational { num: QTPoly::zero(), den: QTPoly::one() }
    }

    pub fn one() -> Self {
        QTRational { num: QTPoly::one(), den: QTPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(QTPoly::from_int(n))
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_scalar(CycloScalar::from_rational(r))
    }

    pub fn from_scalar(c: CycloScalar) -> Self {
        Self::from_poly(QTPoly::constant(c))
    }

    pub fn from_poly(p: QTPoly) -> Self {
        QTRational { num: p, den: QTPoly::one() }
    }

    pub fn q() -> Self {
        Self::from_poly(QTPoly::q())
    }

    pub fn t() -> Self {
        Self::from_poly(QTPoly::t())
    }

    /// t^k for any integer k; negative powers live in the denominator.
    pub fn t_pow(k: i64) -> Self {
        let m = QTPoly::monomial(CycloScalar::one(), 0, k.unsigned_abs() as u32);
        if k >= 0 {
            Self::from_poly(m)
        } else {
            QTRational { num: QTPoly::one(), den: m }
        }
    }

    pub fn q_pow(k: u32) -> Self {
        Self::from_poly(QTPoly::monomial(CycloScalar::one(), k, 0))
    }

    /// Builds num/den and reduces it.
    pub fn new(num: QTPoly, den: QTPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: QTPoly, den: QTPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return QTRational { num, den };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.exact_div(&g).expect("gcd divides"), den.exact_div(&g).expect("gcd divides"))
        };
        Self::monic_den(num, den)
    }

    fn monic_den(num: QTPoly, den: QTPoly) -> Self {
        let lc = den.lead_coeff();
        if lc.is_one() {
            QTRational { num, den }
        } else {
            let inv = lc.inv().expect("nonzero");
            QTRational { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn num(&self) -> &QTPoly {
        &self.num
    }

    pub fn den(&self) -> &QTPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&QTPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn as_scalar(&self) -> Option<CycloScalar> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Ok(QTRational { num: base.num.pow(k), den: base.den.pow(k) })
    }

    pub fn scale(&self, c: &CycloScalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QTRational { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn mul_poly(&self, p: &QTPoly) -> Self {
        self * &Self::from_poly(p.clone())
    }

    /// ζ ↦ ζ⁻¹ on all coefficients, q and t fixed.
    pub fn conjugate(&self) -> Self {
        Self::monic_den(self.num.conjugate(), self.den.conjugate())
    }

    /// Substitution; a denominator vanishing identically is a pole.
    pub fn substitute(&self, q: &Subst, t: &Subst) -> Result<Self> {
        let den = self.den.substitute(q, t);
        if den.is_zero() {
            return Err(Error::Pole(describe_subst(q, t)));
        }
        let num = self.num.substitute(q, t);
        Ok(Self::reduce(num, den))
    }

    pub fn at_q_zero(&self) -> Result<Self> {
        self.substitute(&Subst::Value(CycloScalar::zero()), &Subst::Keep)
    }

    pub fn at_q_eq_t(&self) -> Result<Self> {
        self.substitute(&Subst::ToT, &Subst::Keep)
    }

    /// Value at rational (or cyclotomic) q and t.
    pub fn eval(&self, q: &CycloScalar, t: &CycloScalar) -> Result<CycloScalar> {
        let d = self.den.eval(q, t);
        if d.is_zero() {
            return Err(Error::Pole(format!("q:={q}, t:={t}")));
        }
        self.num.eval(q, t).div(&d)
    }

    /// Equality decided by cross-multiplication (independent of normalization).
    pub fn cross_eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn to_text(&self) -> String {
        if self.den.is_one() {
            return self.num.to_text();
        }
        let wrap = |p: &QTPoly| {
            let single = p.len() == 1 && p.lead().is_some_and(|(_, c)| c.is_rational());
            if single {
                p.to_text()
            } else {
                format!("({})", p.to_text())
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }

    /// Sum over all monomials of num and den of the total degree: a crude size measure.
    pub fn weight(&self) -> usize {
        self.num.len() + self.den.len()
    }

    pub fn monomial(c: CycloScalar, dq: u32, dt: u32) -> Self {
        Self::from_poly(QTPoly::monomial(c, dq, dt))
    }

    pub fn lead_mono_den(&self) -> Mono {
        self.den.lead().map(|(m, _)| m).unwrap_or(Mono::ONE)
    }
}

fn describe_subst(q: &Subst, t: &Subst) -> String {
    let d = |s: &Subst, name: &str| match s {
        Subst::Keep => None,
        Subst::ToT => Some(format!("{name}:=t")),
        Subst::Value(v) => Some(format!("{name}:={v}")),
    };
    [d(q, "q"), d(t, "t")].into_iter().flatten().collect::<Vec<_>>().join(", ")
}

impl fmt::Display for QTRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Add for &QTRational {
    type Output = QTRational;
    fn add(self, rhs: &QTRational) -> QTRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return QTRational { num, den: self.den.clone() };
            }
            return QTRational::reduce(num, self.den.clone());
        }
        if self.den.is_one() {
            return QTRational { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() };
        }
        if rhs.den.is_one() {
            return QTRational { num: &self.num + &(&rhs.num * &self.den), den: self.den.clone() };
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return QTRational::monic_den(num, den);
        }
        let b1 = self.den.exact_div(&g).expect("gcd divides");
        let d1 = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &d1) + &(&rhs.num * &b1);
        if num.is_zero() {
            return QTRational::zero();
        }
        let h = num.gcd(&g);
        let (num, g) = if h.is_one() {
            (num, g)
        } else {
            (num.exact_div(&h).unwrap(), g.exact_div(&h).unwrap())
        };
        QTRational::monic_den(num, &(&b1 * &d1) * &g)
    }
}

impl Neg for &QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        QTRational { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for QTRational {
    type Output = QTRational;
    fn neg(self) -> QTRational {
        -&self
    }
}

impl Sub for &QTRational {
    type Output = QTRational;
    fn sub(self, rhs: &QTRational) -> QTRational {
        self + &(-rhs)
    }
}

impl Mul for &QTRational {
    type Output = QTRational;
    fn mul(self, rhs: &QTRational) -> QTRational {
        if self.is_zero() || rhs.is_zero() {
            return QTRational::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return QTRational { num: &self.num * &rhs.num, den: QTPoly::one() };
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.exact_div(&g1).unwrap(), rhs.den.exact_div(&g1).unwrap())
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.exact_div(&g2).unwrap(), self.den.exact_div(&g2).unwrap())
        };
        QTRational::monic_den(&a * &c, &b * &d)
    }
}

impl Div for &QTRational {
    type Output = QTRational;
    /// Panics on division by zero; use [`QTRational::checked_div`] for a `Result`.
    fn div(self, rhs: &QTRational) -> QTRational {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QTRational {
            type Output = QTRational;
            fn $m(self, rhs: QTRational) -> QTRational {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl std::iter::Sum for QTRational {
    fn sum<I: Iterator<Item = QTRational>>(iter: I) -> Self {
        iter.fold(QTRational::zero(), |a, b| &a + &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus(x: QTRational) -> QTRational {
        &QTRational::one() - &x
    }

    #[test]
    fn arithmetic_examples() {
        let q = QTRational::q();
        let t = QTRational::t();
        let a = &one_minus(q.clone()) / &one_minus(t.clone());
        let b = &one_minus(t.clone()) / &one_minus(q.clone());
        assert!((&a * &b).is_one());

        let p = &(&t.pow(3).unwrap() * &q) + &(&t * &q);
        let at = p.at_q_eq_t().unwrap();
        assert_eq!(at, &t.pow(4).unwrap() + &t.pow(2).unwrap());

        let r = &one_minus(q.pow(2).unwrap()) / &one_minus(q.clone());
        let expect = &QTRational::one() + &q;
        assert!(r.cross_eq(&expect));
        assert_eq!(r, expect);
    }

    #[test]
    fn specialization_examples() {
        let q = QTRational::q();
        let t = QTRational::t();
        let f = &one_minus(q.clone()) / &one_minus(t.clone());
        let g = f.at_q_zero().unwrap();
        assert_eq!(g, QTRational::one().checked_div(&one_minus(t.clone())).unwrap());
        let h = QTRational::one().checked_div(&one_minus(q)).unwrap();
        let err = h.substitute(&Subst::Value(CycloScalar::one()), &Subst::Keep);
        assert!(matches!(err, Err(Error::Pole(_))));
    }

    #[test]
    fn text() {
        let t = QTRational::t();
        assert_eq!(QTRational::t_pow(-3).to_text(), "1/t^3");
        let f = &one_minus(QTRational::q()) / &one_minus(t);
        assert_eq!(f.to_text(), "(q - 1)/(t - 1)");
    }

    #[test]
    fn cyclotomic_coefficients() {
        let z = QTRational::from_scalar(CycloScalar::zeta(3));
        let f = &one_minus(&z * &QTRational::q()) / &one_minus(&z * &QTRational::t());
        let g = f.conjugate();
        assert_eq!(g.conjugate(), f);
        let prod = &f * &f.inv().unwrap();
        assert!(prod.is_one());
    }
}
