//! Sparse polynomials in q and t with cyclotomic coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::cyclo::CycloScalar;
use super::upoly::UPoly;

/// Exponent pair q^dq t^dt. Ordered graded-lexicographically with q before t.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Mono {
    pub dq: u32,
    pub dt: u32,
}

impl Mono {
    pub const ONE: Mono = Mono { dq: 0, dt: 0 };

    pub fn new(dq: u32, dt: u32) -> Self {
        Mono { dq, dt }
    }

    pub fn degree(self) -> u32 {
        self.dq + self.dt
    }

    pub fn divides(self, other: Mono) -> bool {
        self.dq <= other.dq && self.dt <= other.dt
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.dq).cmp(&(other.degree(), other.dq))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for Mono {
    type Output = Mono;
    fn add(self, o: Mono) -> Mono {
        Mono { dq: self.dq + o.dq, dt: self.dt + o.dt }
    }
}

impl Sub for Mono {
    type Output = Mono;
    fn sub(self, o: Mono) -> Mono {
        Mono { dq: self.dq - o.dq, dt: self.dt - o.dt }
    }
}

/// Value substituted for a variable by [`QTPoly::substitute`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    Keep,
    /// Replace the variable by a constant.
    Value(CycloScalar),
    /// Replace q by t (only meaningful for q).
    ToT,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QTPoly {
    terms: BTreeMap<Mono, CycloScalar>,
}

impl QTPoly {
    pub fn zero() -> Self {
        QTPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(CycloScalar::one())
    }

    pub fn constant(c: CycloScalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(CycloScalar::from_int(n))
    }

    pub fn monomial(c: CycloScalar, dq: u32, dt: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::new(dq, dt), c);
        }
        QTPoly { terms }
    }

    pub fn q() -> Self {
        Self::monomial(CycloScalar::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(CycloScalar::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, CycloScalar)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Mono, c: &CycloScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &CycloScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Mono::ONE).is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Mono::ONE)
    }

    pub fn as_constant(&self) -> Option<CycloScalar> {
        if self.is_zero() {
            Some(CycloScalar::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::ONE).cloned()
        } else {
            None
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, m: Mono) -> CycloScalar {
        self.terms.get(&m).cloned().unwrap_or_else(CycloScalar::zero)
    }

    /// Leading term under the grlex order.
    pub fn lead(&self) -> Option<(Mono, &CycloScalar)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn lead_coeff(&self) -> CycloScalar {
        self.lead().map(|(_, c)| c.clone()).unwrap_or_else(CycloScalar::zero)
    }

    pub fn degree_q(&self) -> u32 {
        self.terms.keys().map(|m| m.dq).max().unwrap_or(0)
    }

    pub fn degree_t(&self) -> u32 {
        self.terms.keys().map(|m| m.dt).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn uses_q(&self) -> bool {
        self.terms.keys().any(|m| m.dq > 0)
    }

    pub fn uses_t(&self) -> bool {
        self.terms.keys().any(|m| m.dt > 0)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else { return Mono::ONE };
        it.fold(*first, |acc, m| Mono::new(acc.dq.min(m.dq), acc.dt.min(m.dt)))
    }

    pub fn mul_mono(&self, m: Mono) -> Self {
        QTPoly { terms: self.terms.iter().map(|(k, c)| (*k + m, c.clone())).collect() }
    }

    /// Divides by a monomial that divides every term.
    pub fn div_mono(&self, m: Mono) -> Self {
        QTPoly { terms: self.terms.iter().map(|(k, c)| (*k - m, c.clone())).collect() }
    }

    pub fn scale(&self, a: &CycloScalar) -> Self {
        if a.is_zero() {
            return Self::zero();
        }
        QTPoly { terms: self.terms.iter().map(|(k, c)| (*k, c * a)).collect() }
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    pub fn conjugate(&self) -> Self {
        QTPoly { terms: self.terms.iter().map(|(k, c)| (*k, c.conjugate())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Swaps the roles of q and t.
    pub fn swap_vars(&self) -> Self {
        QTPoly { terms: self.terms.iter().map(|(k, c)| (Mono::new(k.dt, k.dq), c.clone())).collect() }
    }

    /// Quotient when `d` divides `self` exactly, by multivariate division
    /// under the grlex order.
    pub fn exact_div(&self, d: &QTPoly) -> Option<QTPoly> {
        let (lm, lc) = d.lead().expect("division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            if !self.terms.keys().all(|m| lm.divides(*m)) {
                return None;
            }
            let inv = lc.inv().ok()?;
            return Some(self.div_mono(lm).scale(&inv));
        }
        let inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quo = Self::zero();
        while let Some((rm, rc)) = rem.lead() {
            if !lm.divides(rm) || rm.degree() < lm.degree() {
                return None;
            }
            let shift = rm - lm;
            let f = rc * &inv;
            for (m, c) in d.terms.iter() {
                rem.add_term(*m + shift, &-(&f * c));
            }
            quo.terms.insert(shift, f);
        }
        Some(quo)
    }

    /// View as a polynomial in t with coefficients in K[q]; index = power of t.
    pub fn to_t_major(&self) -> Vec<UPoly> {
        let dt = self.degree_t() as usize;
        let dq = self.degree_q() as usize;
        let mut rows: Vec<Vec<CycloScalar>> = vec![vec![CycloScalar::zero(); dq + 1]; dt + 1];
        for (m, c) in &self.terms {
            rows[m.dt as usize][m.dq as usize] = c.clone();
        }
        let mut out: Vec<UPoly> = rows.into_iter().map(UPoly::from_coeffs).collect();
        while out.last().is_some_and(|p| p.is_zero()) {
            out.pop();
        }
        out
    }

    pub fn from_t_major(rows: &[UPoly]) -> Self {
        let mut terms = BTreeMap::new();
        for (dt, p) in rows.iter().enumerate() {
            for (dq, c) in p.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    terms.insert(Mono::new(dq as u32, dt as u32), c.clone());
                }
            }
        }
        QTPoly { terms }
    }

    /// Univariate polynomial in t (requires that q does not occur).
    pub fn to_upoly_t(&self) -> Option<UPoly> {
        if self.uses_q() {
            return None;
        }
        let mut c = vec![CycloScalar::zero(); self.degree_t() as usize + 1];
        for (m, v) in &self.terms {
            c[m.dt as usize] = v.clone();
        }
        Some(UPoly::from_coeffs(c))
    }

    pub fn from_upoly_t(p: &UPoly) -> Self {
        QTPoly::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (Mono::new(0, k as u32), c.clone())))
    }

    pub fn from_upoly_q(p: &UPoly) -> Self {
        QTPoly::from_terms(p.coeffs().iter().enumerate().map(|(k, c)| (Mono::new(k as u32, 0), c.clone())))
    }

    /// Substitutes values for q and t.
    pub fn substitute(&self, q: &Subst, t: &Subst) -> QTPoly {
        let mut qpow_cache: Vec<CycloScalar> = Vec::new();
        let mut tpow_cache: Vec<CycloScalar> = Vec::new();
        let pow_of = |cache: &mut Vec<CycloScalar>, v: &CycloScalar, k: u32| -> CycloScalar {
            if cache.is_empty() {
                cache.push(CycloScalar::one());
            }
            while cache.len() <= k as usize {
                let next = cache.last().unwrap() * v;
                cache.push(next);
            }
            cache[k as usize].clone()
        };
        let mut out = QTPoly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut dq = 0;
            let mut dt = 0;
            match q {
                Subst::Keep => dq = m.dq,
                Subst::ToT => dt += m.dq,
                Subst::Value(v) => coef = &coef * &pow_of(&mut qpow_cache, v, m.dq),
            }
            match t {
                Subst::Keep => dt += m.dt,
                Subst::ToT => panic!("t cannot be replaced by t"),
                Subst::Value(v) => coef = &coef * &pow_of(&mut tpow_cache, v, m.dt),
            }
            out.add_term(Mono::new(dq, dt), &coef);
        }
        out
    }

    /// Evaluates at constant q and t.
    pub fn eval(&self, q: &CycloScalar, t: &CycloScalar) -> CycloScalar {
        self.substitute(&Subst::Value(q.clone()), &Subst::Value(t.clone()))
            .as_constant()
            .expect("fully substituted")
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &QTPoly) -> QTPoly {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let ma = self.monomial_content();
        let mb = other.monomial_content();
        let mono = Mono::new(ma.dq.min(mb.dq), ma.dt.min(mb.dt));
        let unit = QTPoly::monomial(CycloScalar::one(), mono.dq, mono.dt);
        let a = self.div_mono(ma);
        let b = other.div_mono(mb);
        if a.is_constant() || b.is_constant() {
            return unit;
        }
        if a.monic() == b.monic() {
            return &unit * &a.monic();
        }
        let g = super::modgcd::qt_gcd(&a, &b).unwrap_or_else(|| gcd_no_monomial(&a, &b));
        &unit * &g
    }
}

/// gcd of two nonconstant polynomials with no monomial content.
fn gcd_no_monomial(a: &QTPoly, b: &QTPoly) -> QTPoly {
    let (aq, at, bq, bt) = (a.uses_q(), a.uses_t(), b.uses_q(), b.uses_t());
    // both univariate in the same variable
    if !aq && !bq {
        let g = a.to_upoly_t().unwrap().gcd(&b.to_upoly_t().unwrap());
        return QTPoly::from_upoly_t(&g);
    }
    if !at && !bt {
        let (sa, sb) = (a.swap_vars(), b.swap_vars());
        let g = sa.to_upoly_t().unwrap().gcd(&sb.to_upoly_t().unwrap());
        return QTPoly::from_upoly_q(&g);
    }
    // univariate in different variables (no monomial content): coprime
    if (!aq && !bt) || (!at && !bq) {
        return QTPoly::one();
    }
    // one univariate, the other bivariate
    if !aq || !bq {
        let (uni, bi) = if !aq { (a, b) } else { (b, a) };
        return gcd_univariate_t(&uni.to_upoly_t().unwrap(), bi);
    }
    if !at || !bt {
        let (uni, bi) = if !at { (a, b) } else { (b, a) };
        let g = gcd_univariate_t(&uni.swap_vars().to_upoly_t().unwrap(), &bi.swap_vars());
        return g.swap_vars();
    }
    // main variable: the one with smaller degree keeps the PRS short
    let dt = a.degree_t().max(b.degree_t());
    let dq = a.degree_q().max(b.degree_q());
    if dq < dt {
        prs_gcd(&a.swap_vars(), &b.swap_vars()).swap_vars().monic()
    } else {
        prs_gcd(a, b).monic()
    }
}

/// gcd of u(t) with a bivariate polynomial: u is gcd'd with every q-coefficient.
fn gcd_univariate_t(u: &UPoly, bi: &QTPoly) -> QTPoly {
    let bq = bi.swap_vars().to_t_major(); // index = power of q, entries in K[t]
    let mut g = u.clone();
    for c in &bq {
        if g.is_constant() {
            break;
        }
        g = g.gcd(c);
    }
    QTPoly::from_upoly_t(&g)
}

fn upoly_content(p: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_constant() && !g.is_zero() {
            return UPoly::one();
        }
    }
    g
}

fn primitive_part(p: &[UPoly]) -> Vec<UPoly> {
    let c = upoly_content(p);
    if c.is_constant() {
        // normalize the leading coefficient's leading scalar to 1
        let l = p.last().map(|x| x.lead()).unwrap_or_else(CycloScalar::one);
        let inv = l.inv().expect("nonzero");
        return p.iter().map(|x| x.scale(&inv)).collect();
    }
    p.iter().map(|x| x.exact_div(&c).expect("content divides")).collect()
}

/// Pseudo-remainder of a by b in K[q][t].
fn prem(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let db = b.len() - 1;
    let lb = b[db].clone();
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x = &*x * &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            let v = &r[shift + j] - &(&lr * bj);
            r[shift + j] = v;
        }
        while r.last().is_some_and(|x| x.is_zero()) {
            r.pop();
        }
    }
    r
}

/// Primitive PRS gcd with t as main variable.
fn prs_gcd(a: &QTPoly, b: &QTPoly) -> QTPoly {
    let mut pa = a.to_t_major();
    let mut pb = b.to_t_major();
    let ca = upoly_content(&pa);
    let cb = upoly_content(&pb);
    let c = ca.gcd(&cb);
    pa = primitive_part(&pa);
    pb = primitive_part(&pb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        if pb.is_empty() {
            break;
        }
        if pb.len() == 1 {
            pa = vec![UPoly::one()];
            break;
        }
        let r = prem(&pa, &pb);
        pa = pb;
        pb = if r.is_empty() { r } else { primitive_part(&r) };
    }
    let g = QTPoly::from_t_major(&pa);
    &g * &QTPoly::from_upoly_q(&c)
}

impl Add for &QTPoly {
    type Output = QTPoly;
    fn add(self, rhs: &QTPoly) -> QTPoly {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub for &QTPoly {
    type Output = QTPoly;
    fn sub(self, rhs: &QTPoly) -> QTPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Neg for &QTPoly {
    type Output = QTPoly;
    fn neg(self) -> QTPoly {
        QTPoly { terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

impl Mul for &QTPoly {
    type Output = QTPoly;
    fn mul(self, rhs: &QTPoly) -> QTPoly {
        if self.is_zero() || rhs.is_zero() {
            return QTPoly::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        let mut acc: std::collections::HashMap<Mono, CycloScalar> = std::collections::HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = *ma + *mb;
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v = &*v + &p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        QTPoly { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QTPoly {
            type Output = QTPoly;
            fn $m(self, rhs: QTPoly) -> QTPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn mono_text(m: Mono) -> String {
    let mut parts = Vec::new();
    match m.dt {
        0 => {}
        1 => parts.push("t".to_string()),
        k => parts.push(format!("t^{k}")),
    }
    match m.dq {
        0 => {}
        1 => parts.push("q".to_string()),
        k => parts.push(format!("q^{k}")),
    }
    parts.join("*")
}

impl QTPoly {
    /// Canonical text: highest monomial first, e.g. `t^3*q + t*q`.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in self.terms.iter().rev() {
            let mono = mono_text(*m);
            let (neg, body) = match c.as_rational() {
                Some(r) => {
                    let neg = super::rational::is_negative(&r);
                    let a = if neg { -r } else { r };
                    let s = super::rational::format_rational(&a);
                    let body = if mono.is_empty() {
                        s
                    } else if a == num_traits::One::one() {
                        mono.clone()
                    } else {
                        format!("{s}*{mono}")
                    };
                    (neg, body)
                }
                None => {
                    let s = format!("({})", c.to_text());
                    let body = if mono.is_empty() { s } else { format!("{s}*{mono}") };
                    (false, body)
                }
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

impl fmt::Display for QTPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
