//! Polynomials in the finite variable set x_j^(k), 0 ≤ k < e, 1 ≤ j ≤ m_k,
//! and the g and Hall–Littlewood functions built in them.

use std::collections::BTreeMap;

use super::symfunc::{Basis, SymFunc};
use crate::algebra::qtpoly::QTPoly;
use crate::algebra::{CycloScalar, QTRational, Subst};
use crate::combinat::{EPartition, MShape, Partition, Sign};
use crate::error::{Error, Result};

/// Sparse polynomial in `nvars` commuting variables with rational-function coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, QTRational>,
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: QTRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], &c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, QTRational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut ex = vec![0; nvars];
        ex[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(ex, &QTRational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &QTRational)> {
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

    pub fn coeff(&self, ex: &[u32]) -> QTRational {
        self.terms.get(ex).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, ex: Vec<u32>, c: &QTRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&ex) {
            Some(v) => {
                let s = &*v + c;
                if s.is_zero() {
                    self.terms.remove(&ex);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(ex, c.clone());
            }
        }
    }

    pub fn add(&self, o: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (ex, c) in &o.terms {
            out.add_term(ex.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &MPoly) -> MPoly {
        self.add(&o.scale(&QTRational::from_int(-1)))
    }

    pub fn scale(&self, c: &QTRational) -> MPoly {
        let mut out = Self::zero(self.nvars);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(ex, v)| (ex.clone(), v * c)).collect();
        }
        out
    }

    pub fn mul(&self, o: &MPoly) -> MPoly {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let ex = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(ex, &(ca * cb));
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> MPoly {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTRational) -> Result<QTRational>) -> Result<MPoly> {
        let mut out = Self::zero(self.nvars);
        for (ex, c) in &self.terms {
            out.add_term(ex.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Part of total degree `d` in the variables `range`.
    pub fn slice_degree(&self, range: std::ops::Range<usize>, d: u32) -> MPoly {
        let mut out = Self::zero(self.nvars);
        for (ex, c) in &self.terms {
            if ex[range.clone()].iter().sum::<u32>() == d {
                out.terms.insert(ex.clone(), c.clone());
            }
        }
        out
    }

    /// Places this polynomial's variables at `offset` inside `nvars` variables.
    pub fn embed(&self, nvars: usize, offset: usize) -> MPoly {
        let mut out = Self::zero(nvars);
        for (ex, c) in &self.terms {
            let mut e2 = vec![0; nvars];
            e2[offset..offset + self.nvars].copy_from_slice(ex);
            out.terms.insert(e2, c.clone());
        }
        out
    }
}

/// A polynomial in the variables of a shape, flattened row by row.
#[derive(Clone, Debug, PartialEq)]
pub struct FinitePoly {
    shape: MShape,
    poly: MPoly,
}

impl FinitePoly {
    pub fn zero(shape: &MShape) -> Self {
        FinitePoly { shape: shape.clone(), poly: MPoly::zero(shape.total()) }
    }

    pub fn one(shape: &MShape) -> Self {
        FinitePoly { shape: shape.clone(), poly: MPoly::one(shape.total()) }
    }

    pub fn constant(shape: &MShape, c: QTRational) -> Self {
        FinitePoly { shape: shape.clone(), poly: MPoly::constant(shape.total(), c) }
    }

    pub fn from_poly(shape: &MShape, poly: MPoly) -> Self {
        assert_eq!(poly.nvars(), shape.total());
        FinitePoly { shape: shape.clone(), poly }
    }

    fn offset(shape: &MShape, k: usize) -> usize {
        shape.m()[..k].iter().sum()
    }

    /// x_j^(k) with 0-based j; zero when j ≥ m_k.
    pub fn var(shape: &MShape, k: usize, j: usize) -> Self {
        let k = k % shape.e();
        if j >= shape.m()[k] {
            return Self::zero(shape);
        }
        FinitePoly { shape: shape.clone(), poly: MPoly::var(shape.total(), Self::offset(shape, k) + j) }
    }

    pub fn shape(&self) -> &MShape {
        &self.shape
    }

    pub fn poly(&self) -> &MPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn add(&self, o: &FinitePoly) -> FinitePoly {
        FinitePoly { shape: self.shape.clone(), poly: self.poly.add(&o.poly) }
    }

    pub fn sub(&self, o: &FinitePoly) -> FinitePoly {
        FinitePoly { shape: self.shape.clone(), poly: self.poly.sub(&o.poly) }
    }

    pub fn mul(&self, o: &FinitePoly) -> FinitePoly {
        FinitePoly { shape: self.shape.clone(), poly: self.poly.mul(&o.poly) }
    }

    pub fn scale(&self, c: &QTRational) -> FinitePoly {
        FinitePoly { shape: self.shape.clone(), poly: self.poly.scale(c) }
    }

    pub fn pow(&self, k: u32) -> FinitePoly {
        FinitePoly { shape: self.shape.clone(), poly: self.poly.pow(k) }
    }

    pub fn substitute(&self, q: &Subst, t: &Subst) -> Result<FinitePoly> {
        Ok(FinitePoly { shape: self.shape.clone(), poly: self.poly.map_coeffs(|c| c.substitute(q, t))? })
    }

    /// Splits a flat exponent vector into rows.
    pub fn rows_of(&self, ex: &[u32]) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut pos = 0;
        for &m in self.shape.m() {
            out.push(ex[pos..pos + m].to_vec());
            pos += m;
        }
        out
    }

    pub fn flatten(rows: &[Vec<u32>]) -> Vec<u32> {
        rows.iter().flatten().copied().collect()
    }

    /// Invariance under permuting the variables inside each row.
    pub fn is_symmetric(&self) -> bool {
        let mut classes: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
        for (ex, c) in self.poly.terms() {
            let mut rows = self.rows_of(ex);
            for r in rows.iter_mut() {
                r.sort_unstable_by(|a, b| b.cmp(a));
            }
            let key = Self::flatten(&rows);
            if &self.poly.coeff(&key) != c {
                return false;
            }
            *classes.entry(key).or_default() += 1;
        }
        classes.iter().all(|(key, &count)| {
            let orbit: usize = self.rows_of(key).iter().map(|r| distinct_permutations(r).len()).product();
            orbit == count
        })
    }
}

/// All distinct rearrangements of `row`.
pub fn distinct_permutations(row: &[u32]) -> Vec<Vec<u32>> {
    let mut v = row.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    loop {
        let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            break;
        };
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// m_a(x) restricted to the shape; zero when a does not fit.
pub fn monomial_orbit(a: &EPartition, shape: &MShape) -> FinitePoly {
    if !a.fits(shape) {
        return FinitePoly::zero(shape);
    }
    let mut rows_choices: Vec<Vec<Vec<u32>>> = Vec::new();
    for row in a.padded_rows(shape) {
        rows_choices.push(distinct_permutations(&row));
    }
    let mut poly = MPoly::zero(shape.total());
    let mut idx = vec![0usize; rows_choices.len()];
    loop {
        let ex: Vec<u32> = idx.iter().zip(&rows_choices).flat_map(|(&i, c)| c[i].clone()).collect();
        poly.add_term(ex, &QTRational::one());
        let mut k = 0;
        while k < idx.len() {
            idx[k] += 1;
            if idx[k] < rows_choices[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == idx.len() {
            break;
        }
    }
    FinitePoly { shape: shape.clone(), poly }
}

/// p_r^{(i)}(x) = Σ_j ζ^{ij} p_r(x^(j)).
pub fn twisted_power_sum(r: u32, i: usize, shape: &MShape) -> FinitePoly {
    let e = shape.e();
    let mut out = FinitePoly::zero(shape);
    for j in 0..e {
        let c = QTRational::from_scalar(CycloScalar::zeta_pow(e as u32, (i * j) as i64));
        for v in 0..shape.m()[j] {
            out = out.add(&FinitePoly::var(shape, j, v).pow(r).scale(&c));
        }
    }
    out
}

pub fn power_sum_finite(a: &EPartition, shape: &MShape) -> FinitePoly {
    let mut out = FinitePoly::one(shape);
    for (i, p) in a.comps().iter().enumerate() {
        for &r in p.parts() {
            out = out.mul(&twisted_power_sum(r, i, shape));
        }
    }
    out
}

/// Restriction of a symmetric function to the shape's variables.
pub fn to_finite(f: &SymFunc, shape: &MShape) -> Result<FinitePoly> {
    let fm = f.to_basis(Basis::Monomial)?;
    let mut out = FinitePoly::zero(shape);
    for (a, c) in fm.terms() {
        out = out.add(&monomial_orbit(a, shape).scale(c));
    }
    Ok(out)
}

fn row_index(k: usize, a: usize, sign: Sign, e: usize) -> usize {
    match sign {
        Sign::Plus => (k + e * (a + 1) - a) % e,
        Sign::Minus => (k + a) % e,
    }
}

fn one_minus_q_pow(d: u32) -> QTPoly {
    &QTPoly::one() - &QTPoly::monomial(CycloScalar::one(), d, 0)
}

/// g^{(k)}_{m,±} as the y^m coefficient of Π_i A_i(y), where
/// A_i(y) = Σ_{μ ∈ Z^e} f^{(k,i)}_{μ,±} q^{n(μ)} y^{|μ|} and n(μ) = Σ_a a μ_a.
pub fn g_function(k: usize, m: u32, sign: Sign, shape: &MShape) -> FinitePoly {
    let e = shape.e();
    let len = *shape.m().iter().max().unwrap();
    let m = m as usize;
    let mut total: Vec<FinitePoly> = vec![FinitePoly::zero(shape); m + 1];
    total[0] = FinitePoly::one(shape);
    for i in 0..len {
        // A_i truncated at degree m, built as a product over a of one-row series
        let mut a_series: Vec<FinitePoly> = vec![FinitePoly::zero(shape); m + 1];
        a_series[0] = FinitePoly::one(shape);
        for a in 0..e {
            let upper = FinitePoly::var(shape, row_index(k, a, sign, e), i);
            let lower = FinitePoly::var(shape, row_index(k, a + 1, sign, e), i);
            // S_a[c] = Π_{j ≤ c} (upper - t lower q^{e(j-1)})/(1 - q^{ej}) · q^{a c}
            let mut s = vec![FinitePoly::one(shape)];
            let mut prod = FinitePoly::one(shape);
            for j in 1..=m as u32 {
                let tq = QTRational::monomial(CycloScalar::one(), e as u32 * (j - 1), 1);
                let den = QTRational::from_poly(one_minus_q_pow(e as u32 * j)).inv().unwrap();
                prod = prod.mul(&upper.sub(&lower.scale(&tq))).scale(&den);
                let qac = QTRational::q_pow(a as u32 * j);
                s.push(prod.scale(&qac));
            }
            let mut next = vec![FinitePoly::zero(shape); m + 1];
            for d1 in 0..=m {
                if a_series[d1].is_zero() {
                    continue;
                }
                for c in 0..=m - d1 {
                    if !s[c].is_zero() {
                        next[d1 + c] = next[d1 + c].add(&a_series[d1].mul(&s[c]));
                    }
                }
            }
            a_series = next;
        }
        let mut next = vec![FinitePoly::zero(shape); m + 1];
        for d1 in 0..=m {
            if total[d1].is_zero() {
                continue;
            }
            for c in 0..=m - d1 {
                if !a_series[c].is_zero() {
                    next[d1 + c] = next[d1 + c].add(&total[d1].mul(&a_series[c]));
                }
            }
        }
        total = next;
    }
    total.swap_remove(m)
}

/// g_{a,±} = Π_{j,k} g^{(k)}_{α_j^(k),±}.
pub fn g_epartition(a: &EPartition, sign: Sign, shape: &MShape) -> Result<FinitePoly> {
    if a.e() != shape.e() {
        return Err(Error::Shape(format!("{a} has e={} but the shape has e={}", a.e(), shape.e())));
    }
    let mut cache: BTreeMap<(usize, u32), FinitePoly> = BTreeMap::new();
    let mut out = FinitePoly::one(shape);
    for (k, p) in a.comps().iter().enumerate() {
        for &part in p.parts() {
            let g = cache.entry((k, part)).or_insert_with(|| g_function(k, part, sign, shape));
            out = out.mul(g);
        }
    }
    Ok(out)
}

/// Σ over all exponent compositions ν of m across the variable positions i of
/// Π_{ν_i > 0} (x_i^(k) - t x_i^(k∓1)) (x_i^(k))^{ν_i - 1}.
pub fn hall_littlewood_q(k: usize, m: u32, sign: Sign, shape: &MShape) -> FinitePoly {
    let e = shape.e();
    let len = *shape.m().iter().max().unwrap();
    let other = row_index(k, 1, sign, e);
    let factor = |i: usize, nu: u32| -> FinitePoly {
        let x = FinitePoly::var(shape, k, i);
        let y = FinitePoly::var(shape, other, i);
        x.sub(&y.scale(&QTRational::t())).mul(&x.pow(nu - 1))
    };
    fn compositions(m: u32, parts: usize) -> Vec<Vec<u32>> {
        if parts == 0 {
            return if m == 0 { vec![vec![]] } else { vec![] };
        }
        let mut out = Vec::new();
        for first in 0..=m {
            for mut rest in compositions(m - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut out = FinitePoly::zero(shape);
    for nu in compositions(m, len) {
        let mut term = FinitePoly::one(shape);
        for (i, &v) in nu.iter().enumerate() {
            if v > 0 {
                term = term.mul(&factor(i, v));
            }
        }
        out = out.add(&term);
    }
    out
}

/// Reads a symmetric homogeneous polynomial as a combination of m_a (and
/// optionally converts to Schur). Schur output needs every m_k ≥ degree.
pub fn finite_to_basis(f: &FinitePoly, target: Basis) -> Result<SymFunc> {
    let shape = f.shape();
    if !f.is_symmetric() {
        return Err(Error::NotSymmetric("polynomial changes under a row permutation".into()));
    }
    let degrees: std::collections::BTreeSet<u32> = f.poly().terms().map(|(ex, _)| ex.iter().sum()).collect();
    if degrees.len() > 1 {
        return Err(Error::Shape(format!("polynomial is not homogeneous (degrees {degrees:?})")));
    }
    let d = degrees.into_iter().next().unwrap_or(0);
    let mut out = SymFunc::zero(Basis::Monomial, shape.e(), d);
    for (ex, c) in f.poly().terms() {
        let rows = f.rows_of(ex);
        if rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1])) {
            let a = EPartition::new(rows.into_iter().map(Partition::from_unsorted).collect())?;
            out.add_term(&a, c)?;
        }
    }
    match target {
        Basis::Monomial => Ok(out),
        Basis::Schur | Basis::Power => {
            if !shape.faithful_for(d) {
                return Err(Error::Shape(format!("shape {shape} is too small for degree {d}")));
            }
            out.to_basis(target)
        }
        other => Err(Error::Unsupported(format!("finite_to_basis target {}", other.tag()))),
    }
}
