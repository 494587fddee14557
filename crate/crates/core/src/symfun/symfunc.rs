//! Symmetric functions of one degree as coefficient vectors over a basis,
//! the (q,t) sesquilinear form, and Schur Gram matrices.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Value};

use super::tables::{tables, SparseRow, Tables};
use crate::algebra::json::{qt_from_json, qt_to_json};
use crate::algebra::qtpoly::QTPoly;
use crate::algebra::upoly::UPoly;
use crate::algebra::{CycloScalar, QTRational, RatMatrix};
use crate::combinat::{EPartition, Sign};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Schur,
    Power,
    G(Sign),
    MacP(Sign),
    MacQ(Sign),
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::Power => "p",
            Basis::G(Sign::Plus) => "g+",
            Basis::G(Sign::Minus) => "g-",
            Basis::MacP(Sign::Plus) => "P+",
            Basis::MacP(Sign::Minus) => "P-",
            Basis::MacQ(Sign::Plus) => "Q+",
            Basis::MacQ(Sign::Minus) => "Q-",
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        let all = [
            Basis::Monomial,
            Basis::Schur,
            Basis::Power,
            Basis::G(Sign::Plus),
            Basis::G(Sign::Minus),
            Basis::MacP(Sign::Plus),
            Basis::MacP(Sign::Minus),
            Basis::MacQ(Sign::Plus),
            Basis::MacQ(Sign::Minus),
        ];
        all.into_iter().find(|b| b.tag() == s).ok_or_else(|| Error::Parse(format!("unknown basis {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc {
    basis: Basis,
    e: usize,
    degree: u32,
    coeffs: BTreeMap<EPartition, QTRational>,
}

impl SymFunc {
    pub fn zero(basis: Basis, e: usize, degree: u32) -> Self {
        SymFunc { basis, e, degree, coeffs: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, a: &EPartition) -> Self {
        let mut f = Self::zero(basis, a.e(), a.size());
        f.coeffs.insert(a.clone(), QTRational::one());
        f
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EPartition, &QTRational)> {
        self.coeffs.iter()
    }

    pub fn coeff(&self, a: &EPartition) -> QTRational {
        self.coeffs.get(a).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add_term(&mut self, a: &EPartition, c: &QTRational) -> Result<()> {
        if a.size() != self.degree || a.e() != self.e {
            return Err(Error::Shape(format!("label {a} does not belong to degree {} and e={}", self.degree, self.e)));
        }
        if c.is_zero() {
            return Ok(());
        }
        let v = &self.coeff(a) + c;
        if v.is_zero() {
            self.coeffs.remove(a);
        } else {
            self.coeffs.insert(a.clone(), v);
        }
        Ok(())
    }

    fn check_compatible(&self, o: &SymFunc) -> Result<()> {
        if self.e != o.e || self.degree != o.degree {
            return Err(Error::Shape(format!(
                "degree/e mismatch: ({}, {}) vs ({}, {})",
                self.degree, self.e, o.degree, o.e
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &SymFunc) -> Result<SymFunc> {
        self.check_compatible(o)?;
        let o = o.to_basis(self.basis)?;
        let mut out = self.clone();
        for (a, c) in &o.coeffs {
            out.add_term(a, c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &QTRational) -> SymFunc {
        let mut out = Self::zero(self.basis, self.e, self.degree);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(a, v)| (a.clone(), v * c)).collect();
        }
        out
    }

    /// Applies ζ ↦ ζ⁻¹ to coefficients; only meaningful in a basis with
    /// rational transition to monomials (m, s).
    pub fn conjugate_coeffs(&self) -> SymFunc {
        let mut out = self.clone();
        for v in out.coeffs.values_mut() {
            *v = v.conjugate();
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&QTRational) -> Result<QTRational>) -> Result<SymFunc> {
        let mut out = Self::zero(self.basis, self.e, self.degree);
        for (a, c) in &self.coeffs {
            out.add_term(a, &f(c)?)?;
        }
        Ok(out)
    }

    /// Coefficients as a dense vector over `labels`.
    pub fn to_vector(&self, labels: &[EPartition]) -> Vec<QTRational> {
        labels.iter().map(|a| self.coeff(a)).collect()
    }

    pub fn from_vector(basis: Basis, e: usize, degree: u32, labels: &[EPartition], v: &[QTRational]) -> SymFunc {
        let mut f = Self::zero(basis, e, degree);
        for (a, c) in labels.iter().zip(v) {
            if !c.is_zero() {
                f.coeffs.insert(a.clone(), c.clone());
            }
        }
        f
    }

    /// Conversion among the m, s and p bases.
    pub fn to_basis(&self, target: Basis) -> Result<SymFunc> {
        if target == self.basis {
            return Ok(self.clone());
        }
        let tb = tables(self.degree, self.e);
        match (self.basis, target) {
            (Basis::Schur, Basis::Monomial) => Ok(self.apply_int(&tb, &tb.s_to_m, target)),
            (Basis::Monomial, Basis::Schur) => Ok(self.apply_int(&tb, &tb.m_to_s, target)),
            (Basis::Schur, Basis::Power) => Ok(self.apply_cyclo(&tb, &tb.s_to_p, target)),
            (Basis::Power, Basis::Schur) => Ok(self.apply_cyclo(&tb, &tb.p_to_s, target)),
            (Basis::Monomial, Basis::Power) | (Basis::Power, Basis::Monomial) => {
                self.to_basis(Basis::Schur)?.to_basis(target)
            }
            (from, to) => Err(Error::Unsupported(format!(
                "direct conversion {} -> {}; expand through the Macdonald basis instead",
                from.tag(),
                to.tag()
            ))),
        }
    }

    fn apply_int(&self, tb: &Tables, rows: &[SparseRow<i64>], target: Basis) -> SymFunc {
        let mut acc: BTreeMap<usize, QTRational> = BTreeMap::new();
        for (a, c) in &self.coeffs {
            let i = tb.index(a).expect("label in table");
            for (j, k) in &rows[i] {
                let slot = acc.entry(*j).or_default();
                *slot = &*slot + &(c * &QTRational::from_int(*k));
            }
        }
        self.collect(tb, acc, target)
    }

    fn apply_cyclo(&self, tb: &Tables, rows: &[SparseRow<CycloScalar>], target: Basis) -> SymFunc {
        let mut acc: BTreeMap<usize, QTRational> = BTreeMap::new();
        for (a, c) in &self.coeffs {
            let i = tb.index(a).expect("label in table");
            for (j, k) in &rows[i] {
                let slot = acc.entry(*j).or_default();
                *slot = &*slot + &c.scale(k);
            }
        }
        self.collect(tb, acc, target)
    }

    fn collect(&self, tb: &Tables, acc: BTreeMap<usize, QTRational>, target: Basis) -> SymFunc {
        let mut out = Self::zero(target, self.e, self.degree);
        for (j, c) in acc {
            if !c.is_zero() {
                out.coeffs.insert(tb.labels()[j].clone(), c);
            }
        }
        out
    }

    /// `s[(2;-)] + (q - 1)*s[(11;-)]`
    pub fn to_text(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let tag = self.basis.tag();
        let mut parts = Vec::new();
        for (a, c) in &self.coeffs {
            let label = format!("{tag}[{a}]");
            parts.push(if c.is_one() {
                label
            } else if (-c.clone()).is_one() {
                format!("-{label}")
            } else {
                format!("({c})*{label}")
            });
        }
        parts.join(" + ")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "basis": self.basis.tag(),
            "e": self.e,
            "degree": self.degree,
            "terms": self.coeffs.iter().map(|(a, c)| json!([a.to_json(), qt_to_json(c)])).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<SymFunc> {
        let bad = |w: &str| Error::Parse(format!("symmetric-function JSON: {w}"));
        let basis = Basis::parse(v.get("basis").and_then(Value::as_str).ok_or_else(|| bad("basis"))?)?;
        let e = v.get("e").and_then(Value::as_u64).ok_or_else(|| bad("e"))? as usize;
        let degree = v.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("degree"))? as u32;
        let mut f = Self::zero(basis, e, degree);
        for t in v.get("terms").and_then(Value::as_array).ok_or_else(|| bad("terms"))? {
            let pair = t.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("term"))?;
            f.add_term(&EPartition::from_json(&pair[0])?, &qt_from_json(&pair[1])?)?;
        }
        Ok(f)
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// z_a(q,t) split as (numerator in q, denominator in t): the integer z_a times
/// Π (1 - ζ^k q^{α_j}) over Π (1 - ζ^k t^{α_j}).
pub fn z_weight_parts(a: &EPartition) -> (QTPoly, QTPoly) {
    let e = a.e() as u32;
    let mut num = QTPoly::constant(CycloScalar::from_rational(a.z().into()));
    let mut den = QTPoly::one();
    for (k, p) in a.comps().iter().enumerate() {
        let zk = CycloScalar::zeta_pow(e, k as i64);
        for &part in p.parts() {
            num = &num * &(&QTPoly::one() - &QTPoly::monomial(zk.clone(), part, 0));
            den = &den * &(&QTPoly::one() - &QTPoly::monomial(zk.clone(), 0, part));
        }
    }
    (num, den)
}

pub fn z_weight(a: &EPartition) -> QTRational {
    let (n, d) = z_weight_parts(a);
    QTRational::new(n, d).expect("z-weight denominator is nonzero")
}

/// ⟨f, g⟩: linear in f, ζ-conjugate-linear in g, with ⟨p_a, p_b⟩ = δ z_a(q,t).
pub fn scalar_product(f: &SymFunc, g: &SymFunc) -> Result<QTRational> {
    f.check_compatible(g)?;
    let fp = f.to_basis(Basis::Power)?;
    let gp = g.to_basis(Basis::Power)?;
    let mut total = QTRational::zero();
    for (a, c) in fp.terms() {
        let d = gp.coeff(a);
        if !d.is_zero() {
            total = &total + &(&(c * &d.conjugate()) * &z_weight(a));
        }
    }
    Ok(total)
}

/// G[a][b] = ⟨s_a, s_b⟩ over the given labels, all of one degree.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub labels: Vec<EPartition>,
    pub entries: RatMatrix,
}

fn upoly_lcm(a: &UPoly, b: &UPoly) -> UPoly {
    let g = a.gcd(b);
    (a * &b.exact_div(&g).expect("gcd divides")).monic()
}

/// Gram matrix of Schur functions. Entries share the denominator
/// lcm_c Π(1 - ζ^k t^{c_j}), so each entry is one polynomial sum and one reduction.
pub fn gram_schur(labels: &[EPartition]) -> Result<GramMatrix> {
    let Some(first) = labels.first() else {
        return Ok(GramMatrix { labels: vec![], entries: RatMatrix::zeros(0, 0) });
    };
    let (n, e) = (first.size(), first.e());
    if labels.iter().any(|a| a.size() != n || a.e() != e) {
        return Err(Error::Shape("Gram labels must share degree and e".into()));
    }
    let tb = tables(n, e);
    let parts: Vec<(QTPoly, UPoly)> = tb
        .labels()
        .iter()
        .map(|c| {
            let (num, den) = z_weight_parts(c);
            (num, den.to_upoly_t().expect("z denominator is univariate in t"))
        })
        .collect();
    let mut lcm = UPoly::one();
    for (_, d) in &parts {
        lcm = upoly_lcm(&lcm, d);
    }
    let weights: Vec<QTPoly> = parts
        .iter()
        .map(|(num, d)| num * &QTPoly::from_upoly_t(&lcm.exact_div(d).expect("lcm is a multiple")))
        .collect();
    let den = QTPoly::from_upoly_t(&lcm);
    let rows: Vec<BTreeMap<usize, CycloScalar>> = labels
        .iter()
        .map(|a| tb.s_to_p[tb.index(a).expect("label in table")].iter().cloned().collect())
        .collect();
    let entries = RatMatrix::from_fn(labels.len(), labels.len(), |i, j| {
        let mut num = QTPoly::zero();
        for (c, x) in &rows[i] {
            if let Some(y) = rows[j].get(c) {
                num = &num + &weights[*c].scale(&(x * &y.conjugate()));
            }
        }
        QTRational::new(num, den.clone()).expect("nonzero denominator")
    });
    Ok(GramMatrix { labels: labels.to_vec(), entries })
}
