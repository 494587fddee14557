//! The operators D^r± on monomials, their matrices B^r± in the m-basis, and
//! E± through the matrix H.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::{CycloScalar, QTPoly, QTRational, RatMatrix, Subst};
use crate::combinat::symbol::lambda0_rows;
use crate::combinat::{
    apply_j, delta_pairing, dominance_less, enum_index_sets, straighten, EPartition, ExponentArray, IndexSet, MShape,
    Order, Sign, SymbolType,
};
use crate::error::{Error, Result};
use crate::symfun::{distinct_permutations, tables, Basis, SymFunc};

fn require_unipotent(stype: SymbolType) -> Result<()> {
    if stype != SymbolType::UNIPOTENT {
        return Err(Error::Unsupported(format!(
            "the operators D^r are defined for symbols of type (1,0), got ({},{})",
            stype.r, stype.s
        )));
    }
    Ok(())
}

/// Every exponent array whose rows are rearrangements of the rows of `rows`.
fn row_permutations(rows: &[Vec<u32>]) -> Vec<ExponentArray> {
    let mut out: Vec<ExponentArray> = vec![Vec::new()];
    for row in rows {
        let perms = distinct_permutations(row);
        out = out
            .into_iter()
            .flat_map(|prefix| {
                perms.iter().map(move |p| {
                    let mut v = prefix.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out
}

fn pairing(beta: &ExponentArray, j: &IndexSet) -> u64 {
    j.iter().map(|i| i.iter().enumerate().map(|(k, &ik)| beta[k][ik] as u64).sum::<u64>()).sum()
}

fn add_rows(a: &ExponentArray, b: &[Vec<u32>]) -> ExponentArray {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect()).collect()
}

fn sub_rows(a: &ExponentArray, b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(p, q)| p - q).collect()).collect()
}

/// D^r± m_a as a map from Schur labels to coefficients:
/// Σ_b Σ_J t^{⟨δ,J⟩} q^{⟨b,J⟩} s_{(b+δ)_{J±} − δ}, b over distinct row permutations of a.
fn d_on_monomial(a: &EPartition, shape: &MShape, sets: &[IndexSet], sign: Sign) -> Result<BTreeMap<EPartition, QTPoly>> {
    if !a.fits(shape) {
        return Err(Error::Shape(format!("{a} does not fit shape {shape}")));
    }
    let delta = lambda0_rows(shape, SymbolType::UNIPOTENT);
    let mut out: BTreeMap<EPartition, QTPoly> = BTreeMap::new();
    for b in row_permutations(&a.padded_rows(shape)) {
        let bd = add_rows(&b, &delta);
        for j in sets {
            let (_, moved) = apply_j(&bd, j, sign);
            let (eps, sorted) = straighten(&moved);
            if eps == 0 {
                continue;
            }
            let label = EPartition::from_vecs(&sub_rows(&sorted, &delta))?;
            let dt: u64 = j.iter().map(|i| delta_pairing(shape, i)).sum();
            let term = QTPoly::monomial(CycloScalar::from_int(eps as i64), pairing(&b, j) as u32, dt as u32);
            let slot = out.entry(label).or_default();
            *slot = &*slot + &term;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// D^r± applied to f given in the m-basis; the result is in the s-basis.
pub fn apply_d(r: usize, sign: Sign, f: &SymFunc, shape: &MShape) -> Result<SymFunc> {
    if f.basis() != Basis::Monomial {
        return Err(Error::Unsupported(format!("apply_d expects the m-basis, got {}", f.basis().tag())));
    }
    if f.e() != shape.e() {
        return Err(Error::Shape(format!("e={} does not match shape {shape}", f.e())));
    }
    let sets = enum_index_sets(r, shape)?;
    let mut out = SymFunc::zero(Basis::Schur, f.e(), f.degree());
    for (a, c) in f.terms() {
        for (b, v) in d_on_monomial(a, shape, &sets, sign)? {
            out.add_term(&b, &(&QTRational::from_poly(v) * c))?;
        }
    }
    Ok(out)
}

/// K[i][j]: coefficient of m_{label j} in s_{label i}, over the labels of the
/// order; monomials of labels outside the shape vanish and are dropped.
pub fn kostka_matrix(order: &Order) -> RatMatrix {
    let labels = order.labels();
    let mut k = RatMatrix::zeros(labels.len(), labels.len());
    if labels.is_empty() {
        return k;
    }
    let tb = tables(order.n, order.shape.e());
    for (i, a) in labels.iter().enumerate() {
        let row = &tb.s_to_m[tb.index(a).expect("order labels are e-partitions of n")];
        for (c, v) in row {
            if let Some(j) = order.index_of(&tb.labels()[*c]) {
                k.set(i, j, QTRational::from_int(*v));
            }
        }
    }
    k
}

/// Operator matrix: row a holds the image of the basis element a.
#[derive(Clone, Debug)]
pub struct OperatorMatrix {
    pub r: usize,
    pub sign: Sign,
    pub basis: Basis,
    pub order: Order,
    pub entries: RatMatrix,
}

impl OperatorMatrix {
    pub fn family_block(&self, f: usize) -> RatMatrix {
        let b = &self.order.blocks()[f];
        self.entries.block(b.start, b.end, b.start, b.end)
    }

    /// The same operator on the s-basis: K B K⁻¹.
    pub fn in_schur_basis(&self) -> Result<OperatorMatrix> {
        if self.basis != Basis::Monomial {
            return Ok(self.clone());
        }
        let k = kostka_matrix(&self.order);
        let entries = k.mul(&self.entries)?.mul(&k.inverse()?)?;
        Ok(OperatorMatrix { basis: Basis::Schur, entries, ..self.clone() })
    }

    pub fn at_q_eq_t(&self) -> Result<RatMatrix> {
        self.entries.at_q_eq_t()
    }
}

/// Fails unless every nonzero entry (a, b) has b in the family of a or in a
/// dominance-smaller family.
pub fn check_block_triangular(m: &RatMatrix, order: &Order) -> Result<()> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let (fi, fj) = (order.family_of(i), order.family_of(j));
            if fi == fj || m.get(i, j).is_zero() {
                continue;
            }
            if !dominance_less(&order.families()[fj], &order.families()[fi]) {
                return Err(Error::Internal(format!(
                    "entry ({}, {}) = {} lies outside the allowed blocks",
                    order.labels()[i],
                    order.labels()[j],
                    m.get(i, j)
                )));
            }
        }
    }
    Ok(())
}

/// B^r± in the m-basis, rows and columns in the given order.
pub fn matrix_b(r: usize, sign: Sign, order: &Order) -> Result<OperatorMatrix> {
    require_unipotent(order.stype)?;
    let shape = &order.shape;
    let sets = enum_index_sets(r, shape)?;
    let labels = order.labels();
    let k = kostka_matrix(order);
    let rows: Vec<Vec<QTRational>> = labels
        .par_iter()
        .map(|a| -> Result<Vec<QTRational>> {
            let image = d_on_monomial(a, shape, &sets, sign)?;
            let mut row = vec![QTRational::zero(); labels.len()];
            for (c, v) in image {
                let ci = order
                    .index_of(&c)
                    .ok_or_else(|| Error::Internal(format!("D^{r} produced s_{c} outside the order")))?;
                let v = QTRational::from_poly(v);
                for (j, slot) in row.iter_mut().enumerate() {
                    let kc = k.get(ci, j);
                    if !kc.is_zero() {
                        *slot = &*slot + &(&v * kc);
                    }
                }
            }
            Ok(row)
        })
        .collect::<Result<_>>()?;
    let entries = RatMatrix::from_rows(rows);
    check_block_triangular(&entries, order)?;
    Ok(OperatorMatrix { r, sign, basis: Basis::Monomial, order: order.clone(), entries })
}

/// Diagonal block of B^r± for family f read off the symbols alone:
/// Σ over J with [Λ_{J±}] = Λ(b) of ε (t q⁻¹)^{⟨δ,J⟩} q^{⟨Λ,J⟩}.
pub fn diag_block_direct(order: &Order, f: usize, r: usize, sign: Sign) -> Result<RatMatrix> {
    require_unipotent(order.stype)?;
    let shape = &order.shape;
    let sets = enum_index_sets(r, shape)?;
    let members = order.families()[f].members();
    let tq = &QTRational::t() * &QTRational::q().inv()?;
    let mut out = RatMatrix::zeros(members.len(), members.len());
    for (ia, lam) in members.iter().enumerate() {
        let rows = lam.rows().to_vec();
        for j in &sets {
            let (p, moved) = apply_j(&rows, j, sign);
            let (eps, sorted) = straighten(&moved);
            if eps == 0 {
                continue;
            }
            let Some(ib) = members.iter().position(|m| m.rows() == sorted.as_slice()) else {
                continue;
            };
            let d: u64 = j.iter().map(|i| delta_pairing(shape, i)).sum();
            let term = (&tq.pow(d as i64)? * &QTRational::q_pow(p as u32)).scale(&CycloScalar::from_int(eps as i64));
            out.set(ia, ib, out.get(ia, ib) + &term);
        }
    }
    Ok(out)
}

/// Σ_{i∈𝓘} t^{⟨δ,i⟩} over all index vectors of the shape.
pub fn index_sum(shape: &MShape) -> QTRational {
    enum_index_sets(1, shape)
        .expect("r = 1 is always admissible")
        .iter()
        .map(|j| QTRational::t_pow(delta_pairing(shape, &j[0]) as i64))
        .sum()
}

/// H = t^{−M} B¹ − Σ_{i∈𝓘} t^{⟨δ,i⟩−M} · I with M = Σ m_k.
#[derive(Clone, Debug)]
pub struct HMatrix {
    pub sign: Sign,
    pub order: Order,
    pub m_total: usize,
    pub entries: RatMatrix,
}

impl HMatrix {
    pub fn family_block(&self, f: usize) -> RatMatrix {
        let b = &self.order.blocks()[f];
        self.entries.block(b.start, b.end, b.start, b.end)
    }

    pub fn blocks(&self) -> Vec<RatMatrix> {
        (0..self.order.blocks().len()).map(|f| self.family_block(f)).collect()
    }
}

pub fn h_from_b(b1: &OperatorMatrix) -> HMatrix {
    let shape = &b1.order.shape;
    let m = shape.total();
    let tm = QTRational::t_pow(-(m as i64));
    let shift = RatMatrix::scalar(b1.entries.rows(), &index_sum(shape));
    let entries = b1.entries.sub(&shift).expect("square").scale(&tm);
    HMatrix { sign: b1.sign, order: b1.order.clone(), m_total: m, entries }
}

pub fn matrix_h(sign: Sign, order: &Order) -> Result<HMatrix> {
    Ok(h_from_b(&matrix_b(1, sign, order)?))
}

/// t^{−M}(B¹ − B¹|_{q=1}): the q-dependent part of H.
pub fn matrix_h_tilde(b1: &OperatorMatrix) -> Result<RatMatrix> {
    let m = b1.order.shape.total();
    let at_one = b1.entries.substitute(&Subst::Value(CycloScalar::one()), &Subst::Keep)?;
    Ok(b1.entries.sub(&at_one)?.scale(&QTRational::t_pow(-(m as i64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_qt;
    use crate::combinat::{total_order, TieBreak};

    fn sh(m: &[usize]) -> MShape {
        MShape::new(m.to_vec()).unwrap()
    }

    fn qt(s: &str) -> QTRational {
        parse_qt(s, 2).unwrap()
    }

    fn order(n: u32, m: &[usize]) -> Order {
        total_order(n, &sh(m), SymbolType::UNIPOTENT, TieBreak::LexDesc).unwrap()
    }

    fn family_with(ord: &Order, label: &str) -> usize {
        ord.family_of(ord.index_of(&EPartition::parse(label).unwrap()).unwrap())
    }

    #[test]
    fn singleton_blocks_c2() {
        let ord = order(2, &[2, 1]);
        let b = matrix_b(1, Sign::Plus, &ord).unwrap();
        let f1 = family_with(&ord, "(2;-)");
        assert_eq!(b.family_block(f1), RatMatrix::scalar(1, &QTRational::one()));
        let ord = order(2, &[3, 2]);
        for sign in [Sign::Plus, Sign::Minus] {
            let b = matrix_b(1, sign, &ord).unwrap();
            let f2 = family_with(&ord, "(-;11)");
            assert_eq!(b.family_block(f2).get(0, 0), &qt("t^3*q + t*q"));
        }
    }

    #[test]
    fn zero_input() {
        let z = SymFunc::zero(Basis::Monomial, 2, 2);
        assert!(apply_d(1, Sign::Plus, &z, &sh(&[2, 1])).unwrap().is_zero());
        assert!(apply_d(2, Sign::Plus, &z, &sh(&[2, 1])).is_err());
    }

    #[test]
    fn one_variable_classical() {
        // one variable: D¹ x^k = q^k x^k
        for k in 0..4u32 {
            let a = EPartition::from_vecs(&[vec![k]]).unwrap();
            let img = apply_d(1, Sign::Plus, &SymFunc::basis_element(Basis::Monomial, &a), &sh(&[1])).unwrap();
            assert_eq!(img.coeff(&a), QTRational::q_pow(k));
            assert_eq!(img.terms().count(), 1);
        }
    }

    #[test]
    fn two_variable_classical() {
        // eigenvalue Σ q^{λ_i} t^{n-i} on m_(1) = s_(1) in two variables
        let a = EPartition::from_vecs(&[vec![1]]).unwrap();
        let img = apply_d(1, Sign::Plus, &SymFunc::basis_element(Basis::Monomial, &a), &sh(&[2])).unwrap();
        assert_eq!(img.coeff(&a), qt("1 + q*t"));
    }

    #[test]
    fn direct_blocks_match() {
        for (n, m) in [(2u32, vec![2usize, 1]), (2, vec![3, 2]), (3, vec![4, 3]), (3, vec![2, 2])] {
            let ord = order(n, &m);
            for r in 1..=ord.shape.m1().min(2) {
                for sign in [Sign::Plus, Sign::Minus] {
                    let b = matrix_b(r, sign, &ord).unwrap();
                    for f in 0..ord.blocks().len() {
                        assert_eq!(b.family_block(f), diag_block_direct(&ord, f, r, sign).unwrap(), "n={n} r={r}");
                    }
                }
            }
        }
    }

    #[test]
    fn h_scalar_shift() {
        assert_eq!(index_sum(&sh(&[2, 1])), qt("1 + t"));
        assert_eq!(index_sum(&sh(&[3, 2])), qt("(1 + t)*(1 + t + t^2)"));
        let ord = order(2, &[2, 1]);
        let h = matrix_h(Sign::Plus, &ord).unwrap();
        let f1 = family_with(&ord, "(2;-)");
        assert_eq!(h.family_block(f1).get(0, 0), &qt("-1/t^2"));
    }
}
