//! P± and Q± by block orthogonalization of the Schur Gram matrix.

use rayon::prelude::*;

use crate::algebra::{QTRational, RatMatrix};
use crate::combinat::{total_order, MShape, Order, SymbolType, TieBreak};
use crate::error::{Error, Result};
use crate::symfun::{gram_schur, Basis, SymFunc};

use super::operators::kostka_matrix;

/// Row i of `xplus` (`xminus`) holds the s-coefficients of P⁺ (P⁻) for the
/// i-th label of the order; `qplus`, `qminus` likewise for Q±.
#[derive(Clone, Debug)]
pub struct MacdonaldBasis {
    pub order: Order,
    pub gram: RatMatrix,
    pub xplus: RatMatrix,
    pub xminus: RatMatrix,
    /// ⟨P⁺_Λ, P⁻_Λ'⟩ on each family.
    pub dblocks: Vec<RatMatrix>,
    pub qplus: RatMatrix,
    pub qminus: RatMatrix,
}

fn rows_of(m: &RatMatrix, r: std::ops::Range<usize>) -> RatMatrix {
    m.block(r.start, r.end, 0, m.cols())
}

/// ⟨u_i, v_j⟩ for coefficient rows u, v in the s-basis: u G v^*.
fn pair(u: &RatMatrix, g: &RatMatrix, v: &RatMatrix) -> RatMatrix {
    u.mm(g).mm(&v.conj_transpose())
}

fn block_diag_inverse_rows(blocks: &[RatMatrix], order: &Order, x: &RatMatrix, conj: bool) -> Result<RatMatrix> {
    let mut out = RatMatrix::zeros(x.rows(), x.cols());
    for (f, range) in order.blocks().iter().enumerate() {
        let inv = blocks[f].inverse()?;
        let inv = if conj { inv.conj_transpose() } else { inv };
        out.set_block(range.start, 0, &inv.mm(&rows_of(x, range.clone())));
    }
    Ok(out)
}

/// Inverse of a block lower unitriangular matrix given by its strictly lower blocks.
fn lower_unitriangular_inverse(l: &[Vec<RatMatrix>], order: &Order) -> RatMatrix {
    let blocks = order.blocks();
    let mut x = RatMatrix::identity(order.len());
    for i in 0..blocks.len() {
        let row: Vec<RatMatrix> = (0..i)
            .into_par_iter()
            .map(|j| {
                // X_ij = −Σ_{j≤k<i} L_ik X_kj
                let mut acc = RatMatrix::zeros(blocks[i].len(), blocks[j].len());
                for k in j..i {
                    if !l[i][k].is_zero() {
                        let xkj = x.block(blocks[k].start, blocks[k].end, blocks[j].start, blocks[j].end);
                        acc = acc.sub(&l[i][k].mm(&xkj)).expect("block shapes");
                    }
                }
                acc
            })
            .collect();
        for (j, b) in row.iter().enumerate() {
            x.set_block(blocks[i].start, blocks[j].start, b);
        }
    }
    x
}

/// Two-sided block elimination G = L·D·U along the families, with L block lower
/// and U block upper unitriangular. Then P⁺ = L⁻¹·s, P⁻ = (U^*)⁻¹·s and
/// D_k = ⟨P⁺_k, P⁻_k⟩.
pub fn build_pq(order: &Order) -> Result<MacdonaldBasis> {
    if !order.shape.faithful_for(order.n) {
        return Err(Error::Shape(format!(
            "P and Q need a faithful shape for n={}, got {}",
            order.n, order.shape
        )));
    }
    let gram = gram_schur(order.labels())?.entries;
    let blocks = order.blocks();
    let nb = blocks.len();
    let mut s: Vec<Vec<RatMatrix>> = blocks
        .iter()
        .map(|bi| blocks.iter().map(|bj| gram.block(bi.start, bi.end, bj.start, bj.end)).collect())
        .collect();
    let zeros = |i: usize, j: usize| RatMatrix::zeros(blocks[i].len(), blocks[j].len());
    // l[i][k] = L_ik, lu[j][k] = (U_kj)^*
    let mut l: Vec<Vec<RatMatrix>> = (0..nb).map(|i| (0..nb).map(|k| zeros(i, k)).collect()).collect();
    let mut lu: Vec<Vec<RatMatrix>> = (0..nb).map(|j| (0..nb).map(|k| zeros(j, k)).collect()).collect();
    let mut dblocks = Vec::with_capacity(nb);
    for k in 0..nb {
        let dk = s[k][k].clone();
        if dk.det()?.is_zero() {
            return Err(Error::Degenerate(format!("the family of {}", order.labels()[blocks[k].start])));
        }
        let dinv = dk.inverse()?;
        let lcol: Vec<RatMatrix> = (k + 1..nb).into_par_iter().map(|i| s[i][k].mm(&dinv)).collect();
        let urow: Vec<RatMatrix> = (k + 1..nb).into_par_iter().map(|j| dinv.mm(&s[k][j])).collect();
        let pivot_row = s[k].clone();
        s[k + 1..].par_iter_mut().zip(&lcol).for_each(|(row, lik)| {
            if lik.is_zero() {
                return;
            }
            for j in k + 1..nb {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].sub(&lik.mm(&pivot_row[j])).expect("block shapes");
                }
            }
        });
        for (off, (li, uj)) in lcol.into_iter().zip(urow).enumerate() {
            l[k + 1 + off][k] = li;
            lu[k + 1 + off][k] = uj.conj_transpose();
        }
        dblocks.push(dk);
    }
    let xplus = lower_unitriangular_inverse(&l, order);
    let xminus = lower_unitriangular_inverse(&lu, order);
    let qplus = block_diag_inverse_rows(&dblocks, order, &xplus, false)?;
    let qminus = block_diag_inverse_rows(&dblocks, order, &xminus, true)?;
    Ok(MacdonaldBasis { order: order.clone(), gram, xplus, xminus, dblocks, qplus, qminus })
}

/// Completes given transition matrices (s-basis rows) with the Gram blocks and Q±.
pub fn assemble_basis(order: &Order, xplus: RatMatrix, xminus: RatMatrix) -> Result<MacdonaldBasis> {
    let gram = gram_schur(order.labels())?.entries;
    let mut dblocks = Vec::new();
    for range in order.blocks() {
        let d = pair(&rows_of(&xplus, range.clone()), &gram, &rows_of(&xminus, range.clone()));
        if d.det()?.is_zero() {
            return Err(Error::Degenerate(format!("the family of {}", order.labels()[range.start])));
        }
        dblocks.push(d);
    }
    let qplus = block_diag_inverse_rows(&dblocks, order, &xplus, false)?;
    let qminus = block_diag_inverse_rows(&dblocks, order, &xminus, true)?;
    Ok(MacdonaldBasis { order: order.clone(), gram, xplus, xminus, dblocks, qplus, qminus })
}

/// Convenience: default tie-break, type (1,0).
pub fn build_pq_default(n: u32, shape: &MShape) -> Result<MacdonaldBasis> {
    build_pq(&total_order(n, shape, SymbolType::UNIPOTENT, TieBreak::LexDesc)?)
}

impl MacdonaldBasis {
    /// X · K: the same rows in the m-basis.
    pub fn in_monomial_basis(&self, x: &RatMatrix) -> RatMatrix {
        x.mm(&kostka_matrix(&self.order))
    }

    pub fn function(&self, x: &RatMatrix, i: usize) -> SymFunc {
        let o = &self.order;
        SymFunc::from_vector(Basis::Schur, o.shape.e(), o.n, o.labels(), x.row(i))
    }

    /// X G Y^* for two coefficient matrices in the s-basis.
    pub fn pairing(&self, x: &RatMatrix, y: &RatMatrix) -> RatMatrix {
        pair(x, &self.gram, y)
    }

    /// Fails unless `x` has identity diagonal blocks and vanishes above them.
    pub fn check_unitriangular(&self, x: &RatMatrix) -> Result<()> {
        for i in 0..x.rows() {
            for j in 0..x.cols() {
                let (fi, fj) = (self.order.family_of(i), self.order.family_of(j));
                let want_zero = fj > fi || (fi == fj && i != j);
                let v = x.get(i, j);
                if (want_zero && !v.is_zero()) || (i == j && !v.is_one()) {
                    return Err(Error::Internal(format!(
                        "transition entry ({}, {}) = {v}",
                        self.order.labels()[i],
                        self.order.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Fails unless `m` vanishes outside the family blocks.
    pub fn check_block_diagonal(&self, m: &RatMatrix) -> Result<()> {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if self.order.family_of(i) != self.order.family_of(j) && !m.get(i, j).is_zero() {
                    return Err(Error::Internal(format!("off-family pairing at ({i}, {j})")));
                }
            }
        }
        Ok(())
    }
}

/// Zero-degree case: the single function 1.
pub fn trivial_value() -> QTRational {
    QTRational::one()
}
