//! Dense matrices over `QTRational` and the exact linear algebra built on them.

use std::fmt;

use rayon::prelude::*;

use super::cyclo::CycloScalar;
use super::qtpoly::Subst;
use super::qtrational::QTRational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<QTRational>,
}

/// Below this many rows, row operations run sequentially.
const PAR_ROWS: usize = 8;

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![QTRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, QTRational::one());
        }
        m
    }

    pub fn scalar(n: usize, c: &QTRational) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<QTRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix rows");
        RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> QTRational + Sync + Send) -> Self {
        let data = (0..rows * cols).into_par_iter().map(|k| f(k / cols.max(1), k % cols.max(1))).collect();
        RatMatrix { rows, cols, data }
    }

    pub fn from_ints(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| QTRational::from_int(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &QTRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: QTRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[QTRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[QTRational] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<QTRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    pub fn map(&self, f: impl Fn(&QTRational) -> QTRational + Sync + Send) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.par_iter().map(f).collect() }
    }

    pub fn try_map(&self, f: impl Fn(&QTRational) -> Result<QTRational> + Sync + Send) -> Result<Self> {
        let data = self.data.par_iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(RatMatrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Transpose with ζ ↦ ζ⁻¹ applied to every entry.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conjugate())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Contiguous block [r0, r1) × [c0, c1).
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &RatMatrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn scale(&self, c: &QTRational) -> Self {
        self.map(|x| x * c)
    }

    pub fn add(&self, o: &RatMatrix) -> Result<Self> {
        self.same_shape(o)?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().zip(o.data.par_iter()).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, o: &RatMatrix) -> Result<Self> {
        self.same_shape(o)?;
        Ok(RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.par_iter().zip(o.data.par_iter()).map(|(a, b)| a - b).collect(),
        })
    }

    fn same_shape(&self, o: &RatMatrix) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, o: &RatMatrix) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(Self::from_fn(self.rows, o.cols, |i, j| {
            let mut acc = QTRational::zero();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let b = o.get(k, j);
                if b.is_zero() {
                    continue;
                }
                acc = &acc + &(a * b);
            }
            acc
        }))
    }

    /// Product that panics on a shape mismatch; for internal use where shapes are known.
    pub fn mm(&self, o: &RatMatrix) -> Self {
        self.mul(o).expect("matrix shapes")
    }

    pub fn conjugate(&self) -> Self {
        self.map(|x| x.conjugate())
    }

    pub fn substitute(&self, q: &Subst, t: &Subst) -> Result<Self> {
        self.try_map(|x| x.substitute(q, t))
    }

    pub fn at_q_eq_t(&self) -> Result<Self> {
        self.substitute(&Subst::ToT, &Subst::Keep)
    }

    /// Kronecker product.
    pub fn kron(&self, o: &RatMatrix) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            self.get(i / o.rows, j / o.cols) * o.get(i % o.rows, j % o.cols)
        })
    }

    /// Exact solution of A·X = rhs by Gaussian elimination, choosing the
    /// smallest available pivot in each column.
    pub fn solve(&self, rhs: &RatMatrix) -> Result<RatMatrix> {
        solve_linear(self, rhs)
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        solve_linear(self, &RatMatrix::identity(self.rows))
    }

    pub fn det(&self) -> Result<QTRational> {
        det(self)
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = (0..self.rows).map(|i| self.row(i).iter().map(|x| x.to_text()).collect()).collect();
        let mut widths = vec![0; self.cols];
        for r in &cells {
            for (j, c) in r.iter().enumerate() {
                widths[j] = widths[j].max(c.chars().count());
            }
        }
        let mut out = String::new();
        for r in &cells {
            out.push('[');
            let padded: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(j, c)| format!("{c:>w$}", w = widths[j]))
                .collect();
            out.push_str(&padded.join(", "));
            out.push_str("]\n");
        }
        out
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Solves A·X = rhs exactly.
pub fn solve_linear(a: &RatMatrix, rhs: &RatMatrix) -> Result<RatMatrix> {
    if !a.is_square() {
        return Err(Error::Shape(format!("solve_linear needs a square matrix, got {}x{}", a.rows, a.cols)));
    }
    if rhs.rows != a.rows {
        return Err(Error::Shape(format!("right-hand side has {} rows, expected {}", rhs.rows, a.rows)));
    }
    let n = a.rows;
    let w = n + rhs.cols;
    let mut m: Vec<Vec<QTRational>> = (0..n)
        .map(|i| {
            let mut r = a.row(i).to_vec();
            r.extend(rhs.row(i).iter().cloned());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .filter(|&r| !m[r][col].is_zero())
            .min_by_key(|&r| m[r][col].weight())
            .ok_or(Error::Singular)?;
        m.swap(col, piv);
        let inv = m[col][col].inv()?;
        let pivot_row: Vec<QTRational> = m[col].iter().map(|x| if x.is_zero() { x.clone() } else { x * &inv }).collect();
        let eliminate = |row: &mut Vec<QTRational>| {
            let f = row[col].clone();
            if f.is_zero() {
                return;
            }
            for j in col..w {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &(&f * &pivot_row[j]);
                }
            }
        };
        let (head, tail) = m.split_at_mut(col + 1);
        head[col] = pivot_row.clone();
        if tail.len() >= PAR_ROWS {
            tail.par_iter_mut().for_each(eliminate);
        } else {
            tail.iter_mut().for_each(eliminate);
        }
    }
    // back substitution; pivot rows are already normalized
    for col in (0..n).rev() {
        let pivot_row = m[col].clone();
        let (head, _) = m.split_at_mut(col);
        let eliminate = |row: &mut Vec<QTRational>| {
            let f = row[col].clone();
            if f.is_zero() {
                return;
            }
            for j in n..w {
                if !pivot_row[j].is_zero() {
                    row[j] = &row[j] - &(&f * &pivot_row[j]);
                }
            }
            row[col] = QTRational::zero();
        };
        if head.len() >= PAR_ROWS {
            head.par_iter_mut().for_each(eliminate);
        } else {
            head.iter_mut().for_each(eliminate);
        }
    }
    Ok(RatMatrix::from_fn(n, rhs.cols, |i, j| m[i][n + j].clone()))
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det(a: &RatMatrix) -> Result<QTRational> {
    if !a.is_square() {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    let n = a.rows;
    if n == 0 {
        return Ok(QTRational::one());
    }
    let mut m = a.to_rows();
    let mut sign = false;
    let mut prev = QTRational::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return Ok(QTRational::zero()),
            }
        }
        let pivot = m[k][k].clone();
        let pivot_row = m[k].clone();
        let (_, tail) = m.split_at_mut(k + 1);
        let step = |row: &mut Vec<QTRational>| {
            let f = row[k].clone();
            for j in k + 1..n {
                let v = &(&row[j] * &pivot) - &(&f * &pivot_row[j]);
                row[j] = &v / &prev;
            }
            row[k] = QTRational::zero();
        };
        if tail.len() >= PAR_ROWS {
            tail.par_iter_mut().for_each(step);
        } else {
            tail.iter_mut().for_each(step);
        }
        prev = pivot;
    }
    let d = m[n - 1][n - 1].clone();
    Ok(if sign { -d } else { d })
}

/// Polynomial in λ with `QTRational` coefficients, constant term first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LambdaPoly {
    coeffs: Vec<QTRational>,
}

impl LambdaPoly {
    pub fn new(mut coeffs: Vec<QTRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LambdaPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[QTRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// λ − a
    pub fn linear(a: &QTRational) -> Self {
        Self::new(vec![-a, QTRational::one()])
    }

    pub fn eval_matrix(&self, a: &RatMatrix) -> RatMatrix {
        let n = a.rows();
        let mut acc = RatMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mm(a).add(&RatMatrix::scalar(n, c)).expect("square");
        }
        acc
    }

    pub fn substitute(&self, q: &Subst, t: &Subst) -> Result<LambdaPoly> {
        Ok(Self::new(self.coeffs.iter().map(|c| c.substitute(q, t)).collect::<Result<Vec<_>>>()?))
    }

    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let lam = match k {
                0 => String::new(),
                1 => "λ".to_string(),
                _ => format!("λ^{k}"),
            };
            let coef = if c.is_one() && k > 0 { String::new() } else { format!("({c})") };
            parts.push(match (coef.is_empty(), lam.is_empty()) {
                (true, _) => lam,
                (false, true) => coef,
                (false, false) => format!("{coef}*{lam}"),
            });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// det(λI − A) by Berkowitz's division-free algorithm.
pub fn char_poly(a: &RatMatrix) -> Result<LambdaPoly> {
    if !a.is_square() {
        return Err(Error::Shape("characteristic polynomial of a non-square matrix".into()));
    }
    let n = a.rows;
    if n == 0 {
        return Ok(LambdaPoly::new(vec![QTRational::one()]));
    }
    // vect holds coefficients highest degree first
    let mut vect = vec![QTRational::one(), -a.get(0, 0)];
    for r in 1..n {
        let row: Vec<QTRational> = (0..r).map(|j| a.get(r, j).clone()).collect();
        let mut col: Vec<QTRational> = (0..r).map(|i| a.get(i, r).clone()).collect();
        let mut toeplitz = Vec::with_capacity(r + 2);
        toeplitz.push(QTRational::one());
        toeplitz.push(-a.get(r, r));
        for k in 0..r {
            let rc: QTRational = row.iter().zip(col.iter()).map(|(x, y)| x * y).sum();
            toeplitz.push(-rc);
            if k + 1 < r {
                col = (0..r)
                    .map(|i| (0..r).map(|j| a.get(i, j) * &col[j]).sum())
                    .collect();
            }
        }
        let next: Vec<QTRational> = (0..r + 2)
            .map(|i| (0..=i.min(r)).map(|j| &toeplitz[i - j] * &vect[j]).sum())
            .collect();
        vect = next;
    }
    vect.reverse();
    Ok(LambdaPoly::new(vect))
}

/// Sylvester matrix of two polynomials in λ (coefficients highest first).
fn sylvester_matrix(p: &LambdaPoly, r: &LambdaPoly) -> RatMatrix {
    let dp = p.degree().unwrap_or(0);
    let dr = r.degree().unwrap_or(0);
    let n = dp + dr;
    let mut s = RatMatrix::zeros(n, n);
    for i in 0..dr {
        for (k, c) in p.coeffs().iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for i in 0..dp {
        for (k, c) in r.coeffs().iter().rev().enumerate() {
            s.set(dr + i, i + k, c.clone());
        }
    }
    s
}

/// Resultant of two nonzero polynomials in λ.
pub fn resultant(p: &LambdaPoly, r: &LambdaPoly) -> Result<QTRational> {
    if p.is_zero() || r.is_zero() {
        return Ok(QTRational::zero());
    }
    if p.degree() == Some(0) || r.degree() == Some(0) {
        let a = p.coeffs()[p.coeffs().len() - 1].pow(r.degree().unwrap() as i64)?;
        let b = r.coeffs()[r.coeffs().len() - 1].pow(p.degree().unwrap() as i64)?;
        return Ok(&a * &b);
    }
    det(&sylvester_matrix(p, r))
}

/// Resultant of polynomials with scalar coefficients, by elimination over the scalar field.
fn scalar_resultant(p: &[CycloScalar], r: &[CycloScalar]) -> CycloScalar {
    let dp = p.len() - 1;
    let dr = r.len() - 1;
    let n = dp + dr;
    if n == 0 {
        return CycloScalar::one();
    }
    let mut m = vec![vec![CycloScalar::zero(); n]; n];
    for i in 0..dr {
        for (k, c) in p.iter().rev().enumerate() {
            m[i][i + k] = c.clone();
        }
    }
    for i in 0..dp {
        for (k, c) in r.iter().rev().enumerate() {
            m[dr + i][i + k] = c.clone();
        }
    }
    let mut d = CycloScalar::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return CycloScalar::zero();
        };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        let pv = m[col][col].clone();
        d = &d * &pv;
        let inv = pv.inv().expect("nonzero pivot");
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            for j in col..n {
                let v = &m[i][j] - &(&f * &m[col][j]);
                m[i][j] = v;
            }
        }
    }
    d
}

/// Sample points used to certify a nonzero resultant before falling back to
/// the symbolic computation.
const PROBES: [(i64, i64, i64, i64); 4] = [(3, 7, 5, 11), (-2, 13, 17, 3), (11, 5, -7, 2), (19, 23, 29, 31)];

/// True iff p and r have no common root over an algebraic closure of the
/// (q,t) function field, i.e. their resultant is not identically zero.
pub fn lambda_gcd_trivial(p: &LambdaPoly, r: &LambdaPoly) -> Result<bool> {
    if p.is_zero() || r.is_zero() {
        return Err(Error::Range("lambda_gcd_trivial needs nonzero polynomials".into()));
    }
    if p.degree() == Some(0) || r.degree() == Some(0) {
        return Ok(true);
    }
    for (qn, qd, tn, td) in PROBES {
        let qv = CycloScalar::from_rational(super::rational::rat(qn, qd));
        let tv = CycloScalar::from_rational(super::rational::rat(tn, td));
        let ev = |poly: &LambdaPoly| -> Option<Vec<CycloScalar>> {
            poly.coeffs().iter().rev().map(|c| c.eval(&qv, &tv).ok()).collect()
        };
        let (Some(pv), Some(rv)) = (ev(p), ev(r)) else { continue };
        if pv[0].is_zero() || rv[0].is_zero() {
            continue;
        }
        if !scalar_resultant(&pv, &rv).is_zero() {
            return Ok(true);
        }
    }
    Ok(!resultant(p, r)?.is_zero())
}

/// Solves A·X − X·B = C through the Kronecker linearization
/// (I ⊗ A − Bᵀ ⊗ I)·vec(X) = vec(C), with vec stacking columns.
pub fn solve_sylvester(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix) -> Result<RatMatrix> {
    sylvester_impl(a, b, c, false)
}

/// Same equation, unknowns stacked row by row; used to cross-check uniqueness.
pub fn solve_sylvester_rowwise(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix) -> Result<RatMatrix> {
    sylvester_impl(a, b, c, true)
}

fn sylvester_impl(a: &RatMatrix, b: &RatMatrix, c: &RatMatrix, row_major: bool) -> Result<RatMatrix> {
    let (m, n) = (a.rows, b.rows);
    if !a.is_square() || !b.is_square() || c.rows != m || c.cols != n {
        return Err(Error::Shape(format!(
            "Sylvester equation with A {}x{}, B {}x{}, C {}x{}",
            a.rows, a.cols, b.rows, b.cols, c.rows, c.cols
        )));
    }
    let idx = |i: usize, j: usize| if row_major { i * n + j } else { i + m * j };
    let size = m * n;
    let mut l = RatMatrix::zeros(size, size);
    let mut v = RatMatrix::zeros(size, 1);
    for i in 0..m {
        for j in 0..n {
            let row = idx(i, j);
            v.set(row, 0, c.get(i, j).clone());
            for k in 0..m {
                let x = a.get(i, k);
                if !x.is_zero() {
                    let cur = l.get(row, idx(k, j)) + x;
                    l.set(row, idx(k, j), cur);
                }
            }
            for k in 0..n {
                let x = b.get(k, j);
                if !x.is_zero() {
                    let cur = l.get(row, idx(i, k)) - x;
                    l.set(row, idx(i, k), cur);
                }
            }
        }
    }
    let sol = solve_linear(&l, &v).map_err(|e| match e {
        Error::Singular => Error::SylvesterSingular,
        other => other,
    })?;
    Ok(RatMatrix::from_fn(m, n, |i, j| sol.get(idx(i, j), 0).clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qtpoly::{Mono, QTPoly};

    fn q() -> QTRational {
        QTRational::q()
    }
    fn t() -> QTRational {
        QTRational::t()
    }
    fn one_minus(x: QTRational) -> QTRational {
        &QTRational::one() - &x
    }

    #[test]
    fn solve_examples() {
        let rhs = RatMatrix::from_rows(vec![vec![q()], vec![t()]]);
        assert_eq!(solve_linear(&RatMatrix::identity(2), &rhs).unwrap(), rhs);
        let a = RatMatrix::from_rows(vec![
            vec![one_minus(q()), QTRational::zero()],
            vec![QTRational::zero(), one_minus(t())],
        ]);
        let ones = RatMatrix::from_ints(&[vec![1], vec![1]]);
        let x = solve_linear(&a, &ones).unwrap();
        assert_eq!(x.get(0, 0), &one_minus(q()).inv().unwrap());
        assert_eq!(x.get(1, 0), &one_minus(t()).inv().unwrap());
        let sing = RatMatrix::from_ints(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(solve_linear(&sing, &ones), Err(Error::Singular));
    }

    /// Cramer's rule with cofactor-expansion determinants as an independent oracle.
    fn cofactor_det(m: &[Vec<i64>]) -> i64 {
        let n = m.len();
        if n == 1 {
            return m[0][0];
        }
        (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, x)| *x).collect()).collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * cofactor_det(&minor)
            })
            .sum()
    }

    #[test]
    fn solve_matches_cramer() {
        let a = vec![vec![2, -1, 3], vec![1, 4, -2], vec![5, 0, 1]];
        let b = [7, -3, 4];
        let d = cofactor_det(&a);
        assert_ne!(d, 0);
        let x = solve_linear(&RatMatrix::from_ints(&a), &RatMatrix::from_ints(&b.iter().map(|&v| vec![v]).collect::<Vec<_>>())).unwrap();
        for j in 0..3 {
            let mut aj = a.clone();
            for i in 0..3 {
                aj[i][j] = b[i];
            }
            let expect = QTRational::from_rational(crate::algebra::rational::rat(cofactor_det(&aj), d));
            assert_eq!(x.get(j, 0), &expect);
        }
        assert_eq!(det(&RatMatrix::from_ints(&a)).unwrap(), QTRational::from_int(d));
    }

    #[test]
    fn char_poly_examples() {
        let p = char_poly(&RatMatrix::from_ints(&[vec![1]])).unwrap();
        assert_eq!(p, LambdaPoly::new(vec![QTRational::from_int(-1), QTRational::one()]));

        let b = QTRational::from_poly(QTPoly::from_terms([
            (Mono::new(1, 3), CycloScalar::one()),
            (Mono::new(1, 1), CycloScalar::one()),
        ]));
        let p = char_poly(&RatMatrix::from_rows(vec![vec![b.clone()]])).unwrap();
        assert_eq!(p, LambdaPoly::linear(&b));

        // companion matrix of λ² − c1 λ − c0
        let (c0, c1) = (q(), t());
        let comp = RatMatrix::from_rows(vec![vec![QTRational::zero(), c0.clone()], vec![QTRational::one(), c1.clone()]]);
        let p = char_poly(&comp).unwrap();
        assert_eq!(p, LambdaPoly::new(vec![-c0, -c1, QTRational::one()]));
    }

    #[test]
    fn cayley_hamilton() {
        let m = RatMatrix::from_rows(vec![
            vec![q(), QTRational::one(), t()],
            vec![QTRational::from_int(2), one_minus(q()), QTRational::zero()],
            vec![t(), q(), &q() * &t()],
        ]);
        let p = char_poly(&m).unwrap();
        assert!(p.eval_matrix(&m).is_zero());
        // constant term is (-1)^n det
        assert_eq!(p.coeffs()[0], -det(&m).unwrap());
    }

    #[test]
    fn gcd_examples() {
        let l1 = LambdaPoly::linear(&QTRational::one());
        let b = QTRational::from_poly(QTPoly::from_terms([
            (Mono::new(1, 3), CycloScalar::one()),
            (Mono::new(1, 1), CycloScalar::one()),
        ]));
        assert!(lambda_gcd_trivial(&l1, &LambdaPoly::linear(&b)).unwrap());
        assert_eq!(resultant(&l1, &LambdaPoly::linear(&b)).unwrap(), &QTRational::one() - &b);
        assert!(!lambda_gcd_trivial(&l1, &l1).unwrap());
        let p = LambdaPoly::new(vec![-&(&q() * &t()), QTRational::zero(), QTRational::one()]);
        let r = LambdaPoly::linear(&q());
        assert!(lambda_gcd_trivial(&p, &r).unwrap());
        // resultant: q^2 - q t
        assert_eq!(resultant(&p, &r).unwrap(), &(&q() * &q()) - &(&q() * &t()));
        // shared factor over the function field
        let f = LambdaPoly::new(vec![-q(), QTRational::one()]);
        let g = LambdaPoly::new(vec![-&(&q() * &q()), QTRational::zero(), QTRational::one()]);
        assert!(!lambda_gcd_trivial(&f, &g).unwrap());
    }

    #[test]
    fn sylvester_examples() {
        let a = RatMatrix::from_ints(&[vec![2]]);
        let b = RatMatrix::from_ints(&[vec![1]]);
        let c = RatMatrix::from_ints(&[vec![1]]);
        assert_eq!(solve_sylvester(&a, &b, &c).unwrap(), c);

        let a = RatMatrix::from_rows(vec![vec![q(), QTRational::one()], vec![QTRational::zero(), t()]]);
        let b = RatMatrix::from_rows(vec![vec![&q() + &t()]]);
        let zero = RatMatrix::zeros(2, 1);
        assert!(solve_sylvester(&a, &b, &zero).unwrap().is_zero());

        let c = RatMatrix::from_rows(vec![vec![QTRational::one()], vec![q()]]);
        let x = solve_sylvester(&a, &b, &c).unwrap();
        assert_eq!(a.mm(&x).sub(&x.mm(&b)).unwrap(), c);
        // dense Kronecker oracle: (I ⊗ A − Bᵀ ⊗ I) vec X = vec C
        let l = RatMatrix::identity(1).kron(&a).sub(&b.transpose().kron(&RatMatrix::identity(2))).unwrap();
        let vx = solve_linear(&l, &c).unwrap();
        assert_eq!(vx, x);
        assert_eq!(solve_sylvester_rowwise(&a, &b, &c).unwrap(), x);

        let shared = RatMatrix::from_rows(vec![vec![q()]]);
        assert_eq!(solve_sylvester(&a, &shared, &c), Err(Error::SylvesterSingular));
    }
}
