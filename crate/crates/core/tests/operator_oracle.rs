//! D^r checked as a difference operator on actual polynomials:
//! a_δ · D^r f = Σ_{J ∈ 𝓘_r} T_{t,J}(a_δ) · T_{q,J}(f), with T_{u,J} replacing
//! x^(k)_{i_k} by u·x^(k∓1)_{i_{k∓1}} for every i in J.

use wreath_macdonald::algebra::QTRational;
use wreath_macdonald::combinat::{enum_epartitions, MShape, Sign};
use wreath_macdonald::macdonald::apply_d;
use wreath_macdonald::symfun::{monomial_orbit, to_finite, Basis, FinitePoly, MPoly, SymFunc};

fn offset(shape: &MShape, k: usize) -> usize {
    shape.m()[..k].iter().sum()
}

/// All index vectors i with 0 ≤ i_k < m_k.
fn index_vectors(shape: &MShape) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &m in shape.m() {
        out = out.into_iter().flat_map(|v: Vec<usize>| (0..m).map(move |j| [v.clone(), vec![j]].concat())).collect();
    }
    out
}

/// r-element sets of index vectors pairwise different in every coordinate, each set once.
fn index_sets(shape: &MShape, r: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(all: &[Vec<usize>], start: usize, r: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..all.len() {
            if cur.iter().all(|c| c.iter().zip(&all[i]).all(|(a, b)| a != b)) {
                cur.push(all[i].clone());
                go(all, i + 1, r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&index_vectors(shape), 0, r, &mut Vec::new(), &mut out);
    out
}

fn t_op(p: &MPoly, shape: &MShape, j: &[Vec<usize>], u: &QTRational, sign: Sign) -> MPoly {
    let e = shape.e();
    let mut out = MPoly::zero(p.nvars());
    for (ex, c) in p.terms() {
        let mut new = ex.clone();
        let mut moved = 0;
        for i in j {
            for k in 0..e {
                let k2 = match sign {
                    Sign::Plus => (k + e - 1) % e,
                    Sign::Minus => (k + 1) % e,
                };
                let src = offset(shape, k) + i[k];
                let dst = offset(shape, k2) + i[k2];
                new[dst] = ex[src];
                moved += ex[src];
            }
        }
        out.add_term(new, &(c * &u.pow(moved as i64).unwrap()));
    }
    out
}

fn vandermonde(shape: &MShape) -> MPoly {
    let mut out = MPoly::one(shape.total());
    for (k, &m) in shape.m().iter().enumerate() {
        for i in 0..m {
            for j in i + 1..m {
                let d = MPoly::var(shape.total(), offset(shape, k) + i).sub(&MPoly::var(shape.total(), offset(shape, k) + j));
                out = out.mul(&d);
            }
        }
    }
    out
}

fn check(n: u32, shape: &MShape, rmax: usize) {
    let ad = vandermonde(shape);
    let (q, t) = (QTRational::q(), QTRational::t());
    for r in 1..=rmax.min(shape.m1()) {
        let sets = index_sets(shape, r);
        for sign in [Sign::Plus, Sign::Minus] {
            for a in enum_epartitions(n, shape) {
                let f = monomial_orbit(&a, shape);
                let rhs = sets.iter().fold(MPoly::zero(shape.total()), |acc, j| {
                    acc.add(&t_op(&ad, shape, j, &t, sign).mul(&t_op(f.poly(), shape, j, &q, sign)))
                });
                let d = apply_d(r, sign, &SymFunc::basis_element(Basis::Monomial, &a), shape).unwrap();
                let lhs = ad.mul(to_finite(&d, shape).unwrap().poly());
                assert_eq!(lhs, rhs, "D^{r}{} m_{a} at {shape}", sign.symbol());
            }
        }
    }
}

#[test]
fn classical_rows() {
    check(2, &MShape::new(vec![3]).unwrap(), 3);
}

#[test]
fn two_rows() {
    check(2, &MShape::new(vec![2, 1]).unwrap(), 1);
    check(2, &MShape::new(vec![3, 2]).unwrap(), 2);
    check(1, &MShape::new(vec![4, 3]).unwrap(), 2);
    check(2, &MShape::new(vec![4, 3]).unwrap(), 2);
}

#[test]
fn three_rows() {
    check(1, &MShape::new(vec![2, 2, 2]).unwrap(), 2);
}

#[test]
fn finite_poly_is_flat_rows() {
    let shape = MShape::new(vec![2, 1]).unwrap();
    assert_eq!(FinitePoly::var(&shape, 1, 0).poly(), &MPoly::var(3, 2));
}
