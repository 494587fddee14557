//! Classical two-parameter Macdonald polynomials by Gram-Schmidt on monomials
//! with ⟨p_λ, p_μ⟩ = δ z_λ ∏ (1 − q^λi)/(1 − t^λi). Shares only the field
//! arithmetic with the library.

use std::collections::BTreeMap;

use wreath_macdonald::algebra::{QTRational, RatMatrix};

/// Partitions of n, lexicographically decreasing.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            cur.push(p);
            go(n - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Coefficient of x^λ in p_μ: ways to send each part of μ to a row of λ filling it exactly.
fn p_in_m(mu: &[u32], lam: &[u32]) -> i64 {
    fn go(parts: &[u32], room: &mut Vec<u32>) -> i64 {
        let Some((&p, rest)) = parts.split_first() else {
            return room.iter().all(|&r| r == 0) as i64;
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= p {
                room[i] -= p;
                total += go(rest, room);
                room[i] += p;
            }
        }
        total
    }
    go(mu, &mut lam.to_vec())
}

fn z(lam: &[u32]) -> QTRational {
    let mut counts = BTreeMap::new();
    for &p in lam {
        *counts.entry(p).or_insert(0u32) += 1;
    }
    let mut zl: i64 = 1;
    for (&p, &c) in &counts {
        zl *= (p as i64).pow(c) * (1..=c as i64).product::<i64>();
    }
    let one = QTRational::one();
    lam.iter().fold(QTRational::from_int(zl), |acc, &p| {
        let ratio = &(&one - &QTRational::q_pow(p)) / &(&one - &QTRational::t_pow(p as i64));
        &acc * &ratio
    })
}

/// Rows: m-coefficients of P_λ for λ in `partitions(n)` order.
pub fn macdonald_p(n: u32) -> (Vec<Vec<u32>>, RatMatrix) {
    let parts = partitions(n);
    let k = parts.len();
    let r = RatMatrix::from_ints(&parts.iter().map(|mu| parts.iter().map(|lam| p_in_m(mu, lam)).collect()).collect::<Vec<_>>());
    let rinv = r.inverse().unwrap();
    let zs: Vec<QTRational> = parts.iter().map(|l| z(l)).collect();
    // g[a][b] = ⟨m_a, m_b⟩
    let g = RatMatrix::from_fn(k, k, |a, b| (0..k).map(|mu| &(rinv.get(a, mu) * rinv.get(b, mu)) * &zs[mu]).sum());
    let mut out = RatMatrix::identity(k);
    for i in 0..k {
        let lower: Vec<usize> = (i + 1..k).collect();
        if lower.is_empty() {
            continue;
        }
        // Σ_μ c_μ ⟨m_μ, m_ν⟩ = −⟨m_λ, m_ν⟩ for ν below λ
        let a = RatMatrix::from_fn(lower.len(), lower.len(), |x, y| g.get(lower[y], lower[x]).clone());
        let rhs = RatMatrix::from_fn(lower.len(), 1, |x, _| -g.get(i, lower[x]).clone());
        let c = a.solve(&rhs).unwrap();
        for (x, &j) in lower.iter().enumerate() {
            out.set(i, j, c.get(x, 0).clone());
        }
    }
    (parts, out)
}
