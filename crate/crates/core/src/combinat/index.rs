//! Index vectors and index sets for the operators D^r, the moves T±_J, and
//! straightening of exponent arrays.

use super::shape::MShape;
use crate::error::{Error, Result};

/// e rows, row k of length m_k.
pub type ExponentArray = Vec<Vec<u32>>;

/// i = (i_0, ..., i_{e-1}) with 0-based entries i_k < m_k.
pub type IndexVector = Vec<usize>;

/// r index vectors, pairwise different in every coordinate.
pub type IndexSet = Vec<IndexVector>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::new(), &mut out);
    out
}

fn arrangements(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, r: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(n, r, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, r, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// 𝓘_r: each set listed once, with row-0 coordinates increasing.
pub fn enum_index_sets(r: usize, shape: &MShape) -> Result<Vec<IndexSet>> {
    if r == 0 || r > shape.m1() {
        return Err(Error::Range(format!("operator degree r={r} must lie in 1..={}", shape.m1())));
    }
    let m = shape.m();
    let mut partial: Vec<Vec<Vec<usize>>> = combinations(m[0], r).into_iter().map(|c| vec![c]).collect();
    for &mk in &m[1..] {
        let arr = arrangements(mk, r);
        partial = partial
            .into_iter()
            .flat_map(|p| {
                arr.iter().map(move |a| {
                    let mut q = p.clone();
                    q.push(a.clone());
                    q
                })
            })
            .collect();
    }
    // transpose columns-of-rows into r vectors
    Ok(partial.into_iter().map(|cols| (0..r).map(|j| cols.iter().map(|c| c[j]).collect()).collect()).collect())
}

/// ⟨β, J⟩ and β_{J±}: for each i in J the entry at (k, i_k) moves to
/// (k-1, i_{k-1}) for + and to (k+1, i_{k+1}) for -, indices mod e.
pub fn apply_j(beta: &ExponentArray, j: &IndexSet, sign: Sign) -> (u64, ExponentArray) {
    let e = beta.len();
    let mut pairing = 0u64;
    let mut moved = beta.clone();
    for i in j {
        for k in 0..e {
            let x = beta[k][i[k]];
            pairing += x as u64;
            let dst = match sign {
                Sign::Plus => (k + e - 1) % e,
                Sign::Minus => (k + 1) % e,
            };
            moved[dst][i[dst]] = x;
        }
    }
    (pairing, moved)
}

/// Sorts each row decreasingly. Returns sign 0 when some row repeats an entry,
/// otherwise the product of the sorting-permutation signs.
pub fn straighten(gamma: &ExponentArray) -> (i32, ExponentArray) {
    let mut sign = 1;
    let mut out = Vec::with_capacity(gamma.len());
    for row in gamma {
        let mut v = row.clone();
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] < v[j] {
                v.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return (0, gamma.clone());
        }
        out.push(v);
    }
    (sign, out)
}

/// ⟨δ, i⟩ with δ the staircase (m_k - 1, ..., 0) in each row.
pub fn delta_pairing(shape: &MShape, i: &IndexVector) -> u64 {
    shape.m().iter().zip(i).map(|(&m, &ik)| (m - 1 - ik) as u64).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(m: &[usize]) -> MShape {
        MShape::new(m.to_vec()).unwrap()
    }

    #[test]
    fn index_set_counts() {
        assert_eq!(enum_index_sets(1, &sh(&[2, 1])).unwrap().len(), 2);
        assert_eq!(enum_index_sets(1, &sh(&[3, 2])).unwrap().len(), 6);
        assert!(enum_index_sets(2, &sh(&[2, 1])).is_err());
        // brute force: unordered pairs of vectors in [2]x[2] disjoint in each coordinate
        let vecs: Vec<Vec<usize>> = (0..2).flat_map(|a| (0..2).map(move |b| vec![a, b])).collect();
        let mut count = 0;
        for x in 0..vecs.len() {
            for y in x + 1..vecs.len() {
                if vecs[x].iter().zip(&vecs[y]).all(|(p, q)| p != q) {
                    count += 1;
                }
            }
        }
        assert_eq!(enum_index_sets(2, &sh(&[2, 2])).unwrap().len(), count);
        let mut count3 = 0;
        let v3: Vec<Vec<usize>> =
            (0..3).flat_map(|a| (0..3).flat_map(move |b| (0..2).map(move |c| vec![a, b, c]))).collect();
        for x in 0..v3.len() {
            for y in x + 1..v3.len() {
                if v3[x].iter().zip(&v3[y]).all(|(p, q)| p != q) {
                    count3 += 1;
                }
            }
        }
        assert_eq!(enum_index_sets(2, &sh(&[3, 3, 2])).unwrap().len(), count3);
    }

    #[test]
    fn apply_j_examples() {
        let beta = vec![vec![2, 1, 0], vec![2, 1]];
        let (p, m) = apply_j(&beta, &vec![vec![0, 0]], Sign::Plus);
        assert_eq!((p, m), (4, beta.clone()));
        let beta = vec![vec![2, 0], vec![1]];
        let (p, m) = apply_j(&beta, &vec![vec![1, 0]], Sign::Plus);
        assert_eq!((p, m), (1, vec![vec![2, 1], vec![0]]));
        let (p, m) = apply_j(&beta, &vec![], Sign::Plus);
        assert_eq!((p, m), (0, beta));
    }

    #[test]
    fn apply_j_inverse() {
        let beta = vec![vec![5, 3, 1], vec![4, 2], vec![7, 6]];
        for j in enum_index_sets(2, &sh(&[3, 2, 2])).unwrap() {
            let (_, m) = apply_j(&beta, &j, Sign::Plus);
            let (_, back) = apply_j(&m, &j, Sign::Minus);
            assert_eq!(back, beta);
        }
    }

    fn parity_oracle(v: &[u32]) -> i32 {
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] < v[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn straighten_examples() {
        assert_eq!(straighten(&vec![vec![0, 1], vec![2]]), (-1, vec![vec![1, 0], vec![2]]));
        assert_eq!(straighten(&vec![vec![2, 2], vec![1]]).0, 0);
        let g = vec![vec![3, 1], vec![0]];
        assert_eq!(straighten(&g), (1, g));
        let g = vec![vec![0, 4, 2, 7], vec![1, 3]];
        assert_eq!(straighten(&g).0, parity_oracle(&g[0]) * parity_oracle(&g[1]));
    }

    #[test]
    fn delta() {
        assert_eq!(delta_pairing(&sh(&[3, 2]), &vec![0, 0]), 3);
        assert_eq!(delta_pairing(&sh(&[3, 2]), &vec![2, 1]), 0);
    }
}
