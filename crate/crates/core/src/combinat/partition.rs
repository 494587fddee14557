//! Integer partitions, symmetric-group characters and Kostka numbers.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition; trailing zeros are stripped on construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts first.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// n(λ) = Σ (i−1) λ_i
    pub fn n_value(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    pub fn conjugate(&self) -> Partition {
        let l = self.part(0) as usize;
        Partition((0..l).map(|j| self.0.iter().filter(|&&p| p as usize > j).count() as u32).collect())
    }

    /// Multiplicity m_i of each part size i ≥ 1.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// z_λ = Π i^{m_i} m_i!
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        for (p, m) in self.multiplicities() {
            for k in 1..=m {
                z *= BigInt::from(p) * BigInt::from(k);
            }
        }
        z
    }

    /// Weak dominance λ ≤ μ for partitions of the same size.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..n {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return false;
            }
        }
        true
    }

    /// Compact text: "21", "311"; parts ≥ 10 force comma separation.
    pub fn to_text(&self) -> String {
        if self.0.iter().any(|&p| p >= 10) {
            self.0.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
        } else {
            self.0.iter().map(|p| p.to_string()).collect()
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Self::empty());
        }
        let parts: Vec<u32> = if s.contains(',') || s.contains(' ') {
            s.split([',', ' '])
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad part {x:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| Error::Parse(format!("bad part {c:?}"))))
                .collect::<Result<_>>()?
        };
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("-")
        } else {
            f.write_str(&self.to_text())
        }
    }
}

/// All partitions of n in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n, usize::MAX)
}

/// Partitions of n with largest part ≤ max_part and at most max_len parts,
/// in decreasing lexicographic order.
pub fn partitions_bounded(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn rec(n: u32, max_part: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if max_len == 0 {
            return;
        }
        for p in (1..=n.min(max_part)).rev() {
            cur.push(p);
            rec(n - p, p, max_len - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

type CharKey = (Vec<u32>, Vec<u32>);

fn char_cache() -> &'static Mutex<HashMap<CharKey, i64>> {
    static C: OnceLock<Mutex<HashMap<CharKey, i64>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// χ^λ(μ) by the Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::Shape(format!("|{lambda}| != |{mu}|")));
    }
    Ok(mn_rec(lambda.parts(), mu.parts()))
}

fn mn_rec(lambda: &[u32], mu: &[u32]) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = char_cache().lock().unwrap().get(&key) {
        return v;
    }
    let r = mu[0];
    let l = lambda.len();
    // beta-numbers λ_i + (l − i), strictly decreasing
    let beta: Vec<i64> = lambda.iter().enumerate().map(|(i, &p)| p as i64 + (l - 1 - i) as i64).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        let nb = b - r as i64;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let nl = nbeta.len();
        let parts: Vec<u32> = nbeta
            .iter()
            .enumerate()
            .map(|(j, &x)| (x - (nl - 1 - j) as i64) as u32)
            .filter(|&p| p > 0)
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&parts, &mu[1..]);
    }
    char_cache().lock().unwrap().insert(key, total);
    total
}

fn kostka_cache() -> &'static Mutex<HashMap<CharKey, u64>> {
    static C: OnceLock<Mutex<HashMap<CharKey, u64>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Number of semistandard tableaux of shape λ and content μ (μ may be any
/// composition; the count does not depend on its order).
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<u64> {
    if lambda.size() != mu.size() {
        return Err(Error::Shape(format!("|{lambda}| != |{mu}|")));
    }
    Ok(kostka_rec(lambda.parts(), mu.parts()))
}

fn kostka_rec(lambda: &[u32], mu: &[u32]) -> u64 {
    let Some((&last, rest)) = mu.split_last() else {
        return u64::from(lambda.is_empty());
    };
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = kostka_cache().lock().unwrap().get(&key) {
        return v;
    }
    // remove a horizontal strip of size `last` holding the largest letter
    let mut total = 0;
    let mut nu = lambda.to_vec();
    fn strips(lambda: &[u32], i: usize, left: u32, nu: &mut Vec<u32>, rest: &[u32], total: &mut u64) {
        if i == lambda.len() {
            if left == 0 {
                let parts: Vec<u32> = nu.iter().copied().filter(|&p| p > 0).collect();
                *total += kostka_rec(&parts, rest);
            }
            return;
        }
        let lower = lambda.get(i + 1).copied().unwrap_or(0);
        let max_take = (lambda[i] - lower).min(left);
        for take in 0..=max_take {
            nu[i] = lambda[i] - take;
            strips(lambda, i + 1, left - take, nu, rest, total);
        }
        nu[i] = lambda[i];
    }
    strips(lambda, 0, last, &mut nu, rest, &mut total);
    kostka_cache().lock().unwrap().insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions_bounded(4, 4, 2).len(), 3);
    }

    #[test]
    fn basic_statistics() {
        assert_eq!(p(&[3, 1, 0]).len(), 2);
        assert_eq!(p(&[2, 2, 1]).n_value(), 4);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1, 1]).z(), BigInt::from(4));
        assert!(p(&[2, 2]).dominated_by(&p(&[3, 1])));
        assert!(!p(&[3, 1]).dominated_by(&p(&[2, 2])));
        assert_eq!(Partition::parse("211").unwrap(), p(&[2, 1, 1]));
        assert_eq!(Partition::parse("12,3").unwrap(), p(&[12, 3]));
        assert!(Partition::parse("12").is_err());
    }

    #[test]
    fn character_examples() {
        assert_eq!(mn_character(&p(&[3]), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=5 {
            let ps = partitions(n);
            for mu in &ps {
                for nu in &ps {
                    let s: i64 = ps.iter().map(|l| mn_character(l, mu).unwrap() * mn_character(l, nu).unwrap()).sum();
                    let expect = if mu == nu { i64::try_from(mu.z()).unwrap() } else { 0 };
                    assert_eq!(s, expect);
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[3, 1]), &p(&[3, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[1, 1]), &p(&[2])).unwrap(), 0);
        // K_{λ,1^n} equals the dimension χ^λ(1^n)
        for n in 1..=5 {
            let ones = Partition::new(vec![1; n as usize]).unwrap();
            for l in partitions(n) {
                assert_eq!(kostka(&l, &ones).unwrap() as i64, mn_character(&l, &ones).unwrap());
            }
        }
    }
}
