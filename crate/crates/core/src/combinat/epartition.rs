//! e-partitions: e-tuples of partitions, the labels of every basis.

use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::partition::{partitions, Partition};
use super::shape::MShape;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct EPartition {
    comps: Vec<Partition>,
}

impl EPartition {
    pub fn new(comps: Vec<Partition>) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::Shape("an e-partition needs e >= 1 components".into()));
        }
        Ok(EPartition { comps })
    }

    pub fn from_vecs(rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| Partition::new(r.clone())).collect::<Result<_>>()?)
    }

    pub fn empty(e: usize) -> Self {
        EPartition { comps: vec![Partition::empty(); e.max(1)] }
    }

    /// A single part m in component k.
    pub fn single(e: usize, k: usize, m: u32) -> Self {
        let mut a = Self::empty(e);
        a.comps[k] = Partition::new(vec![m]).expect("single part");
        a
    }

    pub fn e(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Partition] {
        &self.comps
    }

    pub fn comp(&self, k: usize) -> &Partition {
        &self.comps[k]
    }

    pub fn size(&self) -> u32 {
        self.comps.iter().map(|p| p.size()).sum()
    }

    /// l(a) = Σ l(α^(k))
    pub fn length(&self) -> usize {
        self.comps.iter().map(|p| p.len()).sum()
    }

    pub fn fits(&self, shape: &MShape) -> bool {
        shape.e() == self.e() && self.comps.iter().zip(shape.m()).all(|(p, &m)| p.len() <= m)
    }

    /// Centralizer order z_a = e^{l(a)} Π z_{α^(k)}.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::from(self.e()).pow(self.length() as u32);
        for p in &self.comps {
            z *= p.z();
        }
        z
    }

    /// Rows padded with zeros to the shape's lengths.
    pub fn padded_rows(&self, shape: &MShape) -> Vec<Vec<u32>> {
        self.comps
            .iter()
            .zip(shape.m())
            .map(|(p, &m)| (0..m).map(|i| p.part(i)).collect())
            .collect()
    }

    /// Text form such as "(21;21)" or "(2;-)".
    pub fn to_text(&self) -> String {
        let parts: Vec<String> = self.comps.iter().map(|p| p.to_string()).collect();
        format!("({})", parts.join(";"))
    }

    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("e-partition must look like (21;1): {s:?}")))?;
        Self::new(inner.split(';').map(Partition::parse).collect::<Result<_>>()?)
    }

    pub fn to_json(&self) -> Value {
        json!(self.comps.iter().map(|p| p.parts().to_vec()).collect::<Vec<_>>())
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let rows: Vec<Vec<u32>> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(format!("e-partition JSON: {e}")))?;
        Self::from_vecs(&rows)
    }
}

impl fmt::Display for EPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Compositions of n into e nonnegative parts, first part largest first.
fn compositions(n: u32, e: usize) -> Vec<Vec<u32>> {
    if e == 1 {
        return vec![vec![n]];
    }
    let mut out = Vec::new();
    for first in (0..=n).rev() {
        for mut rest in compositions(n - first, e - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All e-partitions of n: compositions with |α⁰| largest first, then each
/// component in decreasing lexicographic order.
pub fn all_epartitions(n: u32, e: usize) -> Vec<EPartition> {
    fn product(lists: &[Vec<Partition>], cur: &mut Vec<Partition>, out: &mut Vec<EPartition>) {
        match lists.split_first() {
            None => out.push(EPartition { comps: cur.clone() }),
            Some((head, tail)) => {
                for p in head {
                    cur.push(p.clone());
                    product(tail, cur, out);
                    cur.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    for comp in compositions(n, e) {
        let lists: Vec<Vec<Partition>> = comp.iter().map(|&k| partitions(k)).collect();
        product(&lists, &mut Vec::new(), &mut out);
    }
    out
}

/// e-partitions of n with l(α^(k)) ≤ m_k.
pub fn enum_epartitions(n: u32, shape: &MShape) -> Vec<EPartition> {
    all_epartitions(n, shape.e()).into_iter().filter(|a| a.fits(shape)).collect()
}
