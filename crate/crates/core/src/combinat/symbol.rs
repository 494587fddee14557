//! e-symbols Λ = a + Λ⁰ of type (r, s).

use std::fmt;

use serde_json::{json, Value};

use super::epartition::EPartition;
use super::partition::Partition;
use super::shape::{MShape, SymbolType};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Symbol {
    shape: MShape,
    stype: SymbolType,
    rows: Vec<Vec<u32>>,
}

/// Staircase offsets: row 0 is ((m_0-1)r, ..., r, 0), row k is (s+(m_k-1)r, ..., s).
pub fn lambda0_rows(shape: &MShape, stype: SymbolType) -> Vec<Vec<u32>> {
    shape
        .m()
        .iter()
        .enumerate()
        .map(|(k, &m)| {
            let base = if k == 0 { 0 } else { stype.s };
            (0..m as u32).rev().map(|j| base + j * stype.r).collect()
        })
        .collect()
}

/// Σ over unordered pairs of min, for a multiset of entries.
fn pair_min_sum(entries: &mut [u32]) -> u64 {
    entries.sort_unstable_by(|a, b| b.cmp(a));
    entries.iter().enumerate().map(|(i, &x)| i as u64 * x as u64).sum()
}

impl Symbol {
    pub fn lambda0(shape: &MShape, stype: SymbolType) -> Symbol {
        Symbol { shape: shape.clone(), stype, rows: lambda0_rows(shape, stype) }
    }

    pub fn from_epartition(a: &EPartition, shape: &MShape, stype: SymbolType) -> Result<Symbol> {
        if !a.fits(shape) {
            return Err(Error::Shape(format!("{a} does not fit shape {shape}")));
        }
        let rows = a
            .padded_rows(shape)
            .iter()
            .zip(lambda0_rows(shape, stype))
            .map(|(x, d)| x.iter().zip(&d).map(|(p, q)| p + q).collect())
            .collect();
        Ok(Symbol { shape: shape.clone(), stype, rows })
    }

    /// Validates that subtracting Λ⁰ leaves an e-partition.
    pub fn from_rows(shape: &MShape, stype: SymbolType, rows: Vec<Vec<u32>>) -> Result<Symbol> {
        let sym = Symbol { shape: shape.clone(), stype, rows };
        sym.try_epartition()?;
        Ok(sym)
    }

    fn try_epartition(&self) -> Result<EPartition> {
        let l0 = lambda0_rows(&self.shape, self.stype);
        if self.rows.len() != l0.len() || self.rows.iter().zip(&l0).any(|(r, d)| r.len() != d.len()) {
            return Err(Error::Shape(format!("symbol rows do not match shape {}", self.shape)));
        }
        let mut comps = Vec::new();
        for (row, d) in self.rows.iter().zip(&l0) {
            let mut parts = Vec::with_capacity(row.len());
            for (x, y) in row.iter().zip(d) {
                parts.push(x.checked_sub(*y).ok_or_else(|| Error::Shape("symbol entry below Λ⁰".into()))?);
            }
            comps.push(Partition::new(parts)?);
        }
        EPartition::new(comps)
    }

    pub fn to_epartition(&self) -> EPartition {
        self.try_epartition().expect("symbol invariant")
    }

    pub fn shape(&self) -> &MShape {
        &self.shape
    }

    pub fn stype(&self) -> SymbolType {
        self.stype
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, k: usize) -> &[u32] {
        &self.rows[k]
    }

    /// Λ'_0 = (Λ_0 + r) ∪ {0}, Λ'_k = (Λ_k + r) ∪ {s}.
    pub fn shift(&self) -> Symbol {
        let SymbolType { r, s } = self.stype;
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(k, row)| {
                let mut v: Vec<u32> = row.iter().map(|x| x + r).collect();
                v.push(if k == 0 { 0 } else { s });
                v
            })
            .collect();
        Symbol { shape: self.shape.shift(), stype: self.stype, rows }
    }

    /// Shifts until the shape is `target`; errors if target is not reachable.
    pub fn shift_to(&self, target: &MShape) -> Result<Symbol> {
        let d = target.m().first().copied().unwrap_or(0) as isize - self.shape.m()[0] as isize;
        let ok = d >= 0
            && target.e() == self.shape.e()
            && target.m().iter().zip(self.shape.m()).all(|(a, b)| *a as isize - *b as isize == d);
        if !ok {
            return Err(Error::Shape(format!("cannot shift {} to {}", self.shape, target)));
        }
        let mut out = self.clone();
        for _ in 0..d {
            out = out.shift();
        }
        Ok(out)
    }

    /// All entries sorted descending; two symbols of one shape are similar iff these agree.
    pub fn entries(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.rows.iter().flatten().copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// Similarity, after shifting both to a common shape.
    pub fn similar(&self, other: &Symbol) -> bool {
        if self.stype != other.stype || self.shape.e() != other.shape.e() {
            return false;
        }
        let (a, b) = if self.shape.m()[0] <= other.shape.m()[0] { (self, other) } else { (other, self) };
        match a.shift_to(&b.shape) {
            Ok(a2) => a2.entries() == b.entries(),
            Err(_) => false,
        }
    }

    /// a(Λ) = Σ min over pairs of entries of Λ minus the same for Λ⁰.
    pub fn a_value(&self) -> u64 {
        let mut x: Vec<u32> = self.rows.iter().flatten().copied().collect();
        let mut y: Vec<u32> = lambda0_rows(&self.shape, self.stype).into_iter().flatten().collect();
        pair_min_sum(&mut x) - pair_min_sum(&mut y)
    }

    /// Λ⁰_1, Λ¹_1, ..., Λ^{e-1}_1, Λ⁰_2, ... skipping exhausted rows.
    pub fn reading_sequence(&self) -> Vec<u32> {
        let len = self.rows.iter().map(|r| r.len()).max().unwrap_or(0);
        let mut out = Vec::new();
        for j in 0..len {
            for row in &self.rows {
                if let Some(&x) = row.get(j) {
                    out.push(x);
                }
            }
        }
        out
    }

    /// The reading sequence is weakly decreasing.
    pub fn is_special(&self) -> bool {
        self.reading_sequence().windows(2).all(|w| w[0] >= w[1])
    }

    /// Concatenated rows, used for lexicographic tie-breaks.
    pub fn concat(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// "(4 2 0 | 3 1)"
    pub fn to_text(&self) -> String {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        format!("({})", rows.join(" | "))
    }

    pub fn parse(s: &str, stype: SymbolType) -> Result<Symbol> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("symbol must look like (3 0 | 0): {s:?}")))?;
        let rows = inner
            .split('|')
            .map(|r| {
                r.split_whitespace()
                    .map(|x| x.parse::<u32>().map_err(|_| Error::Parse(format!("bad symbol entry {x:?}"))))
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let shape = MShape::new(rows.iter().map(|r| r.len()).collect())?;
        Symbol::from_rows(&shape, stype, rows)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "rows": self.rows,
            "r": self.stype.r,
            "s": self.stype.s,
            "shape": self.shape.m(),
        })
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::epartition::all_epartitions;

    const U: SymbolType = SymbolType::UNIPOTENT;

    fn sh(m: &[usize]) -> MShape {
        MShape::new(m.to_vec()).unwrap()
    }

    fn sym(s: &str) -> Symbol {
        Symbol::parse(s, U).unwrap()
    }

    #[test]
    fn symbol_of_examples() {
        let a = EPartition::parse("(2;-)").unwrap();
        assert_eq!(Symbol::from_epartition(&a, &sh(&[2, 1]), U).unwrap().to_text(), "(3 0 | 0)");
        let a = EPartition::parse("(1;1)").unwrap();
        assert_eq!(Symbol::from_epartition(&a, &sh(&[2, 1]), U).unwrap().to_text(), "(2 0 | 1)");
        let l0 = Symbol::from_epartition(&EPartition::empty(2), &sh(&[3, 2]), U).unwrap();
        assert_eq!(l0, Symbol::lambda0(&sh(&[3, 2]), U));
        let a = EPartition::parse("(111;-)").unwrap();
        assert!(Symbol::from_epartition(&a, &sh(&[2, 1]), U).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(sym("(3 0 | 0)").shift().to_text(), "(4 1 0 | 1 0)");
        assert_eq!(sym("(2 0 | 1)").shift().to_text(), "(3 1 0 | 2 0)");
        assert_eq!(Symbol::lambda0(&sh(&[2, 1]), U).shift(), Symbol::lambda0(&sh(&[3, 2]), U));
        let t = SymbolType::new(2, 1).unwrap();
        let s = Symbol::lambda0(&sh(&[2, 1]), t);
        assert_eq!(s.to_text(), "(2 0 | 1)");
        assert_eq!(s.shift(), Symbol::lambda0(&sh(&[3, 2]), t));
    }

    #[test]
    fn a_value_examples() {
        assert_eq!(sym("(2 0 | 1)").a_value(), 1);
        assert_eq!(sym("(2 1 0 | 2 1)").a_value(), 4);
        assert_eq!(Symbol::lambda0(&sh(&[3, 2]), U).a_value(), 0);
    }

    /// Oracle: literal double loop over unordered pairs.
    fn a_value_oracle(s: &Symbol) -> u64 {
        let f = |v: Vec<u32>| -> u64 {
            let mut t = 0;
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    t += v[i].min(v[j]) as u64;
                }
            }
            t
        };
        f(s.concat()) - f(lambda0_rows(s.shape(), s.stype()).concat())
    }

    #[test]
    fn invariants_small() {
        for e in 1..=3usize {
            for n in 0..=4u32 {
                let shape = MShape::default_for(n, e);
                for a in all_epartitions(n, e).into_iter().filter(|a| a.fits(&shape)) {
                    let s = Symbol::from_epartition(&a, &shape, U).unwrap();
                    assert_eq!(s.to_epartition(), a);
                    assert_eq!(s.a_value(), a_value_oracle(&s));
                    assert_eq!(s.shift().a_value(), s.a_value());
                    assert_eq!(s.shift().to_epartition(), a);
                    assert!(s.similar(&s.shift()));
                    assert_eq!(Symbol::parse(&s.to_text(), U).unwrap(), s);
                    assert!(s.rows().iter().all(|r| r.windows(2).all(|w| w[0] > w[1])));
                }
            }
        }
    }

    #[test]
    fn special() {
        assert!(sym("(3 1 0 | 2 0)").is_special());
        assert!(!sym("(3 2 0 | 1 0)").is_special());
        assert_eq!(sym("(2 1 0 | 2 1)").reading_sequence(), vec![2, 2, 1, 1, 0]);
    }
}
