//! Families of similar symbols, dominance between them, and the total order.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::Range;

use super::epartition::{enum_epartitions, EPartition};
use super::shape::{MShape, SymbolType};
use super::symbol::Symbol;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    members: Vec<Symbol>,
    special: Option<usize>,
    a_value: u64,
}

impl Family {
    fn new(members: Vec<Symbol>) -> Result<Self> {
        let a_value = members[0].a_value();
        if members.iter().any(|m| m.a_value() != a_value) {
            return Err(Error::Internal("a-value not constant on a family".into()));
        }
        let specials: Vec<usize> = (0..members.len()).filter(|&i| members[i].is_special()).collect();
        let special = match specials.len() {
            0 => None,
            1 => Some(specials[0]),
            _ => return Err(Error::Internal(format!("family of {} has two special symbols", members[0]))),
        };
        Ok(Family { members, special, a_value })
    }

    pub fn members(&self) -> &[Symbol] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn special(&self) -> Option<&Symbol> {
        self.special.map(|i| &self.members[i])
    }

    pub fn a_value(&self) -> u64 {
        self.a_value
    }

    pub fn contains(&self, s: &Symbol) -> bool {
        self.members.contains(s)
    }
}

/// Groups the symbols of degree n into families, in enumeration order of their first member.
pub fn families(n: u32, shape: &MShape, stype: SymbolType) -> Result<Vec<Family>> {
    let mut groups: BTreeMap<Vec<u32>, Vec<Symbol>> = BTreeMap::new();
    let mut first_seen: Vec<Vec<u32>> = Vec::new();
    for a in enum_epartitions(n, shape) {
        let s = Symbol::from_epartition(&a, shape, stype)?;
        let key = s.entries();
        if !groups.contains_key(&key) {
            first_seen.push(key.clone());
        }
        groups.entry(key).or_default().push(s);
    }
    first_seen.into_iter().map(|k| Family::new(groups.remove(&k).unwrap())).collect()
}

fn partial_sums(v: &[u32]) -> Vec<u64> {
    v.iter()
        .scan(0u64, |acc, &x| {
            *acc += x as u64;
            Some(*acc)
        })
        .collect()
}

/// F < F' iff the special reading sequence of F is dominated by that of F' (and differs).
pub fn dominance_less(f: &Family, g: &Family) -> bool {
    let (Some(a), Some(b)) = (f.special(), g.special()) else {
        return false;
    };
    let (x, y) = (a.reading_sequence(), b.reading_sequence());
    if x == y || x.len() != y.len() {
        return false;
    }
    partial_sums(&x).iter().zip(partial_sums(&y)).all(|(p, q)| *p <= q)
}

/// Tie-break used for families of equal a-value and for members within a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TieBreak {
    /// Larger row-concatenation first.
    #[default]
    LexDesc,
    LexAsc,
}

impl TieBreak {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "lex-desc" => Ok(TieBreak::LexDesc),
            "lex-asc" => Ok(TieBreak::LexAsc),
            _ => Err(Error::Parse(format!("unknown tie-break {s:?}; use lex-desc or lex-asc"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            TieBreak::LexDesc => "lex-desc",
            TieBreak::LexAsc => "lex-asc",
        }
    }

    fn cmp(self, a: &Symbol, b: &Symbol) -> Ordering {
        match self {
            TieBreak::LexDesc => b.concat().cmp(&a.concat()),
            TieBreak::LexAsc => a.concat().cmp(&b.concat()),
        }
    }
}

/// A total order on symbols in which each family is a contiguous block.
#[derive(Clone, Debug)]
pub struct Order {
    pub shape: MShape,
    pub stype: SymbolType,
    pub n: u32,
    symbols: Vec<Symbol>,
    labels: Vec<EPartition>,
    family_of: Vec<usize>,
    blocks: Vec<Range<usize>>,
    families: Vec<Family>,
}

impl Order {
    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn labels(&self) -> &[EPartition] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn family_of(&self, i: usize) -> usize {
        self.family_of[i]
    }

    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn index_of(&self, a: &EPartition) -> Option<usize> {
        self.labels.iter().position(|x| x == a)
    }

    pub fn index_of_symbol(&self, s: &Symbol) -> Option<usize> {
        self.symbols.iter().position(|x| x == s)
    }

    /// Same order with the members of each family rearranged by `perm[f]`
    /// (positions within the block). Used to pin externally given row orders.
    pub fn with_block_order(&self, f: usize, perm: &[usize]) -> Result<Order> {
        let block = self.blocks[f].clone();
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (0..block.len()).collect::<Vec<_>>() {
            return Err(Error::Range("block permutation has wrong entries".into()));
        }
        let mut out = self.clone();
        for (i, &p) in perm.iter().enumerate() {
            out.symbols[block.start + i] = self.symbols[block.start + p].clone();
            out.labels[block.start + i] = self.labels[block.start + p].clone();
        }
        out.families[f].members = out.symbols[block.clone()].to_vec();
        out.families[f].special = out.families[f].members.iter().position(|s| s.is_special());
        Ok(out)
    }
}

/// Families by a-value descending (ties by the tie-break applied to the first
/// member), members within each family by the tie-break.
pub fn total_order(n: u32, shape: &MShape, stype: SymbolType, tie: TieBreak) -> Result<Order> {
    let mut fams = families(n, shape, stype)?;
    for f in fams.iter_mut() {
        f.members.sort_by(|a, b| tie.cmp(a, b));
        f.special = f.members.iter().position(|s| s.is_special());
    }
    fams.sort_by(|f, g| g.a_value.cmp(&f.a_value).then_with(|| tie.cmp(&f.members[0], &g.members[0])));
    for i in 0..fams.len() {
        for j in i + 1..fams.len() {
            let (f, g) = (&fams[i], &fams[j]);
            if f.a_value == g.a_value && (dominance_less(f, g) || dominance_less(g, f)) {
                return Err(Error::Internal(format!(
                    "families of {} and {} tie in a-value but are dominance-comparable",
                    f.members[0], g.members[0]
                )));
            }
            if dominance_less(g, f) {
                return Err(Error::Internal(format!(
                    "family of {} precedes the dominance-smaller family of {}",
                    f.members[0], g.members[0]
                )));
            }
        }
    }
    let mut symbols = Vec::new();
    let mut family_of = Vec::new();
    let mut blocks = Vec::new();
    for (k, f) in fams.iter().enumerate() {
        let start = symbols.len();
        symbols.extend(f.members.iter().cloned());
        family_of.extend(std::iter::repeat_n(k, f.len()));
        blocks.push(start..symbols.len());
    }
    let labels = symbols.iter().map(|s| s.to_epartition()).collect();
    Ok(Order { shape: shape.clone(), stype, n, symbols, labels, family_of, blocks, families: fams })
}

#[cfg(test)]
mod tests {
    use super::*;

    const U: SymbolType = SymbolType::UNIPOTENT;

    fn sh(m: &[usize]) -> MShape {
        MShape::new(m.to_vec()).unwrap()
    }

    #[test]
    fn c2_families() {
        let fams = families(2, &sh(&[3, 2]), U).unwrap();
        let mut sizes: Vec<usize> = fams.iter().map(|f| f.len()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 3]);
        let ord = total_order(2, &sh(&[3, 2]), U, TieBreak::LexDesc).unwrap();
        let a: Vec<u64> = ord.families().iter().map(|f| f.a_value()).collect();
        assert_eq!(a, vec![4, 1, 0]);
        assert_eq!(ord.families()[0].members()[0].to_text(), "(2 1 0 | 2 1)");
        assert_eq!(ord.families()[1].special().unwrap().to_text(), "(3 1 0 | 2 0)");
        assert_eq!(ord.families()[2].members()[0].to_epartition().to_text(), "(2;-)");
        let (f1, f2, f3) = (&ord.families()[2], &ord.families()[0], &ord.families()[1]);
        assert!(dominance_less(f2, f3));
        assert!(dominance_less(f3, f1));
        assert!(!dominance_less(f1, f1));
    }

    #[test]
    fn c6_family() {
        let fams = families(6, &sh(&[3, 2]), U).unwrap();
        let big: Vec<&Family> = fams.iter().filter(|f| f.len() == 10).collect();
        assert_eq!(big.len(), 1);
        assert_eq!(big[0].special().unwrap().to_text(), "(4 2 0 | 3 1)");
    }

    #[test]
    fn n0_and_e1() {
        let ord = total_order(0, &sh(&[2, 1]), U, TieBreak::LexDesc).unwrap();
        assert_eq!(ord.len(), 1);
        for n in 1..=6 {
            let ord = total_order(n, &sh(&[n as usize]), U, TieBreak::LexDesc).unwrap();
            assert!(ord.families().iter().all(|f| f.len() == 1));
            // a-value at e=1 is n(λ), and dominance-larger partitions come later
            for (i, s) in ord.symbols().iter().enumerate() {
                let lam = s.to_epartition().comp(0).clone();
                assert_eq!(s.a_value(), lam.n_value());
                for t in &ord.symbols()[..i] {
                    let mu = t.to_epartition().comp(0).clone();
                    assert!(!(lam.dominated_by(&mu) && lam != mu));
                }
            }
        }
    }

    #[test]
    fn every_family_has_one_special() {
        for n in 0..=6 {
            let shape = MShape::default_for(n, 2);
            for f in families(n, &shape, U).unwrap() {
                assert!(f.special().is_some(), "n={n} {}", f.members()[0]);
            }
        }
    }

    #[test]
    fn dominance_implies_a_value() {
        for n in 1..=5 {
            let shape = MShape::default_for(n, 2);
            let fams = families(n, &shape, U).unwrap();
            for f in &fams {
                for g in &fams {
                    if dominance_less(f, g) {
                        assert!(f.a_value() > g.a_value());
                    }
                }
            }
        }
    }

    #[test]
    fn tie_breaks_differ_only_inside_ties() {
        let shape = sh(&[3, 2]);
        let a = total_order(2, &shape, U, TieBreak::LexDesc).unwrap();
        let b = total_order(2, &shape, U, TieBreak::LexAsc).unwrap();
        assert_ne!(a.symbols(), b.symbols());
        let av: Vec<u64> = a.symbols().iter().map(|s| s.a_value()).collect();
        let bv: Vec<u64> = b.symbols().iter().map(|s| s.a_value()).collect();
        assert_eq!(av, bv);
    }
}
