//! Variable-count shapes m = (m_0, ..., m_{e-1}) and symbol types (r, s).

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct MShape(Vec<usize>);

impl MShape {
    pub fn new(m: Vec<usize>) -> Result<Self> {
        if m.is_empty() || m.contains(&0) {
            return Err(Error::Shape(format!("shape entries must be positive, got {m:?}")));
        }
        Ok(MShape(m))
    }

    pub fn e(&self) -> usize {
        self.0.len()
    }

    pub fn m(&self) -> &[usize] {
        &self.0
    }

    /// M = Σ m_k, the total number of variables.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// M_1 = min m_k, the largest admissible operator degree.
    pub fn m1(&self) -> usize {
        *self.0.iter().min().unwrap()
    }

    /// Every row long enough that truncation to this shape is injective in degree n.
    pub fn faithful_for(&self, n: u32) -> bool {
        self.m1() >= n as usize
    }

    pub fn shift(&self) -> MShape {
        MShape(self.0.iter().map(|x| x + 1).collect())
    }

    /// (max(n,1)) for e = 1, otherwise (n+1, n, ..., n) with rows at least 1.
    pub fn default_for(n: u32, e: usize) -> MShape {
        let n = n as usize;
        if e <= 1 {
            return MShape(vec![n.max(1)]);
        }
        let mut m = vec![n.max(1); e];
        m[0] = n + 1;
        MShape(m)
    }

    /// Parses "3,2".
    pub fn parse(s: &str) -> Result<Self> {
        let m = s
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad shape {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m)
    }
}

impl fmt::Display for MShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Symbol type (r, s) with r >= s >= 0. The operators exist only for (1, 0).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SymbolType {
    pub r: u32,
    pub s: u32,
}

impl SymbolType {
    pub const UNIPOTENT: SymbolType = SymbolType { r: 1, s: 0 };

    pub fn new(r: u32, s: u32) -> Result<Self> {
        if r < s {
            return Err(Error::Shape(format!("symbol type needs r >= s, got ({r},{s})")));
        }
        if r == 0 {
            return Err(Error::Shape("symbol type needs r >= 1 for strictly decreasing rows".into()));
        }
        Ok(SymbolType { r, s })
    }
}

impl Default for SymbolType {
    fn default() -> Self {
        Self::UNIPOTENT
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basics() {
        let sh = MShape::parse("3,2").unwrap();
        assert_eq!(sh.e(), 2);
        assert_eq!(sh.total(), 5);
        assert_eq!(sh.m1(), 2);
        assert_eq!(sh.shift(), MShape::new(vec![4, 3]).unwrap());
        assert!(MShape::parse("3,0").is_err());
        assert!(MShape::parse("a").is_err());
        assert_eq!(MShape::default_for(2, 2).m(), &[3, 2]);
        assert_eq!(MShape::default_for(3, 1).m(), &[3]);
        assert_eq!(MShape::default_for(0, 3).m(), &[1, 1, 1]);
        assert!(SymbolType::new(0, 1).is_err());
    }
}
