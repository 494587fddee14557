//! Transition tables between the s, m and p bases in one degree, cached per (n, e).

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{CycloScalar, Rational};
use crate::combinat::{all_epartitions, kostka, mn_character, partitions, EPartition, Partition};

/// Sparse row: (column label index, coefficient).
pub type SparseRow<T> = Vec<(usize, T)>;

pub struct Tables {
    pub n: u32,
    pub e: usize,
    labels: Vec<EPartition>,
    index: HashMap<EPartition, usize>,
    /// s_a = Σ s_to_p[a][b] p_b
    pub s_to_p: Vec<SparseRow<CycloScalar>>,
    /// p_a = Σ p_to_s[a][b] s_b
    pub p_to_s: Vec<SparseRow<CycloScalar>>,
    /// s_a = Σ s_to_m[a][b] m_b
    pub s_to_m: Vec<SparseRow<i64>>,
    /// m_a = Σ m_to_s[a][b] s_b
    pub m_to_s: Vec<SparseRow<i64>>,
}

impl Tables {
    pub fn labels(&self) -> &[EPartition] {
        &self.labels
    }

    pub fn index(&self, a: &EPartition) -> Option<usize> {
        self.index.get(a).copied()
    }
}

/// Rows of a multi-component power-sum product, keyed by sorted parts per component.
type PMap = BTreeMap<Vec<Vec<u32>>, CycloScalar>;

fn pmap_mul(a: &PMap, b: &PMap) -> PMap {
    let mut out = PMap::new();
    for (ka, ca) in a {
        for (kb, cb) in b {
            let key: Vec<Vec<u32>> = ka
                .iter()
                .zip(kb)
                .map(|(x, y)| {
                    let mut v: Vec<u32> = x.iter().chain(y).copied().collect();
                    v.sort_unstable_by(|p, q| q.cmp(p));
                    v
                })
                .collect();
            let c = ca * cb;
            let slot = out.entry(key).or_insert_with(CycloScalar::zero);
            *slot = &*slot + &c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn pmap_one(e: usize) -> PMap {
    let mut m = PMap::new();
    m.insert(vec![Vec::new(); e], CycloScalar::one());
    m
}

/// A single part r moved into component j with weight w(j), for every j.
fn pmap_part(e: usize, r: u32, w: impl Fn(usize) -> CycloScalar) -> PMap {
    let mut m = PMap::new();
    for j in 0..e {
        let mut key = vec![Vec::new(); e];
        key[j].push(r);
        m.insert(key, w(j));
    }
    m
}

fn to_label(key: &[Vec<u32>]) -> EPartition {
    EPartition::new(key.iter().map(|v| Partition::from_unsorted(v.clone())).collect()).unwrap()
}

fn compose(e: usize, a: &EPartition) -> Vec<usize> {
    (0..e).map(|k| a.comp(k).size() as usize).collect()
}

/// s_α(x^(k)) in the twisted power sums: Σ_μ χ^α(μ)/z_μ Π_r p_r(x^(k)),
/// with p_r(x^(k)) = e⁻¹ Σ_i ζ^{-ik} p_r^{(i)}.
fn schur_component_to_p(e: usize, k: usize, alpha: &Partition) -> PMap {
    let inv_e = Rational::new(1.into(), (e as i64).into());
    let mut out = PMap::new();
    for mu in partitions(alpha.size()) {
        let chi = mn_character(alpha, &mu).unwrap();
        if chi == 0 {
            continue;
        }
        let coeff = CycloScalar::from_rational(Rational::new(chi.into(), mu.z()));
        let mut prod = pmap_one(e);
        for &r in mu.parts() {
            let part = pmap_part(e, r, |i| CycloScalar::zeta_pow(e as u32, -((i * k) as i64)).scale(&inv_e));
            prod = pmap_mul(&prod, &part);
        }
        for (key, c) in prod {
            let slot = out.entry(key).or_insert_with(CycloScalar::zero);
            *slot = &*slot + &(&c * &coeff);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// p_β expanded in Schur functions: each p_r^{(i)} = Σ_j ζ^{ij} p_r(x^(j)),
/// then classical p_ν = Σ_λ χ^λ(ν) s_λ in each component.
fn power_to_s(e: usize, b: &EPartition) -> PMap {
    let mut classical = pmap_one(e);
    for i in 0..e {
        for &r in b.comp(i).parts() {
            let part = pmap_part(e, r, |j| CycloScalar::zeta_pow(e as u32, (i * j) as i64));
            classical = pmap_mul(&classical, &part);
        }
    }
    let mut out = PMap::new();
    for (nu, c) in classical {
        // product over components of Σ_λ χ^λ(ν^(j)) s_λ
        let mut prod: Vec<(Vec<Vec<u32>>, i64)> = vec![(Vec::new(), 1)];
        for part in &nu {
            let nu_j = Partition::from_unsorted(part.clone());
            let mut next = Vec::new();
            for lam in partitions(nu_j.size()) {
                let chi = mn_character(&lam, &nu_j).unwrap();
                if chi == 0 {
                    continue;
                }
                for (key, v) in &prod {
                    let mut k2 = key.clone();
                    k2.push(lam.parts().to_vec());
                    next.push((k2, v * chi));
                }
            }
            prod = next;
        }
        for (key, v) in prod {
            let slot = out.entry(key).or_insert_with(CycloScalar::zero);
            *slot = &*slot + &(&c * &CycloScalar::from_int(v));
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Inverse of the unitriangular Kostka matrix on partitions of n (desc-lex order).
fn inverse_kostka(n: u32) -> (Vec<Partition>, Vec<Vec<i64>>) {
    let ps = partitions(n);
    let len = ps.len();
    let k: Vec<Vec<i64>> =
        ps.iter().map(|l| ps.iter().map(|m| kostka(l, m).unwrap() as i64).collect()).collect();
    // K is upper unitriangular; solve K X = I by back substitution
    let mut x = vec![vec![0i64; len]; len];
    for col in 0..len {
        for i in (0..len).rev() {
            let mut v = if i == col { 1 } else { 0 };
            for j in i + 1..len {
                v -= k[i][j] * x[j][col];
            }
            x[i][col] = v;
        }
    }
    (ps, x)
}

fn build(n: u32, e: usize) -> Tables {
    let labels = all_epartitions(n, e);
    let index: HashMap<EPartition, usize> = labels.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
    let lookup = |key: &[Vec<u32>]| index[&to_label(key)];

    let s_to_p = labels
        .iter()
        .map(|a| {
            let mut prod = pmap_one(e);
            for k in 0..e {
                prod = pmap_mul(&prod, &schur_component_to_p(e, k, a.comp(k)));
            }
            prod.iter().map(|(key, c)| (lookup(key), c.clone())).collect()
        })
        .collect();
    let p_to_s = labels.iter().map(|b| power_to_s(e, b).iter().map(|(k, c)| (lookup(k), c.clone())).collect()).collect();

    let kinv: HashMap<u32, (Vec<Partition>, Vec<Vec<i64>>)> = (0..=n).map(|m| (m, inverse_kostka(m))).collect();
    let component_rows = |a: &EPartition, inverse: bool| -> SparseRow<i64> {
        let sizes = compose(e, a);
        labels
            .iter()
            .enumerate()
            .filter(|(_, b)| compose(e, b) == sizes)
            .filter_map(|(j, b)| {
                let mut v = 1i64;
                for k in 0..e {
                    let (al, be) = (a.comp(k), b.comp(k));
                    v *= if inverse {
                        let (ps, x) = &kinv[&al.size()];
                        let ia = ps.iter().position(|p| p == al).unwrap();
                        let ib = ps.iter().position(|p| p == be).unwrap();
                        x[ia][ib]
                    } else {
                        kostka(al, be).unwrap() as i64
                    };
                    if v == 0 {
                        break;
                    }
                }
                (v != 0).then_some((j, v))
            })
            .collect()
    };
    let s_to_m = labels.iter().map(|a| component_rows(a, false)).collect();
    let m_to_s = labels.iter().map(|a| component_rows(a, true)).collect();
    Tables { n, e, labels, index, s_to_p, p_to_s, s_to_m, m_to_s }
}

/// Shared tables for degree n and group parameter e.
pub fn tables(n: u32, e: usize) -> Arc<Tables> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, usize), Arc<Tables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().unwrap().get(&(n, e)) {
        return t.clone();
    }
    let t = Arc::new(build(n, e));
    cache.lock().unwrap().entry((n, e)).or_insert(t).clone()
}
