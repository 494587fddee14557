//! Modular gcd for polynomials with rational coefficients: images modulo
//! word-size primes, evaluation/interpolation in the second variable, Chinese
//! remaindering, and a trial division that certifies the result.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cyclo::CycloScalar;
use super::qtpoly::{Mono, QTPoly};
use super::rational::Rational;
use super::upoly::UPoly;

/// Univariate over Z, lowest degree first, no trailing zeros.
type ZPoly = Vec<BigInt>;
/// `c[i]` is the coefficient of x^i, itself a polynomial in y.
type IPoly = Vec<ZPoly>;
/// Univariate over Z/p.
type Fp = Vec<u64>;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::new();
        let mut n = (1u64 << 62) - 1;
        while out.len() < 400 {
            if is_prime(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

fn reduce(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits")
}

fn splitmix(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn fp_trim(v: &mut Fp) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_reduce(a: &ZPoly, p: u64) -> Fp {
    let mut v: Fp = a.iter().map(|c| reduce(c, p)).collect();
    fp_trim(&mut v);
    v
}

fn fp_eval(v: &[u64], x: u64, p: u64) -> u64 {
    v.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, p) + c) % p)
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Fp {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let f = mul_mod(r[dr], inv, p);
        if f != 0 {
            for (j, &bj) in b.iter().enumerate() {
                let k = dr - db + j;
                r[k] = sub_mod(r[k], mul_mod(f, bj, p), p);
            }
        }
        r.pop();
        fp_trim(&mut r);
    }
    r
}

fn fp_monic(v: &mut Fp, p: u64) {
    if let Some(&l) = v.last() {
        let inv = inv_mod(l, p);
        for c in v.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
}

/// Monic gcd in (Z/p)[x]; inputs nonzero.
fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Fp {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    fp_monic(&mut a, p);
    a
}

/// Newton interpolation through (xs[k], ys[k]).
fn fp_interpolate(xs: &[u64], ys: &[u64], p: u64) -> Fp {
    let n = xs.len();
    let mut c = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let d = inv_mod(sub_mod(xs[i], xs[i - j], p), p);
            c[i] = mul_mod(sub_mod(c[i], c[i - 1], p), d, p);
        }
    }
    let mut poly: Fp = vec![c[n - 1]];
    for i in (0..n - 1).rev() {
        // poly = poly * (x - xs[i]) + c[i]
        let mut next = vec![0u64; poly.len() + 1];
        for (k, &a) in poly.iter().enumerate() {
            next[k + 1] = (next[k + 1] + a) % p;
            next[k] = sub_mod(next[k], mul_mod(a, xs[i], p), p);
        }
        next[0] = (next[0] + c[i]) % p;
        poly = next;
    }
    fp_trim(&mut poly);
    poly
}

fn z_trim(v: &mut ZPoly) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn z_content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the integer content and makes the leading coefficient positive.
fn z_primitive(v: &[BigInt]) -> ZPoly {
    let mut c = z_content(v);
    if c.is_zero() {
        return Vec::new();
    }
    if v.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    v.iter().map(|x| x / &c).collect()
}

fn z_exact_div(a: &[BigInt], d: &[BigInt]) -> Option<ZPoly> {
    let mut r: ZPoly = a.to_vec();
    z_trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    let dd = d.len() - 1;
    if r.len() < d.len() {
        return None;
    }
    let mut q = vec![BigInt::zero(); r.len() - dd];
    while r.len() > dd && !r.is_empty() {
        let dr = r.len() - 1;
        let (f, rem) = r[dr].div_rem(&d[dd]);
        if !rem.is_zero() {
            return None;
        }
        for (j, dj) in d.iter().enumerate() {
            r[dr - dd + j] -= &f * dj;
        }
        q[dr - dd] = f;
        z_trim(&mut r);
    }
    r.is_empty().then_some(q)
}

fn z_mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Accumulates residues by the Chinese remainder theorem.
struct Crt {
    modulus: BigInt,
    values: Vec<BigInt>,
}

impl Crt {
    fn new(vals: &[u64], p: u64) -> Self {
        Crt { modulus: BigInt::from(p), values: vals.iter().map(|&v| BigInt::from(v)).collect() }
    }

    fn add(&mut self, vals: &[u64], p: u64) {
        let m_inv = inv_mod(reduce(&self.modulus, p), p);
        for (r, &v) in self.values.iter_mut().zip(vals) {
            let k = mul_mod(sub_mod(v, reduce(r, p), p), m_inv, p);
            *r += &self.modulus * BigInt::from(k);
        }
        self.modulus *= BigInt::from(p);
    }

    fn symmetric(&self) -> Vec<BigInt> {
        let half = &self.modulus >> 1;
        self.values.iter().map(|v| if v > &half { v - &self.modulus } else { v.clone() }).collect()
    }
}

/// gcd in Z[y] with positive leading coefficient; gcd(0, 0) = 0.
fn z_gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    z_trim(&mut a);
    z_trim(&mut b);
    let positive = |v: ZPoly| if v.last().is_some_and(|l| l.is_negative()) { v.into_iter().map(|c| -c).collect() } else { v };
    if a.is_empty() {
        return positive(b);
    }
    if b.is_empty() {
        return positive(a);
    }
    let c = z_content(&a).gcd(&z_content(&b));
    let (a, b) = (z_primitive(&a), z_primitive(&b));
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let gamma = a.last().unwrap().gcd(b.last().unwrap());
    let mut best = usize::MAX;
    let mut acc: Option<Crt> = None;
    for &p in primes() {
        let (ap, bp) = (fp_reduce(&a, p), fp_reduce(&b, p));
        let gp = reduce(&gamma, p);
        if ap.len() != a.len() || bp.len() != b.len() || gp == 0 {
            continue;
        }
        let mut g = fp_gcd(&ap, &bp, p);
        let d = g.len() - 1;
        if d == 0 {
            return vec![c];
        }
        if d > best {
            continue;
        }
        if d < best {
            best = d;
            acc = None;
        }
        for x in g.iter_mut() {
            *x = mul_mod(*x, gp, p);
        }
        match acc.as_mut() {
            None => acc = Some(Crt::new(&g, p)),
            Some(crt) => crt.add(&g, p),
        }
        let cand = z_primitive(&acc.as_ref().unwrap().symmetric());
        if z_exact_div(&a, &cand).is_some() && z_exact_div(&b, &cand).is_some() {
            return cand.iter().map(|x| x * &c).collect();
        }
    }
    panic!("modular gcd exhausted its prime list")
}

fn y_content(a: &IPoly) -> ZPoly {
    let mut g: ZPoly = Vec::new();
    for c in a {
        g = z_gcd(&g, c);
        if g.len() == 1 && g[0].is_one() {
            break;
        }
    }
    g
}

fn divide_coeffs(a: &IPoly, d: &[BigInt]) -> IPoly {
    a.iter().map(|c| z_exact_div(c, d).expect("content divides")).collect()
}

fn ip_divides(d: &IPoly, a: &IPoly, swap: bool) -> bool {
    from_ipoly(a, swap).exact_div(&from_ipoly(d, swap)).is_some()
}

/// gcd in Z[y][x] of two polynomials, primitive up to sign.
fn ip_gcd(a: &IPoly, b: &IPoly, swap: bool) -> IPoly {
    let (ca, cb) = (y_content(a), y_content(b));
    let c = z_gcd(&ca, &cb);
    let a = divide_coeffs(a, &ca);
    let b = divide_coeffs(b, &cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let (la, lb) = (a.last().unwrap(), b.last().unwrap());
    let gamma = z_gcd(la, lb);
    let dy = |p: &IPoly| p.iter().map(|c| c.len().saturating_sub(1)).max().unwrap_or(0);
    let bound = gamma.len() - 1 + dy(&a).min(dy(&b));
    let mut best = usize::MAX;
    let mut acc: Option<Crt> = None;
    'primes: for &p in primes() {
        let ap: Vec<Fp> = a.iter().map(|c| fp_reduce(c, p)).collect();
        let bp: Vec<Fp> = b.iter().map(|c| fp_reduce(c, p)).collect();
        let gammap = fp_reduce(&gamma, p);
        let (lap, lbp) = (fp_reduce(la, p), fp_reduce(lb, p));
        let (mut xs, mut imgs): (Vec<u64>, Vec<Fp>) = (Vec::new(), Vec::new());
        let mut dp = usize::MAX;
        let mut tries = 0u64;
        while xs.len() <= bound {
            tries += 1;
            if tries > 4 * bound as u64 + 64 {
                continue 'primes;
            }
            // pseudo-random points, so an unlucky point is not reused for every prime
            let r = 1 + splitmix(p ^ tries) % (p - 1);
            if xs.contains(&r) {
                continue;
            }
            if fp_eval(&lap, r, p) == 0 || fp_eval(&lbp, r, p) == 0 {
                continue;
            }
            let ea: Fp = ap.iter().map(|c| fp_eval(c, r, p)).collect();
            let eb: Fp = bp.iter().map(|c| fp_eval(c, r, p)).collect();
            let mut g = fp_gcd(&ea, &eb, p);
            let d = g.len() - 1;
            if d == 0 {
                return vec![c];
            }
            if d > dp {
                continue;
            }
            if d < dp {
                dp = d;
                xs.clear();
                imgs.clear();
            }
            let gr = fp_eval(&gammap, r, p);
            for x in g.iter_mut() {
                *x = mul_mod(*x, gr, p);
            }
            xs.push(r);
            imgs.push(g);
        }
        if dp > best {
            continue;
        }
        if dp < best {
            best = dp;
            acc = None;
        }
        // flatten [x][y] with fixed width bound+1
        let width = bound + 1;
        let mut flat = vec![0u64; (dp + 1) * width];
        for i in 0..=dp {
            let ys: Vec<u64> = imgs.iter().map(|g| g[i]).collect();
            for (j, v) in fp_interpolate(&xs, &ys, p).into_iter().enumerate() {
                flat[i * width + j] = v;
            }
        }
        match acc.as_mut() {
            None => acc = Some(Crt::new(&flat, p)),
            Some(crt) => crt.add(&flat, p),
        }
        let lifted = acc.as_ref().unwrap().symmetric();
        let mut cand: IPoly = lifted
            .chunks(width)
            .map(|ch| {
                let mut v = ch.to_vec();
                z_trim(&mut v);
                v
            })
            .collect();
        let cc = y_content(&cand);
        if cc.is_empty() {
            continue;
        }
        cand = divide_coeffs(&cand, &cc);
        if ip_divides(&cand, &a, swap) && ip_divides(&cand, &b, swap) {
            return cand.iter().map(|x| z_mul(x, &c)).collect();
        }
    }
    panic!("modular gcd exhausted its prime list")
}

fn rational_coeffs<'a>(it: impl Iterator<Item = &'a CycloScalar>) -> Option<(Vec<Rational>, BigInt)> {
    let mut out = Vec::new();
    let mut den = BigInt::one();
    for c in it {
        let r = c.as_rational()?;
        den = den.lcm(r.denom());
        out.push(r);
    }
    Some((out, den))
}

fn to_ipoly(p: &QTPoly, swap: bool) -> Option<IPoly> {
    let (coeffs, den) = rational_coeffs(p.terms().map(|(_, c)| c))?;
    let (dx, dy) = if swap { (p.degree_q(), p.degree_t()) } else { (p.degree_t(), p.degree_q()) };
    let mut out = vec![vec![BigInt::zero(); dy as usize + 1]; dx as usize + 1];
    for ((m, _), r) in p.terms().zip(coeffs) {
        let (x, y) = if swap { (m.dq, m.dt) } else { (m.dt, m.dq) };
        out[x as usize][y as usize] = (r * Rational::from_integer(den.clone())).to_integer();
    }
    for c in out.iter_mut() {
        z_trim(c);
    }
    Some(out)
}

fn from_ipoly(g: &IPoly, swap: bool) -> QTPoly {
    QTPoly::from_terms(g.iter().enumerate().flat_map(|(x, row)| {
        row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(y, c)| {
            let m = if swap { Mono::new(x as u32, y as u32) } else { Mono::new(y as u32, x as u32) };
            (m, CycloScalar::from_rational(Rational::from_integer(c.clone())))
        })
    }))
}

/// Monic gcd of two nonzero polynomials, or None when a coefficient is not rational.
pub fn qt_gcd(a: &QTPoly, b: &QTPoly) -> Option<QTPoly> {
    // evaluate in the variable of smaller degree
    let swap = a.degree_t().max(b.degree_t()) < a.degree_q().max(b.degree_q());
    let (ia, ib) = (to_ipoly(a, swap)?, to_ipoly(b, swap)?);
    Some(from_ipoly(&ip_gcd(&ia, &ib, swap), swap).monic())
}

/// Monic gcd in one variable, or None when a coefficient is not rational.
pub fn upoly_gcd(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let to_z = |p: &UPoly| -> Option<ZPoly> {
        let (coeffs, den) = rational_coeffs(p.coeffs().iter())?;
        let mut v: ZPoly = coeffs.into_iter().map(|r| (r * Rational::from_integer(den.clone())).to_integer()).collect();
        z_trim(&mut v);
        Some(v)
    };
    let g = z_gcd(&to_z(a)?, &to_z(b)?);
    Some(UPoly::from_coeffs(g.into_iter().map(|c| CycloScalar::from_rational(Rational::from_integer(c))).collect()).monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_qt;

    fn poly(s: &str) -> QTPoly {
        parse_qt(s, 1).unwrap().num().clone()
    }

    #[test]
    fn primes_are_prime() {
        let ps = primes();
        assert!(ps.len() >= 100);
        assert!(ps.iter().all(|&p| p > 1 << 61));
        assert!(!is_prime((1u64 << 62) - 3 * 5 * 7));
    }

    #[test]
    fn interpolation_round_trip() {
        let p = primes()[0];
        let f: Fp = vec![3, 0, 5, 7];
        let xs: Vec<u64> = (1..=4).collect();
        let ys: Vec<u64> = xs.iter().map(|&x| fp_eval(&f, x, p)).collect();
        assert_eq!(fp_interpolate(&xs, &ys, p), f);
    }

    #[test]
    fn bivariate_common_factor() {
        let g = poly("1 - q*t^2 + 3*q^2");
        let a = &g * &poly("1 + q + t^3");
        let b = &g * &poly("2 - q^4*t");
        assert_eq!(qt_gcd(&a, &b).unwrap(), g.monic());
        assert!(qt_gcd(&poly("1 + q"), &poly("1 + t")).unwrap().is_one());
    }

    #[test]
    fn unlucky_evaluation_point() {
        // every image at q = 1 shares the factor t - 1
        let a = poly("t^3*q^2 - t^2*q - t*q + 1");
        let b = poly("t^6 - t^5 - t^4 + t^2 + t - 1");
        assert!(qt_gcd(&a, &b).unwrap().is_one());
    }

    #[test]
    fn content_in_one_variable() {
        let a = &poly("1 - t^2") * &poly("q + t");
        let b = &poly("1 - t") * &poly("q^2 + 1");
        assert_eq!(qt_gcd(&a, &b).unwrap(), poly("1 - t").monic());
    }

    #[test]
    fn univariate_integers() {
        let a = UPoly::from_coeffs([6, -5, 1].iter().map(|&c| CycloScalar::from_int(c)).collect());
        let b = UPoly::from_coeffs([-2, 1].iter().map(|&c| CycloScalar::from_int(c)).collect());
        assert_eq!(upoly_gcd(&a, &b).unwrap(), b);
    }
}
