//! Duality between g± and m, and agreement of the two kernel expansions.

use serde_json::json;

use super::finite::{g_epartition, monomial_orbit, power_sum_finite, FinitePoly, MPoly};
use super::finite::finite_to_basis;
use super::symfunc::{scalar_product, z_weight, Basis, SymFunc};
use crate::algebra::{QTRational, RatMatrix};
use crate::combinat::{all_epartitions, EPartition, MShape, Sign};
use crate::error::{Error, Result};
use crate::report::Report;

/// ⟨g_{a,+}, m_b⟩ and ⟨m_a, g_{b,-}⟩ over all labels of degree n.
pub fn duality_pairings(n: u32, shape: &MShape) -> Result<(Vec<EPartition>, RatMatrix, RatMatrix)> {
    if !shape.faithful_for(n) {
        return Err(Error::Shape(format!("duality needs every m_k >= {n}, got {shape}")));
    }
    let labels = all_epartitions(n, shape.e());
    let g = |sign| -> Result<Vec<SymFunc>> {
        labels.iter().map(|a| finite_to_basis(&g_epartition(a, sign, shape)?, Basis::Power)).collect()
    };
    let (gp, gm) = (g(Sign::Plus)?, g(Sign::Minus)?);
    let m: Vec<SymFunc> = labels.iter().map(|a| SymFunc::basis_element(Basis::Monomial, a)).collect();
    let len = labels.len();
    let mut plus = RatMatrix::zeros(len, len);
    let mut minus = RatMatrix::zeros(len, len);
    for i in 0..len {
        for j in 0..len {
            plus.set(i, j, scalar_product(&gp[i], &m[j])?);
            minus.set(i, j, scalar_product(&m[i], &gm[j])?);
        }
    }
    Ok((labels, plus, minus))
}

/// Records every entry of `m` that differs from the identity.
pub fn identity_witnesses(report: &mut Report, what: &str, labels: &[EPartition], m: &RatMatrix) {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let want = if i == j { QTRational::one() } else { QTRational::zero() };
            if m.get(i, j) != &want {
                report.fail(json!({
                    "pairing": what,
                    "a": labels[i].to_text(),
                    "b": labels[j].to_text(),
                    "value": m.get(i, j).to_text(),
                }));
            }
        }
    }
}

pub fn verify_duality(n: u32, shape: &MShape) -> Result<Report> {
    let mut r = Report::new("duality", json!({"n": n, "e": shape.e(), "shape": shape.m()}));
    let (labels, plus, minus) = duality_pairings(n, shape)?;
    identity_witnesses(&mut r, "<g+_a, m_b>", &labels, &plus);
    identity_witnesses(&mut r, "<m_a, g-_b>", &labels, &minus);
    Ok(r)
}

/// Bidegree-(d,d) part of Σ_a z_a(q,t)⁻¹ p_a(x) conj(p_a(y)) in x ⊔ y.
pub fn kernel_power_side(d: u32, shape: &MShape) -> MPoly {
    let nv = shape.total();
    let mut out = MPoly::zero(2 * nv);
    for a in all_epartitions(d, shape.e()) {
        let px = power_sum_finite(&a, shape);
        let py = px.poly().map_coeffs(|c| Ok(c.conjugate())).unwrap();
        let w = z_weight(&a).inv().expect("z-weight is nonzero");
        out = out.add(&px.poly().embed(2 * nv, 0).mul(&py.embed(2 * nv, nv)).scale(&w));
    }
    out
}

/// Bidegree-(d,d) part of Σ_a g_{a,+}(x) m_a(y), or of Σ_a m_a(x) g_{a,-}(y).
pub fn kernel_g_side(d: u32, shape: &MShape, sign: Sign) -> Result<MPoly> {
    let nv = shape.total();
    let mut out = MPoly::zero(2 * nv);
    for a in all_epartitions(d, shape.e()).into_iter().filter(|a| a.fits(shape)) {
        let g = g_epartition(&a, sign, shape)?;
        let m = monomial_orbit(&a, shape);
        let (x, y): (&FinitePoly, &FinitePoly) = match sign {
            Sign::Plus => (&g, &m),
            Sign::Minus => (&m, &g),
        };
        out = out.add(&x.poly().embed(2 * nv, 0).mul(&y.poly().embed(2 * nv, nv)));
    }
    Ok(out)
}

pub fn verify_kernel(d_max: u32, shape: &MShape) -> Result<Report> {
    let mut r = Report::new("kernel", json!({"dmax": d_max, "e": shape.e(), "shape": shape.m()}));
    for d in 0..=d_max {
        let p = kernel_power_side(d, shape);
        for sign in [Sign::Plus, Sign::Minus] {
            let g = kernel_g_side(d, shape, sign)?;
            let diff = p.sub(&g);
            if !diff.is_zero() {
                let (ex, c) = diff.terms().next().unwrap();
                r.fail(json!({
                    "d": d,
                    "side": sign.symbol(),
                    "differing_terms": diff.len(),
                    "first_exponent": ex,
                    "difference": c.to_text(),
                }));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(m: &[usize]) -> MShape {
        MShape::new(m.to_vec()).unwrap()
    }

    #[test]
    fn duality_small() {
        assert!(verify_duality(1, &sh(&[1])).unwrap().pass);
        assert!(verify_duality(2, &sh(&[2, 2])).unwrap().pass);
        assert!(verify_duality(1, &sh(&[1, 1, 1])).unwrap().pass);
        assert!(verify_duality(2, &sh(&[2, 1])).is_err());
    }

    #[test]
    fn duality_negative_control() {
        let (labels, mut plus, _) = duality_pairings(1, &sh(&[1, 1])).unwrap();
        plus.set(0, 1, QTRational::q());
        let mut r = Report::new("duality", json!({}));
        identity_witnesses(&mut r, "<g+_a, m_b>", &labels, &plus);
        assert!(!r.pass);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn kernel_small() {
        assert!(verify_kernel(2, &sh(&[2])).unwrap().pass);
        assert!(verify_kernel(1, &sh(&[1, 1])).unwrap().pass);
        assert_eq!(kernel_power_side(0, &sh(&[1, 1])), MPoly::one(4));
    }
}
