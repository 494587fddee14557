//! Arithmetic over Q(ζ_3)(q, t): sesquilinear pairing and conjugation for e = 3.

use wreath_macdonald::algebra::{parse_qt, CycloScalar};
use wreath_macdonald::combinat::EPartition;
use wreath_macdonald::symfun::{scalar_product, z_weight, Basis, SymFunc};

fn main() -> wreath_macdonald::Result<()> {
    let zeta = CycloScalar::zeta(3);
    println!("zeta^3 = {}", (&(&zeta * &zeta) * &zeta).to_text());
    let x = parse_qt("(1 - z*q)/(1 - t)", 3)?;
    println!("x = {x}, conj(x) = {}", x.conjugate());
    let a = EPartition::parse("(1;-;-)")?;
    let b = EPartition::parse("(-;1;-)")?;
    println!("z-weight of {a}: {}", z_weight(&a));
    let p = |lab: &EPartition| SymFunc::basis_element(Basis::Power, lab);
    let f = p(&a).scale(&x);
    println!("<x p_a, p_a> = {}", scalar_product(&f, &p(&a))?);
    println!("<p_a, x p_a> = {}", scalar_product(&p(&a), &f)?);
    println!("<p_a, p_b> = {}", scalar_product(&p(&a), &p(&b))?);
    Ok(())
}
