//! Duality of g± with the monomials and agreement of the two kernel expansions.

use wreath_macdonald::combinat::MShape;
use wreath_macdonald::symfun::{verify_duality, verify_kernel};

fn main() -> wreath_macdonald::Result<()> {
    for e in 1..=3 {
        for n in 1..=2 {
            let rep = verify_duality(n, &MShape::default_for(n, e))?;
            println!("duality e={e} n={n}: {}", rep.pass);
        }
    }
    for e in 1..=2 {
        let rep = verify_kernel(2, &MShape::default_for(2, e))?;
        println!("kernel e={e} up to degree 2: {}", rep.pass);
    }
    Ok(())
}
