//! P± and Q± for e = 2, n = 2, printed in the Schur basis.

use wreath_macdonald::combinat::MShape;
use wreath_macdonald::macdonald::build_pq_default;

fn main() -> wreath_macdonald::Result<()> {
    let basis = build_pq_default(2, &MShape::default_for(2, 2))?;
    for i in 0..basis.order.len() {
        let a = &basis.order.labels()[i];
        println!("P+[{a}] = {}", basis.function(&basis.xplus, i));
        println!("P-[{a}] = {}", basis.function(&basis.xminus, i));
        println!("Q+[{a}] = {}", basis.function(&basis.qplus, i));
    }
    // ⟨P+, Q-⟩ is the identity
    let pairing = basis.pairing(&basis.xplus, &basis.qminus);
    println!("<P+, Q-> is the identity: {}", pairing.is_identity());
    Ok(())
}
