//! The operators D^1 and D^2 commute at q = t, and their family blocks at generic (q, t).

use wreath_macdonald::combinat::{total_order, MShape, SymbolType, TieBreak};
use wreath_macdonald::macdonald::verify_commutation;

fn main() -> wreath_macdonald::Result<()> {
    for n in 1..=3 {
        let order = total_order(n, &MShape::default_for(n.max(2), 2), SymbolType::UNIPOTENT, TieBreak::LexDesc)?;
        let rep = verify_commutation(&order, 2)?;
        println!("n={n} shape {}: commute at q=t: {}", order.shape, rep.pass);
        println!("  {}", rep.instance["notes"]);
    }
    Ok(())
}
