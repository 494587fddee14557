//! Checks that distinct family blocks of H never share an eigenvalue, for e = 2.

use wreath_macdonald::combinat::{total_order, MShape, Sign, SymbolType, TieBreak};
use wreath_macdonald::macdonald::check_conjecture_a;

fn main() -> wreath_macdonald::Result<()> {
    let nmax = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    for n in 1..=nmax {
        let order = total_order(n, &MShape::default_for(n, 2), SymbolType::UNIPOTENT, TieBreak::LexDesc)?;
        for sign in [Sign::Plus, Sign::Minus] {
            let rep = check_conjecture_a(&order, sign)?;
            println!("n={n} sign {} families={} disjoint={}", sign.symbol(), order.families().len(), rep.pass);
        }
    }
    Ok(())
}
