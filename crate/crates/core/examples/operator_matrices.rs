//! Matrices of D^1 and H on the monomial basis, with the diagonal blocks
//! recomputed from symbols alone.

use wreath_macdonald::combinat::{total_order, MShape, Sign, SymbolType, TieBreak};
use wreath_macdonald::macdonald::{diag_block_direct, matrix_b, matrix_h};

fn main() -> wreath_macdonald::Result<()> {
    let order = total_order(2, &MShape::parse("2,1")?, SymbolType::UNIPOTENT, TieBreak::LexDesc)?;
    let labels: Vec<String> = order.labels().iter().map(|a| a.to_string()).collect();
    println!("labels {labels:?}");
    let b = matrix_b(1, Sign::Plus, &order)?;
    println!("B^1+\n{}", b.entries);
    println!("H+\n{}", matrix_h(Sign::Plus, &order)?.entries);
    for f in 0..order.blocks().len() {
        assert_eq!(diag_block_direct(&order, f, 1, Sign::Plus)?, b.family_block(f));
    }
    println!("family blocks agree with the symbol formula");
    Ok(())
}
