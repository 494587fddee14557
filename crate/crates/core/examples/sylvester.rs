//! P± recovered from H alone by solving Sylvester equations block by block,
//! compared with the elimination construction.

use wreath_macdonald::combinat::{total_order, MShape, SymbolType, TieBreak};
use wreath_macdonald::macdonald::{build_pq, solve_theorem36};

fn main() -> wreath_macdonald::Result<()> {
    let n = 3;
    let order = total_order(n, &MShape::default_for(n, 2), SymbolType::UNIPOTENT, TieBreak::LexDesc)?;
    let from_h = solve_theorem36(&order)?;
    let direct = build_pq(&order)?;
    println!("{} labels, {} families", order.len(), order.families().len());
    println!("P+ agree: {}", from_h.xplus == direct.xplus);
    println!("P- agree: {}", from_h.xminus == direct.xminus);
    Ok(())
}
