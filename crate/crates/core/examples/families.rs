//! Families of symbols of degree 2 for e = 2 and their total order.

use wreath_macdonald::combinat::{total_order, MShape, SymbolType, TieBreak};

fn main() -> wreath_macdonald::Result<()> {
    let shape = MShape::parse("3,2")?;
    let order = total_order(2, &shape, SymbolType::UNIPOTENT, TieBreak::LexDesc)?;
    for (f, fam) in order.families().iter().enumerate() {
        println!("family {} (a = {})", f + 1, fam.a_value());
        for s in fam.members() {
            let mark = if s.is_special() { " special" } else { "" };
            println!("  {:<8} {}{mark}", s.to_epartition().to_text(), s);
        }
    }
    Ok(())
}
