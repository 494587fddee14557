//! Partitions, e-partitions, symbols, families and operator index sets.

pub mod epartition;
pub mod family;
pub mod index;
pub mod partition;
pub mod shape;
pub mod symbol;

pub use epartition::{all_epartitions, enum_epartitions, EPartition};
pub use family::{dominance_less, families, total_order, Family, Order, TieBreak};
pub use index::{apply_j, delta_pairing, enum_index_sets, straighten, ExponentArray, IndexSet, IndexVector, Sign};
pub use partition::{kostka, mn_character, partitions, Partition};
pub use shape::{MShape, SymbolType};
pub use symbol::Symbol;
