//! Helpers shared by the integration tests: fixture loading and an independent
//! classical Macdonald oracle.

#![allow(dead_code)]

pub mod classical;

use serde_json::Value;
use wreath_macdonald::algebra::{parse_qt, RatMatrix};
use wreath_macdonald::combinat::{total_order, EPartition, MShape, Order, SymbolType, TieBreak};

pub fn fixture(name: &str) -> Value {
    let path = format!("{}/tests/fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Order for a fixture block, with the family of its first label rearranged to the fixture's row order.
pub fn pinned_order(block: &Value) -> (Order, usize) {
    let n = block["n"].as_u64().unwrap() as u32;
    let shape = MShape::new(block["shape"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap() as usize).collect())
        .unwrap();
    let ord = total_order(n, &shape, SymbolType::UNIPOTENT, TieBreak::LexDesc).unwrap();
    let labels: Vec<EPartition> =
        block["labels"].as_array().unwrap().iter().map(|v| EPartition::parse(v.as_str().unwrap()).unwrap()).collect();
    let f = ord.family_of(ord.index_of(&labels[0]).unwrap());
    let range = ord.blocks()[f].clone();
    assert_eq!(range.len(), labels.len(), "family size");
    let perm: Vec<usize> = labels.iter().map(|a| ord.index_of(a).expect("label in order") - range.start).collect();
    let ord = ord.with_block_order(f, &perm).unwrap();
    assert_eq!(&ord.labels()[range], labels.as_slice());
    (ord, f)
}

pub fn expected_block(block: &Value) -> RatMatrix {
    RatMatrix::from_rows(
        block["matrix"]
            .as_array()
            .unwrap()
            .iter()
            .map(|row| row.as_array().unwrap().iter().map(|c| parse_qt(c.as_str().unwrap(), 2).unwrap()).collect())
            .collect(),
    )
}
