//! Published family blocks of B¹ for e = 2, stored as canonical text under tests/fixtures.

mod common;

use common::{expected_block as expected, fixture, pinned_order};
use serde_json::Value;
use wreath_macdonald::combinat::Sign;
use wreath_macdonald::macdonald::{diag_block_direct, matrix_b};

fn check_block(block: &Value) {
    let (ord, f) = pinned_order(block);
    let want = expected(block);
    for sign in [Sign::Plus, Sign::Minus] {
        let b = matrix_b(1, sign, &ord).unwrap();
        assert_eq!(b.family_block(f), want, "{} via the m-basis, sign {}", block["name"], sign.symbol());
        assert_eq!(diag_block_direct(&ord, f, 1, sign).unwrap(), want, "{} from symbols", block["name"]);
    }
}

#[test]
fn c2_family_blocks() {
    for block in fixture("c2_blocks.json")["blocks"].as_array().unwrap() {
        check_block(block);
    }
}

#[test]
fn c6_ten_element_block() {
    check_block(&fixture("c6_block.json"));
}

#[test]
fn c6_block_symmetric_at_q_eq_t() {
    let block = fixture("c6_block.json");
    let m = expected(&block).at_q_eq_t().unwrap();
    assert_eq!(m, m.transpose());
}
