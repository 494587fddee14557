//! Macdonald functions P±, Q± and the operators D^r±, E±.

pub mod basis;
pub mod operators;
pub mod theorem;
pub mod verify;

pub use basis::{assemble_basis, build_pq, build_pq_default, MacdonaldBasis};
pub use operators::{
    apply_d, diag_block_direct, h_from_b, index_sum, kostka_matrix, matrix_b, matrix_h, matrix_h_tilde, HMatrix,
    OperatorMatrix,
};
pub use theorem::{characterize, check_conjecture_a, conjecture_a_failures, family_name, solve_theorem36, theorem36_transitions, verify_theorem36};
pub use verify::{
    h_closed_form_check, monomial_gram, verify_adjoint, verify_commutation, verify_f3_closed_form, verify_family_action,
    verify_order_independence, verify_shift_stability,
};
