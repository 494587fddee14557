//! Symmetric functions for S_n ⋉ (Z/eZ)^n: the m, s, p bases, the (q,t) form,
//! g functions and their finite-variable realizations.

pub mod finite;
pub mod symfunc;
pub mod tables;
pub mod verify;

pub use finite::{
    distinct_permutations, finite_to_basis, g_epartition, g_function, hall_littlewood_q, monomial_orbit, power_sum_finite, to_finite,
    FinitePoly, MPoly,
};
pub use symfunc::{gram_schur, scalar_product, z_weight, Basis, GramMatrix, SymFunc};
pub use tables::tables;
pub use verify::{verify_duality, verify_kernel};
