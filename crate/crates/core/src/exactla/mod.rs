//! Exact linear algebra over `Q` or a simple extension of `Q`.

pub mod elim;
pub mod field;
pub mod linmap;

pub use elim::{
    factorize, inverse, kernel, operator_matrix, rank, rref, solve, solve_left, solve_operator, split_idempotent,
    unvectorize, vectorize, Factorization, Rref, Solution, SplitPair,
};
pub use field::{parse_rational, Field, FieldSpec, Scalar, TRIAL_FACTOR_DEGREE_BOUND};
pub use linmap::{sum_maps, LinMap};

/// Kronecker product `a ⊗ b`.
pub fn kron(a: &LinMap, b: &LinMap) -> LinMap {
    a.kron(b)
}
