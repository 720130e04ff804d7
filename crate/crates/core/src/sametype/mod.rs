//! Sign conditions on products of point multisets: linearization, Yao–Yao
//! partitions and same-type refinement.

mod brute;
mod poly;
mod refine;
mod yaoyao;

pub use brute::{brute_force_same_type, BRUTE_FORCE_LIMIT};
pub use poly::{block_term_count, linearize_last_block, Linearization, MonomialDoc, PolynomialDoc, SparsePolynomial};
pub use refine::{epsilon_exponent, epsilon_value, meets_epsilon, same_type_refine, verify_sign_constancy, SameType};
pub use yaoyao::{yao_yao_partition, MultisetDoc, PointMultiset, YaoYaoPartition};
