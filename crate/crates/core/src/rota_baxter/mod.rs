//! Finite-dimensional algebras over the rationals, Rota-Baxter type
//! operators relative to a configuration, and the split algebras and modules
//! they induce.

pub mod algebra;
pub mod module;
pub mod operator;
pub mod samples;
pub mod syntax;

pub use algebra::{check_algebra, Algebra, Matrix, Tensor, Vector};
pub use module::{
    canonical_module_from_split, check_module, check_relative_rb, check_relative_rb_lifted, has_nested_parts, induce_on_module,
    lifted_operator, regular_module, semidirect_algebra, sum_split, CanonicalModule, Module,
};
pub use operator::{check_crb_operator, induce_split_algebra, search_rb_operators, SearchSpace};
pub use syntax::{rb_alphabet, rb_relations, xi, RB_OPERATOR};
