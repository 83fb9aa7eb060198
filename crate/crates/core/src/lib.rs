//! Splitting of algebraic operads along configurations of leaf subsets.
//!
//! The library covers the symbolic side (trees, presentations,
//! configurations, split presentations and the morphisms between them) and
//! the semantic side (finite-dimensional algebras, Rota-Baxter type operators,
//! modules) over the rationals.

pub mod alphabet;
pub mod catalog;
pub mod config;
pub mod error;
pub mod json;
pub mod morphisms;
pub mod perm;
pub mod poly;
pub mod presentation;
pub mod rational;
pub mod report;
pub mod rota_baxter;
pub mod span;
pub mod splitting;
pub mod tree;

pub use alphabet::{Alphabet, Generator};
pub use config::{Configuration, Index, Subset};
pub use error::{Error, Result};
pub use poly::Poly;
pub use presentation::Presentation;
pub use rational::Rational;
pub use report::{Report, Status};
pub use tree::{Sym, Tree};
