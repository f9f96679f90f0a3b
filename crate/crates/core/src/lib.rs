//! Evaluation codes spanned by hypergraph edge monomials on the affine torus.
//!
//! An edge code evaluates the span of the squarefree monomials `Π_{j∈e} t_j`,
//! one per edge `e` of a hypergraph on `s` vertices, at every point of the
//! affine torus `(F_q^*)^s`. This crate builds those codes, computes their
//! parameters exactly by enumeration, and checks the known closed forms for
//! their minimum distances and weights against brute force.

pub mod cli;
pub mod error;
pub mod field;
pub mod hypergraph;
pub mod linalg;
pub mod metrics;
pub mod theorems;
pub mod torus;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use hypergraph::Hypergraph;
pub use torus::{EdgeCode, EdgePolynomial};

/// Enumeration limits shared by code construction and the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest torus (code length) that may be materialized.
    pub max_points: u64,
    /// Largest number of messages a search may visit.
    pub max_messages: u64,
    /// Visit every message instead of one per scalar class.
    pub full_enumeration: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_points: 10_000_000,
            max_messages: 1 << 32,
            full_enumeration: false,
        }
    }
}
