//! Finite skew braces and set-theoretic solutions of the Yang–Baxter equation.
//!
//! Elements of every structure are the indices `0..n`, with `0` the identity
//! of both group operations of a brace.

pub mod brace;
pub mod elements;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod ideal;
pub mod invariants;
pub mod morphism;
pub mod report;
pub mod ybe;

pub use brace::{
    direct_product, semidirect_product, trivial_brace, verify_brace, zero_brace, SkewBrace,
};
pub use elements::ElementSet;
pub use error::{BraceViolation, Error, GroupViolation, Result};
pub use group::{FiniteGroup, Subgroup};
pub use ideal::Ideal;
pub use morphism::{BraceMorphism, Morphism};

/// Size bounds for the exponential searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order for lattice, automorphism and weight searches.
    pub max_order: usize,
    /// Largest order a product construction may produce.
    pub max_product_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: group::DEFAULT_MAX_ORDER,
            max_product_order: brace::DEFAULT_MAX_PRODUCT_ORDER,
        }
    }
}
