//! Exact computations on finite Hom-groups.
//!
//! A Hom-group is a set with a unit `1`, a bijective twist `α` and a product
//! satisfying the twisted laws
//!
//! ```text
//! α(g)(hk) = (gh)α(k)      α(gk) = α(g)α(k)
//! g1 = 1g = α(g)           α(1) = 1
//! g g⁻¹ = g⁻¹ g = 1
//! ```
//!
//! With `α = Id` this is exactly a group. Every structure in this crate is a
//! finite table over the carrier `{0..n-1}`; all arithmetic is exact.

pub mod classify;
pub mod cli;
pub mod constructions;
pub mod document;
pub mod error;
pub mod group;
pub mod hopf;
mod morphism;
pub mod perm;
pub mod subgroups;
pub mod table;

pub use error::{Error, Result};
pub use group::{Axiom, AxiomReport, FiniteGroup, HomGroup, Side, Violation};
pub use perm::Permutation;
pub use subgroups::Subset;
pub use table::CayleyTable;
