use thiserror::Error;

use crate::group::{Axiom, AxiomReport};
use crate::subgroups::ClosureFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range for carrier of size {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("empty carrier: a Hom-group needs at least one element")]
    EmptyCarrier,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("not a permutation: image {0} is repeated or out of range")]
    NotAPermutation(usize),

    #[error("structure rejected: {}", summarize(.0))]
    Rejected(AxiomReport<Axiom>),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not an automorphism: f({g}·{k}) != f({g})·f({k})")]
    NotAnAutomorphism { g: usize, k: usize },

    #[error("not an automorphism: the unit is not fixed")]
    UnitNotFixed,

    #[error("powers are defined for exponents >= 1, got 0")]
    ZeroPower,

    #[error("empty subset")]
    EmptySubset,

    #[error("not a Hom-subgroup: {0}")]
    NotHomSubgroup(ClosureFailure),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("order {order} exceeds the search guard {guard}; raise the guard to proceed")]
    OrderGuard { order: usize, guard: usize },

    #[error("unknown element `{0}`")]
    UnknownElement(String),
}

fn summarize(report: &AxiomReport<Axiom>) -> String {
    match report.violations().first() {
        Some(first) => format!(
            "{} violation(s), first: {}",
            report.violations().len(),
            first
        ),
        None => "no violations".to_string(),
    }
}
