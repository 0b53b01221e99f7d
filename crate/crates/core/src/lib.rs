//! Finite permutation groups, chief series and formation-theoretic analysis.

pub mod analysis;
mod error;
pub mod group;
pub mod hom;
pub mod perm;
pub mod builders;
pub mod classes;
pub mod products;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use group::PermGroup;
pub use hom::{quotient, section_as_group, CosetLabelling, GroupHom};
pub use perm::Permutation;
pub use products::{direct_product, semidirect_product, wreath_regular};

/// Size limits shared by every expensive computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budgets {
    /// Largest group that will be enumerated element by element.
    pub element_cap: usize,
    /// Largest group whose full subgroup lattice will be enumerated.
    pub subgroup_budget: usize,
    /// Largest semidirect product built for an explicit centrality test.
    pub semidirect_budget: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets {
            element_cap: 200_000,
            subgroup_budget: 2_000,
            semidirect_budget: 50_000,
        }
    }
}
