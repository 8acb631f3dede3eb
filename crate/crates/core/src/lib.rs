//! Partial groups `G = E·D` built from finite Cayley tables, and exhaustive
//! checkers for their structure theory: partial subgroups, cosets, normality,
//! quotients, homomorphisms and the three isomorphism theorems.
//!
//! Module map:
//! - [`group_kernel`]: finite groups, subgroups, quotients, isomorphism search
//! - [`partial_core`]: supplements, free subsets, the partial law
//! - [`substructures`]: partial subgroups, cosets, normality, quotients
//! - [`morphisms`]: partial-group homomorphisms and their anatomy
//! - [`theorems`]: isomorphism-theorem verifiers, claim registry, sweeps
//! - [`cli_io`]: catalog, `.cayley` files, report documents

pub mod cli_io;
pub mod elemset;
pub mod group_kernel;
pub mod morphisms;
pub mod partial_core;
pub mod substructures;
pub mod theorems;
pub mod witness;

pub use elemset::{Elem, ElemSet};
pub use group_kernel::{GroupTable, SubgroupSet};
pub use partial_core::{Freeness, PartialGroup};
pub use witness::{Check, Counterexample};
