//! Finite-group computation engine for exploring n-Engel words and
//! centralizer-like subgroups in direct products.
//!
//! The crate builds small groups concretely (Cayley tables, permutation
//! closures, a builtin catalog, direct products), evaluates group-word
//! expressions including iterated commutators, computes centralizer-like
//! subsets by definitional brute force, provides subgroup and quotient
//! machinery, and runs the identities relating those subsets as executable
//! checks with machine-readable reports.

pub mod catalog;
pub mod error;
pub mod group;
pub mod groupfile;
pub mod perm;
pub mod report;
pub mod sets;
pub mod structure;
pub mod subset;
pub mod verify;
pub mod word;

pub use catalog::catalog;
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupElement, Structure, DEFAULT_ORDER_CAP};
pub use groupfile::{load_group_file, parse_group_file, resolve_group_descriptor};
pub use perm::Permutation;
pub use report::{InstanceFlags, InstanceRecord, Summary, VerificationReport};
pub use subset::{ElementSubset, Subgroup};
pub use verify::{CatalogEntry, ClaimId, SearchOptions, StructureSummary};
pub use word::{engel_word, eval_word, parse_word, Binding, WordExpr};
