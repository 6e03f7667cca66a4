//! Finite topological spaces and the generalized closed-set classes and separation
//! axioms built on them, with an exhaustive search harness for checking claims about
//! those notions on small spaces.
//!
//! Ground sets are `{0, .., n-1}` with subsets packed into [`SubsetMask`]; point names
//! only appear in the [`document`] layer.

pub mod axioms;
pub mod claims;
pub mod classes;
pub mod document;
pub mod enumerate;
pub mod maps;
pub mod mask;
pub mod space;

pub use axioms::{axiom_table, AxiomId, AxiomTable, Bespoke, Template};
pub use claims::{
    check_claim, registry, run_registry, search_counterexample, Claim, ClaimError, ClaimKind,
    ClaimVerdict, RegistryConfig, Report, Status, Witness,
};
pub use classes::{
    ClassConfig, ClassError, ClassFamily, InducedSpace, Polarity, SetClass, SpaceAnalysis,
};
pub use document::{DocumentError, NamedSpace, SpaceDocument};
pub use enumerate::{count_topologies, enumerate_topologies, partitions, Partition, Topologies};
pub use maps::{enumerate_maps, MapError, PointMap};
pub use mask::{SubsetMask, MAX_POINTS};
pub use space::{FiniteSpace, SpaceError};
