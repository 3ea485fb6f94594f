//! Finite permutation groups: stabiliser chains, subgroup catalogs, the
//! normal-subgroup lattice, chief factors and embedding predicates.

pub mod arith;
pub mod builders;
pub mod classify;
pub mod elements;
pub mod embeddings;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod io;
pub mod lattice;
pub mod perm;
pub mod quotient;
pub mod schreier;
pub mod subgroup;
pub mod sylow;

pub use classify::{CharKind, FormationTag, GroupClass, Hypercentre};
pub use elements::{ElemId, ElementTable};
pub use embeddings::{EdgeCheck, PredicateId, PredicateReport, SubgroupSummary};
pub use enumerate::{SubgroupCatalog, SubgroupFilter};
pub use error::{GroupError, Result};
pub use group::{Caps, Group, SubgroupRef};
pub use lattice::{ChiefFactor, NodeId, NormalLattice, ReachResult};
pub use perm::Permutation;
pub use quotient::Epimorphism;
